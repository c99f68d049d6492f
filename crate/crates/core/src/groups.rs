//! Simple simplices of finite permutation groups: the three factorization
//! conditions and local developments at vertices.
//!
//! Vertices are indexed by `Z/nZ`. Every face group `G_I` is stored inside
//! each vertex group `G_i`, `i` in `I`. At vertex `i` indices are read in the
//! cyclic order `i, i+1, ..., i-1`. Permutations are 0-based internally and
//! 1-based one-line notation in JSON.

use std::collections::{BTreeMap, HashMap, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, OrderType, OrderedComplex};
use crate::par::parallel_collect;

pub const MAX_GROUP_ORDER: usize = 5040;
pub const MAX_VERTICES: usize = 6;

pub type Perm = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("face group {face} is not a subgroup of vertex group {vertex}")]
    NotASubgroup { vertex: usize, face: String },
    #[error("inclusions are incompatible: {0}")]
    IncompatibleInclusions(String),
    #[error("group of order above {MAX_GROUP_ORDER}")]
    GroupTooLarge,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

pub fn identity(degree: usize) -> Perm {
    (0..degree).collect()
}

/// `(p * q)(x) = p(q(x))`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn to_one_based(p: &[usize]) -> Vec<usize> {
    p.iter().map(|x| x + 1).collect()
}

fn from_one_based(p: &[usize], degree: usize) -> Result<Perm, GroupError> {
    let q: Perm = p.iter().map(|&x| x.wrapping_sub(1)).collect();
    let mut seen = vec![false; degree];
    if q.len() != degree || q.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
        return Err(GroupError::Malformed(format!(
            "{p:?} is not a permutation of 1..{degree}"
        )));
    }
    Ok(q)
}

/// Compact display: digits when the degree is at most 9.
pub fn perm_string(p: &[usize]) -> String {
    if p.len() <= 9 {
        p.iter().map(|x| (x + 1).to_string()).collect()
    } else {
        p.iter().map(|x| (x + 1).to_string()).join(".")
    }
}

/// A finite permutation group, fully enumerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    set: HashSet<Perm>,
}

impl PermGroup {
    pub fn generate(degree: usize, generators: &[Perm]) -> Result<PermGroup, GroupError> {
        let mut set: HashSet<Perm> = HashSet::new();
        let id = identity(degree);
        set.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(g) = frontier.pop() {
            for s in generators {
                let h = compose(&g, s);
                if set.insert(h.clone()) {
                    if set.len() > MAX_GROUP_ORDER {
                        return Err(GroupError::GroupTooLarge);
                    }
                    frontier.push(h);
                }
            }
        }
        Ok(PermGroup::from_set(degree, set))
    }

    fn from_set(degree: usize, set: HashSet<Perm>) -> PermGroup {
        let mut elements: Vec<Perm> = set.iter().cloned().collect();
        elements.sort();
        PermGroup {
            degree,
            elements,
            set,
        }
    }

    pub fn symmetric(degree: usize) -> Result<PermGroup, GroupError> {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut t = identity(degree);
            t.swap(0, 1);
            gens.push(t);
            gens.push((1..degree).chain([0]).collect());
        }
        PermGroup::generate(degree, &gens)
    }

    /// Setwise stabilizer of `set` inside `self`.
    pub fn stabilizer(&self, set: &[usize]) -> PermGroup {
        let keep: HashSet<Perm> = self
            .elements
            .iter()
            .filter(|g| set.iter().all(|x| set.contains(&g[*x])))
            .cloned()
            .collect();
        PermGroup::from_set(self.degree, keep)
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let keep = self.set.intersection(&other.set).cloned().collect();
        PermGroup::from_set(self.degree, keep)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.set.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<Perm> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut span = PermGroup::generate(self.degree, &[]).unwrap();
        for g in &self.elements {
            if !span.contains(g) {
                gens.push(g.clone());
                span = PermGroup::generate(self.degree, &gens).unwrap();
            }
        }
        gens
    }

    /// The set `{a * b : a in self, b in other}`.
    pub fn product_set(&self, other: &PermGroup) -> HashSet<Perm> {
        self.elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| compose(a, b)))
            .collect()
    }

    /// Least element of the left coset `g * self`.
    pub fn coset_rep(&self, g: &[usize]) -> Perm {
        self.elements.iter().map(|h| compose(g, h)).min().unwrap()
    }

    /// Left cosets of `sub` in `self`, by least representative.
    pub fn left_cosets(&self, sub: &PermGroup) -> Vec<Perm> {
        self.elements
            .iter()
            .map(|g| sub.coset_rep(g))
            .sorted()
            .dedup()
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexGroupDoc {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

/// JSON form. Keys of `face_subgroups` are `"i|I"` with `I` a
/// comma-separated sorted face containing `i`, e.g. `"0|0,1"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexOfGroupsDoc {
    pub n: usize,
    pub vertex_groups: Vec<VertexGroupDoc>,
    pub face_subgroups: BTreeMap<String, Vec<Vec<usize>>>,
}

/// Faces are bitmasks over `Z/nZ`.
#[derive(Debug, Clone)]
pub struct SimplexOfGroups {
    n: usize,
    vertex: Vec<PermGroup>,
    faces: Vec<HashMap<u32, PermGroup>>,
}

pub fn face_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn face_string(mask: u32) -> String {
    face_members(mask).iter().join(",")
}

fn edge(i: usize, j: usize) -> u32 {
    1 << i | 1 << j
}

impl SimplexOfGroups {
    /// Builds from explicit face groups; `faces[i]` maps each face
    /// containing `i` (other than `{i}`) to its image in `G_i`.
    pub fn new(vertex: Vec<PermGroup>, faces: Vec<HashMap<u32, PermGroup>>) -> Result<Self, GroupError> {
        let n = vertex.len();
        if !(2..=MAX_VERTICES).contains(&n) || faces.len() != n {
            return Err(GroupError::Malformed(format!(
                "need between 2 and {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut s = SimplexOfGroups { n, vertex, faces };
        for i in 0..n {
            let vg = s.vertex[i].clone();
            s.faces[i].insert(1 << i, vg);
        }
        s.validate()?;
        Ok(s)
    }

    pub fn from_doc(doc: &SimplexOfGroupsDoc) -> Result<Self, GroupError> {
        let n = doc.n;
        if doc.vertex_groups.len() != n {
            return Err(GroupError::Malformed(format!(
                "{} vertex groups for n = {n}",
                doc.vertex_groups.len()
            )));
        }
        let vertex: Vec<PermGroup> = doc
            .vertex_groups
            .iter()
            .map(|vg| {
                let gens = vg
                    .generators
                    .iter()
                    .map(|p| from_one_based(p, vg.degree))
                    .collect::<Result<Vec<_>, _>>()?;
                PermGroup::generate(vg.degree, &gens)
            })
            .collect::<Result<_, _>>()?;
        let mut faces: Vec<HashMap<u32, PermGroup>> = vec![HashMap::new(); n];
        for (key, gens) in &doc.face_subgroups {
            let bad = || GroupError::Malformed(format!("bad face key `{key}`"));
            let (i, face) = key.split_once('|').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let mut mask = 0u32;
            for t in face.split(',') {
                let j: usize = t.trim().parse().map_err(|_| bad())?;
                if j >= n {
                    return Err(bad());
                }
                mask |= 1 << j;
            }
            if i >= n || mask >> i & 1 == 0 {
                return Err(bad());
            }
            let degree = vertex[i].degree();
            let gens = gens
                .iter()
                .map(|p| from_one_based(p, degree))
                .collect::<Result<Vec<_>, _>>()?;
            faces[i].insert(mask, PermGroup::generate(degree, &gens)?);
        }
        SimplexOfGroups::new(vertex, faces)
    }

    pub fn to_doc(&self) -> SimplexOfGroupsDoc {
        let mut face_subgroups = BTreeMap::new();
        for i in 0..self.n {
            for (&mask, g) in &self.faces[i] {
                if mask != 1 << i {
                    let gens = g.generators().iter().map(|p| to_one_based(p)).collect();
                    face_subgroups.insert(format!("{i}|{}", face_string(mask)), gens);
                }
            }
        }
        SimplexOfGroupsDoc {
            n: self.n,
            vertex_groups: self
                .vertex
                .iter()
                .map(|g| VertexGroupDoc {
                    degree: g.degree(),
                    generators: g.generators().iter().map(|p| to_one_based(p)).collect(),
                })
                .collect(),
            face_subgroups,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_group(&self, i: usize) -> &PermGroup {
        &self.vertex[i]
    }

    /// `G_I` inside `G_i`.
    pub fn group(&self, i: usize, face: u32) -> &PermGroup {
        &self.faces[i][&face]
    }

    fn faces_at(&self, i: usize) -> Vec<u32> {
        (0u32..1 << self.n).filter(|m| m >> i & 1 == 1).collect()
    }

    fn validate(&self) -> Result<(), GroupError> {
        for i in 0..self.n {
            for mask in self.faces_at(i) {
                let g = self.faces[i].get(&mask).ok_or_else(|| {
                    GroupError::Malformed(format!("missing face group {i}|{}", face_string(mask)))
                })?;
                if g.degree() != self.vertex[i].degree() || !g.is_subgroup_of(&self.vertex[i]) {
                    return Err(GroupError::NotASubgroup {
                        vertex: i,
                        face: face_string(mask),
                    });
                }
            }
            for (a, b) in self.faces_at(i).into_iter().tuple_combinations() {
                let (small, big) = if a & b == a { (a, b) } else if a & b == b { (b, a) } else { continue };
                if !self.faces[i][&big].is_subgroup_of(&self.faces[i][&small]) {
                    return Err(GroupError::IncompatibleInclusions(format!(
                        "at vertex {i}, G_{{{}}} is not inside G_{{{}}}",
                        face_string(big),
                        face_string(small)
                    )));
                }
            }
        }
        for mask in 1u32..1 << self.n {
            let orders: Vec<usize> = face_members(mask)
                .iter()
                .map(|&i| self.faces[i][&mask].order())
                .collect();
            if !orders.iter().all_equal() {
                return Err(GroupError::IncompatibleInclusions(format!(
                    "G_{{{}}} has orders {orders:?} in its vertex groups",
                    face_string(mask)
                )));
            }
        }
        Ok(())
    }

    /// Position of `j` in the cyclic order at `i` (`i` itself is 0).
    fn pos(&self, i: usize, j: usize) -> usize {
        (j + self.n - i) % self.n
    }

    /// Vertices other than `i`, in the cyclic order at `i`.
    fn others(&self, i: usize) -> Vec<usize> {
        (1..self.n).map(|d| (i + d) % self.n).collect()
    }

    fn first_failure_at(&self, i: usize) -> Vec<GroupFailure> {
        let mut out = Vec::new();
        let faces = self.faces_at(i);
        let g = |m: u32| &self.faces[i][&m];
        // intersection condition
        'outer: for (&a, &b) in faces.iter().tuple_combinations() {
            let meet = g(a).intersection(g(b));
            for x in meet.elements() {
                if !g(a | b).contains(x) {
                    out.push(GroupFailure {
                        condition: GroupCondition::Intersection,
                        vertex: i,
                        faces: vec![face_members(a), face_members(b)],
                        elements: vec![to_one_based(x)],
                    });
                    break 'outer;
                }
            }
        }
        let others = self.others(i);
        // factorization condition, i < j < k < l
        'outer: for (&j, &k, &l) in others.iter().tuple_combinations() {
            let prod = g(edge(i, j)).product_set(g(edge(i, l)));
            for x in g(edge(i, k)).elements() {
                if !prod.contains(x) {
                    out.push(GroupFailure {
                        condition: GroupCondition::Factorization,
                        vertex: i,
                        faces: vec![vec![i, j], vec![i, k], vec![i, l]].into_iter().map(sorted).collect(),
                        elements: vec![to_one_based(x)],
                    });
                    break 'outer;
                }
            }
        }
        // bowtie condition, i < j < k
        'outer: for (&j, &k) in others.iter().tuple_combinations() {
            let gj = g(edge(i, j));
            let gk = g(edge(i, k));
            let common = gj.intersection(gk);
            let between: Vec<HashSet<Perm>> = others
                .iter()
                .filter(|&&l| self.pos(i, j) < self.pos(i, l) && self.pos(i, l) < self.pos(i, k))
                .map(|&l| g(edge(i, l)).product_set(&common))
                .collect();
            for a in gj.elements() {
                for b in gk.elements() {
                    let ab = compose(a, b);
                    for a2 in gj.elements() {
                        let b2 = inverse(&compose(&ab, a2));
                        if !gk.contains(&b2) {
                            continue;
                        }
                        let quad = [a, b, a2, &b2];
                        if (gk.contains(a) && gk.contains(a2))
                            || (gj.contains(b) && gj.contains(&b2))
                            || between.iter().any(|s| quad.iter().all(|x| s.contains(*x)))
                        {
                            continue;
                        }
                        out.push(GroupFailure {
                            condition: GroupCondition::BowtieFactorization,
                            vertex: i,
                            faces: vec![sorted(vec![i, j]), sorted(vec![i, k])],
                            elements: quad.iter().map(|x| to_one_based(x)).collect(),
                        });
                        break 'outer;
                    }
                }
            }
        }
        out
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupCondition {
    Intersection,
    Factorization,
    BowtieFactorization,
}

impl GroupCondition {
    pub fn number(self) -> usize {
        match self {
            GroupCondition::Intersection => 1,
            GroupCondition::Factorization => 2,
            GroupCondition::BowtieFactorization => 3,
        }
    }
}

/// A violated instance: the vertex, the faces involved and the group
/// elements (1-based one-line notation).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFailure {
    pub condition: GroupCondition,
    pub vertex: usize,
    pub faces: Vec<Vec<usize>>,
    pub elements: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub pass: bool,
    /// Per condition, whether it holds at every vertex.
    pub conditions: [bool; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<GroupFailure>,
}

/// Checks the three conditions by exhaustion in every vertex group. The
/// reported failure is the first by (condition, vertex).
pub fn check_conditions(s: &SimplexOfGroups) -> GroupReport {
    let verts: Vec<usize> = (0..s.n).collect();
    let mut all: Vec<GroupFailure> = parallel_collect(&verts, |&i| s.first_failure_at(i))
        .into_iter()
        .flatten()
        .collect();
    all.sort_by_key(|f| (f.condition, f.vertex));
    let mut conditions = [true; 3];
    for f in &all {
        conditions[f.condition.number() - 1] = false;
    }
    GroupReport {
        pass: all.is_empty(),
        conditions,
        failure: all.into_iter().next(),
    }
}

/// Label of the coset `a G_{ij}` at vertex `i`.
pub fn coset_label(j: usize, rep: &[usize]) -> String {
    format!("{j}:{}", perm_string(rep))
}

/// The local development at vertex `i`: base vertex `G<i>` and cosets
/// `a G_{ij}`, with one chamber `(G_i, c G_{i,i+1}, ..., c G_{i,i-1})` per
/// `c` in `G_i`, as a type A complex.
pub fn local_development(s: &SimplexOfGroups, i: usize) -> Result<OrderedComplex, GroupError> {
    let gi = &s.vertex[i];
    let others = s.others(i);
    let base = format!("G{i}");
    let mut labels = vec![base.clone()];
    for &j in &others {
        for rep in gi.left_cosets(s.group(i, edge(i, j))) {
            labels.push(coset_label(j, &rep));
        }
    }
    let chambers: Vec<Vec<String>> = gi
        .elements()
        .iter()
        .map(|c| {
            std::iter::once(base.clone())
                .chain(others.iter().map(|&j| coset_label(j, &s.group(i, edge(i, j)).coset_rep(c))))
                .collect()
        })
        .sorted()
        .dedup()
        .collect();
    Ok(OrderedComplex::new(OrderType::A, &labels, &chambers)?)
}

/// Every face group is the intersection of its edge groups, at each vertex.
fn from_edge_groups(vertex: Vec<PermGroup>, edges: &dyn Fn(usize, usize) -> PermGroup) -> Result<SimplexOfGroups, GroupError> {
    let n = vertex.len();
    let mut faces = vec![HashMap::new(); n];
    for i in 0..n {
        for mask in (0u32..1 << n).filter(|m| m >> i & 1 == 1 && m.count_ones() >= 2) {
            let g = face_members(mask)
                .into_iter()
                .filter(|&j| j != i)
                .map(|j| edges(i, j))
                .reduce(|a, b| a.intersection(&b))
                .unwrap();
            faces[i].insert(mask, g);
        }
    }
    SimplexOfGroups::new(vertex, faces)
}

/// Four vertices, `G_i = Sym(4)`, and `G_{i,i+j}` the stabilizer of
/// `{1, ..., j}` inside `G_i`.
pub fn s4_example() -> SimplexOfGroups {
    let s4 = PermGroup::symmetric(4).unwrap();
    let edges = |i: usize, j: usize| {
        let d = (j + 4 - i) % 4;
        s4.stabilizer(&(0..d).collect::<Vec<_>>())
    };
    from_edge_groups(vec![s4.clone(); 4], &edges).unwrap()
}

/// All groups trivial.
pub fn trivial_example(n: usize) -> SimplexOfGroups {
    let t = PermGroup::generate(1, &[]).unwrap();
    from_edge_groups(vec![t.clone(); n], &|_, _| t.clone()).unwrap()
}

/// A triangle with `G_i = Sym(3)`, every edge group `<(12)>`, and the
/// triangle group shrunk to the trivial group.
pub fn intersection_violation() -> SimplexOfGroups {
    let s3 = PermGroup::symmetric(3).unwrap();
    let t12 = PermGroup::generate(3, &[vec![1, 0, 2]]).unwrap();
    let mut s = from_edge_groups(vec![s3; 3], &|_, _| t12.clone()).unwrap();
    for i in 0..3 {
        s.faces[i].insert(0b111, PermGroup::generate(3, &[]).unwrap());
    }
    s.validate().unwrap();
    s
}

/// Four vertices, `G_i = Sym(3)`, `G_{i,i+2} = <(12)>` and the other edge
/// groups trivial, so `G_{i,i+2}` is not inside `G_{i,i+1} G_{i,i+3}`.
pub fn factorization_violation() -> SimplexOfGroups {
    let s3 = PermGroup::symmetric(3).unwrap();
    let t12 = PermGroup::generate(3, &[vec![1, 0, 2]]).unwrap();
    let e = PermGroup::generate(3, &[]).unwrap();
    let edges = |i: usize, j: usize| {
        if (j + 4 - i) % 4 == 2 {
            t12.clone()
        } else {
            e.clone()
        }
    };
    from_edge_groups(vec![s3; 4], &edges).unwrap()
}

/// A triangle with `G_i = Sym(4)`, `G_{i,i+1} = <(34)>` and
/// `G_{i,i+2} = <(12)>`. The two transpositions commute, so
/// `a b a' b' = e` with `a = a' = (34)`, `b = b' = (12)`.
pub fn bowtie_violation() -> SimplexOfGroups {
    let s4 = PermGroup::symmetric(4).unwrap();
    let t34 = PermGroup::generate(4, &[vec![0, 1, 3, 2]]).unwrap();
    let t12 = PermGroup::generate(4, &[vec![1, 0, 2, 3]]).unwrap();
    let edges = |i: usize, j: usize| {
        if (j + 3 - i) % 3 == 1 {
            t34.clone()
        } else {
            t12.clone()
        }
    };
    from_edge_groups(vec![s4; 3], &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::check_type_a;

    #[test]
    fn permutation_basics() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.stabilizer(&[0]).order(), 6);
        assert_eq!(s4.stabilizer(&[0, 1]).order(), 4);
        assert_eq!(s4.stabilizer(&[0, 1, 2]).order(), 6);
        let p = vec![1, 2, 0, 3];
        assert_eq!(compose(&p, &inverse(&p)), identity(4));
        assert_eq!(PermGroup::generate(4, &s4.generators()).unwrap(), s4);
        assert_eq!(perm_string(&p), "2314");
    }

    #[test]
    fn lagrange_counts() {
        let s = s4_example();
        for i in 0..4 {
            let gi = s.vertex_group(i);
            for j in s.others(i) {
                let h = s.group(i, edge(i, j));
                assert_eq!(gi.left_cosets(h).len() * h.order(), gi.order());
            }
        }
    }

    #[test]
    fn s4_literal_conditions_and_links() {
        let s = s4_example();
        let r = check_conditions(&s);
        // the third condition fails as stated; see the quadruple below
        assert_eq!(r.conditions, [true, true, false]);
        let f = r.failure.unwrap();
        assert_eq!(f.vertex, 0);
        assert_eq!(f.faces, vec![vec![0, 1], vec![0, 3]]);
        assert_eq!(
            f.elements,
            vec![vec![1, 2, 4, 3], vec![2, 1, 3, 4], vec![1, 4, 2, 3], vec![3, 1, 2, 4]]
        );
        for i in 0..4 {
            let l = local_development(&s, i).unwrap();
            // 1 + 4 + 6 + 4 vertices, one chamber per element
            assert_eq!(l.num_vertices(), 15);
            assert_eq!(l.maximal_simplices().len(), 24);
            assert!(check_type_a(&l).unwrap().pass);
        }
    }

    #[test]
    fn trivial_groups() {
        let s = trivial_example(4);
        assert!(check_conditions(&s).pass);
        let l = local_development(&s, 0).unwrap();
        assert_eq!(l.num_vertices(), 4);
        assert_eq!(l.maximal_simplices().len(), 1);
    }

    #[test]
    fn round_trip() {
        let s = s4_example();
        let doc = s.to_doc();
        let back = SimplexOfGroups::from_doc(&doc).unwrap();
        assert_eq!(check_conditions(&back), check_conditions(&s));
        assert_eq!(back.to_doc(), doc);
    }

    #[test]
    fn violations_fail_where_intended() {
        for (s, cond) in [
            (intersection_violation(), GroupCondition::Intersection),
            (factorization_violation(), GroupCondition::Factorization),
            (bowtie_violation(), GroupCondition::BowtieFactorization),
        ] {
            let r = check_conditions(&s);
            assert!(!r.pass);
            assert_eq!(r.failure.unwrap().condition, cond);
            let expected: Vec<bool> = (1..=3).map(|c| c != cond.number()).collect();
            assert_eq!(r.conditions.to_vec(), expected);
        }
        // the short cycle shows up as a bowtie in the link
        let l = local_development(&bowtie_violation(), 0).unwrap();
        assert!(!check_type_a(&l).unwrap().pass);
        let l = local_development(&intersection_violation(), 0).unwrap();
        assert!(check_type_a(&l).unwrap().pass);
    }

    #[test]
    fn rejects_bad_inclusions() {
        let mut s = s4_example();
        let s4 = s.vertex[0].clone();
        s.faces[0].insert(0b0011, s4);
        assert!(matches!(s.validate(), Err(GroupError::IncompatibleInclusions(_))));
    }
}

