//! Simplicial complexes whose simplices carry a total (type C) or cyclic
//! (type A) vertex order, presented by their maximal simplices.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::{Poset, PosetError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderType {
    /// Cyclically ordered simplices.
    A,
    /// Totally ordered simplices.
    C,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("simplex {0:?} repeats a vertex")]
    RepeatedVertex(Vec<String>),
    #[error("simplex orders disagree on face {0:?}")]
    InconsistentOrder(Vec<String>),
    #[error("clique {0:?} spans no simplex")]
    NotFlag(Vec<String>),
    #[error("star of `{vertex}` is not a poset: {witness:?}")]
    NotLocalPoset { vertex: String, witness: Vec<String> },
    #[error("simplex of dimension {0} exceeds the supported bound")]
    SimplexTooLarge(usize),
}

/// JSON form `{"type": "A"|"C", "vertices": [...], "maximal_simplices": [[...]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    #[serde(rename = "type")]
    pub order_type: OrderType,
    pub vertices: Vec<String>,
    pub maximal_simplices: Vec<Vec<String>>,
}

/// First transitivity failure of a star relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalPosetViolation {
    pub vertex: usize,
    /// `(y, z, t)` for type C, `(x, y, z, t)` for type A.
    pub witness: Vec<usize>,
}

const MAX_SIMPLEX_VERTICES: usize = 20;

#[derive(Clone, Debug)]
pub struct OrderedComplex {
    order_type: OrderType,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    simplices: Vec<Vec<usize>>,
    faces: HashSet<Vec<usize>>,
    adj: Vec<FixedBitSet>,
    // type C: (lo, hi) by index -> whether lo precedes hi
    edge_dir: HashMap<(usize, usize), bool>,
    // type A: sorted triple -> whether (t0, t1, t2) is positively cyclic
    tri_orient: HashMap<[usize; 3], bool>,
    conflict: Option<Vec<usize>>,
    label_rank: Vec<usize>,
}

impl OrderedComplex {
    pub fn new<S: AsRef<str>>(
        order_type: OrderType,
        vertices: &[S],
        simplices: &[Vec<S>],
    ) -> Result<Self, ComplexError> {
        let labels: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(ComplexError::DuplicateVertex(l.clone()));
            }
        }
        let mut tuples = Vec::with_capacity(simplices.len());
        for s in simplices {
            let t = s
                .iter()
                .map(|v| {
                    index
                        .get(v.as_ref())
                        .copied()
                        .ok_or_else(|| ComplexError::UnknownVertex(v.as_ref().to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            tuples.push(t);
        }
        Self::from_indices(order_type, labels, tuples)
    }

    pub fn from_doc(doc: &ComplexDoc) -> Result<Self, ComplexError> {
        Self::new(doc.order_type, &doc.vertices, &doc.maximal_simplices)
    }

    /// Builds a complex from labels and index tuples. Tuples contained in
    /// another tuple's vertex set are dropped.
    pub fn from_indices(
        order_type: OrderType,
        labels: Vec<String>,
        tuples: Vec<Vec<usize>>,
    ) -> Result<Self, ComplexError> {
        let n = labels.len();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(ComplexError::DuplicateVertex(l.clone()));
            }
        }
        for t in &tuples {
            if let Some(&v) = t.iter().find(|&&v| v >= n) {
                return Err(ComplexError::UnknownVertex(format!("#{v}")));
            }
            if t.iter().collect::<HashSet<_>>().len() != t.len() {
                return Err(ComplexError::RepeatedVertex(
                    t.iter().map(|&v| labels[v].clone()).collect(),
                ));
            }
            if t.len() > MAX_SIMPLEX_VERTICES {
                return Err(ComplexError::SimplexTooLarge(t.len() - 1));
            }
        }

        let mut faces: HashSet<Vec<usize>> = HashSet::new();
        let mut sorted_tuples: Vec<Vec<usize>> = Vec::new();
        for t in &tuples {
            let mut s = t.clone();
            s.sort_unstable();
            sorted_tuples.push(s);
        }
        for s in &sorted_tuples {
            if faces.contains(s) {
                continue;
            }
            for k in 1..=s.len() {
                for c in s.iter().copied().combinations(k) {
                    faces.insert(c);
                }
            }
        }
        let mut seen = HashSet::new();
        let mut simplices = Vec::new();
        for (t, s) in tuples.iter().cloned().zip(&sorted_tuples) {
            let dominated = sorted_tuples
                .iter()
                .any(|o| o.len() > s.len() && is_subset_sorted(s, o));
            if !dominated && !t.is_empty() && seen.insert(s.clone()) {
                simplices.push(t);
            }
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for f in faces.iter().filter(|f| f.len() == 2) {
            adj[f[0]].insert(f[1]);
            adj[f[1]].insert(f[0]);
        }

        let mut by_label: Vec<usize> = (0..n).collect();
        by_label.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut label_rank = vec![0; n];
        for (pos, &i) in by_label.iter().enumerate() {
            label_rank[i] = pos;
        }

        let mut edge_dir = HashMap::new();
        let mut tri_orient = HashMap::new();
        let mut conflict: Option<Vec<usize>> = None;
        let mut note_conflict = |face: Vec<usize>| {
            let mut face = face;
            face.sort_by_key(|&v| label_rank[v]);
            if conflict.as_ref().is_none_or(|c| {
                (c.len(), c.iter().map(|&v| label_rank[v]).collect::<Vec<_>>())
                    > (face.len(), face.iter().map(|&v| label_rank[v]).collect())
            }) {
                conflict = Some(face);
            }
        };
        // dominated tuples count too: they may disagree with their superset
        let mut all_tuples: Vec<&Vec<usize>> = tuples.iter().collect();
        all_tuples.sort();
        match order_type {
            OrderType::C => {
                for t in &all_tuples {
                    for (i, &u) in t.iter().enumerate() {
                        for &v in &t[i + 1..] {
                            let key = (u.min(v), u.max(v));
                            let dir = u < v;
                            match edge_dir.get(&key) {
                                Some(&d) if d != dir => note_conflict(vec![u, v]),
                                Some(_) => {}
                                None => {
                                    edge_dir.insert(key, dir);
                                }
                            }
                        }
                    }
                }
            }
            OrderType::A => {
                for t in &all_tuples {
                    for c in (0..t.len()).combinations(3) {
                        let (pa, pb, pc) = (c[0], c[1], c[2]);
                        let mut tri = [(t[pa], pa), (t[pb], pb), (t[pc], pc)];
                        tri.sort_unstable();
                        let positive = is_cyclically_increasing(tri[0].1, tri[1].1, tri[2].1);
                        let key = [tri[0].0, tri[1].0, tri[2].0];
                        match tri_orient.get(&key) {
                            Some(&o) if o != positive => note_conflict(key.to_vec()),
                            Some(_) => {}
                            None => {
                                tri_orient.insert(key, positive);
                            }
                        }
                    }
                }
            }
        }

        Ok(OrderedComplex {
            order_type,
            labels,
            index,
            simplices,
            faces,
            adj,
            edge_dir,
            tri_orient,
            conflict,
            label_rank,
        })
    }

    pub fn to_doc(&self) -> ComplexDoc {
        let mut simplices: Vec<Vec<String>> = self
            .simplices
            .iter()
            .map(|t| self.canonical_tuple(t))
            .map(|t| t.into_iter().map(|v| self.labels[v].clone()).collect())
            .collect();
        simplices.sort();
        ComplexDoc {
            order_type: self.order_type,
            vertices: self.labels.clone(),
            maximal_simplices: simplices,
        }
    }

    /// Type A tuples rotated so that the label-least vertex comes first.
    fn canonical_tuple(&self, t: &[usize]) -> Vec<usize> {
        match self.order_type {
            OrderType::C => t.to_vec(),
            OrderType::A => {
                let start = (0..t.len())
                    .min_by_key(|&i| self.label_rank[t[i]])
                    .unwrap_or(0);
                t[start..].iter().chain(&t[..start]).copied().collect()
            }
        }
    }

    pub fn order_type(&self) -> OrderType {
        self.order_type
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, ComplexError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| ComplexError::UnknownVertex(label.to_string()))
    }

    pub fn label_position(&self, v: usize) -> usize {
        self.label_rank[v]
    }

    /// Vertices sorted by label.
    pub fn vertices_in_label_order(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.labels.len()).collect();
        v.sort_by_key(|&i| self.label_rank[i]);
        v
    }

    /// Maximal simplices as stored, in their given (cyclic) order.
    pub fn maximal_simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    /// All nonempty faces as sorted index sets, in no particular order.
    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.faces.iter()
    }

    /// Type C: the vertices of a face listed in their simplex order.
    pub fn ordered_face(&self, face: &[usize]) -> Vec<usize> {
        let mut out = face.to_vec();
        out.sort_by_key(|&v| face.iter().filter(|&&u| u != v && self.arrow(u, v)).count());
        out
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    pub fn is_face(&self, vs: &[usize]) -> bool {
        if vs.is_empty() {
            return true;
        }
        let mut s = vs.to_vec();
        s.sort_unstable();
        self.faces.contains(&s)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Every edge `(u, v)` with `u < v` by index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.labels.len())
            .flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Type C: whether the edge `{u, v}` is oriented from `u` to `v`.
    pub fn arrow(&self, u: usize, v: usize) -> bool {
        match self.edge_dir.get(&(u.min(v), u.max(v))) {
            Some(&d) => d == (u < v),
            None => false,
        }
    }

    /// Type A: whether `{a, b, c}` is a triangle cyclically ordered as `(a, b, c)`.
    pub fn cyclic(&self, a: usize, b: usize, c: usize) -> bool {
        let mut tri = [(a, 0), (b, 1), (c, 2)];
        tri.sort_unstable();
        let key = [tri[0].0, tri[1].0, tri[2].0];
        match self.tri_orient.get(&key) {
            Some(&o) => o == is_cyclically_increasing(tri[0].1, tri[1].1, tri[2].1),
            None => false,
        }
    }

    /// Checks order consistency only.
    pub fn validate_orders(&self) -> Result<(), ComplexError> {
        match &self.conflict {
            Some(face) => Err(ComplexError::InconsistentOrder(self.labels_of(face))),
            None => Ok(()),
        }
    }

    /// Checks order consistency and flagness.
    pub fn validate(&self) -> Result<(), ComplexError> {
        self.validate_orders()?;
        match self.flag_violation() {
            Some(clique) => Err(ComplexError::NotFlag(self.labels_of(&clique))),
            None => Ok(()),
        }
    }

    /// Maximal cliques of the 1-skeleton, each sorted by label, in
    /// label-lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut out = Vec::new();
        let mut r = Vec::new();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(n);
        self.bron_kerbosch(&mut r, p, x, &mut out);
        for c in out.iter_mut() {
            c.sort_by_key(|&v| self.label_rank[v]);
        }
        out.sort_by(|a, b| {
            a.iter()
                .map(|&v| self.label_rank[v])
                .cmp(b.iter().map(|&v| self.label_rank[v]))
        });
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: FixedBitSet,
        mut x: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.count_ones(..) == 0 {
            if x.count_ones(..) == 0 {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| self.adj[u].intersection(&p).count())
            .unwrap();
        let candidates: Vec<usize> = p.difference(&self.adj[pivot]).collect();
        let mut p = p;
        for v in candidates {
            r.push(v);
            let mut p2 = p.clone();
            p2.intersect_with(&self.adj[v]);
            let mut x2 = x.clone();
            x2.intersect_with(&self.adj[v]);
            self.bron_kerbosch(r, p2, x2, out);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }

    /// A smallest clique of the 1-skeleton that spans no simplex, if any.
    pub fn flag_violation(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for clique in self.maximal_cliques() {
            if self.is_face(&clique) {
                continue;
            }
            'sizes: for k in 3..=clique.len() {
                if best.as_ref().is_some_and(|b| b.len() < k) {
                    break;
                }
                for sub in clique.iter().copied().combinations(k) {
                    if !self.is_face(&sub) {
                        let better = match &best {
                            None => true,
                            Some(b) => {
                                (sub.len(), sub.iter().map(|&v| self.label_rank[v]).collect_vec())
                                    < (b.len(), b.iter().map(|&v| self.label_rank[v]).collect_vec())
                            }
                        };
                        if better {
                            best = Some(sub);
                        }
                        break 'sizes;
                    }
                }
            }
        }
        best
    }

    /// Elements of `St(x)`: the vertex itself followed by its neighbours in
    /// label order.
    pub fn star_members(&self, x: usize) -> Vec<usize> {
        let mut nbrs: Vec<usize> = self.adj[x].ones().collect();
        nbrs.sort_by_key(|&v| self.label_rank[v]);
        std::iter::once(x).chain(nbrs).collect()
    }

    /// The raw star relation `y <_x z` (strict).
    pub fn star_lt(&self, x: usize, y: usize, z: usize) -> bool {
        if y == z {
            return false;
        }
        match self.order_type {
            OrderType::C => {
                if y == x {
                    self.adjacent(x, z) && self.arrow(x, z)
                } else if z == x {
                    self.adjacent(x, y) && self.arrow(y, x)
                } else {
                    self.is_face(&[x, y, z]) && self.arrow(y, z)
                }
            }
            OrderType::A => {
                if z == x {
                    false
                } else if y == x {
                    self.adjacent(x, z)
                } else {
                    self.cyclic(x, y, z)
                }
            }
        }
    }

    /// First failure of transitivity of a star relation, vertices and
    /// triples both scanned in label order.
    pub fn local_poset_violation_at(&self, x: usize) -> Option<LocalPosetViolation> {
        let members = self.star_members(x);
        let m = members.len();
        let mut rel = vec![FixedBitSet::with_capacity(m); m];
        for (i, &y) in members.iter().enumerate() {
            for (j, &z) in members.iter().enumerate() {
                if self.star_lt(x, y, z) {
                    rel[i].insert(j);
                }
            }
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| self.label_rank[members[i]]);
        for &i in &order {
            for &j in &order {
                if !rel[i].contains(j) {
                    continue;
                }
                for &k in &order {
                    if k != i && rel[j].contains(k) && !rel[i].contains(k) {
                        let (y, z, t) = (members[i], members[j], members[k]);
                        let witness = match self.order_type {
                            OrderType::C => vec![y, z, t],
                            OrderType::A => vec![x, y, z, t],
                        };
                        return Some(LocalPosetViolation { vertex: x, witness });
                    }
                }
            }
        }
        None
    }

    /// First vertex (by label) whose star relation is not transitive.
    pub fn is_local_poset(&self) -> Option<LocalPosetViolation> {
        self.vertices_in_label_order()
            .into_iter()
            .find_map(|x| self.local_poset_violation_at(x))
    }

    /// The star poset `(St(x), <=_x)`.
    pub fn star_poset(&self, x: usize) -> Result<StarPoset, ComplexError> {
        if let Some(v) = self.local_poset_violation_at(x) {
            return Err(ComplexError::NotLocalPoset {
                vertex: self.labels[x].clone(),
                witness: self.labels_of(&v.witness),
            });
        }
        let members = self.star_members(x);
        let mut pairs = Vec::new();
        for (i, &y) in members.iter().enumerate() {
            for (j, &z) in members.iter().enumerate() {
                if self.star_lt(x, y, z) {
                    pairs.push((i, j));
                }
            }
        }
        let labels = self.labels_of(&members);
        let poset = Poset::from_index_pairs(labels, &pairs).map_err(|e| match e {
            PosetError::CycleDetected(c) => ComplexError::NotLocalPoset {
                vertex: self.labels[x].clone(),
                witness: c,
            },
            other => unreachable!("star labels are distinct: {other}"),
        })?;
        Ok(StarPoset {
            center: x,
            members,
            poset,
        })
    }
}

/// `(St(x), <=_x)` with its elements mapped back to complex vertices.
#[derive(Debug, Clone)]
pub struct StarPoset {
    pub center: usize,
    /// Complex vertex of each poset element; element 0 is the center.
    pub members: Vec<usize>,
    pub poset: Poset,
}

impl StarPoset {
    /// `St+(x)`: elements at or above the center.
    pub fn upper(&self) -> Poset {
        self.poset.principal_filter(0)
    }

    /// `St-(x)`: elements at or below the center.
    pub fn lower(&self) -> Poset {
        self.poset.principal_ideal(0)
    }
}

fn is_subset_sorted(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

fn is_cyclically_increasing(a: usize, b: usize, c: usize) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

/// The order complex of a poset: one simplex per maximal chain, ordered
/// bottom to top.
pub fn order_complex(p: &Poset) -> OrderedComplex {
    let chains = p.maximal_chains();
    OrderedComplex::from_indices(OrderType::C, p.labels().to_vec(), chains)
        .expect("chains of a poset form a valid ordered complex")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(t: OrderType, vs: &[&str], simplices: &[&[&str]]) -> OrderedComplex {
        let s: Vec<Vec<&str>> = simplices.iter().map(|s| s.to_vec()).collect();
        OrderedComplex::new(t, vs, &s).unwrap()
    }

    #[test]
    fn single_triangle_is_valid() {
        let x = cx(OrderType::C, &["u", "v", "w"], &[&["u", "v", "w"]]);
        assert_eq!(x.validate(), Ok(()));
        assert!(x.is_local_poset().is_none());
        let st = x.star_poset(0).unwrap();
        let up = st.upper();
        assert_eq!(up.len(), 3);
        assert_eq!(up.maximal_chains().len(), 1);
        assert_eq!(st.lower().len(), 1);
    }

    #[test]
    fn opposite_orders_on_an_edge() {
        let x = cx(
            OrderType::C,
            &["a", "b", "c", "d"],
            &[&["a", "b", "c"], &["b", "a", "d"]],
        );
        assert_eq!(
            x.validate(),
            Err(ComplexError::InconsistentOrder(vec!["a".into(), "b".into()]))
        );
    }

    #[test]
    fn opposite_cyclic_orders_on_a_triangle() {
        let x = cx(
            OrderType::A,
            &["a", "b", "c", "d"],
            &[&["a", "b", "c", "d"], &["c", "b", "a"]],
        );
        assert_eq!(x.maximal_simplices().len(), 1);
        assert_eq!(
            x.validate(),
            Err(ComplexError::InconsistentOrder(vec![
                "a".into(),
                "b".into(),
                "c".into()
            ]))
        );
        let rotated = cx(OrderType::A, &["a", "b", "c"], &[&["b", "c", "a"]]);
        assert!(rotated.cyclic(0, 1, 2));
        assert!(!rotated.cyclic(0, 2, 1));
    }

    #[test]
    fn hollow_triangle_is_not_flag() {
        let x = cx(
            OrderType::C,
            &["a", "b", "c"],
            &[&["a", "b"], &["b", "c"], &["a", "c"]],
        );
        assert_eq!(
            x.validate(),
            Err(ComplexError::NotFlag(vec!["a".into(), "b".into(), "c".into()]))
        );
    }

    #[test]
    fn non_transitive_type_c_star() {
        let x = cx(
            OrderType::C,
            &["t", "x", "y", "z"],
            &[&["x", "y", "z"], &["x", "z", "t"]],
        );
        assert_eq!(x.validate(), Ok(()));
        let v = x.is_local_poset().unwrap();
        assert_eq!(x.label(v.vertex), "x");
        assert_eq!(x.labels_of(&v.witness), vec!["y", "z", "t"]);
        assert!(matches!(
            x.star_poset(1),
            Err(ComplexError::NotLocalPoset { .. })
        ));
    }

    #[test]
    fn isolated_vertex_star_is_singleton() {
        let x = cx(OrderType::A, &["p", "q"], &[&["p"]]);
        assert_eq!(x.star_poset(1).unwrap().poset.len(), 1);
        assert_eq!(x.star_poset(0).unwrap().poset.len(), 1);
    }

    #[test]
    fn doc_round_trip_canonicalises_rotations() {
        let x = cx(OrderType::A, &["a", "b", "c"], &[&["c", "a", "b"]]);
        let doc = x.to_doc();
        assert_eq!(doc.maximal_simplices, vec![vec!["a", "b", "c"]]);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains("\"type\":\"A\""));
        let back: ComplexDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(OrderedComplex::from_doc(&back).unwrap().to_doc(), doc);
    }

    #[test]
    fn order_complex_of_bowtie() {
        let p = Poset::from_covers(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let x = order_complex(&p);
        assert_eq!(x.maximal_simplices().len(), 4);
        assert_eq!(x.validate(), Ok(()));
        assert!(x.arrow(0, 2));
        assert!(!x.arrow(2, 0));
    }

    #[test]
    fn unknown_and_repeated_vertices() {
        let s = vec![vec!["a", "z"]];
        assert_eq!(
            OrderedComplex::new(OrderType::C, &["a"], &s).unwrap_err(),
            ComplexError::UnknownVertex("z".into())
        );
        let s = vec![vec!["a", "a"]];
        assert!(matches!(
            OrderedComplex::new(OrderType::C, &["a"], &s),
            Err(ComplexError::RepeatedVertex(_))
        ));
    }
}
