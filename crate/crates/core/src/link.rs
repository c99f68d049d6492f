//! Vertex-by-vertex link conditions for ordered complexes, the Garside
//! conditions for an order automorphism, and the quotient by it.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::complex::{ComplexError, OrderType, OrderedComplex};
use crate::par::parallel_collect;
use crate::poset::{Direction, Poset};

pub const CERTIFIED: &str = "locally_CUB_certified";
pub const GARSIDE_CERTIFIED: &str = "garside_conditions_certified";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// Type A: the star is not a meet-semilattice.
    Semilattice,
    /// Type C: the star has a bowtie.
    Lattice,
    /// Type C: pairwise upper bounded triple in `St+` without an upper bound.
    FlagUp,
    /// Type C: pairwise lower bounded triple in `St-` without a lower bound.
    FlagDown,
    /// `sigma + phi(min sigma)` is not a simplex.
    PhiSimplex,
    /// `phi(x) > x` fails.
    PhiIncreasing,
    /// `[x, phi(x)]` is not a lattice.
    IntervalLattice,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub vertex: String,
    pub condition: Condition,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    pub failures: Vec<Failure>,
}

impl Verdict {
    fn from_failures(failures: Vec<Failure>, certificate: &str) -> Verdict {
        let pass = failures.is_empty();
        Verdict {
            pass,
            certificate: pass.then(|| certificate.to_string()),
            failures,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinkError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(ComplexError),
    #[error("expected a type {expected:?} complex")]
    WrongOrderType { expected: OrderType },
    #[error("unknown vertex `{0}` in phi")]
    UnknownVertex(String),
    #[error("phi is not an order-preserving automorphism: {0:?}")]
    NotAutomorphism(Vec<String>),
    #[error("order generated by edge orientations is not antisymmetric: {0:?}")]
    OrderCycle(Vec<String>),
    #[error("garside check failed")]
    GarsideCheckFailed(Verdict),
}

impl From<ComplexError> for LinkError {
    fn from(e: ComplexError) -> Self {
        LinkError::PreconditionFailed(e)
    }
}

fn preconditions(x: &OrderedComplex, expected: OrderType) -> Result<(), LinkError> {
    if x.order_type() != expected {
        return Err(LinkError::WrongOrderType { expected });
    }
    x.validate()?;
    if let Some(v) = x.is_local_poset() {
        return Err(LinkError::PreconditionFailed(ComplexError::NotLocalPoset {
            vertex: x.label(v.vertex).to_string(),
            witness: x.labels_of(&v.witness),
        }));
    }
    Ok(())
}

fn labels(p: &Poset, elems: &[usize]) -> Vec<String> {
    elems.iter().map(|&i| p.label(i).to_string()).collect()
}

/// A bowtie if there is one, else the first pair (label order) without a
/// meet.
fn meet_witness(p: &Poset) -> Option<Vec<String>> {
    if let Some(b) = p.find_bowtie() {
        return Some(b.labels(p).to_vec());
    }
    let order = p.in_label_order();
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            if p.meet(a, b).is_none() {
                return Some(labels(p, &[a, b]));
            }
        }
    }
    None
}

fn collect_failures<F>(x: &OrderedComplex, check: F) -> Result<Vec<Failure>, LinkError>
where
    F: Fn(usize) -> Result<Option<Failure>, LinkError> + Sync + Send,
{
    let vertices = x.vertices_in_label_order();
    let results = parallel_collect(&vertices, |&v| check(v));
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(failures)
}

/// Every star `(St(x), <=_x)` must be a meet-semilattice.
pub fn check_type_a(x: &OrderedComplex) -> Result<Verdict, LinkError> {
    preconditions(x, OrderType::A)?;
    let failures = collect_failures(x, |v| {
        let star = x.star_poset(v)?;
        if star.poset.is_meet_semilattice() {
            return Ok(None);
        }
        Ok(meet_witness(&star.poset).map(|witness| Failure {
            vertex: x.label(v).to_string(),
            condition: Condition::Semilattice,
            witness,
        }))
    })?;
    Ok(Verdict::from_failures(failures, CERTIFIED))
}

/// The lattice condition on `St(x)` and the flag conditions on `St+(x)` and
/// `St-(x)`; the first failing condition is reported for each vertex.
pub fn check_type_c(x: &OrderedComplex) -> Result<Verdict, LinkError> {
    preconditions(x, OrderType::C)?;
    let failures = collect_failures(x, |v| {
        let star = x.star_poset(v)?;
        let fail = |condition, witness| {
            Ok(Some(Failure {
                vertex: x.label(v).to_string(),
                condition,
                witness,
            }))
        };
        if let Some(b) = star.poset.find_bowtie() {
            return fail(Condition::Lattice, b.labels(&star.poset).to_vec());
        }
        let up = star.upper();
        if let Some(t) = up.flag_condition(Direction::Up) {
            return fail(Condition::FlagUp, labels(&up, &t));
        }
        let down = star.lower();
        if let Some(t) = down.flag_condition(Direction::Down) {
            return fail(Condition::FlagDown, labels(&down, &t));
        }
        Ok(None)
    })?;
    Ok(Verdict::from_failures(failures, CERTIFIED))
}

/// A partial injective vertex map, by index.
#[derive(Debug, Clone)]
pub struct VertexMap {
    forward: HashMap<usize, usize>,
    backward: HashMap<usize, usize>,
}

impl VertexMap {
    pub fn from_labels(
        x: &OrderedComplex,
        pairs: &BTreeMap<String, String>,
    ) -> Result<VertexMap, LinkError> {
        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for (a, b) in pairs {
            let ia = x
                .index_of(a)
                .map_err(|_| LinkError::UnknownVertex(a.clone()))?;
            let ib = x
                .index_of(b)
                .map_err(|_| LinkError::UnknownVertex(b.clone()))?;
            if let Some(prev) = backward.insert(ib, ia) {
                return Err(LinkError::NotAutomorphism(vec![
                    x.label(prev).to_string(),
                    a.clone(),
                    b.clone(),
                ]));
            }
            forward.insert(ia, ib);
        }
        Ok(VertexMap { forward, backward })
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.forward.get(&v).copied()
    }
}

fn sorted_labels(x: &OrderedComplex, face: &[usize]) -> Vec<String> {
    let mut f = face.to_vec();
    f.sort_by_key(|&v| x.label_position(v));
    x.labels_of(&f)
}

/// Checks that `phi` and its inverse map faces inside their domains to
/// faces, preserving edge orientations.
fn check_partial_automorphism(x: &OrderedComplex, phi: &VertexMap) -> Result<(), LinkError> {
    let mut faces: Vec<&Vec<usize>> = x.faces().collect();
    faces.sort_by_key(|f| (f.len(), f.iter().map(|&v| x.label_position(v)).collect::<Vec<_>>()));
    for map in [&phi.forward, &phi.backward] {
        for f in &faces {
            let Some(img) = f.iter().map(|v| map.get(v).copied()).collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            if !x.is_face(&img) {
                return Err(LinkError::NotAutomorphism(sorted_labels(x, f)));
            }
            for (i, &u) in f.iter().enumerate() {
                for (j, &w) in f.iter().enumerate() {
                    if i != j && x.arrow(u, w) && !x.arrow(img[i], img[j]) {
                        return Err(LinkError::NotAutomorphism(x.labels_of(&[u, w])));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The order on all vertices generated by edge orientations.
pub fn global_order(x: &OrderedComplex) -> Result<Poset, LinkError> {
    let mut pairs = Vec::new();
    for (u, v) in x.edges() {
        if x.arrow(u, v) {
            pairs.push((u, v));
        } else {
            pairs.push((v, u));
        }
    }
    Poset::from_index_pairs(x.labels().to_vec(), &pairs).map_err(|e| match e {
        crate::poset::PosetError::CycleDetected(c) => LinkError::OrderCycle(c),
        other => unreachable!("vertex labels are distinct: {other}"),
    })
}

/// Checks the Garside conditions for a partial order automorphism `phi`.
///
/// A finite complex admits no total `phi` with `phi(x) > x`, so `phi` may be
/// partial: clauses involving `phi(v)` are checked wherever it is defined.
/// Simple connectivity is not checked.
pub fn check_garside(x: &OrderedComplex, phi: &VertexMap) -> Result<Verdict, LinkError> {
    if x.order_type() != OrderType::C {
        return Err(LinkError::WrongOrderType {
            expected: OrderType::C,
        });
    }
    x.validate()?;
    check_partial_automorphism(x, phi)?;
    let order = global_order(x)?;

    // faces grouped by their minimum, in label order
    let mut by_min: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    for f in x.faces() {
        let ordered = x.ordered_face(f);
        by_min.entry(ordered[0]).or_default().push(ordered);
    }
    for faces in by_min.values_mut() {
        faces.sort_by_key(|f| {
            (
                f.len(),
                f.iter().map(|&v| x.label_position(v)).collect::<Vec<_>>(),
            )
        });
    }

    let failures = collect_failures(x, |v| {
        let Some(pv) = phi.get(v) else {
            return Ok(None);
        };
        let fail = |condition, witness| {
            Ok(Some(Failure {
                vertex: x.label(v).to_string(),
                condition,
                witness,
            }))
        };
        for f in by_min.get(&v).map(|fs| fs.as_slice()).unwrap_or(&[]) {
            let mut ext = f.clone();
            if !ext.contains(&pv) {
                ext.push(pv);
            }
            if !x.is_face(&ext) {
                return fail(Condition::PhiSimplex, x.labels_of(&ext));
            }
        }
        if !x.arrow(v, pv) {
            return fail(Condition::PhiIncreasing, x.labels_of(&[v, pv]));
        }
        let interval: Vec<usize> = (0..x.num_vertices())
            .filter(|&y| order.le(v, y) && order.le(y, pv))
            .collect();
        let sub = order.induced(&interval);
        if !sub.is_lattice() {
            let witness = sub
                .find_bowtie()
                .map(|b| b.labels(&sub).to_vec())
                .unwrap_or_else(|| x.labels_of(&[v, pv]));
            return fail(Condition::IntervalLattice, witness);
        }
        Ok(None)
    })?;
    Ok(Verdict::from_failures(failures, GARSIDE_CERTIFIED))
}

/// The type A complex on `phi`-orbits whose simplices are the images of
/// chains `x0 < x1 < ... < xk < phi(x0)`. Orbits are named by their
/// label-least member.
pub fn quotient_by_phi(x: &OrderedComplex, phi: &VertexMap) -> Result<OrderedComplex, LinkError> {
    let verdict = check_garside(x, phi)?;
    if !verdict.pass {
        return Err(LinkError::GarsideCheckFailed(verdict));
    }
    let n = x.num_vertices();
    // union-find over x ~ phi(x)
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = v;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for v in 0..n {
        if let Some(w) = phi.get(v) {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (keep, drop) = if x.label_position(a) < x.label_position(b) {
                    (a, b)
                } else {
                    (b, a)
                };
                parent[drop] = keep;
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut orbit_ids: Vec<usize> = roots.iter().copied().collect::<HashSet<_>>().into_iter().collect();
    orbit_ids.sort_by_key(|&r| x.label_position(r));
    let orbit_pos: HashMap<usize, usize> = orbit_ids.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let labels: Vec<String> = orbit_ids.iter().map(|&r| x.label(r).to_string()).collect();

    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut seen = HashSet::new();
    let mut faces: Vec<Vec<usize>> = x.faces().map(|f| x.ordered_face(f)).collect();
    faces.sort();
    for chain in faces {
        let Some(top) = phi.get(chain[0]) else {
            continue;
        };
        let last = *chain.last().unwrap();
        if !x.arrow(last, top) {
            continue;
        }
        let orbits: Vec<usize> = chain.iter().map(|&v| orbit_pos[&roots[v]]).collect();
        if orbits.iter().collect::<HashSet<_>>().len() != orbits.len() {
            continue;
        }
        let mut key = orbits.clone();
        key.sort_unstable();
        if seen.insert(key) {
            tuples.push(orbits);
        }
    }
    // isolated orbits still need a vertex
    for i in 0..labels.len() {
        if seen.insert(vec![i]) {
            tuples.push(vec![i]);
        }
    }
    Ok(OrderedComplex::from_indices(OrderType::A, labels, tuples)?)
}
