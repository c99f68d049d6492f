//! Exact norms, points of orthoscheme complexes, and a discretized length
//! metric.
//!
//! A point of a complex is a convex combination of the vertices of one
//! simplex. Inside a maximal simplex `c_0, ..., c_D` (in its stored order)
//! the point with weights `l_i` has chamber coordinates `X_j = l_j + ... +
//! l_D` for `j = 1..D`. Type C chambers carry the sup norm of these
//! coordinates; type A chambers carry the polyhedral norm of `(X, 0)`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{order_complex, OrderType, OrderedComplex};
use crate::par::parallel_collect;
use crate::poset::Poset;
use crate::rational::{is_unit_fraction, qi, serde_q_vec, solve_square, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("coordinates do not sum to zero")]
    NotSumZero,
    #[error("points share no chamber")]
    NoCommonChamber,
    #[error("mesh must be 1/m for a positive integer m up to {MAX_MESH_DENOM}, got {0}")]
    InvalidMesh(String),
    #[error("target point is unreachable")]
    Disconnected,
    #[error("`{0}` is not comparable to every element")]
    NotComparableToAll(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("common denominator too large for exact integer search")]
    DenominatorTooLarge,
}

pub const MAX_MESH_DENOM: u64 = 256;

/// `max |v_i|`; zero for the empty vector.
pub fn linf_norm(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
}

/// `max_i v_i - min_i v_i` on the sum-zero hyperplane.
pub fn polyhedral_norm(v: &[Q]) -> Result<Q, MetricError> {
    let sum: Q = v.iter().sum();
    if !sum.is_zero() {
        return Err(MetricError::NotSumZero);
    }
    Ok(spread(v))
}

fn spread(v: &[Q]) -> Q {
    match v.iter().minmax() {
        itertools::MinMaxResult::NoElements => Q::zero(),
        itertools::MinMaxResult::OneElement(_) => Q::zero(),
        itertools::MinMaxResult::MinMax(lo, hi) => hi - lo,
    }
}

/// Extreme points of the unit ball `{x : sum x = 0, x_i - x_j <= 1}` in
/// `R^{n+1}`, by exact vertex enumeration, sorted.
pub fn polyhedral_unit_ball_vertices(n: usize) -> Vec<Vec<Q>> {
    let dim = n + 1;
    let constraints: Vec<(usize, usize)> = (0..dim)
        .cartesian_product(0..dim)
        .filter(|(i, j)| i != j)
        .collect();
    let mut out: Vec<Vec<Q>> = Vec::new();
    for tight in constraints.iter().combinations(n) {
        let mut a: Vec<Vec<Q>> = vec![vec![Q::one(); dim]];
        let mut b: Vec<Q> = vec![Q::zero()];
        for &&(i, j) in &tight {
            let mut row = vec![Q::zero(); dim];
            row[i] = Q::one();
            row[j] = -Q::one();
            a.push(row);
            b.push(Q::one());
        }
        let Some(x) = solve_square(&a, &b) else {
            continue;
        };
        if spread(&x) <= Q::one() && !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort();
    out
}

/// A point given by a chain (a simplex in its order) and monotone
/// coordinates `0 <= u_1 <= ... <= u_d <= 1`, `d = len(chain) - 1`.
///
/// The vertex at position `i` gets weight `u_{i+1} - u_i` with `u_0 = 0` and
/// `u_{d+1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PLPoint {
    pub chain: Vec<String>,
    #[serde(with = "serde_q_vec")]
    pub coords: Vec<Q>,
}

impl PLPoint {
    pub fn vertex(label: &str) -> PLPoint {
        PLPoint {
            chain: vec![label.to_string()],
            coords: Vec::new(),
        }
    }
}

/// Sparse barycentric weights, keyed by vertex index; all weights positive
/// and summing to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    weights: Vec<(usize, Q)>,
}

impl Point {
    pub fn vertex(v: usize) -> Point {
        Point {
            weights: vec![(v, Q::one())],
        }
    }

    /// Builds a point from explicit weights; zero weights are dropped.
    pub fn from_weights(weights: impl IntoIterator<Item = (usize, Q)>) -> Result<Point, MetricError> {
        let mut map: BTreeMap<usize, Q> = BTreeMap::new();
        for (v, w) in weights {
            if w.is_negative() {
                return Err(MetricError::InvalidPoint("negative weight".into()));
            }
            *map.entry(v).or_insert_with(Q::zero) += w;
        }
        let total: Q = map.values().sum();
        if total != Q::one() {
            return Err(MetricError::InvalidPoint(format!("weights sum to {total}")));
        }
        Ok(Point {
            weights: map.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
        })
    }

    pub fn from_pl(x: &OrderedComplex, p: &PLPoint) -> Result<Point, MetricError> {
        let chain: Vec<usize> = p
            .chain
            .iter()
            .map(|l| x.index_of(l).map_err(|_| MetricError::UnknownVertex(l.clone())))
            .collect::<Result<_, _>>()?;
        if chain.is_empty() || p.coords.len() + 1 != chain.len() {
            return Err(MetricError::InvalidPoint(format!(
                "{} coordinates for a chain of {} vertices",
                p.coords.len(),
                chain.len()
            )));
        }
        if !x.is_face(&chain) {
            return Err(MetricError::InvalidPoint(format!(
                "{:?} is not a simplex",
                p.chain
            )));
        }
        let ordered = match x.order_type() {
            OrderType::C => chain.windows(2).all(|w| x.arrow(w[0], w[1])),
            OrderType::A => chain.len() < 3 || chain.iter().tuple_windows().all(|(a, b, c)| x.cyclic(*a, *b, *c)),
        };
        if !ordered {
            return Err(MetricError::InvalidPoint(format!(
                "{:?} is not listed in simplex order",
                p.chain
            )));
        }
        let mut u = vec![Q::zero()];
        u.extend(p.coords.iter().cloned());
        u.push(Q::one());
        if u.windows(2).any(|w| w[0] > w[1]) {
            return Err(MetricError::InvalidPoint(
                "coordinates must be monotone in [0, 1]".into(),
            ));
        }
        Point::from_weights(chain.iter().enumerate().map(|(i, &v)| (v, &u[i + 1] - &u[i])))
    }

    pub fn support(&self) -> Vec<usize> {
        self.weights.iter().map(|(v, _)| *v).collect()
    }

    pub fn weight(&self, v: usize) -> Q {
        self.weights
            .iter()
            .find(|(u, _)| *u == v)
            .map(|(_, w)| w.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn weights(&self) -> &[(usize, Q)] {
        &self.weights
    }

    fn lies_in(&self, chamber: &[usize]) -> bool {
        self.weights.iter().all(|(v, _)| chamber.contains(v))
    }
}

/// Chamber coordinates `X_1..X_D` of `p` in `chamber`.
fn chamber_coords(p: &Point, chamber: &[usize]) -> Vec<Q> {
    let mut out = vec![Q::zero(); chamber.len().saturating_sub(1)];
    let mut acc = Q::zero();
    for j in (1..chamber.len()).rev() {
        acc += p.weight(chamber[j]);
        out[j - 1] = acc.clone();
    }
    out
}

fn chamber_norm(order: OrderType, diff: &[Q]) -> Q {
    match order {
        OrderType::C => linf_norm(diff),
        OrderType::A => {
            let zero = Q::zero();
            let hi = diff.iter().max().unwrap_or(&zero).max(&zero).clone();
            let lo = diff.iter().min().unwrap_or(&zero).min(&zero).clone();
            hi - lo
        }
    }
}

/// Distance between two points measured inside a given maximal simplex.
pub fn distance_in_chamber(x: &OrderedComplex, chamber: &[usize], p: &Point, q: &Point) -> Q {
    let a = chamber_coords(p, chamber);
    let b = chamber_coords(q, chamber);
    let diff: Vec<Q> = a.iter().zip(&b).map(|(s, t)| s - t).collect();
    chamber_norm(x.order_type(), &diff)
}

/// The label-least maximal simplex containing both supports.
pub fn common_chamber<'a>(x: &'a OrderedComplex, p: &Point, q: &Point) -> Option<&'a Vec<usize>> {
    let mut union = p.support();
    union.extend(q.support());
    union.sort_unstable();
    union.dedup();
    if !x.is_face(&union) {
        return None;
    }
    x.maximal_simplices()
        .iter()
        .filter(|s| union.iter().all(|v| s.contains(v)))
        .min_by_key(|s| {
            let mut ls: Vec<&str> = s.iter().map(|&v| x.label(v)).collect();
            ls.sort_unstable();
            ls.join("\u{0}")
        })
}

/// The chamber metric between two points lying in one maximal simplex.
pub fn chamber_distance(x: &OrderedComplex, p: &Point, q: &Point) -> Result<Q, MetricError> {
    let chamber = common_chamber(x, p, q).ok_or(MetricError::NoCommonChamber)?;
    Ok(distance_in_chamber(x, chamber, p, q))
}

fn mesh_denominator(mesh: &Q) -> Result<u64, MetricError> {
    let m = mesh.denom().to_u64();
    match m {
        Some(m) if is_unit_fraction(mesh) && m <= MAX_MESH_DENOM => Ok(m),
        _ => Err(MetricError::InvalidMesh(mesh.to_string())),
    }
}

/// Compositions of `total` into `parts` nonnegative parts.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Graph on boundary grid points of all chambers (plus extra points), with
/// every pair of nodes in a common chamber joined by an edge of exact chamber
/// length. Lengths are stored as integers over a common denominator.
#[derive(Debug, Clone)]
pub struct DistanceGraph {
    nodes: Vec<Point>,
    index: HashMap<Point, usize>,
    adj: Vec<Vec<(usize, u64)>>,
    scale: u64,
}

impl DistanceGraph {
    pub fn build(x: &OrderedComplex, mesh: &Q, extra: &[Point]) -> Result<DistanceGraph, MetricError> {
        let m = mesh_denominator(mesh)?;
        let mut scale = BigInt::from(m);
        for p in extra {
            for (_, w) in p.weights() {
                scale = scale.lcm(w.denom());
            }
        }
        let scale = scale.to_u64().filter(|&s| s < 1 << 40).ok_or(MetricError::DenominatorTooLarge)?;

        let mut nodes: Vec<Point> = Vec::new();
        let mut index: HashMap<Point, usize> = HashMap::new();
        let mut intern = |p: Point, nodes: &mut Vec<Point>| -> usize {
            *index.entry(p.clone()).or_insert_with(|| {
                nodes.push(p);
                nodes.len() - 1
            })
        };
        let chambers = x.maximal_simplices();
        let mut members: Vec<Vec<usize>> = Vec::with_capacity(chambers.len());
        let mut grid_cache: HashMap<usize, Vec<Vec<u64>>> = HashMap::new();
        for ch in chambers {
            let d = ch.len();
            let grid = grid_cache.entry(d).or_insert_with(|| {
                compositions(m, d)
                    .into_iter()
                    .filter(|c| d == 1 || c.contains(&0))
                    .collect()
            });
            let mut ids = Vec::with_capacity(grid.len());
            for comp in grid.iter() {
                let p = Point {
                    weights: ch
                        .iter()
                        .zip(comp)
                        .filter(|(_, &k)| k > 0)
                        .map(|(&v, &k)| (v, Q::new(BigInt::from(k), BigInt::from(m))))
                        .sorted()
                        .collect(),
                };
                ids.push(intern(p, &mut nodes));
            }
            for p in extra.iter().filter(|p| p.lies_in(ch)) {
                ids.push(intern(p.clone(), &mut nodes));
            }
            ids.sort_unstable();
            ids.dedup();
            members.push(ids);
        }
        for p in extra {
            intern(p.clone(), &mut nodes);
        }
        let index: HashMap<Point, usize> = nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let order = x.order_type();
        let jobs: Vec<usize> = (0..chambers.len()).collect();
        let per_chamber = parallel_collect(&jobs, |&c| {
            let ch = &chambers[c];
            let coords: Vec<Vec<i64>> = members[c]
                .iter()
                .map(|&id| {
                    chamber_coords(&nodes[id], ch)
                        .iter()
                        .map(|q| (q * qi(scale as i64)).to_integer().to_i64().unwrap())
                        .collect()
                })
                .collect();
            let mut edges = Vec::new();
            for a in 0..coords.len() {
                for b in a + 1..coords.len() {
                    let w = integer_norm(order, &coords[a], &coords[b]);
                    edges.push((members[c][a], members[c][b], w));
                }
            }
            edges
        });
        let mut best: HashMap<(usize, usize), u64> = HashMap::new();
        for (a, b, w) in per_chamber.into_iter().flatten() {
            let e = best.entry((a, b)).or_insert(w);
            *e = (*e).min(w);
        }
        let mut adj = vec![Vec::new(); nodes.len()];
        for ((a, b), w) in best {
            adj[a].push((b, w));
            adj[b].push((a, w));
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(DistanceGraph {
            nodes,
            index,
            adj,
            scale,
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn node_of(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Single-source distances (scaled integers) to every node.
    pub fn distances_from(&self, src: usize) -> Vec<Option<u64>> {
        let mut dist: Vec<Option<u64>> = vec![None; self.nodes.len()];
        let mut heap = BinaryHeap::new();
        dist[src] = Some(0);
        heap.push(Reverse((0u64, src)));
        while let Some(Reverse((d, v))) = heap.pop() {
            if dist[v].is_some_and(|best| best < d) {
                continue;
            }
            for &(w, len) in &self.adj[v] {
                let nd = d + len;
                if dist[w].is_none_or(|cur| nd < cur) {
                    dist[w] = Some(nd);
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        dist
    }

    pub fn to_rational(&self, scaled: u64) -> Q {
        Q::new(BigInt::from(scaled), BigInt::from(self.scale))
    }

    /// Graph distance between two points that are nodes of this graph.
    pub fn distance(&self, p: &Point, q: &Point) -> Result<Q, MetricError> {
        let (Some(a), Some(b)) = (self.node_of(p), self.node_of(q)) else {
            return Err(MetricError::InvalidPoint("point is not a graph node".into()));
        };
        self.distances_from(a)[b]
            .map(|d| self.to_rational(d))
            .ok_or(MetricError::Disconnected)
    }
}

fn integer_norm(order: OrderType, a: &[i64], b: &[i64]) -> u64 {
    let diff = a.iter().zip(b).map(|(s, t)| s - t);
    match order {
        OrderType::C => diff.map(|d| d.unsigned_abs()).max().unwrap_or(0),
        OrderType::A => {
            let (mut hi, mut lo) = (0i64, 0i64);
            for d in diff {
                hi = hi.max(d);
                lo = lo.min(d);
            }
            (hi - lo) as u64
        }
    }
}

/// Upper bound for the length metric between `p` and `q`: the shortest path
/// through boundary grid points of spacing `mesh`. It exceeds the true
/// distance by at most `2 * mesh` per chamber the path crosses.
pub fn approx_distance(x: &OrderedComplex, p: &Point, q: &Point, mesh: &Q) -> Result<Q, MetricError> {
    let g = DistanceGraph::build(x, mesh, &[p.clone(), q.clone()])?;
    g.distance(p, q)
}

/// Discretization allowance `2 * mesh * chambers`.
pub fn mesh_bound(mesh: &Q, chambers: usize) -> Q {
    mesh * qi(2 * chambers as i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalProductReport {
    pub vertex: String,
    pub samples: usize,
    pub pairs: usize,
    #[serde(with = "crate::rational::serde_q")]
    pub max_discrepancy: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub bound: Q,
    pub within_bound: bool,
}

/// Compares the length metric of `|L|` near `x` with the sup of the metrics
/// of `|L-|` and `|L+|`, on grid points (spacing `mesh`) within `1/8` of
/// `x` in every chamber.
pub fn local_product_check(l: &Poset, x: usize, mesh: &Q) -> Result<LocalProductReport, MetricError> {
    if (0..l.len()).any(|y| !l.comparable(x, y)) {
        return Err(MetricError::NotComparableToAll(l.label(x).to_string()));
    }
    let m = mesh_denominator(mesh)?;
    let whole = order_complex(l);
    let below: Vec<usize> = (0..l.len()).filter(|&y| l.le(y, x)).collect();
    let above: Vec<usize> = (0..l.len()).filter(|&y| l.le(x, y)).collect();
    let lower = l.induced(&below);
    let upper = l.induced(&above);
    let lower_cx = order_complex(&lower);
    let upper_cx = order_complex(&upper);
    let to_sub = |sub: &Poset, v: usize| sub.index_of(l.label(v)).unwrap();

    let radius = Q::new(BigInt::one(), BigInt::from(8));
    let xv = whole.index_of(l.label(x)).unwrap();
    let x_point = Point::vertex(xv);
    let mut samples: Vec<Point> = Vec::new();
    for chain in whole.maximal_simplices() {
        let d = chain.len() - 1;
        for comp in compositions(m, d + 1) {
            let p = Point::from_weights(
                chain
                    .iter()
                    .zip(&comp)
                    .map(|(&v, &k)| (v, Q::new(BigInt::from(k), BigInt::from(m)))),
            )?;
            if distance_in_chamber(&whole, chain, &p, &x_point) <= radius && !samples.contains(&p) {
                samples.push(p);
            }
        }
    }
    samples.sort();

    // project each sample to both factors through its chamber coordinates
    let project = |p: &Point| -> (Point, Point) {
        let chain = common_chamber(&whole, p, &x_point).expect("samples lie in chambers through x");
        let k = chain.iter().position(|&v| v == xv).unwrap();
        let xs = chamber_coords(p, chain);
        let big_x = |j: usize| -> Q {
            if j == 0 {
                Q::one()
            } else if j > xs.len() {
                Q::zero()
            } else {
                xs[j - 1].clone()
            }
        };
        let lower_w = (0..=k).map(|i| {
            let w = if i == 0 { Q::one() - big_x(1) } else { big_x(i) - big_x(i + 1) };
            let w = if i == k { big_x(k) } else { w };
            (to_sub(&lower, chain[i]), w)
        });
        let d = chain.len() - 1;
        let upper_w = (k..=d).map(|i| {
            let w = if i == k {
                Q::one() - big_x(k + 1)
            } else if i == d {
                big_x(d)
            } else {
                big_x(i) - big_x(i + 1)
            };
            (to_sub(&upper, chain[i]), w)
        });
        (
            Point::from_weights(lower_w).unwrap(),
            Point::from_weights(upper_w).unwrap(),
        )
    };
    let projections: Vec<(Point, Point)> = samples.iter().map(project).collect();
    let lower_pts: Vec<Point> = projections.iter().map(|p| p.0.clone()).collect();
    let upper_pts: Vec<Point> = projections.iter().map(|p| p.1.clone()).collect();

    let g_whole = DistanceGraph::build(&whole, mesh, &samples)?;
    let g_lower = DistanceGraph::build(&lower_cx, mesh, &lower_pts)?;
    let g_upper = DistanceGraph::build(&upper_cx, mesh, &upper_pts)?;

    let idx: Vec<usize> = (0..samples.len()).collect();
    let rows = parallel_collect(&idx, |&i| -> Result<Q, MetricError> {
        let dw = g_whole.distances_from(g_whole.node_of(&samples[i]).unwrap());
        let dl = g_lower.distances_from(g_lower.node_of(&lower_pts[i]).unwrap());
        let du = g_upper.distances_from(g_upper.node_of(&upper_pts[i]).unwrap());
        let mut worst = Q::zero();
        for j in i + 1..samples.len() {
            let get = |g: &DistanceGraph, d: &[Option<u64>], p: &Point| {
                d[g.node_of(p).unwrap()]
                    .map(|s| g.to_rational(s))
                    .ok_or(MetricError::Disconnected)
            };
            let a = get(&g_whole, &dw, &samples[j])?;
            let b = get(&g_lower, &dl, &lower_pts[j])?;
            let c = get(&g_upper, &du, &upper_pts[j])?;
            let gap = (a - b.max(c)).abs();
            if gap > worst {
                worst = gap;
            }
        }
        Ok(worst)
    });
    let mut max_discrepancy = Q::zero();
    for r in rows {
        max_discrepancy = max_discrepancy.max(r?);
    }
    let bound = mesh_bound(mesh, whole.maximal_simplices().len());
    let n = samples.len();
    Ok(LocalProductReport {
        vertex: l.label(x).to_string(),
        samples: n,
        pairs: n * n.saturating_sub(1) / 2,
        within_bound: max_discrepancy <= bound,
        max_discrepancy,
        bound,
    })
}

/// Elements comparable to `x`: the star of `x` in the order complex.
pub fn comparable_subposet(l: &Poset, x: usize) -> (Poset, usize) {
    let keep: Vec<usize> = (0..l.len()).filter(|&y| l.comparable(x, y)).collect();
    let sub = l.induced(&keep);
    let nx = sub.index_of(l.label(x)).unwrap();
    (sub, nx)
}
