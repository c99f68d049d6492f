//! Injective hulls of small finite metric spaces and Dress's combinatorial
//! dimension criterion.
//!
//! The hull `E(M)` is the set of minimal `f >= 0` with `f(x) + f(y) >= d(x, y)`.
//! Each cell is the set of `f` whose equality graph (pairs with
//! `f(x) + f(y) = d(x, y)`, loops meaning `f(x) = 0`) contains a fixed
//! spanning graph; its dimension is the number of bipartite components of
//! that graph.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par::{parallel_any, parallel_collect};
use crate::rational::{serde_q_matrix, serde_q_vec, Q};

pub const MAX_TIGHT_SPAN_POINTS: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricSpaceError {
    #[error("not a metric: {0}")]
    NotAMetric(String),
    #[error("{0} points; at most {MAX_TIGHT_SPAN_POINTS} are supported")]
    TooManyPoints(usize),
    #[error("dimension bound must be at least 1, got {0}")]
    InvalidDimension(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteMetric {
    pub points: Vec<String>,
    #[serde(with = "serde_q_matrix")]
    pub dist: Vec<Vec<Q>>,
}

impl FiniteMetric {
    pub fn new(points: Vec<String>, dist: Vec<Vec<Q>>) -> Result<FiniteMetric, MetricSpaceError> {
        let m = FiniteMetric { points, dist };
        m.validate()?;
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn d(&self, x: usize, y: usize) -> &Q {
        &self.dist[x][y]
    }

    pub fn validate(&self) -> Result<(), MetricSpaceError> {
        let n = self.points.len();
        let bad = |s: String| Err(MetricSpaceError::NotAMetric(s));
        if self.points.iter().collect::<HashSet<_>>().len() != n {
            return bad("duplicate point label".into());
        }
        if self.dist.len() != n || self.dist.iter().any(|r| r.len() != n) {
            return bad(format!("distance matrix must be {n} x {n}"));
        }
        let p = &self.points;
        for x in 0..n {
            if !self.dist[x][x].is_zero() {
                return bad(format!("d({0}, {0}) is not 0", p[x]));
            }
            for y in 0..n {
                if self.dist[x][y] != self.dist[y][x] {
                    return bad(format!("d({}, {}) is not symmetric", p[x], p[y]));
                }
                if x != y && !self.dist[x][y].is_positive() {
                    return bad(format!("d({}, {}) is not positive", p[x], p[y]));
                }
                for z in 0..n {
                    if self.dist[x][z] > &self.dist[x][y] + &self.dist[y][z] {
                        return bad(format!(
                            "triangle inequality fails for {}, {}, {}",
                            p[x], p[y], p[z]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The metric on a subset of the points, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> FiniteMetric {
        FiniteMetric {
            points: keep.iter().map(|&i| self.points[i].clone()).collect(),
            dist: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.dist[i][j].clone()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullVertex {
    #[serde(with = "serde_q_vec")]
    pub f: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullCell {
    pub dimension: usize,
    pub vertices: Vec<usize>,
    pub equality_graph: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightSpan {
    pub points: Vec<String>,
    pub vertices: Vec<HullVertex>,
    pub cells: Vec<HullCell>,
    pub dimension: usize,
}

/// Unordered pairs `x <= y`, loops included.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect()
}

/// Components of the graph on `n` vertices with the edges selected by `mask`,
/// each as (vertices, edge count, bipartite).
fn components(n: usize, pairs: &[(usize, usize)], mask: u64) -> Vec<(Vec<usize>, usize, bool)> {
    let mut colour: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut out = Vec::new();
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        let id = out.len();
        colour[s] = Some((id, false));
        let mut stack = vec![s];
        let mut verts = vec![s];
        let mut bipartite = true;
        while let Some(v) = stack.pop() {
            let side = colour[v].unwrap().1;
            for (e, &(a, b)) in pairs.iter().enumerate() {
                if mask >> e & 1 == 0 || (a != v && b != v) {
                    continue;
                }
                let w = if a == v { b } else { a };
                match colour[w] {
                    None => {
                        colour[w] = Some((id, !side));
                        verts.push(w);
                        stack.push(w);
                    }
                    Some((_, s2)) if s2 == side => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(e, (a, _))| mask >> e & 1 == 1 && verts.contains(a))
            .count();
        verts.sort_unstable();
        out.push((verts, edges, bipartite));
    }
    out
}

fn spanning(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    (0..n).all(|v| {
        pairs
            .iter()
            .enumerate()
            .any(|(e, &(a, b))| mask >> e & 1 == 1 && (a == v || b == v))
    })
}

fn tight_mask(d: &[Vec<i64>], pairs: &[(usize, usize)], f: &[i64]) -> u64 {
    pairs
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| f[a] + f[b] == d[a][b])
        .fold(0u64, |acc, (e, _)| acc | 1 << e)
}

fn in_hull(d: &[Vec<i64>], f: &[i64]) -> bool {
    let n = f.len();
    f.iter().all(|&v| v >= 0) && (0..n).all(|x| (x + 1..n).all(|y| f[x] + f[y] >= d[x][y]))
}

/// Distances times `2L`, `L` the common denominator, so that every vertex of
/// the hull has integer coordinates.
fn scaled_distances(m: &FiniteMetric) -> Result<(Vec<Vec<i64>>, i64), MetricSpaceError> {
    let too_big = || MetricSpaceError::NotAMetric("distances too large for exact integer search".into());
    let mut l = BigInt::one();
    for v in m.dist.iter().flatten() {
        l = l.lcm(v.denom());
    }
    let scale = (l * BigInt::from(2)).to_i64().ok_or_else(too_big)?;
    let d = m
        .dist
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| (v * Q::from_integer(scale.into())).to_integer().to_i64().filter(|x| *x < 1 << 40))
                .collect::<Option<Vec<i64>>>()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(too_big)?;
    Ok((d, scale))
}

/// Unique solution of `f(x) + f(y) = d(x, y)` over the pairs in `mask`,
/// when every component has exactly one cycle and that cycle is odd.
fn solve_unicyclic(n: usize, pairs: &[(usize, usize)], mask: u64, d: &[Vec<i64>]) -> Option<Vec<i64>> {
    // f(v) = sign[v] * t + off[v] relative to the component root
    let mut sign = vec![0i64; n];
    let mut off = vec![0i64; n];
    let mut f = vec![0i64; n];
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(e, _)| mask >> e & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    for root in 0..n {
        if sign[root] != 0 {
            continue;
        }
        sign[root] = 1;
        let mut comp = vec![root];
        let mut stack = vec![root];
        let mut used = vec![false; edges.len()];
        while let Some(v) = stack.pop() {
            for (e, &(a, b)) in edges.iter().enumerate() {
                if used[e] || (a != v && b != v) || a == b {
                    continue;
                }
                let w = if a == v { b } else { a };
                if sign[w] == 0 {
                    used[e] = true;
                    sign[w] = -sign[v];
                    off[w] = d[v][w] - off[v];
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        let mut closing = edges
            .iter()
            .enumerate()
            .filter(|(e, (a, _))| !used[*e] && comp.contains(a));
        let (_, &(a, b)) = closing.next()?;
        if closing.next().is_some() {
            return None;
        }
        let coeff = sign[a] + sign[b];
        if coeff == 0 {
            return None;
        }
        let rhs = d[a][b] - off[a] - off[b];
        if rhs % coeff != 0 {
            return None;
        }
        let t = rhs / coeff;
        for &v in &comp {
            f[v] = sign[v] * t + off[v];
        }
    }
    Some(f)
}

/// Computes the cell structure of the injective hull.
pub fn tight_span(m: &FiniteMetric) -> Result<TightSpan, MetricSpaceError> {
    m.validate()?;
    let n = m.len();
    if n > MAX_TIGHT_SPAN_POINTS {
        return Err(MetricSpaceError::TooManyPoints(n));
    }
    if n == 0 {
        return Ok(TightSpan {
            points: Vec::new(),
            vertices: Vec::new(),
            cells: Vec::new(),
            dimension: 0,
        });
    }
    let pairs = pair_list(n);
    let (d, scale) = scaled_distances(m)?;
    // vertices: n tight pairs whose graph has one odd cycle per component
    let firsts: Vec<usize> = (0..pairs.len()).collect();
    let found = parallel_collect(&firsts, |&first| {
        let mut local: Vec<Vec<i64>> = Vec::new();
        for rest in (first + 1..pairs.len()).combinations(n - 1) {
            let mask = rest.iter().fold(1u64 << first, |acc, e| acc | 1 << e);
            if let Some(f) = solve_unicyclic(n, &pairs, mask, &d) {
                if in_hull(&d, &f) {
                    local.push(f);
                }
            }
        }
        local
    });
    let vertex_set: BTreeSet<Vec<i64>> = found.into_iter().flatten().collect();
    let int_vertices: Vec<Vec<i64>> = vertex_set.into_iter().collect();
    let masks: Vec<u64> = int_vertices.iter().map(|f| tight_mask(&d, &pairs, f)).collect();
    let vertices: Vec<Vec<Q>> = int_vertices
        .iter()
        .map(|f| f.iter().map(|&x| Q::new(x.into(), scale.into())).collect())
        .collect();

    // cells: spanning intersections of vertex equality graphs
    let mut cell_masks: BTreeSet<u64> = masks.iter().copied().collect();
    let mut frontier: Vec<u64> = cell_masks.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &c in &frontier {
            for &v in &masks {
                let i = c & v;
                if spanning(n, &pairs, i) && cell_masks.insert(i) {
                    next.push(i);
                }
            }
        }
        frontier = next;
    }
    let mut cells: Vec<HullCell> = cell_masks
        .into_iter()
        .map(|mask| {
            let dimension = components(n, &pairs, mask)
                .iter()
                .filter(|(_, _, bip)| *bip)
                .count();
            let verts = (0..vertices.len()).filter(|&v| masks[v] & mask == mask).collect();
            let equality_graph = pairs
                .iter()
                .enumerate()
                .filter(|(e, _)| mask >> e & 1 == 1)
                .map(|(_, &(a, b))| (m.points[a].clone(), m.points[b].clone()))
                .collect();
            HullCell {
                dimension,
                vertices: verts,
                equality_graph,
            }
        })
        .collect();
    cells.sort_by(|a, b| (a.dimension, &a.vertices).cmp(&(b.dimension, &b.vertices)));
    let dimension = cells.iter().map(|c| c.dimension).max().unwrap_or(0);
    Ok(TightSpan {
        points: m.points.clone(),
        vertices: vertices.into_iter().map(|f| HullVertex { f }).collect(),
        cells,
        dimension,
    })
}

/// Fixed-point-free involutions of `0..k`, as image vectors.
pub fn fixed_point_free_involutions(k: usize) -> Vec<Vec<usize>> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(&a) = free.first() else {
            out.push(cur.clone());
            return;
        };
        for idx in 1..free.len() {
            let b = free[idx];
            let mut rest: Vec<usize> = free.iter().copied().filter(|&z| z != a && z != b).collect();
            cur[a] = b;
            cur[b] = a;
            rec(&mut rest, cur, out);
        }
    }
    let mut out = Vec::new();
    if k % 2 == 0 {
        rec(&mut (0..k).collect(), &mut vec![0; k], &mut out);
    }
    out
}

/// Permutations of `0..k` without fixed points.
pub fn derangements(k: usize) -> Vec<Vec<usize>> {
    (0..k)
        .permutations(k)
        .filter(|p| p.iter().enumerate().all(|(i, &j)| i != j))
        .collect()
}

/// Dress's criterion for combinatorial dimension at most `n`, by literal
/// exhaustion. Holds vacuously when there are fewer than `2(n+1)` points.
pub fn dress_dimension_test(m: &FiniteMetric, n: usize) -> Result<bool, MetricSpaceError> {
    m.validate()?;
    if n == 0 {
        return Err(MetricSpaceError::InvalidDimension(n));
    }
    let k = 2 * (n + 1);
    if m.len() < k {
        return Ok(true);
    }
    let involutions = fixed_point_free_involutions(k);
    let bijections = derangements(k);
    let subsets: Vec<Vec<usize>> = (0..m.len()).combinations(k).collect();
    let fails = parallel_any(&subsets, |z| {
        let total = |p: &[usize]| -> Q { (0..k).map(|i| m.d(z[i], z[p[i]]).clone()).sum() };
        involutions.iter().any(|inv| {
            let s = total(inv);
            !bijections.iter().any(|j| j != inv && total(j) >= s)
        })
    });
    Ok(!fails)
}

/// Sup distance between Kuratowski images `d(x, .)` and `d(y, .)`.
pub fn kuratowski_distance(m: &FiniteMetric, x: usize, y: usize) -> Q {
    (0..m.len())
        .map(|z| (m.d(x, z) - m.d(y, z)).abs())
        .max()
        .unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{matrix_rank, qi};

    fn metric(labels: &[&str], d: &[&[i64]]) -> FiniteMetric {
        FiniteMetric::new(
            labels.iter().map(|s| s.to_string()).collect(),
            d.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect(),
        )
        .unwrap()
    }

    /// Affine dimension of a set of points, computed independently of the
    /// equality-graph count.
    fn affine_dim(points: &[&Vec<Q>]) -> usize {
        if points.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<Q>> = points[1..]
            .iter()
            .map(|p| p.iter().zip(points[0]).map(|(a, b)| a - b).collect())
            .collect();
        matrix_rank(&rows)
    }

    fn check_cells(t: &TightSpan) {
        for c in &t.cells {
            let pts: Vec<&Vec<Q>> = c.vertices.iter().map(|&v| &t.vertices[v].f).collect();
            assert_eq!(affine_dim(&pts), c.dimension, "{c:?}");
        }
    }

    #[test]
    fn two_points() {
        let t = tight_span(&metric(&["a", "b"], &[&[0, 5], &[5, 0]])).unwrap();
        assert_eq!(t.dimension, 1);
        assert_eq!(t.vertices.len(), 2);
        assert_eq!(t.cells.len(), 3);
        check_cells(&t);
    }

    #[test]
    fn equilateral_tripod() {
        let m = metric(&["a", "b", "c"], &[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]]);
        let t = tight_span(&m).unwrap();
        assert_eq!(t.dimension, 1);
        // three leaves and the centre (1, 1, 1)
        assert_eq!(t.vertices.len(), 4);
        assert!(t.vertices.iter().any(|v| v.f == vec![qi(1), qi(1), qi(1)]));
        assert_eq!(t.cells.iter().filter(|c| c.dimension == 1).count(), 3);
        check_cells(&t);
    }

    #[test]
    fn four_cycle_is_a_square() {
        let m = metric(
            &["a", "b", "c", "d"],
            &[&[0, 1, 2, 1], &[1, 0, 1, 2], &[2, 1, 0, 1], &[1, 2, 1, 0]],
        );
        let t = tight_span(&m).unwrap();
        assert_eq!(t.dimension, 2);
        assert_eq!(t.cells.iter().filter(|c| c.dimension == 2).count(), 1);
        check_cells(&t);
        assert_eq!(dress_dimension_test(&m, 1), Ok(false));
    }

    #[test]
    fn rectangle_distances_give_a_tree() {
        // d(a,b) + d(c,d) = 4 < d(a,c) + d(b,d) = d(a,d) + d(b,c) = 6
        let m = metric(
            &["a", "b", "c", "d"],
            &[&[0, 2, 3, 3], &[2, 0, 3, 3], &[3, 3, 0, 2], &[3, 3, 2, 0]],
        );
        let t = tight_span(&m).unwrap();
        assert_eq!(t.dimension, 1);
        check_cells(&t);
        assert_eq!(dress_dimension_test(&m, 1), Ok(true));
    }

    #[test]
    fn kuratowski_images_are_vertices() {
        let m = metric(
            &["a", "b", "c", "d", "e"],
            &[
                &[0, 1, 2, 2, 3],
                &[1, 0, 1, 2, 2],
                &[2, 1, 0, 1, 2],
                &[2, 2, 1, 0, 1],
                &[3, 2, 2, 1, 0],
            ],
        );
        let t = tight_span(&m).unwrap();
        check_cells(&t);
        for x in 0..m.len() {
            assert!(t.vertices.iter().any(|v| v.f == m.dist[x]));
            for y in 0..m.len() {
                assert_eq!(&kuratowski_distance(&m, x, y), m.d(x, y));
            }
        }
    }

    #[test]
    fn dress_edge_cases() {
        let m = metric(&["a", "b"], &[&[0, 5], &[5, 0]]);
        assert_eq!(dress_dimension_test(&m, 1), Ok(true));
        assert_eq!(dress_dimension_test(&m, 0), Err(MetricSpaceError::InvalidDimension(0)));
        assert_eq!(fixed_point_free_involutions(4).len(), 3);
        assert_eq!(fixed_point_free_involutions(6).len(), 15);
        assert_eq!(derangements(4).len(), 9);
        assert_eq!(derangements(6).len(), 265);
    }

    #[test]
    fn rejects_non_metrics() {
        let bad = FiniteMetric {
            points: vec!["a".into(), "b".into(), "c".into()],
            dist: vec![
                vec![qi(0), qi(1), qi(5)],
                vec![qi(1), qi(0), qi(1)],
                vec![qi(5), qi(1), qi(0)],
            ],
        };
        assert!(matches!(tight_span(&bad), Err(MetricSpaceError::NotAMetric(_))));
        let pts: Vec<String> = (0..8).map(|i| i.to_string()).collect();
        let d = (0..8)
            .map(|i| (0..8).map(|j| qi(i64::from(i != j))).collect())
            .collect();
        let m = FiniteMetric::new(pts, d).unwrap();
        assert_eq!(tight_span(&m), Err(MetricSpaceError::TooManyPoints(8)));
    }
}
