//! Seeded test corpora: random pure graded posets, small cube complexes and
//! small finite metric spaces.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cube::{grid_label, unit_cube, unit_square, CubeComplex};
use crate::generators::{boolean_poset, noncrossing_partitions, partition_lattice, subspace_poset};
use crate::poset::Poset;
use crate::rational::{qi, Q};
use crate::tightspan::FiniteMetric;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random poset with at most `max_elems` elements in which every maximal
/// chain has the same length: levels of random sizes, each element covering
/// at least one element of the level below.
pub fn random_graded_poset<R: Rng>(rng: &mut R, max_elems: usize) -> Poset {
    let max_elems = max_elems.max(1);
    let ranks = rng.gen_range(1..=max_elems.min(5));
    let mut sizes = vec![1usize; ranks];
    let mut left = max_elems - ranks;
    for s in sizes.iter_mut() {
        let extra = rng.gen_range(0..=left.min(3));
        *s += extra;
        left -= extra;
    }
    let mut labels: Vec<Vec<String>> = Vec::new();
    for (r, &s) in sizes.iter().enumerate() {
        labels.push((0..s).map(|i| format!("r{r}e{i}")).collect());
    }
    let mut covers: Vec<(String, String)> = Vec::new();
    for r in 1..ranks {
        let below = &labels[r - 1];
        let above = &labels[r];
        let mut has_up = vec![false; below.len()];
        for y in above {
            let mut picked: Vec<usize> = (0..below.len())
                .filter(|_| rng.gen_bool(0.45))
                .collect();
            if picked.is_empty() {
                picked.push(rng.gen_range(0..below.len()));
            }
            for i in picked {
                has_up[i] = true;
                covers.push((below[i].clone(), y.clone()));
            }
        }
        for (i, up) in has_up.iter().enumerate() {
            if !up {
                let j = rng.gen_range(0..above.len());
                covers.push((below[i].clone(), above[j].clone()));
            }
        }
    }
    let all: Vec<String> = labels.into_iter().flatten().collect();
    Poset::from_covers(&all, &covers).expect("levels give an acyclic cover relation")
}

pub fn random_graded_posets(seed: u64, count: usize, max_elems: usize) -> Vec<Poset> {
    let mut r = rng(seed);
    (0..count).map(|_| random_graded_poset(&mut r, max_elems)).collect()
}

/// Proper parts of the generated lattices together with the lattices
/// themselves, all graded.
pub fn canonical_posets() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    for n in 1..=4 {
        out.push((format!("boolean({n})"), boolean_poset(n).unwrap()));
    }
    for n in 2..=5 {
        out.push((format!("noncrossing({n})"), noncrossing_partitions(n).unwrap()));
    }
    for n in 2..=4 {
        out.push((format!("partitions({n})"), partition_lattice(n).unwrap()));
    }
    for (q, n) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        out.push((format!("subspaces({q},{n})"), subspace_poset(q, n).unwrap()));
    }
    let bounded: Vec<(String, Poset)> = out.clone();
    for (name, p) in bounded {
        if p.len() > 2 {
            let inner: Vec<usize> = (0..p.len())
                .filter(|&x| Some(x) != p.minimum() && Some(x) != p.maximum())
                .collect();
            out.push((format!("{name} proper part"), p.induced(&inner)));
        }
    }
    out
}

fn cube_complex(cells: &[Vec<String>]) -> CubeComplex {
    CubeComplex::new(cells).expect("corpus cells are well formed")
}

/// Named small cube complexes: hand-built cases and seeded random
/// subcomplexes of the cubulation of `[0, 2]^3`.
pub fn cube_corpus(seed: u64, random: usize) -> Vec<(String, CubeComplex)> {
    let o = [0i64, 0, 0];
    let mut out: Vec<(String, Vec<Vec<String>>)> = vec![
        ("square".into(), vec![unit_square(&o, 0, 1)]),
        ("cube".into(), vec![unit_cube(&o)]),
        (
            "three squares at a corner".into(),
            vec![unit_square(&o, 0, 1), unit_square(&o, 0, 2), unit_square(&o, 1, 2)],
        ),
        (
            "two squares sharing a vertex".into(),
            vec![unit_square(&[0, 0], 0, 1), unit_square(&[1, 1], 0, 1)],
        ),
        (
            "two squares sharing two edges".into(),
            vec![
                vec!["a".into(), "b".into(), "d".into(), "c".into()],
                vec!["a".into(), "b".into(), "d".into(), "e".into()],
            ],
        ),
        ("path of two edges".into(), vec![vec!["0".into(), "1".into()], vec!["1".into(), "2".into()]]),
        ("four-cycle of edges".into(), vec![
            vec!["0,0".into(), "1,0".into()],
            vec!["1,0".into(), "1,1".into()],
            vec!["0,1".into(), "1,1".into()],
            vec!["0,0".into(), "0,1".into()],
        ]),
        ("cube with a fin".into(), vec![unit_cube(&o), unit_square(&[1, 0, 0], 0, 1)]),
        ("two cubes".into(), vec![unit_cube(&o), unit_cube(&[1, 0, 0])]),
        ("cube corner missing".into(), vec![
            unit_cube(&o),
            unit_cube(&[1, 0, 0]),
            unit_cube(&[0, 1, 0]),
        ]),
        ("boundary of a cube".into(), (0..3)
            .flat_map(|k| {
                let (i, j) = [(1, 2), (0, 2), (0, 1)][k];
                let mut hi = vec![0i64; 3];
                hi[k] = 1;
                [unit_square(&o, i, j), unit_square(&hi, i, j)]
            })
            .collect()),
    ];
    for (w, h) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let squares = (0..w)
            .cartesian_product(0..h)
            .map(|(x, y)| unit_square(&[x, y], 0, 1))
            .collect();
        out.push((format!("{w}x{h} grid"), squares));
    }
    out.push((
        "L-shaped grid".into(),
        vec![unit_square(&[0, 0], 0, 1), unit_square(&[1, 0], 0, 1), unit_square(&[0, 1], 0, 1)],
    ));
    out.push(("2x2x1 block".into(), (0..2).cartesian_product(0..2).map(|(x, y)| unit_cube(&[x, y, 0])).collect()));

    let mut r = rng(seed);
    let corners: Vec<Vec<i64>> = (0..3).map(|_| 0..2i64).multi_cartesian_product().collect();
    let mut squares: Vec<Vec<String>> = Vec::new();
    for p in (0..3).map(|_| 0..3i64).multi_cartesian_product() {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if p[i] < 2 && p[j] < 2 {
                squares.push(unit_square(&p, i, j));
            }
        }
    }
    for t in 0..random {
        let mut cells: Vec<Vec<String>> = corners
            .iter()
            .filter(|_| r.gen_bool(0.3))
            .map(|p| unit_cube(p))
            .collect();
        let extra = r.gen_range(1..=4);
        cells.extend(squares.choose_multiple(&mut r, extra).cloned());
        out.push((format!("random block {t}"), cells));
    }
    out.into_iter().map(|(n, c)| (n, cube_complex(&c))).collect()
}

fn named(points: usize) -> Vec<String> {
    (0..points).map(|i| format!("p{i}")).collect()
}

/// Shortest-path metric of a weighted graph on `0..n` (must be connected).
fn path_metric(n: usize, edges: &[(usize, usize, i64)]) -> Vec<Vec<Q>> {
    const INF: i64 = i64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(a, b, w) in edges {
        d[a][b] = d[a][b].min(w);
        d[b][a] = d[b][a].min(w);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d.into_iter().map(|r| r.into_iter().map(qi).collect()).collect()
}

/// Metric on `leaves` random leaves of a random weighted tree.
pub fn random_tree_metric<R: Rng>(rng: &mut R, leaves: usize) -> FiniteMetric {
    let inner = rng.gen_range(1..=3);
    let total = leaves + inner;
    let mut edges = Vec::new();
    // inner vertices form a random tree, leaves hang off them
    for v in 1..inner {
        edges.push((leaves + v, leaves + rng.gen_range(0..v), rng.gen_range(1..=4)));
    }
    for l in 0..leaves {
        edges.push((l, leaves + rng.gen_range(0..inner), rng.gen_range(1..=4)));
    }
    let d = path_metric(total, &edges);
    let keep: Vec<usize> = (0..leaves).collect();
    FiniteMetric::new(named(leaves), keep.iter().map(|&i| keep.iter().map(|&j| d[i][j].clone()).collect()).collect())
        .expect("tree metrics are metrics")
}

/// `d(a,b) = d(c,d) = s`, all cross distances `t`, for `s <= 2t`.
pub fn rectangle_metric(s: i64, t: i64) -> FiniteMetric {
    let d = [[0, s, t, t], [s, 0, t, t], [t, t, 0, s], [t, t, s, 0]];
    FiniteMetric::new(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        d.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect(),
    )
    .expect("rectangle metric")
}

/// Path metric of a cycle with the given edge lengths.
pub fn cycle_metric(lengths: &[i64]) -> FiniteMetric {
    let n = lengths.len();
    let edges: Vec<(usize, usize, i64)> = (0..n).map(|i| (i, (i + 1) % n, lengths[i])).collect();
    FiniteMetric::new(named(n), path_metric(n, &edges)).expect("cycle metric")
}

/// Sup-norm metric on random distinct integer points.
pub fn random_linf_metric<R: Rng>(rng: &mut R, points: usize, dim: usize) -> FiniteMetric {
    let mut pts: Vec<Vec<i64>> = Vec::new();
    while pts.len() < points {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..4)).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let d = pts
        .iter()
        .map(|p| {
            pts.iter()
                .map(|q| qi(p.iter().zip(q).map(|(a, b)| (a - b).abs()).max().unwrap()))
                .collect()
        })
        .collect();
    FiniteMetric::new(pts.iter().map(|p| grid_label(p)).collect(), d).expect("sup metric")
}

/// Path metric of a random connected graph.
pub fn random_graph_metric<R: Rng>(rng: &mut R, points: usize) -> FiniteMetric {
    let mut edges = Vec::new();
    for v in 1..points {
        edges.push((v, rng.gen_range(0..v), rng.gen_range(1..=5)));
    }
    for (a, b) in (0..points).tuple_combinations() {
        if rng.gen_bool(0.35) {
            edges.push((a, b, rng.gen_range(1..=5)));
        }
    }
    FiniteMetric::new(named(points), path_metric(points, &edges)).expect("graph metric")
}

/// Named metrics on at most six points, at least `count` of them.
pub fn metric_corpus(seed: u64, count: usize) -> Vec<(String, FiniteMetric)> {
    let mut out: Vec<(String, FiniteMetric)> = Vec::new();
    for (s, t) in [(2, 3), (1, 1), (2, 2), (1, 3), (4, 3)] {
        out.push((format!("rectangle({s},{t})"), rectangle_metric(s, t)));
    }
    for lens in [vec![1, 1, 1, 1], vec![1, 2, 1, 2], vec![1, 1, 1, 1, 1], vec![1, 1, 1, 1, 1, 1], vec![2, 1, 3, 1, 2, 2]] {
        out.push((format!("cycle{lens:?}"), cycle_metric(&lens)));
    }
    let mut r = rng(seed);
    let mut i = 0;
    while out.len() < count {
        let points = r.gen_range(4..=6);
        let m = match i % 4 {
            0 => ("tree", random_tree_metric(&mut r, points)),
            1 => ("sup2", random_linf_metric(&mut r, points, 2)),
            2 => ("sup3", random_linf_metric(&mut r, points, 3)),
            _ => ("graph", random_graph_metric(&mut r, points)),
        };
        out.push((format!("{} {i}", m.0), m.1));
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_posets_are_graded() {
        for p in random_graded_posets(7, 100, 12) {
            assert!(p.len() <= 12);
            assert!(p.grading().is_some());
            assert!(p.find_balanced_bowtie().is_ok());
        }
    }

    #[test]
    fn corpora_sizes() {
        assert!(cube_corpus(1, 10).len() >= 20);
        let m = metric_corpus(1, 200);
        assert!(m.len() >= 200);
        assert!(m.iter().all(|(_, m)| m.len() <= 6));
    }

    #[test]
    fn corpora_are_deterministic() {
        let a: Vec<String> = metric_corpus(5, 30).iter().map(|(_, m)| format!("{:?}", m.dist)).collect();
        let b: Vec<String> = metric_corpus(5, 30).iter().map(|(_, m)| format!("{:?}", m.dist)).collect();
        assert_eq!(a, b);
    }
}
