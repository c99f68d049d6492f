use std::collections::BTreeSet;

use itertools::Itertools;
use proptest::prelude::*;

use cublink::complex::order_complex;
use cublink::corpus::{canonical_posets, metric_corpus, random_linf_metric, rng};
use cublink::generators::{affine_a_patch, boolean_poset};
use cublink::groups::{
    compose, coset_label, local_development, perm_string, s4_example, Perm, SimplexOfGroups,
};
use cublink::link::{check_type_a, check_type_c};
use cublink::metric::{
    approx_distance, chamber_distance, distance_in_chamber, linf_norm, polyhedral_norm, Point,
};
use cublink::rational::{qi, Q};
use cublink::tightspan::{dress_dimension_test, tight_span};

fn centred(v: &[i64]) -> Vec<Q> {
    let n = v.len() as i64;
    let s: i64 = v.iter().sum();
    v.iter().map(|&x| Q::new((x * n - s).into(), n.into())).collect()
}

fn small_vec(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, len)
}

proptest! {
    #[test]
    fn polyhedral_norm_is_a_norm(a in small_vec(4), b in small_vec(4), t in -5i64..=5) {
        let (x, y) = (centred(&a), centred(&b));
        let nx = polyhedral_norm(&x).unwrap();
        prop_assert!(nx >= qi(0));
        prop_assert_eq!(nx == qi(0), x.iter().all(|c| *c == qi(0)));
        let scaled: Vec<Q> = x.iter().map(|c| c * qi(t)).collect();
        prop_assert_eq!(polyhedral_norm(&scaled).unwrap(), &nx * qi(t.abs()));
        let sum: Vec<Q> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        prop_assert!(polyhedral_norm(&sum).unwrap() <= &nx + polyhedral_norm(&y).unwrap());
    }

    #[test]
    fn polyhedral_norm_is_spread_on_the_hyperplane(a in small_vec(5)) {
        let x = centred(&a);
        let spread = x.iter().max().unwrap() - x.iter().min().unwrap();
        let n = polyhedral_norm(&x).unwrap();
        prop_assert_eq!(&n, &spread);
        prop_assert!(linf_norm(&x) <= n && n <= linf_norm(&x) * qi(2));
    }

    #[test]
    fn polyhedral_norm_is_permutation_invariant(a in small_vec(4), perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let x = centred(&a);
        let y: Vec<Q> = perm.iter().map(|&i| x[i].clone()).collect();
        prop_assert_eq!(polyhedral_norm(&x).unwrap(), polyhedral_norm(&y).unwrap());
    }

    #[test]
    fn off_hyperplane_is_rejected(a in small_vec(3)) {
        let mut x: Vec<Q> = a.iter().map(|&c| qi(c)).collect();
        let s: i64 = a.iter().sum();
        if s == 0 {
            x[0] += qi(1);
        }
        prop_assert!(polyhedral_norm(&x).is_err());
    }

    #[test]
    fn chamber_distance_ignores_the_chamber(seed in 0u64..1000) {
        let x = affine_a_patch(2, 2).unwrap();
        let chambers = x.maximal_simplices();
        let c = &chambers[seed as usize % chambers.len()];
        let w1: Vec<i64> = (0..3).map(|k| ((seed >> (2 * k)) % 4 + 1) as i64).collect();
        let w2: Vec<i64> = (0..3).map(|k| ((seed >> (2 * k + 6)) % 4) as i64).collect();
        let t1: i64 = w1.iter().sum();
        let t2: i64 = w2.iter().sum();
        prop_assume!(t2 > 0);
        // restrict the second point to a face so that it lies in several chambers
        let p = Point::from_weights(c.iter().zip(&w1).map(|(&v, &w)| (v, Q::new(w.into(), t1.into())))).unwrap();
        let q = Point::from_weights(c.iter().zip(&w2).map(|(&v, &w)| (v, Q::new(w.into(), t2.into())))).unwrap();
        let d = chamber_distance(&x, &q, &q).unwrap();
        prop_assert_eq!(d, qi(0));
        let d = chamber_distance(&x, &p, &q).unwrap();
        for other in chambers.iter().filter(|ch| q.support().iter().all(|v| ch.contains(v)) && p.support().iter().all(|v| ch.contains(v))) {
            prop_assert_eq!(&distance_in_chamber(&x, other, &p, &q), &d);
        }
        prop_assert_eq!(chamber_distance(&x, &q, &p).unwrap(), d);
    }
}

#[test]
fn face_distance_matches_lower_dimensional_complex() {
    // a face of a boolean chamber is a chamber of a smaller boolean lattice
    let big = order_complex(&boolean_poset(3).unwrap());
    let small = order_complex(&boolean_poset(2).unwrap());
    let labels = ["{}", "{1}", "{1,2}"];
    let big_face: Vec<usize> = labels.iter().map(|l| big.index_of(l).unwrap()).collect();
    let small_face: Vec<usize> = labels.iter().map(|l| small.index_of(l).unwrap()).collect();
    let weights = [[1, 1, 2], [3, 0, 1], [0, 2, 2]];
    for (a, b) in weights.iter().tuple_combinations() {
        let pt = |face: &[usize], w: &[i64; 3]| {
            let t: i64 = w.iter().sum();
            Point::from_weights(face.iter().zip(w).map(|(&v, &x)| (v, Q::new(x.into(), t.into())))).unwrap()
        };
        assert_eq!(
            chamber_distance(&big, &pt(&big_face, a), &pt(&big_face, b)).unwrap(),
            chamber_distance(&small, &pt(&small_face, a), &pt(&small_face, b)).unwrap()
        );
    }
}

#[test]
fn refining_the_mesh_never_increases_distance() {
    let x = affine_a_patch(2, 2).unwrap();
    let pairs = [("-1,-2", "2,1"), ("0,-2", "1,2"), ("-2,-2", "2,2")];
    for (a, b) in pairs {
        let p = Point::vertex(x.index_of(a).unwrap());
        let q = Point::vertex(x.index_of(b).unwrap());
        let ds: Vec<Q> = [2, 4, 8]
            .iter()
            .map(|&m| approx_distance(&x, &p, &q, &Q::new(1.into(), m.into())).unwrap())
            .collect();
        assert!(ds.windows(2).all(|w| w[1] <= w[0]), "{a} {b}: {ds:?}");
    }
}

#[test]
fn approx_distance_upper_bounds_exact_in_a_chamber() {
    let x = affine_a_patch(3, 1).unwrap();
    let c = &x.maximal_simplices()[0];
    let p = Point::from_weights(c.iter().zip([1, 2, 3, 4]).map(|(&v, w)| (v, Q::new(w.into(), 10.into())))).unwrap();
    let q = Point::vertex(c[2]);
    let exact = chamber_distance(&x, &p, &q).unwrap();
    let approx = approx_distance(&x, &p, &q, &Q::new(1.into(), 4.into())).unwrap();
    assert!(approx >= exact);
    assert_eq!(approx, exact);
}

#[test]
fn dress_is_monotone_and_consistent() {
    let mut r = rng(11);
    let mut metrics: Vec<_> = metric_corpus(5, 40).into_iter().map(|(_, m)| m).collect();
    metrics.extend((0..10).map(|_| random_linf_metric(&mut r, 6, 3)));
    for m in &metrics {
        let t = tight_span(m).unwrap();
        assert!(t.dimension <= m.len() / 2);
        let d: Vec<bool> = (1..=3).map(|n| dress_dimension_test(m, n).unwrap()).collect();
        assert!(d.windows(2).all(|w| !w[0] || w[1]), "{d:?}");
        for (n, holds) in (1..=3).zip(&d) {
            assert_eq!(*holds, t.dimension <= n, "n = {n}, {m:?}");
        }
    }
}

/// Applies `g` on the left to every coset vertex of the local development.
fn translate(s: &SimplexOfGroups, i: usize, g: &Perm, label: &str) -> String {
    let Some((j, rep)) = label.split_once(':') else {
        return label.to_string();
    };
    let j: usize = j.parse().unwrap();
    let rep: Perm = rep.bytes().map(|b| (b - b'1') as usize).collect();
    let h = s.group(i, 1 << i | 1 << j);
    coset_label(j, &h.coset_rep(&compose(g, &rep)))
}

#[test]
fn local_development_is_vertex_transitive() {
    let s = s4_example();
    for i in 0..s.n() {
        let l = local_development(&s, i).unwrap();
        let chambers: BTreeSet<Vec<String>> =
            l.maximal_simplices().iter().map(|c| l.labels_of(&l.ordered_face(c))).collect();
        let gi = s.vertex_group(i);
        for g in gi.elements().iter().step_by(5) {
            let moved: BTreeSet<Vec<String>> = chambers
                .iter()
                .map(|c| c.iter().map(|v| translate(&s, i, g, v)).collect())
                .collect();
            assert_eq!(moved, chambers, "vertex {i}, g = {}", perm_string(g));
        }
    }
}

#[test]
fn coset_counts_satisfy_lagrange() {
    let s = s4_example();
    for i in 0..s.n() {
        let gi = s.vertex_group(i);
        for j in (0..s.n()).filter(|&j| j != i) {
            let h = s.group(i, 1 << i | 1 << j);
            assert_eq!(gi.left_cosets(h).len() * h.order(), gi.order());
        }
    }
}

#[test]
fn verdicts_are_deterministic() {
    let mut outputs = Vec::new();
    for _ in 0..3 {
        let mut row = Vec::new();
        for (_, p) in canonical_posets() {
            row.push(check_type_c(&order_complex(&p)).map_err(|e| e.to_string()));
        }
        row.push(check_type_a(&affine_a_patch(3, 2).unwrap()).map_err(|e| e.to_string()));
        outputs.push(row);
    }
    assert!(outputs.iter().all_equal());
}

#[cfg(feature = "parallel")]
#[test]
fn verdicts_do_not_depend_on_thread_count() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let mut out: Vec<String> = canonical_posets()
                .iter()
                .map(|(_, p)| format!("{:?}", check_type_c(&order_complex(p))))
                .collect();
            out.push(format!("{:?}", cublink::groups::check_conditions(&s4_example())));
            out
        })
    };
    assert_eq!(run(1), run(4));
}
