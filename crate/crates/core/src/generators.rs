//! Canonical posets and complexes: Boolean lattices, (noncrossing)
//! partition lattices, subspace lattices over small prime fields, patches of
//! the affine type A tiling and truncated columns.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{OrderType, OrderedComplex};
use crate::poset::Poset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("parameter too large: {0}")]
    ParameterTooLarge(String),
}

const MAX_N: usize = 8;
const MAX_SUBSPACES: u64 = 5000;

fn check_n(what: &str, n: usize) -> Result<(), GeneratorError> {
    if n > MAX_N {
        return Err(GeneratorError::ParameterTooLarge(format!(
            "{what}: n = {n} exceeds {MAX_N}"
        )));
    }
    Ok(())
}

fn subset_label(mask: u32, n: usize) -> String {
    let items: Vec<String> = (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// Subsets of `{1..n}` ordered by inclusion. Labels look like `{}` or `{1,3}`.
pub fn boolean_poset(n: usize) -> Result<Poset, GeneratorError> {
    check_n("boolean", n)?;
    let size = 1u32 << n;
    let labels: Vec<String> = (0..size).map(|m| subset_label(m, n)).collect();
    let mut pairs = Vec::new();
    for m in 0..size {
        for i in 0..n {
            if m >> i & 1 == 0 {
                pairs.push((m as usize, (m | 1 << i) as usize));
            }
        }
    }
    Ok(Poset::from_index_pairs(labels, &pairs).expect("boolean lattice"))
}

/// Set partitions of `{1..n}` as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(1, 0, &mut vec![0usize; n], &mut out);
    }
    out
}

fn blocks_of(rgs: &[usize]) -> Vec<Vec<usize>> {
    let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i);
    }
    blocks
}

fn is_noncrossing(rgs: &[usize]) -> bool {
    // a < b < c < d with a, c in one block and b, d in another
    let n = rgs.len();
    for a in 0..n {
        for b in a + 1..n {
            if rgs[b] == rgs[a] {
                continue;
            }
            for c in b + 1..n {
                if rgs[c] != rgs[a] {
                    continue;
                }
                if (c + 1..n).any(|d| rgs[d] == rgs[b]) {
                    return false;
                }
            }
        }
    }
    true
}

fn partition_label(rgs: &[usize]) -> String {
    blocks_of(rgs)
        .iter()
        .map(|b| b.iter().map(|i| (i + 1).to_string()).join(""))
        .join("|")
}

fn partition_poset(parts: Vec<Vec<usize>>) -> Poset {
    let index: HashMap<Vec<usize>, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let labels: Vec<String> = parts.iter().map(|p| partition_label(p)).collect();
    let mut pairs = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let k = p.iter().copied().max().map_or(0, |m| m + 1);
        for (b1, b2) in (0..k).tuple_combinations() {
            let merged: Vec<usize> = p.iter().map(|&b| if b == b2 { b1 } else { b }).collect();
            if let Some(&j) = index.get(&normalize_rgs(&merged)) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_index_pairs(labels, &pairs).expect("refinement order")
}

fn normalize_rgs(blocks: &[usize]) -> Vec<usize> {
    let mut map = HashMap::new();
    blocks
        .iter()
        .map(|b| {
            let next = map.len();
            *map.entry(*b).or_insert(next)
        })
        .collect()
}

/// Noncrossing partitions of `{1..n}` ordered by refinement (finest at the
/// bottom); a graded lattice of rank `n - 1`. Labels list blocks as digit
/// strings separated by `|`, e.g. `14|23`.
pub fn noncrossing_partitions(n: usize) -> Result<Poset, GeneratorError> {
    check_n("noncrossing", n)?;
    let parts: Vec<Vec<usize>> = set_partitions(n)
        .into_iter()
        .filter(|p| is_noncrossing(p))
        .collect();
    Ok(partition_poset(parts))
}

/// All set partitions of `{1..n}` ordered by refinement.
pub fn partition_lattice(n: usize) -> Result<Poset, GeneratorError> {
    check_n("partition", n)?;
    Ok(partition_poset(set_partitions(n)))
}

/// Row-reduced echelon basis over `F_p`.
fn rref(mut rows: Vec<Vec<u8>>, p: u8) -> Vec<Vec<u8>> {
    let n = rows.first().map_or(0, |r| r.len());
    let inv = |a: u8| -> u8 { (1..p).find(|&b| (a as u32 * b as u32) % p as u32 == 1).unwrap() };
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let s = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = ((*x as u32 * s as u32) % p as u32) as u8;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col] as u32;
                for c in 0..n {
                    let sub = (f * rows[rank][c] as u32) % p as u32;
                    rows[r][c] = ((rows[r][c] as u32 + p as u32 - sub) % p as u32) as u8;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

fn gaussian_binomial_sum(q: u64, n: u32) -> Option<u64> {
    // sum over k of [n choose k]_q
    let mut total: u64 = 0;
    for k in 0..=n {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..k {
            num = num.checked_mul((q as u128).checked_pow(n - i)? - 1)?;
            den = den.checked_mul((q as u128).checked_pow(i + 1)? - 1)?;
        }
        total = total.checked_add(u64::try_from(num / den).ok()?)?;
    }
    Some(total)
}

/// All subspaces of `F_q^n` (zero space and whole space included) ordered by
/// inclusion; a graded lattice of rank `n`. Labels are RREF bases such as
/// `<>`, `<100,011>`.
pub fn subspace_poset(q: u8, n: usize) -> Result<Poset, GeneratorError> {
    if q != 2 && q != 3 {
        return Err(GeneratorError::ParameterTooLarge(format!(
            "subspace: field size {q} is not 2 or 3"
        )));
    }
    let count = gaussian_binomial_sum(q as u64, n as u32).unwrap_or(u64::MAX);
    if n > MAX_N || count > MAX_SUBSPACES {
        return Err(GeneratorError::ParameterTooLarge(format!(
            "subspace: F_{q}^{n} has {count} subspaces"
        )));
    }
    let vectors: Vec<Vec<u8>> = (0..n)
        .map(|_| 0..q)
        .multi_cartesian_product()
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let label = |basis: &Vec<Vec<u8>>| {
        format!(
            "<{}>",
            basis.iter().map(|r| r.iter().map(|x| x.to_string()).join("")).join(",")
        )
    };
    let mut index: HashMap<Vec<Vec<u8>>, usize> = HashMap::new();
    let mut spaces: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
    index.insert(Vec::new(), 0);
    let mut pairs = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            let mut seen = HashSet::new();
            for v in &vectors {
                let mut rows = spaces[i].clone();
                rows.push(v.clone());
                let w = rref(rows, q);
                if w.len() == spaces[i].len() || !seen.insert(w.clone()) {
                    continue;
                }
                let j = match index.get(&w) {
                    Some(&j) => j,
                    None => {
                        spaces.push(w.clone());
                        index.insert(w, spaces.len() - 1);
                        next.push(spaces.len() - 1);
                        spaces.len() - 1
                    }
                };
                pairs.push((i, j));
            }
        }
        frontier = next;
    }
    debug_assert_eq!(spaces.len() as u64, count);
    let labels: Vec<String> = spaces.iter().map(label).collect();
    Ok(Poset::from_index_pairs(labels, &pairs).expect("inclusion order"))
}

/// Vertex label of a lattice point of `Z^{n+1}/Z(1,..,1)` normalized to last
/// coordinate 0: the first `n` coordinates joined by commas.
fn lattice_label(v: &[i64]) -> String {
    v[..v.len() - 1].iter().join(",")
}

fn polyhedral_radius(v: &[i64]) -> i64 {
    let max = v.iter().copied().max().unwrap_or(0);
    let min = v.iter().copied().min().unwrap_or(0);
    max - min
}

fn normalize_lattice(v: &mut [i64]) {
    let last = *v.last().unwrap();
    for x in v.iter_mut() {
        *x -= last;
    }
}

/// The full subcomplex of the affine type `A_n` tiling on the lattice points
/// within polyhedral distance `radius` of the origin.
///
/// Vertices are points of `Z^{n+1}/Z(1,..,1)`; the type of a vertex is its
/// coordinate sum mod `n + 1`, and simplices are cyclically ordered by type.
pub fn affine_a_patch(n: usize, radius: usize) -> Result<OrderedComplex, GeneratorError> {
    if n == 0 || n > 6 || radius > 6 || (n >= 5 && radius > 2) {
        return Err(GeneratorError::ParameterTooLarge(format!(
            "affine patch: n = {n}, radius = {radius}"
        )));
    }
    let r = radius as i64;
    let dim = n + 1;
    // points with last coordinate 0 and max - min <= r
    let mut points: Vec<Vec<i64>> = (0..n)
        .map(|_| -r..=r)
        .multi_cartesian_product()
        .map(|mut v| {
            v.push(0);
            v
        })
        .filter(|v| polyhedral_radius(v) <= r)
        .collect();
    points.sort_by_key(|v| (polyhedral_radius(v), v.clone()));
    let index: HashMap<Vec<i64>, usize> =
        points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let labels: Vec<String> = points.iter().map(|p| lattice_label(p)).collect();

    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    for start in &points {
        for perm in (0..dim).permutations(n) {
            let mut cur = start.clone();
            let mut tuple = vec![index[start]];
            for &c in &perm {
                cur[c] += 1;
                let mut key = cur.clone();
                normalize_lattice(&mut key);
                if let Some(&i) = index.get(&key) {
                    tuple.push(i);
                }
            }
            // rotate so the tuple follows increasing type from its first entry
            let set: BTreeSet<usize> = tuple.iter().copied().collect();
            if seen.insert(set) {
                tuples.push(tuple);
            }
        }
    }
    Ok(OrderedComplex::from_indices(OrderType::A, labels, tuples).expect("tiling patch"))
}

/// Type of a vertex of [`affine_a_patch`], recovered from its label.
pub fn affine_vertex_type(label: &str, n: usize) -> usize {
    let sum: i64 = label.split(',').map(|x| x.parse::<i64>().unwrap()).sum();
    sum.rem_euclid(n as i64 + 1) as usize
}

/// Lattice coordinates (last coordinate 0) of an [`affine_a_patch`] vertex.
pub fn affine_vertex_coords(label: &str) -> Vec<i64> {
    let mut v: Vec<i64> = label.split(',').map(|x| x.parse().unwrap()).collect();
    v.push(0);
    v
}

/// The column of `(n+1)`-simplices `tau_{q,r}` for `|q| <= depth`.
///
/// Column vertices form a sequence `v_m` (`m = q(n+1) + i`); each cell is a
/// window of `n + 2` consecutive vertices, ordered by `m`. Labels are the
/// integers `m`.
pub fn column_complex(n: usize, depth: usize) -> Result<OrderedComplex, GeneratorError> {
    if n == 0 || n > MAX_N || depth > 64 {
        return Err(GeneratorError::ParameterTooLarge(format!(
            "column: n = {n}, depth = {depth}"
        )));
    }
    let width = n as i64 + 1;
    let d = depth as i64;
    let first = -d * width;
    let last = d * width + n as i64 + n as i64 + 1;
    let labels: Vec<String> = (first..=last).map(|m| m.to_string()).collect();
    let mut tuples = Vec::new();
    for q in -d..=d {
        for r in 0..width {
            let m0 = q * width + r;
            tuples.push(
                (m0..=m0 + width)
                    .map(|m| (m - first) as usize)
                    .collect::<Vec<_>>(),
            );
        }
    }
    Ok(OrderedComplex::from_indices(OrderType::C, labels, tuples).expect("column"))
}

/// The diagonal translation of [`column_complex`] as a label map, restricted
/// to vertices whose image is present.
pub fn column_shift(cx: &OrderedComplex, n: usize) -> Vec<(String, String)> {
    let present: HashSet<&str> = cx.labels().iter().map(|s| s.as_str()).collect();
    cx.labels()
        .iter()
        .filter_map(|l| {
            let m: i64 = l.parse().ok()?;
            let img = (m + n as i64 + 1).to_string();
            present.contains(img.as_str()).then(|| (l.clone(), img))
        })
        .collect()
}

/// The integers `lo..=hi` as a path of ordered edges.
pub fn integer_line(lo: i64, hi: i64) -> OrderedComplex {
    let labels: Vec<String> = (lo..=hi).map(|m| m.to_string()).collect();
    let tuples: Vec<Vec<usize>> = (0..labels.len().saturating_sub(1))
        .map(|i| vec![i, i + 1])
        .collect();
    OrderedComplex::from_indices(OrderType::C, labels, tuples).expect("integer line")
}
