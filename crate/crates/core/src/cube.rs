//! Finite cube complexes, their barycentric subdivision as an ordered
//! simplicial complex, and a direct link test at the original vertices.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{order_complex, OrderedComplex};
use crate::poset::Poset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("malformed cube complex: {0}")]
    MalformedCubeComplex(String),
}

/// JSON form `{"cubes": [[v0, v1, ...], ...]}`. A `k`-cube lists its `2^k`
/// vertices so that bit `i` of a position is the `i`-th coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeDoc {
    pub cubes: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
struct Face {
    verts: Vec<usize>,
    dim: usize,
    edges: BTreeSet<(usize, usize)>,
}

const MAX_CUBE_DIM: usize = 6;

#[derive(Debug, Clone)]
pub struct CubeComplex {
    labels: Vec<String>,
    faces: Vec<Face>,
    face_index: HashMap<Vec<usize>, usize>,
    // (face, coface) with codimension one
    incidences: BTreeSet<(usize, usize)>,
}

/// Why the link of a vertex is not a flag simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LinkDefect {
    /// Two distinct faces through the vertex span the same edges there.
    NotSimplicial { faces: [String; 2] },
    /// Pairwise adjacent link vertices (edges at the vertex) spanning no face.
    NotFlag { edges: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GromovReport {
    pub pass: bool,
    pub failures: Vec<(String, LinkDefect)>,
}

impl CubeComplex {
    pub fn new<S: AsRef<str>>(cubes: &[Vec<S>]) -> Result<Self, CubeError> {
        let mut labels: Vec<String> = cubes
            .iter()
            .flatten()
            .map(|s| s.as_ref().to_string())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        labels.sort();
        if let Some(l) = labels.iter().find(|l| l.starts_with('{')) {
            return Err(CubeError::MalformedCubeComplex(format!(
                "vertex label `{l}` clashes with face labels"
            )));
        }
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut cx = CubeComplex {
            labels: labels.clone(),
            faces: Vec::new(),
            face_index: HashMap::new(),
            incidences: BTreeSet::new(),
        };
        for cube in cubes {
            let len = cube.len();
            if len == 0 || !len.is_power_of_two() {
                return Err(CubeError::MalformedCubeComplex(format!(
                    "cube with {len} vertices"
                )));
            }
            let k = len.trailing_zeros() as usize;
            if k > MAX_CUBE_DIM {
                return Err(CubeError::MalformedCubeComplex(format!(
                    "cube of dimension {k} exceeds {MAX_CUBE_DIM}"
                )));
            }
            let vs: Vec<usize> = cube.iter().map(|v| index[v.as_ref()]).collect();
            if vs.iter().collect::<BTreeSet<_>>().len() != len {
                return Err(CubeError::MalformedCubeComplex(format!(
                    "cube {:?} repeats a vertex",
                    cube.iter().map(|v| v.as_ref()).collect_vec()
                )));
            }
            cx.add_cube(&vs, k)?;
        }
        Ok(cx)
    }

    pub fn from_doc(doc: &CubeDoc) -> Result<Self, CubeError> {
        Self::new(&doc.cubes)
    }

    fn add_cube(&mut self, vs: &[usize], k: usize) -> Result<(), CubeError> {
        // a face is given by a set of free coordinates and values on the rest
        let mut ids: HashMap<(u32, u32), usize> = HashMap::new();
        for free in 0u32..(1 << k) {
            let fixed_mask = !free & ((1 << k) - 1);
            for fixed_vals in 0u32..(1 << k) {
                if fixed_vals & !fixed_mask != 0 {
                    continue;
                }
                let positions: Vec<usize> = (0..1usize << k)
                    .filter(|&p| (p as u32) & fixed_mask == fixed_vals)
                    .collect();
                let mut edges = BTreeSet::new();
                for &p in &positions {
                    for bit in 0..k {
                        if free >> bit & 1 == 1 && p >> bit & 1 == 0 {
                            let (a, b) = (vs[p], vs[p | 1 << bit]);
                            edges.insert((a.min(b), a.max(b)));
                        }
                    }
                }
                let mut verts: Vec<usize> = positions.iter().map(|&p| vs[p]).collect();
                verts.sort_unstable();
                let dim = free.count_ones() as usize;
                let id = match self.face_index.get(&verts) {
                    Some(&id) => {
                        if self.faces[id].edges != edges || self.faces[id].dim != dim {
                            return Err(CubeError::MalformedCubeComplex(format!(
                                "vertex set {:?} carries two different cube structures",
                                verts.iter().map(|&v| &self.labels[v]).collect_vec()
                            )));
                        }
                        id
                    }
                    None => {
                        self.faces.push(Face {
                            verts: verts.clone(),
                            dim,
                            edges,
                        });
                        self.face_index.insert(verts, self.faces.len() - 1);
                        self.faces.len() - 1
                    }
                };
                ids.insert((free, fixed_vals), id);
            }
        }
        for (&(free, vals), &id) in &ids {
            for bit in 0..k as u32 {
                if free >> bit & 1 == 1 {
                    let sub_free = free & !(1 << bit);
                    for v in [0, 1u32 << bit] {
                        let sub = ids[&(sub_free, vals | v)];
                        self.incidences.insert((sub, id));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn num_cubes_of_dim(&self, d: usize) -> usize {
        self.faces.iter().filter(|f| f.dim == d).count()
    }

    fn face_label(&self, f: &Face) -> String {
        if f.dim == 0 {
            self.labels[f.verts[0]].clone()
        } else {
            let mut names: Vec<&str> = f.verts.iter().map(|&v| self.labels[v].as_str()).collect();
            names.sort_unstable();
            format!("{{{}}}", names.join(","))
        }
    }

    /// Faces ordered by the face relation of the cubes they come from.
    pub fn face_poset(&self) -> Poset {
        let labels: Vec<String> = self.faces.iter().map(|f| self.face_label(f)).collect();
        let pairs: Vec<(usize, usize)> = self.incidences.iter().copied().collect();
        Poset::from_index_pairs(labels, &pairs).expect("face relation is an order")
    }

    /// Order complex of the face poset; simplices are ordered by face
    /// dimension.
    pub fn barycentric_subdivision(&self) -> OrderedComplex {
        order_complex(&self.face_poset())
    }

    /// Tests at every vertex that the link is a flag simplicial complex.
    pub fn gromov_check(&self) -> GromovReport {
        let mut failures = Vec::new();
        for v in 0..self.labels.len() {
            if let Some(defect) = self.link_defect(v) {
                failures.push((self.labels[v].clone(), defect));
            }
        }
        GromovReport {
            pass: failures.is_empty(),
            failures,
        }
    }

    fn link_defect(&self, v: usize) -> Option<LinkDefect> {
        let edges_at: Vec<usize> = self
            .faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.dim == 1 && f.verts.contains(&v))
            .map(|(i, _)| i)
            .collect();
        let pos: HashMap<usize, usize> = edges_at.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut simplices: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut faces_at: Vec<usize> = (0..self.faces.len())
            .filter(|&i| self.faces[i].dim >= 1 && self.faces[i].verts.contains(&v))
            .collect();
        faces_at.sort_by_key(|&i| (self.faces[i].dim, self.face_label(&self.faces[i])));
        for &f in &faces_at {
            let mut simplex: Vec<usize> = self.faces[f]
                .edges
                .iter()
                .filter(|(a, b)| *a == v || *b == v)
                .map(|&(a, b)| pos[&self.face_index[&vec![a, b]]])
                .collect();
            simplex.sort_unstable();
            if let Some(&other) = simplices.get(&simplex) {
                return Some(LinkDefect::NotSimplicial {
                    faces: [
                        self.face_label(&self.faces[other]),
                        self.face_label(&self.faces[f]),
                    ],
                });
            }
            simplices.insert(simplex, f);
        }
        let m = edges_at.len();
        let mut adj = vec![FixedBitSet::with_capacity(m); m];
        for s in simplices.keys().filter(|s| s.len() == 2) {
            adj[s[0]].insert(s[1]);
            adj[s[1]].insert(s[0]);
        }
        // smallest pairwise adjacent set that is not a simplex
        for k in 3..=m {
            for c in (0..m).combinations(k) {
                let clique = c
                    .iter()
                    .tuple_combinations()
                    .all(|(&a, &b)| adj[a].contains(b));
                if clique && !simplices.contains_key(&c) {
                    let mut names: Vec<String> = c
                        .iter()
                        .map(|&i| self.face_label(&self.faces[edges_at[i]]))
                        .collect();
                    names.sort();
                    return Some(LinkDefect::NotFlag { edges: names });
                }
            }
        }
        None
    }
}

/// Label of an integer grid point, coordinates joined by commas.
pub fn grid_label(p: &[i64]) -> String {
    p.iter().join(",")
}

/// The unit cube with lower corner `p` in the standard cubulation of `Z^d`,
/// as a binary-ordered vertex list.
pub fn unit_cube(p: &[i64]) -> Vec<String> {
    let d = p.len();
    (0..1usize << d)
        .map(|bits| {
            let q: Vec<i64> = (0..d).map(|i| p[i] + (bits >> i & 1) as i64).collect();
            grid_label(&q)
        })
        .collect()
}

/// Square with lower corner `p` spanned by coordinate directions `i < j`.
pub fn unit_square(p: &[i64], i: usize, j: usize) -> Vec<String> {
    [(0, 0), (1, 0), (0, 1), (1, 1)]
        .iter()
        .map(|&(a, b)| {
            let mut q = p.to_vec();
            q[i] += a;
            q[j] += b;
            grid_label(&q)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(cubes: &[&[&str]]) -> CubeComplex {
        let c: Vec<Vec<&str>> = cubes.iter().map(|c| c.to_vec()).collect();
        CubeComplex::new(&c).unwrap()
    }

    #[test]
    fn one_square() {
        let c = cc(&[&["a", "b", "c", "d"]]);
        assert_eq!(c.num_faces(), 9);
        let x = c.barycentric_subdivision();
        assert_eq!(x.num_vertices(), 9);
        assert_eq!(x.maximal_simplices().len(), 8);
        assert!(x.index_of("{a,b}").is_ok());
        assert!(x.index_of("{a,d}").is_err());
        assert!(c.gromov_check().pass);
    }

    #[test]
    fn one_three_cube() {
        let cube = unit_cube(&[0, 0, 0]);
        let c = CubeComplex::new(&[cube]).unwrap();
        assert_eq!(c.num_faces(), 27);
        let x = c.barycentric_subdivision();
        assert_eq!(x.maximal_simplices().len(), 48);
        assert!(c.gromov_check().pass);
    }

    #[test]
    fn empty_complex() {
        let c = CubeComplex::new::<String>(&[]).unwrap();
        assert_eq!(c.barycentric_subdivision().num_vertices(), 0);
        assert!(c.gromov_check().pass);
    }

    #[test]
    fn three_squares_at_a_corner() {
        let o = [0, 0, 0];
        let c = CubeComplex::new(&[
            unit_square(&o, 0, 1),
            unit_square(&o, 0, 2),
            unit_square(&o, 1, 2),
        ])
        .unwrap();
        let r = c.gromov_check();
        assert!(!r.pass);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].0, "0,0,0");
        assert!(matches!(r.failures[0].1, LinkDefect::NotFlag { ref edges } if edges.len() == 3));
    }

    #[test]
    fn squares_sharing_two_edges() {
        let c = cc(&[&["v", "a", "b", "x"], &["v", "a", "b", "y"]]);
        let r = c.gromov_check();
        assert!(!r.pass);
        assert!(matches!(r.failures[0].1, LinkDefect::NotSimplicial { .. }));
    }

    #[test]
    fn malformed_inputs() {
        let bad = |cubes: &[&[&str]]| {
            let c: Vec<Vec<&str>> = cubes.iter().map(|c| c.to_vec()).collect();
            CubeComplex::new(&c).unwrap_err()
        };
        assert!(matches!(
            bad(&[&["a", "b", "c"]]),
            CubeError::MalformedCubeComplex(_)
        ));
        assert!(matches!(
            bad(&[&["a", "a"]]),
            CubeError::MalformedCubeComplex(_)
        ));
        // same four vertices, different diagonals
        assert!(matches!(
            bad(&[&["a", "b", "c", "d"], &["a", "b", "d", "c"]]),
            CubeError::MalformedCubeComplex(_)
        ));
    }
}
