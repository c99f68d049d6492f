//! Finite posets given by (possibly redundant) cover relations.
//!
//! Elements are addressed by dense indices; labels are kept for I/O and for
//! deterministic witness ordering. The strict order is stored eagerly as up-
//! and down-sets, and the cover relation is always the Hasse reduction of the
//! input pairs.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("relation is not an order: cycle through {0:?}")]
    CycleDetected(Vec<String>),
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset has no minimum")]
    NoMinimum,
}

/// Four elements `a, b < c, d` with nothing in between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bowtie {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Bowtie {
    pub fn labels(&self, p: &Poset) -> [String; 4] {
        [self.a, self.b, self.c, self.d].map(|i| p.label(i).to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// Both sides of the balanced-bowtie lattice criterion, computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLatticeReport {
    pub bounded_is_lattice: bool,
    pub balanced_bowtie: Option<Bowtie>,
}

impl BoundedLatticeReport {
    pub fn agrees(&self) -> bool {
        self.bounded_is_lattice == self.balanced_bowtie.is_none()
    }
}

/// JSON document `{"elements": [...], "covers": [[lo, hi], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    // topological order, lower elements first
    topo: Vec<usize>,
    // position of each element in label order
    label_rank: Vec<usize>,
}

impl Poset {
    /// Builds a poset from labels and order pairs `(lower, upper)`.
    ///
    /// The pairs may be redundant; they are closed transitively and reduced to
    /// the Hasse diagram.
    pub fn from_covers<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
    ) -> Result<Poset, PosetError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (lo, hi) in pairs {
            let lo = *index
                .get(lo.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(lo.as_ref().to_string()))?;
            let hi = *index
                .get(hi.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(hi.as_ref().to_string()))?;
            idx_pairs.push((lo, hi));
        }
        Self::build(labels, index, &idx_pairs)
    }

    /// Same as [`Poset::from_covers`] with pairs given by index.
    pub fn from_index_pairs(
        labels: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        if let Some(&(lo, hi)) = pairs
            .iter()
            .find(|(lo, hi)| *lo >= labels.len() || *hi >= labels.len())
        {
            return Err(PosetError::UnknownLabel(format!("#{}", lo.max(hi))));
        }
        Self::build(labels, index, pairs)
    }

    pub fn from_doc(doc: &PosetDoc) -> Result<Poset, PosetError> {
        Self::from_covers(&doc.elements, &doc.covers)
    }

    pub fn to_doc(&self) -> PosetDoc {
        PosetDoc {
            elements: self.labels.clone(),
            covers: self
                .covers()
                .into_iter()
                .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    fn build(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        pairs: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        let n = labels.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        let mut seen = HashSet::new();
        for &(lo, hi) in pairs {
            if lo == hi {
                return Err(PosetError::CycleDetected(vec![labels[lo].clone()]));
            }
            if seen.insert((lo, hi)) {
                succ[lo].push(hi);
                indeg[hi] += 1;
            }
        }
        // Kahn; ties broken by index so the order is deterministic
        let mut topo = Vec::with_capacity(n);
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(v) = ready.pop_first() {
            topo.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if topo.len() < n {
            let cycle = find_cycle(&succ, &indeg);
            return Err(PosetError::CycleDetected(
                cycle.into_iter().map(|i| labels[i].clone()).collect(),
            ));
        }

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in topo.iter().rev() {
            let mut acc = FixedBitSet::with_capacity(n);
            for &w in &succ[v] {
                acc.insert(w);
                acc.union_with(&up[w]);
            }
            up[v] = acc;
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for v in 0..n {
            for w in up[v].ones() {
                down[w].insert(v);
            }
        }
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for v in 0..n {
            let mut two_step = FixedBitSet::with_capacity(n);
            for &w in &succ[v] {
                two_step.union_with(&up[w]);
            }
            for w in up[v].ones() {
                if !two_step.contains(w) {
                    upper_covers[v].push(w);
                    lower_covers[w].push(v);
                }
            }
        }
        let mut by_label: Vec<usize> = (0..n).collect();
        by_label.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut label_rank = vec![0; n];
        for (pos, &i) in by_label.iter().enumerate() {
            label_rank[i] = pos;
        }
        for covers in upper_covers.iter_mut().chain(lower_covers.iter_mut()) {
            covers.sort_by_key(|&i| label_rank[i]);
        }
        Ok(Poset {
            labels,
            index,
            up,
            down,
            upper_covers,
            lower_covers,
            topo,
            label_rank,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, PosetError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
    }

    /// Position of `i` when elements are sorted by label.
    pub fn label_position(&self, i: usize) -> usize {
        self.label_rank[i]
    }

    /// Element indices sorted by label.
    pub fn in_label_order(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by_key(|&i| self.label_rank[i]);
        v
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    /// Elements strictly above `a`.
    pub fn strict_up(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// Elements strictly below `a`.
    pub fn strict_down(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// All cover pairs `(lower, upper)` in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|a| self.upper_covers[a].iter().map(move |&b| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    fn closed_up(&self, a: usize) -> FixedBitSet {
        let mut s = self.up[a].clone();
        s.insert(a);
        s
    }

    fn closed_down(&self, a: usize) -> FixedBitSet {
        let mut s = self.down[a].clone();
        s.insert(a);
        s
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.down[i].count_ones(..) == 0)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.up[i].count_ones(..) == 0)
            .collect()
    }

    pub fn minimum(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    pub fn maximum(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// Unique maximal element of `set`, which is then its maximum.
    fn greatest_in(&self, set: &FixedBitSet) -> Option<usize> {
        let mut found = None;
        for z in set.ones() {
            if self.up[z].is_disjoint(set) {
                if found.is_some() {
                    return None;
                }
                found = Some(z);
            }
        }
        found
    }

    fn least_in(&self, set: &FixedBitSet) -> Option<usize> {
        let mut found = None;
        for z in set.ones() {
            if self.down[z].is_disjoint(set) {
                if found.is_some() {
                    return None;
                }
                found = Some(z);
            }
        }
        found
    }

    /// Greatest common lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut lb = self.closed_down(a);
        lb.intersect_with(&self.closed_down(b));
        self.greatest_in(&lb)
    }

    /// Least common upper bound of `a` and `b`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let mut ub = self.closed_up(a);
        ub.intersect_with(&self.closed_up(b));
        self.least_in(&ub)
    }

    pub fn meet_labels(&self, a: &str, b: &str) -> Result<Option<&str>, PosetError> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.meet(a, b).map(|m| self.label(m)))
    }

    pub fn join_labels(&self, a: &str, b: &str) -> Result<Option<&str>, PosetError> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.join(a, b).map(|m| self.label(m)))
    }

    pub fn is_meet_semilattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.meet(a, b).is_some()))
    }

    pub fn is_join_semilattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.join(a, b).is_some()))
    }

    pub fn is_lattice(&self) -> bool {
        self.is_meet_semilattice() && self.is_join_semilattice()
    }

    /// Length of the longest chain from a minimal element up to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.len()];
        for &v in &self.topo {
            h[v] = self.lower_covers[v]
                .iter()
                .map(|&w| h[w] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// True iff, for every comparable pair, all maximal chains between them
    /// have the same number of cover steps.
    pub fn is_graded(&self) -> bool {
        let n = self.len();
        let mut shortest = vec![usize::MAX; n];
        let mut longest = vec![0usize; n];
        for x in 0..n {
            if self.up[x].count_ones(..) == 0 {
                continue;
            }
            shortest[x] = 0;
            longest[x] = 0;
            for &y in &self.topo {
                if !self.up[x].contains(y) {
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for &z in &self.lower_covers[y] {
                    if z == x || self.up[x].contains(z) {
                        lo = lo.min(shortest[z] + 1);
                        hi = hi.max(longest[z] + 1);
                    }
                }
                if lo != hi {
                    return false;
                }
                shortest[y] = lo;
                longest[y] = hi;
            }
        }
        true
    }

    /// Rank of every element when the poset with a fresh bottom and top
    /// adjoined is graded: each cover raises the rank by one and all maximal
    /// elements share the same rank. `None` otherwise.
    pub fn grading(&self) -> Option<Vec<usize>> {
        let h = self.heights();
        for a in 0..self.len() {
            if self.upper_covers[a].iter().any(|&b| h[b] != h[a] + 1) {
                return None;
            }
        }
        let tops: HashSet<usize> = self.maximal_elements().iter().map(|&m| h[m]).collect();
        (tops.len() <= 1).then_some(h)
    }

    /// Common chain length from the minimum to `x`.
    pub fn rank(&self, x: usize) -> Result<usize, PosetError> {
        let min = self.minimum().ok_or(PosetError::NoMinimum)?;
        if !self.is_graded() {
            return Err(PosetError::NotGraded);
        }
        debug_assert!(self.le(min, x));
        Ok(self.heights()[x])
    }

    /// Returns whether `a, b < c, d` with no element between the pairs.
    pub fn is_bowtie(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        if !(self.lt(a, c) && self.lt(a, d) && self.lt(b, c) && self.lt(b, d)) {
            return false;
        }
        let mut between = self.closed_up(a);
        between.intersect_with(&self.closed_up(b));
        between.intersect_with(&self.closed_down(c));
        between.intersect_with(&self.closed_down(d));
        between.count_ones(..) == 0
    }

    /// First bowtie in the order (h(c)+h(d), labels of c, d, a, b), where h
    /// is the height.
    pub fn find_bowtie(&self) -> Option<Bowtie> {
        let h = self.heights();
        self.search_bowtie(&h, false)
    }

    /// First bowtie with `rk(a) = rk(b)` and `rk(c) = rk(d)`.
    ///
    /// Requires the poset with bounds adjoined to be graded.
    pub fn find_balanced_bowtie(&self) -> Result<Option<Bowtie>, PosetError> {
        let rk = self.grading().ok_or(PosetError::NotGraded)?;
        if !self.is_graded() {
            return Err(PosetError::NotGraded);
        }
        Ok(self.search_bowtie(&rk, true))
    }

    fn search_bowtie(&self, h: &[usize], balanced: bool) -> Option<Bowtie> {
        let n = self.len();
        let mut tops: Vec<(usize, usize)> = Vec::new();
        for c in 0..n {
            for d in 0..n {
                if self.label_rank[c] < self.label_rank[d]
                    && !self.comparable(c, d)
                    && (!balanced || h[c] == h[d])
                {
                    tops.push((c, d));
                }
            }
        }
        tops.sort_by_key(|&(c, d)| (h[c] + h[d], self.label_rank[c], self.label_rank[d]));
        for (c, d) in tops {
            let mut lb = self.down[c].clone();
            lb.intersect_with(&self.down[d]);
            if lb.count_ones(..) < 2 || self.greatest_in(&lb).is_some() && !balanced {
                continue;
            }
            let mut cands: Vec<usize> = lb.ones().collect();
            cands.sort_by_key(|&i| self.label_rank[i]);
            for (i, &a) in cands.iter().enumerate() {
                for &b in &cands[i + 1..] {
                    if balanced && h[a] != h[b] {
                        continue;
                    }
                    let mut ub = self.closed_up(a);
                    ub.intersect_with(&self.closed_up(b));
                    if ub.is_disjoint(&lb) {
                        return Some(Bowtie { a, b, c, d });
                    }
                }
            }
        }
        None
    }

    /// Evaluates both sides of the bounded-lattice criterion: whether the
    /// poset with fresh bounds is a lattice, and whether it has a balanced
    /// bowtie.
    pub fn bounded_lattice_report(&self) -> Result<BoundedLatticeReport, PosetError> {
        let balanced_bowtie = self.find_balanced_bowtie()?;
        let (bounded, _, _) = self.with_bounds();
        Ok(BoundedLatticeReport {
            bounded_is_lattice: bounded.is_lattice(),
            balanced_bowtie,
        })
    }

    /// First triple (in label order) that is pairwise bounded in `dir` but
    /// has no common bound.
    pub fn flag_condition(&self, dir: Direction) -> Option<[usize; 3]> {
        let n = self.len();
        let cone = |a: usize| match dir {
            Direction::Up => self.closed_up(a),
            Direction::Down => self.closed_down(a),
        };
        let cones: Vec<FixedBitSet> = (0..n).map(cone).collect();
        let order = self.in_label_order();
        let mut bounded = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for b in 0..n {
                if !cones[a].is_disjoint(&cones[b]) {
                    bounded[a].insert(b);
                }
            }
        }
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if !bounded[a].contains(b) {
                    continue;
                }
                let mut ab = cones[a].clone();
                ab.intersect_with(&cones[b]);
                for &c in &order[j + 1..] {
                    if bounded[a].contains(c) && bounded[b].contains(c) && ab.is_disjoint(&cones[c])
                    {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Inserts fresh chains into every cover whose longest-chain rank gap is
    /// at least two. The result is graded and contains the input as an
    /// induced subposet.
    pub fn grade_completion(&self) -> Result<Poset, PosetError> {
        self.minimum().ok_or(PosetError::NoMinimum)?;
        let r = self.heights();
        let mut labels = self.labels.clone();
        let mut taken: HashSet<String> = labels.iter().cloned().collect();
        let mut pairs = Vec::new();
        for (x, y) in self.covers() {
            let gap = r[y] - r[x];
            if gap < 2 {
                pairs.push((x, y));
                continue;
            }
            let mut prev = x;
            for step in 1..gap {
                let mut name = format!("{}~{}#{}", self.labels[x], self.labels[y], step);
                while taken.contains(&name) {
                    name.push('\'');
                }
                taken.insert(name.clone());
                labels.push(name);
                let fresh = labels.len() - 1;
                pairs.push((prev, fresh));
                prev = fresh;
            }
            pairs.push((prev, y));
        }
        Poset::from_index_pairs(labels, &pairs)
    }

    fn fresh_label(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index.contains_key(&name) {
            name.insert(0, '_');
        }
        name
    }

    /// The poset with a fresh minimum and maximum adjoined; returns the new
    /// poset and the indices of the two new elements.
    pub fn with_bounds(&self) -> (Poset, usize, usize) {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(self.fresh_label("_0"));
        labels.push(self.fresh_label("_1"));
        let (bot, top) = (n, n + 1);
        let mut pairs = self.covers();
        pairs.extend((0..n).map(|i| (bot, i)));
        pairs.extend((0..n).map(|i| (i, top)));
        pairs.push((bot, top));
        let p = Poset::from_index_pairs(labels, &pairs).expect("adjoining bounds keeps an order");
        (p, bot, top)
    }

    /// Adjoins only a fresh maximum.
    pub fn with_top(&self) -> (Poset, usize) {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(self.fresh_label("_1"));
        let mut pairs = self.covers();
        pairs.extend((0..n).map(|i| (i, n)));
        let p = Poset::from_index_pairs(labels, &pairs).expect("adjoining a top keeps an order");
        (p, n)
    }

    pub fn dual(&self) -> Poset {
        let pairs: Vec<(usize, usize)> = self.covers().into_iter().map(|(a, b)| (b, a)).collect();
        Poset::from_index_pairs(self.labels.clone(), &pairs).expect("dual of an order")
    }

    /// Induced subposet on `keep` (indices into `self`), in the given order.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut pairs = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.lt(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        Poset::from_index_pairs(labels, &pairs).expect("induced order")
    }

    /// `{y : y >= x}` as an induced subposet.
    pub fn principal_filter(&self, x: usize) -> Poset {
        let keep: Vec<usize> = (0..self.len()).filter(|&y| self.le(x, y)).collect();
        self.induced(&keep)
    }

    /// `{y : y <= x}` as an induced subposet.
    pub fn principal_ideal(&self, x: usize) -> Poset {
        let keep: Vec<usize> = (0..self.len()).filter(|&y| self.le(y, x)).collect();
        self.induced(&keep)
    }

    /// All maximal chains, each listed bottom to top, in label-lexicographic
    /// order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut mins = self.minimal_elements();
        mins.sort_by_key(|&i| self.label_rank[i]);
        let mut stack = Vec::new();
        for m in mins {
            stack.push(m);
            self.extend_chains(&mut stack, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *stack.last().unwrap();
        if self.upper_covers[top].is_empty() {
            out.push(stack.clone());
            return;
        }
        for &next in &self.upper_covers[top] {
            stack.push(next);
            self.extend_chains(stack, out);
            stack.pop();
        }
    }

    /// Whether the given elements are pairwise comparable.
    pub fn is_chain(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .enumerate()
            .all(|(i, &a)| elems[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }
}

fn find_cycle(succ: &[Vec<usize>], indeg_left: &[usize]) -> Vec<usize> {
    // every vertex with remaining in-degree lies on or downstream of a cycle;
    // walking backwards is awkward, so walk forwards inside the residual set
    let residual: Vec<bool> = indeg_left.iter().map(|&d| d > 0).collect();
    let start = residual.iter().position(|&r| r).unwrap_or(0);
    let mut pos = HashMap::new();
    let mut path = Vec::new();
    let mut v = start;
    loop {
        if let Some(&p) = pos.get(&v) {
            return path[p..].to_vec();
        }
        pos.insert(v, path.len());
        path.push(v);
        match succ[v].iter().find(|&&w| residual[w]) {
            Some(&w) => v = w,
            None => return path,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(elements: &[&str], covers: &[(&str, &str)]) -> Poset {
        Poset::from_covers(elements, covers).unwrap()
    }

    fn bowtie4() -> Poset {
        poset(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
    }

    fn chain(k: usize) -> Poset {
        let labels: Vec<String> = (0..=k).map(|i| format!("x{i}")).collect();
        let pairs: Vec<(usize, usize)> = (0..k).map(|i| (i, i + 1)).collect();
        Poset::from_index_pairs(labels, &pairs).unwrap()
    }

    fn ungraded() -> Poset {
        poset(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        )
    }

    #[test]
    fn singleton_and_hasse_reduction() {
        let p = poset(&["a"], &[]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.minimum(), Some(0));
        let p = poset(&["0", "a", "1"], &[("0", "a"), ("a", "1"), ("0", "1")]);
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert!(p.lt(0, 2));
    }

    #[test]
    fn cycles_and_unknown_labels_are_rejected() {
        let err = Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, PosetError::CycleDetected(ref c) if c.len() == 2));
        let err = Poset::from_covers(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, PosetError::UnknownLabel("z".into()));
        let err = Poset::from_covers(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, PosetError::DuplicateLabel("a".into()));
        assert!(matches!(
            Poset::from_covers(&["a"], &[("a", "a")]),
            Err(PosetError::CycleDetected(_))
        ));
    }

    #[test]
    fn meets_in_small_examples() {
        let p = bowtie4();
        assert_eq!(p.meet_labels("c", "d").unwrap(), None);
        assert_eq!(p.join_labels("a", "b").unwrap(), None);
        let c = poset(&["0", "x", "1"], &[("0", "x"), ("x", "1")]);
        assert_eq!(c.meet_labels("x", "1").unwrap(), Some("x"));
        assert_eq!(c.join_labels("0", "x").unwrap(), Some("x"));
        assert!(matches!(
            c.meet_labels("x", "q"),
            Err(PosetError::UnknownLabel(_))
        ));
    }

    #[test]
    fn lattice_predicates() {
        assert!(!bowtie4().is_lattice());
        assert!(!bowtie4().is_meet_semilattice());
        assert!(chain(3).is_lattice());
        let (b, _, _) = bowtie4().with_bounds();
        assert!(!b.is_lattice());
    }

    #[test]
    fn grading_examples() {
        assert!(!ungraded().is_graded());
        assert_eq!(ungraded().rank(4), Err(PosetError::NotGraded));
        let c = chain(4);
        assert!(c.is_graded());
        assert_eq!(c.rank(4), Ok(4));
        assert_eq!(bowtie4().rank(2), Err(PosetError::NoMinimum));
    }

    #[test]
    fn interval_graded_but_not_pure() {
        // a,b < c ; a < f < d ; b < g < d
        let p = poset(
            &["a", "b", "c", "d", "f", "g"],
            &[
                ("a", "c"),
                ("b", "c"),
                ("a", "f"),
                ("b", "g"),
                ("f", "d"),
                ("g", "d"),
            ],
        );
        assert!(p.is_graded());
        assert!(p.grading().is_none());
        assert_eq!(p.find_balanced_bowtie(), Err(PosetError::NotGraded));
        let bt = p.find_bowtie().unwrap();
        assert_eq!(bt.labels(&p), ["a", "b", "c", "d"].map(String::from));
    }

    #[test]
    fn bowtie_search() {
        let p = bowtie4();
        let bt = p.find_bowtie().unwrap();
        assert_eq!(bt.labels(&p), ["a", "b", "c", "d"].map(String::from));
        assert!(p.is_bowtie(0, 1, 2, 3));
        assert_eq!(p.find_balanced_bowtie().unwrap(), Some(bt));
        assert!(chain(5).find_bowtie().is_none());
    }

    #[test]
    fn flag_condition_examples() {
        let p = poset(
            &["a", "b", "c", "ab", "ac", "bc"],
            &[
                ("a", "ab"),
                ("b", "ab"),
                ("a", "ac"),
                ("c", "ac"),
                ("b", "bc"),
                ("c", "bc"),
            ],
        );
        let t = p.flag_condition(Direction::Up).unwrap();
        assert_eq!(t.map(|i| p.label(i).to_string()), ["a", "b", "c"].map(String::from));
        let t = p.flag_condition(Direction::Down).unwrap();
        assert_eq!(t.map(|i| p.label(i).to_string()), ["ab", "ac", "bc"].map(String::from));
        let (q, _) = p.dual().with_top();
        assert!(q.flag_condition(Direction::Up).is_none());
        assert!(chain(4).flag_condition(Direction::Up).is_none());
        assert!(chain(4).flag_condition(Direction::Down).is_none());
    }

    #[test]
    fn grade_completion_examples() {
        let g = ungraded().grade_completion().unwrap();
        assert_eq!(g.len(), 6);
        assert!(g.is_graded());
        let top = g.index_of("1").unwrap();
        assert_eq!(g.rank(top), Ok(3));
        assert!(g.index_of("a~1#1").is_ok());
        let c = chain(3);
        assert_eq!(c.grade_completion().unwrap().covers(), c.covers());
        assert_eq!(bowtie4().grade_completion().unwrap_err(), PosetError::NoMinimum);
    }

    #[test]
    fn doc_round_trip() {
        let p = ungraded();
        let doc = p.to_doc();
        let json = serde_json::to_string(&doc).unwrap();
        let back: PosetDoc = serde_json::from_str(&json).unwrap();
        let q = Poset::from_doc(&back).unwrap();
        assert_eq!(q.covers(), p.covers());
    }

    #[test]
    fn maximal_chains_of_bowtie() {
        let p = bowtie4();
        let chains: Vec<Vec<&str>> = p
            .maximal_chains()
            .into_iter()
            .map(|c| c.into_iter().map(|i| p.label(i)).collect())
            .collect();
        assert_eq!(
            chains,
            vec![vec!["a", "c"], vec!["a", "d"], vec!["b", "c"], vec!["b", "d"]]
        );
    }
}
