//! Brute-force finite Weyl groups.
//!
//! Everything here is computed from the Cartan matrix alone: elements by BFS
//! over right multiplication (deduplicated by matrix), lengths as BFS depth,
//! Bruhat order through the subword property, and coset minima by exhausting
//! cosets. [`cross_check`] compares all of it against [`crate::weyl`].

use std::collections::{HashMap, VecDeque};

use crate::dynkin::{DiagramKind, DynkinDiagram, NodeSet};
use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylGroup};

pub const MAX_ORDER: usize = 10_000;

type Matrix = Vec<i64>;

pub struct EnumeratedGroup {
    labels: Vec<usize>,
    elements: Vec<Matrix>,
    lengths: Vec<usize>,
    /// `right[e][i]` is the id of `e * s_i`.
    right: Vec<Vec<usize>>,
    /// `left[e][i]` is the id of `s_i * e`.
    left: Vec<Vec<usize>>,
    /// BFS tree: `e = parent * s_gen`.
    parent: Vec<Option<(usize, usize)>>,
    index: HashMap<Matrix, usize>,
    /// `below[w]` is the bitset of `{u : u <= w}`.
    below: Vec<Vec<u64>>,
}

fn mat_mul(n: usize, a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            for c in 0..n {
                m[r * n + c] += a[r * n + k] * b[k * n + c];
            }
        }
    }
    m
}

fn reflection(cartan: &[Vec<i64>], i: usize) -> Matrix {
    let n = cartan.len();
    let mut m = vec![0; n * n];
    for r in 0..n {
        m[r * n + r] = 1;
    }
    for j in 0..n {
        m[i * n + j] -= cartan[i][j];
    }
    m
}

/// Enumerates the Weyl group of a finite diagram.
pub fn enumerate(d: &DynkinDiagram) -> Result<EnumeratedGroup> {
    if d.kind() != DiagramKind::Finite {
        return Err(Error::NotFinite);
    }
    let n = d.num_nodes();
    let gens: Vec<Matrix> = (0..n).map(|i| reflection(d.cartan(), i)).collect();
    let mut identity = vec![0; n * n];
    for r in 0..n {
        identity[r * n + r] = 1;
    }
    let mut elements = vec![identity.clone()];
    let mut lengths = vec![0];
    let mut parent = vec![None];
    let mut index = HashMap::from([(identity, 0)]);
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        let mut row = Vec::with_capacity(n);
        for (i, g) in gens.iter().enumerate() {
            let x = mat_mul(n, &elements[e], g);
            let id = match index.get(&x) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id >= MAX_ORDER {
                        return Err(Error::TooLarge(MAX_ORDER));
                    }
                    index.insert(x.clone(), id);
                    elements.push(x);
                    lengths.push(lengths[e] + 1);
                    parent.push(Some((e, i)));
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        if right.len() <= e {
            right.resize(e + 1, Vec::new());
        }
        right[e] = row;
    }
    let left = elements
        .iter()
        .map(|m| gens.iter().map(|g| index[&mat_mul(n, g, m)]).collect())
        .collect();
    // Subword products of a reduced word of w form the interval [e, w]; the
    // BFS word of w extends the BFS word of its parent by one letter.
    let size = elements.len();
    let blocks = size.div_ceil(64);
    let mut below = vec![vec![0u64; blocks]; size];
    below[0][0] = 1;
    for w in 1..size {
        let (p, g) = parent[w].unwrap();
        let mut set = below[p].clone();
        for x in 0..size {
            if below[p][x / 64] >> (x % 64) & 1 == 1 {
                let y: usize = right[x][g];
                set[y / 64] |= 1 << (y % 64);
            }
        }
        below[w] = set;
    }
    Ok(EnumeratedGroup { labels: d.labels().to_vec(), elements, lengths, right, left, parent, index, below })
}

impl EnumeratedGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn matrix(&self, e: usize) -> &[i64] {
        &self.elements[e]
    }

    pub fn id_of(&self, matrix: &[i64]) -> Option<usize> {
        self.index.get(matrix).copied()
    }

    pub fn length(&self, e: usize) -> usize {
        self.lengths[e]
    }

    pub fn generators(&self) -> NodeSet {
        self.labels.iter().copied().collect()
    }

    fn gen_index(&self, label: usize) -> usize {
        self.labels.iter().position(|&l| l == label).expect("generator label")
    }

    pub fn generator(&self, label: usize) -> usize {
        self.right[0][self.gen_index(label)]
    }

    /// The BFS-tree reduced word, as labels.
    pub fn word(&self, e: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = e;
        while let Some((p, g)) = self.parent[cur] {
            out.push(self.labels[g]);
            cur = p;
        }
        out.reverse();
        out
    }

    pub fn right_mul(&self, e: usize, label: usize) -> usize {
        self.right[e][self.gen_index(label)]
    }

    pub fn left_mul(&self, label: usize, e: usize) -> usize {
        self.left[e][self.gen_index(label)]
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.word(b).into_iter().fold(a, |x, l| self.right_mul(x, l))
    }

    pub fn inverse(&self, e: usize) -> usize {
        self.word(e).into_iter().rev().fold(0, |x, l| self.right_mul(x, l))
    }

    pub fn longest(&self) -> usize {
        (0..self.order()).max_by_key(|&e| self.lengths[e]).unwrap()
    }

    /// `u <= w` in Bruhat order.
    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        self.below[w][u / 64] >> (u % 64) & 1 == 1
    }

    /// Right coset `e W_I`, by closure under right multiplication.
    pub fn coset(&self, e: usize, i_set: NodeSet) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[e] = true;
        let mut out = vec![e];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for l in i_set.iter() {
                let y = self.right_mul(x, l);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out
    }

    /// For every element, the shortest element of its coset modulo `W_I`.
    pub fn coset_minima(&self, i_set: NodeSet) -> Vec<usize> {
        let mut min = vec![usize::MAX; self.order()];
        for e in 0..self.order() {
            if min[e] != usize::MAX {
                continue;
            }
            let coset = self.coset(e, i_set);
            let m = *coset.iter().min_by_key(|&&x| self.lengths[x]).unwrap();
            for x in coset {
                min[x] = m;
            }
        }
        min
    }

    /// `D^I(u)` straight from the definition `s u <=_I u`.
    pub fn coset_descents(&self, u: usize, minima: &[usize]) -> NodeSet {
        self.labels
            .iter()
            .copied()
            .filter(|&s| self.bruhat_leq(minima[self.left_mul(s, u)], u))
            .collect()
    }

    /// `{s : s <= v}`.
    pub fn support(&self, v: usize) -> NodeSet {
        self.labels.iter().copied().filter(|&s| self.bruhat_leq(self.generator(s), v)).collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub group_order: usize,
    pub lengths_checked: usize,
    pub coset_reps_checked: usize,
    pub coset_descents_checked: usize,
    pub bp_checked: usize,
    pub bp_failures_seen: usize,
}

fn mismatch(what: &str, g: &EnumeratedGroup, e: usize, detail: String) -> Error {
    Error::OracleMismatch(format!("{what} at element {:?}: {detail}", g.word(e)))
}

/// Compares the matrix engine with brute force on one finite group: lengths,
/// longest element, minimal coset representatives for every standard
/// parabolic, coset descents, and BP verdicts for every `(w, K, I)` with
/// `I ⊆ K` and `w` minimal modulo `W_I`.
pub fn cross_check(d: &DynkinDiagram) -> Result<CrossCheckReport> {
    let og = enumerate(d)?;
    let wg = WeylGroup::new(d);
    let mut report = CrossCheckReport { group_order: og.order(), ..Default::default() };

    let elements: Vec<WeylElement> = (0..og.order())
        .map(|e| wg.from_word(&og.word(e)))
        .collect::<Result<_>>()?;
    let id_of = |w: &WeylElement| -> Result<usize> {
        og.id_of(w.matrix()).ok_or_else(|| Error::OracleMismatch(format!("unknown matrix {:?}", w.matrix())))
    };
    for (e, w) in elements.iter().enumerate() {
        if w.matrix() != og.matrix(e) {
            return Err(mismatch("matrix", &og, e, "word product differs".into()));
        }
        if wg.length(w) != og.length(e) {
            return Err(mismatch("length", &og, e, format!("{} vs {}", wg.length(w), og.length(e))));
        }
        report.lengths_checked += 1;
    }
    let longest = wg.longest_element(wg.generators())?;
    if id_of(&longest)? != og.longest() {
        return Err(mismatch("longest element", &og, og.longest(), "engine disagrees".into()));
    }

    let subsets = og.generators().subsets();
    let mut minima: HashMap<NodeSet, Vec<usize>> = HashMap::new();
    for &i_set in &subsets {
        let mins = og.coset_minima(i_set);
        for (e, w) in elements.iter().enumerate() {
            let rep = id_of(&wg.min_coset_rep(w, i_set))?;
            if rep != mins[e] {
                return Err(mismatch("min coset rep", &og, e, format!("I = {i_set}")));
            }
            report.coset_reps_checked += 1;
        }
        minima.insert(i_set, mins);
    }

    let mut descents: HashMap<(NodeSet, usize), NodeSet> = HashMap::new();
    for &i_set in &subsets {
        let mins = &minima[&i_set];
        for u in (0..og.order()).filter(|&u| mins[u] == u) {
            let expected = og.coset_descents(u, mins);
            let got = wg.coset_descents(&elements[u], i_set)?;
            if got != expected {
                return Err(mismatch("coset descents", &og, u, format!("I = {i_set}: {got} vs {expected}")));
            }
            descents.insert((i_set, u), expected);
            report.coset_descents_checked += 1;
        }
    }

    for &k_set in &subsets {
        let k_mins = &minima[&k_set];
        for &i_set in subsets.iter().filter(|i| i.is_subset(k_set)) {
            let i_mins = &minima[&i_set];
            for w in (0..og.order()).filter(|&w| i_mins[w] == w) {
                let v = k_mins[w];
                let u = og.multiply(og.inverse(v), w);
                let expected = og.support(v).intersection(k_set).is_subset(descents[&(i_set, u)]);
                let pd = wg.parabolic_decomposition(&elements[w], k_set)?;
                if (id_of(&pd.v)?, id_of(&pd.u)?) != (v, u) {
                    return Err(mismatch("parabolic decomposition", &og, w, format!("K = {k_set}")));
                }
                let got = wg.is_bp(&elements[w], k_set, i_set)?;
                if got != expected {
                    return Err(mismatch("BP verdict", &og, w, format!("K = {k_set}, I = {i_set}")));
                }
                report.bp_checked += 1;
                if !expected {
                    report.bp_failures_seen += 1;
                }
            }
        }
    }
    Ok(report)
}
