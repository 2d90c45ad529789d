//! Weyl groups acting on the root lattice.
//!
//! Elements are integer matrices in the simple-root basis: column `j` of
//! `w` is `w(alpha_j)`. A simple reflection `s_i` is a right descent of `w`
//! exactly when `w(alpha_i)` is a negative root, so lengths and reduced words
//! come from descent stripping. The canonical reduced word always strips the
//! smallest-labelled right descent first.
//!
//! All sets of generators (`I`, `K`) are [`NodeSet`]s of node labels.

use std::fmt;
use std::sync::OnceLock;

use crate::dynkin::{DiagramKind, DynkinDiagram, NodeSet};
use crate::error::{Error, Result};
use crate::roots::AffineRoot;

#[derive(Clone)]
pub struct WeylElement {
    dim: usize,
    /// Row-major.
    matrix: Vec<i64>,
    word: OnceLock<Vec<usize>>,
}

impl WeylElement {
    fn from_matrix(dim: usize, matrix: Vec<i64>) -> Self {
        WeylElement { dim, matrix, word: OnceLock::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    fn at(&self, r: usize, c: usize) -> i64 {
        self.matrix[r * self.dim + c]
    }

    /// `w(alpha_i)` for the simple root at index `i`.
    fn column(&self, i: usize) -> impl Iterator<Item = i64> + '_ {
        (0..self.dim).map(move |r| self.at(r, i))
    }

    fn column_is_negative(&self, i: usize) -> bool {
        // Images of roots are roots, so a sign check on the column suffices.
        self.column(i).all(|x| x <= 0)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| self.at(r, c) == i64::from(r == c)))
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.matrix.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({:?})", self.matrix)
    }
}

/// `w = v u` with `v` minimal in `w W_K` and `u` in `W_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicDecomposition {
    pub v: WeylElement,
    pub u: WeylElement,
    pub k: NodeSet,
}

/// The Weyl group of a Dynkin diagram, generated by its simple reflections.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    kind: DiagramKind,
    labels: Vec<usize>,
    cartan: Vec<Vec<i64>>,
}

impl WeylGroup {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        WeylGroup {
            kind: diagram.kind(),
            labels: diagram.labels().to_vec(),
            cartan: diagram.cartan().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn generators(&self) -> NodeSet {
        self.labels.iter().copied().collect()
    }

    fn index_of(&self, label: usize) -> Result<usize> {
        self.labels.iter().position(|&l| l == label).ok_or(Error::InvalidNode(label))
    }

    fn check_nodes(&self, set: NodeSet) -> Result<()> {
        match set.difference(self.generators()).iter().next() {
            Some(bad) => Err(Error::InvalidNode(bad)),
            None => Ok(()),
        }
    }

    fn indices(&self, set: NodeSet) -> Vec<usize> {
        (0..self.dim()).filter(|&i| set.contains(self.labels[i])).collect()
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.dim();
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement::from_matrix(n, m)
    }

    /// `s_i(alpha_j) = alpha_j - C[i][j] alpha_i`.
    pub fn simple_reflection(&self, label: usize) -> Result<WeylElement> {
        let i = self.index_of(label)?;
        Ok(self.right_mul_simple(&self.identity(), i))
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &l in word {
            w = self.right_mul_simple(&w, self.index_of(l)?);
        }
        Ok(w)
    }

    /// `w s_i`: column `j` becomes `w(alpha_j) - C[i][j] w(alpha_i)`.
    fn right_mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let n = self.dim();
        let mut m = w.matrix.clone();
        for j in 0..n {
            let c = self.cartan[i][j];
            if c == 0 {
                continue;
            }
            for r in 0..n {
                m[r * n + j] -= c * w.matrix[r * n + i];
            }
        }
        WeylElement::from_matrix(n, m)
    }

    /// `s_i w`: row `i` becomes `row_i - sum_j C[i][j] row_j`.
    fn left_mul_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        let n = self.dim();
        let mut m = w.matrix.clone();
        for c in 0..n {
            let dot: i64 = (0..n).map(|j| self.cartan[i][j] * w.matrix[j * n + c]).sum();
            m[i * n + c] -= dot;
        }
        WeylElement::from_matrix(n, m)
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let n = self.dim();
        let mut m = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = a.matrix[r * n + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    m[r * n + c] += x * b.matrix[k * n + c];
                }
            }
        }
        WeylElement::from_matrix(n, m)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut out = self.identity();
        for &l in self.reduced_word(w).iter().rev() {
            out = self.right_mul_simple(&out, self.index_of(l).expect("word over generators"));
        }
        out
    }

    pub fn act_on_root(&self, w: &WeylElement, root: &AffineRoot) -> AffineRoot {
        let n = self.dim();
        let v = root.coeffs();
        AffineRoot::new((0..n).map(|r| (0..n).map(|c| w.at(r, c) * v[c]).sum()).collect())
    }

    fn first_right_descent(&self, w: &WeylElement, among: Option<&[usize]>) -> Option<usize> {
        match among {
            Some(idx) => idx.iter().copied().find(|&i| w.column_is_negative(i)),
            None => (0..self.dim()).find(|&i| w.column_is_negative(i)),
        }
    }

    /// Canonical reduced word (labels), cached on the element.
    pub fn reduced_word<'a>(&self, w: &'a WeylElement) -> &'a [usize] {
        w.word.get_or_init(|| {
            let mut stripped = Vec::new();
            let mut cur = w.clone();
            while let Some(i) = self.first_right_descent(&cur, None) {
                stripped.push(self.labels[i]);
                cur = self.right_mul_simple(&cur, i);
            }
            stripped.reverse();
            stripped
        })
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.reduced_word(w).len()
    }

    pub fn right_descents(&self, w: &WeylElement) -> NodeSet {
        (0..self.dim()).filter(|&i| w.column_is_negative(i)).map(|i| self.labels[i]).collect()
    }

    pub fn left_descents(&self, w: &WeylElement) -> NodeSet {
        self.right_descents(&self.inverse(w))
    }

    pub fn is_min_coset_rep(&self, w: &WeylElement, i_set: NodeSet) -> bool {
        self.right_descents(w).intersection(i_set).is_empty()
    }

    /// Shortest element of `w W_I`.
    pub fn min_coset_rep(&self, w: &WeylElement, i_set: NodeSet) -> WeylElement {
        let idx = self.indices(i_set);
        let mut cur = w.clone();
        while let Some(i) = self.first_right_descent(&cur, Some(&idx)) {
            cur = self.right_mul_simple(&cur, i);
        }
        cur
    }

    /// Longest element of the parabolic subgroup `W_K`, by ascent climbing.
    pub fn longest_element(&self, k_set: NodeSet) -> Result<WeylElement> {
        self.check_nodes(k_set)?;
        if self.kind.is_affine() && k_set == self.generators() {
            return Err(Error::InfiniteParabolic(k_set));
        }
        let idx = self.indices(k_set);
        let mut cur = self.identity();
        while let Some(&i) = idx.iter().find(|&&i| !cur.column_is_negative(i)) {
            cur = self.right_mul_simple(&cur, i);
        }
        Ok(cur)
    }

    /// Maximal element of `W_K^I`.
    pub fn max_parabolic_quotient_rep(&self, k_set: NodeSet, i_set: NodeSet) -> Result<WeylElement> {
        if !i_set.is_subset(k_set) {
            return Err(Error::NotSubset { inner: i_set, outer: k_set });
        }
        Ok(self.min_coset_rep(&self.longest_element(k_set)?, i_set))
    }

    /// `D^I(u) = {s in S : s u <=_I u}` for `u` minimal modulo `W_I`.
    ///
    /// For such `u` and a simple `s`, exactly one of: `su < u`; `su > u` with
    /// `su` minimal modulo `W_I`; `su` in `u W_I`. The first and last cases
    /// are the coset descents.
    pub fn coset_descents(&self, u: &WeylElement, i_set: NodeSet) -> Result<NodeSet> {
        self.check_nodes(i_set)?;
        if !self.is_min_coset_rep(u, i_set) {
            return Err(Error::NotMinimal(i_set));
        }
        let left = self.left_descents(u);
        let mut out = left;
        for s in 0..self.dim() {
            let label = self.labels[s];
            if left.contains(label) {
                continue;
            }
            let su = self.left_mul_simple(s, u);
            if !self.is_min_coset_rep(&su, i_set) {
                out.insert(label);
            }
        }
        Ok(out)
    }

    /// Letters of the (any) reduced word.
    pub fn support(&self, w: &WeylElement) -> NodeSet {
        self.reduced_word(w).iter().copied().collect()
    }

    pub fn parabolic_decomposition(&self, w: &WeylElement, k_set: NodeSet) -> Result<ParabolicDecomposition> {
        self.check_nodes(k_set)?;
        let v = self.min_coset_rep(w, k_set);
        let u = self.multiply(&self.inverse(&v), w);
        let (lv, lu, lw) = (self.length(&v), self.length(&u), self.length(w));
        if lv + lu != lw {
            return Err(Error::Invariant(format!("parabolic decomposition lengths {lv} + {lu} != {lw}")));
        }
        if !self.support(&u).is_subset(k_set) {
            return Err(Error::Invariant(format!("parabolic factor not in W_{k_set}")));
        }
        Ok(ParabolicDecomposition { v, u, k: k_set })
    }

    /// Billey-Postnikov criterion `supp(v) ∩ K ⊆ D^I(u)` for the parabolic
    /// decomposition of `w` (minimal modulo `W_I`) with respect to `K ⊇ I`.
    pub fn is_bp(&self, w: &WeylElement, k_set: NodeSet, i_set: NodeSet) -> Result<bool> {
        if !i_set.is_subset(k_set) {
            return Err(Error::NotSubset { inner: i_set, outer: k_set });
        }
        if !self.is_min_coset_rep(w, i_set) {
            return Err(Error::NotMinimal(i_set));
        }
        let pd = self.parabolic_decomposition(w, k_set)?;
        let descents = self.coset_descents(&pd.u, i_set)?;
        Ok(self.support(&pd.v).intersection(k_set).is_subset(descents))
    }

    /// Space-separated canonical reduced word, `""` for the identity.
    pub fn word_string(&self, w: &WeylElement) -> String {
        self.reduced_word(w).iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}
