//! Root systems in the simple-root basis.
//!
//! [`RootSystem`] enumerates a finite root system by reflection closure.
//! [`AffineRootSystem`] describes the real roots of an untwisted or twisted
//! affine diagram as `alpha + k delta` over a finite root `alpha`, using the
//! finite system obtained by deleting node 0. Short roots of a twisted system
//! admit every shift `k`, long roots only even shifts.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::{unit, DiagramKind, DynkinDiagram};
use crate::error::{Error, Result};

/// Integer coefficients over the simple roots of an ambient diagram, in that
/// diagram's node order (for an affine diagram, index 0 is `alpha_0`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AffineRoot(Vec<i64>);

impl AffineRoot {
    pub fn new(coeffs: Vec<i64>) -> Self {
        AffineRoot(coeffs)
    }

    pub fn simple(dim: usize, index: usize) -> Self {
        AffineRoot(unit(dim, index))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn add(&self, other: &AffineRoot) -> AffineRoot {
        AffineRoot(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &AffineRoot) -> AffineRoot {
        AffineRoot(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> AffineRoot {
        AffineRoot(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> AffineRoot {
        self.scale(-1)
    }

    /// Deterministic display order: by absolute height, then coefficientwise.
    pub fn display_cmp(&self, other: &AffineRoot) -> Ordering {
        self.height().abs().cmp(&other.height().abs()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootLength {
    Short,
    Long,
    Imaginary,
}

/// Which of the named root sets a [`RootSet`] represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootSetTag {
    /// Positive roots of the finite algebra.
    FinitePositive,
    /// Nilradical of the finite parabolic at `m`.
    U0,
    /// Opposite nilradical of the finite parabolic at `m`.
    U0Minus,
    /// Nilradical of the parabolic at node 0 inside the Levi of `S \ {m}`.
    Um,
    /// Opposite of [`RootSetTag::Um`].
    UmMinus,
    /// Roots of the finite parabolic subalgebra at `m`.
    Parabolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// A finite set of roots with their length classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    tag: RootSetTag,
    members: Vec<(AffineRoot, RootLength)>,
}

impl RootSet {
    fn new(tag: RootSetTag, mut members: Vec<(AffineRoot, RootLength)>) -> Self {
        members.sort_by(|a, b| a.0.display_cmp(&b.0));
        members.dedup_by(|a, b| a.0 == b.0);
        RootSet { tag, members }
    }

    pub fn tag(&self) -> RootSetTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn roots(&self) -> impl Iterator<Item = &AffineRoot> + '_ {
        self.members.iter().map(|(r, _)| r)
    }

    pub fn members(&self) -> &[(AffineRoot, RootLength)] {
        &self.members
    }

    pub fn contains(&self, root: &AffineRoot) -> bool {
        self.members.iter().any(|(r, _)| r == root)
    }

    pub fn length_of(&self, root: &AffineRoot) -> Option<RootLength> {
        self.members.iter().find(|(r, _)| r == root).map(|&(_, l)| l)
    }
}

/// A finite root system, enumerated by closure under simple reflections.
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    symmetrizer: Vec<i64>,
    positive: Vec<AffineRoot>,
    all: HashSet<AffineRoot>,
    short_norm: i64,
    long_norm: i64,
}

impl RootSystem {
    pub fn new(diagram: &DynkinDiagram) -> Result<Self> {
        if diagram.kind() != DiagramKind::Finite {
            return Err(Error::NotFinite);
        }
        let n = diagram.num_nodes();
        let c = diagram.cartan();
        let mut seen: HashSet<AffineRoot> = HashSet::new();
        let mut queue: VecDeque<AffineRoot> = VecDeque::new();
        for i in 0..n {
            let r = AffineRoot::simple(n, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        // Every non-simple positive root is s_i of a lower positive root.
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| c[i][j] * beta.0[j]).sum();
                if pairing >= 0 {
                    continue;
                }
                let mut next = beta.clone();
                next.0[i] -= pairing;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            if seen.len() > 100_000 {
                return Err(Error::InvalidCartan("root closure does not terminate".into()));
            }
        }
        let mut positive: Vec<AffineRoot> = seen.into_iter().collect();
        positive.sort_by(|a, b| a.display_cmp(b));
        let all = positive.iter().cloned().chain(positive.iter().map(AffineRoot::neg)).collect();
        let mut rs = RootSystem {
            diagram: diagram.clone(),
            symmetrizer: diagram.symmetrizer(),
            positive,
            all,
            short_norm: 0,
            long_norm: 0,
        };
        let norms: Vec<i64> = rs.positive.iter().map(|r| rs.norm(r.coeffs())).collect();
        rs.short_norm = *norms.iter().min().unwrap_or(&0);
        rs.long_norm = *norms.iter().max().unwrap_or(&0);
        Ok(rs)
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.num_nodes()
    }

    /// `(x, y) = sum x_i y_j d_i C[i][j]`, the invariant form scaled so that
    /// the shortest simple root has `(alpha, alpha) = 2 * min d_i`.
    pub fn inner_product(&self, x: &[i64], y: &[i64]) -> i64 {
        let c = self.diagram.cartan();
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * y[j] * self.symmetrizer[i] * c[i][j];
            }
        }
        s
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        self.inner_product(x, x)
    }

    pub fn positive(&self) -> &[AffineRoot] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn is_root(&self, v: &AffineRoot) -> bool {
        self.all.contains(v)
    }

    /// Length class; roots of a simply-laced system are all long.
    pub fn length_of(&self, v: &AffineRoot) -> RootLength {
        if self.short_norm != self.long_norm && self.norm(v.coeffs()) == self.short_norm {
            RootLength::Short
        } else {
            RootLength::Long
        }
    }

    pub fn positive_roots(&self) -> RootSet {
        self.tagged(RootSetTag::FinitePositive, self.positive.iter().cloned())
    }

    fn tagged(&self, tag: RootSetTag, roots: impl Iterator<Item = AffineRoot>) -> RootSet {
        RootSet::new(tag, roots.map(|r| {
            let l = self.length_of(&r);
            (r, l)
        })
        .collect())
    }

    fn dominating(&self, candidates: impl Iterator<Item = AffineRoot> + Clone) -> AffineRoot {
        let top = candidates.clone().max_by_key(|r| r.height()).expect("nonempty root system");
        debug_assert!(candidates.clone().all(|r| r.0.iter().zip(&top.0).all(|(a, b)| a <= b)));
        top
    }

    pub fn highest_root(&self) -> AffineRoot {
        self.dominating(self.positive.iter().cloned())
    }

    /// Highest short root; the highest root when simply laced.
    pub fn highest_short_root(&self) -> AffineRoot {
        if self.short_norm == self.long_norm {
            return self.highest_root();
        }
        let short = self.positive.iter().filter(|r| self.norm(r.coeffs()) == self.short_norm).cloned();
        self.dominating(short)
    }

    /// `R+ ∪ {negative roots with a_m = 0}`.
    pub fn parabolic_roots(&self, m: usize) -> Result<RootSet> {
        let im = self.diagram.index_of(m)?;
        let roots = self
            .positive
            .iter()
            .cloned()
            .chain(self.positive.iter().filter(|r| r.0[im] == 0).map(AffineRoot::neg));
        Ok(self.tagged(RootSetTag::Parabolic, roots))
    }

    /// Positive roots with `a_m >= 1`.
    pub fn nilradical_roots(&self, m: usize) -> Result<RootSet> {
        let im = self.diagram.index_of(m)?;
        Ok(self.tagged(RootSetTag::U0, self.positive.iter().filter(|r| r.0[im] >= 1).cloned()))
    }
}

/// Real roots of an affine diagram.
#[derive(Clone, Debug)]
pub struct AffineRootSystem {
    diagram: DynkinDiagram,
    finite: RootSystem,
    delta: AffineRoot,
}

/// Enumeration depth in multiples of `delta`. Every nilradical and parabolic
/// root set of the diagrams built here lives within two levels.
pub const MAX_LEVEL: i64 = 2;

impl AffineRootSystem {
    pub fn new(diagram: &DynkinDiagram) -> Result<Self> {
        let twisted = match diagram.kind() {
            DiagramKind::UntwistedAffine => false,
            DiagramKind::TwistedAffine => true,
            DiagramKind::Finite => return Err(Error::NotAffine),
        };
        if diagram.label_at(0) != 0 {
            return Err(Error::InvalidNode(0));
        }
        let finite = RootSystem::new(&diagram.delete(0)?)?;
        let top = if twisted { finite.highest_short_root() } else { finite.highest_root() };
        let mut delta = vec![1];
        delta.extend_from_slice(top.coeffs());
        let delta = AffineRoot(delta);
        let c = diagram.cartan();
        let n = diagram.num_nodes();
        if (0..n).any(|i| (0..n).map(|j| c[i][j] * delta.0[j]).sum::<i64>() != 0) {
            return Err(Error::Invariant(format!("{delta} is not a null vector of {}", diagram.name())));
        }
        Ok(AffineRootSystem { diagram: diagram.clone(), finite, delta })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn finite(&self) -> &RootSystem {
        &self.finite
    }

    pub fn delta(&self) -> &AffineRoot {
        &self.delta
    }

    pub fn is_twisted(&self) -> bool {
        self.diagram.kind() == DiagramKind::TwistedAffine
    }

    /// Embeds a root of the finite part (node 0 coefficient 0).
    pub fn embed(&self, finite_root: &AffineRoot) -> AffineRoot {
        let mut v = vec![0];
        v.extend_from_slice(finite_root.coeffs());
        AffineRoot(v)
    }

    /// Writes `v = alpha + k delta` with `alpha` supported on the finite
    /// nodes; returns `(alpha, k)`.
    pub fn reduce(&self, v: &AffineRoot) -> (AffineRoot, i64) {
        let k = v.0[0];
        let bar = v.sub(&self.delta.scale(k));
        (AffineRoot(bar.0[1..].to_vec()), k)
    }

    pub fn is_imaginary_root(&self, v: &AffineRoot) -> bool {
        let (bar, k) = self.reduce(v);
        k != 0 && bar.is_zero()
    }

    /// Membership in the real roots: `alpha + k delta` with `alpha` a finite
    /// root and, in the twisted case, `k` even whenever `alpha` is long.
    pub fn is_real_root(&self, v: &AffineRoot) -> bool {
        if v.dim() != self.diagram.num_nodes() {
            return false;
        }
        let (bar, k) = self.reduce(v);
        if !self.finite.is_root(&bar) {
            return false;
        }
        !(self.is_twisted() && self.finite.length_of(&bar) == RootLength::Long && k % 2 != 0)
    }

    pub fn is_root(&self, v: &AffineRoot) -> bool {
        self.is_real_root(v) || self.is_imaginary_root(v)
    }

    pub fn length_of(&self, v: &AffineRoot) -> RootLength {
        let (bar, k) = self.reduce(v);
        if bar.is_zero() && k != 0 {
            RootLength::Imaginary
        } else {
            self.finite.length_of(&bar)
        }
    }

    /// All real roots `alpha + k delta` with `|k| <= max_level`.
    pub fn real_roots(&self, max_level: i64) -> Vec<AffineRoot> {
        let mut out = Vec::new();
        let finite_roots: Vec<AffineRoot> =
            self.finite.positive.iter().cloned().chain(self.finite.positive.iter().map(AffineRoot::neg)).collect();
        for k in -max_level..=max_level {
            for alpha in &finite_roots {
                let v = self.embed(alpha).add(&self.delta.scale(k));
                if self.is_real_root(&v) {
                    out.push(v);
                }
            }
        }
        out.sort_by(|a, b| a.display_cmp(b));
        out
    }

    fn tagged(&self, tag: RootSetTag, roots: impl Iterator<Item = AffineRoot>) -> RootSet {
        RootSet::new(tag, roots.map(|r| {
            let l = self.length_of(&r);
            (r, l)
        })
        .collect())
    }

    /// Roots of the nilradical (or its opposite) of the parabolic obtained by
    /// removing `removed` from the Levi of `S \ {0}` (when `removed = m`,
    /// from the Levi of `S \ {m}` with node 0 playing the role of `m`).
    ///
    /// - `removed = 0`: real roots supported on the finite nodes with
    ///   `a_m >= 1` (`Positive`) or `a_m <= -1` (`Negative`).
    /// - `removed = m`: real roots with `a_m = 0` and `a_0 >= 1` or `a_0 <= -1`.
    pub fn nilradical_roots(&self, m: usize, removed: usize, sign: Sign) -> Result<RootSet> {
        let im = self.diagram.index_of(m)?;
        if im == 0 {
            return Err(Error::InvalidNode(m));
        }
        let s = match sign {
            Sign::Positive => 1,
            Sign::Negative => -1,
        };
        let real = self.real_roots(MAX_LEVEL);
        if removed == 0 {
            let tag = if s > 0 { RootSetTag::U0 } else { RootSetTag::U0Minus };
            Ok(self.tagged(tag, real.into_iter().filter(|r| r.0[0] == 0 && s * r.0[im] >= 1)))
        } else if removed == m {
            let tag = if s > 0 { RootSetTag::Um } else { RootSetTag::UmMinus };
            Ok(self.tagged(tag, real.into_iter().filter(|r| r.0[im] == 0 && s * r.0[0] >= 1)))
        } else {
            Err(Error::InvalidRemovedNode { expected: m, found: removed })
        }
    }

    /// Finite parabolic roots at `m`, embedded with `a_0 = 0`.
    pub fn parabolic_roots(&self, m: usize) -> Result<RootSet> {
        let finite = self.finite.parabolic_roots(m)?;
        Ok(self.tagged(RootSetTag::Parabolic, finite.roots().map(|r| self.embed(r))))
    }

    /// `v(omega_m)`: the `alpha_m` coefficient after reducing modulo `delta`.
    pub fn coweight_pairing(&self, v: &AffineRoot, m: usize) -> Result<i64> {
        let im = self.finite.diagram().index_of(m)?;
        let (bar, _) = self.reduce(v);
        Ok(bar.0[im])
    }
}
