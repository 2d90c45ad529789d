//! Dynkin diagrams: Cartan data for the finite types, their untwisted and
//! twisted affinizations, (co)minuscule node detection and pinned diagram
//! isomorphisms.
//!
//! Cartan matrices use the convention `C[i][j] = <alpha_j, alpha_i^vee>`, so the
//! simple reflection `s_i` sends `alpha_j` to `alpha_j - C[i][j] alpha_i`.
//! Node labels follow the usual textbook chains: `E6` is the chain `1-2-3-4-5`
//! with node 6 attached to 3, `E7` the chain `1-..-6` with node 7 attached to 3,
//! and `E8` the chain `1-..-7` with node 8 attached to 3. The affine node is
//! always labelled 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Every valid `(family, rank)` pair with rank at most `max_rank`, in
    /// family-then-rank order.
    pub fn types_up_to(max_rank: usize) -> Vec<(Family, usize)> {
        Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter(move |&r| f.is_valid_rank(r)).map(move |r| (f, r)))
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(format!("unknown family `{other}` (expected one of A-G)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagramKind {
    Finite,
    UntwistedAffine,
    TwistedAffine,
}

impl DiagramKind {
    pub fn is_affine(self) -> bool {
        !matches!(self, DiagramKind::Finite)
    }
}

/// A set of node labels. Labels are small (at most 63).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn singleton(label: usize) -> Self {
        NodeSet(1 << label)
    }

    pub fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, label: usize) -> bool {
        label < 64 && self.0 & (1 << label) != 0
    }

    pub fn insert(&mut self, label: usize) {
        self.0 |= 1 << label;
    }

    pub fn remove(&mut self, label: usize) {
        self.0 &= !(1 << label);
    }

    pub fn without(self, label: usize) -> Self {
        NodeSet(self.0 & !(1 << label))
    }

    pub fn union(self, other: NodeSet) -> Self {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> Self {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> Self {
        NodeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 & (1 << i) != 0)
    }

    /// All subsets of `self`, in increasing bit order.
    pub fn subsets(self) -> Vec<NodeSet> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u64;
        loop {
            out.push(NodeSet(sub));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out.sort();
        out
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = NodeSet::EMPTY;
        for l in iter {
            s.insert(l);
        }
        s
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NodeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if let Some(bad) = labels.iter().find(|&&l| l >= 64) {
            return Err(serde::de::Error::custom(format!("node label {bad} out of range")));
        }
        Ok(labels.into_iter().collect())
    }
}

/// A (generalized) Cartan matrix together with its node labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    kind: DiagramKind,
    /// Finite family this diagram was built from; `None` for subdiagrams.
    family: Option<Family>,
    /// Size of the finite part (`n` for an affine diagram on `n + 1` nodes).
    rank: usize,
    labels: Vec<usize>,
    cartan: Vec<Vec<i64>>,
}

impl DynkinDiagram {
    /// Builds a finite diagram from an arbitrary labelled Cartan matrix. Only
    /// the sign pattern is validated here; see [`DynkinDiagram::validate`].
    pub fn from_cartan(labels: Vec<usize>, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let d = DynkinDiagram { kind: DiagramKind::Finite, family: None, rank: labels.len(), labels, cartan };
        d.check_shape()?;
        Ok(d)
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_nodes(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn nodes(&self) -> NodeSet {
        self.labels.iter().copied().collect()
    }

    pub fn index_of(&self, label: usize) -> Result<usize> {
        self.labels.iter().position(|&l| l == label).ok_or(Error::InvalidNode(label))
    }

    pub fn label_at(&self, index: usize) -> usize {
        self.labels[index]
    }

    /// Cartan entry addressed by labels.
    pub fn entry(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self.cartan[self.index_of(i)?][self.index_of(j)?])
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan.iter().flatten().all(|&c| c >= -1)
    }

    /// Kac-style name, e.g. `E7`, `C3^(1)` or `A5^(2)`.
    pub fn name(&self) -> String {
        let Some(family) = self.family else {
            return format!("subdiagram{}", NodeSet::from_iter(self.labels.iter().copied()));
        };
        let n = self.rank;
        match self.kind {
            DiagramKind::Finite => format!("{family}{n}"),
            DiagramKind::UntwistedAffine => format!("{family}{n}^(1)"),
            DiagramKind::TwistedAffine => match family {
                Family::C => format!("A{}^(2)", 2 * n - 1),
                Family::B => format!("D{}^(2)", n + 1),
                _ => format!("{family}{n}^(2)"),
            },
        }
    }

    /// The full subdiagram on the remaining nodes. Deleting node 0 of an
    /// affine diagram gives back the finite diagram it was built from.
    pub fn delete(&self, label: usize) -> Result<DynkinDiagram> {
        let idx = self.index_of(label)?;
        let keep: Vec<usize> = (0..self.num_nodes()).filter(|&i| i != idx).collect();
        let cartan = keep.iter().map(|&i| keep.iter().map(|&j| self.cartan[i][j]).collect()).collect();
        let labels = keep.iter().map(|&i| self.labels[i]).collect::<Vec<_>>();
        let family = if self.kind.is_affine() && label == 0 { self.family } else { None };
        Ok(DynkinDiagram { kind: DiagramKind::Finite, family, rank: labels.len(), labels, cartan })
    }

    /// The diagram of the dual root system (transposed Cartan matrix).
    pub fn transpose(&self) -> DynkinDiagram {
        let n = self.num_nodes();
        let cartan = (0..n).map(|i| (0..n).map(|j| self.cartan[j][i]).collect()).collect();
        DynkinDiagram { cartan, family: None, ..self.clone() }
    }

    /// Smallest positive integers `d_i` with `d_i C[i][j] = d_j C[j][i]`.
    /// `d_i` is proportional to the squared length of `alpha_i`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.num_nodes();
        // Rational weights as (num, den), propagated along edges per component.
        let mut w: Vec<Option<(i64, i64)>> = vec![None; n];
        for start in 0..n {
            if w[start].is_some() {
                continue;
            }
            w[start] = Some((1, 1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let (p, q) = w[i].unwrap();
                for j in 0..n {
                    if i != j && self.cartan[i][j] != 0 && w[j].is_none() {
                        // d_j = d_i * C[i][j] / C[j][i]
                        let (num, den) = (p * self.cartan[i][j], q * self.cartan[j][i]);
                        let g = gcd(num, den) * den.signum();
                        w[j] = Some((num / g, den / g));
                        stack.push(j);
                    }
                }
            }
        }
        let dens = w.iter().map(|x| x.unwrap().1).fold(1, lcm);
        let scaled: Vec<i64> = w.iter().map(|x| {
            let (p, q) = x.unwrap();
            p * (dens / q)
        })
        .collect();
        let g = scaled.iter().copied().fold(0, gcd).max(1);
        scaled.into_iter().map(|v| v / g).collect()
    }

    /// Exact determinant of the Cartan matrix (fraction-free elimination).
    pub fn determinant(&self) -> i64 {
        let n = self.num_nodes();
        let mut m: Vec<Vec<i128>> =
            self.cartan.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        if n == 0 {
            return 1;
        }
        (sign * m[n - 1][n - 1]) as i64
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.labels.len();
        if self.cartan.len() != n || self.cartan.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan(format!("expected a {n}x{n} matrix")));
        }
        let mut seen = NodeSet::EMPTY;
        for &l in &self.labels {
            if l >= 64 || seen.contains(l) {
                return Err(Error::InvalidCartan(format!("bad or repeated label {l}")));
            }
            seen.insert(l);
        }
        for i in 0..n {
            if self.cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (self.cartan[i][j], self.cartan[j][i]);
                if a > 0 || (a < 0) != (b < 0) {
                    return Err(Error::InvalidCartan(format!("entries ({i},{j}) = {a}, ({j},{i}) = {b}")));
                }
            }
        }
        Ok(())
    }

    /// Checks every structural invariant: sign pattern, nonsingularity for
    /// finite diagrams, and for affine diagrams corank one with the strictly
    /// positive null vector `delta` and a finite diagram after deleting node 0.
    pub fn validate(&self) -> Result<()> {
        self.check_shape()?;
        match self.kind {
            DiagramKind::Finite => {
                if self.determinant() == 0 {
                    return Err(Error::InvalidCartan("finite Cartan matrix is singular".into()));
                }
            }
            DiagramKind::UntwistedAffine | DiagramKind::TwistedAffine => {
                if self.determinant() != 0 {
                    return Err(Error::InvalidCartan("affine Cartan matrix is nonsingular".into()));
                }
                let finite = self.delete(0)?;
                finite.validate()?;
                let delta = crate::roots::AffineRootSystem::new(self)?.delta().clone();
                if delta.coeffs().iter().any(|&c| c <= 0) {
                    return Err(Error::InvalidCartan("null vector is not strictly positive".into()));
                }
            }
        }
        Ok(())
    }

    /// Graphviz rendering. Multiple bonds are drawn with `label`, and the
    /// arrow of a non-simply-laced bond points from the long to the short root.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.name());
        for &l in &self.labels {
            out += &format!("  n{l} [label=\"{l}\"];\n");
        }
        for (i, j, bond) in self.bonds() {
            let (li, lj) = (self.labels[i], self.labels[j]);
            match bond {
                Bond::Simple => out += &format!("  n{li} -- n{lj};\n"),
                Bond::Symmetric(m) => out += &format!("  n{li} -- n{lj} [label=\"{m}\"];\n"),
                Bond::Arrow { long, short, multiplicity } => {
                    out += &format!(
                        "  n{} -- n{} [label=\"{multiplicity}\", dir=forward];\n",
                        self.labels[long], self.labels[short]
                    )
                }
            }
        }
        out += "}\n";
        out
    }

    fn bonds(&self) -> Vec<(usize, usize, Bond)> {
        let n = self.num_nodes();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (self.cartan[i][j], self.cartan[j][i]);
                if a == 0 {
                    continue;
                }
                let bond = if a == b && a == -1 {
                    Bond::Simple
                } else if a == b {
                    Bond::Symmetric(a * b)
                } else if a.abs() < b.abs() {
                    // |C[j][i]| large means alpha_j is short.
                    Bond::Arrow { long: i, short: j, multiplicity: a * b }
                } else {
                    Bond::Arrow { long: j, short: i, multiplicity: a * b }
                };
                out.push((i, j, bond));
            }
        }
        out
    }
}

enum Bond {
    Simple,
    Symmetric(i64),
    Arrow { long: usize, short: usize, multiplicity: i64 },
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} nodes {:?}", self.name(), self.labels)?;
        for (i, j, bond) in self.bonds() {
            let (li, lj) = (self.labels[i], self.labels[j]);
            match bond {
                Bond::Simple => write!(f, " {li}-{lj}")?,
                Bond::Symmetric(m) => write!(f, " {li}={m}={lj}")?,
                Bond::Arrow { long, short, multiplicity } => {
                    write!(f, " {}={multiplicity}>{}", self.labels[long], self.labels[short])?
                }
            }
        }
        Ok(())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Finite-type Cartan data with labels `1..=rank`.
pub fn build_finite(family: Family, rank: usize) -> Result<DynkinDiagram> {
    if !family.is_valid_rank(rank) {
        return Err(Error::InvalidType { family, rank });
    }
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // Bonds in 1-based labels.
    let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i - 1][j - 1] = cij;
        c[j - 1][i - 1] = cji;
    };
    match family {
        Family::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n short
            link(n - 1, n, -1, -2);
        }
        Family::C => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n long
            link(n - 1, n, -2, -1);
        }
        Family::D => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n, -1, -1);
        }
        Family::E => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(3, n, -1, -1);
        }
        Family::F => {
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
        }
        Family::G => link(1, 2, -3, -1),
    }
    Ok(DynkinDiagram {
        kind: DiagramKind::Finite,
        family: Some(family),
        rank: n,
        labels: (1..=n).collect(),
        cartan: c,
    })
}

fn require_finite(d: &DynkinDiagram) -> Result<()> {
    if d.kind != DiagramKind::Finite {
        return Err(Error::NotFinite);
    }
    Ok(())
}

/// Prepends node 0 carrying the affine root `alpha_0 = delta - theta`.
pub fn affinize_untwisted(d: &DynkinDiagram) -> Result<DynkinDiagram> {
    require_finite(d)?;
    let rs = RootSystem::new(d)?;
    let theta = rs.highest_root();
    extend_by_negated_root(d, &rs, theta.coeffs(), DiagramKind::UntwistedAffine)
}

/// Twisted affinization of `C_n` (to `A_{2n-1}^(2)`) and `B_n` (to
/// `D_{n+1}^(2)`), written down bond by bond.
pub fn affinize_twisted(d: &DynkinDiagram) -> Result<DynkinDiagram> {
    require_finite(d)?;
    let family = d.family.ok_or(Error::NotFinite)?;
    let n = d.rank;
    let mut c = vec![vec![0i64; n + 1]; n + 1];
    c[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            c[i + 1][j + 1] = d.cartan[i][j];
        }
    }
    match family {
        // Node 0 is a mirror image of node 1, which becomes a fork at node 2.
        Family::C => {
            for j in 2..=n {
                c[0][j] = c[1][j];
                c[j][0] = c[j][1];
            }
        }
        // Double bond 0 <= 1 with alpha_0 short.
        Family::B => {
            c[0][1] = -2;
            c[1][0] = -1;
        }
        other => return Err(Error::UnsupportedTwist(other)),
    }
    Ok(DynkinDiagram {
        kind: DiagramKind::TwistedAffine,
        family: Some(family),
        rank: n,
        labels: (0..=n).collect(),
        cartan: c,
    })
}

fn extend_by_negated_root(
    d: &DynkinDiagram,
    rs: &RootSystem,
    beta: &[i64],
    kind: DiagramKind,
) -> Result<DynkinDiagram> {
    let n = d.num_nodes();
    let mut c = vec![vec![0i64; n + 1]; n + 1];
    c[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            c[i + 1][j + 1] = d.cartan[i][j];
        }
    }
    let bb = rs.inner_product(beta, beta);
    for j in 0..n {
        let simple = unit(n, j);
        let jb = rs.inner_product(&simple, beta);
        let jj = rs.inner_product(&simple, &simple);
        if (2 * jb) % bb != 0 || (2 * jb) % jj != 0 {
            return Err(Error::Invariant("non-integral affine Cartan entry".into()));
        }
        // <alpha_j, alpha_0^vee> = -<alpha_j, beta^vee>, <alpha_0, alpha_j^vee> = -<beta, alpha_j^vee>
        c[0][j + 1] = -2 * jb / bb;
        c[j + 1][0] = -2 * jb / jj;
    }
    let mut labels = vec![0];
    labels.extend_from_slice(&d.labels);
    Ok(DynkinDiagram { kind, family: d.family, rank: d.rank, labels, cartan: c })
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Nodes whose coefficient in the highest root is 1.
pub fn cominuscule_nodes(d: &DynkinDiagram) -> Result<NodeSet> {
    require_finite(d)?;
    let rs = RootSystem::new(d)?;
    let theta = rs.highest_root();
    Ok(theta
        .coeffs()
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 1)
        .map(|(i, _)| d.labels[i])
        .collect())
}

/// Nodes whose coroot is cominuscule in the dual root system.
pub fn minuscule_nodes(d: &DynkinDiagram) -> Result<NodeSet> {
    require_finite(d)?;
    cominuscule_nodes(&d.transpose())
}

/// A label bijection between two diagrams, as sorted `(from, to)` pairs.
pub type NodeMap = Vec<(usize, usize)>;

/// Searches for a bijection `sigma` with `C1[i][j] = C2[sigma(i)][sigma(j)]`,
/// optionally forcing `sigma(pin.0) = pin.1`. Candidates are pruned by the
/// row and column multisets of each node, and tried in index order, so the
/// identity is found first when `d1 == d2`.
pub fn diagram_isomorphism(
    d1: &DynkinDiagram,
    d2: &DynkinDiagram,
    pin: Option<(usize, usize)>,
) -> Option<NodeMap> {
    let n = d1.num_nodes();
    if n != d2.num_nodes() {
        return None;
    }
    let pin = match pin {
        Some((a, b)) => Some((d1.index_of(a).ok()?, d2.index_of(b).ok()?)),
        None => None,
    };
    let sig = |d: &DynkinDiagram, i: usize| {
        let mut row: Vec<i64> = d.cartan[i].clone();
        let mut col: Vec<i64> = (0..d.num_nodes()).map(|k| d.cartan[k][i]).collect();
        row.sort_unstable();
        col.sort_unstable();
        (row, col)
    };
    let sig2: Vec<_> = (0..n).map(|i| sig(d2, i)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let s = sig(d1, i);
            (0..n)
                .filter(|&j| sig2[j] == s)
                .filter(|&j| match pin {
                    Some((a, b)) if a == i => j == b,
                    Some((_, b)) => j != b,
                    None => true,
                })
                .collect()
        })
        .collect();
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(d1, d2, &candidates, 0, &mut assignment, &mut used) {
        return None;
    }
    let mut map: NodeMap = (0..n).map(|i| (d1.labels[i], d2.labels[assignment[i]])).collect();
    map.sort_unstable();
    Some(map)
}

fn extend(
    d1: &DynkinDiagram,
    d2: &DynkinDiagram,
    candidates: &[Vec<usize>],
    i: usize,
    assignment: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == assignment.len() {
        return true;
    }
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        let consistent = (0..i).all(|k| {
            let jk = assignment[k];
            d1.cartan[i][k] == d2.cartan[j][jk] && d1.cartan[k][i] == d2.cartan[jk][j]
        });
        if !consistent || d1.cartan[i][i] != d2.cartan[j][j] {
            continue;
        }
        assignment[i] = j;
        used[j] = true;
        if extend(d1, d2, candidates, i + 1, assignment, used) {
            return true;
        }
        used[j] = false;
    }
    assignment[i] = usize::MAX;
    false
}

/// Returns true when `map` is a label bijection preserving every Cartan entry.
pub fn is_isomorphism(d1: &DynkinDiagram, d2: &DynkinDiagram, map: &NodeMap) -> bool {
    if map.len() != d1.num_nodes() || d1.num_nodes() != d2.num_nodes() {
        return false;
    }
    let image: NodeSet = map.iter().map(|&(_, b)| b).collect();
    if image != d2.nodes() {
        return false;
    }
    map.iter().all(|&(a, b)| {
        map.iter().all(|&(c, e)| match (d1.entry(a, c), d2.entry(b, e)) {
            (Ok(x), Ok(y)) => x == y,
            _ => false,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Exhaustive search over all label bijections.
    fn brute_force_iso(d1: &DynkinDiagram, d2: &DynkinDiagram, pin: (usize, usize)) -> bool {
        let n = d1.num_nodes();
        permutations(n).into_iter().any(|p| {
            let map: NodeMap = (0..n).map(|i| (d1.labels()[i], d2.labels()[p[i]])).collect();
            map.contains(&pin) && is_isomorphism(d1, d2, &map)
        })
    }

    #[test]
    fn a3_is_a_simple_chain() {
        let d = build_finite(Family::A, 3).unwrap();
        assert_eq!(d.cartan(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(d.labels(), &[1, 2, 3]);
    }

    #[test]
    fn c3_double_bond_at_the_end() {
        let d = build_finite(Family::C, 3).unwrap();
        assert_eq!(d.entry(2, 3).unwrap(), -2);
        assert_eq!(d.entry(3, 2).unwrap(), -1);
        assert_eq!(d.entry(1, 2).unwrap(), -1);
        assert_eq!(d.entry(1, 3).unwrap(), 0);
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        for (f, r) in [(Family::D, 3), (Family::D, 2), (Family::B, 1), (Family::E, 5), (Family::E, 9), (Family::F, 3), (Family::G, 3), (Family::A, 0)] {
            assert_eq!(build_finite(f, r), Err(Error::InvalidType { family: f, rank: r }));
        }
    }

    #[test]
    fn untwisted_a_is_a_cycle() {
        let g = affinize_untwisted(&build_finite(Family::A, 4).unwrap()).unwrap();
        assert_eq!(g.kind(), DiagramKind::UntwistedAffine);
        let neighbours: NodeSet = (1..=4).filter(|&j| g.entry(0, j).unwrap() != 0).collect();
        assert_eq!(neighbours, NodeSet::from_iter([1, 4]));
        assert_eq!(g.entry(0, 1).unwrap(), -1);
        assert_eq!(g.entry(4, 0).unwrap(), -1);
    }

    #[test]
    fn untwisted_b_forks_at_node_two() {
        let g = affinize_untwisted(&build_finite(Family::B, 4).unwrap()).unwrap();
        let neighbours: NodeSet = (1..=4).filter(|&j| g.entry(0, j).unwrap() != 0).collect();
        assert_eq!(neighbours, NodeSet::singleton(2));
        assert_eq!((g.entry(0, 2).unwrap(), g.entry(2, 0).unwrap()), (-1, -1));
    }

    #[test]
    fn untwisted_c_has_two_double_bonds() {
        let g = affinize_untwisted(&build_finite(Family::C, 4).unwrap()).unwrap();
        // alpha_0 long, alpha_1 short: 0 => 1
        assert_eq!((g.entry(0, 1).unwrap(), g.entry(1, 0).unwrap()), (-1, -2));
        assert_eq!((g.entry(3, 4).unwrap(), g.entry(4, 3).unwrap()), (-2, -1));
        assert!((2..=4).all(|j| g.entry(0, j).unwrap() == 0));
    }

    #[test]
    fn twisted_from_c_forks_and_from_b_is_a_chain() {
        let a = affinize_twisted(&build_finite(Family::C, 4).unwrap()).unwrap();
        assert_eq!(a.name(), "A7^(2)");
        assert_eq!((a.entry(0, 2).unwrap(), a.entry(2, 0).unwrap()), (-1, -1));
        assert_eq!(a.entry(0, 1).unwrap(), 0);
        let d = affinize_twisted(&build_finite(Family::B, 4).unwrap()).unwrap();
        assert_eq!(d.name(), "D5^(2)");
        assert_eq!((d.entry(0, 1).unwrap(), d.entry(1, 0).unwrap()), (-2, -1));
        assert_eq!((d.entry(3, 4).unwrap(), d.entry(4, 3).unwrap()), (-1, -2));
        assert_eq!(
            affinize_twisted(&build_finite(Family::A, 3).unwrap()),
            Err(Error::UnsupportedTwist(Family::A))
        );
    }

    #[test]
    fn twisted_rank_two_shapes() {
        // A3^(2): nodes 0 and 1 attach to node 2 exactly like node 1 does in C2.
        let a = affinize_twisted(&build_finite(Family::C, 2).unwrap()).unwrap();
        assert_eq!((a.entry(0, 2).unwrap(), a.entry(2, 0).unwrap()), (-2, -1));
        a.validate().unwrap();
        let d = affinize_twisted(&build_finite(Family::B, 2).unwrap()).unwrap();
        d.validate().unwrap();
    }

    #[test]
    fn all_builders_validate_and_round_trip() {
        for (f, r) in Family::types_up_to(8) {
            let d = build_finite(f, r).unwrap();
            d.validate().unwrap();
            let g = affinize_untwisted(&d).unwrap();
            g.validate().unwrap_or_else(|e| panic!("{}: {e}", g.name()));
            assert_eq!(g.delete(0).unwrap(), d);
            if matches!(f, Family::B | Family::C) {
                let t = affinize_twisted(&d).unwrap();
                t.validate().unwrap_or_else(|e| panic!("{}: {e}", t.name()));
                assert_eq!(t.delete(0).unwrap(), d);
            }
        }
    }

    #[test]
    fn cominuscule_examples() {
        let a4 = build_finite(Family::A, 4).unwrap();
        assert_eq!(cominuscule_nodes(&a4).unwrap(), NodeSet::from_iter(1..=4));
        let b5 = build_finite(Family::B, 5).unwrap();
        assert_eq!(cominuscule_nodes(&b5).unwrap(), NodeSet::singleton(1));
        let e7 = build_finite(Family::E, 7).unwrap();
        assert_eq!(cominuscule_nodes(&e7).unwrap(), NodeSet::singleton(6));
        let e6 = build_finite(Family::E, 6).unwrap();
        assert_eq!(cominuscule_nodes(&e6).unwrap(), NodeSet::from_iter([1, 5]));
        let d5 = build_finite(Family::D, 5).unwrap();
        assert_eq!(cominuscule_nodes(&d5).unwrap(), NodeSet::from_iter([1, 4, 5]));
        for (f, r) in [(Family::E, 8), (Family::F, 4), (Family::G, 2)] {
            assert!(cominuscule_nodes(&build_finite(f, r).unwrap()).unwrap().is_empty());
        }
    }

    #[test]
    fn minuscule_examples() {
        let c5 = build_finite(Family::C, 5).unwrap();
        assert_eq!(minuscule_nodes(&c5).unwrap(), NodeSet::singleton(1));
        let b5 = build_finite(Family::B, 5).unwrap();
        assert_eq!(minuscule_nodes(&b5).unwrap(), NodeSet::singleton(5));
        let a4 = build_finite(Family::A, 4).unwrap();
        assert_eq!(minuscule_nodes(&a4).unwrap(), NodeSet::from_iter(1..=4));
    }

    #[test]
    fn minuscule_equals_cominuscule_when_simply_laced() {
        for (f, r) in Family::types_up_to(8) {
            let d = build_finite(f, r).unwrap();
            if d.is_simply_laced() {
                assert_eq!(minuscule_nodes(&d).unwrap(), cominuscule_nodes(&d).unwrap(), "{f}{r}");
            }
        }
    }

    #[test]
    fn pinned_isomorphism_in_affine_a4() {
        let g = affinize_untwisted(&build_finite(Family::A, 4).unwrap()).unwrap();
        let (d1, d2) = (g.delete(0).unwrap(), g.delete(2).unwrap());
        let map = diagram_isomorphism(&d1, &d2, Some((2, 0))).expect("bijection");
        assert!(map.contains(&(2, 0)));
        assert!(is_isomorphism(&d1, &d2, &map));
    }

    #[test]
    fn self_isomorphism_is_identity() {
        for (f, r) in Family::types_up_to(6) {
            let d = build_finite(f, r).unwrap();
            let map = diagram_isomorphism(&d, &d, None).unwrap();
            assert!(map.iter().all(|&(a, b)| a == b));
        }
    }

    #[test]
    fn affine_b3_node_two_has_no_pinned_isomorphism() {
        let g = affinize_untwisted(&build_finite(Family::B, 3).unwrap()).unwrap();
        let (d1, d2) = (g.delete(0).unwrap(), g.delete(2).unwrap());
        assert!(!brute_force_iso(&d1, &d2, (2, 0)));
        assert_eq!(diagram_isomorphism(&d1, &d2, Some((2, 0))), None);
    }

    /// Diagram-level cominuscule criterion, checked against the detector for
    /// every node of every type up to rank 8 and against brute force up to 6.
    #[test]
    fn cominuscule_iff_pinned_isomorphism() {
        for (f, r) in Family::types_up_to(8) {
            let d = build_finite(f, r).unwrap();
            let g = affinize_untwisted(&d).unwrap();
            let comin = cominuscule_nodes(&d).unwrap();
            let d0 = g.delete(0).unwrap();
            for m in 1..=r {
                let dm = g.delete(m).unwrap();
                let found = diagram_isomorphism(&d0, &dm, Some((m, 0)));
                if let Some(map) = &found {
                    assert!(is_isomorphism(&d0, &dm, map));
                }
                assert_eq!(found.is_some(), comin.contains(m), "{f}{r} node {m}");
                if r <= 6 {
                    assert_eq!(brute_force_iso(&d0, &dm, (m, 0)), comin.contains(m), "{f}{r} node {m}");
                }
            }
        }
    }

    #[test]
    fn symmetrizer_tracks_root_lengths() {
        assert_eq!(build_finite(Family::B, 3).unwrap().symmetrizer(), vec![2, 2, 1]);
        assert_eq!(build_finite(Family::C, 3).unwrap().symmetrizer(), vec![1, 1, 2]);
        assert_eq!(build_finite(Family::G, 2).unwrap().symmetrizer(), vec![1, 3]);
        assert_eq!(build_finite(Family::F, 4).unwrap().symmetrizer(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn determinants_of_finite_types() {
        // det A_n = n + 1, det B_n = det C_n = 2, det D_n = 4, E6..E8 = 3, 2, 1
        assert_eq!(build_finite(Family::A, 5).unwrap().determinant(), 6);
        assert_eq!(build_finite(Family::B, 5).unwrap().determinant(), 2);
        assert_eq!(build_finite(Family::C, 5).unwrap().determinant(), 2);
        assert_eq!(build_finite(Family::D, 6).unwrap().determinant(), 4);
        assert_eq!(build_finite(Family::E, 6).unwrap().determinant(), 3);
        assert_eq!(build_finite(Family::E, 7).unwrap().determinant(), 2);
        assert_eq!(build_finite(Family::E, 8).unwrap().determinant(), 1);
    }

    #[test]
    fn node_set_basics() {
        let s = NodeSet::from_iter([0, 2, 3]);
        assert_eq!(s.to_string(), "{0,2,3}");
        assert_eq!(s.len(), 3);
        assert_eq!(s.subsets().len(), 8);
        assert!(NodeSet::singleton(2).is_subset(s));
        assert_eq!(s.without(0), NodeSet::from_iter([2, 3]));
    }

    #[test]
    fn dot_export_marks_arrows() {
        let dot = affinize_untwisted(&build_finite(Family::C, 2).unwrap()).unwrap().to_dot();
        assert!(dot.contains("n0 -- n1 [label=\"2\", dir=forward]"));
        assert!(dot.contains("n2 -- n1 [label=\"2\", dir=forward]"));
    }
}
