//! Per-case lemma checks.
//!
//! A case is a finite type with a chosen node `m`. Cominuscule nodes (and
//! nodes of neither class) are studied on the untwisted affinization; nodes
//! that are minuscule but not cominuscule on the twisted one. Every check is
//! a pure function of a [`CaseContext`] and yields a [`LemmaReport`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynkin::{
    affinize_twisted, affinize_untwisted, build_finite, cominuscule_nodes, diagram_isomorphism, minuscule_nodes,
    DiagramKind, DynkinDiagram, Family, NodeSet,
};
use crate::error::{Error, Result};
use crate::roots::{AffineRoot, AffineRootSystem, RootLength, RootSet, Sign};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeClass {
    Cominuscule,
    MinusculeOnly,
    Neither,
}

impl fmt::Display for NodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeClass::Cominuscule => "cominuscule",
            NodeClass::MinusculeOnly => "minuscule-only",
            NodeClass::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineChoice {
    pub kind: DiagramKind,
    pub diagram: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSpec {
    pub family: Family,
    pub rank: usize,
    pub node: usize,
    pub class: NodeClass,
    pub affine: AffineChoice,
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} m={} ({}, {})", self.family, self.rank, self.node, self.class, self.affine.diagram)
    }
}

fn affine_diagram(finite: &DynkinDiagram, class: NodeClass) -> Result<DynkinDiagram> {
    match class {
        NodeClass::MinusculeOnly => affinize_twisted(finite),
        _ => affinize_untwisted(finite),
    }
}

pub fn classify_case(family: Family, rank: usize, node: usize) -> Result<CaseSpec> {
    let finite = build_finite(family, rank)?;
    if node == 0 || node > rank {
        return Err(Error::InvalidNode(node));
    }
    let class = if cominuscule_nodes(&finite)?.contains(node) {
        NodeClass::Cominuscule
    } else if minuscule_nodes(&finite)?.contains(node) {
        NodeClass::MinusculeOnly
    } else {
        NodeClass::Neither
    };
    let g = affine_diagram(&finite, class)?;
    Ok(CaseSpec { family, rank, node, class, affine: AffineChoice { kind: g.kind(), diagram: g.name() } })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    Iso,
    Bp,
    Phi,
    Split,
    Weights,
    Dimension,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] =
        [LemmaId::Iso, LemmaId::Bp, LemmaId::Phi, LemmaId::Split, LemmaId::Weights, LemmaId::Dimension];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Iso => "iso",
            LemmaId::Bp => "bp",
            LemmaId::Phi => "phi",
            LemmaId::Split => "split",
            LemmaId::Weights => "weights",
            LemmaId::Dimension => "dimension",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown lemma `{s}` (expected iso, bp, phi, split, weights, dimension or all)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// Roots are rendered as `[a0,a1,...]` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Isomorphism { mapping: Vec<(usize, usize)> },
    NoIsomorphism { from: String, to: String, pin: (usize, usize) },
    Root { root: String, node: usize, coefficient: i64 },
    SplitTriple { alpha: String, beta: String, sum: String },
    UnmatchedRoot { root: String, set: String },
    RootPair { alpha: String, beta: String, reason: String },
    Mismatch { quantity: String, expected: String, found: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub dim_x: usize,
    pub len_w0: usize,
    pub len_wm: usize,
    pub len_y: usize,
    pub word_w0: String,
    pub word_wm: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub metrics: Metrics,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseSpec,
    pub checks: Vec<LemmaReport>,
}

/// Everything the checks share, built once per case.
pub struct CaseContext {
    pub spec: CaseSpec,
    pub finite: DynkinDiagram,
    pub affine: AffineRootSystem,
    pub group: WeylGroup,
    pub s0: NodeSet,
    pub sm: NodeSet,
    pub j: NodeSet,
    pub w0: WeylElement,
    pub wm: WeylElement,
    pub y: WeylElement,
    pub u0: RootSet,
    pub um_minus: RootSet,
    pub p0: RootSet,
}

impl CaseContext {
    pub fn new(spec: CaseSpec) -> Result<Self> {
        let finite = build_finite(spec.family, spec.rank)?;
        let g = affine_diagram(&finite, spec.class)?;
        let affine = AffineRootSystem::new(&g)?;
        let group = WeylGroup::new(&g);
        let m = spec.node;
        let s = g.nodes();
        let (s0, sm) = (s.without(0), s.without(m));
        let j = s0.without(m);
        let w0 = group.max_parabolic_quotient_rep(s0, j)?;
        let wm = group.max_parabolic_quotient_rep(sm, j)?;
        let y = group.multiply(&w0, &wm);
        let u0 = affine.nilradical_roots(m, 0, Sign::Positive)?;
        let um_minus = affine.nilradical_roots(m, m, Sign::Negative)?;
        let p0 = affine.parabolic_roots(m)?;
        Ok(CaseContext { spec, finite, affine, group, s0, sm, j, w0, wm, y, u0, um_minus, p0 })
    }

    pub fn metrics(&self) -> Metrics {
        Metrics {
            dim_x: self.u0.len(),
            len_w0: self.group.length(&self.w0),
            len_wm: self.group.length(&self.wm),
            len_y: self.group.length(&self.y),
            word_w0: self.group.word_string(&self.w0),
            word_wm: self.group.word_string(&self.wm),
        }
    }

    fn report(&self, lemma: LemmaId, verdict: Verdict, witness: Option<Witness>) -> LemmaReport {
        LemmaReport { lemma, verdict, witness, metrics: self.metrics(), notes: Vec::new() }
    }

    fn pass(&self, lemma: LemmaId) -> LemmaReport {
        self.report(lemma, Verdict::Pass, None)
    }

    fn fail(&self, lemma: LemmaId, witness: Witness) -> LemmaReport {
        self.report(lemma, Verdict::Fail, Some(witness))
    }

    fn not_applicable(&self, lemma: LemmaId, witness: Option<Witness>) -> LemmaReport {
        self.report(lemma, Verdict::NotApplicable, witness)
    }

    fn m_index(&self) -> usize {
        self.spec.node
    }

    /// First root of `R(u_0)` with `a_m >= 2`.
    fn high_coefficient_witness(&self) -> Option<Witness> {
        let m = self.m_index();
        self.u0.roots().find(|r| r.coeffs()[m] >= 2).map(|r| Witness::Root {
            root: r.to_string(),
            node: m,
            coefficient: r.coeffs()[m],
        })
    }

    fn sum_if_root(&self, a: &AffineRoot, b: &AffineRoot) -> Option<AffineRoot> {
        let s = a.add(b);
        self.affine.is_root(&s).then_some(s)
    }
}

fn mismatch(quantity: &str, expected: impl fmt::Display, found: impl fmt::Display) -> Witness {
    Witness::Mismatch { quantity: quantity.into(), expected: expected.to_string(), found: found.to_string() }
}

pub fn check_diagram_iso(ctx: &CaseContext) -> Result<LemmaReport> {
    let g = ctx.affine.diagram();
    let m = ctx.spec.node;
    let d0 = g.delete(0)?;
    let dm = g.delete(m)?;
    Ok(match diagram_isomorphism(&d0, &dm, Some((m, 0))) {
        Some(mapping) => ctx.report(LemmaId::Iso, Verdict::Pass, Some(Witness::Isomorphism { mapping })),
        None => ctx.fail(
            LemmaId::Iso,
            Witness::NoIsomorphism { from: format!("{} \\ {{0}}", g.name()), to: format!("{} \\ {{{m}}}", g.name()), pin: (m, 0) },
        ),
    })
}

pub fn check_bp(ctx: &CaseContext) -> Result<LemmaReport> {
    let g = &ctx.group;
    let pd = g.parabolic_decomposition(&ctx.y, ctx.sm)?;
    let mut report = if pd.v != ctx.w0 || pd.u != ctx.wm {
        ctx.fail(
            LemmaId::Bp,
            mismatch(
                "parabolic decomposition of y",
                format!("({}) ({})", g.word_string(&ctx.w0), g.word_string(&ctx.wm)),
                format!("({}) ({})", g.word_string(&pd.v), g.word_string(&pd.u)),
            ),
        )
    } else if !g.is_bp(&ctx.y, ctx.sm, ctx.j)? {
        ctx.fail(
            LemmaId::Bp,
            mismatch(
                "supp(v) within D^J(u)",
                g.coset_descents(&pd.u, ctx.j)?,
                g.support(&pd.v).intersection(ctx.sm),
            ),
        )
    } else {
        let d = g.coset_descents(&ctx.y, ctx.j)?;
        if d == ctx.s0 {
            ctx.pass(LemmaId::Bp)
        } else {
            ctx.fail(LemmaId::Bp, mismatch("D^J(y)", ctx.s0, d))
        }
    };
    if ctx.spec.class == NodeClass::MinusculeOnly {
        report.notes.push(format!("y is taken as w0*w{}", ctx.spec.node));
    }
    Ok(report)
}

pub fn check_phi_bijection(ctx: &CaseContext) -> Result<LemmaReport> {
    if ctx.spec.class != NodeClass::Cominuscule {
        return Ok(ctx.not_applicable(LemmaId::Phi, ctx.high_coefficient_witness()));
    }
    let delta = ctx.affine.delta();
    for a in ctx.u0.roots() {
        let image = a.sub(delta);
        if !ctx.um_minus.contains(&image) {
            return Ok(ctx.fail(LemmaId::Phi, Witness::UnmatchedRoot { root: a.to_string(), set: "u0".into() }));
        }
    }
    for b in ctx.um_minus.roots() {
        if !ctx.u0.contains(&b.add(delta)) {
            return Ok(ctx.fail(LemmaId::Phi, Witness::UnmatchedRoot { root: b.to_string(), set: "um-".into() }));
        }
    }
    for a in ctx.u0.roots() {
        let image = a.sub(delta);
        for b in ctx.p0.roots() {
            let pair = |reason: &str| Witness::RootPair { alpha: a.to_string(), beta: b.to_string(), reason: reason.into() };
            match (ctx.sum_if_root(a, b), ctx.sum_if_root(&image, b)) {
                (None, None) => {}
                (Some(s), Some(t)) => {
                    if !ctx.u0.contains(&s) {
                        return Ok(ctx.fail(LemmaId::Phi, pair("alpha+beta leaves u0")));
                    }
                    if !ctx.um_minus.contains(&t) || s.sub(delta) != t {
                        return Ok(ctx.fail(LemmaId::Phi, pair("shifted sum leaves um-")));
                    }
                }
                _ => return Ok(ctx.fail(LemmaId::Phi, pair("shift does not commute with addition"))),
            }
        }
    }
    Ok(ctx.pass(LemmaId::Phi))
}

pub fn check_twisted_split(ctx: &CaseContext) -> Result<LemmaReport> {
    if ctx.spec.class != NodeClass::MinusculeOnly {
        return Ok(ctx.not_applicable(LemmaId::Split, None));
    }
    let mut short = Vec::new();
    let mut long = Vec::new();
    for (r, len) in ctx.um_minus.members() {
        match (r.coeffs()[0], len) {
            (-1, RootLength::Short) => short.push(r),
            (-2, RootLength::Long) => long.push(r),
            _ => {
                return Ok(ctx.fail(
                    LemmaId::Split,
                    mismatch("length class of a0 level", "short at a0=-1, long at a0=-2", format!("{r} {len:?}")),
                ))
            }
        }
    }
    for part in [&short, &long] {
        for &g in part.iter() {
            for b in ctx.p0.roots() {
                if let Some(s) = ctx.sum_if_root(g, b) {
                    if !part.contains(&&s) {
                        return Ok(ctx.fail(
                            LemmaId::Split,
                            Witness::RootPair { alpha: g.to_string(), beta: b.to_string(), reason: "sum leaves its part".into() },
                        ));
                    }
                }
            }
        }
    }
    for (a, la) in ctx.u0.members() {
        if *la != RootLength::Short {
            continue;
        }
        for b in ctx.p0.roots() {
            let s = a.add(b);
            if ctx.u0.length_of(&s) == Some(RootLength::Long) {
                let mut r = ctx.report(
                    LemmaId::Split,
                    Verdict::Pass,
                    Some(Witness::SplitTriple { alpha: a.to_string(), beta: b.to_string(), sum: s.to_string() }),
                );
                r.notes.push("non-split at weight level".into());
                return Ok(r);
            }
        }
    }
    Ok(ctx.fail(LemmaId::Split, mismatch("short-to-long pair in u0", "a witness", "none")))
}

pub fn check_weight_agreement_and_attractivity(ctx: &CaseContext) -> Result<LemmaReport> {
    if ctx.spec.class == NodeClass::Neither {
        return Ok(ctx.not_applicable(LemmaId::Weights, None));
    }
    let reduced = |set: &RootSet| -> Vec<AffineRoot> {
        let mut v: Vec<AffineRoot> = set.roots().map(|r| ctx.affine.reduce(r).0).collect();
        v.sort_by(|a, b| a.display_cmp(b));
        v
    };
    let (a, b) = (reduced(&ctx.u0), reduced(&ctx.um_minus));
    if a != b {
        let fmt = |v: &[AffineRoot]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ");
        return Ok(ctx.fail(LemmaId::Weights, mismatch("weights mod delta", fmt(&a), fmt(&b))));
    }
    let m = ctx.spec.node;
    for r in ctx.u0.roots().chain(ctx.um_minus.roots()) {
        let p = ctx.affine.coweight_pairing(r, m)?;
        if p <= 0 {
            return Ok(ctx.fail(LemmaId::Weights, Witness::Root { root: r.to_string(), node: m, coefficient: p }));
        }
    }
    if ctx.affine.coweight_pairing(ctx.affine.delta(), m)? != 0 {
        return Err(Error::Invariant("delta pairs non-trivially with a finite coweight".into()));
    }
    Ok(ctx.pass(LemmaId::Weights))
}

pub fn dimension_report(ctx: &CaseContext) -> Result<LemmaReport> {
    if ctx.spec.class != NodeClass::Cominuscule {
        return Ok(ctx.not_applicable(LemmaId::Dimension, None));
    }
    let m = ctx.metrics();
    let n = m.dim_x;
    Ok(if m.len_w0 != n {
        ctx.fail(LemmaId::Dimension, mismatch("l(w0)", n, m.len_w0))
    } else if m.len_wm != n {
        ctx.fail(LemmaId::Dimension, mismatch("l(wm)", n, m.len_wm))
    } else if m.len_y != 2 * n {
        ctx.fail(LemmaId::Dimension, mismatch("l(y)", 2 * n, m.len_y))
    } else {
        ctx.pass(LemmaId::Dimension)
    })
}

pub fn run_check(ctx: &CaseContext, lemma: LemmaId) -> Result<LemmaReport> {
    let report = match lemma {
        LemmaId::Iso => check_diagram_iso(ctx),
        LemmaId::Bp => check_bp(ctx),
        LemmaId::Phi => check_phi_bijection(ctx),
        LemmaId::Split => check_twisted_split(ctx),
        LemmaId::Weights => check_weight_agreement_and_attractivity(ctx),
        LemmaId::Dimension => dimension_report(ctx),
    }?;
    let m = &report.metrics;
    if m.len_y != m.len_w0 + m.len_wm {
        return Err(Error::Invariant(format!("l(y) = {} but l(w0) + l(wm) = {}", m.len_y, m.len_w0 + m.len_wm)));
    }
    if report.verdict == Verdict::Fail && report.witness.is_none() {
        return Err(Error::Invariant(format!("{lemma} failed without a witness")));
    }
    Ok(report)
}

/// Runs `lemmas` in the given order on one case.
pub fn verify_case(spec: CaseSpec, lemmas: &[LemmaId]) -> Result<CaseReport> {
    let ctx = CaseContext::new(spec)?;
    let checks = lemmas.iter().map(|&l| run_check(&ctx, l)).collect::<Result<_>>()?;
    Ok(CaseReport { case: ctx.spec, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(f: Family, n: usize, m: usize) -> CaseContext {
        CaseContext::new(classify_case(f, n, m).unwrap()).unwrap()
    }

    fn verdict(f: Family, n: usize, m: usize, lemma: LemmaId) -> LemmaReport {
        run_check(&ctx(f, n, m), lemma).unwrap()
    }

    #[test]
    fn classification() {
        let b41 = classify_case(Family::B, 4, 1).unwrap();
        assert_eq!((b41.class, b41.affine.kind), (NodeClass::Cominuscule, DiagramKind::UntwistedAffine));
        assert_eq!(b41.affine.diagram, "B4^(1)");
        let b44 = classify_case(Family::B, 4, 4).unwrap();
        assert_eq!((b44.class, b44.affine.kind), (NodeClass::MinusculeOnly, DiagramKind::TwistedAffine));
        assert_eq!(b44.affine.diagram, "D5^(2)");
        assert_eq!(classify_case(Family::B, 4, 2).unwrap().class, NodeClass::Neither);
        assert_eq!(classify_case(Family::C, 3, 1).unwrap().affine.diagram, "A5^(2)");
        assert!(matches!(classify_case(Family::D, 3, 1), Err(Error::InvalidType { .. })));
        assert_eq!(classify_case(Family::A, 3, 4), Err(Error::InvalidNode(4)));
    }

    #[test]
    fn iso_examples() {
        assert_eq!(verdict(Family::A, 5, 2, LemmaId::Iso).verdict, Verdict::Pass);
        assert_eq!(verdict(Family::C, 3, 1, LemmaId::Iso).verdict, Verdict::Pass);
        let r = verdict(Family::B, 3, 2, LemmaId::Iso);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(matches!(r.witness, Some(Witness::NoIsomorphism { pin: (2, 0), .. })));
    }

    #[test]
    fn bp_examples() {
        let r = verdict(Family::A, 3, 2, LemmaId::Bp);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.metrics.len_w0, r.metrics.len_wm, r.metrics.len_y), (4, 4, 8));
        let r = verdict(Family::A, 1, 1, LemmaId::Bp);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.metrics.len_w0, r.metrics.len_y), (1, 2));
        let r = verdict(Family::C, 3, 3, LemmaId::Bp);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.metrics.len_w0, 6);
        let r = verdict(Family::B, 3, 3, LemmaId::Bp);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.notes, vec!["y is taken as w0*w3".to_string()]);
    }

    #[test]
    fn phi_examples() {
        let c = ctx(Family::A, 2, 1);
        let u0: Vec<String> = c.u0.roots().map(|r| r.to_string()).collect();
        let um: Vec<String> = c.um_minus.roots().map(|r| r.to_string()).collect();
        assert_eq!(u0, ["[0,1,0]", "[0,1,1]"]);
        assert_eq!(um, ["[-1,0,0]", "[-1,0,-1]"]);
        assert_eq!(run_check(&c, LemmaId::Phi).unwrap().verdict, Verdict::Pass);

        let r = verdict(Family::E, 7, 6, LemmaId::Phi);
        assert_eq!((r.verdict, r.metrics.dim_x), (Verdict::Pass, 27));

        let r = verdict(Family::B, 3, 2, LemmaId::Phi);
        assert_eq!(r.verdict, Verdict::NotApplicable);
        match r.witness {
            Some(Witness::Root { node: 2, coefficient, .. }) => assert_eq!(coefficient, 2),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn split_examples() {
        let r = verdict(Family::C, 2, 1, LemmaId::Split);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(
            r.witness,
            Some(Witness::SplitTriple { alpha: "[0,1,0]".into(), beta: "[0,1,1]".into(), sum: "[0,2,1]".into() })
        );
        assert_eq!(r.notes, vec!["non-split at weight level".to_string()]);
        assert_eq!(verdict(Family::B, 3, 3, LemmaId::Split).verdict, Verdict::Pass);
        assert_eq!(verdict(Family::A, 3, 2, LemmaId::Split).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn weights_examples() {
        assert_eq!(verdict(Family::A, 2, 1, LemmaId::Weights).verdict, Verdict::Pass);
        let c = ctx(Family::C, 2, 1);
        assert_eq!(c.um_minus.len(), 3);
        assert_eq!(run_check(&c, LemmaId::Weights).unwrap().verdict, Verdict::Pass);
        assert_eq!(verdict(Family::B, 4, 2, LemmaId::Weights).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn dimension_examples() {
        for (f, n, m, dim) in [(Family::A, 5, 2, 8), (Family::E, 6, 1, 16), (Family::D, 5, 5, 10), (Family::C, 3, 3, 6)] {
            let r = verdict(f, n, m, LemmaId::Dimension);
            assert_eq!((r.verdict, r.metrics.dim_x), (Verdict::Pass, dim), "{f}{n} m={m}");
        }
        assert_eq!(verdict(Family::C, 3, 1, LemmaId::Dimension).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn verify_case_keeps_order() {
        let spec = classify_case(Family::A, 2, 1).unwrap();
        let r = verify_case(spec, &[LemmaId::Weights, LemmaId::Iso]).unwrap();
        assert_eq!(r.checks.iter().map(|c| c.lemma).collect::<Vec<_>>(), [LemmaId::Weights, LemmaId::Iso]);
    }

    #[test]
    fn lemma_ids_round_trip() {
        for l in LemmaId::ALL {
            assert_eq!(l.as_str().parse::<LemmaId>(), Ok(l));
            assert_eq!(serde_json::to_string(&l).unwrap(), format!("\"{l}\""));
        }
        assert!("everything".parse::<LemmaId>().is_err());
    }
}
