//! Branch-and-bound positivity certificates and their independent re-validation.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corner::{corner_estimate, CornerSplit};
use super::patch::{to_bernstein, BernsteinPatch, Rect};
use super::poly::BiPoly;
use crate::error::{Error, Result};
use crate::rational::{serde_frac, Rational};

/// Lattice size per side used to pick the witness point of a failed leaf.
pub const WITNESS_LATTICE: usize = 17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeStatus {
    CoeffPositive,
    Subdivided,
    CornerCertified,
    Failed,
}

/// A declared zero of `F` at which the corner estimate may be applied.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CornerRule {
    #[serde(with = "serde_frac")]
    pub p: Rational,
    #[serde(with = "serde_frac")]
    pub x: Rational,
}

impl CornerRule {
    /// Checks that `F` and its gradient vanish at `(p, x)`.
    pub fn new(f: &BiPoly, p: Rational, x: Rational) -> Result<Self> {
        let g = f.remap(&p, &Rational::one(), &x, &Rational::one());
        for (i, j) in [(0, 0), (1, 0), (0, 1)] {
            if !g.coeff(i, j).is_zero() {
                return Err(Error::NotACornerZero(format!(
                    "coefficient of p^{i} x^{j} at ({p}, {x}) is {}",
                    g.coeff(i, j)
                )));
            }
        }
        Ok(Self { p, x })
    }

    pub fn origin(f: &BiPoly) -> Result<Self> {
        Self::new(f, Rational::zero(), Rational::zero())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "serde_frac")]
    pub p: Rational,
    #[serde(with = "serde_frac")]
    pub x: Rational,
    #[serde(with = "serde_frac")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertNode {
    #[serde(rename = "box")]
    pub rect: Rect,
    pub status: NodeStatus,
    #[serde(with = "serde_frac")]
    pub min_bcoeff: Rational,
    #[serde(with = "serde_frac")]
    pub max_bcoeff: Rational,
    #[serde(
        default,
        with = "serde_frac::option",
        skip_serializing_if = "Option::is_none"
    )]
    pub margin: Option<Rational>,
    pub children: Vec<CertNode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CertNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Leaves in depth-first canonical order, with their depth.
    pub fn leaves(&self) -> Vec<(usize, &CertNode)> {
        let mut out = Vec::new();
        self.collect_leaves(0, &mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, depth: usize, out: &mut Vec<(usize, &'a CertNode)>) {
        if self.is_leaf() {
            out.push((depth, self));
        }
        for c in &self.children {
            c.collect_leaves(depth + 1, out);
        }
    }

    pub fn depth(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Certificate document: the root node's fields at the top level plus the
/// settings it was built with.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PositivityCertificate {
    #[serde(flatten)]
    pub root: CertNode,
    pub max_depth: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<CornerRule>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertSummary {
    pub nodes: usize,
    pub leaves: usize,
    pub coeff_positive: usize,
    pub corner_certified: usize,
    pub failed: usize,
    pub depth: usize,
}

impl CertSummary {
    pub fn success(&self) -> bool {
        self.failed == 0
    }
}

impl PositivityCertificate {
    pub fn success(&self) -> bool {
        self.summary().success()
    }

    pub fn summary(&self) -> CertSummary {
        let mut s = CertSummary {
            depth: self.root.depth(),
            ..Default::default()
        };
        count(&self.root, &mut s);
        s
    }

    pub fn leaves(&self) -> Vec<(usize, &CertNode)> {
        self.root.leaves()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Certificate(e.to_string()))
    }
}

fn count(n: &CertNode, s: &mut CertSummary) {
    s.nodes += 1;
    if n.is_leaf() {
        s.leaves += 1;
    }
    match n.status {
        NodeStatus::CoeffPositive => s.coeff_positive += 1,
        NodeStatus::CornerCertified => s.corner_certified += 1,
        NodeStatus::Failed => s.failed += 1,
        NodeStatus::Subdivided => {}
    }
    for c in &n.children {
        count(c, s);
    }
}

/// Tries to prove `F > 0` on `rect` except at the declared corner zero.
///
/// Each node is a positive leaf if its Bernstein coefficients are all
/// positive, a corner leaf if it has the declared zero as a corner and the
/// corner estimate succeeds, and otherwise is quadrisected until `max_depth`.
/// Subtrees are built in parallel; the result does not depend on scheduling.
pub fn certify_positive(
    f: &BiPoly,
    rect: &Rect,
    max_depth: usize,
    corner: Option<&CornerRule>,
) -> PositivityCertificate {
    let root = build(f, to_bernstein(f, rect), 0, max_depth, corner);
    PositivityCertificate {
        root,
        max_depth,
        corner: corner.cloned(),
    }
}

fn build(
    f: &BiPoly,
    patch: BernsteinPatch,
    depth: usize,
    max_depth: usize,
    corner: Option<&CornerRule>,
) -> CertNode {
    let (min_b, max_b) = patch.enclosure();
    let node = |status, margin, children, witness| CertNode {
        rect: patch.rect.clone(),
        status,
        min_bcoeff: min_b.clone(),
        max_bcoeff: max_b.clone(),
        margin,
        children,
        witness,
    };
    if min_b.is_positive() {
        return node(NodeStatus::CoeffPositive, None, vec![], None);
    }
    if let Some(rule) = corner.filter(|r| patch.rect.is_corner(&r.p, &r.x)) {
        if let Ok(split) = CornerSplit::at_corner(f, &patch.rect, (&rule.p, &rule.x)) {
            let est = corner_estimate(&split);
            if est.success {
                return node(NodeStatus::CornerCertified, Some(est.margin), vec![], None);
            }
        }
    }
    if depth >= max_depth {
        let w = lattice_minimizer(f, &patch.rect);
        return node(NodeStatus::Failed, None, vec![], Some(w));
    }
    let children: Vec<CertNode> = patch
        .subdivide()
        .into_par_iter()
        .map(|c| build(f, c, depth + 1, max_depth, corner))
        .collect();
    node(NodeStatus::Subdivided, None, children, None)
}

/// Minimizer of `F` over a `17 x 17` rational lattice on the box; ties keep
/// the first point in row-major order.
fn lattice_minimizer(f: &BiPoly, r: &Rect) -> Witness {
    let steps = (WITNESS_LATTICE - 1) as i64;
    let mut best: Option<Witness> = None;
    for i in 0..=steps {
        let p = &r.p_lo + r.p_width() * Rational::new(i.into(), steps.into());
        for j in 0..=steps {
            let x = &r.x_lo + r.x_width() * Rational::new(j.into(), steps.into());
            let value = f.eval(&p, &x);
            if best.as_ref().is_none_or(|b| value < b.value) {
                best = Some(Witness {
                    p: p.clone(),
                    x,
                    value,
                });
            }
        }
    }
    best.expect("non-empty lattice")
}

/// Re-checks every claim in `cert` against `f` from scratch, recomputing
/// enclosures by direct basis conversion (never by subdivision) and corner
/// margins from the polynomial. Returns the tree summary; a certificate with
/// failed leaves is well formed but not a proof, see [`CertSummary::success`].
pub fn validate(cert: &PositivityCertificate, f: &BiPoly) -> Result<CertSummary> {
    if let Some(rule) = &cert.corner {
        CornerRule::new(f, rule.p.clone(), rule.x.clone())?;
    }
    check_node(&cert.root, f, 0, cert.max_depth, cert.corner.as_ref())?;
    Ok(cert.summary())
}

fn check_node(
    n: &CertNode,
    f: &BiPoly,
    depth: usize,
    max_depth: usize,
    corner: Option<&CornerRule>,
) -> Result<()> {
    let fail = |msg: String| Err(Error::Certificate(format!("{}: {msg}", n.rect)));
    if depth > max_depth {
        return fail(format!("depth {depth} exceeds max_depth {max_depth}"));
    }
    let (lo, hi) = to_bernstein(f, &n.rect).enclosure();
    if lo != n.min_bcoeff || hi != n.max_bcoeff {
        return fail(format!(
            "recorded enclosure [{}, {}] differs from recomputed [{lo}, {hi}]",
            n.min_bcoeff, n.max_bcoeff
        ));
    }
    if n.status != NodeStatus::Subdivided && !n.children.is_empty() {
        return fail("leaf status with children".into());
    }
    if n.status != NodeStatus::CornerCertified && n.margin.is_some() {
        return fail("margin recorded on a non-corner node".into());
    }
    match n.status {
        NodeStatus::CoeffPositive => {
            if !lo.is_positive() {
                return fail(format!("claimed positive but min coefficient is {lo}"));
            }
        }
        NodeStatus::CornerCertified => {
            let Some(rule) = corner else {
                return fail("corner leaf without a declared corner".into());
            };
            let split = CornerSplit::at_corner(f, &n.rect, (&rule.p, &rule.x))?;
            let est = corner_estimate(&split);
            if !est.success {
                return fail(format!("corner margin {} is not positive", est.margin));
            }
            if n.margin.as_ref() != Some(&est.margin) {
                return fail(format!(
                    "recorded margin differs from recomputed {}",
                    est.margin
                ));
            }
        }
        NodeStatus::Failed => {
            let Some(w) = &n.witness else {
                return fail("failed leaf without witness".into());
            };
            if !n.rect.contains(&w.p, &w.x) || f.eval(&w.p, &w.x) != w.value {
                return fail("witness is outside the box or has the wrong value".into());
            }
        }
        NodeStatus::Subdivided => {
            let quads = n.rect.quadrants();
            if n.children.len() != 4 || n.children.iter().zip(&quads).any(|(c, q)| &c.rect != q) {
                return fail("children are not the midpoint quadrants in canonical order".into());
            }
            for c in &n.children {
                check_node(c, f, depth + 1, max_depth, corner)?;
            }
        }
    }
    Ok(())
}
