//! Constructive table builders and the dispatcher that picks one by the
//! shape of the carrier.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::rdp::{positivity, sums_ok, Equation, RdpTable};

mod lexsplit;
mod linear;
mod prodlinear;
mod strengthen;
mod strict;

pub use lexsplit::{solve_lex_comdirected, solve_lex_ncdp, solve_lex_ncdp_with_heads, solve_lex_wrdp};
pub use linear::{degenerate_table, solve_linear, solve_product};
pub use prodlinear::solve_lex_prodlinear_rdp1;
pub use strengthen::{antilattice_strengthen, wrdp_corner_table};
pub use strict::{solve_strict_product, solve_strict_product_lex};

/// Which construction produced a table, with the auxiliary elements it used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolverTrace {
    pub tag: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub aux: BTreeMap<String, Element>,
    /// Index sets of a product head split, 1-based.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub index_sets: BTreeMap<String, Vec<usize>>,
    /// Named identities re-checked while building.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub checks: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sub: Vec<SolverTrace>,
}

impl SolverTrace {
    pub fn new(tag: impl Into<String>) -> Self {
        SolverTrace { tag: tag.into(), ..Default::default() }
    }

    pub fn aux(mut self, name: &str, e: &Element) -> Self {
        self.aux.insert(name.into(), e.clone());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn check(mut self, name: &str, ok: bool) -> Self {
        self.checks.insert(name.into(), ok);
        self
    }

    pub fn with_sub(mut self, t: SolverTrace) -> Self {
        self.sub.push(t);
        self
    }

    /// Every tag in this trace and its sub-traces, depth first.
    pub fn all_tags(&self) -> Vec<&str> {
        let mut out = vec![self.tag.as_str()];
        for s in &self.sub {
            out.extend(s.all_tags());
        }
        out
    }
}

pub type Solved = (RdpTable, SolverTrace);

/// Shared state of one dispatcher call.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Ctx {
    pub budget: SearchBudget,
    pub depth: usize,
}

impl Ctx {
    pub fn new(budget: &SearchBudget) -> Self {
        Ctx { budget: *budget, depth: 0 }
    }

    /// Solves a sub-equation in a factor with the full dispatcher.
    pub fn sub(&self, desc: &GroupDescriptor, eq: &Equation) -> Result<Solved> {
        if self.depth > 24 {
            return Err(Error::SolverFailed("descriptor nesting too deep".into()));
        }
        let next = Ctx { budget: self.budget, depth: self.depth + 1 };
        dispatch(desc, eq, &next).map_err(|e| match e {
            Error::NoRuleApplies(m) => Error::SolverFailed(format!("no rule for factor {desc}: {m}")),
            other => other,
        })
    }
}

/// Re-checks the sums and positivity of a freshly built table.
pub(crate) fn certify(desc: &GroupDescriptor, t: RdpTable, tag: &str) -> Result<RdpTable> {
    if !sums_ok(desc, &t)? {
        return Err(Error::ConstructionFailed(format!("{tag}: sums do not hold")));
    }
    if !positivity(desc, &t)?.iter().all(|&p| p) {
        return Err(Error::ConstructionFailed(format!("{tag}: an entry is not positive")));
    }
    Ok(t)
}

/// Errors that stop the dispatcher instead of letting it try the next rule.
fn is_hard(e: &Error) -> bool {
    matches!(e, Error::ConstructionFailed(_) | Error::DensityRequired(_) | Error::ShapeMismatch { .. })
}

fn is_dense_chain(d: &GroupDescriptor) -> bool {
    matches!(d, GroupDescriptor::Rat)
}

/// Linear carriers handled by plain min-splitting (lexicographic products go
/// through the head-case constructions instead).
pub(crate) fn is_plain_linear(d: &GroupDescriptor) -> bool {
    d.is_linear() && !matches!(d, GroupDescriptor::Lex { .. })
}

pub(crate) fn is_product_of_linears(d: &GroupDescriptor) -> bool {
    match d {
        GroupDescriptor::Prod { mode: ProductMode::Product, children } => children.iter().all(|c| c.is_linear()),
        _ => d.is_linear(),
    }
}

fn dispatch(desc: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Solved> {
    use GroupDescriptor as D;
    eq.check_positive(desc)?;
    if let Some(t) = degenerate_table(desc, eq)? {
        return Ok((certify(desc, t, "degenerate")?, SolverTrace::new("degenerate")));
    }
    if is_plain_linear(desc) {
        let t = solve_linear(desc, eq)?;
        return Ok((certify(desc, t, "linear")?, SolverTrace::new("linear")));
    }
    let mut attempts: Vec<Error> = Vec::new();
    let record = |r: Result<Solved>, attempts: &mut Vec<Error>| -> Option<Result<Solved>> {
        match r {
            Ok(s) => Some(Ok(s)),
            Err(e) if is_hard(&e) => Some(Err(e)),
            Err(e) => {
                attempts.push(e);
                None
            }
        }
    };
    match desc {
        D::Lex { first, second } if first.is_trivially_ordered() => {
            if let Some(r) = record(linear::solve_trivial_first(first, second, eq, ctx), &mut attempts) {
                return r;
            }
        }
        D::Prod { mode: ProductMode::Strict, children } => {
            if !children.iter().all(is_dense_chain) {
                return Err(Error::DensityRequired(format!(
                    "{desc}: strictly positive tables need a dense factor (no element strictly between 0 and 1 in Z)"
                )));
            }
            let t = solve_strict_product(desc, eq)?;
            return Ok((t, SolverTrace::new("strict-product")));
        }
        D::Prod { mode: ProductMode::Product, .. } => {
            if let Some(r) = record(linear::solve_product_ctx(desc, eq, ctx), &mut attempts) {
                return r;
            }
        }
        _ => {}
    }
    if let D::Lex { first, second } = desc {
        if let D::Prod { mode: ProductMode::Strict, children } = first.as_ref() {
            if children.iter().all(is_dense_chain) && second.is_directed() {
                if let Some(r) = record(strict::strict_product_lex_ctx(first, second, eq, ctx), &mut attempts) {
                    return r;
                }
            }
        }
        if is_product_of_linears(first) && second.is_directed() {
            if let Some(r) = record(prodlinear::prodlinear_ctx(first, second, eq, ctx), &mut attempts) {
                return r;
            }
        }
        if crate::props::is_com_directed(second) {
            if let Some(r) = record(lexsplit::comdirected_ctx(first, second, eq, ctx), &mut attempts) {
                return r;
            }
        }
        if second.is_directed() {
            if let Some(r) = record(lexsplit::ncdp_ctx(first, second, eq, ctx), &mut attempts) {
                return r;
            }
        }
        if let Some(r) = record(lexsplit::wrdp_ctx(first, second, eq, ctx), &mut attempts) {
            return r;
        }
    }
    let why: Vec<String> = attempts.iter().map(|e| e.to_string()).collect();
    Err(Error::NoRuleApplies(if why.is_empty() {
        format!("{desc}")
    } else {
        format!("{desc} ({})", why.join("; "))
    }))
}

/// Routes an equation to the first construction whose hypotheses hold.
/// The returned table has been re-checked for sums and positivity.
pub fn solve(desc: &GroupDescriptor, eq: &Equation, budget: &SearchBudget) -> Result<Solved> {
    dispatch(desc, eq, &Ctx::new(budget))
}

/// `solve` with the default budget, dropping the trace.
pub fn solve_table(desc: &GroupDescriptor, eq: &Equation) -> Result<RdpTable> {
    Ok(solve(desc, eq, &SearchBudget::default())?.0)
}

/// Splits a pair element into head and tail.
pub(crate) fn ht(e: &Element) -> (Element, Element) {
    let (a, g) = e.split2().expect("lexicographic elements are pairs");
    (a.clone(), g.clone())
}

/// Greatest-lower-bound style witness below four elements.
pub(crate) fn lower4(g: &GroupDescriptor, xs: [&Element; 4]) -> Result<Element> {
    use crate::props::directed_witness;
    let p = directed_witness(g, xs[0], xs[1])?;
    let q = directed_witness(g, xs[2], xs[3])?;
    directed_witness(g, &p, &q)
}

pub(crate) fn central_lower4(g: &GroupDescriptor, xs: [&Element; 4]) -> Result<Element> {
    use crate::props::com_directed_witness;
    let p = com_directed_witness(g, xs[0], xs[1])?;
    let q = com_directed_witness(g, xs[2], xs[3])?;
    com_directed_witness(g, &p, &q)
}
