//! RDP tables, their exact verification, and the Riesz-property checks on
//! concrete tables.

use serde::Serialize;

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::props::{antilattice_status, strict_between, UnknownReason, Verdict};
use crate::sample::interval_candidates;

pub use crate::sample::lower_interval;

/// a1 + a2 = b1 + b2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Equation {
    pub a1: Element,
    pub a2: Element,
    pub b1: Element,
    pub b2: Element,
}

impl Equation {
    pub fn new(a1: Element, a2: Element, b1: Element, b2: Element) -> Self {
        Equation { a1, a2, b1, b2 }
    }

    pub fn elements(&self) -> [&Element; 4] {
        [&self.a1, &self.a2, &self.b1, &self.b2]
    }

    /// Shapes and the sum identity.
    pub fn check(&self, desc: &GroupDescriptor) -> Result<()> {
        for e in self.elements() {
            desc.check(e)?;
        }
        if desc.add(&self.a1, &self.a2)? != desc.add(&self.b1, &self.b2)? {
            return Err(Error::InvalidEquation(format!(
                "{} + {} != {} + {}",
                self.a1, self.a2, self.b1, self.b2
            )));
        }
        Ok(())
    }

    /// Shapes, sum identity, and all four elements positive.
    pub fn check_positive(&self, desc: &GroupDescriptor) -> Result<()> {
        self.check(desc)?;
        for e in self.elements() {
            if !desc.is_positive(e)? {
                return Err(Error::InvalidEquation(format!("{e} is not positive")));
            }
        }
        Ok(())
    }

    /// The equation read with rows and columns exchanged.
    pub fn transposed(&self) -> Equation {
        Equation::new(self.b1.clone(), self.b2.clone(), self.a1.clone(), self.a2.clone())
    }
}

/// Rows sum to a1, a2 and columns to b1, b2:
/// a1 = c11 + c12, a2 = c21 + c22, b1 = c11 + c21, b2 = c12 + c22.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RdpTable {
    pub c11: Element,
    pub c12: Element,
    pub c21: Element,
    pub c22: Element,
    pub equation: Equation,
}

impl RdpTable {
    pub fn new(eq: &Equation, c11: Element, c12: Element, c21: Element, c22: Element) -> Self {
        RdpTable { c11, c12, c21, c22, equation: eq.clone() }
    }

    pub fn entries(&self) -> [&Element; 4] {
        [&self.c11, &self.c12, &self.c21, &self.c22]
    }

    /// The same table for the transposed equation.
    pub fn transposed(&self) -> RdpTable {
        RdpTable::new(&self.equation.transposed(), self.c11.clone(), self.c21.clone(), self.c12.clone(), self.c22.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub sums_ok: bool,
    /// c11, c12, c21, c22 in that order.
    pub positivity: [bool; 4],
    pub rdp1_verdict: Verdict,
    pub rdp2_verdict: Verdict,
}

impl TableReport {
    pub fn all_positive(&self) -> bool {
        self.positivity.iter().all(|&p| p)
    }

    /// Sums hold and every entry is positive.
    pub fn is_rdp_table(&self) -> bool {
        self.sums_ok && self.all_positive()
    }
}

/// The four sum identities, in the non-abelian operand order.
pub fn sums_ok(desc: &GroupDescriptor, t: &RdpTable) -> Result<bool> {
    let e = &t.equation;
    Ok(desc.add(&t.c11, &t.c12)? == e.a1
        && desc.add(&t.c21, &t.c22)? == e.a2
        && desc.add(&t.c11, &t.c21)? == e.b1
        && desc.add(&t.c12, &t.c22)? == e.b2)
}

pub fn positivity(desc: &GroupDescriptor, t: &RdpTable) -> Result<[bool; 4]> {
    let mut out = [false; 4];
    for (slot, e) in out.iter_mut().zip(t.entries()) {
        *slot = desc.is_positive(e)?;
    }
    Ok(out)
}

/// Recomputes everything from the entries; solver output is never trusted.
pub fn verify_table(desc: &GroupDescriptor, t: &RdpTable) -> Result<TableReport> {
    verify_table_with(desc, t, &SearchBudget::quick())
}

pub fn verify_table_with(desc: &GroupDescriptor, t: &RdpTable, budget: &SearchBudget) -> Result<TableReport> {
    for e in t.entries().into_iter().chain(t.equation.elements()) {
        desc.check(e)?;
    }
    let sums_ok = sums_ok(desc, t)?;
    let positivity = positivity(desc, t)?;
    let (rdp1_verdict, rdp2_verdict) = if sums_ok && positivity.iter().all(|&p| p) {
        (check_rdp1_com(desc, t, budget)?, check_rdp2_meet(desc, t, budget)?)
    } else {
        let skip = || Verdict::Unknown {
            reason: UnknownReason::NoAnalyticRule,
            budget: None,
            note: "not an RDP table".into(),
        };
        (skip(), skip())
    };
    Ok(TableReport { sums_ok, positivity, rdp1_verdict, rdp2_verdict })
}

/// Every element below c12 commutes with every element below c21.
pub fn check_rdp1_com(desc: &GroupDescriptor, t: &RdpTable, budget: &SearchBudget) -> Result<Verdict> {
    if desc.is_abelian() {
        return Ok(Verdict::holds("abelian carrier"));
    }
    let z = desc.zero();
    let (xs, ex1) = interval_candidates(desc, std::slice::from_ref(&z), std::slice::from_ref(&t.c12), budget)?;
    let (ys, ex2) = interval_candidates(desc, &[z], std::slice::from_ref(&t.c21), budget)?;
    for x in &xs {
        for y in &ys {
            if !desc.commute(x, y)? {
                return Ok(Verdict::Fails {
                    evidence: vec![x.clone(), y.clone()],
                    note: "0 <= x <= c12 and 0 <= y <= c21 but x + y != y + x".into(),
                });
            }
        }
    }
    let exact = ex1 && ex2;
    Ok(Verdict::Holds {
        exact,
        evidence: Vec::new(),
        note: if exact {
            "both intervals listed completely; all pairs commute".into()
        } else {
            format!("{} x {} sampled pairs commute", xs.len(), ys.len())
        },
    })
}

fn is_lattice(desc: &GroupDescriptor) -> bool {
    match desc {
        GroupDescriptor::Int | GroupDescriptor::Rat => true,
        GroupDescriptor::Prod { mode: ProductMode::Product, children } => children.iter().all(is_lattice),
        _ => false,
    }
}

fn lattice_meet(desc: &GroupDescriptor, x: &Element, y: &Element) -> Result<Element> {
    match (desc, x, y) {
        (GroupDescriptor::Prod { children, .. }, Element::Tuple(a), Element::Tuple(b)) => Ok(Element::Tuple(
            children.iter().zip(a.iter().zip(b)).map(|(c, (p, q))| lattice_meet(c, p, q)).collect::<Result<_>>()?,
        )),
        _ => Ok(if desc.leq(x, y)? { x.clone() } else { y.clone() }),
    }
}

/// c12 ∧ c21 = 0.
pub fn check_rdp2_meet(desc: &GroupDescriptor, t: &RdpTable, budget: &SearchBudget) -> Result<Verdict> {
    let (x, y) = (&t.c12, &t.c21);
    let z = desc.zero();
    let verdict_for_meet = |m: Element| {
        if m == z {
            Verdict::Holds { exact: true, evidence: vec![m], note: "meet is 0".into() }
        } else {
            Verdict::Fails { evidence: vec![x.clone(), y.clone(), m], note: "meet exists and is not 0".into() }
        }
    };
    if is_lattice(desc) || desc.comparable(x, y)? {
        return Ok(verdict_for_meet(lattice_meet(desc, x, y)?));
    }
    if let Ok(d) = strict_between(desc, x, y) {
        return Ok(Verdict::Fails {
            evidence: vec![x.clone(), y.clone(), d],
            note: "a strictly positive element lies below both".into(),
        });
    }
    if antilattice_status(desc, budget).is_holds() {
        return Ok(Verdict::Fails {
            evidence: vec![x.clone(), y.clone()],
            note: "incomparable in an antilattice, so no meet exists".into(),
        });
    }
    let (cands, _) = interval_candidates(desc, std::slice::from_ref(&z), &[x.clone(), y.clone()], budget)?;
    if let Some(d) = cands.iter().find(|d| **d != z) {
        return Ok(Verdict::Fails {
            evidence: vec![x.clone(), y.clone(), d.clone()],
            note: "a strictly positive element lies below both".into(),
        });
    }
    Ok(Verdict::Unknown {
        reason: UnknownReason::BudgetExhausted,
        budget: Some(*budget),
        note: "no positive common lower bound found; meet not decided".into(),
    })
}

/// Something that turns a positive equation into a verified RDP table.
pub type Solver<'a> = &'a dyn Fn(&GroupDescriptor, &Equation) -> Result<RdpTable>;

/// For 0 <= a <= b + c: a = b1 + c1 with 0 <= b1 <= b and 0 <= c1 <= c,
/// read off a table for a + (-a + b + c) = b + c.
pub fn rdp0_decompose(
    desc: &GroupDescriptor,
    a: &Element,
    b: &Element,
    c: &Element,
    solver: Solver<'_>,
) -> Result<(Element, Element)> {
    let bc = desc.add(b, c)?;
    if !desc.is_positive(a)? || !desc.is_positive(b)? || !desc.is_positive(c)? || !desc.leq(a, &bc)? {
        return Err(Error::NotApplicable(format!("need 0 <= {a} <= {b} + {c} with {b}, {c} >= 0")));
    }
    let rest = desc.lsub(a, &bc)?;
    let eq = Equation::new(a.clone(), rest, b.clone(), c.clone());
    let t = solver(desc, &eq).map_err(|e| Error::SolverFailed(e.to_string()))?;
    if !verify_table(desc, &t)?.is_rdp_table() {
        return Err(Error::SolverFailed("solver returned an invalid table".into()));
    }
    let (b1, c1) = (t.c11, t.c12);
    let ok = desc.add(&b1, &c1)? == *a
        && desc.is_positive(&b1)?
        && desc.is_positive(&c1)?
        && desc.leq(&b1, b)?
        && desc.leq(&c1, c)?;
    if !ok {
        return Err(Error::SolverFailed(format!("split ({b1}, {c1}) violates its constraints")));
    }
    Ok((b1, c1))
}

/// For a1, a2 <= b1, b2: some c with a1, a2 <= c <= b1, b2. Decomposes
/// b2 - a1 <= (b2 - a2) + (b1 - a1) as c1 + c2 and returns c2 + a1.
pub fn interpolate(
    desc: &GroupDescriptor,
    a1: &Element,
    a2: &Element,
    b1: &Element,
    b2: &Element,
    solver: Solver<'_>,
) -> Result<Element> {
    for (lo, hi) in [(a1, b1), (a1, b2), (a2, b1), (a2, b2)] {
        if !desc.leq(lo, hi)? {
            return Err(Error::NotApplicable(format!("{lo} is not below {hi}")));
        }
    }
    let x = desc.sub(b2, a1)?;
    let p = desc.sub(b2, a2)?;
    let q = desc.sub(b1, a1)?;
    let (_, c2) = rdp0_decompose(desc, &x, &p, &q, solver)?;
    let c = desc.add(&c2, a1)?;
    for (lo, hi) in [(a1, &c), (a2, &c), (&c, b1), (&c, b2)] {
        if !desc.leq(lo, hi)? {
            return Err(Error::SolverFailed(format!("interpolant {c} fails {lo} <= {hi}")));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;
    use GroupDescriptor as D;

    fn ints(v: [i64; 4]) -> [Element; 4] {
        v.map(Element::int)
    }

    #[test]
    fn identity_split() {
        let [a, b, c, d] = ints([1, 1, 1, 1]);
        let eq = Equation::new(a, b, c, d);
        let [t11, t12, t21, t22] = ints([1, 0, 0, 1]);
        let r = verify_table(&D::Int, &RdpTable::new(&eq, t11, t12, t21, t22)).unwrap();
        assert!(r.sums_ok && r.all_positive());
        assert!(r.rdp1_verdict.is_exact_holds());
    }

    #[test]
    fn product_table() {
        let d = D::prod(vec![D::Int, D::Int]);
        let p = |a, b| Element::ints(&[a, b]);
        let eq = Equation::new(p(2, 1), p(1, 2), p(1, 1), p(2, 2));
        let t = RdpTable::new(&eq, p(1, 1), p(1, 0), p(0, 0), p(1, 2));
        let r = verify_table(&d, &t).unwrap();
        assert!(r.is_rdp_table());
    }

    #[test]
    fn single_entry_change_breaks_sums() {
        let [a, b, c, d] = ints([3, 2, 4, 1]);
        let eq = Equation::new(a, b, c, d);
        let t = RdpTable::new(&eq, Element::int(3), Element::int(0), Element::int(1), Element::int(1));
        assert!(sums_ok(&D::Int, &t).unwrap());
        let mut bad = t.clone();
        bad.c21 = Element::int(2);
        assert!(!sums_ok(&D::Int, &bad).unwrap());
    }

    #[test]
    fn meets() {
        let b = SearchBudget::default();
        let d = D::prod(vec![D::Int, D::Int]);
        let z = d.zero();
        let eq = Equation::new(z.clone(), z.clone(), z.clone(), z.clone());
        let t = RdpTable::new(&eq, z.clone(), Element::ints(&[1, 0]), Element::ints(&[0, 1]), z.clone());
        assert!(check_rdp2_meet(&d, &t, &b).unwrap().is_holds());

        let eq = Equation::new(Element::int(0), Element::int(0), Element::int(0), Element::int(0));
        let t = RdpTable::new(&eq, Element::int(0), Element::int(1), Element::int(1), Element::int(0));
        assert!(check_rdp2_meet(&D::Int, &t, &b).unwrap().is_fails());

        let s = D::strict(vec![D::Rat, D::Rat]);
        let q = |a: i64, b: i64| Element::pair(Element::Rat(rat_int(a)), Element::Rat(rat_int(b)));
        let eq = Equation::new(s.zero(), s.zero(), s.zero(), s.zero());
        let t = RdpTable::new(&eq, s.zero(), q(1, 2), q(2, 1), s.zero());
        let v = check_rdp2_meet(&s, &t, &b).unwrap();
        assert!(v.is_fails());
        assert_eq!(v.evidence()[2], Element::pair(Element::rat(1, 2), Element::rat(1, 2)));
    }
}
