use std::cmp::Ordering;

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor};
use crate::props::{
    directed_witness, is_central, is_com_directed, ncdp_witness_with, p1p2_from_wrdp, wrdp_witnesses,
};
use crate::rdp::{Equation, RdpTable};

use super::{central_lower4, certify, ht, lower4, Ctx, Solved, SolverTrace};

/// How the heads x1, y1 (first row, first column) and x2, y2 sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum HeadCase {
    ZeroHeads,
    EqualFirstZero,
    EqualSecondZero,
    EqualNonzero,
    RowAboveCorner,
    RowAboveTailZero,
    RowAbove,
    ColumnAboveRowHeadZero,
    ColumnAbove,
}

impl HeadCase {
    pub fn tag(self) -> &'static str {
        match self {
            HeadCase::ZeroHeads => "zero-heads",
            HeadCase::EqualFirstZero => "equal-heads/first-zero",
            HeadCase::EqualSecondZero => "equal-heads/second-zero",
            HeadCase::EqualNonzero => "equal-heads/nonzero",
            HeadCase::RowAboveCorner => "row-above/corner",
            HeadCase::RowAboveTailZero => "row-above/row-tail-zero",
            HeadCase::RowAbove => "row-above",
            HeadCase::ColumnAboveRowHeadZero => "column-above/row-head-zero",
            HeadCase::ColumnAbove => "column-above",
        }
    }

    /// Tag without the finer split of the strict-head cases.
    pub fn coarse_tag(self) -> &'static str {
        match self {
            HeadCase::ZeroHeads => "equal-heads/both-zero",
            HeadCase::RowAboveCorner | HeadCase::RowAboveTailZero | HeadCase::RowAbove => "row-above",
            HeadCase::ColumnAboveRowHeadZero | HeadCase::ColumnAbove => "column-above",
            other => other.tag(),
        }
    }
}

fn lift(x: &Element, g: &Element) -> Element {
    Element::pair(x.clone(), g.clone())
}

/// Tables for Lex(A, G) when the first-row and first-column heads are
/// comparable. Needs G directed only. `None` when the heads are incomparable.
pub(crate) fn comparable_heads(
    a: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    ctx: &Ctx,
) -> Result<Option<(RdpTable, HeadCase, SolverTrace)>> {
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    let (x1, u1) = ht(&eq.a1);
    let (x2, u2) = ht(&eq.a2);
    let (y1, v1) = ht(&eq.b1);
    let (y2, v2) = ht(&eq.b2);
    let za = a.zero();
    let zero = desc.zero();
    let Some(ord) = a.compare(&x1, &y1)? else {
        return Ok(None);
    };
    let mut tr = SolverTrace::default();
    let (t, case) = match ord {
        Ordering::Greater => {
            let case = if a.is_zero(&x2) {
                if a.is_zero(&y1) {
                    HeadCase::RowAboveCorner
                } else {
                    HeadCase::RowAboveTailZero
                }
            } else {
                HeadCase::RowAbove
            };
            let t = RdpTable::new(eq, eq.b1.clone(), desc.lsub(&eq.b1, &eq.a1)?, zero, eq.a2.clone());
            (t, case)
        }
        Ordering::Less => {
            let case = if a.is_zero(&x1) && !a.is_zero(&y2) {
                HeadCase::ColumnAboveRowHeadZero
            } else {
                HeadCase::ColumnAbove
            };
            let t = RdpTable::new(eq, eq.a1.clone(), zero, desc.lsub(&eq.a1, &eq.b1)?, eq.b2.clone());
            (t, case)
        }
        Ordering::Equal => match (a.is_zero(&x1), a.is_zero(&x2)) {
            (true, true) => {
                let (c, sub) = ctx.sub(g, &Equation::new(u1, u2, v1, v2))?;
                tr = tr.with_sub(sub);
                let t = RdpTable::new(eq, lift(&za, &c.c11), lift(&za, &c.c12), lift(&za, &c.c21), lift(&za, &c.c22));
                (t, HeadCase::ZeroHeads)
            }
            (true, false) => {
                let d = directed_witness(g, &u2, &v2)?;
                let geq = Equation::new(u1, g.sub(&u2, &d)?, v1, g.sub(&v2, &d)?);
                let (c, sub) = ctx.sub(g, &geq)?;
                tr = tr.aux("d", &d).with_sub(sub);
                let t = RdpTable::new(
                    eq,
                    lift(&za, &c.c11),
                    lift(&za, &c.c12),
                    lift(&za, &c.c21),
                    lift(&x2, &g.add(&c.c22, &d)?),
                );
                (t, HeadCase::EqualFirstZero)
            }
            (false, true) => {
                // The shift goes into the (1,1) entry, whose head is nonzero,
                // so the zero-head corner keeps a positive G-part.
                let t0 = directed_witness(g, &u1, &v1)?;
                let geq = Equation::new(g.lsub(&t0, &u1)?, u2, g.lsub(&t0, &v1)?, v2);
                let (c, sub) = ctx.sub(g, &geq)?;
                tr = tr.aux("t", &t0).with_sub(sub);
                let t = RdpTable::new(
                    eq,
                    lift(&x1, &g.add(&t0, &c.c11)?),
                    lift(&za, &c.c12),
                    lift(&za, &c.c21),
                    lift(&za, &c.c22),
                );
                (t, HeadCase::EqualSecondZero)
            }
            (false, false) => {
                let d = lower4(g, [&u1, &u2, &v1, &v2])?;
                let geq = Equation::new(g.lsub(&d, &u1)?, g.sub(&u2, &d)?, g.lsub(&d, &v1)?, g.sub(&v2, &d)?);
                let (c, sub) = ctx.sub(g, &geq)?;
                tr = tr.aux("d", &d).with_sub(sub);
                let t = RdpTable::new(
                    eq,
                    lift(&x1, &g.add(&d, &c.c11)?),
                    lift(&za, &c.c12),
                    lift(&za, &c.c21),
                    lift(&x2, &g.add(&c.c22, &d)?),
                );
                (t, HeadCase::EqualNonzero)
            }
        },
    };
    let t = certify(&desc, t, case.tag())?;
    Ok(Some((t, case, tr)))
}

fn comparable_or(
    a: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    ctx: &Ctx,
) -> Result<Option<Solved>> {
    Ok(comparable_heads(a, g, eq, ctx)?.map(|(t, case, mut tr)| {
        tr.tag = format!("lex/{}", case.tag());
        (t, tr)
    }))
}

struct Split {
    e: RdpTable,
    etrace: SolverTrace,
    u1: Element,
    u2: Element,
    v1: Element,
    v2: Element,
    x2: Element,
}

fn head_table(a: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Split> {
    let (x1, u1) = ht(&eq.a1);
    let (x2, u2) = ht(&eq.a2);
    let (y1, v1) = ht(&eq.b1);
    let (y2, v2) = ht(&eq.b2);
    let (e, etrace) = ctx.sub(a, &Equation::new(x1, x2.clone(), y1, y2))?;
    Ok(Split { e, etrace, u1, u2, v1, v2, x2 })
}

/// G-table for (-d + u1) + (u2 - d) = (-d + v1) + (v2 - d).
fn shifted_g_table(g: &GroupDescriptor, s: &Split, d: &Element, ctx: &Ctx) -> Result<Solved> {
    let geq = Equation::new(g.lsub(d, &s.u1)?, g.sub(&s.u2, d)?, g.lsub(d, &s.v1)?, g.sub(&s.v2, d)?);
    ctx.sub(g, &geq)
}

fn diagonal(
    desc: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    s: &Split,
    d: &Element,
    ctx: &Ctx,
) -> Result<Solved> {
    let (c, ctr) = shifted_g_table(g, s, d, ctx)?;
    let e = &s.e;
    let t = RdpTable::new(
        eq,
        lift(&e.c11, &g.add(d, &c.c11)?),
        lift(&e.c12, &c.c12),
        lift(&e.c21, &c.c21),
        lift(&e.c22, &g.add(&c.c22, d)?),
    );
    let tag = "lex/incomparable-heads/diagonal";
    let tr = SolverTrace::new(tag).aux("d", d).with_sub(s.etrace.clone()).with_sub(ctr);
    Ok((certify(desc, t, tag)?, tr))
}

fn diagonal_positive(a: &GroupDescriptor, e: &RdpTable) -> Result<bool> {
    Ok(a.is_strictly_positive(&e.c11)? && a.is_strictly_positive(&e.c22)?)
}

/// Lex(A, G) with G com-directed: a central lower bound shifts into the
/// off-diagonal entries when the diagonal of the head table has a zero.
pub fn solve_lex_comdirected(a: &GroupDescriptor, g: &GroupDescriptor, eq: &Equation) -> Result<Solved> {
    comdirected_ctx(a, g, eq, &Ctx::new(&Default::default()))
}

pub(crate) fn comdirected_ctx(a: &GroupDescriptor, g: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Solved> {
    if !is_com_directed(g) {
        return Err(Error::NotComDirected(format!("{g} is not com-directed")));
    }
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    eq.check_positive(&desc)?;
    if let Some(s) = comparable_or(a, g, eq, ctx)? {
        return Ok(s);
    }
    let s = head_table(a, eq, ctx)?;
    let d = central_lower4(g, [&s.u1, &s.u2, &s.v1, &s.v2])?;
    if diagonal_positive(a, &s.e)? {
        return diagonal(&desc, g, eq, &s, &d, ctx);
    }
    let central = is_central(g, &d)?;
    if !central {
        return Err(Error::ConstructionFailed(format!("lower bound {d} is not central")));
    }
    let (c, ctr) = shifted_g_table(g, &s, &d, ctx)?;
    let e = &s.e;
    let t = RdpTable::new(
        eq,
        lift(&e.c11, &c.c11),
        lift(&e.c12, &g.add(&d, &c.c12)?),
        lift(&e.c21, &g.add(&c.c21, &d)?),
        lift(&e.c22, &c.c22),
    );
    let tag = "lex/incomparable-heads/central-shift";
    let tr = SolverTrace::new(tag)
        .aux("d", &d)
        .check("d-central", central)
        .with_sub(s.etrace.clone())
        .with_sub(ctr);
    Ok((certify(&desc, t, tag)?, tr))
}

/// Lex(A, G) with G directed and A supplying NCDP witnesses: the head
/// table is re-balanced by a conjugate shift of a small positive d'.
pub fn solve_lex_ncdp(a: &GroupDescriptor, g: &GroupDescriptor, eq: &Equation) -> Result<Solved> {
    ncdp_ctx(a, g, eq, &Ctx::new(&Default::default()))
}

pub(crate) fn ncdp_ctx(a: &GroupDescriptor, g: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Solved> {
    if !g.is_directed() {
        return Err(Error::NotDirected(format!("{g} is not directed")));
    }
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    eq.check_positive(&desc)?;
    if let Some(s) = comparable_or(a, g, eq, ctx)? {
        return Ok(s);
    }
    let s = head_table(a, eq, ctx)?;
    ncdp_incomparable(a, g, eq, s, ctx, false)
}

/// As `solve_lex_ncdp` with incomparable heads, but taking the head table
/// from the caller. Any RDP table of the heads works; one with a zero on the
/// diagonal forces the conjugate shift.
pub fn solve_lex_ncdp_with_heads(
    a: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    heads: &RdpTable,
) -> Result<Solved> {
    if !g.is_directed() {
        return Err(Error::NotDirected(format!("{g} is not directed")));
    }
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    eq.check_positive(&desc)?;
    let (x1, u1) = ht(&eq.a1);
    let (x2, u2) = ht(&eq.a2);
    let (y1, v1) = ht(&eq.b1);
    let (y2, v2) = ht(&eq.b2);
    if a.comparable(&x1, &y1)? {
        return Err(Error::NotApplicable(format!("heads {x1}, {y1} are comparable")));
    }
    if heads.equation != Equation::new(x1, x2.clone(), y1, y2) {
        return Err(Error::InvalidWitness("head table is for another equation".into()));
    }
    certify(a, heads.clone(), "head table")?;
    let s = Split { e: heads.clone(), etrace: SolverTrace::new("given"), u1, u2, v1, v2, x2 };
    ncdp_incomparable(a, g, eq, s, &Ctx::new(&Default::default()), true)
}

fn ncdp_incomparable(
    a: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    s: Split,
    ctx: &Ctx,
    force_shift: bool,
) -> Result<Solved> {
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    let d = lower4(g, [&s.u1, &s.u2, &s.v1, &s.v2])?;
    if !force_shift && diagonal_positive(a, &s.e)? {
        return diagonal(&desc, g, eq, &s, &d, ctx);
    }
    let e = &s.e;
    let (e12, e21) = (&e.c12, &e.c21);
    let dp = match a.compare(e12, e21)? {
        Some(Ordering::Greater) => e21.clone(),
        Some(_) => e12.clone(),
        None => ncdp_witness_with(a, e12, e21, &ctx.budget)
            .map_err(|err| Error::NcdpWitnessUnavailable(format!("{e12}, {e21}: {err}")))?,
    };
    let conj12 = a.sum(&[&a.neg(e12)?, &dp, e12])?;
    let conj21 = a.sum(&[&a.neg(e21)?, &dp, e21])?;
    let conj_ok = conj12 == conj21 && a.is_strictly_positive(&dp)? && a.leq(&dp, e12)? && a.leq(&dp, e21)?;
    if !conj_ok {
        return Err(Error::NcdpWitnessUnavailable(format!("{dp} does not balance {e12}, {e21}")));
    }
    let h12 = a.lsub(&dp, e12)?;
    let h21 = a.lsub(&dp, e21)?;
    let h22 = a.add(&conj12, &e.c22)?;
    let recombined = a.add(&h21, &h22)? == s.x2;
    if !recombined {
        return Err(Error::ConstructionFailed("second row does not recombine".into()));
    }
    let (c, ctr) = shifted_g_table(g, &s, &d, ctx)?;
    let t = RdpTable::new(
        eq,
        lift(&a.add(&e.c11, &dp)?, &g.add(&d, &c.c11)?),
        lift(&h12, &c.c12),
        lift(&h21, &c.c21),
        lift(&h22, &g.add(&c.c22, &d)?),
    );
    let tag = "lex/incomparable-heads/conjugate-shift";
    let tr = SolverTrace::new(tag)
        .aux("d", &d)
        .aux("d'", &dp)
        .check("conjugation", conj_ok)
        .check("row2-recombination", recombined)
        .with_sub(s.etrace.clone())
        .with_sub(ctr);
    Ok((certify(&desc, t, tag)?, tr))
}

/// Lex(A, G) with G supplying wRDP witnesses for the tails.
pub fn solve_lex_wrdp(
    a: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    budget: &SearchBudget,
) -> Result<Solved> {
    wrdp_ctx(a, g, eq, &Ctx::new(budget))
}

pub(crate) fn wrdp_ctx(a: &GroupDescriptor, g: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Solved> {
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    eq.check_positive(&desc)?;
    if let Some(s) = comparable_or(a, g, eq, ctx)? {
        return Ok(s);
    }
    let s = head_table(a, eq, ctx)?;
    if diagonal_positive(a, &s.e)? {
        if let Ok(d) = lower4(g, [&s.u1, &s.u2, &s.v1, &s.v2]) {
            return diagonal(&desc, g, eq, &s, &d, ctx);
        }
    }
    let (d1, d2) = wrdp_witnesses(g, &s.u1, &s.u2, &s.v1, &s.v2, &ctx.budget)
        .map_err(|err| Error::WrdpWitnessUnavailable(format!("{g}: {err}")))?;
    let k = p1p2_from_wrdp(g, &s.u1, &s.u2, &s.v1, &s.v2, &d1, &d2)?;
    let e = &s.e;
    let t = RdpTable::new(
        eq,
        lift(&e.c11, &g.sub(&s.u1, &d1)?),
        lift(&e.c12, &d1),
        lift(&e.c21, &d2),
        lift(&e.c22, &g.lsub(&d2, &s.u2)?),
    );
    let tag = "lex/incomparable-heads/wrdp-witness";
    let tr = SolverTrace::new(tag).aux("d1", &d1).aux("d2", &d2).aux("k", &k).with_sub(s.etrace.clone());
    Ok((certify(&desc, t, tag)?, tr))
}
