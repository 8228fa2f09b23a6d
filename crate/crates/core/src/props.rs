//! Witness-producing order predicates. Every constructor re-checks its
//! output before returning it.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::budget::{SearchBudget, SearchOutcome};
use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::num::{half, Rat};
use crate::sample::{abelianized_words, interval_candidates};
use crate::word::{enumerate_reduced_words, Word};

use GroupDescriptor as D;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnknownReason {
    BudgetExhausted,
    NoAnalyticRule,
}

/// Outcome of a property check. `Holds` and `Fails` carry evidence that can
/// be re-checked; `exact` separates proofs from sampled support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Holds { exact: bool, evidence: Vec<Element>, note: String },
    Fails { evidence: Vec<Element>, note: String },
    Unknown { reason: UnknownReason, budget: Option<SearchBudget>, note: String },
}

impl Verdict {
    pub fn holds(note: impl Into<String>) -> Self {
        Verdict::Holds { exact: true, evidence: Vec::new(), note: note.into() }
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn is_exact_holds(&self) -> bool {
        matches!(self, Verdict::Holds { exact: true, .. })
    }

    pub fn is_fails(&self) -> bool {
        matches!(self, Verdict::Fails { .. })
    }

    pub fn evidence(&self) -> &[Element] {
        match self {
            Verdict::Holds { evidence, .. } | Verdict::Fails { evidence, .. } => evidence,
            Verdict::Unknown { .. } => &[],
        }
    }
}

fn pair<'a>(desc: &GroupDescriptor, x: &'a Element) -> Result<(&'a Element, &'a Element)> {
    x.split2().ok_or_else(|| Error::ShapeMismatch { expected: desc.to_string(), found: x.to_string() })
}

fn parts<'a>(desc: &GroupDescriptor, x: &'a Element) -> Result<&'a [Element]> {
    x.parts().ok_or_else(|| Error::ShapeMismatch { expected: desc.to_string(), found: x.to_string() })
}

fn min_of(desc: &GroupDescriptor, x: &Element, y: &Element) -> Result<Element> {
    Ok(if desc.leq(x, y)? { x.clone() } else { y.clone() })
}

fn lower_by_one(x: &Element) -> Element {
    match x {
        Element::Int(n) => Element::Int(n - BigInt::one()),
        Element::Rat(r) => Element::Rat(r - Rat::one()),
        _ => x.clone(),
    }
}

fn require_lower(desc: &GroupDescriptor, d: Element, x: &Element, y: &Element, strict: bool) -> Result<Element> {
    let ok = if strict { desc.lt(&d, x)? && desc.lt(&d, y)? } else { desc.leq(&d, x)? && desc.leq(&d, y)? };
    if ok {
        Ok(d)
    } else {
        Err(Error::ConstructionFailed(format!("{d} is not below {x} and {y} in {desc}")))
    }
}

/// -n·g1 with v(-n·g1) < m.
fn free_floor(vals: &[Rat], m: &Rat) -> i64 {
    let q = -(m / &vals[0]);
    let n = q.floor().to_integer() + BigInt::one();
    let n: i64 = n.try_into().unwrap_or(i64::MAX / 2);
    n.max(0)
}

/// An element strictly below both arguments.
pub fn strict_lower_bound(desc: &GroupDescriptor, x: &Element, y: &Element) -> Result<Element> {
    desc.check(x)?;
    desc.check(y)?;
    let d = match desc {
        D::Int | D::Rat => lower_by_one(&min_of(desc, x, y)?),
        D::Matrix => {
            let (Element::Matrix(a, _), Element::Matrix(c, _)) = (x, y) else { unreachable!() };
            Element::Matrix(half(a.min(c)), Rat::zero())
        }
        D::Free { vals } => {
            let m = desc.valuation(x)?.min(desc.valuation(y)?);
            Element::Word(Word::gen(1).times(-free_floor(vals, &m)))
        }
        D::AbFree { vals } => {
            let m = desc.valuation(x)?.min(desc.valuation(y)?);
            let mut v = vec![Element::int(0); vals.len()];
            v[0] = Element::int(-free_floor(vals, &m));
            Element::Tuple(v)
        }
        D::Prod { children, .. } => {
            let (xs, ys) = (parts(desc, x)?, parts(desc, y)?);
            Element::Tuple(
                children.iter().zip(xs.iter().zip(ys)).map(|(c, (p, q))| strict_lower_bound(c, p, q)).collect::<Result<_>>()?,
            )
        }
        D::Lex { first, second } => {
            let ((a1, g1), (b1, g2)) = (pair(desc, x)?, pair(desc, y)?);
            match strict_lower_bound(first, a1, b1) {
                Ok(d) => Element::pair(d, second.zero()),
                Err(_) if a1 == b1 => Element::pair(a1.clone(), strict_lower_bound(second, g1, g2)?),
                Err(e) => return Err(e),
            }
        }
        D::Trivial { .. } => return Err(Error::Unsupported(format!("{desc} has no strictly smaller elements"))),
    };
    require_lower(desc, d, x, y, true)
}

/// A common lower bound.
pub fn directed_witness(desc: &GroupDescriptor, x: &Element, y: &Element) -> Result<Element> {
    desc.check(x)?;
    desc.check(y)?;
    let d = match desc {
        D::Int | D::Rat => min_of(desc, x, y)?,
        D::Matrix | D::Free { .. } | D::AbFree { .. } => strict_lower_bound(desc, x, y)?,
        D::Prod { mode: ProductMode::Product, children } => {
            let (xs, ys) = (parts(desc, x)?, parts(desc, y)?);
            Element::Tuple(
                children.iter().zip(xs.iter().zip(ys)).map(|(c, (p, q))| directed_witness(c, p, q)).collect::<Result<_>>()?,
            )
        }
        D::Prod { mode: ProductMode::Strict, .. } => {
            if desc.leq(x, y)? {
                x.clone()
            } else if desc.leq(y, x)? {
                y.clone()
            } else {
                strict_lower_bound(desc, x, y).map_err(|e| Error::NotDirected(e.to_string()))?
            }
        }
        D::Lex { first, second } => {
            let ((a1, g1), (b1, g2)) = (pair(desc, x)?, pair(desc, y)?);
            match strict_lower_bound(first, a1, b1) {
                Ok(d) => Element::pair(d, second.zero()),
                Err(_) if a1 == b1 => Element::pair(a1.clone(), directed_witness(second, g1, g2)?),
                Err(e) => return Err(Error::NotDirected(format!("{desc}: {e}"))),
            }
        }
        D::Trivial { .. } => {
            if x == y {
                x.clone()
            } else {
                return Err(Error::NotDirected(format!("{x} and {y} have no common lower bound in {desc}")));
            }
        }
    };
    require_lower(desc, d, x, y, false)
}

fn not_applicable_unless_positive(desc: &GroupDescriptor, a: &Element, b: &Element) -> Result<()> {
    if !desc.is_strictly_positive(a)? || !desc.is_strictly_positive(b)? {
        return Err(Error::NotApplicable(format!("{a} and {b} must both be strictly positive")));
    }
    Ok(())
}

/// An element d with 0 < d < a and 0 < d < b.
pub fn strict_between(desc: &GroupDescriptor, a: &Element, b: &Element) -> Result<Element> {
    desc.check(a)?;
    desc.check(b)?;
    not_applicable_unless_positive(desc, a, b)?;
    let unsupported = || Error::Unsupported(format!("no element strictly between 0 and {a}, {b} in {desc}"));
    let d = match desc {
        D::Int => {
            let m = min_of(desc, a, b)?;
            if desc.leq(&Element::int(2), &m)? {
                Element::int(1)
            } else {
                return Err(unsupported());
            }
        }
        D::Rat => {
            let Element::Rat(m) = min_of(desc, a, b)? else { unreachable!() };
            Element::Rat(half(&m))
        }
        D::Matrix => {
            let (Element::Matrix(p, q), Element::Matrix(r, s)) = (a, b) else { unreachable!() };
            let one = Rat::one();
            if p > &one && r > &one {
                Element::Matrix(half(&(&one + p.min(r))), Rat::zero())
            } else {
                let t = [(p, q), (r, s)].iter().filter(|(x, _)| **x == one).map(|(_, y)| (*y).clone()).min().unwrap();
                Element::Matrix(one, half(&t))
            }
        }
        D::Free { vals } | D::AbFree { vals } => {
            let m = desc.valuation(a)?.min(desc.valuation(b)?);
            let i = vals.iter().position(|v| v < &m).ok_or_else(unsupported)?;
            match desc {
                D::Free { .. } => Element::Word(Word::gen(i as u32 + 1)),
                _ => {
                    let mut v = vec![Element::int(0); vals.len()];
                    v[i] = Element::int(1);
                    Element::Tuple(v)
                }
            }
        }
        D::Prod { mode: ProductMode::Strict, children } => {
            let (xs, ys) = (parts(desc, a)?, parts(desc, b)?);
            Element::Tuple(
                children.iter().zip(xs.iter().zip(ys)).map(|(c, (p, q))| strict_between(c, p, q)).collect::<Result<_>>()?,
            )
        }
        D::Prod { mode: ProductMode::Product, children } => {
            let (xs, ys) = (parts(desc, a)?, parts(desc, b)?);
            let mut v = Vec::new();
            for (c, (p, q)) in children.iter().zip(xs.iter().zip(ys)) {
                let coord = match strict_between(c, p, q) {
                    Ok(d) => d,
                    Err(_) if c.comparable(p, q)? => min_of(c, p, q)?,
                    Err(_) => c.zero(),
                };
                v.push(coord);
            }
            Element::Tuple(v)
        }
        D::Lex { first, second } => {
            let ((a1, g1), (b1, g2)) = (pair(desc, a)?, pair(desc, b)?);
            let za = first.zero();
            if a1 != &za && b1 != &za {
                match strict_between(first, a1, b1) {
                    Ok(n) => Element::pair(n, second.zero()),
                    Err(_) => match first.compare(a1, b1)? {
                        Some(ord) => {
                            let m = if ord.is_le() { a1 } else { b1 };
                            let gs: Vec<&Element> = [(a1, g1), (b1, g2)].iter().filter(|(x, _)| *x == m).map(|(_, g)| *g).collect();
                            let h = strict_lower_bound(second, gs[0], gs[gs.len() - 1])?;
                            Element::pair(m.clone(), h)
                        }
                        None => return Err(unsupported()),
                    },
                }
            } else {
                let gs: Vec<&Element> = [(a1, g1), (b1, g2)].iter().filter(|(x, _)| **x == za).map(|(_, g)| *g).collect();
                Element::pair(za, strict_between(second, gs[0], gs[gs.len() - 1])?)
            }
        }
        D::Trivial { .. } => return Err(unsupported()),
    };
    if desc.is_strictly_positive(&d)? && desc.lt(&d, a)? && desc.lt(&d, b)? {
        Ok(d)
    } else {
        Err(unsupported())
    }
}

/// Membership in the center, decided by the carrier's analytic rule.
pub fn is_central(desc: &GroupDescriptor, x: &Element) -> Result<bool> {
    desc.check(x)?;
    if desc.is_abelian() {
        return Ok(true);
    }
    Ok(match desc {
        // Commuting with M(2,0) forces b = 0, with M(1,1) forces a = 1.
        D::Matrix => *x == desc.zero(),
        D::Free { .. } => *x == desc.zero(),
        D::Prod { children, .. } => {
            for (c, e) in children.iter().zip(parts(desc, x)?) {
                if !is_central(c, e)? {
                    return Ok(false);
                }
            }
            true
        }
        D::Lex { first, second } => {
            let (a, g) = pair(desc, x)?;
            is_central(first, a)? && is_central(second, g)?
        }
        D::Trivial { child } => is_central(child, x)?,
        _ => true,
    })
}

/// Carriers where every pair has a central element strictly below both.
pub fn has_central_strict_lower_bounds(desc: &GroupDescriptor) -> bool {
    if desc.is_abelian() {
        return desc.has_strict_lower_bounds();
    }
    match desc {
        D::Lex { first, .. } => has_central_strict_lower_bounds(first),
        D::Prod { children, .. } => children.iter().all(has_central_strict_lower_bounds),
        _ => false,
    }
}

/// Analytic com-directedness rule.
pub fn is_com_directed(desc: &GroupDescriptor) -> bool {
    if desc.is_abelian() {
        return desc.is_directed();
    }
    match desc {
        D::Lex { first, .. } => has_central_strict_lower_bounds(first),
        D::Prod { mode: ProductMode::Product, children } => children.iter().all(is_com_directed),
        D::Prod { mode: ProductMode::Strict, children } => children.iter().all(has_central_strict_lower_bounds),
        _ => false,
    }
}

fn identity_if_below(desc: &GroupDescriptor, x: &Element, y: &Element) -> Result<Element> {
    let z = desc.zero();
    if desc.leq(&z, x)? && desc.leq(&z, y)? {
        Ok(z)
    } else {
        Err(Error::NotComDirected(format!("the center of {desc} is trivial and 0 is not below {x}, {y}")))
    }
}

/// A central element strictly below both arguments.
pub fn central_strict_lower_bound(desc: &GroupDescriptor, x: &Element, y: &Element) -> Result<Element> {
    desc.check(x)?;
    desc.check(y)?;
    if desc.is_abelian() {
        return strict_lower_bound(desc, x, y);
    }
    let d = match desc {
        D::Lex { first, second } => {
            let ((a1, _), (b1, _)) = (pair(desc, x)?, pair(desc, y)?);
            Element::pair(central_strict_lower_bound(first, a1, b1)?, second.zero())
        }
        D::Prod { children, .. } => {
            let (xs, ys) = (parts(desc, x)?, parts(desc, y)?);
            Element::Tuple(
                children
                    .iter()
                    .zip(xs.iter().zip(ys))
                    .map(|(c, (p, q))| central_strict_lower_bound(c, p, q))
                    .collect::<Result<_>>()?,
            )
        }
        _ => {
            let z = identity_if_below(desc, x, y)?;
            if z == *x || z == *y {
                return Err(Error::NotComDirected(format!("no central element strictly below {x}, {y} in {desc}")));
            }
            z
        }
    };
    require_lower(desc, d, x, y, true)
}

/// A central common lower bound.
pub fn com_directed_witness(desc: &GroupDescriptor, x: &Element, y: &Element) -> Result<Element> {
    desc.check(x)?;
    desc.check(y)?;
    let d = if desc.is_abelian() {
        directed_witness(desc, x, y).map_err(|e| Error::NotComDirected(e.to_string()))?
    } else {
        match desc {
            D::Lex { first, second } => {
                let ((a1, g1), (b1, g2)) = (pair(desc, x)?, pair(desc, y)?);
                match central_strict_lower_bound(first, a1, b1) {
                    Ok(d) => Element::pair(d, second.zero()),
                    Err(_) if a1 == b1 && is_central(first, a1)? => {
                        Element::pair(a1.clone(), com_directed_witness(second, g1, g2)?)
                    }
                    Err(e) => return Err(Error::NotComDirected(e.to_string())),
                }
            }
            D::Prod { mode: ProductMode::Product, children } => {
                let (xs, ys) = (parts(desc, x)?, parts(desc, y)?);
                Element::Tuple(
                    children
                        .iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(c, (p, q))| com_directed_witness(c, p, q))
                        .collect::<Result<_>>()?,
                )
            }
            D::Prod { mode: ProductMode::Strict, .. } => {
                if desc.leq(x, y)? && is_central(desc, x)? {
                    x.clone()
                } else if desc.leq(y, x)? && is_central(desc, y)? {
                    y.clone()
                } else {
                    central_strict_lower_bound(desc, x, y)?
                }
            }
            D::Trivial { .. } => {
                if x == y && is_central(desc, x)? {
                    x.clone()
                } else {
                    return Err(Error::NotComDirected(format!("{x}, {y} have no common lower bound in {desc}")));
                }
            }
            _ => identity_if_below(desc, x, y)?,
        }
    };
    if !is_central(desc, &d)? {
        return Err(Error::ConstructionFailed(format!("{d} is not central in {desc}")));
    }
    require_lower(desc, d, x, y, false)
}

/// Some element strictly above 0.
pub fn some_strictly_positive(desc: &GroupDescriptor) -> Option<Element> {
    let p = match desc {
        D::Int => Element::int(1),
        D::Rat => Element::rat(1, 1),
        D::Matrix => Element::Matrix(Rat::from_integer(2.into()), Rat::zero()),
        D::Free { .. } => Element::Word(Word::gen(1)),
        D::AbFree { vals } => {
            let mut v = vec![Element::int(0); vals.len()];
            v[0] = Element::int(1);
            Element::Tuple(v)
        }
        D::Prod { children, .. } => Element::Tuple(children.iter().map(some_strictly_positive).collect::<Option<_>>()?),
        D::Lex { first, second } => match some_strictly_positive(first) {
            Some(a) => Element::pair(a, second.zero()),
            None => Element::pair(first.zero(), some_strictly_positive(second)?),
        },
        D::Trivial { .. } => return None,
    };
    Some(p)
}

/// Some central element strictly above 0.
pub fn some_central_strictly_positive(desc: &GroupDescriptor) -> Option<Element> {
    if desc.is_abelian() {
        return some_strictly_positive(desc);
    }
    match desc {
        D::Lex { first, second } => match some_central_strictly_positive(first) {
            Some(a) => Some(Element::pair(a, second.zero())),
            None => Some(Element::pair(first.zero(), some_central_strictly_positive(second)?)),
        },
        D::Prod { children, .. } => {
            Some(Element::Tuple(children.iter().map(some_central_strictly_positive).collect::<Option<_>>()?))
        }
        _ => None,
    }
}

/// Antilattice status: analytic where a rule applies.
pub fn antilattice_status(desc: &GroupDescriptor, budget: &SearchBudget) -> Verdict {
    if desc.is_linear() {
        return Verdict::holds("linearly ordered: every pair is comparable");
    }
    match desc {
        D::Trivial { .. } => Verdict::holds("trivially ordered: distinct elements have no common bound"),
        D::Free { .. } | D::AbFree { .. } => Verdict::holds(
            "valuation order: incomparable elements share a value and their lower bounds of maximal value are pairwise incomparable",
        ),
        D::Prod { mode: ProductMode::Strict, children } if children.iter().all(|c| matches!(c, D::Rat)) => {
            Verdict::holds("strict order on a power of a dense chain: a positive element strictly below two incomparable positives always exists")
        }
        D::Prod { mode: ProductMode::Product, children }
            if children.iter().filter(|c| !c.is_trivially_ordered()).count() >= 2 =>
        {
            let idx: Vec<usize> = children.iter().enumerate().filter(|(_, c)| !c.is_trivially_ordered()).map(|(i, _)| i).take(2).collect();
            let unit = |j: usize| {
                Element::Tuple(
                    children
                        .iter()
                        .enumerate()
                        .map(|(i, c)| if i == j { some_strictly_positive(c).unwrap_or_else(|| c.zero()) } else { c.zero() })
                        .collect(),
                )
            };
            Verdict::Fails {
                evidence: vec![unit(idx[0]), unit(idx[1]), desc.zero()],
                note: "incomparable positives whose componentwise meet is 0".into(),
            }
        }
        _ => Verdict::Unknown {
            reason: UnknownReason::NoAnalyticRule,
            budget: Some(*budget),
            note: format!("no antilattice rule for {desc}"),
        },
    }
}

fn conjugate(desc: &GroupDescriptor, a: &Element, d: &Element) -> Result<Element> {
    desc.add(&desc.add(&desc.neg(a)?, d)?, a)
}

/// Checks 0 < d <= a, b and -a+d+a = -b+d+b.
pub fn is_ncdp_witness(desc: &GroupDescriptor, a: &Element, b: &Element, d: &Element) -> Result<bool> {
    Ok(desc.is_strictly_positive(d)?
        && desc.leq(d, a)?
        && desc.leq(d, b)?
        && conjugate(desc, a, d)? == conjugate(desc, b, d)?)
}

fn ncdp_candidate(desc: &GroupDescriptor, a: &Element, b: &Element) -> Result<Element> {
    if desc.is_abelian() {
        return strict_between(desc, a, b).or_else(|_| min_of(desc, a, b));
    }
    match desc {
        D::Lex { first, second } => {
            let ((a1, x), (b1, y)) = (pair(desc, a)?, pair(desc, b)?);
            let za = first.zero();
            if a1 == b1 {
                if *a1 == za {
                    return Ok(Element::pair(za, ncdp_witness(second, x, y)?));
                }
                if let Ok(h) = central_strict_lower_bound(second, x, y) {
                    return Ok(Element::pair(a1.clone(), h));
                }
            }
            if let Some(p) = some_central_strictly_positive(second) {
                if first.is_strictly_positive(a1)? && first.is_strictly_positive(b1)? {
                    return Ok(Element::pair(za, p));
                }
            }
            Ok(Element::pair(ncdp_witness(first, a1, b1)?, second.zero()))
        }
        _ => Err(Error::NotFound(format!("no NCDP rule for {desc}"))),
    }
}

/// For strictly positive incomparable a, b: a positive d below both with
/// equal conjugates under a and b.
pub fn ncdp_witness(desc: &GroupDescriptor, a: &Element, b: &Element) -> Result<Element> {
    ncdp_witness_with(desc, a, b, &SearchBudget::quick())
}

pub fn ncdp_witness_with(desc: &GroupDescriptor, a: &Element, b: &Element, budget: &SearchBudget) -> Result<Element> {
    desc.check(a)?;
    desc.check(b)?;
    not_applicable_unless_positive(desc, a, b)?;
    if desc.comparable(a, b)? {
        return Err(Error::NotApplicable(format!("{a} and {b} are comparable")));
    }
    if let Ok(d) = ncdp_candidate(desc, a, b) {
        if is_ncdp_witness(desc, a, b, &d)? {
            return Ok(d);
        }
    }
    let (cands, _) = interval_candidates(desc, &[desc.zero()], &[a.clone(), b.clone()], budget)?;
    for d in &cands {
        if is_ncdp_witness(desc, a, b, d)? {
            return Ok(d.clone());
        }
    }
    Err(Error::NotFound(format!("no NCDP witness for {a}, {b} among {} candidates", cands.len())))
}

fn check_sum(desc: &GroupDescriptor, u1: &Element, u2: &Element, v1: &Element, v2: &Element) -> Result<()> {
    if desc.add(u1, u2)? != desc.add(v1, v2)? {
        return Err(Error::InvalidEquation(format!("{u1} + {u2} != {v1} + {v2}")));
    }
    Ok(())
}

/// Conditions: d1 <= u1, v2; d2 <= u2, v1; d1 + d2 = d2 + d1; -u1 + v1 = -d1 + d2.
pub fn is_wrdp_witness(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    d1: &Element,
    d2: &Element,
) -> Result<bool> {
    Ok(desc.leq(d1, u1)?
        && desc.leq(d1, v2)?
        && desc.leq(d2, u2)?
        && desc.leq(d2, v1)?
        && desc.commute(d1, d2)?
        && desc.lsub(u1, v1)? == desc.lsub(d1, d2)?)
}

/// The k-conditions: k >= 0, v2 <= u1 + k, and u2 - k commutes with v2 - k.
pub fn is_p1p2_witness(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    k: &Element,
) -> Result<bool> {
    let _ = v1;
    Ok(desc.is_positive(k)?
        && desc.leq(v2, &desc.add(u1, k)?)?
        && desc.commute(&desc.sub(u2, k)?, &desc.sub(v2, k)?)?)
}

/// k = -d1 + v2 from valid wRDP witnesses.
pub fn p1p2_from_wrdp(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    d1: &Element,
    d2: &Element,
) -> Result<Element> {
    if !is_wrdp_witness(desc, u1, u2, v1, v2, d1, d2)? {
        return Err(Error::InvalidWitness(format!("({d1}, {d2}) are not wRDP witnesses")));
    }
    let k = desc.lsub(d1, v2)?;
    if !is_p1p2_witness(desc, u1, u2, v1, v2, &k)? {
        return Err(Error::InvalidWitness(format!("converted k = {k} violates the k-conditions")));
    }
    Ok(k)
}

/// d1 = v2 - k, d2 = u2 - k from a k satisfying the k-conditions.
pub fn wrdp_from_p1p2(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    k: &Element,
) -> Result<(Element, Element)> {
    if !is_p1p2_witness(desc, u1, u2, v1, v2, k)? {
        return Err(Error::InvalidWitness(format!("k = {k} violates the k-conditions")));
    }
    let d1 = desc.sub(v2, k)?;
    let d2 = desc.sub(u2, k)?;
    if !is_wrdp_witness(desc, u1, u2, v1, v2, &d1, &d2)? {
        return Err(Error::InvalidWitness(format!("converted ({d1}, {d2}) violate the wRDP conditions")));
    }
    Ok((d1, d2))
}

/// Candidates k >= 0 in enumeration order. For word carriers this is every
/// reduced word up to the length bound.
pub fn positive_candidates(desc: &GroupDescriptor, budget: &SearchBudget) -> Result<Vec<Element>> {
    let cap = budget.max_candidates;
    let raw: Vec<Element> = match desc {
        D::Free { vals } => enumerate_reduced_words(vals.len() as u32, budget.max_word_len)
            .into_iter()
            .map(Element::Word)
            .collect(),
        D::AbFree { vals } => abelianized_words(vals.len(), budget.max_word_len, usize::MAX),
        _ => return Ok(interval_candidates(desc, &[desc.zero()], &[], budget)?.0),
    };
    let mut out = Vec::new();
    for k in raw {
        if out.len() >= cap {
            break;
        }
        if desc.is_positive(&k)? {
            out.push(k);
        }
    }
    Ok(out)
}

/// Bounded search for k satisfying the k-conditions.
pub fn search_p1p2(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    budget: &SearchBudget,
) -> Result<SearchOutcome<Element>> {
    check_sum(desc, u1, u2, v1, v2)?;
    let cands = positive_candidates(desc, budget)?;
    for (i, k) in cands.iter().enumerate() {
        if is_p1p2_witness(desc, u1, u2, v1, v2, k)? {
            return Ok(SearchOutcome::Found { value: k.clone(), examined: i + 1 });
        }
    }
    Ok(SearchOutcome::NotFoundWithinBudget { budget: *budget, examined: cands.len() })
}

/// Witnesses (d1, d2) for u1 + u2 = v1 + v2.
pub fn wrdp_witnesses(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    budget: &SearchBudget,
) -> Result<(Element, Element)> {
    for e in [u1, u2, v1, v2] {
        desc.check(e)?;
    }
    check_sum(desc, u1, u2, v1, v2)?;
    if !desc.is_directed() {
        return Err(Error::NotDirected(format!("{desc} is not directed")));
    }
    // A central lower bound d1 of u1, v2 forces d2 = d1 - u1 + v1.
    let central = if desc.is_abelian() {
        directed_witness(desc, u1, v2)
    } else {
        com_directed_witness(desc, u1, v2)
    };
    if let Ok(d1) = central {
        let d2 = desc.add(&desc.sub(&d1, u1)?, v1)?;
        if is_wrdp_witness(desc, u1, u2, v1, v2, &d1, &d2)? {
            return Ok((d1, d2));
        }
    }
    match search_p1p2(desc, u1, u2, v1, v2, budget)? {
        SearchOutcome::Found { value, .. } => wrdp_from_p1p2(desc, u1, u2, v1, v2, &value),
        SearchOutcome::NotFoundWithinBudget { budget, examined } => Err(Error::NotFoundWithinBudget { budget, examined }),
        SearchOutcome::NotFoundExhaustive { examined } => Err(Error::NotFound(format!("{examined} candidates exhausted"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use crate::word::Letter;

    fn w(gens: &[(u32, bool)]) -> Element {
        Element::Word(Word::reduce(gens.iter().map(|&(g, i)| Letter::new(g, i))))
    }

    fn m(a: Rat, b: Rat) -> Element {
        Element::Matrix(a, b)
    }

    fn q2(a: Rat, b: Rat) -> Element {
        Element::pair(Element::Rat(a), Element::Rat(b))
    }

    #[test]
    fn directed_examples() {
        assert_eq!(directed_witness(&D::Int, &Element::int(3), &Element::int(-5)).unwrap(), Element::int(-5));
        let f = D::free(vec![rat_int(1), rat(1, 2)]);
        assert_eq!(directed_witness(&f, &w(&[(1, false)]), &w(&[(2, true)])).unwrap(), w(&[(1, true)]));
        let t = D::trivial(D::free(vec![rat_int(1), rat_int(1)]));
        assert!(matches!(directed_witness(&t, &w(&[(1, false)]), &w(&[(2, false)])), Err(Error::NotDirected(_))));
    }

    #[test]
    fn strict_lower_bound_examples() {
        assert_eq!(strict_lower_bound(&D::Int, &Element::int(3), &Element::int(3)).unwrap(), Element::int(2));
        assert_eq!(strict_lower_bound(&D::Rat, &Element::rat(0, 1), &Element::rat(1, 3)).unwrap(), Element::rat(-1, 1));
        let s = D::strict(vec![D::Rat, D::Rat]);
        let got = strict_lower_bound(&s, &q2(rat_int(1), rat_int(3)), &q2(rat_int(2), rat_int(1))).unwrap();
        assert_eq!(got, q2(rat_int(0), rat_int(0)));
    }

    #[test]
    fn strict_between_examples() {
        assert_eq!(strict_between(&D::Rat, &Element::rat(1, 1), &Element::rat(1, 2)).unwrap(), Element::rat(1, 4));
        let s = D::strict(vec![D::Rat, D::Rat]);
        let got = strict_between(&s, &q2(rat_int(1), rat_int(4)), &q2(rat_int(2), rat_int(3))).unwrap();
        assert_eq!(got, q2(rat(1, 2), rat(3, 2)));
        assert!(matches!(strict_between(&D::Int, &Element::int(1), &Element::int(2)), Err(Error::Unsupported(_))));
        assert!(matches!(strict_between(&D::Int, &Element::int(0), &Element::int(2)), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn centrality() {
        assert!(is_central(&D::Matrix, &m(rat_int(1), rat_int(0))).unwrap());
        assert!(!is_central(&D::Matrix, &m(rat_int(2), rat_int(0))).unwrap());
        let l = D::lex(D::Int, D::Matrix);
        assert!(is_central(&l, &Element::pair(Element::int(5), m(rat_int(1), rat_int(0)))).unwrap());
        let f = D::free(vec![rat_int(1), rat_int(1)]);
        assert!(!is_central(&f, &w(&[(1, false)])).unwrap());
        assert!(!f.commute(&w(&[(1, false)]), &w(&[(2, false)])).unwrap());
    }

    #[test]
    fn com_directed_examples() {
        assert_eq!(com_directed_witness(&D::Int, &Element::int(3), &Element::int(-5)).unwrap(), Element::int(-5));
        let l = D::lex(D::Int, D::Matrix);
        let x = Element::pair(Element::int(2), m(rat_int(2), rat_int(0)));
        let y = Element::pair(Element::int(1), m(rat_int(1), rat_int(-3)));
        assert_eq!(com_directed_witness(&l, &x, &y).unwrap(), Element::pair(Element::int(0), m(rat_int(1), rat_int(0))));
        let r = com_directed_witness(&D::Matrix, &m(rat(1, 2), rat_int(0)), &m(rat(1, 3), rat_int(0)));
        assert!(matches!(r, Err(Error::NotComDirected(_))));
    }

    #[test]
    fn antilattice_examples() {
        let b = SearchBudget::default();
        assert!(antilattice_status(&D::strict(vec![D::Rat, D::Rat]), &b).is_holds());
        assert!(antilattice_status(&D::Int, &b).is_holds());
        let v = antilattice_status(&D::prod(vec![D::Int, D::Int]), &b);
        assert_eq!(v.evidence(), &[Element::ints(&[1, 0]), Element::ints(&[0, 1]), Element::ints(&[0, 0])]);
    }

    #[test]
    fn ncdp_examples() {
        let s = D::strict(vec![D::Rat, D::Rat]);
        let d = ncdp_witness(&s, &q2(rat_int(1), rat_int(3)), &q2(rat_int(2), rat_int(1))).unwrap();
        assert_eq!(d, q2(rat(1, 2), rat(1, 2)));
        let l = D::lex(D::Matrix, s.clone());
        let a = Element::pair(m(rat_int(2), rat_int(0)), q2(rat_int(1), rat_int(1)));
        let b = Element::pair(m(rat_int(2), rat_int(0)), q2(rat_int(3), rat_int(-1)));
        let d = ncdp_witness(&l, &a, &b).unwrap();
        assert_eq!(d.split2().unwrap().0, &m(rat_int(2), rat_int(0)));
        assert!(is_ncdp_witness(&l, &a, &b, &d).unwrap());
        assert!(matches!(ncdp_witness(&D::Int, &Element::int(1), &Element::int(2)), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn wrdp_examples() {
        let b = SearchBudget::default();
        let e = |n| Element::int(n);
        let (d1, d2) = wrdp_witnesses(&D::Int, &e(1), &e(2), &e(2), &e(1), &b).unwrap();
        assert_eq!((d1.clone(), d2.clone()), (e(1), e(2)));
        assert_eq!(wrdp_witnesses(&D::Int, &e(0), &e(0), &e(0), &e(0), &b).unwrap(), (e(0), e(0)));
        let k = p1p2_from_wrdp(&D::Int, &e(1), &e(2), &e(2), &e(1), &d1, &d2).unwrap();
        assert_eq!(k, e(0));
        assert_eq!(wrdp_from_p1p2(&D::Int, &e(1), &e(2), &e(2), &e(1), &k).unwrap(), (d1, d2));
        assert!(matches!(
            p1p2_from_wrdp(&D::Int, &e(1), &e(2), &e(2), &e(1), &e(5), &e(5)),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn wrdp_needs_directed() {
        let t = D::trivial(D::Rat);
        let r = wrdp_witnesses(&t, &Element::rat(1, 1), &Element::rat(-1, 1), &Element::rat(0, 1), &Element::rat(0, 1), &SearchBudget::default());
        assert!(matches!(r, Err(Error::NotDirected(_))));
    }
}
