//! Bounded brute-force searches used as independent ground truth.

use crate::budget::{SearchBudget, SearchOutcome};
use crate::error::Result;
use crate::group::{Element, GroupDescriptor};
use crate::props::{is_p1p2_witness, search_p1p2};
use crate::rdp::{positivity, sums_ok, Equation, RdpTable};
use crate::sample::interval_candidates;
use crate::solvers::degenerate_table;

pub use crate::word::{enumerate_reduced_words, reduced_word_count};

/// Reduced words over `k` generators up to `max_len`, as elements.
pub fn reduced_words(k: u32, max_len: usize) -> impl Iterator<Item = Element> {
    enumerate_reduced_words(k, max_len).into_iter().map(Element::Word)
}

/// The table forced by a choice of c11, if it is a positive RDP table.
fn table_from_corner(desc: &GroupDescriptor, eq: &Equation, c11: &Element) -> Result<Option<RdpTable>> {
    let c12 = desc.lsub(c11, &eq.a1)?;
    let c21 = desc.lsub(c11, &eq.b1)?;
    let c22 = desc.lsub(&c21, &eq.a2)?;
    let t = RdpTable::new(eq, c11.clone(), c12, c21, c22);
    if sums_ok(desc, &t)? && positivity(desc, &t)?.iter().all(|&p| p) {
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

/// Up to `limit` RDP tables for `eq`, in candidate order. The flag is true
/// when the candidate space for c11 was enumerated completely, so the list
/// holds every table (when shorter than `limit`).
///
/// c11 ranges over 0 <= c11 <= a1, b1 and fixes the rest of the table.
/// Over integer products with the product order that interval is a finite
/// box; for every other carrier it is sampled.
pub fn brute_force_tables(
    desc: &GroupDescriptor,
    eq: &Equation,
    budget: &SearchBudget,
    limit: usize,
) -> Result<(Vec<RdpTable>, usize, bool)> {
    eq.check_positive(desc)?;
    let (cands, exhaustive) =
        interval_candidates(desc, &[desc.zero()], &[eq.a1.clone(), eq.b1.clone()], budget)?;
    let mut out = Vec::new();
    let mut examined = 0;
    for c in &cands {
        if out.len() >= limit {
            break;
        }
        examined += 1;
        if let Some(t) = table_from_corner(desc, eq, c)? {
            out.push(t);
        }
    }
    Ok((out, examined, exhaustive))
}

/// First RDP table found by exhaustive or budgeted search.
pub fn brute_force_table(desc: &GroupDescriptor, eq: &Equation, budget: &SearchBudget) -> Result<SearchOutcome<RdpTable>> {
    eq.check_positive(desc)?;
    if let Some(t) = degenerate_table(desc, eq)? {
        return Ok(SearchOutcome::Found { value: t, examined: 0 });
    }
    let (mut found, examined, exhaustive) = brute_force_tables(desc, eq, budget, 1)?;
    Ok(match found.pop() {
        Some(value) => SearchOutcome::Found { value, examined },
        None if exhaustive => SearchOutcome::NotFoundExhaustive { examined },
        None => SearchOutcome::NotFoundWithinBudget { budget: *budget, examined },
    })
}

/// Bounded search for k >= 0 with v2 <= u1 + k and u2 - k, v2 - k commuting.
/// Over word carriers every reduced word up to `budget.max_word_len` is tried.
pub fn search_wrdp_k(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    budget: &SearchBudget,
) -> Result<SearchOutcome<Element>> {
    let out = search_p1p2(desc, u1, u2, v1, v2, budget)?;
    if let SearchOutcome::Found { value, .. } = &out {
        debug_assert!(is_p1p2_witness(desc, u1, u2, v1, v2, value)?);
    }
    Ok(out)
}
