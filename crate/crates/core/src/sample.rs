//! Deterministic finite views of carriers: whole-carrier samples and the
//! candidates of an order interval. Results are exhaustive only where the
//! interval is finite and fully listed.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::budget::SearchBudget;
use crate::error::Result;
use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::num::{half, Rat};
use crate::word::enumerate_reduced_words;

/// Orders by canonical size. Word carriers keep their length-then-letter
/// order; elsewhere the seed shuffles elements of equal size.
fn canonical_order(desc: &GroupDescriptor, mut v: Vec<Element>, seed: u64) -> Vec<Element> {
    let shuffle = !matches!(desc, GroupDescriptor::Free { .. } | GroupDescriptor::AbFree { .. });
    let mut keyed: Vec<(u64, Element)> = v.drain(..).map(|e| (e.size(), e)).collect();
    keyed.sort_by_key(|(s, _)| *s);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(keyed.len());
    let mut i = 0;
    while i < keyed.len() {
        let mut j = i;
        while j < keyed.len() && keyed[j].0 == keyed[i].0 {
            j += 1;
        }
        let mut class: Vec<Element> = keyed[i..j].iter().map(|(_, e)| e.clone()).collect();
        if shuffle {
            class.shuffle(&mut rng);
        }
        out.extend(class);
        i = j;
    }
    out
}

fn dedup(v: Vec<Element>) -> Vec<Element> {
    let mut seen = HashSet::new();
    v.into_iter().filter(|e| seen.insert(e.clone())).collect()
}

fn coord(b: &SearchBudget) -> i64 {
    b.max_abs_coord.min(1 << 20) as i64
}

fn half_grid(lo: &Rat, hi: &Rat, cap: usize) -> Vec<Rat> {
    let two = Rat::from_integer(BigInt::from(2));
    let start = (lo * &two).ceil();
    let mut out = Vec::new();
    let mut k = start;
    while out.len() < cap {
        let p = &k / &two;
        if &p > hi {
            break;
        }
        out.push(p);
        k += Rat::one();
    }
    out
}

fn matrix_a_values(c: i64) -> Vec<Rat> {
    let mut out = vec![Rat::one()];
    for n in 2..=c.max(2) {
        out.push(Rat::from_integer(BigInt::from(n)));
        out.push(Rat::new(BigInt::one(), BigInt::from(n)));
    }
    out
}

fn cartesian(parts: &[Vec<Element>], cap: usize) -> (Vec<Vec<Element>>, bool) {
    let mut acc: Vec<Vec<Element>> = vec![Vec::new()];
    let mut complete = true;
    for p in parts {
        let mut next = Vec::new();
        'outer: for a in &acc {
            for x in p {
                if next.len() >= cap {
                    complete = false;
                    break 'outer;
                }
                let mut row = a.clone();
                row.push(x.clone());
                next.push(row);
            }
        }
        acc = next;
    }
    (acc, complete)
}

/// Per-factor size so that a product of `n` factors stays near `cap`.
fn per_factor(cap: usize, n: usize) -> usize {
    let n = n.max(1) as f64;
    ((cap as f64).powf(1.0 / n).floor() as usize).max(3)
}

/// Exponent vectors of reduced words up to `max_len`, first occurrence order.
pub fn abelianized_words(k: usize, max_len: usize, cap: usize) -> Vec<Element> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in enumerate_reduced_words(k as u32, max_len) {
        let e = Element::Tuple(w.exponents(k).into_iter().map(Element::int).collect());
        if seen.insert(e.clone()) {
            out.push(e);
            if out.len() >= cap {
                break;
            }
        }
    }
    out
}

/// A deterministic sample of the whole carrier, smallest elements first.
pub fn sample_elements(desc: &GroupDescriptor, budget: &SearchBudget) -> Vec<Element> {
    use GroupDescriptor as D;
    let c = coord(budget);
    let cap = budget.max_candidates.max(1);
    let raw: Vec<Element> = match desc {
        D::Int => (-c..=c).map(Element::int).collect(),
        D::Rat => half_grid(&Rat::from_integer((-c).into()), &Rat::from_integer(c.into()), cap)
            .into_iter()
            .map(Element::Rat)
            .collect(),
        D::Matrix => {
            let bs = half_grid(&Rat::from_integer((-c).into()), &Rat::from_integer(c.into()), cap);
            let mut v = Vec::new();
            for a in matrix_a_values(c) {
                for b in &bs {
                    v.push(Element::Matrix(a.clone(), b.clone()));
                }
            }
            v
        }
        D::Free { vals } => {
            let mut v = Vec::new();
            for len in 0..=budget.max_word_len {
                v = enumerate_reduced_words(vals.len() as u32, len);
                if v.len() >= cap {
                    break;
                }
            }
            v.into_iter().map(Element::Word).collect()
        }
        D::AbFree { vals } => abelianized_words(vals.len(), budget.max_word_len, cap),
        D::Prod { children, .. } => {
            let k = per_factor(cap, children.len());
            let parts: Vec<Vec<Element>> =
                children.iter().map(|ch| sample_elements(ch, budget).into_iter().take(k).collect()).collect();
            cartesian(&parts, cap * 4).0.into_iter().map(Element::Tuple).collect()
        }
        D::Lex { first, second } => {
            let k = per_factor(cap, 2);
            let a: Vec<Element> = sample_elements(first, budget).into_iter().take(k).collect();
            let g: Vec<Element> = sample_elements(second, budget).into_iter().take(k).collect();
            cartesian(&[a, g], cap * 4).0.into_iter().map(Element::Tuple).collect()
        }
        D::Trivial { child } => sample_elements(child, budget),
    };
    let mut out = canonical_order(desc, dedup(raw), budget.seed);
    out.truncate(cap);
    out
}

/// Every `x` with `l <= x` for all `l` in `los` and `x <= h` for all `h` in
/// `his`, or a bounded sample of them. The flag is true only when the list is
/// provably complete.
pub fn interval_candidates(
    desc: &GroupDescriptor,
    los: &[Element],
    his: &[Element],
    budget: &SearchBudget,
) -> Result<(Vec<Element>, bool)> {
    for e in los.iter().chain(his) {
        desc.check(e)?;
    }
    let (raw, exhaustive) = raw_interval(desc, los, his, budget)?;
    let mut kept = Vec::new();
    for x in dedup(raw) {
        let mut ok = true;
        for l in los {
            if !desc.leq(l, &x)? {
                ok = false;
                break;
            }
        }
        if ok {
            for h in his {
                if !desc.leq(&x, h)? {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            kept.push(x);
        }
    }
    let cap = budget.max_candidates.max(1);
    if exhaustive {
        let complete = kept.len() <= cap;
        kept.truncate(cap);
        Ok((kept, complete))
    } else {
        let mut ordered = canonical_order(desc, kept, budget.seed);
        ordered.truncate(cap);
        Ok((ordered, false))
    }
}

fn int_of(e: &Element) -> BigInt {
    match e {
        Element::Int(n) => n.clone(),
        _ => BigInt::zero(),
    }
}

fn rat_of(e: &Element) -> Rat {
    match e {
        Element::Rat(r) => r.clone(),
        _ => Rat::zero(),
    }
}

fn raw_interval(
    desc: &GroupDescriptor,
    los: &[Element],
    his: &[Element],
    budget: &SearchBudget,
) -> Result<(Vec<Element>, bool)> {
    use GroupDescriptor as D;
    let c = coord(budget);
    let cap = budget.max_candidates.max(1);
    let mut seeds: Vec<Element> = los.iter().chain(his).cloned().collect();
    Ok(match desc {
        D::Int => {
            let lo = los.iter().map(int_of).max();
            let hi = his.iter().map(int_of).min();
            let (lo, hi, exact) = match (lo, hi) {
                (Some(l), Some(h)) => (l, h, true),
                (Some(l), None) => (l.clone(), l + c, false),
                (None, Some(h)) => (&h - c, h, false),
                (None, None) => (BigInt::from(-c), BigInt::from(c), false),
            };
            let mut v = Vec::new();
            let mut k = lo;
            let mut complete = exact;
            while k <= hi {
                if v.len() > cap {
                    complete = false;
                    break;
                }
                v.push(Element::Int(k.clone()));
                k += 1;
            }
            (v, complete)
        }
        D::Rat => {
            let lo = los.iter().map(rat_of).max();
            let hi = his.iter().map(rat_of).min();
            let cr = Rat::from_integer(c.into());
            let (lo, hi) = match (lo, hi) {
                (Some(l), Some(h)) => (l, h),
                (Some(l), None) => (l.clone(), l + cr),
                (None, Some(h)) => (&h - cr, h),
                (None, None) => (-cr.clone(), cr),
            };
            if lo <= hi {
                seeds.push(Element::Rat(half(&(&lo + &hi))));
                let quarter = half(&(&hi - &lo));
                seeds.push(Element::Rat(&lo + half(&quarter)));
                seeds.push(Element::Rat(&hi - half(&quarter)));
                seeds.extend(half_grid(&lo, &hi, cap).into_iter().map(Element::Rat));
            }
            (seeds, false)
        }
        D::Matrix | D::Free { .. } | D::AbFree { .. } => {
            seeds.push(desc.zero());
            seeds.extend(sample_elements(desc, budget));
            (seeds, false)
        }
        D::Prod { mode, children } => {
            let n = children.len();
            let k = per_factor(cap, n);
            let mut parts = Vec::new();
            let mut complete = true;
            for (i, ch) in children.iter().enumerate() {
                let li: Vec<Element> = los.iter().filter_map(|e| e.parts().map(|p| p[i].clone())).collect();
                let hi: Vec<Element> = his.iter().filter_map(|e| e.parts().map(|p| p[i].clone())).collect();
                let sub = SearchBudget { max_candidates: k, ..*budget };
                let (cands, ex) = interval_candidates(ch, &li, &hi, &sub)?;
                complete &= ex;
                parts.push(cands);
            }
            let (rows, all) = cartesian(&parts, cap * 4);
            complete &= all;
            let mut v: Vec<Element> = rows.into_iter().map(Element::Tuple).collect();
            if *mode == ProductMode::Strict {
                v.extend(seeds);
            }
            (v, complete)
        }
        D::Lex { first, second } => {
            let split = |e: &Element| e.split2().map(|(a, g)| (a.clone(), g.clone()));
            let lo_pairs: Vec<(Element, Element)> = los.iter().filter_map(split).collect();
            let hi_pairs: Vec<(Element, Element)> = his.iter().filter_map(split).collect();
            let la: Vec<Element> = lo_pairs.iter().map(|p| p.0.clone()).collect();
            let ha: Vec<Element> = hi_pairs.iter().map(|p| p.0.clone()).collect();
            let (acands, mut complete) = interval_candidates(first, &la, &ha, budget)?;
            let per = (cap / acands.len().max(1)).max(8);
            let sub = SearchBudget { max_candidates: per, ..*budget };
            let mut v = Vec::new();
            for a in acands {
                let lg: Vec<Element> = lo_pairs.iter().filter(|p| p.0 == a).map(|p| p.1.clone()).collect();
                let hg: Vec<Element> = hi_pairs.iter().filter(|p| p.0 == a).map(|p| p.1.clone()).collect();
                let (gs, ex) = interval_candidates(second, &lg, &hg, &sub)?;
                complete &= ex;
                v.extend(gs.into_iter().map(|g| Element::pair(a.clone(), g)));
            }
            v.extend(seeds);
            (v, complete)
        }
        D::Trivial { child } => {
            if seeds.is_empty() {
                (sample_elements(child, budget), false)
            } else {
                let first = seeds[0].clone();
                if seeds.iter().all(|s| *s == first) {
                    (vec![first], true)
                } else {
                    (Vec::new(), true)
                }
            }
        }
    })
}

/// All `x` with `0 <= x <= c`, or a deterministic sample containing 0 and c.
pub fn lower_interval(desc: &GroupDescriptor, c: &Element, budget: &SearchBudget) -> Result<Vec<Element>> {
    Ok(interval_candidates(desc, &[desc.zero()], std::slice::from_ref(c), budget)?.0)
}
