use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::props::strict_between;
use crate::rdp::{Equation, RdpTable};

use super::lexsplit::comparable_heads;
use super::linear::degenerate_table;
use super::strengthen::strengthen_ctx;
use super::{certify, ht, Ctx, Solved, SolverTrace};

fn dense_children(desc: &GroupDescriptor) -> Result<&[GroupDescriptor]> {
    let GroupDescriptor::Prod { mode: ProductMode::Strict, children } = desc else {
        return Err(Error::NotApplicable(format!("{desc} is not a strict product")));
    };
    if let Some(c) = children.iter().find(|c| !matches!(c, GroupDescriptor::Rat)) {
        return Err(Error::DensityRequired(format!(
            "factor {c} of {desc} is not a dense linearly ordered abelian group"
        )));
    }
    Ok(children)
}

/// Strict product of dense chains: min-split each coordinate, then shift a
/// small amount across the diagonal so every coordinate is strictly positive.
pub fn solve_strict_product(desc: &GroupDescriptor, eq: &Equation) -> Result<RdpTable> {
    let children = dense_children(desc)?;
    eq.check_positive(desc)?;
    if let Some(t) = degenerate_table(desc, eq)? {
        return certify(desc, t, "strict-product");
    }
    let q = &GroupDescriptor::Rat;
    let coord = |e: &Element, i: usize| e.parts().expect("tuple")[i].clone();
    let mut cols: [Vec<Element>; 4] = Default::default();
    for i in 0..children.len() {
        let (a1, a2, b1, b2) = (coord(&eq.a1, i), coord(&eq.a2, i), coord(&eq.b1, i), coord(&eq.b2, i));
        let z = q.zero();
        let [n11, n12, n21, n22] = if q.leq(&a1, &b1)? {
            [a1.clone(), z, q.sub(&b1, &a1)?, b2]
        } else {
            [b1.clone(), q.sub(&a1, &b1)?, z, a2]
        };
        let row = if q.is_zero(&n12) || q.is_zero(&n21) {
            let n0 = strict_between(q, &n11, &n22)?;
            [q.sub(&n11, &n0)?, q.add(&n12, &n0)?, q.add(&n21, &n0)?, q.sub(&n22, &n0)?]
        } else if q.is_zero(&n11) || q.is_zero(&n22) {
            let n0 = strict_between(q, &n12, &n21)?;
            [q.add(&n11, &n0)?, q.sub(&n12, &n0)?, q.sub(&n21, &n0)?, q.add(&n22, &n0)?]
        } else {
            [n11, n12, n21, n22]
        };
        for (col, e) in cols.iter_mut().zip(row) {
            col.push(e);
        }
    }
    let [c11, c12, c21, c22] = cols.map(Element::Tuple);
    certify(desc, RdpTable::new(eq, c11, c12, c21, c22), "strict-product")
}

/// Lex(S, G) with S a strict product of dense chains and G directed.
pub fn solve_strict_product_lex(a: &GroupDescriptor, g: &GroupDescriptor, eq: &Equation) -> Result<Solved> {
    strict_product_lex_ctx(a, g, eq, &Ctx::new(&Default::default()))
}

pub(crate) fn strict_product_lex_ctx(
    a: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    ctx: &Ctx,
) -> Result<Solved> {
    dense_children(a)?;
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    eq.check_positive(&desc)?;
    if let Some((t, case, tr)) = comparable_heads(a, g, eq, ctx)? {
        let mut tr = tr;
        tr.tag = format!("strict-product-lex/{}", case.tag());
        return Ok((certify(&desc, t, &tr.tag)?, tr));
    }
    // Incomparable heads: make the head table strictly positive everywhere,
    // then any G-table works, positive or not.
    let (x1, u1) = ht(&eq.a1);
    let (x2, u2) = ht(&eq.a2);
    let (y1, v1) = ht(&eq.b1);
    let (y2, _) = ht(&eq.b2);
    let (n, ntr) = strengthen_ctx(a, &Equation::new(x1, x2, y1, y2), ctx)?;
    let c11 = v1.clone();
    let c12 = g.lsub(&v1, &u1)?;
    let c21 = g.zero();
    let c22 = u2;
    let t = RdpTable::new(
        eq,
        Element::pair(n.c11, c11),
        Element::pair(n.c12, c12),
        Element::pair(n.c21, c21),
        Element::pair(n.c22, c22),
    );
    let tag = "strict-product-lex/incomparable-heads";
    Ok((certify(&desc, t, tag)?, SolverTrace::new(tag).with_sub(ntr)))
}
