use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::rdp::{Equation, RdpTable};

use super::{certify, ht, Ctx, Solved, SolverTrace};

/// The evident table when one of the four elements is zero.
pub fn degenerate_table(desc: &GroupDescriptor, eq: &Equation) -> Result<Option<RdpTable>> {
    let z = desc.zero();
    let Equation { a1, a2, b1, b2 } = eq;
    let t = if desc.is_zero(a1) {
        RdpTable::new(eq, z.clone(), z, b1.clone(), b2.clone())
    } else if desc.is_zero(a2) {
        RdpTable::new(eq, b1.clone(), b2.clone(), z.clone(), z)
    } else if desc.is_zero(b1) {
        RdpTable::new(eq, z.clone(), a1.clone(), z, a2.clone())
    } else if desc.is_zero(b2) {
        RdpTable::new(eq, a1.clone(), z.clone(), a2.clone(), z)
    } else {
        return Ok(None);
    };
    Ok(Some(t))
}

/// Min-split in a linearly ordered carrier.
pub fn solve_linear(desc: &GroupDescriptor, eq: &Equation) -> Result<RdpTable> {
    if !desc.is_linear() {
        return Err(Error::NotApplicable(format!("{desc} is not linearly ordered")));
    }
    eq.check_positive(desc)?;
    let z = desc.zero();
    let Equation { a1, a2, b1, b2 } = eq;
    let t = if desc.leq(a1, b1)? {
        RdpTable::new(eq, a1.clone(), z, desc.lsub(a1, b1)?, b2.clone())
    } else {
        RdpTable::new(eq, b1.clone(), desc.lsub(b1, a1)?, z, a2.clone())
    };
    certify(desc, t, "linear")
}

/// Componentwise tables in a product with the product order.
pub fn solve_product(desc: &GroupDescriptor, eq: &Equation) -> Result<RdpTable> {
    Ok(solve_product_ctx(desc, eq, &Ctx::new(&Default::default()))?.0)
}

pub(crate) fn solve_product_ctx(desc: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Solved> {
    let GroupDescriptor::Prod { mode: ProductMode::Product, children } = desc else {
        return Err(Error::NotApplicable(format!("{desc} is not a product")));
    };
    eq.check_positive(desc)?;
    let coord = |e: &Element, i: usize| e.parts().expect("tuple")[i].clone();
    let mut cols: [Vec<Element>; 4] = Default::default();
    let mut trace = SolverTrace::new("product");
    for (i, child) in children.iter().enumerate() {
        let sub = Equation::new(coord(&eq.a1, i), coord(&eq.a2, i), coord(&eq.b1, i), coord(&eq.b2, i));
        let (t, tr) = ctx.sub(child, &sub)?;
        for (col, e) in cols.iter_mut().zip(t.entries()) {
            col.push(e.clone());
        }
        trace = trace.with_sub(tr);
    }
    let [c11, c12, c21, c22] = cols.map(Element::Tuple);
    let t = RdpTable::new(eq, c11, c12, c21, c22);
    Ok((certify(desc, t, "product")?, trace))
}

/// Lex(A, G) with A trivially ordered: positive elements have zero heads,
/// so a table in G lifts directly.
pub(crate) fn solve_trivial_first(
    a: &GroupDescriptor,
    g: &GroupDescriptor,
    eq: &Equation,
    ctx: &Ctx,
) -> Result<Solved> {
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    eq.check_positive(&desc)?;
    let tails: Vec<Element> = eq.elements().iter().map(|e| ht(e).1).collect();
    let geq = Equation::new(tails[0].clone(), tails[1].clone(), tails[2].clone(), tails[3].clone());
    let (t, tr) = ctx.sub(g, &geq)?;
    let z = a.zero();
    let lift = |e: &Element| Element::pair(z.clone(), e.clone());
    let t = RdpTable::new(eq, lift(&t.c11), lift(&t.c12), lift(&t.c21), lift(&t.c22));
    Ok((certify(&desc, t, "trivial-first-factor")?, SolverTrace::new("trivial-first-factor").with_sub(tr)))
}
