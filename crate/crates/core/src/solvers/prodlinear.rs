use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::rdp::{Equation, RdpTable};

use super::lexsplit::comparable_heads;
use super::{certify, ht, is_product_of_linears, lower4, Ctx, Solved, SolverTrace};

/// Lex(A, G) with A a product of chains (or a single chain) and G directed.
/// Incomparable heads are split coordinate by coordinate and need G abelian.
pub fn solve_lex_prodlinear_rdp1(desc: &GroupDescriptor, eq: &Equation) -> Result<Solved> {
    let Some((a, g)) = desc.lex_parts() else {
        return Err(Error::NotApplicable(format!("{desc} is not lexicographic")));
    };
    prodlinear_ctx(a, g, eq, &Ctx::new(&Default::default()))
}

pub(crate) fn prodlinear_ctx(a: &GroupDescriptor, g: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Solved> {
    if !is_product_of_linears(a) {
        return Err(Error::NotApplicable(format!("{a} is not a product of chains")));
    }
    let desc = GroupDescriptor::lex(a.clone(), g.clone());
    eq.check_positive(&desc)?;
    if let Some((t, case, mut tr)) = comparable_heads(a, g, eq, ctx)? {
        tr.tag = format!("prodlinear/{}", case.coarse_tag());
        return Ok((t, tr));
    }
    let GroupDescriptor::Prod { mode: ProductMode::Product, children } = a else {
        return Err(Error::ConstructionFailed(format!("heads incomparable in chain {a}")));
    };
    if !g.is_abelian() {
        return Err(Error::AbelianRequired(format!("{g} is not abelian")));
    }
    let (x1, u1) = ht(&eq.a1);
    let (x2, u2) = ht(&eq.a2);
    let (y1, v1) = ht(&eq.b1);
    let (y2, v2) = ht(&eq.b2);
    let p = |e: &Element| e.parts().expect("tuple").to_vec();
    let (px1, px2, py1, py2) = (p(&x1), p(&x2), p(&y1), p(&y2));
    let (mut i1, mut i2, mut i3) = (vec![], vec![], vec![]);
    let mut heads: [Vec<Element>; 4] = Default::default();
    for (i, c) in children.iter().enumerate() {
        let ord = c.compare(&py1[i], &px1[i])?.expect("chains are linear");
        let z = c.zero();
        let (e, f, gg, h) = match ord {
            Ordering::Less => {
                i1.push(i + 1);
                (py1[i].clone(), c.lsub(&py1[i], &px1[i])?, z, px2[i].clone())
            }
            Ordering::Greater => {
                i2.push(i + 1);
                (px1[i].clone(), z, c.lsub(&px1[i], &py1[i])?, py2[i].clone())
            }
            Ordering::Equal => {
                i3.push(i + 1);
                (px1[i].clone(), z.clone(), z, px2[i].clone())
            }
        };
        for (col, x) in heads.iter_mut().zip([e, f, gg, h]) {
            col.push(x);
        }
    }
    let [e, f, gh, h] = heads.map(Element::Tuple);
    let d = lower4(g, [&u1, &u2, &v1, &v2])?;
    let geq = Equation::new(g.lsub(&d, &u1)?, g.sub(&u2, &d)?, g.lsub(&d, &v1)?, g.sub(&v2, &d)?);
    let (c, sub) = ctx.sub(g, &geq)?;
    let t = RdpTable::new(
        eq,
        Element::pair(e.clone(), c.c11.clone()),
        Element::pair(f.clone(), g.add(&c.c12, &d)?),
        Element::pair(gh.clone(), g.add(&c.c21, &d)?),
        Element::pair(h.clone(), c.c22.clone()),
    );
    let tag = "prodlinear/incomparable";
    let mut tr = SolverTrace::new(tag)
        .aux("d", &d)
        .aux("e", &e)
        .aux("f", &f)
        .aux("g", &gh)
        .aux("h", &h)
        .with_sub(sub);
    tr.index_sets.insert("I1".into(), i1);
    tr.index_sets.insert("I2".into(), i2);
    tr.index_sets.insert("I3".into(), i3);
    Ok((certify(&desc, t, tag)?, tr))
}
