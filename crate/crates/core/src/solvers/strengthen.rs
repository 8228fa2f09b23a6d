use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor};
use crate::props::{is_wrdp_witness, strict_between};
use crate::rdp::{Equation, RdpTable};

use super::{certify, Ctx, Solved, SolverTrace};

/// For an antilattice with a1, b1 incomparable: a table whose four entries
/// are all strictly positive, with c12 and c21 incomparable.
pub fn antilattice_strengthen(desc: &GroupDescriptor, eq: &Equation) -> Result<RdpTable> {
    Ok(strengthen_ctx(desc, eq, &Ctx::new(&Default::default()))?.0)
}

pub(crate) fn strengthen_ctx(desc: &GroupDescriptor, eq: &Equation, ctx: &Ctx) -> Result<Solved> {
    eq.check_positive(desc)?;
    let Equation { a1, a2, b1, b2 } = eq;
    if desc.comparable(a1, b1)? {
        return Err(Error::NotApplicable(format!("{a1} and {b1} are comparable")));
    }
    let n0 = strict_between(desc, a1, b1)?;
    let m0 = strict_between(desc, a2, b2)?;
    let inner = Equation::new(desc.lsub(&n0, a1)?, desc.sub(a2, &m0)?, desc.lsub(&n0, b1)?, desc.sub(b2, &m0)?);
    let (n, sub) = ctx.sub(desc, &inner)?;
    let t = RdpTable::new(eq, desc.add(&n0, &n.c11)?, n.c12.clone(), n.c21.clone(), desc.add(&n.c22, &m0)?);
    let t = certify(desc, t, "antilattice-strengthen")?;
    for e in t.entries() {
        if !desc.is_strictly_positive(e)? {
            return Err(Error::ConstructionFailed(format!("entry {e} is not strictly positive")));
        }
    }
    let incomparable = !desc.comparable(&t.c12, &t.c21)?;
    if !incomparable {
        return Err(Error::ConstructionFailed(format!("{} and {} are comparable", t.c12, t.c21)));
    }
    let tr = SolverTrace::new("antilattice-strengthen")
        .aux("n0", &n0)
        .aux("m0", &m0)
        .check("offdiagonal-incomparable", incomparable)
        .with_sub(sub);
    Ok((t, tr))
}

/// The table (u1 - d1, d1; d2, -d2 + u2) built from wRDP witnesses. It
/// need not be positive; `d1`, `d2` are checked as witnesses first.
pub fn wrdp_corner_table(
    desc: &GroupDescriptor,
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    d1: &Element,
    d2: &Element,
) -> Result<RdpTable> {
    let eq = &Equation::new(u1.clone(), u2.clone(), v1.clone(), v2.clone());
    eq.check(desc)?;
    if !is_wrdp_witness(desc, u1, u2, v1, v2, d1, d2)? {
        return Err(Error::InvalidWitness(format!("({d1}, {d2}) are not wRDP witnesses")));
    }
    let t = RdpTable::new(eq, desc.sub(u1, d1)?, d1.clone(), d2.clone(), desc.lsub(d2, u2)?);
    if !crate::rdp::sums_ok(desc, &t)? {
        return Err(Error::ConstructionFailed("wRDP table sums do not hold".into()));
    }
    Ok(t)
}
