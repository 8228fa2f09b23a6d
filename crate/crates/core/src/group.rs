use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{fmt_rat, rat_vec_serde, Rat};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductMode {
    /// Componentwise order.
    Product,
    /// Equal, or strictly below in every coordinate.
    Strict,
}

/// A carrier group together with its partial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum GroupDescriptor {
    Int,
    Rat,
    /// Pairs (a, b), a > 0, standing for the matrix [[a, b], [0, 1]].
    Matrix,
    /// Free group on g1..gk; x <= y iff x = y or v(x) < v(y).
    Free {
        #[serde(with = "rat_vec_serde")]
        vals: Vec<Rat>,
    },
    /// Free abelian group Z^k under the same valuation order.
    AbFree {
        #[serde(with = "rat_vec_serde")]
        vals: Vec<Rat>,
    },
    Prod { mode: ProductMode, children: Vec<GroupDescriptor> },
    Lex { first: Box<GroupDescriptor>, second: Box<GroupDescriptor> },
    /// Same group, order replaced by equality.
    Trivial { child: Box<GroupDescriptor> },
}

/// A value of some carrier. Which variant is legal is decided by the descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Int(BigInt),
    Rat(Rat),
    Tuple(Vec<Element>),
    Word(Word),
    Matrix(Rat, Rat),
}

impl Element {
    pub fn int(n: i64) -> Self {
        Element::Int(BigInt::from(n))
    }

    pub fn rat(p: i64, q: i64) -> Self {
        Element::Rat(crate::num::rat(p, q))
    }

    pub fn matrix(a: Rat, b: Rat) -> Self {
        Element::Matrix(a, b)
    }

    pub fn pair(x: Element, y: Element) -> Self {
        Element::Tuple(vec![x, y])
    }

    pub fn ints(v: &[i64]) -> Self {
        Element::Tuple(v.iter().map(|&n| Element::int(n)).collect())
    }

    pub fn parts(&self) -> Option<&[Element]> {
        match self {
            Element::Tuple(v) => Some(v),
            _ => None,
        }
    }

    /// First and second component of a pair.
    pub fn split2(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::Tuple(v) if v.len() == 2 => Some((&v[0], &v[1])),
            _ => None,
        }
    }

    /// Canonical size used for deterministic enumeration order.
    pub fn size(&self) -> u64 {
        match self {
            Element::Int(n) => crate::num::int_size(n),
            Element::Rat(r) => crate::num::rat_size(r),
            Element::Tuple(v) => v.iter().map(Element::size).fold(0, u64::saturating_add),
            Element::Word(w) => w.len() as u64,
            Element::Matrix(a, b) => {
                let la = if a >= &Rat::one() { a.clone() } else { a.recip() };
                crate::num::rat_size(&la).saturating_sub(1).saturating_add(crate::num::rat_size(b))
            }
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(n) => write!(f, "{n}"),
            Element::Rat(r) => write!(f, "{}", fmt_rat(r)),
            Element::Tuple(v) => {
                write!(f, "(")?;
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            Element::Word(w) => write!(f, "{w}"),
            Element::Matrix(a, b) => write!(f, "M({},{})", fmt_rat(a), fmt_rat(b)),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupDescriptor::*;
        let vals = |f: &mut fmt::Formatter<'_>, name: &str, v: &[crate::num::Rat]| {
            let parts: Vec<String> = v.iter().map(fmt_rat).collect();
            write!(f, "{name}({}; {})", v.len(), parts.join(", "))
        };
        match self {
            Int => write!(f, "Z"),
            Rat => write!(f, "Q"),
            Matrix => write!(f, "Matrix"),
            Free { vals: v } => vals(f, "Free", v),
            AbFree { vals: v } => vals(f, "AbFree", v),
            Prod { mode, children } => {
                let name = match mode {
                    ProductMode::Product => "Prod",
                    ProductMode::Strict => "Strict",
                };
                let parts: Vec<String> = children.iter().map(|c| c.to_string()).collect();
                write!(f, "{name}({})", parts.join(","))
            }
            Lex { first, second } => write!(f, "Lex({first},{second})"),
            Trivial { child } => write!(f, "Trivial({child})"),
        }
    }
}

fn mismatch(desc: &GroupDescriptor, x: &Element) -> Error {
    Error::ShapeMismatch { expected: desc.to_string(), found: x.to_string() }
}

impl GroupDescriptor {
    pub fn prod(children: Vec<GroupDescriptor>) -> Self {
        GroupDescriptor::Prod { mode: ProductMode::Product, children }
    }

    pub fn strict(children: Vec<GroupDescriptor>) -> Self {
        GroupDescriptor::Prod { mode: ProductMode::Strict, children }
    }

    pub fn lex(first: GroupDescriptor, second: GroupDescriptor) -> Self {
        GroupDescriptor::Lex { first: Box::new(first), second: Box::new(second) }
    }

    pub fn trivial(child: GroupDescriptor) -> Self {
        GroupDescriptor::Trivial { child: Box::new(child) }
    }

    pub fn free(vals: Vec<Rat>) -> Self {
        GroupDescriptor::Free { vals }
    }

    pub fn ab_free(vals: Vec<Rat>) -> Self {
        GroupDescriptor::AbFree { vals }
    }

    /// Checks the structural invariants of the tree.
    pub fn validate(&self) -> Result<()> {
        use GroupDescriptor::*;
        match self {
            Int | Rat | Matrix => Ok(()),
            Free { vals } | AbFree { vals } => {
                if vals.is_empty() {
                    return Err(Error::InvalidDescriptor("free carrier needs at least one generator".into()));
                }
                if vals.iter().any(|v| !v.is_positive()) {
                    return Err(Error::InvalidDescriptor("valuations must be strictly positive".into()));
                }
                Ok(())
            }
            Prod { children, .. } => {
                if children.len() < 2 {
                    return Err(Error::InvalidDescriptor("a product needs at least two factors".into()));
                }
                children.iter().try_for_each(|c| c.validate())
            }
            Lex { first, second } => {
                first.validate()?;
                second.validate()
            }
            Trivial { child } => child.validate(),
        }
    }

    pub fn zero(&self) -> Element {
        use GroupDescriptor::*;
        match self {
            Int => Element::Int(BigInt::zero()),
            Rat => Element::Rat(crate::num::Rat::zero()),
            Matrix => Element::Matrix(crate::num::Rat::one(), crate::num::Rat::zero()),
            Free { .. } => Element::Word(Word::empty()),
            AbFree { vals } => Element::Tuple(vec![Element::Int(BigInt::zero()); vals.len()]),
            Prod { children, .. } => Element::Tuple(children.iter().map(|c| c.zero()).collect()),
            Lex { first, second } => Element::pair(first.zero(), second.zero()),
            Trivial { child } => child.zero(),
        }
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        *x == self.zero()
    }

    /// Verifies that `x` has the shape this carrier requires.
    pub fn check(&self, x: &Element) -> Result<()> {
        use GroupDescriptor::*;
        let ok = match (self, x) {
            (Int, Element::Int(_)) | (Rat, Element::Rat(_)) => true,
            (Matrix, Element::Matrix(a, _)) => a.is_positive(),
            (Free { vals }, Element::Word(w)) => w.max_gen() as usize <= vals.len(),
            (AbFree { vals }, Element::Tuple(v)) => {
                v.len() == vals.len() && v.iter().all(|e| matches!(e, Element::Int(_)))
            }
            (Prod { children, .. }, Element::Tuple(v)) => {
                if v.len() != children.len() {
                    false
                } else {
                    return children.iter().zip(v).try_for_each(|(c, e)| c.check(e));
                }
            }
            (Lex { first, second }, Element::Tuple(v)) if v.len() == 2 => {
                first.check(&v[0])?;
                return second.check(&v[1]);
            }
            (Trivial { child }, _) => return child.check(x),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(mismatch(self, x))
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        use GroupDescriptor::*;
        match (self, x, y) {
            (Int, Element::Int(a), Element::Int(b)) => Ok(Element::Int(a + b)),
            (Rat, Element::Rat(a), Element::Rat(b)) => Ok(Element::Rat(a + b)),
            (Matrix, Element::Matrix(a, b), Element::Matrix(c, d)) => {
                Ok(Element::Matrix(a * c, a * d + b))
            }
            (Free { .. }, Element::Word(a), Element::Word(b)) => Ok(Element::Word(a.concat(b))),
            (AbFree { .. }, Element::Tuple(a), Element::Tuple(b)) if a.len() == b.len() => {
                a.iter().zip(b).map(|(p, q)| Int.add(p, q)).collect::<Result<_>>().map(Element::Tuple)
            }
            (Prod { children, .. }, Element::Tuple(a), Element::Tuple(b))
                if a.len() == children.len() && b.len() == children.len() =>
            {
                children
                    .iter()
                    .zip(a.iter().zip(b))
                    .map(|(c, (p, q))| c.add(p, q))
                    .collect::<Result<_>>()
                    .map(Element::Tuple)
            }
            (Lex { first, second }, Element::Tuple(a), Element::Tuple(b)) if a.len() == 2 && b.len() == 2 => {
                Ok(Element::pair(first.add(&a[0], &b[0])?, second.add(&a[1], &b[1])?))
            }
            (Trivial { child }, _, _) => child.add(x, y),
            _ => {
                self.check(x)?;
                Err(mismatch(self, y))
            }
        }
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        use GroupDescriptor::*;
        match (self, x) {
            (Int, Element::Int(a)) => Ok(Element::Int(-a)),
            (Rat, Element::Rat(a)) => Ok(Element::Rat(-a)),
            (Matrix, Element::Matrix(a, b)) if !a.is_zero() => Ok(Element::Matrix(a.recip(), -(b / a))),
            (Free { .. }, Element::Word(w)) => Ok(Element::Word(w.inverse())),
            (AbFree { .. }, Element::Tuple(v)) => {
                v.iter().map(|e| Int.neg(e)).collect::<Result<_>>().map(Element::Tuple)
            }
            (Prod { children, .. }, Element::Tuple(v)) if v.len() == children.len() => {
                children.iter().zip(v).map(|(c, e)| c.neg(e)).collect::<Result<_>>().map(Element::Tuple)
            }
            (Lex { first, second }, Element::Tuple(v)) if v.len() == 2 => {
                Ok(Element::pair(first.neg(&v[0])?, second.neg(&v[1])?))
            }
            (Trivial { child }, _) => child.neg(x),
            _ => Err(mismatch(self, x)),
        }
    }

    /// x + (-y)
    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.add(x, &self.neg(y)?)
    }

    /// (-x) + y
    pub fn lsub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.add(&self.neg(x)?, y)
    }

    pub fn sum(&self, xs: &[&Element]) -> Result<Element> {
        let mut acc = self.zero();
        for x in xs {
            acc = self.add(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn commute(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(self.add(x, y)? == self.add(y, x)?)
    }

    /// The partial order of the carrier.
    pub fn leq(&self, x: &Element, y: &Element) -> Result<bool> {
        use GroupDescriptor::*;
        match (self, x, y) {
            (Int, Element::Int(a), Element::Int(b)) => Ok(a <= b),
            (Rat, Element::Rat(a), Element::Rat(b)) => Ok(a <= b),
            (Matrix, Element::Matrix(a, b), Element::Matrix(c, d)) => Ok(c > a || (c == a && d >= b)),
            (Free { vals }, Element::Word(a), Element::Word(b)) => {
                Ok(a == b || word_valuation(vals, a)? < word_valuation(vals, b)?)
            }
            (AbFree { vals }, Element::Tuple(_), Element::Tuple(_)) => {
                Ok(x == y || exp_valuation(vals, x)? < exp_valuation(vals, y)?)
            }
            (Prod { mode, children }, Element::Tuple(a), Element::Tuple(b))
                if a.len() == children.len() && b.len() == children.len() =>
            {
                match mode {
                    ProductMode::Product => {
                        for (c, (p, q)) in children.iter().zip(a.iter().zip(b)) {
                            if !c.leq(p, q)? {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    }
                    ProductMode::Strict => {
                        if a == b {
                            return Ok(true);
                        }
                        for (c, (p, q)) in children.iter().zip(a.iter().zip(b)) {
                            if !c.lt(p, q)? {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    }
                }
            }
            (Lex { first, second }, Element::Tuple(a), Element::Tuple(b)) if a.len() == 2 && b.len() == 2 => {
                if a[0] == b[0] {
                    second.leq(&a[1], &b[1])
                } else {
                    first.leq(&a[0], &b[0])
                }
            }
            (Trivial { child }, _, _) => {
                child.check(x)?;
                child.check(y)?;
                Ok(x == y)
            }
            _ => {
                self.check(x)?;
                Err(mismatch(self, y))
            }
        }
    }

    pub fn lt(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(x != y && self.leq(x, y)?)
    }

    pub fn comparable(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(self.leq(x, y)? || self.leq(y, x)?)
    }

    /// `Some(ordering)` when comparable.
    pub fn compare(&self, x: &Element, y: &Element) -> Result<Option<Ordering>> {
        if x == y {
            return Ok(Some(Ordering::Equal));
        }
        if self.leq(x, y)? {
            Ok(Some(Ordering::Less))
        } else if self.leq(y, x)? {
            Ok(Some(Ordering::Greater))
        } else {
            Ok(None)
        }
    }

    pub fn is_positive(&self, x: &Element) -> Result<bool> {
        self.leq(&self.zero(), x)
    }

    pub fn is_strictly_positive(&self, x: &Element) -> Result<bool> {
        self.lt(&self.zero(), x)
    }

    /// The valuation of a free (or free abelian) element.
    pub fn valuation(&self, x: &Element) -> Result<Rat> {
        match (self, x) {
            (GroupDescriptor::Free { vals }, Element::Word(w)) => word_valuation(vals, w),
            (GroupDescriptor::AbFree { .. }, _) => {
                self.check(x)?;
                let GroupDescriptor::AbFree { vals } = self else { unreachable!() };
                exp_valuation(vals, x)
            }
            _ => Err(mismatch(self, x)),
        }
    }

    /// Group-theoretic commutativity, decided from the descriptor alone.
    pub fn is_abelian(&self) -> bool {
        use GroupDescriptor::*;
        match self {
            Int | Rat | AbFree { .. } => true,
            Matrix => false,
            Free { vals } => vals.len() <= 1,
            Prod { children, .. } => children.iter().all(|c| c.is_abelian()),
            Lex { first, second } => first.is_abelian() && second.is_abelian(),
            Trivial { child } => child.is_abelian(),
        }
    }

    /// Total order.
    pub fn is_linear(&self) -> bool {
        use GroupDescriptor::*;
        match self {
            Int | Rat | Matrix => true,
            Free { vals } | AbFree { vals } => vals.len() == 1,
            Prod { .. } | Trivial { .. } => false,
            Lex { first, second } => first.is_linear() && second.is_linear(),
        }
    }

    /// Positive cone is {0}.
    pub fn is_trivially_ordered(&self) -> bool {
        use GroupDescriptor::*;
        match self {
            Trivial { .. } => true,
            Prod { mode: ProductMode::Product, children } => children.iter().all(|c| c.is_trivially_ordered()),
            Prod { mode: ProductMode::Strict, children } => children.iter().any(|c| c.is_trivially_ordered()),
            Lex { first, second } => first.is_trivially_ordered() && second.is_trivially_ordered(),
            _ => false,
        }
    }

    /// Every pair has a common lower bound.
    pub fn is_directed(&self) -> bool {
        use GroupDescriptor::*;
        match self {
            Int | Rat | Matrix | Free { .. } | AbFree { .. } => true,
            Prod { mode: ProductMode::Product, children } => children.iter().all(|c| c.is_directed()),
            Prod { mode: ProductMode::Strict, children } => children.iter().all(|c| c.has_strict_lower_bounds()),
            Lex { first, .. } => first.has_strict_lower_bounds(),
            Trivial { .. } => false,
        }
    }

    /// Every pair has a common lower bound different from both.
    pub fn has_strict_lower_bounds(&self) -> bool {
        self.is_directed() && !self.is_trivially_ordered()
    }

    /// Carriers on which `strict_between` has a rule for every pair of
    /// strictly positive elements.
    pub fn is_dense(&self) -> bool {
        use GroupDescriptor::*;
        match self {
            Rat | Matrix => true,
            Prod { children, .. } => children.iter().all(|c| c.is_dense()),
            Lex { first, .. } => first.is_dense(),
            _ => false,
        }
    }

    pub fn lex_parts(&self) -> Option<(&GroupDescriptor, &GroupDescriptor)> {
        match self {
            GroupDescriptor::Lex { first, second } => Some((first, second)),
            _ => None,
        }
    }
}

pub(crate) fn word_valuation(vals: &[Rat], w: &Word) -> Result<Rat> {
    let mut v = Rat::zero();
    for &Letter { gen, inverse } in w.letters() {
        let g = vals
            .get(gen as usize - 1)
            .ok_or_else(|| Error::ShapeMismatch { expected: format!("{} generators", vals.len()), found: w.to_string() })?;
        if inverse {
            v -= g;
        } else {
            v += g;
        }
    }
    Ok(v)
}

fn exp_valuation(vals: &[Rat], x: &Element) -> Result<Rat> {
    let Element::Tuple(v) = x else {
        return Err(Error::ShapeMismatch { expected: "exponent vector".into(), found: x.to_string() });
    };
    if v.len() != vals.len() {
        return Err(Error::ShapeMismatch { expected: format!("{} exponents", vals.len()), found: x.to_string() });
    }
    let mut acc = Rat::zero();
    for (e, g) in v.iter().zip(vals) {
        match e {
            Element::Int(n) => acc += g * Rat::from_integer(n.clone()),
            _ => return Err(Error::ShapeMismatch { expected: "integer exponent".into(), found: e.to_string() }),
        }
    }
    Ok(acc)
}
