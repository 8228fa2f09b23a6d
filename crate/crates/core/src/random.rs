//! Seeded random elements and positive equations for sweeps.

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::{Element, GroupDescriptor, ProductMode};
use crate::num::rat;
use crate::rdp::Equation;
use crate::word::{Letter, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_rat<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> BigRational {
    let q = rng.gen_range(1..=3);
    rat(rng.gen_range(lo * q..=hi * q), q)
}

fn rand_word<R: Rng>(rng: &mut R, k: usize, radius: i64) -> Word {
    let len = rng.gen_range(0..=radius.max(1) as usize);
    Word::reduce((0..len).map(|_| Letter::new(rng.gen_range(1..=k as u32), rng.gen_bool(0.5))))
}

fn matrix_a<R: Rng>(rng: &mut R) -> BigRational {
    [rat(1, 3), rat(1, 2), rat(1, 1), rat(1, 1), rat(3, 2), rat(2, 1), rat(3, 1)][rng.gen_range(0..7)].clone()
}

/// Any element with coordinates in [-radius, radius].
pub fn random_element<R: Rng>(desc: &GroupDescriptor, rng: &mut R, radius: i64) -> Element {
    use GroupDescriptor as D;
    match desc {
        D::Int => Element::int(rng.gen_range(-radius..=radius)),
        D::Rat => Element::Rat(rand_rat(rng, -radius, radius)),
        D::Matrix => Element::Matrix(matrix_a(rng), rand_rat(rng, -radius, radius)),
        D::Free { vals } => Element::Word(rand_word(rng, vals.len(), radius)),
        D::AbFree { vals } => Element::Tuple((0..vals.len()).map(|_| Element::int(rng.gen_range(-radius..=radius))).collect()),
        D::Prod { children, .. } => Element::Tuple(children.iter().map(|c| random_element(c, rng, radius)).collect()),
        D::Lex { first, second } => Element::pair(random_element(first, rng, radius), random_element(second, rng, radius)),
        D::Trivial { child } => random_element(child, rng, radius),
    }
}

/// A positive element; zero shows up with small but nonzero probability.
pub fn random_positive<R: Rng>(desc: &GroupDescriptor, rng: &mut R, radius: i64) -> Element {
    use GroupDescriptor as D;
    match desc {
        D::Int => Element::int(rng.gen_range(0..=radius)),
        D::Rat => Element::Rat(rand_rat(rng, 0, radius)),
        D::Matrix => {
            let a = matrix_a(rng);
            if a > rat(1, 1) {
                Element::Matrix(a, rand_rat(rng, -radius, radius))
            } else {
                Element::Matrix(rat(1, 1), rand_rat(rng, 0, radius))
            }
        }
        D::Prod { mode: ProductMode::Product, children } => {
            Element::Tuple(children.iter().map(|c| random_positive(c, rng, radius)).collect())
        }
        D::Prod { mode: ProductMode::Strict, children } => {
            if rng.gen_ratio(1, 8) {
                return desc.zero();
            }
            Element::Tuple(children.iter().map(|c| random_strictly_positive(c, rng, radius)).collect())
        }
        D::Lex { first, second } => {
            let a = random_positive(first, rng, radius);
            let g = if first.is_zero(&a) {
                random_positive(second, rng, radius)
            } else {
                random_element(second, rng, radius)
            };
            Element::pair(a, g)
        }
        D::Trivial { .. } => desc.zero(),
        D::Free { .. } | D::AbFree { .. } => {
            for _ in 0..64 {
                let x = random_element(desc, rng, radius);
                if desc.is_positive(&x).unwrap_or(false) {
                    return x;
                }
            }
            desc.zero()
        }
    }
}

fn random_strictly_positive<R: Rng>(desc: &GroupDescriptor, rng: &mut R, radius: i64) -> Element {
    for _ in 0..64 {
        let x = random_positive(desc, rng, radius.max(1));
        if !desc.is_zero(&x) {
            return x;
        }
    }
    match desc {
        GroupDescriptor::Int => Element::int(1),
        GroupDescriptor::Rat => Element::rat(1, 1),
        _ => random_positive(desc, rng, radius),
    }
}

/// a1, a2, b1 drawn positive, b2 = -b1 + a1 + a2, retried until b2 >= 0.
pub fn random_positive_equation<R: Rng>(desc: &GroupDescriptor, rng: &mut R, radius: i64) -> Option<Equation> {
    for _ in 0..500 {
        let a1 = random_positive(desc, rng, radius);
        let a2 = random_positive(desc, rng, radius);
        let b1 = random_positive(desc, rng, radius);
        let Ok(s) = desc.add(&a1, &a2) else { continue };
        let Ok(b2) = desc.lsub(&b1, &s) else { continue };
        if desc.is_positive(&b2).unwrap_or(false) {
            return Some(Equation::new(a1, a2, b1, b2));
        }
    }
    None
}
