//! Recursive-descent reader for the descriptor and element notation.
//!
//! ```text
//! D ::= 'Z' | 'Q' | 'Matrix'
//!     | 'Free' '(' NAT ';' RAT {',' RAT} ')' | 'AbFree' '(' NAT ';' RAT {',' RAT} ')'
//!     | 'Trivial' '(' D ')' | 'Lex' '(' D ',' D ')'
//!     | 'Prod' '(' D ',' D {',' D} ')' | 'Strict' '(' D ',' D {',' D} ')'
//! ```
//!
//! Elements follow the descriptor: integers and rationals as numbers, tuples
//! in parentheses, words as `g1 -g2 g1^3` (or `0`), matrices as `M(a,b)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor};
use crate::num::Rat;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected {}, found {}", self.offset, self.expected.join(" or "), self.found)
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(c) => format!("{c:?}"),
        }
    }

    fn fail<T>(&mut self, expected: &[&str]) -> std::result::Result<T, ParseError> {
        let found = self.found();
        Err(ParseError { offset: self.pos, expected: expected.iter().map(|s| s.to_string()).collect(), found })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.char_indices().find(|(_, c)| !c.is_ascii_alphanumeric()).map_or(rest.len(), |(i, _)| i);
        if len == 0 || !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        self.pos += len;
        Some((start, &rest[..len]))
    }

    fn digits(&mut self) -> Option<&'a str> {
        let rest = &self.src[self.pos..];
        let len = rest.char_indices().find(|(_, c)| !c.is_ascii_digit()).map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    fn nat(&mut self) -> std::result::Result<BigInt, ParseError> {
        self.skip_ws();
        match self.digits() {
            Some(d) => Ok(d.parse().expect("digits parse")),
            None => self.fail(&["natural number"]),
        }
    }

    fn int(&mut self) -> std::result::Result<BigInt, ParseError> {
        self.skip_ws();
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let n = self.nat()?;
        Ok(if neg { -n } else { n })
    }

    fn rat(&mut self) -> std::result::Result<Rat, ParseError> {
        let p = self.int()?;
        if self.eat('/') {
            let at = {
                self.skip_ws();
                self.pos
            };
            let q = self.nat()?;
            if q.is_zero() {
                return Err(ParseError { offset: at, expected: vec!["nonzero denominator".into()], found: "0".into() });
            }
            Ok(Rat::new(p, q))
        } else {
            Ok(Rat::from_integer(p))
        }
    }

    fn end(&mut self) -> std::result::Result<(), ParseError> {
        if self.peek().is_some() {
            self.fail(&["end of input"])
        } else {
            Ok(())
        }
    }
}

const DESCRIPTOR_HEADS: [&str; 9] = ["Z", "Q", "Matrix", "Free", "AbFree", "Trivial", "Prod", "Strict", "Lex"];

fn descriptor(cur: &mut Cursor<'_>) -> std::result::Result<GroupDescriptor, ParseError> {
    let save = cur.pos;
    let Some((start, name)) = cur.ident() else {
        cur.pos = save;
        return cur.fail(&DESCRIPTOR_HEADS);
    };
    Ok(match name {
        "Z" => GroupDescriptor::Int,
        "Q" => GroupDescriptor::Rat,
        "Matrix" => GroupDescriptor::Matrix,
        "Free" | "AbFree" => {
            cur.expect('(')?;
            let k_at = {
                cur.skip_ws();
                cur.pos
            };
            let k = cur.nat()?;
            if k.is_zero() {
                return Err(ParseError { offset: k_at, expected: vec!["generator count >= 1".into()], found: "0".into() });
            }
            cur.expect(';')?;
            let k: usize = k.try_into().unwrap_or(usize::MAX);
            let mut vals = vec![cur.rat()?];
            while vals.len() < k {
                cur.expect(',')?;
                vals.push(cur.rat()?);
            }
            cur.expect(')')?;
            if name == "Free" {
                GroupDescriptor::Free { vals }
            } else {
                GroupDescriptor::AbFree { vals }
            }
        }
        "Trivial" => {
            cur.expect('(')?;
            let d = descriptor(cur)?;
            cur.expect(')')?;
            GroupDescriptor::trivial(d)
        }
        "Lex" => {
            cur.expect('(')?;
            let a = descriptor(cur)?;
            cur.expect(',')?;
            let g = descriptor(cur)?;
            cur.expect(')')?;
            GroupDescriptor::lex(a, g)
        }
        "Prod" | "Strict" => {
            cur.expect('(')?;
            let mut children = vec![descriptor(cur)?];
            cur.expect(',')?;
            children.push(descriptor(cur)?);
            while cur.eat(',') {
                children.push(descriptor(cur)?);
            }
            cur.expect(')')?;
            if name == "Prod" {
                GroupDescriptor::prod(children)
            } else {
                GroupDescriptor::strict(children)
            }
        }
        other => {
            return Err(ParseError {
                offset: start,
                expected: DESCRIPTOR_HEADS.iter().map(|s| s.to_string()).collect(),
                found: format!("{other:?}"),
            })
        }
    })
}

/// Parses a descriptor and checks its invariants.
pub fn parse_descriptor(text: &str) -> Result<GroupDescriptor> {
    let mut cur = Cursor::new(text);
    let d = descriptor(&mut cur)?;
    cur.end()?;
    d.validate()?;
    Ok(d)
}

fn word(cur: &mut Cursor<'_>) -> std::result::Result<Word, ParseError> {
    if cur.peek() == Some('0') || cur.peek() == Some('e') {
        cur.pos += 1;
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    loop {
        let inverse = match cur.peek() {
            Some('-') => {
                cur.pos += 1;
                true
            }
            Some('+') => {
                cur.pos += 1;
                false
            }
            _ => false,
        };
        if !cur.eat('g') {
            return cur.fail(&["generator 'g<n>'"]);
        }
        let gen_at = cur.pos;
        let Some(d) = cur.digits() else {
            return cur.fail(&["generator index"]);
        };
        let gen: u32 = match d.parse() {
            Ok(g) if g >= 1 => g,
            _ => return Err(ParseError { offset: gen_at, expected: vec!["generator index >= 1".into()], found: d.into() }),
        };
        let mut power = BigInt::from(1);
        if cur.eat('^') {
            power = cur.int()?;
        }
        let power: i64 = power.try_into().map_err(|_| ParseError {
            offset: cur.pos,
            expected: vec!["small exponent".into()],
            found: "huge exponent".into(),
        })?;
        let base = Word::reduce([Letter::new(gen, inverse)]);
        letters.extend_from_slice(base.times(power).letters());
        match cur.peek() {
            Some('g') | Some('-') | Some('+') => continue,
            _ => break,
        }
    }
    Ok(Word::reduce(letters))
}

fn element(cur: &mut Cursor<'_>, desc: &GroupDescriptor) -> std::result::Result<Element, ParseError> {
    use GroupDescriptor as D;
    let tuple = |cur: &mut Cursor<'_>, ds: &[&GroupDescriptor]| -> std::result::Result<Vec<Element>, ParseError> {
        cur.expect('(')?;
        let mut out = Vec::new();
        for (i, d) in ds.iter().enumerate() {
            if i > 0 {
                cur.expect(',')?;
            }
            out.push(element(cur, d)?);
        }
        cur.expect(')')?;
        Ok(out)
    };
    Ok(match desc {
        D::Int => Element::Int(cur.int()?),
        D::Rat => Element::Rat(cur.rat()?),
        D::Matrix => {
            if !cur.eat('M') {
                return cur.fail(&["'M'"]);
            }
            cur.expect('(')?;
            let a = cur.rat()?;
            cur.expect(',')?;
            let b = cur.rat()?;
            cur.expect(')')?;
            Element::Matrix(a, b)
        }
        D::Free { .. } => Element::Word(word(cur)?),
        D::AbFree { vals } => {
            if cur.peek() == Some('(') {
                let ints: Vec<&GroupDescriptor> = vec![&D::Int; vals.len()];
                Element::Tuple(tuple(cur, &ints)?)
            } else {
                let w = word(cur)?;
                if w.max_gen() as usize > vals.len() {
                    Element::Word(w)
                } else {
                    Element::Tuple(w.exponents(vals.len()).into_iter().map(Element::int).collect())
                }
            }
        }
        D::Prod { children, .. } => Element::Tuple(tuple(cur, &children.iter().collect::<Vec<_>>())?),
        D::Lex { first, second } => Element::Tuple(tuple(cur, &[first, second])?),
        D::Trivial { child } => element(cur, child)?,
    })
}

/// Parses an element literal for `desc` and checks its shape.
pub fn parse_element(desc: &GroupDescriptor, text: &str) -> Result<Element> {
    let mut cur = Cursor::new(text);
    let e = element(&mut cur, desc)?;
    cur.end()?;
    desc.check(&e)?;
    Ok(e)
}

pub fn is_parse_error(e: &Error) -> bool {
    matches!(e, Error::Parse(_))
}
