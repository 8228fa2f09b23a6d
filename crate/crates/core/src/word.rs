use std::fmt;

use serde::{Deserialize, Serialize};

/// One letter of a free-group word: `g_gen` or its inverse. Generators are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: u32, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Position in the fixed letter order g1 < -g1 < g2 < -g2 < ...
    pub fn rank(self) -> u32 {
        2 * (self.gen - 1) + self.inverse as u32
    }
}

/// A reduced word. The constructor is the only way in, so no value ever
/// holds an adjacent cancelling pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: u32) -> Self {
        Word(vec![Letter::new(i, false)])
    }

    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// `n` copies of the word (negative `n` uses the inverse).
    pub fn times(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn max_gen(&self) -> u32 {
        self.0.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    /// Exponent sum per generator, indices 1..=k.
    pub fn exponents(&self, k: usize) -> Vec<i64> {
        let mut e = vec![0; k];
        for l in &self.0 {
            e[l.gen as usize - 1] += l.sign();
        }
        e
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}g{}", if l.inverse { "-" } else { "" }, l.gen)?;
        }
        Ok(())
    }
}

/// Every reduced word of length at most `max_len` over `k` generators, each
/// once, ordered by length and then by letter rank.
pub fn enumerate_reduced_words(k: u32, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (1..=k).flat_map(|g| [Letter::new(g, false), Letter::new(g, true)]).collect();
    let mut all = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.0.last() == Some(&l.inv()) {
                    continue;
                }
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Closed form for the number of words `enumerate_reduced_words` yields.
pub fn reduced_word_count(k: u64, max_len: u32) -> u64 {
    let mut total = 1;
    for l in 1..=max_len {
        total += 2 * k * (2 * k - 1).pow(l - 1);
    }
    total
}
