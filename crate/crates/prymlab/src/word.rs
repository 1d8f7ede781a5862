//! Freely reduced words over the standard surface-group generators.
//!
//! A genus-`g` surface group is generated by `a1, b1, ..., ag, bg`; inverses
//! are written with upper-case letters (`A1` is the inverse of `a1`). The
//! text grammar is whitespace-separated tokens matching `[abAB][1-9][0-9]*`,
//! and the empty string denotes the identity.
//!
//! The global generator order is `a1 < b1 < a2 < b2 < ... < A1 < B1 < ...`;
//! coset enumeration downstream relies on it for deterministic tie-breaking.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The two generator families of a handle: `a` curves and `b` curves.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    A,
    B,
}

impl Family {
    fn as_char(self, inverted: bool) -> char {
        match (self, inverted) {
            (Family::A, false) => 'a',
            (Family::B, false) => 'b',
            (Family::A, true) => 'A',
            (Family::B, true) => 'B',
        }
    }
}

/// One letter of a word: a generator or the inverse of a generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub family: Family,
    pub index: u32,
    pub inverted: bool,
}

impl Letter {
    pub fn new(family: Family, index: u32, inverted: bool) -> Letter {
        debug_assert!(index >= 1, "generator indices are 1-based");
        Letter { family, index, inverted }
    }

    /// The positive (non-inverted) generator of the given handle and family.
    pub fn positive(family: Family, index: u32) -> Letter {
        Letter::new(family, index, false)
    }

    pub fn inverse(self) -> Letter {
        Letter { inverted: !self.inverted, ..self }
    }

    /// Index into length-`2g` tables of positive generators:
    /// `a1 -> 0, b1 -> 1, a2 -> 2, ...` The inversion flag is ignored.
    pub fn slot(self) -> usize {
        (self.index as usize - 1) * 2
            + match self.family {
                Family::A => 0,
                Family::B => 1,
            }
    }

    pub fn token(self) -> String {
        format!("{}{}", self.family.as_char(self.inverted), self.index)
    }

    fn order_key(self) -> (bool, u32, Family) {
        (self.inverted, self.index, self.family)
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// The `2g` positive generators of genus `genus`, in global order.
pub fn generators(genus: u32) -> Vec<Letter> {
    let mut out = Vec::with_capacity(2 * genus as usize);
    for i in 1..=genus {
        out.push(Letter::positive(Family::A, i));
        out.push(Letter::positive(Family::B, i));
    }
    out
}

fn push_cancelling(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last() == Some(&letter.inverse()) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn single(letter: Letter) -> Word {
        Word { letters: vec![letter] }
    }

    /// Builds a word from raw letters, cancelling adjacent inverse pairs.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut buf = Vec::new();
        for l in letters {
            push_cancelling(&mut buf, l);
        }
        Word { letters: buf }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut buf = self.letters.clone();
        for &l in &other.letters {
            push_cancelling(&mut buf, l);
        }
        Word { letters: buf }
    }

    /// `by * self * by^-1`.
    pub fn conjugated(&self, by: &Word) -> Word {
        by.concat(self).concat(&by.inverse())
    }

    pub fn pow(&self, n: u32) -> Word {
        let mut out = Word::empty();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// Removes cancelling prefix/suffix pairs; the result generates the same
    /// conjugacy class.
    pub fn cyclic_reduced(&self) -> Word {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 && *letters.last().unwrap() == letters[0].inverse() {
            letters.pop();
            letters.remove(0);
        }
        Word { letters }
    }

    /// Rotation by `k`: moves the first `k` letters to the end. Only
    /// meaningful for cyclically reduced words, where the result stays
    /// reduced.
    pub fn rotated(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::empty();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word::from_letters(letters)
    }

    pub fn validate_genus(&self, genus: u32) -> Result<()> {
        for l in &self.letters {
            if l.index < 1 || l.index > genus {
                return Err(Error::IndexOutOfRange { index: l.index, genus });
            }
        }
        Ok(())
    }

    /// Exponent-sum vector in the `2g` positive generators.
    pub fn abelianization(&self, genus: u32) -> Vec<i64> {
        let mut v = vec![0i64; 2 * genus as usize];
        for l in &self.letters {
            debug_assert!(l.index <= genus);
            v[l.slot()] += if l.inverted { -1 } else { 1 };
        }
        v
    }
}

/// Reduces a raw symbol sequence after validating it against the genus.
pub fn free_reduce(letters: &[Letter], genus: u32) -> Result<Word> {
    for l in letters {
        if l.index < 1 || l.index > genus {
            return Err(Error::IndexOutOfRange { index: l.index, genus });
        }
    }
    Ok(Word::from_letters(letters.iter().copied()))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            letters.push(parse_token(token)?);
        }
        Ok(Word::from_letters(letters))
    }
}

fn parse_token(token: &str) -> Result<Letter> {
    let bad = || Error::BadToken(token.to_string());
    let mut chars = token.chars();
    let head = chars.next().ok_or_else(bad)?;
    let (family, inverted) = match head {
        'a' => (Family::A, false),
        'b' => (Family::B, false),
        'A' => (Family::A, true),
        'B' => (Family::B, true),
        _ => return Err(bad()),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return Err(bad());
    }
    let index: u32 = digits.parse().map_err(|_| bad())?;
    Ok(Letter::new(family, index, inverted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("a1 A1 b1"), w("b1"));
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("a1 b1 B1 A1 a2"), w("a2"));
    }

    #[test]
    fn reduce_validates_genus() {
        let letters = [Letter::positive(Family::A, 3)];
        assert!(matches!(
            free_reduce(&letters, 2),
            Err(Error::IndexOutOfRange { index: 3, genus: 2 })
        ));
        assert!(free_reduce(&letters, 3).is_ok());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("a1 b1").inverse(), w("B1 A1"));
        assert_eq!(Word::empty().inverse(), Word::empty());
        assert_eq!(w("A2").inverse(), w("a2"));
        let u = w("a1 B2 a1");
        assert_eq!(u.inverse().inverse(), u);
        assert!(u.concat(&u.inverse()).is_empty());
    }

    #[test]
    fn token_grammar_is_strict() {
        assert!("a0".parse::<Word>().is_err());
        assert!("a01".parse::<Word>().is_err());
        assert!("c1".parse::<Word>().is_err());
        assert!("a".parse::<Word>().is_err());
        assert!("a1x".parse::<Word>().is_err());
        assert_eq!(w("a12").letters()[0].index, 12);
    }

    #[test]
    fn display_round_trip() {
        let u = w("a1 B2 a1 a1");
        assert_eq!(u.to_string(), "a1 B2 a1 a1");
        assert_eq!(Word::empty().to_string(), "");
    }

    #[test]
    fn global_order() {
        let mut letters = vec![
            w("A1").letters()[0],
            w("b1").letters()[0],
            w("a2").letters()[0],
            w("a1").letters()[0],
            w("B1").letters()[0],
        ];
        letters.sort();
        let tokens: Vec<String> = letters.iter().map(|l| l.token()).collect();
        assert_eq!(tokens, ["a1", "b1", "a2", "A1", "B1"]);
    }

    #[test]
    fn cyclic_reduction_and_rotation() {
        assert_eq!(w("a1 b1 A1").cyclic_reduced(), w("b1"));
        assert_eq!(w("a1 b1 a2").rotated(1), w("b1 a2 a1"));
        assert_eq!(Word::empty().cyclic_reduced(), Word::empty());
    }

    #[test]
    fn abelianization_counts() {
        let v = w("a1 b1 A1 B1 a2 a2").abelianization(2);
        assert_eq!(v, vec![0, 0, 2, 0]);
    }
}
