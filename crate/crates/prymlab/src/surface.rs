//! The one-relator presentation of a closed genus-`g` surface group and its
//! word problem.
//!
//! The relator is `a1 b1 A1 B1 a2 b2 A2 B2 ...` (a product of commutators,
//! length `4g`). For genus at least 2 this presentation satisfies the
//! small-cancellation condition that makes the greedy Dehn algorithm a
//! complete solution to the word problem: any nonempty cyclically reduced
//! word representing the identity contains more than half of some cyclic
//! rotation of the relator or its inverse.

use serde::Serialize;

use crate::automorphism::AutomorphismPair;
use crate::error::{Error, Result};
use crate::word::{generators, Family, Letter, Word};

/// Returns the standard relator `prod_i a_i b_i A_i B_i` of length `4g`.
pub fn surface_relator(genus: u32) -> Result<Word> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    let mut letters = Vec::with_capacity(4 * genus as usize);
    for i in 1..=genus {
        letters.push(Letter::new(Family::A, i, false));
        letters.push(Letter::new(Family::B, i, false));
        letters.push(Letter::new(Family::A, i, true));
        letters.push(Letter::new(Family::B, i, true));
    }
    Ok(Word::from_letters(letters))
}

/// A closed orientable surface group of genus at least 2.
#[derive(Clone, Debug)]
pub struct SurfaceGroup {
    genus: u32,
    relator: Word,
}

impl SurfaceGroup {
    pub fn new(genus: u32) -> Result<SurfaceGroup> {
        Ok(SurfaceGroup { genus, relator: surface_relator(genus)? })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    /// All cyclic rotations of the relator and of its inverse.
    fn relator_variants(&self) -> Vec<Vec<Letter>> {
        let len = self.relator.len();
        let mut variants = Vec::with_capacity(2 * len);
        for base in [self.relator.clone(), self.relator.inverse()] {
            for k in 0..len {
                variants.push(base.rotated(k).letters().to_vec());
            }
        }
        variants
    }

    /// Decides whether `w` represents the identity, by Dehn's algorithm:
    /// cyclically reduce, then greedily replace any cyclic subword that
    /// covers more than half of a relator rotation by the shorter
    /// complement, until the word is empty or no long subword remains.
    pub fn is_trivial(&self, w: &Word) -> bool {
        let variants = self.relator_variants();
        let rlen = self.relator.len();
        let half = 2 * self.genus as usize;
        let mut cur = w.cyclic_reduced();
        loop {
            if cur.is_empty() {
                return true;
            }
            let letters = cur.letters();
            let len = letters.len();
            let mut best: Option<(usize, usize, usize)> = None; // (match len, start, variant)
            for start in 0..len {
                for (vi, v) in variants.iter().enumerate() {
                    let cap = len.min(rlen);
                    let mut m = 0;
                    while m < cap && letters[(start + m) % len] == v[m] {
                        m += 1;
                    }
                    if best.map_or(true, |(bm, _, _)| m > bm) {
                        best = Some((m, start, vi));
                    }
                }
            }
            let (m, start, vi) = best.unwrap();
            if m <= half {
                return false;
            }
            // variant = matched * rest, so matched equals rest^-1 in the group
            let rest = Word::from_letters(variants[vi][m..].iter().copied());
            let rotated = cur.rotated(start);
            let tail = Word::from_letters(rotated.letters()[m..].iter().copied());
            cur = rest.inverse().concat(&tail).cyclic_reduced();
        }
    }

    /// Validates that `pair` defines an orientation-preserving automorphism:
    /// the forward map must send the relator to a conjugate of itself, and
    /// the backward map must invert the forward map on every generator.
    pub fn check_automorphism(&self, pair: &AutomorphismPair) -> Result<AutomorphismReport> {
        if pair.genus() != self.genus {
            return Err(Error::GenusMismatch(pair.genus(), self.genus));
        }
        let image = pair.forward().apply(&self.relator).cyclic_reduced();
        let relator_image = if matches_some_rotation(&image, &self.relator) {
            RelatorImage::Preserving
        } else if matches_some_rotation(&image, &self.relator.inverse()) {
            RelatorImage::Reversing
        } else {
            RelatorImage::NotConjugate
        };
        let mut inversion_failures = Vec::new();
        for x in generators(self.genus) {
            let round_trip = pair.backward().apply(&pair.forward().apply(&Word::single(x)));
            let probe = round_trip.concat(&Word::single(x.inverse()));
            if !self.is_trivial(&probe) {
                inversion_failures.push(x.token());
            }
        }
        Ok(AutomorphismReport { relator_image, inversion_failures })
    }
}

fn matches_some_rotation(candidate: &Word, target: &Word) -> bool {
    if candidate.len() != target.len() {
        return false;
    }
    (0..target.len().max(1)).any(|k| *candidate == target.rotated(k))
}

/// Outcome of the relator-preservation test.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelatorImage {
    /// Conjugate to the relator: orientation-preserving.
    Preserving,
    /// Conjugate to the inverse relator: orientation-reversing, rejected.
    Reversing,
    /// Not conjugate to either: not an automorphism of the surface group.
    NotConjugate,
}

/// Result of [`SurfaceGroup::check_automorphism`].
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismReport {
    pub relator_image: RelatorImage,
    /// Generators `x` for which `backward(forward(x)) != x` in the group.
    pub inversion_failures: Vec<String>,
}

impl AutomorphismReport {
    pub fn passed(&self) -> bool {
        self.relator_image == RelatorImage::Preserving && self.inversion_failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::GeneratorMap;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn relator_examples() {
        assert_eq!(surface_relator(2).unwrap(), w("a1 b1 A1 B1 a2 b2 A2 B2"));
        let r3 = surface_relator(3).unwrap();
        assert_eq!(r3.len(), 12);
        assert_eq!(r3.to_string(), "a1 b1 A1 B1 a2 b2 A2 B2 a3 b3 A3 B3");
        assert!(matches!(surface_relator(1), Err(Error::GenusTooSmall(1))));
    }

    #[test]
    fn relator_uses_each_generator_twice() {
        for genus in [2, 3, 5] {
            let r = surface_relator(genus).unwrap();
            assert_eq!(r.len(), 4 * genus as usize);
            for x in generators(genus) {
                let plain =
                    r.letters().iter().filter(|l| l.slot() == x.slot() && !l.inverted).count();
                let inverted =
                    r.letters().iter().filter(|l| l.slot() == x.slot() && l.inverted).count();
                assert_eq!((plain, inverted), (1, 1));
            }
        }
    }

    #[test]
    fn dehn_accepts_relator_and_conjugates() {
        let s = SurfaceGroup::new(2).unwrap();
        assert!(s.is_trivial(&Word::empty()));
        assert!(s.is_trivial(s.relator()));
        assert!(s.is_trivial(&s.relator().inverse()));
        let conj = s.relator().conjugated(&w("b2 A1 a2"));
        assert!(s.is_trivial(&conj));
        let double = conj.concat(&s.relator().inverse().conjugated(&w("a1 a1 b1")));
        assert!(s.is_trivial(&double));
    }

    #[test]
    fn dehn_rejects_nontrivial_words() {
        let s = SurfaceGroup::new(2).unwrap();
        assert!(!s.is_trivial(&w("a1")));
        assert!(!s.is_trivial(&w("a1 b1 A1 B1")));
        assert!(!s.is_trivial(&w("b2 b2")));
    }

    #[test]
    fn twist_pairs_check_out() {
        let s = SurfaceGroup::new(2).unwrap();
        for (family, index) in [(Family::A, 1), (Family::B, 1), (Family::A, 2), (Family::B, 2)] {
            let pair = AutomorphismPair::twist(2, family, index).unwrap();
            let report = s.check_automorphism(&pair).unwrap();
            assert!(report.passed(), "twist {family:?}{index} failed: {report:?}");
        }
        let id = AutomorphismPair::identity(2);
        assert!(s.check_automorphism(&id).unwrap().passed());
    }

    #[test]
    fn wrong_backward_is_reported() {
        // forward b1 -> b1 a1 but backward also b1 -> b1 a1: not an inverse.
        let genus = 2;
        let mut fw = Vec::new();
        let mut bw = Vec::new();
        for x in generators(genus) {
            let img = if x == Letter::positive(Family::B, 1) { w("b1 a1") } else { Word::single(x) };
            fw.push(img.clone());
            bw.push(img);
        }
        let pair = AutomorphismPair::new(
            GeneratorMap::new(genus, fw).unwrap(),
            GeneratorMap::new(genus, bw).unwrap(),
        )
        .unwrap();
        let report = SurfaceGroup::new(genus).unwrap().check_automorphism(&pair).unwrap();
        assert_eq!(report.relator_image, RelatorImage::Preserving);
        assert_eq!(report.inversion_failures, vec!["b1".to_string()]);
        assert!(!report.passed());
    }

    #[test]
    fn orientation_reversal_is_flagged() {
        // The involution a1 <-> b2, b1 <-> a2 sends the relator to its
        // exact inverse.
        let genus = 2;
        let images = vec![w("b2"), w("a2"), w("b1"), w("a1")];
        let map = GeneratorMap::new(genus, images).unwrap();
        let pair = AutomorphismPair::new(map.clone(), map).unwrap();
        let report = SurfaceGroup::new(genus).unwrap().check_automorphism(&pair).unwrap();
        assert_eq!(report.relator_image, RelatorImage::Reversing);
        assert!(report.inversion_failures.is_empty());
        assert!(!report.passed());
    }
}
