//! Surface-group endomorphisms given by generator images, and automorphisms
//! carried together with a stated inverse.
//!
//! An [`AutomorphismPair`] holds a forward and a backward generator map; the
//! library never inverts a map itself. Every pair produced here (twists,
//! inner automorphisms, compositions) carries its inverse by construction,
//! and [`crate::surface::SurfaceGroup::check_automorphism`] verifies a pair
//! supplied from outside.
//!
//! JSON form: `{"genus": g, "forward": {"a1": "word", ...}, "backward": {...}}`.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{generators, Family, Letter, Word};

/// A map from the `2g` generators to words; extends to an endomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorMap {
    genus: u32,
    images: Vec<Word>, // indexed by Letter::slot()
}

impl GeneratorMap {
    pub fn new(genus: u32, images: Vec<Word>) -> Result<GeneratorMap> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let expected = 2 * genus as usize;
        if images.len() != expected {
            return Err(Error::WrongImageCount { expected, got: images.len() });
        }
        for w in &images {
            w.validate_genus(genus)?;
        }
        Ok(GeneratorMap { genus, images })
    }

    pub fn identity(genus: u32) -> GeneratorMap {
        let images = generators(genus).into_iter().map(Word::single).collect();
        GeneratorMap { genus, images }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn image(&self, slot: usize) -> &Word {
        &self.images[slot]
    }

    /// Substitutes generator images (inverse images for inverted letters)
    /// and freely reduces.
    pub fn apply(&self, w: &Word) -> Word {
        let mut letters = Vec::with_capacity(w.len());
        for l in w.letters() {
            let image = &self.images[l.slot()];
            if l.inverted {
                letters.extend(image.letters().iter().rev().map(|m| m.inverse()));
            } else {
                letters.extend_from_slice(image.letters());
            }
        }
        Word::from_letters(letters)
    }

    pub fn apply_iterated(&self, w: &Word, k: u32) -> Word {
        let mut out = w.clone();
        for _ in 0..k {
            out = self.apply(&out);
        }
        out
    }
}

/// An automorphism `phi` bundled with a stated inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutomorphismPair {
    forward: GeneratorMap,
    backward: GeneratorMap,
}

impl AutomorphismPair {
    pub fn new(forward: GeneratorMap, backward: GeneratorMap) -> Result<AutomorphismPair> {
        if forward.genus() != backward.genus() {
            return Err(Error::GenusMismatch(forward.genus(), backward.genus()));
        }
        Ok(AutomorphismPair { forward, backward })
    }

    pub fn identity(genus: u32) -> AutomorphismPair {
        AutomorphismPair {
            forward: GeneratorMap::identity(genus),
            backward: GeneratorMap::identity(genus),
        }
    }

    /// The Dehn twist about the curve `a_i` or `b_i`.
    ///
    /// Twisting about `a_i` sends `b_i` to `b_i a_i`; twisting about `b_i`
    /// sends `a_i` to `a_i b_i`. All other generators are fixed, and the
    /// twisted curve's own word is fixed exactly.
    pub fn twist(genus: u32, family: Family, index: u32) -> Result<AutomorphismPair> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        if index < 1 || index > genus {
            return Err(Error::IndexOutOfRange { index, genus });
        }
        let curve = Letter::positive(family, index);
        let (moved, appended) = match family {
            Family::A => (Letter::positive(Family::B, index), curve),
            Family::B => (Letter::positive(Family::A, index), curve),
        };
        let mut forward = Vec::new();
        let mut backward = Vec::new();
        for x in generators(genus) {
            if x == moved {
                forward.push(Word::from_letters([x, appended]));
                backward.push(Word::from_letters([x, appended.inverse()]));
            } else {
                forward.push(Word::single(x));
                backward.push(Word::single(x));
            }
        }
        AutomorphismPair::new(
            GeneratorMap::new(genus, forward)?,
            GeneratorMap::new(genus, backward)?,
        )
    }

    /// Conjugation by `gamma`: `x -> gamma x gamma^-1`.
    pub fn inner(genus: u32, gamma: &Word) -> Result<AutomorphismPair> {
        gamma.validate_genus(genus)?;
        let inv = gamma.inverse();
        let forward: Vec<Word> =
            generators(genus).into_iter().map(|x| Word::single(x).conjugated(gamma)).collect();
        let backward: Vec<Word> =
            generators(genus).into_iter().map(|x| Word::single(x).conjugated(&inv)).collect();
        AutomorphismPair::new(
            GeneratorMap::new(genus, forward)?,
            GeneratorMap::new(genus, backward)?,
        )
    }

    /// Composition `self . other` (apply `other` first, then `self`).
    pub fn compose(&self, other: &AutomorphismPair) -> Result<AutomorphismPair> {
        if self.genus() != other.genus() {
            return Err(Error::GenusMismatch(self.genus(), other.genus()));
        }
        let genus = self.genus();
        let forward: Vec<Word> =
            (0..2 * genus as usize).map(|s| self.forward.apply(other.forward.image(s))).collect();
        let backward: Vec<Word> =
            (0..2 * genus as usize).map(|s| other.backward.apply(self.backward.image(s))).collect();
        AutomorphismPair::new(
            GeneratorMap::new(genus, forward)?,
            GeneratorMap::new(genus, backward)?,
        )
    }

    /// The inverse pair (forward and backward swapped).
    pub fn inverse(&self) -> AutomorphismPair {
        AutomorphismPair { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    pub fn genus(&self) -> u32 {
        self.forward.genus()
    }

    pub fn forward(&self) -> &GeneratorMap {
        &self.forward
    }

    pub fn backward(&self) -> &GeneratorMap {
        &self.backward
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.forward.apply(w)
    }

    /// Applies the forward map `k` times.
    pub fn apply_power(&self, w: &Word, k: u32) -> Word {
        self.forward.apply_iterated(w, k)
    }
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    genus: u32,
    forward: BTreeMap<String, String>,
    backward: BTreeMap<String, String>,
}

fn map_to_repr(map: &GeneratorMap) -> BTreeMap<String, String> {
    generators(map.genus())
        .into_iter()
        .map(|x| (x.token(), map.image(x.slot()).to_string()))
        .collect()
}

fn map_from_repr(genus: u32, repr: &BTreeMap<String, String>) -> Result<GeneratorMap> {
    let gens = generators(genus);
    if repr.len() != gens.len() {
        return Err(Error::WrongImageCount { expected: gens.len(), got: repr.len() });
    }
    let mut images = Vec::with_capacity(gens.len());
    for x in gens {
        let text = repr
            .get(&x.token())
            .ok_or_else(|| Error::InvalidInput(format!("missing image for {}", x.token())))?;
        images.push(text.parse::<Word>()?);
    }
    GeneratorMap::new(genus, images)
}

impl Serialize for AutomorphismPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PairRepr {
            genus: self.genus(),
            forward: map_to_repr(&self.forward),
            backward: map_to_repr(&self.backward),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AutomorphismPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PairRepr::deserialize(deserializer)?;
        let forward = map_from_repr(repr.genus, &repr.forward).map_err(D::Error::custom)?;
        let backward = map_from_repr(repr.genus, &repr.backward).map_err(D::Error::custom)?;
        AutomorphismPair::new(forward, backward).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::surface_relator;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn twist_a1() -> AutomorphismPair {
        AutomorphismPair::twist(2, Family::A, 1).unwrap()
    }

    #[test]
    fn twist_images_are_definitional() {
        let t = twist_a1();
        assert_eq!(t.apply(&w("b1")), w("b1 a1"));
        assert_eq!(t.apply(&w("a1")), w("a1"));
        let tb2 = AutomorphismPair::twist(2, Family::B, 2).unwrap();
        assert_eq!(tb2.apply(&w("a2")), w("a2 b2"));
        assert!(matches!(
            AutomorphismPair::twist(2, Family::A, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn apply_substitutes_and_reduces() {
        let t = twist_a1();
        assert_eq!(t.apply(&w("b1 b1")), w("b1 a1 b1 a1"));
        let relator = surface_relator(2).unwrap();
        assert_eq!(t.apply(&relator), relator);
        let id = AutomorphismPair::identity(2);
        assert_eq!(id.apply(&w("a1 B2 a2")), w("a1 B2 a2"));
    }

    #[test]
    fn twist_fixes_its_commutator() {
        // twist about a1 applied to the separating word [a1, b1]
        let t = twist_a1();
        assert_eq!(t.apply(&w("a1 b1 A1 B1")), w("a1 b1 A1 B1"));
    }

    #[test]
    fn compose_examples() {
        let t = twist_a1();
        let id = t.compose(&t.inverse()).unwrap();
        assert_eq!(id, AutomorphismPair::identity(2));

        let tt = t.compose(&t).unwrap();
        assert_eq!(tt.apply(&w("b1")), w("b1 a1 a1"));

        let tb1 = AutomorphismPair::twist(2, Family::B, 1).unwrap();
        let omega = t.compose(&tb1).unwrap().compose(&t).unwrap();
        // with both positive twist conventions a1 maps to a1 b1 a1
        assert_eq!(omega.apply(&w("a1")), w("a1 b1 a1"));
        assert!(matches!(
            t.compose(&AutomorphismPair::identity(3)),
            Err(Error::GenusMismatch(2, 3))
        ));
    }

    #[test]
    fn apply_power_matches_composition() {
        let t = twist_a1();
        let tt = t.compose(&t).unwrap();
        let u = w("b1 a2 B1");
        assert_eq!(t.apply_power(&u, 2), tt.apply(&u));
    }

    #[test]
    fn inner_automorphisms_conjugate() {
        let gamma = w("a1 b2");
        let inner = AutomorphismPair::inner(2, &gamma).unwrap();
        assert_eq!(inner.apply(&w("a2")), w("a1 b2 a2 B2 A1"));
        let round = inner.backward().apply(&inner.apply(&w("b1")));
        assert_eq!(round, w("b1"));
    }

    #[test]
    fn json_round_trip() {
        let t = twist_a1();
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.contains("\"b1\":\"b1 a1\""));
        let back: AutomorphismPair = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn json_rejects_bad_maps() {
        let text = r#"{"genus":2,"forward":{"a1":"a1"},"backward":{"a1":"a1"}}"#;
        assert!(serde_json::from_str::<AutomorphismPair>(text).is_err());
        let text = r#"{"genus":2,
            "forward":{"a1":"a3","b1":"b1","a2":"a2","b2":"b2"},
            "backward":{"a1":"a1","b1":"b1","a2":"a2","b2":"b2"}}"#;
        assert!(serde_json::from_str::<AutomorphismPair>(text).is_err());
    }
}
