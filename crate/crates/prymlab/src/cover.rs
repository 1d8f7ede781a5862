//! Finite regular covers, Schreier transversals, and kernel rewriting.
//!
//! A cover is encoded by a homomorphism from the surface group onto a finite
//! group given in its regular permutation action, so the kernel is normal by
//! construction and "fixes the base point" coincides with "acts trivially".
//! Cosets are the points `0..n`; the transversal comes from a breadth-first
//! spanning tree over the positive generators in global order, which makes
//! every table in this module reproducible across runs.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::automorphism::AutomorphismPair;
use crate::error::{Error, Result};
use crate::perm::{closure, Perm};
use crate::surface::surface_relator;
use crate::word::{generators, Letter, Word};

/// A surjection of the genus-`g` surface group onto a finite group in its
/// regular action on `0..degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteQuotient {
    genus: u32,
    degree: usize,
    images: Vec<Perm>,   // by Letter::slot()
    inverses: Vec<Perm>, // cached inverse permutations
}

impl FiniteQuotient {
    /// Validates and builds a quotient: the relator must map to the
    /// identity, the images must act transitively, and the generated group
    /// must have order exactly `degree` (regularity).
    pub fn build(genus: u32, degree: usize, images: Vec<Perm>) -> Result<FiniteQuotient> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        if degree == 0 {
            return Err(Error::ParameterRange("degree must be positive".into()));
        }
        let expected = 2 * genus as usize;
        if images.len() != expected {
            return Err(Error::WrongImageCount { expected, got: images.len() });
        }
        for p in &images {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: p.degree() });
            }
        }
        let inverses = images.iter().map(Perm::inverse).collect();
        let q = FiniteQuotient { genus, degree, images, inverses };
        if !q.permutation_of(&surface_relator(genus)?).is_identity() {
            return Err(Error::RelatorNotKilled);
        }
        if !q.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let order = closure(&q.images, degree)?.len();
        if order != degree {
            return Err(Error::NotRegular { order, degree });
        }
        Ok(q)
    }

    /// Degree-1 quotient: the cover is the surface itself.
    pub fn trivial(genus: u32) -> Result<FiniteQuotient> {
        let images = vec![Perm::identity(1); 2 * genus as usize];
        FiniteQuotient::build(genus, 1, images)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, slot: usize) -> &Perm {
        &self.images[slot]
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.degree];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for p in &self.images {
                let t = p.apply(c);
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    stack.push(t);
                }
            }
        }
        count == self.degree
    }

    pub fn act_letter(&self, point: usize, letter: Letter) -> usize {
        if letter.inverted {
            self.inverses[letter.slot()].apply(point)
        } else {
            self.images[letter.slot()].apply(point)
        }
    }

    /// Scans `w` left to right starting from `point`.
    pub fn act_word(&self, point: usize, w: &Word) -> usize {
        w.letters().iter().fold(point, |c, &l| self.act_letter(c, l))
    }

    /// The permutation of the full word.
    pub fn permutation_of(&self, w: &Word) -> Perm {
        let mut p = Perm::identity(self.degree);
        for &l in w.letters() {
            let next = if l.inverted { &self.inverses[l.slot()] } else { &self.images[l.slot()] };
            p = p.then(next);
        }
        p
    }

    pub fn in_kernel(&self, w: &Word) -> bool {
        self.permutation_of(w).is_identity()
    }

    /// All elements of the deck group, in deterministic closure order.
    pub fn deck_elements(&self) -> Vec<Perm> {
        closure(&self.images, self.degree).expect("validated quotient is closed at its degree")
    }
}

#[derive(Serialize, Deserialize)]
struct QuotientRepr {
    genus: u32,
    degree: usize,
    images: BTreeMap<String, Vec<usize>>,
}

impl Serialize for FiniteQuotient {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let images = generators(self.genus)
            .into_iter()
            .map(|x| (x.token(), self.images[x.slot()].images().to_vec()))
            .collect();
        QuotientRepr { genus: self.genus, degree: self.degree, images }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteQuotient {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = QuotientRepr::deserialize(deserializer)?;
        let gens = generators(repr.genus);
        if repr.images.len() != gens.len() {
            return Err(D::Error::custom(Error::WrongImageCount {
                expected: gens.len(),
                got: repr.images.len(),
            }));
        }
        let mut images = Vec::with_capacity(gens.len());
        for x in gens {
            let arr = repr
                .images
                .get(&x.token())
                .ok_or_else(|| D::Error::custom(format!("missing image for {}", x.token())))?;
            images.push(Perm::new(arr.clone()).map_err(D::Error::custom)?);
        }
        FiniteQuotient::build(repr.genus, repr.degree, images).map_err(D::Error::custom)
    }
}

/// One signed occurrence of a non-tree Schreier generator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedSymbol {
    pub index: usize,
    pub inverted: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum EntryKind {
    Tree,
    NonTree(usize),
}

#[derive(Clone, Debug)]
struct Entry {
    word: Word,
    target: usize,
    kind: EntryKind,
}

/// Schreier transversal and generator table for the kernel of a quotient.
#[derive(Clone, Debug)]
pub struct SchreierSystem {
    quotient: FiniteQuotient,
    transversal: Vec<Word>,
    table: Vec<Vec<Entry>>, // [coset][slot]
    nontree: Vec<(usize, usize)>,
}

/// Presentation of the kernel on its non-tree Schreier generators.
#[derive(Clone, Debug)]
pub struct KernelPresentation {
    pub generators: Vec<Word>,
    pub relators: Vec<Vec<SignedSymbol>>,
}

impl KernelPresentation {
    /// Exponent-sum rows of the relators in the non-tree generators.
    pub fn abelianized_rows(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for s in r {
                    row[s.index] += if s.inverted { -1 } else { 1 };
                }
                row
            })
            .collect()
    }
}

impl SchreierSystem {
    /// Breadth-first search from coset 0 over the positive generators in
    /// global order; ties broken by discovery order, which yields the
    /// shortest-lex transversal.
    pub fn build(quotient: FiniteQuotient) -> SchreierSystem {
        let n = quotient.degree();
        let slots = 2 * quotient.genus() as usize;
        let gens = generators(quotient.genus());
        let mut transversal: Vec<Option<Word>> = vec![None; n];
        transversal[0] = Some(Word::empty());
        let mut tree = vec![vec![false; slots]; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for (slot, &x) in gens.iter().enumerate() {
                let t = quotient.image(slot).apply(c);
                if transversal[t].is_none() {
                    let word = transversal[c].as_ref().unwrap().concat(&Word::single(x));
                    transversal[t] = Some(word);
                    tree[c][slot] = true;
                    queue.push_back(t);
                }
            }
        }
        let transversal: Vec<Word> = transversal.into_iter().map(Option::unwrap).collect();

        let mut table = Vec::with_capacity(n);
        let mut nontree = Vec::new();
        for c in 0..n {
            let mut row = Vec::with_capacity(slots);
            for (slot, &x) in gens.iter().enumerate() {
                let target = quotient.image(slot).apply(c);
                let word = transversal[c]
                    .concat(&Word::single(x))
                    .concat(&transversal[target].inverse());
                let kind = if tree[c][slot] {
                    debug_assert!(word.is_empty());
                    EntryKind::Tree
                } else {
                    nontree.push((c, slot));
                    EntryKind::NonTree(nontree.len() - 1)
                };
                row.push(Entry { word, target, kind });
            }
            table.push(row);
        }
        SchreierSystem { quotient, transversal, table, nontree }
    }

    pub fn quotient(&self) -> &FiniteQuotient {
        &self.quotient
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    pub fn nontree_count(&self) -> usize {
        self.nontree.len()
    }

    /// The kernel word of the `i`-th non-tree Schreier generator.
    pub fn nontree_word(&self, i: usize) -> &Word {
        let (c, slot) = self.nontree[i];
        &self.table[c][slot].word
    }

    /// The `(coset, generator slot)` pair of the `i`-th non-tree generator.
    pub fn nontree_edge(&self, i: usize) -> (usize, usize) {
        self.nontree[i]
    }

    /// The Schreier word `T(c) x T(c.x)^-1` for any coset and positive slot.
    pub fn schreier_word(&self, coset: usize, slot: usize) -> &Word {
        &self.table[coset][slot].word
    }

    pub fn is_tree_edge(&self, coset: usize, slot: usize) -> bool {
        self.table[coset][slot].kind == EntryKind::Tree
    }

    /// Rewrites a kernel word as a product of non-tree Schreier generators.
    /// Tree generators are freely trivial and omitted; the expansion of the
    /// emitted symbols freely equals `w`.
    pub fn rewrite_in_kernel(&self, w: &Word) -> Result<Vec<SignedSymbol>> {
        if !self.quotient.in_kernel(w) {
            return Err(Error::NotInKernel);
        }
        let mut out = Vec::new();
        let mut c = 0usize;
        for &l in w.letters() {
            let slot = l.slot();
            if !l.inverted {
                let entry = &self.table[c][slot];
                if let EntryKind::NonTree(i) = entry.kind {
                    out.push(SignedSymbol { index: i, inverted: false });
                }
                c = entry.target;
            } else {
                let source = self.quotient.inverses[slot].apply(c);
                let entry = &self.table[source][slot];
                if let EntryKind::NonTree(i) = entry.kind {
                    out.push(SignedSymbol { index: i, inverted: true });
                }
                c = source;
            }
        }
        debug_assert_eq!(c, 0);
        Ok(out)
    }

    /// Expands rewritten symbols back into a word of the ambient group.
    pub fn expand(&self, symbols: &[SignedSymbol]) -> Word {
        let mut out = Word::empty();
        for s in symbols {
            let w = self.nontree_word(s.index);
            out = if s.inverted { out.concat(&w.inverse()) } else { out.concat(w) };
        }
        out
    }

    /// Reidemeister-Schreier presentation of the kernel: one relator per
    /// coset, each the rewriting of the conjugated surface relator.
    pub fn kernel_presentation(&self) -> KernelPresentation {
        let relator = surface_relator(self.quotient.genus()).expect("validated genus");
        let generators = (0..self.nontree_count()).map(|i| self.nontree_word(i).clone()).collect();
        let relators = (0..self.quotient.degree())
            .map(|c| {
                let conj = relator.conjugated(&self.transversal[c]);
                self.rewrite_in_kernel(&conj).expect("conjugated relator lies in the kernel")
            })
            .collect();
        KernelPresentation { generators, relators }
    }
}

/// The images of the generators under `rho . phi^k`, computed without ever
/// expanding the words of `phi^k`: each step evaluates the forward images of
/// `phi` under the previous step's permutations.
fn power_images(q: &FiniteQuotient, phi: &AutomorphismPair, k: u32) -> Vec<Perm> {
    let slots = 2 * q.genus() as usize;
    let mut current: Vec<Perm> = q.images().to_vec();
    for _ in 0..k {
        current = (0..slots)
            .map(|s| eval_word(&current, phi.forward().image(s), q.degree()))
            .collect();
    }
    current
}

fn eval_word(images: &[Perm], w: &Word, degree: usize) -> Perm {
    let mut p = Perm::identity(degree);
    for &l in w.letters() {
        let g = &images[l.slot()];
        p = if l.inverted { p.then(&g.inverse()) } else { p.then(g) };
    }
    p
}

/// Tests whether the two generator-image families define the same kernel,
/// by propagating a deck-group bijection over the coset graph.
fn kernels_agree(q: &FiniteQuotient, other: &[Perm]) -> bool {
    let n = q.degree();
    let slots = other.len();
    let mut sigma: Vec<Option<usize>> = vec![None; n];
    sigma[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let sc = sigma[c].unwrap();
        for slot in 0..slots {
            let t = q.image(slot).apply(c);
            let st = other[slot].apply(sc);
            match sigma[t] {
                Some(existing) => {
                    if existing != st {
                        return false;
                    }
                }
                None => {
                    sigma[t] = Some(st);
                    queue.push_back(t);
                }
            }
        }
    }
    // transitivity guarantees every coset was reached; the propagated map
    // must additionally be a bijection
    let mut seen = vec![false; n];
    for s in sigma {
        match s {
            Some(v) if !seen[v] => seen[v] = true,
            _ => return false,
        }
    }
    true
}

/// True iff the kernel of `q` is invariant under `phi`.
pub fn is_invariant(q: &FiniteQuotient, phi: &AutomorphismPair) -> bool {
    is_invariant_power(q, phi, 1)
}

/// True iff the kernel of `q` is invariant under `phi^k`.
pub fn is_invariant_power(q: &FiniteQuotient, phi: &AutomorphismPair, k: u32) -> bool {
    kernels_agree(q, &power_images(q, phi, k))
}

/// The smallest `k` in `1..=cap` with the kernel `phi^k`-invariant. Such a
/// power always exists because the surface group has finitely many
/// subgroups of each index, but it may exceed the cap; that outcome is
/// reported as an error, not as nonexistence.
pub fn minimal_invariant_power(
    q: &FiniteQuotient,
    phi: &AutomorphismPair,
    cap: u32,
) -> Result<u32> {
    let slots = 2 * q.genus() as usize;
    let mut current: Vec<Perm> = q.images().to_vec();
    for k in 1..=cap {
        current =
            (0..slots).map(|s| eval_word(&current, phi.forward().image(s), q.degree())).collect();
        if kernels_agree(q, &current) {
            return Ok(k);
        }
    }
    Err(Error::CapExceeded(cap))
}

/// If the kernel of `fine` is contained in the kernel of `coarse`, returns
/// the collapse map of cosets; otherwise fails. Propagation over the coset
/// graph of `fine`, exactly as in the invariance test but without requiring
/// a bijection.
pub fn kernel_contained_in(fine: &FiniteQuotient, coarse: &FiniteQuotient) -> Result<Vec<usize>> {
    if fine.genus() != coarse.genus() {
        return Err(Error::GenusMismatch(fine.genus(), coarse.genus()));
    }
    let n = fine.degree();
    let slots = 2 * fine.genus() as usize;
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let mc = map[c].unwrap();
        for slot in 0..slots {
            let t = fine.image(slot).apply(c);
            let mt = coarse.image(slot).apply(mc);
            match map[t] {
                Some(existing) => {
                    if existing != mt {
                        return Err(Error::NotContained);
                    }
                }
                None => {
                    map[t] = Some(mt);
                    queue.push_back(t);
                }
            }
        }
    }
    Ok(map.into_iter().map(Option::unwrap).collect())
}
