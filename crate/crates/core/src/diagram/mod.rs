//! 1-morphisms as wire-diagram terms.
//!
//! A [`Diagram`] is read bottom to top: a source word followed by a sequence
//! of slices. Each slice is a single generator or an elementary braid,
//! whiskered on both sides by identity wires ("tensor first, then compose").
//! Tensor products of 1-morphisms are always stored in their nudged form: the
//! left factor below, the right factor above.

use std::fmt;

use thiserror::Error;

use crate::signature::{Gen1, Name, Word};

mod canonical;
mod equal;
mod moves;
pub mod perm;

pub use canonical::canonical_braids;
pub use equal::{equal, equal_with, reach_caps, reachable, EqualityConfig, MoveTrace, Verdict};
pub use moves::{moves, moves_within, swap_disjoint, Move, MoveKind, Side};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceBody {
    /// A 1-morphism generator. Its type is carried along so that diagrams are
    /// self-contained values.
    Gen { id: Name, dom: Word, cod: Word },
    /// Elementary braid `x ⊗ y -> y ⊗ x`.
    Braid(Name, Name),
}

impl SliceBody {
    pub fn gen(g: &Gen1) -> Self {
        SliceBody::Gen { id: g.id.clone(), dom: g.dom.clone(), cod: g.cod.clone() }
    }

    pub fn dom(&self) -> Word {
        match self {
            SliceBody::Gen { dom, .. } => dom.clone(),
            SliceBody::Braid(x, y) => Word::new(vec![x.clone(), y.clone()]),
        }
    }

    pub fn cod(&self) -> Word {
        match self {
            SliceBody::Gen { cod, .. } => cod.clone(),
            SliceBody::Braid(x, y) => Word::new(vec![y.clone(), x.clone()]),
        }
    }

    pub fn dom_len(&self) -> usize {
        match self {
            SliceBody::Gen { dom, .. } => dom.len(),
            SliceBody::Braid(..) => 2,
        }
    }

    pub fn cod_len(&self) -> usize {
        match self {
            SliceBody::Gen { cod, .. } => cod.len(),
            SliceBody::Braid(..) => 2,
        }
    }

    pub fn is_braid(&self) -> bool {
        matches!(self, SliceBody::Braid(..))
    }
}

impl fmt::Display for SliceBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceBody::Gen { id, .. } => f.write_str(id),
            SliceBody::Braid(x, y) => write!(f, "swap({x},{y})"),
        }
    }
}

impl fmt::Debug for SliceBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One tensor layer `id_left ⊗ body ⊗ id_right`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slice {
    pub left: Word,
    pub body: SliceBody,
    pub right: Word,
}

impl Slice {
    pub fn new(left: Word, body: SliceBody, right: Word) -> Self {
        Slice { left, body, right }
    }

    pub fn braid(left: Word, x: &Name, y: &Name, right: Word) -> Self {
        Slice { left, body: SliceBody::Braid(x.clone(), y.clone()), right }
    }

    pub fn dom(&self) -> Word {
        self.body.dom().surround(&self.left, &self.right)
    }

    pub fn cod(&self) -> Word {
        self.body.cod().surround(&self.left, &self.right)
    }

    /// Offset of the body within the slice's words.
    pub fn offset(&self) -> usize {
        self.left.len()
    }

    pub fn whiskered(&self, left: &Word, right: &Word) -> Slice {
        Slice { left: left.concat(&self.left), body: self.body.clone(), right: self.right.concat(right) }
    }
}

impl fmt::Debug for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}|{}]", self.left, self.body, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("endpoint mismatch: expected {expected}, found {found}")]
    EndpointMismatch { expected: Word, found: Word },
    #[error("slice {index} does not start where the previous one ends ({expected} vs {found})")]
    BrokenChain { index: usize, expected: Word, found: Word },
}

/// A 1-morphism term. The target is derived from the slices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    pub src: Word,
    slices: Vec<Slice>,
}

impl Diagram {
    pub fn identity(w: Word) -> Self {
        Diagram { src: w, slices: Vec::new() }
    }

    /// Builds a diagram, checking that consecutive slices chain.
    pub fn new(src: Word, slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let d = Diagram { src, slices };
        d.check()?;
        Ok(d)
    }

    /// Builds a diagram from a nonempty slice list, taking the source from the
    /// first slice.
    pub fn from_slices(slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let src = slices.first().map(|s| s.dom()).unwrap_or_default();
        Diagram::new(src, slices)
    }

    pub(crate) fn from_parts_unchecked(src: Word, slices: Vec<Slice>) -> Self {
        debug_assert!(Diagram { src: src.clone(), slices: slices.clone() }.check().is_ok());
        Diagram { src, slices }
    }

    /// The single-slice diagram.
    pub fn slice(s: Slice) -> Self {
        Diagram { src: s.dom(), slices: vec![s] }
    }

    /// A generator whiskered by nothing.
    pub fn generator(g: &Gen1) -> Self {
        Diagram::slice(Slice::new(Word::unit(), SliceBody::gen(g), Word::unit()))
    }

    pub fn check(&self) -> Result<(), DiagramError> {
        let mut cur = self.src.clone();
        for (index, s) in self.slices.iter().enumerate() {
            let dom = s.dom();
            if dom != cur {
                return Err(DiagramError::BrokenChain { index, expected: cur, found: dom });
            }
            cur = s.cod();
        }
        Ok(())
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn into_slices(self) -> Vec<Slice> {
        self.slices
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_identity(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn tgt(&self) -> Word {
        self.slices.last().map(|s| s.cod()).unwrap_or_else(|| self.src.clone())
    }

    /// Wire words at every height: `levels()[k]` is the word below slice `k`,
    /// the last entry is the target.
    pub fn levels(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        out.push(self.src.clone());
        for s in &self.slices {
            out.push(s.cod());
        }
        out
    }

    pub fn braid_count(&self) -> usize {
        self.slices.iter().filter(|s| s.body.is_braid()).count()
    }

    pub fn is_braid_only(&self) -> bool {
        self.slices.iter().all(|s| s.body.is_braid())
    }

    /// `d2 ∘ d1`: stack `d2` on top of `self`.
    pub fn compose(&self, d2: &Diagram) -> Result<Diagram, DiagramError> {
        compose(self, d2)
    }

    pub fn whisker(&self, left: &Word, right: &Word) -> Diagram {
        whisker(left, self, right)
    }

    /// Sub-diagram of slices `from..to`.
    pub fn section(&self, from: usize, to: usize) -> Diagram {
        let src = if from == 0 { self.src.clone() } else { self.slices[from - 1].cod() };
        Diagram { src, slices: self.slices[from..to].to_vec() }
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "id({})", self.src);
        }
        let mut first = true;
        for s in &self.slices {
            if !first {
                f.write_str(" ; ")?;
            }
            first = false;
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

/// Stacks `d2` above `d1`.
pub fn compose(d1: &Diagram, d2: &Diagram) -> Result<Diagram, DiagramError> {
    let t = d1.tgt();
    if t != d2.src {
        return Err(DiagramError::EndpointMismatch { expected: t, found: d2.src.clone() });
    }
    let mut slices = d1.slices.clone();
    slices.extend_from_slice(&d2.slices);
    Ok(Diagram { src: d1.src.clone(), slices })
}

/// `id_left ⊗ d ⊗ id_right`, slice by slice.
pub fn whisker(left: &Word, d: &Diagram, right: &Word) -> Diagram {
    Diagram {
        src: d.src.surround(left, right),
        slices: d.slices.iter().map(|s| s.whiskered(left, right)).collect(),
    }
}

/// `d1 ⊗ d2` in nudged form: `d1` acts first on the left, then `d2` on the
/// right.
pub fn tensor(d1: &Diagram, d2: &Diagram) -> Diagram {
    let lower = whisker(&Word::unit(), d1, &d2.src);
    let upper = whisker(&d1.tgt(), d2, &Word::unit());
    compose(&lower, &upper).expect("whiskered factors always chain")
}

/// The elementary decomposition of `β_{A,B}: A·B -> B·A`.
///
/// Splits off the first letter of `B` (`β_{A, bB'} = (id_b ⊗ β_{A,B'}) ∘
/// (β_{A,b} ⊗ id_{B'})`) and moves a single letter across `A` from right to
/// left (`β_{A'a, c} = (β_{A',c} ⊗ id_a) ∘ (id_{A'} ⊗ β_{a,c})`).
pub fn braid_word(a: &Word, b: &Word) -> Diagram {
    if a.is_empty() || b.is_empty() {
        return Diagram::identity(a.concat(b));
    }
    if b.len() == 1 {
        let c = &b.letters()[0];
        if a.len() == 1 {
            return Diagram::slice(Slice::braid(Word::unit(), &a.letters()[0], c, Word::unit()));
        }
        let (init, last) = (a.slice(0, a.len() - 1), a.slice(a.len() - 1, a.len()));
        let lower = whisker(&init, &braid_word(&last, b), &Word::unit());
        let upper = whisker(&Word::unit(), &braid_word(&init, b), &last);
        return compose(&lower, &upper).expect("braid pieces chain");
    }
    let (head, rest) = (b.slice(0, 1), b.slice(1, b.len()));
    let lower = whisker(&Word::unit(), &braid_word(a, &head), &rest);
    let upper = whisker(&head, &braid_word(a, &rest), &Word::unit());
    compose(&lower, &upper).expect("braid pieces chain")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[&str]) -> Word {
        Word::from_letters(s)
    }

    fn gen(id: &str, dom: &[&str], cod: &[&str]) -> Gen1 {
        Gen1 { id: id.into(), dom: w(dom), cod: w(cod) }
    }

    #[test]
    fn compose_units_and_stacking() {
        let f = Diagram::generator(&gen("f", &["a"], &["b"]));
        let g = Diagram::generator(&gen("g", &["b"], &["c"]));
        assert_eq!(compose(&Diagram::identity(w(&["a"])), &f).unwrap(), f);
        assert_eq!(compose(&f, &Diagram::identity(w(&["b"]))).unwrap(), f);
        let fg = compose(&f, &g).unwrap();
        assert_eq!(fg.len(), 2);
        assert_eq!(fg.src, w(&["a"]));
        assert_eq!(fg.tgt(), w(&["c"]));
        assert!(matches!(compose(&g, &f), Err(DiagramError::EndpointMismatch { .. })));
    }

    #[test]
    fn compose_is_associative() {
        let f = Diagram::generator(&gen("f", &["a"], &["b"]));
        let g = Diagram::generator(&gen("g", &["b"], &["c"]));
        let h = Diagram::generator(&gen("h", &["c"], &["a"]));
        let l = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let r = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn whisker_laws() {
        let f = Diagram::generator(&gen("f", &["a"], &["b"]));
        let g = Diagram::generator(&gen("g", &["b"], &["c"]));
        assert_eq!(whisker(&Word::unit(), &f, &Word::unit()), f);
        assert_eq!(whisker(&w(&["a"]), &Diagram::identity(w(&["b"])), &Word::unit()), Diagram::identity(w(&["a", "b"])));
        let fg = compose(&f, &g).unwrap();
        let (l, r) = (w(&["a"]), w(&["c"]));
        assert_eq!(
            whisker(&l, &fg, &r),
            compose(&whisker(&l, &f, &r), &whisker(&l, &g, &r)).unwrap()
        );
    }

    #[test]
    fn tensor_is_the_nudged_staircase() {
        let f = Diagram::generator(&gen("f", &["a"], &["a'"]));
        let g = Diagram::generator(&gen("g", &["b"], &["b'"]));
        let t = tensor(&f, &g);
        assert_eq!(
            t.slices(),
            &[
                Slice::new(w(&[]), SliceBody::gen(&gen("f", &["a"], &["a'"])), w(&["b"])),
                Slice::new(w(&["a'"]), SliceBody::gen(&gen("g", &["b"], &["b'"])), w(&[])),
            ]
        );
        assert_eq!(tensor(&Diagram::identity(w(&["x"])), &Diagram::identity(w(&["y"]))), Diagram::identity(w(&["x", "y"])));
        assert_eq!(tensor(&f, &Diagram::identity(Word::unit())), f);
        assert_eq!(tensor(&Diagram::identity(Word::unit()), &f), f);
    }

    #[test]
    fn braid_word_examples() {
        assert_eq!(braid_word(&w(&[]), &w(&["a", "b"])), Diagram::identity(w(&["a", "b"])));
        assert_eq!(braid_word(&w(&["a", "b"]), &w(&[])), Diagram::identity(w(&["a", "b"])));
        let ab = braid_word(&w(&["a"]), &w(&["b"]));
        assert_eq!(ab.slices(), &[Slice::braid(w(&[]), &"a".into(), &"b".into(), w(&[]))]);
        let abc = braid_word(&w(&["a", "b"]), &w(&["c"]));
        assert_eq!(
            abc.slices(),
            &[
                Slice::braid(w(&["a"]), &"b".into(), &"c".into(), w(&[])),
                Slice::braid(w(&[]), &"a".into(), &"c".into(), w(&["b"])),
            ]
        );
        let big = braid_word(&w(&["a", "b"]), &w(&["c", "d", "e"]));
        assert_eq!(big.len(), 6);
        assert_eq!(big.tgt(), w(&["c", "d", "e", "a", "b"]));
    }

    #[test]
    fn section_and_levels() {
        let f = Diagram::generator(&gen("f", &["a"], &["b"]));
        let g = Diagram::generator(&gen("g", &["b"], &["c"]));
        let fg = compose(&f, &g).unwrap();
        assert_eq!(fg.levels(), vec![w(&["a"]), w(&["b"]), w(&["c"])]);
        assert_eq!(fg.section(1, 2), g);
        assert_eq!(fg.section(1, 1), Diagram::identity(w(&["b"])));
    }

    #[test]
    fn broken_chain_is_rejected() {
        let s1 = Slice::new(w(&[]), SliceBody::gen(&gen("f", &["a"], &["b"])), w(&[]));
        let err = Diagram::new(w(&["b"]), vec![s1]).unwrap_err();
        assert!(matches!(err, DiagramError::BrokenChain { index: 0, .. }));
    }
}
