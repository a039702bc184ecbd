//! 2-morphisms as replayable scripts of cells acting on diagrams.

use std::fmt;

use thiserror::Error;

use crate::diagram::{braid_word, compose, swap_disjoint, tensor, Diagram, Move, Side, Slice, SliceBody};
use crate::signature::{Gen2, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    /// An on-the-nose move; an identity 2-morphism.
    StructMove(Move),
    /// The interchangor between slices `at` (g, on the right) and `at+1`
    /// (f, on the left). `back` applies its inverse from the swapped shape.
    Interchange { at: usize, back: bool },
    /// A generator 2-cell, whiskered by `left`/`right` wires, replacing the
    /// slices of its source starting at `at`.
    GenCell { gen: Gen2, at: usize, left: Word, right: Word, back: bool },
}

impl Cell {
    pub fn is_structural(&self) -> bool {
        matches!(self, Cell::StructMove(_))
    }

    /// The same cell on a diagram with `off` extra slices below.
    pub fn shifted(&self, off: usize) -> Cell {
        match self {
            Cell::StructMove(m) => Cell::StructMove(m.shifted(off)),
            Cell::Interchange { at, back } => Cell::Interchange { at: at + off, back: *back },
            Cell::GenCell { gen, at, left, right, back } => {
                Cell::GenCell { gen: gen.clone(), at: at + off, left: left.clone(), right: right.clone(), back: *back }
            }
        }
    }

    /// The same cell with identity wires `l` and `r` added on either side.
    pub fn widened(&self, l: &Word, r: &Word) -> Cell {
        match self {
            Cell::StructMove(m) => Cell::StructMove(m.rewired(l.len())),
            Cell::Interchange { .. } => self.clone(),
            Cell::GenCell { gen, at, left, right, back } => {
                Cell::GenCell { gen: gen.clone(), at: *at, left: l.concat(left), right: right.concat(r), back: *back }
            }
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::StructMove(m) => write!(f, "move:{m}"),
            Cell::Interchange { at, back } => {
                write!(f, "interchange@{at}")?;
                if *back {
                    f.write_str(" back")?;
                }
                Ok(())
            }
            Cell::GenCell { gen, at, left, right, back } => {
                write!(f, "gen2:{}@{at} l={left} r={right}", gen.id)?;
                if *back {
                    f.write_str(" back")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TwoCellError {
    #[error("cell {index} does not apply: {reason}")]
    CellMisapplied { index: usize, reason: String },
    #[error("endpoint mismatch: expected {expected:?}, found {found:?}")]
    EndpointMismatch { expected: Diagram, found: Diagram },
    #[error("not a composable configuration: {0}")]
    NotComposable(String),
    #[error("{0:?} is not an endomorphism of the unit object")]
    NotUnitEndomorphism(Diagram),
}

/// Where an interchangor acts: `id_left ⊗ φ_{f, id_gap ⊗ g} ⊗ id_right`.
/// For a forward cell `f` is the upper slice's body; for a backward one it is
/// the lower slice's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterchangeSite {
    pub left: Word,
    pub f: SliceBody,
    pub gap: Word,
    pub g: SliceBody,
    pub right: Word,
}

/// Locates the interchangor at slices `at, at+1` and returns the site and the
/// swapped slice pair.
pub fn interchange_site(d: &Diagram, at: usize, back: bool) -> Result<(InterchangeSite, Slice, Slice), String> {
    let sl = d.slices();
    let (lower, upper) = match (sl.get(at), sl.get(at + 1)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(format!("no slices at {at} and {}", at + 1)),
    };
    if lower.body.is_braid() || upper.body.is_braid() {
        return Err("interchange of a braid slice is a structural move".into());
    }
    let mid = lower.cod();
    if !back {
        let (new_lower, new_upper) =
            swap_disjoint(lower, upper, Side::UpperLeft).ok_or("upper slice is not strictly left of the lower one")?;
        let fend = upper.offset() + upper.body.dom_len();
        let site = InterchangeSite {
            left: upper.left.clone(),
            f: upper.body.clone(),
            gap: mid.slice(fend, lower.offset()),
            g: lower.body.clone(),
            right: lower.right.clone(),
        };
        Ok((site, new_lower, new_upper))
    } else {
        let (new_lower, new_upper) =
            swap_disjoint(lower, upper, Side::UpperRight).ok_or("lower slice is not strictly left of the upper one")?;
        let fend = lower.offset() + lower.body.cod_len();
        let site = InterchangeSite {
            left: lower.left.clone(),
            f: lower.body.clone(),
            gap: mid.slice(fend, upper.offset()),
            g: upper.body.clone(),
            right: upper.right.clone(),
        };
        Ok((site, new_lower, new_upper))
    }
}

/// Applies one cell to a diagram.
pub fn apply_cell(d: &Diagram, cell: &Cell) -> Result<Diagram, String> {
    match cell {
        Cell::StructMove(m) => m.apply(d).ok_or_else(|| format!("move {m} does not fit")),
        Cell::Interchange { at, back } => {
            let (_, lo, hi) = interchange_site(d, *at, *back)?;
            let mut v = d.slices().to_vec();
            v[*at] = lo;
            v[*at + 1] = hi;
            Diagram::new(d.src.clone(), v).map_err(|e| e.to_string())
        }
        Cell::GenCell { gen, at, left, right, back } => {
            if *back && !gen.invertible {
                return Err(format!("2-cell `{}` is not invertible", gen.id));
            }
            let (from, to) = if *back { (&gen.tgt, &gen.src) } else { (&gen.src, &gen.tgt) };
            let from = from.whisker(left, right);
            let to = to.whisker(left, right);
            let levels = d.levels();
            let n = from.len();
            if *at + n > d.len() || levels[*at] != from.src || d.slices()[*at..*at + n] != *from.slices() {
                return Err(format!("no occurrence of `{}` at {at}", gen.id));
            }
            let mut v = d.slices()[..*at].to_vec();
            v.extend_from_slice(to.slices());
            v.extend_from_slice(&d.slices()[*at + n..]);
            Diagram::new(d.src.clone(), v).map_err(|e| e.to_string())
        }
    }
}

/// A 2-morphism `src ⇒ replay()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub src: Diagram,
    pub cells: Vec<Cell>,
}

impl Script {
    pub fn identity(d: Diagram) -> Self {
        Script { src: d, cells: Vec::new() }
    }

    pub fn new(src: Diagram, cells: Vec<Cell>) -> Self {
        Script { src, cells }
    }

    /// Every intermediate diagram, starting with `src`.
    pub fn trajectory(&self) -> Result<Vec<Diagram>, TwoCellError> {
        let mut out = vec![self.src.clone()];
        for (index, c) in self.cells.iter().enumerate() {
            let next = apply_cell(out.last().unwrap(), c).map_err(|reason| TwoCellError::CellMisapplied { index, reason })?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn replay(&self) -> Result<Diagram, TwoCellError> {
        Ok(self.trajectory()?.pop().unwrap())
    }

    /// No interchangors and no generator cells.
    pub fn is_structural(&self) -> bool {
        self.cells.iter().all(Cell::is_structural)
    }

    pub fn interchange_count(&self) -> usize {
        self.cells.iter().filter(|c| matches!(c, Cell::Interchange { .. })).count()
    }

    pub fn push(&mut self, c: Cell) {
        self.cells.push(c);
    }

    /// The script acting on `compose(below, src)`.
    pub fn whisker_below(&self, below: &Diagram) -> Result<Script, TwoCellError> {
        let src = compose(below, &self.src).map_err(|e| TwoCellError::NotComposable(e.to_string()))?;
        Ok(Script { src, cells: self.cells.iter().map(|c| c.shifted(below.len())).collect() })
    }

    /// The script acting on `compose(src, above)`.
    pub fn whisker_above(&self, above: &Diagram) -> Result<Script, TwoCellError> {
        let src = compose(&self.src, above).map_err(|e| TwoCellError::NotComposable(e.to_string()))?;
        Ok(Script { src, cells: self.cells.clone() })
    }

    /// `id_l ⊗ s ⊗ id_r`.
    pub fn widen(&self, l: &Word, r: &Word) -> Script {
        Script { src: self.src.whisker(l, r), cells: self.cells.iter().map(|c| c.widened(l, r)).collect() }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "from {:?}", self.src)?;
        for (i, c) in self.cells.iter().enumerate() {
            f.write_str(if i == 0 { " do " } else { ", " })?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `s2 ∘ s1`.
pub fn vcompose(s1: &Script, s2: &Script) -> Result<Script, TwoCellError> {
    let t = s1.replay()?;
    if t != s2.src {
        return Err(TwoCellError::EndpointMismatch { expected: t, found: s2.src.clone() });
    }
    let mut cells = s1.cells.clone();
    cells.extend(s2.cells.iter().cloned());
    Ok(Script { src: s1.src.clone(), cells })
}

fn stacked_source(alpha: &Script, beta: &Script) -> Result<Diagram, TwoCellError> {
    compose(&alpha.src, &beta.src).map_err(|_| TwoCellError::EndpointMismatch {
        expected: Diagram::identity(alpha.src.tgt()),
        found: Diagram::identity(beta.src.src.clone()),
    })
}

/// `β ∗ α = (β ∗ id) ∘ (id ∗ α)`: alpha on the lower part first, then beta on
/// the upper part.
pub fn hcompose(alpha: &Script, beta: &Script) -> Result<Script, TwoCellError> {
    let src = stacked_source(alpha, beta)?;
    let g1 = alpha.replay()?;
    beta.replay()?;
    let mut cells = alpha.cells.clone();
    cells.extend(beta.cells.iter().map(|c| c.shifted(g1.len())));
    Ok(Script { src, cells })
}

/// `β ∗ α = (id ∗ α) ∘ (β ∗ id)`: beta on the upper part first.
pub fn hcompose_beta_first(alpha: &Script, beta: &Script) -> Result<Script, TwoCellError> {
    let src = stacked_source(alpha, beta)?;
    alpha.replay()?;
    beta.replay()?;
    let mut cells: Vec<Cell> = beta.cells.iter().map(|c| c.shifted(alpha.src.len())).collect();
    cells.extend(alpha.cells.iter().cloned());
    Ok(Script { src, cells })
}

/// Exchanges the two slices at `at`, `at+1` of `d`, using an interchangor
/// when both are generators and a transposition otherwise.
fn swap_step(d: &Diagram, at: usize, back: bool) -> Result<(Cell, Diagram), TwoCellError> {
    let sl = d.slices();
    let cell = if sl[at].body.is_braid() || sl[at + 1].body.is_braid() {
        Cell::StructMove(Move::Transpose { at })
    } else {
        Cell::Interchange { at, back }
    };
    let next = apply_cell(d, &cell).map_err(|reason| TwoCellError::CellMisapplied { index: at, reason })?;
    Ok((cell, next))
}

/// Moves the block of slices `lo..mid` above the block `mid..hi`, one slice at
/// a time, topmost first.
fn exchange_blocks(
    d: &Diagram,
    lo: usize,
    mid: usize,
    hi: usize,
    back: bool,
    cells: &mut Vec<Cell>,
) -> Result<Diagram, TwoCellError> {
    let mut cur = d.clone();
    let upper = hi - mid;
    for k in (lo..mid).rev() {
        for step in 0..upper {
            let (c, next) = swap_step(&cur, k + step, back)?;
            cells.push(c);
            cur = next;
        }
    }
    Ok(cur)
}

/// `Φ_{(f′,g′),(f,g)}: (f′ ⊗ g′) ∘ (f ⊗ g) ⇒ (f′f) ⊗ (g′g)`, moving the `g`
/// layer up past the `f′` layer.
pub fn build_phi(fp: &Diagram, gp: &Diagram, f: &Diagram, g: &Diagram) -> Result<Script, TwoCellError> {
    if f.tgt() != fp.src || g.tgt() != gp.src {
        return Err(TwoCellError::NotComposable("f′ must follow f and g′ must follow g".into()));
    }
    let src = compose(&tensor(f, g), &tensor(fp, gp)).expect("tensors of composable pairs chain");
    let lo = f.len();
    let mid = lo + g.len();
    let hi = mid + fp.len();
    let mut cells = Vec::new();
    let end = exchange_blocks(&src, lo, mid, hi, false, &mut cells)?;
    debug_assert_eq!(end, tensor(&compose(f, fp).unwrap(), &compose(g, gp).unwrap()));
    Ok(Script { src, cells })
}

/// `β_{f,g}: (g ⊗ f) ∘ β_{A,B} ⇒ β_{A′,B′} ∘ (f ⊗ g)`.
pub fn build_beta_fg(f: &Diagram, g: &Diagram) -> Result<Script, TwoCellError> {
    let (a, b) = (f.src.clone(), g.src.clone());
    let run = braid_word(&a, &b);
    let src = compose(&run, &tensor(g, f)).expect("braid target is the tensor source");
    let mut cells = Vec::new();
    let r0 = run.len();
    let mut cur = exchange_blocks(&src, r0, r0 + g.len(), r0 + g.len() + f.len(), true, &mut cells)?;

    let mut run_len = r0;
    let mut placed = 0;
    for _ in 0..f.len() + g.len() {
        let at = placed + run_len;
        if run_len > 0 {
            let m = Move::SlideDown { at, len: run_len };
            cur = m.apply(&cur).ok_or_else(|| TwoCellError::CellMisapplied {
                index: cells.len(),
                reason: format!("slice {at} cannot slide through the braid run"),
            })?;
            cells.push(Cell::StructMove(m));
            run_len = cur.slices()[placed + 1..].iter().take_while(|s| s.body.is_braid()).count();
        }
        placed += 1;
    }
    let expected = compose(&tensor(f, g), &braid_word(&f.tgt(), &g.tgt())).expect("chains");
    if cur != expected {
        return Err(TwoCellError::EndpointMismatch { expected, found: cur });
    }
    Ok(Script { src, cells })
}

/// The braiding `σ_{A,B}: A ⊗ B ⇒ B ⊗ A` of unit endomorphisms, built from
/// the interchangor `φ_{B,A}`.
pub fn deloop_sigma(a: &Diagram, b: &Diagram) -> Result<Script, TwoCellError> {
    for d in [a, b] {
        if !d.src.is_empty() || !d.tgt().is_empty() {
            return Err(TwoCellError::NotUnitEndomorphism(d.clone()));
        }
    }
    let src = tensor(a, b);
    let mut cells = Vec::new();
    let end = exchange_blocks(&src, 0, a.len(), a.len() + b.len(), false, &mut cells)?;
    debug_assert_eq!(end, tensor(b, a));
    Ok(Script { src, cells })
}
