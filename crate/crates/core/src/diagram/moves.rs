//! Elementary structural moves on diagrams.
//!
//! Every move relates two diagrams that are equal as 1-morphisms of any
//! stringent symmetric monoidal 2-category: braid cancellation and insertion,
//! naturality of the braiding (a slice sliding through a run of braids), and
//! transposition of a braid past a disjoint slice. Two generator slices are
//! never exchanged; that is an interchangor, not an equality.

use std::fmt;

use super::perm::{final_positions, lexmin_run, run_arrangement};
use super::{Diagram, Slice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Cancel,
    Insert,
    SlideUp,
    SlideDown,
    Transpose,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Cancel => "cancel",
            MoveKind::Insert => "insert",
            MoveKind::SlideUp => "slide-up",
            MoveKind::SlideDown => "slide-down",
            MoveKind::Transpose => "transpose",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Remove slices `at, at+1`, an elementary braid followed by its inverse.
    Cancel { at: usize },
    /// Insert `swap(x,y) ; swap(y,x)` on wires `wire, wire+1` of the level
    /// below slice `at`.
    Insert { at: usize, wire: usize },
    /// Move slice `at` above the `len` braid slices directly above it.
    SlideUp { at: usize, len: usize },
    /// Move slice `at` below the `len` braid slices directly below it.
    SlideDown { at: usize, len: usize },
    /// Exchange slices `at, at+1`, which are disjoint and not both generators.
    Transpose { at: usize },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::Cancel { .. } => MoveKind::Cancel,
            Move::Insert { .. } => MoveKind::Insert,
            Move::SlideUp { .. } => MoveKind::SlideUp,
            Move::SlideDown { .. } => MoveKind::SlideDown,
            Move::Transpose { .. } => MoveKind::Transpose,
        }
    }

    pub fn position(&self) -> usize {
        match *self {
            Move::Cancel { at }
            | Move::Insert { at, .. }
            | Move::SlideUp { at, .. }
            | Move::SlideDown { at, .. }
            | Move::Transpose { at } => at,
        }
    }

    /// The same move applied to a diagram with `off` extra slices below.
    pub fn shifted(&self, off: usize) -> Move {
        match *self {
            Move::Cancel { at } => Move::Cancel { at: at + off },
            Move::Insert { at, wire } => Move::Insert { at: at + off, wire },
            Move::SlideUp { at, len } => Move::SlideUp { at: at + off, len },
            Move::SlideDown { at, len } => Move::SlideDown { at: at + off, len },
            Move::Transpose { at } => Move::Transpose { at: at + off },
        }
    }

    /// The same move on a diagram whiskered by `left` extra wires.
    pub fn rewired(&self, left: usize) -> Move {
        match *self {
            Move::Insert { at, wire } => Move::Insert { at, wire: wire + left },
            m => m,
        }
    }

    /// Applies the move, or `None` if it does not fit.
    pub fn apply(&self, d: &Diagram) -> Option<Diagram> {
        let sl = d.slices();
        let slices = match *self {
            Move::Cancel { at } => {
                let (a, b) = (sl.get(at)?, sl.get(at + 1)?);
                if !is_inverse_pair(a, b) {
                    return None;
                }
                let mut v = sl[..at].to_vec();
                v.extend_from_slice(&sl[at + 2..]);
                v
            }
            Move::Insert { at, wire } => {
                if at > sl.len() {
                    return None;
                }
                let level = if at == 0 { d.src.clone() } else { sl[at - 1].cod() };
                if wire + 1 >= level.len() {
                    return None;
                }
                let l = level.letters();
                let (x, y) = (&l[wire], &l[wire + 1]);
                let left = level.slice(0, wire);
                let right = level.slice(wire + 2, level.len());
                let mut v = sl[..at].to_vec();
                v.push(Slice::braid(left.clone(), x, y, right.clone()));
                v.push(Slice::braid(left, y, x, right));
                v.extend_from_slice(&sl[at..]);
                v
            }
            Move::SlideUp { at, len } => slide_up(sl, at, len)?,
            Move::SlideDown { at, len } => slide_down(sl, at, len)?,
            Move::Transpose { at } => {
                let (a, b) = (sl.get(at)?, sl.get(at + 1)?);
                if !a.body.is_braid() && !b.body.is_braid() {
                    return None;
                }
                let (lo, hi) = swap_disjoint(a, b, Side::UpperLeft).or_else(|| swap_disjoint(a, b, Side::UpperRight))?;
                let mut v = sl.to_vec();
                v[at] = lo;
                v[at + 1] = hi;
                v
            }
        };
        Some(Diagram::from_parts_unchecked(d.src.clone(), slices))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Cancel { at } => write!(f, "cancel@{at}"),
            Move::Insert { at, wire } => write!(f, "insert@{at}/{wire}"),
            Move::SlideUp { at, len } => write!(f, "slide-up@{at}/{len}"),
            Move::SlideDown { at, len } => write!(f, "slide-down@{at}/{len}"),
            Move::Transpose { at } => write!(f, "transpose@{at}"),
        }
    }
}

fn is_inverse_pair(a: &Slice, b: &Slice) -> bool {
    use super::SliceBody::Braid;
    match (&a.body, &b.body) {
        (Braid(x, y), Braid(y2, x2)) => x == x2 && y == y2 && a.left.len() == b.left.len(),
        _ => false,
    }
}

/// Where the upper slice's body sits relative to the lower one's.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    UpperLeft,
    UpperRight,
}

/// Exchanges two stacked slices whose bodies touch disjoint wires of the
/// middle level, recomputing the whiskers. Returns the new (lower, upper)
/// pair; the new lower slice carries the old upper body.
pub fn swap_disjoint(lower: &Slice, upper: &Slice, side: Side) -> Option<(Slice, Slice)> {
    let (lp, lc, ld) = (lower.offset(), lower.body.cod_len(), lower.body.dom_len());
    let (up, ud) = (upper.offset(), upper.body.dom_len());
    let w0 = lower.dom();
    match side {
        Side::UpperLeft => {
            if up + ud > lp {
                return None;
            }
            let new_lower = Slice::new(w0.slice(0, up), upper.body.clone(), w0.slice(up + ud, w0.len()));
            let w1 = new_lower.cod();
            let p = lp + upper.body.cod_len() - ud;
            let new_upper = Slice::new(w1.slice(0, p), lower.body.clone(), w1.slice(p + ld, w1.len()));
            Some((new_lower, new_upper))
        }
        Side::UpperRight => {
            if lp + lc > up {
                return None;
            }
            let u0 = up + ld - lc;
            let new_lower = Slice::new(w0.slice(0, u0), upper.body.clone(), w0.slice(u0 + ud, w0.len()));
            let w1 = new_lower.cod();
            let new_upper = Slice::new(w1.slice(0, lp), lower.body.clone(), w1.slice(lp + ld, w1.len()));
            Some((new_lower, new_upper))
        }
    }
}

/// If `arr` carries the block `[p, p+w)` contiguously and in order, returns
/// where it starts at the far end.
fn block_image(arr_or_pos: &[usize], p: usize, w: usize) -> Option<usize> {
    if w == 0 {
        return None;
    }
    let q = arr_or_pos[p];
    (1..w).all(|j| arr_or_pos[p + j] == q + j).then_some(q)
}

/// Replaces the block of `w` strands starting at `at` by `w2` fresh strands,
/// renumbering the far end of an arrangement.
fn expand(arr: &[usize], block_start: usize, w: usize, w2: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(arr.len() + w2);
    for &s in arr {
        if s == block_start {
            out.extend(block_start..block_start + w2);
        } else if s > block_start && s < block_start + w {
            continue;
        } else if s >= block_start + w {
            out.push(s - w + w2);
        } else {
            out.push(s);
        }
    }
    out
}

fn slide_up(sl: &[Slice], at: usize, len: usize) -> Option<Vec<Slice>> {
    if len == 0 || at + len >= sl.len() {
        return None;
    }
    let carried = &sl[at];
    let run = &sl[at + 1..at + 1 + len];
    let mid = carried.cod();
    let arr = run_arrangement(mid.len(), run)?;
    let pos = final_positions(&arr);
    let (p, w) = (carried.offset(), carried.body.cod_len());
    let q = block_image(&pos, p, w)?;
    let w2 = carried.body.dom_len();
    if w2 == 0 {
        return None;
    }
    let below = carried.dom();
    let new_arr = expand(&arr, p, w, w2);
    let new_run = lexmin_run(&below, &new_arr);
    let top = new_run.last().map(|s| s.cod()).unwrap_or_else(|| below.clone());
    let new_carried = Slice::new(top.slice(0, q), carried.body.clone(), top.slice(q + w2, top.len()));
    let mut v = sl[..at].to_vec();
    v.extend(new_run);
    v.push(new_carried);
    v.extend_from_slice(&sl[at + 1 + len..]);
    Some(v)
}

fn slide_down(sl: &[Slice], at: usize, len: usize) -> Option<Vec<Slice>> {
    if len == 0 || at >= sl.len() || len > at {
        return None;
    }
    let carried = &sl[at];
    let run = &sl[at - len..at];
    let bottom = run[0].dom();
    let arr = run_arrangement(bottom.len(), run)?;
    let (p, w) = (carried.offset(), carried.body.dom_len());
    let q = block_image(&arr, p, w)?;
    let w2 = carried.body.cod_len();
    if w2 == 0 {
        return None;
    }
    let new_carried = Slice::new(bottom.slice(0, q), carried.body.clone(), bottom.slice(q + w, bottom.len()));
    let new_bottom = new_carried.cod();
    let new_arr = expand(&arr, q, w, w2);
    let new_run = lexmin_run(&new_bottom, &new_arr);
    let mut v = sl[..at - len].to_vec();
    v.push(new_carried);
    v.extend(new_run);
    v.extend_from_slice(&sl[at + 1..]);
    Some(v)
}

/// Every single move applicable to `d`, with its result.
pub fn moves(d: &Diagram) -> Vec<(Move, Diagram)> {
    moves_within(d, usize::MAX)
}

/// The moves of `d` whose result has at most `max_len` slices.
pub fn moves_within(d: &Diagram, max_len: usize) -> Vec<(Move, Diagram)> {
    let sl = d.slices();
    let n = sl.len();
    let mut cands = Vec::new();
    for at in 0..n.saturating_sub(1) {
        cands.push(Move::Cancel { at });
        cands.push(Move::Transpose { at });
    }
    if n + 2 <= max_len {
        for (at, level) in d.levels().iter().enumerate().take(n + 1) {
            for wire in 0..level.len().saturating_sub(1) {
                cands.push(Move::Insert { at, wire });
            }
        }
    }
    for at in 0..n {
        let up = sl[at + 1..].iter().take_while(|s| s.body.is_braid()).count();
        for len in 1..=up {
            cands.push(Move::SlideUp { at, len });
        }
        let down = sl[..at].iter().rev().take_while(|s| s.body.is_braid()).count();
        for len in 1..=down {
            cands.push(Move::SlideDown { at, len });
        }
    }
    cands.into_iter().filter_map(|m| m.apply(d).filter(|r| r.len() <= max_len).map(|r| (m, r))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_word, compose, tensor, whisker, SliceBody};
    use crate::signature::{Gen1, Word};

    fn w(s: &[&str]) -> Word {
        Word::from_letters(s)
    }

    fn gen(id: &str, dom: &[&str], cod: &[&str]) -> Diagram {
        Diagram::generator(&Gen1 { id: id.into(), dom: w(dom), cod: w(cod) })
    }

    #[test]
    fn cancel_and_insert_are_inverse() {
        let d = Diagram::identity(w(&["a", "b"]));
        let ins = Move::Insert { at: 0, wire: 0 }.apply(&d).unwrap();
        assert_eq!(ins.len(), 2);
        assert_eq!(Move::Cancel { at: 0 }.apply(&ins).unwrap(), d);
    }

    #[test]
    fn no_move_swaps_two_generators() {
        let f = gen("f", &["a"], &["a"]);
        let g = gen("g", &["b"], &["b"]);
        let d = tensor(&f, &g);
        assert!(moves(&d).iter().all(|(m, _)| m.kind() == MoveKind::Insert));
    }

    #[test]
    fn slide_through_single_braid_is_naturality() {
        let f = gen("f", &["a"], &["c"]);
        let d = compose(&whisker(&w(&[]), &f, &w(&["b"])), &braid_word(&w(&["c"]), &w(&["b"]))).unwrap();
        let slid = Move::SlideUp { at: 0, len: 1 }.apply(&d).unwrap();
        let expected = compose(&braid_word(&w(&["a"]), &w(&["b"])), &whisker(&w(&["b"]), &f, &w(&[]))).unwrap();
        assert_eq!(slid, expected);
        let back = Move::SlideDown { at: 1, len: 1 }.apply(&slid).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn slide_changes_run_width() {
        let f = gen("f", &["a"], &["c", "d"]);
        let d = compose(&whisker(&w(&[]), &f, &w(&["b"])), &braid_word(&w(&["c", "d"]), &w(&["b"]))).unwrap();
        let slid = Move::SlideUp { at: 0, len: 2 }.apply(&d).unwrap();
        assert_eq!(slid.len(), 2);
        assert!(slid.slices()[0].body.is_braid());
        assert_eq!(slid.tgt(), d.tgt());
        assert!(Move::SlideUp { at: 0, len: 1 }.apply(&d).is_none());
    }

    #[test]
    fn transpose_is_self_inverse() {
        let f = gen("f", &["a"], &["c"]);
        let d = compose(&whisker(&w(&[]), &f, &w(&["x", "y"])), &braid_word(&w(&["x"]), &w(&["y"])).whisker(&w(&["c"]), &w(&[]))).unwrap();
        let t = Move::Transpose { at: 0 }.apply(&d).unwrap();
        assert_ne!(t, d);
        assert_eq!(Move::Transpose { at: 0 }.apply(&t).unwrap(), d);
        assert!(matches!(t.slices()[0].body, SliceBody::Braid(..)));
    }

    #[test]
    fn every_move_preserves_endpoints() {
        let f = gen("f", &["a"], &["b", "c"]);
        let d = compose(&whisker(&w(&["x"]), &f, &w(&[])), &braid_word(&w(&["x"]), &w(&["b", "c"]))).unwrap();
        for (m, r) in moves(&d) {
            assert_eq!(r.src, d.src, "{m}");
            assert_eq!(r.tgt(), d.tgt(), "{m}");
            assert!(r.check().is_ok(), "{m}");
        }
    }
}
