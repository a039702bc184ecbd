//! A braid normal form: generators pushed up past braids, inverse pairs
//! cancelled, and each braid-only run rewritten as the lexicographically
//! minimal reduced word of its permutation.

use super::perm::{lexmin_run, run_arrangement};
use super::{Diagram, Move, Slice};

const MAX_ROUNDS: usize = 10_000;

/// Normal form for the braid part of `d`. Two diagrams with equal normal
/// forms are equal; the converse can fail when generators sit between runs.
pub fn canonical_braids(d: &Diagram) -> Diagram {
    let mut cur = d.clone();
    for _ in 0..MAX_ROUNDS {
        let next = resynthesize_runs(&slide_generators_up(&cancel_pairs(&cur)));
        if next == cur {
            return cur;
        }
        cur = next;
    }
    cur
}

fn cancel_pairs(d: &Diagram) -> Diagram {
    let mut cur = d.clone();
    'outer: loop {
        for at in 0..cur.len().saturating_sub(1) {
            if let Some(next) = (Move::Cancel { at }).apply(&cur) {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Moves the topmost movable generator through the longest braid run above it
/// that lets it pass, once.
fn slide_generators_up(d: &Diagram) -> Diagram {
    let sl = d.slices();
    for at in (0..sl.len()).rev() {
        if sl[at].body.is_braid() {
            continue;
        }
        let run = sl[at + 1..].iter().take_while(|s| s.body.is_braid()).count();
        for len in (1..=run).rev() {
            if let Some(next) = (Move::SlideUp { at, len }).apply(d) {
                return next;
            }
        }
    }
    d.clone()
}

fn resynthesize_runs(d: &Diagram) -> Diagram {
    let sl = d.slices();
    let mut out: Vec<Slice> = Vec::with_capacity(sl.len());
    let mut i = 0;
    while i < sl.len() {
        if !sl[i].body.is_braid() {
            out.push(sl[i].clone());
            i += 1;
            continue;
        }
        let j = i + sl[i..].iter().take_while(|s| s.body.is_braid()).count();
        let bottom = sl[i].dom();
        let arr = run_arrangement(bottom.len(), &sl[i..j]).expect("braid-only run");
        out.extend(lexmin_run(&bottom, &arr));
        i = j;
    }
    Diagram::from_parts_unchecked(d.src.clone(), out)
}
