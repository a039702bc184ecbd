//! Equality of diagrams modulo the structural moves, by bounded search.

use std::collections::VecDeque;
use std::fmt;

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};

use super::{moves_within, Diagram, Move};

/// Search bounds. Intermediate diagrams may have at most
/// `max(|d1|, |d2|) + extra_slices` slices; at most `max_states` distinct
/// diagrams are visited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EqualityConfig {
    pub extra_slices: usize,
    pub max_states: usize,
}

impl Default for EqualityConfig {
    fn default() -> Self {
        EqualityConfig { extra_slices: 4, max_states: 100_000 }
    }
}

/// A sequence of moves, applied in order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveTrace(pub Vec<Move>);

impl MoveTrace {
    pub fn replay(&self, d: &Diagram) -> Option<Diagram> {
        let mut cur = d.clone();
        for m in &self.0 {
            cur = m.apply(&cur)?;
        }
        Some(cur)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal(MoveTrace),
    /// The bounded space was exhausted without meeting the target.
    NotEqual,
    /// The state budget ran out first.
    Unknown { explored: usize },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal(_))
    }
}

pub fn equal(d1: &Diagram, d2: &Diagram) -> Verdict {
    equal_with(d1, d2, &EqualityConfig::default())
}

pub fn equal_with(d1: &Diagram, d2: &Diagram, cfg: &EqualityConfig) -> Verdict {
    if d1.src != d2.src || d1.tgt() != d2.tgt() {
        return Verdict::NotEqual;
    }
    if d1 == d2 {
        return Verdict::Equal(MoveTrace::default());
    }
    let cap = d1.len().max(d2.len()) + cfg.extra_slices;
    let mut index: HashMap<Diagram, usize> = HashMap::default();
    let mut nodes: Vec<(Diagram, Option<(usize, Move)>)> = vec![(d1.clone(), None)];
    index.insert(d1.clone(), 0);
    let mut next_node = 0;
    while next_node < nodes.len() {
        let cur = next_node;
        next_node += 1;
        for (m, next) in moves_within(&nodes[cur].0, cap) {
            if index.contains_key(&next) {
                continue;
            }
            if index.len() >= cfg.max_states {
                return Verdict::Unknown { explored: index.len() };
            }
            let done = next == *d2;
            index.insert(next.clone(), nodes.len());
            nodes.push((next, Some((cur, m))));
            if done {
                return Verdict::Equal(trace_to(&nodes, nodes.len() - 1));
            }
        }
    }
    Verdict::NotEqual
}

fn trace_to(nodes: &[(Diagram, Option<(usize, Move)>)], end: usize) -> MoveTrace {
    let mut out = Vec::new();
    let mut cur = end;
    while let Some((prev, m)) = nodes[cur].1 {
        out.push(m);
        cur = prev;
    }
    out.reverse();
    MoveTrace(out)
}

/// Every diagram reachable from `d` within `max_len` slices, or `None` if
/// more than `max_states` are found.
pub fn reachable(d: &Diagram, max_len: usize, max_states: usize) -> Option<Vec<Diagram>> {
    let mut seen: HashSet<Diagram> = HashSet::default();
    seen.insert(d.clone());
    let mut queue = VecDeque::from([d.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (_, next) in moves_within(&cur, max_len) {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= max_states {
                return None;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Some(seen.into_iter().collect())
}

/// For every diagram reachable from `d` through diagrams of at most
/// `max_len` slices, the least slice bound under which it is still reachable.
/// `None` if more than `max_states` diagrams are found.
pub fn reach_caps(d: &Diagram, max_len: usize, max_states: usize) -> Option<HashMap<Diagram, usize>> {
    let mut best: HashMap<Diagram, usize> = HashMap::default();
    if d.len() > max_len {
        return Some(best);
    }
    best.insert(d.clone(), d.len());
    let mut buckets: Vec<VecDeque<Diagram>> = vec![VecDeque::new(); max_len + 1];
    buckets[d.len()].push_back(d.clone());
    for c in d.len()..=max_len {
        while let Some(cur) = buckets[c].pop_front() {
            if best[&cur] < c {
                continue;
            }
            for (_, next) in moves_within(&cur, max_len) {
                let nc = c.max(next.len());
                match best.get(&next) {
                    Some(&b) if b <= nc => continue,
                    Some(_) => {}
                    None if best.len() >= max_states => return None,
                    None => {}
                }
                best.insert(next.clone(), nc);
                buckets[nc].push_back(next);
            }
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_word, compose, tensor, whisker};
    use crate::signature::{Gen1, Word};

    fn w(s: &[&str]) -> Word {
        Word::from_letters(s)
    }

    fn gen(id: &str, dom: &[&str], cod: &[&str]) -> Diagram {
        Diagram::generator(&Gen1 { id: id.into(), dom: w(dom), cod: w(cod) })
    }

    #[test]
    fn braid_twice_is_identity() {
        let b = braid_word(&w(&["a"]), &w(&["b"]));
        let bb = compose(&b, &braid_word(&w(&["b"]), &w(&["a"]))).unwrap();
        let v = equal(&bb, &Diagram::identity(w(&["a", "b"])));
        let Verdict::Equal(t) = v else { panic!("{v:?}") };
        assert_eq!(t.replay(&bb).unwrap(), Diagram::identity(w(&["a", "b"])));
    }

    #[test]
    fn yang_baxter_holds() {
        let abc = w(&["a", "b", "c"]);
        let l = braid_word(&w(&["a"]), &w(&["b", "c"]));
        let l = compose(&l, &braid_word(&w(&["b"]), &w(&["c"])).whisker(&w(&[]), &w(&["a"]))).unwrap();
        let r = compose(&braid_word(&w(&["b"]), &w(&["c"])).whisker(&w(&["a"]), &w(&[])), &braid_word(&w(&["a"]), &w(&["c", "b"]))).unwrap();
        assert_eq!(l.src, abc);
        assert!(equal(&l, &r).is_equal());
    }

    #[test]
    fn interchange_is_not_an_equality() {
        let f = gen("f", &["a"], &["a"]);
        let g = gen("g", &["b"], &["b"]);
        let lower_first = tensor(&f, &g);
        let upper_first = compose(&whisker(&w(&["a"]), &g, &w(&[])), &whisker(&w(&[]), &f, &w(&["b"]))).unwrap();
        assert_eq!(equal(&lower_first, &upper_first), Verdict::NotEqual);
    }

    #[test]
    fn different_endpoints_are_unequal() {
        assert_eq!(equal(&Diagram::identity(w(&["a"])), &Diagram::identity(w(&["b"]))), Verdict::NotEqual);
    }

    #[test]
    fn tiny_budget_gives_unknown() {
        let b = braid_word(&w(&["a", "b"]), &w(&["c"]));
        let far = compose(&b, &braid_word(&w(&["c"]), &w(&["a"])).whisker(&w(&[]), &w(&["b"]))).unwrap();
        let far = compose(&far, &braid_word(&w(&["a"]), &w(&["c"])).whisker(&w(&[]), &w(&["b"]))).unwrap();
        let far = compose(&far, &braid_word(&w(&["a"]), &w(&["b"])).whisker(&w(&["c"]), &w(&[]))).unwrap();
        let far = compose(&far, &braid_word(&w(&["b"]), &w(&["a"])).whisker(&w(&["c"]), &w(&[]))).unwrap();
        assert!(equal(&b, &far).is_equal());
        let cfg = EqualityConfig { extra_slices: 4, max_states: 2 };
        assert!(matches!(equal_with(&b, &far, &cfg), Verdict::Unknown { .. }));
    }

    #[test]
    fn least_caps_match_bounded_search() {
        let abc = w(&["a", "b", "c"]);
        let start = compose(&braid_word(&w(&["a"]), &w(&["b"])).whisker(&w(&[]), &w(&["c"])), &braid_word(&w(&["b"]), &w(&["a"])).whisker(&w(&[]), &w(&["c"]))).unwrap();
        let caps = reach_caps(&start, 6, 10_000).unwrap();
        let id = Diagram::identity(abc);
        assert_eq!(caps[&start], 2);
        assert_eq!(caps[&id], 2);
        for (d, &c) in caps.iter().take(200) {
            let extra = c - start.len().max(d.len());
            let cfg = EqualityConfig { extra_slices: extra, max_states: 10_000 };
            assert!(equal_with(&start, d, &cfg).is_equal(), "{d:?} at cap {c}");
            if extra > 0 {
                let tight = EqualityConfig { extra_slices: extra - 1, max_states: 10_000 };
                assert!(!equal_with(&start, d, &tight).is_equal(), "{d:?} below cap {c}");
            }
        }
    }
}
