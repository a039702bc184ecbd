//! Permutations carried by braid runs, and their lexicographically minimal
//! reduced words.

use crate::signature::Word;

use super::{Slice, SliceBody};

/// Arrangement after running `run` on `width` strands: `arr[t]` is the index
/// (at the bottom) of the strand that ends at position `t`. Returns `None` if
/// the run contains a generator slice.
pub fn run_arrangement(width: usize, run: &[Slice]) -> Option<Vec<usize>> {
    let mut arr: Vec<usize> = (0..width).collect();
    for s in run {
        if !s.body.is_braid() {
            return None;
        }
        let i = s.offset();
        arr.swap(i, i + 1);
    }
    Some(arr)
}

/// Inverse of an arrangement: `pos[s]` is where strand `s` ends.
pub fn final_positions(arr: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; arr.len()];
    for (t, &s) in arr.iter().enumerate() {
        pos[s] = t;
    }
    pos
}

/// Number of inversions, i.e. the length of any reduced word.
pub fn inversions(arr: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..arr.len() {
        for j in i + 1..arr.len() {
            if arr[i] > arr[j] {
                n += 1;
            }
        }
    }
    n
}

/// Positions of the lexicographically minimal reduced word for `arr`, read
/// bottom to top: always swap at the smallest descent of the remaining
/// permutation.
pub fn lexmin_positions(arr: &[usize]) -> Vec<usize> {
    let pos = final_positions(arr);
    let mut cur: Vec<usize> = (0..arr.len()).collect();
    let mut out = Vec::new();
    loop {
        let step = (0..cur.len().saturating_sub(1)).find(|&i| pos[cur[i]] > pos[cur[i + 1]]);
        match step {
            Some(i) => {
                cur.swap(i, i + 1);
                out.push(i);
            }
            None => return out,
        }
    }
}

/// Braid slices realising `arr` on the strands of `word`, as the
/// lexicographically minimal reduced word.
pub fn lexmin_run(word: &Word, arr: &[usize]) -> Vec<Slice> {
    debug_assert_eq!(word.len(), arr.len());
    let mut cur = word.letters().to_vec();
    let mut out = Vec::new();
    for i in lexmin_positions(arr) {
        let left = Word::new(cur[..i].to_vec());
        let right = Word::new(cur[i + 2..].to_vec());
        out.push(Slice::new(left, SliceBody::Braid(cur[i].clone(), cur[i + 1].clone()), right));
        cur.swap(i, i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn apply_positions(n: usize, ps: &[usize]) -> Vec<usize> {
        let mut arr: Vec<usize> = (0..n).collect();
        for &i in ps {
            arr.swap(i, i + 1);
        }
        arr
    }

    // Every reduced word of every permutation, by brute force.
    fn reduced_words(arr: &[usize]) -> Vec<Vec<usize>> {
        let n = arr.len();
        let len = inversions(arr);
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(w) = stack.pop() {
            if w.len() == len {
                if apply_positions(n, &w) == arr {
                    out.push(w);
                }
                continue;
            }
            for i in 0..n.saturating_sub(1) {
                let mut v = w.clone();
                v.push(i);
                if inversions(&apply_positions(n, &v)) == v.len() {
                    stack.push(v);
                }
            }
        }
        out
    }

    #[test]
    fn lexmin_is_reduced_and_minimal_up_to_four_strands() {
        for n in 0..=4 {
            for p in all_perms(n) {
                let w = lexmin_positions(&p);
                assert_eq!(apply_positions(n, &w), p);
                assert_eq!(w.len(), inversions(&p));
                let best = reduced_words(&p).into_iter().min().unwrap();
                assert_eq!(w, best, "permutation {p:?}");
            }
        }
    }

    #[test]
    fn lexmin_run_letters_follow_the_strands() {
        let word = Word::from_letters(["a", "b", "c"]);
        let run = lexmin_run(&word, &[2, 0, 1]);
        assert_eq!(run.len(), 2);
        assert_eq!(run[0].dom(), word);
        assert_eq!(run[1].cod(), Word::from_letters(["c", "a", "b"]));
        assert_eq!(run_arrangement(3, &run), Some(vec![2, 0, 1]));
    }
}
