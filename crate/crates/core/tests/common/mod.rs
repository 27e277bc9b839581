#![allow(dead_code)]

use proptest::prelude::*;
use zariski_core::FinPerm;

/// Permutation of `{0, …, n - 1}` built from a shuffled image list.
pub fn perm_on(n: usize) -> impl Strategy<Value = FinPerm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|img| FinPerm::from_pairs(img.into_iter().enumerate()).unwrap())
}

/// Image of `x` under `p` read off a dense lookup table, for comparison
/// against binary-search application.
pub fn dense(p: &FinPerm, n: usize) -> Vec<usize> {
    let mut t: Vec<usize> = (0..n).collect();
    for &(a, b) in p.pairs() {
        t[a] = b;
    }
    t
}

/// All permutations of `{0, …, n - 1}`.
pub fn all_perms(n: usize) -> Vec<FinPerm> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<FinPerm>) {
        if prefix.len() == n {
            out.push(FinPerm::from_pairs(prefix.iter().copied().enumerate()).unwrap());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}
