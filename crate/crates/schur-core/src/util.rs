//! Small enumeration helpers shared across modules.

use alloc::vec::Vec;

/// All k-element subsets of `items`, each in source order, subsets in
/// lexicographic order of chosen positions.
pub(crate) fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        // Advance the rightmost index that still has room.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] + 1 <= items.len() - (k - pos) {
                idx[pos] += 1;
                for t in pos + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// Sign of the permutation carrying `from` onto `to`; both must list the
/// same distinct elements.
pub(crate) fn parity_between<T: PartialEq>(from: &[T], to: &[T]) -> i32 {
    assert_eq!(from.len(), to.len());
    let idx: Vec<usize> = from
        .iter()
        .map(|x| to.iter().position(|y| y == x).expect("element missing"))
        .collect();
    let mut inv = 0usize;
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            if idx[i] > idx[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
