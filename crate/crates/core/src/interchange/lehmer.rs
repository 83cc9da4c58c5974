//! Factorial-base (Lehmer) indexing of permutations. Index 0 is the
//! identity; `n! − 1` is the reversal.

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn perm_index(perm: &[usize]) -> Result<usize> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &x in perm {
        if x >= n {
            return Err(Error::OutOfRange { index: x, limit: n });
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::BadParams(format!("value {x} repeated; not a permutation")));
        }
    }
    Ok(perm_index_unchecked(perm))
}

/// Caller guarantees `perm` is a permutation of `0..perm.len()`.
pub(crate) fn perm_index_unchecked(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut idx = 0;
    for i in 0..n {
        let smaller_after = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        idx = idx * (n - i) + smaller_after;
    }
    idx
}

pub fn index_perm(index: usize, n: usize) -> Result<Vec<usize>> {
    let total = factorial(n);
    if index >= total {
        return Err(Error::OutOfRange { index, limit: total });
    }
    let mut digits = vec![0; n];
    let mut rest = index;
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rest % base;
        rest /= base;
    }
    let mut pool: Vec<usize> = (0..n).collect();
    Ok(digits.into_iter().map(|d| pool.remove(d)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_reversal() {
        assert_eq!(perm_index(&[0, 1, 2, 3]).unwrap(), 0);
        assert_eq!(index_perm(0, 4).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(index_perm(23, 4).unwrap(), vec![3, 2, 1, 0]);
        assert_eq!(perm_index(&[3, 2, 1, 0]).unwrap(), 23);
    }

    #[test]
    fn exhaustive_round_trip() {
        let mut seen = std::collections::HashSet::new();
        for i in 0..24 {
            let p = index_perm(i, 4).unwrap();
            assert!(seen.insert(p.clone()));
            assert_eq!(perm_index(&p).unwrap(), i);
        }
    }

    #[test]
    fn errors() {
        assert!(index_perm(24, 4).is_err());
        assert!(perm_index(&[0, 0, 1]).is_err());
        assert!(perm_index(&[0, 3, 1]).is_err());
    }
}
