//! Odometer enumeration of integer compositions.
//!
//! A weak composition of `n` into `k` parts is a tuple `(i_1, ..., i_k)` of
//! non-negative integers summing to `n`; a strict one has positive parts.
//! Both iterators run in colexicographic order (the last part is the most
//! significant digit), starting from `(n, 0, ..., 0)` resp. `(n-k+1, 1, ..., 1)`.

use crate::combinat::binomial;

/// Iterator over weak compositions of `n` into `k` parts.
#[derive(Debug, Clone)]
pub struct WeakCompositions {
    state: Vec<usize>,
    done: bool,
}

impl WeakCompositions {
    pub fn new(n: usize, k: usize) -> Self {
        if k == 0 {
            // only the empty composition of 0
            return WeakCompositions {
                state: Vec::new(),
                done: n != 0,
            };
        }
        let mut state = vec![0; k];
        state[0] = n;
        WeakCompositions { state, done: false }
    }

    /// `C(n + k - 1, k - 1)`, or `[n == 0]` for `k = 0`.
    pub fn count(n: usize, k: usize) -> u128 {
        if k == 0 {
            return (n == 0) as u128;
        }
        binomial((n + k - 1) as u64, (k - 1) as u64).try_into().unwrap_or(u128::MAX)
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.state.clone();
        let k = self.state.len();
        // advance: move one unit from the first nonzero part (not the last) rightwards
        match (0..k.saturating_sub(1)).find(|&i| self.state[i] > 0) {
            None => self.done = true,
            Some(i) => {
                let v = self.state[i];
                self.state[i] = 0;
                self.state[0] = v - 1;
                self.state[i + 1] += 1;
            }
        }
        Some(current)
    }
}

/// Iterator over strict compositions of `n` into `k` parts.
#[derive(Debug, Clone)]
pub struct StrictCompositions {
    inner: Option<WeakCompositions>,
}

impl StrictCompositions {
    pub fn new(n: usize, k: usize) -> Self {
        let inner = (n >= k).then(|| WeakCompositions::new(n - k, k));
        StrictCompositions { inner }
    }

    /// `C(n - 1, k - 1)`, or `[n == 0]` for `k = 0`.
    pub fn count(n: usize, k: usize) -> u128 {
        match (n, k) {
            (0, 0) => 1,
            (_, 0) => 0,
            _ if n < k => 0,
            _ => binomial((n - 1) as u64, (k - 1) as u64).try_into().unwrap_or(u128::MAX),
        }
    }
}

impl Iterator for StrictCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let mut c = self.inner.as_mut()?.next()?;
        c.iter_mut().for_each(|x| *x += 1);
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn colex_order() {
        let all: Vec<_> = WeakCompositions::new(2, 2).collect();
        assert_eq!(all, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let all: Vec<_> = StrictCompositions::new(4, 2).collect();
        assert_eq!(all, vec![vec![3, 1], vec![2, 2], vec![1, 3]]);
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(WeakCompositions::new(0, 0).count(), 1);
        assert_eq!(WeakCompositions::new(3, 0).count(), 0);
        assert_eq!(WeakCompositions::new(0, 3).collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
        assert_eq!(StrictCompositions::new(2, 3).count(), 0);
        assert_eq!(StrictCompositions::new(3, 3).collect::<Vec<_>>(), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn counts_match_formulas() {
        for n in 0..9 {
            for k in 0..6 {
                let weak: Vec<_> = WeakCompositions::new(n, k).collect();
                assert_eq!(weak.len() as u128, WeakCompositions::count(n, k), "weak {n} {k}");
                assert!(weak.iter().all(|c| c.len() == k && c.iter().sum::<usize>() == n));
                assert_eq!(weak.iter().collect::<HashSet<_>>().len(), weak.len());

                let strict: Vec<_> = StrictCompositions::new(n, k).collect();
                assert_eq!(strict.len() as u128, StrictCompositions::count(n, k), "strict {n} {k}");
                assert!(strict.iter().all(|c| c.iter().all(|&x| x >= 1) && c.iter().sum::<usize>() == n));
            }
        }
    }
}
