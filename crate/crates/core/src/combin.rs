//! Lexicographic k-subsets and binomial coefficients.

/// Walks the `k`-subsets of `0..n` in lexicographic order without
/// allocating per subset.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    indices: Vec<usize>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let state = if k > n { State::Done } else { State::Fresh };
        Combinations { n, indices: (0..k).collect(), state }
    }

    pub fn next_subset(&mut self) -> Option<&[usize]> {
        match self.state {
            State::Done => return None,
            State::Fresh => self.state = State::Running,
            State::Running => {
                let k = self.indices.len();
                let Some(pos) = (0..k).rev().find(|&p| self.indices[p] < self.n - k + p) else {
                    self.state = State::Done;
                    return None;
                };
                self.indices[pos] += 1;
                for q in pos + 1..k {
                    self.indices[q] = self.indices[q - 1] + 1;
                }
            }
        }
        Some(&self.indices)
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
