//! k-subset iteration in colexicographic order and binomial helpers.

/// Iterates the `k`-subsets of `{0, .., n-1}` in colex order: sets are compared
/// by their largest differing element, so `{0,1} < {0,2} < {1,2} < {0,3} < ..`.
#[derive(Debug, Clone)]
pub struct Colex {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Self {
        Colex {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        // Advance: bump the lowest position that has room below its successor.
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k { self.current[i + 1] } else { self.n };
            if self.current[i] + 1 < limit {
                self.current[i] += 1;
                for (j, c) in self.current.iter_mut().enumerate().take(i) {
                    *c = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// Iterates the `k`-subsets of `{0, .., n-1}` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Lex {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Lex {
    pub fn new(n: usize, k: usize) -> Self {
        Lex {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Lex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        match (0..k).rev().find(|&i| self.current[i] < self.n - k + i) {
            Some(i) => {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// All subsets of `{0, .., n-1}` with at most `max_size` elements, by size and then colex.
pub fn subsets_up_to(n: usize, max_size: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=max_size.min(n)).flat_map(move |k| Colex::new(n, k))
}

/// `n choose k`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Position of a sorted k-subset in colex order (combinatorial number system).
pub fn colex_rank(subset: &[usize]) -> u64 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1))
        .sum()
}
