//! Square bit matrices over GF(2) and their rank.

use std::fmt;

/// An `n × n` matrix over GF(2) with rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Gf2Matrix {
            n,
            stride,
            data: vec![0; n * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| {
            let row = rows[i].as_ref();
            assert_eq!(row.len(), n, "matrix must be square");
            row[j] != 0
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n);
        self.data[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.n && j < self.n);
        let w = &mut self.data[i * self.stride + j / 64];
        let bit = 1u64 << (j % 64);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n);
        self.data[i * self.stride + j / 64] ^= 1u64 << (j % 64);
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Rows as single words; `None` when `n > 64`.
    pub fn single_word_rows(&self) -> Option<Vec<u64>> {
        (self.stride == 1).then(|| self.data.clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// `P M Pᵀ`: entry `(i, j)` of the result is entry `(perm[i], perm[j])`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::from_fn(self.n, |i, j| self.get(perm[i], perm[j]))
    }

    /// `self + D`, where `D` is diagonal with ones at the indices set in `diag`.
    pub fn plus_diagonal(&self, diag: impl IntoIterator<Item = usize>) -> Self {
        let mut m = self.clone();
        for i in diag {
            m.toggle(i, i);
        }
        m
    }

    /// Add row `src` into row `dst` and column `src` into column `dst`.
    pub fn add_row_col(&mut self, src: usize, dst: usize) {
        assert!(src != dst);
        for w in 0..self.stride {
            let s = self.data[src * self.stride + w];
            self.data[dst * self.stride + w] ^= s;
        }
        for i in 0..self.n {
            if self.get(i, src) {
                self.toggle(i, dst);
            }
        }
    }

    pub fn rank(&self) -> usize {
        gf2_rank(self)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Rank over GF(2) by forward elimination on packed rows.
pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    if m.stride == 1 {
        let mut rows = m.data.clone();
        return rank_of_words(&mut rows);
    }
    let mut data = m.data.clone();
    let stride = m.stride;
    let mut rank = 0;
    for i in 0..m.n {
        let row = &data[i * stride..(i + 1) * stride];
        let Some(w) = row.iter().position(|&x| x != 0) else {
            continue;
        };
        rank += 1;
        let pivot = row[w] & row[w].wrapping_neg();
        let pivot_row: Vec<u64> = row.to_vec();
        for j in i + 1..m.n {
            let base = j * stride;
            if data[base + w] & pivot != 0 {
                for (k, p) in pivot_row.iter().enumerate() {
                    data[base + k] ^= p;
                }
            }
        }
    }
    rank
}

/// Rank of the rows given as single 64-bit words. Destroys `rows`.
///
/// Each nonzero row pivots on its lowest set bit, which is then cleared from
/// every later row; the surviving nonzero rows have distinct pivots and are
/// therefore independent.
#[inline]
pub fn rank_of_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    let n = rows.len();
    for i in 0..n {
        let r = rows[i];
        if r == 0 {
            continue;
        }
        rank += 1;
        let pivot = r & r.wrapping_neg();
        for row in &mut rows[i + 1..] {
            // branch-free: mask is all ones iff the pivot bit is set
            let mask = ((*row & pivot) != 0) as u64;
            *row ^= r & mask.wrapping_neg();
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(Gf2Matrix::zeros(3).rank(), 0);
        assert_eq!(Gf2Matrix::identity(4).rank(), 4);
        assert_eq!(Gf2Matrix::from_rows(&[[1, 1], [1, 1]]).rank(), 1);
        assert_eq!(Gf2Matrix::from_rows(&[[0, 1], [1, 0]]).rank(), 2);
        assert_eq!(Gf2Matrix::zeros(0).rank(), 0);
    }

    #[test]
    fn multi_word_rank() {
        let n = 130;
        assert_eq!(Gf2Matrix::identity(n).rank(), n);
        // all-ones has rank 1
        assert_eq!(Gf2Matrix::from_fn(n, |_, _| true).rank(), 1);
        // a cycle adjacency of even length 130 has rank 128 over GF(2)
        let cycle = Gf2Matrix::from_fn(n, |i, j| (i + 1) % n == j || (j + 1) % n == i);
        assert_eq!(cycle.rank(), oracle_rank(&cycle));
    }

    /// Row reduction on a dense boolean table, independent of the packed path.
    fn oracle_rank(m: &Gf2Matrix) -> usize {
        let n = m.size();
        let mut a: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| a[r][col]) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..n {
                if r != rank && a[r][col] {
                    let pivot = a[rank].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = Gf2Matrix> {
        (0..=max).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n)
                .prop_map(move |bits| Gf2Matrix::from_fn(n, |i, j| bits[i * n + j]))
        })
    }

    proptest! {
        #[test]
        fn rank_matches_dense_oracle(m in arb_matrix(70)) {
            prop_assert_eq!(m.rank(), oracle_rank(&m));
        }

        #[test]
        fn rank_invariant_under_transpose(m in arb_matrix(40)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_invariant_under_simultaneous_permutation(
            (m, perm) in arb_matrix(30).prop_flat_map(|m| {
                let n = m.size();
                (Just(m), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            })
        ) {
            prop_assert_eq!(m.rank(), m.permuted(&perm).rank());
        }

        #[test]
        fn congruence_preserves_rank(m in arb_matrix(20), a in 0usize..20, b in 0usize..20) {
            let n = m.size();
            prop_assume!(n >= 2 && a < n && b < n && a != b);
            let mut t = m.clone();
            t.add_row_col(b, a);
            prop_assert_eq!(t.rank(), m.rank());
        }
    }
}
