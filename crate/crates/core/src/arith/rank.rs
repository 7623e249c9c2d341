//! Rank and row echelon forms over `F_p`.
//!
//! Rows are reduced in blocks against the stored pivots with delayed
//! modular reduction: entries accumulate in `u64` and are only reduced when
//! the next addition could overflow or when a value is needed.

use super::PrimeField;

const BLOCK_ROWS: usize = 32;

type Axpy = fn(&mut [u64], &[u32], u32);

#[inline(always)]
fn axpy_body(dst: &mut [u64], src: &[u32], c: u32) {
    let c = c as u64;
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = d.wrapping_add(c.wrapping_mul(s as u64));
    }
}

fn axpy_portable(dst: &mut [u64], src: &[u32], c: u32) {
    axpy_body(dst, src, c)
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "avx2")]
unsafe fn axpy_avx2_inner(dst: &mut [u64], src: &[u32], c: u32) {
    axpy_body(dst, src, c)
}

#[cfg(target_arch = "x86_64")]
fn axpy_avx2(dst: &mut [u64], src: &[u32], c: u32) {
    // SAFETY: only handed out by `select_axpy` after runtime detection.
    unsafe { axpy_avx2_inner(dst, src, c) }
}

fn select_axpy() -> Axpy {
    #[cfg(target_arch = "x86_64")]
    {
        if std::is_x86_feature_detected!("avx2") {
            return axpy_avx2;
        }
    }
    axpy_portable
}

#[derive(Clone, Debug)]
struct Pivot {
    col: usize,
    /// Entries from `col` onwards; `tail[0] == 1`.
    tail: Vec<u32>,
}

/// An incrementally built semi-echelon basis of a row space over `F_p`.
///
/// Every stored pivot row is zero before its pivot column and at the pivot
/// columns of all earlier pivots, so reducing in insertion order is exact.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    pivots: Vec<Pivot>,
    axpy: Axpy,
    /// How many lazy additions an entry tolerates before it must be reduced.
    budget: u64,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        let pm1 = field.modulus() as u64 - 1;
        let budget = if pm1 == 0 { u64::MAX } else { (u64::MAX - pm1) / (pm1 * pm1) };
        Self {
            field,
            ncols,
            pivots: Vec::new(),
            axpy: select_axpy(),
            budget: budget.max(1),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    /// Pivot columns in insertion order.
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|p| p.col)
    }

    /// Adds one row; returns whether the rank grew.
    pub fn insert(&mut self, row: &[u32]) -> bool {
        self.extend(std::iter::once(row.to_vec())) == 1
    }

    /// Adds rows and returns how many of them raised the rank. Stops reading
    /// once the row space is everything.
    pub fn extend<I>(&mut self, rows: I) -> usize
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let before = self.rank();
        let mut rows = rows.into_iter();
        while !self.is_full() {
            let block: Vec<Vec<u64>> = rows
                .by_ref()
                .take(BLOCK_ROWS)
                .map(|r| self.lift(&r))
                .collect();
            if block.is_empty() {
                break;
            }
            self.absorb_block(block);
        }
        self.rank() - before
    }

    /// Whether `row` lies in the current row space.
    pub fn contains(&self, row: &[u32]) -> bool {
        let mut block = vec![self.lift(row)];
        let mut adds = 0;
        self.reduce_against(&mut block, 0..self.pivots.len(), &mut adds);
        let p = self.field.modulus() as u64;
        block[0].iter().all(|&x| x % p == 0)
    }

    fn lift(&self, row: &[u32]) -> Vec<u64> {
        assert_eq!(row.len(), self.ncols, "row length does not match column count");
        let p = self.field.modulus();
        row.iter().map(|&x| (x % p) as u64).collect()
    }

    fn reduce_block_mod_p(&self, block: &mut [Vec<u64>]) {
        let p = self.field.modulus() as u64;
        for row in block.iter_mut() {
            for x in row.iter_mut() {
                *x %= p;
            }
        }
    }

    fn reduce_against(&self, block: &mut [Vec<u64>], pivots: std::ops::Range<usize>, adds: &mut u64) {
        let p = self.field.modulus() as u64;
        for piv in &self.pivots[pivots] {
            if *adds >= self.budget {
                self.reduce_block_mod_p(block);
                *adds = 0;
            }
            for row in block.iter_mut() {
                let c = row[piv.col] % p;
                if c != 0 {
                    (self.axpy)(&mut row[piv.col..], &piv.tail, (p - c) as u32);
                }
            }
            *adds += 1;
        }
    }

    fn absorb_block(&mut self, mut block: Vec<Vec<u64>>) {
        let mut adds = 0;
        self.reduce_against(&mut block, 0..self.pivots.len(), &mut adds);
        let p = self.field.modulus() as u64;
        for i in 0..block.len() {
            let (head, rest) = block.split_at_mut(i + 1);
            let row = &mut head[i];
            for x in row.iter_mut() {
                *x %= p;
            }
            let Some(col) = row.iter().position(|&x| x != 0) else {
                continue;
            };
            let inv = self
                .field
                .inv(row[col] as u32)
                .expect("nonzero leading entry is invertible") as u64;
            let tail: Vec<u32> = row[col..].iter().map(|&x| (x * inv % p) as u32).collect();
            self.pivots.push(Pivot { col, tail });
            if self.is_full() {
                return;
            }
            let k = self.pivots.len() - 1;
            self.reduce_against(rest, k..k + 1, &mut adds);
        }
    }
}

/// Rank of a dense matrix over `F_p`. Entries are taken modulo `p`.
///
/// Panics if the rows have different lengths.
pub fn fp_rank(field: PrimeField, rows: &[Vec<u32>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    assert!(rows.iter().all(|r| r.len() == ncols), "matrix must be rectangular");
    let mut ech = Echelon::new(field, ncols);
    ech.extend(rows.iter().cloned());
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Textbook elimination with a modular reduction after every operation.
    fn naive_rank(field: PrimeField, rows: &[Vec<u32>]) -> usize {
        let mut m: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&x| x % field.modulus()).collect()).collect();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..ncols {
            let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = field.inv(m[rank][col]).unwrap();
            for i in 0..m.len() {
                if i != rank && m[i][col] != 0 {
                    let c = field.mul(m[i][col], inv);
                    let pivot_row = m[rank].clone();
                    for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                        *x = field.sub(*x, field.mul(c, y));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_examples() {
        let id: Vec<Vec<u32>> = (0..3).map(|i| (0..3).map(|j| (i == j) as u32).collect()).collect();
        assert_eq!(fp_rank(f(7), &id), 3);
        assert_eq!(fp_rank(f(7), &[vec![0; 5], vec![0; 5]]), 0);
        assert_eq!(fp_rank(f(5), &[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(fp_rank(f(5), &[]), 0);
    }

    #[test]
    fn contains_and_insert() {
        let mut e = Echelon::new(f(5), 3);
        assert!(e.insert(&[0, 1, 2]));
        assert!(!e.insert(&[0, 2, 4]));
        assert!(e.contains(&[0, 3, 1]));
        assert!(!e.contains(&[1, 0, 0]));
        assert!(e.insert(&[1, 1, 1]));
        assert_eq!(e.pivot_columns().collect::<Vec<_>>(), vec![1, 0]);
    }

    #[test]
    fn tiny_budget_forces_intermediate_reductions() {
        // p close to 2^31 leaves room for only a handful of lazy additions.
        let field = f(2_147_483_647);
        let mut state = 12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 2_147_483_647) as u32
        };
        let mut rows: Vec<Vec<u32>> = (0..30).map(|_| (0..40).map(|_| next()).collect()).collect();
        // Make the last ten rows combinations of earlier ones.
        for i in 20..30 {
            let (a, b) = (rows[i - 20].clone(), rows[i - 19].clone());
            rows[i] = a.iter().zip(&b).map(|(&x, &y)| field.add(field.mul(x, 3), y)).collect();
        }
        assert_eq!(fp_rank(field, &rows), naive_rank(field, &rows));
        assert_eq!(fp_rank(field, &rows), 20);
    }

    fn matrix(p: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
        (1usize..12, 1usize..12).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0..p, c), r)
        })
    }

    proptest! {
        #[test]
        fn matches_naive_and_transpose(m in matrix(3), p in prop::sample::select(vec![3u64, 5, 32003])) {
            let field = f(p);
            let t: Vec<Vec<u32>> = (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect();
            let r = fp_rank(field, &m);
            prop_assert_eq!(r, naive_rank(field, &m));
            prop_assert_eq!(r, fp_rank(field, &t));
        }

        #[test]
        fn row_permutation_invariant(m in matrix(7), seed in any::<u64>()) {
            let field = f(7);
            let mut perm = m.clone();
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(fp_rank(field, &m), fp_rank(field, &perm));
        }

        #[test]
        fn larger_than_one_block(m in (40usize..80).prop_flat_map(|r| proptest::collection::vec(proptest::collection::vec(0u32..2, 30), r))) {
            let field = f(2);
            prop_assert_eq!(fp_rank(field, &m), naive_rank(field, &m));
        }
    }
}
