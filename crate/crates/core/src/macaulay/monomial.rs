use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::arith::binom_usize;

/// A monomial given by its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self^q`.
    pub fn pow(&self, q: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * q).collect())
    }

    /// Degree reverse lexicographic comparison; `Greater` means earlier in
    /// the ordering used for matrix columns.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

fn var_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{i}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => var_name(self.nvars(), i),
                _ => format!("{}^{e}", var_name(self.nvars(), i)),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// All monomials of degree `m` in `nvars` variables, largest first in
/// degrevlex (`x0^m` first, `x_{v-1}^m` last).
pub fn monomials_of_degree(nvars: usize, m: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill(&mut out, &mut exps, nvars - 1, m);
    out
}

// Assign the variable at `slot` (and below) so the remaining degree is used up;
// iterating the last variable slowest gives ascending degrevlex keys.
fn fill(out: &mut Vec<Monomial>, exps: &mut [u32], slot: usize, remaining: u32) {
    if slot == 0 {
        exps[0] = remaining;
        out.push(Monomial(exps.to_vec()));
        return;
    }
    for e in 0..=remaining {
        exps[slot] = e;
        fill(out, exps, slot - 1, remaining - e);
    }
    exps[slot] = 0;
}

/// Number of monomials of degree `m` in `nvars` variables.
pub fn count_monomials(nvars: usize, m: u32) -> usize {
    binom_usize(m as usize + nvars - 1, nvars - 1).expect("monomial count fits in usize")
}

/// Position of a degree-`m` monomial in [`monomials_of_degree`].
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    nvars: usize,
    degree: u32,
    len: usize,
    /// `table[n][k] = C(n, k)` for `n <= degree + nvars`, `k < nvars`.
    table: Vec<Vec<usize>>,
}

impl MonomialIndex {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let rows = degree as usize + nvars + 1;
        let table = (0..rows)
            .map(|n| (0..nvars).map(|k| binom_usize(n, k).expect("fits")).collect())
            .collect();
        Self {
            nvars,
            degree,
            len: count_monomials(nvars, degree),
            table,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Rank of an exponent vector of total degree `self.degree()`.
    pub fn rank(&self, exps: &[u32]) -> usize {
        debug_assert_eq!(exps.len(), self.nvars);
        debug_assert_eq!(exps.iter().sum::<u32>(), self.degree);
        let mut remaining = self.degree as usize;
        let mut rank = 0;
        for k in (1..self.nvars).rev() {
            let e = exps[k] as usize;
            // Monomials with a smaller exponent in slot k and the same higher
            // slots: sum_{t<e} C(remaining - t + k - 1, k - 1).
            rank += self.table[remaining + k][k] - self.table[remaining - e + k][k];
            remaining -= e;
        }
        rank
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        let two = monomials_of_degree(2, 2);
        assert_eq!(
            two,
            vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])]
        );
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::one(3)]);
        assert_eq!(monomials_of_degree(3, 10).len(), 66);
        let names: Vec<String> = monomials_of_degree(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
    }

    #[test]
    fn order_is_strictly_decreasing_degrevlex() {
        for (v, m) in [(1, 4), (2, 5), (3, 6), (4, 4), (5, 3)] {
            let all = monomials_of_degree(v, m);
            assert_eq!(all.len(), count_monomials(v, m));
            assert!(all.windows(2).all(|w| w[0].cmp_degrevlex(&w[1]) == Ordering::Greater));
        }
    }

    #[test]
    fn index_is_inverse_of_enumeration() {
        for (v, m) in [(1, 3), (2, 7), (3, 9), (4, 6), (6, 4)] {
            let idx = MonomialIndex::new(v, m);
            for (i, mono) in idx.monomials().iter().enumerate() {
                assert_eq!(idx.rank(mono.exponents()), i);
            }
        }
    }

    #[test]
    fn multiplication_lands_in_target_degree() {
        let idx = MonomialIndex::new(3, 5);
        for a in monomials_of_degree(3, 2) {
            for b in monomials_of_degree(3, 3) {
                let p = a.mul(&b);
                assert_eq!(p.degree(), 5);
                assert!(idx.rank(p.exponents()) < idx.len());
            }
        }
    }
}
