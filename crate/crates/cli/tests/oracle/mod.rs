//! Slow, direct reimplementations used as reference values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Noncommutative polynomial truncated above some degree.
pub type Poly = BTreeMap<Vec<u16>, BigInt>;

pub fn mul(a: &Poly, b: &Poly, n: usize) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            if u.len() + v.len() > n {
                continue;
            }
            let w: Vec<u16> = u.iter().chain(v).copied().collect();
            *out.entry(w).or_insert_with(BigInt::zero) += x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn add(a: &Poly, b: &Poly, scale: i64) -> Poly {
    let mut out = a.clone();
    for (w, c) in b {
        *out.entry(w.clone()).or_insert_with(BigInt::zero) += c * scale;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn var(j: u16) -> Poly {
    Poly::from([(vec![j], BigInt::one())])
}

pub fn bracket(a: &Poly, b: &Poly, n: usize) -> Poly {
    add(&mul(a, b, n), &mul(b, a, n), -1)
}

/// Magnus expansion, letter by letter: `a_j ↦ 1 + t_j`,
/// `a_j⁻¹ ↦ Σ_{i ≤ n} (−t_j)^i`.
pub fn magnus(letters: &[i32], n: usize) -> Poly {
    let mut p = Poly::from([(vec![], BigInt::one())]);
    for &l in letters {
        let j = l.unsigned_abs() as u16;
        let factor: Poly = if l > 0 {
            Poly::from([(vec![], BigInt::one()), (vec![j], BigInt::one())])
        } else {
            (0..=n).map(|i| (vec![j; i], BigInt::from(if i % 2 == 0 { 1 } else { -1 }))).collect()
        };
        p = mul(&p, &factor, n);
    }
    p
}

pub fn homogeneous(p: &Poly, k: usize) -> Poly {
    p.iter().filter(|(w, _)| w.len() == k).map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Smallest `d ≥ 1` with a nonzero degree-`d` term, if any up to `n`.
pub fn lcs_degree(letters: &[i32], n: usize) -> Option<usize> {
    magnus(letters, n).keys().map(Vec::len).filter(|&d| d > 0).min()
}

/// Word strictly smaller than each proper rotation.
pub fn is_lyndon(w: &[u16]) -> bool {
    (1..w.len()).all(|s| {
        let rot: Vec<u16> = w[s..].iter().chain(&w[..s]).copied().collect();
        w < &rot[..]
    })
}

/// Every Lyndon word of length `k` over `1..=n`, by exhaustive enumeration.
pub fn lyndon_words(n: usize, k: usize) -> Vec<Vec<u16>> {
    let total = n.pow(k as u32);
    let mut out = Vec::new();
    for mut idx in 0..total {
        let mut w = vec![0u16; k];
        for slot in w.iter_mut().rev() {
            *slot = (idx % n) as u16 + 1;
            idx /= n;
        }
        if is_lyndon(&w) {
            out.push(w);
        }
    }
    out
}

/// Arf invariant as the majority value of `q` over all `2^{2g}` vectors.
pub fn arf_by_majority(basis_values: &[bool]) -> bool {
    let n = basis_values.len();
    let mut ones = 0usize;
    for v in 0u64..1 << n {
        let mut q = false;
        for (j, &b) in basis_values.iter().enumerate() {
            if v >> j & 1 == 1 {
                q ^= b;
            }
        }
        for i in 0..n / 2 {
            if v >> (2 * i) & 1 == 1 && v >> (2 * i + 1) & 1 == 1 {
                q ^= true;
            }
        }
        ones += q as usize;
    }
    2 * ones > 1 << n
}
