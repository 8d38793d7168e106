//! Partitions, Schur functor dimensions and the Cauchy decomposition of `Λ^c(E ⊗ F)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Fails unless `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain!("{:?} is not weakly decreasing", parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn from_slice(parts: &[u32]) -> Result<Self> {
        Self::new(parts.to_vec())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Parts padded with zeros to length `m`; `None` if there are more than `m` rows.
    pub fn padded(&self, m: usize) -> Option<Vec<i64>> {
        if self.parts.len() > m {
            return None;
        }
        let mut v: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        v.resize(m, 0);
        Some(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `dim Σ^p C^m` by the hook-content formula.
pub fn gl_partition_dim(p: &Partition, m: u32) -> BigUint {
    if p.rows() > m as usize {
        return BigUint::zero();
    }
    let conj = p.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in p.parts.iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            num *= (m as i64 + content) as u64;
            let hook = (row as usize - j - 1) + (conj.parts[j] as usize - i - 1) + 1;
            den *= hook as u64;
        }
    }
    num / den
}

/// Partitions of `total` with at most `max_rows` rows and parts at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions_bounded(total: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rest: u32, rows: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, max_rows, max_part, &mut vec![], &mut out);
    out
}

/// Terms `(λ, λ̄)` of `Λ^c(E ⊗ F) = ⊕ Σ^λ E ⊗ Σ^λ̄ F` with `dim E = p`, `dim F = q`.
pub fn cauchy_exterior(c: u32, p: u32, q: u32) -> Vec<(Partition, Partition)> {
    partitions_bounded(c, p as usize, q)
        .into_iter()
        .map(|l| {
            let conj = l.conjugate();
            (l, conj)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::from_slice(p).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Semistandard tableaux of shape `p` with entries in `1..=m`, counted directly.
    fn ssyt_count(p: &[u32], m: u32) -> u64 {
        let cells: Vec<(usize, usize)> = p
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j)))
            .collect();
        let mut fill = vec![vec![0u32; p.first().copied().unwrap_or(0) as usize]; p.len()];
        fn go(k: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<u32>>, m: u32) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let lo_row = if j > 0 { fill[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { fill[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=m {
                fill[i][j] = v;
                total += go(k + 1, cells, fill, m);
            }
            total
        }
        go(0, &cells, &mut fill, m)
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(gl_partition_dim(&part(&[1, 1]), 4), BigUint::from(6u32));
        assert_eq!(gl_partition_dim(&part(&[4, 2]), 3), BigUint::from(27u32));
        assert_eq!(gl_partition_dim(&part(&[2, 1, 1, 1]), 3), BigUint::zero());
        assert_eq!(gl_partition_dim(&part(&[]), 3), BigUint::one());
    }

    #[test]
    fn hook_content_matches_tableaux() {
        for size in 0..=6u32 {
            for l in partitions_bounded(size, 6, 6) {
                for m in 1..=5u32 {
                    let expect = if l.rows() > m as usize { 0 } else { ssyt_count(l.parts(), m) };
                    assert_eq!(gl_partition_dim(&l, m), BigUint::from(expect), "{l} m={m}");
                }
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 2]).conjugate(), part(&[2, 2]));
        for size in 0..=8 {
            for l in partitions_bounded(size, 8, 8) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(
            cauchy_exterior(2, 3, 3),
            vec![(part(&[2]), part(&[1, 1])), (part(&[1, 1]), part(&[2]))]
        );
        assert_eq!(
            cauchy_exterior(4, 3, 3),
            vec![
                (part(&[3, 1]), part(&[2, 1, 1])),
                (part(&[2, 2]), part(&[2, 2])),
                (part(&[2, 1, 1]), part(&[3, 1])),
            ]
        );
    }

    #[test]
    fn cauchy_dimension_identity() {
        for c in 1..=6u32 {
            for p in 1..=4u32 {
                for q in 1..=4u32 {
                    let total: BigUint = cauchy_exterior(c, p, q)
                        .iter()
                        .map(|(a, b)| gl_partition_dim(a, p) * gl_partition_dim(b, q))
                        .sum();
                    assert_eq!(total, BigUint::from(binom((p * q) as u64, c as u64)));
                }
            }
        }
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::from_slice(&[1, 2]).is_err());
        assert_eq!(part(&[2, 1, 0, 0]).parts(), &[2, 1]);
    }
}
