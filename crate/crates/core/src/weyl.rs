//! Weyl dimension formula in exact integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::group::{DominantWeight, Family, GroupDesc, Label};
use crate::roots::{dot, RootData};

/// `Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` for the connected group; doubled for `O_N`
/// weights labelled `empty`.
pub fn irrep_dim(g: &GroupDesc, lambda: &DominantWeight) -> Result<BigUint> {
    // revalidate: callers may build weights by hand
    let checked = DominantWeight::new(g, lambda.entries.clone(), lambda.label)?;
    let rd = RootData::of(g);
    let d = weyl_product(&rd, &rd.embed(&checked.entries));
    if g.family() == Family::Ofull && checked.label == Label::Empty {
        Ok(d * 2u32)
    } else {
        Ok(d)
    }
}

/// Dimension of the irreducible with highest weight `v` (ambient coordinates).
pub(crate) fn weyl_product(rd: &RootData, v: &[i64]) -> BigUint {
    let shifted: alloc::vec::Vec<i64> = v.iter().zip(&rd.two_rho).map(|(x, r)| 2 * x + r).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for a in &rd.positive {
        let p = dot(&shifted, a);
        let q = dot(&rd.two_rho, a);
        debug_assert!(q > 0);
        if p <= 0 {
            return BigUint::zero();
        }
        num *= p as u64;
        den *= q as u64;
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Dimension as `u64`; panics beyond 64 bits. Used inside tests and small sweeps.
pub fn irrep_dim_u64(g: &GroupDesc, lambda: &DominantWeight) -> Result<u64> {
    let d = irrep_dim(g, lambda)?;
    u64::try_from(d).map_err(|_| domain!("dimension exceeds 64 bits"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn dim(g: GroupDesc, w: &[i64]) -> u64 {
        irrep_dim_u64(&g, &DominantWeight::of(&g, w).unwrap()).unwrap()
    }

    #[test]
    fn printed_dimensions() {
        let sp4 = GroupDesc::sp(4).unwrap();
        assert_eq!(dim(sp4, &[1, 1, 1, 1]), 42);
        assert_eq!(dim(sp4, &[1, 1, 1, 0]), 48);
        assert_eq!(dim(GroupDesc::sp(3).unwrap(), &[1, 1, 1]), 14);
        assert_eq!(dim(GroupDesc::sl(3).unwrap(), &[2, 1, 0]), 8);
        assert_eq!(dim(GroupDesc::sl(3).unwrap(), &[4, 2, 0]), 27);
        assert_eq!(dim(GroupDesc::sp(2).unwrap(), &[1, 1]), 5);
        assert_eq!(dim(GroupDesc::g2(), &[0, 1]), 7);
        assert_eq!(dim(GroupDesc::g2(), &[1, 0]), 14);
        assert_eq!(dim(GroupDesc::g2(), &[0, 2]), 27);
    }

    #[test]
    fn standard_and_trivial() {
        for n in 1..7u32 {
            let sl = GroupDesc::sl(n).unwrap();
            assert_eq!(dim(sl, &vec![0; n as usize]), 1);
            let mut e = vec![0; n as usize];
            e[0] = 1;
            assert_eq!(dim(sl, &e), n as u64);
            let sp = GroupDesc::sp(n).unwrap();
            assert_eq!(dim(sp, &e), 2 * n as u64);
        }
        for big_n in 3..12u32 {
            let so = GroupDesc::so(big_n).unwrap();
            let mut e = vec![0; so.rank()];
            e[0] = 1;
            assert_eq!(dim(so, &e), big_n as u64);
        }
    }

    #[test]
    fn orthogonal_small_cases() {
        assert_eq!(dim(GroupDesc::so(6).unwrap(), &[1, 1, 1]), 10);
        assert_eq!(dim(GroupDesc::so(6).unwrap(), &[1, 1, -1]), 10);
        assert_eq!(dim(GroupDesc::so(10).unwrap(), &[1, 1, 1, 0, 0]), 120);
        assert_eq!(dim(GroupDesc::so(7).unwrap(), &[1, 1, 1]), 35);
        assert_eq!(dim(GroupDesc::so(5).unwrap(), &[2, 2]), 35);
        let o8 = GroupDesc::o(8).unwrap();
        let e = DominantWeight::new(&o8, vec![1, 1, 1, 1], Label::Empty).unwrap();
        assert_eq!(irrep_dim_u64(&o8, &e).unwrap(), 70);
    }

    #[test]
    fn harmonic_middle_powers() {
        for m in 1..=6u32 {
            let sp = GroupDesc::sp(m).unwrap();
            let d = dim(sp, &vec![1; m as usize]);
            let b = |a: u64, k: i64| -> u64 {
                if k < 0 {
                    return 0;
                }
                (0..k as u64).fold(1, |acc, i| acc * (a - i) / (i + 1))
            };
            assert_eq!(d, b(2 * m as u64, m as i64) - b(2 * m as u64, m as i64 - 2));
        }
    }

    #[test]
    fn rejects_non_dominant() {
        let sp = GroupDesc::sp(2).unwrap();
        let bad = DominantWeight { entries: vec![0, 1], label: Label::None };
        assert!(irrep_dim(&sp, &bad).is_err());
    }
}
