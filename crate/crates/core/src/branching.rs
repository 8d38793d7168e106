//! Branching laws and parabolic-restriction filtrations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, Result};
use crate::group::{DominantWeight, Family, GroupDesc, Label, RepSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexConvention {
    /// Quotients `Q_1 … Q_l`, `Q_l` on top.
    SlAscending,
    /// Quotients `Q_{-k} … Q_k`.
    SpSymmetric,
}

/// Graded pieces of a representation restricted to the stabilizer `P` of a
/// generic vector of the standard representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub levels: Vec<RepSum>,
    pub levi: GroupDesc,
    pub index_convention: IndexConvention,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// `Q_i` in 1-based ascending numbering (works for both conventions).
    pub fn q(&self, i: usize) -> Option<&RepSum> {
        if i == 0 {
            return None;
        }
        self.levels.get(i - 1)
    }

    /// Half-length `k` of a symmetric filtration.
    pub fn k(&self) -> i64 {
        (self.levels.len() as i64 - 1) / 2
    }

    /// `Q_j` for `-k ≤ j ≤ k` in the symmetric convention.
    pub fn sym(&self, j: i64) -> Option<&RepSum> {
        let idx = j + self.k();
        if idx < 0 {
            return None;
        }
        self.levels.get(idx as usize)
    }

    /// All levels merged into one sum.
    pub fn flatten(&self) -> RepSum {
        RepSum::from_terms(self.levels.iter().flat_map(|l| l.terms().iter().cloned()))
    }
}

fn sub(g: &GroupDesc, w: Vec<i64>) -> DominantWeight {
    DominantWeight { entries: w, label: if g.family() == Family::Ofull { Label::Unknown } else { Label::None } }
}

/// All integer tuples `μ` with `lo[i] ≤ μ_i ≤ hi[i]`.
fn boxes(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (&l, &h) in lo.iter().zip(hi) {
        let mut next = Vec::new();
        for prefix in &out {
            for x in l..=h {
                let mut p = prefix.clone();
                p.push(x);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn check(g: &GroupDesc, lambda: &DominantWeight) -> Result<DominantWeight> {
    DominantWeight::new(g, lambda.entries.clone(), lambda.label)
}

/// Raw interlacing tuples `λ1 ≥ μ1 ≥ λ2 ≥ … ≥ μ_{n-1} ≥ λ_n`.
fn interlacing(lambda: &[i64]) -> Vec<Vec<i64>> {
    let n = lambda.len();
    let lo: Vec<i64> = lambda[1..].to_vec();
    let hi: Vec<i64> = lambda[..n - 1].to_vec();
    boxes(&lo, &hi)
}

/// `SL_n ↓ SL_{n-1}`; multiplicity-free, terms keyed by the raw interlacing tuple.
pub fn branch_sl(n: u32, lambda: &DominantWeight) -> Result<RepSum> {
    if n < 2 {
        return Err(domain!("SL branching needs n >= 2"));
    }
    let g = GroupDesc::sl(n)?;
    let lambda = check(&g, lambda)?;
    let levi = GroupDesc::sl(n - 1)?;
    Ok(RepSum::from_terms(interlacing(&lambda.entries).into_iter().map(|m| (sub(&levi, m), 1))))
}

/// Filtration of `V(λ)` under the stabilizer of a vector in `C^n`: `Q_i` holds the
/// interlacing `μ` with `Σμ = λ_2 + … + λ_n + i − 1`, written in canonical form.
pub fn filtration_sl(n: u32, lambda: &DominantWeight) -> Result<Filtration> {
    let branch = branch_sl(n, lambda)?;
    let e = &lambda.entries;
    let l = (e[0] - e[e.len() - 1] + 1) as usize;
    let base: i64 = e[1..].iter().sum();
    let levi = GroupDesc::sl(n - 1)?;
    let mut levels = vec![RepSum::new(); l];
    for (mu, m) in branch.terms() {
        // within one level all tuples have the same size, so canonical forms stay distinct
        let i = (mu.entries.iter().sum::<i64>() - base) as usize;
        levels[i].add(mu.canonical(&levi), *m);
    }
    Ok(Filtration { levels, levi, index_convention: IndexConvention::SlAscending })
}

/// Reverses an ascending filtration: the one attached to the opposite parabolic.
pub fn reversed(f: &Filtration) -> Filtration {
    let mut levels = f.levels.clone();
    levels.reverse();
    Filtration { levels, ..f.clone() }
}

fn double_interlacing(lambda: &[i64]) -> Vec<Vec<i64>> {
    let n = lambda.len();
    let at = |j: usize| if j < n { lambda[j] } else { 0 };
    let lo: Vec<i64> = (0..n - 1).map(|j| at(j + 2)).collect();
    let hi: Vec<i64> = (0..n - 1).map(at).collect();
    boxes(&lo, &hi).into_iter().filter(|m| m.windows(2).all(|p| p[0] >= p[1])).collect()
}

fn is_double_interlacing(lambda: &[i64], mu: &[i64]) -> bool {
    let n = lambda.len();
    let at = |j: usize| if j < n { lambda[j] } else { 0 };
    mu.len() + 1 == n
        && mu.windows(2).all(|p| p[0] >= p[1])
        && (0..n - 1).all(|j| at(j) >= mu[j] && mu[j] >= at(j + 2))
}

fn degrees(lambda: &[i64], mu: &[i64]) -> Vec<u64> {
    let mut all: Vec<i64> = lambda.iter().chain(mu).copied().collect();
    all.push(0);
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.chunks(2).map(|c| (c[0] - c[1]) as u64).collect()
}

/// The degrees `x_i − y_i` of the binary-form factors of the multiplicity space
/// of `μ` in `V(λ)|_{SL_2 × Sp_{2n-2}}`.
pub fn sp_multiplicity_space(n: u32, lambda: &DominantWeight, mu: &[i64]) -> Result<Vec<u64>> {
    let g = GroupDesc::sp(n)?;
    let lambda = check(&g, lambda)?;
    if !is_double_interlacing(&lambda.entries, mu) {
        return Err(domain!("{:?} does not doubly interlace {:?}", mu, lambda.entries));
    }
    Ok(degrees(&lambda.entries, mu))
}

/// `Sp_2n ↓ Sp_{2n-2}` with the product-formula multiplicities.
pub fn branch_sp(n: u32, lambda: &DominantWeight) -> Result<RepSum> {
    if n < 2 {
        return Err(domain!("Sp branching needs n >= 2"));
    }
    let g = GroupDesc::sp(n)?;
    let lambda = check(&g, lambda)?;
    let levi = GroupDesc::sp(n - 1)?;
    Ok(RepSum::from_terms(double_interlacing(&lambda.entries).into_iter().map(|mu| {
        let m = degrees(&lambda.entries, &mu).iter().map(|d| d + 1).product();
        (sub(&levi, mu), m)
    })))
}

/// Character of `⊗ V_{d_i}` as coefficients of `q^{-D}, q^{-D+2}, … , q^{D}`, `D = Σ d_i`.
fn sl2_character(degs: &[u64]) -> Vec<u64> {
    let mut poly = vec![1u64];
    for &d in degs {
        let mut next = vec![0u64; poly.len() + d as usize];
        for (i, &c) in poly.iter().enumerate() {
            for j in 0..=d as usize {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    poly
}

/// Symmetric filtration `Q_{-k} … Q_k` for `Sp_2n ⊃ P`: each `μ` is spread over the
/// weights of its multiplicity space `⊗ V_{d_i}` under the central one-parameter
/// subgroup, one copy per weight.
pub fn filtration_sp(n: u32, lambda: &DominantWeight) -> Result<Filtration> {
    let branch = branch_sp(n, lambda)?;
    let mut placed: Vec<(i64, DominantWeight, u64)> = Vec::new();
    let mut k = 0i64;
    for (mu, _) in branch.terms() {
        let degs = degrees(&lambda.entries, &mu.entries);
        let total: u64 = degs.iter().sum();
        k = k.max(total as i64);
        for (i, c) in sl2_character(&degs).into_iter().enumerate() {
            placed.push((2 * i as i64 - total as i64, mu.clone(), c));
        }
    }
    let mut levels = vec![RepSum::new(); (2 * k + 1) as usize];
    for (w, mu, c) in placed {
        levels[(w + k) as usize].add(mu, c);
    }
    Ok(Filtration { levels, levi: GroupDesc::sp(n - 1)?, index_convention: IndexConvention::SpSymmetric })
}

/// `SO_{2n+1} ↓ SO_{2n}`: `λ1 ≥ μ1 ≥ … ≥ μ_{n-1} ≥ λ_n ≥ |μ_n|`.
pub fn branch_so_odd(n: u32, lambda: &DominantWeight) -> Result<RepSum> {
    let g = GroupDesc::so(2 * n + 1)?;
    let lambda = DominantWeight::new(&g, lambda.entries.clone(), Label::None)?;
    let levi = GroupDesc::so(2 * n)?;
    let e = &lambda.entries;
    let n = n as usize;
    let mut lo: Vec<i64> = e[1..].to_vec();
    let mut hi: Vec<i64> = e[..n - 1].to_vec();
    lo.push(-e[n - 1]);
    hi.push(e[n - 1]);
    Ok(RepSum::from_terms(boxes(&lo, &hi).into_iter().map(|m| (sub(&levi, m), 1))))
}

/// `SO_{2n} ↓ SO_{2n-1}`: `λ1 ≥ μ1 ≥ … ≥ λ_{n-1} ≥ μ_{n-1} ≥ |λ_n|`.
pub fn branch_so_even(n: u32, lambda: &DominantWeight) -> Result<RepSum> {
    if n < 2 {
        return Err(domain!("SO_2n branching needs n >= 2"));
    }
    let g = GroupDesc::so(2 * n)?;
    let lambda = DominantWeight::new(&g, lambda.entries.clone(), Label::None)?;
    let levi = GroupDesc::so(2 * n - 1)?;
    let e = &lambda.entries;
    let n = n as usize;
    let mut lo: Vec<i64> = e[1..n - 1].to_vec();
    lo.push(e[n - 1].abs());
    let hi: Vec<i64> = e[..n - 1].to_vec();
    Ok(RepSum::from_terms(boxes(&lo, &hi).into_iter().map(|m| (sub(&levi, m), 1))))
}

fn sign_label(positive: bool) -> Label {
    if positive {
        Label::Plus
    } else {
        Label::Minus
    }
}

/// `O_N ↓ O_{N-1}` on labelled irreducibles.
///
/// Odd `N`: pairs `μ, μ'` (last entry negated) merge into one `empty` term;
/// summands with `μ_n = 0` get [`Label::Unknown`], their sign being left open.
/// Even `N`: `(λ, ±)` gives `μ` the sign `±(−1)^{|μ|}` of `−I`; `(λ, empty)` gives
/// both signs of every `μ`.
pub fn restrict_o(big_n: u32, irrep: &DominantWeight) -> Result<RepSum> {
    let g = GroupDesc::o(big_n)?;
    let irrep = check(&g, irrep)?;
    if big_n < 3 {
        return Err(domain!("O_N restriction needs N >= 3"));
    }
    let plain = DominantWeight { entries: irrep.entries.clone(), label: Label::None };
    let mut out = RepSum::new();
    if big_n % 2 == 1 {
        let n = (big_n - 1) / 2;
        for (mu, _) in branch_so_odd(n, &plain)?.terms() {
            let last = *mu.entries.last().unwrap_or(&0);
            if last < 0 {
                continue;
            }
            let label = if last > 0 { Label::Empty } else { Label::Unknown };
            out.add(DominantWeight { entries: mu.entries.clone(), label }, 1);
        }
    } else {
        let n = big_n / 2;
        for (mu, _) in branch_so_even(n, &plain)?.terms() {
            let even = mu.boxes() % 2 == 0;
            let e = mu.entries.clone();
            match irrep.label {
                Label::Empty => {
                    out.add(DominantWeight { entries: e.clone(), label: Label::Plus }, 1);
                    out.add(DominantWeight { entries: e, label: Label::Minus }, 1);
                }
                Label::Plus => out.add(DominantWeight { entries: e, label: sign_label(even) }, 1),
                Label::Minus => out.add(DominantWeight { entries: e, label: sign_label(!even) }, 1),
                _ => out.add(DominantWeight { entries: e, label: Label::Unknown }, 1),
            }
        }
    }
    Ok(out)
}

/// `G2 ↓ SL3` by Gelfand–Zetlin patterns `(a, b, c)` with
/// `m1 + m2 ≥ a ≥ m2 ≥ b ≥ 0`, `a ≥ c ≥ b`, each contributing `Σ^{(m1+c, a−m2+b, 0)} C³`.
pub fn branch_g2_sl3(m1: u32, m2: u32) -> RepSum {
    let (m1, m2) = (m1 as i64, m2 as i64);
    let mut out = RepSum::new();
    for a in m2..=m1 + m2 {
        for b in 0..=m2 {
            for c in b..=a {
                let w = vec![m1 + c, a - m2 + b, 0];
                out.add(DominantWeight { entries: w, label: Label::None }, 1);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::irrep_dim_u64;

    fn w(e: &[i64]) -> DominantWeight {
        DominantWeight { entries: e.to_vec(), label: Label::None }
    }

    fn rs(items: &[(&[i64], u64)]) -> RepSum {
        RepSum::from_terms(items.iter().map(|(e, m)| (w(e), *m)))
    }

    fn dim_sum(levi: &GroupDesc, s: &RepSum) -> u64 {
        s.terms()
            .iter()
            .map(|(mu, m)| {
                let plain = DominantWeight { entries: mu.entries.clone(), label: Label::None };
                m * irrep_dim_u64(&levi.special(), &plain).unwrap()
            })
            .sum()
    }

    #[test]
    fn sl_examples() {
        let b = branch_sl(3, &w(&[2, 1, 0])).unwrap();
        assert_eq!(b, rs(&[(&[2, 1], 1), (&[2, 0], 1), (&[1, 1], 1), (&[1, 0], 1)]));
        assert_eq!(dim_sum(&GroupDesc::sl(2).unwrap(), &b), 8);
        let b = branch_sl(4, &w(&[1, 1, 0, 0])).unwrap();
        assert_eq!(b, rs(&[(&[1, 1, 0], 1), (&[1, 0, 0], 1)]));
        assert_eq!(branch_sl(3, &w(&[0, 0, 0])).unwrap(), rs(&[(&[0, 0], 1)]));
        assert!(branch_sl(1, &w(&[0])).is_err());
    }

    #[test]
    fn sl_filtrations() {
        let f = filtration_sl(4, &w(&[3, 2, 1, 0])).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.q(1).unwrap(), &rs(&[(&[2, 1, 0], 1)]));
        assert_eq!(f.q(2).unwrap(), &rs(&[(&[1, 0, 0], 1), (&[2, 2, 0], 1), (&[3, 1, 0], 1)]));
        assert_eq!(f.q(3).unwrap(), &rs(&[(&[1, 1, 0], 1), (&[2, 0, 0], 1), (&[3, 2, 0], 1)]));
        assert_eq!(f.q(4).unwrap(), &rs(&[(&[2, 1, 0], 1)]));
        let f = filtration_sl(4, &w(&[3, 3, 0, 0])).unwrap();
        let expect: [&[i64]; 4] = [&[3, 0, 0], &[3, 1, 0], &[3, 2, 0], &[3, 3, 0]];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(f.q(i + 1).unwrap(), &rs(&[(e, 1)]));
        }
        for n in 2..6u32 {
            let mut e = vec![0; n as usize];
            e[0] = 1;
            let f = filtration_sl(n, &w(&e)).unwrap();
            assert_eq!(f.len(), 2);
            assert_eq!(f.q(1).unwrap().len(), 1);
            if n >= 3 {
                assert_eq!(f.q(2).unwrap().terms()[0].0.entries[0], 1);
            }
        }
    }

    #[test]
    fn sp_examples() {
        assert_eq!(branch_sp(2, &w(&[1, 1])).unwrap(), rs(&[(&[1], 2), (&[0], 1)]));
        assert_eq!(branch_sp(3, &w(&[1, 1, 1])).unwrap(), rs(&[(&[1, 1], 2), (&[1, 0], 1)]));
        assert_eq!(branch_sp(4, &w(&[1, 0, 0, 0])).unwrap(), rs(&[(&[1, 0, 0], 1), (&[0, 0, 0], 2)]));
        assert_eq!(sp_multiplicity_space(3, &w(&[1, 1, 1]), &[1, 1]).unwrap(), vec![0, 0, 1]);
        assert_eq!(sp_multiplicity_space(3, &w(&[2, 0, 0]), &[0, 0]).unwrap(), vec![2, 0, 0]);
        assert_eq!(sp_multiplicity_space(3, &w(&[2, 1, 0]), &[2, 1]).unwrap(), vec![0, 0, 0]);
        assert!(sp_multiplicity_space(3, &w(&[1, 1, 1]), &[0, 0]).is_err());
    }

    #[test]
    fn sp_worked_filtrations() {
        for n in 2..6u32 {
            let m = (n - 1) as usize;
            let z = vec![0i64; m];
            let mut one = z.clone();
            one[0] = 1;
            let mut two = z.clone();
            two[0] = 2;
            let mut wedge = z.clone();
            if m >= 2 {
                wedge[1] = 1;
            }
            wedge[0] = 1;

            let mut std = vec![0i64; n as usize];
            std[0] = 1;
            let f = filtration_sp(n, &w(&std)).unwrap();
            assert_eq!(f.levels, vec![rs(&[(&z, 1)]), rs(&[(&one, 1)]), rs(&[(&z, 1)])]);

            let mut sym = vec![0i64; n as usize];
            sym[0] = 2;
            let f = filtration_sp(n, &w(&sym)).unwrap();
            assert_eq!(
                f.levels,
                vec![
                    rs(&[(&z, 1)]),
                    rs(&[(&one, 1)]),
                    rs(&[(&two, 1), (&z, 1)]),
                    rs(&[(&one, 1)]),
                    rs(&[(&z, 1)])
                ]
            );

            let mut l2 = vec![0i64; n as usize];
            l2[0] = 1;
            l2[1] = 1;
            let f = filtration_sp(n, &w(&l2)).unwrap();
            assert_eq!(f.k(), 1);
            assert_eq!(f.sym(-1).unwrap(), &rs(&[(&one, 1)]));
            assert_eq!(f.sym(1).unwrap(), &rs(&[(&one, 1)]));
            if m >= 2 {
                assert_eq!(f.sym(0).unwrap(), &rs(&[(&wedge, 1), (&z, 1)]));
            }
        }
    }

    #[test]
    fn so_examples() {
        assert_eq!(branch_so_odd(2, &w(&[1, 0])).unwrap(), rs(&[(&[0, 0], 1), (&[1, 0], 1)]));
        assert_eq!(
            branch_so_odd(2, &w(&[1, 1])).unwrap(),
            rs(&[(&[1, 1], 1), (&[1, -1], 1), (&[1, 0], 1)])
        );
        assert_eq!(branch_so_odd(3, &w(&[0, 0, 0])).unwrap(), rs(&[(&[0, 0, 0], 1)]));
        assert_eq!(branch_so_even(3, &w(&[1, 1, 1])).unwrap(), rs(&[(&[1, 1], 1)]));
        assert_eq!(branch_so_even(2, &w(&[3, -3])).unwrap(), rs(&[(&[3], 1)]));
        assert_eq!(branch_so_even(4, &w(&[1, 0, 0, 0])).unwrap(), rs(&[(&[1, 0, 0], 1), (&[0, 0, 0], 1)]));
    }

    #[test]
    fn o_restrictions() {
        let o5 = GroupDesc::o(5).unwrap();
        let v = DominantWeight::new(&o5, vec![1, 1], Label::Plus).unwrap();
        let r = restrict_o(5, &v).unwrap();
        assert_eq!(
            r.terms(),
            &[
                (DominantWeight { entries: vec![1, 0], label: Label::Unknown }, 1),
                (DominantWeight { entries: vec![1, 1], label: Label::Empty }, 1)
            ]
        );
        let o8 = GroupDesc::o(8).unwrap();
        let v = DominantWeight::new(&o8, vec![1, 0, 0, 0], Label::Plus).unwrap();
        let r = restrict_o(8, &v).unwrap();
        assert_eq!(
            r.terms(),
            &[
                (DominantWeight { entries: vec![0, 0, 0], label: Label::Plus }, 1),
                (DominantWeight { entries: vec![1, 0, 0], label: Label::Minus }, 1)
            ]
        );
        let v = DominantWeight::new(&o8, vec![0, 0, 0, 0], Label::Plus).unwrap();
        assert_eq!(
            restrict_o(8, &v).unwrap().terms(),
            &[(DominantWeight { entries: vec![0, 0, 0], label: Label::Plus }, 1)]
        );
        let v = DominantWeight::new(&o8, vec![0, 0, 0, 0], Label::Empty);
        assert!(v.is_err());
    }

    #[test]
    fn g2_examples() {
        let sl3 = GroupDesc::sl(3).unwrap();
        let b = branch_g2_sl3(0, 1);
        assert_eq!(b, rs(&[(&[0, 0, 0], 1), (&[1, 0, 0], 1), (&[1, 1, 0], 1)]));
        assert_eq!(dim_sum(&sl3, &b), 7);
        let b = branch_g2_sl3(0, 2);
        assert_eq!(
            b,
            rs(&[
                (&[2, 0, 0], 1),
                (&[2, 2, 0], 1),
                (&[2, 1, 0], 1),
                (&[1, 0, 0], 1),
                (&[1, 1, 0], 1),
                (&[0, 0, 0], 1)
            ])
        );
        let b = branch_g2_sl3(1, 0);
        assert_eq!(b, rs(&[(&[1, 0, 0], 1), (&[1, 1, 0], 1), (&[2, 1, 0], 1)]));
        assert_eq!(dim_sum(&sl3, &b), 14);
    }

    #[test]
    fn filtration_dimension_sum() {
        let f = filtration_sp(3, &w(&[2, 1, 1])).unwrap();
        let total: u64 = f.levels.iter().map(|l| dim_sum(&f.levi, l)).sum();
        let g = GroupDesc::sp(3).unwrap();
        assert_eq!(total, irrep_dim_u64(&g, &w(&[2, 1, 1])).unwrap());
    }
}
