//! Weyl-orbit combinatorics for `O_2n` and the check that an `R`-representation
//! of `SO_2n` with `λ_n = 0` stays `R` for both of its extensions to `O_2n`.
//!
//! `W(O_2n) = (Z/2)^n ⋊ S_n` acts by signed permutations. The involution `h`
//! with `k` eigenvalues `-1` is normalised to the sign change of the first `k`
//! coordinates; a weight is `h`-regular when `h` moves it.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::classify::classify;
use crate::error::{domain, Error, Result};
use crate::freudenthal::WeightSystem;
use crate::group::{DominantWeight, Family, GroupDesc, Label};
use crate::partition::partitions_bounded;
use crate::reduction::{binom, weight_string, Check, Rel, Step};
use crate::roots::RootData;

/// Largest rank [`enumerate_orbit`] accepts unless told otherwise.
pub const DEFAULT_ORBIT_BOUND: usize = 8;

/// Zero count and sizes of the equal-absolute-value blocks of a weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightShape {
    n: usize,
    zeros: usize,
    blocks: Vec<usize>,
}

impl WeightShape {
    pub fn new(n: usize, zeros: usize, mut blocks: Vec<usize>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(domain!("empty block in shape"));
        }
        if zeros + blocks.iter().sum::<usize>() != n {
            return Err(domain!("shape blocks do not add up to n = {n}"));
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(WeightShape { n, zeros, blocks })
    }

    /// Shape of `chi`.
    pub fn of(chi: &[i64]) -> Self {
        let mut abs: Vec<i64> = chi.iter().map(|x| x.abs()).collect();
        abs.sort_unstable();
        let zeros = abs.iter().take_while(|&&x| x == 0).count();
        let mut blocks = Vec::new();
        let mut i = zeros;
        while i < abs.len() {
            let j = abs[i..].iter().take_while(|&&x| x == abs[i]).count();
            blocks.push(j);
            i += j;
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        WeightShape { n: chi.len(), zeros, blocks }
    }

    /// Every shape of rank `n`, sorted.
    pub fn all(n: usize) -> Vec<WeightShape> {
        let mut out = Vec::new();
        for zeros in 0..=n {
            let rest = (n - zeros) as u32;
            for p in partitions_bounded(rest, n, rest) {
                let blocks = p.parts().iter().map(|&x| x as usize).collect();
                out.push(WeightShape { n, zeros, blocks });
            }
        }
        out.sort();
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// A weight of this shape: zeros first, then block `j` filled with `j + 1`.
    pub fn representative(&self) -> Vec<i64> {
        let mut v = vec![0; self.zeros];
        for (j, &b) in self.blocks.iter().enumerate() {
            v.extend(core::iter::repeat_n((j + 1) as i64, b));
        }
        v
    }

    fn block_factorials(&self) -> BigUint {
        self.blocks.iter().fold(BigUint::one(), |acc, &b| acc * factorial(b))
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// `|[χ]| = 2^{n-n0} · n! / (n0! · n1! ⋯ nm!)`.
pub fn orbit_size(shape: &WeightShape) -> BigUint {
    pow2(shape.n - shape.zeros) * factorial(shape.n) / (factorial(shape.zeros) * shape.block_factorials())
}

/// Number of orbit elements fixed by the sign change of the first `k` entries,
/// i.e. with their first `k` coordinates zero.
pub fn fixed_count(shape: &WeightShape, k: usize) -> Result<BigUint> {
    if k == 0 || k > shape.n {
        return Err(domain!("k = {k} outside 1..={}", shape.n));
    }
    if shape.zeros < k {
        return Ok(BigUint::zero());
    }
    Ok(pow2(shape.n - shape.zeros) * factorial(shape.n - k)
        / (factorial(shape.zeros - k) * shape.block_factorials()))
}

/// Orbit size with fixed and regular counts for every `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitStats {
    pub shape: WeightShape,
    pub orbit_size: BigUint,
    fixed: Vec<BigUint>,
}

impl OrbitStats {
    pub fn new(shape: &WeightShape) -> Self {
        let fixed = (1..=shape.n).map(|k| fixed_count(shape, k).unwrap_or_default()).collect();
        OrbitStats { shape: shape.clone(), orbit_size: orbit_size(shape), fixed }
    }

    pub fn fixed_count(&self, k: usize) -> Result<BigUint> {
        self.fixed.get(k.wrapping_sub(1)).cloned().ok_or_else(|| domain!("k = {k} outside 1..={}", self.shape.n))
    }

    pub fn regular_count(&self, k: usize) -> Result<BigUint> {
        Ok(&self.orbit_size - self.fixed_count(k)?)
    }

    /// `(1/2)(|[χ]| - |[χ]^h|) · dim V_χ`, the lower bound for the codimension of
    /// either eigenspace of `h` on the orbit's weight spaces.
    pub fn codim_bound(&self, k: usize, weight_dim: u64) -> Result<BigUint> {
        Ok(self.regular_count(k)? * weight_dim / 2u32)
    }
}

/// `F(n, a) = (1/2) 2^a (a/n) binom(n, a)`, the least `(1/2)(|[χ]| - |[χ]^h|)`
/// over weights with exactly `a` nonzero entries, for `h` a single sign change.
pub fn min_orbit_f(n: usize, a: usize) -> Result<Ratio<BigUint>> {
    if a == 0 || a > n {
        return Err(domain!("a = {a} outside 1..={n}"));
    }
    let num = pow2(a) * a * binom(n as u64, a as u64);
    Ok(Ratio::new(num, BigUint::from(2 * n)))
}

/// `2^{n-n0} binom(n, n0)`, the least orbit size among weights with `n0` zeros.
pub fn min_orbit_with_zeros(n: usize, zeros: usize) -> BigUint {
    pow2(n.saturating_sub(zeros)) * binom(n as u64, zeros as u64)
}

/// `dim O_2n - dim (O_k × O_{2n-k}) = (2n - k) k`.
pub fn centralizer_codim(n: u64, k: u64) -> u64 {
    (2 * n - k) * k
}

/// The `W(O_2n)`-orbit of `chi`, capped at rank [`DEFAULT_ORBIT_BOUND`].
pub fn enumerate_orbit(chi: &[i64]) -> Result<BTreeSet<Vec<i64>>> {
    enumerate_orbit_within(chi, DEFAULT_ORBIT_BOUND)
}

pub fn enumerate_orbit_within(chi: &[i64], bound: usize) -> Result<BTreeSet<Vec<i64>>> {
    if chi.len() > bound {
        return Err(Error::Resource(format!("orbit enumeration for rank {} exceeds bound {bound}", chi.len())));
    }
    let mut perm: Vec<i64> = chi.iter().map(|x| x.abs()).collect();
    perm.sort_unstable();
    let mut out = BTreeSet::new();
    loop {
        let nonzero: Vec<usize> = (0..perm.len()).filter(|&i| perm[i] != 0).collect();
        for mask in 0u64..(1u64 << nonzero.len()) {
            let mut w = perm.clone();
            for (bit, &i) in nonzero.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    w[i] = -w[i];
                }
            }
            out.insert(w);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [i64]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Elements of `orbit` moved by the sign change of the first `k` entries.
pub fn regular_in(orbit: &BTreeSet<Vec<i64>>, k: usize) -> usize {
    orbit.iter().filter(|w| w.iter().take(k).any(|&x| x != 0)).count()
}

/// `χ - kα`, a weight of `V(λ)` whenever `k` lies between 0 and `⟨χ, α^∨⟩`.
pub fn saturation_step(g: &GroupDesc, lambda: &DominantWeight, chi: &[i64], alpha: &[i64], k: i64) -> Result<Vec<i64>> {
    if g.family() == Family::G2 {
        return Err(Error::Unsupported("saturation steps use ε-coordinates".to_string()));
    }
    let ws = WeightSystem::new(&g.special(), &DominantWeight { entries: lambda.entries.clone(), label: Label::None })?;
    let rd = RootData::of(&g.special());
    saturate(&ws, &rd, chi, alpha, k)
}

fn saturate(ws: &WeightSystem, rd: &RootData, chi: &[i64], alpha: &[i64], k: i64) -> Result<Vec<i64>> {
    let neg: Vec<i64> = alpha.iter().map(|x| -x).collect();
    if alpha.len() != chi.len() || !rd.positive.iter().any(|r| r.as_slice() == alpha || *r == neg) {
        return Err(domain!("{alpha:?} is not a root"));
    }
    if ws.multiplicity(chi) == 0 {
        return Err(domain!("{chi:?} is not a weight"));
    }
    let p = rd.coroot_pairing(chi, alpha);
    if k < p.min(0) || k > p.max(0) {
        return Err(domain!("k = {k} not between 0 and <chi, alpha^v> = {p}"));
    }
    let out: Vec<i64> = chi.iter().zip(alpha).map(|(x, a)| x - k * a).collect();
    if ws.multiplicity(&out) == 0 {
        return Err(Error::VerificationFailed(format!("{out:?} should be a weight by saturation")));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// the extension check

/// Replay of the argument that both extensions `V^±` of an `R`-representation
/// `V` of `SO_2n` with `λ_n = 0` have trivial generic stabilizer in `O_2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub n: usize,
    pub weight: Vec<i64>,
    pub steps: Vec<Step>,
}

impl StabilizerReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.checks.iter().all(Check::holds))
    }

    pub fn check_count(&self) -> usize {
        self.steps.iter().map(|s| s.checks.len()).sum()
    }
}

impl Serialize for StabilizerReport {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("StabilizerReport", 4)?;
        st.serialize_field("group", &format!("O_{}", 2 * self.n))?;
        st.serialize_field("weight", &weight_string(&DominantWeight { entries: self.weight.clone(), label: Label::None }))?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("steps", &self.steps)?;
        st.end()
    }
}

struct Report {
    n: usize,
    rd: RootData,
    ws: WeightSystem,
    steps: Vec<Step>,
}

fn check(name: impl Into<String>, lhs: impl Into<BigInt>, op: Rel, rhs: impl Into<BigInt>) -> Check {
    Check { name: name.into(), lhs: lhs.into(), op, rhs: rhs.into() }
}

fn big(x: BigUint) -> BigInt {
    BigInt::from(x)
}

fn nonzero(w: &[i64]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

/// Sorted absolute values: one label per `W(O_2n)`-orbit.
fn orbit_key(w: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = w.iter().map(|x| x.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn eps(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// `ε_i - ε_j` (`sign = -1`) or `ε_i + ε_j` (`sign = 1`), zero-based indices.
fn root(n: usize, i: usize, j: usize, sign: i64) -> Vec<i64> {
    let mut v = eps(n, i);
    v[j] += sign;
    v
}

impl Report {
    fn n2(&self) -> BigInt {
        BigInt::from((self.n * self.n) as u64)
    }

    fn f(&self, a: usize) -> BigInt {
        let r = min_orbit_f(self.n, a).expect("1 <= a <= n");
        big(r.to_integer())
    }

    fn step(&mut self, rule: &'static str, citation: &str, checks: Vec<Check>) {
        self.steps.push(Step { rule, citation: citation.to_string(), checks, child: None });
    }

    fn sat(&self, chi: &[i64], alpha: &[i64], k: i64) -> Result<Vec<i64>> {
        saturate(&self.ws, &self.rd, chi, alpha, k)
    }

    /// Checks that the witnesses are weights in pairwise distinct orbits, that
    /// each `F(n, a)` is a true lower bound for its orbit, and returns `Σ F(n, a)`.
    fn witnesses(&self, checks: &mut Vec<Check>, list: &[Vec<i64>]) -> BigInt {
        let mut total = BigInt::zero();
        let mut keys = BTreeSet::new();
        for w in list {
            let s = weight_string(&DominantWeight { entries: w.clone(), label: Label::None });
            checks.push(check(format!("multiplicity of {s}"), self.ws.multiplicity(w), Rel::Gt, 0));
            keys.insert(orbit_key(w));
            let a = nonzero(w);
            let stats = OrbitStats::new(&WeightShape::of(w));
            let half = big(stats.regular_count(1).expect("k = 1") / 2u32);
            checks.push(check(format!("(1/2)(|[{s}]| - |[{s}]^h|) against F(n, {a})"), half, Rel::Ge, self.f(a)));
            total += self.f(a);
        }
        checks.push(check("pairwise distinct orbits", keys.len(), Rel::Eq, list.len()));
        total
    }

    /// First weight reached from `λ` by saturation along simple roots (breadth
    /// first, roots in simple-root order) that satisfies `want`.
    fn search(&self, lambda: &[i64], want: impl Fn(&[i64]) -> bool) -> Result<Option<Vec<i64>>> {
        const CAP: usize = 200_000;
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.to_vec());
        queue.push_back(lambda.to_vec());
        while let Some(w) = queue.pop_front() {
            if want(&w) {
                return Ok(Some(w));
            }
            for a in &self.rd.simple {
                for k in 1..=self.rd.coroot_pairing(&w, a) {
                    let next = self.sat(&w, a, k)?;
                    if seen.insert(next.clone()) {
                        if seen.len() > CAP {
                            return Err(Error::Resource("witness search exceeded its cap".to_string()));
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Replays the decision tree for `O_2n`, `λ` dominant for `SO_2n` with
/// `λ_n = 0` and `V(λ)` an `R`-representation. Fails with `VerificationFailed`
/// if any recomputed inequality does not hold.
pub fn verify_thm_a1(big_n: u32, lambda: &[i64]) -> Result<StabilizerReport> {
    let report = stabilizer_report(big_n, lambda)?;
    if let Some(bad) = report.steps.iter().flat_map(|s| s.checks.iter().map(move |c| (s.rule, c))).find(|(_, c)| !c.holds()) {
        return Err(Error::VerificationFailed(format!(
            "{}: {} ({} {} {})",
            bad.0,
            bad.1.name,
            bad.1.lhs,
            bad.1.op.symbol(),
            bad.1.rhs
        )));
    }
    Ok(report)
}

/// Like [`verify_thm_a1`] but returns the report even when a check fails.
pub fn stabilizer_report(big_n: u32, lambda: &[i64]) -> Result<StabilizerReport> {
    if big_n % 2 == 1 || big_n < 4 {
        return Err(domain!("need N = 2n with n >= 2, got {big_n}"));
    }
    let n = (big_n / 2) as usize;
    let g = GroupDesc::so(big_n)?;
    let weight = DominantWeight::of(&g, lambda)?;
    if lambda[n - 1] != 0 {
        return Err(domain!("need lambda_n = 0"));
    }
    if !classify(&g, &weight)?.is_r() {
        return Err(Error::NotApplicable(format!("{} is an E-representation of {g}", weight_string(&weight))));
    }
    let mut r = Report { n, rd: RootData::of(&g), ws: WeightSystem::new(&g, &weight)?, steps: Vec::new() };

    r.step(
        "A1_NO_ORDER_FOUR",
        "an h with h^2 = -1 has isotropic +i and -i eigenspaces of dimension n each, so det h = 1; no computation",
        Vec::new(),
    );
    let mut ks = Vec::new();
    for k in (1..=n).step_by(2) {
        ks.push(check(
            format!("(2n - k)k for k = {k} against n^2"),
            centralizer_codim(n as u64, k as u64),
            Rel::Le,
            (n * n) as u64,
        ));
    }
    ks.push(check("(2n - k)k at k = 1 equals 2n - 1", centralizer_codim(n as u64, 1), Rel::Eq, 2 * n as u64 - 1));
    ks.push(check("(2n - k)k at k = n equals n^2", centralizer_codim(n as u64, n as u64), Rel::Eq, (n * n) as u64));
    r.step(
        "A1_ODD_K",
        "replacing h by -h leaves an odd number k <= n of eigenvalues -1; codim of the centralizer is (2n - k)k",
        ks,
    );

    let lam = lambda.to_vec();
    match n {
        10.. => large_rank(&mut r, &lam)?,
        6..=9 => middle_rank(&mut r, &lam)?,
        4 | 5 => rank_four_five(&mut r, &lam)?,
        3 => rank_three(&mut r, &lam)?,
        _ => rank_two(&mut r, &lam)?,
    }
    Ok(StabilizerReport { n, weight: lam, steps: r.steps })
}

fn large_rank(r: &mut Report, lam: &[i64]) -> Result<()> {
    let n = r.n as u64;
    let witness = r.search(lam, |w| nonzero(w) >= 3)?;
    let Some(w) = witness else {
        return Err(Error::VerificationFailed("no weight with three nonzero entries".to_string()));
    };
    let mut c = vec![check(
        format!("nonzero entries of witness {}", weight_string(&DominantWeight { entries: w.clone(), label: Label::None })),
        nonzero(&w),
        Rel::Ge,
        3,
    )];
    c.push(check("3(n - 3) against (n - 2) + 3", 3 * (n - 3), Rel::Gt, n + 1));
    c.push(check("binom(n, 3) against 2^(n-3)", big(binom(n, 3)), Rel::Lt, big(pow2(r.n - 3))));
    c.push(check(
        "least orbit with at least 3 nonzero entries is 8 binom(n, 3)",
        big(min_orbit_with_zeros(r.n, r.n - 3)),
        Rel::Eq,
        big(binom(n, 3) * 8u32),
    ));
    // (1/2) · 8 binom(n,3) · 3/n > n^2, multiplied through by n
    c.push(check("12 binom(n, 3) against n^3", big(binom(n, 3) * 12u32), Rel::Gt, n * n * n));
    c.push(check("2(n - 1)(n - 2) against n^2", 2 * (n - 1) * (n - 2), Rel::Gt, n * n));
    r.step(
        "A1_LARGE_RANK",
        "orbits with at least three nonzero entries are smallest for three equal entries once binom(n,3) < 2^(n-3); a 3/n share is h-regular",
        c,
    );
    Ok(())
}

fn middle_rank(r: &mut Report, lam: &[i64]) -> Result<()> {
    let n = r.n;
    let witness = r.search(lam, |w| nonzero(w) >= 3 && nonzero(w) < w.len())?;
    let Some(w) = witness else {
        return Err(Error::VerificationFailed("no weight with three nonzero entries and a zero".to_string()));
    };
    let a = nonzero(&w);
    let s = weight_string(&DominantWeight { entries: w.clone(), label: Label::None });
    let mut c = vec![
        check(format!("nonzero entries of witness {s}"), a, Rel::Ge, 3),
        check(format!("nonzero entries of witness {s}"), a, Rel::Le, n - 1),
    ];
    for b in 3..n {
        c.push(check(
            format!("2^(a-1) binom(n-1, a-1) for a = {b} against n^2"),
            big(pow2(b - 1) * binom(n as u64 - 1, b as u64 - 1)),
            Rel::Gt,
            (n * n) as u64,
        ));
    }
    c.push(check(format!("F(n, {a}) against n^2"), r.f(a), Rel::Gt, r.n2()));
    r.step(
        "A1_MIDDLE_RANK",
        "a weight with a nonzero entries, 3 <= a <= n-1, has more than 2n^2 h-regular orbit elements for 6 <= n <= 9",
        c,
    );
    Ok(())
}

fn rank_four_five(r: &mut Report, lam: &[i64]) -> Result<()> {
    let n = r.n;
    let last = n - 1;
    let nz = nonzero(lam);
    let mut c = Vec::new();
    let n2 = r.n2();
    if nz >= 3 && lam[0] > 1 {
        let chi = r.sat(lam, &root(n, 0, last, -1), 1)?;
        let total = r.witnesses(&mut c, &[lam.to_vec(), chi]);
        c.push(check("orbit bound sum against n^2", total, Rel::Gt, n2));
        r.step("A1_THREE_NONZERO", "lambda and lambda - (e_1 - e_n) lie in orbits with different zero counts", c);
    } else if nz >= 3 && nz == 4 && n == 5 {
        let chi = r.sat(lam, &root(n, 2, 3, 1), 1)?;
        let total = r.witnesses(&mut c, &[lam.to_vec(), chi]);
        c.push(check("orbit bound sum against n^2", total, Rel::Gt, n2));
        r.step("A1_WEDGE_FOUR", "the fourth exterior power also has the weight (1,1,0,0,0)", c);
    } else if nz == 3 {
        // λ = (1,1,1,0,…): (1,0,…,0) is a weight of higher multiplicity
        let chi = r.sat(lam, &root(n, 1, 2, 1), 1)?;
        let m = r.ws.multiplicity(&chi);
        let crude = r.witnesses(&mut c, &[lam.to_vec(), chi.clone()]);
        let with_mult = r.f(3) + r.f(1) * BigInt::from(m);
        if n == 5 {
            c.push(check("F(5,3) + F(5,1) without multiplicity against n^2", crude, Rel::Le, n2.clone()));
            c.push(check("multiplicity of (1,0,0,0,0)", m, Rel::Eq, 4));
            c.push(check("F(5,3) + 4 F(5,1) against n^2", with_mult, Rel::Gt, n2));
            r.step("A1_WEDGE_THREE", "the weight (1,0,0,0,0) of the third exterior power has a 4-dimensional weight space", c);
        } else {
            c.push(check("multiplicity of (1,0,0,0)", m, Rel::Eq, 3));
            c.push(check("F(4,3) + 3 F(4,1) against n^2", with_mult.clone(), Rel::Lt, n2));
            c.push(check("F(4,3) + 3 F(4,1) against (2n - k)k at k = 1", with_mult, Rel::Gt, centralizer_codim(4, 1)));
            let orbit = enumerate_orbit(&chi)?;
            let regular = regular_in(&orbit, 3);
            c.push(check("h-regular elements of [(1,0,0,0)] for k = 3", regular, Rel::Eq, 6));
            let refined = r.f(3) + BigInt::from((regular / 2) as u64 * m);
            c.push(check("F(4,3) + floor(6/2) * 3 against (2n - k)k at k = 3", refined, Rel::Gt, centralizer_codim(4, 3)));
            r.step(
                "A1_WEDGE_THREE_SPLIT_K",
                "for (1,1,1,0) the cases k = 1 and k = 3 are bounded separately using the multiplicity-3 weight (1,0,0,0)",
                c,
            );
        }
    } else if nz == 2 && (lam[0] >= 2 || lam[1] >= 2) {
        let chi = if lam[1] >= 2 { r.sat(lam, &root(n, 1, 2, -1), 1)? } else { r.sat(lam, &root(n, 0, 2, -1), 1)? };
        let total = r.witnesses(&mut c, &[lam.to_vec(), chi]);
        c.push(check("orbit bound sum against n^2", total, Rel::Gt, n2));
        r.step("A1_TWO_NONZERO", "moving one box to the third slot gives a weight with three nonzero entries", c);
    } else if nz == 1 && lam[0] >= 3 {
        let chi = r.sat(lam, &root(n, 0, 1, -1), 1)?;
        let chi2 = r.sat(&chi, &root(n, 0, 2, -1), 1)?;
        let total = r.witnesses(&mut c, &[lam.to_vec(), chi, chi2]);
        c.push(check("orbit bound sum against n^2", total, Rel::Gt, n2));
        r.step("A1_ONE_NONZERO", "two saturation steps give weights with two and three nonzero entries", c);
    } else {
        return Err(Error::VerificationFailed(format!("no route for {lam:?} in rank {n}")));
    }
    Ok(())
}

fn rank_three(r: &mut Report, lam: &[i64]) -> Result<()> {
    let n2 = r.n2();
    let mut c = Vec::new();
    if lam[0] >= 4 {
        let a = root(3, 0, 2, -1);
        let chi = r.sat(lam, &a, 1)?;
        let chi2 = r.sat(lam, &a, 2)?;
        let list = if lam[1] > 0 {
            vec![lam.to_vec(), chi, chi2]
        } else {
            let chi3 = r.sat(&chi, &root(3, 0, 1, -1), 1)?;
            vec![lam.to_vec(), chi, chi2, chi3]
        };
        let total = r.witnesses(&mut c, &list);
        c.push(check("orbit bound sum against n^2", total, Rel::Gt, n2));
        r.step("A1_RANK3_LARGE", "lambda - (e_1 - e_3) and lambda - 2(e_1 - e_3) give further orbits", c);
        return Ok(());
    }
    if [[3, 3, 0], [3, 2, 0], [3, 1, 0], [2, 2, 0]].iter().any(|x| x == lam) {
        let mut found = Vec::new();
        for a in (0..=lam[0]).rev() {
            for b in (0..=a).rev() {
                for d in (0..=b).rev() {
                    let w = vec![a, b, d];
                    if nonzero(&w) >= 2 && r.ws.multiplicity(&w) > 0 && found.len() < 3 {
                        found.push(w);
                    }
                }
            }
        }
        let total = r.witnesses(&mut c, &found);
        c.push(check("orbits found", found.len(), Rel::Eq, 3));
        c.push(check("orbit bound sum against n^2", total, Rel::Gt, n2));
        r.step("A1_RANK3_THREE_ORBITS", "three weights with at least two nonzero entries in distinct orbits", c);
        return Ok(());
    }
    if lam == [3, 0, 0] || lam == [2, 1, 0] {
        let list: Vec<Vec<i64>> =
            if lam[0] == 3 { vec![vec![3, 0, 0], vec![2, 1, 0], vec![1, 1, 1]] } else { vec![vec![2, 1, 0], vec![1, 1, 1]] };
        let total = r.witnesses(&mut c, &list);
        c.push(check("orbit bound sum against (2n - k)k at k = 1", total, Rel::Gt, centralizer_codim(3, 1)));
        let orbit = enumerate_orbit(&[2, 1, 0])?;
        let regular = regular_in(&orbit, 3);
        c.push(check("h-regular elements of [(2,1,0)] for k = 3 against 2 (2n - k)k", regular, Rel::Gt, 2 * centralizer_codim(3, 3)));
        c.push(check("multiplicity of (2,1,0)", r.ws.multiplicity(&[2, 1, 0]), Rel::Gt, 0));
        r.step(
            "A1_RANK3_SPLIT_K",
            "k = 1 from the listed orbits; for k = 3 every nonzero weight is h-regular and [(2,1,0)] alone suffices",
            c,
        );
        return Ok(());
    }
    Err(Error::VerificationFailed(format!("no route for {lam:?} in rank 3")))
}

fn rank_two(r: &mut Report, lam: &[i64]) -> Result<()> {
    if lam[0] < 3 {
        return Err(Error::VerificationFailed(format!("no route for {lam:?} in rank 2")));
    }
    let chi = r.sat(lam, &root(2, 0, 1, -1), 1)?;
    let orbit = enumerate_orbit(&chi)?;
    let s = weight_string(&DominantWeight { entries: chi.clone(), label: Label::None });
    let c = vec![
        check(format!("|first entry| of {s} against |second|"), chi[0].abs(), Rel::Ne, chi[1].abs()),
        check(format!("nonzero entries of {s}"), nonzero(&chi), Rel::Eq, 2),
        check(format!("|[{s}]|"), orbit.len(), Rel::Eq, 8),
        check("h-regular elements against 2 (2n - 1)", regular_in(&orbit, 1), Rel::Gt, 2 * centralizer_codim(2, 1)),
    ];
    r.step("A1_RANK2", "only k = 1 occurs; a weight with distinct nonzero absolute values has 8 regular orbit elements", c);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(n: usize, zeros: usize, blocks: &[usize]) -> WeightShape {
        WeightShape::new(n, zeros, blocks.to_vec()).unwrap()
    }

    fn brute_fixed(chi: &[i64], k: usize) -> usize {
        enumerate_orbit(chi).unwrap().len() - regular_in(&enumerate_orbit(chi).unwrap(), k)
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&shape(5, 4, &[1])), BigUint::from(10u32));
        assert_eq!(orbit_size(&shape(3, 0, &[1, 1, 1])), BigUint::from(48u32));
        assert_eq!(orbit_size(&shape(4, 4, &[])), BigUint::one());
        assert!(WeightShape::new(3, 1, vec![1]).is_err());
        assert!(WeightShape::new(3, 1, vec![2, 0]).is_err());
    }

    #[test]
    fn fixed_counts() {
        let s = shape(3, 2, &[1]);
        assert_eq!(fixed_count(&s, 1).unwrap(), BigUint::from(4u32));
        assert_eq!(brute_fixed(&[0, 0, 1], 1), 4);
        // ratio n0/n
        assert_eq!(fixed_count(&s, 1).unwrap() * 3u32, orbit_size(&s) * 2u32);
        assert_eq!(fixed_count(&s, 3).unwrap(), BigUint::zero());
        let t = shape(4, 3, &[1]);
        assert_eq!(fixed_count(&t, 3).unwrap(), BigUint::from(brute_fixed(&[0, 0, 0, 1], 3)));
        assert!(fixed_count(&t, 0).is_err());
        assert!(fixed_count(&t, 5).is_err());
        let stats = OrbitStats::new(&t);
        assert_eq!(stats.regular_count(3).unwrap(), BigUint::from(6u32));
        assert_eq!(stats.codim_bound(3, 3).unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn f_table() {
        let table: [(usize, &[u32]); 3] = [(5, &[1, 8, 24, 32, 16]), (4, &[1, 6, 12, 8]), (3, &[1, 4, 4])];
        for (n, row) in table {
            for (a, &want) in (1..).zip(row) {
                let f = min_orbit_f(n, a).unwrap();
                assert!(f.is_integer());
                assert_eq!(f.to_integer(), BigUint::from(want), "F({n},{a})");
            }
        }
        assert!(min_orbit_f(3, 0).is_err());
        assert!(min_orbit_f(3, 4).is_err());
    }

    #[test]
    fn centralizer_codims() {
        assert_eq!(centralizer_codim(4, 3), 15);
        for n in 2..10 {
            assert_eq!(centralizer_codim(n, 1), 2 * n - 1);
            assert_eq!(centralizer_codim(n, n), n * n);
        }
    }

    #[test]
    fn orbits_by_enumeration() {
        assert_eq!(enumerate_orbit(&[1, 0, 0, 0, 0]).unwrap().len(), 10);
        assert_eq!(enumerate_orbit(&[0, 0, 0]).unwrap().into_iter().collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
        assert_eq!(enumerate_orbit(&[2, 1, 0]).unwrap().len(), 24);
        assert!(matches!(enumerate_orbit(&[1; 9]), Err(Error::Resource(_))));
        assert_eq!(enumerate_orbit_within(&[1; 9], 9).unwrap().len(), 512);
        for n in 1..=5 {
            for s in WeightShape::all(n) {
                let orbit = enumerate_orbit(&s.representative()).unwrap();
                assert_eq!(BigUint::from(orbit.len()), orbit_size(&s));
                for k in 1..=n {
                    let fixed = orbit.len() - regular_in(&orbit, k);
                    assert_eq!(BigUint::from(fixed), fixed_count(&s, k).unwrap(), "{s:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn least_orbit_rises_then_falls() {
        for n in 1..=20usize {
            let peak = (n as i64 - 2).div_euclid(3) + 1;
            for z in 0..n {
                let (a, b) = (min_orbit_with_zeros(n, z), min_orbit_with_zeros(n, z + 1));
                if (z as i64) < peak {
                    assert!(a <= b, "n={n} z={z}");
                } else {
                    assert!(a > b, "n={n} z={z}");
                }
            }
        }
    }

    #[test]
    fn saturation() {
        let so6 = GroupDesc::so(6).unwrap();
        let l = DominantWeight::of(&so6, &[3, 0, 0]).unwrap();
        assert_eq!(saturation_step(&so6, &l, &[3, 0, 0], &[1, -1, 0], 1).unwrap(), vec![2, 1, 0]);
        assert_eq!(saturation_step(&so6, &l, &[3, 0, 0], &[1, -1, 0], 0).unwrap(), vec![3, 0, 0]);
        assert!(saturation_step(&so6, &l, &[3, 0, 0], &[1, -1, 0], 4).is_err());
        assert!(saturation_step(&so6, &l, &[3, 0, 0], &[2, 0, 0], 1).is_err());
        let so8 = GroupDesc::so(8).unwrap();
        let c = DominantWeight::of(&so8, &[2, 2, 2, 2]).unwrap();
        let out = saturation_step(&so8, &c, &[2, 2, 2, 2], &[0, 0, 1, 1], 2).unwrap();
        assert_eq!(out, vec![2, 2, 0, 0]);
    }

    fn rules(n: u32, l: &[i64]) -> Vec<&'static str> {
        verify_thm_a1(n, l).unwrap().steps.iter().map(|s| s.rule).collect()
    }

    #[test]
    fn wedge_three_in_eight_dimensions() {
        let r = verify_thm_a1(8, &[1, 1, 1, 0]).unwrap();
        let last = r.steps.last().unwrap();
        assert_eq!(last.rule, "A1_WEDGE_THREE_SPLIT_K");
        let refined = last.checks.iter().find(|c| c.name.starts_with("F(4,3) + floor")).unwrap();
        assert_eq!((refined.lhs.clone(), refined.rhs.clone()), (BigInt::from(21), BigInt::from(15)));
        let crude = last.checks.iter().find(|c| c.name.starts_with("F(4,3) + 3 F(4,1) against n^2")).unwrap();
        assert_eq!(crude.lhs, BigInt::from(15));
    }

    #[test]
    fn decision_tree_routes() {
        assert_eq!(rules(6, &[2, 1, 0]).last(), Some(&"A1_RANK3_SPLIT_K"));
        assert_eq!(rules(6, &[3, 0, 0]).last(), Some(&"A1_RANK3_SPLIT_K"));
        assert_eq!(rules(6, &[2, 2, 0]).last(), Some(&"A1_RANK3_THREE_ORBITS"));
        for l in [[4, 0, 0], [4, 2, 0], [5, 0, 0], [4, 4, 0]] {
            assert_eq!(rules(6, &l).last(), Some(&"A1_RANK3_LARGE"), "{l:?}");
        }
        assert_eq!(rules(10, &[1, 1, 1, 0, 0]).last(), Some(&"A1_WEDGE_THREE"));
        assert_eq!(rules(10, &[3, 0, 0, 0, 0]).last(), Some(&"A1_ONE_NONZERO"));
        assert_eq!(rules(4, &[3, 0]), ["A1_NO_ORDER_FOUR", "A1_ODD_K", "A1_RANK2"]);
        assert_eq!(rules(14, &[1, 1, 1, 0, 0, 0, 0]).last(), Some(&"A1_MIDDLE_RANK"));
        let mut big = vec![0; 12];
        big[..3].copy_from_slice(&[2, 1, 1]);
        assert_eq!(rules(24, &big).last(), Some(&"A1_LARGE_RANK"));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(verify_thm_a1(8, &[1, 1, 0, 0]), Err(Error::NotApplicable(_))));
        assert!(matches!(verify_thm_a1(8, &[1, 1, 1, 1]), Err(Error::Domain(_))));
        assert!(matches!(verify_thm_a1(7, &[1, 1, 1]), Err(Error::Domain(_))));
    }

    #[test]
    fn report_json() {
        let s = serde_json::to_string(&verify_thm_a1(4, &[3, 0]).unwrap()).unwrap();
        assert!(s.starts_with(r#"{"group":"O_4","weight":"(3,0)","passed":true,"steps":[{"rule":"A1_NO_ORDER_FOUR""#), "{s}");
    }
}
