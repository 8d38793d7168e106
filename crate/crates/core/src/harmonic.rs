//! Exterior algebra of a symplectic space: wedge monomials with Gaussian-integer
//! coefficients, the contraction `Λ`, the Antonyan Cartan basis of
//! `Λ^4 C^8` and explicit checks on the stabilizer generators of `Λ_0^4 C^8`.
//!
//! Basis vectors are 0-based internally; labels in names and in the Antonyan
//! data are 1-based as printed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::reduction::{binom, Check, Rel, Step};

/// `Z[i]`.
pub type Scalar = Complex<i64>;

const I: Scalar = Complex { re: 0, im: 1 };

fn int(x: i64) -> Scalar {
    Complex::new(x, 0)
}

/// How the symplectic form pairs the basis of `C^{2m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymplecticConvention {
    /// Basis `e_1, f_1, …, e_m, f_m` with `ω(e_i, f_j) = δ_ij`.
    Ef,
    /// Basis `e_1, …, e_{2m}` with `ω(e_i, e_{m+j}) = δ_ij`.
    Shift4,
}

impl SymplecticConvention {
    /// `ω(b_a, b_b)` on basis vectors of `C^{dim}`.
    pub fn omega(self, dim: usize, a: usize, b: usize) -> i64 {
        let m = dim / 2;
        let pair = |x: usize, y: usize| match self {
            SymplecticConvention::Ef => x.is_multiple_of(2) && y == x + 1,
            SymplecticConvention::Shift4 => x < m && y == x + m,
        };
        if pair(a, b) {
            1
        } else if pair(b, a) {
            -1
        } else {
            0
        }
    }

    /// Torus weight of a basis vector: `±ε_i`.
    pub fn weight(self, dim: usize, a: usize) -> (usize, i64) {
        match self {
            SymplecticConvention::Ef => (a / 2, if a.is_multiple_of(2) { 1 } else { -1 }),
            SymplecticConvention::Shift4 => {
                let m = dim / 2;
                if a < m {
                    (a, 1)
                } else {
                    (a - m, -1)
                }
            }
        }
    }
}

/// `coeff · b_{i1} ∧ … ∧ b_{ik}` with strictly increasing indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeMonomial {
    pub indices: Vec<u8>,
    pub coeff: Scalar,
}

impl WedgeMonomial {
    /// Sorts `indices`, folding the sign of the sorting permutation into the
    /// coefficient. `None` when an index repeats.
    pub fn new(indices: &[u8], coeff: Scalar) -> Option<Self> {
        let mut v = indices.to_vec();
        let mut sign = 1;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(WedgeMonomial { indices: v, coeff: coeff * sign })
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }
}

/// A finite sum of wedge monomials in `Λ^• C^{dim}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge {
    dim: usize,
    terms: BTreeMap<Vec<u8>, Scalar>,
}

impl Wedge {
    pub fn zero(dim: usize) -> Self {
        Wedge { dim, terms: BTreeMap::new() }
    }

    /// `b_{i1} ∧ … ∧ b_{ik}` for 0-based indices, in any order.
    pub fn basis(dim: usize, indices: &[u8]) -> Self {
        let mut w = Wedge::zero(dim);
        w.add_raw(indices, Scalar::one());
        w
    }

    /// Same as [`Wedge::basis`] with 1-based labels.
    pub fn labelled(dim: usize, labels: &[u8]) -> Self {
        let idx: Vec<u8> = labels.iter().map(|l| l - 1).collect();
        Wedge::basis(dim, &idx)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_monomial(&mut self, m: &WedgeMonomial) {
        let e = self.terms.entry(m.indices.clone()).or_insert_with(Scalar::zero);
        *e += m.coeff;
        if e.is_zero() {
            self.terms.remove(&m.indices);
        }
    }

    fn add_raw(&mut self, indices: &[u8], coeff: Scalar) {
        if let Some(m) = WedgeMonomial::new(indices, coeff) {
            self.add_monomial(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, indices: &[u8]) -> Scalar {
        self.terms.get(indices).copied().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = WedgeMonomial> + '_ {
        self.terms.iter().map(|(k, &c)| WedgeMonomial { indices: k.clone(), coeff: c })
    }

    /// The common degree of all terms; `None` for zero.
    pub fn degree(&self) -> Result<Option<usize>> {
        let mut d = None;
        for k in self.terms.keys() {
            match d {
                None => d = Some(k.len()),
                Some(x) if x != k.len() => return Err(domain!("mixed wedge degrees {x} and {}", k.len())),
                _ => {}
            }
        }
        Ok(d)
    }

    pub fn scale(&self, c: Scalar) -> Wedge {
        let mut out = Wedge::zero(self.dim);
        for m in self.terms() {
            out.add_monomial(&WedgeMonomial { indices: m.indices, coeff: m.coeff * c });
        }
        out
    }

    pub fn plus(&self, other: &Wedge) -> Wedge {
        let mut out = self.clone();
        for m in other.terms() {
            out.add_monomial(&m);
        }
        out
    }

    pub fn minus(&self, other: &Wedge) -> Wedge {
        self.plus(&other.scale(int(-1)))
    }

    /// `self ∧ other`.
    pub fn wedge(&self, other: &Wedge) -> Wedge {
        let mut out = Wedge::zero(self.dim);
        for a in self.terms() {
            for b in other.terms() {
                let mut idx = a.indices.clone();
                idx.extend_from_slice(&b.indices);
                out.add_raw(&idx, a.coeff * b.coeff);
            }
        }
        out
    }

    /// `v_1 ∧ … ∧ v_N` for vectors given by coordinates.
    pub fn of_vectors(dim: usize, vectors: &[Vec<Scalar>]) -> Wedge {
        let mut out = Wedge::zero(dim);
        out.add_raw(&[], Scalar::one());
        for v in vectors {
            let mut lin = Wedge::zero(dim);
            for (i, &c) in v.iter().enumerate() {
                lin.add_raw(&[i as u8], c);
            }
            out = out.wedge(&lin);
        }
        out
    }
}

/// `Λ(v_1 ∧ … ∧ v_N) = Σ_{i<j} (-1)^{i+j-1} ω(v_i, v_j) v_1 ∧ … v̂_i … v̂_j … ∧ v_N`.
/// Zero on degrees below 2.
pub fn contract_lambda(v: &Wedge, conv: SymplecticConvention) -> Result<Wedge> {
    let mut out = Wedge::zero(v.dim);
    if v.degree()?.is_none_or(|d| d < 2) {
        return Ok(out);
    }
    for m in v.terms() {
        let n = m.indices.len();
        for p in 0..n {
            for q in p + 1..n {
                let w = conv.omega(v.dim, m.indices[p] as usize, m.indices[q] as usize);
                if w == 0 {
                    continue;
                }
                // positions are 1-based in the sign (-1)^{i+j-1}
                let sign = if (p + q) % 2 == 1 { 1 } else { -1 };
                let rest: Vec<u8> =
                    m.indices.iter().enumerate().filter(|&(t, _)| t != p && t != q).map(|(_, &x)| x).collect();
                out.add_raw(&rest, m.coeff * (sign * w));
            }
        }
    }
    Ok(out)
}

/// `dim Λ_0^k C^{2m}`: `binom(2m, k) - binom(2m, k-2)` for `k ≤ m + 1`, else 0.
pub fn harmonic_wedge_dim(m: u64, k: u64) -> u64 {
    let top = binom(2 * m, k);
    let low = if k >= 2 { binom(2 * m, k - 2) } else { Default::default() };
    if top <= low {
        0
    } else {
        u64::try_from(top - low).unwrap_or(u64::MAX)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u8);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

/// Rank over `Q` of an integer matrix given by its columns, by fraction-free
/// elimination with row contents divided out.
fn rank(columns: &[BTreeMap<Vec<u8>, i64>]) -> Result<usize> {
    let mut rows: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for c in columns {
        for k in c.keys() {
            let next = rows.len();
            rows.entry(k.clone()).or_insert(next);
        }
    }
    let mut mat: Vec<Vec<i128>> = columns
        .iter()
        .map(|c| {
            let mut v = vec![0i128; rows.len()];
            for (k, &x) in c {
                v[rows[k]] = x as i128;
            }
            v
        })
        .collect();
    // eliminate on the transposed matrix: each column vector is a row here
    let mut r = 0;
    let width = rows.len();
    for col in 0..width {
        let Some(p) = (r..mat.len()).find(|&i| mat[i][col] != 0) else { continue };
        mat.swap(r, p);
        let pivot = mat[r].clone();
        for row in mat.iter_mut().skip(r + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let mut g = 0i128;
            for (x, &y) in row.iter_mut().zip(&pivot) {
                *x = x
                    .checked_mul(pivot[col])
                    .and_then(|a| f.checked_mul(y).and_then(|b| a.checked_sub(b)))
                    .ok_or(Error::Overflow)?;
                g = gcd(g, *x);
            }
            if g > 1 {
                for x in row.iter_mut() {
                    *x /= g;
                }
            }
        }
        r += 1;
    }
    Ok(r)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lambda_column(dim: usize, idx: &[u8], conv: SymplecticConvention) -> Result<BTreeMap<Vec<u8>, i64>> {
    let img = contract_lambda(&Wedge::basis(dim, idx), conv)?;
    Ok(img.terms().map(|t| (t.indices, t.coeff.re)).collect())
}

/// `dim ker(Λ : Λ^k C^{2m} → Λ^{k-2} C^{2m})`, computed from the matrix of `Λ`.
pub fn kernel_rank(m: usize, k: usize, conv: SymplecticConvention) -> Result<usize> {
    let dim = 2 * m;
    let basis = subsets(dim, k);
    let cols: Vec<_> = basis.iter().map(|b| lambda_column(dim, b, conv)).collect::<Result<_>>()?;
    Ok(basis.len() - rank(&cols)?)
}

/// Kernel dimension of `Λ` on each torus weight space of `Λ^k C^{2m}`.
pub fn kernel_by_weight(m: usize, k: usize, conv: SymplecticConvention) -> Result<BTreeMap<Vec<i64>, usize>> {
    let dim = 2 * m;
    let mut spaces: BTreeMap<Vec<i64>, Vec<Vec<u8>>> = BTreeMap::new();
    for b in subsets(dim, k) {
        let mut w = vec![0i64; m];
        for &a in &b {
            let (i, s) = conv.weight(dim, a as usize);
            w[i] += s;
        }
        spaces.entry(w).or_default().push(b);
    }
    let mut out = BTreeMap::new();
    for (w, basis) in spaces {
        let cols: Vec<_> = basis.iter().map(|b| lambda_column(dim, b, conv)).collect::<Result<_>>()?;
        let ker = basis.len() - rank(&cols)?;
        if ker > 0 {
            out.insert(w, ker);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// monomial maps

/// `b_j ↦ c_j b_{σ(j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    images: Vec<(u8, Scalar)>,
}

impl MonomialMap {
    pub fn identity(dim: usize) -> Self {
        MonomialMap { images: (0..dim).map(|j| (j as u8, Scalar::one())).collect() }
    }

    /// Product of disjoint cycles given with 1-based labels.
    pub fn permutation(dim: usize, cycles: &[&[u8]]) -> Result<Self> {
        let mut m = MonomialMap::identity(dim);
        for cyc in cycles {
            for (t, &a) in cyc.iter().enumerate() {
                let b = cyc[(t + 1) % cyc.len()];
                if a == 0 || b == 0 || a as usize > dim || b as usize > dim {
                    return Err(domain!("label out of range in cycle {cyc:?}"));
                }
                m.images[a as usize - 1].0 = b - 1;
            }
        }
        m.validate()?;
        Ok(m)
    }

    pub fn diagonal(coeffs: &[Scalar]) -> Result<Self> {
        let m = MonomialMap { images: coeffs.iter().enumerate().map(|(j, &c)| (j as u8, c)).collect() };
        m.validate()?;
        Ok(m)
    }

    /// Reads a matrix whose column `j` is the image of `b_j`.
    pub fn from_matrix(columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut images = Vec::new();
        for col in columns {
            let nz: Vec<(usize, Scalar)> = col.iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if nz.len() != 1 {
                return Err(Error::Unsupported("generator is not a monomial matrix".to_string()));
            }
            images.push((nz[0].0 as u8, nz[0].1));
        }
        let m = MonomialMap { images };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let targets: BTreeSet<u8> = self.images.iter().map(|x| x.0).collect();
        if targets.len() != self.images.len() || self.images.iter().any(|(t, c)| *t as usize >= self.images.len() || c.is_zero()) {
            return Err(domain!("not an invertible monomial map"));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &MonomialMap) -> MonomialMap {
        let images = self
            .images
            .iter()
            .map(|&(t, c)| {
                let (u, d) = other.images[t as usize];
                (u, c * d)
            })
            .collect();
        MonomialMap { images }
    }

    /// Whether `ω(g b_a, g b_b) = ω(b_a, b_b)` for all basis pairs.
    pub fn is_symplectic(&self, conv: SymplecticConvention) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (ta, ca) = self.images[a];
                let (tb, cb) = self.images[b];
                ca * cb * conv.omega(n, ta as usize, tb as usize) == int(conv.omega(n, a, b))
            })
        })
    }

    /// Relabels a map written in the [`SymplecticConvention::Shift4`] basis
    /// into the [`SymplecticConvention::Ef`] basis.
    pub fn shift_to_ef(&self) -> MonomialMap {
        let m = self.dim() / 2;
        let to_ef = |a: usize| if a < m { 2 * a } else { 2 * (a - m) + 1 };
        let mut images = vec![(0u8, Scalar::zero()); self.dim()];
        for (a, &(t, c)) in self.images.iter().enumerate() {
            images[to_ef(a)] = (to_ef(t as usize) as u8, c);
        }
        MonomialMap { images }
    }
}

/// Action of a monomial map on `Λ^• C^{dim}`.
pub fn signed_perm_action(g: &MonomialMap, v: &Wedge) -> Result<Wedge> {
    if g.dim() != v.dim {
        return Err(domain!("map on C^{} applied to a wedge in C^{}", g.dim(), v.dim));
    }
    let mut out = Wedge::zero(v.dim);
    for m in v.terms() {
        let mut c = m.coeff;
        let mut idx = Vec::with_capacity(m.indices.len());
        for &a in &m.indices {
            let (t, d) = g.images[a as usize];
            idx.push(t);
            c *= d;
        }
        out.add_raw(&idx, c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Antonyan basis

/// `(i1 j1 k1 l1 | i2 j2 k2 l2) = e_{i1} ∧ e_{j1} ∧ e_{k1} ∧ e_{l1} + e_{i2} ∧ …`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AntonyanElement {
    pub first: [u8; 4],
    pub second: [u8; 4],
}

impl AntonyanElement {
    pub fn to_wedge(&self) -> Wedge {
        Wedge::labelled(8, &self.first).plus(&Wedge::labelled(8, &self.second))
    }

    pub fn name(&self) -> String {
        let f = |q: &[u8; 4]| q.iter().map(|x| x.to_string()).collect::<String>();
        format!("({}|{})", f(&self.first), f(&self.second))
    }
}

const ANTONYAN: [AntonyanElement; 7] = [
    AntonyanElement { first: [1, 2, 3, 4], second: [5, 6, 7, 8] },
    AntonyanElement { first: [1, 3, 5, 7], second: [6, 8, 2, 4] },
    AntonyanElement { first: [1, 5, 6, 2], second: [8, 4, 3, 7] },
    AntonyanElement { first: [1, 6, 8, 3], second: [4, 7, 5, 2] },
    AntonyanElement { first: [1, 8, 4, 5], second: [7, 2, 6, 3] },
    AntonyanElement { first: [1, 4, 7, 6], second: [2, 3, 8, 5] },
    AntonyanElement { first: [1, 7, 2, 8], second: [3, 5, 4, 6] },
];

/// `s_1, …, s_7`, a basis of a Cartan subspace of `Λ^4 C^8`.
pub fn antonyan_basis() -> [AntonyanElement; 7] {
    ANTONYAN
}

/// Whether the first quadruples of `a` and `b` share exactly two labels.
pub fn commuting_criterion(a: &AntonyanElement, b: &AntonyanElement) -> Result<bool> {
    if a == b {
        return Err(domain!("criterion needs two different elements"));
    }
    let common = a.first.iter().filter(|x| b.first.contains(x)).count();
    Ok(common == 2)
}

/// The six elements of the Cartan span lying in `Λ_0^4 C^8`, with their names:
/// `s5 - s2, s3 - s2, s1, s4, s6, s7`.
pub fn traceless_cartan() -> Vec<(String, Wedge)> {
    let s: Vec<Wedge> = ANTONYAN.iter().map(AntonyanElement::to_wedge).collect();
    vec![
        ("s5 - s2".to_string(), s[4].minus(&s[1])),
        ("s3 - s2".to_string(), s[2].minus(&s[1])),
        ("s1".to_string(), s[0].clone()),
        ("s4".to_string(), s[3].clone()),
        ("s6".to_string(), s[5].clone()),
        ("s7".to_string(), s[6].clone()),
    ]
}

/// Coordinates of `v` in `s_1, …, s_7`, if it lies in their span.
pub fn cartan_coordinates(v: &Wedge) -> Option<[Scalar; 7]> {
    let mut c = [Scalar::zero(); 7];
    let mut rebuilt = Wedge::zero(8);
    for (i, s) in ANTONYAN.iter().enumerate() {
        let w = s.to_wedge();
        let lead = w.terms().next()?;
        let x = v.coeff(&lead.indices);
        // lead.coeff is ±1
        c[i] = x * lead.coeff;
        rebuilt = rebuilt.plus(&w.scale(c[i]));
    }
    (rebuilt == *v).then_some(c)
}

// ---------------------------------------------------------------------------
// the generator report

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicReport {
    pub steps: Vec<Step>,
}

impl HarmonicReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.checks.iter().all(Check::holds))
    }
}

impl Serialize for HarmonicReport {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HarmonicReport", 2)?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("steps", &self.steps)?;
        st.end()
    }
}

fn check(name: impl Into<String>, lhs: impl Into<BigInt>, op: Rel, rhs: impl Into<BigInt>) -> Check {
    Check { name: name.into(), lhs: lhs.into(), op, rhs: rhs.into() }
}

fn truth(name: impl Into<String>, ok: bool) -> Check {
    check(name, ok as u8, Rel::Eq, 1)
}

fn step(rule: &'static str, citation: &str, checks: Vec<Check>) -> Step {
    Step { rule, citation: citation.to_string(), checks, child: None }
}

fn scalar_name(c: Scalar) -> String {
    match (c.re, c.im) {
        (1, 0) => "+1".to_string(),
        (-1, 0) => "-1".to_string(),
        (0, 1) => "+i".to_string(),
        (0, -1) => "-i".to_string(),
        (a, b) => format!("{a}{b:+}i"),
    }
}

/// Sign changes of `e_i, e_j, e_{4+i}, e_{4+j}` for the six pairs `i < j ≤ 4`.
fn pair_flips() -> Vec<(String, MonomialMap)> {
    let mut out = Vec::new();
    for i in 0..4usize {
        for j in i + 1..4 {
            let mut d = vec![int(1); 8];
            for a in [i, j, i + 4, j + 4] {
                d[a] = int(-1);
            }
            out.push((format!("sign change of e{} e{} e{} e{}", i + 1, j + 1, i + 5, j + 5), MonomialMap::diagonal(&d).unwrap()));
        }
    }
    out
}

fn half_flip() -> MonomialMap {
    let d: Vec<Scalar> = (0..8).map(|a| int(if a < 4 { -1 } else { 1 })).collect();
    MonomialMap::diagonal(&d).unwrap()
}

fn perm(cycles: &[&[u8]]) -> MonomialMap {
    MonomialMap::permutation(8, cycles).unwrap()
}

fn klein() -> [(String, MonomialMap); 2] {
    [
        ("(12)(34)(56)(78)".to_string(), perm(&[&[1, 2], &[3, 4], &[5, 6], &[7, 8]])),
        ("(13)(24)(57)(68)".to_string(), perm(&[&[1, 3], &[2, 4], &[5, 7], &[6, 8]])),
    ]
}

fn swap_halves() -> MonomialMap {
    perm(&[&[1, 5], &[2, 6], &[3, 7], &[4, 8]])
}

/// Runs every check on the stabilizer data of `Λ^4 C^8` and `Λ_0^4 C^8`, and
/// the kernel facts about `Λ` used alongside them.
pub fn verify_stabilizer_generators() -> Result<HarmonicReport> {
    let report = stabilizer_generator_report()?;
    for s in &report.steps {
        if let Some(c) = s.checks.iter().find(|c| !c.holds()) {
            return Err(Error::VerificationFailed(format!("{}: {}", s.rule, c.name)));
        }
    }
    Ok(report)
}

/// Like [`verify_stabilizer_generators`] but returns failing reports too.
pub fn stabilizer_generator_report() -> Result<HarmonicReport> {
    use SymplecticConvention::{Ef, Shift4};
    let basis = antonyan_basis();
    let s: Vec<Wedge> = basis.iter().map(AntonyanElement::to_wedge).collect();
    let mut steps = Vec::new();

    // kernel elements and the commuting criterion
    let mut c = Vec::new();
    for (name, v) in traceless_cartan() {
        c.push(check(format!("terms of Lambda({name})"), contract_lambda(&v, Shift4)?.len(), Rel::Eq, 0));
    }
    for name in [1usize, 2, 4] {
        let img = contract_lambda(&s[name], Shift4)?;
        c.push(check(format!("terms of Lambda(s{})", name + 1), img.len(), Rel::Gt, 0));
    }
    steps.push(step("TRACELESS_CARTAN", "six traceless combinations of the Antonyan basis lie in the kernel of Lambda", c));

    let mut c = Vec::new();
    for i in 0..7 {
        for j in i + 1..7 {
            c.push(truth(
                format!("s{} and s{} share two labels in their first quadruples", i + 1, j + 1),
                commuting_criterion(&basis[i], &basis[j])?,
            ));
        }
    }
    steps.push(step("COMMUTING_PAIRS", "elements whose first quadruples share exactly two labels commute", c));

    // (a) SL_8 generators fix every s_i up to one global scalar
    let mut gens = pair_flips();
    gens.push(("sign change of e1..e4".to_string(), half_flip()));
    gens.extend(klein());
    gens.push(("(15)(26)(37)(48)".to_string(), swap_halves()));
    let mut c = Vec::new();
    for (name, g) in &gens {
        let first = signed_perm_action(g, &s[0])?;
        let scalar = first.coeff(&s[0].terms().next().unwrap().indices) * s[0].terms().next().unwrap().coeff;
        for (i, si) in s.iter().enumerate() {
            let img = signed_perm_action(g, si)?;
            c.push(truth(format!("{name} maps s{} to {} s{}", i + 1, scalar_name(scalar), i + 1), img == si.scale(scalar)));
        }
        c.push(truth(format!("{name}: global scalar {} is a sign", scalar_name(scalar)), scalar == int(1) || scalar == int(-1)));
    }
    steps.push(step("SL8_GENERATORS", "sign changes and permutations stabilizing the Cartan subspace of Lambda^4 C^8", c));

    // (b) Sp_8 generators are symplectic and preserve the traceless span
    let mut sp = pair_flips();
    let d: Vec<Scalar> = (0..8).map(|a| if a < 4 { -I } else { I }).collect();
    sp.push(("e1..e4 times -i, e5..e8 times i".to_string(), MonomialMap::diagonal(&d)?));
    sp.extend(klein());
    sp.push(("(15)(26)(37)(48) after sign change of e1..e4".to_string(), half_flip().then(&swap_halves())));
    let mut c = Vec::new();
    for (name, g) in &sp {
        c.push(truth(format!("{name} preserves omega"), g.is_symplectic(Shift4)));
        for (cname, v) in traceless_cartan() {
            let img = signed_perm_action(g, &v)?;
            let inside = cartan_coordinates(&img).is_some() && contract_lambda(&img, Shift4)?.is_zero();
            c.push(truth(format!("{name} keeps {cname} in the traceless Cartan span"), inside));
        }
    }
    steps.push(step("SP8_GENERATORS", "symplectic generators preserve the span of the six traceless Cartan elements", c));

    // (c) faithfulness on the 32 monomials x_i ∧ x_j ∧ x_k
    let mut monomials = Vec::new();
    for t in subsets(4, 3) {
        for mask in 0..8u8 {
            let idx: Vec<u8> = t.iter().enumerate().map(|(b, &i)| 2 * i + (mask >> b & 1)).collect();
            monomials.push(Wedge::basis(8, &idx));
        }
    }
    let iota: Vec<MonomialMap> = [1usize, 2, 3]
        .iter()
        .map(|&j| {
            let mut d = vec![int(1); 8];
            for a in [0, 1, 2 * j, 2 * j + 1] {
                d[a] = int(-1);
            }
            MonomialMap::diagonal(&d).unwrap()
        })
        .collect();
    let mut c = vec![check("monomials x_i x_j x_k", monomials.len(), Rel::Eq, 32)];
    for m in &monomials {
        c.push(check(format!("terms of Lambda of monomial {:?}", m.terms().next().unwrap().indices), contract_lambda(m, Ef)?.len(), Rel::Eq, 0));
    }
    for mask in 1..8u8 {
        let mut g = MonomialMap::identity(8);
        for (b, io) in iota.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g = g.then(io);
            }
        }
        let mut moved = 0;
        for m in &monomials {
            if signed_perm_action(&g, m)? != *m {
                moved += 1;
            }
        }
        c.push(check(format!("monomials negated by iota product {mask:03b}"), moved, Rel::Gt, 0));
    }
    for l in 0..3 {
        let witness = monomials.iter().filter(|m| m.terms().next().unwrap().indices.iter().all(|x| x % 2 == 0)).any(|m| {
            (0..3).all(|t| {
                let img = signed_perm_action(&iota[t], m).unwrap();
                if t == l {
                    img == m.scale(int(-1))
                } else {
                    img == *m
                }
            })
        });
        c.push(truth(format!("some e_i e_j e_k is negated by iota{} and fixed by the other two", l + 1), witness));
    }
    let diag_i: Vec<Scalar> = (0..8).map(|a| if a % 2 == 0 { I } else { -I }).collect();
    let diag_i = MonomialMap::diagonal(&diag_i)?;
    let all_pm_i = monomials.iter().all(|m| {
        let img = signed_perm_action(&diag_i, m).unwrap();
        img == m.scale(I) || img == m.scale(-I)
    });
    c.push(truth("diag(i, -i) multiplies every monomial by +i or -i", all_pm_i));
    // permutations acting on monomial lines
    let line = |w: &Wedge| w.terms().next().unwrap().indices;
    let lines: Vec<Vec<u8>> = monomials.iter().map(line).collect();
    let perms: Vec<MonomialMap> = {
        let [a, b] = klein();
        [a.1, b.1, half_flip().then(&swap_halves())].iter().map(MonomialMap::shift_to_ef).collect()
    };
    let action = |g: &MonomialMap| -> Vec<Vec<u8>> {
        lines.iter().map(|l| line(&signed_perm_action(g, &Wedge::basis(8, l)).unwrap())).collect()
    };
    let mut group: BTreeSet<Vec<Vec<u8>>> = BTreeSet::new();
    let mut frontier = vec![MonomialMap::identity(8)];
    group.insert(action(&frontier[0]));
    while let Some(g) = frontier.pop() {
        for p in &perms {
            let h = g.then(p);
            if group.insert(action(&h)) {
                frontier.push(h);
            }
        }
    }
    let line_set: BTreeSet<Vec<u8>> = lines.iter().cloned().collect();
    let closed = group.iter().all(|img| img.iter().all(|l| line_set.contains(l)));
    c.push(truth("permutations map monomial lines to monomial lines", closed));
    c.push(check("order of the permutation group on lines", group.len(), Rel::Eq, 8));
    steps.push(step("FAITHFUL_ON_MONOMIALS", "even sign changes, the order-4 diagonal element and three permutations act faithfully", c));

    // (d) weight families of Λ_0^3 C^8
    let ker = kernel_by_weight(4, 3, Ef)?;
    let (mut one_zero, mut one_nonzero, mut other) = (0usize, 0usize, 0usize);
    let mut mults = BTreeSet::new();
    for (w, &d) in &ker {
        let nz = w.iter().filter(|&&x| x != 0).count();
        if nz == 3 && w.iter().all(|x| x.abs() <= 1) {
            one_zero += d;
            mults.insert((1, d));
        } else if nz == 1 && w.iter().all(|x| x.abs() <= 1) {
            one_nonzero += d;
            mults.insert((2, d));
        } else {
            other += d;
        }
    }
    let mut c = vec![
        check("dim of weights with one zero entry", one_zero, Rel::Eq, 32),
        check("dim of weights with one nonzero entry", one_nonzero, Rel::Eq, 16),
        check("dim of other weights", other, Rel::Eq, 0),
        check("multiplicity patterns", mults.len(), Rel::Eq, 2),
        truth("one-zero weights have multiplicity 1", mults.contains(&(1, 1))),
        truth("one-nonzero weights have multiplicity 2", mults.contains(&(2, 2))),
        check("kernel rank of Lambda on Lambda^3 C^8", kernel_rank(4, 3, Ef)?, Rel::Eq, harmonic_wedge_dim(4, 3)),
        check("binom(8,3) - binom(8,1)", harmonic_wedge_dim(4, 3), Rel::Eq, 48),
    ];
    for i in 0..4u8 {
        let others: Vec<u8> = (0..4).filter(|&x| x != i).collect();
        for x in 0..2u8 {
            let xi = 2 * i + x;
            for &k in &others[1..] {
                let j = others[0];
                let v = Wedge::basis(8, &[xi, 2 * j, 2 * j + 1]).minus(&Wedge::basis(8, &[xi, 2 * k, 2 * k + 1]));
                c.push(check(
                    format!("terms of Lambda(x{} e{} f{} - x{} e{} f{})", i + 1, j + 1, j + 1, i + 1, k + 1, k + 1),
                    contract_lambda(&v, Ef)?.len(),
                    Rel::Eq,
                    0,
                ));
            }
        }
    }
    steps.push(step("WEIGHT_FAMILIES", "Lambda_0^3 C^8 splits into 32 weights of multiplicity 1 and 8 of multiplicity 2", c));
    Ok(HarmonicReport { steps })
}
