//! Weight multiplicities by Freudenthal's recursion.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{DominantWeight, Family, GroupDesc, Label};
use crate::roots::{dot, RootData};

/// All dominant weights of one irreducible with their multiplicities.
///
/// Build once per `(g, λ)` and query repeatedly; the value is immutable.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    rd: RootData,
    family: Family,
    top: Vec<i64>,
    dominant: BTreeMap<Vec<i64>, u64>,
}

impl WeightSystem {
    /// Weight system of the connected group. For `O_N` the label is ignored;
    /// see [`weight_multiplicity`] for the `empty` case.
    pub fn new(g: &GroupDesc, lambda: &DominantWeight) -> Result<Self> {
        let lambda = DominantWeight::new(g, lambda.entries.clone(), lambda.label)?;
        let rd = RootData::of(g);
        let top = rd.embed(&lambda.entries);
        let dominant = dominant_multiplicities(&rd, &top)?;
        Ok(WeightSystem { rd, family: g.family(), top, dominant })
    }

    /// Multiplicity of `chi`, given in the same coordinates as highest weights.
    pub fn multiplicity(&self, chi: &[i64]) -> u64 {
        match self.ambient(chi) {
            Some(v) => self.ambient_multiplicity(&v),
            None => 0,
        }
    }

    fn ambient(&self, chi: &[i64]) -> Option<Vec<i64>> {
        if chi.len() != if self.family == Family::G2 { 2 } else { self.top.len() } {
            return None;
        }
        let mut v = self.rd.embed(chi);
        if self.family == Family::SL && !v.is_empty() {
            // SL_n weights are gl_n weights modulo the constant vector
            let n = v.len() as i64;
            let diff = self.top.iter().sum::<i64>() - v.iter().sum::<i64>();
            if diff % n != 0 {
                return None;
            }
            for x in v.iter_mut() {
                *x += diff / n;
            }
        }
        Some(v)
    }

    fn ambient_multiplicity(&self, v: &[i64]) -> u64 {
        let d = self.rd.dominant_rep(v);
        self.dominant.get(&d).copied().unwrap_or(0)
    }

    /// Dominant weights (in weight coordinates) with multiplicities, sorted.
    pub fn dominant_weights(&self) -> Vec<(Vec<i64>, u64)> {
        let mut out: Vec<_> =
            self.dominant.iter().map(|(v, &m)| (self.rd.unembed(v), m)).collect();
        out.sort();
        out
    }

    /// Every weight with its multiplicity, sorted by weight.
    pub fn all_weights(&self) -> Vec<(Vec<i64>, u64)> {
        let mut out = Vec::new();
        for (v, &m) in &self.dominant {
            for w in self.rd.orbit(v) {
                out.push((self.rd.unembed(&w), m));
            }
        }
        out.sort();
        out
    }

    /// `Σ_χ m(χ)`, the dimension recomputed from the weight system.
    pub fn total(&self) -> u64 {
        self.dominant.iter().map(|(v, &m)| self.rd.orbit(v).len() as u64 * m).sum()
    }
}

fn dominant_multiplicities(rd: &RootData, top: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    // dominant weights below λ are connected to λ by positive-root steps
    let mut found = BTreeSet::new();
    let mut queue = VecDeque::new();
    found.insert(top.to_vec());
    queue.push_back(top.to_vec());
    while let Some(w) = queue.pop_front() {
        for a in &rd.positive {
            let next: Vec<i64> = w.iter().zip(a).map(|(x, y)| x - y).collect();
            if rd.is_dominant(&next) && !found.contains(&next) {
                found.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let height = |v: &Vec<i64>| {
        let diff: Vec<i64> = top.iter().zip(v).map(|(x, y)| x - y).collect();
        dot(&diff, &rd.two_rho)
    };
    let mut order: Vec<Vec<i64>> = found.into_iter().collect();
    order.sort_by_key(|v| (height(v), v.clone()));

    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let top_plus: Vec<i64> = top.iter().zip(&rd.two_rho).map(|(x, r)| x + r).collect();
    for mu in order {
        if mu.as_slice() == top {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i128 = 0;
        for a in &rd.positive {
            let mut k = 1i64;
            loop {
                let shifted: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                let d = rd.dominant_rep(&shifted);
                let m = match mult.get(&d) {
                    Some(&m) => m,
                    None => break,
                };
                let term = (m as i128)
                    .checked_mul(dot(&shifted, a) as i128)
                    .ok_or(Error::Overflow)?;
                num = num.checked_add(term).ok_or(Error::Overflow)?;
                k += 1;
            }
        }
        num = num.checked_mul(2).ok_or(Error::Overflow)?;
        let diff: Vec<i64> = top.iter().zip(&mu).map(|(x, y)| x - y).collect();
        let sum: Vec<i64> = top_plus.iter().zip(&mu).map(|(x, y)| x + y).collect();
        let den = dot(&diff, &sum) as i128;
        if den <= 0 || num % den != 0 {
            return Err(Error::Domain(alloc::format!(
                "Freudenthal recursion not integral at {:?}",
                mu
            )));
        }
        let m = num / den;
        if m > 0 {
            mult.insert(mu, u64::try_from(m).map_err(|_| Error::Overflow)?);
        }
    }
    Ok(mult)
}

/// Multiplicity of `chi` in the irreducible of highest weight `λ`.
///
/// For `O_N` with label `empty` the restriction to `SO_N` is `V(λ) ⊕ V(λ')`
/// with `λ'` the last entry negated, and multiplicities add.
pub fn weight_multiplicity(g: &GroupDesc, lambda: &DominantWeight, chi: &[i64]) -> Result<u64> {
    let so = g.special();
    let base = DominantWeight { entries: lambda.entries.clone(), label: Label::None };
    if g.family() == Family::Ofull {
        DominantWeight::new(g, lambda.entries.clone(), lambda.label)?;
        let m = WeightSystem::new(&so, &base)?.multiplicity(chi);
        if lambda.label == Label::Empty {
            let mut other = base.clone();
            if let Some(last) = other.entries.last_mut() {
                *last = -*last;
            }
            return Ok(m + WeightSystem::new(&so, &other)?.multiplicity(chi));
        }
        return Ok(m);
    }
    Ok(WeightSystem::new(g, lambda)?.multiplicity(chi))
}
