//! E/R classification of irreducible representations.
//!
//! An irreducible is an E-representation when its stabilizer in general position
//! is nontrivial modulo the ineffectivity kernel, and an R-representation
//! otherwise. The E-lists are transcribed from the Popov-Vinberg tables and ship
//! in `data/e_tables.json`; small orthogonal and symplectic groups go through
//! the accidental isomorphisms.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::{DominantWeight, Family, GroupDesc, Label};

const E_TABLES: &str = include_str!("../data/e_tables.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    R,
    E,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::R => "R",
            Status::E => "E",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub status: Status,
    pub source: String,
}

impl Classification {
    fn e(source: &str) -> Self {
        Classification { status: Status::E, source: source.to_string() }
    }

    fn r(source: &str) -> Self {
        Classification { status: Status::R, source: source.to_string() }
    }

    pub fn is_r(&self) -> bool {
        self.status == Status::R
    }
}

#[derive(Deserialize)]
struct TableFile {
    entries: Vec<TableEntry>,
}

/// One row of the embedded E-table.
#[derive(Clone, Debug, Deserialize)]
pub struct TableEntry {
    pub family: String,
    pub min_size: u32,
    pub max_size: Option<u32>,
    pub pattern: String,
    pub citation: String,
}

impl TableEntry {
    fn applies(&self, family: &str, size: u32) -> bool {
        self.family == family
            && size >= self.min_size
            && self.max_size.is_none_or(|m| size <= m)
    }

    /// Matches `entries` against the pattern; a starred item repeats to fill.
    pub fn matches(&self, entries: &[i64]) -> bool {
        let items: Vec<(i64, bool)> = self
            .pattern
            .split(',')
            .map(|s| {
                let s = s.trim();
                let star = s.ends_with('*');
                let v = s.trim_end_matches('*').parse::<i64>().expect("malformed E-table pattern");
                (v, star)
            })
            .collect();
        let fixed = items.iter().filter(|(_, s)| !s).count();
        if fixed > entries.len() {
            return false;
        }
        let fill = entries.len() - fixed;
        if fill > 0 && !items.iter().any(|(_, s)| *s) {
            return false;
        }
        let mut expanded = Vec::with_capacity(entries.len());
        for (v, star) in items {
            if star {
                expanded.extend(core::iter::repeat_n(v, fill));
            } else {
                expanded.push(v);
            }
        }
        expanded == entries
    }
}

/// The embedded E-table, parsed.
pub fn e_table() -> Vec<TableEntry> {
    serde_json::from_str::<TableFile>(E_TABLES).expect("embedded E-table is valid JSON").entries
}

fn lookup(table: &[TableEntry], family: &str, size: u32, entries: &[i64]) -> Option<String> {
    table
        .iter()
        .find(|e| e.applies(family, size) && e.matches(entries))
        .map(|e| e.citation.clone())
}

/// Classifies `λ` for `g`. `O_N` weights are judged by their `SO_N` summands.
pub fn classify(g: &GroupDesc, lambda: &DominantWeight) -> Result<Classification> {
    let lambda = DominantWeight::new(g, lambda.entries.clone(), lambda.label)?;
    let table = e_table();
    classify_with(&table, g, &lambda)
}

fn classify_with(table: &[TableEntry], g: &GroupDesc, lambda: &DominantWeight) -> Result<Classification> {
    let n = g.size();
    let e = &lambda.entries;
    match g.family() {
        Family::SL => {
            if n == 1 {
                // the trivial group acts freely on every representation
                return Ok(Classification::r("SL_1 is trivial"));
            }
            let canon = lambda.canonical(g).entries;
            let dual = dual_weight(g, lambda).entries;
            for w in [&canon, &dual] {
                if let Some(c) = lookup(table, "SL", n, w) {
                    return Ok(Classification::e(&c));
                }
            }
            Ok(Classification::r("not on the SL E-list"))
        }
        Family::Sp => match n {
            1 => {
                let sl2 = GroupDesc::sl(2)?;
                let c = classify_with(table, &sl2, &DominantWeight::of(&sl2, &[e[0], 0])?)?;
                Ok(Classification { status: c.status, source: alloc::format!("Sp_2 = SL_2: {}", c.source) })
            }
            2 => {
                if e[..] == [1, 0] {
                    return Ok(Classification::e("standard representation C^4"));
                }
                match sp4_to_so5(e) {
                    Some(w) => {
                        let so5 = GroupDesc::so(5)?;
                        let c = classify_with(table, &so5, &DominantWeight::of(&so5, &w)?)?;
                        Ok(Classification { status: c.status, source: alloc::format!("Sp_4 = Spin_5: {}", c.source) })
                    }
                    None => Ok(Classification::r("Sp_4 weight not factoring through SO_5, not standard")),
                }
            }
            _ => Ok(match lookup(table, "Sp", n, e) {
                Some(c) => Classification::e(&c),
                None => Classification::r("not on the Sp E-list"),
            }),
        },
        Family::SOodd | Family::SOeven => {
            if n == 2 {
                return Err(Error::Unsupported("SO_2 is a torus".into()));
            }
            Ok(match lookup(table, "SO", n, e) {
                Some(c) => Classification::e(&c),
                None => Classification::r("not on the SO E-list"),
            })
        }
        Family::Ofull => {
            if n == 2 {
                return Err(Error::Unsupported("O_2 is not classified".into()));
            }
            let so = g.special();
            let mut parts = alloc::vec![e.clone()];
            if lambda.label == Label::Empty {
                let mut other = e.clone();
                let last = other.len() - 1;
                other[last] = -other[last];
                parts.push(other);
            }
            for p in parts {
                let c = classify_with(table, &so, &DominantWeight::of(&so, &p)?)?;
                if !c.is_r() {
                    return Ok(Classification {
                        status: Status::E,
                        source: alloc::format!("SO_{n} summand {}: {}", DominantWeight::of(&so, &p)?, c.source),
                    });
                }
            }
            Ok(Classification::r("every SO summand is an R-representation"))
        }
        Family::G2 => Err(Error::Unsupported("G2 is not classified".into())),
    }
}

/// Highest weight of the dual representation.
///
/// `SL_n`: reversed complement, canonicalized. `SO_2n`: last entry negated when
/// `n` is odd. Every other family is self-dual.
pub fn dual_weight(g: &GroupDesc, lambda: &DominantWeight) -> DominantWeight {
    let e = &lambda.entries;
    match g.family() {
        Family::SL => {
            let top = e.first().copied().unwrap_or(0);
            let entries: Vec<i64> = e.iter().rev().map(|x| top - x).collect();
            DominantWeight { entries, label: lambda.label }.canonical(g)
        }
        Family::SOeven if g.rank() % 2 == 1 => {
            let mut entries = e.clone();
            if let Some(last) = entries.last_mut() {
                *last = -*last;
            }
            DominantWeight { entries, label: lambda.label }
        }
        _ => lambda.clone(),
    }
}

/// Exterior-power test on the canonical SL weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExteriorPower {
    pub is_exterior: bool,
    pub k: usize,
    /// Set for the zero weight, which counts as `Λ^0`.
    pub degenerate: bool,
}

pub fn is_exterior_power(lambda: &[i64]) -> ExteriorPower {
    let last = lambda.last().copied().unwrap_or(0);
    let canon: Vec<i64> = lambda.iter().map(|x| x - last).collect();
    let k = canon.iter().take_while(|&&x| x == 1).count();
    let is_exterior = canon[k..].iter().all(|&x| x == 0);
    ExteriorPower { is_exterior, k: if is_exterior { k } else { 0 }, degenerate: is_exterior && k == 0 }
}

/// `Σ_0^{λ1,λ2} C^5 = Σ_0^{λ1+λ2, λ1−λ2} C^4`, inverted; `None` for spin weights.
pub fn sp4_to_so5(w: &[i64]) -> Option<Vec<i64>> {
    let (a, b) = (w[0], w[1]);
    if (a + b) % 2 != 0 {
        return None;
    }
    Some(alloc::vec![(a + b) / 2, (a - b) / 2])
}

pub fn so5_to_sp4(w: &[i64]) -> Vec<i64> {
    alloc::vec![w[0] + w[1], w[0] - w[1]]
}

/// `SO_6` weight to the `SL_4` weight of the same representation (canonical).
pub fn so6_to_sl4(w: &[i64]) -> Vec<i64> {
    let (l1, l2, l3) = (w[0], w[1], w[2]);
    let v = [l1 + l2, l1 - l3, l2 - l3, 0];
    let m = *v.iter().min().unwrap();
    v.iter().map(|x| x - m).collect()
}

/// `SO_4` weight `(λ1, λ2)` as the pair of `SL_2` degrees `(λ1+λ2, λ1−λ2)`.
pub fn so4_to_sl2_pair(w: &[i64]) -> (i64, i64) {
    (w[0] + w[1], w[0] - w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::irrep_dim_u64;
    use alloc::vec;

    fn class(g: &GroupDesc, w: &[i64]) -> Status {
        classify(g, &DominantWeight::of(g, w).unwrap()).unwrap().status
    }

    /// All dominant weights of `g` with entries bounded by `bound` in absolute value.
    fn dominant_weights(g: &GroupDesc, bound: i64) -> Vec<Vec<i64>> {
        let r = g.rank();
        let lo = match g.family() {
            Family::SOeven => -bound,
            Family::SL => 0,
            _ => 0,
        };
        let mut out = Vec::new();
        let mut cur = vec![lo; r];
        loop {
            if DominantWeight::of(g, &cur).is_ok() {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == r {
                    return out;
                }
                if cur[i] < bound {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo;
                i += 1;
            }
        }
    }

    #[test]
    fn printed_examples() {
        let sp8 = GroupDesc::sp(4).unwrap();
        assert_eq!(class(&sp8, &[1, 1, 1, 1]), Status::E);
        assert_eq!(class(&sp8, &[1, 1, 1, 0]), Status::R);
        assert_eq!(class(&GroupDesc::so(6).unwrap(), &[1, 1, 1]), Status::E);
        let mut l = vec![0; 10];
        l[..3].fill(1);
        assert_eq!(class(&GroupDesc::sl(10).unwrap(), &l), Status::R);
        assert_eq!(class(&GroupDesc::sl(2).unwrap(), &[4, 0]), Status::E);
        assert_eq!(class(&GroupDesc::sl(2).unwrap(), &[5, 0]), Status::R);
        assert_eq!(class(&GroupDesc::sl(9).unwrap(), &[1, 1, 1, 1, 1, 1, 0, 0, 0]), Status::E);
        assert_eq!(class(&GroupDesc::sl(9).unwrap(), &[1, 1, 1, 1, 0, 0, 0, 0, 0]), Status::R);
        assert_eq!(class(&GroupDesc::sl(3).unwrap(), &[3, 3, 0]), Status::E);
        assert_eq!(class(&GroupDesc::sl(3).unwrap(), &[4, 0, 0]), Status::R);
        assert_eq!(class(&GroupDesc::sl(4).unwrap(), &[3, 2, 2, 1]), Status::E);
    }

    #[test]
    fn duals() {
        let sl4 = GroupDesc::sl(4).unwrap();
        let sl3 = GroupDesc::sl(3).unwrap();
        let d = |g: &GroupDesc, w: &[i64]| dual_weight(g, &DominantWeight::of(g, w).unwrap()).entries;
        assert_eq!(d(&sl4, &[1, 1, 0, 0]), vec![1, 1, 0, 0]);
        assert_eq!(d(&sl3, &[3, 0, 0]), vec![3, 3, 0]);
        assert_eq!(d(&sl3, &[0, 0, 0]), vec![0, 0, 0]);
        let so10 = GroupDesc::so(10).unwrap();
        assert_eq!(d(&so10, &[1, 1, 1, 1, 1]), vec![1, 1, 1, 1, -1]);
        let so8 = GroupDesc::so(8).unwrap();
        assert_eq!(d(&so8, &[1, 1, 1, -1]), vec![1, 1, 1, -1]);
    }

    #[test]
    fn exterior_powers() {
        assert_eq!(is_exterior_power(&[1, 1, 1, 0, 0]), ExteriorPower { is_exterior: true, k: 3, degenerate: false });
        assert!(!is_exterior_power(&[2, 1, 0]).is_exterior);
        assert_eq!(is_exterior_power(&[0, 0, 0]), ExteriorPower { is_exterior: true, k: 0, degenerate: true });
        assert_eq!(is_exterior_power(&[2, 2, 1]).k, 2);
    }

    #[test]
    fn small_dimension_forces_e() {
        // an irreducible of dimension below dim G cannot have a trivial generic stabilizer
        for (fam, sizes) in [
            (Family::SL, (2..=6).collect::<Vec<u32>>()),
            (Family::Sp, (1..=5).collect()),
            (Family::SOodd, vec![3, 5, 7, 9, 11]),
            (Family::SOeven, vec![4, 6, 8, 10]),
        ] {
            for size in sizes {
                let g = GroupDesc::new(fam, size).unwrap();
                let gd = g.group_dim();
                for w in dominant_weights(&g, 4) {
                    let dw = DominantWeight::of(&g, &w).unwrap();
                    if fam == Family::SL && w.last() != Some(&0) {
                        continue;
                    }
                    if irrep_dim_u64(&g, &dw).unwrap() < gd {
                        assert_eq!(class(&g, &w), Status::E, "{g} {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn sl_duality_invariance() {
        for n in 2..=6u32 {
            let g = GroupDesc::sl(n).unwrap();
            for w in dominant_weights(&g, 5) {
                if w.last() != Some(&0) {
                    continue;
                }
                let dw = DominantWeight::of(&g, &w).unwrap();
                let dual = dual_weight(&g, &dw);
                assert_eq!(dual_weight(&g, &dual).entries, w);
                assert_eq!(class(&g, &w), class(&g, &dual.entries), "{w:?}");
            }
        }
    }

    #[test]
    fn so_even_duality_invariance() {
        for big_n in [4, 6, 8, 10] {
            let g = GroupDesc::so(big_n).unwrap();
            for w in dominant_weights(&g, 3) {
                let dw = DominantWeight::of(&g, &w).unwrap();
                let dual = dual_weight(&g, &dw);
                assert_eq!(class(&g, &w), class(&g, &dual.entries));
            }
        }
    }

    #[test]
    fn orthogonal_labels_follow_summands() {
        for big_n in 3..=9u32 {
            let o = GroupDesc::o(big_n).unwrap();
            let so = o.special();
            for w in dominant_weights(&so, 3) {
                if w.last().is_some_and(|&x| x < 0) {
                    continue;
                }
                let last_zero = w.last() == Some(&0);
                if big_n % 2 == 0 && !last_zero {
                    let e = classify(&o, &DominantWeight::new(&o, w.clone(), Label::Empty).unwrap()).unwrap();
                    let mut neg = w.clone();
                    *neg.last_mut().unwrap() *= -1;
                    let both = class(&so, &w) == Status::R && class(&so, &neg) == Status::R;
                    assert_eq!(e.is_r(), both, "O_{big_n} {w:?}");
                } else {
                    for label in [Label::Plus, Label::Minus] {
                        let c = classify(&o, &DominantWeight::new(&o, w.clone(), label).unwrap()).unwrap();
                        assert_eq!(c.status, class(&so, &w));
                    }
                }
            }
        }
    }

    #[test]
    fn so6_agrees_with_sl4() {
        let so6 = GroupDesc::so(6).unwrap();
        let sl4 = GroupDesc::sl(4).unwrap();
        for w in dominant_weights(&so6, 4) {
            let v = so6_to_sl4(&w);
            let a = DominantWeight::of(&so6, &w).unwrap();
            let b = DominantWeight::of(&sl4, &v).unwrap();
            assert_eq!(irrep_dim_u64(&so6, &a).unwrap(), irrep_dim_u64(&sl4, &b).unwrap());
            assert_eq!(class(&so6, &w), class(&sl4, &v), "{w:?} -> {v:?}");
        }
    }

    #[test]
    fn so5_agrees_with_sp4() {
        let so5 = GroupDesc::so(5).unwrap();
        let sp4 = GroupDesc::sp(2).unwrap();
        for w in dominant_weights(&so5, 4) {
            let v = so5_to_sp4(&w);
            assert_eq!(sp4_to_so5(&v), Some(w.clone()));
            let a = DominantWeight::of(&so5, &w).unwrap();
            let b = DominantWeight::of(&sp4, &v).unwrap();
            assert_eq!(irrep_dim_u64(&so5, &a).unwrap(), irrep_dim_u64(&sp4, &b).unwrap());
            assert_eq!(class(&so5, &w), class(&sp4, &v));
        }
        assert_eq!(class(&sp4, &[1, 0]), Status::E);
        assert_eq!(class(&sp4, &[2, 1]), Status::R);
    }

    #[test]
    fn so4_and_so3_through_sl2() {
        // E-pairs of SL2 x SL2 degrees acting on Sym^a ⊗ Sym^b
        let so4 = GroupDesc::so(4).unwrap();
        for w in dominant_weights(&so4, 4) {
            let (a, b) = so4_to_sl2_pair(&w);
            let dw = DominantWeight::of(&so4, &w).unwrap();
            assert_eq!(irrep_dim_u64(&so4, &dw).unwrap(), ((a + 1) * (b.abs() + 1)) as u64);
        }
        let so3 = GroupDesc::so(3).unwrap();
        let sl2 = GroupDesc::sl(2).unwrap();
        for c in 0..6 {
            assert_eq!(class(&so3, &[c]), class(&sl2, &[2 * c, 0]));
        }
    }

    #[test]
    fn rejects_unsupported() {
        let g2 = GroupDesc::g2();
        assert!(matches!(classify(&g2, &DominantWeight::of(&g2, &[1, 0]).unwrap()), Err(Error::Unsupported(_))));
        let so2 = GroupDesc::so(2).unwrap();
        assert!(matches!(classify(&so2, &DominantWeight::of(&so2, &[1]).unwrap()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn table_parses_and_patterns_fill() {
        let t = e_table();
        assert!(t.len() > 30);
        let adj = t.iter().find(|e| e.pattern == "2,1*,0").unwrap();
        assert!(adj.matches(&[2, 0]));
        assert!(adj.matches(&[2, 1, 1, 0]));
        assert!(!adj.matches(&[2, 1, 1, 1]));
    }
}
