use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    SL,
    Sp,
    SOodd,
    SOeven,
    Ofull,
    G2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SL => "SL",
            Family::Sp => "Sp",
            Family::SOodd => "SOodd",
            Family::SOeven => "SOeven",
            Family::Ofull => "O",
            Family::G2 => "G2",
        }
    }
}

/// A classical group or `G2`.
///
/// `size` is `n` for `SL_n` and `Sp_2n`, `N` for `SO_N` and `O_N`, and is
/// ignored for `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupDesc {
    family: Family,
    size: u32,
}

impl GroupDesc {
    pub fn new(family: Family, size: u32) -> Result<Self> {
        match family {
            Family::SL | Family::Sp if size < 1 => Err(domain!("{} needs n >= 1", family.name())),
            Family::SOodd if size < 3 || size.is_multiple_of(2) => {
                Err(domain!("SOodd needs odd N >= 3, got {size}"))
            }
            Family::SOeven if size < 2 || size % 2 == 1 => {
                Err(domain!("SOeven needs even N >= 2, got {size}"))
            }
            Family::Ofull if size < 2 => Err(domain!("O_N needs N >= 2")),
            Family::G2 => Ok(GroupDesc { family, size: 0 }),
            _ => Ok(GroupDesc { family, size }),
        }
    }

    pub fn sl(n: u32) -> Result<Self> {
        Self::new(Family::SL, n)
    }

    pub fn sp(n: u32) -> Result<Self> {
        Self::new(Family::Sp, n)
    }

    /// `SO_N`, picking the odd or even family from `N`.
    pub fn so(big_n: u32) -> Result<Self> {
        if big_n % 2 == 1 {
            Self::new(Family::SOodd, big_n)
        } else {
            Self::new(Family::SOeven, big_n)
        }
    }

    pub fn o(big_n: u32) -> Result<Self> {
        Self::new(Family::Ofull, big_n)
    }

    pub fn g2() -> Self {
        GroupDesc { family: Family::G2, size: 0 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::SL | Family::Sp => self.size as usize,
            Family::SOodd | Family::SOeven | Family::Ofull => (self.size / 2) as usize,
            Family::G2 => 2,
        }
    }

    /// True for `SO_{2n}` and `O_{2n}`.
    pub fn is_even_orthogonal(&self) -> bool {
        matches!(self.family, Family::SOeven | Family::Ofull) && self.size.is_multiple_of(2)
    }

    /// The special orthogonal group underlying `O_N`; other groups map to themselves.
    pub fn special(&self) -> GroupDesc {
        match self.family {
            Family::Ofull => GroupDesc::so(self.size).expect("valid size"),
            _ => *self,
        }
    }

    pub fn group_dim(&self) -> u64 {
        let s = self.size as u64;
        match self.family {
            Family::SL => s * s - 1,
            Family::Sp => 2 * s * s + s,
            Family::SOodd | Family::SOeven | Family::Ofull => s * (s - 1) / 2,
            Family::G2 => 14,
        }
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::SL => write!(f, "SL_{}", self.size),
            Family::Sp => write!(f, "Sp_{}", 2 * self.size),
            Family::SOodd | Family::SOeven => write!(f, "SO_{}", self.size),
            Family::Ofull => write!(f, "O_{}", self.size),
            Family::G2 => write!(f, "G2"),
        }
    }
}

/// Extension label of an `O_N` irreducible. `Unknown` only appears in
/// restriction output where the sign of the central element is left open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    None,
    Plus,
    Minus,
    Empty,
    Unknown,
}

impl Label {
    pub fn name(self) -> &'static str {
        match self {
            Label::None => "none",
            Label::Plus => "plus",
            Label::Minus => "minus",
            Label::Empty => "empty",
            Label::Unknown => "unknown",
        }
    }

    pub fn flip(self) -> Label {
        match self {
            Label::Plus => Label::Minus,
            Label::Minus => Label::Plus,
            l => l,
        }
    }
}

/// Highest weight in ε-coordinates (fundamental-weight coordinates `(m1, m2)` for `G2`).
///
/// `SL_n` weights are kept raw; [`DominantWeight::canonical`] subtracts the last
/// entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    pub entries: Vec<i64>,
    pub label: Label,
}

impl DominantWeight {
    /// Validates dominance for `g`. `O_{2n}` weights with a nonzero last entry
    /// are stored with that entry made positive.
    pub fn new(g: &GroupDesc, entries: Vec<i64>, label: Label) -> Result<Self> {
        let mut entries = entries;
        let r = g.rank();
        if entries.len() != r {
            return Err(domain!("{g} expects {r} entries, got {}", entries.len()));
        }
        let desc = |e: &[i64]| e.windows(2).all(|w| w[0] >= w[1]);
        match g.family() {
            Family::SL => {
                if !desc(&entries) {
                    return Err(domain!("weight {:?} is not dominant for {g}", entries));
                }
            }
            Family::Sp | Family::SOodd => {
                if !desc(&entries) || entries.last().is_some_and(|&x| x < 0) {
                    return Err(domain!("weight {:?} is not dominant for {g}", entries));
                }
            }
            Family::SOeven | Family::Ofull if g.size().is_multiple_of(2) => {
                let ok = r == 0
                    || (desc(&entries[..r - 1])
                        && (r == 1 || entries[r - 2] >= entries[r - 1].abs()));
                if !ok {
                    return Err(domain!("weight {:?} is not dominant for {g}", entries));
                }
                if g.family() == Family::Ofull && r > 0 {
                    entries[r - 1] = entries[r - 1].abs();
                }
            }
            Family::Ofull => {
                if !desc(&entries) || entries.last().is_some_and(|&x| x < 0) {
                    return Err(domain!("weight {:?} is not dominant for {g}", entries));
                }
            }
            Family::SOeven => unreachable!(),
            Family::G2 => {
                if entries.iter().any(|&x| x < 0) {
                    return Err(domain!("G2 weight {:?} has a negative coefficient", entries));
                }
            }
        }
        if g.family() == Family::Ofull {
            let last_zero = entries.last().is_none_or(|&x| x == 0);
            let ok = match label {
                Label::Plus | Label::Minus => g.size() % 2 == 1 || last_zero,
                Label::Empty => g.size().is_multiple_of(2) && !last_zero,
                Label::Unknown => true,
                Label::None => false,
            };
            if !ok {
                return Err(domain!("label {} inconsistent with {g} weight {:?}", label.name(), entries));
            }
        } else if label != Label::None {
            return Err(domain!("label {} only applies to O_N", label.name()));
        }
        Ok(DominantWeight { entries, label })
    }

    /// Unlabeled weight; convenient for non-orthogonal families.
    pub fn of(g: &GroupDesc, entries: &[i64]) -> Result<Self> {
        Self::new(g, entries.to_vec(), Label::None)
    }

    pub fn zero(g: &GroupDesc) -> Self {
        let label = if g.family() == Family::Ofull { Label::Plus } else { Label::None };
        DominantWeight { entries: alloc::vec![0; g.rank()], label }
    }

    /// Canonical form: `SL_n` weights get their last entry subtracted, others are unchanged.
    pub fn canonical(&self, g: &GroupDesc) -> DominantWeight {
        if g.family() == Family::SL {
            let last = self.entries.last().copied().unwrap_or(0);
            DominantWeight {
                entries: self.entries.iter().map(|x| x - last).collect(),
                label: self.label,
            }
        } else {
            self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Number of boxes `Σ |λ_i|`.
    pub fn boxes(&self) -> i64 {
        self.entries.iter().map(|x| x.abs()).sum()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")?;
        match self.label {
            Label::None => Ok(()),
            l => write!(f, "^{}", l.name()),
        }
    }
}

/// A direct sum `⊕ m_i V(λ_i)`, kept sorted by weight with no repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RepSum {
    terms: Vec<(DominantWeight, u64)>,
}

impl RepSum {
    pub fn new() -> Self {
        RepSum { terms: Vec::new() }
    }

    /// Collects terms, merging repeated weights and dropping zero multiplicities.
    pub fn from_terms<I: IntoIterator<Item = (DominantWeight, u64)>>(it: I) -> Self {
        let mut map: BTreeMap<DominantWeight, u64> = BTreeMap::new();
        for (w, m) in it {
            if m > 0 {
                *map.entry(w).or_insert(0) += m;
            }
        }
        RepSum { terms: map.into_iter().collect() }
    }

    pub fn single(w: DominantWeight) -> Self {
        RepSum { terms: alloc::vec![(w, 1)] }
    }

    pub fn add(&mut self, w: DominantWeight, m: u64) {
        if m == 0 {
            return;
        }
        match self.terms.binary_search_by(|(x, _)| x.cmp(&w)) {
            Ok(i) => self.terms[i].1 += m,
            Err(i) => self.terms.insert(i, (w, m)),
        }
    }

    pub fn terms(&self) -> &[(DominantWeight, u64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, w: &DominantWeight) -> u64 {
        self.terms
            .binary_search_by(|(x, _)| x.cmp(w))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Multiplicity of the weight with the given entries, ignoring labels.
    pub fn multiplicity_of(&self, entries: &[i64]) -> u64 {
        self.terms.iter().filter(|(w, _)| w.entries == entries).map(|(_, m)| m).sum()
    }

    /// Total number of irreducible constituents counted with multiplicity.
    pub fn count(&self) -> u64 {
        self.terms.iter().map(|(_, m)| m).sum()
    }
}

impl fmt::Display for RepSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m > 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_dims() {
        assert_eq!(GroupDesc::sp(4).unwrap().group_dim(), 36);
        assert_eq!(GroupDesc::g2().group_dim(), 14);
        assert_eq!(GroupDesc::sl(1).unwrap().group_dim(), 0);
        assert_eq!(GroupDesc::sl(3).unwrap().group_dim(), 8);
        assert_eq!(GroupDesc::o(7).unwrap().group_dim(), 21);
        assert_eq!(GroupDesc::so(8).unwrap().group_dim(), 28);
    }

    #[test]
    fn ranks() {
        assert_eq!(GroupDesc::so(7).unwrap().rank(), 3);
        assert_eq!(GroupDesc::so(8).unwrap().rank(), 4);
        assert_eq!(GroupDesc::sp(3).unwrap().rank(), 3);
        assert_eq!(GroupDesc::g2().rank(), 2);
        assert!(GroupDesc::so(2).is_ok());
        assert!(GroupDesc::new(Family::SOodd, 4).is_err());
    }

    #[test]
    fn dominance_rules() {
        let so8 = GroupDesc::so(8).unwrap();
        assert!(DominantWeight::of(&so8, &[2, 2, 2, -2]).is_ok());
        assert!(DominantWeight::of(&so8, &[2, 2, 1, -2]).is_err());
        let sp = GroupDesc::sp(3).unwrap();
        assert!(DominantWeight::of(&sp, &[1, 2, 0]).is_err());
        let sl = GroupDesc::sl(3).unwrap();
        assert!(DominantWeight::of(&sl, &[3, 3, -1]).is_ok());
        assert!(DominantWeight::of(&sl, &[1, 2]).is_err());
    }

    #[test]
    fn o_labels() {
        let o8 = GroupDesc::o(8).unwrap();
        assert!(DominantWeight::new(&o8, alloc::vec![1, 1, 0, 0], Label::Plus).is_ok());
        assert!(DominantWeight::new(&o8, alloc::vec![1, 1, 0, 0], Label::Empty).is_err());
        let w = DominantWeight::new(&o8, alloc::vec![1, 1, 1, -1], Label::Empty).unwrap();
        assert_eq!(w.entries, alloc::vec![1, 1, 1, 1]);
        let o7 = GroupDesc::o(7).unwrap();
        assert!(DominantWeight::new(&o7, alloc::vec![1, 1, 1], Label::Empty).is_err());
        assert!(DominantWeight::new(&o7, alloc::vec![1, 1, 1], Label::Minus).is_ok());
        let sl = GroupDesc::sl(2).unwrap();
        assert!(DominantWeight::new(&sl, alloc::vec![1, 0], Label::Plus).is_err());
    }

    #[test]
    fn sl_canonical() {
        let sl = GroupDesc::sl(4).unwrap();
        let w = DominantWeight::of(&sl, &[4, 3, 3, 1]).unwrap();
        assert_eq!(w.canonical(&sl).entries, alloc::vec![3, 2, 2, 0]);
    }

    #[test]
    fn repsum_merges() {
        let g = GroupDesc::sl(2).unwrap();
        let a = DominantWeight::of(&g, &[1, 0]).unwrap();
        let b = DominantWeight::of(&g, &[0, 0]).unwrap();
        let s = RepSum::from_terms([(a.clone(), 1), (b.clone(), 2), (a.clone(), 3)]);
        assert_eq!(s.terms(), &[(b, 2), (a, 4)]);
    }
}
