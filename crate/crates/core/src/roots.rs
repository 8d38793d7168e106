//! Root data in an integer ambient basis.
//!
//! Classical groups use ε-coordinates (`gl_n` coordinates for `SL_n`). `G2`
//! lives in the plane `x + y + z = 0` of `Z^3`, with the 7-dimensional
//! representation at fundamental weight `ω2` and the adjoint at `ω1`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::group::{Family, GroupDesc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    A,
    C,
    B,
    D,
    G,
}

#[derive(Clone, Debug)]
pub struct RootData {
    kind: Kind,
    dim: usize,
    pub positive: Vec<Vec<i64>>,
    pub simple: Vec<Vec<i64>>,
    pub two_rho: Vec<i64>,
}

const G2_OMEGA1: [i64; 3] = [-1, -1, 2];
const G2_OMEGA2: [i64; 3] = [0, -1, 1];

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn pair(n: usize, i: usize, a: i64, j: usize, b: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += a;
    v[j] += b;
    v
}

impl RootData {
    /// Root data of `g` (of its special orthogonal part for `O_N`).
    pub fn of(g: &GroupDesc) -> RootData {
        let n = g.rank();
        let mut positive = Vec::new();
        let mut simple = Vec::new();
        let kind = match g.family() {
            Family::SL => Kind::A,
            Family::Sp => Kind::C,
            Family::SOodd => Kind::B,
            Family::SOeven => Kind::D,
            Family::Ofull if g.size() % 2 == 1 => Kind::B,
            Family::Ofull => Kind::D,
            Family::G2 => Kind::G,
        };
        if kind == Kind::G {
            positive = vec![
                vec![1, -1, 0],
                vec![-2, 1, 1],
                vec![-1, 0, 1],
                vec![0, -1, 1],
                vec![1, -2, 1],
                vec![-1, -1, 2],
            ];
            simple = vec![vec![1, -1, 0], vec![-2, 1, 1]];
        } else {
            for i in 0..n {
                for j in i + 1..n {
                    positive.push(pair(n, i, 1, j, -1));
                    if kind != Kind::A {
                        positive.push(pair(n, i, 1, j, 1));
                    }
                }
                match kind {
                    Kind::C => positive.push(unit(n, i, 2)),
                    Kind::B => positive.push(unit(n, i, 1)),
                    _ => {}
                }
            }
            for i in 0..n.saturating_sub(1) {
                simple.push(pair(n, i, 1, i + 1, -1));
            }
            match kind {
                Kind::C if n >= 1 => simple.push(unit(n, n - 1, 2)),
                Kind::B if n >= 1 => simple.push(unit(n, n - 1, 1)),
                Kind::D if n >= 2 => simple.push(pair(n, n - 2, 1, n - 1, 1)),
                _ => {}
            }
        }
        let dim = if kind == Kind::G { 3 } else { n };
        let mut two_rho = vec![0; dim];
        for a in &positive {
            for (t, x) in two_rho.iter_mut().zip(a) {
                *t += x;
            }
        }
        RootData { kind, dim, positive, simple, two_rho }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Maps weight coordinates to the ambient basis.
    pub fn embed(&self, w: &[i64]) -> Vec<i64> {
        if self.kind == Kind::G {
            (0..3).map(|i| w[0] * G2_OMEGA1[i] + w[1] * G2_OMEGA2[i]).collect()
        } else {
            w.to_vec()
        }
    }

    /// Inverse of [`RootData::embed`] on the weight lattice.
    pub fn unembed(&self, v: &[i64]) -> Vec<i64> {
        if self.kind == Kind::G {
            // pairings with the simple coroots give the fundamental coordinates
            let a = &self.simple;
            let m_short = dot(v, &a[0]) * 2 / dot(&a[0], &a[0]);
            let m_long = dot(v, &a[1]) * 2 / dot(&a[1], &a[1]);
            vec![m_long, m_short]
        } else {
            v.to_vec()
        }
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.simple.iter().all(|a| dot(v, a) >= 0)
    }

    /// The dominant element of the Weyl orbit of `v`.
    pub fn dominant_rep(&self, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        match self.kind {
            Kind::A => w.sort_unstable_by(|a, b| b.cmp(a)),
            Kind::B | Kind::C => {
                for x in w.iter_mut() {
                    *x = x.abs();
                }
                w.sort_unstable_by(|a, b| b.cmp(a));
            }
            Kind::D => {
                let negative = w.iter().filter(|&&x| x < 0).count();
                for x in w.iter_mut() {
                    *x = x.abs();
                }
                w.sort_unstable_by(|a, b| b.cmp(a));
                if negative % 2 == 1 {
                    if let Some(last) = w.last_mut() {
                        *last = -*last;
                    }
                }
            }
            Kind::G => loop {
                let mut moved = false;
                for a in &self.simple {
                    let p = dot(&w, a);
                    if p < 0 {
                        let c = 2 * p / dot(a, a);
                        for (x, y) in w.iter_mut().zip(a) {
                            *x -= c * y;
                        }
                        moved = true;
                    }
                }
                if !moved {
                    break;
                }
            },
        }
        w
    }

    /// Reflection of `v` in the root `a`.
    pub fn reflect(&self, v: &[i64], a: &[i64]) -> Vec<i64> {
        let c = 2 * dot(v, a) / dot(a, a);
        v.iter().zip(a).map(|(x, y)| x - c * y).collect()
    }

    /// Coroot pairing `⟨v, a^∨⟩`.
    pub fn coroot_pairing(&self, v: &[i64], a: &[i64]) -> i64 {
        2 * dot(v, a) / dot(a, a)
    }

    /// Full Weyl orbit of `v`, sorted.
    pub fn orbit(&self, v: &[i64]) -> Vec<Vec<i64>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(v.to_vec());
        queue.push_back(v.to_vec());
        while let Some(w) = queue.pop_front() {
            for a in &self.simple {
                let r = self.reflect(&w, a);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let count = |g: GroupDesc| RootData::of(&g).positive.len();
        assert_eq!(count(GroupDesc::sl(4).unwrap()), 6);
        assert_eq!(count(GroupDesc::sp(3).unwrap()), 9);
        assert_eq!(count(GroupDesc::so(7).unwrap()), 9);
        assert_eq!(count(GroupDesc::so(8).unwrap()), 12);
        assert_eq!(count(GroupDesc::g2()), 6);
    }

    #[test]
    fn g2_fundamental_pairings() {
        let rd = RootData::of(&GroupDesc::g2());
        let w1 = rd.embed(&[1, 0]);
        let w2 = rd.embed(&[0, 1]);
        // ω1 pairs with the long simple coroot, ω2 with the short one
        assert_eq!(rd.coroot_pairing(&w1, &rd.simple[1]), 1);
        assert_eq!(rd.coroot_pairing(&w1, &rd.simple[0]), 0);
        assert_eq!(rd.coroot_pairing(&w2, &rd.simple[0]), 1);
        assert_eq!(rd.coroot_pairing(&w2, &rd.simple[1]), 0);
        assert_eq!(rd.unembed(&w1), vec![1, 0]);
        assert_eq!(rd.unembed(&rd.embed(&[3, 2])), vec![3, 2]);
        assert_eq!(rd.two_rho, rd.embed(&[2, 2]));
    }

    #[test]
    fn dominant_rep_matches_generic_reflection() {
        let rd = RootData::of(&GroupDesc::so(8).unwrap());
        let v = [0, -3, 1, -2];
        let d = rd.dominant_rep(&v);
        assert!(rd.is_dominant(&d));
        assert!(rd.orbit(&v).contains(&d));
        let v = [1, -3, 1, -2];
        let d = rd.dominant_rep(&v);
        assert_eq!(d, vec![3, 2, 1, 1]);
    }

    #[test]
    fn g2_orbit_of_short_root() {
        let rd = RootData::of(&GroupDesc::g2());
        assert_eq!(rd.orbit(&rd.embed(&[0, 1])).len(), 6);
        assert_eq!(rd.orbit(&rd.embed(&[1, 1])).len(), 12);
    }
}
