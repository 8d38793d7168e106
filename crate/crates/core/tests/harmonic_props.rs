use lielevel_core::harmonic::{
    contract_lambda, harmonic_wedge_dim, kernel_rank, signed_perm_action, MonomialMap, Scalar, SymplecticConvention, Wedge,
};
use num_complex::Complex;
use proptest::prelude::*;

fn omega(conv: SymplecticConvention, dim: usize, u: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut s = Scalar::new(0, 0);
    for a in 0..dim {
        for b in 0..dim {
            let w = conv.omega(dim, a, b);
            if w != 0 {
                s += u[a] * v[b] * w;
            }
        }
    }
    s
}

/// `Λ` applied to `Σ c · v_1 ∧ … ∧ v_N` straight from the definition on vectors.
fn lambda_vectors(conv: SymplecticConvention, dim: usize, terms: &[(Scalar, Vec<Vec<Scalar>>)]) -> Vec<(Scalar, Vec<Vec<Scalar>>)> {
    let mut out = Vec::new();
    for (c, vs) in terms {
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                // (-1)^{i+j-1} with 1-based i, j
                let sign = if (i + j) % 2 == 1 { 1 } else { -1 };
                let w = omega(conv, dim, &vs[i], &vs[j]);
                let rest: Vec<Vec<Scalar>> =
                    vs.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, v)| v.clone()).collect();
                out.push((*c * w * sign, rest));
            }
        }
    }
    out
}

fn expand(dim: usize, terms: &[(Scalar, Vec<Vec<Scalar>>)]) -> Wedge {
    terms.iter().fold(Wedge::zero(dim), |acc, (c, vs)| acc.plus(&Wedge::of_vectors(dim, vs).scale(*c)))
}

fn vectors(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    proptest::collection::vec(proptest::collection::vec((-2i64..=2).prop_map(|x| Complex::new(x, 0)), dim), count)
}

fn conv() -> impl Strategy<Value = SymplecticConvention> {
    prop_oneof![Just(SymplecticConvention::Ef), Just(SymplecticConvention::Shift4)]
}

/// A symplectic monomial map for the `Ef` basis: permute the pairs, swap inside
/// some pairs with a sign, and scale `e_i` by `±1`.
fn symplectic_map(m: usize) -> impl Strategy<Value = MonomialMap> {
    (Just((0..m).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(0u8..4, m)).prop_map(move |(p, ops)| {
        let dim = 2 * m;
        let mut cols = vec![vec![Scalar::new(0, 0); dim]; dim];
        for i in 0..m {
            let (e, f) = (2 * p[i], 2 * p[i] + 1);
            let s = if ops[i] & 1 == 1 { -1 } else { 1 };
            if ops[i] & 2 == 0 {
                cols[2 * i][e] = Scalar::new(s, 0);
                cols[2 * i + 1][f] = Scalar::new(s, 0);
            } else {
                cols[2 * i][f] = Scalar::new(s, 0);
                cols[2 * i + 1][e] = Scalar::new(-s, 0);
            }
        }
        MonomialMap::from_matrix(&cols).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contraction_matches_vector_definition(m in 2usize..=5, conv in conv(), seed in vectors(10, 4)) {
        let dim = 2 * m;
        let vs: Vec<Vec<Scalar>> = seed.into_iter().map(|v| v[..dim].to_vec()).collect();
        let one = Scalar::new(1, 0);
        let once = lambda_vectors(conv, dim, &[(one, vs.clone())]);
        prop_assert_eq!(contract_lambda(&Wedge::of_vectors(dim, &vs), conv).unwrap(), expand(dim, &once));
        let twice = lambda_vectors(conv, dim, &once);
        let direct = contract_lambda(&contract_lambda(&Wedge::of_vectors(dim, &vs), conv).unwrap(), conv).unwrap();
        prop_assert_eq!(direct, expand(dim, &twice));
    }

    #[test]
    fn contraction_is_equivariant((m, g) in (2usize..=4).prop_flat_map(|m| (Just(m), symplectic_map(m))), seed in vectors(8, 3)) {
        let dim = 2 * m;
        prop_assert_eq!(g.dim(), dim);
        prop_assert!(g.is_symplectic(SymplecticConvention::Ef));
        let vs: Vec<Vec<Scalar>> = seed.into_iter().map(|v| v[..dim].to_vec()).collect();
        let v = Wedge::of_vectors(dim, &vs);
        let lhs = contract_lambda(&signed_perm_action(&g, &v).unwrap(), SymplecticConvention::Ef).unwrap();
        let rhs = signed_perm_action(&g, &contract_lambda(&v, SymplecticConvention::Ef).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn kernel_rank_matches_formula() {
    for m in 1..=5usize {
        for k in 0..=m {
            assert_eq!(kernel_rank(m, k, SymplecticConvention::Ef).unwrap() as u64, harmonic_wedge_dim(m as u64, k as u64), "m={m} k={k}");
        }
    }
}
