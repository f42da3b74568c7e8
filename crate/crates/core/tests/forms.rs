use metacover::abelian_core::functors::FunctorTag;
use metacover::abelian_core::{hom_ext, FgAbelianGroup};
use metacover::forms::*;
use metacover::util::gcd_i64;
use proptest::prelude::*;

/// Rank of an integer matrix over `ℤ/p` by plain Gaussian elimination.
fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|v| v.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c] * inv % p;
                for k in 0..cols {
                    m[i][k] = (m[i][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `1 ± τ` on `ℤ^r ⊗ ℤ^r` as a dense matrix.
fn one_plus_sign_swap(r: usize, sign: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; r * r]; r * r];
    for i in 0..r {
        for j in 0..r {
            m[i * r + j][i * r + j] += 1;
            m[j * r + i][i * r + j] += sign;
        }
    }
    m
}

#[test]
fn polarization_of_examples() {
    let q = QuadForm::from_coeffs(1, 9, &[(0, 0, 4)]).unwrap();
    let b = polarize(&q);
    for x in -3..4 {
        for y in -3..4 {
            assert_eq!(b.eval(&[x], &[y]), (8 * x * y).rem_euclid(9));
        }
    }
    let q = QuadForm::from_coeffs(2, 7, &[(0, 1, 1)]).unwrap();
    assert_eq!(polarize(&q).matrix, vec![vec![0, 1], vec![1, 0]]);
    assert!(polarize(&QuadForm::zero(3, 5)).is_zero());
}

#[test]
fn wedge_square_of_rank_two() {
    assert_eq!(functor_apply(&Lattice::new(2), FunctorTag::Wedge2).group, FgAbelianGroup::free(1));
}

#[test]
fn ant_square_of_rank_two_matches_rank_counts() {
    // Ant² = coker(1+τ): free rank from a large prime, 2-torsion from ℤ/2.
    let m = one_plus_sign_swap(2, 1);
    let free = 4 - rank_mod_p(&m, 10007);
    let two = 4 - rank_mod_p(&m, 2) - free;
    let odd = 4 - rank_mod_p(&m, 3) - free;
    assert_eq!((free, two, odd), (1, 2, 0));
    let v = functor_apply(&Lattice::new(2), FunctorTag::Ant2);
    assert_eq!(v.group, FgAbelianGroup::new(1, &[2, 2]));
}

#[test]
fn gamma_square_of_rank_one_has_index_two_sublattice() {
    let v = functor_apply(&Lattice::new(1), FunctorTag::Gamma2);
    assert_eq!(v.group, FgAbelianGroup::free(1));
    let d = &v.diagram;
    assert!(d.sym_to_gamma.is_injective());
    assert_eq!(d.sym_to_gamma.cokernel(), FgAbelianGroup::cyclic(2));
}

#[test]
fn coinvariants_rank_two() {
    let h = sigma2_homology(&Lattice::new(2), false);
    assert_eq!(h.h0, FgAbelianGroup::free(3));
    assert_eq!(h.hm1, FgAbelianGroup::cyclic_power(2, 2));
    assert!(h.hm2.is_trivial());
}

#[test]
fn coinvariants_rank_one() {
    let h = sigma2_homology(&Lattice::new(1), false);
    assert_eq!((h.h0, h.hm1, h.hm2), (FgAbelianGroup::free(1), FgAbelianGroup::cyclic(2), FgAbelianGroup::trivial()));
    let h = sigma2_homology(&Lattice::new(1), true);
    assert_eq!((h.h0, h.hm1, h.hm2), (FgAbelianGroup::cyclic(2), FgAbelianGroup::trivial(), FgAbelianGroup::cyclic(2)));
}

#[test]
fn coinvariants_agree_with_functor_values() {
    for r in 1..=4 {
        let l = Lattice::new(r);
        let untwisted = sigma2_homology(&l, false);
        let twisted = sigma2_homology(&l, true);
        assert_eq!(untwisted.h0, functor_apply(&l, FunctorTag::Sym2).group);
        assert_eq!(twisted.h0, functor_apply(&l, FunctorTag::Ant2).group);
        assert_eq!(untwisted.hm1, FgAbelianGroup::cyclic_power(2, r));
        assert_eq!(twisted.hm2, FgAbelianGroup::cyclic_power(2, r));
    }
}

#[test]
fn refinements_of_minus_one_in_mu4() {
    // b(g,g) = -1 = ζ₄², so the table entry is 2 in ℤ/4; Q(g) = ±i are exponents 1, 3.
    let g = FgAbelianGroup::cyclic(2);
    let b = BilinearFormModN::from_rows(4, &[vec![2]]);
    let qs = quadratic_refinements(&g, &b, None).unwrap();
    let mut found: Vec<i64> = qs.iter().map(|q| q.value(&[1])).collect();
    found.sort();
    // Polarization at (g,g) is Q(0) - 2Q(g); as an independent check enumerate Q(g).
    let oracle: Vec<i64> = (0..4i64).filter(|&x| (-2 * x).rem_euclid(4) == 2).collect();
    assert_eq!(found, oracle);
    assert_eq!(found, vec![1, 3]);
}

#[test]
fn canonical_refinement_is_flagged() {
    let g = FgAbelianGroup::cyclic(2);
    let half = BilinearFormModN::from_rows(4, &[vec![2]]);
    let b = half.add(&half);
    let qs = quadratic_refinements(&g, &b, Some(&half)).unwrap();
    let canon: Vec<_> = qs.iter().filter(|q| q.canonical).collect();
    assert_eq!(canon.len(), 1);
    assert_eq!(canon[0].value(&[1]), 2);
}

#[test]
fn refinements_match_exhaustive_search() {
    for (orders, m, rows) in [
        (vec![2, 2], 4, vec![vec![2, 2], vec![2, 0]]),
        (vec![2, 4], 4, vec![vec![2, 2], vec![2, 2]]),
        (vec![4], 8, vec![vec![2]]),
    ] {
        let g = FgAbelianGroup::new(0, &orders);
        let b = BilinearFormModN::from_rows(m, &rows);
        let mut ours: Vec<Vec<i64>> = quadratic_refinements(&g, &b, None).unwrap().into_iter().map(|q| q.values).collect();
        ours.sort();
        let n = g.elements().len() as u32;
        let mut oracle = Vec::new();
        for code in 0..(m as u64).pow(n - 1) {
            let mut vals = vec![0];
            vals.extend((0..n - 1).map(|k| ((code / (m as u64).pow(k)) % m as u64) as i64));
            let q = FiniteQuadFunction { group: g.clone(), modulus: m, values: vals.clone(), canonical: false };
            if q.refines(&b) {
                oracle.push(vals);
            }
        }
        oracle.sort();
        assert_eq!(ours, oracle);
        let (hom, _) = hom_ext(&g, &FgAbelianGroup::cyclic(m));
        assert_eq!(ours.len() as u64, u64::try_from(hom.order().unwrap()).unwrap());
    }
}

#[test]
fn binomial_identity_examples() {
    let g = FgAbelianGroup::cyclic(2);
    let b = BilinearFormModN::from_rows(4, &[vec![2]]);
    let q = FiniteQuadFunction::from_fn(&g, 4, |a| a[0]);
    assert!(binomial_identity_check(&q, &b, &[1], 2).unwrap());
    let corrupted = BilinearFormModN::from_rows(4, &[vec![0]]);
    assert!(!binomial_identity_check(&q, &corrupted, &[1], 2).unwrap());
    let zero = FiniteQuadFunction::constant_zero(&g, 4);
    assert!(binomial_identity_check(&zero, &BilinearFormModN::zero(1, 4), &[1], 2).unwrap());
    assert!(binomial_identity_check(&q, &b, &[1], 3).is_err());
}

#[test]
fn refinement_of_trivial_group() {
    let qs = quadratic_refinements(&FgAbelianGroup::trivial(), &BilinearFormModN::zero(0, 3), None).unwrap();
    assert_eq!(qs.len(), 1);
}

#[test]
fn theta_examples() {
    let s = theta_skeleton(&Lattice::new(2), 3, 2);
    assert_eq!(s.pi0, FgAbelianGroup::cyclic_power(3, 3));
    assert!(s.pi1.is_trivial());
    assert_eq!(s.pi2, FgAbelianGroup::cyclic_power(3, 2));
    for n in 1..6 {
        let s = theta_skeleton(&Lattice::new(1), n, 1);
        assert!(s.pi0.is_trivial());
        assert_eq!(s.pi1, FgAbelianGroup::cyclic(n));
    }
    let s = theta_skeleton(&Lattice::new(2), 2, 1);
    assert_eq!(s.pi0, FgAbelianGroup::cyclic(2));
    assert_eq!(s.pi1, FgAbelianGroup::cyclic_power(2, 2));
    assert!(s.pi2.is_trivial());
}

#[test]
fn level_two_is_the_shift_of_level_one() {
    // π₂ of level 2 is π₁ of level 1, and the π₀'s differ by the ∧² ↔ Sym² swap.
    for r in 1..=3 {
        for n in [2, 3, 4] {
            let l = Lattice::new(r);
            let one = theta_skeleton(&l, n, 1);
            let two = theta_skeleton(&l, n, 2);
            assert_eq!(two.pi2, one.pi1);
            assert_eq!(one.pi0, functor_apply(&l, FunctorTag::Wedge2).group.mod_n(n));
            assert_eq!(two.pi0, functor_apply(&l, FunctorTag::Sym2).group.mod_n(n));
            let methods: Vec<_> = theta_computations(&l, n, 2).into_iter().map(|c| c.method).collect();
            assert!(methods.contains(&"cosimplicial shift of level 1"));
        }
    }
}

fn quad_strategy() -> impl Strategy<Value = (QuadForm, QuadForm)> {
    (1usize..=3, 1i64..=12).prop_flat_map(|(r, n)| {
        let len = r * (r + 1) / 2;
        (prop::collection::vec(0..n, len), prop::collection::vec(0..n, len)).prop_map(move |(a, b)| {
            (QuadForm::from_list(r, n, &a).unwrap(), QuadForm::from_list(r, n, &b).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn polarization_is_additive((q1, q2) in quad_strategy()) {
        prop_assert_eq!(polarize(&q1.add(&q2)), polarize(&q1).add(&polarize(&q2)));
    }

    #[test]
    fn forms_are_even_and_polarization_biadditive((q, _) in quad_strategy(), x in prop::collection::vec(-20i64..20, 3), y in prop::collection::vec(-20i64..20, 3), z in prop::collection::vec(-20i64..20, 3)) {
        let r = q.rank();
        let (x, y, z) = (&x[..r], &y[..r], &z[..r]);
        let neg: Vec<i64> = x.iter().map(|v| -v).collect();
        prop_assert_eq!(q.eval(&vec![0; r]), 0);
        prop_assert_eq!(q.eval(x), q.eval(&neg));
        let b = polarize(&q);
        let sum: Vec<i64> = x.iter().zip(y).map(|(a, c)| a + c).collect();
        let n = q.modulus();
        prop_assert_eq!(b.eval(x, y), (q.eval(&sum) - q.eval(x) - q.eval(y)).rem_euclid(n));
        prop_assert_eq!(b.eval(x, y), b.eval(y, x));
        prop_assert_eq!(b.eval(&sum, z), (b.eval(x, z) + b.eval(y, z)).rem_euclid(n));
    }

    #[test]
    fn json_round_trips((q, _) in quad_strategy()) {
        let text = q.to_json().to_string();
        prop_assert_eq!(QuadForm::from_json(q.rank(), &text).unwrap(), q);
    }

    #[test]
    fn refinement_count_is_zero_or_hom(d1 in 1i64..=4, d2 in 1i64..=4, m in 1i64..=8, b11 in 0i64..8, b12 in 0i64..8, b22 in 0i64..8) {
        let g = FgAbelianGroup::new(0, &[d1, d2]);
        let orders = g.torsion_i64();
        let raw = [[b11, b12], [b12, b22]];
        // Scale entries so that d_i·b_ij = 0 in ℤ/m.
        let rows: Vec<Vec<i64>> = (0..orders.len())
            .map(|i| (0..orders.len()).map(|j| raw[i][j] * m / gcd_i64(m, gcd_i64(orders[i], orders[j]))).collect())
            .collect();
        let b = BilinearFormModN::from_rows(m, &rows);
        prop_assume!((0..orders.len()).all(|i| (0..orders.len()).all(|j| (orders[i] * b.get(i, j)) % m == 0)));
        let (hom, _) = hom_ext(&g, &FgAbelianGroup::cyclic(m));
        let hom_order: u64 = hom.order().unwrap().try_into().unwrap();
        match quadratic_refinements(&g, &b, None) {
            Ok(qs) => {
                prop_assert!(qs.is_empty() || qs.len() as u64 == hom_order);
                for q in &qs {
                    prop_assert!(q.is_quadratic());
                    prop_assert!(q.refines(&b));
                }
            }
            Err(FormsError::ValueGroupTooSmall { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn diagram_is_exact_for_ranks_one_to_four() {
    for r in 1..=4 {
        for c in FunctorDiagram::new(r).verify() {
            assert!(c.holds, "rank {r}: {}", c.name);
        }
    }
}

#[test]
fn coinvariant_vanishing_for_ranks_one_to_four() {
    for r in 1..=4 {
        assert!(sigma2_homology(&Lattice::new(r), false).hm2.is_trivial());
        assert!(sigma2_homology(&Lattice::new(r), true).hm1.is_trivial());
    }
}
