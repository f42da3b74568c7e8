use metacover::abelian_core::FgAbelianGroup;
use metacover::forms::QuadForm;
use metacover::root_data::strict::{invariant_integral_forms, W_INVARIANT_NOT_STRICT};
use metacover::root_data::*;
use metacover::util::all_vectors;
use proptest::prelude::*;

fn all_forms(r: usize, n: i64) -> Vec<QuadForm> {
    all_vectors(r * (r + 1) / 2, n).into_iter().map(|v| QuadForm::from_list(r, n, &v).unwrap()).collect()
}

#[test]
fn validation_examples() {
    assert!(validate(&catalog("SL2").unwrap()).is_empty());
    assert!(validate(&catalog("A2_sc").unwrap()).is_empty());
    let mut bad = catalog("SL2").unwrap();
    for r in bad.roots.iter_mut() {
        for x in r.iter_mut() {
            *x *= 2;
        }
    }
    let v = validate(&bad);
    assert!(v.iter().any(|e| e.0.contains("4 ≠ 2")), "{v:?}");
}

#[test]
fn catalog_examples() {
    let sl2 = catalog("SL2").unwrap();
    assert_eq!((sl2.rank, sl2.num_roots()), (1, 2));
    let a = sl2.simple[0];
    assert_eq!(sl2.coroots[a].iter().zip(&sl2.roots[a]).map(|(x, y)| x * y).sum::<i64>(), 2);
    let gl2 = catalog("GL2").unwrap();
    assert_eq!(gl2.coroots[gl2.simple[0]], vec![1, -1]);
    assert_eq!(gl2.roots[gl2.simple[0]], vec![1, -1]);
    let pgl2 = catalog("PGL2").unwrap();
    assert_eq!(pgl2.coroots[pgl2.simple[0]], vec![2]);
    // PGL2 is GL2 modulo its centre: Λ/⟨(1,1)⟩ ≅ ℤ via (x,y) ↦ x - y carries (1,-1) to 2.
    let proj = |v: &[i64]| v[0] - v[1];
    assert_eq!(proj(&gl2.coroots[gl2.simple[0]]), pgl2.coroots[pgl2.simple[0]][0]);
    assert!(catalog("nonsense").is_err());
}

#[test]
fn weyl_examples() {
    let w = weyl_group(&catalog("SL2").unwrap()).unwrap();
    assert_eq!(w.order(), 2);
    let w = weyl_group(&catalog("A2_sc").unwrap()).unwrap();
    assert_eq!(w.order(), 6);
    assert_eq!(w.of_length(2).len(), 2);
    assert_eq!(weyl_group(&catalog("G2").unwrap()).unwrap().order(), 12);
    for (name, order) in [("B3_sc", 48), ("F4", 1152), ("D4_sc", 192), ("SL4", 24)] {
        assert_eq!(weyl_group(&catalog(name).unwrap()).unwrap().order(), order, "{name}");
    }
}

#[test]
fn length_two_factorizations_are_unique_up_to_commuting() {
    for name in ["SL4", "B3_sc", "G2", "SL2xSL2", "D4_ad"] {
        let rd = catalog(name).unwrap();
        let w = weyl_group(&rd).unwrap();
        let cartan = rd.cartan_matrix();
        assert_eq!(w.of_length(1).len(), rd.simple.len());
        for l in w.length_two() {
            let f = &l.factorizations;
            let (a, b) = f[0];
            if cartan[a][b] == 0 {
                assert_eq!(f.len(), 2, "{name}");
                assert!(f.contains(&(b, a)));
            } else {
                assert_eq!(f.len(), 1, "{name}");
            }
        }
    }
}

#[test]
fn weyl_group_is_closed_and_generated() {
    let rd = catalog("B2_sc").unwrap();
    let w = weyl_group(&rd).unwrap();
    for x in &w.elements {
        for y in &w.elements {
            assert!(w.find(&metacover::root_data::weyl::mat_mul(&x.matrix, &y.matrix)).is_some());
        }
    }
    assert_eq!(w.elements[0].length, 0);
}

#[test]
fn companions_examples() {
    assert_eq!(companions(&catalog("GL2").unwrap()).pi1, FgAbelianGroup::free(1));
    assert!(companions(&catalog("SL2").unwrap()).pi1.is_trivial());
    assert_eq!(companions(&catalog("PGL2").unwrap()).pi1, FgAbelianGroup::cyclic(2));
}

#[test]
fn simply_connected_companion_is_simply_connected() {
    for name in STANDARD_NAMES {
        let rd = catalog(name).unwrap();
        let c = companions(&rd);
        assert!(validate(&c.sc).is_empty(), "{name}");
        assert!(validate(&c.ad).is_empty(), "{name}");
        assert!(companions(&c.sc).pi1.is_trivial(), "{name}");
    }
}

#[test]
fn strict_examples() {
    let sl2 = catalog("SL2").unwrap();
    for n in 1..8 {
        for q in all_forms(1, n) {
            assert!(is_strict(&sl2, &q).unwrap());
        }
    }
    let gl2 = catalog("GL2").unwrap();
    for q in all_forms(2, 4) {
        assert_eq!(is_strict(&gl2, &q).unwrap(), q.coeff(0, 0) == q.coeff(1, 1));
    }
    assert!(is_strict(&catalog("G2").unwrap(), &QuadForm::zero(2, 6)).unwrap());
    assert!(is_strict(&gl2, &QuadForm::zero(3, 6)).is_err());
}

#[test]
fn enumerate_strict_examples() {
    let sl2 = catalog("SL2").unwrap();
    for n in [2, 3, 6] {
        let st = enumerate_strict(&sl2, n);
        assert_eq!(st.group, FgAbelianGroup::cyclic(n));
        assert!(st.contains(&QuadForm::from_coeffs(1, n, &[(0, 0, 1)]).unwrap()));
    }
    let gl2 = catalog("GL2").unwrap();
    for n in [2, 5] {
        let st = enumerate_strict(&gl2, n);
        assert_eq!(st.group, FgAbelianGroup::cyclic_power(n, 2));
        assert!(st.contains(&QuadForm::parse_monomials(2, n, "x^2 + y^2").unwrap()));
        assert!(st.contains(&QuadForm::parse_monomials(2, n, "xy").unwrap()));
    }
    for n in [2, 3, 4] {
        assert_eq!(enumerate_strict(&catalog("SL2xSL2").unwrap(), n).group, FgAbelianGroup::cyclic_power(n, 2));
    }
}

#[test]
fn enumerate_strict_matches_brute_force() {
    for name in ["SL3", "PGL3", "GL2", "Sp4", "SO5", "G2", "SL2xGL2", "PGL2", "SO4"] {
        let rd = catalog(name).unwrap();
        for n in [2, 3, 4] {
            let count = all_forms(rd.rank, n).into_iter().filter(|q| is_strict(&rd, q).unwrap()).count();
            let st = enumerate_strict(&rd, n);
            assert_eq!(st.group.order().unwrap(), count.into(), "{name} N={n}");
            for (g, _) in &st.generators {
                assert!(is_strict(&rd, g).unwrap());
            }
        }
    }
}

#[test]
fn strictness_on_simple_coroots_extends_to_all() {
    for name in ["SL3", "Sp4", "G2", "SO5", "GL3"] {
        let rd = catalog(name).unwrap();
        for q in all_forms(rd.rank, 4).into_iter().take(5000) {
            assert_eq!(is_strict(&rd, &q).unwrap(), is_strict_on_all_coroots(&rd, &q).unwrap(), "{name} {q}");
        }
    }
}

#[test]
fn strict_implies_invariant_and_counterexample() {
    for name in ["SL3", "GL2", "Sp4", "SO5", "G2", "PGL3", "SL2xSL2", "B3_sc"] {
        let rd = catalog(name).unwrap();
        let w = weyl_group(&rd).unwrap();
        for n in [2, 3, 4] {
            for (g, _) in enumerate_strict(&rd, n).generators {
                assert!(is_w_invariant(&g, &w), "{name} {g}");
            }
        }
    }
    let (name, n, text) = W_INVARIANT_NOT_STRICT;
    let rd = catalog(name).unwrap();
    let q = QuadForm::parse_monomials(rd.rank, n, text).unwrap();
    assert!(is_w_invariant(&q, &weyl_group(&rd).unwrap()));
    assert!(!is_strict(&rd, &q).unwrap());
}

#[test]
fn doubled_invariant_forms_are_strict() {
    for name in ["SL3", "GL2", "Sp4", "SO5", "G2", "SL2xSL2", "PGL2"] {
        let rd = catalog(name).unwrap();
        let w = weyl_group(&rd).unwrap();
        for n in [2, 4, 6] {
            for q in all_forms(rd.rank, n).into_iter().filter(|q| is_w_invariant(q, &w)) {
                assert!(is_strict(&rd, &q.scale(2)).unwrap(), "{name} {q}");
            }
        }
    }
}

#[test]
fn invariant_forms_tensor_n_are_the_strict_forms_for_simply_connected_data() {
    for name in ["SL2", "SL3", "Sp4", "G2", "B3_sc", "D4_sc", "SL2xSL2", "SL2xSp4", "F4"] {
        let rd = catalog(name).unwrap();
        assert!(companions(&rd).pi1.is_trivial());
        for n in [2, 3, 4, 6] {
            let c = compare_invariant_and_strict(&rd, n);
            assert!(c.bijective, "{name} N={n}: {c:?}");
            assert!(c.one_copy_per_factor, "{name} N={n}: {c:?}");
        }
    }
}

#[test]
fn invariant_lattice_of_gl2() {
    // x² + y² and xy span the invariants of the swap.
    let inv = invariant_integral_forms(&catalog("GL2").unwrap());
    assert_eq!(inv.len(), 2);
}

proptest! {
    #[test]
    fn strict_forms_form_a_subgroup(idx in 0usize..6, n in 2i64..7, a in prop::collection::vec(0i64..100, 6), b in prop::collection::vec(0i64..100, 6)) {
        let name = ["GL2", "SL3", "Sp4", "PGL3", "SL2xGL2", "SO4"][idx];
        let rd = catalog(name).unwrap();
        let st = enumerate_strict(&rd, n);
        let combo = |c: &[i64]| {
            st.generators.iter().enumerate().fold(QuadForm::zero(rd.rank, n), |acc, (k, (g, _))| acc.add(&g.scale(c[k % c.len()])))
        };
        let (x, y) = (combo(&a), combo(&b));
        prop_assert!(is_strict(&rd, &x).unwrap());
        prop_assert!(is_strict(&rd, &x.add(&y)).unwrap());
        prop_assert!(is_strict(&rd, &QuadForm::zero(rd.rank, n)).unwrap());
    }
}

// The comparison is only claimed for simply connected data; data with free
// π₁ are reported, not asserted.
#[test]
fn free_fundamental_group_report() {
    for name in ["GL2", "GL3", "T2", "SL2xT1"] {
        let rd = catalog(name).unwrap();
        assert_eq!(companions(&rd).pi1.torsion().len(), 0);
        for n in [2, 3, 4] {
            let c = compare_invariant_and_strict(&rd, n);
            println!("{name} N={n}: invariant rank {}, strict {}, bijective {}", c.invariant_rank, c.strict, c.bijective);
        }
    }
}
