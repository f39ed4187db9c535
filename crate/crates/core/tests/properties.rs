use filiform::algebra::split_e1_e2;
use filiform::extension::d1_r_identity_holds;
use filiform::operator::LinearOperator;
use filiform::{
    admissible_cocycles, central_extension, decompose, enumerate, involution_f, operator_d1, operator_d2,
    partner, reduce, Cohomology, Form, Monomial, RowVector, VergneAlgebra,
};
use proptest::prelude::*;

fn form_in(n: usize, max_terms: usize) -> impl Strategy<Value = Form> {
    prop::collection::vec(0u64..1 << n, 0..max_terms)
        .prop_map(move |bits| Form::from_monomials(n, bits.into_iter().map(Monomial::from_bits)))
}

/// A form all of whose terms have topological degree `k`.
fn homogeneous_form(n: usize, k: usize) -> impl Strategy<Value = Form> {
    prop::collection::vec(prop::sample::subsequence((1..=n).collect::<Vec<_>>(), k), 0..12).prop_map(
        move |terms| {
            let mut f = Form::zero(n);
            for idx in terms {
                f.toggle(Monomial::from_indices(n, &idx).unwrap().unwrap());
            }
            f
        },
    )
}

fn ambient_and_forms() -> impl Strategy<Value = (usize, Form, Form, Form)> {
    (5usize..=10).prop_flat_map(|n| (Just(n), form_in(n, 8), form_in(n, 8), form_in(n, 8)))
}

fn algebra() -> impl Strategy<Value = VergneAlgebra> {
    (5usize..=10).prop_flat_map(|n| {
        let all = enumerate(n).unwrap();
        prop::sample::select(all)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 600, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn wedge_is_associative_and_bilinear((_n, a, b, c) in ambient_and_forms()) {
        let ab_c = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let a_bc = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = a.sum(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&c).unwrap().sum(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        // Over GF(2) the exterior algebra is commutative.
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
    }

    #[test]
    fn second_operator_identity((n, w, _, _) in ambient_and_forms()) {
        let e2 = Monomial::generator(2);
        let d1 = operator_d1(n);
        let lhs = operator_d2(n).apply(&w).wedge_monomial(e2);
        let rhs = d1.apply(&d1.apply(&w)).wedge_monomial(e2);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_text_round_trips((n, w, _, _) in ambient_and_forms()) {
        let text = w.to_string();
        prop_assert_eq!(Form::parse(n, &text).unwrap(), w);
    }

    #[test]
    fn differential_is_a_derivation(
        (g, a, b) in algebra().prop_flat_map(|g| {
            let n = g.dim();
            (Just(g), form_in(n, 6), form_in(n, 6))
        })
    ) {
        let d = g.differential();
        let lhs = d.apply(&a.wedge(&b).unwrap());
        let rhs = d.apply(&a).wedge(&b).unwrap().sum(&a.wedge(&d.apply(&b)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn involution_squares_to_identity_and_preserves_degrees(
        (k, w) in (5usize..=10).prop_flat_map(|n| (2..=n).prop_flat_map(move |k| (Just(k), homogeneous_form(n, k))))
    ) {
        let fw = involution_f(&w).unwrap();
        prop_assert_eq!(involution_f(&fw).unwrap(), w.clone());
        let index_sums: std::collections::BTreeSet<usize> = w.terms().map(Monomial::degree).collect();
        for t in fw.terms() {
            prop_assert_eq!(t.top_degree(), k);
            prop_assert!(index_sums.contains(&t.degree()));
        }
    }

    #[test]
    fn differential_raises_length_and_keeps_index_sum(g in algebra(), bits in any::<u64>()) {
        let n = g.dim();
        let m = Monomial::from_bits(bits & ((1u64 << n) - 1));
        for t in g.differential().apply_monomial(m).terms() {
            prop_assert_eq!(t.top_degree(), m.top_degree() + 1);
            prop_assert_eq!(t.degree(), m.degree());
        }
    }

    #[test]
    fn row_text_round_trips(n in 5usize..=20, v in any::<u64>()) {
        let row = RowVector::from_free_value(n, v & ((1u64 << (n - 4)) - 1));
        prop_assert_eq!(RowVector::parse(&row.to_string()).unwrap(), row);
        prop_assert_eq!(RowVector::parse(&row.compact()).unwrap(), row);
        prop_assert_eq!(RowVector::parse_with_dim(n, &row.compact()).unwrap(), row);
    }
}

#[test]
fn extension_round_trips() {
    for n in 5..=11 {
        for g in enumerate(n).unwrap() {
            for omega in admissible_cocycles(&g) {
                let h = central_extension(&g, &omega).unwrap();
                assert_eq!(reduce(&h).unwrap(), (g.clone(), omega.clone()));
            }
            if n >= 6 {
                let (base, omega) = reduce(&g).unwrap();
                assert_eq!(central_extension(&base, &omega).unwrap(), g);
            }
            let dec = decompose(&g);
            assert_eq!(dec.replay().unwrap(), g);
            assert!(dec.root.is_m0() || dec.root.is_m2());
        }
    }
}

#[test]
fn partner_is_an_involution_without_fixed_points() {
    for n in 5..=12 {
        let all = enumerate(n).unwrap();
        for g in &all {
            let p = partner(g).unwrap();
            assert!(all.contains(&p));
            assert_ne!(&p, g);
            assert_eq!(&partner(&p).unwrap(), g);
        }
    }
}

#[test]
fn d1_r_identity_on_every_cocycle_basis() {
    for n in 5..=9 {
        for g in enumerate(n).unwrap() {
            let coh = Cohomology::new(&g);
            for k in 2..=n {
                for m in filiform::exterior::degree_range(n, k) {
                    for z in coh.cocycle_basis(k, m).unwrap() {
                        assert!(d1_r_identity_holds(&g, &z), "{} cocycle {z}", g.row());
                    }
                }
            }
        }
    }
}

#[test]
fn split_reassembles() {
    let n = 8;
    let w = Form::parse(n, "e1^e3^e5 + e2^e4 + e1^e2^e7 + e3^e6^e8 + e2").unwrap();
    let (x, y, z) = split_e1_e2(&w);
    let back = x
        .wedge_monomial(Monomial::generator(1))
        .sum(&y.wedge_monomial(Monomial::generator(2)))
        .unwrap()
        .sum(&z)
        .unwrap();
    assert_eq!(back, w);
    assert!(z.terms().all(|t| !t.contains(1) && !t.contains(2)));
    assert!(y.terms().all(|t| !t.contains(1) && !t.contains(2)));
    assert!(x.terms().all(|t| !t.contains(1)));
}
