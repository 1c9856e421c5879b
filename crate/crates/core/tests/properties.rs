use lpa_core::corpus;
use lpa_core::ideals::{self, IdealRep};
use lpa_core::io::{emit_ideal, parse_ideal};
use lpa_core::lattice::{breaking_vertices, enumerate_hs, hereditary_saturated_closure};
use lpa_core::oracles::{brute_hs, engine_factor_mod_p, trial_division_factor};
use lpa_core::theorems::Analysis;
use lpa_core::{AdmissiblePair, FieldTag, LaurentPoly};
use proptest::prelude::*;

fn poly_strategy(field: FieldTag, max_degree: usize) -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-4i64..=4, 1..=max_degree + 1), -3i64..=3).prop_filter_map(
        "nonzero",
        move |(coeffs, shift)| {
            let p = LaurentPoly::from_ints(field, shift, &coeffs);
            (!p.is_zero()).then_some(p)
        },
    )
}

fn field_strategy() -> impl Strategy<Value = FieldTag> {
    prop_oneof![Just(FieldTag::Rationals), Just(FieldTag::Prime(5))]
}

fn product(factors: &[(LaurentPoly, u32)], field: FieldTag) -> LaurentPoly {
    factors
        .iter()
        .fold(LaurentPoly::one(field), |acc, (f, k)| acc.mul(&f.pow(*k as i64).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gcd_times_lcm_is_product(
        (f, g) in field_strategy().prop_flat_map(|k| (poly_strategy(k, 5), poly_strategy(k, 5)))
    ) {
        let lhs = f.gcd(&g).unwrap().mul(&f.lcm(&g).unwrap()).unwrap();
        prop_assert!(lhs.same_ideal(&f.mul(&g).unwrap()));
        prop_assert!(f.gcd(&g).unwrap().divides(&f).unwrap());
        prop_assert!(f.divides(&f.lcm(&g).unwrap()).unwrap());
    }

    #[test]
    fn canon_is_idempotent_and_an_associate(f in field_strategy().prop_flat_map(|k| poly_strategy(k, 6))) {
        let c = f.canon();
        prop_assert_eq!(c.canon(), c.clone());
        prop_assert!(c.same_ideal(&f));
        prop_assert!(f.divides(&c).unwrap() && c.divides(&f).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factor_reconstructs(f in field_strategy().prop_flat_map(|k| poly_strategy(k, 6))) {
        let factors = f.factor().unwrap();
        prop_assert!(factors.iter().all(|(g, _)| g.is_irreducible().unwrap()));
        prop_assert_eq!(product(&factors, f.field()), f.generator());
    }

    #[test]
    fn squarefree_core_ignores_powers(
        f in field_strategy().prop_flat_map(|k| poly_strategy(k, 3)),
        n in 1i64..=5,
    ) {
        let core = f.squarefree_core().unwrap();
        prop_assert_eq!(f.pow(n).unwrap().squarefree_core().unwrap(), core.clone());
        prop_assert!(core.divides(&f).unwrap());
    }

    #[test]
    fn display_parse_roundtrip(f in field_strategy().prop_flat_map(|k| poly_strategy(k, 6))) {
        prop_assert_eq!(LaurentPoly::parse(f.field(), &f.to_string()).unwrap(), f);
    }

    #[test]
    fn fp_factor_agrees_with_trial_division(
        p in prop_oneof![Just(2u64), Just(3), Just(5)],
        raw in prop::collection::vec(0u64..5, 2..=7),
    ) {
        let mut coeffs: Vec<u64> = raw.iter().map(|c| c % p).collect();
        if coeffs[0] == 0 { coeffs[0] = 1; }
        let last = coeffs.len() - 1;
        if coeffs[last] == 0 { coeffs[last] = 1; }
        prop_assert_eq!(engine_factor_mod_p(p, &coeffs).unwrap(), trial_division_factor(p, &coeffs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hereditary_saturated_sets_match_brute_force(seed in any::<u64>()) {
        let g = corpus::random_graph(seed, 10);
        prop_assert_eq!(enumerate_hs(&g), brute_hs(&g).unwrap());
    }

    #[test]
    fn closure_is_idempotent_and_extensive(seed in any::<u64>(), bits in any::<u64>()) {
        let g = corpus::random_graph(seed, 8);
        let x = lpa_core::VertexSet::from_bits(bits & g.all().bits());
        let c = hereditary_saturated_closure(&g, x);
        prop_assert!(x.is_subset(c));
        prop_assert_eq!(hereditary_saturated_closure(&g, c), c);
    }

    #[test]
    fn ideal_calculus_laws(seed in any::<u64>()) {
        let a = Analysis::new(corpus::random_graph(seed, 6), FieldTag::Rationals).unwrap();
        let g = a.g();
        let sample = a.sample_ideals().unwrap();
        for i in &sample {
            prop_assert!(ideals::contains(g, i, i).unwrap());
            prop_assert!(ideals::contains(g, i, &ideals::limit_power(g, i)).unwrap());
            prop_assert_eq!(parse_ideal(g, a.field, &emit_ideal(g, i)).unwrap(), i.clone());
            if i.is_graded() {
                prop_assert_eq!(ideals::power(g, i, 5).unwrap(), i.clone());
            } else {
                let powers: Vec<IdealRep> = (1..=5).map(|n| ideals::power(g, i, n).unwrap()).collect();
                for m in 0..5 {
                    prop_assert!(!powers[m].is_graded());
                    for n in m + 1..5 {
                        prop_assert_ne!(&powers[m], &powers[n]);
                    }
                }
            }
        }
        for i in &sample {
            for j in &sample {
                let ij = ideals::contains(g, i, j).unwrap();
                if let (Ok(p), Ok(q)) = (ideals::product(g, i, j), ideals::product(g, j, i)) {
                    prop_assert_eq!(&p, &q);
                }
                if i.is_graded() && j.is_graded() {
                    let meet = ideals::intersect(g, i, j).unwrap();
                    prop_assert_eq!(ideals::product(g, i, j).unwrap(), meet.clone());
                    prop_assert_eq!(
                        meet.graded_part(),
                        a.lattice.pair_meet(&i.graded_part(), &j.graded_part()).unwrap()
                    );
                }
                if let Ok(r) = ideals::intersect(g, i, j) {
                    prop_assert!(ideals::contains(g, i, &r).unwrap() && ideals::contains(g, j, &r).unwrap());
                    for x in &sample {
                        if ideals::contains(g, i, x).unwrap() && ideals::contains(g, j, x).unwrap() {
                            prop_assert!(ideals::contains(g, &r, x).unwrap());
                        }
                    }
                }
                if !ij {
                    continue;
                }
                for k in &sample {
                    if ideals::contains(g, j, k).unwrap() {
                        prop_assert!(ideals::contains(g, i, k).unwrap());
                    }
                }
                if ideals::contains(g, j, i).unwrap() {
                    prop_assert_eq!(i, j);
                }
            }
        }
    }

    #[test]
    fn graded_primality_matches_directedness(seed in any::<u64>()) {
        let a = Analysis::new(corpus::random_graph(seed, 7), FieldTag::Rationals).unwrap();
        let g = a.g();
        for h in a.lattice.hereditary_saturated_sets() {
            if h == g.all() {
                continue;
            }
            let pair = AdmissiblePair { h, s: breaking_vertices(g, h).unwrap() };
            if g.downward_directed(g.all().difference(h)).unwrap().holds() {
                prop_assert!(a.is_graded_prime(&pair).unwrap());
            }
        }
        let graded = a.graded_primes();
        for p in &graded {
            let w = ideals::is_prime(g, &a.lattice, &IdealRep::graded(*p)).unwrap();
            prop_assert!(w.is_prime());
        }
    }
}
