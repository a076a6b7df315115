//! Cross-module properties over the catalog and random inputs.

use conicsyz::catalog::{self, entries, ziegler_compare, CatalogEntry, CurveRef, RunVerdict};
use conicsyz::classifier::{enumerate_nodal_tacnodal, pog_filter, VerdictStatus};
use conicsyz::combinatorics::{exponent_sum, poincare_split, total_tjurina, PoincareSplit, WeakCombinatorics};
use conicsyz::linalg::{self, modular};
use conicsyz::poly::basis_len;
use conicsyz::syzygy::{
    analyze, euler_relation_holds, hilbert_numerator_from_milnor, hilbert_numerator_from_resolution, koszul_vectors,
    verify_dimca_sticlaru, Classification, EngineError, JacobianData,
};
use conicsyz::{parse, HomogeneousPolynomial};
use proptest::prelude::*;

/// Every catalog curve with a built-in equation, at each sample parameter.
fn catalog_curves() -> Vec<(String, CatalogEntry, HomogeneousPolynomial)> {
    let mut out = Vec::new();
    for e in entries().into_iter().filter(|e| !e.user_equation) {
        if e.is_parametric() {
            for v in e.sample_params.clone() {
                let f = catalog::specialize(&e, &v).unwrap();
                out.push((format!("{}@{v}", e.name), e.clone(), f));
            }
        } else {
            let f = e.expand(None).unwrap();
            out.push((e.name.to_string(), e, f));
        }
    }
    out
}

#[test]
fn euler_and_koszul_on_catalog() {
    for (name, _, f) in catalog_curves() {
        assert!(euler_relation_holds(&f), "{name}");
        let data = JacobianData::new(&f).unwrap();
        let d = f.degree();
        for v in koszul_vectors(&data) {
            assert!(data.is_syzygy(&v, d - 1), "{name}");
        }
    }
}

#[test]
fn catalog_samples_pass_with_census_tau() {
    for (name, param, result) in catalog::run_samples() {
        let r = result.unwrap_or_else(|e| panic!("{name} {param:?}: {e}"));
        assert_eq!(r.verdict, RunVerdict::Pass, "{name} {param:?}: {:?}", r.mismatches);
        assert_eq!(r.profile.checks.tau_census, Some(true));
        assert!(r.profile.checks.hilbert_numerator && r.profile.checks.euler);
        if r.profile.classification == Classification::PlusOneGenerated {
            assert!(verify_dimca_sticlaru(&r.profile), "{name}");
        }
    }
}

#[test]
fn hilbert_identity_and_census_tau_per_curve() {
    for (name, entry, f) in catalog_curves() {
        let p = analyze(&f).unwrap();
        assert_eq!(p.tau as i64, total_tjurina(&entry.declared_wc), "{name}");
        let from_milnor = hilbert_numerator_from_milnor(&p.milnor_hilbert);
        let from_resolution =
            hilbert_numerator_from_resolution(p.degree, &p.generator_degrees, &p.second_syzygy_degrees);
        assert_eq!(from_milnor, from_resolution, "{name}");
        // Rank of the resolution: m generators, m - 2 relations.
        assert_eq!(p.second_syzygy_degrees.len() + 2, p.generator_degrees.len(), "{name}");
    }
}

#[test]
fn plus_one_generated_curves_match_census_splits() {
    for (name, entry, f) in catalog_curves() {
        let p = analyze(&f).unwrap();
        if p.classification != Classification::PlusOneGenerated {
            continue;
        }
        let (d1, d2, d3) =
            (p.generator_degrees[0] as i64, p.generator_degrees[1] as i64, p.generator_degrees[2] as i64);
        let wc = &entry.declared_wc;
        assert_eq!(poincare_split(wc, d3).unwrap(), PoincareSplit::Split { d1, d2 }, "{name}");
        assert_eq!(d1 * d2 + d3, exponent_sum(wc).unwrap(), "{name}");
        let verdict = pog_filter(wc).unwrap();
        assert!(verdict.witnesses.iter().any(|w| (w.d1, w.d2, w.h) == (d1, d2, d3)), "{name}");
    }
}

#[test]
fn parametric_samples_agree() {
    for e in entries().into_iter().filter(|e| e.is_parametric()) {
        let profiles: Vec<_> =
            e.sample_params.iter().map(|v| analyze(&catalog::specialize(&e, v).unwrap()).unwrap()).collect();
        for p in &profiles[1..] {
            assert_eq!(p.generator_degrees, profiles[0].generator_degrees, "{}", e.name);
            assert_eq!(p.tau, profiles[0].tau, "{}", e.name);
            assert_eq!(p.classification, profiles[0].classification, "{}", e.name);
            assert_eq!(p.second_syzygy_degrees, profiles[0].second_syzygy_degrees, "{}", e.name);
        }
    }
}

#[test]
fn modular_screen_agrees_with_exact_rank() {
    let primes = modular::screening_primes(3, modular::SCREEN_SEED, &[]);
    for (name, _, f) in catalog_curves() {
        let data = JacobianData::new(&f).unwrap();
        let d = f.degree();
        for r in [d / 2, d - 2, d - 1] {
            let rows = data.relation_rows(r);
            let cols = 3 * basis_len(r);
            let exact = linalg::integer_rank(rows.clone(), cols);
            for (p, rk) in primes.iter().zip(modular::screen_ranks(&rows, cols, &primes)) {
                assert_eq!(rk, exact, "{name} r={r} p={p}");
            }
        }
    }
}

#[test]
fn ziegler_comparison_is_symmetric() {
    let a = CurveRef::parse("ziegler_C1").unwrap();
    let b = CurveRef::parse("ziegler_C2").unwrap();
    let ab = ziegler_compare(&a, &b).unwrap();
    let ba = ziegler_compare(&b, &a).unwrap();
    assert_eq!(ab.swapped(), ba);
    let base = CurveRef::parse("ziegler_base").unwrap();
    let pencil = CurveRef::parse("three_conics_pencil@3").unwrap();
    let c = ziegler_compare(&base, &pencil).unwrap();
    assert_eq!(c, ziegler_compare(&pencil, &base).unwrap().swapped());
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["conicsyz", "analyze", "(x^2+y^2-z^2)*(2*x^2+y^2-z^2)*(x^2+2*y^2-z^2)"];
    let first = conicsyz::cli::run(args);
    for _ in 0..3 {
        assert_eq!(conicsyz::cli::run(args), first);
    }
    let e1 = conicsyz::cli::run(["conicsyz", "enumerate", "--k", "4"]);
    assert_eq!(e1, conicsyz::cli::run(["conicsyz", "enumerate", "--k", "4"]));
    let l1 = conicsyz::cli::run(["conicsyz", "catalog", "list"]);
    assert_eq!(l1.code, 0);
    assert_eq!(l1, conicsyz::cli::run(["conicsyz", "catalog", "list"]));
}

#[test]
fn nodal_tacnodal_censuses_beyond_four_have_no_candidates() {
    for k in 5..=9 {
        assert!(enumerate_nodal_tacnodal(k).iter().all(|v| v.status != VerdictStatus::Candidate), "k={k}");
    }
}

fn linear_form() -> impl Strategy<Value = String> {
    (-3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("nonzero", |(a, b, c)| (*a, *b, *c) != (0, 0, 0))
        .prop_map(|(a, b, c)| format!("({a}*x+{b}*y+{c}*z)"))
}

fn quadratic_form() -> impl Strategy<Value = String> {
    proptest::collection::vec(-3i64..=3, 6)
        .prop_filter("nonzero", |v| v.iter().any(|c| *c != 0))
        .prop_map(|v| format!("({}*x^2+{}*x*y+{}*x*z+{}*y^2+{}*y*z+{}*z^2)", v[0], v[1], v[2], v[3], v[4], v[5]))
}

fn small_curve() -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![linear_form(), quadratic_form()], 1..=3)
        .prop_map(|fs| fs.join("*"))
        .prop_filter("degree at least 2", |s| parse(s).map(|f| f.degree() >= 2).unwrap_or(false))
}

fn census_strategy() -> impl Strategy<Value = WeakCombinatorics> {
    (2u32..7, 0u64..12, 0u64..4, 0u64..20, 0u64..4)
        .prop_map(|(k, n2, n3, t3, t5)| format!("k={k}; n2={n2}, n3={n3}, t3={t3}, t5={t5}").parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_products_resolve_consistently(text in small_curve()) {
        let f = parse(&text).unwrap();
        match analyze(&f) {
            Ok(p) => {
                prop_assert!(p.checks.euler);
                prop_assert!(p.checks.hilbert_numerator, "{}", text);
                prop_assert_eq!(p.second_syzygy_degrees.len() + 2, p.generator_degrees.len());
                prop_assert!(p.generator_degrees.windows(2).all(|w| w[0] <= w[1]));
                prop_assert_eq!(p.generator_degrees[0], p.mdr);
                prop_assert!(*p.generator_degrees.last().unwrap() < p.degree);
                let d = p.degree as i64;
                let g: Vec<i64> = p.generator_degrees.iter().map(|&x| x as i64).collect();
                let tau = p.tau as i64;
                match p.classification {
                    Classification::PlusOneGenerated => prop_assert!(verify_dimca_sticlaru(&p)),
                    Classification::Free => {
                        prop_assert_eq!(g[0] + g[1], d - 1);
                        prop_assert_eq!(tau, (d - 1).pow(2) - g[0] * g[1]);
                    }
                    Classification::NearlyFree => {
                        prop_assert_eq!(g[0] + g[1], d);
                        prop_assert_eq!(tau, (d - 1).pow(2) - g[0] * (d - g[0] - 1) - 1);
                    }
                    Classification::Smooth => prop_assert_eq!(tau, 0),
                    Classification::MSyzygy => prop_assert!(g.len() >= 3),
                }
            }
            // Non-reduced products (repeated factors) have infinite Milnor algebra.
            Err(EngineError::NotStabilized { .. }) | Err(EngineError::SearchExhausted(_)) => {}
            Err(e) => prop_assert!(false, "{}: {}", text, e),
        }
    }

    #[test]
    fn display_round_trips(text in small_curve()) {
        let f = parse(&text).unwrap();
        prop_assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn candidates_satisfy_identities(wc in census_strategy()) {
        if let Ok(v) = pog_filter(&wc) {
            if v.is_candidate() {
                let rhs = exponent_sum(&wc).unwrap();
                for w in &v.witnesses {
                    prop_assert_eq!(w.d1 + w.d2, 2 * wc.k as i64);
                    prop_assert_eq!(w.d1 * w.d2 + w.h, rhs);
                    prop_assert!(w.d1 <= w.d2 && w.h > 0);
                }
            } else {
                prop_assert!(v.witnesses.is_empty());
            }
        }
    }
}
