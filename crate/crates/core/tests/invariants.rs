use proptest::prelude::*;
use sextica::poly::MonicSextic;
use sextica::sextic::{
    beta_coeffs, compute_v, gamma4_equation_coeffs, gamma4_residual, lambda_coeffs, quartic_in_z_coeffs,
    solve_gamma4, solve_sextic, Pipeline, SexticOptions,
};
use sextica::verify::{classify, match_roots, PipelineOutput, RootStatus, Tolerances};
use sextica::{c64, ComplexScalar, Polynomial};

fn complex(hw: f64) -> impl Strategy<Value = ComplexScalar> {
    (-hw..hw, -hw..hw).prop_map(|(re, im)| c64(re, im))
}

fn sextic() -> impl Strategy<Value = MonicSextic> {
    prop::array::uniform6(-5.0f64..5.0).prop_filter("b away from zero", |k| k[0].abs() > 1e-3).prop_map(
        |[b, c, d, e, f, g]| MonicSextic {
            b: c64(b, 0.0),
            c: c64(c, 0.0),
            d: c64(d, 0.0),
            e: c64(e, 0.0),
            f: c64(f, 0.0),
            g: c64(g, 0.0),
        },
    )
}

fn close(a: ComplexScalar, b: ComplexScalar, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn matching_is_symmetric(a in prop::collection::vec(complex(10.0), 0..=6), b in prop::collection::vec(complex(10.0), 0..=6)) {
        let ab = match_roots(&a, &b);
        let ba = match_roots(&b, &a);
        prop_assert_eq!(ab.max_distance, ba.max_distance);
        prop_assert_eq!(ab.pairs.len(), a.len().min(b.len()));
    }

    #[test]
    fn matching_ignores_order(a in prop::collection::vec(complex(10.0), 1..=6), k in 0usize..6) {
        let mut b = a.clone();
        b.rotate_left(k % a.len());
        prop_assert_eq!(match_roots(&a, &b).max_distance, 0.0);
    }

    #[test]
    fn verified_iff_residual_within_tol(
        roots in prop::collection::vec(complex(3.0), 2..=6),
        others in prop::collection::vec(complex(5.0), 0..=4),
        tol in 1e-12f64..1e-2,
    ) {
        let p = Polynomial::from_roots(&roots).unwrap();
        let candidates: Vec<ComplexScalar> = roots.iter().chain(&others).copied().collect();
        let tolerances = Tolerances { residual_tol: tol, ..Default::default() };
        let run = PipelineOutput { candidates: candidates.clone(), ..Default::default() };
        let r = classify(&p, run.clone(), None, &tolerances);
        for v in &r.verdicts {
            prop_assert_eq!(v.status == RootStatus::Verified, v.residual_rel <= tol);
        }
        prop_assert_eq!(r.verified_count, r.verdicts.iter().filter(|v| v.status == RootStatus::Verified).count());
        prop_assert_eq!(&r, &classify(&p, run, None, &tolerances));
    }

    #[test]
    fn close_pairs_raise_duplicates(list in prop::collection::vec(complex(5.0), 1..=5), i in 0usize..5, eps in 0.0f64..5e-8) {
        let mut candidates = list.clone();
        let src = candidates[i % list.len()];
        candidates.push(src + c64(eps, 0.0));
        let p = Polynomial::from_real(&[1.0, 0.0, -1.0]).unwrap();
        let run = PipelineOutput { candidates, ..Default::default() };
        prop_assert!(classify(&p, run, None, &Tolerances::default()).has_duplicates());
    }

    #[test]
    fn beta_is_lambda_at_zero_c(mut ms in sextic(), v in complex(20.0).prop_filter("nonzero", |v| v.norm() > 0.1)) {
        ms.c = c64(0.0, 0.0);
        let l = lambda_coeffs(&ms, v);
        let b = beta_coeffs(&ms, v);
        for k in 0..4 {
            prop_assert!(close(b[k], l[k], 1e-12), "{k}: {} vs {}", b[k], l[k]);
        }
    }

    #[test]
    fn structural_identities(ms in sextic(), t3 in any::<bool>()) {
        let pipeline = if t3 { Pipeline::T3 } else { Pipeline::T2 };
        let Ok(v) = compute_v(&ms, pipeline) else { return Ok(()) };
        let Ok(coeffs) = gamma4_equation_coeffs(&ms, v, pipeline) else { return Ok(()) };
        let Ok(g4) = solve_gamma4(&coeffs) else { return Ok(()) };
        for &g in &g4.group {
            prop_assert!(gamma4_residual(&coeffs, g) <= 1e-9);
        }
        let Ok((z, alphas)) = quartic_in_z_coeffs(&ms, v, g4.primary, pipeline) else { return Ok(()) };
        prop_assert!(close(z[0], 4.0 * alphas.a3 / ms.b + g4.primary, 1e-10));
        prop_assert!(close(alphas.a3 * v, g4.primary, 1e-10));
    }

    #[test]
    fn sextic_never_panics(k in prop::array::uniform7(-10.0f64..10.0)) {
        if let Ok(p) = Polynomial::from_real(&k) {
            match solve_sextic(&p, &SexticOptions { all_seats: true, ..Default::default() }) {
                Ok(run) => prop_assert!(run.residuals.iter().all(|r| *r >= 0.0)),
                Err(e) => prop_assert!(!e.kind().name().is_empty()),
            }
        }
    }
}
