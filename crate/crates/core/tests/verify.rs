mod common;

use common::*;
use weiltrace::algebra::{CycScalar, FlPoly};
use weiltrace::curve::CurveSpec;
use weiltrace::heisenberg::RepSpace;
use weiltrace::linalg::{FlMatrix, Subspace};
use weiltrace::symplectic::{
    companion_symplectic, random_semisimple_symplectic, BlockKind, SemisimpleProfile,
};
use weiltrace::trace::QuadraticForm;
use weiltrace::verify::*;
use weiltrace::Error;

#[test]
fn dimension_identity_examples() {
    for n in 1..=3 {
        let k = field(5);
        assert!(check_dimension_identity(&FlMatrix::identity(k, 2 * n)).unwrap());
    }
    let k = field(3);
    assert!(check_dimension_identity(&FlMatrix::scalar(k, 2, -k.one())).unwrap());
    let c = companion_symplectic(&FlPoly::from_i64(k, &[1, 0, 1])).unwrap();
    assert!(check_dimension_identity(&c).unwrap());
}

#[test]
fn main_theorem_identity_example() {
    let sp = space(3, 1);
    let k = sp.field();
    let g = FlMatrix::identity(k, 2);
    let q = QuadraticForm::new(FlMatrix::identity(k, 2)).unwrap();
    let rep = RepSpace::standard(&sp, CAP).unwrap();
    let r = check_main_theorem(&sp, &g, &q, Some(&rep)).unwrap();
    let three = CycScalar::from_integer(k, 3);
    assert_eq!(r.sign, -1);
    assert_eq!(r.trace_brute, Some(three.clone()));
    assert_eq!(r.trace_closed, three);
    assert_eq!(r.path_integral_brute, Some(CycScalar::from_integer(k, 3)));
    assert_eq!(r.path_integral_closed, CycScalar::from_integer(k, 3));
    assert!(r.equal);
}

#[test]
fn main_theorem_without_fixed_vectors() {
    let sp = space(5, 1);
    let k = sp.field();
    let g = companion_symplectic(&FlPoly::from_i64(k, &[1, 0, 1])).unwrap();
    let rep = RepSpace::standard(&sp, CAP).unwrap();
    let r = check_main_theorem(&sp, &g, &QuadraticForm::empty(k), Some(&rep)).unwrap();
    assert!(r.equal);
    // (−1)·f̄(1) = −2 ≡ 3, a non-square mod 5
    assert_eq!(r.trace_closed, CycScalar::from_integer(k, -1));

    let sp = space(3, 1);
    let k = sp.field();
    let g = FlMatrix::scalar(k, 2, -k.one());
    let rep = RepSpace::standard(&sp, CAP).unwrap();
    let r = check_main_theorem(&sp, &g, &QuadraticForm::empty(k), Some(&rep)).unwrap();
    assert!(r.equal);
    assert_eq!(r.trace_brute, Some(CycScalar::from_integer(k, -1)));
}

#[test]
fn main_theorem_rejects_bad_forms() {
    let sp = space(5, 1);
    let k = sp.field();
    let g = FlMatrix::identity(k, 2);
    assert!(QuadraticForm::new(from_rows(k, &[vec![1, 1], vec![0, 1]])).is_err());
    assert_eq!(QuadraticForm::new(from_rows(k, &[vec![1, 1], vec![1, 1]])).unwrap_err(), Error::DegenerateForm);
    let small = QuadraticForm::new(FlMatrix::identity(k, 1)).unwrap();
    assert!(matches!(check_main_theorem(&sp, &g, &small, None), Err(Error::Precondition(_))));
}

/// Σ_{γ ∈ V^g} ζ^{Q(γ)} by walking the fixed subspace directly.
fn fixed_space_sum(g: &FlMatrix, q: &QuadraticForm) -> CycScalar {
    let k = g.field();
    let fixed = (g - &FlMatrix::identity(k, g.rows())).kernel();
    let basis = fixed.basis_vectors();
    let mut counts = vec![0i64; k.modulus() as usize];
    for c in Subspace::full(k, basis.len()).enumerate() {
        let gamma: Vec<_> = (0..g.rows())
            .map(|i| basis.iter().zip(&c).fold(k.zero(), |acc, (b, &x)| acc + b[i] * x))
            .collect();
        assert_eq!(g.mul_vec(&gamma), gamma);
        counts[q.eval(&c).value() as usize] += 1;
    }
    CycScalar::from_exponent_counts(k, &counts)
}

#[test]
fn main_theorem_against_direct_fixed_point_sum() {
    let mut r = rng(41);
    for (p, n) in [(3u64, 1usize), (3, 2), (5, 1), (5, 2)] {
        let sp = space(p, n);
        let k = sp.field();
        for t in 0..25u64 {
            let profile = weiltrace::symplectic::random_profile(k, n, &mut r);
            let g = random_semisimple_symplectic(&sp, &profile, t).unwrap();
            let m = (&g - &FlMatrix::identity(k, 2 * n)).kernel().dim();
            let q = QuadraticForm::random(k, m, &mut r);
            let rep = random_rep(&sp, &mut r);
            let out = check_main_theorem(&sp, &g, &q, Some(&rep)).unwrap();
            assert!(out.equal, "ℓ={p} n={n} t={t}");
            let direct = fixed_space_sum(&g, &q).scale_int(out.sign as i64);
            assert_eq!(direct, out.trace_closed);
        }
    }
}

#[test]
fn gauss_only_sweep() {
    let report = run_sweep(&SweepConfig::new(SweepMode::GaussOnly, 5, 3, 100, 9)).unwrap();
    assert_eq!(report.summary, Summary { pass: 100, fail: 0 });
    assert!(report.trials.iter().all(|t| t.gauss_equal == Some(true)));
    assert_eq!(report.exit_code(), EXIT_PASS);
}

#[test]
fn semisimple_sweep() {
    let report = run_sweep(&SweepConfig::new(SweepMode::RandomSemisimple, 3, 2, 50, 1)).unwrap();
    assert_eq!(report.summary.fail, 0, "{:?}", report.trials.iter().find(|t| !t.passed));
    for t in &report.trials {
        assert_eq!(t.dimension_identity, Some(true));
        assert_eq!(t.brute_equal, Some(true));
        assert_eq!(t.lemma_equal, Some(true));
        assert_eq!(t.main_equal, Some(true));
    }
}

#[test]
fn any_g_sweep() {
    let report = run_sweep(&SweepConfig::new(SweepMode::RandomAny, 5, 1, 40, 2)).unwrap();
    assert_eq!(report.summary.fail, 0);
    assert!(report.trials.iter().all(|t| t.lemma_equal == Some(true)));
    assert!(report.trials.iter().any(|t| t.semisimple == Some(false)));
}

#[test]
fn curve_sweep() {
    let report = run_sweep(&SweepConfig::new(SweepMode::Curve, 3, 1, 6, 3)).unwrap();
    assert_eq!(report.summary.fail, 0, "{:?}", report.trials.iter().find(|t| !t.passed));
    assert!(report.trials.iter().all(|t| t.curve.is_some() && t.lemma_equal == Some(true)));
}

#[test]
fn above_dim_cap_checks_closed_forms_only() {
    let cfg = SweepConfig::new(SweepMode::RandomSemisimple, 5, 2, 5, 4).with_dim_cap(10);
    let report = run_sweep(&cfg).unwrap();
    assert_eq!(report.summary.fail, 0);
    for t in &report.trials {
        assert_eq!(t.brute_equal, None);
        assert_eq!(t.lemma_equal, None);
        assert_eq!(t.main_equal, Some(true));
    }
}

#[test]
fn invalid_configs() {
    let bad = [
        SweepConfig::new(SweepMode::RandomSemisimple, 4, 1, 1, 0),
        SweepConfig::new(SweepMode::RandomSemisimple, 2, 1, 1, 0),
        SweepConfig::new(SweepMode::RandomSemisimple, 3, 0, 1, 0),
        SweepConfig::new(SweepMode::Curve, 3, 2, 1, 0),
        SweepConfig::new(SweepMode::RandomAny, 7, 5, 1, 0),
        SweepConfig::new(SweepMode::GaussOnly, 7, 9, 1, 0),
        SweepConfig::new(SweepMode::RandomAny, 3, 1, 1, 0).with_dim_cap(0),
    ];
    for cfg in bad {
        assert!(matches!(run_sweep(&cfg), Err(Error::InvalidConfig(_))), "{cfg:?}");
    }
}

#[test]
fn empty_sweep() {
    let cfg = SweepConfig::new(SweepMode::RandomSemisimple, 3, 1, 0, 0);
    let report = run_sweep(&cfg).unwrap();
    assert_eq!(report.exit_code(), EXIT_PASS);
    let v: serde_json::Value = serde_json::from_slice(&emit_report(&report, ReportFormat::Json).unwrap()).unwrap();
    assert_eq!(v["trials"], serde_json::json!([]));
    assert_eq!(v["summary"], serde_json::json!({"pass": 0, "fail": 0}));
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 3);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    for mode in [SweepMode::RandomSemisimple, SweepMode::RandomAny, SweepMode::GaussOnly] {
        let cfg = SweepConfig::new(mode, 3, 2, 12, 77);
        let a = emit_report(&run_sweep(&cfg).unwrap(), ReportFormat::Json).unwrap();
        let b = emit_report(&run_sweep(&cfg).unwrap(), ReportFormat::Json).unwrap();
        assert_eq!(a, b);
        let parsed = parse_report(&a).unwrap();
        assert_eq!(parsed, run_sweep(&cfg).unwrap());
        assert_eq!(emit_report(&parsed, ReportFormat::Json).unwrap(), a);
        let c1 = emit_report(&parsed, ReportFormat::Csv).unwrap();
        assert_eq!(c1, emit_report(&run_sweep(&cfg).unwrap(), ReportFormat::Csv).unwrap());
    }
}

#[test]
fn trial_seeds_are_distinct_and_stable() {
    let seeds: std::collections::HashSet<u64> = (0..1000).map(|i| trial_seed(5, i)).collect();
    assert_eq!(seeds.len(), 1000);
    assert_eq!(trial_seed(5, 3), trial_seed(5, 3));
    assert_ne!(trial_seed(5, 3), trial_seed(6, 3));
    let cfg = SweepConfig::new(SweepMode::RandomSemisimple, 3, 1, 10, 5);
    assert_eq!(run_trial(&cfg, 7), run_sweep(&cfg).unwrap().trials[7]);
}

#[test]
fn csv_has_one_row_per_trial() {
    let report = run_sweep(&SweepConfig::new(SweepMode::RandomSemisimple, 5, 1, 7, 11)).unwrap();
    let bytes = emit_report(&report, ReportFormat::Csv).unwrap();
    let mut rd = csv::Reader::from_reader(bytes.as_slice());
    let headers = rd.headers().unwrap().clone();
    assert_eq!(&headers[0], "index");
    assert_eq!(rd.records().count(), 7);
    let empty = Report::from_trials(report.config.clone(), vec![]);
    let bytes = emit_report(&empty, ReportFormat::Csv).unwrap();
    assert_eq!(String::from_utf8(bytes).unwrap().lines().count(), 1);
}

#[test]
fn identity_frobenius_trial_serialization() {
    let spec = CurveSpec::new(7, 1, 0, 2, 3, 1).unwrap();
    let (data, trial) = check_curve(&spec, 4096).unwrap();
    assert!(data.frobenius_matrix.is_identity());
    assert!(trial.passed);
    let v = serde_json::to_value(&trial).unwrap();
    assert_eq!(v["closed"], serde_json::json!({"sign": 1, "ell_power": 1}));
    assert_eq!(v["trace"], serde_json::json!({"ell": 3, "coeffs": ["3/1", "0/1"]}));
    assert!(v.get("elapsed").is_none());
}

#[test]
fn quartic_curve_trial() {
    let spec = CurveSpec::new(7, 1, 1, 1, 3, 1).unwrap();
    let (data, trial) = check_curve(&spec, 4096).unwrap();
    assert_eq!(data.torsion_field_degree, 4);
    assert!(trial.passed);
    assert_eq!(trial.main_equal, Some(true));
    assert_eq!(trial.fixed_dim, Some(0));
    assert_eq!(trial.trace, Some(CycScalar::one(field(3))));
}

#[test]
fn representation_checks() {
    for (p, n) in [(3u64, 1usize), (5, 1)] {
        let r = check_representation(p, n, 3, 4096).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.dim, p as usize);
        assert_eq!(r.irreducible, Some(true));
    }
    assert!(matches!(check_representation(5, 3, 0, 100), Err(Error::CapExceeded { .. })));
}

#[test]
fn decompose_user_matrix() {
    let k = field(3);
    let mut g = FlMatrix::zeros(k, 4, 4);
    // −I on (v1, w1), t² + 1 on (v2, w2)
    g[(0, 0)] = -k.one();
    g[(2, 2)] = -k.one();
    g[(3, 1)] = k.one();
    g[(1, 3)] = -k.one();
    let text = serde_json::to_string(&g.to_u64_rows()).unwrap();
    let parsed = parse_matrix_json(3, &text).unwrap();
    assert_eq!(parsed, g);
    let report = decompose_matrix(&parsed, 0).unwrap();
    assert!(report.passed, "{:?}", report.violations);
    let kinds: Vec<_> = report.blocks.iter().map(|b| (b.kind, b.charpoly.clone())).collect();
    assert_eq!(kinds, vec![(BlockKind::MinusOne, vec![1, 2, 1]), (BlockKind::Squarefree, vec![1, 0, 1])]);
    assert!(parse_matrix_json(3, "[[1, 2], [3]]").is_err());
    assert!(parse_matrix_json(3, "{}").is_err());
    let nonsym = parse_matrix_json(3, "[[1, 1], [0, 2]]").unwrap();
    assert_eq!(decompose_matrix(&nonsym, 0), Err(Error::NotSymplectic));
    let unipotent = parse_matrix_json(3, "[[1, 1], [0, 1]]").unwrap();
    assert_eq!(decompose_matrix(&unipotent, 0), Err(Error::NotSemisimple));
}

#[test]
fn profile_sweep_covers_repeated_factors() {
    let k = field(7);
    let sp = space(7, 2);
    let f = FlPoly::from_i64(k, &[1, 1, 1]);
    let profile = SemisimpleProfile { plus: 0, minus: 0, blocks: vec![f.clone(), f] };
    let g = random_semisimple_symplectic(&sp, &profile, 3).unwrap();
    let report = decompose_matrix(&g, 1).unwrap();
    assert!(report.passed);
    assert_eq!(report.blocks.len(), 2);
    assert!(report.blocks.iter().all(|b| b.charpoly == vec![1, 1, 1]));
}
