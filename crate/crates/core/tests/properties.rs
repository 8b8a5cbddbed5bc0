mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use weiltrace::algebra::{factor, legendre_symbol, FlPoly, PrimeField};
use weiltrace::curve::{curve_frobenius, CurveSpec};
use weiltrace::heisenberg::{brute_trace, RepSpace};
use weiltrace::linalg::{charpoly, FlMatrix};
use weiltrace::symplectic::{
    companion_symplectic, eigen_dims, is_semisimple, random_profile, random_semisimple_symplectic,
    random_separable_palindromic, random_symplectic, OrientedLagrangian, SemisimpleProfile,
};
use weiltrace::trace::{quad_gauss_brute, QuadraticForm};
use weiltrace::DEFAULT_ENUMERATION_CAP;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7])
}

fn poly(p: u64, coeffs: &[u64]) -> FlPoly {
    let k = field(p);
    FlPoly::new(k, coeffs.iter().map(|&c| k.elem_u(c)).collect())
}

fn matrix(p: u64, n: usize, entries: &[u64]) -> FlMatrix {
    let k = field(p);
    let rows: Vec<Vec<_>> = entries.chunks(n).map(|r| r.iter().map(|&x| k.elem_u(x)).collect()).collect();
    FlMatrix::from_fl_rows(k, rows, n).unwrap()
}

proptest! {
    #[test]
    fn legendre_is_multiplicative(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), a in 1u64..1000, b in 1u64..1000) {
        let k = field(p);
        prop_assume!(a % p != 0 && b % p != 0);
        let (x, y) = (k.elem_u(a), k.elem_u(b));
        prop_assert_eq!(legendre_symbol(x * y), legendre_symbol(x) * legendre_symbol(y));
    }

    #[test]
    fn reciprocal_is_an_involution(p in prime(), mut c in prop::collection::vec(0u64..7, 1..8), c0 in 1u64..7) {
        c[0] = c0 % p;
        prop_assume!(c[0] != 0);
        let f = poly(p, &c).monic();
        prop_assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
    }

    #[test]
    fn strip_unit_factors_recomposes(p in prime(), c in prop::collection::vec(0u64..7, 2..8)) {
        let f = poly(p, &c);
        prop_assume!(!f.is_zero());
        let f = f.monic();
        let k = f.field();
        let (a, b, fbar) = f.strip_unit_factors();
        let plus = FlPoly::linear(-k.one()).pow(a as u64);
        let minus = FlPoly::linear(k.one()).pow(b as u64);
        let back = &(&plus * &minus) * &fbar;
        prop_assert_eq!(back, f);
        prop_assert!(!fbar.eval(k.one()).is_zero() && !fbar.eval(-k.one()).is_zero());
    }

    #[test]
    fn factor_round_trip(p in prime(), c in prop::collection::vec(0u64..7, 1..7)) {
        let mut c = c;
        c.push(1);
        let f = poly(p, &c);
        let parts = factor(&f).unwrap();
        let mut back = FlPoly::one(f.field());
        for (h, e) in &parts {
            prop_assert!(h.is_monic());
            back = &back * &h.pow(*e as u64);
        }
        prop_assert_eq!(back, f);
    }

    #[test]
    fn determinant_is_multiplicative(p in prime(), n in 1usize..=6, seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = matrix(p, n, &(0..n * n).map(|_| r.gen_range(0..p)).collect::<Vec<_>>());
        let b = matrix(p, n, &(0..n * n).map(|_| r.gen_range(0..p)).collect::<Vec<_>>());
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn solved_systems_have_zero_residual(p in prime(), rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = field(p);
        let a = matrix(p, cols, &(0..rows * cols).map(|_| r.gen_range(0..p)).collect::<Vec<_>>());
        let x = random_vec(k, cols, &mut r);
        let b = a.mul_vec(&x);
        let sol = a.solve(&b).unwrap();
        prop_assert_eq!(a.mul_vec(&sol.particular), b.clone());
        for v in sol.kernel.basis_vectors() {
            prop_assert!(a.mul_vec(&v).iter().all(|z| z.is_zero()));
        }
    }

    #[test]
    fn gauss_sum_is_congruence_invariant(p in prime(), m in 1usize..=3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = field(p);
        let q = QuadraticForm::random(k, m, &mut r);
        let pm = loop {
            let c = matrix(p, m, &(0..m * m).map(|_| r.gen_range(0..p)).collect::<Vec<_>>());
            if !c.det().unwrap().is_zero() {
                break c;
            }
        };
        let q2 = q.congruent(&pm).unwrap();
        prop_assert_eq!(
            quad_gauss_brute(&q, DEFAULT_ENUMERATION_CAP).unwrap(),
            quad_gauss_brute(&q2, DEFAULT_ENUMERATION_CAP).unwrap()
        );
    }
}

#[test]
fn symplectomorphisms_have_det_one_and_palindromic_charpoly() {
    for p in [3u64, 5, 7] {
        for n in 1..=3usize {
            let sp = space(p, n);
            let mut r = rng(10 * p + n as u64);
            for _ in 0..200 {
                let s = random_symplectic(&sp, r.gen());
                assert!(sp.is_symplectomorphism(&s).unwrap());
                assert!(s.det().unwrap().is_one());
                let chi = charpoly(&s).unwrap();
                assert!(chi.is_palindromic());
                assert_eq!(chi.reciprocal().unwrap(), chi);
            }
        }
    }
}

#[test]
fn semisimple_eigenspaces_are_even() {
    for p in [3u64, 5, 7] {
        for n in 1..=3usize {
            let sp = space(p, n);
            let mut r = rng(100 + 10 * p + n as u64);
            for _ in 0..50 {
                let profile = random_profile(sp.field(), n, &mut r);
                let s = random_semisimple_symplectic(&sp, &profile, r.gen()).unwrap();
                assert!(is_semisimple(&s).unwrap());
                let (plus, minus) = eigen_dims(&s);
                assert_eq!((plus, minus), (2 * profile.plus, 2 * profile.minus));
            }
            for _ in 0..50 {
                let s = random_symplectic(&sp, r.gen());
                if is_semisimple(&s).unwrap() {
                    let (plus, minus) = eigen_dims(&s);
                    assert!(plus % 2 == 0 && minus % 2 == 0);
                }
            }
        }
    }
}

#[test]
fn companion_matrices() {
    for p in [3u64, 5, 7] {
        let k: PrimeField = field(p);
        let mut r = rng(200 + p);
        for deg_half in [1usize, 2] {
            let sp = space(p, deg_half);
            let mut done = 0;
            while done < 50 {
                let mid: Vec<u64> = (0..deg_half).map(|_| r.gen_range(0..p)).collect();
                let mut c = vec![1u64];
                c.extend(&mid[..deg_half.saturating_sub(1)]);
                c.push(mid[deg_half - 1]);
                c.extend(mid[..deg_half.saturating_sub(1)].iter().rev());
                c.push(1);
                let f = poly(p, &c);
                if !f.is_squarefree() {
                    continue;
                }
                let s = companion_symplectic(&f).unwrap();
                assert_eq!(charpoly(&s).unwrap(), f);
                assert!(sp.is_symplectomorphism(&s).unwrap());
                done += 1;
            }
            let g = random_separable_palindromic(k, deg_half, &mut r).unwrap();
            assert_eq!(charpoly(&companion_symplectic(&g).unwrap()).unwrap(), g);
        }
    }
}

#[test]
fn distinct_eigenspaces_pair_trivially_unless_inverse() {
    for p in [5u64, 7] {
        let k = field(p);
        for n in 1..=3usize {
            let sp = space(p, n);
            let mut r = rng(300 + 10 * p + n as u64);
            for _ in 0..30 {
                // split blocks t² − (λ + λ⁻¹)t + 1 with λ ∈ F_ℓ
                let mut profile = SemisimpleProfile { plus: 0, minus: 0, blocks: vec![] };
                for _ in 0..n {
                    let lam = loop {
                        let l = k.elem_u(r.gen_range(2..p - 1));
                        if l * l != k.one() {
                            break l;
                        }
                    };
                    let tr = lam + lam.inv().unwrap();
                    profile.blocks.push(FlPoly::new(k, vec![k.one(), -tr, k.one()]));
                }
                let s = random_semisimple_symplectic(&sp, &profile, r.gen()).unwrap();
                for lam in k.elements().filter(|x| !x.is_zero()) {
                    for mu in k.elements().filter(|x| !x.is_zero()) {
                        if lam * mu == k.one() {
                            continue;
                        }
                        let a = (&s - &FlMatrix::scalar(k, 2 * n, lam)).kernel().basis_vectors();
                        let b = (&s - &FlMatrix::scalar(k, 2 * n, mu)).kernel().basis_vectors();
                        if !a.is_empty() && !b.is_empty() {
                            assert!(sp.pairing_matrix(&a, &b).is_zero());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rescaling_the_orientation_keeps_the_trace() {
    for (p, n) in [(3u64, 1usize), (3, 2), (5, 1), (5, 2)] {
        let sp = space(p, n);
        let k = sp.field();
        let mut r = rng(400 + p + n as u64);
        for _ in 0..20 {
            let g = random_symplectic(&sp, r.gen());
            let m = random_lagrangian(&sp, &mut r);
            let base = brute_trace(&RepSpace::with_dual_complement(&sp, m.clone(), CAP).unwrap(), &g).unwrap();
            for u in k.elements().filter(|x| !x.is_zero()) {
                let rep = RepSpace::with_dual_complement(&sp, m.rescaled(u), CAP).unwrap();
                assert_eq!(brute_trace(&rep, &g).unwrap(), base);
            }
            let std = RepSpace::with_dual_complement(&sp, OrientedLagrangian::standard(&sp), CAP).unwrap();
            assert_eq!(brute_trace(&std, &g).unwrap(), base);
        }
    }
}

#[test]
fn frobenius_preserves_the_weil_pairing() {
    let mut checked = 0;
    for (p, a, b) in [(7u64, 0i64, 2i64), (7, 1, 1), (13, 2, 5), (19, 3, 1), (31, 1, 4), (37, 2, 3)] {
        let Ok(spec) = CurveSpec::new(p, 1, a, b, 3, 11) else { continue };
        let data = match curve_frobenius(&spec, DEFAULT_ENUMERATION_CAP) {
            Ok(d) => d,
            Err(weiltrace::Error::TorsionFieldTooLarge { .. }) => continue,
            Err(e) => panic!("{e:?}"),
        };
        let k = spec.ell_field();
        let curve = spec.over_extension(data.torsion_field_degree, DEFAULT_ENUMERATION_CAP).unwrap();
        let (bp, bq) = &data.basis;
        let mut r = rng(p);
        let e = curve.weil_pairing(bp, bq, 3, &mut r).unwrap();
        let fe = curve
            .weil_pairing(&curve.frobenius(bp), &curve.frobenius(bq), 3, &mut r)
            .unwrap();
        assert_eq!(fe, e);
        assert_eq!(fe, curve.field().pow(&e, spec.q().unwrap() as u64 % 3));
        let q_mod = k.elem_u((spec.q().unwrap() % 3) as u64);
        let expected = FlPoly::new(k, vec![q_mod, -k.elem(data.trace_a), k.one()]);
        assert_eq!(charpoly(&data.frobenius_matrix).unwrap(), expected);
        checked += 1;
    }
    assert!(checked >= 3);
}
