//! Characteristic polynomials and polynomial evaluation at matrices.

use crate::algebra::{Fl, FlPoly};
use crate::error::{Error, Result};

use super::matrix::FlMatrix;

/// Similar upper Hessenberg form, by elimination with row/column swaps.
fn hessenberg(s: &FlMatrix) -> FlMatrix {
    let n = s.rows();
    let mut h = s.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(r) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
            continue;
        };
        if r != c + 1 {
            h.swap_rows(r, c + 1);
            for i in 0..n {
                let tmp = h[(i, r)];
                h[(i, r)] = h[(i, c + 1)];
                h[(i, c + 1)] = tmp;
            }
        }
        let inv = h[(c + 1, c)].inv().unwrap();
        for i in c + 2..n {
            let f = h[(i, c)] * inv;
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h[(c + 1, j)];
                h[(i, j)] -= f * v;
            }
            for j in 0..n {
                let v = h[(j, i)];
                h[(j, c + 1)] += f * v;
            }
        }
    }
    h
}

/// `det(tI − S)`.
pub fn charpoly(s: &FlMatrix) -> Result<FlPoly> {
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    let field = s.field();
    let n = s.rows();
    let h = hessenberg(s);
    let t = FlPoly::t(field);
    // p[m] is the charpoly of the leading m×m block.
    let mut p: Vec<FlPoly> = vec![FlPoly::one(field)];
    for m in 0..n {
        let mut next = &(&t - &FlPoly::constant(h[(m, m)])) * &p[m];
        let mut prod = field.one();
        for i in (0..m).rev() {
            prod *= h[(i + 1, i)];
            let c = prod * h[(i, m)];
            if !c.is_zero() {
                next = &next - &p[i].scale(c);
            }
        }
        p.push(next);
    }
    Ok(p.pop().unwrap())
}

/// `f(S)` by Horner's rule.
pub fn apply_poly(f: &FlPoly, s: &FlMatrix) -> FlMatrix {
    assert!(s.is_square(), "apply_poly needs a square matrix");
    let field = s.field();
    let n = s.rows();
    let mut acc = FlMatrix::zeros(field, n, n);
    for &c in f.coeffs().iter().rev() {
        acc = &(&acc * s) + &FlMatrix::scalar(field, n, c);
    }
    acc
}

/// `f(S) v` without forming `f(S)`.
pub fn apply_poly_vec(f: &FlPoly, s: &FlMatrix, v: &[Fl]) -> Vec<Fl> {
    let mut acc = vec![s.field().zero(); v.len()];
    for &c in f.coeffs().iter().rev() {
        acc = s.mul_vec(&acc);
        for (a, &x) in acc.iter_mut().zip(v) {
            *a += c * x;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fld(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn random_matrix(k: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> FlMatrix {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..k.modulus() as i64)).collect())
            .collect();
        FlMatrix::from_rows(k, &rows).unwrap()
    }

    // Leibniz expansion of det(tI − S) over F_ℓ[t].
    fn leibniz_charpoly(s: &FlMatrix) -> FlPoly {
        let k = s.field();
        let n = s.rows();
        let entry = |i: usize, j: usize| {
            let c = FlPoly::constant(-s[(i, j)]);
            if i == j {
                &c + &FlPoly::t(k)
            } else {
                c
            }
        };
        let mut total = FlPoly::zero(k);
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p, sign| {
            let mut term = FlPoly::constant(k.elem(sign));
            for (i, &j) in p.iter().enumerate() {
                term = &term * &entry(i, j);
            }
            total = &total + &term;
        });
        total
    }

    fn permutations(p: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize], i64)) {
        fn go(p: &mut Vec<usize>, start: usize, sign: i64, f: &mut dyn FnMut(&[usize], i64)) {
            if start == p.len() {
                f(p, sign);
                return;
            }
            for i in start..p.len() {
                p.swap(start, i);
                go(p, start + 1, if i == start { sign } else { -sign }, f);
                p.swap(start, i);
            }
        }
        go(p, start, 1, f);
    }

    #[test]
    fn identity_charpoly() {
        let k = fld(5);
        let expect = FlPoly::linear(k.one()).pow(2);
        assert_eq!(charpoly(&FlMatrix::identity(k, 2)).unwrap(), expect);
    }

    #[test]
    fn rotation_charpoly() {
        let k = fld(5);
        let s = FlMatrix::from_rows(k, &[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(charpoly(&s).unwrap(), FlPoly::from_i64(k, &[1, 0, 1]));
    }

    #[test]
    fn block_diag_multiplies() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let k = fld(7);
        let a = random_matrix(k, 2, &mut rng);
        let b = random_matrix(k, 2, &mut rng);
        let d = FlMatrix::block_diag(k, &[a.clone(), b.clone()]);
        assert_eq!(charpoly(&d).unwrap(), &charpoly(&a).unwrap() * &charpoly(&b).unwrap());
    }

    #[test]
    fn matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for p in [3u64, 5, 7] {
            let k = fld(p);
            for n in 1..=5 {
                for _ in 0..20 {
                    let s = random_matrix(k, n, &mut rng);
                    assert_eq!(charpoly(&s).unwrap(), leibniz_charpoly(&s), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn sparse_matrices_match_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        let k = fld(3);
        for _ in 0..200 {
            let rows: Vec<Vec<i64>> = (0..5)
                .map(|_| (0..5).map(|_| if rng.gen_bool(0.25) { rng.gen_range(1..3) } else { 0 }).collect())
                .collect();
            let s = FlMatrix::from_rows(k, &rows).unwrap();
            assert_eq!(charpoly(&s).unwrap(), leibniz_charpoly(&s));
        }
    }

    #[test]
    fn cayley_hamilton() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let k = fld(5);
        for _ in 0..20 {
            let s = random_matrix(k, 4, &mut rng);
            assert!(apply_poly(&charpoly(&s).unwrap(), &s).is_zero());
        }
    }

    #[test]
    fn apply_poly_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let k = fld(5);
        let s = random_matrix(k, 3, &mut rng);
        assert_eq!(apply_poly(&FlPoly::t(k), &s), s);
        let r = FlMatrix::from_rows(k, &[vec![0, -1], vec![1, 0]]).unwrap();
        assert!(apply_poly(&FlPoly::from_i64(k, &[1, 0, 1]), &r).is_zero());
        let v = vec![k.elem(1), k.elem(2), k.elem(3)];
        let f = FlPoly::from_i64(k, &[2, 1, 3]);
        assert_eq!(apply_poly_vec(&f, &s, &v), apply_poly(&f, &s).mul_vec(&v));
    }

    #[test]
    fn non_square_rejected() {
        let k = fld(3);
        assert!(matches!(charpoly(&FlMatrix::zeros(k, 2, 3)), Err(Error::NotSquare { .. })));
    }
}
