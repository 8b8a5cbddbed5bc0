//! Factorisation over `F_p`: squarefree decomposition, distinct-degree
//! splitting and seeded Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::FlPoly;
use crate::error::{Error, Result};

/// Seed used by [`factor`]; results are deterministic.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_f00d;

const EDF_ATTEMPTS: usize = 1000;

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. The leading coefficient of `f` is dropped.
pub fn factor(f: &FlPoly) -> Result<Vec<(FlPoly, usize)>> {
    factor_with_seed(f, DEFAULT_FACTOR_SEED)
}

pub fn factor_with_seed(f: &FlPoly, seed: u64) -> Result<Vec<(FlPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(FlPoly, usize)> = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&f.monic()) {
        for (part, d) in distinct_degree(&sqf) {
            for irr in equal_degree(&part, d, &mut rng, seed)? {
                match out.iter_mut().find(|(g, _)| *g == irr) {
                    Some((_, m)) => *m += mult,
                    None => out.push((irr, mult)),
                }
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeff_values().cmp(&b.coeff_values()))
    });
    Ok(out)
}

/// Distinct monic irreducible factors (the radical), in [`factor`] order.
pub fn distinct_irreducible_factors(f: &FlPoly) -> Result<Vec<FlPoly>> {
    Ok(factor(f)?.into_iter().map(|(g, _)| g).collect())
}

/// `f = ∏ s_i^{m_i}` with each `s_i` squarefree and pairwise coprime.
/// Handles the characteristic-`p` case where `f' = 0`.
pub fn squarefree_decomposition(f: &FlPoly) -> Vec<(FlPoly, usize)> {
    let f = f.monic();
    let p = f.field().modulus() as usize;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        for (g, m) in squarefree_decomposition(&pth_root(&f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = FlPoly::gcd(&f, &d);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = FlPoly::gcd(&w, &c);
        let fac = w.exact_div(&y);
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w);
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_decomposition(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// For `f(t) = g(t^p)` over the prime field, returns `g` (the `p`-th root,
/// since Frobenius is trivial on `F_p`).
fn pth_root(f: &FlPoly) -> FlPoly {
    let p = f.field().modulus() as usize;
    let coeffs = f.coeffs().iter().step_by(p).copied().collect();
    FlPoly::new(f.field(), coeffs)
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree d, d)` pairs.
pub fn distinct_degree(f: &FlPoly) -> Vec<(FlPoly, usize)> {
    let field = f.field();
    let p = field.modulus();
    let x = FlPoly::t(field);
    let mut rest = f.monic();
    let mut out = Vec::new();
    let mut h = x.clone();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = FlPoly::gcd(&rest, &(&h - &x));
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let deg = rest.deg();
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d` (odd characteristic).
fn equal_degree(
    f: &FlPoly,
    d: usize,
    rng: &mut ChaCha8Rng,
    seed: u64,
) -> Result<Vec<FlPoly>> {
    let f = f.monic();
    if f.deg() == d {
        return Ok(vec![f]);
    }
    let field = f.field();
    let p = BigUint::from(field.modulus());
    let exp: BigUint = (p.pow(d as u32) - 1u32) / 2u32;
    let one = FlPoly::one(field);
    for _ in 0..EDF_ATTEMPTS {
        let coeffs = (0..f.deg())
            .map(|_| field.elem_u(rng.gen_range(0..field.modulus())))
            .collect();
        let a = FlPoly::new(field, coeffs);
        if a.deg() == 0 {
            continue;
        }
        let mut g = FlPoly::gcd(&a, &f);
        if g.is_one() {
            let b = &a.pow_mod_big(&exp, &f) - &one;
            g = FlPoly::gcd(&b, &f);
        }
        if g.deg() > 0 && g.deg() < f.deg() {
            let other = f.exact_div(&g);
            let mut out = equal_degree(&g, d, rng, seed)?;
            out.extend(equal_degree(&other, d, rng, seed)?);
            return Ok(out);
        }
    }
    Err(Error::RetryExhausted {
        what: "equal-degree factorisation",
        attempts: EDF_ATTEMPTS,
        seed,
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &FlPoly) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let p = f.field().modulus();
    let x = FlPoly::t(f.field());
    // x^{p^k} mod f for k = 0..=n
    let mut frob = vec![x.rem(&f)];
    for k in 1..=n {
        frob.push(frob[k - 1].pow_mod(p, &f));
    }
    if !(&frob[n] - &x).rem(&f).is_zero() {
        return false;
    }
    prime_divisors(n)
        .into_iter()
        .all(|q| FlPoly::gcd(&(&frob[n / q] - &x), &f).is_one())
}
