//! Roots in ℚ(i) of polynomials over ℚ(i).
//!
//! After clearing denominators and removing content, any root `u/v` in
//! lowest terms has `u | a₀` and `v | aₙ` in ℤ[i]. Divisors are enumerated
//! from the Gaussian prime factorization of the two extreme coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::Poly;
use crate::gaussian::Q;
use crate::rational::Rational;

/// Result of a root search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSearch {
    /// Distinct roots in ℚ(i), sorted.
    pub roots: Vec<Q>,
    /// Whether the polynomial is a product of linear factors over ℚ(i).
    pub splits: bool,
}

/// A Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    fn from_i64(re: i64, im: i64) -> Self {
        Self::new(re.into(), im.into())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, o: &GInt) -> GInt {
        GInt::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    /// Exact quotient, if `o` divides `self`.
    fn div_exact(&self, o: &GInt) -> Option<GInt> {
        let n = o.norm();
        // self * conj(o) / N(o)
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        if (&re % &n).is_zero() && (&im % &n).is_zero() {
            Some(GInt::new(re / &n, im / &n))
        } else {
            None
        }
    }

    /// Euclidean remainder with rounded quotient.
    fn rem(&self, o: &GInt) -> GInt {
        let n = o.norm();
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        let round = |x: &BigInt| -> BigInt {
            let two_x: BigInt = x * 2 + &n;
            two_x.div_floor(&(&n * 2))
        };
        let qt = GInt::new(round(&re), round(&im));
        let prod = qt.mul(o);
        GInt::new(&self.re - prod.re, &self.im - prod.im)
    }

    fn gcd(a: &GInt, b: &GInt) -> GInt {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn to_q(&self) -> Q {
        Q::new(Rational::from(self.re.clone()), Rational::from(self.im.clone()))
    }
}

const TRIAL_LIMIT: u64 = 1 << 20;

fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let mut d = n_minus_1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho with Floyd cycle detection; bounded work.
fn pollard_rho(n: &BigInt) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u32..20 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y) = (BigInt::from(2), BigInt::from(2));
        let mut d = BigInt::one();
        let mut steps = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
            steps += 1;
            if steps > 2_000_000 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return Some(d);
        }
    }
    None
}

/// Prime factorization of a positive integer as `(p, exponent)` pairs.
fn factor_integer(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += e;
        } else {
            out.push((p, e));
        }
    };
    let mut p = 2u64;
    while p < TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            push(bp, e, &mut out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, 1, &mut out);
            continue;
        }
        let d = pollard_rho(&m).ok_or_else(|| Error::RootSearchTooLarge(m.to_string()))?;
        let other = &m / &d;
        stack.push(d);
        stack.push(other);
    }
    out.sort();
    Ok(out)
}

/// A Gaussian prime above a rational prime `p ≡ 1 (mod 4)`.
fn split_prime(p: &BigInt) -> GInt {
    let exp = (p - 1u32) / 4u32;
    let mut c = BigInt::from(2);
    loop {
        let t = c.modpow(&exp, p);
        if (&t * &t + 1u32) % p == BigInt::zero() {
            let g = GInt::gcd(&GInt::new(p.clone(), BigInt::zero()), &GInt::new(t, BigInt::one()));
            return g;
        }
        c += 1u32;
    }
}

/// Gaussian prime factorization of a nonzero Gaussian integer (up to a unit).
fn gaussian_factor(z: &GInt) -> Result<Vec<(GInt, u32)>> {
    let mut rest = z.clone();
    let mut out = Vec::new();
    let take = |pi: GInt, rest: &mut GInt, out: &mut Vec<(GInt, u32)>| {
        let mut e = 0;
        while let Some(qt) = rest.div_exact(&pi) {
            *rest = qt;
            e += 1;
        }
        if e > 0 {
            out.push((pi, e));
        }
    };
    for (p, _) in factor_integer(&z.norm())? {
        if p == BigInt::from(2) {
            take(GInt::from_i64(1, 1), &mut rest, &mut out);
        } else if (&p % 4u32) == BigInt::from(3) {
            take(GInt::new(p.clone(), BigInt::zero()), &mut rest, &mut out);
        } else {
            let pi = split_prime(&p);
            let pi_bar = GInt::new(pi.re.clone(), -pi.im.clone());
            take(pi, &mut rest, &mut out);
            take(pi_bar, &mut rest, &mut out);
        }
    }
    Ok(out)
}

/// All divisors up to units.
fn divisors(z: &GInt) -> Result<Vec<GInt>> {
    let mut divs = vec![GInt::from_i64(1, 0)];
    for (pi, e) in gaussian_factor(z)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = acc.mul(&pi);
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    Ok(divs)
}

fn lcm_of_denominators(coeffs: &[Q]) -> BigInt {
    coeffs.iter().fold(BigInt::one(), |acc, c| {
        let acc = acc.lcm(&c.re.denom());
        acc.lcm(&c.im.denom())
    })
}

/// Primitive Gaussian-integer coefficients of a multiple of `p`.
fn primitive_integer_coeffs(p: &Poly) -> Vec<GInt> {
    let scale = Q::real(Rational::from(lcm_of_denominators(p.coeffs())));
    let ints: Vec<GInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let s = c * &scale;
            GInt::new(s.re.numer(), s.im.numer())
        })
        .collect();
    let content = ints.iter().fold(GInt::from_i64(0, 0), |acc, c| GInt::gcd(&acc, c));
    ints.iter()
        .map(|c| c.div_exact(&content).expect("content divides"))
        .collect()
}

fn eval_int(ints: &[GInt], x: &GInt) -> GInt {
    ints.iter().rev().fold(GInt::from_i64(0, 0), |acc, c| {
        let m = acc.mul(x);
        GInt::new(m.re + &c.re, m.im + &c.im)
    })
}

/// Approximate complex roots by Aberth iteration; `None` on overflow.
fn approximate_roots(p: &Poly) -> Option<Vec<Complex64>> {
    let lead = p.leading()?;
    let monic: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| {
            let c = c.checked_div(lead).expect("nonzero leading coefficient");
            Complex64::new(c.re.to_f64_lossy(), c.im.to_f64_lossy())
        })
        .collect();
    if monic.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return None;
    }
    let n = monic.len() - 1;
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dv = dv * x + v;
            v = v * x + c;
        }
        (v, dv)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (v, dv) = eval(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulse: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulse);
            if !step.re.is_finite() || !step.im.is_finite() {
                return None;
            }
            z[k] -= step;
            moved = moved.max(step.norm() / z[k].norm().max(1.0));
        }
        if moved < 1e-14 {
            break;
        }
    }
    Some(z)
}

/// Snaps each approximation to some `u/v` with `v | lead`; keeps exact roots only.
fn snap_roots(sqf: &Poly, approx: &[Complex64], dens: &[GInt]) -> Vec<Q> {
    let mut found: Vec<Q> = Vec::new();
    for z in approx {
        for v in dens {
            let vr = v.re.to_f64().unwrap_or(f64::NAN);
            let vi = v.im.to_f64().unwrap_or(f64::NAN);
            let w = *z * Complex64::new(vr, vi);
            if !w.re.is_finite() || !w.im.is_finite() || w.norm() > 1e15 {
                continue;
            }
            let u = Q::new(
                Rational::integer(w.re.round() as i64),
                Rational::integer(w.im.round() as i64),
            );
            let cand = &u * &v.to_q().inv().expect("nonzero divisor");
            if sqf.eval(&cand).is_zero() {
                if !found.contains(&cand) {
                    found.push(cand);
                }
                break;
            }
        }
    }
    found
}

/// Every `u/v` with `u | a_0`, `v | a_n` inside the Cauchy bound, filtered
/// by `(v - u) | p(1)` and `(v + u) | p(-1)`.
fn exhaustive_roots(sqf: &Poly, ints: &[GInt], dens: &[GInt], target: usize) -> Result<Vec<Q>> {
    let lead = ints.last().expect("nonzero polynomial");
    let lead_norm = Rational::from(lead.norm());
    let max_ratio = ints[..ints.len() - 1]
        .iter()
        .map(|c| Rational::from(c.norm()) / &lead_norm)
        .max()
        .unwrap_or(Rational::ZERO);
    // (1 + sqrt(m))^2 <= 2 + 2m
    let bound_sq = Rational::integer(2) + Rational::integer(2) * max_ratio;
    let at_one = eval_int(ints, &GInt::from_i64(1, 0));
    let at_minus_one = eval_int(ints, &GInt::from_i64(-1, 0));
    let divides = |d: &GInt, x: &GInt| x.is_zero() || (!d.is_zero() && x.div_exact(d).is_some());
    let nums = divisors(&ints[0])?;
    let units = [
        GInt::from_i64(1, 0),
        GInt::from_i64(0, 1),
        GInt::from_i64(-1, 0),
        GInt::from_i64(0, -1),
    ];
    let mut found: Vec<Q> = Vec::new();
    for v in dens {
        let v_norm = Rational::from(v.norm());
        let v_inv = v.to_q().inv().expect("nonzero divisor");
        for u0 in &nums {
            if Rational::from(u0.norm()) / &v_norm > bound_sq {
                continue;
            }
            for unit in &units {
                let u = u0.mul(unit);
                let minus = GInt::new(&v.re - &u.re, &v.im - &u.im);
                let plus = GInt::new(&v.re + &u.re, &v.im + &u.im);
                if !divides(&minus, &at_one) || !divides(&plus, &at_minus_one) {
                    continue;
                }
                let cand = &u.to_q() * &v_inv;
                if !found.contains(&cand) && sqf.eval(&cand).is_zero() {
                    found.push(cand);
                    if found.len() == target {
                        return Ok(found);
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Roots of `p` lying in ℚ(i). `p` must be nonzero.
pub fn rational_roots(p: &Poly) -> Result<RootSearch> {
    assert!(!p.is_zero(), "root search on the zero polynomial");
    let mut sqf = p.squarefree_part();
    let mut roots = Vec::new();
    if sqf.coeffs()[0].is_zero() && sqf.degree() > Some(0) {
        roots.push(Q::ZERO);
        sqf = sqf.div_rem(&Poly::x()).0;
    }
    let target = sqf.degree().unwrap_or(0);
    if target > 0 {
        let ints = primitive_integer_coeffs(&sqf);
        let mut dens = divisors(ints.last().expect("nonzero polynomial"))?;
        dens.sort_by_key(GInt::norm);
        let mut found = approximate_roots(&sqf)
            .map(|z| snap_roots(&sqf, &z, &dens))
            .unwrap_or_default();
        if found.len() < target {
            found = exhaustive_roots(&sqf, &ints, &dens, target)?;
        }
        roots.extend(found);
    }
    roots.sort();
    let splits = roots.len() == p.squarefree_part().degree().unwrap_or(0);
    Ok(RootSearch { roots, splits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;

    fn product_of_factors(f: &[(BigInt, u32)]) -> BigInt {
        f.iter().fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    #[test]
    fn real_and_gaussian_roots() {
        let p = Poly::from_roots(&[q(1, 1), q(-1, 1)]);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r.roots, vec![q(-1, 1), q(1, 1)]);
        assert!(r.splits);

        // x^2 + 1
        let p = Poly::new(vec![Q::ONE, Q::ZERO, Q::ONE]);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r.roots.len(), 2);
        assert!(r.roots.contains(&Q::I) && r.roots.contains(&-Q::I));
        assert!(r.splits);

        // x^2 - 2
        let p = Poly::new(vec![q(-2, 1), Q::ZERO, Q::ONE]);
        let r = rational_roots(&p).unwrap();
        assert!(r.roots.is_empty());
        assert!(!r.splits);
    }

    #[test]
    fn fractional_and_repeated_roots() {
        let roots = [q(5, 16), q(-3, 16), q(5, 16), Q::ZERO, q(7, 3)];
        let p = Poly::from_roots(&roots);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r.roots, vec![q(-3, 16), Q::ZERO, q(5, 16), q(7, 3)]);
        assert!(r.splits);
    }

    #[test]
    fn complex_fraction_root() {
        let z = Q::new(Rational::new(1, 2), Rational::new(-3, 4));
        let p = &Poly::from_roots(std::slice::from_ref(&z)) * &Poly::new(vec![q(-2, 1), Q::ZERO, Q::ONE]);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r.roots, vec![z]);
        assert!(!r.splits);
    }

    #[test]
    fn exhaustive_search_agrees() {
        let roots = [q(5, 16), Q::new(Rational::new(-3, 2), Rational::new(1, 3)), q(7, 3)];
        let p = &Poly::from_roots(&roots) * &Poly::new(vec![q(-2, 1), Q::ZERO, Q::ONE]);
        let ints = primitive_integer_coeffs(&p);
        let dens = divisors(ints.last().unwrap()).unwrap();
        let mut found = exhaustive_roots(&p, &ints, &dens, 5).unwrap();
        found.sort();
        let mut expected = roots.to_vec();
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn many_divisors_is_fast() {
        let roots: Vec<Q> = [(1, 3), (2, 5), (1, 7), (-13, 36), (17, 25), (-29, 12)]
            .iter()
            .map(|&(n, d)| q(n, d))
            .collect();
        let r = rational_roots(&Poly::from_roots(&roots)).unwrap();
        assert!(r.splits);
        assert_eq!(r.roots.len(), 6);
    }

    #[test]
    fn factorization_reconstructs() {
        let n = BigInt::from(2u64 * 3 * 3 * 1_000_003 * 998_244_353);
        let f = factor_integer(&n).unwrap();
        assert_eq!(product_of_factors(&f), n);
        assert!(f.iter().all(|(p, _)| is_probable_prime(p)));
    }
}
