//! Algebra closure over `F_p` as a lower bound for the exact dimension.
//!
//! For a prime `p ≡ 1 (mod 4)` with `r² ≡ −1`, the map `i ↦ r` reduces every
//! Gaussian rational whose denominators are prime to `p`; it is a ring map, so
//! the span of the reduced words has dimension at most the exact one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;
use crate::rational::Rational;

/// `998244353 = 119·2²³ + 1`, with primitive root 3.
const P: u64 = 998_244_353;

fn mul(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(P)) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut out = 1;
    while e > 0 {
        if e & 1 == 1 {
            out = mul(out, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    out
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

/// A square root of `−1` mod `P`.
fn sqrt_minus_one() -> u64 {
    pow(3, (P - 1) / 4)
}

fn reduce_int(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("residue below P")
}

fn reduce_rational(x: &Rational) -> Option<u64> {
    let den = reduce_int(&x.denom());
    (den != 0).then(|| mul(reduce_int(&x.numer()), inv(den)))
}

fn reduce(x: &Q, i: u64) -> Option<u64> {
    let re = reduce_rational(&x.re)?;
    let im = reduce_rational(&x.im)?;
    Some((re + mul(im, i)) % P)
}

fn reduce_matrix(m: &ExactMatrix, i: u64) -> Option<Vec<u64>> {
    m.as_flat().iter().map(|x| reduce(x, i)).collect()
}

/// Dimension of the closure of the reduced generators, or `None` when some
/// entry has a denominator divisible by `p`. Never exceeds the exact dimension.
pub fn closure_dim_mod_p(gens: &[ExactMatrix]) -> Option<usize> {
    let n = gens.first().map_or(0, ExactMatrix::rows);
    if n == 0 {
        return Some(0);
    }
    let i = sqrt_minus_one();
    let gens: Vec<Vec<u64>> = gens.iter().map(|g| reduce_matrix(g, i)).collect::<Option<_>>()?;
    let len = n * n;
    // rows kept fully reduced: leading 1 at its pivot, zero at all other pivots
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::new();
    let insert = |mut v: Vec<u64>, rows: &mut Vec<(usize, Vec<u64>)>| -> Option<Vec<u64>> {
        for (p, r) in rows.iter() {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + P - mul(c, *y)) % P;
                }
            }
        }
        let p = v.iter().position(|&x| x != 0)?;
        let s = inv(v[p]);
        v.iter_mut().for_each(|x| *x = mul(*x, s));
        for (_, r) in rows.iter_mut() {
            let c = r[p];
            if c != 0 {
                for (x, y) in r.iter_mut().zip(&v) {
                    *x = (*x + P - mul(c, *y)) % P;
                }
            }
        }
        rows.push((p, v.clone()));
        Some(v)
    };
    let identity: Vec<u64> = (0..len).map(|k| u64::from(k / n == k % n)).collect();
    let mut queue = vec![insert(identity, &mut rows).expect("identity is nonzero")];
    let mut next = 0;
    while next < queue.len() && rows.len() < len {
        let m = queue[next].clone();
        next += 1;
        for g in &gens {
            let mut prod = vec![0u64; len];
            for r in 0..n {
                for k in 0..n {
                    let a = g[r * n + k];
                    if a == 0 {
                        continue;
                    }
                    for c in 0..n {
                        prod[r * n + c] = (prod[r * n + c] + mul(a, m[k * n + c])) % P;
                    }
                }
            }
            if let Some(v) = insert(prod, &mut rows) {
                queue.push(v);
            }
        }
    }
    Some(rows.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::algebra_closure;
    use crate::gaussian::q;
    use crate::mat;

    #[test]
    fn root_of_minus_one() {
        let r = sqrt_minus_one();
        assert_eq!(mul(r, r), P - 1);
    }

    #[test]
    fn agrees_with_exact_closure_on_small_cases() {
        let e = mat![[0, 2, 0], [0, 0, 1], [0, 0, 0]];
        let f = mat![[0, 0, 0], [1, 0, 0], [0, 2, 0]];
        assert_eq!(closure_dim_mod_p(&[e.clone(), f.clone()]), Some(9));
        let d = ExactMatrix::diag([q(1, 2), q(1, 3), q(1, 2)]);
        assert_eq!(
            closure_dim_mod_p(std::slice::from_ref(&d)),
            Some(algebra_closure(&[d]).dim)
        );
        let i = ExactMatrix::diag([Q::new(Rational::integer(0), Rational::integer(1)), Q::ONE]);
        assert_eq!(closure_dim_mod_p(&[i]), Some(2));
    }

    #[test]
    fn unreducible_denominators_are_refused() {
        let m = ExactMatrix::diag([Q::real(Rational::new(1, P as i64)), Q::ONE]);
        assert_eq!(closure_dim_mod_p(&[m]), None);
    }
}
