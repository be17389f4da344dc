use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;
use crate::racah_ops::RacahRep;
use crate::sl2_reps::Sl2Rep;

/// A `U(sl₂)_e`-submodule `⊕_i V(θ − 4i)` with the actions of `E², F², H, Λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenHalf {
    /// Highest weight `n` of the ambient module.
    pub n: usize,
    /// 0 for weights `≡ n (mod 4)`, 1 for weights `≡ n − 2 (mod 4)`.
    pub parity: u8,
    /// Ambient basis indices, by decreasing weight.
    pub indices: Vec<usize>,
    pub e2: ExactMatrix,
    pub f2: ExactMatrix,
    pub h: ExactMatrix,
    pub lambda: ExactMatrix,
}

impl EvenHalf {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    /// The pullback `ℜ`-action on this half.
    pub fn racah_rep(&self) -> RacahRep {
        even_pullback(&self.e2, &self.f2, &self.h, &self.lambda)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenHalves {
    pub zero: EvenHalf,
    /// Absent for `n = 0`.
    pub one: Option<EvenHalf>,
}

/// Splits a module with diagonal `H` of highest weight `n` into the two
/// halves by weight residue mod 4.
pub fn even_halves(rep: &Sl2Rep) -> Result<EvenHalves> {
    let h = rep.h();
    if !h.is_diagonal() {
        return Err(Error::NonDiagonalizableH);
    }
    let weights: Vec<i64> = (0..rep.dim())
        .map(|i| {
            let w = &h[(i, i)];
            if w.is_real() && w.re.is_integer() {
                w.re.numer().try_into().map_err(|_| Error::NonDiagonalizableH)
            } else {
                Err(Error::NonDiagonalizableH)
            }
        })
        .collect::<Result<_>>()?;
    let n = *weights.iter().max().expect("nonempty module");
    if n < 0 || weights.iter().any(|w| (n - w) % 2 != 0) {
        return Err(Error::DimensionMismatch(
            "weights are not of the form n − 2i with n ≥ 0".into(),
        ));
    }
    let e2 = rep.e() * rep.e();
    let f2 = rep.f() * rep.f();
    let lambda = rep.casimir();
    let take = |parity: u8| -> Option<EvenHalf> {
        let shift = 2 * i64::from(parity);
        let mut idx: Vec<usize> = (0..weights.len())
            .filter(|&i| (n - shift - weights[i]).rem_euclid(4) == 0)
            .collect();
        if idx.is_empty() {
            return None;
        }
        idx.sort_by_key(|&i| (-weights[i], i));
        Some(EvenHalf {
            n: n as usize,
            parity,
            e2: e2.select(&idx),
            f2: f2.select(&idx),
            h: h.select(&idx),
            lambda: lambda.select(&idx),
            indices: idx,
        })
    };
    Ok(EvenHalves {
        zero: take(0).expect("the top weight lies in the zero half"),
        one: take(1),
    })
}

/// The actions of `E², F², H, Λ` on `L_n^(parity)` in the basis `u_i`,
/// written out directly from their closed forms.
pub fn expected_half(n: usize, parity: u8) -> Option<[ExactMatrix; 4]> {
    let n = n as i64;
    let p = i64::from(parity);
    if parity > 1 || (parity == 1 && n == 0) {
        return None;
    }
    let m = ((n - p) / 2 + 1) as usize;
    let mut e2 = ExactMatrix::zeros(m, m);
    let mut f2 = ExactMatrix::zeros(m, m);
    for i in 1..m as i64 {
        // E² u_i = (n−2i+1−p)(n−2i+2−p) u_{i−1}, F² u_{i−1} = (2i−1+p)(2i+p) u_i
        e2[(i as usize - 1, i as usize)] = Q::int((n - 2 * i + 1 - p) * (n - 2 * i + 2 - p));
        f2[(i as usize, i as usize - 1)] = Q::int((2 * i - 1 + p) * (2 * i + p));
    }
    let h = ExactMatrix::diag((0..m as i64).map(|i| Q::int(n - 4 * i - 2 * p)));
    let lambda = ExactMatrix::scalar(m, Q::frac(n * (n + 2), 2));
    Some([e2, f2, h, lambda])
}

/// `A, B, C, Δ` from the actions of `E², F², H, Λ`:
/// `A = (Λ+E²+F²)/16 − H²/32 − 1/4`, `B = H²/16 − 1/4`,
/// `C = (Λ−E²−F²)/16 − H²/32 − 1/4`, `Δ = (F²(H−2) − E²(H+2))/64`.
pub fn even_pullback(e2: &ExactMatrix, f2: &ExactMatrix, h: &ExactMatrix, lambda: &ExactMatrix) -> RacahRep {
    let quarter = Q::frac(-1, 4);
    let h2 = h * h;
    let h2_32 = h2.scale(&Q::frac(1, 32));
    let sum = e2 + f2;
    let a = (&(lambda + &sum).scale(&Q::frac(1, 16)) - &h2_32).add_scalar(&quarter);
    let b = h2.scale(&Q::frac(1, 16)).add_scalar(&quarter);
    let c = (&(lambda - &sum).scale(&Q::frac(1, 16)) - &h2_32).add_scalar(&quarter);
    let delta = (&(f2 * &h.add_scalar(&Q::int(-2))) - &(e2 * &h.add_scalar(&Q::int(2)))).scale(&Q::frac(1, 64));
    RacahRep::new(a, b, c, delta).expect("operators share one dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_pass;
    use crate::sl2_reps::{build_ln, sharp_pullback};

    #[test]
    fn half_dimensions() {
        let h3 = even_halves(&build_ln(3)).unwrap();
        assert_eq!((h3.zero.dim(), h3.one.as_ref().unwrap().dim()), (2, 2));
        let h0 = even_halves(&build_ln(0)).unwrap();
        assert_eq!(h0.zero.dim(), 1);
        assert!(h0.one.is_none());
        let h4 = even_halves(&build_ln(4)).unwrap();
        assert_eq!((h4.zero.dim(), h4.one.unwrap().dim()), (3, 2));
    }

    #[test]
    fn halves_match_closed_forms() {
        for n in 0..14 {
            let halves = even_halves(&build_ln(n)).unwrap();
            for half in std::iter::once(&halves.zero).chain(halves.one.as_ref()) {
                let [e2, f2, h, lambda] = expected_half(n, half.parity).unwrap();
                assert_eq!(
                    (&half.e2, &half.f2, &half.h, &half.lambda),
                    (&e2, &f2, &h, &lambda),
                    "n={n}"
                );
            }
        }
    }

    #[test]
    fn half_pullback_is_restriction_of_full_pullback() {
        for n in 1..10 {
            let full = sharp_pullback(&build_ln(n));
            let halves = even_halves(&build_ln(n)).unwrap();
            for half in [&halves.zero, halves.one.as_ref().unwrap()] {
                let r = half.racah_rep();
                assert!(all_pass(&r.verify_presentation()));
                for (got, whole) in r.generators().into_iter().zip(full.generators()) {
                    assert_eq!(got, &whole.select(&half.indices));
                }
            }
        }
    }

    #[test]
    fn b_is_diagonal_with_expected_entries() {
        // B u_i = ((n−4i)²/16 − 1/4) u_i on the zero half
        let half = even_halves(&build_ln(6)).unwrap().zero;
        let b = half.racah_rep().b().clone();
        let want = ExactMatrix::diag((0..4).map(|i| &Q::frac((6 - 4 * i) * (6 - 4 * i), 16) - &Q::frac(1, 4)));
        assert_eq!(b, want);
    }
}
