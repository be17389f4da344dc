//! Concrete `U(sl₂)`-modules and their pullbacks along `♯`.
//!
//! Matrices act on column vectors: entry `(i, j)` is the coefficient of basis
//! vector `i` in the image of basis vector `j`.

mod halves;
mod hypercube;

pub use halves::{even_halves, even_pullback, expected_half, EvenHalf, EvenHalves};
pub use hypercube::{
    build_hypercube, halved_cube, verify_hypercube, GraphOperators, HalvedCube, Hypercube, HypercubeSpace, MAX_DENSE_D,
};

use std::collections::BTreeMap;

use crate::check::IdentityCheck;
use crate::error::{Error, Result};
use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;
use crate::racah_ops::RacahRep;
use crate::usl2_pbw::{PBWElement, RacahGen, SharpImages};

/// A finite-dimensional `U(sl₂)`-module given by the matrices of `E, F, H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Rep {
    e: ExactMatrix,
    f: ExactMatrix,
    h: ExactMatrix,
    labels: Vec<String>,
}

impl Sl2Rep {
    /// Validates shapes and the three defining relations.
    pub fn new(e: ExactMatrix, f: ExactMatrix, h: ExactMatrix, labels: Vec<String>) -> Result<Self> {
        let n = h.rows();
        for (name, m) in [("E", &e), ("F", &f), ("H", &h)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dimension {n}",
                labels.len()
            )));
        }
        let rep = Self { e, f, h, labels };
        if let Some(bad) = rep.relation_checks().into_iter().find(|c| !c.pass) {
            return Err(Error::RelationFails(bad.identity));
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    pub fn e(&self) -> &ExactMatrix {
        &self.e
    }

    pub fn f(&self) -> &ExactMatrix {
        &self.f
    }

    pub fn h(&self) -> &ExactMatrix {
        &self.h
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Residuals of `[H,E] = 2E`, `[H,F] = −2F`, `[E,F] = H`.
    pub fn relation_checks(&self) -> Vec<IdentityCheck> {
        let two = Q::int(2);
        let (e, f, h) = (&self.e, &self.f, &self.h);
        vec![
            IdentityCheck::from_residual("[H,E] - 2E", &(&h.commutator(e) - &e.scale(&two))),
            IdentityCheck::from_residual("[H,F] + 2F", &(&h.commutator(f) + &f.scale(&two))),
            IdentityCheck::from_residual("[E,F] - H", &(&e.commutator(f) - h)),
        ]
    }

    /// `Λ = EF + FE + H²/2`.
    pub fn casimir(&self) -> ExactMatrix {
        let (e, f, h) = (&self.e, &self.f, &self.h);
        let h2 = (h * h).scale(&Q::frac(1, 2));
        &(&(e * f) + &(f * e)) + &h2
    }

    /// The matrix by which `x` acts.
    pub fn evaluate(&self, x: &PBWElement) -> ExactMatrix {
        let n = self.dim();
        let mut e_pows = vec![ExactMatrix::identity(n)];
        let mut f_pows = vec![ExactMatrix::identity(n)];
        let mut h_pows = vec![ExactMatrix::identity(n)];
        // group by (e, f) so each group costs one product E^e·F^f·p(H)
        let mut groups: BTreeMap<(u32, u32), Vec<(u32, &Q)>> = BTreeMap::new();
        for (&(e, f, h), c) in x.terms() {
            groups.entry((e, f)).or_default().push((h, c));
        }
        let mut out = ExactMatrix::zeros(n, n);
        for ((e, f), hs) in groups {
            grow(&mut e_pows, &self.e, e as usize);
            grow(&mut f_pows, &self.f, f as usize);
            let top = hs.iter().map(|(h, _)| *h as usize).max().unwrap_or(0);
            grow(&mut h_pows, &self.h, top);
            let mut poly_h = ExactMatrix::zeros(n, n);
            for (h, c) in hs {
                poly_h = &poly_h + &h_pows[h as usize].scale(c);
            }
            let term = &(&e_pows[e as usize] * &f_pows[f as usize]) * &poly_h;
            out = &out + &term;
        }
        out
    }
}

fn grow(pows: &mut Vec<ExactMatrix>, m: &ExactMatrix, k: usize) {
    while pows.len() <= k {
        let next = pows.last().expect("identity seeded") * m;
        pows.push(next);
    }
}

/// The irreducible module `L_n` on `v_0, …, v_n`:
/// `E v_i = (n−i+1) v_{i−1}`, `F v_i = (i+1) v_{i+1}`, `H v_i = (n−2i) v_i`.
pub fn build_ln(n: usize) -> Sl2Rep {
    let dim = n + 1;
    let mut e = ExactMatrix::zeros(dim, dim);
    let mut f = ExactMatrix::zeros(dim, dim);
    for i in 1..dim {
        e[(i - 1, i)] = Q::int((n - i + 1) as i64);
        f[(i, i - 1)] = Q::int(i as i64);
    }
    let h = ExactMatrix::diag((0..dim).map(|i| Q::int(n as i64 - 2 * i as i64)));
    let labels = (0..dim).map(|i| format!("v{i}")).collect();
    Sl2Rep::new(e, f, h, labels).expect("L_n satisfies the defining relations")
}

/// The `ℜ`-module obtained by evaluating the images of `A, B, C, Δ` under `♯`.
pub fn sharp_pullback(rep: &Sl2Rep) -> RacahRep {
    let images = SharpImages::get();
    let eval = |g| rep.evaluate(images.image(g));
    RacahRep::new(
        eval(RacahGen::A),
        eval(RacahGen::B),
        eval(RacahGen::C),
        eval(RacahGen::Delta),
    )
    .expect("evaluations share the module dimension")
}

/// The same pullback through the closed forms in `E², F², H, Λ`.
pub fn sharp_pullback_even(rep: &Sl2Rep) -> RacahRep {
    let e2 = rep.e() * rep.e();
    let f2 = rep.f() * rep.f();
    even_pullback(&e2, &f2, rep.h(), &rep.casimir())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_pass;
    use crate::gaussian::q;
    use crate::mat;

    #[test]
    fn small_ln() {
        let l0 = build_ln(0);
        assert_eq!((l0.e(), l0.f(), l0.h()), (&mat![[0]], &mat![[0]], &mat![[0]]));
        let l2 = build_ln(2);
        assert_eq!(l2.h(), &ExactMatrix::diag([q(2, 1), Q::ZERO, q(-2, 1)]));
        assert_eq!(build_ln(3).casimir(), ExactMatrix::scalar(4, q(15, 2)));
    }

    #[test]
    fn casimir_is_scalar_on_every_ln() {
        for n in 0..9 {
            let l = build_ln(n);
            assert!(all_pass(&l.relation_checks()));
            let expect = q((n * (n + 2)) as i64, 2);
            assert_eq!(l.casimir(), ExactMatrix::scalar(n + 1, expect));
        }
    }

    #[test]
    fn bad_relations_are_rejected() {
        let e = mat![[0, 1], [0, 0]];
        let f = mat![[0, 0], [1, 0]];
        let h = mat![[2, 0], [0, -2]];
        let labels = vec!["a".into(), "b".into()];
        assert!(matches!(Sl2Rep::new(e, f, h, labels), Err(Error::RelationFails(_))));
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let l = build_ln(4);
        let x = &PBWElement::e() + &PBWElement::h().pow(2);
        let y = &PBWElement::f().pow(2) - &PBWElement::h();
        assert_eq!(l.evaluate(&(&x * &y)), &l.evaluate(&x) * &l.evaluate(&y));
    }

    #[test]
    fn pullback_of_l3() {
        let r = sharp_pullback(&build_ln(3));
        assert!(all_pass(&r.verify_presentation()));
        let cv = r.central_values();
        assert!(cv.alpha.is_zero() && cv.beta.is_zero() && cv.gamma.is_zero());
        assert_eq!(cv.delta, ExactMatrix::scalar(4, q(3, 16)));
    }

    #[test]
    fn both_pullback_routes_agree() {
        for n in 0..8 {
            let l = build_ln(n);
            assert_eq!(sharp_pullback(&l), sharp_pullback_even(&l));
        }
    }
}
