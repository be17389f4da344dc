use std::collections::BTreeMap;

use crate::gaussian::Q;
use crate::usl2_pbw::{Monomial, PBWElement};

/// The part of an element supported on monomials with `e − f = degree`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GradedComponent {
    pub degree: i64,
    pub element: PBWElement,
}

fn grade(e: u32, f: u32) -> i64 {
    i64::from(e) - i64::from(f)
}

/// Nonzero homogeneous components, by increasing degree.
pub fn graded_components(x: &PBWElement) -> Vec<GradedComponent> {
    let mut parts: BTreeMap<i64, Vec<(Monomial, Q)>> = BTreeMap::new();
    for (&m, c) in x.terms() {
        parts.entry(grade(m.0, m.1)).or_default().push((m, c.clone()));
    }
    parts
        .into_iter()
        .map(|(degree, terms)| GradedComponent {
            degree,
            element: PBWElement::from_terms(terms),
        })
        .collect()
}

/// Component of degree `n` (possibly zero).
pub fn component(x: &PBWElement, n: i64) -> PBWElement {
    PBWElement::from_terms(
        x.terms()
            .iter()
            .filter(|(m, _)| grade(m.0, m.1) == n)
            .map(|(m, c)| (*m, c.clone())),
    )
}

pub fn is_even(x: &PBWElement) -> bool {
    x.terms().keys().all(|&(e, f, _)| (e + f) % 2 == 0)
}

/// `Λ = EF + FE + H²/2`, in normal form `2EF − H + H²/2`.
pub fn casimir() -> PBWElement {
    let (e, f, h) = (PBWElement::e(), PBWElement::f(), PBWElement::h());
    &(&(&e * &f) + &(&f * &e)) + &(&h * &h).scale(&Q::frac(1, 2))
}

/// `Σ c_j Λ^j`.
pub fn lambda_poly(coeffs: &[Q]) -> PBWElement {
    let lambda = casimir();
    let mut acc = PBWElement::zero();
    let mut power = PBWElement::one();
    for c in coeffs {
        acc = &acc + &power.scale(c);
        power = &power * &lambda;
    }
    acc
}

/// Coordinates `(n, j, k) ↦ c` of an even element in the basis
/// `X_n Λ^j H^k`, where `X_n = E^{2n}` for `n ≥ 0` and `F^{−2n}` otherwise.
pub type LambdaForm = BTreeMap<(i64, u32, u32), Q>;

fn lambda_basis(n: i64, j: u32, k: u32, lambda_pows: &mut Vec<PBWElement>) -> PBWElement {
    while lambda_pows.len() <= j as usize {
        let next = &lambda_pows[lambda_pows.len() - 1] * &casimir();
        lambda_pows.push(next);
    }
    let lead = if n >= 0 {
        PBWElement::monomial((2 * n as u32, 0, 0), Q::ONE)
    } else {
        PBWElement::monomial((0, (-2 * n) as u32, 0), Q::ONE)
    };
    &(&lead * &lambda_pows[j as usize]) * &PBWElement::monomial((0, 0, k), Q::ONE)
}

/// Expresses an even element in the `X_n Λ^j H^k` basis; `None` if odd.
///
/// `X_n Λ^j H^k` has leading term `2^j E^{2n+j} F^j H^k` (resp.
/// `2^j E^j F^{j−2n} H^k`) and all other terms have smaller `e + f`, so
/// peeling off the top terms terminates.
pub fn lambda_form(x: &PBWElement) -> Option<LambdaForm> {
    if !is_even(x) {
        return None;
    }
    let mut rest = x.clone();
    let mut out = LambdaForm::new();
    let mut pows = vec![PBWElement::one()];
    while let Some((&(e, f, h), c)) = rest.terms().iter().max_by_key(|(&(e, f, h), _)| (e + f, h, e)) {
        let j = e.min(f);
        let n = grade(e, f) / 2;
        let coeff = c * &Q::int(1i64 << j).inv().expect("nonzero");
        let basis = lambda_basis(n, j, h, &mut pows);
        rest = &rest - &basis.scale(&coeff);
        out.insert((n, j, h), coeff);
    }
    Some(out)
}

/// Coefficients `c_j` when the element equals `Σ c_j Λ^j`.
pub fn as_lambda_polynomial(x: &PBWElement) -> Option<Vec<Q>> {
    let form = lambda_form(x)?;
    if form.keys().any(|&(n, _, k)| n != 0 || k != 0) {
        return None;
    }
    let top = form.keys().map(|&(_, j, _)| j).max().map_or(0, |j| j + 1);
    let mut coeffs = vec![Q::ZERO; top as usize];
    for ((_, j, _), c) in form {
        coeffs[j as usize] = c;
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;

    #[test]
    fn casimir_normal_form_and_centrality() {
        let l = casimir();
        assert_eq!(
            l,
            PBWElement::from_terms([((1, 1, 0), q(2, 1)), ((0, 0, 1), q(-1, 1)), ((0, 0, 2), q(1, 2)),])
        );
        for g in [PBWElement::e(), PBWElement::f(), PBWElement::h()] {
            assert!(l.commutator(&g).is_zero());
        }
    }

    #[test]
    fn grading_examples() {
        let e2 = PBWElement::e().pow(2);
        let parts = graded_components(&e2);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].degree, 2);
        assert!(!is_even(&PBWElement::e()));
        assert!(is_even(&(&casimir() * &PBWElement::h())));
    }

    #[test]
    fn lambda_form_round_trip() {
        let x = &lambda_poly(&[q(3, 1), q(-1, 2), q(1, 7)]) * &PBWElement::e().pow(2);
        let form = lambda_form(&x).unwrap();
        let mut pows = vec![PBWElement::one()];
        let rebuilt = form.iter().fold(PBWElement::zero(), |acc, (&(n, j, k), c)| {
            &acc + &lambda_basis(n, j, k, &mut pows).scale(c)
        });
        assert_eq!(rebuilt, x);
        assert_eq!(form.len(), 3);
        let p = lambda_poly(&[q(1, 1), Q::ZERO, q(5, 3)]);
        assert_eq!(as_lambda_polynomial(&p), Some(vec![q(1, 1), Q::ZERO, q(5, 3)]));
        assert_eq!(as_lambda_polynomial(&PBWElement::h()), None);
        assert_eq!(lambda_form(&PBWElement::f()), None);
    }
}
