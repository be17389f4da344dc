use crate::check::IdentityCheck;
use crate::gaussian::Q;
use crate::usl2_pbw::{
    casimir, d3_apply, d3_apply_racah, expected_casimir_image, sharp, PBWElement, RacahGen, SharpImages, D3,
};

/// The defining identities of the homomorphism, evaluated symbolically.
pub fn verify_sharp_relations() -> Vec<IdentityCheck> {
    let img = SharpImages::get();
    let mut out: Vec<IdentityCheck> = img
        .quad
        .commutator_residuals()
        .iter()
        .map(|(name, r)| IdentityCheck::from_residual(format!("sharp: {name}"), r))
        .collect();
    let (a, b, c, d) = (&img.quad.a, &img.quad.b, &img.quad.c, &img.quad.delta);
    let rel = |x: &PBWElement, y: &PBWElement, z: &PBWElement| &(&x.commutator(d) + &(x * y)) - &(z * x);
    out.push(IdentityCheck::from_residual(
        "sharp: [A,Delta] + AC - BA",
        &rel(a, c, b),
    ));
    out.push(IdentityCheck::from_residual(
        "sharp: [B,Delta] + BA - CB",
        &rel(b, a, c),
    ));
    out.push(IdentityCheck::from_residual(
        "sharp: [C,Delta] + CB - AC",
        &rel(c, b, a),
    ));
    let target = casimir().add_scalar(&Q::int(-6)).scale(&Q::frac(1, 8));
    out.push(IdentityCheck::from_residual(
        "sharp: A + B + C - (Lambda - 6)/8",
        &(&img.centrals.delta - &target),
    ));
    out
}

/// `Ω♯ = −3/1024 (Λ−4)(Λ−12)` for each symmetric Casimir.
pub fn verify_casimir_images() -> Vec<IdentityCheck> {
    let expected = expected_casimir_image();
    [RacahGen::OmegaA, RacahGen::OmegaB, RacahGen::OmegaC]
        .into_iter()
        .map(|g| {
            IdentityCheck::from_residual(
                format!("sharp({g}) + 3/1024 (Lambda-4)(Lambda-12)"),
                &(&sharp(g) - &expected),
            )
        })
        .collect()
}

/// `f(x, y) = 256x + 3(4y − 3)(4y + 1)`.
pub fn kernel_polynomial(x: &PBWElement, y: &PBWElement) -> PBWElement {
    let four_y = y.scale(&Q::int(4));
    let prod = &four_y.add_scalar(&Q::int(-3)) * &four_y.add_scalar(&Q::ONE);
    &x.scale(&Q::int(256)) + &prod.scale(&Q::int(3))
}

/// The kernel generators map to zero.
pub fn verify_kernel_generators() -> Vec<IdentityCheck> {
    let mut out = vec![
        IdentityCheck::from_residual("sharp(alpha)", &sharp(RacahGen::Alpha)),
        IdentityCheck::from_residual("sharp(beta)", &sharp(RacahGen::Beta)),
    ];
    let delta = sharp(RacahGen::SmallDelta);
    for g in [RacahGen::OmegaA, RacahGen::OmegaB, RacahGen::OmegaC] {
        out.push(IdentityCheck::from_residual(
            format!("sharp(256 {g} + 3(4 delta - 3)(4 delta + 1))"),
            &kernel_polynomial(&sharp(g), &delta),
        ));
    }
    out
}

/// `f(Ω, δ)` with `Λ` specialized to a scalar, via the closed forms.
pub fn kernel_polynomial_at(lambda: &Q) -> (Q, Q, Q) {
    let omega = &(&Q::frac(-3, 1024) * &(lambda - &Q::int(4))) * &(lambda - &Q::int(12));
    let delta = &(lambda - &Q::int(6)) * &Q::frac(1, 8);
    let four_d = &delta * &Q::int(4);
    let f = &(&omega * &Q::int(256)) + &(&(&(&four_d - &Q::int(3)) * &(&four_d + &Q::ONE)) * &Q::int(3));
    (omega, delta, f)
}

/// Group relations on both algebras, compatibility with the map, and
/// invariance of `Λ`.
pub fn verify_equivariance() -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let gens = [("E", PBWElement::e()), ("F", PBWElement::f()), ("H", PBWElement::h())];
    let sigma = D3::SIGMA;
    let tau = D3::TAU;
    let relations: [(&str, &[D3]); 3] = [
        ("sigma^2", &[sigma, sigma]),
        ("tau^3", &[tau, tau, tau]),
        ("(sigma tau)^2", &[sigma, tau, sigma, tau]),
    ];
    for (rel, word) in relations {
        for (name, x) in &gens {
            // apply letters one at a time so the relation is really tested
            let y = word.iter().rev().fold(x.clone(), |acc, g| d3_apply(*g, &acc));
            out.push(IdentityCheck::from_residual(
                format!("U: {rel}({name}) = {name}"),
                &(&y - x),
            ));
        }
        for u in RacahGen::ALL {
            let (sign, v) = word.iter().rev().fold((1, u), |(s, v), g| {
                let (s2, w) = d3_apply_racah(*g, v);
                (s * s2, w)
            });
            out.push(IdentityCheck::flag(format!("R: {rel}({u}) = {u}"), sign == 1 && v == u));
        }
    }
    for g in [sigma, tau] {
        for u in [RacahGen::A, RacahGen::B, RacahGen::C, RacahGen::Delta] {
            let lhs = d3_apply(g, &sharp(u));
            let (sign, v) = d3_apply_racah(g, u);
            let rhs = sharp(v).scale(&Q::int(sign));
            out.push(IdentityCheck::from_residual(
                format!("{g}(sharp({u})) = sharp({g}({u}))"),
                &(&lhs - &rhs),
            ));
        }
        let l = casimir();
        out.push(IdentityCheck::from_residual(
            format!("{g}(Lambda) = Lambda"),
            &(&d3_apply(g, &l) - &l),
        ));
    }
    out
}

/// Commutation identities of `H`, `H²` with `E`, `F`, `E²`, `F²`, and the
/// products `E²F²`, `F²E²` as polynomials in `H` and `Λ`.
pub fn verify_even_identities() -> Vec<IdentityCheck> {
    let (e, f, h) = (PBWElement::e(), PBWElement::f(), PBWElement::h());
    let (e2, f2, h2) = (e.pow(2), f.pow(2), h.pow(2));
    let l = casimir();
    let k = |n: i64| Q::int(n);
    let hp = |c: i64| h.add_scalar(&k(c));
    let quad = |lin: i64, lam: i64, c: i64| -> PBWElement {
        // H² + lin·H + lam·Λ + c
        &(&(&h2 + &h.scale(&k(lin))) + &l.scale(&k(lam))) + &PBWElement::scalar(k(c))
    };
    let cases: Vec<(&str, PBWElement)> = vec![
        ("[H,E^2] = 4E^2", &h.commutator(&e2) - &e2.scale(&k(4))),
        ("[H,F^2] = -4F^2", &h.commutator(&f2) + &f2.scale(&k(4))),
        (
            "16E^2F^2 = (H^2-2H-2Lambda)(H^2-6H-2Lambda+8)",
            &(&e2 * &f2).scale(&k(16)) - &(&quad(-2, -2, 0) * &quad(-6, -2, 8)),
        ),
        (
            "16F^2E^2 = (H^2+2H-2Lambda)(H^2+6H-2Lambda+8)",
            &(&f2 * &e2).scale(&k(16)) - &(&quad(2, -2, 0) * &quad(6, -2, 8)),
        ),
        ("[H^2,E] = 4(H-1)E", &h2.commutator(&e) - &(&hp(-1) * &e).scale(&k(4))),
        ("[H^2,F] = -4(H+1)F", &h2.commutator(&f) + &(&hp(1) * &f).scale(&k(4))),
        (
            "[H^2,E^2] = 8(H-2)E^2",
            &h2.commutator(&e2) - &(&hp(-2) * &e2).scale(&k(8)),
        ),
        (
            "[H^2,F^2] = -8(H+2)F^2",
            &h2.commutator(&f2) + &(&hp(2) * &f2).scale(&k(8)),
        ),
    ];
    cases
        .into_iter()
        .map(|(name, r)| IdentityCheck::from_residual(name, &r))
        .collect()
}
