use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::algebra::{Casimirs, Centrals, Quadruple};
use crate::error::Error;
use crate::gaussian::Q;
use crate::usl2_pbw::{casimir, PBWElement};

/// Named elements of the universal Racah algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum RacahGen {
    A,
    B,
    C,
    /// `Δ`
    Delta,
    Alpha,
    Beta,
    Gamma,
    /// `δ = A + B + C`
    SmallDelta,
    OmegaA,
    OmegaB,
    OmegaC,
}

impl RacahGen {
    pub const ALL: [RacahGen; 11] = [
        RacahGen::A,
        RacahGen::B,
        RacahGen::C,
        RacahGen::Delta,
        RacahGen::Alpha,
        RacahGen::Beta,
        RacahGen::Gamma,
        RacahGen::SmallDelta,
        RacahGen::OmegaA,
        RacahGen::OmegaB,
        RacahGen::OmegaC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RacahGen::A => "A",
            RacahGen::B => "B",
            RacahGen::C => "C",
            RacahGen::Delta => "Delta",
            RacahGen::Alpha => "alpha",
            RacahGen::Beta => "beta",
            RacahGen::Gamma => "gamma",
            RacahGen::SmallDelta => "delta",
            RacahGen::OmegaA => "Omega_A",
            RacahGen::OmegaB => "Omega_B",
            RacahGen::OmegaC => "Omega_C",
        }
    }
}

impl fmt::Display for RacahGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RacahGen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        RacahGen::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown Racah generator `{s}`")))
    }
}

/// All images under the map into U(sl₂).
#[derive(Clone, Debug)]
pub struct SharpImages {
    pub quad: Quadruple<PBWElement>,
    pub centrals: Centrals<PBWElement>,
    pub casimirs: Casimirs<PBWElement>,
}

/// `(x − 2)(x + 2)/16`.
fn shifted_square(x: &PBWElement) -> PBWElement {
    let two = Q::int(2);
    (&x.add_scalar(&-&two) * &x.add_scalar(&two)).scale(&Q::frac(1, 16))
}

impl SharpImages {
    fn compute() -> Self {
        let (e, f, h) = (PBWElement::e(), PBWElement::f(), PBWElement::h());
        let i = Q::I;
        let a = shifted_square(&(&e + &f));
        let b = shifted_square(&h);
        let c = shifted_square(&(&e.scale(&i) - &f.scale(&i)));
        let two = Q::int(2);
        let delta = (&(&h.add_scalar(&two) * &f.pow(2)) - &(&h.add_scalar(&-&two) * &e.pow(2))).scale(&Q::frac(1, 64));
        let quad = Quadruple { a, b, c, delta };
        let centrals = quad.centrals();
        let casimirs = quad.casimirs_with(&centrals);
        Self {
            quad,
            centrals,
            casimirs,
        }
    }

    /// Shared, lazily computed images.
    pub fn get() -> &'static SharpImages {
        static CELL: OnceLock<SharpImages> = OnceLock::new();
        CELL.get_or_init(Self::compute)
    }

    pub fn image(&self, g: RacahGen) -> &PBWElement {
        match g {
            RacahGen::A => &self.quad.a,
            RacahGen::B => &self.quad.b,
            RacahGen::C => &self.quad.c,
            RacahGen::Delta => &self.quad.delta,
            RacahGen::Alpha => &self.centrals.alpha,
            RacahGen::Beta => &self.centrals.beta,
            RacahGen::Gamma => &self.centrals.gamma,
            RacahGen::SmallDelta => &self.centrals.delta,
            RacahGen::OmegaA => &self.casimirs.omega_a,
            RacahGen::OmegaB => &self.casimirs.omega_b,
            RacahGen::OmegaC => &self.casimirs.omega_c,
        }
    }
}

/// Image of a named element of the Racah algebra in U(sl₂).
pub fn sharp(g: RacahGen) -> PBWElement {
    SharpImages::get().image(g).clone()
}

/// `−3/1024 (Λ − 4)(Λ − 12)`, expanded.
pub fn expected_casimir_image() -> PBWElement {
    let l = casimir();
    (&l.add_scalar(&Q::int(-4)) * &l.add_scalar(&Q::int(-12))).scale(&Q::frac(-3, 1024))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;
    use crate::usl2_pbw::{component, graded_components, is_even};

    #[test]
    fn b_image() {
        let expected = PBWElement::from_terms([((0, 0, 2), q(1, 16)), ((0, 0, 0), q(-1, 4))]);
        assert_eq!(sharp(RacahGen::B), expected);
    }

    #[test]
    fn central_images_vanish_or_match() {
        for g in [RacahGen::Alpha, RacahGen::Beta, RacahGen::Gamma] {
            assert!(sharp(g).is_zero(), "{g}");
        }
        let delta = casimir().add_scalar(&q(-6, 1)).scale(&q(1, 8));
        assert_eq!(sharp(RacahGen::SmallDelta), delta);
        for g in [RacahGen::OmegaA, RacahGen::OmegaB, RacahGen::OmegaC] {
            assert_eq!(sharp(g), expected_casimir_image(), "{g}");
        }
    }

    #[test]
    fn delta_components() {
        let d = sharp(RacahGen::Delta);
        let degrees: Vec<i64> = graded_components(&d).iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![-2, 2]);
        let low = PBWElement::from_terms([((0, 2, 1), q(1, 64)), ((0, 2, 0), q(-1, 32))]);
        assert_eq!(component(&d, -2), low);
        let high = PBWElement::from_terms([((2, 0, 1), q(-1, 64)), ((2, 0, 0), q(-1, 32))]);
        assert_eq!(component(&d, 2), high);
        let b_parts = graded_components(&sharp(RacahGen::B));
        assert_eq!(b_parts.len(), 1);
        assert_eq!(b_parts[0].degree, 0);
    }

    #[test]
    fn images_are_even() {
        for g in RacahGen::ALL {
            assert!(is_even(&sharp(g)), "{g}");
        }
    }

    #[test]
    fn names_round_trip() {
        for g in RacahGen::ALL {
            assert_eq!(g.name().parse::<RacahGen>().unwrap(), g);
        }
    }
}
