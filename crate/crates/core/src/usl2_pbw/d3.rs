use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::gaussian::Q;
use crate::usl2_pbw::{PBWElement, RacahGen};

/// An element `σ^s τ^t` of the dihedral group of order 6, with
/// `σ² = τ³ = (στ)² = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct D3 {
    s: u8,
    t: u8,
}

/// Generator letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum D3Gen {
    Sigma,
    Tau,
}

impl D3 {
    pub const IDENTITY: D3 = D3 { s: 0, t: 0 };
    pub const SIGMA: D3 = D3 { s: 1, t: 0 };
    pub const TAU: D3 = D3 { s: 0, t: 1 };

    pub fn new(s: u8, t: u8) -> Self {
        Self { s: s % 2, t: t % 3 }
    }

    pub fn all() -> [D3; 6] {
        let mut out = [D3::IDENTITY; 6];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = D3::new((k / 3) as u8, (k % 3) as u8);
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: D3) -> D3 {
        // τ^b σ^c = σ^c τ^{±b}
        let b = if other.s == 0 { self.t } else { (3 - self.t) % 3 };
        D3::new(self.s + other.s, b + other.t)
    }

    pub fn from_word(word: &[D3Gen]) -> D3 {
        word.iter().fold(D3::IDENTITY, |acc, g| {
            acc.compose(match g {
                D3Gen::Sigma => D3::SIGMA,
                D3Gen::Tau => D3::TAU,
            })
        })
    }

    /// Letters to apply, rightmost first.
    fn letters(self) -> impl Iterator<Item = D3Gen> {
        std::iter::repeat_n(D3Gen::Tau, self.t as usize).chain(std::iter::repeat_n(D3Gen::Sigma, self.s as usize))
    }
}

impl fmt::Display for D3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == D3::IDENTITY {
            return f.write_str("1");
        }
        let word: String = std::iter::repeat_n('s', self.s as usize)
            .chain(std::iter::repeat_n('t', self.t as usize))
            .collect();
        f.write_str(&word)
    }
}

impl FromStr for D3 {
    type Err = Error;
    /// Words over `s`/`t` (or `sigma`/`tau`), e.g. `st`, `tts`, `1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let norm = s.trim().replace("sigma", "s").replace("tau", "t");
        if norm == "1" || norm.is_empty() {
            return Ok(D3::IDENTITY);
        }
        let word: Result<Vec<D3Gen>, Error> = norm
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .map(|c| match c {
                's' => Ok(D3Gen::Sigma),
                't' => Ok(D3Gen::Tau),
                _ => Err(Error::Parse(format!("bad group word `{s}`"))),
            })
            .collect();
        Ok(D3::from_word(&word?))
    }
}

fn generator_images(g: D3Gen) -> [PBWElement; 3] {
    let (e, f, h) = (PBWElement::e(), PBWElement::f(), PBWElement::h());
    let i = Q::I;
    match g {
        D3Gen::Sigma => [f.scale(&i), e.scale(&-&i), -&h],
        D3Gen::Tau => {
            let ie_if = &e.scale(&i) + &f.scale(&i);
            let half = Q::frac(1, 2);
            [
                (&h - &ie_if).scale(&half),
                (&h + &ie_if).scale(&half),
                &e.scale(&i) - &f.scale(&i),
            ]
        }
    }
}

fn apply_generator(g: D3Gen, x: &PBWElement) -> PBWElement {
    let imgs = generator_images(g);
    let mut pows: [Vec<PBWElement>; 3] = Default::default();
    let mut power = |slot: usize, k: u32| -> PBWElement {
        let cache = &mut pows[slot];
        if cache.is_empty() {
            cache.push(PBWElement::one());
        }
        while cache.len() <= k as usize {
            let next = &cache[cache.len() - 1] * &imgs[slot];
            cache.push(next);
        }
        cache[k as usize].clone()
    };
    let mut out = PBWElement::zero();
    for (&(e, f, h), c) in x.terms() {
        let term = &(&power(0, e) * &power(1, f)) * &power(2, h);
        out = &out + &term.scale(c);
    }
    out
}

/// Action of a group element on U(sl₂) by algebra automorphisms.
pub fn d3_apply(g: D3, x: &PBWElement) -> PBWElement {
    g.letters().fold(x.clone(), |acc, l| apply_generator(l, &acc))
}

fn racah_generator(g: D3Gen, u: RacahGen) -> (i64, RacahGen) {
    use RacahGen::*;
    match g {
        D3Gen::Sigma => match u {
            A => (1, C),
            B => (1, B),
            C => (1, A),
            Delta => (-1, Delta),
            Alpha => (-1, Gamma),
            Beta => (-1, Beta),
            Gamma => (-1, Alpha),
            SmallDelta => (1, SmallDelta),
            OmegaA => (1, OmegaC),
            OmegaB => (1, OmegaB),
            OmegaC => (1, OmegaA),
        },
        D3Gen::Tau => match u {
            A => (1, B),
            B => (1, C),
            C => (1, A),
            Delta => (1, Delta),
            Alpha => (1, Beta),
            Beta => (1, Gamma),
            Gamma => (1, Alpha),
            SmallDelta => (1, SmallDelta),
            OmegaA => (1, OmegaB),
            OmegaB => (1, OmegaC),
            OmegaC => (1, OmegaA),
        },
    }
}

/// Action on the named elements of the Racah algebra: `g·u = sign · u'`.
pub fn d3_apply_racah(g: D3, u: RacahGen) -> (i64, RacahGen) {
    g.letters().fold((1, u), |(sign, v), l| {
        let (s, w) = racah_generator(l, v);
        (sign * s, w)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        let s = D3::SIGMA;
        let t = D3::TAU;
        assert_eq!(s.compose(s), D3::IDENTITY);
        assert_eq!(t.compose(t).compose(t), D3::IDENTITY);
        let st = s.compose(t);
        assert_eq!(st.compose(st), D3::IDENTITY);
        assert_eq!("tts".parse::<D3>().unwrap(), t.compose(t).compose(s));
        for g in D3::all() {
            assert_eq!(g.to_string().parse::<D3>().unwrap(), g);
        }
    }

    #[test]
    fn small_orbits() {
        let e = PBWElement::e();
        let h = PBWElement::h();
        assert_eq!(d3_apply(D3::SIGMA, &d3_apply(D3::SIGMA, &e)), e);
        let t3 = d3_apply(D3::TAU, &d3_apply(D3::TAU, &d3_apply(D3::TAU, &h)));
        assert_eq!(t3, h);
    }

    #[test]
    fn word_action_matches_letterwise() {
        let x = &PBWElement::e() * &PBWElement::h().pow(2);
        for g in D3::all() {
            for k in D3::all() {
                let lhs = d3_apply(g.compose(k), &x);
                let rhs = d3_apply(g, &d3_apply(k, &x));
                assert_eq!(lhs, rhs, "{g} {k}");
                for u in RacahGen::ALL {
                    let (s1, v) = d3_apply_racah(k, u);
                    let (s2, w) = d3_apply_racah(g, v);
                    assert_eq!(d3_apply_racah(g.compose(k), u), (s1 * s2, w));
                }
            }
        }
    }
}
