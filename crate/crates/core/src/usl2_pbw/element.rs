use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use crate::gaussian::Q;

/// Exponent triple `(e, f, h)` of the PBW monomial `E^e F^f H^h`.
pub type Monomial = (u32, u32, u32);

/// An element of U(sl₂) as a finite sum `Σ c·E^e F^f H^h`.
///
/// Stored coefficients are never zero, so structural equality is equality
/// in the algebra.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PBWElement {
    terms: BTreeMap<Monomial, Q>,
}

/// Coefficients of `(H + s)^c`, low degree first.
fn shifted_power(s: i64, c: u32) -> Vec<Q> {
    let mut out = vec![Q::ONE];
    let s = Q::int(s);
    for _ in 0..c {
        let mut next = vec![Q::ZERO; out.len() + 1];
        for (k, a) in out.iter().enumerate() {
            next[k + 1] += a;
            next[k] += &(a * &s);
        }
        out = next;
    }
    out
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

thread_local! {
    // normal form of F^b E^d, shared by every product on this thread
    static SWAP_CACHE: RefCell<HashMap<(u32, u32), Rc<PBWElement>>> = RefCell::new(HashMap::new());
}

/// Normal form of `F^b E^d`.
fn swap(b: u32, d: u32) -> Rc<PBWElement> {
    if let Some(hit) = SWAP_CACHE.with(|c| c.borrow().get(&(b, d)).cloned()) {
        return hit;
    }
    let value = if b == 0 || d == 0 {
        PBWElement::monomial((d, b, 0), Q::ONE)
    } else {
        // F^b E^d = F^{b-1} E^d F - d F^{b-1} E^{d-1} (H + d - 1)
        let first = swap(b - 1, d).right_mul_f();
        let second = swap(b - 1, d - 1).right_mul_h_poly(&shifted_power(i64::from(d) - 1, 1));
        &first - &second.scale(&Q::int(i64::from(d)))
    };
    let value = Rc::new(value);
    SWAP_CACHE.with(|c| c.borrow_mut().insert((b, d), value.clone()));
    value
}

impl PBWElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Q::ONE)
    }

    pub fn scalar(c: Q) -> Self {
        Self::monomial((0, 0, 0), c)
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn e() -> Self {
        Self::monomial((1, 0, 0), Q::ONE)
    }

    pub fn f() -> Self {
        Self::monomial((0, 1, 0), Q::ONE)
    }

    pub fn h() -> Self {
        Self::monomial((0, 0, 1), Q::ONE)
    }

    /// Builds from `(e, f, h, coefficient)` entries, merging repeats.
    pub fn from_terms(entries: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in entries {
            out.add_term(m, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> Q {
        self.terms.get(&m).cloned().unwrap_or(Q::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest `e + f + h` over the support; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(e, f, h)| e + f + h).max()
    }

    fn add_term(&mut self, m: Monomial, c: &Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert(Q::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// `x · F`.
    fn right_mul_f(&self) -> Self {
        // E^e F^f H^h F = E^e F^{f+1} (H - 2)^h
        let mut out = Self::zero();
        for (&(e, f, h), c) in &self.terms {
            for (k, a) in shifted_power(-2, h).iter().enumerate() {
                out.add_term((e, f + 1, k as u32), &(c * a));
            }
        }
        out
    }

    /// `x · p(H)` for `p` given by coefficients.
    fn right_mul_h_poly(&self, p: &[Q]) -> Self {
        let mut out = Self::zero();
        for (&(e, f, h), c) in &self.terms {
            for (k, a) in p.iter().enumerate() {
                out.add_term((e, f, h + k as u32), &(c * a));
            }
        }
        out
    }

    /// Accumulates `c · (E^a F^b H^c)(E^d F^e H^f)` into `out`.
    fn mul_monomials(out: &mut Self, x: Monomial, y: Monomial, coeff: &Q) {
        let (a, b, c) = x;
        let (d, e, f) = y;
        let (d_i, e_i) = (i64::from(d), i64::from(e));
        // H^c E^d F^e = E^d F^e (H + 2d - 2e)^c
        let tail = shifted_power(2 * d_i - 2 * e_i, c);
        if b == 0 || d == 0 {
            for (k, t) in tail.iter().enumerate() {
                out.add_term((a + d, b + e, f + k as u32), &(coeff * t));
            }
            return;
        }
        // F^b E^d = Σ κ E^x F^y H^z, and H^z F^e = F^e (H - 2e)^z
        for (&(xe, yf, z), kappa) in swap(b, d).terms.iter() {
            let p = poly_mul(&shifted_power(-2 * e_i, z), &tail);
            let scale = coeff * kappa;
            for (k, t) in p.iter().enumerate() {
                out.add_term((a + xe, yf + e, f + k as u32), &(&scale * t));
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn add_scalar(&self, c: &Q) -> Self {
        let mut out = self.clone();
        out.add_term((0, 0, 0), c);
        out
    }
}

impl Add for &PBWElement {
    type Output = PBWElement;
    fn add(self, rhs: &PBWElement) -> PBWElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &PBWElement {
    type Output = PBWElement;
    fn sub(self, rhs: &PBWElement) -> PBWElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Neg for &PBWElement {
    type Output = PBWElement;
    fn neg(self) -> PBWElement {
        self.scale(&-Q::ONE)
    }
}

impl Mul for &PBWElement {
    type Output = PBWElement;
    fn mul(self, rhs: &PBWElement) -> PBWElement {
        let mut out = PBWElement::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &rhs.terms {
                PBWElement::mul_monomials(&mut out, *x, *y, &(cx * cy));
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for PBWElement {
            type Output = PBWElement;
            fn $method(self, rhs: PBWElement) -> PBWElement {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for PBWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(e, ff, h), c)| {
                let mut s = format!("({c})");
                for (sym, k) in [("E", e), ("F", ff), ("H", h)] {
                    match k {
                        0 => {}
                        1 => s.push_str(sym),
                        _ => s.push_str(&format!("{sym}^{k}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PBWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for PBWElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(e, f, h), c) in &self.terms {
            seq.serialize_element(&(e, f, h, c.to_string()))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;

    #[test]
    fn straightening_basics() {
        let (e, f, h) = (PBWElement::e(), PBWElement::f(), PBWElement::h());
        let fe = &f * &e;
        assert_eq!(fe, PBWElement::from_terms([((1, 1, 0), Q::ONE), ((0, 0, 1), -Q::ONE)]));
        let he = &h * &e;
        assert_eq!(he, PBWElement::from_terms([((1, 0, 1), Q::ONE), ((1, 0, 0), q(2, 1))]));
        assert_eq!(h.commutator(&f), f.scale(&q(-2, 1)));
        assert_eq!(e.commutator(&f), h);
    }

    /// Independent normalizer: rewrite words letter by letter.
    fn normalize_word(word: &[u8]) -> PBWElement {
        // letters: 0 = E, 1 = F, 2 = H
        let mut todo: Vec<(Vec<u8>, Q)> = vec![(word.to_vec(), Q::ONE)];
        let mut out = PBWElement::zero();
        while let Some((w, c)) = todo.pop() {
            match w.windows(2).position(|p| p[0] > p[1]) {
                None => {
                    let count = |l| w.iter().filter(|&&x| x == l).count() as u32;
                    out = &out + &PBWElement::monomial((count(0), count(1), count(2)), c);
                }
                Some(i) => {
                    let (x, y) = (w[i], w[i + 1]);
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    todo.push((swapped, c.clone()));
                    let mut rest = w[..i].to_vec();
                    // [x, y] for x > y: [F,E] = -H, [H,E] = 2E, [H,F] = -2F
                    let (letter, k) = match (x, y) {
                        (1, 0) => (2, -1),
                        (2, 0) => (0, 2),
                        _ => (1, -2),
                    };
                    rest.push(letter);
                    rest.extend_from_slice(&w[i + 2..]);
                    todo.push((rest, &c * &Q::int(k)));
                }
            }
        }
        out
    }

    #[test]
    fn swap_matches_word_rewriting() {
        for b in 0..5 {
            for d in 0..5 {
                let mut word = vec![1u8; b as usize];
                word.extend(std::iter::repeat_n(0u8, d as usize));
                assert_eq!(*swap(b, d), normalize_word(&word), "F^{b} E^{d}");
            }
        }
        let word = [2u8, 1, 0, 2, 1, 0, 0];
        let prod = word.iter().fold(PBWElement::one(), |acc, &l| {
            let g = [PBWElement::e(), PBWElement::f(), PBWElement::h()];
            &acc * &g[l as usize]
        });
        assert_eq!(prod, normalize_word(&word));
    }
}
