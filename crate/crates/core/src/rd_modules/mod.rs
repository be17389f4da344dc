//! The `(d+1)`-dimensional modules `R_d(a, b, c)`: construction, closed
//! forms, irreducibility, isomorphism classes and spectral data.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_linalg::modp::closure_dim_mod_p;
use crate::exact_linalg::{algebra_closure, ExactMatrix, Poly};
use crate::gaussian::Q;
use crate::racah_ops::RacahRep;

/// Parameters of `R_d(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct RdParams {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: usize,
}

/// `(x + d/2 − i)(x + d/2 − i + 1)`.
fn shifted_product(x: &Q, d: usize, i: usize) -> Q {
    let t = x + &Q::frac(d as i64 - 2 * i as i64, 2);
    &t * &(&t + &Q::ONE)
}

/// `x(x + 1)`.
pub fn s_value(x: &Q) -> Q {
    x * &(x + &Q::ONE)
}

impl RdParams {
    pub fn new(a: Q, b: Q, c: Q, d: usize) -> Self {
        Self { a, b, c, d }
    }

    fn half_d(&self) -> Q {
        Q::frac(self.d as i64, 2)
    }

    pub fn theta(&self, i: usize) -> Q {
        shifted_product(&self.a, self.d, i)
    }

    pub fn theta_star(&self, i: usize) -> Q {
        shifted_product(&self.b, self.d, i)
    }

    pub fn theta_eps(&self, i: usize) -> Q {
        shifted_product(&self.c, self.d, i)
    }

    /// `φ_i` for `1 ≤ i ≤ d`.
    pub fn phi(&self, i: usize) -> Q {
        let (i_q, d_q) = (Q::int(i as i64), Q::int(self.d as i64));
        let base = &(&self.a + &self.b) + &self.half_d();
        let f1 = &(&base + &self.c) - &Q::int(i as i64 - 2);
        let f2 = &(&base - &self.c) - &Q::int(i as i64 - 1);
        &(&(&i_q * &(&(&i_q - &d_q) - &Q::ONE)) * &f1) * &f2
    }

    /// Closed forms for the scalars `α, β, γ, δ`.
    pub fn central_scalars(&self) -> [Q; 4] {
        let h = self.half_d();
        let term = |x: &Q, y: &Q, z: &Q| {
            // (y − x)(y + x + 1)(z − d/2)(z + d/2 + 1)
            let p1 = &(y - x) * &(&(y + x) + &Q::ONE);
            let p2 = &(z - &h) * &(&(z + &h) + &Q::ONE);
            &p1 * &p2
        };
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let delta = &(&(&s_value(&h) + &s_value(a)) + &s_value(b)) + &s_value(c);
        [term(b, c, a), term(c, a, b), term(a, b, c), delta]
    }

    /// `trace(X) = (d + 1)(s_X + d(d + 2)/12)` for `X = A, B, C`.
    pub fn traces(&self) -> [Q; 3] {
        let d = self.d as i64;
        let shift = Q::frac(d * (d + 2), 12);
        let n = Q::int(d + 1);
        [&self.a, &self.b, &self.c].map(|x| &n * &(&s_value(x) + &shift))
    }

    /// The first of the four linear forms that lands in `{d/2 − i}`, if any.
    pub fn irreducibility_witness(&self) -> Option<ReducibilityWitness> {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let forms = [
            ("a+b+c+1", &(&(a + b) + c) + &Q::ONE),
            ("-a+b+c", &(b + c) - a),
            ("a-b+c", &(a + c) - b),
            ("a+b-c", &(a + b) - c),
        ];
        for (name, value) in forms {
            for i in 1..=self.d {
                if value == &self.half_d() - &Q::int(i as i64) {
                    return Some(ReducibilityWitness { form: name, value, i });
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducibility_witness().is_none()
    }

    /// Whether `x ∉ {(i − d − 1)/2 | 1 ≤ i ≤ 2d − 1}`.
    pub fn avoids_defect_set(&self, x: &Q) -> bool {
        let d = self.d as i64;
        (1..2 * d).all(|i| *x != Q::frac(i - d - 1, 2))
    }

    /// Closed-form diagonalizability of `A, B, C` (irreducible case).
    pub fn diagonalizable_flags(&self) -> [bool; 3] {
        [&self.a, &self.b, &self.c].map(|x| self.avoids_defect_set(x))
    }

    /// Minimal polynomials of `A, B, C` on an irreducible module.
    pub fn min_polys(&self) -> Result<[Poly; 3]> {
        self.require_irreducible()?;
        let idx: Vec<usize> = (0..=self.d).collect();
        let make = |f: &dyn Fn(usize) -> Q| Poly::from_roots(&idx.iter().map(|&i| f(i)).collect::<Vec<_>>());
        Ok([
            make(&|i| self.theta(i)),
            make(&|i| self.theta_star(i)),
            make(&|i| self.theta_eps(i)),
        ])
    }

    /// Distinct eigenvalues of `A, B, C`, for use as root hints.
    pub fn eigenvalue_hints(&self) -> [Vec<Q>; 3] {
        let distinct = |f: &dyn Fn(usize) -> Q| {
            let mut v: Vec<Q> = Vec::new();
            for i in 0..=self.d {
                let x = f(i);
                if !v.contains(&x) {
                    v.push(x);
                }
            }
            v
        };
        [
            distinct(&|i| self.theta(i)),
            distinct(&|i| self.theta_star(i)),
            distinct(&|i| self.theta_eps(i)),
        ]
    }

    /// Whether `A, B, C` act as a Leonard triple, by the parameter test.
    pub fn leonard_criterion(&self) -> Result<bool> {
        self.require_irreducible()?;
        Ok(self.diagonalizable_flags().iter().all(|&f| f))
    }

    fn require_irreducible(&self) -> Result<()> {
        match self.irreducibility_witness() {
            None => Ok(()),
            Some(w) => Err(Error::NotIrreducible(format!("{self}: {w}"))),
        }
    }

    pub fn iso_class(&self) -> IsoClass {
        IsoClass::new(self.d, s_value(&self.a), s_value(&self.b), s_value(&self.c))
    }
}

impl fmt::Display for RdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R_{}({}, {}, {})", self.d, self.a, self.b, self.c)
    }
}

/// A linear form hitting the forbidden set.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ReducibilityWitness {
    pub form: &'static str,
    pub value: Q,
    pub i: usize,
}

impl fmt::Display for ReducibilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} = d/2 - {}", self.form, self.value, self.i)
    }
}

/// The matrices `A, B, C, Δ` on the standard basis.
pub fn construct(p: &RdParams) -> RacahRep {
    let n = p.d + 1;
    let mut a = ExactMatrix::zeros(n, n);
    let mut b = ExactMatrix::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = p.theta(i);
        b[(i, i)] = p.theta_star(i);
        if i >= 1 {
            a[(i, i - 1)] = Q::ONE;
            b[(i - 1, i)] = p.phi(i);
        }
    }
    let delta = p.central_scalars()[3].clone();
    let c = &(&ExactMatrix::scalar(n, delta) - &a) - &b;
    let big_delta = a.commutator(&b).scale(&Q::frac(1, 2));
    RacahRep::new(a, b, c, big_delta).expect("square blocks of equal size")
}

/// Isomorphism class of an irreducible module: `d` and `s_X = x(x + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct IsoClass {
    pub d: usize,
    pub s_a: Q,
    pub s_b: Q,
    pub s_c: Q,
}

/// The root of `x² + x = s` with `Re(x) ≥ −1/2` (imaginary part ≥ 0 on
/// the boundary), when it lies in ℚ(i).
pub fn canonical_parameter(s: &Q) -> Option<Q> {
    let disc = &(s * &Q::int(4)) + &Q::ONE;
    let r = disc.sqrt_exact()?;
    let half = Q::frac(1, 2);
    let mut x = &(&r - &Q::ONE) * &half;
    let y = &(&(-&r) - &Q::ONE) * &half;
    // x + 1/2 = r/2, y + 1/2 = −r/2; pick the one with nonnegative real part
    let key = |z: &Q| {
        let w = z + &half;
        (w.re.clone(), w.im.clone())
    };
    if key(&y) > key(&x) {
        x = y;
    }
    Some(x)
}

impl IsoClass {
    pub fn new(d: usize, s_a: Q, s_b: Q, s_c: Q) -> Self {
        Self { d, s_a, s_b, s_c }
    }

    pub fn dim(&self) -> usize {
        self.d + 1
    }

    /// Class label with canonical parameters when they lie in ℚ(i).
    pub fn label(&self) -> String {
        match self.canonical_params() {
            Some(p) => p.to_string(),
            None => format!("R_{}[sA={}, sB={}, sC={}]", self.d, self.s_a, self.s_b, self.s_c),
        }
    }

    pub fn canonical_params(&self) -> Option<RdParams> {
        Some(RdParams::new(
            canonical_parameter(&self.s_a)?,
            canonical_parameter(&self.s_b)?,
            canonical_parameter(&self.s_c)?,
            self.d,
        ))
    }

    /// Reads the class off the traces of `A, B, C`.
    pub fn from_traces(r: &RacahRep, d: usize) -> Self {
        let n = Q::int(d as i64 + 1);
        let inv = n.inv().expect("positive dimension");
        let shift = Q::frac((d * (d + 2)) as i64, 12);
        let s = |m: &ExactMatrix| &(&m.trace() * &inv) - &shift;
        Self::new(d, s(r.a()), s(r.b()), s(r.c()))
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Irreducibility by saturation: the generated algebra is all of `End`.
///
/// The closure mod a prime bounds the exact dimension from below, so reaching
/// `n²` there settles the question; otherwise the exact closure decides.
pub fn burnside_irreducible(r: &RacahRep) -> bool {
    let n = r.dim();
    let gens: Vec<ExactMatrix> = [r.a(), r.b(), r.c()].into_iter().cloned().collect();
    closure_dim_mod_p(&gens) == Some(n * n) || algebra_closure(&gens).dim == n * n
}

/// `B` diagonal with distinct entries and `A` irreducible tridiagonal.
///
/// Then every invariant subspace is spanned by basis vectors, and `A` links
/// each basis vector to its neighbours, so the module is irreducible.
pub fn tridiagonal_certificate(r: &RacahRep) -> bool {
    let (a, b) = (r.a(), r.b());
    let n = r.dim();
    if !b.is_diagonal() {
        return false;
    }
    let distinct = (0..n).all(|i| (0..i).all(|j| b[(i, i)] != b[(j, j)]));
    let tridiagonal = (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || a[(i, j)].is_zero()));
    let linked = (1..n).all(|i| !a[(i, i - 1)].is_zero() && !a[(i - 1, i)].is_zero());
    distinct && tridiagonal && linked
}

/// Class of an irreducible representation of dimension `d + 1`, read off
/// its traces once irreducibility is certified.
pub fn iso_class(r: &RacahRep, d: usize) -> Result<IsoClass> {
    if r.dim() != d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "representation has dimension {}, expected {}",
            r.dim(),
            d + 1
        )));
    }
    if !tridiagonal_certificate(r) && !burnside_irreducible(r) {
        return Err(Error::NotIrreducible(format!(
            "generated algebra is smaller than End(C^{})",
            d + 1
        )));
    }
    Ok(IsoClass::from_traces(r, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_pass;
    use crate::exact_linalg::minimal_polynomial;
    use crate::gaussian::q;

    fn quarter() -> RdParams {
        RdParams::new(q(-1, 4), q(-1, 4), q(-1, 4), 1)
    }

    #[test]
    fn quarter_module_values() {
        let p = quarter();
        assert_eq!((p.theta(0), p.theta(1)), (q(5, 16), q(-3, 16)));
        assert_eq!(p.phi(1), q(-3, 16));
        assert_eq!(p.central_scalars()[3], q(3, 16));
        let r = construct(&p);
        let c = ExactMatrix::from_rows(vec![vec![q(-7, 16), q(3, 16)], vec![q(-1, 1), q(9, 16)]]);
        assert_eq!(r.c(), &c);
        assert!(all_pass(&r.verify_presentation()));
        assert_eq!(r.a().trace(), q(1, 8));
        let cls = iso_class(&r, 1).unwrap();
        assert_eq!((cls.s_a.clone(), cls.s_b.clone()), (q(-3, 16), q(-3, 16)));
        assert_eq!(cls.label(), "R_1(-1/4, -1/4, -1/4)");
    }

    #[test]
    fn one_dimensional() {
        let p = RdParams::new(q(2, 3), q(-5, 7), Q::I, 0);
        let r = construct(&p);
        assert_eq!(r.a(), &ExactMatrix::scalar(1, s_value(&p.a)));
        assert_eq!(r.b(), &ExactMatrix::scalar(1, s_value(&p.b)));
        assert!(r.delta().is_zero());
        assert!(p.is_irreducible());
        assert_eq!(p.leonard_criterion(), Ok(true));
    }

    #[test]
    fn trace_formula_example() {
        let p = RdParams::new(q(1, 1), q(1, 1), q(1, 1), 2);
        assert_eq!(construct(&p).a().trace(), q(8, 1));
        assert_eq!(p.traces()[0], q(8, 1));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(quarter().is_irreducible());
        let red = RdParams::new(Q::ZERO, Q::ZERO, q(1, 2), 1);
        let w = red.irreducibility_witness().unwrap();
        assert_eq!(w.form, "a+b-c");
        assert!(!burnside_irreducible(&construct(&red)));
        assert!(matches!(red.leonard_criterion(), Err(Error::NotIrreducible(_))));
    }

    #[test]
    fn repeated_theta_gives_nonderogatory_square() {
        let p = RdParams::new(q(-1, 2), q(1, 1), q(1, 1), 2);
        assert!(p.is_irreducible());
        let [ma, _, _] = p.min_polys().unwrap();
        // θ = (3/4, −1/4, 3/4); A is nonderogatory so the repeat survives
        assert_eq!(ma, Poly::from_roots(&[q(3, 4), q(3, 4), q(-1, 4)]));
        assert_eq!(minimal_polynomial(construct(&p).a()), ma);
        assert_eq!(p.leonard_criterion(), Ok(false));
        assert_eq!(p.diagonalizable_flags(), [false, true, true]);
    }

    #[test]
    fn canonical_parameters() {
        assert_eq!(canonical_parameter(&q(-1, 4)), Some(q(-1, 2)));
        assert_eq!(canonical_parameter(&Q::ZERO), Some(Q::ZERO));
        assert_eq!(canonical_parameter(&q(2, 1)), Some(q(1, 1)));
        assert_eq!(canonical_parameter(&q(1, 1)), None);
        for a in [q(-3, 2), q(5, 4), q(-7, 3)] {
            let b = &(-&a) - &Q::ONE;
            assert_eq!(canonical_parameter(&s_value(&a)), canonical_parameter(&s_value(&b)));
        }
    }
}
