use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::exact_linalg::echelon::Echelon;
use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;

/// Univariate polynomial over ℚ(i), coefficients stored low degree first
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Q::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Q::ZERO, Q::ONE])
    }

    /// `x - root`.
    pub fn linear(root: &Q) -> Self {
        Self::new(vec![-root, Q::ONE])
    }

    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Q>) -> Self {
        roots
            .into_iter()
            .fold(Self::constant(Q::ONE), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::ZERO, |acc, c| &(&acc * x) + c)
    }

    pub fn eval_matrix(&self, m: &ExactMatrix) -> ExactMatrix {
        let n = m.rows();
        self.coeffs
            .iter()
            .rev()
            .fold(ExactMatrix::zeros(n, n), |acc, c| (&acc * m).add_scalar(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Q::int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Q::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Multiplicity of `root` (0 if not a root).
    pub fn multiplicity(&self, root: &Q) -> usize {
        let lin = Poly::linear(root);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Coefficients as strings, low degree first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or(Q::ZERO);
                    let b = rhs.coeffs.get(k).cloned().unwrap_or(Q::ZERO);
                    a + b
                })
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or(Q::ZERO);
                    let b = rhs.coeffs.get(k).cloned().unwrap_or(Q::ZERO);
                    a - b
                })
                .collect(),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_real() { c.to_string() } else { format!("({c})") };
            terms.push(match k {
                0 => coef,
                1 if c.is_one() => "x".to_string(),
                1 => format!("{coef}*x"),
                _ if c.is_one() => format!("x^{k}"),
                _ => format!("{coef}*x^{k}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monic least-degree annihilator, from the first linear dependence among
/// `I, M, M², …` (flattened).
pub fn minimal_polynomial(m: &ExactMatrix) -> Poly {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Poly::constant(Q::ONE);
    }
    // rows are [vec(M^k) | combination tag]; a row reducing to zero in the
    // vec part carries the relation in its tag part
    let width = n * n;
    let mut ech = Echelon::new(width + n + 1);
    let mut power = ExactMatrix::identity(n);
    for k in 0..=n {
        let mut row = power.as_flat().to_vec();
        row.resize(width + n + 1, Q::ZERO);
        row[width + k] = Q::ONE;
        ech.reduce_dense(&mut row);
        if row[..width].iter().all(Q::is_zero) {
            return Poly::new(row[width..width + k + 1].to_vec()).monic();
        }
        ech.insert(row);
        power = &power * m;
    }
    unreachable!("Cayley–Hamilton bounds the degree by n")
}
