//! Racah-algebra expressions evaluated in any concrete carrier: symbolic
//! elements of U(sl₂) or operator matrices.

use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;
use crate::usl2_pbw::PBWElement;

/// A unital associative algebra over ℚ(i), enough to evaluate words.
pub trait Carrier: Clone {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scaled(&self, c: &Q) -> Self;
    /// `self + c·1`.
    fn shifted(&self, c: &Q) -> Self;
    fn vanishes(&self) -> bool;
    /// Size of the residual, for reports: nonzero terms or entries.
    fn support_size(&self) -> usize;

    fn bracket(&self, o: &Self) -> Self {
        self.times(o).minus(&o.times(self))
    }
}

impl Carrier for PBWElement {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
    fn shifted(&self, c: &Q) -> Self {
        self.add_scalar(c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn support_size(&self) -> usize {
        self.term_count()
    }
}

impl Carrier for ExactMatrix {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
    fn shifted(&self, c: &Q) -> Self {
        self.add_scalar(c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn support_size(&self) -> usize {
        self.nnz()
    }
}

/// Images of `A, B, C, Δ` in some carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub delta: T,
}

/// The four distinguished central elements.
#[derive(Clone, Debug)]
pub struct Centrals<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub delta: T,
}

/// The three symmetric Casimir elements.
#[derive(Clone, Debug)]
pub struct Casimirs<T> {
    pub omega_a: T,
    pub omega_b: T,
    pub omega_c: T,
}

fn half() -> Q {
    Q::frac(1, 2)
}

impl<T: Carrier> Quadruple<T> {
    pub fn centrals(&self) -> Centrals<T> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.delta);
        Centrals {
            alpha: a.bracket(d).plus(&a.times(c)).minus(&b.times(a)),
            beta: b.bracket(d).plus(&b.times(a)).minus(&c.times(b)),
            gamma: c.bracket(d).plus(&c.times(b)).minus(&a.times(c)),
            delta: a.plus(b).plus(c),
        }
    }

    pub fn casimirs(&self) -> Casimirs<T> {
        self.casimirs_with(&self.centrals())
    }

    pub fn casimirs_with(&self, z: &Centrals<T>) -> Casimirs<T> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.delta);
        let d2 = d.times(d);
        // Δ² + (XYZ + ZYX')/2 + Y² + ... with the cyclic pattern below
        let sym = |x: &T, y: &T, z_: &T| x.times(y).times(z_).plus(&z_.times(y).times(x)).scaled(&half());
        Casimirs {
            omega_a: d2
                .plus(&sym(b, a, c))
                .plus(&a.times(a))
                .plus(&b.times(&z.gamma))
                .minus(&c.times(&z.beta))
                .minus(&a.times(&z.delta)),
            omega_b: d2
                .plus(&sym(c, b, a))
                .plus(&b.times(b))
                .plus(&c.times(&z.alpha))
                .minus(&a.times(&z.gamma))
                .minus(&b.times(&z.delta)),
            omega_c: d2
                .plus(&sym(a, c, b))
                .plus(&c.times(c))
                .plus(&a.times(&z.beta))
                .minus(&b.times(&z.alpha))
                .minus(&c.times(&z.delta)),
        }
    }

    /// Residuals of the commutator relations `[A,B] = [B,C] = [C,A] = 2Δ`.
    pub fn commutator_residuals(&self) -> [(&'static str, T); 3] {
        let two_d = self.delta.scaled(&Q::int(2));
        [
            ("[A,B] - 2Delta", self.a.bracket(&self.b).minus(&two_d)),
            ("[B,C] - 2Delta", self.b.bracket(&self.c).minus(&two_d)),
            ("[C,A] - 2Delta", self.c.bracket(&self.a).minus(&two_d)),
        ]
    }

    /// Residuals of the six cubic relations satisfied by `A, B, C` together
    /// with the central elements.
    pub fn cubic_residuals(&self, z: &Centrals<T>) -> [(&'static str, T); 6] {
        let two = Q::int(2);
        // X²Y − 2XYX + YX² − 2XY − 2YX − (2X² − 2Xδ ± 2κ)
        let rel = |x: &T, y: &T, kappa: &T, sign: i64| {
            let x2 = x.times(x);
            let lhs = x2
                .times(y)
                .minus(&x.times(y).times(x).scaled(&two))
                .plus(&y.times(&x2))
                .minus(&x.times(y).scaled(&two))
                .minus(&y.times(x).scaled(&two));
            let rhs = x2
                .scaled(&two)
                .minus(&x.times(&z.delta).scaled(&two))
                .plus(&kappa.scaled(&Q::int(2 * sign)));
            lhs.minus(&rhs)
        };
        let (a, b, c) = (&self.a, &self.b, &self.c);
        [
            ("A^2B-2ABA+BA^2-2AB-2BA = 2A^2-2A delta+2 alpha", rel(a, b, &z.alpha, 1)),
            ("B^2C-2BCB+CB^2-2BC-2CB = 2B^2-2B delta+2 beta", rel(b, c, &z.beta, 1)),
            ("C^2A-2CAC+AC^2-2CA-2AC = 2C^2-2C delta+2 gamma", rel(c, a, &z.gamma, 1)),
            (
                "A^2C-2ACA+CA^2-2AC-2CA = 2A^2-2A delta-2 alpha",
                rel(a, c, &z.alpha, -1),
            ),
            ("B^2A-2BAB+AB^2-2BA-2AB = 2B^2-2B delta-2 beta", rel(b, a, &z.beta, -1)),
            (
                "C^2B-2CBC+BC^2-2CB-2BC = 2C^2-2C delta-2 gamma",
                rel(c, b, &z.gamma, -1),
            ),
        ]
    }
}
