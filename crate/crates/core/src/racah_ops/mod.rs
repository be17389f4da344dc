//! Operator-level Racah algebra: presentations, central elements and
//! Casimirs of concrete quadruples `(A, B, C, Δ)`.

use crate::algebra::{Casimirs, Quadruple};
use crate::check::IdentityCheck;
use crate::error::{Error, Result};
use crate::exact_linalg::text::{read_matrix_tokens, write_matrix};
use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;
use crate::usl2_pbw::{d3_apply_racah, RacahGen, D3};

/// Four same-size operators meant to satisfy the Racah relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RacahRep {
    quad: Quadruple<ExactMatrix>,
}

/// Matrices of `α, β, γ, δ`, with scalars extracted where they are scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralValues {
    pub alpha: ExactMatrix,
    pub beta: ExactMatrix,
    pub gamma: ExactMatrix,
    pub delta: ExactMatrix,
}

impl CentralValues {
    /// `(α, β, γ, δ)` as scalars, if all four are scalar.
    pub fn scalars(&self) -> Option<[Q; 4]> {
        Some([
            self.alpha.as_scalar()?,
            self.beta.as_scalar()?,
            self.gamma.as_scalar()?,
            self.delta.as_scalar()?,
        ])
    }
}

impl RacahRep {
    pub fn new(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix, delta: ExactMatrix) -> Result<Self> {
        let n = a.rows();
        for (name, m) in [("A", &a), ("B", &b), ("C", &c), ("Delta", &delta)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self {
            quad: Quadruple { a, b, c, delta },
        })
    }

    pub fn dim(&self) -> usize {
        self.quad.a.rows()
    }

    pub fn a(&self) -> &ExactMatrix {
        &self.quad.a
    }

    pub fn b(&self) -> &ExactMatrix {
        &self.quad.b
    }

    pub fn c(&self) -> &ExactMatrix {
        &self.quad.c
    }

    pub fn delta(&self) -> &ExactMatrix {
        &self.quad.delta
    }

    pub fn quadruple(&self) -> &Quadruple<ExactMatrix> {
        &self.quad
    }

    pub fn generators(&self) -> [&ExactMatrix; 4] {
        [&self.quad.a, &self.quad.b, &self.quad.c, &self.quad.delta]
    }

    /// Operator of a named element (central ones computed on demand).
    pub fn operator(&self, g: RacahGen) -> ExactMatrix {
        match g {
            RacahGen::A => self.quad.a.clone(),
            RacahGen::B => self.quad.b.clone(),
            RacahGen::C => self.quad.c.clone(),
            RacahGen::Delta => self.quad.delta.clone(),
            RacahGen::Alpha => self.central_values().alpha,
            RacahGen::Beta => self.central_values().beta,
            RacahGen::Gamma => self.central_values().gamma,
            RacahGen::SmallDelta => self.central_values().delta,
            RacahGen::OmegaA => self.casimirs().omega_a,
            RacahGen::OmegaB => self.casimirs().omega_b,
            RacahGen::OmegaC => self.casimirs().omega_c,
        }
    }

    /// Restriction to an invariant subspace with the given basis (columns).
    pub fn restrict(&self, basis: &[Vec<Q>]) -> Result<Self> {
        let act = |m: &ExactMatrix| -> Result<ExactMatrix> {
            let images: Vec<Vec<Q>> = basis.iter().map(|v| m.apply(v)).collect();
            let coords = crate::exact_linalg::solve_in_span(basis, &images)?;
            Ok(ExactMatrix::from_columns(&coords))
        };
        Self::new(
            act(&self.quad.a)?,
            act(&self.quad.b)?,
            act(&self.quad.c)?,
            act(&self.quad.delta)?,
        )
    }

    /// The module twisted by `g`: each `u` acts as `g(u)` did.
    pub fn twist(&self, g: D3) -> Self {
        let op = |u: RacahGen| {
            let (sign, v) = d3_apply_racah(g, u);
            let m = match v {
                RacahGen::A => &self.quad.a,
                RacahGen::B => &self.quad.b,
                RacahGen::C => &self.quad.c,
                RacahGen::Delta => &self.quad.delta,
                _ => unreachable!("generators map to generators"),
            };
            m.scale(&Q::int(sign))
        };
        Self {
            quad: Quadruple {
                a: op(RacahGen::A),
                b: op(RacahGen::B),
                c: op(RacahGen::C),
                delta: op(RacahGen::Delta),
            },
        }
    }

    pub fn central_values(&self) -> CentralValues {
        let z = self.quad.centrals();
        CentralValues {
            alpha: z.alpha,
            beta: z.beta,
            gamma: z.gamma,
            delta: z.delta,
        }
    }

    pub fn casimirs(&self) -> Casimirs<ExactMatrix> {
        self.quad.casimirs()
    }

    fn commutes_with_all(&self, name: &str, z: &ExactMatrix) -> Vec<IdentityCheck> {
        ["A", "B", "C", "Delta"]
            .iter()
            .zip(self.generators())
            .map(|(g, m)| IdentityCheck::from_residual(format!("[{name},{g}] = 0"), &z.commutator(m)))
            .collect()
    }

    /// Commutator relations and centrality of `α, β, γ, δ`.
    pub fn verify_presentation(&self) -> Vec<IdentityCheck> {
        let mut out: Vec<IdentityCheck> = self
            .quad
            .commutator_residuals()
            .iter()
            .map(|(name, r)| IdentityCheck::from_residual(*name, r))
            .collect();
        let z = self.central_values();
        for (name, m) in [
            ("alpha", &z.alpha),
            ("beta", &z.beta),
            ("gamma", &z.gamma),
            ("delta", &z.delta),
        ] {
            out.extend(self.commutes_with_all(name, m));
        }
        out
    }

    pub fn is_verified(&self) -> bool {
        self.verify_presentation().iter().all(|c| c.pass)
    }

    /// Centrality of the three Casimir operators.
    pub fn verify_casimirs(&self) -> Vec<IdentityCheck> {
        let w = self.casimirs();
        let mut out = Vec::new();
        for (name, m) in [
            ("Omega_A", &w.omega_a),
            ("Omega_B", &w.omega_b),
            ("Omega_C", &w.omega_c),
        ] {
            out.extend(self.commutes_with_all(name, m));
        }
        out
    }

    /// The six cubic relations involving `α, β, γ, δ`.
    pub fn verify_cubic_relations(&self) -> Vec<IdentityCheck> {
        let z = self.quad.centrals();
        self.quad
            .cubic_residuals(&z)
            .iter()
            .map(|(name, r)| IdentityCheck::from_residual(*name, r))
            .collect()
    }

    /// Text form: labeled exact-matrix blocks `A`, `B`, `C`, `Delta`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (label, m) in ["A", "B", "C", "Delta"].iter().zip(self.generators()) {
            s.push_str(label);
            s.push('\n');
            s.push_str(&write_matrix(m));
        }
        s
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let mut blocks: [Option<ExactMatrix>; 4] = Default::default();
        let labels = ["A", "B", "C", "Delta"];
        while let Some(label) = tokens.next() {
            let k = labels
                .iter()
                .position(|l| *l == label)
                .ok_or_else(|| Error::Parse(format!("unexpected block label `{label}`")))?;
            if blocks[k].is_some() {
                return Err(Error::Parse(format!("duplicate block `{label}`")));
            }
            blocks[k] = Some(read_matrix_tokens(&mut tokens)?);
        }
        let [a, b, c, d] = blocks;
        let missing = |l: &str| Error::Parse(format!("missing block `{l}`"));
        Self::new(
            a.ok_or_else(|| missing("A"))?,
            b.ok_or_else(|| missing("B"))?,
            c.ok_or_else(|| missing("C"))?,
            d.ok_or_else(|| missing("Delta"))?,
        )
    }
}
