//! The hypercube module `ℂ^X`, its graph operators and the halved cube.
//!
//! Vertices are subsets of `{1..D}` encoded as bitmasks (element `k` is bit
//! `k − 1`); vertex `x` sits at index `x`, so the basis is in binary-counter
//! order.

use serde::Serialize;

use crate::check::IdentityCheck;
use crate::error::{Error, Result};
use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;
use crate::racah_ops::RacahRep;
use crate::sl2_reps::{even_pullback, sharp_pullback, Sl2Rep};

/// Largest `D` built with dense matrices (`2^D × 2^D` scalars each).
pub const MAX_DENSE_D: usize = 10;

/// The vertex set `X` and the first two distance relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypercubeSpace {
    pub d: usize,
    /// Ordered pairs `(x, y)` with `|x △ y| = 1`.
    pub r1: Vec<(usize, usize)>,
    /// Ordered pairs `(x, y)` with `|x △ y| = 2`.
    pub r2: Vec<(usize, usize)>,
}

impl HypercubeSpace {
    pub fn new(d: usize) -> Result<Self> {
        check_d(d)?;
        let size = 1usize << d;
        let mut r1 = Vec::new();
        let mut r2 = Vec::new();
        for x in 0..size {
            for y in 0..size {
                match (x ^ y).count_ones() {
                    1 => r1.push((x, y)),
                    2 => r2.push((x, y)),
                    _ => {}
                }
            }
        }
        Ok(Self { d, r1, r2 })
    }

    pub fn size(&self) -> usize {
        1 << self.d
    }

    /// `|x|`.
    pub fn weight(x: usize) -> usize {
        x.count_ones() as usize
    }

    /// Set notation, e.g. `{1,3}`.
    pub fn label(x: usize) -> String {
        let elems: Vec<String> = (0..usize::BITS as usize)
            .filter(|k| x >> k & 1 == 1)
            .map(|k| (k + 1).to_string())
            .collect();
        format!("{{{}}}", elems.join(","))
    }

    /// Sum over the pairs of `rel` with `keep(|x|, |y|)`, scaled by `c`.
    fn relation_operator(&self, rel: &[(usize, usize)], c: i64, keep: impl Fn(usize, usize) -> bool) -> ExactMatrix {
        let n = self.size();
        let mut m = ExactMatrix::zeros(n, n);
        for &(x, y) in rel {
            if keep(Self::weight(x), Self::weight(y)) {
                m[(y, x)] = Q::int(c);
            }
        }
        m
    }

    fn diagonal(&self, f: impl Fn(i64) -> Q) -> ExactMatrix {
        ExactMatrix::diag((0..self.size()).map(|x| f(Self::weight(x) as i64)))
    }
}

fn check_d(d: usize) -> Result<()> {
    if !(2..=MAX_DENSE_D).contains(&d) {
        return Err(Error::Config(format!(
            "hypercube dimension D = {d} outside 2..={MAX_DENSE_D}"
        )));
    }
    Ok(())
}

/// `A2J`: same-level distance-2 neighbours; `A2Jbar`: other-level ones;
/// `A2star`: `((D − 2|x|)² − D)/2` on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphOperators {
    pub a2j: ExactMatrix,
    pub a2jbar: ExactMatrix,
    pub a2star: ExactMatrix,
}

impl GraphOperators {
    pub fn generators(&self) -> [&ExactMatrix; 3] {
        [&self.a2j, &self.a2jbar, &self.a2star]
    }
}

/// `ℂ^X` as a `U(sl₂)`-module together with the graph operators.
#[derive(Clone, Debug)]
pub struct Hypercube {
    pub space: HypercubeSpace,
    pub rep: Sl2Rep,
    pub ops: GraphOperators,
}

pub fn build_hypercube(d: usize) -> Result<Hypercube> {
    let space = HypercubeSpace::new(d)?;
    let di = d as i64;
    let e = space.relation_operator(&space.r1, 1, |wx, wy| wy < wx);
    let f = space.relation_operator(&space.r1, 1, |wx, wy| wy > wx);
    let h = space.diagonal(|w| Q::int(di - 2 * w));
    let labels = (0..space.size()).map(HypercubeSpace::label).collect();
    let rep = Sl2Rep::new(e, f, h, labels)?;
    let ops = GraphOperators {
        a2j: space.relation_operator(&space.r2, 1, |wx, wy| wx == wy),
        a2jbar: space.relation_operator(&space.r2, 1, |wx, wy| wx != wy),
        a2star: space.diagonal(|w| Q::frac((di - 2 * w).pow(2) - di, 2)),
    };
    Ok(Hypercube { space, rep, ops })
}

impl Hypercube {
    pub fn d(&self) -> usize {
        self.space.d
    }

    /// `E², F², H, Λ` written directly from the relations:
    /// `E² = 2·(R₂ below)`, `F² = 2·(R₂ above)`,
    /// `Λ = D + (D − 2|x|)²/2 + 2·(R₂ same level)`.
    pub fn even_generators(&self) -> [ExactMatrix; 4] {
        let s = &self.space;
        let di = s.d as i64;
        let e2 = s.relation_operator(&s.r2, 2, |wx, wy| wy < wx);
        let f2 = s.relation_operator(&s.r2, 2, |wx, wy| wy > wx);
        let diag = s.diagonal(|w| &Q::int(di) + &Q::frac((di - 2 * w).pow(2), 2));
        let lambda = &diag + &s.relation_operator(&s.r2, 2, |wx, wy| wx == wy);
        [e2, f2, self.rep.h().clone(), lambda]
    }

    /// The pullback `ℜ`-module built from the relation operators.
    pub fn racah_rep(&self) -> RacahRep {
        let [e2, f2, h, lambda] = self.even_generators();
        even_pullback(&e2, &f2, &h, &lambda)
    }

    /// `D/16 − 1/4 + (A2J ± A2Jbar)/8` and `D/16 − 1/4 + A2star/8`.
    pub fn graph_forms(&self) -> [ExactMatrix; 3] {
        let shift = &Q::frac(self.d() as i64, 16) - &Q::frac(1, 4);
        let eighth = Q::frac(1, 8);
        let o = &self.ops;
        let form = |m: ExactMatrix| m.scale(&eighth).add_scalar(&shift);
        [
            form(&o.a2j + &o.a2jbar),
            form(o.a2star.clone()),
            form(&o.a2j - &o.a2jbar),
        ]
    }
}

/// Every structural identity of `ℂ^X` at dimension `d`.
pub fn verify_hypercube(d: usize) -> Result<Vec<IdentityCheck>> {
    let cube = build_hypercube(d)?;
    let rep = &cube.rep;
    let ops = &cube.ops;
    let space = &cube.space;
    let mut checks = rep.relation_checks();

    let [e2, f2, _, lambda] = cube.even_generators();
    checks.push(IdentityCheck::from_residual(
        "E^2 - 2(R2 below)",
        &(&(rep.e() * rep.e()) - &e2),
    ));
    checks.push(IdentityCheck::from_residual(
        "F^2 - 2(R2 above)",
        &(&(rep.f() * rep.f()) - &f2),
    ));
    checks.push(IdentityCheck::from_residual(
        "Lambda - relation form",
        &(&rep.casimir() - &lambda),
    ));

    let distance2 = space.relation_operator(&space.r2, 1, |_, _| true);
    checks.push(IdentityCheck::from_residual(
        "A2J + A2Jbar - A2",
        &(&(&ops.a2j + &ops.a2jbar) - &distance2),
    ));
    let di = d as i64;
    let star = ExactMatrix::diag((0..space.size()).map(|x| {
        let s = di - 2 * HypercubeSpace::weight(x) as i64;
        Q::frac(s * s - di, 2)
    }));
    checks.push(IdentityCheck::from_residual(
        "A2star - diagonal form",
        &(&ops.a2star - &star),
    ));
    checks.push(IdentityCheck::flag(
        "A2J blocks are Johnson graphs",
        johnson_blocks(&ops.a2j, d),
    ));

    let relations = cube.racah_rep();
    let forms = cube.graph_forms();
    for (name, (got, want)) in ["A", "B", "C"]
        .iter()
        .zip(relations.generators().into_iter().zip(&forms))
    {
        checks.push(IdentityCheck::from_residual(
            format!("{name} - graph form"),
            &(got - want),
        ));
    }
    let b_diag = ExactMatrix::diag((0..space.size()).map(|x| {
        let s = di - 2 * HypercubeSpace::weight(x) as i64;
        &Q::frac(s * s, 16) - &Q::frac(1, 4)
    }));
    checks.push(IdentityCheck::from_residual(
        "B - diagonal form",
        &(relations.b() - &b_diag),
    ));
    let via_sharp = sharp_pullback(rep);
    for (name, (x, y)) in ["A", "B", "C", "Delta"]
        .iter()
        .zip(via_sharp.generators().into_iter().zip(relations.generators()))
    {
        checks.push(IdentityCheck::from_residual(
            format!("{name}: sharp route - relation route"),
            &(x - y),
        ));
    }
    checks.extend(relations.verify_presentation());
    Ok(checks)
}

/// `A2J` preserves levels, is symmetric 0/1, and has degree `k(D − k)` on level `k`.
fn johnson_blocks(a2j: &ExactMatrix, d: usize) -> bool {
    let n = a2j.rows();
    (0..n).all(|x| {
        let wx = HypercubeSpace::weight(x);
        let mut degree = 0;
        for y in 0..n {
            let v = &a2j[(y, x)];
            if v.is_zero() {
                continue;
            }
            if !v.is_one() || a2j[(x, y)] != *v || HypercubeSpace::weight(y) != wx || (x ^ y).count_ones() != 2 {
                return false;
            }
            degree += 1;
        }
        degree == wx * (d - wx)
    })
}

/// The even-level vertices `X_e` with the generators of `T_e` and `R_e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalvedCube {
    pub d: usize,
    /// Ambient indices of `X_e`, increasing.
    pub vertices: Vec<usize>,
    /// `E², F², H, Λ` restricted to `ℂ^{X_e}`.
    pub te_gens: [ExactMatrix; 4],
    /// `A, B, C, Δ` restricted to `ℂ^{X_e}`.
    pub re_gens: [ExactMatrix; 4],
}

pub fn halved_cube(d: usize) -> Result<HalvedCube> {
    let cube = build_hypercube(d)?;
    let vertices: Vec<usize> = (0..cube.space.size()).filter(|&x| x.count_ones() % 2 == 0).collect();
    let restrict = |m: &ExactMatrix| -> Result<ExactMatrix> {
        let leaks = vertices
            .iter()
            .any(|&x| (0..m.rows()).any(|y| y.count_ones() % 2 == 1 && !m[(y, x)].is_zero()));
        if leaks {
            return Err(Error::NotInvariant("C^{X_e}".into()));
        }
        Ok(m.select(&vertices))
    };
    let even = cube.even_generators();
    let te_gens = [
        restrict(&even[0])?,
        restrict(&even[1])?,
        restrict(&even[2])?,
        restrict(&even[3])?,
    ];
    let r = cube.racah_rep();
    let re_gens = [
        restrict(r.a())?,
        restrict(r.b())?,
        restrict(r.c())?,
        restrict(r.delta())?,
    ];
    Ok(HalvedCube {
        d,
        vertices,
        te_gens,
        re_gens,
    })
}
