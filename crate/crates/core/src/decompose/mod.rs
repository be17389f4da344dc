//! Decomposition engine: `U(sl₂)`-isotypic splitting, the explicit
//! `ℜ`-splittings of the even halves, and block profiles of the generated
//! operator algebras.
//!
//! The chain is structural: highest-weight vectors give copies of `L_n`, each
//! copy splits into its two even halves, and each half splits along the
//! mirror vectors `u_i ∓ u_{s−i}` from [`tables::half_table`]. Every piece is
//! certified by exact invariance, irreducibility and traces.

pub mod tables;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::check::IdentityCheck;
use crate::error::{Error, Result};
use crate::exact_linalg::{algebra_closure, eigen_split_auto, nullspace, ExactMatrix, Subspace};
use crate::gaussian::Q;
use crate::leonard;
use crate::racah_ops::RacahRep;
use crate::rd_modules::{iso_class, IsoClass, RdParams};
use crate::sl2_reps::{build_hypercube, build_ln, even_halves, halved_cube, sharp_pullback, EvenHalf, Sl2Rep};

pub use tables::Part;

const LABEL_NOTE: &str =
    "class labels use the parameter x with Re(x) >= -1/2 in each slot; (a, b, c) is determined up to x -> -1 - x";

/// One isomorphism class with its multiplicity and isotypic component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub label: String,
    pub class: Option<IsoClass>,
    pub dim: usize,
    pub multiplicity: usize,
    /// Sum of all copies of this class.
    pub witness: Subspace,
    /// Leonard triple verdict on one copy, when checked.
    pub leonard: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub ambient_dim: usize,
    /// Sorted by class key.
    pub summands: Vec<Summand>,
    /// `Σ multiplicity · dim = ambient_dim`.
    pub total_dim_ok: bool,
    /// The copies together span the ambient space.
    pub spans_ambient: bool,
    /// Every copy is invariant under the acting operators.
    pub invariant: bool,
    pub checks: Vec<IdentityCheck>,
    pub notes: Vec<String>,
}

impl DecompositionReport {
    /// All structural flags and checks pass.
    pub fn passes(&self) -> bool {
        self.total_dim_ok
            && self.spans_ambient
            && self.invariant
            && self.checks.iter().all(|c| c.pass)
            && self.summands.iter().all(|s| s.leonard != Some(false))
    }

    pub fn classes(&self) -> Vec<IsoClass> {
        self.summands.iter().filter_map(|s| s.class.clone()).collect()
    }
}

/// A copy of `L_n` inside a module: `basis[i]` is the standard `v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Copy {
    pub n: usize,
    pub basis: Vec<Vec<Q>>,
}

/// `H`-eigenspaces as `(weight, basis)`, heaviest first.
fn weight_spaces(rep: &Sl2Rep) -> Result<Vec<(i64, Vec<Vec<Q>>)>> {
    let h = rep.h();
    let dim = rep.dim();
    let as_weight = |w: &Q| -> Result<i64> {
        if w.is_real() && w.re.is_integer() {
            w.re.numer().try_into().map_err(|_| Error::NonDiagonalizableH)
        } else {
            Err(Error::DimensionMismatch(format!("non-integral weight {w}")))
        }
    };
    let mut spaces: BTreeMap<i64, Vec<Vec<Q>>> = BTreeMap::new();
    if h.is_diagonal() {
        for i in 0..dim {
            let mut v = vec![Q::ZERO; dim];
            v[i] = Q::ONE;
            spaces.entry(as_weight(&h[(i, i)])?).or_default().push(v);
        }
    } else {
        let split = eigen_split_auto(h, "H")?;
        if !split.diagonalizable {
            return Err(Error::NonDiagonalizableH);
        }
        for (w, s) in split.spaces {
            spaces.insert(as_weight(&w)?, s.basis().to_vec());
        }
    }
    Ok(spaces.into_iter().rev().collect())
}

/// One copy of `L_n` per highest-weight vector in `ker E ∩ V(n)`.
pub fn sl2_copies(rep: &Sl2Rep) -> Result<Vec<Sl2Copy>> {
    let mut copies = Vec::new();
    for (w, basis) in weight_spaces(rep)? {
        if w < 0 {
            continue;
        }
        let images: Vec<Vec<Q>> = basis.iter().map(|b| rep.e().apply(b)).collect();
        let m = ExactMatrix::from_columns(&images);
        for coeffs in nullspace(&m) {
            let mut v = vec![Q::ZERO; rep.dim()];
            for (c, b) in coeffs.iter().zip(&basis) {
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += &(c * y);
                    }
                }
            }
            let n = w as usize;
            let mut chain = vec![v];
            for i in 0..n {
                let inv = Q::int(i as i64 + 1).inv().expect("nonzero");
                let next: Vec<Q> = rep.f().apply(&chain[i]).iter().map(|x| x * &inv).collect();
                chain.push(next);
            }
            copies.push(Sl2Copy { n, basis: chain });
        }
    }
    Ok(copies)
}

/// `E v_i = (n−i+1) v_{i−1}`, `F v_i = (i+1) v_{i+1}`, `H v_i = (n−2i) v_i` on a copy.
fn is_standard_copy(rep: &Sl2Rep, copy: &Sl2Copy) -> bool {
    let n = copy.n;
    let zero = vec![Q::ZERO; rep.dim()];
    let scaled = |c: i64, v: &[Q]| -> Vec<Q> { v.iter().map(|x| x * &Q::int(c)).collect() };
    (0..=n).all(|i| {
        let v = &copy.basis[i];
        let e_want = if i == 0 {
            zero.clone()
        } else {
            scaled((n - i + 1) as i64, &copy.basis[i - 1])
        };
        let f_want = if i == n {
            zero.clone()
        } else {
            scaled(i as i64 + 1, &copy.basis[i + 1])
        };
        rep.e().apply(v) == e_want
            && rep.f().apply(v) == f_want
            && rep.h().apply(v) == scaled(n as i64 - 2 * i as i64, v)
    })
}

/// The `U(sl₂)`-isotypic decomposition, with multiplicities computed by
/// counting highest-weight vectors.
pub fn sl2_isotypic(rep: &Sl2Rep) -> Result<DecompositionReport> {
    let copies = sl2_copies(rep)?;
    let dim = rep.dim();
    let invariant = copies.iter().all(|c| is_standard_copy(rep, c));
    let mut by_n: BTreeMap<usize, Vec<&Sl2Copy>> = BTreeMap::new();
    for c in &copies {
        by_n.entry(c.n).or_default().push(c);
    }
    let summands: Vec<Summand> = by_n
        .iter()
        .rev()
        .map(|(&n, cs)| Summand {
            label: format!("L_{n}"),
            class: None,
            dim: n + 1,
            multiplicity: cs.len(),
            witness: Subspace::from_vectors(dim, cs.iter().flat_map(|c| c.basis.iter().cloned())),
            leonard: None,
        })
        .collect();
    Ok(finish(
        dim,
        summands,
        copies.iter().flat_map(|c| c.basis.iter().cloned()),
        invariant,
        Vec::new(),
    ))
}

fn finish(
    dim: usize,
    summands: Vec<Summand>,
    all_vectors: impl IntoIterator<Item = Vec<Q>>,
    invariant: bool,
    mut notes: Vec<String>,
) -> DecompositionReport {
    let total: usize = summands.iter().map(|s| s.dim * s.multiplicity).sum();
    let spans = Subspace::from_vectors(dim, all_vectors).dim() == dim;
    if summands.iter().any(|s| s.class.is_some()) {
        notes.push(LABEL_NOTE.to_string());
    }
    DecompositionReport {
        ambient_dim: dim,
        summands,
        total_dim_ok: total == dim,
        spans_ambient: spans,
        invariant,
        checks: Vec::new(),
        notes,
    }
}

/// A certified irreducible piece of an even half, in `u`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfPiece {
    pub part: Part,
    pub expected: RdParams,
    pub class: IsoClass,
    #[serde(skip)]
    pub coords: Vec<Vec<Q>>,
}

/// Splits an even half of `L_n` along its theorem table and certifies every
/// piece: invariant, irreducible, and of the tabulated class.
pub fn half_pieces(half: &EvenHalf) -> Result<Vec<HalfPiece>> {
    let r = half.racah_rep();
    let m = half.dim();
    let mut out = Vec::new();
    for (part, expected) in tables::half_table(half.n, half.parity) {
        let coords = part.vectors(m);
        let span = Subspace::from_vectors(m, coords.iter().cloned());
        for (name, op) in [("A", r.a()), ("B", r.b()), ("C", r.c())] {
            if !span.is_invariant_under(op) {
                return Err(Error::NotInvariant(format!(
                    "{name} on {part:?} of L_{}^({})",
                    half.n, half.parity
                )));
            }
        }
        let piece = r.restrict(&coords)?;
        let class = iso_class(&piece, coords.len() - 1)?;
        if class != expected.iso_class() {
            return Err(Error::ClassMismatch(format!(
                "L_{}^({}) {part:?}: traces give {class}, table gives {expected}",
                half.n, half.parity
            )));
        }
        out.push(HalfPiece {
            part,
            expected,
            class,
            coords,
        });
    }
    Ok(out)
}

/// The `ℜ`-decomposition of one even half as a report in `u`-coordinates.
pub fn split_even_half(half: &EvenHalf) -> Result<DecompositionReport> {
    let pieces = half_pieces(half)?;
    let m = half.dim();
    let r = half.racah_rep();
    let summands = pieces
        .iter()
        .map(|p| {
            Ok(Summand {
                label: p.class.label(),
                class: Some(p.class.clone()),
                dim: p.coords.len(),
                multiplicity: 1,
                witness: Subspace::from_vectors(m, p.coords.iter().cloned()),
                leonard: Some(leonard_on(&r, &p.coords, &p.expected)?.verdict),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let vectors: Vec<Vec<Q>> = pieces.iter().flat_map(|p| p.coords.iter().cloned()).collect();
    Ok(finish(m, summands, vectors, true, Vec::new()))
}

fn leonard_on(r: &RacahRep, basis: &[Vec<Q>], p: &RdParams) -> Result<leonard::LeonardReport> {
    let piece = r.restrict(basis)?;
    let hints = p.eigenvalue_hints();
    leonard::check(
        piece.a(),
        piece.b(),
        piece.c(),
        [Some(&hints[0]), Some(&hints[1]), Some(&hints[2])],
    )
}

/// Pieces of `L_n^(parity)` cached by `(n, parity)`.
type PieceCache = HashMap<(usize, u8), (Vec<usize>, Vec<HalfPiece>)>;

fn cached_pieces(cache: &mut PieceCache, n: usize, parity: u8) -> Result<&(Vec<usize>, Vec<HalfPiece>)> {
    if let std::collections::hash_map::Entry::Vacant(e) = cache.entry((n, parity)) {
        let halves = even_halves(&build_ln(n))?;
        let half = if parity == 0 { Some(halves.zero) } else { halves.one };
        let half = half.ok_or_else(|| Error::DimensionMismatch(format!("L_{n} has no half {parity}")))?;
        let pieces = half_pieces(&half)?;
        e.insert((half.indices, pieces));
    }
    Ok(&cache[&(n, parity)])
}

/// Certified pieces grouped by class: table parameters and one basis per copy.
type ClassGroups = BTreeMap<IsoClass, (RdParams, Vec<Vec<Vec<Q>>>)>;

/// Runs the chain copy → half → piece over the halves accepted by `keep`,
/// mapping piece vectors into ambient coordinates (optionally restricted to
/// the positions `project`).
fn chain(
    copies: &[Sl2Copy],
    keep: impl Fn(&Sl2Copy, &[usize]) -> bool,
    project: Option<&[usize]>,
) -> Result<(ClassGroups, BTreeSet<(usize, u8)>)> {
    let mut cache = PieceCache::new();
    let mut groups = ClassGroups::new();
    let mut halves_seen = BTreeSet::new();
    for copy in copies {
        let full = copy.basis.first().map_or(0, Vec::len);
        for parity in 0..=u8::from(copy.n > 0) {
            let (indices, pieces) = cached_pieces(&mut cache, copy.n, parity)?;
            if !keep(copy, indices) {
                continue;
            }
            halves_seen.insert((copy.n, parity));
            for p in pieces {
                // u_j of the half is v_{indices[j]} of the copy
                let ambient: Vec<Vec<Q>> = p
                    .coords
                    .iter()
                    .map(|c| {
                        let mut v = vec![Q::ZERO; full];
                        for (cj, &idx) in c.iter().zip(indices) {
                            if !cj.is_zero() {
                                for (x, y) in v.iter_mut().zip(&copy.basis[idx]) {
                                    *x += &(cj * y);
                                }
                            }
                        }
                        match project {
                            Some(pos) => pos.iter().map(|&i| v[i].clone()).collect(),
                            None => v,
                        }
                    })
                    .collect();
                groups
                    .entry(p.class.clone())
                    .or_insert_with(|| (p.expected.clone(), Vec::new()))
                    .1
                    .push(ambient);
            }
        }
    }
    Ok((groups, halves_seen))
}

fn class_report(
    r: &RacahRep,
    groups: &ClassGroups,
    halves_seen: &BTreeSet<(usize, u8)>,
) -> Result<DecompositionReport> {
    let dim = r.dim();
    let invariant = groups.values().flat_map(|(_, bs)| bs).all(|b| {
        let s = Subspace::from_vectors(dim, b.iter().cloned());
        [r.a(), r.b(), r.c()].into_iter().all(|op| s.is_invariant_under(op))
    });
    let mut summands = Vec::new();
    for (class, (params, bases)) in groups {
        let report = leonard_on(r, &bases[0], params)?;
        summands.push(Summand {
            label: class.label(),
            class: Some(class.clone()),
            dim: class.dim(),
            multiplicity: bases.len(),
            witness: Subspace::from_vectors(dim, bases.iter().flatten().cloned()),
            leonard: Some(report.verdict),
        });
    }
    let halves: Vec<String> = halves_seen.iter().map(|(n, p)| format!("L_{n}^({p})")).collect();
    let notes = vec![
        format!("even halves: {}", halves.join(", ")),
        "multiplicities are computed by counting highest-weight vectors".to_string(),
    ];
    let vectors: Vec<Vec<Q>> = groups
        .values()
        .flat_map(|(_, bs)| bs.iter().flatten().cloned())
        .collect();
    Ok(finish(dim, summands, vectors, invariant, notes))
}

/// The `ℜ`-decomposition of the pullback `r` of `rep`, following the
/// structural chain. Each class is checked for the Leonard property on one copy.
pub fn re_decompose(rep: &Sl2Rep, r: &RacahRep) -> Result<DecompositionReport> {
    if r.dim() != rep.dim() {
        return Err(Error::DimensionMismatch(
            "pullback and module differ in dimension".into(),
        ));
    }
    let copies = sl2_copies(rep)?;
    let (groups, halves_seen) = chain(&copies, |_, _| true, None)?;
    class_report(r, &groups, &halves_seen)
}

/// `ℂ^X` at dimension `d`, with the class list and the even-half list
/// checked against their closed forms.
pub fn decompose_hypercube(d: usize) -> Result<DecompositionReport> {
    let cube = build_hypercube(d)?;
    let mut report = re_decompose_pullback(&cube.rep)?;
    let want: BTreeSet<IsoClass> = tables::hypercube_classes(d).iter().map(RdParams::iso_class).collect();
    let got: BTreeSet<IsoClass> = report.classes().into_iter().collect();
    report.checks.push(IdentityCheck::flag(
        "class list matches the hypercube table",
        got == want,
    ));
    let halves = even_half_labels(&cube.rep)?;
    report.checks.push(IdentityCheck::flag(
        "even halves match the hypercube listing",
        halves == tables::hypercube_even_halves(d),
    ));
    Ok(report)
}

/// `L_n` pulled back along `♯`; for even `n` the classes must be pairwise distinct.
pub fn decompose_ln(n: usize) -> Result<DecompositionReport> {
    let mut report = re_decompose_pullback(&build_ln(n))?;
    let distinct = n % 2 == 1 || report.summands.iter().all(|s| s.multiplicity == 1);
    report
        .checks
        .push(IdentityCheck::flag("summands are mutually non-isomorphic", distinct));
    Ok(report)
}

/// `ℂ^{X_e}` as an `ℜ`-module: the halves of the copies in `ℂ^X` that live on
/// even-level vertices.
pub fn decompose_halved(d: usize) -> Result<DecompositionReport> {
    let cube = build_hypercube(d)?;
    let halved = halved_cube(d)?;
    let copies = sl2_copies(&cube.rep)?;
    let on_even = |copy: &Sl2Copy, indices: &[usize]| {
        copy.basis[indices[0]]
            .iter()
            .enumerate()
            .all(|(x, c)| c.is_zero() || x.count_ones() % 2 == 0)
    };
    let (groups, halves_seen) = chain(&copies, on_even, Some(&halved.vertices))?;
    let [a, b, c, delta] = halved.re_gens.clone();
    let r = RacahRep::new(a, b, c, delta)?;
    let mut report = class_report(&r, &groups, &halves_seen)?;
    let listed: BTreeSet<(usize, u8)> = tables::halved_cube_halves(d).into_iter().collect();
    let distinct_halves: BTreeSet<(usize, u8)> = halves_seen.iter().copied().collect();
    report.checks.push(IdentityCheck::flag(
        "even halves match the halved cube listing",
        distinct_halves == listed,
    ));
    Ok(report)
}

/// [`re_decompose`] on the `♯`-pullback of `rep`.
pub fn re_decompose_pullback(rep: &Sl2Rep) -> Result<DecompositionReport> {
    re_decompose(rep, &sharp_pullback(rep))
}

/// The `(n, parity)` even halves occurring in a module, from its copies of `L_n`.
pub fn even_half_labels(rep: &Sl2Rep) -> Result<Vec<(usize, u8)>> {
    let set: BTreeSet<(usize, u8)> = sl2_copies(rep)?
        .iter()
        .flat_map(|c| (0..=u8::from(c.n > 0)).map(move |p| (c.n, p)))
        .collect();
    Ok(set.into_iter().collect())
}

/// Wedderburn block sizes with multiplicities, and the algebra dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleProfile {
    /// `(block size k, number of blocks)`, increasing in `k`.
    pub blocks: Vec<(usize, usize)>,
    /// `Σ multiplicity · k²`.
    pub dim: usize,
    pub closure_dim: usize,
}

/// Block profile read off a decomposition (one block per class, of the
/// class dimension), cross-checked against the closure of `gens`.
pub fn semisimple_profile(gens: &[ExactMatrix], report: &DecompositionReport) -> Result<SemisimpleProfile> {
    let mut blocks: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &report.summands {
        *blocks.entry(s.dim).or_insert(0) += 1;
    }
    let dim = blocks.iter().map(|(k, m)| k * k * m).sum();
    let closure_dim = algebra_closure(gens).dim;
    if dim != closure_dim {
        return Err(Error::DimMismatch {
            profile: dim,
            closure: closure_dim,
        });
    }
    Ok(SemisimpleProfile {
        blocks: blocks.into_iter().collect(),
        dim,
        closure_dim,
    })
}

/// Dimensions of `T_e` and `R_e` on the halved cube.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeReComparison {
    #[serde(rename = "D")]
    pub d: usize,
    #[serde(rename = "dim_Te")]
    pub dim_te: usize,
    #[serde(rename = "dim_Re")]
    pub dim_re: usize,
    pub equal: bool,
    #[serde(rename = "D_parity")]
    pub d_parity: &'static str,
    /// `dim T_e` equals `Σ dim²` over the even halves listed for `ℂ^{X_e}`.
    pub te_classes_ok: bool,
    /// `dim R_e` equals `Σ dim²` over the distinct classes those halves split into.
    pub re_classes_ok: bool,
}

pub fn compare_te_re(d: usize) -> Result<TeReComparison> {
    let cube = halved_cube(d)?;
    let dim_te = algebra_closure(&cube.te_gens).dim;
    let dim_re = algebra_closure(&cube.re_gens[..3]).dim;
    let halves = tables::halved_cube_halves(d);
    let te_expected: usize = halves.iter().map(|&(n, p)| tables::half_dim(n, p).pow(2)).sum();
    let classes: BTreeSet<IsoClass> = halves
        .iter()
        .flat_map(|&(n, p)| tables::half_table(n, p))
        .map(|(_, params)| params.iso_class())
        .collect();
    let re_expected: usize = classes.iter().map(|c| c.dim().pow(2)).sum();
    Ok(TeReComparison {
        d,
        dim_te,
        dim_re,
        equal: dim_te == dim_re,
        d_parity: if d.is_multiple_of(2) { "even" } else { "odd" },
        te_classes_ok: dim_te == te_expected,
        re_classes_ok: dim_re == re_expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(r: &DecompositionReport) -> Vec<(String, usize)> {
        r.summands.iter().map(|s| (s.label.clone(), s.multiplicity)).collect()
    }

    #[test]
    fn isotypic_examples() {
        let d2 = build_hypercube(2).unwrap();
        let r = sl2_isotypic(&d2.rep).unwrap();
        assert_eq!(labels(&r), vec![("L_2".into(), 1), ("L_0".into(), 1)]);
        assert!(r.passes());
        let d3 = build_hypercube(3).unwrap();
        let r = sl2_isotypic(&d3.rep).unwrap();
        assert_eq!(labels(&r), vec![("L_3".into(), 1), ("L_1".into(), 2)]);
        assert!(r.passes());
        let r = sl2_isotypic(&build_ln(5)).unwrap();
        assert_eq!(labels(&r), vec![("L_5".into(), 1)]);
    }

    #[test]
    fn non_diagonal_h_is_handled() {
        // L_1 in the basis v0 + v1, v1
        let p = ExactMatrix::from_rows(vec![vec![Q::ONE, Q::ZERO], vec![Q::ONE, Q::ONE]]);
        let pinv = crate::exact_linalg::inverse(&p).unwrap();
        let l = build_ln(1);
        let conj = |m: &ExactMatrix| &(&pinv * m) * &p;
        let rep = Sl2Rep::new(conj(l.e()), conj(l.f()), conj(l.h()), l.labels().to_vec()).unwrap();
        let r = sl2_isotypic(&rep).unwrap();
        assert_eq!(labels(&r), vec![("L_1".into(), 1)]);
        assert!(r.passes());
    }

    #[test]
    fn half_splits() {
        let half = |n, p| {
            let h = even_halves(&build_ln(n)).unwrap();
            if p == 0 {
                h.zero
            } else {
                h.one.unwrap()
            }
        };
        let r = split_even_half(&half(3, 0)).unwrap();
        assert_eq!(labels(&r), vec![("R_1(-1/4, -1/4, -1/4)".into(), 1)]);
        let r = split_even_half(&half(2, 1)).unwrap();
        assert_eq!(labels(&r), vec![("R_0(0, -1/2, 0)".into(), 1)]);
        let r = split_even_half(&half(4, 0)).unwrap();
        assert_eq!(
            labels(&r),
            vec![("R_0(0, 1/2, 0)".into(), 1), ("R_1(0, 0, 0)".into(), 1)]
        );
        assert!(r.passes());
    }

    #[test]
    fn hypercube_d2_classes() {
        let cube = build_hypercube(2).unwrap();
        let r = re_decompose_pullback(&cube.rep).unwrap();
        assert!(r.passes());
        let mut got: Vec<String> = r.summands.iter().map(|s| s.label.clone()).collect();
        got.sort();
        let mut want = vec![
            "R_0(-1/2, -1/2, -1/2)",
            "R_0(-1/2, 0, 0)",
            "R_0(0, 0, -1/2)",
            "R_0(0, -1/2, 0)",
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn hypercube_d3_classes() {
        let cube = build_hypercube(3).unwrap();
        let r = re_decompose_pullback(&cube.rep).unwrap();
        assert!(r.passes());
        assert_eq!(
            labels(&r),
            vec![("R_0(-1/4, -1/4, -1/4)".into(), 4), ("R_1(-1/4, -1/4, -1/4)".into(), 2)]
        );
    }

    #[test]
    fn table_cross_checks() {
        for d in 2..=6 {
            let r = decompose_hypercube(d).unwrap();
            assert!(r.passes(), "D={d}: {:?}", r.checks);
            let h = decompose_halved(d).unwrap();
            assert!(h.passes(), "halved D={d}: {:?}", h.checks);
            assert_eq!(h.ambient_dim, 1 << (d - 1));
        }
        for n in 0..=6 {
            assert!(decompose_ln(n).unwrap().passes());
        }
    }

    #[test]
    fn profiles() {
        for (d, want) in [(2, 4), (4, 11), (5, 14)] {
            let cube = build_hypercube(d).unwrap();
            let r = re_decompose_pullback(&cube.rep).unwrap();
            let p = semisimple_profile(&cube.ops.generators().map(|m| m.clone()), &r).unwrap();
            assert_eq!(p.dim, want, "D={d}");
        }
    }

    #[test]
    fn profile_mismatch_is_reported() {
        let cube = build_hypercube(2).unwrap();
        let r = re_decompose_pullback(&cube.rep).unwrap();
        let err = semisimple_profile(std::slice::from_ref(&cube.ops.a2star), &r).unwrap_err();
        assert_eq!(err, Error::DimMismatch { profile: 4, closure: 2 });
    }

    #[test]
    fn te_re_small() {
        let c3 = compare_te_re(3).unwrap();
        assert!(c3.equal && c3.te_classes_ok && c3.re_classes_ok);
        let c4 = compare_te_re(4).unwrap();
        assert_eq!((c4.dim_re, c4.dim_te), (7, 11));
        assert!(c4.te_classes_ok && c4.re_classes_ok);
    }

    #[test]
    fn ln_pullbacks_split_into_distinct_classes() {
        for n in 0..=8 {
            let r = re_decompose_pullback(&build_ln(n)).unwrap();
            assert!(r.passes(), "n={n}");
            let mults: Vec<usize> = r.summands.iter().map(|s| s.multiplicity).collect();
            if n % 2 == 1 {
                assert_eq!(mults, vec![2]);
            } else {
                assert!(mults.iter().all(|&m| m == 1), "n={n}");
            }
        }
    }
}
