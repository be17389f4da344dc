//! Certification of Leonard triples and pairs over ℚ(i): each operator is
//! diagonalizable with simple spectrum, and some ordering of its eigenbasis
//! makes the other operators irreducible tridiagonal.

use crate::error::{Error, Result};
use crate::exact_linalg::{eigen_split, eigen_split_auto, solve_in_span, EigenSplit, ExactMatrix};
use crate::gaussian::Q;

/// Findings for one operator playing the diagonal role.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OperatorReport {
    pub operator: String,
    pub diagonalizable: bool,
    pub simple_spectrum: bool,
    /// Eigenvalues in the certified ordering (supplied order if none).
    pub eigenvalues: Vec<Q>,
    /// The other operators in the ordered eigenbasis, when one exists.
    pub tridiagonal: Vec<(String, ExactMatrix)>,
    pub pass: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LeonardReport {
    pub dim: usize,
    pub operators: Vec<OperatorReport>,
    pub verdict: bool,
}

/// Result of ordering an eigenbasis along the support graph of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tridiagonalization {
    /// `ordering[k]` is the eigenline placed at position `k`.
    Ordered { ordering: Vec<usize>, matrix: ExactMatrix },
    /// The support graph is not a union of paths.
    Impossible { reason: String },
}

/// Eigenvalue hints per operator.
pub type Hints<'a> = [Option<&'a [Q]>; 3];

fn split(m: &ExactMatrix, hint: Option<&[Q]>, name: &str) -> Result<EigenSplit> {
    match hint {
        Some(h) => eigen_split(m, h),
        None => eigen_split_auto(m, name),
    }
}

/// Undirected support graph on `0..n` from off-diagonal nonzeros.
fn support_graph(mats: &[&ExactMatrix]) -> Vec<Vec<usize>> {
    let n = mats[0].rows();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if mats.iter().any(|m| !m[(i, j)].is_zero() || !m[(j, i)].is_zero()) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

/// Orders vertices path by path when the graph is a linear forest.
fn linear_forest_order(adj: &[Vec<usize>]) -> std::result::Result<Vec<usize>, String> {
    let n = adj.len();
    if let Some(v) = (0..n).find(|&v| adj[v].len() > 2) {
        return Err(format!("eigenline {v} has {} neighbours", adj[v].len()));
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    // start every path at its smallest endpoint
    for start in 0..n {
        if seen[start] || adj[start].len() == 2 {
            continue;
        }
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            seen[cur] = true;
            order.push(cur);
            match adj[cur].iter().find(|&&w| w != prev && !seen[w]) {
                Some(&w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
    }
    if order.len() < n {
        return Err("support graph contains a cycle".into());
    }
    Ok(order)
}

fn is_tridiagonal(m: &ExactMatrix) -> bool {
    let n = m.rows();
    (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || m[(i, j)].is_zero()))
}

fn is_irreducible_tridiagonal(m: &ExactMatrix) -> bool {
    is_tridiagonal(m) && (1..m.rows()).all(|i| !m[(i, i - 1)].is_zero() && !m[(i - 1, i)].is_zero())
}

/// Matrices of `others` in the basis given by `basis` (columns).
fn change_basis(basis: &[Vec<Q>], m: &ExactMatrix) -> Result<ExactMatrix> {
    let images: Vec<Vec<Q>> = basis.iter().map(|v| m.apply(v)).collect();
    Ok(ExactMatrix::from_columns(&solve_in_span(basis, &images)?))
}

fn eigenbasis(es: &EigenSplit) -> Vec<Vec<Q>> {
    es.spaces.iter().map(|(_, s)| s.basis()[0].clone()).collect()
}

/// Orders the eigenbasis of `d_op` so that `m` becomes tridiagonal.
pub fn tridiagonalize(d_op: &ExactMatrix, m: &ExactMatrix, hints: Option<&[Q]>) -> Result<Tridiagonalization> {
    let es = split(d_op, hints, "D")?;
    if !es.diagonalizable || es.spaces.iter().any(|(_, s)| s.dim() != 1) {
        return Ok(Tridiagonalization::Impossible {
            reason: "diagonal operator lacks a simple eigenbasis".into(),
        });
    }
    let basis = eigenbasis(&es);
    let mm = change_basis(&basis, m)?;
    Ok(match linear_forest_order(&support_graph(&[&mm])) {
        Ok(ordering) => Tridiagonalization::Ordered {
            matrix: mm.select(&ordering),
            ordering,
        },
        Err(reason) => Tridiagonalization::Impossible { reason },
    })
}

fn condition(
    name: &str,
    x: &ExactMatrix,
    others: &[(&str, &ExactMatrix)],
    hint: Option<&[Q]>,
) -> Result<OperatorReport> {
    let es = split(x, hint, name)?;
    let simple = es.spaces.iter().all(|(_, s)| s.dim() == 1);
    let mut report = OperatorReport {
        operator: name.to_string(),
        diagonalizable: es.diagonalizable,
        simple_spectrum: simple,
        eigenvalues: es.spaces.iter().map(|(l, _)| l.clone()).collect(),
        tridiagonal: Vec::new(),
        pass: false,
        failure: None,
    };
    if !es.diagonalizable {
        report.failure = Some(format!("{name} is not diagonalizable"));
        return Ok(report);
    }
    if !simple {
        report.failure = Some(format!("{name} has a repeated eigenvalue"));
        return Ok(report);
    }
    let basis = eigenbasis(&es);
    let transformed: Vec<ExactMatrix> = others
        .iter()
        .map(|(_, m)| change_basis(&basis, m))
        .collect::<Result<_>>()?;
    let refs: Vec<&ExactMatrix> = transformed.iter().collect();
    let n = x.rows();
    let adj = support_graph(&refs);
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let ordering = match linear_forest_order(&adj) {
        Ok(o) if edges + 1 == n => o,
        Ok(_) => {
            report.failure = Some(format!("support graph for {name} is disconnected"));
            return Ok(report);
        }
        Err(reason) => {
            report.failure = Some(format!("support graph for {name}: {reason}"));
            return Ok(report);
        }
    };
    report.eigenvalues = ordering.iter().map(|&k| es.spaces[k].0.clone()).collect();
    let mut ok = true;
    for ((other, _), m) in others.iter().zip(&transformed) {
        let t = m.select(&ordering);
        if !is_irreducible_tridiagonal(&t) {
            ok = false;
            report.failure.get_or_insert(format!(
                "{other} is not irreducible tridiagonal in the {name} eigenbasis"
            ));
        }
        report.tridiagonal.push((other.to_string(), t));
    }
    report.pass = ok;
    Ok(report)
}

fn same_size(ms: &[&ExactMatrix]) -> Result<usize> {
    let n = ms[0].rows();
    if n == 0 || ms.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::DimensionMismatch(
            "operators must be square, nonempty and of equal size".into(),
        ));
    }
    Ok(n)
}

/// Checks whether `(l, ls, le)` acts as a Leonard triple.
pub fn check(l: &ExactMatrix, ls: &ExactMatrix, le: &ExactMatrix, hints: Hints<'_>) -> Result<LeonardReport> {
    let dim = same_size(&[l, ls, le])?;
    let named = [("L", l), ("L*", ls), ("Leps", le)];
    let mut operators = Vec::with_capacity(3);
    for k in 0..3 {
        let others: Vec<(&str, &ExactMatrix)> = (0..3).filter(|&j| j != k).map(|j| named[j]).collect();
        operators.push(condition(named[k].0, named[k].1, &others, hints[k])?);
    }
    let verdict = operators.iter().all(|o| o.pass);
    Ok(LeonardReport {
        dim,
        operators,
        verdict,
    })
}

/// Checks whether `(l, ls)` acts as a Leonard pair.
pub fn check_pair(l: &ExactMatrix, ls: &ExactMatrix, hints: [Option<&[Q]>; 2]) -> Result<LeonardReport> {
    let dim = same_size(&[l, ls])?;
    let operators = vec![
        condition("L", l, &[("L*", ls)], hints[0])?,
        condition("L*", ls, &[("L", l)], hints[1])?,
    ];
    let verdict = operators.iter().all(|o| o.pass);
    Ok(LeonardReport {
        dim,
        operators,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;
    use crate::mat;
    use crate::rd_modules::{construct, RdParams};

    fn triple(p: &RdParams) -> LeonardReport {
        let r = construct(p);
        let h = p.eigenvalue_hints();
        check(r.a(), r.b(), r.c(), [Some(&h[0]), Some(&h[1]), Some(&h[2])]).unwrap()
    }

    #[test]
    fn quarter_module_is_leonard() {
        let p = RdParams::new(q(-1, 4), q(-1, 4), q(-1, 4), 1);
        assert!(triple(&p).verdict);
        let r = construct(&p);
        assert!(check(r.a(), r.b(), r.c(), [None, None, None]).unwrap().verdict);
    }

    #[test]
    fn defective_module_fails_on_a() {
        let rep = triple(&RdParams::new(q(-1, 2), q(1, 1), q(1, 1), 2));
        assert!(!rep.verdict);
        assert!(!rep.operators[0].diagonalizable);
    }

    #[test]
    fn one_by_one_passes() {
        let m = ExactMatrix::scalar(1, q(2, 1));
        assert!(check(&m, &m, &m, [None, None, None]).unwrap().verdict);
    }

    #[test]
    fn tridiagonalize_examples() {
        let d = ExactMatrix::diag([q(1, 1), q(2, 1), q(3, 1)]);
        let m = mat![[1, 1, 0], [1, 1, 1], [0, 1, 1]];
        let hints = [q(1, 1), q(2, 1), q(3, 1)];
        match tridiagonalize(&d, &m, Some(&hints)).unwrap() {
            Tridiagonalization::Ordered { ordering, .. } => assert_eq!(ordering, vec![0, 1, 2]),
            other => panic!("{other:?}"),
        }
        let m = mat![[0, 0, 1], [0, 0, 1], [1, 1, 0]];
        match tridiagonalize(&d, &m, Some(&hints)).unwrap() {
            Tridiagonalization::Ordered { ordering, matrix } => {
                assert_eq!(ordering, vec![0, 2, 1]);
                assert!(is_irreducible_tridiagonal(&matrix));
            }
            other => panic!("{other:?}"),
        }
        let full = mat![[0, 1, 1], [1, 0, 1], [1, 1, 0]];
        assert!(matches!(
            tridiagonalize(&d, &full, Some(&hints)).unwrap(),
            Tridiagonalization::Impossible { .. }
        ));
    }

    #[test]
    fn non_splitting_without_hints() {
        let m = mat![[0, 2], [1, 0]];
        assert!(matches!(
            check(&m, &m, &m, [None, None, None]),
            Err(Error::NonSplitting(_))
        ));
    }

    #[test]
    fn pair_mode() {
        let p = RdParams::new(q(1, 3), q(2, 5), q(1, 7), 3);
        let r = construct(&p);
        assert!(check_pair(r.a(), r.b(), [None, None]).unwrap().verdict);
    }
}
