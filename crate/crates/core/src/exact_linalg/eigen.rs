use crate::error::{Error, Result};
use crate::exact_linalg::{minimal_polynomial, nullspace, rational_roots, ExactMatrix, Subspace};
use crate::gaussian::Q;

/// Eigenspace decomposition of a square matrix over ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSplit {
    /// `(λ, ker(M − λI))`, in the order the eigenvalues were supplied.
    pub spaces: Vec<(Q, Subspace)>,
    /// Eigenspace dimensions sum to the ambient dimension.
    pub diagonalizable: bool,
}

impl EigenSplit {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|(_, s)| s.dim()).collect()
    }
}

/// Eigenspaces of `m` for the supplied eigenvalues, which must be exactly
/// the distinct roots of the minimal polynomial.
pub fn eigen_split(m: &ExactMatrix, roots: &[Q]) -> Result<EigenSplit> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigen_split on {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let p = minimal_polynomial(m);
    let mut distinct: Vec<Q> = Vec::new();
    for r in roots {
        if !p.eval(r).is_zero() {
            return Err(Error::RootsMismatch(format!("{r} is not an eigenvalue")));
        }
        if !distinct.contains(r) {
            distinct.push(r.clone());
        }
    }
    let expected = p.squarefree_part().degree().unwrap_or(0);
    if distinct.len() != expected {
        return Err(Error::RootsMismatch(format!(
            "{} distinct values supplied, minimal polynomial has {expected} distinct roots",
            distinct.len()
        )));
    }
    Ok(split_known(m, distinct))
}

/// [`eigen_split`] with eigenvalues found by the generic root search.
pub fn eigen_split_auto(m: &ExactMatrix, label: &str) -> Result<EigenSplit> {
    let search = rational_roots(&minimal_polynomial(m))?;
    if !search.splits {
        return Err(Error::NonSplitting(label.to_string()));
    }
    Ok(split_known(m, search.roots))
}

fn split_known(m: &ExactMatrix, roots: Vec<Q>) -> EigenSplit {
    let n = m.rows();
    let spaces: Vec<(Q, Subspace)> = roots
        .into_iter()
        .map(|lambda| {
            let shifted = m.add_scalar(&-&lambda);
            let space = Subspace::from_vectors(n, nullspace(&shifted));
            (lambda, space)
        })
        .collect();
    let total: usize = spaces.iter().map(|(_, s)| s.dim()).sum();
    EigenSplit {
        spaces,
        diagonalizable: total == n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;
    use crate::mat;

    #[test]
    fn diagonal_with_repeat() {
        let m = ExactMatrix::diag([q(1, 1), q(1, 1), q(2, 1)]);
        let s = eigen_split(&m, &[q(1, 1), q(2, 1)]).unwrap();
        assert_eq!(s.dims(), vec![2, 1]);
        assert!(s.diagonalizable);
    }

    #[test]
    fn nilpotent_is_not_diagonalizable() {
        let s = eigen_split(&mat![[0, 1], [0, 0]], &[Q::ZERO]).unwrap();
        assert_eq!(s.dims(), vec![1]);
        assert!(!s.diagonalizable);
    }

    #[test]
    fn wrong_hints_rejected() {
        let m = ExactMatrix::diag([q(1, 1), q(2, 1)]);
        assert!(matches!(eigen_split(&m, &[q(1, 1)]), Err(Error::RootsMismatch(_))));
        assert!(matches!(
            eigen_split(&m, &[q(1, 1), q(3, 1)]),
            Err(Error::RootsMismatch(_))
        ));
    }

    #[test]
    fn non_splitting_reported() {
        let m = mat![[0, 2], [1, 0]];
        assert!(matches!(eigen_split_auto(&m, "M"), Err(Error::NonSplitting(_))));
        let rot = mat![[0, -1], [1, 0]];
        let s = eigen_split_auto(&rot, "rot").unwrap();
        assert_eq!(s.dims(), vec![1, 1]);
    }
}
