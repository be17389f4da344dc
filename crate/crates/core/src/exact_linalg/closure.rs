use crate::exact_linalg::{Echelon, ExactMatrix};
use crate::gaussian::Q;

/// Linear basis of a unital matrix algebra.
#[derive(Clone, Debug)]
pub struct Closure {
    pub dim: usize,
    pub basis: Vec<ExactMatrix>,
}

impl Closure {
    /// Whether both closures span the same algebra.
    pub fn same_span(&self, other: &Closure) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let Some(first) = self.basis.first() else {
            return true;
        };
        let n = first.rows();
        let mut ech = Echelon::new(n * n);
        for b in &self.basis {
            ech.insert(b.as_flat().to_vec());
        }
        other.basis.iter().all(|b| ech.contains(b.as_flat()))
    }
}

/// Row-wise nonzero pattern of a generator.
struct SparseRows {
    n: usize,
    rows: Vec<Vec<(usize, Q)>>,
}

impl SparseRows {
    fn new(m: &ExactMatrix) -> Self {
        let n = m.rows();
        let rows = (0..n)
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        Self { n, rows }
    }

    /// `self · m`, flattened row-major.
    fn left_mul_flat(&self, m: &ExactMatrix) -> Vec<Q> {
        let n = self.n;
        let mut out = vec![Q::ZERO; n * n];
        for (i, row) in self.rows.iter().enumerate() {
            let dst = &mut out[i * n..(i + 1) * n];
            for (k, a) in row {
                for (o, b) in dst.iter_mut().zip(m.row(*k)) {
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
        }
        out
    }
}

/// Span of all words in `gens` (including the empty word).
///
/// A span containing `I` and closed under `M ↦ G·M` contains every word, so
/// saturation yields the whole algebra. Stored elements are the normalized
/// echelon residuals of the products, which keeps coefficients small.
pub fn algebra_closure(gens: &[ExactMatrix]) -> Closure {
    let n = gens.first().map_or(0, ExactMatrix::rows);
    assert!(
        gens.iter().all(|g| g.rows() == n && g.cols() == n),
        "generators must be square of equal size"
    );
    if n == 0 {
        return Closure {
            dim: 0,
            basis: Vec::new(),
        };
    }
    let sparse: Vec<SparseRows> = gens.iter().map(SparseRows::new).collect();
    let mut ech = Echelon::new(n * n);
    let mut basis = vec![ExactMatrix::identity(n)];
    ech.insert(basis[0].as_flat().to_vec());
    let mut next = 0;
    while next < basis.len() {
        let m = basis[next].clone();
        next += 1;
        for g in &sparse {
            if let Some(r) = ech.insert_reduced(g.left_mul_flat(&m)) {
                basis.push(ExactMatrix::from_flat(n, n, r));
            }
        }
    }
    Closure {
        dim: basis.len(),
        basis,
    }
}
