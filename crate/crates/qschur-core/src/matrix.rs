//! Dense matrices with human-readable basis labels, and the handful of
//! numeric checks (orthogonality defect, commutators) the verification
//! suites share. All representation matrices in this crate are real, so
//! "unitary" means real orthogonal throughout.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::Float;

pub use ndarray::linalg::kron;

/// A dense matrix whose rows and columns carry basis labels (serialized
/// tableaux, words, or `(λ, P, Q)` triples).
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledMatrix<S> {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub data: Array2<S>,
}

impl<S: Float> LabeledMatrix<S> {
    pub fn new(row_labels: Vec<String>, col_labels: Vec<String>, data: Array2<S>) -> Result<Self> {
        if data.nrows() != row_labels.len() || data.ncols() != col_labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{} but {} row labels and {} column labels were given",
                data.nrows(),
                data.ncols(),
                row_labels.len(),
                col_labels.len()
            )));
        }
        Ok(LabeledMatrix { row_labels, col_labels, data })
    }

    pub fn nrows(&self) -> usize {
        self.data.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.data.ncols()
    }
}

pub fn identity<S: Float>(n: usize) -> Array2<S> {
    Array2::from_shape_fn((n, n), |(i, j)| if i == j { S::one() } else { S::zero() })
}

/// Largest absolute entry of `a − b`.
pub fn max_abs_diff<S: Float>(a: &Array2<S>, b: &Array2<S>) -> S {
    assert_eq!(a.dim(), b.dim(), "max_abs_diff shape mismatch");
    a.iter().zip(b.iter()).map(|(&x, &y)| (x - y).abs()).fold(S::zero(), S::max)
}

/// Largest absolute entry of `AᵀA − I`: zero iff the columns are
/// orthonormal.
pub fn orthogonality_defect<S: Float>(a: &Array2<S>) -> S {
    let gram = a.t().dot(a);
    max_abs_diff(&gram, &identity(a.ncols()))
}

/// Largest absolute entry of `AB − BA`.
pub fn commutator_defect<S: Float>(a: &Array2<S>, b: &Array2<S>) -> S {
    max_abs_diff(&a.dot(b), &b.dot(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn label_shape_checked() {
        let m = array![[1.0, 0.0], [0.0, 1.0]];
        assert!(LabeledMatrix::new(vec!["a".into(), "b".into()], vec!["x".into(), "y".into()], m.clone()).is_ok());
        assert!(LabeledMatrix::new(vec!["a".into()], vec!["x".into(), "y".into()], m).is_err());
    }

    #[test]
    fn defects() {
        let rot = array![[0.6, -0.8], [0.8, 0.6]];
        assert!(orthogonality_defect(&rot) < 1e-15);
        let skew = array![[1.0, 1.0], [0.0, 1.0]];
        assert!(orthogonality_defect(&skew) > 0.5);
        let diag = array![[1.0, 0.0], [0.0, 2.0]];
        assert!(commutator_defect(&diag, &rot) > 0.1);
        assert_eq!(commutator_defect(&diag, &identity(2)), 0.0);
    }

    #[test]
    fn kron_dims() {
        let a = identity::<f64>(3);
        let b = array![[0.0, 1.0], [1.0, 0.0]];
        let k = kron(&a, &b);
        assert_eq!(k.dim(), (6, 6));
        assert_eq!(k[[0, 1]], 1.0);
        assert_eq!(k[[0, 3]], 0.0);
    }
}
