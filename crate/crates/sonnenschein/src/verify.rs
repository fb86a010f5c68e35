//! Numeric confirmation that truncated column partial sums approach the
//! predicted column sums. Non-convergence is data, not an error: the report
//! carries a flag per column.

use num_complex::Complex64;

use crate::coeff::Coefficient;
use crate::matrix::SummabilityMatrix;

/// One column's comparison: partial sum over the matrix rows against the
/// predicted column sum.
#[derive(Clone, Debug, PartialEq)]
pub struct ColumnCheck {
    pub column: usize,
    pub predicted: Complex64,
    pub partial_sum: Complex64,
    pub deviation: f64,
    pub converged: bool,
}

/// Verification outcome across all compared columns.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub columns: Vec<ColumnCheck>,
    pub rows_used: usize,
    pub tolerance: f64,
}

impl VerificationReport {
    pub fn all_converged(&self) -> bool {
        self.columns.iter().all(|c| c.converged)
    }
}

/// Compare sum_{n<N} entry(n, k), computed in double precision, against
/// `predicted[k]` for each column k covered by both the matrix and the
/// prediction; a column converged iff |partial - predicted| <= tolerance.
pub fn verify_column_sums<F: Coefficient>(
    matrix: &SummabilityMatrix<F>,
    predicted: &[Complex64],
    tolerance: f64,
) -> VerificationReport {
    let partial = matrix.column_partial_sums();
    let columns = predicted
        .iter()
        .zip(&partial)
        .enumerate()
        .map(|(k, (want, got))| {
            let deviation = (got - want).norm();
            ColumnCheck {
                column: k,
                predicted: *want,
                partial_sum: *got,
                deviation,
                converged: deviation <= tolerance,
            }
        })
        .collect();
    VerificationReport {
        columns,
        rows_used: matrix.rows(),
        tolerance,
    }
}
