//! Summability matrices: row n holds the power-series coefficients of f(z)^n.

use num_complex::Complex64;

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::series::TruncatedSeries;

/// N x (K+1) array of summability-matrix entries, row-major; entry (n, k) is
/// the coefficient of z^k in f(z)^n.
///
/// Row 0 is always [1, 0, ..., 0]; when f has zero constant term the matrix
/// is lower triangular in the z-power.
#[derive(Clone, Debug, PartialEq)]
pub struct SummabilityMatrix<F> {
    entries: Vec<F>,
    rows: usize,
    cols: usize,
    source: String,
}

impl<F: Coefficient> SummabilityMatrix<F> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Description of the generating function this matrix came from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn entry(&self, n: usize, k: usize) -> &F {
        &self.entries[n * self.cols + k]
    }

    pub fn row(&self, n: usize) -> &[F] {
        &self.entries[n * self.cols..(n + 1) * self.cols]
    }

    /// Apply the matrix to a sequence: t_n = sum_{k=0}^{K} entry(n,k) s_k,
    /// computed in double precision. The transform is truncated at K columns
    /// and therefore approximate. Panics if `s` is shorter than the matrix
    /// is wide.
    pub fn transform_sequence(&self, s: &[Complex64]) -> Vec<Complex64> {
        assert!(
            s.len() >= self.cols,
            "sequence has {} entries but the matrix has {} columns",
            s.len(),
            self.cols
        );
        (0..self.rows)
            .map(|n| {
                self.row(n)
                    .iter()
                    .zip(s)
                    .map(|(e, sk)| e.to_complex_f64() * sk)
                    .sum()
            })
            .collect()
    }

    /// Partial column sums sum_{n<N} entry(n, k) in double precision.
    pub fn column_partial_sums(&self) -> Vec<Complex64> {
        let mut sums = vec![Complex64::new(0.0, 0.0); self.cols];
        for n in 0..self.rows {
            for (k, e) in self.row(n).iter().enumerate() {
                sums[k] += e.to_complex_f64();
            }
        }
        sums
    }
}

/// Build the first `num_rows` rows of the summability matrix of f, exactly,
/// by the row recurrence row_n = row_{n-1} * f. Columns run over z^0..z^K
/// where K is the truncation order of f.
pub fn build_matrix<F: Coefficient>(
    f: &TruncatedSeries<F>,
    num_rows: usize,
    source: &str,
) -> SummabilityMatrix<F> {
    assert!(num_rows >= 1, "a matrix needs at least one row");
    let cols = f.order() + 1;
    let mut entries = Vec::with_capacity(num_rows * cols);
    let mut row = TruncatedSeries::<F>::one(f.order());
    entries.extend_from_slice(row.coeffs());
    for _ in 1..num_rows {
        row = row.mul(f).expect("orders match by construction");
        entries.extend_from_slice(row.coeffs());
    }
    SummabilityMatrix {
        entries,
        rows: num_rows,
        cols,
        source: source.to_owned(),
    }
}

/// Column sums of the summability matrix of f, read off as the coefficients
/// of the geometric inverse 1/(1 - f). This is the general method: it works
/// formally whenever f(0) != 1, and equals the limit of the column partial
/// sums when |f(0)| < 1 and the column sums converge (checked separately by
/// the verification layer).
pub fn column_sums_via_series<F: Coefficient>(f: &TruncatedSeries<F>) -> Result<Vec<F>, Error> {
    Ok(f.geom_inverse()?.coeffs().to_vec())
}

/// Numeric gate for convergence claims: |f(0)| < 1.
pub fn is_contractive_at_zero<F: Coefficient>(f: &TruncatedSeries<F>) -> bool {
    f.constant_term().to_complex_f64().norm() < 1.0
}
