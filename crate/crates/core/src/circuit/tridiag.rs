//! Complex tridiagonal solve by Gaussian elimination with partial pivoting.
//!
//! Near a cavity resonance the inductive and capacitive parts of the diagonal
//! cancel, so the plain Thomas recursion can meet tiny pivots; row interchanges
//! (as in LAPACK's `?gtsv`) avoid that at the cost of one extra fill diagonal.

use num_complex::Complex64;

/// Pivot that vanished during elimination, 0-based row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularPivot(pub usize);

/// Solves `A x = rhs` in place, returning `x` in `rhs`.
///
/// `lower[i]` is A[i+1][i], `diag[i]` is A[i][i], `upper[i]` is A[i][i+1].
/// All three input diagonals are consumed as workspace.
pub fn solve_in_place(
    lower: &mut [Complex64],
    diag: &mut [Complex64],
    upper: &mut [Complex64],
    rhs: &mut [Complex64],
) -> Result<(), SingularPivot> {
    let n = diag.len();
    assert_eq!(rhs.len(), n, "rhs length must match the matrix dimension");
    if n == 0 {
        return Ok(());
    }
    assert!(lower.len() >= n - 1 && upper.len() >= n - 1, "off-diagonals too short");

    let zero = Complex64::new(0.0, 0.0);
    for k in 0..n - 1 {
        if lower[k] == zero {
            if diag[k] == zero {
                return Err(SingularPivot(k));
            }
            // nothing to eliminate; lower[k] doubles as the (zero) fill entry
        } else if cabs1(diag[k]) >= cabs1(lower[k]) {
            let mult = lower[k] / diag[k];
            diag[k + 1] -= mult * upper[k];
            rhs[k + 1] -= mult * rhs[k];
            lower[k] = zero;
        } else {
            let mult = diag[k] / lower[k];
            diag[k] = lower[k];
            let temp = diag[k + 1];
            diag[k + 1] = upper[k] - mult * temp;
            if k + 2 < n {
                lower[k] = upper[k + 1];
                upper[k + 1] = -mult * lower[k];
            }
            upper[k] = temp;
            let temp = rhs[k];
            rhs[k] = rhs[k + 1];
            rhs[k + 1] = temp - mult * rhs[k + 1];
        }
    }
    if diag[n - 1] == zero {
        return Err(SingularPivot(n - 1));
    }

    rhs[n - 1] /= diag[n - 1];
    if n > 1 {
        rhs[n - 2] = (rhs[n - 2] - upper[n - 2] * rhs[n - 1]) / diag[n - 2];
    }
    for k in (0..n.saturating_sub(2)).rev() {
        rhs[k] = (rhs[k] - upper[k] * rhs[k + 1] - lower[k] * rhs[k + 2]) / diag[k];
    }
    if rhs.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return Err(SingularPivot(n - 1));
    }
    Ok(())
}

#[inline]
fn cabs1(z: Complex64) -> f64 {
    z.re.abs() + z.im.abs()
}
