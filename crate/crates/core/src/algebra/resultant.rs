//! Sylvester resultants and discriminants over integral domains.
//!
//! Determinants use fraction-free (Bareiss) elimination, so the coefficient
//! ring only needs exact division; this is what lets resultants run over
//! nested parameter rings such as `Q[a, b, c][x]`.

use super::{AlgebraError, Polynomial, Ring};

/// Determinant of a square matrix by Bareiss elimination.
pub fn determinant<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, i);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly in an integral domain");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// The `(m + n) x (m + n)` Sylvester matrix of `f` (degree `m`) and `g`
/// (degree `n`).
pub fn sylvester_matrix<R: Ring>(f: &Polynomial<R>, g: &Polynomial<R>) -> Vec<Vec<R>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, copies) in [(f, m, n), (g, n, m)] {
        for shift in 0..copies {
            let mut row = vec![R::zero(); size];
            for i in 0..=deg {
                // leading coefficient first
                row[shift + i] = p.coeff(deg - i);
            }
            rows.push(row);
        }
    }
    rows
}

/// `res(f, g)` as the Sylvester determinant.
pub fn resultant<R: Ring>(f: &Polynomial<R>, g: &Polynomial<R>) -> Result<R, AlgebraError> {
    match (f.degree(), g.degree()) {
        (None, None) => Err(AlgebraError::BothZero),
        (None, _) | (_, None) => Ok(R::zero()),
        (Some(m), Some(0)) => Ok(g.coeff(0).pow(m as u32)),
        (Some(0), Some(n)) => Ok(f.coeff(0).pow(n as u32)),
        _ => Ok(determinant(sylvester_matrix(f, g))),
    }
}

/// `disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)`.
pub fn discriminant<R: Ring>(f: &Polynomial<R>) -> Result<R, AlgebraError> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        d => return Err(AlgebraError::DegreeTooSmall(d)),
    };
    let res = resultant(f, &f.derivative())?;
    let lc = f.leading_coefficient().expect("nonzero");
    let d = res.exact_div(lc).ok_or(AlgebraError::InexactDivision)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}
