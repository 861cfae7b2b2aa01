//! Sylvester matrices, resultants and discriminants.
//!
//! Resultants are determinants of the Sylvester matrix, computed by
//! fraction-free (Bareiss) elimination over the polynomial ring. Every
//! Bareiss step divides by the previous pivot; that division is exact in
//! theory, so a nonzero remainder is reported as an internal error rather
//! than silently absorbed.

use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::exactnum::Rational;
use crate::multipoly::{MultiPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElimError {
    #[error("degree zero: polynomial is constant in {0:?}")]
    DegreeZero(String),
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("internal error: non-exact division ({0})")]
    InexactDivision(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Banded `(m+k) x (m+k)` coefficient matrix of `P` (degree `m`) and `Q`
/// (degree `k`) in `var`. Entries live in the table of the remaining
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylMatrix {
    pub var: String,
    pub degrees: (usize, usize),
    pub entries: Vec<Vec<MultiPoly>>,
}

impl SylMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElimResult {
    pub value: MultiPoly,
    pub eliminated_var: String,
    pub degrees: (usize, usize),
}

pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, v: &str) -> Result<SylMatrix, ElimError> {
    let (p, q) = p.align(q)?;
    let pc = p.univariate_view(v)?.coeffs;
    let qc = q.univariate_view(v)?.coeffs;
    let (m, k) = (pc.len() - 1, qc.len() - 1);
    if m == 0 || p.is_zero() {
        return Err(ElimError::DegreeZero(v.to_string()));
    }
    if k == 0 || q.is_zero() {
        return Err(ElimError::DegreeZero(v.to_string()));
    }
    Ok(SylMatrix {
        var: v.to_string(),
        degrees: (m, k),
        entries: banded(&pc, &qc),
    })
}

/// Rows `0..k` hold P's coefficients (highest first) shifted right by the row
/// index, rows `k..k+m` hold Q's.
fn banded(pc: &[MultiPoly], qc: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
    let (m, k) = (pc.len() - 1, qc.len() - 1);
    let n = m + k;
    let zero = MultiPoly::zero(pc[0].vars());
    let mut rows = Vec::with_capacity(n);
    for shift in 0..k {
        let mut row = vec![zero.clone(); n];
        for (j, c) in pc.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); n];
        for (j, c) in qc.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Pivot is the first row (from the diagonal down) with a nonzero entry in
/// the current column; each swap flips the sign. A column with no pivot makes
/// the determinant zero.
pub fn determinant_fraction_free(mat: &[Vec<MultiPoly>]) -> Result<MultiPoly, ElimError> {
    let n = mat.len();
    for (row, r) in mat.iter().enumerate() {
        if r.len() != n {
            return Err(ElimError::NotSquare {
                rows: n,
                row,
                cols: r.len(),
            });
        }
    }
    if n == 0 {
        return Err(ElimError::NotSquare {
            rows: 0,
            row: 0,
            cols: 0,
        });
    }
    // Bring every entry onto one table.
    let mut table_probe = mat[0][0].clone();
    for e in mat.iter().flatten() {
        table_probe = table_probe.align(e)?.0;
    }
    let vars = table_probe.vars().clone();
    let mut m: Vec<Vec<MultiPoly>> = mat
        .iter()
        .map(|r| r.iter().map(|e| e.retable(&vars)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;

    let mut negate = false;
    let mut prev = MultiPoly::one(&vars);
    for k in 0..n - 1 {
        let Some(pivot_row) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(MultiPoly::zero(&vars));
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            negate = !negate;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let prev_ref = &prev;
        bottom
            .par_iter_mut()
            .try_for_each(|row| -> Result<(), ElimError> {
                let lead = std::mem::replace(&mut row[k], MultiPoly::zero(&vars));
                for j in k + 1..n {
                    let cross = &(&row[j] * &pivot_row[k]) - &(&lead * &pivot_row[j]);
                    row[j] = if prev_ref.as_constant().is_some_and(|c| c.is_one()) {
                        cross
                    } else {
                        cross
                            .div_exact(prev_ref)
                            .map_err(|_| ElimError::InexactDivision("Bareiss step"))?
                    };
                }
                Ok(())
            })?;
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: &str) -> Result<ElimResult, ElimError> {
    let syl = sylvester_matrix(p, q, v)?;
    let value = determinant_fraction_free(&syl.entries)?;
    Ok(ElimResult {
        value,
        eliminated_var: v.to_string(),
        degrees: syl.degrees,
    })
}

/// `disc_v(P) = (-1)^(m(m-1)/2) / p_m * res_v(P, P')`.
pub fn discriminant(p: &MultiPoly, v: &str) -> Result<ElimResult, ElimError> {
    let view = p.univariate_view(v)?;
    let m = view.degree();
    if m == 0 || p.is_zero() {
        return Err(ElimError::DegreeZero(v.to_string()));
    }
    let lead = view.leading_coeff().clone();
    if m == 1 {
        return Ok(ElimResult {
            value: MultiPoly::one(lead.vars()),
            eliminated_var: v.to_string(),
            degrees: (1, 0),
        });
    }
    let dp = p.partial_derivative(v)?;
    let res = resultant(p, &dp, v)?;
    let quotient = res
        .value
        .div_exact(&lead)
        .map_err(|_| ElimError::InexactDivision("discriminant by leading coefficient"))?;
    let sign = if (m * (m - 1) / 2) % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };
    Ok(ElimResult {
        value: quotient.scale(&sign),
        eliminated_var: v.to_string(),
        degrees: (m, m - 1),
    })
}

/// Returns true when the result is the zero polynomial, i.e. (over the
/// complex numbers) the two inputs share a root for every specialization.
pub fn is_zero_resultant(r: &ElimResult) -> bool {
    r.value.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::multipoly::poly;

    #[test]
    fn sylvester_layouts() {
        let v = ["x", "a", "b"];
        let s = sylvester_matrix(&poly("x - a", &v), &poly("x - b", &v), "x").unwrap();
        let rows: Vec<Vec<String>> = s
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        assert_eq!(rows, vec![vec!["1", "-a"], vec!["1", "-b"]]);

        let v = ["x", "p", "q"];
        let s = sylvester_matrix(&poly("x^2 + p*x + q", &v), &poly("2*x + p", &v), "x").unwrap();
        let rows: Vec<Vec<String>> = s
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        assert_eq!(
            rows,
            vec![
                vec!["1", "p", "q"],
                vec!["2", "p", "0"],
                vec!["0", "2", "p"]
            ]
        );
        assert_eq!(s.entries[0][0].vars().names(), &["p", "q"]);
    }

    #[test]
    fn sylvester_rejects_constants() {
        let v = ["x", "y"];
        assert_eq!(
            sylvester_matrix(&poly("y + 1", &v), &poly("x", &v), "x"),
            Err(ElimError::DegreeZero("x".into()))
        );
    }

    #[test]
    fn small_determinants() {
        let v = ["a", "b"];
        let m = vec![
            vec![poly("1", &v), poly("-a", &v)],
            vec![poly("1", &v), poly("-b", &v)],
        ];
        assert_eq!(determinant_fraction_free(&m).unwrap(), poly("a - b", &v));

        let v = ["p", "q"];
        let m = vec![
            vec![poly("1", &v), poly("p", &v), poly("q", &v)],
            vec![poly("2", &v), poly("p", &v), poly("0", &v)],
            vec![poly("0", &v), poly("2", &v), poly("p", &v)],
        ];
        assert_eq!(determinant_fraction_free(&m).unwrap(), poly("-p^2 + 4*q", &v));

        let id: Vec<Vec<MultiPoly>> = (0..5)
            .map(|i| (0..5).map(|j| poly(if i == j { "1" } else { "0" }, &["x"])).collect())
            .collect();
        assert_eq!(determinant_fraction_free(&id).unwrap().as_constant(), Some(int(1)));

        let ragged = vec![vec![poly("1", &["x"])], vec![]];
        assert!(matches!(
            determinant_fraction_free(&ragged),
            Err(ElimError::NotSquare { .. })
        ));
    }

    #[test]
    fn pivot_search_and_zero_column() {
        let v = ["x"];
        // Needs a row swap: det [[0, 1], [1, 0]] = -1.
        let m = vec![
            vec![poly("0", &v), poly("1", &v)],
            vec![poly("1", &v), poly("0", &v)],
        ];
        assert_eq!(determinant_fraction_free(&m).unwrap(), poly("-1", &v));
        let m = vec![
            vec![poly("0", &v), poly("x", &v)],
            vec![poly("0", &v), poly("1", &v)],
        ];
        assert!(determinant_fraction_free(&m).unwrap().is_zero());
    }

    #[test]
    fn resultant_examples() {
        let v = ["x"];
        let r = resultant(&poly("x - 2", &v), &poly("x - 5", &v), "x").unwrap();
        assert_eq!(r.value.to_string(), "-3");
        let r = resultant(
            &poly("(x - 1)*(x - 2)", &v),
            &poly("(x - 1)*(x - 3)", &v),
            "x",
        )
        .unwrap();
        assert!(is_zero_resultant(&r));
    }

    #[test]
    fn critical_point_resultant() {
        let v = ["x", "y"];
        let g = poly("x^3*y - 4*x^2*y^2 + 2*x^2 - 2*x*y^3 - 9*x*y - 2*y^2 - 4", &v);
        let h = poly("x^4 - 4*x^3*y - 2*x^2*y^2 - 3*x^2 - 6*x*y - 4", &v);
        let s = sylvester_matrix(&g, &h, "x").unwrap();
        assert_eq!(s.dim(), 7);
        assert_eq!(s.degrees, (3, 4));
        // Band pattern: entries outside the bands are zero.
        for (i, row) in s.entries.iter().enumerate() {
            let (start, len) = if i < 4 { (i, 4) } else { (i - 4, 5) };
            for (j, e) in row.iter().enumerate() {
                if j < start || j >= start + len {
                    assert!(e.is_zero(), "({i},{j}) should be zero");
                }
            }
        }
        let r = resultant(&g, &h, "x").unwrap();
        assert_eq!(r.value.to_string(), "720*y^4 + 1296*y^2 + 576");
        assert_eq!(r.value.vars().names(), &["y"]);
    }

    #[test]
    fn discriminant_examples() {
        let v = ["x", "p", "q"];
        let d = discriminant(&poly("x^2 + p*x + q", &v), "x").unwrap();
        assert_eq!(d.value, poly("p^2 - 4*q", &["p", "q"]));

        let v = ["lam", "s1", "s2", "s3"];
        let d = discriminant(&poly("lam^3 - s1*lam^2 + s2*lam - s3", &v), "lam").unwrap();
        assert_eq!(
            d.value,
            poly(
                "s1^2*s2^2 - 4*s2^3 - 4*s1^3*s3 - 27*s3^2 + 18*s1*s2*s3",
                &["s1", "s2", "s3"]
            )
        );
        assert_eq!(d.degrees, (3, 2));

        let d = discriminant(&poly("3*x + 1", &["x"]), "x").unwrap();
        assert_eq!(d.value.as_constant(), Some(int(1)));
        assert!(discriminant(&poly("7", &["x"]), "x").is_err());
    }
}
