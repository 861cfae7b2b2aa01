//! Symmetric polynomials in a few variables: detection, rewriting in the
//! elementary symmetric polynomials `sigma1, sigma2, ...`, Newton's power
//! sums and the substitution `sigma2 = (sigma1^2 - tau^2)/3`.

use thiserror::Error;

use crate::elimination::{discriminant, ElimError};
use crate::exactnum::{frac, int};
use crate::multipoly::{Monomial, MultiPoly, PolyError, VarTable};

pub const TAU: &str = "tau";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("polynomial is not symmetric in {0:?}")]
    NotSymmetric(Vec<String>),
    #[error("tau occurs with an odd exponent")]
    OddTauPower,
    #[error("round-trip check failed: {0}")]
    RoundTrip(&'static str),
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
}

/// Name of the `i`-th elementary symmetric polynomial (1-based).
pub fn sigma(i: usize) -> String {
    format!("sigma{i}")
}

fn sigma_table(arity: usize) -> VarTable {
    VarTable::new((1..=arity).map(sigma)).expect("distinct names")
}

/// A polynomial in `sigma1..sigma_arity`. When it came from a concrete
/// polynomial, `source_vars` names the variables the sigmas stand for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemSymExpr {
    pub poly: MultiPoly,
    pub arity: usize,
    pub source_vars: Vec<String>,
}

impl ElemSymExpr {
    /// Substitutes `sigma_i := e_i(vars)` and returns a polynomial in `vars`.
    pub fn expand(&self, vars: &[&str]) -> Result<MultiPoly, SymError> {
        let table = VarTable::new(vars.iter().copied())?;
        let elems = elementary_polys(&table);
        let mut acc = self.poly.retable(&sigma_table(self.arity))?;
        for (i, e) in elems.iter().enumerate().take(self.arity) {
            acc = acc.substitute(&sigma(i + 1), e)?;
        }
        Ok(acc.retable(&table)?)
    }
}

/// A polynomial in `sigma1, tau, sigma3` with only even powers of `tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauForm {
    pub poly: MultiPoly,
}

impl TauForm {
    pub fn new(poly: MultiPoly) -> Result<Self, SymError> {
        let poly = poly.retable(&tau_table())?;
        if poly.terms().any(|(m, _)| m.exponents()[1] % 2 == 1) {
            return Err(SymError::OddTauPower);
        }
        Ok(TauForm { poly })
    }

    /// Undoes the substitution: `tau^2 := sigma1^2 - 3*sigma2`.
    pub fn to_elementary(&self) -> Result<ElemSymExpr, SymError> {
        let halved = self.poly.substitute_square(TAU, "tau_sq")?;
        let back = MultiPoly::var(&sigma_table(3), "sigma1")?.pow(2)
            - MultiPoly::var(&sigma_table(3), "sigma2")?.scale(&int(3));
        let poly = halved.substitute("tau_sq", &back)?.retable(&sigma_table(3))?;
        Ok(ElemSymExpr {
            poly,
            arity: 3,
            source_vars: Vec::new(),
        })
    }
}

fn tau_table() -> VarTable {
    VarTable::new(["sigma1", TAU, "sigma3"]).expect("distinct names")
}

/// `e_1, ..., e_n` over the given table.
pub fn elementary_polys(vars: &VarTable) -> Vec<MultiPoly> {
    let n = vars.len();
    // Coefficients of prod (1 + x_i t), built one variable at a time.
    let mut e = vec![MultiPoly::one(vars)];
    for name in vars.names() {
        let x = MultiPoly::var(vars, name).expect("own variable");
        let mut next = e.clone();
        next.push(MultiPoly::zero(vars));
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * &x);
        }
        e = next;
    }
    e.drain(1..=n).collect()
}

/// True iff `p` is unchanged by every adjacent transposition of `vars`.
pub fn is_symmetric(p: &MultiPoly, vars: &[&str]) -> Result<bool, SymError> {
    for v in vars {
        if p.vars().index_of(v).is_none() {
            return Err(PolyError::UnknownVariable(v.to_string()).into());
        }
    }
    for w in vars.windows(2) {
        let swapped = p.rename(&[w[0], w[1]], &[w[1], w[0]])?.retable(p.vars())?;
        if &swapped != p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rewrites a symmetric polynomial in the elementary symmetric polynomials
/// of `vars` by repeatedly cancelling the leading term. The result is
/// expanded back and compared with `p` before it is returned.
pub fn to_elementary(p: &MultiPoly, vars: &[&str]) -> Result<ElemSymExpr, SymError> {
    if vars.is_empty() {
        return Err(SymError::ZeroArity);
    }
    if !is_symmetric(p, vars)? {
        return Err(SymError::NotSymmetric(vars.iter().map(|s| s.to_string()).collect()));
    }
    let table = VarTable::new(vars.iter().copied())?;
    let p_local = p.retable(&table).map_err(|_| {
        SymError::NotSymmetric(vars.iter().map(|s| s.to_string()).collect())
    })?;
    let n = vars.len();
    let elems = elementary_polys(&table);
    let stable = sigma_table(n);
    let mut rest = p_local.clone();
    let mut out = MultiPoly::zero(&stable);
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        // Leading exponents a1 >= a2 >= ... >= an; use
        // sigma1^(a1-a2) * sigma2^(a2-a3) * ... * sigman^an.
        let a = m.exponents();
        let mut sexps = vec![0u32; n];
        let mut term = MultiPoly::constant(&table, c.clone());
        for k in 0..n {
            let next = if k + 1 < n { a[k + 1] } else { 0 };
            debug_assert!(a[k] >= next, "leading monomial of a symmetric polynomial");
            sexps[k] = a[k] - next;
            term = &term * &elems[k].pow(sexps[k]);
        }
        out = &out + &MultiPoly::from_terms(&stable, [(Monomial::new(sexps), c)]);
        rest = &rest - &term;
    }
    let expr = ElemSymExpr {
        poly: out,
        arity: n,
        source_vars: vars.iter().map(|s| s.to_string()).collect(),
    };
    if expr.expand(vars)? != p_local {
        return Err(SymError::RoundTrip("elementary form"));
    }
    Ok(expr)
}

/// The power sum `x1^m + ... + x_arity^m` in terms of the sigmas, from
/// Newton's identities.
pub fn power_sum_in_elementary(m: usize, arity: usize) -> Result<ElemSymExpr, SymError> {
    if arity == 0 {
        return Err(SymError::ZeroArity);
    }
    let table = sigma_table(arity);
    let s: Vec<MultiPoly> = (1..=arity)
        .map(|i| MultiPoly::var(&table, &sigma(i)).expect("own variable"))
        .collect();
    // f[0] = arity is never used by the recurrence below.
    let mut f: Vec<MultiPoly> = vec![MultiPoly::constant(&table, int(arity as i64))];
    for k in 1..=m {
        let mut fk = MultiPoly::zero(&table);
        for i in 1..k.min(arity + 1) {
            let t = &s[i - 1] * &f[k - i];
            fk = if i % 2 == 1 { &fk + &t } else { &fk - &t };
        }
        if k <= arity {
            let t = s[k - 1].scale(&int(k as i64));
            fk = if k % 2 == 1 { &fk + &t } else { &fk - &t };
        }
        f.push(fk);
    }
    Ok(ElemSymExpr {
        poly: f.swap_remove(m),
        arity,
        source_vars: Vec::new(),
    })
}

/// Replaces `sigma2` by `(sigma1^2 - tau^2)/3` and checks the inverse.
pub fn tau_substitute(e: &ElemSymExpr) -> Result<TauForm, SymError> {
    let base = e.poly.retable(&sigma_table(3))?;
    let t = tau_table();
    let s1 = MultiPoly::var(&t, "sigma1")?;
    let tau = MultiPoly::var(&t, TAU)?;
    let repl = (&s1.pow(2) - &tau.pow(2)).scale(&frac(1, 3));
    let form = TauForm::new(base.substitute("sigma2", &repl)?)?;
    if form.to_elementary()?.poly != base {
        return Err(SymError::RoundTrip("tau form"));
    }
    Ok(form)
}

/// `disc_l(l^3 - sigma1*l^2 + sigma2*l - sigma3)` as a polynomial in the
/// sigmas.
pub fn cubic_discriminant() -> Result<MultiPoly, SymError> {
    let table = VarTable::new(["l", "sigma1", "sigma2", "sigma3"])?;
    let cubic = crate::multipoly::parse_poly(
        "l^3 - sigma1*l^2 + sigma2*l - sigma3",
        &table,
    )?;
    Ok(discriminant(&cubic, "l")?.value.retable(&sigma_table(3))?)
}

/// `(4/27) tau^6 - (1/27) (3 sigma1 tau^2 - sigma1^3 + 27 sigma3)^2`.
pub fn cubic_discriminant_tau_closed_form() -> MultiPoly {
    let t = tau_table();
    let s1 = MultiPoly::var(&t, "sigma1").unwrap();
    let s3 = MultiPoly::var(&t, "sigma3").unwrap();
    let tau = MultiPoly::var(&t, TAU).unwrap();
    let inner = &(&(&s1 * &tau.pow(2)).scale(&int(3)) - &s1.pow(3)) + &s3.scale(&int(27));
    &tau.pow(6).scale(&frac(4, 27)) - &inner.pow(2).scale(&frac(1, 27))
}

/// Convenience for callers that only need the zero test of a difference.
pub fn same_polynomial(a: &MultiPoly, b: &MultiPoly) -> Result<bool, SymError> {
    Ok(a.try_sub(b)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::poly;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn sig(text: &str) -> MultiPoly {
        poly(text, &["sigma1", "sigma2", "sigma3"])
    }

    #[test]
    fn detection() {
        assert!(is_symmetric(&poly("x^2 + y^2 + z^2", &XYZ), &XYZ).unwrap());
        assert!(!is_symmetric(&poly("x - y", &["x", "y"]), &["x", "y"]).unwrap());
        assert!(!is_symmetric(&poly("x*y^2 + y*z^2 + z*x^2", &XYZ), &XYZ).unwrap());
        // Symmetric in x, y only.
        assert!(is_symmetric(&poly("x*y + z", &XYZ), &["x", "y"]).unwrap());
    }

    #[test]
    fn small_reductions() {
        let e = to_elementary(&poly("x^2 + y^2 + z^2", &XYZ), &XYZ).unwrap();
        assert_eq!(e.poly, sig("sigma1^2 - 2*sigma2"));
        let e = to_elementary(&poly("x^3 + y^3 + z^3", &XYZ), &XYZ).unwrap();
        assert_eq!(e.poly, sig("sigma1^3 - 3*sigma1*sigma2 + 3*sigma3"));
        assert!(matches!(
            to_elementary(&poly("x - y", &XYZ), &XYZ),
            Err(SymError::NotSymmetric(_))
        ));
    }

    #[test]
    fn newton_power_sums() {
        assert_eq!(power_sum_in_elementary(1, 3).unwrap().poly, sig("sigma1"));
        assert_eq!(power_sum_in_elementary(2, 3).unwrap().poly, sig("sigma1^2 - 2*sigma2"));
        assert_eq!(
            power_sum_in_elementary(4, 3).unwrap().poly,
            sig("sigma1^4 - 4*sigma1^2*sigma2 + 2*sigma2^2 + 4*sigma1*sigma3")
        );
        for m in 1..=8u32 {
            let f = power_sum_in_elementary(m as usize, 3).unwrap();
            let want = poly(&format!("x^{m} + y^{m} + z^{m}"), &XYZ);
            assert_eq!(f.expand(&XYZ).unwrap(), want, "m = {m}");
        }
        let f = power_sum_in_elementary(5, 2).unwrap();
        assert_eq!(f.expand(&["a", "b"]).unwrap(), poly("a^5 + b^5", &["a", "b"]));
    }

    #[test]
    fn tau_examples() {
        let e = |p: MultiPoly| ElemSymExpr {
            poly: p,
            arity: 3,
            source_vars: Vec::new(),
        };
        let t = tau_substitute(&e(sig("sigma1^2 - 3*sigma2"))).unwrap();
        assert_eq!(t.poly.to_string(), "tau^2");
        let t = tau_substitute(&e(sig("sigma2"))).unwrap();
        assert_eq!(t.poly.to_string(), "1/3*sigma1^2 - 1/3*tau^2");
        assert_eq!(
            TauForm::new(poly("tau^3", &["sigma1", "tau", "sigma3"])),
            Err(SymError::OddTauPower)
        );
    }

    #[test]
    fn cubic_discriminant_in_tau() {
        let d = cubic_discriminant().unwrap();
        let e = ElemSymExpr {
            poly: d,
            arity: 3,
            source_vars: Vec::new(),
        };
        let t = tau_substitute(&e).unwrap();
        assert!(same_polynomial(&t.poly, &cubic_discriminant_tau_closed_form()).unwrap());
    }
}
