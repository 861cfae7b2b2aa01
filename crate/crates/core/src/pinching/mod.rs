//! The final integrand of the pinching argument as exact rational functions
//! of the dimension `n`, negativity certificates on `n >= 6`, and a search
//! for the smallest feasible `eta`.
//!
//! Inputs are four positive parameters `eps, sig, kap, eta`. Out of them
//! come the constants
//!
//! ```text
//! b     = 3/2 - 1/(n + 4)
//! c     = 24/5 - 16/((1 + 1/eta) n)
//! theta = 3 - (2/3) c sig^2 - 2 eps / sig
//! tcoef = (1/6) c sig^2 + (2/(3 sig)) (1/(16 eps) + 3 eps / 2)
//! ```
//!
//! and the bracket, which is affine in `S`:
//! `G(S) = (S - n) * coef_sn + coef_const`. Here `tcoef` is the coefficient of
//! `|grad S|^2`; it is unrelated to the symmetric-function `tau`.

use num_traits::Signed;
use serde_json::json;
use thiserror::Error;

use crate::exactnum::{frac, int, Rational};
use crate::lemmas::{Certificate, Obligation, ObligationKind};
use crate::realroots::{certify_positive, DomainSpec, RootError};

mod optimize;
mod ratfn;

pub use optimize::{optimize_eta, EtaStep, OptimizeError, OptimizeResult, SearchConfig};
pub use ratfn::{RationalFunctionN, N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PinchError {
    #[error("parameter {0} must be strictly positive")]
    NonPositive(&'static str),
    #[error("n_min must be at least 1")]
    BadDomain,
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinchingParams {
    pub eps: Rational,
    pub sig: Rational,
    pub kap: Rational,
    pub eta: Rational,
}

impl PinchingParams {
    pub fn new(eps: Rational, sig: Rational, kap: Rational, eta: Rational) -> Result<Self, PinchError> {
        for (name, v) in [("eps", &eps), ("sigma", &sig), ("kappa", &kap), ("eta", &eta)] {
            if !v.is_positive() {
                return Err(PinchError::NonPositive(name));
            }
        }
        Ok(PinchingParams { eps, sig, kap, eta })
    }

    /// `eps = 1/18, sig = 7/18, kap = 1/24, eta = 18`.
    pub fn reference() -> Self {
        Self::new(frac(1, 18), frac(7, 18), frac(1, 24), int(18)).expect("positive")
    }

    pub fn with_eta(&self, eta: Rational) -> Result<Self, PinchError> {
        Self::new(self.eps.clone(), self.sig.clone(), self.kap.clone(), eta)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "eps": self.eps.to_string(),
            "sigma": self.sig.to_string(),
            "kappa": self.kap.to_string(),
            "eta": self.eta.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedConstants {
    pub b: RationalFunctionN,
    pub c: RationalFunctionN,
    pub theta: RationalFunctionN,
    pub tau_coefficient: RationalFunctionN,
}

type RF = RationalFunctionN;

fn k(c: Rational) -> RF {
    RF::constant(c)
}

pub fn derived_constants(p: &PinchingParams) -> DerivedConstants {
    let n = RF::n();
    let width = int(1) + p.eta.recip();
    let b = k(frac(3, 2)).sub(&RF::int(1).div(&n.add(&RF::int(4))).unwrap());
    let c = k(frac(24, 5)).sub(&RF::int(16).div(&n.scale(&width)).unwrap());
    let sig2 = &p.sig * &p.sig;
    let theta = RF::int(3)
        .sub(&c.scale(&(frac(2, 3) * &sig2)))
        .sub(&k(int(2) * &p.eps / &p.sig));
    let young = int(1) / (int(16) * &p.eps) + frac(3, 2) * &p.eps;
    let tau_coefficient = c
        .scale(&(frac(1, 6) * &sig2))
        .add(&k(int(2) / (int(3) * &p.sig) * young));
    DerivedConstants {
        b,
        c,
        theta,
        tau_coefficient,
    }
}

/// `(coef_sn, coef_const)`.
pub fn final_coefficients(p: &PinchingParams) -> (RationalFunctionN, RationalFunctionN) {
    let d = derived_constants(p);
    coefficients_from(p, &d)
}

fn coefficients_from(p: &PinchingParams, d: &DerivedConstants) -> (RF, RF) {
    let n = RF::n();
    let sig2 = &p.sig * &p.sig;
    let width = int(1) + p.eta.recip();
    let two_thirds_sig = int(2) / (int(3) * &p.sig);
    let coef_sn = k(int(1) + int(1) / (int(12) * &p.sig * &p.kap) + &two_thirds_sig * &p.eps)
        .sub(&d.tau_coefficient.scale(&int(2)))
        .sub(&d.theta.scale(&frac(5, 6)));
    let kappa_part = n.scale(&(int(2) * &width * &p.kap));
    let eps_part = n.add(&RF::int(3)).scale(&p.eps);
    let theta_factor = RF::int(1)
        .add(&n.scale(&frac(2, 3)))
        .sub(&d.b.mul(&n).scale(&p.eta.recip()));
    let coef_const = n
        .add(&RF::int(4))
        .sub(&d.c.scale(&(frac(2, 3) * &sig2)))
        .add(&kappa_part.sub(&eps_part).scale(&two_thirds_sig))
        .add(&d.tau_coefficient.mul(&n).scale(&(int(2) / &p.eta)))
        .sub(&d.theta.mul(&theta_factor));
    (coef_sn, coef_const)
}

/// The full bracket at a numeric point, assembled from its ingredients
/// rather than from the closed-form coefficients:
///
/// ```text
/// S + 4 - (2/3) c sig^2 + (2/(3 sig)) (2 (1 + 1/eta) n kap + (S - n)/(8 kap) - eps (2n + 3 - S))
///   + 2 tcoef (n - S + n/eta) - theta (1 - n/6 + (5/6) S - b n/eta)
/// ```
pub fn bracket_at(p: &PinchingParams, n: &Rational, s: &Rational) -> Rational {
    let width = int(1) + p.eta.recip();
    let sig2 = &p.sig * &p.sig;
    let b = frac(3, 2) - int(1) / (n + int(4));
    let c = frac(24, 5) - int(16) / (&width * n);
    let theta = int(3) - frac(2, 3) * &c * &sig2 - int(2) * &p.eps / &p.sig;
    let tcoef = frac(1, 6) * &c * &sig2
        + int(2) / (int(3) * &p.sig) * (int(1) / (int(16) * &p.eps) + frac(3, 2) * &p.eps);
    let inner = int(2) * &width * n * &p.kap + (s - n) / (int(8) * &p.kap)
        - &p.eps * (int(2) * n + int(3) - s);
    s + int(4) - frac(2, 3) * &c * &sig2 + int(2) / (int(3) * &p.sig) * inner
        + int(2) * &tcoef * (n - s + n / &p.eta)
        - &theta * (int(1) - n / int(6) + frac(5, 6) * s - &b * n / &p.eta)
}

#[derive(Debug, Clone)]
pub struct NegativityCert {
    pub params: PinchingParams,
    pub n_min: i64,
    pub theta: RationalFunctionN,
    pub coef_sn: RationalFunctionN,
    pub coef_const: RationalFunctionN,
    pub certificate: Certificate,
}

impl NegativityCert {
    pub fn passed(&self) -> bool {
        self.certificate.passed()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "params": self.params.to_json(),
            "n_min": self.n_min,
            "theta": self.theta.to_string(),
            "coef_sn": self.coef_sn.to_string(),
            "coef_const": self.coef_const.to_string(),
            "certificate": self.certificate.to_json(),
        })
    }
}

/// Certifies `theta >= 0`, `coef_sn < 0` and `coef_const < 0` on `[6, inf)`.
pub fn certify_negative(p: &PinchingParams) -> Result<NegativityCert, PinchError> {
    certify_negative_from(p, 6)
}

pub fn certify_negative_from(p: &PinchingParams, n_min: i64) -> Result<NegativityCert, PinchError> {
    if n_min < 1 {
        return Err(PinchError::BadDomain);
    }
    let d = derived_constants(p);
    let (coef_sn, coef_const) = coefficients_from(p, &d);
    let dom = DomainSpec::RayGeq(int(n_min));
    let mut obligations = Vec::new();
    for (label, f, want_positive, strict) in [
        ("theta", &d.theta, true, false),
        ("coef_sn", &coef_sn, false, true),
        ("coef_const", &coef_const, false, true),
    ] {
        obligations.extend(sign_obligations(label, f, want_positive, strict, &dom)?);
    }
    let certificate = Certificate::new("pinching-negativity", obligations);
    Ok(NegativityCert {
        params: p.clone(),
        n_min,
        theta: d.theta,
        coef_sn,
        coef_const,
        certificate,
    })
}

/// The denominator is monic; it must be positive on the domain, and then
/// the sign of the function is the sign of its numerator.
fn sign_obligations(
    label: &str,
    f: &RF,
    want_positive: bool,
    strict: bool,
    dom: &DomainSpec,
) -> Result<Vec<Obligation>, PinchError> {
    let den = f.denominator().to_multi(N);
    let den_cert = certify_positive(&den, N, dom)?;
    let first = Obligation::new(
        format!("denominator of {label} is positive on {dom}"),
        ObligationKind::Positivity,
        den_cert.passed(),
        "pinching",
        den_cert.to_json(),
    );
    let num = f.numerator();
    let relation = match (want_positive, strict) {
        (true, true) => "> 0",
        (true, false) => ">= 0",
        (false, true) => "< 0",
        (false, false) => "<= 0",
    };
    let desc = format!("{label} {relation} on {dom}");
    let second = if num.is_zero() {
        Obligation::new(desc, ObligationKind::Positivity, !strict, "pinching", json!({"numerator": "0"}))
    } else {
        let oriented = if want_positive { num.clone() } else { num.neg() };
        let cert = certify_positive(&oriented.to_multi(N), N, dom)?;
        let mut o = Obligation::new(desc, ObligationKind::Positivity, cert.passed(), "pinching", cert.to_json());
        o.data["function"] = json!(f.to_string());
        o
    };
    Ok(vec![first, second])
}

/// `coef_sn`, `coef_const` and `theta` in floating point, for ranking
/// candidates only.
pub(crate) fn coefficients_f64(eps: f64, sig: f64, kap: f64, eta: f64, n: f64) -> (f64, f64, f64) {
    let width = 1.0 + 1.0 / eta;
    let b = 1.5 - 1.0 / (n + 4.0);
    let c = 4.8 - 16.0 / (width * n);
    let theta = 3.0 - 2.0 / 3.0 * c * sig * sig - 2.0 * eps / sig;
    let tcoef = c * sig * sig / 6.0 + 2.0 / (3.0 * sig) * (1.0 / (16.0 * eps) + 1.5 * eps);
    let coef_sn = 1.0 + 1.0 / (12.0 * sig * kap) + 2.0 * eps / (3.0 * sig) - 2.0 * tcoef - 5.0 / 6.0 * theta;
    let coef_const = n + 4.0 - 2.0 / 3.0 * c * sig * sig
        + 2.0 / (3.0 * sig) * (2.0 * width * n * kap - eps * (n + 3.0))
        + 2.0 * tcoef * n / eta
        - theta * (1.0 + 2.0 * n / 3.0 - b * n / eta);
    (coef_sn, coef_const, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::UniPoly;

    fn rf(num: &[i64], den: &[i64]) -> RF {
        RF::new(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn reference_constants() {
        let d = derived_constants(&PinchingParams::reference());
        let theta = k(frac(6323, 2835)).add(&k(frac(784, 513)).div(&RF::n()).unwrap());
        assert!(d.theta.equals(&theta));
        let c = k(frac(24, 5)).sub(&k(int(288)).div(&rf(&[0, 19], &[1])).unwrap());
        assert!(d.c.equals(&c));
        let one = PinchingParams::reference().with_eta(int(1)).unwrap();
        let c1 = k(frac(24, 5)).sub(&k(int(8)).div(&RF::n()).unwrap());
        assert!(derived_constants(&one).c.equals(&c1));
        assert!(d.b.equals(&k(frac(3, 2)).sub(&RF::int(1).div(&rf(&[4, 1], &[1])).unwrap())));
    }

    #[test]
    fn reference_coefficients() {
        let (sn, cc) = final_coefficients(&PinchingParams::reference());
        let want_sn = k(frac(784, 1539)).div(&RF::n()).unwrap().add(&k(frac(13, 2430))).neg();
        assert!(sn.equals(&want_sn));
        let want_cc = rf(&[-347760, 126690, 3629], &[4, 1]).scale(&frac(-1, 1939140));
        assert!(cc.equals(&want_cc));
        assert_eq!(sn.split_form(), "-13/2430 - 784/(1539*n)");
        assert_eq!(cc.to_string(), "-(3629*n^2 + 126690*n - 347760)/(1939140*(n + 4))");
        assert_eq!(
            sn.eval(&int(6)).unwrap(),
            -(frac(784, 9234) + frac(13, 2430))
        );
        assert_eq!(cc.eval(&int(6)).unwrap(), frac(-543024, 19391400));
    }

    #[test]
    fn bracket_is_affine_in_s() {
        let p = PinchingParams::reference();
        let (sn, cc) = final_coefficients(&p);
        for n in [6, 7, 13, 250] {
            let n = int(n);
            for s in [n.clone(), &n + frac(1, 3), &n * int(2)] {
                let closed = (&s - &n) * sn.eval(&n).unwrap() + cc.eval(&n).unwrap();
                assert_eq!(bracket_at(&p, &n, &s), closed);
            }
        }
    }

    #[test]
    fn floats_track_exact() {
        let p = PinchingParams::reference();
        let (sn, cc) = final_coefficients(&p);
        let d = derived_constants(&p);
        let (a, b, t) = coefficients_f64(1.0 / 18.0, 7.0 / 18.0, 1.0 / 24.0, 18.0, 10.0);
        let n = int(10);
        assert!((a - crate::exactnum::to_f64(&sn.eval(&n).unwrap())).abs() < 1e-12);
        assert!((b - crate::exactnum::to_f64(&cc.eval(&n).unwrap())).abs() < 1e-12);
        assert!((t - crate::exactnum::to_f64(&d.theta.eval(&n).unwrap())).abs() < 1e-12);
    }

    #[test]
    fn negativity_certificates() {
        let cert = certify_negative(&PinchingParams::reference()).unwrap();
        assert!(cert.passed(), "{}", cert.certificate.summary());
        let at_1793 = PinchingParams::reference().with_eta(frac(1793, 100)).unwrap();
        assert!(certify_negative(&at_1793).unwrap().passed());
        let big_sigma = PinchingParams::new(frac(1, 18), int(10), frac(1, 24), int(18)).unwrap();
        let cert = certify_negative(&big_sigma).unwrap();
        assert!(!cert.passed());
        let theta_ob = &cert.certificate.obligations[1];
        assert!(theta_ob.desc.starts_with("theta") && !theta_ob.passed());
        assert_eq!(
            PinchingParams::new(int(0), int(1), int(1), int(1)),
            Err(PinchError::NonPositive("eps"))
        );
    }
}
