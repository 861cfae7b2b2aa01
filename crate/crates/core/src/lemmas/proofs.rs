//! The four lemma certificates.
//!
//! Every displayed polynomial is typed in once, as text, and compared
//! against what the engine computes. Nothing here is trusted beyond the
//! parser, the arithmetic and the certificate checks themselves.

use num_traits::Zero;
use serde_json::json;

use super::{
    bivariate_obligations, dependency_obligation, identity, positivity, run_tasks,
    BivariateHints, Certificate, LemmaError, LemmaId, Obligation, ObligationKind, SliceHint, Task,
};
use crate::elimination::{discriminant, resultant};
use crate::exactnum::{frac, int, Rational};
use crate::multipoly::{poly, MultiPoly, RatFunc, VarTable};
use crate::realroots::{certify_positive, count_real_roots, DomainSpec};
use crate::symmetric::{
    cubic_discriminant, cubic_discriminant_tau_closed_form, is_symmetric, tau_substitute,
    to_elementary,
};

const ST: [&str; 2] = ["sigma", "tau"];
const RK: [&str; 2] = ["r", "k"];
const XYZ: [&str; 3] = ["x", "y", "z"];
const S123: [&str; 3] = ["sigma1", "sigma2", "sigma3"];
const S1T3: [&str; 3] = ["sigma1", "tau", "sigma3"];

const SEXTIC_LHS: &str = "6*tau^6 + 4*(4*sigma^2 + 9)*tau^4 - 2*(10*sigma^4 + 108*sigma^2 + 243)*tau^2 \
     + 7*sigma^6 + 126*sigma^4 + 729*sigma^2 + 1296";
const SEXTIC_SQUARE: &str = "(sigma^3 - 2*sigma*tau^2 + 9*sigma + 2*tau^3)^2";
const INEQEF_P: &str = "3*sigma^6 - 8*sigma^4*tau^2 + 54*sigma^4 - 2*sigma^3*tau^3 \
     + 6*sigma^2*tau^4 - 90*sigma^2*tau^2 + 324*sigma^2 + 4*sigma*tau^5 - 18*sigma*tau^3 \
     + tau^6 + 18*tau^4 - 243*tau^2 + 648";
const INEQEF_DISC_COFACTOR: &str = "12*sigma^12 + 508*sigma^10 + 9034*sigma^8 + 86582*sigma^6 \
     + 471177*sigma^4 + 1376352*sigma^2 + 1679616";

const INEQKS_S: &str = "16*(3*s - 10)*(k - 1)^2*(k^2 + k*s + 1)^2 + 5*(4*k^2 + 4*k*s + s + 4)^3";
const INEQKS_R: &str =
    "16*(3*r + 8)*(k - 1)^2*(k^2 + k*(r + 6) + 1)^2 + 5*(4*k^2 + 4*k*(r + 6) + r + 10)^3";
const INEQKS_DISC_COFACTOR: &str = "432*r^10 + 85536*r^9 + 3803796*r^8 + 82050188*r^7 \
     + 1045887247*r^6 + 8514043782*r^5 + 45438798848*r^4 + 157585300528*r^3 \
     + 338704428144*r^2 + 402431922656*r + 195043474048";
const INEQKS_Q: &str = "14*k^6 + 220*k^5 + 1215*k^4 + 2852*k^3 + 2947*k^2 + 1165*k + 160";
const INEQKS_L_BRACKET: &str = "3136589568*l^5 + 11043385174784*l^4 + 1758965584701728*l^3 \
     + 79189061386916048*l^2 + 1067453304129927340*l + 4262062225186419475";

const ALINEQ2_P: &str = "2*(x*y + y*z + z*x + 2)^3 + (x - y)^2*(x*y + 1)^2 \
     + (x - z)^2*(x*z + 1)^2 + (z - y)^2*(y*z + 1)^2";
const ALINEQ2_ELEM: &str = "-9*sigma3^2 + (-2*sigma1^3 + 10*sigma2*sigma1 + 6*sigma1)*sigma3 \
     - 2*sigma2^3 + sigma1^2*sigma2^2 + 4*sigma2^2 + 2*sigma1^2*sigma2 + 18*sigma2 \
     + 2*sigma1^2 + 16";
const ALINEQ2_SQUARE: &str = "(-5*sigma1*tau^2 + 2*sigma1^3 + 9*sigma1 - 27*sigma3)^2";

const ALINEQ1_G: &str = "x^3*y - 4*x^2*y^2 + 2*x^2 - 2*x*y^3 - 9*x*y - 2*y^2 - 4";
const ALINEQ1_H: &str = "x^4 - 4*x^3*y - 2*x^2*y^2 - 3*x^2 - 6*x*y - 4";
pub const ALINEQ1_RESULTANT: &str = "720*y^4 + 1296*y^2 + 576";

pub fn certify_lemma_ineqef() -> Result<Certificate, LemmaError> {
    super::certify_lemma(LemmaId::Ineqef)
}

pub fn certify_lemma_alineq2() -> Result<Certificate, LemmaError> {
    super::certify_lemma(LemmaId::Alineq2)
}

pub fn certify_lemma_ineqks() -> Result<Certificate, LemmaError> {
    super::certify_lemma(LemmaId::Ineqks)
}

pub fn certify_lemma_alineq1() -> Result<Certificate, LemmaError> {
    super::certify_lemma(LemmaId::Alineq1)
}

/// `P(sigma, tau)` of the sextic lemma, as computed from its definition.
pub fn ineqef_p() -> MultiPoly {
    (&poly(SEXTIC_LHS, &ST) - &poly(SEXTIC_SQUARE, &ST)).scale(&frac(1, 2))
}

/// The displayed discriminant `-102036672 (sigma^2 + 6)^3 * cofactor`.
pub fn ineqef_disc_display() -> MultiPoly {
    poly(&format!("-102036672*(sigma^2 + 6)^3*({INEQEF_DISC_COFACTOR})"), &["sigma"])
}

/// `P(r, k)` after the shift `s = r + 6`.
pub fn ineqks_p() -> MultiPoly {
    poly(INEQKS_R, &RK)
}

pub fn ineqks_disc_display() -> MultiPoly {
    poly(
        &format!("-8388608000*(r + 6)^7*(3*r + 8)^4*(5*r + 38)^3*({INEQKS_DISC_COFACTOR})"),
        &["r"],
    )
}

pub fn ineqks_q() -> MultiPoly {
    poly(INEQKS_Q, &["k"])
}

pub fn ineqks_l_disc_display() -> MultiPoly {
    poly(&format!("-8*({INEQKS_L_BRACKET})"), &["l"])
}

pub fn alineq1_numerators() -> (MultiPoly, MultiPoly) {
    (poly(ALINEQ1_G, &["x", "y"]), poly(ALINEQ1_H, &["x", "y"]))
}

pub fn alineq2_p() -> MultiPoly {
    poly(ALINEQ2_P, &XYZ)
}

pub fn alineq2_elementary_display() -> MultiPoly {
    poly(ALINEQ2_ELEM, &S123)
}

fn margin(desc: &str, anchor: &str, lhs: &Rational, rhs: &Rational) -> Obligation {
    Obligation::new(
        desc,
        ObligationKind::NumericMargin,
        lhs < rhs,
        anchor,
        json!({"lhs": lhs.to_string(), "rhs": rhs.to_string(), "margin": (rhs - lhs).to_string()}),
    )
}

pub(super) fn ineqef() -> Result<Certificate, LemmaError> {
    let anchor = "ineqef";
    let p = poly(INEQEF_P, &ST);
    let disc = discriminant(&p, "tau")?.value;
    let tasks: Vec<Task> = vec![
        Box::new(|| {
            let lhs = p.scale(&int(2));
            let rhs = &poly(SEXTIC_LHS, &ST) - &poly(SEXTIC_SQUARE, &ST);
            Ok(vec![identity(
                "2 P(sigma, tau) = LHS - (sigma^3 - 2 sigma tau^2 + 9 sigma + 2 tau^3)^2",
                anchor,
                ObligationKind::Identity,
                &lhs,
                &rhs,
            )?])
        }),
        Box::new(|| {
            let mut o = identity(
                "disc_tau P equals -102036672 (sigma^2 + 6)^3 (12 sigma^12 + ... + 1679616)",
                anchor,
                ObligationKind::DiscriminantMatch,
                &disc,
                &ineqef_disc_display(),
            )?;
            o.data["degree"] = json!(disc.degree_in("sigma")?);
            Ok(vec![o])
        }),
        Box::new(|| {
            let hints = BivariateHints {
                disc: Some(disc.clone()),
                ..Default::default()
            };
            bivariate_obligations(&p, "sigma", "tau", &DomainSpec::WholeLine, &hints, anchor)
        }),
        Box::new(|| {
            let at = [("sigma", int(1)), ("tau", int(1))];
            let v = p.evaluate(&at)?;
            Ok(vec![margin("spot check P(1, 1) > 0", anchor, &Rational::zero(), &v)])
        }),
    ];
    Ok(Certificate::new("ineqef", run_tasks(tasks)?).with_notes(&[
        "LHS - RHS equals 2 P(sigma, tau) or 2 P(sigma, -tau) depending on the relative sign of \
         sigma^3 - 2 sigma tau^2 + 9 sigma and tau; positivity on the whole plane covers both",
    ]))
}

pub(super) fn ineqks() -> Result<Certificate, LemmaError> {
    let anchor = "ineqks";
    let p = ineqks_p();
    let disc = discriminant(&p, "k")?.value;
    let rv = ["r"];
    let tasks: Vec<Task> = vec![
        Box::new(|| {
            let shifted = poly(INEQKS_S, &["s", "k"]).substitute("s", &poly("r + 6", &rv))?;
            Ok(vec![identity(
                "substituting s = r + 6 gives the displayed P(r, k)",
                anchor,
                ObligationKind::Identity,
                &shifted,
                &p,
            )?])
        }),
        Box::new(|| {
            Ok(vec![identity(
                "disc_k P equals -8388608000 (r + 6)^7 (3r + 8)^4 (5r + 38)^3 (432 r^10 + ...)",
                anchor,
                ObligationKind::DiscriminantMatch,
                &disc,
                &ineqks_disc_display(),
            )?])
        }),
        Box::new(|| {
            let factors = vec![
                (poly("r + 6", &rv), 7),
                (poly("3*r + 8", &rv), 4),
                (poly("5*r + 38", &rv), 3),
                (poly(INEQKS_DISC_COFACTOR, &rv), 1),
            ];
            let hints = BivariateHints {
                disc: Some(disc.clone()),
                disc_factors: Some((int(8388608000), factors)),
                slice: Some(SliceHint {
                    scale: int(32),
                    minorant: ineqks_q(),
                    gap: poly("16*k^2 + 8", &["k"]),
                }),
            };
            bivariate_obligations(&p, "r", "k", &DomainSpec::RayGeq(int(0)), &hints, anchor)
        }),
        Box::new(|| {
            let q = ineqks_q();
            let roots = count_real_roots(&q, "k", &DomainSpec::WholeLine)?;
            Ok(vec![Obligation::new(
                "Q has no real roots (Sturm)",
                ObligationKind::RootCount,
                roots == 0,
                anchor,
                json!({"polynomial": q.to_string(), "domain": "all", "count": roots}),
            )])
        }),
        Box::new(|| {
            let ql = poly(INEQKS_Q, &["l", "k"]) + poly("l", &["l", "k"]);
            let d = discriminant(&ql, "k")?.value;
            let first = identity(
                "disc_k(Q + l) equals -8 (3136589568 l^5 + ... + 4262062225186419475)",
                anchor,
                ObligationKind::DiscriminantMatch,
                &d,
                &ineqks_l_disc_display(),
            )?;
            let bracket = poly(INEQKS_L_BRACKET, &["l"]);
            let c = certify_positive(&bracket, "l", &DomainSpec::RayGeq(int(0)))?;
            let mut second = positivity("the quintic bracket is positive for l >= 0", anchor, &c);
            second.data["constant_term"] = json!(bracket.constant_term().to_string());
            Ok(vec![first, second])
        }),
    ];
    Ok(Certificate::new("ineqks", run_tasks(tasks)?))
}

pub(super) fn alineq2(dep: &Certificate) -> Result<Certificate, LemmaError> {
    let anchor = "alineq2";
    let p = alineq2_p();
    let elem = to_elementary(&p, &XYZ)?;
    let tasks: Vec<Task> = vec![
        Box::new(|| {
            let shown = alineq2_elementary_display();
            let mut o = identity(
                "P(x, y, z) in elementary symmetric polynomials matches the display",
                anchor,
                ObligationKind::Identity,
                &elem.poly,
                &shown,
            )?;
            o.data["symmetric"] = json!(is_symmetric(&p, &XYZ)?);
            o.data["terms"] = json!(shown.num_terms());
            Ok(vec![o])
        }),
        Box::new(|| {
            let tau = tau_substitute(&elem)?;
            let lhs = &tau.poly.scale(&int(81)) + &poly(ALINEQ2_SQUARE, &S1T3);
            let rhs = poly(SEXTIC_LHS, &ST).rename(&ST, &["sigma1", "tau"])?;
            Ok(vec![identity(
                "81 P + (-5 sigma1 tau^2 + 2 sigma1^3 + 9 sigma1 - 27 sigma3)^2 is the sextic form",
                anchor,
                ObligationKind::Identity,
                &lhs,
                &rhs,
            )?])
        }),
        Box::new(|| {
            let d = cubic_discriminant()?;
            let shown = poly(
                "sigma1^2*sigma2^2 - 4*sigma2^3 - 4*sigma1^3*sigma3 - 27*sigma3^2 \
                 + 18*sigma1*sigma2*sigma3",
                &S123,
            );
            let first = identity(
                "disc of l^3 - sigma1 l^2 + sigma2 l - sigma3 in the sigmas",
                anchor,
                ObligationKind::DiscriminantMatch,
                &d,
                &shown,
            )?;
            let e = crate::symmetric::ElemSymExpr {
                poly: d,
                arity: 3,
                source_vars: Vec::new(),
            };
            let second = identity(
                "the same discriminant is (4/27) tau^6 - (1/27)(3 sigma1 tau^2 - sigma1^3 + 27 sigma3)^2",
                anchor,
                ObligationKind::Identity,
                &tau_substitute(&e)?.poly,
                &cubic_discriminant_tau_closed_form(),
            )?;
            Ok(vec![first, second])
        }),
        Box::new(|| {
            let lhs = poly(
                "(sigma1^3 - 2*sigma1*tau^2 + 9*sigma1) - (3*sigma1*tau^2 - sigma1^3 + 27*sigma3)",
                &S1T3,
            );
            let rhs = poly("2*sigma1^3 - 5*sigma1*tau^2 + 9*sigma1 - 27*sigma3", &S1T3);
            Ok(vec![identity(
                "difference of the two bracketed terms is the subtracted square's base",
                anchor,
                ObligationKind::Identity,
                &lhs,
                &rhs,
            )?])
        }),
        Box::new(|| {
            let at = [("x", int(1)), ("y", int(0)), ("z", int(-1))];
            let left = poly("-2*(x*y + y*z + z*x + 2)^3", &XYZ).evaluate(&at)?;
            let right = poly(
                "(x - y)^2*(x*y + 1)^2 + (x - z)^2*(x*z + 1)^2 + (z - y)^2*(y*z + 1)^2",
                &XYZ,
            )
            .evaluate(&at)?;
            Ok(vec![margin("spot check at (1, 0, -1)", anchor, &left, &right)])
        }),
    ];
    let mut obligations = run_tasks(tasks)?;
    obligations.push(dependency_obligation(dep, anchor));
    Ok(Certificate::new("alineq2", obligations).with_notes(&[
        "x, y, z are the real roots of l^3 - sigma1 l^2 + sigma2 l - sigma3, so its \
         discriminant is nonnegative and 2 tau^3 >= |3 sigma1 tau^2 - sigma1^3 + 27 sigma3|",
    ]))
}

pub(super) fn alineq1(dep: &Certificate) -> Result<Certificate, LemmaError> {
    let anchor = "alineq1";
    let xy = ["x", "y"];
    let a = poly("x^2 + 4*x*y + 4", &xy);
    let num = -&a.pow(3);
    let den = poly("(x - y)^2*(1 + x*y)^2", &xy);
    let (g, h) = alineq1_numerators();
    let tasks: Vec<Task> = vec![
        Box::new(|| {
            let cube = RatFunc::from_poly(poly("(x - y)^3*(x*y + 1)^3", &xy));
            let mut out = Vec::new();
            for (v, sign, other, label) in [("x", 1, &g, "x"), ("y", -1, &h, "y")] {
                let d = quotient_rule(&num, &den, v)?;
                let correction = a.pow(2).try_mul(other)?.scale(&int(2 * sign));
                let total = d.try_mul(&cube)?.try_add(&RatFunc::from_poly(correction))?;
                let zero = MultiPoly::zero(total.num.vars());
                out.push(identity(
                    &format!("d(phi)/d{label} has the displayed numerator"),
                    anchor,
                    ObligationKind::Identity,
                    &total.num,
                    &zero,
                )?);
            }
            Ok(out)
        }),
        Box::new(|| {
            let r = resultant(&g, &h, "x")?.value;
            let text = r.to_string();
            Ok(vec![Obligation::new(
                "res_x of the critical-point numerators is 720 y^4 + 1296 y^2 + 576",
                ObligationKind::ResultantMatch,
                text == ALINEQ1_RESULTANT,
                anchor,
                json!({"lhs": text, "rhs": ALINEQ1_RESULTANT}),
            )])
        }),
        Box::new(|| {
            let q = poly(ALINEQ1_RESULTANT, &["y"]);
            let roots = count_real_roots(&q, "y", &DomainSpec::WholeLine)?;
            let c = certify_positive(&q, "y", &DomainSpec::WholeLine)?;
            Ok(vec![
                Obligation::new(
                    "the resultant has no real roots (Sturm)",
                    ObligationKind::RootCount,
                    roots == 0,
                    anchor,
                    json!({"polynomial": ALINEQ1_RESULTANT, "domain": "all", "count": roots}),
                ),
                positivity("the resultant is positive on the whole line", anchor, &c),
            ])
        }),
        Box::new(|| Ok(vec![boundary_reduction(&num, &den, anchor)?])),
        Box::new(|| {
            let ks = ["k", "s"];
            let w = poly("(k - 1)^2*(k^2 + k*s + 1)^2", &ks);
            let phi = RatFunc::new(
                -&poly("(4*k^2 + 4*k*s + s + 4)^3", &ks),
                &poly("s", &ks) * &w,
            )?;
            let bound = RatFunc::new(poly("16*(3*s - 10)", &ks), poly("5*s", &ks))?;
            let bracket = RatFunc::from_poly(poly(INEQKS_S, &["s", "k"]).retable(w.vars())?);
            let scaled = phi
                .try_sub(&bound)?
                .try_mul(&RatFunc::from_poly(&poly("5*s", &ks) * &w))?
                .try_add(&bracket)?;
            let zero = MultiPoly::zero(scaled.num.vars());
            Ok(vec![identity(
                "5 s (k - 1)^2 (k^2 + k s + 1)^2 [phi - 16/5 (3 - 10/s)] + bracket = 0",
                anchor,
                ObligationKind::Identity,
                &scaled.num,
                &zero,
            )?])
        }),
        Box::new(|| {
            let at = [("x", int(1)), ("y", int(2))];
            let s = int(6);
            let left = (-&a.pow(3)).evaluate(&at)?;
            let factor = frac(16, 5) * (int(3) - int(10) / &s);
            let right = &factor * &poly("(x - y)^2*(1 + x*y)^2", &xy).evaluate(&at)?;
            Ok(vec![margin("spot check at (1, 2) with s = 6", anchor, &left, &right)])
        }),
    ];
    let mut obligations = run_tasks(tasks)?;
    obligations.push(dependency_obligation(dep, anchor));
    Ok(Certificate::new("alineq1", obligations).with_notes(&[
        "on (x - y)(1 + xy) = 0 or x^2 + 4xy + 4 = 0 the inequality holds trivially",
        "no interior critical points (empty real variety) puts the maximum of phi on the boundary circle",
        "the boundary point x = 0 is trivial; elsewhere y = k x",
    ]))
}

/// `d(num/den)/dv = (num_v den - num den_v) / den^2`.
fn quotient_rule(num: &MultiPoly, den: &MultiPoly, v: &str) -> Result<RatFunc, LemmaError> {
    let top = num
        .partial_derivative(v)?
        .try_mul(den)?
        .try_sub(&num.try_mul(&den.partial_derivative(v)?)?)?;
    Ok(RatFunc::new(top, den.pow(2))?)
}

/// With `y = k x` and `x^2 = s / (1 + k^2)`, `phi` becomes
/// `-(4k^2 + 4ks + s + 4)^3 / (s (k - 1)^2 (k^2 + ks + 1)^2)`. Both the
/// numerator and denominator are even in `x` after `y = k x`, so `x^2` is
/// renamed `u` and `u = s / (1 + k^2)` is cleared with a common power.
fn boundary_reduction(num: &MultiPoly, den: &MultiPoly, anchor: &str) -> Result<Obligation, LemmaError> {
    let ks = VarTable::new(["k", "s"])?;
    let kx = poly("k*x", &["x", "k"]);
    let sub = |p: &MultiPoly| -> Result<MultiPoly, LemmaError> {
        Ok(p.substitute("y", &kx)?.substitute_square("x", "u")?)
    };
    let (n_u, d_u) = (sub(num)?, sub(den)?);
    let deg = n_u.degree_in("u")?.max(d_u.degree_in("u")?);
    let s = poly("s", &["s"]);
    let one_k2 = poly("1 + k^2", &["k"]);
    let clear = |p: &MultiPoly| -> Result<MultiPoly, LemmaError> {
        Ok(p.substitute_fraction("u", &s, &one_k2, Some(deg))?.retable(&ks)?)
    };
    let reduced = RatFunc::new(clear(&n_u)?, clear(&d_u)?)?;
    let target = RatFunc::new(
        -&poly("(4*k^2 + 4*k*s + s + 4)^3", &["k", "s"]),
        poly("s*(k - 1)^2*(k^2 + k*s + 1)^2", &["k", "s"]),
    )?;
    let ok = reduced.equals(&target)?;
    Ok(Obligation::new(
        "on x^2 + y^2 = s with y = k x, phi = -(4k^2 + 4ks + s + 4)^3 / (s (k - 1)^2 (k^2 + ks + 1)^2)",
        ObligationKind::Identity,
        ok,
        anchor,
        json!({
            "lhs": format!("({})/({})", reduced.num, reduced.den),
            "rhs": format!("({})/({})", target.num, target.den),
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ineqef_p_matches_definition() {
        assert_eq!(ineqef_p(), poly(INEQEF_P, &ST));
        let view = ineqef_p().univariate_view("tau").unwrap();
        assert_eq!(view.degree(), 6);
        assert_eq!(view.leading_coeff().as_constant(), Some(int(1)));
        let slice = ineqef_p().specialize("sigma", &int(0)).unwrap();
        assert_eq!(slice.to_string(), "tau^6 + 18*tau^4 - 243*tau^2 + 648");
    }

    #[test]
    fn ineqks_slice_gap() {
        let slice = ineqks_p().specialize("r", &int(0)).unwrap();
        let gap = &slice - &ineqks_q().scale(&int(32));
        assert_eq!(gap.to_string(), "16*k^2 + 8");
        let lead = ineqks_p().univariate_view("k").unwrap();
        assert_eq!(lead.leading_coeff().to_string(), "48*r + 448");
    }

    #[test]
    fn alineq2_display_term_count() {
        assert_eq!(alineq2_elementary_display().num_terms(), 11);
    }

    #[test]
    fn boundary_reduction_detects_a_wrong_target() {
        let xy = ["x", "y"];
        let num = -&poly("(x^2 + 4*x*y + 4)^3", &xy);
        let den = poly("(x - y)^2*(1 + x*y)^2", &xy);
        assert!(boundary_reduction(&num, &den, "").unwrap().passed());
        let wrong = poly("(x - y)^2*(1 + x*y)^2 + 1", &xy);
        assert!(!boundary_reduction(&num, &wrong, "").unwrap().passed());
    }
}
