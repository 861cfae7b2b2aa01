//! Sturm sequences, real-root counting and positivity certificates for
//! univariate rational polynomials.
//!
//! Root counts are for *distinct* real roots in a closed domain. Sign
//! variations are evaluated on the Sturm chain divided by its last entry (the
//! gcd of `p` and `p'`), which is a Sturm chain of the squarefree part of `p`;
//! with that chain `V(a) - V(b)` counts roots in the half-open `(a, b]` even
//! when `a` or `b` is itself a root, and a closed left endpoint is added back
//! by direct evaluation. Signs at infinity come from the leading coefficient
//! and degree parity.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::exactnum::Rational;
use crate::multipoly::{MultiPoly, PolyError, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("the zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("segment endpoints out of order: {0} > {1}")]
    BadSegment(String, String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainSpec {
    WholeLine,
    /// `[a, +inf)`
    RayGeq(Rational),
    /// `(-inf, b]`
    RayLeq(Rational),
    /// `[a, b]`, `a <= b`
    Segment(Rational, Rational),
}

impl DomainSpec {
    pub fn segment(a: Rational, b: Rational) -> Result<Self, RootError> {
        if a > b {
            return Err(RootError::BadSegment(a.to_string(), b.to_string()));
        }
        Ok(DomainSpec::Segment(a, b))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            DomainSpec::WholeLine => true,
            DomainSpec::RayGeq(a) => x >= a,
            DomainSpec::RayLeq(b) => x <= b,
            DomainSpec::Segment(a, b) => a <= x && x <= b,
        }
    }

    /// A fixed point of the domain used for the sign sample.
    pub fn sample_point(&self) -> Rational {
        match self {
            DomainSpec::WholeLine => Rational::zero(),
            DomainSpec::RayGeq(a) | DomainSpec::Segment(a, _) => a.clone(),
            DomainSpec::RayLeq(b) => b.clone(),
        }
    }
}

impl std::fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainSpec::WholeLine => write!(f, "all"),
            DomainSpec::RayGeq(a) => write!(f, "geq {a}"),
            DomainSpec::RayLeq(b) => write!(f, "leq {b}"),
            DomainSpec::Segment(a, b) => write!(f, "{a},{b}"),
        }
    }
}

/// `p0 = p, p1 = p', p(i+1) = -rem(p(i-1), p(i))`, stopped before the first
/// zero remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmSeq {
    pub var: String,
    pub polys: Vec<MultiPoly>,
    chain: Vec<UniPoly>,
    reduced: Vec<UniPoly>,
}

impl SturmSeq {
    /// The last nonzero entry is constant exactly when `p` is squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.chain.last().and_then(UniPoly::degree) == Some(0)
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn source(&self) -> &UniPoly {
        &self.chain[0]
    }

    /// Sign variations of the reduced chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        count_variations(self.reduced.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.reduced.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Distinct real roots in the closed domain.
    pub fn count(&self, dom: &DomainSpec) -> usize {
        let at_root = |x: &Rational| usize::from(self.source().sign_at(x) == 0);
        match dom {
            DomainSpec::WholeLine => {
                self.variations_at_infinity(false) - self.variations_at_infinity(true)
            }
            DomainSpec::RayGeq(a) => {
                self.variations_at(a) - self.variations_at_infinity(true) + at_root(a)
            }
            DomainSpec::RayLeq(b) => self.variations_at_infinity(false) - self.variations_at(b),
            DomainSpec::Segment(a, b) => {
                self.variations_at(a) - self.variations_at(b) + at_root(a)
            }
        }
    }

    /// Roots in the half-open interval `(a, b]`.
    fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

pub fn sturm_sequence(p: &MultiPoly, v: &str) -> Result<SturmSeq, RootError> {
    let u = UniPoly::from_multi(p, v)?;
    if u.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let chain = sturm_chain(&u);
    let last = chain.last().unwrap().clone();
    let reduced = if last.degree() == Some(0) {
        chain.clone()
    } else {
        chain.iter().map(|q| q.div_rem(&last).0).collect()
    };
    Ok(SturmSeq {
        var: v.to_string(),
        polys: chain.iter().map(|q| q.to_multi(v)).collect(),
        chain,
        reduced,
    })
}

fn sturm_chain(u: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![u.clone()];
    let d = u.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

pub fn count_real_roots(p: &MultiPoly, v: &str, dom: &DomainSpec) -> Result<usize, RootError> {
    Ok(sturm_sequence(p, v)?.count(dom))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositivityMethod {
    SturmNoRootsSample,
    NonnegCoeffsRay,
    FactorProduct,
}

impl PositivityMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            PositivityMethod::SturmNoRootsSample => "sturm-no-roots+sample",
            PositivityMethod::NonnegCoeffsRay => "nonneg-coeffs-ray",
            PositivityMethod::FactorProduct => "factor-product",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

/// Evidence that a univariate polynomial is strictly positive on a domain,
/// or a failed attempt with a witness.
#[derive(Debug, Clone)]
pub struct PositivityCert {
    pub subject: MultiPoly,
    pub var: String,
    pub domain: DomainSpec,
    pub method: Option<PositivityMethod>,
    /// Sample points and the exact values there.
    pub witnesses: Vec<(Rational, Rational)>,
    pub root_count: Option<usize>,
    /// For a failure caused by a root: an interval `[lo, hi]` containing one.
    pub root_interval: Option<(Rational, Rational)>,
    pub factors: Vec<PositivityCert>,
    pub note: String,
    pub status: Status,
}

impl PositivityCert {
    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "subject": self.subject.to_string(),
            "var": self.var,
            "domain": self.domain.to_string(),
            "method": self.method.map(|m| m.as_str()),
            "witnesses": self.witnesses.iter()
                .map(|(x, y)| json!({"at": x.to_string(), "value": y.to_string()}))
                .collect::<Vec<_>>(),
            "status": self.status,
        });
        if let Some(c) = self.root_count {
            v["root_count"] = json!(c);
        }
        if let Some((lo, hi)) = &self.root_interval {
            v["root_interval"] = json!([lo.to_string(), hi.to_string()]);
        }
        if !self.factors.is_empty() {
            v["factors"] = Value::Array(self.factors.iter().map(|f| f.to_json()).collect());
        }
        if !self.note.is_empty() {
            v["note"] = json!(self.note);
        }
        v
    }

    fn new(subject: &MultiPoly, v: &str, dom: &DomainSpec) -> Self {
        PositivityCert {
            subject: subject.clone(),
            var: v.to_string(),
            domain: dom.clone(),
            method: None,
            witnesses: Vec::new(),
            root_count: None,
            root_interval: None,
            factors: Vec::new(),
            note: String::new(),
            status: Status::Fail,
        }
    }
}

/// Certifies `p > 0` on the domain.
///
/// On rays the shifted coefficient test is tried first; otherwise (or if it
/// is inconclusive) a Sturm count of zero roots plus one positive sample is
/// required. Failure is a value: the certificate then carries either a root
/// interval or the nonpositive sample.
pub fn certify_positive(
    p: &MultiPoly,
    v: &str,
    dom: &DomainSpec,
) -> Result<PositivityCert, RootError> {
    let u = UniPoly::from_multi(p, v)?;
    let mut cert = PositivityCert::new(p, v, dom);
    if u.is_zero() {
        cert.note = "zero polynomial".into();
        return Ok(cert);
    }
    if let Some(shifted) = ray_normal_form(&u, dom) {
        if nonneg_with_positive_constant(&shifted) {
            let a = dom.sample_point();
            cert.method = Some(PositivityMethod::NonnegCoeffsRay);
            cert.witnesses.push((a.clone(), u.eval(&a)));
            cert.status = Status::Pass;
            return Ok(cert);
        }
    }
    let seq = sturm_sequence(p, v)?;
    let roots = seq.count(dom);
    cert.root_count = Some(roots);
    let a = dom.sample_point();
    let value = u.eval(&a);
    cert.witnesses.push((a, value.clone()));
    if roots == 0 {
        cert.method = Some(PositivityMethod::SturmNoRootsSample);
        cert.status = Status::from_bool(value.is_positive());
        if !value.is_positive() {
            cert.note = "no roots on the domain but the sample is negative".into();
        }
        return Ok(cert);
    }
    cert.root_interval = Some(isolate_a_root(&seq, dom));
    cert.note = format!("{roots} real root(s) in the domain");
    Ok(cert)
}

/// Certifies `p > 0` from a claimed factorization
/// `p = constant * prod(factor_i ^ e_i)`: the expansion must match `p`
/// exactly, the constant must be positive and every factor must itself be
/// certified positive on the domain.
pub fn certify_positive_product(
    p: &MultiPoly,
    v: &str,
    dom: &DomainSpec,
    constant: &Rational,
    factors: &[(MultiPoly, u32)],
) -> Result<PositivityCert, RootError> {
    let mut cert = PositivityCert::new(p, v, dom);
    cert.method = Some(PositivityMethod::FactorProduct);
    let mut expanded = MultiPoly::constant(p.vars(), constant.clone());
    for (f, e) in factors {
        expanded = expanded.try_mul(&f.pow(*e))?;
    }
    let matches = expanded.try_sub(p)?.is_zero();
    let mut all_pass = matches && constant.is_positive();
    for (f, _) in factors {
        let sub = certify_positive(f, v, dom)?;
        all_pass &= sub.passed();
        cert.factors.push(sub);
    }
    if !matches {
        cert.note = "claimed factorization does not expand to the subject".into();
    } else if !constant.is_positive() {
        cert.note = "constant factor is not positive".into();
    }
    cert.witnesses.push((Rational::zero(), constant.clone()));
    cert.status = Status::from_bool(all_pass);
    Ok(cert)
}

/// `p` rewritten on `[0, inf)`: `p(a + t)` for `[a, inf)`, `p(b - t)` for
/// `(-inf, b]`.
fn ray_normal_form(u: &UniPoly, dom: &DomainSpec) -> Option<UniPoly> {
    match dom {
        DomainSpec::RayGeq(a) => Some(u.shift(a)),
        DomainSpec::RayLeq(b) => Some(u.reflect().shift(&-b)),
        _ => None,
    }
}

fn nonneg_with_positive_constant(u: &UniPoly) -> bool {
    let c = u.coeffs();
    !c.is_empty() && c[0].is_positive() && c.iter().all(|x| !x.is_negative())
}

/// Bisects down to a short interval `[lo, hi]` that contains a root.
fn isolate_a_root(seq: &SturmSeq, dom: &DomainSpec) -> (Rational, Rational) {
    let src = seq.source();
    let bound = src.cauchy_bound();
    let (mut lo, mut hi) = match dom {
        DomainSpec::WholeLine => (-&bound, bound),
        DomainSpec::RayGeq(a) => (a.clone(), bound.max(a.clone())),
        DomainSpec::RayLeq(b) => ((-&bound).min(b.clone()), b.clone()),
        DomainSpec::Segment(a, b) => (a.clone(), b.clone()),
    };
    if src.sign_at(&lo) == 0 {
        return (lo.clone(), lo);
    }
    let two = Rational::from_integer(2.into());
    for _ in 0..64 {
        if seq.count_half_open(&lo, &hi) == 0 {
            break;
        }
        let mid = (&lo + &hi) / &two;
        if src.sign_at(&mid) == 0 {
            return (mid.clone(), mid);
        }
        if seq.count_half_open(&lo, &mid) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if (&hi - &lo) < Rational::new(One::one(), 1_000_000.into()) {
            break;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int};
    use crate::multipoly::poly;

    fn chain_text(p: &str, v: &str) -> Vec<String> {
        sturm_sequence(&poly(p, &[v]), v)
            .unwrap()
            .polys
            .iter()
            .map(|q| q.to_string())
            .collect()
    }

    #[test]
    fn sturm_chains() {
        assert_eq!(chain_text("x^2 + 1", "x"), ["x^2 + 1", "2*x", "-1"]);
        assert_eq!(chain_text("x^3 - x", "x"), ["x^3 - x", "3*x^2 - 1", "2/3*x", "1"]);
        let sq = sturm_sequence(&poly("x^2", &["x"]), "x").unwrap();
        assert_eq!(sq.len(), 2);
        assert!(!sq.is_squarefree());
        assert!(sturm_sequence(&poly("x^3 - x", &["x"]), "x").unwrap().is_squarefree());
    }

    #[test]
    fn sturm_errors() {
        assert_eq!(
            sturm_sequence(&poly("0", &["x"]), "x"),
            Err(RootError::ZeroPolynomial)
        );
        assert!(matches!(
            sturm_sequence(&poly("x*y", &["x", "y"]), "x"),
            Err(RootError::Poly(PolyError::NotUnivariate { .. }))
        ));
        assert!(DomainSpec::segment(int(2), int(1)).is_err());
    }

    #[test]
    fn counting_examples() {
        let all = DomainSpec::WholeLine;
        assert_eq!(count_real_roots(&poly("x^2 + 1", &["x"]), "x", &all).unwrap(), 0);
        let seg = DomainSpec::segment(int(-2), int(2)).unwrap();
        assert_eq!(count_real_roots(&poly("x^3 - x", &["x"]), "x", &seg).unwrap(), 3);
        let q = poly("720*y^4 + 1296*y^2 + 576", &["y"]);
        assert_eq!(count_real_roots(&q, "y", &all).unwrap(), 0);
    }

    #[test]
    fn endpoints_that_are_roots() {
        let p = poly("x^3 - x", &["x"]);
        let seg = DomainSpec::segment(int(-1), int(1)).unwrap();
        assert_eq!(count_real_roots(&p, "x", &seg).unwrap(), 3);
        let seg = DomainSpec::segment(int(0), int(0)).unwrap();
        assert_eq!(count_real_roots(&p, "x", &seg).unwrap(), 1);
        assert_eq!(count_real_roots(&p, "x", &DomainSpec::RayGeq(int(0))).unwrap(), 2);
        assert_eq!(count_real_roots(&p, "x", &DomainSpec::RayLeq(int(0))).unwrap(), 2);
        // Multiple roots are counted once.
        let p = poly("(x - 1)^3*(x + 2)^2", &["x"]);
        assert_eq!(count_real_roots(&p, "x", &DomainSpec::WholeLine).unwrap(), 2);
        let seg = DomainSpec::segment(int(1), int(5)).unwrap();
        assert_eq!(count_real_roots(&p, "x", &seg).unwrap(), 1);
    }

    #[test]
    fn positivity_examples() {
        let u = poly("u^3 + 18*u^2 - 243*u + 648", &["u"]);
        let c = certify_positive(&u, "u", &DomainSpec::RayGeq(int(0))).unwrap();
        assert!(c.passed());
        assert_eq!(c.method, Some(PositivityMethod::SturmNoRootsSample));
        assert_eq!(c.witnesses[0], (int(0), int(648)));

        let big = poly(
            "432*r^10 + 85536*r^9 + 3803796*r^8 + 82050188*r^7 + 1045887247*r^6 \
             + 8514043782*r^5 + 45438798848*r^4 + 157585300528*r^3 \
             + 338704428144*r^2 + 402431922656*r + 195043474048",
            &["r"],
        );
        let c = certify_positive(&big, "r", &DomainSpec::RayGeq(int(0))).unwrap();
        assert!(c.passed());
        assert_eq!(c.method, Some(PositivityMethod::NonnegCoeffsRay));

        let c = certify_positive(&poly("x^2 - 1", &["x"]), "x", &DomainSpec::WholeLine).unwrap();
        assert!(!c.passed());
        let (lo, hi) = c.root_interval.clone().unwrap();
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        assert!(lo == hi && p.eval(&lo).is_zero() || p.sign_at(&lo) * p.sign_at(&hi) <= 0);
    }

    #[test]
    fn ray_shift_and_reflection() {
        // 3n^2 - 20 is positive on [3, inf) but has a negative coefficient.
        let p = poly("3*n^2 - 20", &["n"]);
        let c = certify_positive(&p, "n", &DomainSpec::RayGeq(int(3))).unwrap();
        assert_eq!(c.method, Some(PositivityMethod::NonnegCoeffsRay));
        let c = certify_positive(&p, "n", &DomainSpec::RayLeq(int(-3))).unwrap();
        assert!(c.passed());
        let c = certify_positive(&p, "n", &DomainSpec::RayGeq(int(2))).unwrap();
        assert!(!c.passed());
    }

    #[test]
    fn product_certificates() {
        let v = ["r"];
        let p = poly("7*(r + 6)^3*(3*r + 8)^2", &v);
        let factors = [(poly("r + 6", &v), 3), (poly("3*r + 8", &v), 2)];
        let c = certify_positive_product(&p, "r", &DomainSpec::RayGeq(int(0)), &int(7), &factors)
            .unwrap();
        assert!(c.passed());
        assert_eq!(c.factors.len(), 2);
        let c = certify_positive_product(&p, "r", &DomainSpec::RayGeq(int(0)), &int(6), &factors)
            .unwrap();
        assert!(!c.passed());
        let c =
            certify_positive_product(&p, "r", &DomainSpec::RayGeq(frac(-7, 1)), &int(7), &factors)
                .unwrap();
        assert!(!c.passed());
    }
}
