//! Machine-checked certificates for the four algebraic lemmas, the
//! bivariate positivity pattern they share, and an exact sampling oracle
//! for the eigenvalue inequalities built on them.
//!
//! A [`Certificate`] is a flat list of obligations. Each obligation is
//! decided exactly and carries the data needed to re-check it by hand
//! (canonical polynomial text, sample values, root counts).

use std::collections::BTreeMap;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::elimination::{discriminant, ElimError};
use crate::exactnum::Rational;
use crate::multipoly::{MultiPoly, PolyError, VarTable};
use crate::realroots::{
    certify_positive, certify_positive_product, DomainSpec, PositivityCert, RootError,
};
use crate::symmetric::SymError;

mod oracle;
mod proofs;

pub use crate::realroots::Status;
pub use oracle::{check_spectrum, oracle_c, sample_spectra, OracleReport, SpectralSample, SpectrumCheck};
pub use proofs::{
    alineq1_numerators, alineq2_elementary_display, alineq2_p, certify_lemma_alineq1,
    certify_lemma_alineq2, certify_lemma_ineqef, certify_lemma_ineqks, ineqef_disc_display,
    ineqef_p, ineqks_disc_display, ineqks_l_disc_display, ineqks_p, ineqks_q, ALINEQ1_RESULTANT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("pattern inapplicable: {0}")]
    PatternInapplicable(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown lemma {0:?}")]
    UnknownLemma(String),
    #[error("lemma dependencies contain a cycle")]
    DependencyCycle,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObligationKind {
    Identity,
    ResultantMatch,
    DiscriminantMatch,
    Positivity,
    RootCount,
    NumericMargin,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Obligation {
    pub desc: String,
    pub kind: ObligationKind,
    pub status: Status,
    pub paper_anchor: String,
    pub data: Value,
}

impl Obligation {
    pub fn new(
        desc: impl Into<String>,
        kind: ObligationKind,
        ok: bool,
        anchor: impl Into<String>,
        data: Value,
    ) -> Self {
        Obligation {
            desc: desc.into(),
            kind,
            status: Status::from_bool(ok),
            paper_anchor: anchor.into(),
            data,
        }
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    fn anchored(mut self, anchor: &str) -> Self {
        self.paper_anchor = anchor.to_string();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub obligations: Vec<Obligation>,
    pub overall: Status,
    /// Steps taken as given (prose-level reductions), kept for the reader.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(name: impl Into<String>, obligations: Vec<Obligation>) -> Self {
        let overall = Status::from_bool(obligations.iter().all(Obligation::passed));
        Certificate {
            name: name.into(),
            obligations,
            overall,
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: &[&str]) -> Self {
        self.notes.extend(notes.iter().map(|s| s.to_string()));
        self
    }

    pub fn passed(&self) -> bool {
        self.overall.passed()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serializes")
    }

    /// One line per obligation plus a verdict line.
    pub fn summary(&self) -> String {
        let mut out = format!("certificate {}\n", self.name);
        for (i, o) in self.obligations.iter().enumerate() {
            let tag = if o.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("  [{tag}] {:>2}. ({:?}) {}\n", i + 1, o.kind, o.desc));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("overall: {verdict}\n"));
        out
    }
}

/// A unit of certificate work. Tasks run in parallel; their obligations are
/// concatenated in task order, so the result does not depend on scheduling.
pub(crate) type Task<'a> = Box<dyn Fn() -> Result<Vec<Obligation>, LemmaError> + Send + Sync + 'a>;

pub(crate) fn run_tasks(tasks: Vec<Task<'_>>) -> Result<Vec<Obligation>, LemmaError> {
    let parts: Vec<Vec<Obligation>> = tasks
        .par_iter()
        .map(|t| t())
        .collect::<Result<_, _>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// Passes iff `p - q` is the zero polynomial. Both sides are recorded.
pub fn check_identity(p: &MultiPoly, q: &MultiPoly) -> Result<Obligation, LemmaError> {
    let diff = p.try_sub(q)?;
    Ok(Obligation::new(
        "polynomial identity",
        ObligationKind::Identity,
        diff.is_zero(),
        "",
        json!({"lhs": p.to_string(), "rhs": q.to_string(), "difference": diff.to_string()}),
    ))
}

pub(crate) fn identity(
    desc: &str,
    anchor: &str,
    kind: ObligationKind,
    p: &MultiPoly,
    q: &MultiPoly,
) -> Result<Obligation, LemmaError> {
    let mut o = check_identity(p, q)?.anchored(anchor);
    o.desc = desc.to_string();
    o.kind = kind;
    Ok(o)
}

pub(crate) fn positivity(
    desc: &str,
    anchor: &str,
    cert: &PositivityCert,
) -> Obligation {
    Obligation::new(desc, ObligationKind::Positivity, cert.passed(), anchor, cert.to_json())
}

/// Replaces the generic slice check of the bivariate pattern: the slice
/// `p(outer = a, inner)` is written as `scale * minorant + gap` with `gap`
/// and `minorant` each certified positive on the line.
#[derive(Debug, Clone)]
pub struct SliceHint {
    pub scale: Rational,
    pub minorant: MultiPoly,
    pub gap: MultiPoly,
}

/// Optional extra knowledge for [`certify_bivariate_positive`].
#[derive(Debug, Clone, Default)]
pub struct BivariateHints {
    /// Already computed `disc_inner(p)`, to avoid doing the work twice.
    pub disc: Option<MultiPoly>,
    /// Factorization of the sign-normalized discriminant:
    /// `(constant, [(factor, exponent)])`.
    pub disc_factors: Option<(Rational, Vec<(MultiPoly, u32)>)>,
    pub slice: Option<SliceHint>,
}

/// Certifies `p(outer, inner) > 0` on `outer_dom x R`.
///
/// For an even degree `2m` in `inner`, a polynomial with no real roots has
/// discriminant of sign `(-1)^m`. So it is enough to show: the leading
/// coefficient in `inner` is positive on the domain; `(-1)^m disc` is
/// positive on the domain (the root configuration cannot change); and one
/// slice has no real roots and is positive.
pub fn certify_bivariate_positive(
    p: &MultiPoly,
    outer: &str,
    inner: &str,
    outer_dom: &DomainSpec,
    hints: &BivariateHints,
) -> Result<Certificate, LemmaError> {
    let obligations = bivariate_obligations(p, outer, inner, outer_dom, hints, "")?;
    Ok(Certificate::new(format!("bivariate-positive({outer}, {inner})"), obligations))
}

pub(crate) fn bivariate_obligations(
    p: &MultiPoly,
    outer: &str,
    inner: &str,
    outer_dom: &DomainSpec,
    hints: &BivariateHints,
    anchor: &str,
) -> Result<Vec<Obligation>, LemmaError> {
    let table = VarTable::new([outer, inner])?;
    let p = p.retable(&table).map_err(|_| {
        LemmaError::PatternInapplicable(format!("expected a polynomial in {outer} and {inner}"))
    })?;
    let view = p.univariate_view(inner)?;
    let deg = view.degree();
    if deg == 0 || deg % 2 == 1 {
        return Err(LemmaError::PatternInapplicable(format!(
            "degree {deg} in {inner} is not a positive even number"
        )));
    }
    let outer_only = VarTable::new([outer])?;

    let lead = view.leading_coeff().retable(&outer_only)?;
    let lead_cert = certify_positive(&lead, outer, outer_dom)?;
    let a = positivity(
        &format!("leading coefficient in {inner} is positive on {outer_dom}"),
        anchor,
        &lead_cert,
    );

    let disc = match &hints.disc {
        Some(d) => d.clone(),
        None => discriminant(&p, inner)?.value,
    }
    .retable(&outer_only)?;
    let half = deg / 2;
    let signed = if half % 2 == 1 { -&disc } else { disc.clone() };
    let sign_word = if half % 2 == 1 { "-disc" } else { "disc" };
    let disc_cert = match &hints.disc_factors {
        Some((c, fs)) => certify_positive_product(&signed, outer, outer_dom, c, fs)?,
        None => certify_positive(&signed, outer, outer_dom)?,
    };
    let b = positivity(
        &format!("{sign_word}_{inner}(p) is positive on {outer_dom}, so the discriminant never vanishes"),
        anchor,
        &disc_cert,
    );

    let at = outer_dom.sample_point();
    let inner_only = VarTable::new([inner])?;
    let slice = p.specialize(outer, &at)?.retable(&inner_only)?;
    let mut out = vec![a, b];
    match &hints.slice {
        None => {
            let c = certify_positive(&slice, inner, &DomainSpec::WholeLine)?;
            out.push(positivity(
                &format!("slice {outer} = {at} is positive on the whole line"),
                anchor,
                &c,
            ));
        }
        Some(h) => {
            let rhs = &h.minorant.retable(&inner_only)?.scale(&h.scale) + &h.gap.retable(&inner_only)?;
            out.push(identity(
                &format!("slice {outer} = {at} splits as {} * minorant + gap", h.scale),
                anchor,
                ObligationKind::Identity,
                &slice,
                &rhs,
            )?);
            let g = certify_positive(&h.gap, inner, &DomainSpec::WholeLine)?;
            out.push(positivity("gap is positive on the whole line", anchor, &g));
            let m = certify_positive(&h.minorant, inner, &DomainSpec::WholeLine)?;
            out.push(positivity("minorant is positive on the whole line", anchor, &m));
            out.push(Obligation::new(
                "slice scale factor is positive",
                ObligationKind::Positivity,
                h.scale.is_positive(),
                anchor,
                json!({"scale": h.scale.to_string()}),
            ));
        }
    }
    Ok(out)
}

/// The four lemmas, in an order compatible with their dependencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    Ineqef,
    Alineq2,
    Ineqks,
    Alineq1,
}

impl LemmaId {
    pub const ALL: [LemmaId; 4] = [LemmaId::Ineqef, LemmaId::Alineq2, LemmaId::Ineqks, LemmaId::Alineq1];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Ineqef => "ineqef",
            LemmaId::Alineq2 => "alineq2",
            LemmaId::Ineqks => "ineqks",
            LemmaId::Alineq1 => "alineq1",
        }
    }

    pub fn parse(name: &str) -> Result<Self, LemmaError> {
        Self::ALL
            .into_iter()
            .find(|l| l.name() == name.to_ascii_lowercase())
            .ok_or_else(|| LemmaError::UnknownLemma(name.to_string()))
    }

    pub fn dependencies(self) -> &'static [LemmaId] {
        match self {
            LemmaId::Alineq2 => &[LemmaId::Ineqef],
            LemmaId::Alineq1 => &[LemmaId::Ineqks],
            _ => &[],
        }
    }
}

/// Kahn's algorithm over [`LemmaId::dependencies`]; ties are broken by the
/// declaration order so the result is fixed.
pub fn dependency_order(ids: &[LemmaId]) -> Result<Vec<LemmaId>, LemmaError> {
    dependency_order_with(ids, |l| l.dependencies().to_vec())
}

pub(crate) fn dependency_order_with<F>(ids: &[LemmaId], deps: F) -> Result<Vec<LemmaId>, LemmaError>
where
    F: Fn(LemmaId) -> Vec<LemmaId>,
{
    // Close the requested set under dependencies first.
    let mut wanted: Vec<LemmaId> = ids.to_vec();
    let mut i = 0;
    while i < wanted.len() {
        for d in deps(wanted[i]) {
            if !wanted.contains(&d) {
                wanted.push(d);
            }
        }
        i += 1;
    }
    wanted.sort();
    let mut done: Vec<LemmaId> = Vec::new();
    while done.len() < wanted.len() {
        let next = wanted
            .iter()
            .find(|l| !done.contains(l) && deps(**l).iter().all(|d| done.contains(d)))
            .copied()
            .ok_or(LemmaError::DependencyCycle)?;
        done.push(next);
    }
    Ok(done)
}

/// Runs the requested lemmas and their dependencies, each exactly once.
pub fn certify_lemmas(ids: &[LemmaId]) -> Result<Vec<Certificate>, LemmaError> {
    let order = dependency_order(ids)?;
    let mut cache: BTreeMap<LemmaId, Certificate> = BTreeMap::new();
    for id in order {
        let deps: Vec<&Certificate> = id.dependencies().iter().map(|d| &cache[d]).collect();
        let cert = certify_with_deps(id, &deps)?;
        cache.insert(id, cert);
    }
    Ok(ids.iter().map(|id| cache[id].clone()).collect())
}

pub fn certify_lemma(id: LemmaId) -> Result<Certificate, LemmaError> {
    Ok(certify_lemmas(&[id])?.remove(0))
}

fn certify_with_deps(id: LemmaId, deps: &[&Certificate]) -> Result<Certificate, LemmaError> {
    match id {
        LemmaId::Ineqef => proofs::ineqef(),
        LemmaId::Ineqks => proofs::ineqks(),
        LemmaId::Alineq2 => proofs::alineq2(deps[0]),
        LemmaId::Alineq1 => proofs::alineq1(deps[0]),
    }
}

pub(crate) fn dependency_obligation(dep: &Certificate, anchor: &str) -> Obligation {
    Obligation::new(
        format!("depends on certificate {}", dep.name),
        ObligationKind::Positivity,
        dep.passed(),
        anchor,
        json!({"dependency": dep.name, "overall": dep.overall}),
    )
}
