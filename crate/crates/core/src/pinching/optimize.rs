//! Search for the smallest `eta` whose bracket can be certified negative.
//!
//! For a candidate `eta` the `(eps, sig, kap)` grid is scored in floating
//! point; points that look feasible are snapped to small rationals and
//! certified exactly, in grid order, and the first one that passes wins.
//! If no grid point looks feasible, a compass search starting from the
//! best grid point gets one more chance. `eta` itself is bisected between
//! a known feasible start and a lower limit.

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use super::{certify_negative_from, coefficients_f64, NegativityCert, PinchError, PinchingParams};
use crate::exactnum::{best_approximation, int, parse_rational, snap_f64, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptimizeError {
    #[error("infeasible under config")]
    Infeasible,
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Pinch(#[from] PinchError),
}

/// `[lo, hi, steps]`: `steps` evenly spaced points including both ends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid(pub f64, pub f64, pub usize);

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let Grid(lo, hi, steps) = *self;
        match steps {
            0 => Vec::new(),
            1 => vec![lo],
            _ => (0..steps).map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64).collect(),
        }
    }

    fn spacing(&self) -> f64 {
        if self.2 > 1 {
            (self.1 - self.0).abs() / (self.2 - 1) as f64
        } else {
            self.0.abs() / 10.0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    #[serde(serialize_with = "rat_out", deserialize_with = "rat_in")]
    pub eta_start: Rational,
    #[serde(serialize_with = "rat_out", deserialize_with = "rat_in")]
    pub eta_min: Rational,
    pub bisection_steps: u32,
    pub eps_grid: Grid,
    pub sig_grid: Grid,
    pub kap_grid: Grid,
    pub snap_denominator_limit: u64,
    #[serde(default = "default_n_min")]
    pub n_min: i64,
}

fn default_n_min() -> i64 {
    6
}

fn rat_out<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Accepts `"1793/100"`, `"17.93"`, `17.93` or `18`. JSON numbers are read
/// from their decimal text, so `17.93` means exactly `1793/100`.
fn rat_in<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let v = Value::deserialize(d)?;
    let text = match &v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => return Err(serde::de::Error::custom(format!("expected a rational, got {other}"))),
    };
    parse_rational(&text).map_err(serde::de::Error::custom)
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            eta_start: int(18),
            eta_min: int(17),
            bisection_steps: 8,
            eps_grid: Grid(0.03, 0.08, 11),
            sig_grid: Grid(0.3, 0.45, 11),
            kap_grid: Grid(0.03, 0.06, 11),
            snap_denominator_limit: 10_000,
            n_min: 6,
        }
    }
}

impl SearchConfig {
    pub fn from_json(text: &str) -> Result<Self, OptimizeError> {
        serde_json::from_str(text).map_err(|e| OptimizeError::InvalidConfig(e.to_string()))
    }

    fn validate(&self) -> Result<(), OptimizeError> {
        if self.n_min < 6 {
            return Err(OptimizeError::InvalidConfig("n_min must be at least 6".into()));
        }
        if !self.eta_min.is_positive() || self.eta_min > self.eta_start {
            return Err(OptimizeError::InvalidConfig("need 0 < eta_min <= eta_start".into()));
        }
        if self.snap_denominator_limit == 0 {
            return Err(OptimizeError::InvalidConfig("snap_denominator_limit must be positive".into()));
        }
        Ok(())
    }
}

/// One tested value of `eta`.
#[derive(Debug, Clone)]
pub struct EtaStep {
    pub eta: Rational,
    pub feasible: bool,
}

#[derive(Debug, Clone)]
pub struct OptimizeResult {
    pub best_eta: Rational,
    pub params: PinchingParams,
    pub cert: NegativityCert,
    /// Every `eta` tried, in order.
    pub trace: Vec<EtaStep>,
    /// `(eta, n_min / eta)` for each accepted `eta`; `eta` strictly decreases.
    pub accepted: Vec<(Rational, Rational)>,
}

impl OptimizeResult {
    pub fn to_json(&self) -> Value {
        json!({
            "best_eta": self.best_eta.to_string(),
            "best_eta_decimal": to_f64(&self.best_eta),
            "params": self.params.to_json(),
            "certificate": self.cert.to_json(),
            "trace": self.trace.iter()
                .map(|s| json!({"eta": s.eta.to_string(), "feasible": s.feasible}))
                .collect::<Vec<_>>(),
            "accepted": self.accepted.iter()
                .map(|(e, w)| json!({"eta": e.to_string(), "width": w.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

pub fn optimize_eta(cfg: &SearchConfig) -> Result<OptimizeResult, OptimizeError> {
    cfg.validate()?;
    let mut trace = Vec::new();
    let (params, cert) = match feasible_at(&cfg.eta_start, cfg)? {
        Some(found) => found,
        None => return Err(OptimizeError::Infeasible),
    };
    trace.push(EtaStep {
        eta: cfg.eta_start.clone(),
        feasible: true,
    });
    let width = |eta: &Rational| int(cfg.n_min) / eta;
    let mut accepted = vec![(cfg.eta_start.clone(), width(&cfg.eta_start))];
    let mut best = (params, cert);
    let mut hi = cfg.eta_start.clone();
    let mut lo = cfg.eta_min.clone();
    let limit = num_bigint::BigInt::from(cfg.snap_denominator_limit);
    for _ in 0..cfg.bisection_steps {
        let exact_mid = (&lo + &hi) / int(2);
        let snapped = best_approximation(&exact_mid, &limit);
        let mid = if snapped > lo && snapped < hi { snapped } else { exact_mid };
        if mid <= lo || mid >= hi {
            break;
        }
        match feasible_at(&mid, cfg)? {
            Some(found) => {
                trace.push(EtaStep {
                    eta: mid.clone(),
                    feasible: true,
                });
                accepted.push((mid.clone(), width(&mid)));
                best = found;
                hi = mid;
            }
            None => {
                trace.push(EtaStep {
                    eta: mid.clone(),
                    feasible: false,
                });
                lo = mid;
            }
        }
    }
    let (params, cert) = best;
    Ok(OptimizeResult {
        best_eta: hi,
        params,
        cert,
        trace,
        accepted,
    })
}

/// Largest of `coef_sn`, `coef_const / n` and `-theta` over a spread of
/// dimensions; negative means the point looks feasible.
fn slack(x: [f64; 3], eta: f64, n_min: i64) -> f64 {
    let [eps, sig, kap] = x;
    if eps <= 0.0 || sig <= 0.0 || kap <= 0.0 {
        return f64::INFINITY;
    }
    let n0 = n_min as f64;
    [n0, n0 + 1.0, n0 + 2.0, 2.0 * n0, 10.0 * n0, 100.0 * n0, 1e4, 1e6, 1e9]
        .iter()
        .map(|&n| {
            let (sn, cc, theta) = coefficients_f64(eps, sig, kap, eta, n);
            sn.max(cc / n).max(-theta)
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Verify at most this many float-feasible grid points exactly.
const MAX_EXACT_CHECKS: usize = 64;

fn feasible_at(
    eta: &Rational,
    cfg: &SearchConfig,
) -> Result<Option<(PinchingParams, NegativityCert)>, OptimizeError> {
    let (es, ss, ks) = (cfg.eps_grid.points(), cfg.sig_grid.points(), cfg.kap_grid.points());
    let mut grid = Vec::with_capacity(es.len() * ss.len() * ks.len());
    for &e in &es {
        for &s in &ss {
            for &k in &ks {
                grid.push([e, s, k]);
            }
        }
    }
    if grid.is_empty() {
        return Ok(None);
    }
    let eta_f = to_f64(eta);
    let scores: Vec<f64> = grid.par_iter().map(|&x| slack(x, eta_f, cfg.n_min)).collect();
    for (i, _) in scores.iter().enumerate().filter(|(_, s)| **s < 0.0).take(MAX_EXACT_CHECKS) {
        if let Some(found) = verify(grid[i], eta, cfg)? {
            return Ok(Some(found));
        }
    }
    let start = (0..grid.len())
        .min_by(|&a, &b| scores[a].total_cmp(&scores[b]))
        .expect("nonempty grid");
    let steps = [cfg.eps_grid.spacing(), cfg.sig_grid.spacing(), cfg.kap_grid.spacing()];
    let refined = compass_search(grid[start], steps, eta_f, cfg.n_min);
    if slack(refined, eta_f, cfg.n_min) < 0.0 {
        return verify(refined, eta, cfg);
    }
    Ok(None)
}

fn verify(
    x: [f64; 3],
    eta: &Rational,
    cfg: &SearchConfig,
) -> Result<Option<(PinchingParams, NegativityCert)>, OptimizeError> {
    let snap = |v: f64| snap_f64(v, cfg.snap_denominator_limit).filter(|r| r.is_positive());
    let (Some(e), Some(s), Some(k)) = (snap(x[0]), snap(x[1]), snap(x[2])) else {
        return Ok(None);
    };
    let params = PinchingParams::new(e, s, k, eta.clone())?;
    let cert = certify_negative_from(&params, cfg.n_min)?;
    Ok(cert.passed().then_some((params, cert)))
}

/// Deterministic compass search: try `+-step` along each axis in a fixed
/// order, move on the first improvement, halve all steps when stuck.
fn compass_search(mut x: [f64; 3], mut step: [f64; 3], eta: f64, n_min: i64) -> [f64; 3] {
    let mut best = slack(x, eta, n_min);
    for _ in 0..2000 {
        if best < -1e-9 || step.iter().all(|s| *s < 1e-9) {
            break;
        }
        let mut moved = false;
        'axes: for axis in 0..3 {
            for dir in [1.0, -1.0] {
                let mut y = x;
                y[axis] += dir * step[axis];
                let v = slack(y, eta, n_min);
                if v < best {
                    x = y;
                    best = v;
                    moved = true;
                    break 'axes;
                }
            }
        }
        if !moved {
            step.iter_mut().for_each(|s| *s /= 2.0);
        }
    }
    x
}
