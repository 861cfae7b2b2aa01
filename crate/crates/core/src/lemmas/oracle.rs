//! Exact random testing of the scalar eigenvalue inequalities.
//!
//! A sample is a rational vector `lambda` with zero sum whose squared norm
//! `S` lies in `[n, (1 + 1/eta) n]`. For each sample the oracle checks the
//! closed form of `F`, then both families of bounds
//! `LHS <= S + 4 + cbrt(c F)` with the cube root removed by cubing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::LemmaError;
use crate::exactnum::{frac, int, snap_f64, to_f64, Rational};

/// Independent random streams; trial `t` goes to shard `t % SHARDS`.
const SHARDS: u64 = 8;
/// Integer entries are drawn from `-RANGE..=RANGE` before centering.
const RANGE: i64 = 12;
/// Scale factors are rationals with at most this denominator.
const SCALE_DEN: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSample {
    pub lambdas: Vec<Rational>,
    pub n: usize,
    pub s: Rational,
}

impl SpectralSample {
    pub fn new(lambdas: Vec<Rational>) -> Result<Self, LemmaError> {
        let sum: Rational = lambdas.iter().sum();
        if !sum.is_zero() {
            return Err(LemmaError::InvalidParams("eigenvalues must sum to zero".into()));
        }
        let s = lambdas.iter().map(|l| l * l).sum();
        Ok(SpectralSample {
            n: lambdas.len(),
            lambdas,
            s,
        })
    }

    /// `(D, z)` with `lambda = z / D` and `z` integral.
    fn integral(&self) -> (BigInt, Vec<BigInt>) {
        let den = self.lambdas.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let z = self.lambdas.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        (den, z)
    }

    pub fn power_sum(&self, m: u32) -> Rational {
        let (den, z) = self.integral();
        let total: BigInt = z.iter().map(|x| num_traits::pow(x.clone(), m as usize)).sum();
        Rational::new(total, num_traits::pow(den, m as usize))
    }

    /// `sum_{i,j} (l_i - l_j)^2 (1 + l_i l_j)^2` over ordered pairs, summed
    /// as `(z_i - z_j)^2 (D^2 + z_i z_j)^2 / D^6`.
    pub fn f_direct(&self) -> Rational {
        let (den, z) = self.integral();
        let d2 = &den * &den;
        let mut total = BigInt::zero();
        for (i, a) in z.iter().enumerate() {
            for b in &z[i + 1..] {
                let d = a - b;
                let e = &d2 + a * b;
                total += &d * &d * &e * &e;
            }
        }
        Rational::new(total * 2, num_traits::pow(d2, 3))
    }

    /// `2 [S f4 - f3^2 - S^2 - S (S - n)]`.
    pub fn f_closed_form(&self) -> Rational {
        let s = &self.s;
        let f3 = self.power_sum(3);
        let n = int(self.n as i64);
        int(2) * (s * self.power_sum(4) - &f3 * &f3 - s * s - s * (s - n))
    }
}

/// Outcome of checking one sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumCheck {
    pub f: Rational,
    pub f_identity: bool,
    /// `c F - max(L, 0)^3` for the worst triple and the worst pair, where
    /// `L = LHS - S - 4`. Negative means a violation.
    pub triple_margin: Rational,
    pub pair_margin: Rational,
}

impl SpectrumCheck {
    pub fn margin(&self) -> Rational {
        self.triple_margin.clone().min(self.pair_margin.clone())
    }

    pub fn ok(&self) -> bool {
        self.f_identity && !self.margin().is_negative()
    }
}

pub fn oracle_c(n: usize, eta: &Rational) -> Rational {
    let width = int(1) + eta.recip();
    frac(24, 5) - int(16) / (width * int(n as i64))
}

pub fn check_spectrum(sample: &SpectralSample, c: &Rational) -> SpectrumCheck {
    let f = sample.f_direct();
    let f_identity = f == sample.f_closed_form();
    // Both quadratic forms are homogeneous, so maximize them over the
    // integer vector `D * lambda` and divide by `D^2` once at the end.
    let (den, z) = sample.integral();
    let mut worst_triple: Option<BigInt> = None;
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            for k in j + 1..z.len() {
                let (a, b, c) = (&z[i], &z[j], &z[k]);
                let v = a * a + b * b + c * c - (a * b + b * c + a * c) * 2;
                if worst_triple.as_ref().is_none_or(|w| &v > w) {
                    worst_triple = Some(v);
                }
            }
        }
    }
    let mut worst_pair: Option<BigInt> = None;
    for i in 0..z.len() {
        for j in 0..z.len() {
            if i != j {
                let v = &z[j] * &z[j] - &z[i] * &z[j] * 4;
                if worst_pair.as_ref().is_none_or(|w| &v > w) {
                    worst_pair = Some(v);
                }
            }
        }
    }
    let den2 = &den * &den;
    let worst_triple = worst_triple.map(|w| Rational::new(w, den2.clone()));
    let worst_pair = worst_pair.map(|w| Rational::new(w, den2.clone()));
    let cf = c * &f;
    let margin = |worst: Option<Rational>| -> Rational {
        let Some(w) = worst else { return cf.clone() };
        let over = w - &sample.s - int(4);
        if over.is_positive() {
            &cf - &over * &over * &over
        } else {
            cf.clone()
        }
    };
    SpectrumCheck {
        f,
        f_identity,
        triple_margin: margin(worst_triple),
        pair_margin: margin(worst_pair),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub n: usize,
    pub eta: Rational,
    pub seed: u64,
    pub trials: usize,
    pub accepted: usize,
    pub discarded: usize,
    pub violations: usize,
    pub identity_failures: usize,
    pub min_margin: Option<Rational>,
    pub s_range: (Rational, Rational),
    pub c: Rational,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "eta": self.eta.to_string(),
            "seed": self.seed,
            "trials": self.trials,
            "accepted": self.accepted,
            "discarded": self.discarded,
            "violations": self.violations,
            "identity_failures": self.identity_failures,
            "min_margin": self.min_margin.as_ref().map(|m| m.to_string()),
            "s_range": [self.s_range.0.to_string(), self.s_range.1.to_string()],
            "c": self.c.to_string(),
            "status": if self.passed() { "pass" } else { "fail" },
        })
    }
}

#[derive(Default)]
struct ShardTally {
    accepted: usize,
    discarded: usize,
    violations: usize,
    identity_failures: usize,
    min_margin: Option<Rational>,
}

/// Draws `trials` candidate spectra and checks every accepted one exactly.
pub fn sample_spectra(
    n: usize,
    eta: &Rational,
    trials: usize,
    seed: u64,
) -> Result<OracleReport, LemmaError> {
    if n < 6 {
        return Err(LemmaError::InvalidParams(format!("n = {n} must be at least 6")));
    }
    if !eta.is_positive() {
        return Err(LemmaError::InvalidParams("eta must be positive".into()));
    }
    if trials == 0 {
        return Err(LemmaError::InvalidParams("trials must be at least 1".into()));
    }
    let lo = int(n as i64);
    let hi = (int(1) + eta.recip()) * &lo;
    let c = oracle_c(n, eta);
    let tallies: Vec<ShardTally> = (0..SHARDS)
        .into_par_iter()
        .map(|shard| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(shard);
            let count = (trials as u64 + SHARDS - 1 - shard) / SHARDS;
            let mut tally = ShardTally::default();
            for _ in 0..count {
                let Some(sample) = draw(&mut rng, n, &lo, &hi) else {
                    tally.discarded += 1;
                    continue;
                };
                tally.accepted += 1;
                let check = check_spectrum(&sample, &c);
                if !check.f_identity {
                    tally.identity_failures += 1;
                }
                if !check.ok() {
                    tally.violations += 1;
                }
                let m = check.margin();
                if tally.min_margin.as_ref().is_none_or(|x| &m < x) {
                    tally.min_margin = Some(m);
                }
            }
            tally
        })
        .collect();
    let mut report = OracleReport {
        n,
        eta: eta.clone(),
        seed,
        trials,
        accepted: 0,
        discarded: 0,
        violations: 0,
        identity_failures: 0,
        min_margin: None,
        s_range: (lo, hi),
        c,
    };
    for t in tallies {
        report.accepted += t.accepted;
        report.discarded += t.discarded;
        report.violations += t.violations;
        report.identity_failures += t.identity_failures;
        if let Some(m) = t.min_margin {
            if report.min_margin.as_ref().is_none_or(|x| &m < x) {
                report.min_margin = Some(m);
            }
        }
    }
    Ok(report)
}

/// Integer vector, centered, then scaled by a rational factor chosen so
/// that `S` lands at a random point of `[lo, hi]`. Returns `None` when the
/// centered vector is zero or the snapped factor misses the interval.
fn draw(rng: &mut ChaCha8Rng, n: usize, lo: &Rational, hi: &Rational) -> Option<SpectralSample> {
    let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(-RANGE..=RANGE)).collect();
    let mean = frac(raw.iter().sum(), n as i64);
    let centered: Vec<Rational> = raw.iter().map(|&a| int(a) - &mean).collect();
    let s0: Rational = centered.iter().map(|l| l * l).sum();
    let u: f64 = rng.gen();
    if s0.is_zero() {
        return None;
    }
    let target = to_f64(lo) + u * (to_f64(hi) - to_f64(lo));
    let t = snap_f64((target / to_f64(&s0)).sqrt(), SCALE_DEN)?;
    let lambdas: Vec<Rational> = centered.iter().map(|l| l * &t).collect();
    let sample = SpectralSample::new(lambdas).ok()?;
    (lo <= &sample.s && &sample.s <= hi).then_some(sample)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spectrum(v: &[i64]) -> SpectralSample {
        SpectralSample::new(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn clifford_spectrum() {
        let s = spectrum(&[1, 1, 1, -1, -1, -1]);
        assert_eq!(s.s, int(6));
        assert_eq!(s.f_direct(), int(0));
        assert_eq!(s.f_closed_form(), int(0));
        let chk = check_spectrum(&s, &oracle_c(6, &int(18)));
        assert!(chk.ok());
    }

    #[test]
    fn f_identity_on_fractions() {
        let s = SpectralSample::new(vec![frac(3, 2), frac(-1, 3), frac(-7, 6), int(2), int(-2), int(0)])
            .unwrap();
        assert_eq!(s.f_direct(), s.f_closed_form());
        assert!(SpectralSample::new(vec![int(1), int(0)]).is_err());
    }

    #[test]
    fn oracle_runs_clean_and_is_deterministic() {
        let a = sample_spectra(6, &int(18), 400, 1).unwrap();
        assert_eq!(a.violations, 0, "{:?}", a);
        assert!(a.accepted > 300);
        let b = sample_spectra(6, &int(18), 400, 1).unwrap();
        assert_eq!(a, b);
        assert!(sample_spectra(5, &int(18), 10, 1).is_err());
        assert!(sample_spectra(6, &int(0), 10, 1).is_err());
        assert!(sample_spectra(6, &int(1), 0, 1).is_err());
    }

    #[test]
    fn zero_c_bound_is_violated() {
        // With c = 0 the bound degenerates to LHS <= S + 4, which fails for
        // a spiky spectrum: (3, -1, -1, -1, 0, 0) has pair value 9 + 12 = 21 > S + 4 = 16.
        let s = spectrum(&[3, -1, -1, -1, 0, 0]);
        assert!(!check_spectrum(&s, &int(0)).ok());
    }
}
