//! Descriptive statistics, Welch's t-test and the variance-ratio F-test.
//!
//! Distribution tails come from the regularized incomplete beta function,
//! evaluated with a modified Lentz continued fraction.

use serde::Serialize;
use thiserror::Error;

/// Significance thresholds checked for every test result.
pub const ALPHA_LEVELS: [f64; 3] = [0.05, 0.01, 0.001];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("empty sample")]
    EmptySample,
    #[error("sample needs at least {needed} values, got {got}")]
    TooFewValues { needed: usize, got: usize },
    #[error("sample contains a non-finite value")]
    NonFinite,
    #[error("zero variance in sample {0}")]
    DegenerateVariance(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleSummary {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator); `None` when n = 1.
    pub stddev: Option<f64>,
}

impl SampleSummary {
    pub fn variance(&self) -> Option<f64> {
        self.stddev.map(|s| s * s)
    }
}

/// Two-pass mean and sample standard deviation.
pub fn summarize(sample: &[f64]) -> Result<SampleSummary, StatsError> {
    if sample.is_empty() {
        return Err(StatsError::EmptySample);
    }
    if sample.iter().any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let n = sample.len();
    let mean = sample.iter().sum::<f64>() / n as f64;
    let stddev = (n >= 2).then(|| {
        let ss: f64 = sample.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ss / (n - 1) as f64).sqrt()
    });
    Ok(SampleSummary { n, mean, stddev })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestResult {
    pub statistic: f64,
    /// Degrees of freedom; the F-test fills both, the t-test only the first.
    pub df: (f64, Option<f64>),
    pub p_value: f64,
    /// Thresholds from [`ALPHA_LEVELS`] with `p_value < threshold`.
    pub significant_at: Vec<f64>,
    /// Set when both samples had zero variance but different means.
    pub degenerate: bool,
}

impl TestResult {
    fn new(statistic: f64, df: (f64, Option<f64>), p_value: f64, degenerate: bool) -> Self {
        let p_value = p_value.clamp(0.0, 1.0);
        let significant_at = ALPHA_LEVELS
            .iter()
            .copied()
            .filter(|a| p_value < *a)
            .collect();
        Self {
            statistic,
            df,
            p_value,
            significant_at,
            degenerate,
        }
    }

    pub fn is_significant(&self, alpha: f64) -> bool {
        self.p_value < alpha
    }
}

fn moments(sample: &[f64]) -> Result<(usize, f64, f64), StatsError> {
    if sample.len() < 2 {
        return Err(StatsError::TooFewValues {
            needed: 2,
            got: sample.len(),
        });
    }
    let s = summarize(sample)?;
    Ok((s.n, s.mean, s.variance().unwrap_or(0.0)))
}

/// Welch's unequal-variance t-test, two-sided.
///
/// When both variances are zero the Welch–Satterthwaite df is undefined:
/// equal means give `t = 0, p = 1`, unequal means give an infinite statistic,
/// `p = 0` and `degenerate = true`. In both cases df falls back to
/// `n_a + n_b − 2`.
pub fn welch_t_test(a: &[f64], b: &[f64]) -> Result<TestResult, StatsError> {
    let (na, ma, va) = moments(a)?;
    let (nb, mb, vb) = moments(b)?;
    let (na_f, nb_f) = (na as f64, nb as f64);
    let sea = va / na_f;
    let seb = vb / nb_f;
    let se2 = sea + seb;
    if se2 == 0.0 {
        let pooled_df = (na + nb - 2) as f64;
        return Ok(if ma == mb {
            TestResult::new(0.0, (pooled_df, None), 1.0, false)
        } else {
            let t = if ma > mb {
                f64::INFINITY
            } else {
                f64::NEG_INFINITY
            };
            TestResult::new(t, (pooled_df, None), 0.0, true)
        });
    }
    let t = (ma - mb) / se2.sqrt();
    let df = se2 * se2 / (sea * sea / (na_f - 1.0) + seb * seb / (nb_f - 1.0));
    Ok(TestResult::new(
        t,
        (df, None),
        student_t_two_sided_p(t, df),
        false,
    ))
}

/// F-test for equality of variances: `F = s_a² / s_b²`, two-sided p.
pub fn f_test_variance(a: &[f64], b: &[f64]) -> Result<TestResult, StatsError> {
    let (na, _, va) = moments(a)?;
    let (nb, _, vb) = moments(b)?;
    if va == 0.0 {
        return Err(StatsError::DegenerateVariance("a"));
    }
    if vb == 0.0 {
        return Err(StatsError::DegenerateVariance("b"));
    }
    let f = va / vb;
    let d1 = (na - 1) as f64;
    let d2 = (nb - 1) as f64;
    let lower = f_cdf(f, d1, d2);
    let upper = f_sf(f, d1, d2);
    let p = (2.0 * lower.min(upper)).min(1.0);
    Ok(TestResult::new(f, (d1, Some(d2)), p, false))
}

/// `P(|T| ≥ |t|)` for Student's t with `df` degrees of freedom.
pub fn student_t_two_sided_p(t: f64, df: f64) -> f64 {
    if t.is_infinite() {
        return 0.0;
    }
    let x = df / (df + t * t);
    regularized_incomplete_beta(x, df / 2.0, 0.5)
}

/// CDF of Student's t.
pub fn student_t_cdf(t: f64, df: f64) -> f64 {
    let tail = 0.5 * student_t_two_sided_p(t, df);
    if t >= 0.0 {
        1.0 - tail
    } else {
        tail
    }
}

/// CDF of the F distribution with `(d1, d2)` degrees of freedom.
pub fn f_cdf(f: f64, d1: f64, d2: f64) -> f64 {
    if f <= 0.0 {
        return 0.0;
    }
    let x = d1 * f / (d1 * f + d2);
    regularized_incomplete_beta(x, d1 / 2.0, d2 / 2.0)
}

/// Survival function `1 − CDF` of the F distribution, computed without
/// cancellation.
pub fn f_sf(f: f64, d1: f64, d2: f64) -> f64 {
    if f <= 0.0 {
        return 1.0;
    }
    let x = d2 / (d2 + d1 * f);
    regularized_incomplete_beta(x, d2 / 2.0, d1 / 2.0)
}

/// Natural log of the gamma function (Lanczos, g = 7, n = 9).
pub fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).abs().ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Regularized incomplete beta `I_x(a, b)` for `a, b > 0`, `x ∈ [0, 1]`.
pub fn regularized_incomplete_beta(x: f64, a: f64, b: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_continued_fraction(x, a, b) / a
    } else {
        1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b
    }
}

fn beta_continued_fraction(x: f64, a: f64, b: f64) -> f64 {
    const MAX_ITER: usize = 1000;
    const EPS: f64 = 1e-16;
    const TINY: f64 = 1e-300;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;

        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    h
}
