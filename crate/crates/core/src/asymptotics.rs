//! Growth of `σ(J(n, m))` along `m` and along `n`, in exact rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::combinatorics::{evaluate_polynomial, polynomial_coefficients, sigma};
use crate::decimal::{render_with_separator, Rounding};
use crate::error::{check_at_least, Result};

/// Default `m` at which the limit of `a(n, m)` is estimated.
pub const DEFAULT_DELTA_M: usize = 20;

/// Fractional digits used for [`DeltaEstimate::decimal`].
pub const DELTA_PLACES: usize = 12;

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Serializes a rational as `{"numerator": "...", "denominator": "..."}`.
fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("numerator", &q.numer().to_string())?;
    st.serialize_field("denominator", &q.denom().to_string())?;
    st.end()
}

fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// How decimal renderings are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecimalFormat {
    pub places: usize,
    pub rounding: Rounding,
    pub decimal_comma: bool,
}

impl Default for DecimalFormat {
    fn default() -> Self {
        Self {
            places: 10,
            rounding: Rounding::HalfEven,
            decimal_comma: false,
        }
    }
}

impl DecimalFormat {
    pub fn render(&self, q: &BigRational) -> String {
        let sep = if self.decimal_comma { ',' } else { '.' };
        render_with_separator(q, self.places, self.rounding, sep)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaRow {
    pub m: usize,
    #[serde(serialize_with = "ser_biguint")]
    pub sigma: BigUint,
}

/// `σ(J(n, m))` for `m = 3..=m_max`.
pub fn sigma_table(n: usize, m_max: usize) -> Result<Vec<SigmaRow>> {
    check_at_least("n", n as i64, 2, "n >= 2")?;
    check_at_least("m_max", m_max as i64, 3, "m_max >= 3")?;
    (3..=m_max)
        .map(|m| sigma(n, m).map(|b| SigmaRow { m, sigma: b.total }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioEntry {
    pub m: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub decimal: String,
}

/// `a(n, m) = σ(J(n, m + 1)) / σ(J(n, m))` for `m = 3..m_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioSeries {
    pub n: usize,
    pub format: DecimalFormat,
    pub entries: Vec<RatioEntry>,
}

impl RatioSeries {
    pub fn get(&self, m: usize) -> Option<&RatioEntry> {
        self.entries.iter().find(|e| e.m == m)
    }

    /// `|a(n, m + 1) - a(n, m)|` for consecutive entries, keyed by `m`.
    pub fn successive_differences(&self) -> Vec<(usize, BigRational)> {
        self.entries
            .windows(2)
            .map(|w| (w[0].m, (&w[1].value - &w[0].value).abs()))
            .collect()
    }
}

pub fn ratio_series(n: usize, m_max: usize, format: DecimalFormat) -> Result<RatioSeries> {
    check_at_least("n", n as i64, 2, "n >= 2")?;
    check_at_least("m_max", m_max as i64, 4, "m_max >= 4")?;
    let table = sigma_table(n, m_max)?;
    let entries = table
        .windows(2)
        .map(|w| {
            let value = ratio(&w[1].sigma, &w[0].sigma);
            RatioEntry {
                m: w[0].m,
                decimal: format.render(&value),
                value,
            }
        })
        .collect();
    Ok(RatioSeries { n, format, entries })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NRatioEntry {
    pub n: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub decimal: String,
}

/// `σ(J(n, m)) / σ(J(n - 1, m))` for fixed `m` and `n = 3..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NDirectionRatios {
    pub m: usize,
    pub entries: Vec<NRatioEntry>,
    pub strictly_decreasing: bool,
    pub all_above_one: bool,
}

pub fn n_direction_ratios(m: usize, n_max: usize, format: DecimalFormat) -> Result<NDirectionRatios> {
    check_at_least("m", m as i64, 3, "m >= 3")?;
    check_at_least("n_max", n_max as i64, 3, "n_max >= 3")?;
    // σ is a polynomial in n with census coefficients, so one census serves
    // every n.
    let coeffs = polynomial_coefficients(m)?;
    let sigmas: Vec<BigUint> = (2..=n_max).map(|n| evaluate_polynomial(&coeffs, n)).collect();
    let entries: Vec<NRatioEntry> = sigmas
        .windows(2)
        .zip(3..)
        .map(|(w, n)| {
            let value = ratio(&w[1], &w[0]);
            NRatioEntry {
                n,
                decimal: format.render(&value),
                value,
            }
        })
        .collect();
    let one = BigRational::one();
    Ok(NDirectionRatios {
        m,
        strictly_decreasing: entries.windows(2).all(|w| w[1].value < w[0].value),
        all_above_one: entries.iter().all(|e| e.value > one),
        entries,
    })
}

/// Point estimate of `lim a(n, m)` with the last two ratios as a bracket.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaEstimate {
    pub n: usize,
    pub m_used: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub decimal: String,
    #[serde(serialize_with = "ser_rational")]
    pub lower: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub upper: BigRational,
    pub bracket_width: String,
}

/// `a(n, m_used)` bracketed by `a(n, m_used - 1)`.
pub fn delta_estimate(n: usize, m_used: usize) -> Result<DeltaEstimate> {
    check_at_least("n", n as i64, 2, "n >= 2")?;
    check_at_least("m_used", m_used as i64, 6, "m_used >= 6")?;
    let s_prev = sigma(n, m_used - 1)?.total;
    let s_mid = sigma(n, m_used)?.total;
    let s_next = sigma(n, m_used + 1)?.total;
    let value = ratio(&s_next, &s_mid);
    let previous = ratio(&s_mid, &s_prev);
    let (lower, upper) = if previous <= value {
        (previous, value.clone())
    } else {
        (value.clone(), previous)
    };
    let format = DecimalFormat {
        places: DELTA_PLACES,
        ..DecimalFormat::default()
    };
    Ok(DeltaEstimate {
        n,
        m_used,
        decimal: format.render(&value),
        bracket_width: format.render(&(&upper - &lower)),
        value,
        lower,
        upper,
    })
}

/// Prediction `δ^(m-3) σ(J(n, 3))` against the exact count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub m: usize,
    pub delta: DeltaEstimate,
    pub predicted: String,
    #[serde(serialize_with = "ser_biguint")]
    pub actual: BigUint,
    /// `|predicted - actual| / actual`.
    pub relative_error: String,
    #[serde(skip)]
    pub relative_error_exact: BigRational,
}

pub fn conjecture_report(n: usize, m: usize, m_used: usize, format: DecimalFormat) -> Result<ConjectureReport> {
    check_at_least("n", n as i64, 2, "n >= 2")?;
    check_at_least("m", m as i64, 3, "m >= 3")?;
    let delta = delta_estimate(n, m_used)?;
    let base = sigma(n, 3)?.total;
    let actual = sigma(n, m)?.total;
    let predicted = num_traits::pow(delta.value.clone(), m - 3) * BigRational::from_integer(BigInt::from(base));
    let actual_q = BigRational::from_integer(BigInt::from(actual.clone()));
    let relative = (&predicted - &actual_q).abs() / &actual_q;
    Ok(ConjectureReport {
        n,
        m,
        predicted: format.render(&predicted),
        relative_error: format.render(&relative),
        relative_error_exact: relative,
        actual,
        delta,
    })
}
