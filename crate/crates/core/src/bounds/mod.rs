//! Subfigure counting and the prime-counting lower bound.
//!
//! Every figure `F(n)` with `n <= x` fits inside an `h x w` rectangle, where
//! `h = floor(lg x)` and `w = pi(x)`. An `h x w` rectangle has `C(h + w, w)`
//! subfigures, hence
//!
//! ```text
//! 2^h <= floor(x) <= C(h + w, w) <= (h + 1)^w
//! ```
//!
//! and so `pi(x) >= h / lg(h + 1)`. [`bound_report`] evaluates every member of
//! that chain in exact integer arithmetic.

mod verify;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagram::Partition;
use crate::error::{Error, Result};
use crate::primes;

pub use verify::{verify_lemma1, verify_lemma2, verify_theorem, SweepOptions, CSV_HEADER};

/// Largest `(h + 1)^w` the chain evaluation will materialize, in bits.
pub const MAX_POWER_BITS: u64 = 1 << 26;

/// Dimensions of a rectangular figure: `height` rows of length `width`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectDims {
    pub height: u64,
    pub width: u64,
}

impl RectDims {
    pub fn new(height: u64, width: u64) -> Self {
        RectDims { height, width }
    }
}

/// Exact `C(n, k)`, or `Overflow` when it does not fit in 128 bits.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=u128::from(k) {
        // acc = C(n - k + i - 1, i - 1); i divides acc * (n - k + i).
        let num = u128::from(n - k) + i;
        let g = acc.gcd(&i);
        acc = (acc / g)
            .checked_mul(num / (i / g))
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Exact `C(n, k)` with no width limit.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Number of distinct subfigures of an `i x j` rectangle: `C(i + j, j)`.
pub fn count_subfigures_rect(r: RectDims) -> Result<u128> {
    let n = r.height.checked_add(r.width).ok_or(Error::Overflow)?;
    binomial(n, r.width)
}

/// Every canonical subfigure of `g`, each once, in lexicographic order
/// (so `[]` first and `g` last).
pub fn enumerate_subfigures(g: &Partition) -> Vec<Partition> {
    fn walk(g: &[u64], prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).expect("prefix stays canonical"));
        let depth = prefix.len();
        let Some(&cap) = g.get(depth) else { return };
        let cap = prefix.last().map_or(cap, |&prev| prev.min(cap));
        for r in 1..=cap {
            prefix.push(r);
            walk(g, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(g.rows(), &mut Vec::with_capacity(g.rows().len()), &mut out);
    out
}

/// `floor(lg n)` for `n >= 1`, from the bit length.
pub fn floor_lg_int(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Domain("lg is undefined at 0".into()));
    }
    Ok(n.ilog2())
}

/// `floor(lg x)` for real `x >= 1`, without floating-point logarithms.
pub fn floor_lg(x: f64) -> Result<u32> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::Domain(format!(
            "floor_lg needs a finite x >= 1, got {x}"
        )));
    }
    if x < u64::MAX as f64 {
        return floor_lg_int(x.floor() as u64);
    }
    // x >= 2^64 is an integer with a normal encoding: the unbiased exponent is exact.
    Ok(((x.to_bits() >> 52) & 0x7ff) as u32 - 1023)
}

/// `h / lg(h + 1)`, the bound's value for any `x` with `floor(lg x) = h`.
///
/// This also evaluates the bound at `x = 2^h` when `2^h` is not representable
/// as an `f64`.
pub fn bound_for_height(h: u64) -> Result<f64> {
    if h == 0 {
        return Err(Error::Domain("bound is 0/0 at floor(lg x) = 0".into()));
    }
    let denom = match h.checked_add(1) {
        Some(m) if m.is_power_of_two() => f64::from(m.ilog2()),
        _ => (h as f64 + 1.0).log2(),
    };
    Ok(h as f64 / denom)
}

/// True when [`bound_for_height`] is computed without rounding in the log.
pub(crate) fn bound_is_exact(h: u64) -> bool {
    h.checked_add(1).is_some_and(u64::is_power_of_two)
}

/// `floor(lg x) / lg(floor(lg x) + 1)` for `x >= 2`.
pub fn pi_lower_bound(x: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::Domain(format!("the bound needs x >= 2, got {x}")));
    }
    bound_for_height(u64::from(floor_lg(x)?))
}

/// Every quantity in the chain `2^h <= |M| <= C(h + w, w) <= (h + 1)^w`
/// together with the bound itself, for one `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "BoundReportWire", try_from = "BoundReportWire")]
pub struct BoundReport {
    pub x: f64,
    /// `floor(lg x)`
    pub h: u32,
    /// `pi(x)`
    pub w: u64,
    pub bound_value: f64,
    /// `floor(x)`
    pub m_size: u64,
    /// `C(h + w, w)`
    pub binom: BigUint,
    /// `(h + 1)^w`
    pub power: BigUint,
    pub chain_ok: bool,
    pub bound_ok: bool,
}

/// The exact chain values for one `(h, w)` pair. Sweeps walk this forward
/// instead of recomputing `(h + 1)^w` for every `x`.
#[derive(Debug, Clone)]
pub(crate) struct ChainState {
    h: u32,
    w: u64,
    binom: BigUint,
    power: BigUint,
}

impl ChainState {
    pub(crate) fn new(h: u32, w: u64) -> Result<Self> {
        check_power_size(h, w)?;
        Ok(ChainState {
            h,
            w,
            binom: binomial_big(u64::from(h) + w, w),
            power: BigUint::from(h + 1).pow(u32::try_from(w).map_err(|_| Error::Overflow)?),
        })
    }

    /// Moves to `(h, w)`; both must be at least the current values.
    pub(crate) fn advance(&mut self, h: u32, w: u64) -> Result<()> {
        debug_assert!(h >= self.h && w >= self.w);
        if h == self.h && w == self.w {
            return Ok(());
        }
        check_power_size(h, w)?;
        let base_changed = self.h < h;
        while self.h < h {
            // C(h + 1 + w, w) = C(h + w, w) (h + w + 1) / (h + 1)
            self.binom *= u64::from(self.h) + self.w + 1;
            self.binom /= u64::from(self.h) + 1;
            self.h += 1;
        }
        while self.w < w {
            // C(h + w + 1, w + 1) = C(h + w, w) (h + w + 1) / (w + 1)
            self.binom *= u64::from(self.h) + self.w + 1;
            self.binom /= self.w + 1;
            if !base_changed {
                self.power *= self.h + 1;
            }
            self.w += 1;
        }
        if base_changed {
            self.power =
                BigUint::from(self.h + 1).pow(u32::try_from(self.w).map_err(|_| Error::Overflow)?);
        }
        Ok(())
    }

    pub(crate) fn h(&self) -> u32 {
        self.h
    }

    pub(crate) fn w(&self) -> u64 {
        self.w
    }

    pub(crate) fn binom(&self) -> &BigUint {
        &self.binom
    }

    pub(crate) fn power(&self) -> &BigUint {
        &self.power
    }

    /// `2^h <= m <= C(h + w, w) <= (h + 1)^w`
    pub(crate) fn chain_holds(&self, m_size: u64) -> bool {
        let m = BigUint::from(m_size);
        (1u128 << self.h) <= u128::from(m_size) && m <= self.binom && self.binom <= self.power
    }
}

fn check_power_size(h: u32, w: u64) -> Result<()> {
    let bits = w as f64 * f64::from(h + 1).log2();
    if bits > MAX_POWER_BITS as f64 {
        return Err(Error::Overflow);
    }
    Ok(())
}

/// Builds the full report for one `x >= 2`.
pub fn bound_report(x: f64) -> Result<BoundReport> {
    let bound_value = pi_lower_bound(x)?;
    let h = floor_lg(x)?;
    if x >= u64::MAX as f64 {
        return Err(Error::Domain(format!("{x} is beyond the sieve range")));
    }
    let m_size = x.floor() as u64;
    let w = primes::prime_count(x)?;
    let state = ChainState::new(h, w)?;
    Ok(BoundReport {
        x,
        h,
        w,
        bound_value,
        m_size,
        chain_ok: state.chain_holds(m_size),
        bound_ok: w as f64 >= bound_value,
        binom: state.binom,
        power: state.power,
    })
}

/// Text form of a chain value: decimal while it fits in 128 bits, otherwise
/// the exact power expression `base^exp` (used for `(h + 1)^w`).
pub(crate) fn power_text(power: &BigUint, h: u32, w: u64) -> String {
    if power.bits() <= 128 {
        power.to_string()
    } else {
        format!("{}^{}", h + 1, w)
    }
}

fn parse_power_text(s: &str) -> Result<BigUint> {
    let bad = || Error::Domain(format!("invalid exact integer {s:?}"));
    match s.split_once('^') {
        Some((base, exp)) => {
            let base: BigUint = base.parse().map_err(|_| bad())?;
            let exp: u32 = exp.parse().map_err(|_| bad())?;
            Ok(base.pow(exp))
        }
        None => s.parse().map_err(|_| bad()),
    }
}

/// JSON layout of [`BoundReport`]; the exact chain values travel as strings.
#[derive(Serialize, Deserialize)]
struct BoundReportWire {
    x: f64,
    h: u32,
    w: u64,
    bound_value: f64,
    m_size: u64,
    binom: String,
    power: String,
    chain_ok: bool,
    bound_ok: bool,
}

impl From<BoundReport> for BoundReportWire {
    fn from(r: BoundReport) -> Self {
        BoundReportWire {
            power: power_text(&r.power, r.h, r.w),
            binom: r.binom.to_string(),
            x: r.x,
            h: r.h,
            w: r.w,
            bound_value: r.bound_value,
            m_size: r.m_size,
            chain_ok: r.chain_ok,
            bound_ok: r.bound_ok,
        }
    }
}

impl TryFrom<BoundReportWire> for BoundReport {
    type Error = Error;

    fn try_from(r: BoundReportWire) -> Result<Self> {
        Ok(BoundReport {
            binom: parse_power_text(&r.binom)?,
            power: parse_power_text(&r.power)?,
            x: r.x,
            h: r.h,
            w: r.w,
            bound_value: r.bound_value,
            m_size: r.m_size,
            chain_ok: r.chain_ok,
            bound_ok: r.bound_ok,
        })
    }
}

/// Outcome of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub range_description: String,
    pub cases_checked: u64,
    pub counterexamples: Vec<String>,
}

impl VerificationReport {
    /// The swept claim held on every case.
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} counterexamples",
            self.range_description,
            self.cases_checked,
            self.counterexamples.len()
        )
    }
}
