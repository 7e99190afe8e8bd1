//! Prime generation, counting, indexing and factorization.
//!
//! Prime indices are 1-based: `p_1 = 2`, `p_2 = 3`, `p_3 = 5`, ...
//!
//! [`PrimeTable`] is a plain growable sieve. The free functions in this module
//! ([`nth_prime`], [`prime_index`], [`prime_count`], [`factorize`]) share one
//! process-wide table behind a read/write lock: queries inside the sieved range
//! run concurrently, growth takes the write lock.

use std::fmt;
use std::sync::{LazyLock, RwLock};

use crate::error::{Error, Result};

const INITIAL_LIMIT: u64 = 1 << 16;

/// Sieve of Eratosthenes over `[0, limit]` that doubles its limit on demand.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl Default for PrimeTable {
    fn default() -> Self {
        Self::with_limit(INITIAL_LIMIT)
    }
}

impl PrimeTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: u64) -> Self {
        PrimeTable {
            limit,
            primes: sieve(limit),
        }
    }

    /// Largest value covered by the sieve.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Re-sieves so that every value up to `target` is covered. The limit is
    /// at least doubled, so repeated growth costs amortized linear time.
    pub fn extend_to(&mut self, target: u64) {
        if target <= self.limit {
            return;
        }
        let new_limit = target.max(self.limit.saturating_mul(2));
        self.primes = sieve(new_limit);
        self.limit = new_limit;
    }

    /// `p_k` if it is already sieved.
    pub fn get_nth(&self, k: u64) -> Option<u64> {
        let idx = usize::try_from(k.checked_sub(1)?).ok()?;
        self.primes.get(idx).copied()
    }

    /// `pi(x)` if `x` is covered.
    pub fn count_upto(&self, x: u64) -> Option<u64> {
        (x <= self.limit).then(|| self.primes.partition_point(|&p| p <= x) as u64)
    }

    /// Index of `p`, `Some(Err(NotPrime))` for composites, `None` if not covered.
    pub fn index_of(&self, p: u64) -> Option<Result<u64>> {
        if p < 2 {
            return Some(Err(Error::NotPrime(p)));
        }
        if p > self.limit {
            return None;
        }
        Some(match self.primes.binary_search(&p) {
            Ok(i) => Ok(i as u64 + 1),
            Err(_) => Err(Error::NotPrime(p)),
        })
    }

    pub fn nth_prime(&mut self, k: u64) -> u64 {
        assert!(k >= 1, "prime indices start at 1");
        loop {
            if let Some(p) = self.get_nth(k) {
                return p;
            }
            self.extend_to(nth_prime_upper_estimate(k).max(self.limit.saturating_mul(2)));
        }
    }

    pub fn prime_index(&mut self, p: u64) -> Result<u64> {
        self.extend_to(p);
        self.index_of(p).expect("table covers p after extension")
    }

    /// `pi(x)` for real `x >= 0`; `x` is floored.
    pub fn prime_count(&mut self, x: f64) -> Result<u64> {
        let x = real_floor(x)?;
        self.extend_to(x);
        Ok(self.count_upto(x).expect("table covers x after extension"))
    }

    pub fn factorize(&mut self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(Error::Domain("cannot factorize 0".into()));
        }
        self.extend_to(isqrt(n).max(2));
        let (mut terms, rest) = trial_divide(&self.primes, n);
        if rest > 1 {
            // The cofactor is prime; its index needs the sieve to reach it.
            terms.push((self.prime_index(rest)?, 1));
        }
        Ok(Factorization { terms })
    }
}

/// Prime factorization as `(alpha, beta)` pairs: `n = prod p_alpha^beta`.
///
/// Alphas are strictly increasing and every beta is at least 1. The empty
/// factorization is `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    terms: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization, checking that alphas strictly increase and
    /// that no index or exponent is zero.
    pub fn new(terms: Vec<(u64, u32)>) -> Result<Self> {
        if terms.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::InvalidFactorization(
                "prime indices and exponents must be at least 1".into(),
            ));
        }
        if !terms.windows(2).all(|w| w[0].0 < w[1].0) {
            return Err(Error::InvalidFactorization(
                "prime indices must be strictly increasing".into(),
            ));
        }
        Ok(Factorization { terms })
    }

    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    /// Number of distinct prime factors.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of prime factors counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.iter().map(|&(_, b)| u64::from(b)).sum()
    }

    /// Multiplies the factorization back out, failing on overflow.
    pub fn value(&self) -> Result<u128> {
        self.terms.iter().try_fold(1u128, |acc, &(alpha, beta)| {
            let p = u128::from(nth_prime(alpha));
            let pow = p.checked_pow(beta).ok_or(Error::Overflow)?;
            acc.checked_mul(pow).ok_or(Error::Overflow)
        })
    }
}

/// `p1 p3`, `p1^2`, or `-` for the empty factorization.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("-");
        }
        for (i, &(alpha, beta)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "p{alpha}")?;
            if beta > 1 {
                write!(f, "^{beta}")?;
            }
        }
        Ok(())
    }
}

/// Process-wide table shared by the free functions below.
pub struct SharedPrimeTable {
    inner: RwLock<PrimeTable>,
}

impl Default for SharedPrimeTable {
    fn default() -> Self {
        SharedPrimeTable {
            inner: RwLock::new(PrimeTable::new()),
        }
    }
}

impl SharedPrimeTable {
    /// Runs `query` under the read lock; when it reports the table too small
    /// (`None`), grows the table under the write lock to `need` and retries.
    fn with<T>(
        &self,
        need: impl Fn(&PrimeTable) -> u64,
        query: impl Fn(&PrimeTable) -> Option<T>,
    ) -> T {
        {
            let table = self.inner.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = query(&table) {
                return v;
            }
        }
        let mut table = self.inner.write().unwrap_or_else(|e| e.into_inner());
        loop {
            if let Some(v) = query(&table) {
                return v;
            }
            let target = need(&table);
            table.extend_to(target);
        }
    }

    pub fn nth_prime(&self, k: u64) -> u64 {
        assert!(k >= 1, "prime indices start at 1");
        self.with(
            |t| nth_prime_upper_estimate(k).max(t.limit().saturating_mul(2)),
            |t| t.get_nth(k),
        )
    }

    pub fn prime_index(&self, p: u64) -> Result<u64> {
        self.with(|_| p, |t| t.index_of(p))
    }

    pub fn prime_count(&self, x: f64) -> Result<u64> {
        let x = real_floor(x)?;
        Ok(self.with(|_| x, |t| t.count_upto(x)))
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(Error::Domain("cannot factorize 0".into()));
        }
        let root = isqrt(n).max(2);
        let (terms, rest) = self.with(
            |_| root,
            |t| (t.limit() >= root).then(|| trial_divide(t.primes(), n)),
        );
        let mut terms = terms;
        if rest > 1 {
            terms.push((self.prime_index(rest)?, 1));
        }
        Ok(Factorization { terms })
    }

    /// Ensures the table covers `[0, limit]` ahead of a bulk computation.
    pub fn reserve(&self, limit: u64) {
        self.with(|_| limit, |t| (t.limit() >= limit).then_some(()));
    }
}

static SHARED: LazyLock<SharedPrimeTable> = LazyLock::new(SharedPrimeTable::default);

/// The process-wide prime table.
pub fn shared() -> &'static SharedPrimeTable {
    &SHARED
}

/// The `k`-th prime, 1-based. Panics if `k == 0`.
pub fn nth_prime(k: u64) -> u64 {
    SHARED.nth_prime(k)
}

/// The 1-based index of prime `p`; `NotPrime` for composites and `p < 2`.
pub fn prime_index(p: u64) -> Result<u64> {
    SHARED.prime_index(p)
}

/// Number of primes `<= x`. Negative or non-finite `x` is a domain error.
pub fn prime_count(x: f64) -> Result<u64> {
    SHARED.prime_count(x)
}

/// Factorization of `n >= 1` in prime-index form.
pub fn factorize(n: u64) -> Result<Factorization> {
    SHARED.factorize(n)
}

/// Divides out every sieved prime with `p * p <= rest`, returning the terms
/// found and the remaining cofactor (1 or a prime).
fn trial_divide(primes: &[u64], n: u64) -> (Vec<(u64, u32)>, u64) {
    let mut rest = n;
    let mut terms = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        if p.saturating_mul(p) > rest {
            break;
        }
        let mut beta = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            beta += 1;
        }
        if beta > 0 {
            terms.push((i as u64 + 1, beta));
        }
    }
    (terms, rest)
}

fn sieve(limit: u64) -> Vec<u64> {
    let n = usize::try_from(limit).expect("sieve limit exceeds address space");
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    composite
        .iter()
        .enumerate()
        .skip(2)
        .filter(|(_, &c)| !c)
        .map(|(p, _)| p as u64)
        .collect()
}

/// Rosser's bound `p_k < k (ln k + ln ln k)` for `k >= 6`.
fn nth_prime_upper_estimate(k: u64) -> u64 {
    if k < 6 {
        return 13;
    }
    let k = k as f64;
    (k * (k.ln() + k.ln().ln())).ceil() as u64 + 1
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

fn real_floor(x: f64) -> Result<u64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "expected a finite real >= 0, got {x}"
        )));
    }
    if x >= u64::MAX as f64 {
        return Err(Error::Domain(format!("{x} is beyond the sieve range")));
    }
    Ok(x.floor() as u64)
}
