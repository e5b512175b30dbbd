use crate::error::{ensure, LabError, Result};

pub const MAX_PRIME_LIMIT: u64 = 1_000_000_000;

/// Primes up to `limit` with their logarithms and inverse square roots.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    logs: Vec<f64>,
    half_powers: Vec<f64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn logs(&self) -> &[f64] {
        &self.logs
    }

    /// p^{−1/2} for each prime.
    pub fn half_powers(&self) -> &[f64] {
        &self.half_powers
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Number of primes `p ≤ x`.
    pub fn count_up_to(&self, x: f64) -> usize {
        self.primes.partition_point(|&p| (p as f64) <= x)
    }

    pub fn covers(&self, x: f64) -> bool {
        x < (self.limit + 1) as f64
    }
}

/// Sieve of Eratosthenes over odd numbers.
pub fn primes_up_to(limit: u64) -> Result<PrimeTable> {
    ensure(limit >= 2, || LabError::Domain(format!("prime limit {limit} < 2")))?;
    ensure(limit <= MAX_PRIME_LIMIT, || {
        LabError::Capacity(format!("prime limit {limit} above {MAX_PRIME_LIMIT}"))
    })?;
    // bit i of `composite` stands for 2i + 1
    let half = (limit as usize - 1) / 2 + 1;
    let mut composite = vec![0u64; half.div_ceil(64)];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if composite[i / 64] >> (i % 64) & 1 == 0 {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < half {
                composite[j / 64] |= 1 << (j % 64);
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = vec![2u64];
    for i in 1..half {
        if composite[i / 64] >> (i % 64) & 1 == 0 {
            primes.push(2 * i as u64 + 1);
        }
    }
    let logs = primes.iter().map(|&p| (p as f64).ln()).collect();
    let half_powers = primes.iter().map(|&p| 1.0 / (p as f64).sqrt()).collect();
    Ok(PrimeTable {
        limit,
        primes,
        logs,
        half_powers,
    })
}
