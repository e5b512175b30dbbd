/// Largest |z| handled by the power series; beyond it cancellation between
/// terms of size ~e^{|z|} would eat the 10⁻¹² budget.
pub const SERIES_LIMIT: f64 = 8.0;

/// Bessel function J₀(z) for real `|z| ≤ 50`.
///
/// Power series Σ (−1)ⁿ (z/2)²ⁿ/(n!)² for `|z| ≤ 8`, Miller backward
/// recurrence above.
pub fn bessel_j0(z: f64) -> f64 {
    let z = z.abs();
    if z <= SERIES_LIMIT {
        j0_series(z, usize::MAX).0
    } else {
        j0_miller(z)
    }
}

/// Partial sum of the J₀ power series with at most `max_terms` terms,
/// stopping early once a term falls below 10⁻¹⁶. Returns the sum and the
/// first omitted term.
pub fn j0_series(z: f64, max_terms: usize) -> (f64, f64) {
    let q = -0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 0.0;
    let mut n = 0usize;
    while n < max_terms {
        sum += term;
        n += 1;
        term *= q / (n * n) as f64;
        if term.abs() < 1e-16 {
            break;
        }
    }
    (sum, term)
}

fn j0_miller(z: f64) -> f64 {
    // Start well above z so that J_M(z) is negligible.
    let mut m = (z as usize) + 40;
    if m % 2 == 1 {
        m += 1;
    }
    let mut next = 0.0; // J_{k+1}
    let mut cur = 1e-30; // J_k
    let mut norm = 0.0;
    let mut j0 = 0.0;
    for k in (1..=m).rev() {
        let prev = 2.0 * k as f64 / z * cur - next;
        next = cur;
        cur = prev;
        // cur is now J_{k-1}
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * cur;
        }
        if k - 1 == 0 {
            j0 = cur;
        }
        if cur.abs() > 1e250 {
            next *= 1e-250;
            cur *= 1e-250;
            norm *= 1e-250;
            j0 *= 1e-250;
        }
    }
    norm += j0;
    j0 / norm
}
