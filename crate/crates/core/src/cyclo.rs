//! Residue degrees in cyclotomic fields and their subfields, and density experiments.
//!
//! An unramified prime `p` has residue degree `ord_m(p)` in `Q(ζ_m)`. For prime
//! `ℓ` every subfield of `Q(ζ_ℓ)` corresponds to a quotient of the cyclic group
//! `(Z/ℓ)^*`, and the residue degree there is the order of the image of `p`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{divisors, euler_phi, gcd, is_prime, multiplicative_order, pow_mod};
use crate::{Error, Result};

pub fn residue_degree_cyclotomic(p: u64, m: u64) -> Result<u64> {
    if m == 0 || gcd(p, m) != 1 {
        return Err(Error::Ramified { p, m });
    }
    multiplicative_order(p % m, m)
}

/// Residue degree in `Q(ζ_ℓ)^+`: the order of `p` in `(Z/ℓ)^* / {±1}`.
pub fn residue_degree_plus_part(p: u64, ell: u64) -> Result<u64> {
    let d = residue_degree_cyclotomic(p, ell)?;
    if d % 2 == 0 && pow_mod(p, d / 2, ell) == ell - 1 {
        Ok(d / 2)
    } else {
        Ok(d)
    }
}

/// Residue degree in the subfield of `Q(ζ_ℓ)` of degree `f`.
pub fn residue_degree_subfield(p: u64, ell: u64, f: u64) -> Result<u64> {
    if !is_prime(ell) {
        return Err(Error::InvalidPrime(ell));
    }
    if f == 0 || !(ell - 1).is_multiple_of(f) {
        return Err(Error::InvalidArgument(alloc::format!("{f} does not divide {}", ell - 1)));
    }
    if p.is_multiple_of(ell) {
        return Err(Error::Ramified { p, m: ell });
    }
    // The image of p in the order-f quotient has the order of p^{(ℓ-1)/f}.
    multiplicative_order(pow_mod(p, (ell - 1) / f, ell), ell)
}

/// `Q(ζ_ℓ)` or its maximal real subfield.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicContext {
    pub ell: u64,
    pub plus: bool,
}

impl CyclotomicContext {
    pub fn new(ell: u64, plus: bool) -> Result<Self> {
        if !is_prime(ell) || (plus && ell < 3) {
            return Err(Error::InvalidPrime(ell));
        }
        Ok(CyclotomicContext { ell, plus })
    }

    /// Degree over `Q`.
    pub fn degree(&self) -> u64 {
        if self.plus {
            (self.ell - 1) / 2
        } else {
            self.ell - 1
        }
    }

    pub fn residue_degree(&self, p: u64) -> Result<u64> {
        if self.plus {
            residue_degree_plus_part(p, self.ell)
        } else {
            residue_degree_cyclotomic(p, self.ell)
        }
    }
}

const SEGMENT: u64 = 1 << 16;

/// Primes up to `sqrt(bound)`, for sieving segments below `bound`.
pub fn base_primes(bound: u64) -> Vec<u64> {
    let mut r = 1u64;
    while (r + 1) * (r + 1) <= bound {
        r += 1;
    }
    simple_sieve(r)
}

fn simple_sieve(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Primes in `[lo, hi)`, given every prime up to `sqrt(hi)`.
pub fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    let mut composite = vec![false; (hi - lo) as usize];
    for &p in base {
        if p * p >= hi {
            break;
        }
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut j = start;
        while j < hi {
            composite[(j - lo) as usize] = true;
            j += p;
        }
    }
    (lo.max(2)..hi).filter(|&x| !composite[(x - lo) as usize]).collect()
}

/// Segment boundaries `[lo, hi)` covering `[0, bound]`.
pub fn segments(bound: u64) -> Vec<(u64, u64)> {
    let end = bound + 1;
    (0..end.div_ceil(SEGMENT)).map(|k| (k * SEGMENT, ((k + 1) * SEGMENT).min(end))).collect()
}

/// All primes `≤ bound`, ascending, by a segmented sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    let base = base_primes(bound);
    segments(bound).into_iter().flat_map(|(lo, hi)| sieve_segment(lo, hi, &base)).collect()
}

/// Unramified primes `≤ bound` counted by residue degree.
pub fn degree_census(ctx: &CyclotomicContext, primes: &[u64]) -> Result<BTreeMap<u64, u64>> {
    let mut census = BTreeMap::new();
    for &p in primes {
        if p == ctx.ell {
            continue;
        }
        *census.entry(ctx.residue_degree(p)?).or_insert(0) += 1;
    }
    Ok(census)
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DensityReport {
    pub ell: u64,
    pub plus: bool,
    pub f: u64,
    /// Degree of the field.
    pub n: u64,
    /// Unramified primes of residue degree `f`.
    pub count: u64,
    /// Unramified primes up to the bound.
    pub total: u64,
    pub observed: f64,
    /// `φ(f)/n` when `f | n`, else 0.
    pub predicted: f64,
    /// `|observed - predicted|` in binomial standard deviations.
    pub sigma_distance: f64,
}

impl DensityReport {
    pub fn from_census(ctx: &CyclotomicContext, census: &BTreeMap<u64, u64>, f: u64) -> Self {
        let n = ctx.degree();
        let total: u64 = census.values().sum();
        let count = census.get(&f).copied().unwrap_or(0);
        let predicted = if f > 0 && n.is_multiple_of(f) { euler_phi(f) as f64 / n as f64 } else { 0.0 };
        let observed = if total == 0 { 0.0 } else { count as f64 / total as f64 };
        let sd = libm::sqrt(predicted * (1.0 - predicted) / total.max(1) as f64);
        let diff = (observed - predicted).abs();
        let sigma_distance = if sd > 0.0 {
            diff / sd
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        DensityReport { ell: ctx.ell, plus: ctx.plus, f, n, count, total, observed, predicted, sigma_distance }
    }

    pub fn within_sigma(&self, k: f64) -> bool {
        self.sigma_distance <= k
    }
}

/// Residue-degree statistics for primes up to `bound` (at least 1000).
pub fn empirical_density(ell: u64, plus: bool, f: u64, bound: u64) -> Result<DensityReport> {
    if bound < 1000 {
        return Err(Error::InvalidArgument("prime bound must be at least 1000".into()));
    }
    let ctx = CyclotomicContext::new(ell, plus)?;
    let census = degree_census(&ctx, &primes_up_to(bound))?;
    Ok(DensityReport::from_census(&ctx, &census, f))
}

/// Every divisor of the field degree with its report, sharing one sieve.
pub fn density_table(ell: u64, plus: bool, bound: u64) -> Result<Vec<DensityReport>> {
    let ctx = CyclotomicContext::new(ell, plus)?;
    let census = degree_census(&ctx, &primes_up_to(bound))?;
    Ok(divisors(ctx.degree()).into_iter().map(|f| DensityReport::from_census(&ctx, &census, f)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(residue_degree_cyclotomic(2, 7).unwrap(), 3);
        assert_eq!(residue_degree_cyclotomic(29, 7).unwrap(), 1);
        assert_eq!(residue_degree_cyclotomic(7, 7), Err(Error::Ramified { p: 7, m: 7 }));
        assert_eq!(residue_degree_cyclotomic(3, 163).unwrap(), multiplicative_order(3, 163).unwrap());
        assert_eq!(residue_degree_plus_part(2, 7).unwrap(), 3);
        assert_eq!(residue_degree_plus_part(2, 17).unwrap(), 4);
        assert_eq!(residue_degree_plus_part(13, 7).unwrap(), 1);
        assert_eq!(residue_degree_subfield(2, 7, 3).unwrap(), 3);
        assert_eq!(residue_degree_subfield(5, 11, 1).unwrap(), 1);
        assert_eq!(residue_degree_subfield(5, 11, 10).unwrap(), residue_degree_cyclotomic(5, 11).unwrap());
        assert!(residue_degree_subfield(5, 11, 3).is_err());
    }

    #[test]
    fn sieve() {
        let ps = primes_up_to(200_000);
        assert_eq!(ps.len(), 17_984);
        assert_eq!(&ps[..5], &[2, 3, 5, 7, 11]);
        assert!(ps.iter().take(500).all(|&p| is_prime(p)));
        assert_eq!(primes_up_to(2), [2]);
        assert_eq!(primes_up_to(65_537).last(), Some(&65_537));
    }

    #[test]
    fn density_rows_sum() {
        let rows = density_table(7, false, 10_000).unwrap();
        assert_eq!(rows.iter().map(|r| r.count).sum::<u64>(), rows[0].total);
        assert!(rows.iter().all(|r| r.within_sigma(3.0)));
    }
}
