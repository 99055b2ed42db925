//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is `R^r + Z/d_1 + ... + Z/d_k` with `d_1 | d_2 | ... | d_k`, each
//! `d_i >= 2`, where `R` is the coefficient ring: the integers, the integers
//! localized at a prime, the integers with all odd primes inverted, or the
//! rationals. Canonical form is unique, so derived `Eq` decides isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, p_part};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficients {
    Integral,
    /// `Z_(p)`; `LocalAt(0)` is the rationalization.
    LocalAt(u64),
    /// Integers localized away from 2.
    OddLocal,
}

impl Coefficients {
    pub const RATIONAL: Coefficients = Coefficients::LocalAt(0);

    /// Whether a prime survives (is not inverted) in this ring.
    fn keeps_prime(self, q: u64) -> bool {
        match self {
            Coefficients::Integral => true,
            Coefficients::LocalAt(p) => p == q,
            Coefficients::OddLocal => q != 2,
        }
    }

    fn ring_symbol(self) -> String {
        match self {
            Coefficients::Integral => "Z".to_string(),
            Coefficients::LocalAt(0) => "Q".to_string(),
            Coefficients::LocalAt(p) => format!("Z_({p})"),
            Coefficients::OddLocal => "Z_(odd)".to_string(),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring_symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    free_rank: u32,
    torsion: Vec<u64>,
    coefficients: Coefficients,
}

impl FgAbelianGroup {
    pub fn trivial(coefficients: Coefficients) -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
            coefficients,
        }
    }

    /// Integral group `Z^free_rank + Z/c_1 + ...` from arbitrary cyclic orders.
    ///
    /// Orders equal to 1 are dropped; an order of 0 is rejected.
    pub fn integral(free_rank: u32, cyclic_orders: &[u64]) -> Result<Self> {
        Self::with_coefficients(free_rank, cyclic_orders, Coefficients::Integral)
    }

    pub fn cyclic(order: u64) -> Self {
        Self::integral(0, &[order]).expect("nonzero order")
    }

    pub fn free(rank: u32) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
            coefficients: Coefficients::Integral,
        }
    }

    pub fn with_coefficients(
        free_rank: u32,
        cyclic_orders: &[u64],
        coefficients: Coefficients,
    ) -> Result<Self> {
        if cyclic_orders.contains(&0) {
            return Err(Error::domain(
                "cyclic factor of order 0; use the free rank instead",
            ));
        }
        if let Coefficients::LocalAt(p) = coefficients {
            if p != 0 && !is_prime(p) {
                return Err(Error::domain(format!("{p} is not a prime")));
            }
        }
        // torsion prime to the coefficient ring's primes is zero there
        let orders: Vec<u64> = cyclic_orders
            .iter()
            .map(|&d| {
                factorize(d)
                    .into_iter()
                    .filter(|&(q, _)| coefficients.keeps_prime(q))
                    .map(|(q, e)| q.pow(e))
                    .product()
            })
            .collect();
        Ok(Self {
            free_rank,
            torsion: invariant_factors(&orders)?,
            coefficients,
        })
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    /// Elementary divisors `p^k`, grouped by prime in increasing order.
    pub fn primary_decomposition(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = self
            .torsion
            .iter()
            .flat_map(|&d| factorize(d).into_iter().map(|(p, e)| (p, p.pow(e))))
            .collect();
        out.sort_unstable();
        out
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.coefficients != other.coefficients {
            return Err(Error::CoefficientMismatch {
                left: self.coefficients.to_string(),
                right: other.coefficients.to_string(),
            });
        }
        let mut orders = self.torsion.clone();
        orders.extend_from_slice(&other.torsion);
        Ok(Self {
            free_rank: self.free_rank + other.free_rank,
            torsion: invariant_factors(&orders)?,
            coefficients: self.coefficients,
        })
    }

    /// The subgroup of elements of `p`-power order, with the integral marker.
    pub fn p_primary_part(&self, p: u64) -> Self {
        let orders: Vec<u64> = self.torsion.iter().map(|&d| p_part(d, p)).collect();
        Self {
            free_rank: 0,
            torsion: invariant_factors(&orders).expect("a subgroup of a valid group"),
            coefficients: self.coefficients,
        }
    }

    /// Localization at `p`; `p = 0` rationalizes.
    pub fn localize(&self, p: u64) -> Result<Self> {
        self.require_integral()?;
        Self::with_coefficients(self.free_rank, &self.torsion, Coefficients::LocalAt(p))
    }

    /// Localization away from 2.
    pub fn localize_odd(&self) -> Result<Self> {
        self.require_integral()?;
        Self::with_coefficients(self.free_rank, &self.torsion, Coefficients::OddLocal)
    }

    fn require_integral(&self) -> Result<()> {
        if self.coefficients != Coefficients::Integral {
            return Err(Error::domain(format!(
                "localization expects an integral group, got coefficients {}",
                self.coefficients
            )));
        }
        Ok(())
    }
}

/// Invariant-factor chain of `Z/c_1 + ... + Z/c_k`.
///
/// Fails when the total order does not fit in a `u64`; every factor divides
/// the total, so nothing else can overflow.
fn invariant_factors(orders: &[u64]) -> Result<Vec<u64>> {
    orders
        .iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| Error::domain("torsion order exceeds the 64-bit range"))?;
    // prime -> prime-power orders, largest last
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &d in orders {
        for (p, e) in factorize(d) {
            by_prime.entry(p).or_default().push(p.pow(e));
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut chain = vec![1u64; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable();
        // align to the top of the chain so each factor divides the next
        let offset = len - powers.len();
        for (i, q) in powers.iter().enumerate() {
            chain[offset + i] *= q;
        }
    }
    Ok(chain)
}

impl fmt::Display for FgAbelianGroup {
    /// `Z^r + Z/d1 + ...`; the free symbol follows the coefficient ring and
    /// the trivial group prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(self.coefficients.ring_symbol()),
            r => parts.push(format!("{}^{r}", self.coefficients.ring_symbol())),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
