//! `p`-regularity, quasi `p`-regularity and the splitting of `G_(p)` into odd
//! spheres and the two-cell-bundle spaces `B_n(p)`.
//!
//! `B_n(p)` is the `S^{2n+1}`-bundle over `S^{2n+2p-1}` classified by `α_1`;
//! rationally it contributes the degrees `2n+1` and `2n+2p-1`.
//!
//! Decompositions are built by greedy ascending pairing on the rational type:
//! an unused degree `d` is joined with an unused copy of `d + 2(p-1)` into
//! `B_{(d-1)/2}(p)`, and leftover degrees become spheres. `Spin` groups are
//! first rewritten through `Spin(2n+1)_(p) ≃ Sp(n)_(p)` and
//! `Spin(2n)_(p) ≃ Spin(2n-1)_(p) × S^{2n-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::catalog::{Family, LieGroupId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PLocalFactor {
    Sphere { dim: u32 },
    Bundle { n: u32, p: u64 },
}

impl PLocalFactor {
    /// Rational generator degrees carried by the factor.
    pub fn degrees(&self) -> Vec<u32> {
        match *self {
            PLocalFactor::Sphere { dim } => vec![dim],
            PLocalFactor::Bundle { n, p } => {
                let top = (2 * n as u64).saturating_add(p.saturating_mul(2)) - 1;
                vec![2 * n + 1, u32::try_from(top).unwrap_or(u32::MAX)]
            }
        }
    }

    fn bottom_degree(&self) -> u32 {
        match *self {
            PLocalFactor::Sphere { dim } => dim,
            PLocalFactor::Bundle { n, .. } => 2 * n + 1,
        }
    }
}

impl fmt::Display for PLocalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PLocalFactor::Sphere { dim } => write!(f, "S^{dim}"),
            PLocalFactor::Bundle { n, p } => write!(f, "B{n}({p})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PLocalDecomposition {
    pub group: LieGroupId,
    pub p: u64,
    pub factors: Vec<PLocalFactor>,
}

impl PLocalDecomposition {
    /// Multiset union of factor degrees, sorted.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.factors.iter().flat_map(|f| f.degrees()).collect();
        d.sort_unstable();
        d
    }

    pub fn bundle_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| matches!(f, PLocalFactor::Bundle { .. }))
            .count()
    }

    /// Top degree over all factors.
    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Number of distinct degrees over all factors.
    pub fn distinct_degree_count(&self) -> usize {
        let mut d = self.degrees();
        d.dedup();
        d.len()
    }
}

impl fmt::Display for PLocalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" x "))
    }
}

fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not a prime")));
    }
    Ok(())
}

fn require_simply_connected(g: &LieGroupId) -> Result<()> {
    if !g.is_simply_connected() {
        return Err(Error::unsupported(format!(
            "{g} is not simply connected; apply the covering reduction first"
        )));
    }
    Ok(())
}

pub fn is_quasi_p_regular(g: &LieGroupId, p: u64) -> Result<bool> {
    require_prime(p)?;
    require_simply_connected(g)?;
    if p == 2 {
        return Ok(false);
    }
    let n = g.parameter() as u64;
    Ok(match g.family() {
        Family::Sp => p > n,
        Family::SU => p.saturating_mul(2) > n,
        Family::Spin => p.saturating_mul(2) > n - 1,
        Family::G2 | Family::F4 | Family::E6 => p >= 5,
        Family::E7 | Family::E8 => p >= 11,
        Family::U | Family::SO => unreachable!("rejected above"),
    })
}

/// The bound `b` with `G` `p`-regular exactly for odd primes `p > b`.
pub fn p_regular_bound(g: &LieGroupId) -> Result<u64> {
    require_simply_connected(g)?;
    let n = g.parameter() as u64;
    Ok(match g.family() {
        Family::SU => n - 1,
        Family::Sp => 2 * n - 1,
        // Spin(2k-1) and Spin(2k) both need p > 2k - 3
        Family::Spin if n % 2 == 1 => n - 2,
        Family::Spin => n - 3,
        Family::G2 => 5,
        Family::F4 | Family::E6 => 11,
        Family::E7 => 17,
        Family::E8 => 29,
        Family::U | Family::SO => unreachable!("rejected above"),
    })
}

pub fn is_p_regular(g: &LieGroupId, p: u64) -> Result<bool> {
    require_prime(p)?;
    let bound = p_regular_bound(g)?;
    Ok(p != 2 && p > bound)
}

/// Greedy ascending pairing of `d` with `d + 2(p-1)`.
pub fn pair_degrees(degrees: &[u32], p: u64) -> Vec<PLocalFactor> {
    let gap = (p - 1).saturating_mul(2);
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let mut used = vec![false; sorted.len()];
    let mut factors = Vec::new();
    for i in 0..sorted.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let d = sorted[i];
        let partner = (i + 1..sorted.len())
            .find(|&j| !used[j] && sorted[j] as u64 == (d as u64).saturating_add(gap));
        match partner {
            Some(j) => {
                used[j] = true;
                factors.push(PLocalFactor::Bundle { n: (d - 1) / 2, p });
            }
            None => factors.push(PLocalFactor::Sphere { dim: d }),
        }
    }
    factors
}

pub fn decompose(g: &LieGroupId, p: u64) -> Result<PLocalDecomposition> {
    if p == 2 {
        return Err(Error::not_covered("B_n(p) is only defined at odd primes"));
    }
    if !is_quasi_p_regular(g, p)? {
        return Err(Error::not_covered(format!(
            "{g} is not quasi {p}-regular, so G_({p}) has no sphere/B_n(p) splitting here"
        )));
    }
    let mut factors = spin_reduced_factors(g, p)?;
    factors.sort_by_key(|f| (f.bottom_degree(), *f));
    let out = PLocalDecomposition {
        group: *g,
        p,
        factors,
    };
    let expected = g.rational_type();
    if out.degrees() != expected.degrees() {
        return Err(Error::domain(format!(
            "decomposition {out} of {g} does not reproduce the rational type {:?}",
            expected.degrees()
        )));
    }
    Ok(out)
}

fn spin_reduced_factors(g: &LieGroupId, p: u64) -> Result<Vec<PLocalFactor>> {
    let n = g.parameter();
    match g.family() {
        Family::Spin if n % 2 == 1 => spin_reduced_factors(&LieGroupId::sp((n - 1) / 2)?, p),
        Family::Spin => {
            let mut f = spin_reduced_factors(&LieGroupId::spin(n - 1)?, p)?;
            f.push(PLocalFactor::Sphere { dim: n - 1 });
            Ok(f)
        }
        _ => Ok(pair_degrees(g.rational_type().degrees(), p)),
    }
}

/// Replacement of a non-simply-connected group by something with the same
/// `p`-local (or product) homotopy type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoveringReduction {
    /// Already simply connected.
    Unchanged(LieGroupId),
    /// `SO(n)_(p) ≃ Spin(n)_(p)` at odd `p`.
    Spin(LieGroupId),
    /// `U(n) ≅ S^1 × SU(n)`.
    CircleTimes(LieGroupId),
}

impl CoveringReduction {
    /// The simply-connected group carrying the invariants.
    pub fn simply_connected(&self) -> LieGroupId {
        match *self {
            CoveringReduction::Unchanged(g)
            | CoveringReduction::Spin(g)
            | CoveringReduction::CircleTimes(g) => g,
        }
    }
}

impl fmt::Display for CoveringReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoveringReduction::Unchanged(g) | CoveringReduction::Spin(g) => g.fmt(f),
            CoveringReduction::CircleTimes(g) => write!(f, "S^1 x {g}"),
        }
    }
}

/// Covering reduction at a prime; `p = 0` asks for the rational statement.
pub fn covering_reduction(g: &LieGroupId, p: u64) -> Result<CoveringReduction> {
    if p != 0 {
        require_prime(p)?;
    }
    let n = g.parameter();
    match g.family() {
        Family::SO if p == 2 => Err(Error::unsupported(
            "SO(n) and Spin(n) agree only after inverting 2",
        )),
        Family::SO => Ok(CoveringReduction::Spin(LieGroupId::spin(n)?)),
        Family::U => Ok(CoveringReduction::CircleTimes(LieGroupId::su(n)?)),
        _ => Ok(CoveringReduction::Unchanged(*g)),
    }
}
