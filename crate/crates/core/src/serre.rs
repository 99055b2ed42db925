//! `p`-primary homotopy of odd spheres below stem `2p(p-1) - 2`, and the
//! vanishing checks built on it for maps out of `B_n(p)`.
//!
//! In this range `π_{2n+1+t}(S^{2n+1})_(p)` is `Z/p` exactly when
//!
//! * `t = 2k(p-1) - 2` with `2 <= k <= p-1` and `n < k`, or
//! * `t = 2k(p-1) - 1` with `1 <= k <= p-1`,
//!
//! and zero otherwise (for `t >= 1`).

use serde::{Deserialize, Serialize};

use crate::abelian::{Coefficients, FgAbelianGroup};
use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SerreQuery {
    sphere_dim: u64,
    stem: u64,
    p: u64,
}

/// Primes and indices must stay below this so degree arithmetic cannot overflow.
pub const MAX_ARGUMENT: u64 = 1 << 31;

/// `2p(p-1) - 2`: queries need `stem` strictly below this.
pub fn serre_bound(p: u64) -> u64 {
    2u64.saturating_mul(p)
        .saturating_mul(p.saturating_sub(1))
        .saturating_sub(2)
}

fn require_small(name: &str, v: u64) -> Result<()> {
    if v >= MAX_ARGUMENT {
        return Err(Error::domain(format!(
            "{name} = {v} is too large (limit {MAX_ARGUMENT})"
        )));
    }
    Ok(())
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::domain("only odd primes are handled here"));
    }
    require_small("p", p)?;
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not a prime")));
    }
    Ok(())
}

impl SerreQuery {
    /// Query for `π_{sphere_dim + stem}(S^{sphere_dim})` at `p`.
    pub fn new(sphere_dim: u64, stem: u64, p: u64) -> Result<Self> {
        require_odd_prime(p)?;
        if sphere_dim < 3 || sphere_dim.is_multiple_of(2) {
            return Err(Error::domain(format!(
                "sphere dimension {sphere_dim} must be odd and at least 3"
            )));
        }
        if stem == 0 {
            return Err(Error::domain("stem must be at least 1"));
        }
        let bound = serre_bound(p);
        if stem >= bound {
            return Err(Error::OutOfSerreRange { stem, bound, p });
        }
        Ok(Self {
            sphere_dim,
            stem,
            p,
        })
    }

    pub fn sphere_dim(&self) -> u64 {
        self.sphere_dim
    }
    pub fn stem(&self) -> u64 {
        self.stem
    }
    pub fn p(&self) -> u64 {
        self.p
    }
}

/// Which `Z/p` family a query hits, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SerreFamily {
    /// `t = 2k(p-1) - 2`, `n < k`.
    Even { k: u64 },
    /// `t = 2k(p-1) - 1`.
    Odd { k: u64 },
}

pub fn serre_family(q: &SerreQuery) -> Option<SerreFamily> {
    let n = (q.sphere_dim - 1) / 2;
    let step = 2 * (q.p - 1);
    let t = q.stem;
    if (t + 2).is_multiple_of(step) {
        let k = (t + 2) / step;
        if (2..q.p).contains(&k) && n < k {
            return Some(SerreFamily::Even { k });
        }
    }
    if (t + 1).is_multiple_of(step) {
        let k = (t + 1) / step;
        if (1..q.p).contains(&k) {
            return Some(SerreFamily::Odd { k });
        }
    }
    None
}

/// The `p`-local group `π_{2n+1+t}(S^{2n+1})`.
pub fn serre_pi(q: &SerreQuery) -> FgAbelianGroup {
    let coeffs = Coefficients::LocalAt(q.p);
    match serre_family(q) {
        Some(_) => FgAbelianGroup::with_coefficients(0, &[q.p], coeffs).expect("p is prime"),
        None => FgAbelianGroup::trivial(coeffs),
    }
}

/// `π_i(S^d)_(p)` for any `i`: `Z_(p)` at `i = d`, zero below, Serre table above.
pub fn sphere_homotopy(sphere_dim: u64, i: u64, p: u64) -> Result<FgAbelianGroup> {
    require_odd_prime(p)?;
    let coeffs = Coefficients::LocalAt(p);
    if i < sphere_dim {
        return Ok(FgAbelianGroup::trivial(coeffs));
    }
    if i == sphere_dim {
        return FgAbelianGroup::with_coefficients(1, &[], coeffs);
    }
    Ok(serre_pi(&SerreQuery::new(sphere_dim, i - sphere_dim, p)?))
}

/// Whether `[S^{2n+1} ∪_{α_1} e^{2n+2p-1}, S^{2m+1}]` vanishes, following the
/// case analysis on `n - 1 = k(p-1) - p`.
///
/// Requires `0 < n < p`, `m >= 1`, `n != m` and `n - m + p - 1 != 0`.
pub fn ghost_obstruction_vanishes(n: u64, m: u64, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    require_small("m", m)?;
    if n == 0 || n >= p {
        return Err(Error::domain(format!(
            "need 0 < n < p, got n = {n}, p = {p}"
        )));
    }
    if m == 0 {
        return Err(Error::domain("need m >= 1"));
    }
    if n == m {
        return Err(Error::domain("need n != m"));
    }
    if n + p - 1 == m {
        return Err(Error::domain("need n - m + p - 1 != 0"));
    }
    if m > 1 {
        // π_{2n+2p-1}(S^{2m+1}) = 0 in this range
        return Ok(true);
    }
    let solution = (1..p).find(|&k| k * (p - 1) >= p && k * (p - 1) - p == n - 1);
    Ok(match solution {
        None => true,
        // α_1 ∘ - : π_{2p}(S^3) -> π_{4p-3}(S^3) is onto
        Some(k) => k == 2 && n == p - 1,
    })
}

/// Target of a top-cell obstruction query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionTarget {
    /// `S^{2m+1}`, given by `m`.
    Sphere { m: u64 },
    /// `B_m(p)`.
    Bundle { m: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Vanishing {
    Vanishes,
    NonZero,
    Unknown,
}

/// `π_{4n+4p-3}(B_m(p)) = 0` facts outside `m, n < p`, quoted rather than derived.
/// Entries are `(m, p, degree)`.
const KNOWN_BUNDLE_ZEROS: [(u64, u64, u64); 5] = [
    (1, 3, 13),
    (2, 3, 17),
    (1, 5, 33),
    (7, 11, 93),
    (11, 13, 117),
];

/// Decides whether `π_{4n+4p-3}(X)` vanishes for `X` a sphere or `B_m(p)`.
pub fn top_obstruction_group_vanishes(
    n: u64,
    target: ObstructionTarget,
    p: u64,
) -> Result<Vanishing> {
    require_odd_prime(p)?;
    if n == 0 {
        return Err(Error::domain("need n >= 1"));
    }
    require_small("n", n)?;
    let degree = 4 * n + 4 * p - 3;
    match target {
        ObstructionTarget::Sphere { m } => {
            if m == 0 {
                return Err(Error::domain("need m >= 1"));
            }
            require_small("m", m)?;
            match sphere_homotopy(2 * m + 1, degree, p) {
                Ok(g) if g.is_trivial() => Ok(Vanishing::Vanishes),
                Ok(_) => Ok(Vanishing::NonZero),
                Err(Error::OutOfSerreRange { .. }) => Ok(Vanishing::Unknown),
                Err(e) => Err(e),
            }
        }
        ObstructionTarget::Bundle { m } => {
            if m == 0 {
                return Err(Error::domain("need m >= 1"));
            }
            if (m < p && n < p) || KNOWN_BUNDLE_ZEROS.contains(&(m, p, degree)) {
                Ok(Vanishing::Vanishes)
            } else {
                Ok(Vanishing::Unknown)
            }
        }
    }
}
