//! π_*-kernels `Z^n(G)`, the finiteness criterion for `Z^∞(G)`, the stability
//! and length invariants `sz`, `lz`, and the groups `E_#^n(G)`.
//!
//! Only proven values are reported. Anything outside the tabulated ranges is
//! returned as [`GroupAnswer::Unknown`] with the reason, never extrapolated.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::FgAbelianGroup;
use crate::arith::is_prime;
use crate::catalog::{Family, LieGroupId};
use crate::error::{Error, Result};
use crate::localization::{covering_reduction, is_quasi_p_regular, CoveringReduction};
use crate::psi::PsiParams;

/// The `n` of `Z^n`: a positive integer or `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Degree {
    Finite(u32),
    Infinity,
}

impl Degree {
    pub fn finite(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be at least 1"));
        }
        Ok(Degree::Finite(n))
    }

    /// `self >= k`, with `∞` above everything.
    fn at_least(self, k: u32) -> bool {
        match self {
            Degree::Finite(n) => n >= k,
            Degree::Infinity => true,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(n) => write!(f, "{n}"),
            Degree::Infinity => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Degree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Degree::Infinity),
            t => {
                let n: u32 = t.parse().map_err(|_| {
                    Error::Parse(format!(
                        "bad degree `{t}` (use a positive integer or `inf`)"
                    ))
                })?;
                Degree::finite(n)
            }
        }
    }
}

/// Which primes to localize at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimeSelector {
    Prime(u64),
    /// All odd primes at once.
    Odd,
}

impl PrimeSelector {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not a prime")));
        }
        Ok(PrimeSelector::Prime(p))
    }

    fn localize(self, g: &FgAbelianGroup) -> Result<FgAbelianGroup> {
        match self {
            PrimeSelector::Prime(p) => g.localize(p),
            PrimeSelector::Odd => g.localize_odd(),
        }
    }

    fn is_odd(self) -> bool {
        match self {
            PrimeSelector::Prime(p) => p != 2,
            PrimeSelector::Odd => true,
        }
    }
}

impl fmt::Display for PrimeSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSelector::Prime(p) => write!(f, "{p}"),
            PrimeSelector::Odd => f.write_str("odd"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZnQuery {
    pub group: LieGroupId,
    pub n: Degree,
    pub selector: Option<PrimeSelector>,
}

/// A non-abelian answer that is recorded by presentation only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Presentation {
    /// `[X, X] ≅ Ψ(m, n)`.
    Psi(PsiParams),
    /// `[G2, G2]`: an extension of `Ψ(2, 1)` by `π_14(G2)`.
    G2SelfMaps,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Presentation::Psi(p) => p.fmt(f),
            Presentation::G2SelfMaps => f.write_str("[G2, G2] (extension of Ψ(2, 1) by π_14(G2))"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupAnswer {
    Abelian(FgAbelianGroup),
    Presentation {
        presentation: Presentation,
        localized: Option<PrimeSelector>,
    },
    Unknown(String),
}

impl fmt::Display for GroupAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupAnswer::Abelian(g) => g.fmt(f),
            GroupAnswer::Presentation {
                presentation,
                localized: None,
            } => presentation.fmt(f),
            GroupAnswer::Presentation {
                presentation,
                localized: Some(s),
            } => {
                write!(f, "{presentation} localized at {s}")
            }
            GroupAnswer::Unknown(why) => write!(f, "unknown: {why}"),
        }
    }
}

/// How an answer is backed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    /// A tabulated, proven value.
    Proved,
    /// Computed from proven values by a mechanical rule (localization, pairing, subset sums).
    Derived,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub group: GroupAnswer,
    pub coverage: Coverage,
}

impl Answer {
    fn proved(group: FgAbelianGroup) -> Self {
        Self {
            group: GroupAnswer::Abelian(group),
            coverage: Coverage::Proved,
        }
    }

    fn unknown(why: impl Into<String>) -> Self {
        Self {
            group: GroupAnswer::Unknown(why.into()),
            coverage: Coverage::Unknown,
        }
    }

    pub fn abelian(&self) -> Option<&FgAbelianGroup> {
        match &self.group {
            GroupAnswer::Abelian(g) => Some(g),
            _ => None,
        }
    }
}

fn int(free: u32, torsion: &[u64]) -> FgAbelianGroup {
    FgAbelianGroup::integral(free, torsion).expect("table entries are valid")
}

/// The integral table for `Z^n(G)`, `G ∈ {SU(3), Sp(2), G2}`.
fn integral_zn(g: &LieGroupId, n: Degree) -> Result<GroupAnswer> {
    let low = |presentation| GroupAnswer::Presentation {
        presentation,
        localized: None,
    };
    let ab = GroupAnswer::Abelian;
    let below = |k: u32| !n.at_least(k);
    Ok(match (g.family(), g.parameter()) {
        (Family::SU, 3) => {
            if below(3) {
                low(Presentation::Psi(PsiParams::new(12, 1)?))
            } else if below(5) {
                ab(int(1, &[12]))
            } else {
                ab(int(0, &[12]))
            }
        }
        (Family::Sp, 2) => {
            if below(3) {
                low(Presentation::Psi(PsiParams::new(120, 12)?))
            } else if below(7) {
                ab(int(1, &[120]))
            } else {
                ab(int(0, &[120]))
            }
        }
        (Family::G2, _) => {
            if below(3) {
                low(Presentation::G2SelfMaps)
            } else if below(11) {
                ab(int(1, &[2, 2, 8, 21]))
            } else if below(15) {
                ab(int(0, &[2, 2, 8, 21]))
            } else {
                GroupAnswer::Unknown(format!(
                    "Z^{n}(G2) is only determined for n <= 14 integrally; \
                     its odd part is Z/21 for all n >= 11, the 2-primary part is open"
                ))
            }
        }
        _ => {
            return Err(Error::unsupported(format!(
                "Z^n tables exist only for SU(3), Sp(2) and G2, not {g}"
            )))
        }
    })
}

pub fn z_n_group(q: &ZnQuery) -> Result<Answer> {
    let base = integral_zn(&q.group, q.n)?;
    let Some(sel) = q.selector else {
        return Ok(match base {
            GroupAnswer::Unknown(why) => Answer::unknown(why),
            group => Answer {
                group,
                coverage: Coverage::Proved,
            },
        });
    };
    if let PrimeSelector::Prime(p) = sel {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not a prime")));
        }
    }
    // odd part of Z^n(G2) for n >= 11, including n = ∞
    if q.group.family() == Family::G2 && q.n.at_least(11) && sel.is_odd() {
        return Ok(Answer::proved(sel.localize(&int(0, &[21]))?));
    }
    Ok(match base {
        GroupAnswer::Abelian(g) => Answer {
            group: GroupAnswer::Abelian(sel.localize(&g)?),
            coverage: Coverage::Derived,
        },
        GroupAnswer::Presentation { presentation, .. } => Answer {
            group: GroupAnswer::Presentation {
                presentation,
                localized: Some(sel),
            },
            coverage: Coverage::Derived,
        },
        GroupAnswer::Unknown(why) => Answer::unknown(format!("{why} (asked at {sel})")),
    })
}

/// A product of at least two distinct exterior generators whose degree is a generator degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GhostMonomial {
    /// Indices into the rational type, increasing.
    pub subset: Vec<usize>,
    pub target: usize,
}

impl GhostMonomial {
    pub fn subset_degrees(&self, degrees: &[u32]) -> Vec<u32> {
        self.subset.iter().map(|&i| degrees[i]).collect()
    }
}

/// Depth-first subset-sum search over generator indices, pruned at the top degree.
/// `visit` returns `false` to stop early.
fn search_ghosts(degrees: &[u32], visit: &mut dyn FnMut(GhostMonomial) -> bool) {
    let top = degrees.iter().copied().max().unwrap_or(0);
    let mut stack: Vec<usize> = Vec::new();

    fn walk(
        degrees: &[u32],
        top: u32,
        start: usize,
        sum: u32,
        stack: &mut Vec<usize>,
        visit: &mut dyn FnMut(GhostMonomial) -> bool,
    ) -> bool {
        if stack.len() >= 2 {
            for (j, &d) in degrees.iter().enumerate() {
                if d == sum && !stack.contains(&j) {
                    let keep_going = visit(GhostMonomial {
                        subset: stack.clone(),
                        target: j,
                    });
                    if !keep_going {
                        return false;
                    }
                }
            }
        }
        for i in start..degrees.len() {
            let s = sum + degrees[i];
            if s > top {
                // degrees are sorted, later ones only overshoot further
                break;
            }
            stack.push(i);
            let keep_going = walk(degrees, top, i + 1, s, stack, visit);
            stack.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    walk(degrees, top, 0, 0, &mut stack, visit);
}

pub fn ghost_monomials(g: &LieGroupId) -> Vec<GhostMonomial> {
    let t = g.rational_type();
    let mut out = Vec::new();
    search_ghosts(t.degrees(), &mut |m| {
        out.push(m);
        true
    });
    out
}

/// First ghost monomial found, if any.
pub fn first_ghost_monomial(g: &LieGroupId) -> Option<GhostMonomial> {
    let t = g.rational_type();
    let mut found = None;
    search_ghosts(t.degrees(), &mut |m| {
        found = Some(m);
        false
    });
    found
}

/// `Z^∞(G)` is finite iff no ghost monomial exists.
///
/// `SO(n)` and `U(n)` are handled through their rational types, which are
/// those of `Spin(n)` and `S^1 × SU(n)`.
pub fn z_infty_finite(g: &LieGroupId) -> bool {
    first_ghost_monomial(g).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Context {
    Rational,
    LocalAt(u64),
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Rational => f.write_str("rational"),
            Context::LocalAt(p) => write!(f, "p={p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub sz: u32,
    pub lz: u32,
    pub context: Context,
}

fn is_spin_4n(g: &LieGroupId) -> bool {
    g.family() == Family::Spin && g.parameter().is_multiple_of(4)
}

pub fn sz_lz(g: &LieGroupId, context: Context) -> Result<InvariantReport> {
    match context {
        Context::Rational => {
            let t = g.rational_type();
            Ok(InvariantReport {
                sz: t.max_degree(),
                lz: t.distinct_count() as u32,
                context,
            })
        }
        Context::LocalAt(p) => {
            if !is_prime(p) {
                return Err(Error::domain(format!("{p} is not a prime")));
            }
            if p == 2 {
                return Err(Error::not_covered("sz_2 and lz_2 are not determined"));
            }
            let reduction = covering_reduction(g, p)?;
            let h = reduction.simply_connected();
            let mut report = local_sz_lz(&h, p)?;
            if let CoveringReduction::CircleTimes(_) = reduction {
                report.lz += 1;
            }
            Ok(report)
        }
    }
}

fn local_sz_lz(g: &LieGroupId, p: u64) -> Result<InvariantReport> {
    let context = Context::LocalAt(p);
    if g.family() == Family::G2 && p == 3 {
        return Ok(InvariantReport {
            sz: 11,
            lz: 2,
            context,
        });
    }
    if !is_quasi_p_regular(g, p)? {
        return Err(Error::not_covered(format!(
            "{g} is not quasi {p}-regular; sz_{p} and lz_{p} are not determined"
        )));
    }
    let t = g.rational_type();
    let rank = t.rank() as u32;
    Ok(InvariantReport {
        sz: t.max_degree(),
        lz: if is_spin_4n(g) { rank - 1 } else { rank },
        context,
    })
}

pub fn e_sharp_group(g: &LieGroupId, n: Degree) -> Result<Answer> {
    let (stable_from, order) = match (g.family(), g.parameter()) {
        (Family::SU, 3) => (5, 12),
        (Family::Sp, 2) => (7, 120),
        _ => {
            return Err(Error::unsupported(format!(
                "E_#^n is tabulated only for SU(3) and Sp(2), not {g}"
            )))
        }
    };
    if n.at_least(stable_from) {
        Ok(Answer::proved(int(0, &[order])))
    } else {
        Ok(Answer::unknown(format!(
            "E_#^{n}({g}) is in bijection with Z^{n}({g}) but its group law is only known for n >= {stable_from}"
        )))
    }
}

/// The `n` with `E_#^∞(G)_(p) = E_#^n(G)_(p)`.
pub fn e_sharp_stability_dim(g: &LieGroupId, p: u64) -> Result<u32> {
    if !is_quasi_p_regular(g, p)? {
        return Err(Error::not_covered(format!(
            "{g} is not quasi {p}-regular; no stabilization dimension is known"
        )));
    }
    Ok(match g.family() {
        Family::SU | Family::Sp => g.rational_type().max_degree(),
        _ => g.dimension(),
    })
}
