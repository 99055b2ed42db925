//! Static data for compact Lie groups: rational types, ranks and dimensions.
//!
//! The simply-connected simple groups are the classical families `SU(n)`,
//! `Sp(n)`, `Spin(n)` and the five exceptional groups. `U(n)` and `SO(n)` are
//! admitted as well; they only enter through covering reductions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    SU,
    Sp,
    Spin,
    G2,
    F4,
    E6,
    E7,
    E8,
    U,
    SO,
}

impl Family {
    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8
        )
    }

    fn min_parameter(self) -> Option<u32> {
        match self {
            Family::SU | Family::U => Some(2),
            Family::Sp => Some(1),
            Family::Spin | Family::SO => Some(3),
            _ => None,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::Spin => "Spin",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::U => "U",
            Family::SO => "SO",
        }
    }
}

/// A compact Lie group, identified by family and (for classical families) parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieGroupId {
    family: Family,
    parameter: Option<u32>,
}

impl LieGroupId {
    /// Largest accepted classical parameter.
    pub const MAX_PARAMETER: u32 = 4096;

    pub fn new(family: Family, parameter: Option<u32>) -> Result<Self> {
        match (family.min_parameter(), parameter) {
            (Some(_), Some(n)) if n > Self::MAX_PARAMETER => Err(Error::domain(format!(
                "{}({n}) exceeds the parameter limit {}",
                family.label(),
                Self::MAX_PARAMETER
            ))),
            (Some(min), Some(n)) if n >= min => Ok(Self { family, parameter }),
            (Some(min), Some(n)) => Err(Error::domain(format!(
                "{}({n}) requires parameter >= {min}",
                family.label()
            ))),
            (Some(_), None) => Err(Error::domain(format!(
                "{} requires a parameter",
                family.label()
            ))),
            (None, None) => Ok(Self { family, parameter }),
            (None, Some(_)) => Err(Error::domain(format!(
                "{} takes no parameter",
                family.label()
            ))),
        }
    }

    pub fn su(n: u32) -> Result<Self> {
        Self::new(Family::SU, Some(n))
    }
    pub fn sp(n: u32) -> Result<Self> {
        Self::new(Family::Sp, Some(n))
    }
    pub fn spin(n: u32) -> Result<Self> {
        Self::new(Family::Spin, Some(n))
    }
    pub fn u(n: u32) -> Result<Self> {
        Self::new(Family::U, Some(n))
    }
    pub fn so(n: u32) -> Result<Self> {
        Self::new(Family::SO, Some(n))
    }
    pub fn exceptional(family: Family) -> Result<Self> {
        Self::new(family, None)
    }

    pub const G2: LieGroupId = LieGroupId {
        family: Family::G2,
        parameter: None,
    };
    pub const F4: LieGroupId = LieGroupId {
        family: Family::F4,
        parameter: None,
    };
    pub const E6: LieGroupId = LieGroupId {
        family: Family::E6,
        parameter: None,
    };
    pub const E7: LieGroupId = LieGroupId {
        family: Family::E7,
        parameter: None,
    };
    pub const E8: LieGroupId = LieGroupId {
        family: Family::E8,
        parameter: None,
    };

    pub const EXCEPTIONAL: [LieGroupId; 5] = [Self::G2, Self::F4, Self::E6, Self::E7, Self::E8];

    pub fn family(&self) -> Family {
        self.family
    }

    /// The classical parameter `n`; `0` for exceptional groups.
    pub fn parameter(&self) -> u32 {
        self.parameter.unwrap_or(0)
    }

    /// True for the simply-connected simple groups (everything except `U(n)`, `SO(n)`).
    pub fn is_simply_connected(&self) -> bool {
        !matches!(self.family, Family::U | Family::SO)
    }

    /// Compact name used on the command line, e.g. `SU3`, `G2`.
    pub fn short_name(&self) -> String {
        match self.parameter {
            Some(n) => format!("{}{n}", self.family.label()),
            None => self.family.label().to_string(),
        }
    }

    pub fn rational_type(&self) -> RationalType {
        rational_type(self)
    }

    pub fn dimension(&self) -> u32 {
        dimension(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl fmt::Display for LieGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter {
            Some(n) => write!(f, "{}({n})", self.family.label()),
            None => f.write_str(self.family.label()),
        }
    }
}

impl FromStr for LieGroupId {
    type Err = Error;

    /// Accepts `SU3`, `Sp2`, `Spin8`, `G2`, `U4`, `SO7` and the bracketed forms `SU(3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognised group name `{s}`"));
        for g in Self::EXCEPTIONAL {
            if s.eq_ignore_ascii_case(g.family.label()) {
                return Ok(g);
            }
        }
        // longest prefixes first so that `Spin`/`SO` win over `Sp`/`S...`
        const PREFIXES: [(&str, Family); 5] = [
            ("spin", Family::Spin),
            ("su", Family::SU),
            ("so", Family::SO),
            ("sp", Family::Sp),
            ("u", Family::U),
        ];
        let lower = s.to_ascii_lowercase();
        let (prefix, family) = PREFIXES
            .iter()
            .find(|(p, _)| lower.starts_with(p))
            .ok_or_else(bad)?;
        let rest = &s[prefix.len()..];
        let digits = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(rest);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: u32 = digits.parse().map_err(|_| bad())?;
        LieGroupId::new(*family, Some(n))
    }
}

/// Degrees `n_1 <= ... <= n_r` of the exterior generators of `H^*(G; Q)`.
///
/// Stored as a multiset: `Spin(4n)` has a repeated degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalType(Vec<u32>);

impl RationalType {
    pub fn from_degrees(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() || degrees.iter().any(|d| d % 2 == 0) {
            return Err(Error::domain(
                "rational type must be a nonempty list of odd degrees",
            ));
        }
        degrees.sort_unstable();
        Ok(Self(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Top degree `n_r`.
    pub fn max_degree(&self) -> u32 {
        *self.0.last().expect("rational types are nonempty")
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of distinct degrees.
    pub fn distinct_count(&self) -> usize {
        let mut d = self.0.clone();
        d.dedup();
        d.len()
    }
}

const G2_DEGREES: [u32; 2] = [3, 11];
const F4_DEGREES: [u32; 4] = [3, 11, 15, 23];
const E6_DEGREES: [u32; 6] = [3, 9, 11, 15, 17, 23];
const E7_DEGREES: [u32; 7] = [3, 11, 15, 19, 23, 27, 35];
const E8_DEGREES: [u32; 8] = [3, 15, 23, 27, 35, 39, 47, 59];

pub fn rational_type(g: &LieGroupId) -> RationalType {
    let n = g.parameter();
    let degrees: Vec<u32> = match g.family {
        Family::SU => (2..=n).map(|k| 2 * k - 1).collect(),
        Family::U => (1..=n).map(|k| 2 * k - 1).collect(),
        Family::Sp => (1..=n).map(|k| 4 * k - 1).collect(),
        Family::Spin | Family::SO if n % 2 == 1 => (1..=(n - 1) / 2).map(|k| 4 * k - 1).collect(),
        Family::Spin | Family::SO => {
            let m = n / 2;
            let mut d: Vec<u32> = (2..=m).map(|k| 4 * k - 5).collect();
            d.push(2 * m - 1);
            d
        }
        Family::G2 => G2_DEGREES.to_vec(),
        Family::F4 => F4_DEGREES.to_vec(),
        Family::E6 => E6_DEGREES.to_vec(),
        Family::E7 => E7_DEGREES.to_vec(),
        Family::E8 => E8_DEGREES.to_vec(),
    };
    RationalType::from_degrees(degrees).expect("catalog degrees are odd and nonempty")
}

pub fn dimension(g: &LieGroupId) -> u32 {
    let n = g.parameter();
    match g.family {
        Family::SU => n * n - 1,
        Family::U => n * n,
        Family::Sp => n * (2 * n + 1),
        Family::Spin | Family::SO => n * (n - 1) / 2,
        Family::G2 => 14,
        Family::F4 => 52,
        Family::E6 => 78,
        Family::E7 => 133,
        Family::E8 => 248,
    }
}

pub fn rank(g: &LieGroupId) -> usize {
    rational_type(g).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> LieGroupId {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(g("SU3").rational_type().degrees(), &[3, 5]);
        assert_eq!(g("G2").rational_type().degrees(), &[3, 11]);
        assert_eq!(
            g("E8").rational_type().degrees(),
            &[3, 15, 23, 27, 35, 39, 47, 59]
        );
        assert_eq!(g("G2").dimension(), 14);
        assert_eq!(g("SU3").dimension(), 8);
        assert_eq!(g("Sp2").dimension(), 10);
        assert_eq!(g("Sp2").rank(), 2);
        assert_eq!(g("Spin8").rank(), 4);
        assert_eq!(g("E6").rank(), 6);
    }

    #[test]
    fn e8_degrees_are_the_b11_pairs() {
        // the (E8)_11 factors B_1, B_7, B_13, B_19 carry degrees 2k+1 and 2k+21
        let mut from_pairs: Vec<u32> = [1, 7, 13, 19]
            .iter()
            .flat_map(|k| [2 * k + 1, 2 * k + 21])
            .collect();
        from_pairs.sort_unstable();
        assert_eq!(g("E8").rational_type().degrees(), from_pairs.as_slice());
    }

    #[test]
    fn exceptional_degrees_match_the_quasi_regular_products() {
        // (F4)_5 = B_1(5) x B_7(5), (E6)_5 = B_1(5) x B_4(5) x B_7(5),
        // (E8)_13 = B_1 x B_7 x B_11 x B_17 at 13
        let pairs = |ks: &[u32], p: u32| {
            let mut d: Vec<u32> = ks
                .iter()
                .flat_map(|k| [2 * k + 1, 2 * k + 2 * p - 1])
                .collect();
            d.sort_unstable();
            d
        };
        assert_eq!(
            g("F4").rational_type().degrees(),
            pairs(&[1, 7], 5).as_slice()
        );
        assert_eq!(
            g("E6").rational_type().degrees(),
            pairs(&[1, 4, 7], 5).as_slice()
        );
        assert_eq!(
            g("E8").rational_type().degrees(),
            pairs(&[1, 7, 11, 17], 13).as_slice()
        );
    }

    #[test]
    fn spin_duplicates_are_kept() {
        assert_eq!(g("Spin8").rational_type().degrees(), &[3, 7, 7, 11]);
        assert_eq!(g("Spin8").rational_type().distinct_count(), 3);
        assert_eq!(g("Spin4").rational_type().degrees(), &[3, 3]);
        assert_eq!(g("Spin10").rational_type().degrees(), &[3, 7, 9, 11, 15]);
    }

    #[test]
    fn degree_sums_and_variants() {
        let mut all = LieGroupId::EXCEPTIONAL.to_vec();
        for n in 2..=20 {
            all.push(LieGroupId::su(n).unwrap());
            all.push(LieGroupId::u(n).unwrap());
        }
        for n in 1..=20 {
            all.push(LieGroupId::sp(n).unwrap());
        }
        for n in 3..=40 {
            all.push(LieGroupId::spin(n).unwrap());
            all.push(LieGroupId::so(n).unwrap());
        }
        for h in &all {
            let t = h.rational_type();
            assert_eq!(t.total_degree(), h.dimension(), "{h}");
            assert!(t.degrees().windows(2).all(|w| w[0] <= w[1]));
            assert!(t.degrees().iter().all(|d| d % 2 == 1));
        }
        for n in 3..=40 {
            assert_eq!(
                LieGroupId::so(n).unwrap().rational_type(),
                LieGroupId::spin(n).unwrap().rational_type()
            );
        }
        for n in 2..=20 {
            let mut d = vec![1];
            d.extend_from_slice(LieGroupId::su(n).unwrap().rational_type().degrees());
            assert_eq!(
                LieGroupId::u(n).unwrap().rational_type().degrees(),
                d.as_slice()
            );
        }
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(g("Spin8").to_string(), "Spin(8)");
        assert_eq!(g("SU(3)"), g("SU3"));
        assert_eq!(g("so7").short_name(), "SO7");
        assert!(matches!("SU1".parse::<LieGroupId>(), Err(Error::Domain(_))));
        assert!(matches!(
            "Spin2".parse::<LieGroupId>(),
            Err(Error::Domain(_))
        ));
        assert!(matches!("Sp0".parse::<LieGroupId>(), Err(Error::Domain(_))));
        assert!(matches!("U1".parse::<LieGroupId>(), Err(Error::Domain(_))));
        assert!("Sp1".parse::<LieGroupId>().is_ok());
        assert!(matches!("H4".parse::<LieGroupId>(), Err(Error::Parse(_))));
        assert!(matches!("SU".parse::<LieGroupId>(), Err(Error::Parse(_))));
        assert!(LieGroupId::new(Family::G2, Some(2)).is_err());
    }
}
