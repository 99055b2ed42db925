//! The batch `table` command and the generated p-regular threshold statements.

use serde_json::{json, Value};

use zkernel::arith::{is_prime, primes_between};
use zkernel::invariants::{sz_lz, z_infty_finite, Context, Coverage};
use zkernel::localization::{
    covering_reduction, is_p_regular, is_quasi_p_regular, p_regular_bound,
};
use zkernel::scan::{family_members, map_collect, Strategy};
use zkernel::{Error, Family, LieGroupId};

use crate::{reduced_decomposition, Response, TableArgs};

/// Largest prime a table may scan to.
pub const MAX_PRIME: u64 = 1 << 20;

/// Placeholder for cells with no proven value.
pub const NOT_COVERED: &str = "—";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Quasi,
    Regular,
    Decomposition,
    Sz,
    Lz,
    Finite,
}

impl Column {
    fn name(self) -> &'static str {
        match self {
            Column::Quasi => "quasi",
            Column::Regular => "regular",
            Column::Decomposition => "decomposition",
            Column::Sz => "sz",
            Column::Lz => "lz",
            Column::Finite => "finite",
        }
    }

    fn parse(s: &str) -> Result<Self, Error> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "quasi" => Column::Quasi,
            "regular" => Column::Regular,
            "decomposition" | "decompose" => Column::Decomposition,
            "sz" => Column::Sz,
            "lz" => Column::Lz,
            "finite" => Column::Finite,
            other => return Err(Error::Parse(format!("unknown column `{other}`"))),
        })
    }
}

/// A validated table request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub groups: Vec<LieGroupId>,
    pub primes: Vec<u64>,
    pub columns: Vec<Column>,
}

impl TableSpec {
    pub fn from_args(
        family: &str,
        ranks: &str,
        primes: &str,
        columns: &str,
    ) -> Result<Self, Error> {
        let family = parse_family(family)?;
        let (lo, hi) = parse_range(ranks)?;
        let (plo, phi) = parse_range(primes)?;
        let columns = columns
            .split(',')
            .filter(|c| !c.trim().is_empty())
            .map(Column::parse)
            .collect::<Result<Vec<_>, _>>()?;
        if phi > MAX_PRIME {
            return Err(Error::Domain(format!(
                "prime range ends above the limit {MAX_PRIME}"
            )));
        }
        let hi = hi.min(LieGroupId::MAX_PARAMETER as u64);
        let groups = if lo > hi && !family.is_exceptional() {
            Vec::new()
        } else {
            family_members(family, lo as u32..=hi as u32)
        };
        let primes = if plo > phi {
            Vec::new()
        } else {
            primes_between(plo, phi)
        };
        Ok(Self {
            groups,
            primes,
            columns,
        })
    }

    /// Cells of every `(group, prime)` row, in group-then-prime order.
    pub fn rows(&self) -> Vec<Vec<String>> {
        let pairs: Vec<(LieGroupId, u64)> = self
            .groups
            .iter()
            .flat_map(|g| self.primes.iter().map(move |&p| (*g, p)))
            .collect();
        map_collect(Strategy::Parallel, &pairs, |&(g, p)| {
            let mut row = vec![g.short_name(), p.to_string()];
            row.extend(self.columns.iter().map(|&c| cell(&g, p, c)));
            row
        })
    }

    pub fn header(&self) -> Vec<String> {
        let mut h = vec!["group".to_string(), "p".to_string()];
        h.extend(self.columns.iter().map(|c| c.name().to_string()));
        h
    }
}

fn parse_family(s: &str) -> Result<Family, Error> {
    let f = match s.trim().to_ascii_lowercase().as_str() {
        "su" => Family::SU,
        "sp" => Family::Sp,
        "spin" => Family::Spin,
        "u" => Family::U,
        "so" => Family::SO,
        "g2" => Family::G2,
        "f4" => Family::F4,
        "e6" => Family::E6,
        "e7" => Family::E7,
        "e8" => Family::E8,
        other => return Err(Error::Parse(format!("unknown family `{other}`"))),
    };
    Ok(f)
}

/// `a..b`, `a..=b` (both inclusive) or `a`.
fn parse_range(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Parse(format!("bad range `{s}` (use a..b or a single value)"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.strip_prefix('=').unwrap_or(b))?)),
        None => {
            let v = num(s)?;
            Ok((v, v))
        }
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn covered(r: Result<String, Error>) -> String {
    r.unwrap_or_else(|_| NOT_COVERED.to_string())
}

fn cell(g: &LieGroupId, p: u64, column: Column) -> String {
    let reduced = || covering_reduction(g, p).map(|r| r.simply_connected());
    match column {
        Column::Quasi => covered(
            reduced()
                .and_then(|h| is_quasi_p_regular(&h, p))
                .map(yes_no),
        ),
        Column::Regular => covered(reduced().and_then(|h| is_p_regular(&h, p)).map(yes_no)),
        Column::Decomposition => covered(reduced_decomposition(g, p).map(|(d, circle)| {
            if circle {
                format!("S^1 x {d}")
            } else {
                d.to_string()
            }
        })),
        Column::Sz => covered(sz_lz(g, Context::LocalAt(p)).map(|r| r.sz.to_string())),
        Column::Lz => covered(sz_lz(g, Context::LocalAt(p)).map(|r| r.lz.to_string())),
        Column::Finite => yes_no(z_infty_finite(g)),
    }
}

/// Left-aligned columns separated by two spaces, no trailing whitespace.
pub fn render(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(w - c.chars().count() + 2));
            }
        }
        s
    };
    let mut out = vec![line(header)];
    out.extend(rows.iter().map(|r| line(r)));
    out.join("\n")
}

/// `a n + c` in the usual shorthand.
fn affine(a: i64, c: i64) -> String {
    let lead = match a {
        0 => return c.to_string(),
        1 => "n".to_string(),
        -1 => "-n".to_string(),
        _ => format!("{a}n"),
    };
    match c {
        0 => lead,
        c if c > 0 => format!("{lead}+{c}"),
        c => format!("{lead}-{}", -c),
    }
}

/// The smallest odd prime above `bound`.
fn first_prime_above(bound: u64) -> u64 {
    (bound.max(2) + 1..)
        .find(|&q| is_prime(q))
        .expect("primes are unbounded")
}

/// `(bound, sz, lz)` for a group in its regular range.
fn regular_values(g: &LieGroupId) -> Result<[i64; 3], Error> {
    let bound = p_regular_bound(g)?;
    let r = sz_lz(g, Context::LocalAt(first_prime_above(bound)))?;
    Ok([bound as i64, r.sz as i64, r.lz as i64])
}

/// Affine fit in `n` of bound, sz and lz over three samples, checked on the third.
fn fit(
    group: impl Fn(u32) -> Result<LieGroupId, Error>,
    samples: [u32; 3],
) -> Result<[(i64, i64); 3], Error> {
    let values = samples
        .iter()
        .map(|&k| regular_values(&group(k)?))
        .collect::<Result<Vec<_>, _>>()?;
    let (k0, k1, k2) = (samples[0] as i64, samples[1] as i64, samples[2] as i64);
    let mut out = [(0, 0); 3];
    for i in 0..3 {
        let rise = values[1][i] - values[0][i];
        let run = k1 - k0;
        if rise % run != 0 {
            return Err(Error::Domain("non-integral slope in threshold fit".into()));
        }
        let a = rise / run;
        let c = values[0][i] - a * k0;
        if a * k2 + c != values[2][i] {
            return Err(Error::Domain("threshold values are not affine in n".into()));
        }
        out[i] = (a, c);
    }
    Ok(out)
}

fn classical_row(label: &str, condition: &str, f: [(i64, i64); 3]) -> String {
    let [b, sz, lz] = f;
    format!(
        "If p > {}{condition}, sz_p({label}) = {} and lz_p({label}) = {}",
        affine(b.0, b.1),
        affine(sz.0, sz.1),
        affine(lz.0, lz.1)
    )
}

fn exceptional_label(g: &LieGroupId) -> String {
    let s = g.short_name();
    format!("{}_{}", &s[..1], &s[1..])
}

/// The nine closed-form statements for sz_p and lz_p in the p-regular range,
/// with every threshold and value recomputed from the library.
pub fn regular_threshold_rows() -> Result<Vec<String>, Error> {
    let mut rows = vec![
        classical_row("SU(n)", "", fit(LieGroupId::su, [3, 4, 5])?),
        classical_row("Sp(n)", "", fit(LieGroupId::sp, [2, 3, 4])?),
        classical_row(
            "Spin(2n-1)",
            "",
            fit(|k| LieGroupId::spin(2 * k - 1), [4, 5, 6])?,
        ),
        classical_row(
            "Spin(2n)",
            " and n odd",
            fit(|k| LieGroupId::spin(2 * k), [5, 7, 9])?,
        ),
        classical_row(
            "Spin(2n)",
            " and n even",
            fit(|k| LieGroupId::spin(2 * k), [4, 6, 8])?,
        ),
    ];
    let single = |g: LieGroupId| -> Result<String, Error> {
        let [b, sz, lz] = regular_values(&g)?;
        let l = exceptional_label(&g);
        Ok(format!("If p > {b}, sz_p({l}) = {sz} and lz_p({l}) = {lz}"))
    };
    rows.push(single(LieGroupId::G2)?);
    let f4 = regular_values(&LieGroupId::F4)?;
    let e6 = regular_values(&LieGroupId::E6)?;
    if f4[0] != e6[0] {
        return Err(Error::Domain("F4 and E6 thresholds differ".into()));
    }
    rows.push(format!(
        "If p > {}, sz_p(F_4) = {}, sz_p(E_6) = {} and lz_p(F_4) = {}, lz_p(E_6) = {}",
        f4[0], f4[1], e6[1], f4[2], e6[2]
    ));
    rows.push(single(LieGroupId::E7)?);
    rows.push(single(LieGroupId::E8)?);
    Ok(rows)
}

pub(crate) fn run_table(query: Value, a: &TableArgs) -> Result<Response, Error> {
    if a.regular_thresholds {
        let rows = regular_threshold_rows()?;
        let result = json!({ "kind": "thresholds", "rows": rows });
        return Ok(Response::answered(
            query,
            result,
            Coverage::Derived,
            rows.join("\n"),
        ));
    }
    let family = a.family.as_deref().unwrap_or_default();
    let spec = TableSpec::from_args(family, &a.ranks, &a.primes, &a.columns)?;
    let header = spec.header();
    let rows = spec.rows();
    let text = render(&header, &rows);
    let result = json!({ "kind": "table", "columns": header, "rows": rows });
    Ok(Response::answered(query, result, Coverage::Derived, text))
}
