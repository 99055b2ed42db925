//! Batch evaluation over grids of groups and primes.
//!
//! Every scan takes a [`Strategy`]. `Parallel` fans out with rayon when the
//! `parallel` feature is enabled and silently runs sequentially otherwise, so
//! results never depend on the strategy.

use crate::catalog::{Family, LieGroupId};
use crate::error::Result;
use crate::invariants::{sz_lz, z_infty_finite, Context, InvariantReport};
use crate::localization::{decompose, is_quasi_p_regular, PLocalDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

/// Order-preserving map over a slice.
pub fn map_collect<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.iter().map(f).collect(),
        Strategy::Parallel => par_map_collect(items, f),
    }
}

#[cfg(feature = "parallel")]
fn par_map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// `family(n)` for each `n` in `params` that names a valid group.
pub fn family_members(family: Family, params: impl IntoIterator<Item = u32>) -> Vec<LieGroupId> {
    if family.is_exceptional() {
        return vec![LieGroupId::exceptional(family).expect("exceptional label")];
    }
    params
        .into_iter()
        .filter_map(|n| LieGroupId::new(family, Some(n)).ok())
        .collect()
}

pub fn finiteness_scan(strategy: Strategy, groups: &[LieGroupId]) -> Vec<(LieGroupId, bool)> {
    map_collect(strategy, groups, |g| (*g, z_infty_finite(g)))
}

/// All `(g, p)` in the grid that are quasi `p`-regular.
pub fn quasi_regular_pairs(groups: &[LieGroupId], primes: &[u64]) -> Vec<(LieGroupId, u64)> {
    groups
        .iter()
        .flat_map(|g| primes.iter().map(move |&p| (*g, p)))
        .filter(|(g, p)| is_quasi_p_regular(g, *p).unwrap_or(false))
        .collect()
}

pub struct PairEvaluation {
    pub group: LieGroupId,
    pub p: u64,
    pub decomposition: Result<PLocalDecomposition>,
    pub report: Result<InvariantReport>,
}

pub fn decomposition_scan(strategy: Strategy, pairs: &[(LieGroupId, u64)]) -> Vec<PairEvaluation> {
    map_collect(strategy, pairs, |&(g, p)| PairEvaluation {
        group: g,
        p,
        decomposition: decompose(&g, p),
        report: sz_lz(&g, Context::LocalAt(p)),
    })
}
