//! Exact clique census by ordered backtracking over candidate bitsets.
//!
//! A `k`-clique is reached once, as the increasing sequence of its
//! vertices. The search forest is split by first vertex across workers and
//! the per-tree results are summed, so totals do not depend on scheduling.
//! The node budget is checked against a shared counter; because the total
//! number of nodes in the forest is fixed, a run either completes within
//! budget or fails, whatever the schedule.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::One;

use super::bits;
use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CENSUS_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    /// Ceiling on search nodes expanded.
    pub node_budget: u64,
    /// Worker threads; 0 means available parallelism.
    pub workers: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            node_budget: DEFAULT_CENSUS_BUDGET,
            workers: 0,
        }
    }
}

impl CensusOptions {
    pub fn with_budget(node_budget: u64) -> Self {
        CensusOptions {
            node_budget,
            ..Self::default()
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

/// Exact `k`-clique counts for `k = 0..=kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCensus {
    counts: Vec<BigUint>,
}

impl CliqueCensus {
    pub fn kmax(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, k: usize) -> Option<&BigUint> {
        self.counts.get(k)
    }
}

/// Histogram: extension count -> number of cliques with that count.
pub type ExtensionProfile = BTreeMap<u64, u64>;

struct Meter<'a> {
    local: u64,
    shared: &'a AtomicU64,
    budget: u64,
}

const FLUSH_EVERY: u64 = 1024;

impl Meter<'_> {
    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local == FLUSH_EVERY {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Runs `task` for every index in `0..n` and folds the results with
/// `merge`, on `workers` threads when the `parallel` feature is on.
fn run_forest<T, F, M>(n: usize, workers: usize, identity: impl Fn() -> T + Sync + Send, task: F, merge: M) -> Result<T>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if workers != 1 {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            return pool.install(|| {
                (0..n)
                    .into_par_iter()
                    .map(&task)
                    .try_reduce(&identity, |a, b| Ok(merge(a, b)))
            });
        }
    }
    let _ = workers;
    let mut acc = identity();
    for i in 0..n {
        acc = merge(acc, task(i)?);
    }
    Ok(acc)
}

fn count_rec(
    g: &Graph,
    cand: &[u64],
    size: usize,
    kmax: usize,
    counts: &mut [u128],
    meter: &mut Meter,
    scratch: &mut Vec<Vec<u64>>,
) -> Result<()> {
    counts[size + 1] += bits::popcount(cand) as u128;
    if size + 1 == kmax {
        return Ok(());
    }
    let mut next = scratch.pop().unwrap_or_else(|| vec![0; g.words()]);
    for v in bits::ones(cand) {
        bits::and_above_into(&mut next, cand, g.row(v), v);
        if bits::is_empty(&next) {
            continue;
        }
        meter.tick()?;
        count_rec(g, &next, size + 1, kmax, counts, meter, scratch)?;
    }
    scratch.push(next);
    Ok(())
}

/// Number of `k`-cliques for every `k <= kmax`. For `T` every count is 1.
pub fn count_cliques(g: &Graph, kmax: usize, opts: &CensusOptions) -> Result<CliqueCensus> {
    if g.is_t() {
        return Ok(CliqueCensus {
            counts: vec![BigUint::one(); kmax + 1],
        });
    }
    let mut counts = vec![0u128; kmax + 1];
    counts[0] = 1;
    if kmax >= 1 {
        counts[1] = g.n() as u128;
    }
    if kmax >= 2 {
        let shared = AtomicU64::new(0);
        let budget = opts.node_budget;
        let tail = run_forest(
            g.n(),
            opts.workers,
            || vec![0u128; kmax + 1],
            |v| {
                let mut local = vec![0u128; kmax + 1];
                let mut meter = Meter {
                    local: 0,
                    shared: &shared,
                    budget,
                };
                meter.tick()?;
                let mut cand = vec![0; g.words()];
                bits::and_above_into(&mut cand, &bits::full(g.n()), g.row(v), v);
                count_rec(g, &cand, 1, kmax, &mut local, &mut meter, &mut Vec::new())?;
                meter.flush()?;
                Ok(local)
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )?;
        counts[2..=kmax].copy_from_slice(&tail[2..=kmax]);
    }
    Ok(CliqueCensus {
        counts: counts.into_iter().map(BigUint::from).collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn walk(
    g: &Graph,
    clique: &mut Vec<usize>,
    common: &[u64],
    cand: &[u64],
    k: usize,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&[usize], &[u64]),
) -> Result<()> {
    meter.tick()?;
    if clique.len() == k {
        visit(clique, common);
        return Ok(());
    }
    let mut next_common = vec![0; g.words()];
    let mut next_cand = vec![0; g.words()];
    for v in bits::ones(cand) {
        bits::and_into(&mut next_common, common, g.row(v));
        bits::and_above_into(&mut next_cand, cand, g.row(v), v);
        clique.push(v);
        walk(g, clique, &next_common, &next_cand, k, meter, visit)?;
        clique.pop();
    }
    Ok(())
}

fn check_base(g: &Graph, base: &[usize], k: usize) -> Result<Vec<u64>> {
    if g.is_t() {
        return Err(Error::LoopGraph("clique enumeration"));
    }
    if !g.is_clique(base) {
        return Err(Error::NotAClique);
    }
    if base.len() > k {
        return Err(Error::InvalidArgument(format!(
            "base clique of size {} exceeds target size {k}",
            base.len()
        )));
    }
    Ok(g.common_neighborhood(base))
}

/// Visits every `k`-clique containing `base`, in lexicographic order of the
/// added vertices, together with its common neighbourhood bitset's size.
pub fn for_each_clique(
    g: &Graph,
    base: &[usize],
    k: usize,
    node_budget: u64,
    mut visit: impl FnMut(&[usize], usize),
) -> Result<()> {
    let common = check_base(g, base, k)?;
    let shared = AtomicU64::new(0);
    let mut meter = Meter {
        local: 0,
        shared: &shared,
        budget: node_budget,
    };
    let mut clique = base.to_vec();
    walk(g, &mut clique, &common, &common, k, &mut meter, &mut |c, bits_| {
        visit(c, bits::popcount(bits_) as usize)
    })?;
    meter.flush()
}

/// Extension counts of all `k`-cliques containing `base`, as a histogram.
pub fn extension_profile_containing(
    g: &Graph,
    base: &[usize],
    k: usize,
    opts: &CensusOptions,
) -> Result<ExtensionProfile> {
    let common = check_base(g, base, k)?;
    let shared = AtomicU64::new(0);
    let budget = opts.node_budget;
    if base.len() == k {
        let mut h = ExtensionProfile::new();
        h.insert(bits::popcount(&common), 1);
        return Ok(h);
    }
    let firsts: Vec<usize> = bits::ones(&common).collect();
    run_forest(
        firsts.len(),
        opts.workers,
        ExtensionProfile::new,
        |i| {
            let v = firsts[i];
            let mut meter = Meter {
                local: 0,
                shared: &shared,
                budget,
            };
            let mut nc = vec![0; g.words()];
            let mut nd = vec![0; g.words()];
            bits::and_into(&mut nc, &common, g.row(v));
            bits::and_above_into(&mut nd, &common, g.row(v), v);
            let mut clique = base.to_vec();
            clique.push(v);
            let mut h = ExtensionProfile::new();
            walk(g, &mut clique, &nc, &nd, k, &mut meter, &mut |_, c| {
                *h.entry(bits::popcount(c)).or_insert(0) += 1;
            })?;
            meter.flush()?;
            Ok(h)
        },
        |mut a, b| {
            for (key, val) in b {
                *a.entry(key).or_insert(0) += val;
            }
            a
        },
    )
}

/// Extension counts of all `k`-cliques.
pub fn extension_profile(g: &Graph, k: usize, opts: &CensusOptions) -> Result<ExtensionProfile> {
    extension_profile_containing(g, &[], k, opts)
}
