//! Cost statistics over random feasible sets: chain versus optimal selection.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circuit::format_float;
use crate::error::{Error, Result};
use crate::subspace::FeasibleSet;
use crate::trotter::{chain_mixer, synthesize, Selection, SynthOptions};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TrialRow {
    pub size: usize,
    pub trial: usize,
    /// Unrestricted chain over the sorted states.
    pub chain: usize,
    /// Optimal selection without restriction.
    pub optimal: usize,
    /// Optimal selection with restricted projectors.
    pub restricted: usize,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Aggregate {
    pub mean: f64,
    pub std: f64,
    pub min: usize,
    pub max: usize,
}

impl Aggregate {
    /// Population statistics; `values` must be nonempty.
    pub fn of(values: &[usize]) -> Self {
        let n = values.len() as f64;
        let mean = values.iter().sum::<usize>() as f64 / n;
        let var = values.iter().map(|&v| (v as f64 - mean).powi(2)).sum::<f64>() / n;
        Aggregate {
            mean,
            std: var.sqrt(),
            min: *values.iter().min().expect("nonempty"),
            max: *values.iter().max().expect("nonempty"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SizeSummary {
    pub size: usize,
    pub trials: usize,
    pub chain: Aggregate,
    pub optimal: Aggregate,
    pub restricted: Aggregate,
}

#[derive(Clone, PartialEq, Debug)]
pub struct StatsReport {
    pub n: usize,
    pub seed: u64,
    pub rows: Vec<TrialRow>,
}

/// Draws `trials` random sets of each size (one seeded stream, sizes in the
/// given order) and records the three costs.
pub fn run_stats(n: usize, sizes: &[usize], trials: usize, seed: u64, selection: Selection) -> Result<StatsReport> {
    if n == 0 || n > 16 {
        return Err(Error::QubitCount(n));
    }
    let space = 1usize << n;
    if let Some(&bad) = sizes.iter().find(|&&s| s < 2 || s > space) {
        return Err(Error::InvalidPlan(format!("set size {bad} outside 2..={space}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(sizes.len() * trials);
    for &size in sizes {
        for trial in 0..trials {
            let states = sample(&mut rng, space, size).into_iter().map(|z| z as u64).collect();
            let b = FeasibleSet::new(n, states)?;
            let chain = chain_mixer(&b, false)?.total_cost;
            let optimal = synthesize(&b, SynthOptions { restrict: false, selection })?.total_cost;
            let restricted = synthesize(&b, SynthOptions { restrict: true, selection })?.total_cost;
            rows.push(TrialRow { size, trial, chain, optimal, restricted });
        }
    }
    Ok(StatsReport { n, seed, rows })
}

impl StatsReport {
    pub fn summaries(&self) -> Vec<SizeSummary> {
        let mut sizes: Vec<usize> = self.rows.iter().map(|r| r.size).collect();
        sizes.dedup();
        sizes
            .into_iter()
            .map(|size| {
                let rows: Vec<&TrialRow> = self.rows.iter().filter(|r| r.size == size).collect();
                let col = |f: fn(&TrialRow) -> usize| Aggregate::of(&rows.iter().map(|r| f(r)).collect::<Vec<_>>());
                SizeSummary {
                    size,
                    trials: rows.len(),
                    chain: col(|r| r.chain),
                    optimal: col(|r| r.optimal),
                    restricted: col(|r| r.restricted),
                }
            })
            .collect()
    }

    pub fn trials_csv(&self) -> String {
        let mut s = String::from("n,seed,size,trial,chain_cost,optimal_cost,restricted_cost\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                self.n, self.seed, r.size, r.trial, r.chain, r.optimal, r.restricted
            ));
        }
        s
    }

    pub fn summary_csv(&self) -> String {
        let mut s = String::from("n,seed,size,trials");
        for col in ["chain", "optimal", "restricted"] {
            for stat in ["mean", "std", "min", "max"] {
                s.push_str(&format!(",{col}_{stat}"));
            }
        }
        s.push('\n');
        for sum in self.summaries() {
            s.push_str(&format!("{},{},{},{}", self.n, self.seed, sum.size, sum.trials));
            for a in [sum.chain, sum.optimal, sum.restricted] {
                s.push_str(&format!(",{},{},{},{}", format_float(a.mean), format_float(a.std), a.min, a.max));
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_and_full_space() {
        let r = run_stats(3, &[2, 8], 4, 11, Selection::Auto).unwrap();
        for row in &r.rows {
            if row.size == 2 {
                assert_eq!(row.chain, row.optimal);
            } else {
                assert_eq!(row.optimal, 0);
            }
        }
        let csv = r.summary_csv();
        assert_eq!(csv.lines().count(), 3);
        assert_eq!(run_stats(3, &[2, 8], 4, 11, Selection::Auto).unwrap(), r);
        assert!(run_stats(3, &[9], 1, 0, Selection::Auto).is_err());
    }
}
