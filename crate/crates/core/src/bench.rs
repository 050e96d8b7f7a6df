//! Deterministic instance generators and a small timing harness.
//!
//! The harness exists to substantiate the linear scaling of the scan solver
//! and to compare strategies; it reports median wall time per phase as CSV
//! rows `generator,n,phase,median_ns`. It is not a statistics package —
//! median of a handful of repetitions is the whole story.

use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::continuous::{solve_bisection, solve_linear_scan};
use crate::cost::CostModel;
use crate::discrete::solve_discrete;
use crate::oracle::{oracle_continuous_exact, oracle_discrete_scan};
use crate::positions::PositionSet;
use crate::rational::{integer, Rational};

/// Oracle phases are skipped above this instance size.
pub const ORACLE_PHASE_MAX_N: usize = 10_000;

/// Shape of a generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// Independent uniform draws over the value range.
    Uniform,
    /// Half the points near the low end, half near the high end; stresses
    /// large imbalance swings.
    TwoCluster,
    /// Every point equal to the low end of the range; maximal duplicate
    /// multiplicity.
    AllEqual,
    /// Evenly spaced ascending values; the input arrives presorted.
    PresortedRamp,
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GenKind::Uniform => "uniform",
            GenKind::TwoCluster => "two_cluster",
            GenKind::AllEqual => "all_equal",
            GenKind::PresortedRamp => "presorted_ramp",
        };
        f.write_str(name)
    }
}

/// Deterministic instance description: identical specs generate identical
/// position sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub value_range: (i64, i64),
    pub seed: u64,
}

fn raw_values(spec: &GenSpec) -> Vec<Rational> {
    assert!(spec.n >= 1, "generator needs at least one position");
    let (lo, hi) = spec.value_range;
    assert!(lo <= hi, "value range out of order: {lo} > {hi}");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        GenKind::Uniform => (0..spec.n)
            .map(|_| integer(rng.random_range(lo..=hi)))
            .collect(),
        GenKind::TwoCluster => {
            let width = (hi - lo) / 10;
            let low_count = spec.n.div_ceil(2);
            (0..spec.n)
                .map(|i| {
                    if i < low_count {
                        integer(lo + rng.random_range(0..=width))
                    } else {
                        integer(hi - rng.random_range(0..=width))
                    }
                })
                .collect()
        }
        GenKind::AllEqual => vec![integer(lo); spec.n],
        GenKind::PresortedRamp => {
            if spec.n == 1 {
                vec![integer(lo)]
            } else {
                let span = (hi - lo) as i128;
                (0..spec.n)
                    .map(|i| {
                        let step = (i as i128 * span) / (spec.n as i128 - 1);
                        integer(lo + step as i64)
                    })
                    .collect()
            }
        }
    }
}

/// Generates the instance described by `spec`.
pub fn generate(spec: &GenSpec) -> PositionSet {
    PositionSet::new(raw_values(spec)).expect("generator emits at least one value")
}

/// One measured phase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimingRow {
    pub generator: String,
    pub n: usize,
    pub phase: String,
    pub median_ns: u128,
}

fn median_ns(mut samples: Vec<u128>) -> u128 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn time_phase<T>(repetitions: usize, mut work: impl FnMut() -> T) -> u128 {
    let samples = (0..repetitions)
        .map(|_| {
            let start = Instant::now();
            black_box(work());
            start.elapsed().as_nanos()
        })
        .collect();
    median_ns(samples)
}

/// Times construction, both continuous strategies, the discrete solve, and
/// (for small instances) the oracles on the instance described by `spec`.
///
/// Construction is timed from the raw unsorted values, since sorting is its
/// dominant cost; solver phases run on one prebuilt set.
pub fn time_solvers(spec: &GenSpec, repetitions: usize) -> Vec<TimingRow> {
    assert!(repetitions >= 3, "need at least 3 repetitions for a median");

    let raw = raw_values(spec);
    let mut rows = Vec::new();
    let mut push = |phase: &str, median: u128| {
        rows.push(TimingRow {
            generator: spec.kind.to_string(),
            n: spec.n,
            phase: phase.to_string(),
            median_ns: median,
        });
    };

    push(
        "sort",
        time_phase(repetitions, || {
            PositionSet::new(raw.clone()).expect("nonempty")
        }),
    );

    let ps = PositionSet::new(raw).expect("nonempty");
    push(
        "solve_linear_scan",
        time_phase(repetitions, || solve_linear_scan(&ps)),
    );
    push(
        "solve_bisection",
        time_phase(repetitions, || solve_bisection(&ps)),
    );
    push(
        "solve_discrete",
        time_phase(repetitions, || solve_discrete(&ps)),
    );

    if spec.n <= ORACLE_PHASE_MAX_N {
        push(
            "oracle_continuous",
            time_phase(repetitions, || oracle_continuous_exact(&ps)),
        );
        push(
            "oracle_discrete",
            time_phase(repetitions, || {
                oracle_discrete_scan(&ps, CostModel::Triangular)
                    .expect("bench ranges stay under the scan cap")
            }),
        );
    }

    rows
}

/// Renders timing rows as CSV with the fixed header `generator,n,phase,median_ns`.
pub fn rows_to_csv(rows: &[TimingRow]) -> String {
    let mut out = String::from("generator,n,phase,median_ns\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.generator, row.n, row.phase, row.median_ns
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_equal_repeats_the_low_value() {
        let spec = GenSpec {
            kind: GenKind::AllEqual,
            n: 5,
            value_range: (3, 3),
            seed: 0,
        };
        assert_eq!(generate(&spec).positions(), &vec![integer(3); 5][..]);
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = GenSpec {
            kind: GenKind::Uniform,
            n: 10,
            value_range: (0, 16),
            seed: 42,
        };
        let a = generate(&spec);
        let b = generate(&spec);
        assert_eq!(a, b);
        assert_eq!(a.n(), 10);
        assert!(a.positions().iter().all(|p| p >= &integer(0) && p <= &integer(16)));
    }

    #[test]
    fn two_cluster_splits_into_the_extremes() {
        let spec = GenSpec {
            kind: GenKind::TwoCluster,
            n: 4,
            value_range: (0, 100),
            seed: 7,
        };
        let ps = generate(&spec);
        let low = ps.positions().iter().filter(|p| **p <= integer(10)).count();
        let high = ps.positions().iter().filter(|p| **p >= integer(90)).count();
        assert_eq!(low, 2);
        assert_eq!(high, 2);
    }

    #[test]
    fn presorted_ramp_is_sorted_and_spans_the_range() {
        let spec = GenSpec {
            kind: GenKind::PresortedRamp,
            n: 11,
            value_range: (-5, 5),
            seed: 0,
        };
        let ps = generate(&spec);
        assert_eq!(ps.min(), &integer(-5));
        assert_eq!(ps.max(), &integer(5));
    }

    #[test]
    fn timing_rows_cover_the_phases_and_render_as_csv() {
        let spec = GenSpec {
            kind: GenKind::Uniform,
            n: 64,
            value_range: (0, 100),
            seed: 1,
        };
        let rows = time_solvers(&spec, 3);
        let phases: Vec<&str> = rows.iter().map(|r| r.phase.as_str()).collect();
        assert_eq!(
            phases,
            vec![
                "sort",
                "solve_linear_scan",
                "solve_bisection",
                "solve_discrete",
                "oracle_continuous",
                "oracle_discrete"
            ]
        );
        let csv = rows_to_csv(&rows);
        assert!(csv.starts_with("generator,n,phase,median_ns\n"));
        assert_eq!(csv.lines().count(), rows.len() + 1);
        assert!(csv.lines().nth(1).unwrap().starts_with("uniform,64,sort,"));
    }

    #[test]
    fn oracle_phases_are_skipped_for_large_instances() {
        let spec = GenSpec {
            kind: GenKind::AllEqual,
            n: ORACLE_PHASE_MAX_N + 1,
            value_range: (3, 3),
            seed: 0,
        };
        let rows = time_solvers(&spec, 3);
        assert!(rows.iter().all(|r| !r.phase.starts_with("oracle")));
    }

    #[test]
    fn generated_instances_solve_consistently() {
        for kind in [
            GenKind::Uniform,
            GenKind::TwoCluster,
            GenKind::AllEqual,
            GenKind::PresortedRamp,
        ] {
            let spec = GenSpec {
                kind,
                n: 2000,
                value_range: (-50, 50),
                seed: 99,
            };
            let ps = generate(&spec);
            let scan = solve_linear_scan(&ps);
            let bis = solve_bisection(&ps);
            let oracle = oracle_continuous_exact(&ps);
            assert_eq!(scan.x_star, bis.x_star, "{kind}");
            assert_eq!(scan.x_star, oracle.x_star, "{kind}");
            let discrete = solve_discrete(&ps);
            let scanned = oracle_discrete_scan(&ps, CostModel::Triangular).unwrap();
            assert_eq!(discrete.fuel_star, scanned.fuel, "{kind}");
        }
    }
}
