//! Problem representation and the statistical primitives every solver
//! consumes: mean, count imbalance, median interval, and the subgradient of
//! the normalized cost.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::interval::Interval;
use crate::rational::Rational;

/// Validated, sorted multiset of starting positions.
///
/// Construction sorts the input (the O(N log N) part of the pipeline) and
/// precomputes [`ProblemStats`] so later cost queries run in O(log N).
/// Immutable after construction; all operations on it are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionSet {
    positions: Vec<Rational>,
    stats: ProblemStats,
}

/// Aggregates derived from a sorted [`PositionSet`]: the exact mean and the
/// cumulative sums used for O(1) range-sum queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemStats {
    mean: Rational,
    n: usize,
    /// `prefix_sums[i]` is the sum of the first `i` sorted positions, so the
    /// list has `n + 1` entries and ends with the total.
    prefix_sums: Vec<Rational>,
    // Full-range sum of squares; the quadratic part of the triangular cost
    // needs no split at the query point, so one scalar suffices.
    sum_squares: Rational,
}

impl PositionSet {
    /// Builds a position set from values in any order.
    pub fn new(values: Vec<Rational>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut positions = values;
        positions.sort_unstable();
        let stats = ProblemStats::from_sorted(&positions);
        Ok(Self { positions, stats })
    }

    /// Number of agents, always at least 1.
    pub fn n(&self) -> usize {
        self.positions.len()
    }

    /// Sorted positions, ascending, duplicates preserved.
    pub fn positions(&self) -> &[Rational] {
        &self.positions
    }

    pub fn min(&self) -> &Rational {
        &self.positions[0]
    }

    pub fn max(&self) -> &Rational {
        &self.positions[self.positions.len() - 1]
    }

    pub fn stats(&self) -> &ProblemStats {
        &self.stats
    }

    /// Exact arithmetic mean of the positions.
    pub fn mean(&self) -> &Rational {
        &self.stats.mean
    }

    /// Count imbalance Δ(x): positions strictly left of `x` minus positions
    /// strictly right of it. Nondecreasing in `x`, and ±N outside the span.
    pub fn count_imbalance(&self, x: &Rational) -> i64 {
        let below = self.count_below(x);
        let above = self.n() - self.count_through(x);
        below as i64 - above as i64
    }

    /// Multiplicity of `x` in the multiset (0 when `x` is not a position).
    pub fn multiplicity(&self, x: &Rational) -> usize {
        self.count_through(x) - self.count_below(x)
    }

    /// Positions strictly less than `x`, by binary search.
    pub(crate) fn count_below(&self, x: &Rational) -> usize {
        self.positions.partition_point(|p| p < x)
    }

    /// Positions less than or equal to `x`, by binary search.
    pub(crate) fn count_through(&self, x: &Rational) -> usize {
        self.positions.partition_point(|p| p <= x)
    }

    /// The set of medians as a closed interval of order statistics: the
    /// middle position for odd N, `[x_(N/2), x_(N/2+1)]` for even N.
    pub fn median_interval(&self) -> Interval {
        let n = self.n();
        if n % 2 == 1 {
            Interval::point(self.positions[n / 2].clone())
        } else {
            Interval::new(
                self.positions[n / 2 - 1].clone(),
                self.positions[n / 2].clone(),
            )
        }
    }

    /// Subgradient of the normalized cost L at `x`.
    ///
    /// `[x − x̃ + (Δ(x) − m)/(2N), x − x̃ + (Δ(x) + m)/(2N)]` where `m` is the
    /// multiplicity of `x`; degenerate wherever `x` is not a position. The
    /// multiplicity widening makes duplicated positions behave as the union
    /// of their per-index intervals.
    pub fn subgradient(&self, x: &Rational) -> Interval {
        let delta = self.count_imbalance(x);
        let m = self.multiplicity(x) as i64;
        let two_n = BigInt::from(2 * self.n() as u64);
        let center = x - self.mean();
        let lo = &center + Rational::new(BigInt::from(delta - m), two_n.clone());
        let hi = center + Rational::new(BigInt::from(delta + m), two_n);
        Interval::new(lo, hi)
    }
}

impl ProblemStats {
    fn from_sorted(positions: &[Rational]) -> Self {
        let n = positions.len();
        let mut prefix_sums = Vec::with_capacity(n + 1);
        let mut running = Rational::zero();
        let mut sum_squares = Rational::zero();
        prefix_sums.push(running.clone());
        for p in positions {
            running += p;
            prefix_sums.push(running.clone());
            sum_squares += p * p;
        }
        let mean = &prefix_sums[n] / Rational::from_integer(BigInt::from(n as u64));
        Self {
            mean,
            n,
            prefix_sums,
            sum_squares,
        }
    }

    pub fn mean(&self) -> &Rational {
        &self.mean
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prefix_sums(&self) -> &[Rational] {
        &self.prefix_sums
    }

    /// Sum of the first `count` sorted positions.
    pub fn prefix(&self, count: usize) -> &Rational {
        &self.prefix_sums[count]
    }

    /// Sum of all positions.
    pub fn total(&self) -> &Rational {
        &self.prefix_sums[self.n]
    }

    pub(crate) fn sum_squares(&self) -> &Rational {
        &self.sum_squares
    }
}
