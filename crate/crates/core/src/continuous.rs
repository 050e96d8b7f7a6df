//! Exact solver for the continuous meeting-point problem.
//!
//! The normalized cost L is strictly convex and piecewise quadratic with
//! breakpoints at the starting positions, so the minimizer is unique and is
//! certified by `0 ∈ ∂L(x*)`. Two search strategies are provided:
//!
//! * [`solve_linear_scan`] walks the sorted positions once, tracking the
//!   count-imbalance accumulator in exact steps of 1/(2N). At each position
//!   it tests the stationarity condition `|x_t − x̃ + d| ≤ 1/(2N)`; between
//!   positions it tests whether the gap's quadratic vertex `x̃ − Δ/(2N)`
//!   falls inside the gap. O(N) on sorted input.
//! * [`solve_bisection`] binary-searches the sorted distinct positions using
//!   the monotonicity of the subgradient. O(log N) after an O(N) pass that
//!   groups duplicates.
//!
//! Both return the same minimizer on every input; only the reported
//! breakdown of how it was located may differ when the optimum sits exactly
//! on a gap boundary.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::Error;
use crate::interval::Interval;
use crate::positions::PositionSet;
use crate::rational::Rational;

/// Where the minimizer was located relative to the sorted positions.
///
/// Indices are 1-based ranks within the sorted multiset. `LeftOfAll` and
/// `RightOfAll` mirror the search's boundary branches; they are unreachable
/// for any valid instance (the minimizer always lies within the position
/// span) and exist so a defect cannot masquerade as an interior answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionCase {
    AtStartingPoint(usize),
    BetweenPoints(usize, usize),
    LeftOfAll,
    RightOfAll,
}

impl fmt::Display for SolutionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionCase::AtStartingPoint(i) => write!(f, "at_starting_point({i})"),
            SolutionCase::BetweenPoints(l, r) => write!(f, "between_points({l},{r})"),
            SolutionCase::LeftOfAll => write!(f, "left_of_all"),
            SolutionCase::RightOfAll => write!(f, "right_of_all"),
        }
    }
}

/// Which search produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    LinearScan,
    Bisection,
    CorollaryMean,
    CorollaryMedian,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Strategy::LinearScan => "linear_scan",
            Strategy::Bisection => "bisection",
            Strategy::CorollaryMean => "corollary_mean",
            Strategy::CorollaryMedian => "corollary_median",
        };
        f.write_str(name)
    }
}

/// Solution of the continuous problem with its optimality certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousReport {
    pub x_star: Rational,
    pub case: SolutionCase,
    /// Subgradient of L at `x_star`; contains 0 by construction.
    pub certificate: Interval,
    pub strategy: Strategy,
}

impl ContinuousReport {
    /// Assembles a report, recomputing and checking the certificate. A
    /// failure here is a solver defect, never an input problem, so it halts.
    fn checked(ps: &PositionSet, x_star: Rational, case: SolutionCase, strategy: Strategy) -> Self {
        let certificate = ps.subgradient(&x_star);
        assert!(
            certificate.contains_zero(),
            "{strategy} produced x* = {x_star} whose subgradient {certificate} misses zero"
        );
        debug_assert!((&x_star - ps.mean()).abs() <= crate::rational::ratio(1, 2));
        Self {
            x_star,
            case,
            certificate,
            strategy,
        }
    }
}

/// Evaluates the stationarity test at the t-th sorted position (1-based),
/// with the scan's per-index accumulator convention `d_t = (2t − 1 − N)/(2N)`:
/// true iff `|x_t − x̃ + d_t| ≤ 1/(2N)`, non-strict.
///
/// For duplicated positions the per-index values sweep the multiplicity-wide
/// subgradient interval, so the test is true at some index of a duplicate
/// block iff the block's position is a minimizer.
pub fn condition_at_point(ps: &PositionSet, t: usize) -> Result<bool, Error> {
    let n = ps.n();
    if t < 1 || t > n {
        return Err(Error::IndexOutOfRange { index: t, n });
    }
    // scaled by 2N: |(x_t − x̃)·2N + 2t − 1 − N| ≤ 1
    let scaled = scaled_offset(ps, &ps.positions()[t - 1]) + integer_rational(2 * t as i64 - 1 - n as i64);
    Ok(scaled.abs() <= Rational::from_integer(BigInt::from(1)))
}

/// `(x − x̃)·2N`, the common scaled term of the optimality conditions.
fn scaled_offset(ps: &PositionSet, x: &Rational) -> Rational {
    let two_n = Rational::from_integer(BigInt::from(2 * ps.n() as u64));
    let two_sum = ps.stats().total() * Rational::from_integer(BigInt::from(2));
    x * two_n - two_sum
}

fn integer_rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Finds the minimizer by a single left-to-right pass over the sorted
/// positions.
///
/// The accumulator `d` tracks Δ/(2N) and advances by 1/(2N) twice per
/// position: once onto the position (for the stationarity test) and once
/// past it (for the gap test). It is carried as an integer numerator over
/// the fixed denominator 2N, which keeps every step exact.
pub fn solve_linear_scan(ps: &PositionSet) -> ContinuousReport {
    let n = ps.n();
    let positions = ps.positions();
    let mean = ps.mean();
    let one = Rational::from_integer(BigInt::from(1));
    let two_n = BigInt::from(2 * n as u64);

    // Candidate left of x_1 would be x̃ + 1/2, but x̃ ≥ x_1 makes that
    // impossible; the guard must never fire.
    let leftmost_candidate = mean + crate::rational::ratio(1, 2);
    assert!(
        leftmost_candidate >= positions[0],
        "minimizer left of the smallest position: mean {mean} with x_1 = {}",
        positions[0]
    );

    let two_n_rat = Rational::from_integer(two_n.clone());
    let two_sum = ps.stats().total() * Rational::from_integer(BigInt::from(2));

    // d = d_num/(2N), starting at −1/2
    let mut d_num: i64 = -(n as i64);
    for (idx, x_i) in positions.iter().enumerate() {
        let i = idx + 1;
        let scaled = x_i * &two_n_rat - &two_sum;

        d_num += 1;
        if (&scaled + integer_rational(d_num)).abs() <= one {
            return ContinuousReport::checked(
                ps,
                x_i.clone(),
                SolutionCase::AtStartingPoint(i),
                Strategy::LinearScan,
            );
        }

        d_num += 1;
        let candidate = mean - Rational::new(BigInt::from(d_num), two_n.clone());
        // gap test x_i ≤ x ≤ x_{i+1}; the final gap has no right edge
        if *x_i <= candidate && (i == n || candidate <= positions[i]) {
            let case = if i == n {
                SolutionCase::RightOfAll
            } else {
                SolutionCase::BetweenPoints(i, i + 1)
            };
            return ContinuousReport::checked(ps, candidate, case, Strategy::LinearScan);
        }
    }

    unreachable!("scan exhausted every stationarity and gap test; convexity guarantees one fires")
}

/// Finds the minimizer by binary search over the distinct positions, using
/// the fact that the subgradient endpoints are nondecreasing.
pub fn solve_bisection(ps: &PositionSet) -> ContinuousReport {
    let n = ps.n();
    let positions = ps.positions();
    let mean = ps.mean();

    // Group duplicates: (first 0-based index, multiplicity) per distinct value.
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || positions[i] != positions[start] {
            blocks.push((start, i - start));
            start = i;
        }
    }

    // b_j, the upper subgradient endpoint at block j scaled by 2N, is
    // (p_j − x̃)·2N + 2·end_j − N and is strictly increasing in j. The last
    // block always has b ≥ 0, so the partition point below is in range.
    let upper_scaled = |&(first, mult): &(usize, usize)| -> Rational {
        scaled_offset(ps, &positions[first]) + integer_rational(2 * (first + mult) as i64 - n as i64)
    };
    let zero = Rational::from_integer(BigInt::from(0));
    let j0 = blocks.partition_point(|b| upper_scaled(b) < zero);
    assert!(j0 < blocks.len(), "no block with nonnegative upper subgradient endpoint");

    let (first, mult) = blocks[j0];
    let value = &positions[first];
    let offset = scaled_offset(ps, value);
    let lower_scaled = &offset + integer_rational(2 * first as i64 - n as i64);

    if lower_scaled <= zero {
        // 0 sits in this value's subgradient interval. Report the first
        // 1-based index whose per-index stationarity test holds, matching
        // the scan's convention: i ≥ ⌈(N − (x − x̃)·2N)/2⌉, clamped into the
        // duplicate block.
        let threshold = (integer_rational(n as i64) - offset) / integer_rational(2);
        let from_condition = crate::rational::ceil_int(&threshold)
            .to_i64()
            .expect("per-index rank fits in i64");
        let i = (from_condition.max(first as i64 + 1)) as usize;
        assert!(
            i > first && i <= first + mult,
            "stationary index {i} escaped its duplicate block"
        );
        return ContinuousReport::checked(
            ps,
            value.clone(),
            SolutionCase::AtStartingPoint(i),
            Strategy::Bisection,
        );
    }

    // Otherwise the zero crossing is in the open gap left of this block.
    assert!(j0 > 0, "subgradient positive at the smallest position");
    let delta_gap = 2 * first as i64 - n as i64;
    let candidate = mean - Rational::new(BigInt::from(delta_gap), BigInt::from(2 * n as u64));
    ContinuousReport::checked(
        ps,
        candidate,
        SolutionCase::BetweenPoints(first, first + 1),
        Strategy::Bisection,
    )
}

/// Mean fast path: when the mean lies strictly inside the median interval
/// (in particular, coincides with no position), it is the minimizer.
pub fn corollary_mean_fast_path(ps: &PositionSet) -> Option<Rational> {
    let mean = ps.mean();
    if ps.multiplicity(mean) == 0 && ps.median_interval().contains(mean) {
        Some(mean.clone())
    } else {
        None
    }
}

/// Median fast path: when a starting position x_m has zero count imbalance
/// and `|x_m − x̃| ≤ 1/(2N)`, it is the minimizer.
///
/// Zero imbalance forces the median interval to be degenerate, so only its
/// single value needs testing.
pub fn corollary_median_fast_path(ps: &PositionSet) -> Option<Rational> {
    let interval = ps.median_interval();
    if !interval.is_point() {
        return None;
    }
    let x_m = interval.lo();
    if ps.count_imbalance(x_m) != 0 {
        return None;
    }
    let radius = Rational::new(BigInt::from(1), BigInt::from(2 * ps.n() as u64));
    if (x_m - ps.mean()).abs() <= radius {
        Some(x_m.clone())
    } else {
        None
    }
}

/// Diagnostic solve through the corollary fast paths; `None` when neither
/// applies. Intended for cross-checking, not as the default strategy.
pub fn solve_fast_path(ps: &PositionSet) -> Option<ContinuousReport> {
    if let Some(x) = corollary_mean_fast_path(ps) {
        let left = ps.n() / 2;
        return Some(ContinuousReport::checked(
            ps,
            x,
            SolutionCase::BetweenPoints(left, left + 1),
            Strategy::CorollaryMean,
        ));
    }
    if let Some(x) = corollary_median_fast_path(ps) {
        let rank = ps.count_below(&x) + 1;
        return Some(ContinuousReport::checked(
            ps,
            x,
            SolutionCase::AtStartingPoint(rank),
            Strategy::CorollaryMedian,
        ));
    }
    None
}
