//! Brute-force reference solvers.
//!
//! These validate the fast solvers and are deliberately simple: direct
//! summation everywhere, no prefix sums, no shared statistics code. They
//! recompute the mean, the count imbalance, and the cost from scratch so a
//! bug in the production paths cannot hide in its own mirror image.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::Zero;

use crate::cost::CostModel;
use crate::error::Error;
use crate::positions::PositionSet;
use crate::rational::Rational;

/// Default cap on the number of integer candidates [`oracle_discrete_scan`]
/// will enumerate.
pub const DEFAULT_SCAN_CAP: u64 = 10_000_000;

/// A reference answer: the minimizer and the total fuel there, both obtained
/// by exhaustive evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub x_star: Rational,
    pub fuel: Rational,
}

/// Term-by-term fuel: Σ d_i for the linear model, (Σ d_i² + Σ d_i)/2 for the
/// triangular one, accumulated agent by agent.
fn direct_total_fuel(positions: &[Rational], x: &Rational, model: CostModel) -> Rational {
    let mut distance_sum = Rational::zero();
    let mut square_sum = Rational::zero();
    for p in positions {
        let d = if x >= p { x - p } else { p - x };
        if model == CostModel::Triangular {
            square_sum += &d * &d;
        }
        distance_sum += d;
    }
    match model {
        CostModel::Linear => distance_sum,
        CostModel::Triangular => {
            (square_sum + distance_sum) / Rational::from_integer(BigInt::from(2))
        }
    }
}

/// Exact continuous reference solver.
///
/// The cost is quadratic on each open interval between consecutive distinct
/// positions, so the minimizer is either a position or the vertex of one of
/// those quadratics, clamped into its gap. No candidate outside the position
/// span can win: the cost strictly increases away from it. All candidates
/// are evaluated exactly and the unique argmin is returned.
pub fn oracle_continuous_exact(ps: &PositionSet) -> OracleResult {
    let xs = ps.positions();
    let n = xs.len();

    // independent mean by direct summation
    let sum = xs.iter().fold(Rational::zero(), |acc, p| acc + p);
    let mean = sum / Rational::from_integer(BigInt::from(n as u64));

    let mut distinct: Vec<(Rational, usize)> = Vec::new();
    for p in xs {
        match distinct.last_mut() {
            Some((value, count)) if value == p => *count += 1,
            _ => distinct.push((p.clone(), 1)),
        }
    }

    let mut candidates: Vec<Rational> = Vec::new();
    let mut seen = 0usize;
    for (idx, (value, count)) in distinct.iter().enumerate() {
        candidates.push(value.clone());
        seen += count;
        if idx + 1 < distinct.len() {
            // vertex of the quadratic piece on the open gap, where the
            // imbalance is constant at 2·seen − n
            let delta = 2 * seen as i64 - n as i64;
            let vertex =
                &mean - Rational::new(BigInt::from(delta), BigInt::from(2 * n as u64));
            let left = value;
            let right = &distinct[idx + 1].0;
            let clamped = if &vertex < left {
                left.clone()
            } else if &vertex > right {
                right.clone()
            } else {
                vertex
            };
            candidates.push(clamped);
        }
    }

    let mut best: Option<(Rational, Rational)> = None;
    for x in candidates {
        let fuel = direct_total_fuel(xs, &x, CostModel::Triangular);
        let better = match &best {
            None => true,
            Some((_, best_fuel)) => &fuel < best_fuel,
        };
        if better {
            best = Some((x, fuel));
        }
    }
    let (x_star, fuel) = best.expect("at least one candidate exists");
    OracleResult { x_star, fuel }
}

/// Exhaustive integer scan with the default candidate cap.
pub fn oracle_discrete_scan(ps: &PositionSet, model: CostModel) -> Result<OracleResult, Error> {
    oracle_discrete_scan_with_cap(ps, model, DEFAULT_SCAN_CAP)
}

/// Evaluates the total fuel at every integer in [⌊min⌋, ⌈max⌉] and returns
/// the smallest integer attaining the minimum. Errors when the range holds
/// more than `cap` candidates.
///
/// With `q` the common denominator of the positions, the distance from an
/// integer `k` to position `x_i` is `e_i/q` with `e_i = |k·q − x_i·q|` an
/// integer, so a candidate's fuel is a direct sum of integers over the fixed
/// denominator `2q²` (triangular) or `q` (linear), and candidates compare by
/// numerator alone.
pub fn oracle_discrete_scan_with_cap(
    ps: &PositionSet,
    model: CostModel,
    cap: u64,
) -> Result<OracleResult, Error> {
    let lo = ps.min().floor().to_integer();
    let hi = ps.max().ceil().to_integer();
    let candidates = &hi - &lo + BigInt::from(1);
    if candidates > BigInt::from(cap) {
        return Err(Error::RangeTooLarge {
            lo: lo.to_string(),
            hi: hi.to_string(),
            candidates: candidates.to_string(),
            cap,
        });
    }

    let common_denom = ps
        .positions()
        .iter()
        .fold(BigInt::from(1), |acc, p| acc.lcm(p.denom()));
    let cleared: Vec<BigInt> = ps
        .positions()
        .iter()
        .map(|p| p.numer() * (&common_denom / p.denom()))
        .collect();

    let mut best: Option<(BigInt, BigInt)> = None;
    let mut k = lo;
    while k <= hi {
        let k_cleared = &k * &common_denom;
        let mut distance_sum = BigInt::from(0);
        let mut square_sum = BigInt::from(0);
        for m in &cleared {
            let mut e = &k_cleared - m;
            if e.sign() == Sign::Minus {
                e = -e;
            }
            if model == CostModel::Triangular {
                square_sum += &e * &e;
            }
            distance_sum += e;
        }
        let scaled_fuel = match model {
            CostModel::Triangular => square_sum + &common_denom * distance_sum,
            CostModel::Linear => distance_sum,
        };
        let better = match &best {
            None => true,
            // strict: ties keep the smaller (earlier) integer
            Some((_, best_fuel)) => &scaled_fuel < best_fuel,
        };
        if better {
            best = Some((k.clone(), scaled_fuel));
        }
        k += 1;
    }

    let (k_star, scaled_fuel) = best.expect("range contains at least one integer");
    let fuel = match model {
        CostModel::Triangular => Rational::new(scaled_fuel, 2 * &common_denom * &common_denom),
        CostModel::Linear => Rational::new(scaled_fuel, common_denom),
    };
    Ok(OracleResult {
        x_star: Rational::from_integer(k_star),
        fuel,
    })
}
