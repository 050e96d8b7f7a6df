//! Integer meeting points.
//!
//! Convexity confines the integer minimizer of the triangular cost to the
//! floor and ceiling of the continuous minimizer, so the discrete problem
//! reduces to one continuous solve plus two fuel evaluations. The linear
//! cost model has its own baseline: any integer median minimizes the total
//! distance.

use num_bigint::BigInt;
use num_traits::One;

use crate::continuous::{self, ContinuousReport};
use crate::cost::{total_fuel_at_int, CostModel};
use crate::error::Error;
use crate::positions::PositionSet;
use crate::rational::{self, Rational};

/// Integer solution together with both rounding candidates.
///
/// For the triangular model `k_minus`/`k_plus` are ⌊x*⌋/⌈x*⌉; for the
/// linear baseline they are the endpoints of the integer median interval.
/// `tie` records a non-unique minimum (broken toward `k_minus`) and is
/// always false when the candidates coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteReport {
    pub k_minus: BigInt,
    pub k_plus: BigInt,
    pub k_star: BigInt,
    pub fuel_minus: Rational,
    pub fuel_plus: Rational,
    pub fuel_star: Rational,
    pub tie: bool,
}

/// Solves the integer problem under the triangular model by rounding the
/// continuous minimizer both ways.
pub fn solve_discrete(ps: &PositionSet) -> DiscreteReport {
    solve_discrete_from(ps, &continuous::solve_linear_scan(ps))
}

/// Same as [`solve_discrete`] but reuses an already computed continuous
/// solution.
pub fn solve_discrete_from(ps: &PositionSet, solution: &ContinuousReport) -> DiscreteReport {
    let k_minus = rational::floor_int(&solution.x_star);
    let k_plus = rational::ceil_int(&solution.x_star);
    let fuel_minus = total_fuel_at_int(ps, &k_minus, CostModel::Triangular);

    if k_minus == k_plus {
        return DiscreteReport {
            k_star: k_minus.clone(),
            k_plus,
            fuel_plus: fuel_minus.clone(),
            fuel_star: fuel_minus.clone(),
            fuel_minus,
            k_minus,
            tie: false,
        };
    }

    let fuel_plus = total_fuel_at_int(ps, &k_plus, CostModel::Triangular);
    let (k_star, fuel_star, tie) = if fuel_plus < fuel_minus {
        (k_plus.clone(), fuel_plus.clone(), false)
    } else {
        // ≥ keeps k⁻ on an exact tie
        (k_minus.clone(), fuel_minus.clone(), fuel_plus == fuel_minus)
    };

    DiscreteReport {
        k_minus,
        k_plus,
        k_star,
        fuel_minus,
        fuel_plus,
        fuel_star,
        tie,
    }
}

/// Integer median baseline for the linear cost model.
///
/// Requires integral starting positions; returns the smallest integer
/// minimizing the total distance, flagging `tie` when the minimizer is not
/// unique (even N with distinct middle positions).
pub fn solve_discrete_linear(ps: &PositionSet) -> Result<DiscreteReport, Error> {
    for p in ps.positions() {
        if !p.denom().is_one() {
            return Err(Error::NonIntegerInput {
                position: p.to_string(),
            });
        }
    }

    let interval = ps.median_interval();
    let k_minus = interval.lo().to_integer();
    let k_plus = interval.hi().to_integer();
    let fuel_minus = total_fuel_at_int(ps, &k_minus, CostModel::Linear);
    let fuel_plus = total_fuel_at_int(ps, &k_plus, CostModel::Linear);
    // the objective is flat on the whole median interval
    debug_assert_eq!(fuel_minus, fuel_plus);

    Ok(DiscreteReport {
        tie: k_minus != k_plus,
        k_star: k_minus.clone(),
        k_plus,
        fuel_star: fuel_minus.clone(),
        fuel_plus,
        fuel_minus,
        k_minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    fn ints(values: &[i64]) -> PositionSet {
        PositionSet::new(values.iter().copied().map(integer).collect()).unwrap()
    }

    #[test]
    fn rounds_the_continuous_optimum() {
        let report = solve_discrete(&ints(&[0, 1, 1]));
        assert_eq!(report.k_minus, BigInt::from(0));
        assert_eq!(report.k_plus, BigInt::from(1));
        assert_eq!(report.k_star, BigInt::from(1));
        assert_eq!(report.fuel_star, integer(1));
        assert!(!report.tie);
    }

    #[test]
    fn reference_input_triangular() {
        let report = solve_discrete(&ints(&[16, 1, 2, 0, 4, 2, 7, 1, 2, 14]));
        assert_eq!(report.k_star, BigInt::from(5));
        assert_eq!(report.fuel_star, integer(168));
    }

    #[test]
    fn integral_optimum_is_not_a_tie() {
        let report = solve_discrete(&ints(&[7]));
        assert_eq!(report.k_minus, report.k_plus);
        assert_eq!(report.k_star, BigInt::from(7));
        assert_eq!(report.fuel_star, integer(0));
        assert!(!report.tie);
    }

    #[test]
    fn symmetric_pair_ties_toward_the_floor() {
        let report = solve_discrete(&ints(&[0, 1]));
        assert_eq!(report.k_star, BigInt::from(0));
        assert_eq!(report.fuel_minus, integer(1));
        assert_eq!(report.fuel_plus, integer(1));
        assert_eq!(report.fuel_star, integer(1));
        assert!(report.tie);
    }

    #[test]
    fn linear_baseline_reference_input() {
        let report = solve_discrete_linear(&ints(&[16, 1, 2, 0, 4, 2, 7, 1, 2, 14])).unwrap();
        assert_eq!(report.k_star, BigInt::from(2));
        assert_eq!(report.fuel_star, integer(37));
        assert!(!report.tie);
    }

    #[test]
    fn linear_baseline_flat_interval_is_a_tie() {
        let report = solve_discrete_linear(&ints(&[0, 10])).unwrap();
        assert_eq!(report.k_star, BigInt::from(0));
        assert_eq!(report.k_plus, BigInt::from(10));
        assert_eq!(report.fuel_star, integer(10));
        assert!(report.tie);

        let report = solve_discrete_linear(&ints(&[7])).unwrap();
        assert_eq!(report.k_star, BigInt::from(7));
        assert_eq!(report.fuel_star, integer(0));
        assert!(!report.tie);
    }

    #[test]
    fn linear_baseline_rejects_fractional_positions() {
        let ps = PositionSet::new(vec![integer(0), ratio(1, 2)]).unwrap();
        assert_eq!(
            solve_discrete_linear(&ps).unwrap_err(),
            Error::NonIntegerInput {
                position: "1/2".to_string()
            }
        );
    }

    #[test]
    fn fractional_starts_are_accepted_by_the_triangular_path() {
        let ps = PositionSet::new(vec![ratio(1, 2), ratio(5, 2), ratio(5, 2)]).unwrap();
        let report = solve_discrete(&ps);
        assert!(report.k_star == report.k_minus || report.k_star == report.k_plus);
        assert_eq!(
            report.fuel_star,
            report.fuel_minus.clone().min(report.fuel_plus.clone())
        );
    }
}
