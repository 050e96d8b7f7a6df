//! Fuel cost evaluation.
//!
//! Total fuel is `F(x) = Σ f(|x − x_i|)` with the per-agent cost `f` chosen
//! by [`CostModel`]. The normalized objective the solvers minimize is
//! `L(x) = F(x)/N` under the triangular model; both share the argmin.

use num_bigint::BigInt;

use crate::positions::PositionSet;
use crate::rational::Rational;

/// Per-agent fuel model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CostModel {
    /// The s-th unit step costs s, totalling `d(d+1)/2` over distance d.
    Triangular,
    /// Every step costs 1: `f(d) = d`.
    Linear,
}

impl CostModel {
    /// Fuel burned by one agent traveling distance `d ≥ 0`.
    pub fn agent_fuel(&self, d: &Rational) -> Rational {
        match self {
            CostModel::Triangular => (d * d + d) / Rational::from_integer(BigInt::from(2)),
            CostModel::Linear => d.clone(),
        }
    }
}

/// Exact total fuel across all agents meeting at `x`.
///
/// Runs in O(log N) using the prefix sums carried by the position set: the
/// absolute-value part splits at `x`, the quadratic part does not need to.
pub fn total_fuel(ps: &PositionSet, x: &Rational, model: CostModel) -> Rational {
    let stats = ps.stats();
    let n = ps.n();
    let below = ps.count_below(x);
    let through = ps.count_through(x);

    // Σ|x − x_i| = below·x − Σ_{x_i<x} x_i + Σ_{x_i>x} x_i − above·x
    let above = n - through;
    let sum_below = stats.prefix(below);
    let sum_above = stats.total() - stats.prefix(through);
    let linear_part = x * Rational::from_integer(BigInt::from(below as u64)) - sum_below
        + sum_above
        - x * Rational::from_integer(BigInt::from(above as u64));

    match model {
        CostModel::Linear => linear_part,
        CostModel::Triangular => {
            // Σ(x − x_i)² = N·x² − 2x·Σx_i + Σx_i²
            let quadratic_part = x * x * Rational::from_integer(BigInt::from(n as u64))
                - x * stats.total() * Rational::from_integer(BigInt::from(2))
                + stats.sum_squares();
            (quadratic_part + linear_part) / Rational::from_integer(BigInt::from(2))
        }
    }
}

/// The normalized objective `L(x) = total_fuel(x) / N` (triangular model).
pub fn normalized_cost(ps: &PositionSet, x: &Rational) -> Rational {
    total_fuel(ps, x, CostModel::Triangular)
        / Rational::from_integer(BigInt::from(ps.n() as u64))
}

/// Fuel at an integer meeting point.
pub fn total_fuel_at_int(ps: &PositionSet, k: &BigInt, model: CostModel) -> Rational {
    total_fuel(ps, &Rational::from_integer(k.clone()), model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};
    use num_traits::Signed;

    fn set(values: &[i64]) -> PositionSet {
        PositionSet::new(values.iter().copied().map(integer).collect()).unwrap()
    }

    /// Direct O(N) summation used as an independent check of the
    /// prefix-sum evaluation path.
    fn direct_total_fuel(ps: &PositionSet, x: &Rational, model: CostModel) -> Rational {
        ps.positions()
            .iter()
            .map(|p| model.agent_fuel(&(x - p).abs()))
            .fold(Rational::from_integer(0.into()), |acc, f| acc + f)
    }

    #[test]
    fn triangular_totals_match_known_curve_points() {
        let ps = set(&[0, 1]);
        assert_eq!(
            total_fuel(&ps, &ratio(1, 2), CostModel::Triangular),
            ratio(3, 4)
        );

        let ps = set(&[0, 1, 1]);
        assert_eq!(
            total_fuel(&ps, &ratio(5, 6), CostModel::Triangular),
            ratio(23, 24)
        );

        let ps = PositionSet::new(vec![integer(0), ratio(1, 3), ratio(1, 2)]).unwrap();
        assert_eq!(
            total_fuel(&ps, &ratio(1, 3), CostModel::Triangular),
            ratio(23, 72)
        );
    }

    #[test]
    fn linear_total_on_the_reference_input() {
        let ps = set(&[16, 1, 2, 0, 4, 2, 7, 1, 2, 14]);
        assert_eq!(
            total_fuel(&ps, &integer(2), CostModel::Linear),
            integer(37)
        );
    }

    #[test]
    fn normalized_cost_is_total_over_n() {
        let ps = set(&[0, 1]);
        assert_eq!(normalized_cost(&ps, &ratio(1, 2)), ratio(3, 8));

        let ps = set(&[0, 1, 1]);
        assert_eq!(normalized_cost(&ps, &ratio(5, 6)), ratio(23, 72));

        let ps = set(&[5]);
        assert_eq!(normalized_cost(&ps, &integer(5)), integer(0));
    }

    #[test]
    fn prefix_sum_path_agrees_with_direct_summation() {
        let ps = PositionSet::new(vec![
            integer(-3),
            ratio(-1, 2),
            integer(0),
            ratio(7, 3),
            ratio(7, 3),
            integer(11),
        ])
        .unwrap();
        for x in [integer(-5), ratio(-1, 2), integer(1), ratio(7, 3), integer(20)] {
            for model in [CostModel::Triangular, CostModel::Linear] {
                assert_eq!(
                    total_fuel(&ps, &x, model),
                    direct_total_fuel(&ps, &x, model),
                    "x = {x}, model = {model:?}"
                );
            }
        }
    }
}
