//! Exact solvers for the fuel-optimal meeting point of N agents on a line.
//!
//! Each agent i starts at a rational position x_i and burns fuel
//! `f(d) = d(d+1)/2` to travel distance d (the triangular model; a linear
//! `f(d) = d` model is also provided). The library finds the meeting point
//! minimizing the total fuel:
//!
//! * [`continuous`] — the minimizer over the reals, located by an O(N) scan
//!   or an O(log N) bisection over sorted positions, with a subgradient
//!   certificate and mean/median fast paths;
//! * [`discrete`] — the integer minimizer, obtained by rounding the
//!   continuous one both ways; plus the integer-median baseline for the
//!   linear model;
//! * [`oracle`] — brute-force reference solvers used for validation;
//! * [`bench`] — deterministic instance generators and a timing harness.
//!
//! All arithmetic is exact rational ([`Rational`]); no solver path touches
//! floating point. Every type is immutable after construction and every
//! operation is a pure function, so everything here is safe to share across
//! threads.

pub mod bench;
pub mod continuous;
pub mod cost;
pub mod discrete;
pub mod error;
pub mod interval;
pub mod oracle;
pub mod positions;
pub mod rational;

pub use continuous::{
    condition_at_point, corollary_mean_fast_path, corollary_median_fast_path, solve_bisection,
    solve_fast_path, solve_linear_scan, ContinuousReport, SolutionCase, Strategy,
};
pub use cost::{normalized_cost, total_fuel, total_fuel_at_int, CostModel};
pub use discrete::{solve_discrete, solve_discrete_from, solve_discrete_linear, DiscreteReport};
pub use error::Error;
pub use interval::Interval;
pub use oracle::{oracle_continuous_exact, oracle_discrete_scan, OracleResult};
pub use positions::{PositionSet, ProblemStats};
pub use rational::Rational;
