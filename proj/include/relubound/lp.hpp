#pragma once

#include "relubound/common.hpp"

#include <vector>

namespace relubound {

/// coeffs·x + offset > 0 when strict, coeffs·x + offset <= 0 otherwise.
struct Halfspace
{
    std::vector<Rational> coeffs;
    Rational offset;
    bool strict = false;
};

enum class LpBackend
{
    Exact, ///< rational simplex, exact pivoting
    Float, ///< double simplex, tolerance 1e-9; not used for acceptance runs
};

struct FeasibilityResult
{
    bool feasible = false;
    /// Optimal t of: max t s.t. strict rows >= t, nonstrict rows <= 0, x in box, t <= 1.
    /// Meaningless when the nonstrict rows alone are infeasible.
    Rational margin;
    /// Optimal x; lies in the region whenever feasible.
    std::vector<Rational> witness;
};

/// Decides whether some x in the closed box [-R, R]^dim satisfies every halfspace.
/// The system is nonempty iff the optimal margin t* is positive.
FeasibilityResult feasible( const std::vector<Halfspace> &constraints,
                            std::size_t dim,
                            const Rational &box_radius,
                            LpBackend backend = LpBackend::Exact );

/// Outcome of max c·z s.t. A z <= b, z >= 0.
template <typename T>
struct LpSolution
{
    enum class Status
    {
        Optimal,
        Infeasible,
        Unbounded,
    } status = Status::Infeasible;
    T value{};
    std::vector<T> z;
};

LpSolution<Rational> solve_lp( const std::vector<std::vector<Rational>> &A,
                               const std::vector<Rational> &b,
                               const std::vector<Rational> &c );

LpSolution<double> solve_lp( const std::vector<std::vector<double>> &A,
                             const std::vector<double> &b,
                             const std::vector<double> &c );

} // namespace relubound
