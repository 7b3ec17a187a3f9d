#pragma once

#include "relubound/gamma.hpp"
#include "relubound/matrix.hpp"
#include "relubound/transition.hpp"

#include <json.hpp>

#include <vector>

namespace relubound {

/// (n'+1)x(n'+1) matrix whose column j is cl_j(γ_{j,n'}) restricted to indices 0..n'.
/// Upper triangular, so the diagonal holds the eigenvalues.
struct BoundMatrix
{
    std::size_t n_prime = 0;
    IntMatrix entries;

    std::vector<BigInt> eigenvalues() const;
};

/// (n'+1)x(n+1) 0/1 matrix with a single 1 per column, in row min(j, n') (0-based).
struct ConnectorMatrix
{
    std::size_t n = 0;
    std::size_t n_prime = 0;
    IntMatrix entries;
};

BoundMatrix build_bound_matrix( const GammaCollection &g, std::size_t n_prime );
ConnectorMatrix build_connector( std::size_t n, std::size_t n_prime );

/// ‖B_{nL} M_{n_{L-1},nL} ... B_{n1} M_{n0,n1} e_{n0+1}‖₁, applied right to left on a vector.
BigInt evaluate_bound( const GammaCollection &g, const Architecture &arch );

/// 2^{n1+...+nL}
BigInt naive_bound( const Architecture &arch );

/// Π_l Σ_{j<=min(n0..n_{l-1})} C(n_l, j)
BigInt montufar_bound( const Architecture &arch );

/// Σ over the index set J of Π_l C(n_l, j_l), with
/// j_l <= min(n0, n1-j1, ..., n_{l-1}-j_{l-1}, n_l), enumerated depth first.
BigInt serra_sum( const Architecture &arch );

/// 2^{Ln} (1/2 + 1/(2√(πn)))^{L/2} √2. Approximate; the only floating-point bound.
double stirling_weakened( std::size_t n, std::size_t depth );

/// (Π_{l<L} floor(n_l/n0)^{n0}) Σ_{j<=n0} C(n_L, j); a constructive lower bound on the maximum.
BigInt montufar_lower_bound( const Architecture &arch );

/// The Montúfar bound beats the naive bound iff the width increases at some layer:
/// ∃ l in 1..L with n_{l-1} < n_l.
bool width_increases_somewhere( const Architecture &arch );

/// The binomial bound beats the Montúfar bound iff
/// ∃ l in 1..L-1 with n_l < min(n0..n_l) + min(n0..n_{l+1}).
bool binomial_gain_condition( const Architecture &arch );

nlohmann::json to_json( const IntMatrix &m );

} // namespace relubound
