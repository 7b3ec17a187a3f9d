#pragma once

#include "relubound/matrix.hpp"

#include <string>
#include <vector>

namespace relubound {

/// Explicit upper-triangular Jordan-like factorization C = P·J·P⁻¹ of size N.
///
/// With w = N - 1 and ξ_j = Σ_{i<j} C(w, i), m = floor(N/2):
///   J = diag(ξ_1..ξ_m, ξ_{N-m}..ξ_1) plus ones at (i, N-1-i) for i < m,
///   P = diag(ξ_1, ξ_2-ξ_1, .., ξ_m-ξ_{m-1}) ⊕ (upper bidiagonal 1/-1 block),
///   P⁻¹ = reciprocal diagonal ⊕ (upper triangular all-ones block).
/// C_{n+1} is the binomial bound matrix B_n.
struct JordanLikeDecomposition
{
    std::size_t size = 0;
    bool odd = false;
    std::vector<BigInt> xi; ///< xi[j-1] = ξ_j, j = 1..ceil(N/2)
    RationalMatrix P;
    RationalMatrix J;
    RationalMatrix P_inv;
};

JordanLikeDecomposition build_decomposition( std::size_t size );

/// C_N built straight from its block template.
IntMatrix build_C( std::size_t size );

/// build_bound_matrix(Binomial, n) == C_{n+1}, both built independently.
bool verify_B_equals_C( std::size_t n );

/// Closed-form J_N^l: diagonal ξ^l and l·ξ^{l-1} on the coupled antidiagonal.
RationalMatrix power_J( std::size_t size, unsigned long exponent );

/// B_n^l = P_{n+1} J_{n+1}^l P_{n+1}⁻¹; throws Error("decomposition inconsistency")
/// if a non-integral entry appears.
IntMatrix power_B( std::size_t n, unsigned long exponent );

/// ‖B_n^l e_{i+1}‖₁ in closed form.
BigInt closed_form_norm( std::size_t n, std::size_t i, unsigned long exponent );

/// Dominant per-layer growth bases for equal widths n and input dimension n0,
/// in the row order Montúfar / Stirling-weakened / binomial.
struct AsymptoticReport
{
    std::size_t n = 0;
    std::size_t n0 = 0;
    BigInt montufar_base;    ///< Σ_{j<=min(n0,n)} C(n,j)
    BigInt binomial_base;    ///< Σ_{j<=min(n0,floor(n/2))} C(n,j)
    double log2_montufar = 0;
    double log2_binomial = 0;
    double stirling_exponent = 0; ///< n - 1/2 + log2(1 + 1/√(πn))/2, approximate
};

AsymptoticReport asymptotic_report( std::size_t n, std::size_t n0 );

std::string asymptotic_csv_header();
std::string to_csv_row( const AsymptoticReport &report );

} // namespace relubound
