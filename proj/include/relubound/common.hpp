#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relubound {

/// Arbitrary-precision integer used for every count and bound value.
using BigInt = mpz_class;

/// Exact rational used for network weights, LP pivots and the decomposition.
using Rational = mpq_class;

/// Error raised on contract violations (bad dimensions, malformed input files, ...).
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Decimal rendering, never scientific notation.
inline std::string to_decimal( const BigInt &value )
{
    return value.get_str( 10 );
}

inline std::string to_decimal( const Rational &value )
{
    return value.get_str( 10 );
}

/// Parses "p/q", "-p/q" or a plain integer; the result is canonicalized.
Rational parse_rational( const std::string &text );

BigInt pow( const BigInt &base, unsigned long exponent );

/// C(n, k) via the multiplicative formula; 0 when k > n.
BigInt binomial( unsigned long n, unsigned long k );

/// sum_{j=0}^{k} C(n, j).
BigInt binomial_prefix_sum( unsigned long n, unsigned long k );

} // namespace relubound
