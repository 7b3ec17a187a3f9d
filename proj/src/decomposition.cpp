#include "relubound/decomposition.hpp"

#include "relubound/bound_matrices.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace relubound {

namespace {

// ξ_1..ξ_{ceil(N/2)} for matrices of size N (binomials of w = N - 1).
std::vector<BigInt> xi_values( std::size_t size )
{
    const std::size_t w = size - 1;
    std::vector<BigInt> xi;
    BigInt partial = 0;
    for ( std::size_t j = 1; j <= ( size + 1 ) / 2; ++j )
    {
        partial += binomial( w, j - 1 );
        xi.push_back( partial );
    }
    return xi;
}

// ξ_j with ξ_0 = 0.
const BigInt &xi_at( const std::vector<BigInt> &xi, std::size_t j )
{
    static const BigInt zero = 0;
    return j == 0 ? zero : xi.at( j - 1 );
}

// Eigenvalue on the diagonal of J and C at row i.
const BigInt &diagonal_xi( const std::vector<BigInt> &xi, std::size_t size, std::size_t i )
{
    const std::size_t m = size / 2;
    return i < m ? xi_at( xi, i + 1 ) : xi_at( xi, size - i );
}

void require_size( std::size_t size )
{
    if ( size < 1 )
        throw Error( "decomposition size must be >= 1" );
}

} // namespace

JordanLikeDecomposition build_decomposition( std::size_t size )
{
    require_size( size );
    const std::size_t m = size / 2;

    JordanLikeDecomposition d;
    d.size = size;
    d.odd = size % 2 == 1;
    d.xi = xi_values( size );
    d.P = RationalMatrix( size, size );
    d.J = RationalMatrix( size, size );
    d.P_inv = RationalMatrix( size, size );

    for ( std::size_t i = 0; i < size; ++i )
        d.J( i, i ) = Rational( diagonal_xi( d.xi, size, i ) );
    for ( std::size_t i = 0; i < m; ++i )
        d.J( i, size - 1 - i ) = 1;

    // Upper-left m x m: diagonal of successive ξ differences.
    for ( std::size_t i = 0; i < m; ++i )
    {
        BigInt gap = xi_at( d.xi, i + 1 ) - xi_at( d.xi, i );
        d.P( i, i ) = Rational( gap );
        d.P_inv( i, i ) = Rational( BigInt( 1 ), gap );
    }
    // Lower-right (N-m) x (N-m): bidiagonal 1/-1 in P, all-ones upper triangle in P⁻¹.
    for ( std::size_t i = m; i < size; ++i )
    {
        d.P( i, i ) = 1;
        if ( i + 1 < size )
            d.P( i, i + 1 ) = -1;
        for ( std::size_t j = i; j < size; ++j )
            d.P_inv( i, j ) = 1;
    }
    return d;
}

IntMatrix build_C( std::size_t size )
{
    require_size( size );
    const std::size_t m = size / 2;
    const auto xi = xi_values( size );

    IntMatrix c( size, size );
    for ( std::size_t i = 0; i < m; ++i )
    {
        c( i, i ) = xi_at( xi, i + 1 );
        const BigInt gap = xi_at( xi, i + 1 ) - xi_at( xi, i );
        for ( std::size_t k = size - 1 - i; k < size; ++k )
            c( i, k ) = gap;
    }
    for ( std::size_t r = m; r < size; ++r )
    {
        const std::size_t j = size - r;
        c( r, r ) = xi_at( xi, j );
        const BigInt gap = xi_at( xi, j ) - xi_at( xi, j - 1 );
        for ( std::size_t k = r + 1; k < size; ++k )
            c( r, k ) = gap;
    }
    return c;
}

bool verify_B_equals_C( std::size_t n )
{
    if ( n < 1 )
        throw Error( "verify_B_equals_C needs n >= 1" );
    return build_bound_matrix( GammaCollection::binomial(), n ).entries == build_C( n + 1 );
}

RationalMatrix power_J( std::size_t size, unsigned long exponent )
{
    require_size( size );
    if ( exponent < 1 )
        throw Error( "exponent must be >= 1" );
    const std::size_t m = size / 2;
    const auto xi = xi_values( size );

    RationalMatrix jl( size, size );
    for ( std::size_t i = 0; i < size; ++i )
        jl( i, i ) = Rational( pow( diagonal_xi( xi, size, i ), exponent ) );
    // (i, N-1-i) couples two equal eigenvalues ξ_{i+1}: a 2x2 Jordan block.
    for ( std::size_t i = 0; i < m; ++i )
        jl( i, size - 1 - i ) = Rational( BigInt( exponent ) * pow( xi_at( xi, i + 1 ), exponent - 1 ) );
    return jl;
}

IntMatrix power_B( std::size_t n, unsigned long exponent )
{
    if ( n < 1 )
        throw Error( "power_B needs n >= 1" );
    const auto d = build_decomposition( n + 1 );
    const RationalMatrix product = d.P * power_J( n + 1, exponent ) * d.P_inv;

    IntMatrix out( n + 1, n + 1 );
    for ( std::size_t i = 0; i <= n; ++i )
        for ( std::size_t j = 0; j <= n; ++j )
        {
            const Rational &v = product( i, j );
            if ( v.get_den() != 1 )
                throw Error( "decomposition inconsistency" );
            out( i, j ) = v.get_num();
        }
    return out;
}

BigInt closed_form_norm( std::size_t n, std::size_t i, unsigned long exponent )
{
    if ( n < 1 )
        throw Error( "closed_form_norm needs n >= 1" );
    if ( i > n )
        throw Error( "column index i must be <= n" );
    if ( exponent < 1 )
        throw Error( "exponent must be >= 1" );

    const std::size_t half = n / 2;
    if ( i <= half )
        return pow( binomial_prefix_sum( n, i ), exponent );

    BigInt norm = pow( binomial_prefix_sum( n, half ), exponent );
    BigInt tail = 0;
    for ( std::size_t s = half + 1; s <= i; ++s )
        tail += pow( binomial_prefix_sum( n, n - s ), exponent - 1 ) * binomial( n, n - s );
    return norm + BigInt( exponent ) * tail;
}

AsymptoticReport asymptotic_report( std::size_t n, std::size_t n0 )
{
    if ( n < 1 || n0 < 1 )
        throw Error( "asymptotic_report needs n >= 1 and n0 >= 1" );

    AsymptoticReport r;
    r.n = n;
    r.n0 = n0;
    r.montufar_base = binomial_prefix_sum( n, std::min( n0, n ) );
    r.binomial_base = binomial_prefix_sum( n, std::min( n0, n / 2 ) );

    auto log2_big = []( const BigInt &v ) {
        long exp2 = 0;
        double mantissa = mpz_get_d_2exp( &exp2, v.get_mpz_t() );
        return std::log2( mantissa ) + static_cast<double>( exp2 );
    };
    r.log2_montufar = log2_big( r.montufar_base );
    r.log2_binomial = log2_big( r.binomial_base );

    const double dn = static_cast<double>( n );
    r.stirling_exponent = dn - 0.5 + 0.5 * std::log2( 1.0 + 1.0 / std::sqrt( std::numbers::pi * dn ) );
    return r;
}

std::string asymptotic_csv_header()
{
    return "n,n0,montufar_base,binomial_base,log2_montufar,log2_binomial,stirling_exponent";
}

std::string to_csv_row( const AsymptoticReport &r )
{
    std::ostringstream out;
    out.precision( 12 );
    out << r.n << ',' << r.n0 << ',' << to_decimal( r.montufar_base ) << ',' << to_decimal( r.binomial_base )
        << ',' << r.log2_montufar << ',' << r.log2_binomial << ',' << r.stirling_exponent;
    return out.str();
}

} // namespace relubound
