#include "relubound/bound_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace relubound {

std::vector<BigInt> BoundMatrix::eigenvalues() const
{
    std::vector<BigInt> out;
    for ( std::size_t i = 0; i < entries.rows(); ++i )
        out.push_back( entries( i, i ) );
    return out;
}

BoundMatrix build_bound_matrix( const GammaCollection &g, std::size_t n_prime )
{
    if ( n_prime == 0 )
        throw Error( "dimension out of range" );

    BoundMatrix b{ n_prime, IntMatrix( n_prime + 1, n_prime + 1 ) };
    for ( std::size_t j = 0; j <= n_prime; ++j )
    {
        Histogram column = clip( g.value( j, n_prime ), j );
        for ( std::size_t i = 0; i < column.support_end(); ++i )
            b.entries( i, j ) = column[i];
    }
    return b;
}

ConnectorMatrix build_connector( std::size_t n, std::size_t n_prime )
{
    ConnectorMatrix m{ n, n_prime, IntMatrix( n_prime + 1, n + 1 ) };
    for ( std::size_t j = 0; j <= n; ++j )
        m.entries( std::min( j, n_prime ), j ) = 1;
    return m;
}

BigInt evaluate_bound( const GammaCollection &g, const Architecture &arch )
{
    arch.validate();

    std::vector<BigInt> v( arch.n0 + 1, BigInt( 0 ) );
    v[arch.n0] = 1;
    std::size_t previous = arch.n0;
    for ( std::size_t width : arch.widths )
    {
        v = build_connector( previous, width ).entries.apply( v );
        v = build_bound_matrix( g, width ).entries.apply( v );
        previous = width;
    }

    BigInt norm = 0;
    for ( const auto &x : v )
        norm += x;
    return norm;
}

BigInt naive_bound( const Architecture &arch )
{
    arch.validate();
    std::size_t total = 0;
    for ( std::size_t w : arch.widths )
        total += w;
    return pow( BigInt( 2 ), total );
}

BigInt montufar_bound( const Architecture &arch )
{
    arch.validate();
    BigInt product = 1;
    std::size_t running_min = arch.n0;
    for ( std::size_t w : arch.widths )
    {
        product *= binomial_prefix_sum( w, running_min );
        running_min = std::min( running_min, w );
    }
    return product;
}

namespace {

// Memoized on (layer, running min); the plain recursion visits up to Π(n_l+1) leaves.
BigInt serra_recurse( const Architecture &arch,
                      std::size_t layer,
                      std::size_t bound,
                      std::vector<std::vector<std::optional<BigInt>>> &memo )
{
    if ( layer == arch.depth() )
        return 1;
    auto &slot = memo[layer][bound];
    if ( slot )
        return *slot;
    const std::size_t width = arch.widths[layer];
    BigInt sum = 0;
    for ( std::size_t j = 0; j <= std::min( bound, width ); ++j )
        sum += binomial( width, j ) * serra_recurse( arch, layer + 1, std::min( bound, width - j ), memo );
    slot = sum;
    return sum;
}

} // namespace

BigInt serra_sum( const Architecture &arch )
{
    arch.validate();
    std::vector<std::vector<std::optional<BigInt>>> memo(
        arch.depth(), std::vector<std::optional<BigInt>>( arch.n0 + 1 ) );
    return serra_recurse( arch, 0, arch.n0, memo );
}

double stirling_weakened( std::size_t n, std::size_t depth )
{
    if ( n < 1 || depth < 1 )
        throw Error( "stirling_weakened needs n >= 1 and L >= 1" );
    const double dn = static_cast<double>( n );
    const double dl = static_cast<double>( depth );
    const double factor = 0.5 + 1.0 / ( 2.0 * std::sqrt( std::numbers::pi * dn ) );
    return std::pow( 2.0, dl * dn ) * std::pow( factor, dl / 2.0 ) * std::sqrt( 2.0 );
}

BigInt montufar_lower_bound( const Architecture &arch )
{
    arch.validate();
    BigInt product = 1;
    for ( std::size_t l = 0; l + 1 < arch.depth(); ++l )
        product *= pow( BigInt( arch.widths[l] / arch.n0 ), arch.n0 );
    return product * binomial_prefix_sum( arch.widths.back(), arch.n0 );
}

bool width_increases_somewhere( const Architecture &arch )
{
    arch.validate();
    for ( std::size_t l = 1; l <= arch.depth(); ++l )
        if ( arch.width( l - 1 ) < arch.width( l ) )
            return true;
    return false;
}

bool binomial_gain_condition( const Architecture &arch )
{
    arch.validate();
    // prefix_min[l] = min(n0, ..., n_l)
    std::vector<std::size_t> prefix_min( arch.depth() + 1 );
    prefix_min[0] = arch.n0;
    for ( std::size_t l = 1; l <= arch.depth(); ++l )
        prefix_min[l] = std::min( prefix_min[l - 1], arch.width( l ) );

    for ( std::size_t l = 1; l + 1 <= arch.depth(); ++l )
        if ( arch.width( l ) < prefix_min[l] + prefix_min[l + 1] )
            return true;
    return false;
}

nlohmann::json to_json( const IntMatrix &m )
{
    auto rows = nlohmann::json::array();
    for ( std::size_t i = 0; i < m.rows(); ++i )
    {
        auto row = nlohmann::json::array();
        for ( std::size_t j = 0; j < m.cols(); ++j )
        {
            const BigInt &v = m( i, j );
            if ( v.fits_slong_p() )
                row.push_back( v.get_si() );
            else
                row.push_back( to_decimal( v ) );
        }
        rows.push_back( std::move( row ) );
    }
    return rows;
}

} // namespace relubound
