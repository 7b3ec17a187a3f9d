#include "relubound/transition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace relubound {

void Architecture::validate() const
{
    if ( n0 < 1 )
        throw Error( "input dimension n0 must be >= 1" );
    if ( widths.empty() )
        throw Error( "architecture needs at least one layer" );
    for ( std::size_t w : widths )
        if ( w < 1 )
            throw Error( "layer widths must be >= 1" );
}

std::string Architecture::to_string() const
{
    std::ostringstream out;
    out << "n0=" << n0 << " widths=";
    for ( std::size_t l = 0; l < widths.size(); ++l )
        out << ( l ? "," : "" ) << widths[l];
    return out.str();
}

std::vector<std::size_t> parse_widths( const std::string &text )
{
    auto parse_count = [&]( const std::string &token ) -> std::size_t {
        if ( token.empty() || !std::all_of( token.begin(), token.end(), []( unsigned char c ) {
                 return std::isdigit( c );
             } ) )
            throw Error( "malformed widths '" + text + "'" );
        return std::stoul( token );
    };

    std::vector<std::size_t> widths;
    std::stringstream stream( text );
    std::string item;
    while ( std::getline( stream, item, ',' ) )
    {
        auto rep = item.find( ":x" );
        if ( rep == std::string::npos )
        {
            widths.push_back( parse_count( item ) );
            continue;
        }
        std::size_t width = parse_count( item.substr( 0, rep ) );
        std::size_t times = parse_count( item.substr( rep + 2 ) );
        widths.insert( widths.end(), times, width );
    }
    if ( widths.empty() )
        throw Error( "malformed widths '" + text + "'" );
    return widths;
}

Histogram phi( const GammaCollection &g, std::size_t n_prime, const Histogram &v )
{
    if ( n_prime == 0 )
        throw Error( "dimension out of range" );

    Histogram result;
    for ( std::size_t n = 0; n < v.support_end(); ++n )
    {
        if ( v[n] == 0 )
            continue;
        std::size_t dim = std::min( n, n_prime );
        result += scale( v[n], clip( g.value( dim, n_prime ), dim ) );
    }
    return result;
}

Histogram compose_bound_histogram( const GammaCollection &g, const Architecture &arch )
{
    arch.validate();
    Histogram v = Histogram::unit( arch.n0 );
    for ( std::size_t width : arch.widths )
        v = phi( g, width, v );
    return v;
}

Histogram dimension_histogram( const std::vector<MultiSignature> &multisigs, std::size_t n0 )
{
    if ( multisigs.empty() )
        return {};

    const std::size_t layers = multisigs.front().size();
    std::vector<BigInt> counts( n0 + 1, BigInt( 0 ) );
    for ( const auto &ms : multisigs )
    {
        if ( ms.size() != layers )
            throw Error( "multi-signatures have inconsistent depth" );
        std::size_t dim = n0;
        for ( std::size_t l = 0; l < layers; ++l )
        {
            if ( ms[l].size() != multisigs.front()[l].size() )
                throw Error( "multi-signatures have inconsistent layer widths" );
            dim = std::min( dim, active_count( ms[l] ) );
        }
        counts[dim] += 1;
    }
    return Histogram( std::move( counts ) );
}

} // namespace relubound
