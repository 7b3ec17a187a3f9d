#include "relubound/gamma.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>

namespace relubound {

GammaCollection GammaCollection::naive()
{
    return GammaCollection( GammaKind::Naive );
}

GammaCollection GammaCollection::zaslavsky()
{
    return GammaCollection( GammaKind::Zaslavsky );
}

GammaCollection GammaCollection::binomial()
{
    return GammaCollection( GammaKind::Binomial );
}

GammaCollection
GammaCollection::from_table( std::map<std::pair<std::size_t, std::size_t>, Histogram> table )
{
    if ( table.empty() )
        throw Error( "gamma table has no entries" );

    std::set<std::size_t> widths;
    for ( const auto &[key, hist] : table )
    {
        const auto [n, n_prime] = key;
        if ( n_prime == 0 || n > n_prime )
            throw Error( "gamma table entry (" + std::to_string( n ) + ", " + std::to_string( n_prime ) +
                         ") out of range" );
        widths.insert( n_prime );
    }
    for ( std::size_t n_prime : widths )
    {
        for ( std::size_t n = 0; n <= n_prime; ++n )
            if ( !table.count( { n, n_prime } ) )
                throw Error( "gamma table is missing entry (" + std::to_string( n ) + ", " +
                             std::to_string( n_prime ) + ")" );
        for ( std::size_t n = 0; n < n_prime; ++n )
            if ( !leq( table.at( { n, n_prime } ), table.at( { n + 1, n_prime } ) ) )
                throw Error( "gamma table violates monotonicity at n'=" + std::to_string( n_prime ) +
                             ", n=" + std::to_string( n ) );
    }

    GammaCollection g( GammaKind::Table );
    g._table = std::make_shared<const std::map<std::pair<std::size_t, std::size_t>, Histogram>>(
        std::move( table ) );
    return g;
}

GammaCollection GammaCollection::from_json( const nlohmann::json &doc )
{
    if ( !doc.is_object() || !doc.contains( "entries" ) || !doc["entries"].is_array() )
        throw Error( "gamma file must be an object with an \"entries\" array" );

    std::map<std::pair<std::size_t, std::size_t>, Histogram> table;
    for ( const auto &entry : doc["entries"] )
    {
        if ( !entry.contains( "n" ) || !entry.contains( "n_prime" ) || !entry.contains( "histogram" ) )
            throw Error( "gamma entry needs \"n\", \"n_prime\" and \"histogram\"" );
        long n = entry["n"].get<long>();
        long n_prime = entry["n_prime"].get<long>();
        if ( n < 0 || n_prime < 0 )
            throw Error( "gamma entry dimensions must be nonnegative" );
        auto key = std::make_pair( static_cast<std::size_t>( n ), static_cast<std::size_t>( n_prime ) );
        if ( !table.emplace( key, histogram_from_json( entry["histogram"] ) ).second )
            throw Error( "duplicate gamma entry" );
    }
    return from_table( std::move( table ) );
}

GammaCollection GammaCollection::load_file( const std::string &path )
{
    std::ifstream in( path );
    if ( !in )
        throw Error( "cannot open gamma file '" + path + "'" );
    nlohmann::json doc;
    try
    {
        in >> doc;
    }
    catch ( const nlohmann::json::exception &e )
    {
        throw Error( "invalid JSON in '" + path + "': " + e.what() );
    }
    return from_json( doc );
}

GammaCollection GammaCollection::by_name( const std::string &name )
{
    std::string lower = name;
    std::transform( lower.begin(), lower.end(), lower.begin(),
                    []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
    if ( lower == "naive" )
        return naive();
    if ( lower == "zaslavsky" || lower == "montufar" )
        return zaslavsky();
    if ( lower == "binomial" )
        return binomial();
    return load_file( name );
}

std::string GammaCollection::name() const
{
    switch ( _kind )
    {
    case GammaKind::Naive:
        return "naive";
    case GammaKind::Zaslavsky:
        return "zaslavsky";
    case GammaKind::Binomial:
        return "binomial";
    case GammaKind::Table:
        return "table";
    }
    return "unknown";
}

std::size_t GammaCollection::max_n_prime() const
{
    if ( _kind != GammaKind::Table )
        return std::numeric_limits<std::size_t>::max();
    std::size_t best = 0;
    for ( const auto &[key, hist] : *_table )
        best = std::max( best, key.second );
    return best;
}

Histogram GammaCollection::value( std::size_t n, std::size_t n_prime ) const
{
    if ( n_prime == 0 || n > n_prime )
        throw Error( "dimension out of range" );

    switch ( _kind )
    {
    case GammaKind::Naive:
        return scale( pow( BigInt( 2 ), n_prime ), Histogram::unit( n_prime ) );
    case GammaKind::Zaslavsky:
        return scale( binomial_prefix_sum( n_prime, n ), Histogram::unit( n_prime ) );
    case GammaKind::Binomial:
    {
        std::vector<BigInt> counts( n_prime + 1, BigInt( 0 ) );
        for ( std::size_t j = 0; j <= n; ++j )
            counts[n_prime - j] = relubound::binomial( n_prime, j );
        return Histogram( std::move( counts ) );
    }
    case GammaKind::Table:
    {
        auto it = _table->find( { n, n_prime } );
        if ( it == _table->end() )
            throw Error( "dimension out of range" );
        return it->second;
    }
    }
    throw Error( "unknown gamma kind" );
}

bool check_monotonicity( const GammaCollection &g, std::size_t n_prime_max )
{
    n_prime_max = std::min( n_prime_max, g.max_n_prime() );
    for ( std::size_t n_prime = 1; n_prime <= n_prime_max; ++n_prime )
    {
        if ( g.kind() == GammaKind::Table )
        {
            try
            {
                g.value( 0, n_prime );
            }
            catch ( const Error & )
            {
                continue; // width not covered by the table
            }
        }
        for ( std::size_t n = 0; n < n_prime; ++n )
            if ( !leq( g.value( n, n_prime ), g.value( n + 1, n_prime ) ) )
                return false;
    }
    return true;
}

Histogram activation_histogram( const std::vector<Signature> &signatures, std::size_t n_prime )
{
    std::vector<BigInt> counts( n_prime + 1, BigInt( 0 ) );
    for ( const auto &s : signatures )
    {
        if ( s.size() != n_prime )
            throw Error( "signature length does not match layer width" );
        counts[active_count( s )] += 1;
    }
    return Histogram( std::move( counts ) );
}

bool check_against_layer( const GammaCollection &g,
                          std::size_t input_dim,
                          std::size_t n_prime,
                          const std::vector<Signature> &signatures )
{
    return leq( activation_histogram( signatures, n_prime ),
                g.value( std::min( input_dim, n_prime ), n_prime ) );
}

} // namespace relubound
