#include "relubound/empirical.hpp"

#include <fstream>

namespace relubound {

namespace {

Rational rational_from_json( const nlohmann::json &value )
{
    if ( value.is_number_integer() )
        return Rational( value.get<long>() );
    if ( value.is_string() )
        return parse_rational( value.get<std::string>() );
    throw Error( "rationals must be \"p/q\" strings or integers" );
}

nlohmann::json rational_strings( const std::vector<Rational> &values )
{
    auto arr = nlohmann::json::array();
    for ( const auto &v : values )
        arr.push_back( to_decimal( v ) );
    return arr;
}

nlohmann::json big_json( const BigInt &v )
{
    if ( v.fits_slong_p() )
        return v.get_si();
    return to_decimal( v );
}

} // namespace

nlohmann::json to_json( const ReluNetwork &net )
{
    nlohmann::json doc;
    doc["n0"] = net.n0;
    doc["layers"] = nlohmann::json::array();
    for ( const auto &layer : net.layers )
    {
        nlohmann::json entry;
        entry["W"] = nlohmann::json::array();
        for ( std::size_t i = 0; i < layer.W.rows(); ++i )
        {
            auto row = nlohmann::json::array();
            for ( std::size_t j = 0; j < layer.W.cols(); ++j )
                row.push_back( to_decimal( layer.W( i, j ) ) );
            entry["W"].push_back( std::move( row ) );
        }
        entry["b"] = rational_strings( layer.b );
        doc["layers"].push_back( std::move( entry ) );
    }
    return doc;
}

ReluNetwork network_from_json( const nlohmann::json &doc )
{
    if ( !doc.is_object() || !doc.contains( "n0" ) || !doc.contains( "layers" ) || !doc["layers"].is_array() )
        throw Error( "network file must contain \"n0\" and a \"layers\" array" );

    ReluNetwork net;
    const long n0 = doc["n0"].get<long>();
    if ( n0 < 1 )
        throw Error( "network input dimension must be >= 1" );
    net.n0 = static_cast<std::size_t>( n0 );

    for ( const auto &entry : doc["layers"] )
    {
        if ( !entry.contains( "W" ) || !entry.contains( "b" ) || !entry["W"].is_array() || !entry["b"].is_array() )
            throw Error( "each layer needs \"W\" and \"b\" arrays" );
        const auto &rows = entry["W"];
        const std::size_t height = rows.size();
        const std::size_t width = height == 0 ? 0 : rows[0].size();

        ReluLayer layer;
        layer.W = RationalMatrix( height, width );
        for ( std::size_t i = 0; i < height; ++i )
        {
            if ( !rows[i].is_array() || rows[i].size() != width )
                throw Error( "ragged weight matrix" );
            for ( std::size_t j = 0; j < width; ++j )
                layer.W( i, j ) = rational_from_json( rows[i][j] );
        }
        for ( const auto &v : entry["b"] )
            layer.b.push_back( rational_from_json( v ) );
        net.layers.push_back( std::move( layer ) );
    }
    net.validate();
    return net;
}

ReluNetwork load_network_file( const std::string &path )
{
    std::ifstream in( path );
    if ( !in )
        throw Error( "cannot open network file '" + path + "'" );
    nlohmann::json doc;
    try
    {
        in >> doc;
    }
    catch ( const nlohmann::json::exception &e )
    {
        throw Error( "invalid JSON in '" + path + "': " + e.what() );
    }
    return network_from_json( doc );
}

nlohmann::json to_json( const EnumerationResult &result )
{
    nlohmann::json doc;
    doc["count"] = result.count();
    doc["regions"] = nlohmann::json::array();
    for ( std::size_t k = 0; k < result.count(); ++k )
        doc["regions"].push_back(
            { { "signature", to_string( result.signatures[k] ) }, { "witness", rational_strings( result.witnesses[k] ) } } );
    doc["prefix_counts"] = nlohmann::json::array();
    for ( const auto &layer : result.prefixes )
        doc["prefix_counts"].push_back( layer.size() );
    return doc;
}

nlohmann::json to_json( const VerificationReport &report )
{
    nlohmann::json doc;
    doc["exact_count"] = report.exact;
    doc["binomial"] = big_json( report.binomial );
    doc["zaslavsky"] = big_json( report.zaslavsky );
    doc["naive"] = big_json( report.naive );
    doc["chain_holds"] = report.chain_holds;
    doc["recursion"] = nlohmann::json::array();
    for ( const auto &check : report.recursion )
        doc["recursion"].push_back( { { "gamma", check.gamma },
                                      { "layer", check.layer },
                                      { "observed", to_json( check.observed ) },
                                      { "bound", to_json( check.bound ) },
                                      { "holds", check.holds } } );
    doc["ok"] = report.ok;
    return doc;
}

} // namespace relubound
