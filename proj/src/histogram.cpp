#include "relubound/histogram.hpp"

#include <algorithm>
#include <sstream>

namespace relubound {

namespace {

const BigInt kZero = 0;

} // namespace

Histogram::Histogram( std::vector<BigInt> counts )
    : _counts( std::move( counts ) )
{
    for ( const auto &c : _counts )
        if ( c < 0 )
            throw Error( "histogram counts must be nonnegative" );
    canonicalize();
}

Histogram Histogram::unit( std::size_t i )
{
    Histogram h;
    h._counts.assign( i + 1, BigInt( 0 ) );
    h._counts[i] = 1;
    return h;
}

void Histogram::canonicalize()
{
    while ( !_counts.empty() && _counts.back() == 0 )
        _counts.pop_back();
}

const BigInt &Histogram::operator[]( std::size_t j ) const
{
    return j < _counts.size() ? _counts[j] : kZero;
}

BigInt Histogram::l1_norm() const
{
    BigInt sum = 0;
    for ( const auto &c : _counts )
        sum += c;
    return sum;
}

BigInt Histogram::tail_sum( std::size_t from ) const
{
    BigInt sum = 0;
    for ( std::size_t j = from; j < _counts.size(); ++j )
        sum += _counts[j];
    return sum;
}

std::vector<BigInt> Histogram::tail_sums() const
{
    std::vector<BigInt> tails( _counts.size() + 1, BigInt( 0 ) );
    for ( std::size_t j = _counts.size(); j-- > 0; )
        tails[j] = tails[j + 1] + _counts[j];
    return tails;
}

Histogram &Histogram::operator+=( const Histogram &other )
{
    if ( other._counts.size() > _counts.size() )
        _counts.resize( other._counts.size(), BigInt( 0 ) );
    for ( std::size_t j = 0; j < other._counts.size(); ++j )
        _counts[j] += other._counts[j];
    canonicalize();
    return *this;
}

std::string Histogram::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for ( std::size_t j = 0; j < _counts.size(); ++j )
    {
        if ( _counts[j] == 0 )
            continue;
        out << ( first ? "" : " + " ) << to_decimal( _counts[j] ) << "·e" << j;
        first = false;
    }
    return first ? "0" : out.str();
}

Histogram add( const Histogram &a, const Histogram &b )
{
    return a + b;
}

Histogram scale( const BigInt &factor, const Histogram &a )
{
    if ( factor < 0 )
        throw Error( "histogram scale factor must be nonnegative" );
    std::vector<BigInt> counts = a.counts();
    for ( auto &c : counts )
        c *= factor;
    return Histogram( std::move( counts ) );
}

bool leq( const Histogram &v, const Histogram &w )
{
    // Tail sums of v vanish beyond its support, so only J < v.support_end() matter.
    auto tv = v.tail_sums();
    auto tw = w.tail_sums();
    for ( std::size_t j = 0; j < v.support_end(); ++j )
    {
        const BigInt &rhs = j < tw.size() ? tw[j] : kZero;
        if ( tv[j] > rhs )
            return false;
    }
    return true;
}

Histogram max_of( std::span<const Histogram> histograms )
{
    if ( histograms.empty() )
        throw Error( "empty max" );

    std::size_t end = 0;
    for ( const auto &h : histograms )
        end = std::max( end, h.support_end() );

    // maxTail[J] = max_i tail_sum(v_i, J); the result's tail sums are exactly these.
    std::vector<BigInt> max_tail( end + 1, BigInt( 0 ) );
    for ( const auto &h : histograms )
    {
        auto tails = h.tail_sums();
        for ( std::size_t j = 0; j < tails.size(); ++j )
            if ( tails[j] > max_tail[j] )
                max_tail[j] = tails[j];
    }

    std::vector<BigInt> counts( end, BigInt( 0 ) );
    for ( std::size_t j = 0; j < end; ++j )
        counts[j] = max_tail[j] - max_tail[j + 1];
    return Histogram( std::move( counts ) );
}

Histogram clip( const Histogram &v, std::size_t i_star )
{
    if ( v.support_end() <= i_star + 1 )
        return v;
    std::vector<BigInt> counts( v.counts().begin(), v.counts().begin() + i_star );
    counts.push_back( v.tail_sum( i_star ) );
    return Histogram( std::move( counts ) );
}

nlohmann::json to_json( const Histogram &v )
{
    auto arr = nlohmann::json::array();
    for ( const auto &c : v.counts() )
    {
        if ( c.fits_slong_p() )
            arr.push_back( c.get_si() );
        else
            arr.push_back( to_decimal( c ) );
    }
    return arr;
}

Histogram histogram_from_json( const nlohmann::json &j )
{
    if ( !j.is_array() )
        throw Error( "histogram JSON must be an array" );
    std::vector<BigInt> counts;
    for ( const auto &entry : j )
    {
        if ( entry.is_number_integer() )
            counts.emplace_back( entry.get<long>() );
        else if ( entry.is_string() )
        {
            Rational r = parse_rational( entry.get<std::string>() );
            if ( r.get_den() != 1 )
                throw Error( "histogram counts must be integers" );
            counts.push_back( r.get_num() );
        }
        else
            throw Error( "histogram counts must be integers" );
    }
    return Histogram( std::move( counts ) );
}

} // namespace relubound
