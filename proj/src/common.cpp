#include "relubound/common.hpp"

#include <algorithm>
#include <cctype>

namespace relubound {

Rational parse_rational( const std::string &text )
{
    std::string trimmed;
    for ( char c : text )
        if ( !std::isspace( static_cast<unsigned char>( c ) ) )
            trimmed.push_back( c );

    if ( trimmed.empty() )
        throw Error( "empty rational literal" );

    auto valid_integer = []( const std::string &s, bool allow_sign ) {
        std::size_t start = 0;
        if ( allow_sign && !s.empty() && ( s[0] == '-' || s[0] == '+' ) )
            start = 1;
        if ( start == s.size() )
            return false;
        return std::all_of( s.begin() + start, s.end(),
                            []( char c ) { return std::isdigit( static_cast<unsigned char>( c ) ); } );
    };

    auto slash = trimmed.find( '/' );
    std::string num = trimmed.substr( 0, slash );
    std::string den = slash == std::string::npos ? "1" : trimmed.substr( slash + 1 );
    if ( !valid_integer( num, true ) || !valid_integer( den, false ) )
        throw Error( "malformed rational literal '" + text + "'" );
    if ( num[0] == '+' )
        num.erase( 0, 1 );

    BigInt p( num, 10 );
    BigInt q( den, 10 );
    if ( q == 0 )
        throw Error( "zero denominator in '" + text + "'" );

    Rational r( p, q );
    r.canonicalize();
    return r;
}

BigInt pow( const BigInt &base, unsigned long exponent )
{
    BigInt result;
    mpz_pow_ui( result.get_mpz_t(), base.get_mpz_t(), exponent );
    return result;
}

BigInt binomial( unsigned long n, unsigned long k )
{
    if ( k > n )
        return 0;
    k = std::min( k, n - k );
    BigInt result = 1;
    for ( unsigned long i = 1; i <= k; ++i )
    {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt binomial_prefix_sum( unsigned long n, unsigned long k )
{
    BigInt sum = 0;
    for ( unsigned long j = 0; j <= std::min( n, k ); ++j )
        sum += binomial( n, j );
    return sum;
}

} // namespace relubound
