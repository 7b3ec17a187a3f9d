#include "relubound/bound_matrices.hpp"
#include "relubound/decomposition.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace relubound;

namespace {

RationalMatrix Q( std::initializer_list<std::initializer_list<long>> rows )
{
    return RationalMatrix( rows );
}

RationalMatrix to_rational( const IntMatrix &m )
{
    RationalMatrix out( m.rows(), m.cols() );
    for ( std::size_t i = 0; i < m.rows(); ++i )
        for ( std::size_t j = 0; j < m.cols(); ++j )
            out( i, j ) = Rational( m( i, j ) );
    return out;
}

IntMatrix repeated_power( const IntMatrix &B, unsigned long l )
{
    IntMatrix acc = IntMatrix::identity( B.rows() );
    for ( unsigned long k = 0; k < l; ++k )
        acc = acc * B;
    return acc;
}

} // namespace

TEST_CASE( "printed decompositions" )
{
    auto d2 = build_decomposition( 3 );
    CHECK( d2.odd );
    CHECK( d2.P == Q( { { 1, 0, 0 }, { 0, 1, -1 }, { 0, 0, 1 } } ) );
    CHECK( d2.J == Q( { { 1, 0, 1 }, { 0, 3, 0 }, { 0, 0, 1 } } ) );

    auto d3 = build_decomposition( 4 );
    CHECK_FALSE( d3.odd );
    CHECK( d3.P == Q( { { 1, 0, 0, 0 }, { 0, 3, 0, 0 }, { 0, 0, 1, -1 }, { 0, 0, 0, 1 } } ) );
    CHECK( d3.J == Q( { { 1, 0, 0, 1 }, { 0, 4, 1, 0 }, { 0, 0, 4, 0 }, { 0, 0, 0, 1 } } ) );

    auto d4 = build_decomposition( 5 );
    CHECK( d4.P
           == Q( { { 1, 0, 0, 0, 0 }, { 0, 4, 0, 0, 0 }, { 0, 0, 1, -1, 0 }, { 0, 0, 0, 1, -1 }, { 0, 0, 0, 0, 1 } } ) );
    CHECK( d4.J
           == Q( { { 1, 0, 0, 0, 1 }, { 0, 5, 0, 1, 0 }, { 0, 0, 11, 0, 0 }, { 0, 0, 0, 5, 0 }, { 0, 0, 0, 0, 1 } } ) );
    RationalMatrix Pinv = Q( { { 1, 0, 0, 0, 0 }, { 0, 1, 0, 0, 0 }, { 0, 0, 1, 1, 1 }, { 0, 0, 0, 1, 1 }, { 0, 0, 0, 0, 1 } } );
    Pinv( 1, 1 ) = Rational( 1, 4 );
    CHECK( d4.P_inv == Pinv );
    CHECK( d4.xi == std::vector<BigInt>{ 1, 5, 11 } );

    auto d1 = build_decomposition( 2 );
    CHECK( build_C( 2 ) == testutil::M( { { 1, 1 }, { 0, 1 } } ) );
    CHECK( d1.xi == std::vector<BigInt>{ 1 } );
    CHECK_THROWS_AS( build_decomposition( 0 ), Error );
}

TEST_CASE( "decomposition identities" )
{
    for ( std::size_t size = 1; size <= 17; ++size )
    {
        auto d = build_decomposition( size );
        CHECK( d.P * d.P_inv == RationalMatrix::identity( size ) );
        CHECK( d.P * d.J * d.P_inv == to_rational( build_C( size ) ) );
        CHECK( d.P.is_upper_triangular() );
        CHECK( d.P_inv.is_upper_triangular() );
    }
    for ( std::size_t n = 1; n <= 16; ++n )
        CHECK( verify_B_equals_C( n ) );
}

TEST_CASE( "closed-form powers" )
{
    for ( std::size_t size = 1; size <= 9; ++size )
    {
        auto J = build_decomposition( size ).J;
        RationalMatrix acc = RationalMatrix::identity( size );
        for ( unsigned long l = 1; l <= 8; ++l )
        {
            acc = acc * J;
            CHECK( power_J( size, l ) == acc );
        }
    }
    for ( std::size_t n = 1; n <= 6; ++n )
    {
        auto B = build_bound_matrix( GammaCollection::binomial(), n ).entries;
        CHECK( power_B( n, 1 ) == B );
        for ( unsigned long l = 2; l <= 9; ++l )
            CHECK( power_B( n, l ) == repeated_power( B, l ) );
    }
    CHECK( power_B( 3, 7 ) == repeated_power( build_bound_matrix( GammaCollection::binomial(), 3 ).entries, 7 ) );
}

TEST_CASE( "displayed fourth power structure" )
{
    for ( unsigned long L = 1; L <= 10; ++L )
    {
        const BigInt L_ = L;
        const BigInt p5 = pow( BigInt( 5 ), L ), p5m = pow( BigInt( 5 ), L - 1 ), p11 = pow( BigInt( 11 ), L );
        RationalMatrix mid( 5, 5 );
        mid( 0, 0 ) = 1;
        mid( 0, 4 ) = Rational( L_ );
        mid( 1, 1 ) = Rational( p5 );
        mid( 1, 3 ) = Rational( L_ * p5m );
        mid( 2, 2 ) = Rational( p11 );
        mid( 3, 3 ) = Rational( p5 );
        mid( 4, 4 ) = 1;
        auto d = build_decomposition( 5 );
        CHECK( d.P * mid * d.P_inv == to_rational( power_B( 4, L ) ) );
    }
}

TEST_CASE( "closed-form norms" )
{
    for ( unsigned long L = 1; L <= 8; ++L )
    {
        const BigInt base = pow( BigInt( 11 ), L ) + 4 * L * pow( BigInt( 5 ), L - 1 );
        CHECK( closed_form_norm( 4, 3, L ) == base );
        CHECK( closed_form_norm( 4, 4, L ) == base + L );
    }
    CHECK( closed_form_norm( 4, 2, 3 ) == 1331 );
    CHECK_THROWS_AS( closed_form_norm( 4, 5, 3 ), Error );

    for ( std::size_t n = 1; n <= 8; ++n )
    {
        auto B = build_bound_matrix( GammaCollection::binomial(), n ).entries;
        for ( unsigned long l = 1; l <= 6; ++l )
        {
            auto P = repeated_power( B, l );
            for ( std::size_t i = 0; i <= n; ++i )
            {
                BigInt col = 0;
                for ( std::size_t r = 0; r <= n; ++r )
                    col += P( r, i );
                CHECK( closed_form_norm( n, i, l ) == col );
            }
            for ( std::size_t n0 = 1; n0 <= n + 2; ++n0 )
                CHECK( closed_form_norm( n, std::min( n0, n ), l )
                       == evaluate_bound( GammaCollection::binomial(), { n0, std::vector<std::size_t>( l, n ) } ) );
        }
    }
}

TEST_CASE( "asymptotic reports" )
{
    auto r = asymptotic_report( 4, 3 );
    CHECK( r.montufar_base == 15 );
    CHECK( r.binomial_base == 11 );
    auto odd = asymptotic_report( 5, 5 );
    CHECK( odd.binomial_base == 16 );
    CHECK( odd.log2_binomial == doctest::Approx( 4.0 ) );
    for ( std::size_t n = 1; n <= 15; n += 2 )
        CHECK( asymptotic_report( n, n ).binomial_base == pow( BigInt( 2 ), n - 1 ) );
    for ( std::size_t n = 2; n <= 12; ++n )
        for ( std::size_t n0 = 1; n0 <= n / 2; ++n0 )
            CHECK( asymptotic_report( n, n0 ).montufar_base == asymptotic_report( n, n0 ).binomial_base );
    CHECK( asymptotic_csv_header() == "n,n0,montufar_base,binomial_base,log2_montufar,log2_binomial,stirling_exponent" );
    CHECK( to_csv_row( r ).rfind( "4,3,15,11,", 0 ) == 0 );
}
