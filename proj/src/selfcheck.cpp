#include "relubound/selfcheck.hpp"

#include "relubound/bound_matrices.hpp"
#include "relubound/decomposition.hpp"
#include "relubound/empirical.hpp"

#include <functional>
#include <random>

namespace relubound {

namespace {

class Runner
{
public:
    explicit Runner( std::vector<CheckOutcome> &out )
        : _out( out )
    {
    }

    // body returns an empty string on success, otherwise a description of the failure.
    void check( const std::string &name, std::size_t cases, const std::function<std::string( std::size_t )> &body )
    {
        CheckOutcome outcome{ name, true, 0, {} };
        try
        {
            for ( std::size_t k = 0; k < cases; ++k )
            {
                ++outcome.cases;
                auto failure = body( k );
                if ( !failure.empty() )
                {
                    outcome.passed = false;
                    outcome.detail = failure;
                    break;
                }
            }
        }
        catch ( const std::exception &e )
        {
            outcome.passed = false;
            outcome.detail = std::string( "exception: " ) + e.what();
        }
        _out.push_back( std::move( outcome ) );
    }

private:
    std::vector<CheckOutcome> &_out;
};

Histogram random_histogram( std::mt19937_64 &rng, std::size_t max_len, long max_count )
{
    std::uniform_int_distribution<std::size_t> len( 0, max_len );
    std::uniform_int_distribution<long> count( 0, max_count );
    std::vector<BigInt> c( len( rng ) );
    for ( auto &x : c )
        x = count( rng );
    return Histogram( std::move( c ) );
}

Architecture random_architecture( std::mt19937_64 &rng, std::size_t max_depth, std::size_t max_width )
{
    std::uniform_int_distribution<std::size_t> depth( 1, max_depth );
    std::uniform_int_distribution<std::size_t> width( 1, max_width );
    Architecture arch;
    arch.n0 = width( rng );
    arch.widths.resize( depth( rng ) );
    for ( auto &w : arch.widths )
        w = width( rng );
    return arch;
}

const GammaCollection &gamma_by_index( std::size_t k )
{
    static const GammaCollection all[] = { GammaCollection::naive(), GammaCollection::zaslavsky(),
                                           GammaCollection::binomial() };
    return all[k % 3];
}

std::string fail( const std::string &what, const std::string &where )
{
    return what + " at " + where;
}

} // namespace

std::vector<CheckOutcome> run_selfcheck( const SelfCheckOptions &options )
{
    std::vector<CheckOutcome> out;
    Runner run( out );
    std::mt19937_64 rng( options.seed );
    const std::size_t cases = options.quick ? 500 : 10000;

    run.check( "order laws", cases, [&]( std::size_t ) -> std::string {
        auto a = random_histogram( rng, 6, 4 );
        auto b = random_histogram( rng, 6, 4 );
        auto c = random_histogram( rng, 6, 4 );
        if ( !leq( a, a ) )
            return fail( "reflexivity", a.to_string() );
        if ( leq( a, b ) && leq( b, a ) && !( a == b ) )
            return fail( "antisymmetry", a.to_string() + " / " + b.to_string() );
        if ( leq( a, b ) && leq( b, c ) && !leq( a, c ) )
            return fail( "transitivity", a.to_string() );
        std::vector<Histogram> pair{ a, b };
        auto m = max_of( pair );
        if ( !leq( a, m ) || !leq( b, m ) )
            return fail( "max is an upper bound", a.to_string() );
        if ( leq( a, c ) && leq( b, c ) && !leq( m, c ) )
            return fail( "max is least", a.to_string() );
        if ( leq( a, b ) && !leq( add( a, c ), add( b, c ) ) )
            return fail( "addition compatibility", a.to_string() );
        return {};
    } );

    run.check( "norm monotonicity", cases, [&]( std::size_t ) -> std::string {
        auto a = random_histogram( rng, 6, 4 );
        auto b = random_histogram( rng, 6, 4 );
        if ( leq( a, b ) && a.l1_norm() > b.l1_norm() )
            return fail( "norm", a.to_string() );
        return {};
    } );

    run.check( "clip monotonicity", cases, [&]( std::size_t ) -> std::string {
        auto a = random_histogram( rng, 6, 4 );
        auto b = add( a, random_histogram( rng, 6, 2 ) );
        std::size_t i = std::uniform_int_distribution<std::size_t>( 0, 6 )( rng );
        auto ca = clip( a, i );
        if ( !leq( ca, a ) )
            return fail( "clip below", a.to_string() );
        if ( ca.l1_norm() != a.l1_norm() )
            return fail( "clip mass", a.to_string() );
        if ( leq( a, b ) && !leq( ca, clip( b, i ) ) )
            return fail( "clip order", a.to_string() );
        return {};
    } );

    run.check( "phi monotonicity", cases, [&]( std::size_t k ) -> std::string {
        const auto &g = gamma_by_index( k );
        auto a = random_histogram( rng, 6, 3 );
        auto b = add( a, random_histogram( rng, 6, 2 ) );
        std::size_t n_prime = std::uniform_int_distribution<std::size_t>( 1, 7 )( rng );
        if ( !leq( phi( g, n_prime, a ), phi( g, n_prime, b ) ) )
            return fail( g.name() + " phi order", a.to_string() );
        return {};
    } );

    run.check( "zaslavsky and binomial phi norms agree", cases, [&]( std::size_t ) -> std::string {
        auto a = random_histogram( rng, 6, 3 );
        std::size_t n_prime = std::uniform_int_distribution<std::size_t>( 1, 7 )( rng );
        if ( phi( GammaCollection::zaslavsky(), n_prime, a ).l1_norm()
             != phi( GammaCollection::binomial(), n_prime, a ).l1_norm() )
            return fail( "norm mismatch", a.to_string() );
        return {};
    } );

    run.check( "gamma monotone in n", 1, [&]( std::size_t ) -> std::string {
        for ( std::size_t k = 0; k < 3; ++k )
            if ( !check_monotonicity( gamma_by_index( k ), options.quick ? 8 : 16 ) )
                return gamma_by_index( k ).name();
        return {};
    } );

    const std::size_t arch_cases = options.quick ? 50 : 200;
    run.check( "histogram path equals matrix path", arch_cases, [&]( std::size_t ) -> std::string {
        auto arch = random_architecture( rng, 5, 7 );
        for ( std::size_t k = 0; k < 3; ++k )
        {
            const auto &g = gamma_by_index( k );
            if ( compose_bound_histogram( g, arch ).l1_norm() != evaluate_bound( g, arch ) )
                return fail( g.name(), arch.to_string() );
        }
        if ( evaluate_bound( GammaCollection::zaslavsky(), arch ) != montufar_bound( arch ) )
            return fail( "zaslavsky vs closed form", arch.to_string() );
        if ( evaluate_bound( GammaCollection::naive(), arch ) != naive_bound( arch ) )
            return fail( "naive vs closed form", arch.to_string() );
        if ( evaluate_bound( GammaCollection::binomial(), arch ) != serra_sum( arch ) )
            return fail( "binomial vs index-set sum", arch.to_string() );
        return {};
    } );

    run.check( "bound ordering and strictness", arch_cases, [&]( std::size_t ) -> std::string {
        auto arch = random_architecture( rng, 3, 4 );
        BigInt b = evaluate_bound( GammaCollection::binomial(), arch );
        BigInt m = montufar_bound( arch );
        BigInt n = naive_bound( arch );
        if ( !( b <= m && m <= n ) )
            return fail( "ordering", arch.to_string() );
        if ( ( m < n ) != width_increases_somewhere( arch ) )
            return fail( "montufar strictness", arch.to_string() );
        if ( ( b < m ) != binomial_gain_condition( arch ) )
            return fail( "binomial strictness", arch.to_string() );
        return {};
    } );

    const std::size_t max_n = options.quick ? 8 : 16;
    run.check( "decomposition identities", max_n, [&]( std::size_t k ) -> std::string {
        const std::size_t size = k + 1;
        auto d = build_decomposition( size );
        if ( !( d.P * d.P_inv == RationalMatrix::identity( size ) ) )
            return fail( "P P^-1", std::to_string( size ) );
        auto C = build_C( size );
        auto PJP = d.P * d.J * d.P_inv;
        for ( std::size_t i = 0; i < size; ++i )
            for ( std::size_t j = 0; j < size; ++j )
                if ( PJP( i, j ) != Rational( C( i, j ) ) )
                    return fail( "P J P^-1", std::to_string( size ) );
        if ( !verify_B_equals_C( k + 1 ) )
            return fail( "B = C", std::to_string( k + 1 ) );
        return {};
    } );

    const std::size_t power_n = options.quick ? 6 : 12;
    const unsigned long power_l = options.quick ? 8 : 20;
    run.check( "matrix powers and closed-form norms", power_n, [&]( std::size_t k ) -> std::string {
        const std::size_t n = k + 1;
        auto B = build_bound_matrix( GammaCollection::binomial(), n ).entries;
        IntMatrix acc = IntMatrix::identity( n + 1 );
        for ( unsigned long l = 1; l <= power_l; ++l )
        {
            acc = acc * B;
            if ( !( power_B( n, l ) == acc ) )
                return fail( "power", "n=" + std::to_string( n ) + " l=" + std::to_string( l ) );
            for ( std::size_t i = 0; i <= n; ++i )
            {
                BigInt norm = 0;
                for ( std::size_t r = 0; r <= n; ++r )
                    norm += acc( r, i );
                if ( closed_form_norm( n, i, l ) != norm )
                    return fail( "norm", "n=" + std::to_string( n ) + " i=" + std::to_string( i ) );
            }
        }
        return {};
    } );

    run.check( "three-unit example", 1, [&]( std::size_t ) -> std::string {
        auto report = verify_network( figure_one_network() );
        if ( report.exact != 7 )
            return "counted " + std::to_string( report.exact ) + " regions";
        if ( !report.ok )
            return "containment failed";
        return {};
    } );

    const std::size_t net_cases = options.quick ? 5 : 50;
    run.check( "exact counts within bounds", net_cases, [&]( std::size_t k ) -> std::string {
        auto arch = random_architecture( rng, 2, 4 );
        arch.n0 = 1 + arch.n0 % 2;
        auto net = random_network( arch, options.seed * 1000 + k );
        auto report = verify_network( net );
        if ( !report.ok )
            return fail( "containment", arch.to_string() );
        return {};
    } );

    return out;
}

} // namespace relubound
