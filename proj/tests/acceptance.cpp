// Acceptance run: one PASS/FAIL line per criterion, exit code 1 on any failure.
// Every expected value is produced here by an oracle that does not call the code under test.

#include "relubound/bound_matrices.hpp"
#include "relubound/decomposition.hpp"
#include "relubound/empirical.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace relubound;

namespace {

// ---------------------------------------------------------------- oracles

using Vec = std::vector<BigInt>;
using Grid = std::vector<std::vector<long>>;

BigInt choose( unsigned n, unsigned k )
{
    if ( k > n )
        return 0;
    std::vector<BigInt> row{ 1 };
    for ( unsigned i = 1; i <= n; ++i )
    {
        std::vector<BigInt> next( i + 1, 1 );
        for ( unsigned j = 1; j < i; ++j )
            next[j] = row[j - 1] + row[j];
        row = std::move( next );
    }
    return row[k];
}

BigInt choose_prefix( unsigned n, unsigned k )
{
    BigInt s = 0;
    for ( unsigned j = 0; j <= std::min( n, k ); ++j )
        s += choose( n, j );
    return s;
}

BigInt power( long base, unsigned long e )
{
    BigInt r = 1;
    for ( unsigned long k = 0; k < e; ++k )
        r *= base;
    return r;
}

bool same( const IntMatrix &m, const Grid &g )
{
    if ( m.rows() != g.size() )
        return false;
    for ( std::size_t i = 0; i < g.size(); ++i )
    {
        if ( m.cols() != g[i].size() )
            return false;
        for ( std::size_t j = 0; j < g[i].size(); ++j )
            if ( m( i, j ) != g[i][j] )
                return false;
    }
    return true;
}

Grid diag( std::initializer_list<long> d )
{
    Grid g( d.size(), std::vector<long>( d.size(), 0 ) );
    std::size_t i = 0;
    for ( long v : d )
    {
        g[i][i] = v;
        ++i;
    }
    return g;
}

// Tail-sum dominance on plain vectors.
bool dominated( const Vec &v, const Vec &w )
{
    const std::size_t top = std::max( v.size(), w.size() );
    BigInt sv = 0, sw = 0;
    for ( std::size_t j = top; j-- > 0; )
    {
        sv += j < v.size() ? v[j] : BigInt( 0 );
        sw += j < w.size() ? w[j] : BigInt( 0 );
        if ( sv > sw )
            return false;
    }
    return true;
}

// Worst-case histogram per variant: 0 naive, 1 zaslavsky, 2 binomial.
Vec gamma_oracle( int kind, unsigned n, unsigned np )
{
    Vec g( np + 1, 0 );
    if ( kind == 0 )
        g[np] = power( 2, np );
    else if ( kind == 1 )
        g[np] = choose_prefix( np, n );
    else
        for ( unsigned j = 0; j <= n; ++j )
            g[np - j] += choose( np, j );
    return g;
}

Vec phi_oracle( int kind, unsigned np, const Vec &v )
{
    Vec out( np + 1, 0 );
    for ( unsigned n = 0; n < v.size(); ++n )
    {
        if ( v[n] == 0 )
            continue;
        const unsigned cap = std::min( n, np );
        Vec g = gamma_oracle( kind, cap, np );
        for ( unsigned i = 0; i <= np; ++i )
            out[std::min( i, cap )] += v[n] * g[i];
    }
    return out;
}

BigInt norm( const Vec &v )
{
    BigInt s = 0;
    for ( const auto &x : v )
        s += x;
    return s;
}

Vec to_vec( const Histogram &h )
{
    return h.counts();
}

BigInt montufar_oracle( const Architecture &a )
{
    BigInt p = 1;
    std::size_t m = a.n0;
    for ( std::size_t w : a.widths )
    {
        p *= choose_prefix( w, m );
        m = std::min( m, w );
    }
    return p;
}

BigInt naive_oracle( const Architecture &a )
{
    std::size_t total = 0;
    for ( std::size_t w : a.widths )
        total += w;
    return power( 2, total );
}

// Plain enumeration of every tuple (j_1..j_L) with j_l <= min(n0, n_1-j_1, .., n_{l-1}-j_{l-1}, n_l).
BigInt index_set_oracle( const Architecture &a )
{
    std::function<BigInt( std::size_t, std::size_t )> rec = [&]( std::size_t l, std::size_t cap ) -> BigInt {
        if ( l == a.depth() )
            return 1;
        BigInt s = 0;
        for ( std::size_t j = 0; j <= std::min( cap, a.widths[l] ); ++j )
            s += choose( a.widths[l], j ) * rec( l + 1, std::min( cap, a.widths[l] - j ) );
        return s;
    };
    return rec( 0, a.n0 );
}

bool width_increase_oracle( const Architecture &a )
{
    for ( std::size_t l = 1; l <= a.depth(); ++l )
        if ( a.width( l - 1 ) < a.width( l ) )
            return true;
    return false;
}

bool gain_oracle( const Architecture &a )
{
    for ( std::size_t l = 1; l < a.depth(); ++l )
    {
        std::size_t m1 = a.n0, m2;
        for ( std::size_t k = 1; k <= l; ++k )
            m1 = std::min( m1, a.width( k ) );
        m2 = std::min( m1, a.width( l + 1 ) );
        if ( a.width( l ) < m1 + m2 )
            return true;
    }
    return false;
}

// Two lines in the plane are parallel or three share a point.
bool degenerate_planar( const ReluLayer &layer )
{
    const std::size_t w = layer.output_dim();
    auto det2 = [&]( std::size_t i, std::size_t j ) -> Rational {
        return layer.W( i, 0 ) * layer.W( j, 1 ) - layer.W( i, 1 ) * layer.W( j, 0 );
    };
    for ( std::size_t i = 0; i < w; ++i )
    {
        if ( sgn( layer.W( i, 0 ) ) == 0 && sgn( layer.W( i, 1 ) ) == 0 )
            return true;
        for ( std::size_t j = i + 1; j < w; ++j )
        {
            if ( sgn( det2( i, j ) ) == 0 )
                return true;
            for ( std::size_t k = j + 1; k < w; ++k )
            {
                // 3x3 determinant of [W | b]
                Rational d = layer.b[i] * det2( j, k ) - layer.b[j] * det2( i, k ) + layer.b[k] * det2( i, j );
                if ( sgn( d ) == 0 )
                    return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------- harness

struct Criterion
{
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<std::string()> body; ///< empty string on success
};

Architecture random_arch( std::mt19937_64 &rng, std::size_t max_depth, std::size_t max_width, std::size_t max_n0 )
{
    Architecture a;
    a.n0 = 1 + rng() % max_n0;
    for ( std::size_t l = 0, d = 1 + rng() % max_depth; l < d; ++l )
        a.widths.push_back( 1 + rng() % max_width );
    return a;
}

Vec random_vec( std::mt19937_64 &rng )
{
    Vec v( rng() % 8 );
    for ( auto &x : v )
        x = static_cast<long>( rng() % 5 );
    return v;
}

Histogram as_histogram( const Vec &v )
{
    return Histogram( v );
}

std::string c1_matrices()
{
    auto bin = GammaCollection::binomial();
    auto zas = GammaCollection::zaslavsky();
    const std::vector<Grid> B{
        { { 1, 1 }, { 0, 1 } },
        { { 1, 0, 1 }, { 0, 3, 2 }, { 0, 0, 1 } },
        { { 1, 0, 0, 1 }, { 0, 4, 3, 3 }, { 0, 0, 4, 3 }, { 0, 0, 0, 1 } },
        { { 1, 0, 0, 0, 1 }, { 0, 5, 0, 4, 4 }, { 0, 0, 11, 6, 6 }, { 0, 0, 0, 5, 4 }, { 0, 0, 0, 0, 1 } } };
    const std::vector<Grid> D{ diag( { 1, 2 } ), diag( { 1, 3, 4 } ), diag( { 1, 4, 7, 8 } ), diag( { 1, 5, 11, 15, 16 } ) };
    for ( std::size_t n = 1; n <= 4; ++n )
    {
        if ( !same( build_bound_matrix( bin, n ).entries, B[n - 1] ) )
            return "B_" + std::to_string( n );
        if ( !same( build_bound_matrix( zas, n ).entries, D[n - 1] ) )
            return "D_" + std::to_string( n );
    }
    if ( !same( build_connector( 4, 2 ).entries, { { 1, 0, 0, 0, 0 }, { 0, 1, 0, 0, 0 }, { 0, 0, 1, 1, 1 } } ) )
        return "M_{4,2}";
    if ( !same( build_connector( 2, 4 ).entries, { { 1, 0, 0 }, { 0, 1, 0 }, { 0, 0, 1 }, { 0, 0, 0 }, { 0, 0, 0 } } ) )
        return "M_{2,4}";
    return {};
}

std::string c2_table()
{
    for ( unsigned long L = 1; L <= 6; ++L )
    {
        const BigInt p5 = power( 5, L ), p11 = power( 11, L ), mixed = p11 + BigInt( 4 * L ) * power( 5, L - 1 );
        const BigInt zas[] = { p5, p11, power( 15, L ), power( 16, L ) };
        const BigInt bin[] = { p5, p11, mixed, mixed + L };
        for ( std::size_t n0 = 1; n0 <= 4; ++n0 )
        {
            Architecture a{ n0, std::vector<std::size_t>( L, 4 ) };
            if ( evaluate_bound( GammaCollection::zaslavsky(), a ) != zas[n0 - 1] )
                return "zaslavsky n0=" + std::to_string( n0 ) + " L=" + std::to_string( L );
            if ( evaluate_bound( GammaCollection::binomial(), a ) != bin[n0 - 1] )
                return "binomial n0=" + std::to_string( n0 ) + " L=" + std::to_string( L );
        }
    }
    return {};
}

std::string c3_decomposition()
{
    for ( std::size_t size = 1; size <= 17; ++size )
    {
        auto d = build_decomposition( size );
        auto pp = d.P * d.P_inv;
        auto pjp = d.P * d.J * d.P_inv;
        auto C = build_C( size );
        for ( std::size_t i = 0; i < size; ++i )
            for ( std::size_t j = 0; j < size; ++j )
            {
                if ( pp( i, j ) != ( i == j ? 1 : 0 ) )
                    return "P P^-1 size " + std::to_string( size );
                if ( pjp( i, j ) != Rational( C( i, j ) ) )
                    return "P J P^-1 size " + std::to_string( size );
            }
    }
    // B_n against C_{n+1}: columns of B come from the gamma oracle, C from the decomposition module.
    for ( std::size_t n = 1; n <= 16; ++n )
    {
        auto C = build_C( n + 1 );
        for ( std::size_t j = 0; j <= n; ++j )
        {
            Vec unit( j + 1, 0 );
            unit[j] = 1;
            Vec col = phi_oracle( 2, n, unit );
            for ( std::size_t i = 0; i <= n; ++i )
                if ( C( i, j ) != col[i] )
                    return "B_" + std::to_string( n ) + " != C_" + std::to_string( n + 1 );
        }
    }
    for ( std::size_t n = 1; n <= 12; ++n )
    {
        // B_n from the oracle, powered by plain repeated multiplication
        std::vector<Vec> B( n + 1, Vec( n + 1, 0 ) ); // B[i][j]
        for ( std::size_t j = 0; j <= n; ++j )
        {
            Vec unit( j + 1, 0 );
            unit[j] = 1;
            Vec col = phi_oracle( 2, n, unit );
            for ( std::size_t i = 0; i <= n; ++i )
                B[i][j] = col[i];
        }
        std::vector<Vec> acc = B;
        for ( unsigned long l = 1; l <= 20; ++l )
        {
            if ( l > 1 )
            {
                std::vector<Vec> next( n + 1, Vec( n + 1, 0 ) );
                for ( std::size_t i = 0; i <= n; ++i )
                    for ( std::size_t k = 0; k <= n; ++k )
                        if ( acc[i][k] != 0 )
                            for ( std::size_t j = 0; j <= n; ++j )
                                next[i][j] += acc[i][k] * B[k][j];
                acc = std::move( next );
            }
            auto pb = power_B( n, l );
            for ( std::size_t j = 0; j <= n; ++j )
            {
                BigInt colsum = 0;
                for ( std::size_t i = 0; i <= n; ++i )
                {
                    if ( pb( i, j ) != acc[i][j] )
                        return "power_B n=" + std::to_string( n ) + " l=" + std::to_string( l );
                    colsum += acc[i][j];
                }
                if ( closed_form_norm( n, j, l ) != colsum )
                    return "closed_form_norm n=" + std::to_string( n ) + " i=" + std::to_string( j ) +
                           " l=" + std::to_string( l );
            }
        }
    }
    return {};
}

std::string c4_cross()
{
    std::mt19937_64 rng( 20240401 );
    for ( int k = 0; k < 200; ++k )
    {
        auto a = random_arch( rng, 5, 7, 7 );
        for ( int kind = 0; kind < 3; ++kind )
        {
            const GammaCollection g = kind == 0   ? GammaCollection::naive()
                                      : kind == 1 ? GammaCollection::zaslavsky()
                                                  : GammaCollection::binomial();
            Vec v( a.n0 + 1, 0 );
            v[a.n0] = 1;
            for ( std::size_t w : a.widths )
                v = phi_oracle( kind, w, v );
            const BigInt matrix_path = evaluate_bound( g, a );
            if ( compose_bound_histogram( g, a ).l1_norm() != matrix_path || norm( v ) != matrix_path )
                return g.name() + " " + a.to_string();
        }
        if ( evaluate_bound( GammaCollection::zaslavsky(), a ) != montufar_oracle( a ) )
            return "montufar " + a.to_string();
        if ( montufar_bound( a ) != montufar_oracle( a ) || naive_bound( a ) != naive_oracle( a ) )
            return "closed forms " + a.to_string();
        const BigInt b = evaluate_bound( GammaCollection::binomial(), a );
        if ( b != serra_sum( a ) || b != index_set_oracle( a ) )
            return "index set " + a.to_string();
    }
    return {};
}

std::string c5_strictness()
{
    std::size_t checked = 0;
    std::function<std::string( Architecture & )> visit = [&]( Architecture &a ) -> std::string {
        if ( !a.widths.empty() )
        {
            ++checked;
            const BigInt b = evaluate_bound( GammaCollection::binomial(), a );
            const BigInt m = evaluate_bound( GammaCollection::zaslavsky(), a );
            const BigInt n = naive_bound( a );
            const bool inc = width_increase_oracle( a ), gain = gain_oracle( a );
            if ( !( b <= m && m <= n ) )
                return "ordering " + a.to_string();
            if ( ( m < n ) != inc )
                return "montufar strictness " + a.to_string();
            if ( ( b < m ) != gain )
                return "binomial strictness " + a.to_string();
            if ( ( b < n ) != ( inc || gain ) )
                return "binomial vs naive " + a.to_string();
            if ( a.depth() >= 2 && !inc && !gain )
                return "chain implication " + a.to_string();
            if ( width_increases_somewhere( a ) != inc || binomial_gain_condition( a ) != gain )
                return "library conditions " + a.to_string();
            if ( montufar_lower_bound( a ) > b )
                return "lower bound " + a.to_string();
        }
        if ( a.depth() == 3 )
            return {};
        for ( std::size_t w = 1; w <= 4; ++w )
        {
            a.widths.push_back( w );
            auto r = visit( a );
            a.widths.pop_back();
            if ( !r.empty() )
                return r;
        }
        return {};
    };
    for ( std::size_t n0 = 1; n0 <= 4; ++n0 )
    {
        Architecture a{ n0, {} };
        auto r = visit( a );
        if ( !r.empty() )
            return r;
    }
    return checked == 4 * ( 4 + 16 + 64 ) ? std::string() : "visited " + std::to_string( checked );
}

struct GroundTruth
{
    std::vector<ReluNetwork> nets;
    std::vector<EnumerationResult> results;
};

GroundTruth &ground_truth()
{
    static GroundTruth gt;
    return gt;
}

std::string c6_ground_truth()
{
    auto &gt = ground_truth();
    std::mt19937_64 rng( 77 );
    for ( std::uint64_t k = 0; k < 50; ++k )
    {
        auto a = random_arch( rng, 2, 4, 2 );
        auto net = random_network( a, 1000 + k );
        auto result = exact_count( net );
        for ( std::size_t r = 0; r < result.count(); ++r )
            if ( signature_at( net, result.witnesses[r] ) != result.signatures[r] )
                return "witness outside its region, " + a.to_string();
        if ( BigInt( result.count() ) > index_set_oracle( a ) )
            return "count " + std::to_string( result.count() ) + " exceeds bound for " + a.to_string();
        gt.nets.push_back( net );
        gt.results.push_back( std::move( result ) );
    }

    auto fig = exact_count( load_network_file( RELUBOUND_FIXTURES "/figure1.json" ) );
    if ( fig.count() != 7 )
        return "figure network counted " + std::to_string( fig.count() );
    gt.nets.push_back( figure_one_network() );
    gt.results.push_back( fig );

    std::size_t sharp = 0, resampled = 0;
    for ( std::uint64_t seed = 5000; sharp < 20; ++seed )
    {
        auto net = random_network( { 2, { 4 } }, seed );
        if ( degenerate_planar( net.layers[0] ) )
        {
            ++resampled;
            continue;
        }
        auto result = exact_count( net );
        if ( result.count() != 11 )
            return "layer seed " + std::to_string( seed ) + " counted " + std::to_string( result.count() );
        ++sharp;
        gt.nets.push_back( net );
        gt.results.push_back( std::move( result ) );
    }
    std::cout << "  (" << gt.nets.size() << " networks enumerated, " << resampled << " degenerate layers resampled)\n";
    return {};
}

std::string c7_recursion()
{
    auto &gt = ground_truth();
    if ( gt.nets.empty() )
        return "no enumerated networks";
    for ( std::size_t k = 0; k < gt.nets.size(); ++k )
    {
        const auto arch = gt.nets[k].architecture();
        const auto &res = gt.results[k];
        for ( int kind = 0; kind < 3; ++kind )
        {
            Vec previous( arch.n0 + 1, 0 );
            previous[arch.n0] = 1;
            for ( std::size_t l = 1; l <= arch.depth(); ++l )
            {
                Vec observed( arch.n0 + 1, 0 );
                for ( const auto &prefix : res.prefixes[l - 1] )
                {
                    std::size_t d = arch.n0;
                    for ( const auto &s : prefix )
                        d = std::min<std::size_t>( d, std::count( s.begin(), s.end(), true ) );
                    observed[d] += 1;
                }
                if ( !dominated( observed, phi_oracle( kind, arch.width( l ), previous ) ) )
                    return "network " + std::to_string( k ) + " layer " + std::to_string( l ) + " gamma " +
                           std::to_string( kind );
                previous = observed;
            }
        }
        // the library's own report agrees
        if ( !verify_enumeration( gt.nets[k], res ).ok )
            return "library report for network " + std::to_string( k );
    }
    return {};
}

std::string c8_properties()
{
    std::mt19937_64 rng( 8 );
    const int N = 10000;
    for ( int k = 0; k < N; ++k )
    {
        Vec a = random_vec( rng ), b = random_vec( rng ), c = random_vec( rng );
        Histogram ha = as_histogram( a ), hb = as_histogram( b ), hc = as_histogram( c );
        if ( leq( ha, hb ) != dominated( a, b ) )
            return "order disagrees with tail sums";
        if ( !leq( ha, ha ) )
            return "reflexivity";
        if ( leq( ha, hb ) && leq( hb, ha ) && !( ha == hb ) )
            return "antisymmetry";
        if ( leq( ha, hb ) && leq( hb, hc ) && !leq( ha, hc ) )
            return "transitivity";
    }
    for ( int k = 0; k < N; ++k )
    {
        Vec a = random_vec( rng ), b = random_vec( rng );
        if ( dominated( a, b ) && as_histogram( a ).l1_norm() > as_histogram( b ).l1_norm() )
            return "norm monotonicity";
    }
    for ( int k = 0; k < N; ++k )
    {
        Vec a = random_vec( rng ), extra = random_vec( rng );
        Vec b = a;
        b.resize( std::max( a.size(), extra.size() ), 0 );
        for ( std::size_t i = 0; i < extra.size(); ++i )
            b[i] += extra[i];
        const std::size_t i = rng() % 8;
        auto ca = clip( as_histogram( a ), i ), cb = clip( as_histogram( b ), i );
        if ( !dominated( to_vec( ca ), a ) )
            return "clip below";
        if ( dominated( a, b ) && !dominated( to_vec( ca ), to_vec( cb ) ) )
            return "clip monotonicity";
    }
    for ( int k = 0; k < N; ++k )
    {
        Vec a = random_vec( rng ), b = random_vec( rng );
        const unsigned np = 1 + rng() % 7;
        if ( !dominated( a, b ) )
        {
            // push b upward until it dominates a: add a to b
            b.resize( std::max( a.size(), b.size() ), 0 );
            for ( std::size_t i = 0; i < a.size(); ++i )
                b[i] += a[i];
        }
        for ( int kind = 0; kind < 3; ++kind )
        {
            const GammaCollection g = kind == 0   ? GammaCollection::naive()
                                      : kind == 1 ? GammaCollection::zaslavsky()
                                                  : GammaCollection::binomial();
            auto pa = phi( g, np, as_histogram( a ) ), pb = phi( g, np, as_histogram( b ) );
            if ( !leq( pa, pb ) )
                return "phi monotonicity";
            if ( !( pa == as_histogram( phi_oracle( kind, np, a ) ) ) )
                return "phi disagrees with oracle";
        }
    }
    for ( int k = 0; k < N; ++k )
    {
        Vec a = random_vec( rng );
        const unsigned np = 1 + rng() % 7;
        if ( phi( GammaCollection::zaslavsky(), np, as_histogram( a ) ).l1_norm()
             != phi( GammaCollection::binomial(), np, as_histogram( a ) ).l1_norm() )
            return "zaslavsky and binomial norms differ";
    }
    return {};
}

std::string odd_base()
{
    for ( std::size_t n = 1; n <= 15; n += 2 )
        if ( asymptotic_report( n, n ).binomial_base != power( 2, n - 1 ) )
            return "n=" + std::to_string( n );
    return {};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        { "1", "printed bound and connector matrices", 1, c1_matrices },
        { "2", "equal-width table n=4, L=1..6", 1, c2_table },
        { "3", "decomposition identities, powers and closed-form norms", 30, c3_decomposition },
        { "4", "histogram path, matrix path and closed forms on 200 architectures", 30, c4_cross },
        { "5", "strictness laws, exhaustive L<=3, n0<=4, widths<=4", 60, c5_strictness },
        { "6", "exact counts: random networks, three-unit example, sharp layers", 300, c6_ground_truth },
        { "7", "dimension-histogram recursion for all gamma", 60, c7_recursion },
        { "8", "property suites, 10000 cases each", 30, c8_properties },
        { "8a", "odd-width binomial base is 2^(n-1), n<=15", 1, odd_base },
    };

    int failures = 0;
    for ( const auto &c : criteria )
    {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try
        {
            failure = c.body();
        }
        catch ( const std::exception &e )
        {
            failure = std::string( "exception: " ) + e.what();
        }
        const double seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
        if ( failure.empty() && seconds > c.limit_seconds )
            failure = "took longer than " + std::to_string( c.limit_seconds ) + " s";

        std::ostringstream line;
        line << ( failure.empty() ? "PASS" : "FAIL" ) << "  criterion " << c.id << ": " << c.title << " ["
             << std::fixed;
        line.precision( 3 );
        line << seconds << " s]";
        if ( !failure.empty() )
            line << " -- " << failure;
        std::cout << line.str() << std::endl;
        failures += failure.empty() ? 0 : 1;
    }
    std::cout << ( failures == 0 ? "all criteria passed" : std::to_string( failures ) + " criteria failed" ) << "\n";
    return failures == 0 ? 0 : 1;
}
