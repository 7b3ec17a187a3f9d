#include "relubound/empirical.hpp"

#include "relubound/bound_matrices.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace relubound {

namespace {

constexpr std::size_t kGuardInputDim = 3;
constexpr std::size_t kGuardWidth = 5;
constexpr std::size_t kGuardDepth = 3;

std::size_t resolve_threads( std::size_t requested )
{
    std::size_t threads = requested;
    if ( threads == 0 )
    {
        threads = std::max( 1u, std::thread::hardware_concurrency() );
        if ( const char *cap = std::getenv( "RELUBOUND_THREADS" ) )
        {
            long value = std::strtol( cap, nullptr, 10 );
            if ( value >= 1 )
                threads = std::min( threads, static_cast<std::size_t>( value ) );
        }
    }
    return threads;
}

// Runs fn(k) for k in [0, count) on up to `threads` workers; results are slot-indexed
// so the merged output does not depend on scheduling.
template <typename Fn>
void parallel_for( std::size_t count, std::size_t threads, Fn &&fn )
{
    threads = std::min( threads, count );
    if ( threads <= 1 )
    {
        for ( std::size_t k = 0; k < count; ++k )
            fn( k );
        return;
    }

    std::atomic<std::size_t> next{ 0 };
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    for ( std::size_t t = 0; t < threads; ++t )
        workers.emplace_back( [&] {
            for ( std::size_t k = next++; k < count; k = next++ )
            {
                try
                {
                    fn( k );
                }
                catch ( ... )
                {
                    std::lock_guard lock( failure_mutex );
                    if ( !failure )
                        failure = std::current_exception();
                }
            }
        } );
    workers.clear();
    if ( failure )
        std::rethrow_exception( failure );
}

Rational evaluate( const Halfspace &h, const std::vector<Rational> &x )
{
    Rational value = h.offset;
    for ( std::size_t k = 0; k < x.size(); ++k )
        value += h.coeffs[k] * x[k];
    return value;
}

bool satisfies( const Halfspace &h, const std::vector<Rational> &x )
{
    const int s = sgn( evaluate( h, x ) );
    return h.strict ? s > 0 : s <= 0;
}

class RegionSplitter
{
public:
    RegionSplitter( const ReluLayer &layer, const EnumerationOptions &options, std::size_t n0 )
        : _layer( layer )
        , _options( options )
        , _n0( n0 )
    {
    }

    std::vector<RegionRecord> split( const RegionRecord &region ) const
    {
        const std::size_t width = _layer.output_dim();
        const std::size_t inner = _layer.input_dim();

        // Pull each unit's pre-activation back to input space: (w_i A) x + (w_i c + b_i).
        std::vector<Halfspace> functionals( width );
        for ( std::size_t i = 0; i < width; ++i )
        {
            auto &f = functionals[i];
            f.coeffs.assign( _n0, Rational( 0 ) );
            f.offset = _layer.b[i];
            for ( std::size_t k = 0; k < inner; ++k )
            {
                const Rational &w = _layer.W( i, k );
                if ( sgn( w ) == 0 )
                    continue;
                for ( std::size_t x = 0; x < _n0; ++x )
                    f.coeffs[x] += w * region.A( k, x );
                f.offset += w * region.c[k];
            }
        }

        std::vector<RegionRecord> out;
        Signature bits;
        std::vector<Halfspace> constraints = region.constraints;
        descend( region, functionals, bits, constraints, region.witness, out );
        return out;
    }

private:
    void descend( const RegionRecord &region,
                  const std::vector<Halfspace> &functionals,
                  Signature &bits,
                  std::vector<Halfspace> &constraints,
                  const std::vector<Rational> &witness,
                  std::vector<RegionRecord> &out ) const
    {
        const std::size_t i = bits.size();
        if ( i == functionals.size() )
        {
            out.push_back( make_child( region, bits, constraints, witness ) );
            return;
        }

        for ( bool active : { true, false } )
        {
            Halfspace h = functionals[i];
            h.strict = active;
            constraints.push_back( h );
            bits.push_back( active );

            // The current witness already settles one of the two branches.
            if ( satisfies( h, witness ) )
                descend( region, functionals, bits, constraints, witness, out );
            else
            {
                auto result = feasible( constraints, _n0, _options.box_radius, _options.backend );
                if ( result.feasible )
                    descend( region, functionals, bits, constraints, result.witness, out );
            }

            bits.pop_back();
            constraints.pop_back();
        }
    }

    RegionRecord make_child( const RegionRecord &region,
                             const Signature &bits,
                             const std::vector<Halfspace> &constraints,
                             const std::vector<Rational> &witness ) const
    {
        const std::size_t width = _layer.output_dim();
        const std::size_t inner = _layer.input_dim();

        RegionRecord child;
        child.prefix = region.prefix;
        child.prefix.push_back( bits );
        child.constraints = constraints;
        child.witness = witness;
        child.A = RationalMatrix( width, _n0 );
        child.c.assign( width, Rational( 0 ) );
        for ( std::size_t i = 0; i < width; ++i )
        {
            if ( !bits[i] )
                continue; // diag(s) zeroes inactive rows
            child.c[i] = _layer.b[i];
            for ( std::size_t k = 0; k < inner; ++k )
            {
                const Rational &w = _layer.W( i, k );
                if ( sgn( w ) == 0 )
                    continue;
                for ( std::size_t x = 0; x < _n0; ++x )
                    child.A( i, x ) += w * region.A( k, x );
                child.c[i] += w * region.c[k];
            }
        }
        return child;
    }

    const ReluLayer &_layer;
    const EnumerationOptions &_options;
    std::size_t _n0;
};

} // namespace

void ReluNetwork::validate() const
{
    if ( n0 < 1 )
        throw Error( "network input dimension must be >= 1" );
    if ( layers.empty() )
        throw Error( "network needs at least one layer" );
    std::size_t previous = n0;
    for ( std::size_t l = 0; l < layers.size(); ++l )
    {
        const auto &layer = layers[l];
        if ( layer.W.cols() != previous )
            throw Error( "layer " + std::to_string( l + 1 ) + " expects input dimension " +
                         std::to_string( layer.W.cols() ) + ", got " + std::to_string( previous ) );
        if ( layer.W.rows() < 1 || layer.b.size() != layer.W.rows() )
            throw Error( "layer " + std::to_string( l + 1 ) + " has inconsistent W/b shapes" );
        previous = layer.W.rows();
    }
}

Architecture ReluNetwork::architecture() const
{
    Architecture arch;
    arch.n0 = n0;
    for ( const auto &layer : layers )
        arch.widths.push_back( layer.output_dim() );
    return arch;
}

MultiSignature signature_at( const ReluNetwork &net, const std::vector<Rational> &x )
{
    net.validate();
    if ( x.size() != net.n0 )
        throw Error( "input has dimension " + std::to_string( x.size() ) + ", network expects " +
                     std::to_string( net.n0 ) );

    MultiSignature result;
    std::vector<Rational> activation = x;
    for ( const auto &layer : net.layers )
    {
        Signature s( layer.output_dim() );
        std::vector<Rational> next( layer.output_dim() );
        for ( std::size_t i = 0; i < layer.output_dim(); ++i )
        {
            Rational pre = layer.b[i];
            for ( std::size_t k = 0; k < layer.input_dim(); ++k )
                pre += layer.W( i, k ) * activation[k];
            s[i] = sgn( pre ) > 0;
            next[i] = s[i] ? pre : Rational( 0 );
        }
        result.push_back( std::move( s ) );
        activation = std::move( next );
    }
    return result;
}

std::size_t sample_count( const ReluNetwork &net, std::size_t samples, const Rational &box_radius, std::uint64_t seed )
{
    net.validate();
    if ( samples < 1 )
        throw Error( "sample count must be >= 1" );
    if ( sgn( box_radius ) <= 0 )
        throw Error( "box radius must be positive" );

    std::mt19937_64 rng( seed );
    const double radius = box_radius.get_d();
    std::uniform_real_distribution<double> coordinate( -radius, radius );

    std::set<MultiSignature> seen;
    std::vector<Rational> x( net.n0 );
    for ( std::size_t k = 0; k < samples; ++k )
    {
        for ( auto &xi : x )
            xi = coordinate( rng );
        seen.insert( signature_at( net, x ) );
    }
    return seen.size();
}

EnumerationResult exact_count( const ReluNetwork &net, const EnumerationOptions &options )
{
    net.validate();
    if ( sgn( options.box_radius ) <= 0 )
        throw Error( "box radius must be positive" );
    if ( !options.override_guard )
    {
        bool too_large = net.n0 > kGuardInputDim || net.layers.size() > kGuardDepth;
        for ( const auto &layer : net.layers )
            too_large = too_large || layer.output_dim() > kGuardWidth;
        if ( too_large )
            throw Error( "instance too large" );
    }

    const std::size_t threads = resolve_threads( options.threads );

    RegionRecord root;
    root.A = RationalMatrix::identity( net.n0 );
    root.c.assign( net.n0, Rational( 0 ) );
    root.witness.assign( net.n0, Rational( 0 ) );

    EnumerationResult result;
    std::vector<RegionRecord> regions{ std::move( root ) };
    for ( const auto &layer : net.layers )
    {
        RegionSplitter splitter( layer, options, net.n0 );
        std::vector<std::vector<RegionRecord>> children( regions.size() );
        parallel_for( regions.size(), threads, [&]( std::size_t k ) { children[k] = splitter.split( regions[k] ); } );

        std::vector<RegionRecord> next;
        for ( auto &group : children )
            for ( auto &child : group )
                next.push_back( std::move( child ) );
        std::sort( next.begin(), next.end(),
                   []( const RegionRecord &a, const RegionRecord &b ) { return a.prefix < b.prefix; } );
        regions = std::move( next );

        std::vector<MultiSignature> prefixes;
        prefixes.reserve( regions.size() );
        for ( const auto &r : regions )
            prefixes.push_back( r.prefix );
        result.prefixes.push_back( std::move( prefixes ) );
    }

    for ( auto &r : regions )
    {
        result.signatures.push_back( r.prefix );
        result.witnesses.push_back( std::move( r.witness ) );
    }
    return result;
}

VerificationReport verify_enumeration( const ReluNetwork &net, const EnumerationResult &enumeration )
{
    const Architecture arch = net.architecture();
    VerificationReport report;
    report.exact = enumeration.count();
    report.binomial = evaluate_bound( GammaCollection::binomial(), arch );
    report.zaslavsky = evaluate_bound( GammaCollection::zaslavsky(), arch );
    report.naive = naive_bound( arch );
    report.chain_holds = BigInt( report.exact ) <= report.binomial && report.binomial <= report.zaslavsky &&
                         report.zaslavsky <= report.naive;

    bool recursion_ok = true;
    for ( const auto &g : { GammaCollection::naive(), GammaCollection::zaslavsky(), GammaCollection::binomial() } )
    {
        Histogram previous = Histogram::unit( arch.n0 );
        for ( std::size_t l = 1; l <= arch.depth(); ++l )
        {
            RecursionCheck check;
            check.gamma = g.name();
            check.layer = l;
            check.observed = dimension_histogram( enumeration.prefixes.at( l - 1 ), arch.n0 );
            check.bound = phi( g, arch.width( l ), previous );
            check.holds = leq( check.observed, check.bound );
            recursion_ok = recursion_ok && check.holds;
            previous = check.observed;
            report.recursion.push_back( std::move( check ) );
        }
    }
    report.ok = report.chain_holds && recursion_ok;
    return report;
}

VerificationReport verify_network( const ReluNetwork &net, const EnumerationOptions &options )
{
    return verify_enumeration( net, exact_count( net, options ) );
}

ReluNetwork random_network( const Architecture &arch, std::uint64_t seed, long scale )
{
    arch.validate();
    if ( scale < 1 )
        throw Error( "scale must be >= 1" );

    std::mt19937_64 rng( seed );
    std::uniform_int_distribution<long> numerator( -scale, scale );
    auto draw = [&] {
        Rational r( numerator( rng ), scale );
        r.canonicalize();
        return r;
    };

    ReluNetwork net;
    net.n0 = arch.n0;
    std::size_t previous = arch.n0;
    for ( std::size_t width : arch.widths )
    {
        ReluLayer layer;
        layer.W = RationalMatrix( width, previous );
        for ( std::size_t i = 0; i < width; ++i )
            for ( std::size_t k = 0; k < previous; ++k )
                layer.W( i, k ) = draw();
        for ( std::size_t i = 0; i < width; ++i )
            layer.b.push_back( draw() );
        net.layers.push_back( std::move( layer ) );
        previous = width;
    }
    return net;
}

std::size_t rank( RationalMatrix m )
{
    std::size_t r = 0;
    for ( std::size_t col = 0; col < m.cols() && r < m.rows(); ++col )
    {
        std::size_t pivot = r;
        while ( pivot < m.rows() && sgn( m( pivot, col ) ) == 0 )
            ++pivot;
        if ( pivot == m.rows() )
            continue;
        for ( std::size_t j = 0; j < m.cols(); ++j )
            std::swap( m( r, j ), m( pivot, j ) );
        for ( std::size_t i = r + 1; i < m.rows(); ++i )
        {
            if ( sgn( m( i, col ) ) == 0 )
                continue;
            const Rational factor = m( i, col ) / m( r, col );
            for ( std::size_t j = col; j < m.cols(); ++j )
                m( i, j ) -= factor * m( r, j );
        }
        ++r;
    }
    return r;
}

bool in_general_position( const ReluLayer &layer )
{
    const std::size_t n = layer.input_dim();
    const std::size_t width = layer.output_dim();
    if ( width >= 8 * sizeof( unsigned long ) )
        throw Error( "layer too wide for the general-position check" );

    for ( unsigned long mask = 1; mask < ( 1ul << width ); ++mask )
    {
        std::vector<std::size_t> rows;
        for ( std::size_t i = 0; i < width; ++i )
            if ( mask & ( 1ul << i ) )
                rows.push_back( i );
        const std::size_t k = rows.size();
        if ( k > n + 1 )
            continue;

        const bool augmented = k == n + 1;
        RationalMatrix sub( k, augmented ? n + 1 : n );
        for ( std::size_t r = 0; r < k; ++r )
        {
            for ( std::size_t j = 0; j < n; ++j )
                sub( r, j ) = layer.W( rows[r], j );
            if ( augmented )
                sub( r, n ) = layer.b[rows[r]];
        }
        if ( rank( sub ) != k )
            return false;
    }
    return true;
}

ReluNetwork figure_one_network()
{
    const Rational a( 29, 41 );
    ReluLayer layer;
    layer.W = RationalMatrix( 3, 2 );
    layer.W( 0, 0 ) = a;
    layer.W( 0, 1 ) = a;
    layer.W( 1, 0 ) = -a;
    layer.W( 1, 1 ) = a;
    layer.W( 2, 0 ) = 0;
    layer.W( 2, 1 ) = -1;
    layer.b = { -a, -a, Rational( 0 ) };

    ReluNetwork net;
    net.n0 = 2;
    net.layers.push_back( std::move( layer ) );
    return net;
}

} // namespace relubound
