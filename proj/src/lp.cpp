#include "relubound/lp.hpp"

#include <cmath>
#include <optional>
#include <utility>

namespace relubound {

namespace {

template <typename T>
struct Sign;

template <>
struct Sign<Rational>
{
    static bool negative( const Rational &v ) { return sgn( v ) < 0; }
    static bool positive( const Rational &v ) { return sgn( v ) > 0; }
    static bool zero( const Rational &v ) { return sgn( v ) == 0; }
};

template <>
struct Sign<double>
{
    static constexpr double eps = 1e-9;
    static bool negative( double v ) { return v < -eps; }
    static bool positive( double v ) { return v > eps; }
    static bool zero( double v ) { return std::abs( v ) <= eps; }
};

// Dictionary simplex with an auxiliary variable for infeasible starts.
// Entering and leaving variables follow Bland's rule (smallest label), so
// degenerate pivots cannot cycle in exact arithmetic.
//
// Labels: 0..n-1 original variables, n..n+m-1 slacks, -1 the auxiliary.
template <typename T>
class Simplex
{
public:
    Simplex( const std::vector<std::vector<T>> &A, const std::vector<T> &b, const std::vector<T> &c )
        : _m( b.size() )
        , _n( c.size() )
        , _nonbasic( _n + 1 )
        , _basic( _m )
        , _d( _m + 2, std::vector<T>( _n + 2, T( 0 ) ) )
    {
        for ( std::size_t i = 0; i < _m; ++i )
        {
            if ( A[i].size() != _n )
                throw Error( "LP row has wrong length" );
            for ( std::size_t j = 0; j < _n; ++j )
                _d[i][j] = A[i][j];
            _basic[i] = static_cast<long>( _n + i );
            _d[i][_n] = -1;
            _d[i][_n + 1] = b[i];
        }
        for ( std::size_t j = 0; j < _n; ++j )
        {
            _nonbasic[j] = static_cast<long>( j );
            _d[_m][j] = -c[j];
        }
        _nonbasic[_n] = -1;
        _d[_m + 1][_n] = 1;
    }

    LpSolution<T> solve()
    {
        using Status = typename LpSolution<T>::Status;
        LpSolution<T> out;

        std::size_t r = 0;
        for ( std::size_t i = 1; i < _m; ++i )
            if ( _d[i][_n + 1] < _d[r][_n + 1] )
                r = i;
        if ( _m > 0 && Sign<T>::negative( _d[r][_n + 1] ) )
        {
            pivot( r, _n );
            if ( !run( 2 ) || Sign<T>::negative( _d[_m + 1][_n + 1] ) )
            {
                out.status = Status::Infeasible;
                return out;
            }
            for ( std::size_t i = 0; i < _m; ++i )
            {
                if ( _basic[i] != -1 )
                    continue;
                // Drive the auxiliary out of the basis through any nonzero column.
                std::optional<std::size_t> s;
                for ( std::size_t j = 0; j <= _n; ++j )
                    if ( !Sign<T>::zero( _d[i][j] ) && ( !s || _nonbasic[j] < _nonbasic[*s] ) )
                        s = j;
                if ( s )
                    pivot( i, *s );
            }
        }

        bool bounded = run( 1 );
        out.z.assign( _n, T( 0 ) );
        for ( std::size_t i = 0; i < _m; ++i )
            if ( _basic[i] >= 0 && static_cast<std::size_t>( _basic[i] ) < _n )
                out.z[_basic[i]] = _d[i][_n + 1];
        out.status = bounded ? Status::Optimal : Status::Unbounded;
        out.value = _d[_m][_n + 1];
        return out;
    }

private:
    void pivot( std::size_t r, std::size_t s )
    {
        const T inv = T( 1 ) / _d[r][s];
        for ( std::size_t i = 0; i < _m + 2; ++i )
        {
            if ( i == r || Sign<T>::zero( _d[i][s] ) )
                continue;
            const T factor = _d[i][s] * inv;
            for ( std::size_t j = 0; j < _n + 2; ++j )
                _d[i][j] -= _d[r][j] * factor;
            _d[i][s] = _d[r][s] * factor;
        }
        for ( std::size_t j = 0; j < _n + 2; ++j )
            if ( j != s )
                _d[r][j] *= inv;
        for ( std::size_t i = 0; i < _m + 2; ++i )
            if ( i != r )
                _d[i][s] *= -inv;
        _d[r][s] = inv;
        std::swap( _basic[r], _nonbasic[s] );
    }

    // phase 1 optimizes the real objective (row m), phase 2 the auxiliary one (row m+1).
    bool run( int phase )
    {
        const std::size_t x = _m + static_cast<std::size_t>( phase ) - 1;
        for ( ;; )
        {
            std::optional<std::size_t> s;
            for ( std::size_t j = 0; j <= _n; ++j )
            {
                if ( _nonbasic[j] == -phase )
                    continue;
                if ( Sign<T>::negative( _d[x][j] ) && ( !s || _nonbasic[j] < _nonbasic[*s] ) )
                    s = j;
            }
            if ( !s )
                return true;

            std::optional<std::size_t> r;
            T best_ratio{};
            for ( std::size_t i = 0; i < _m; ++i )
            {
                if ( !Sign<T>::positive( _d[i][*s] ) )
                    continue;
                T ratio = _d[i][_n + 1] / _d[i][*s];
                if ( !r || ratio < best_ratio || ( ratio == best_ratio && _basic[i] < _basic[*r] ) )
                {
                    r = i;
                    best_ratio = ratio;
                }
            }
            if ( !r )
                return false;
            pivot( *r, *s );
        }
    }

    std::size_t _m;
    std::size_t _n;
    std::vector<long> _nonbasic;
    std::vector<long> _basic;
    std::vector<std::vector<T>> _d;
};

template <typename T>
FeasibilityResult feasible_impl( const std::vector<Halfspace> &constraints,
                                 std::size_t dim,
                                 const T &radius,
                                 auto &&convert )
{
    // Variables z = (y, s) with y = x + R·1 in [0, 2R]^dim and s = 1 - t >= 0.
    // Maximize -s.
    const std::size_t vars = dim + 1;
    std::vector<std::vector<T>> A;
    std::vector<T> b;

    for ( std::size_t k = 0; k < dim; ++k )
    {
        std::vector<T> row( vars, T( 0 ) );
        row[k] = 1;
        A.push_back( std::move( row ) );
        b.push_back( radius * 2 );
    }
    for ( const auto &h : constraints )
    {
        if ( h.coeffs.size() != dim )
            throw Error( "halfspace dimension mismatch" );
        std::vector<T> a( dim );
        T coeff_sum = 0;
        for ( std::size_t k = 0; k < dim; ++k )
        {
            a[k] = convert( h.coeffs[k] );
            coeff_sum += a[k];
        }
        const T offset = convert( h.offset );
        std::vector<T> row( vars, T( 0 ) );
        if ( h.strict )
        {
            // a·x + c >= t  <=>  -a·y - s <= c - R·Σa - 1
            for ( std::size_t k = 0; k < dim; ++k )
                row[k] = -a[k];
            row[dim] = -1;
            b.push_back( offset - radius * coeff_sum - 1 );
        }
        else
        {
            // a·x + c <= 0  <=>  a·y <= R·Σa - c
            for ( std::size_t k = 0; k < dim; ++k )
                row[k] = a[k];
            b.push_back( radius * coeff_sum - offset );
        }
        A.push_back( std::move( row ) );
    }

    std::vector<T> objective( vars, T( 0 ) );
    objective[dim] = -1;

    auto solution = Simplex<T>( A, b, objective ).solve();
    FeasibilityResult result;
    using Status = typename LpSolution<T>::Status;
    if ( solution.status == Status::Infeasible )
        return result;
    if ( solution.status == Status::Unbounded )
        throw Error( "feasibility LP reported unbounded" );

    const T margin = T( 1 ) + solution.value; // t* = 1 - s*
    result.margin = Rational( margin );
    result.feasible = Sign<T>::positive( margin );
    result.witness.reserve( dim );
    for ( std::size_t k = 0; k < dim; ++k )
        result.witness.emplace_back( solution.z[k] - radius );
    return result;
}

} // namespace

LpSolution<Rational> solve_lp( const std::vector<std::vector<Rational>> &A,
                               const std::vector<Rational> &b,
                               const std::vector<Rational> &c )
{
    if ( A.size() != b.size() )
        throw Error( "LP shape mismatch" );
    return Simplex<Rational>( A, b, c ).solve();
}

LpSolution<double> solve_lp( const std::vector<std::vector<double>> &A,
                             const std::vector<double> &b,
                             const std::vector<double> &c )
{
    if ( A.size() != b.size() )
        throw Error( "LP shape mismatch" );
    return Simplex<double>( A, b, c ).solve();
}

FeasibilityResult feasible( const std::vector<Halfspace> &constraints,
                            std::size_t dim,
                            const Rational &box_radius,
                            LpBackend backend )
{
    if ( sgn( box_radius ) <= 0 )
        throw Error( "box radius must be positive" );

    if ( backend == LpBackend::Exact )
        return feasible_impl<Rational>( constraints, dim, box_radius,
                                        []( const Rational &v ) { return v; } );
    return feasible_impl<double>( constraints, dim, box_radius.get_d(),
                                  []( const Rational &v ) { return v.get_d(); } );
}

} // namespace relubound
