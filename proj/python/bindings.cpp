#include "relubound/bound_matrices.hpp"
#include "relubound/decomposition.hpp"
#include "relubound/empirical.hpp"
#include "relubound/selfcheck.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace relubound;

namespace {

// Python ints cross the boundary as decimal strings so no precision is lost.
py::int_ to_py( const BigInt &v )
{
    return py::int_( py::reinterpret_steal<py::object>( PyLong_FromString( v.get_str( 10 ).c_str(), nullptr, 10 ) ) );
}

BigInt from_py( const py::int_ &v )
{
    return BigInt( py::str( v ).cast<std::string>(), 10 );
}

py::list histogram_to_py( const Histogram &h )
{
    py::list out;
    for ( const auto &c : h.counts() )
        out.append( to_py( c ) );
    return out;
}

Histogram histogram_from_py( const std::vector<py::int_> &counts )
{
    std::vector<BigInt> c;
    c.reserve( counts.size() );
    for ( const auto &v : counts )
        c.push_back( from_py( v ) );
    return Histogram( std::move( c ) );
}

py::list matrix_to_py( const IntMatrix &m )
{
    py::list rows;
    for ( std::size_t i = 0; i < m.rows(); ++i )
    {
        py::list row;
        for ( std::size_t j = 0; j < m.cols(); ++j )
            row.append( to_py( m( i, j ) ) );
        rows.append( row );
    }
    return rows;
}

py::list rational_matrix_to_py( const RationalMatrix &m )
{
    auto fraction = py::module_::import( "fractions" ).attr( "Fraction" );
    py::list rows;
    for ( std::size_t i = 0; i < m.rows(); ++i )
    {
        py::list row;
        for ( std::size_t j = 0; j < m.cols(); ++j )
            row.append( fraction( to_decimal( m( i, j ) ) ) );
        rows.append( row );
    }
    return rows;
}

Architecture arch_of( std::size_t n0, const std::vector<std::size_t> &widths )
{
    Architecture a{ n0, widths };
    a.validate();
    return a;
}

GammaCollection gamma_of( const std::string &name )
{
    return GammaCollection::by_name( name );
}

py::object json_to_py( const nlohmann::json &doc )
{
    return py::module_::import( "json" ).attr( "loads" )( doc.dump() );
}

nlohmann::json py_to_json( const py::object &obj )
{
    return nlohmann::json::parse( py::module_::import( "json" ).attr( "dumps" )( obj ).cast<std::string>() );
}

} // namespace

PYBIND11_MODULE( _core, m )
{
    m.doc() = "Exact upper bounds on the number of linear regions of ReLU networks";

    py::register_exception<Error>( m, "Error", PyExc_ValueError );

    m.def( "binomial", []( unsigned long n, unsigned long k ) { return to_py( binomial( n, k ) ); } );

    m.def( "leq", []( const std::vector<py::int_> &v, const std::vector<py::int_> &w ) {
        return leq( histogram_from_py( v ), histogram_from_py( w ) );
    } );
    m.def( "clip", []( const std::vector<py::int_> &v, std::size_t i ) {
        return histogram_to_py( clip( histogram_from_py( v ), i ) );
    } );
    m.def( "max_of", []( const std::vector<std::vector<py::int_>> &vs ) {
        std::vector<Histogram> hs;
        for ( const auto &v : vs )
            hs.push_back( histogram_from_py( v ) );
        return histogram_to_py( max_of( hs ) );
    } );

    m.def( "gamma", []( const std::string &name, std::size_t n, std::size_t n_prime ) {
        return histogram_to_py( gamma_of( name ).value( n, n_prime ) );
    } );
    m.def( "phi", []( const std::string &name, std::size_t n_prime, const std::vector<py::int_> &v ) {
        return histogram_to_py( phi( gamma_of( name ), n_prime, histogram_from_py( v ) ) );
    } );
    m.def( "compose_bound_histogram", []( const std::string &name, std::size_t n0, const std::vector<std::size_t> &widths ) {
        return histogram_to_py( compose_bound_histogram( gamma_of( name ), arch_of( n0, widths ) ) );
    } );

    m.def( "evaluate_bound", []( const std::string &name, std::size_t n0, const std::vector<std::size_t> &widths ) {
        return to_py( evaluate_bound( gamma_of( name ), arch_of( n0, widths ) ) );
    } );
    m.def( "naive_bound", []( std::size_t n0, const std::vector<std::size_t> &widths ) {
        return to_py( naive_bound( arch_of( n0, widths ) ) );
    } );
    m.def( "montufar_bound", []( std::size_t n0, const std::vector<std::size_t> &widths ) {
        return to_py( montufar_bound( arch_of( n0, widths ) ) );
    } );
    m.def( "serra_sum", []( std::size_t n0, const std::vector<std::size_t> &widths ) {
        return to_py( serra_sum( arch_of( n0, widths ) ) );
    } );
    m.def( "montufar_lower_bound", []( std::size_t n0, const std::vector<std::size_t> &widths ) {
        return to_py( montufar_lower_bound( arch_of( n0, widths ) ) );
    } );
    m.def( "stirling_weakened", &stirling_weakened );
    m.def( "parse_widths", &parse_widths );

    m.def( "bound_matrix", []( const std::string &name, std::size_t n_prime ) {
        return matrix_to_py( build_bound_matrix( gamma_of( name ), n_prime ).entries );
    } );
    m.def( "connector", []( std::size_t n, std::size_t n_prime ) {
        return matrix_to_py( build_connector( n, n_prime ).entries );
    } );

    m.def( "decomposition", []( std::size_t size ) {
        auto d = build_decomposition( size );
        py::dict out;
        out["P"] = rational_matrix_to_py( d.P );
        out["J"] = rational_matrix_to_py( d.J );
        out["P_inv"] = rational_matrix_to_py( d.P_inv );
        return out;
    } );
    m.def( "power_B", []( std::size_t n, unsigned long l ) { return matrix_to_py( power_B( n, l ) ); } );
    m.def( "closed_form_norm", []( std::size_t n, std::size_t i, unsigned long l ) {
        return to_py( closed_form_norm( n, i, l ) );
    } );
    m.def( "asymptotic_report", []( std::size_t n, std::size_t n0 ) {
        auto r = asymptotic_report( n, n0 );
        py::dict out;
        out["n"] = r.n;
        out["n0"] = r.n0;
        out["montufar_base"] = to_py( r.montufar_base );
        out["binomial_base"] = to_py( r.binomial_base );
        out["log2_montufar"] = r.log2_montufar;
        out["log2_binomial"] = r.log2_binomial;
        out["stirling_exponent"] = r.stirling_exponent;
        return out;
    } );

    m.def( "random_network", []( std::size_t n0, const std::vector<std::size_t> &widths, std::uint64_t seed ) {
        return json_to_py( to_json( random_network( arch_of( n0, widths ), seed ) ) );
    } );
    m.def( "figure_one_network", [] { return json_to_py( to_json( figure_one_network() ) ); } );
    m.def(
        "exact_count",
        []( const py::object &network, bool override_guard ) {
            EnumerationOptions options;
            options.override_guard = override_guard;
            ReluNetwork net = network_from_json( py_to_json( network ) );
            EnumerationResult result;
            {
                py::gil_scoped_release release;
                result = exact_count( net, options );
            }
            return json_to_py( to_json( result ) );
        },
        py::arg( "network" ), py::arg( "override_guard" ) = false );
    m.def( "verify_network", []( const py::object &network ) {
        ReluNetwork net = network_from_json( py_to_json( network ) );
        VerificationReport report;
        {
            py::gil_scoped_release release;
            report = verify_network( net );
        }
        return json_to_py( to_json( report ) );
    } );
    m.def(
        "selfcheck",
        []( bool quick, std::uint64_t seed ) {
            py::list out;
            for ( const auto &o : run_selfcheck( { quick, seed } ) )
            {
                py::dict d;
                d["name"] = o.name;
                d["passed"] = o.passed;
                d["cases"] = o.cases;
                d["detail"] = o.detail;
                out.append( d );
            }
            return out;
        },
        py::arg( "quick" ) = true, py::arg( "seed" ) = 1 );
}
