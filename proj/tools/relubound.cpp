// relubound: exact region-count bounds for ReLU networks.

#include "relubound/bound_matrices.hpp"
#include "relubound/decomposition.hpp"
#include "relubound/empirical.hpp"
#include "relubound/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace relubound;
using nlohmann::json;

namespace {

enum class Format
{
    Table,
    Csv,
    Json,
};

struct Row
{
    std::string key;
    std::string value;
};

std::string fixed( double v, int digits = 6 )
{
    std::ostringstream out;
    out << std::fixed << std::setprecision( digits ) << v;
    return out.str();
}

std::string csv_cell( const std::string &s )
{
    if ( s.find_first_of( ",\"\n" ) == std::string::npos )
        return s;
    std::string out = "\"";
    for ( char c : s )
    {
        if ( c == '"' )
            out += '"';
        out += c;
    }
    return out + "\"";
}

// Renders a header + rows either as aligned columns or as CSV.
void print_grid( std::ostream &out, const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows,
                 Format format )
{
    if ( format == Format::Csv )
    {
        auto line = [&]( const std::vector<std::string> &cells ) {
            for ( std::size_t i = 0; i < cells.size(); ++i )
                out << ( i ? "," : "" ) << csv_cell( cells[i] );
            out << "\n";
        };
        line( header );
        for ( const auto &r : rows )
            line( r );
        return;
    }
    std::vector<std::size_t> width( header.size() );
    for ( std::size_t i = 0; i < header.size(); ++i )
        width[i] = header[i].size();
    for ( const auto &r : rows )
        for ( std::size_t i = 0; i < r.size() && i < width.size(); ++i )
            width[i] = std::max( width[i], r[i].size() );
    auto line = [&]( const std::vector<std::string> &cells ) {
        for ( std::size_t i = 0; i < cells.size(); ++i )
        {
            out << cells[i];
            if ( i + 1 < cells.size() )
                out << std::string( width[i] - cells[i].size() + 2, ' ' );
        }
        out << "\n";
    };
    line( header );
    for ( const auto &r : rows )
        line( r );
}

void print_rows( std::ostream &out, const std::vector<Row> &rows, Format format )
{
    if ( format == Format::Json )
    {
        json doc = json::object();
        for ( const auto &r : rows )
            doc[r.key] = r.value;
        out << doc.dump( 2 ) << "\n";
        return;
    }
    std::vector<std::vector<std::string>> cells;
    for ( const auto &r : rows )
        cells.push_back( { r.key, r.value } );
    print_grid( out, { "quantity", "value" }, cells, format );
}

json matrix_json( const RationalMatrix &m )
{
    return m.to_strings();
}

void print_matrix( std::ostream &out, const std::string &title, const std::vector<std::vector<std::string>> &cells,
                   const std::string &pretty, Format format )
{
    if ( format == Format::Csv )
    {
        out << "# " << title << "\n";
        for ( const auto &row : cells )
        {
            for ( std::size_t j = 0; j < row.size(); ++j )
                out << ( j ? "," : "" ) << row[j];
            out << "\n";
        }
        return;
    }
    out << title << "\n" << pretty;
}

Architecture make_architecture( std::size_t n0, const std::string &widths )
{
    Architecture arch{ n0, parse_widths( widths ) };
    arch.validate();
    return arch;
}

std::string yes_no( bool v )
{
    return v ? "yes" : "no";
}

int cmd_bound( std::size_t n0, const std::string &widths, const std::string &gamma_name, Format format )
{
    const auto arch = make_architecture( n0, widths );
    std::vector<Row> rows;
    rows.push_back( { "architecture", arch.to_string() } );

    if ( !gamma_name.empty() )
    {
        const auto g = GammaCollection::by_name( gamma_name );
        rows.push_back( { "gamma", g.name() } );
        rows.push_back( { "bound", to_decimal( evaluate_bound( g, arch ) ) } );
        rows.push_back( { "histogram", compose_bound_histogram( g, arch ).to_string() } );
        print_rows( std::cout, rows, format );
        return 0;
    }

    const BigInt naive = naive_bound( arch );
    const BigInt montufar = montufar_bound( arch );
    const BigInt binomial = evaluate_bound( GammaCollection::binomial(), arch );
    const BigInt serra = serra_sum( arch );
    const bool montufar_strict = width_increases_somewhere( arch );
    const bool binomial_strict = binomial_gain_condition( arch );

    rows.push_back( { "naive", to_decimal( naive ) } );
    rows.push_back( { "montufar", to_decimal( montufar ) } );
    rows.push_back( { "binomial", to_decimal( binomial ) } );
    rows.push_back( { "serra_sum", to_decimal( serra ) } );
    rows.push_back( { "lower_bound", to_decimal( montufar_lower_bound( arch ) ) } );

    const bool equal_widths = std::all_of( arch.widths.begin(), arch.widths.end(),
                                           [&]( std::size_t w ) { return w == arch.widths.front(); } );
    if ( equal_widths && arch.n0 >= arch.widths.front() )
        rows.push_back( { "stirling_approx", fixed( stirling_weakened( arch.widths.front(), arch.depth() ) ) } );

    rows.push_back( { "montufar_lt_naive", yes_no( montufar < naive ) } );
    rows.push_back( { "width_increase_condition", yes_no( montufar_strict ) } );
    rows.push_back( { "binomial_lt_montufar", yes_no( binomial < montufar ) } );
    rows.push_back( { "binomial_gain_condition", yes_no( binomial_strict ) } );
    rows.push_back( { "binomial_lt_naive", yes_no( binomial < naive ) } );

    // The strictness conditions are exact characterizations; a mismatch is an internal failure.
    bool ok = binomial <= montufar && montufar <= naive && serra == binomial
              && ( montufar < naive ) == montufar_strict && ( binomial < montufar ) == binomial_strict;
    rows.push_back( { "consistent", yes_no( ok ) } );
    print_rows( std::cout, rows, format );
    return ok ? 0 : 1;
}

int cmd_table( std::size_t n, const std::vector<std::size_t> &n0_list, std::size_t l_max, Format format )
{
    if ( n < 1 || l_max < 1 || n0_list.empty() )
        throw Error( "table needs n >= 1, L-max >= 1 and at least one n0" );
    std::vector<std::vector<std::string>> rows;
    json doc = json::array();
    for ( std::size_t n0 : n0_list )
    {
        for ( std::size_t l = 1; l <= l_max; ++l )
        {
            Architecture arch{ n0, std::vector<std::size_t>( l, n ) };
            arch.validate();
            const auto m = evaluate_bound( GammaCollection::zaslavsky(), arch );
            const auto b = evaluate_bound( GammaCollection::binomial(), arch );
            rows.push_back( { std::to_string( n ), std::to_string( n0 ), std::to_string( l ), to_decimal( m ),
                              to_decimal( b ) } );
            doc.push_back( { { "n", n }, { "n0", n0 }, { "L", l }, { "montufar", to_decimal( m ) },
                             { "binomial", to_decimal( b ) } } );
        }
    }
    if ( format == Format::Json )
        std::cout << doc.dump( 2 ) << "\n";
    else
        print_grid( std::cout, { "n", "n0", "L", "montufar", "binomial" }, rows, format );
    return 0;
}

int cmd_matrix( const std::string &gamma_name, std::size_t n, Format format )
{
    const auto g = GammaCollection::by_name( gamma_name );
    const auto B = build_bound_matrix( g, n );
    if ( format == Format::Json )
    {
        json doc{ { "gamma", g.name() }, { "n", n }, { "matrix", to_json( B.entries ) } };
        std::cout << doc.dump( 2 ) << "\n";
        return 0;
    }
    print_matrix( std::cout, "B(" + g.name() + ", " + std::to_string( n ) + ")", B.entries.to_strings(),
                  B.entries.to_string(), format );
    return 0;
}

int cmd_connector( std::size_t n, std::size_t n_prime, Format format )
{
    const auto M = build_connector( n, n_prime );
    if ( format == Format::Json )
    {
        json doc{ { "n", n }, { "n_prime", n_prime }, { "matrix", to_json( M.entries ) } };
        std::cout << doc.dump( 2 ) << "\n";
        return 0;
    }
    print_matrix( std::cout, "M(" + std::to_string( n ) + ", " + std::to_string( n_prime ) + ")",
                  M.entries.to_strings(), M.entries.to_string(), format );
    return 0;
}

int cmd_decompose( std::size_t n, Format format )
{
    if ( n < 1 )
        throw Error( "n must be >= 1" );
    const auto d = build_decomposition( n + 1 );
    const auto C = build_C( n + 1 );
    const bool identity_ok = d.P * d.P_inv == RationalMatrix::identity( n + 1 );
    const auto product = d.P * d.J * d.P_inv;
    bool product_ok = true;
    for ( std::size_t i = 0; i <= n; ++i )
        for ( std::size_t j = 0; j <= n; ++j )
            product_ok = product_ok && product( i, j ) == Rational( C( i, j ) );
    const bool b_ok = verify_B_equals_C( n );

    if ( format == Format::Json )
    {
        json doc{ { "n", n },
                  { "P", matrix_json( d.P ) },
                  { "J", matrix_json( d.J ) },
                  { "P_inv", matrix_json( d.P_inv ) },
                  { "B", to_json( C ) },
                  { "P_P_inv_is_identity", identity_ok },
                  { "P_J_P_inv_equals_B", product_ok },
                  { "B_equals_C", b_ok } };
        std::cout << doc.dump( 2 ) << "\n";
    }
    else
    {
        print_matrix( std::cout, "B", C.to_strings(), C.to_string(), format );
        print_matrix( std::cout, "P", d.P.to_strings(), d.P.to_string(), format );
        print_matrix( std::cout, "J", d.J.to_strings(), d.J.to_string(), format );
        print_matrix( std::cout, "P^-1", d.P_inv.to_strings(), d.P_inv.to_string(), format );
        print_rows( std::cout,
                    { { "P_P_inv_is_identity", yes_no( identity_ok ) },
                      { "P_J_P_inv_equals_B", yes_no( product_ok ) },
                      { "B_equals_C", yes_no( b_ok ) } },
                    format );
    }
    return identity_ok && product_ok && b_ok ? 0 : 1;
}

int cmd_asymptotic( std::size_t n, std::size_t n0, Format format )
{
    if ( n < 1 || n0 < 1 )
        throw Error( "n and n0 must be >= 1" );
    const auto r = asymptotic_report( n, n0 );
    if ( format == Format::Csv )
    {
        std::cout << asymptotic_csv_header() << "\n" << to_csv_row( r ) << "\n";
        return 0;
    }
    std::vector<Row> rows{ { "n", std::to_string( r.n ) },
                           { "n0", std::to_string( r.n0 ) },
                           { "montufar_base", to_decimal( r.montufar_base ) },
                           { "binomial_base", to_decimal( r.binomial_base ) },
                           { "log2_montufar", fixed( r.log2_montufar ) },
                           { "log2_binomial", fixed( r.log2_binomial ) },
                           { "stirling_exponent_approx", fixed( r.stirling_exponent ) } };
    print_rows( std::cout, rows, format );
    return 0;
}

struct CountArgs
{
    std::string file;
    bool random = false;
    std::size_t n0 = 2;
    std::string widths;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    std::string box_radius = "1000000";
    bool override_guard = false;
    bool float_lp = false;
    std::size_t threads = 0;
    std::string save;
};

int cmd_count( const CountArgs &args, Format format )
{
    if ( args.random == !args.file.empty() )
        throw Error( "count needs exactly one of --file or --random" );

    ReluNetwork net;
    if ( args.random )
    {
        if ( args.widths.empty() )
            throw Error( "--random needs --widths" );
        net = random_network( make_architecture( args.n0, args.widths ), args.seed );
    }
    else
        net = load_network_file( args.file );

    if ( !args.save.empty() )
    {
        std::ofstream out( args.save );
        if ( !out )
            throw Error( "cannot write '" + args.save + "'" );
        out << to_json( net ).dump( 2 ) << "\n";
    }

    EnumerationOptions options;
    options.box_radius = parse_rational( args.box_radius );
    options.override_guard = args.override_guard;
    options.backend = args.float_lp ? LpBackend::Float : LpBackend::Exact;
    options.threads = args.threads;

    const auto enumeration = exact_count( net, options );
    const auto report = verify_enumeration( net, enumeration );
    const std::size_t sampled = args.samples > 0
                                    ? sample_count( net, args.samples, options.box_radius, args.seed )
                                    : 0;
    const bool sampled_ok = sampled <= report.exact;
    const bool ok = report.ok && sampled_ok;

    if ( format == Format::Json )
    {
        json doc = to_json( report );
        doc["architecture"] = net.architecture().to_string();
        doc["lp"] = args.float_lp ? "float" : "exact";
        if ( args.samples > 0 )
            doc["sampled_count"] = sampled;
        doc["enumeration"] = to_json( enumeration );
        doc["ok"] = ok;
        std::cout << doc.dump( 2 ) << "\n";
        return ok ? 0 : 1;
    }

    std::vector<Row> rows{ { "architecture", net.architecture().to_string() },
                           { "lp", args.float_lp ? "float" : "exact" },
                           { "exact_count", std::to_string( report.exact ) } };
    if ( args.samples > 0 )
        rows.push_back( { "sampled_count", std::to_string( sampled ) } );
    rows.push_back( { "binomial", to_decimal( report.binomial ) } );
    rows.push_back( { "zaslavsky", to_decimal( report.zaslavsky ) } );
    rows.push_back( { "naive", to_decimal( report.naive ) } );
    rows.push_back( { "chain_holds", yes_no( report.chain_holds ) } );
    for ( const auto &c : report.recursion )
        rows.push_back( { "layer" + std::to_string( c.layer ) + "_" + c.gamma,
                          c.observed.to_string() + " <= " + c.bound.to_string() + " : " + yes_no( c.holds ) } );
    rows.push_back( { "ok", yes_no( ok ) } );
    print_rows( std::cout, rows, format );
    return ok ? 0 : 1;
}

int cmd_verify( bool quick, std::uint64_t seed, Format format )
{
    const auto outcomes = run_selfcheck( { quick, seed } );
    bool ok = true;
    json doc = json::array();
    std::vector<std::vector<std::string>> rows;
    for ( const auto &o : outcomes )
    {
        ok = ok && o.passed;
        doc.push_back( { { "check", o.name }, { "passed", o.passed }, { "cases", o.cases }, { "detail", o.detail } } );
        rows.push_back( { o.passed ? "PASS" : "FAIL", o.name, std::to_string( o.cases ), o.detail } );
    }
    if ( format == Format::Json )
        std::cout << json{ { "checks", doc }, { "ok", ok } }.dump( 2 ) << "\n";
    else
        print_grid( std::cout, { "status", "check", "cases", "detail" }, rows, format );
    return ok ? 0 : 1;
}

} // namespace

int main( int argc, char **argv )
{
    CLI::App app{ "Exact upper bounds on the number of linear regions of ReLU networks" };
    app.require_subcommand( 1 );

    std::string format_name = "table";
    app.add_option( "--format", format_name, "Output format" )
        ->check( CLI::IsMember( { "table", "csv", "json" } ) )
        ->capture_default_str();

    std::size_t n0 = 1, n = 1, n_prime = 1, l_max = 6;
    std::string widths, gamma_name;
    std::vector<std::size_t> n0_list{ 1, 2, 3, 4 };
    bool quick = false;
    std::uint64_t seed = 1;
    CountArgs count;

    auto *bound = app.add_subcommand( "bound", "All bounds for one architecture" );
    bound->add_option( "--n0", n0, "Input dimension" )->required();
    bound->add_option( "--widths", widths, "Widths, e.g. 3,4,4 or 4:x3" )->required();
    bound->add_option( "--gamma", gamma_name, "naive | zaslavsky | binomial | table file" );

    auto *table = app.add_subcommand( "table", "Montufar and binomial bounds for equal widths, CSV by default" );
    table->add_option( "--n", n, "Width" )->required();
    table->add_option( "--n0", n0_list, "Input dimensions" )->delimiter( ',' )->capture_default_str();
    table->add_option( "--L-max", l_max, "Largest depth" )->capture_default_str();

    auto *matrix = app.add_subcommand( "matrix", "Bound matrix of a gamma collection" );
    matrix->add_option( "--gamma", gamma_name, "naive | zaslavsky | binomial | table file" )->required();
    matrix->add_option( "--n", n, "Layer width" )->required();

    auto *connector = app.add_subcommand( "connector", "Connector matrix between widths" );
    connector->add_option( "--n", n, "Previous width" )->required();
    connector->add_option( "--n-prime", n_prime, "Next width" )->required();

    auto *decompose = app.add_subcommand( "decompose", "Jordan-like factorization of the binomial matrix" );
    decompose->add_option( "--n", n, "Layer width" )->required();

    auto *asymptotic = app.add_subcommand( "asymptotic", "Per-layer growth bases for equal widths" );
    asymptotic->add_option( "--n", n, "Width" )->required();
    asymptotic->add_option( "--n0", n0, "Input dimension" )->required();

    auto *count_cmd = app.add_subcommand( "count", "Exact region enumeration with bound checks" );
    count_cmd->add_option( "--file", count.file, "Network JSON file" );
    count_cmd->add_flag( "--random", count.random, "Use a seeded random network" );
    count_cmd->add_option( "--n0", count.n0, "Input dimension for --random" );
    count_cmd->add_option( "--widths", count.widths, "Widths for --random" );
    count_cmd->add_option( "--seed", count.seed, "Seed for --random and sampling" );
    count_cmd->add_option( "--samples", count.samples, "Monte Carlo samples (0 disables)" );
    count_cmd->add_option( "--box-radius", count.box_radius, "Half width of the search box (p/q)" );
    count_cmd->add_flag( "--override-guard", count.override_guard, "Allow instances beyond the size guard" );
    count_cmd->add_flag( "--float-lp", count.float_lp, "Double-precision LP instead of exact pivoting" );
    count_cmd->add_option( "--threads", count.threads, "Worker threads (0 = auto)" );
    count_cmd->add_option( "--save-network", count.save, "Write the network as JSON" );

    auto *verify = app.add_subcommand( "verify", "Run the invariant suite" );
    verify->add_flag( "--quick", quick, "Smaller case counts" );
    verify->add_option( "--seed", seed, "Seed" );

    for ( auto *sub : app.get_subcommands( {} ) )
        sub->add_option( "--format", format_name, "Output format" )->check( CLI::IsMember( { "table", "csv", "json" } ) );

    CLI11_PARSE( app, argc, argv );

    const Format format = format_name == "csv" ? Format::Csv : format_name == "json" ? Format::Json : Format::Table;
    try
    {
        if ( *bound )
            return cmd_bound( n0, widths, gamma_name, format );
        if ( *table )
        {
            const bool explicit_format = table->count( "--format" ) + app.count( "--format" ) > 0;
            return cmd_table( n, n0_list, l_max, explicit_format ? format : Format::Csv );
        }
        if ( *matrix )
            return cmd_matrix( gamma_name, n, format );
        if ( *connector )
            return cmd_connector( n, n_prime, format );
        if ( *decompose )
            return cmd_decompose( n, format );
        if ( *asymptotic )
            return cmd_asymptotic( n, n0, format );
        if ( *count_cmd )
            return cmd_count( count, format );
        if ( *verify )
            return cmd_verify( quick, seed, format );
    }
    catch ( const Error &e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
