#pragma once

#include "relubound/histogram.hpp"
#include "relubound/signature.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace relubound {

enum class GammaKind
{
    Naive,
    Zaslavsky,
    Binomial,
    Table,
};

/// A γ-collection: for every input dimension n and output width n' (0 <= n <= n')
/// a histogram bounding the activation histogram of any ReLU layer R^n -> R^n'.
///
/// The three built-in variants are closed forms. A table-driven variant can be
/// loaded from JSON; it is checked for monotonicity in n at load time.
class GammaCollection
{
public:
    static GammaCollection naive();
    static GammaCollection zaslavsky();
    static GammaCollection binomial();

    /// Table variant. Every n' present must list all n in [0, n'].
    /// Throws Error if the table is incomplete or not monotone in n.
    static GammaCollection from_table( std::map<std::pair<std::size_t, std::size_t>, Histogram> table );

    /// {"entries": [{"n": int, "n_prime": int, "histogram": [ints]}, ...]}
    static GammaCollection from_json( const nlohmann::json &doc );
    static GammaCollection load_file( const std::string &path );

    /// "naive", "zaslavsky", "binomial" (case-insensitive), or a path to a table file.
    static GammaCollection by_name( const std::string &name );

    GammaKind kind() const { return _kind; }
    std::string name() const;

    /// γ_{n,n'}; throws Error("dimension out of range") unless 0 <= n <= n' and n' >= 1.
    Histogram value( std::size_t n, std::size_t n_prime ) const;

    /// Largest n' the table covers; unbounded (SIZE_MAX) for closed-form variants.
    std::size_t max_n_prime() const;

private:
    explicit GammaCollection( GammaKind kind )
        : _kind( kind )
    {
    }

    GammaKind _kind;
    std::shared_ptr<const std::map<std::pair<std::size_t, std::size_t>, Histogram>> _table;
};

inline Histogram gamma_value( const GammaCollection &g, std::size_t n, std::size_t n_prime )
{
    return g.value( n, n_prime );
}

/// True iff γ_{n,n'} ⪯ γ_{n+1,n'} for all n' <= n_prime_max (capped at the table range) and n < n'.
bool check_monotonicity( const GammaCollection &g, std::size_t n_prime_max );

/// Histogram of |s| over the given signatures, each of length n_prime.
Histogram activation_histogram( const std::vector<Signature> &signatures, std::size_t n_prime );

/// Necessary condition of the bound condition for one concrete layer R^n -> R^n':
/// activation_histogram(signatures) ⪯ γ_{min(n,n'),n'}.
bool check_against_layer( const GammaCollection &g,
                          std::size_t input_dim,
                          std::size_t n_prime,
                          const std::vector<Signature> &signatures );

} // namespace relubound
