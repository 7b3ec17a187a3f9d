#pragma once

#include "relubound/gamma.hpp"
#include "relubound/histogram.hpp"
#include "relubound/signature.hpp"

#include <string>
#include <vector>

namespace relubound {

/// Input dimension n0 and hidden layer widths (n1, ..., nL).
struct Architecture
{
    std::size_t n0 = 1;
    std::vector<std::size_t> widths;

    std::size_t depth() const { return widths.size(); }

    /// Throws Error unless n0 >= 1, L >= 1 and every width >= 1.
    void validate() const;

    /// Width of layer l for l in [0, L]; layer 0 is the input.
    std::size_t width( std::size_t l ) const { return l == 0 ? n0 : widths.at( l - 1 ); }

    /// "n0=2 widths=3,2"
    std::string to_string() const;

    friend bool operator==( const Architecture &, const Architecture & ) = default;
};

/// Parses "3,4,4", "4:x3" (= 4,4,4) or mixtures such as "3,4:x2".
std::vector<std::size_t> parse_widths( const std::string &text );

/// φ_{n'}(v) = Σ_n v_n · cl_{min(n,n')}(γ_{min(n,n'),n'}).
Histogram phi( const GammaCollection &g, std::size_t n_prime, const Histogram &v );

/// φ_{nL} ∘ ... ∘ φ_{n1}(e_{n0}); its l1 norm bounds the number of attained multi-signatures.
Histogram compose_bound_histogram( const GammaCollection &g, const Architecture &arch );

/// Histogram of min(n0, |s_1|, ..., |s_l|) over a set of (prefix) multi-signatures.
Histogram dimension_histogram( const std::vector<MultiSignature> &multisigs, std::size_t n0 );

} // namespace relubound
