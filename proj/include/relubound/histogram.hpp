#pragma once

#include "relubound/common.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace relubound {

/// A finitely supported sequence of nonnegative integers indexed from 0.
///
/// Entry j counts the "balls" in box j; in the bound framework, j is the
/// dimension of a region's image. Storage is dense up to the largest nonzero
/// index and trailing zeros are always trimmed, so structural equality is
/// histogram equality.
class Histogram
{
public:
    Histogram() = default;

    /// Throws Error if any count is negative.
    explicit Histogram( std::vector<BigInt> counts );

    /// The unit histogram e_i.
    static Histogram unit( std::size_t i );

    /// Count at index j (0 outside the stored range).
    const BigInt &operator[]( std::size_t j ) const;

    /// One past the largest nonzero index; 0 for the empty histogram.
    std::size_t support_end() const { return _counts.size(); }
    bool empty() const { return _counts.empty(); }
    const std::vector<BigInt> &counts() const { return _counts; }

    BigInt l1_norm() const;
    BigInt tail_sum( std::size_t from ) const;

    /// tails[J] = tail_sum(J) for J in [0, support_end()]; last entry is 0.
    std::vector<BigInt> tail_sums() const;

    Histogram &operator+=( const Histogram &other );
    friend Histogram operator+( Histogram a, const Histogram &b ) { return a += b; }

    friend bool operator==( const Histogram &a, const Histogram &b ) = default;

    /// "3·e0 + 1·e1 + 2·e4"; the empty histogram renders as "0".
    std::string to_string() const;

private:
    void canonicalize();

    std::vector<BigInt> _counts;
};

Histogram add( const Histogram &a, const Histogram &b );
Histogram scale( const BigInt &factor, const Histogram &a );

/// Dominance order: v ⪯ w iff every tail sum of v is at most that of w.
bool leq( const Histogram &v, const Histogram &w );

/// Smallest histogram dominating every element; throws Error("empty max") on an empty input.
Histogram max_of( std::span<const Histogram> histograms );

/// Moves all mass at indices >= i_star onto i_star.
Histogram clip( const Histogram &v, std::size_t i_star );

inline BigInt l1_norm( const Histogram &v ) { return v.l1_norm(); }
inline BigInt tail_sum( const Histogram &v, std::size_t from ) { return v.tail_sum( from ); }

/// JSON array [c0, c1, ...] with counts as decimal strings when they exceed 64 bits.
nlohmann::json to_json( const Histogram &v );
Histogram histogram_from_json( const nlohmann::json &j );

} // namespace relubound
