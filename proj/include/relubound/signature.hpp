#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace relubound {

/// Activation pattern of one layer: bit i is 1 iff unit i is strictly active.
using Signature = std::vector<bool>;

/// Per-layer signatures along a composition of layers.
using MultiSignature = std::vector<Signature>;

/// Number of active units |s|.
inline std::size_t active_count( const Signature &s )
{
    std::size_t n = 0;
    for ( bool b : s )
        n += b ? 1 : 0;
    return n;
}

inline std::string to_string( const Signature &s )
{
    std::string out;
    out.reserve( s.size() );
    for ( bool b : s )
        out.push_back( b ? '1' : '0' );
    return out;
}

/// Layers joined by '|', e.g. "101|01".
inline std::string to_string( const MultiSignature &s )
{
    std::string out;
    for ( std::size_t l = 0; l < s.size(); ++l )
    {
        if ( l > 0 )
            out.push_back( '|' );
        out += to_string( s[l] );
    }
    return out;
}

} // namespace relubound
