#pragma once

#include "relubound/gamma.hpp"
#include "relubound/lp.hpp"
#include "relubound/matrix.hpp"
#include "relubound/signature.hpp"
#include "relubound/transition.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace relubound {

/// x ↦ max(0, W x + b) with exact rational weights; W is n' x n.
struct ReluLayer
{
    RationalMatrix W;
    std::vector<Rational> b;

    std::size_t input_dim() const { return W.cols(); }
    std::size_t output_dim() const { return W.rows(); }
};

struct ReluNetwork
{
    std::size_t n0 = 1;
    std::vector<ReluLayer> layers;

    /// Throws Error on inconsistent layer shapes.
    void validate() const;
    Architecture architecture() const;
};

/// Per-layer activation pattern at x (unit active iff pre-activation > 0), exact forward pass.
MultiSignature signature_at( const ReluNetwork &net, const std::vector<Rational> &x );

/// Distinct multi-signatures among `samples` points drawn uniformly from [-R, R]^n0.
/// Deterministic per seed; always a lower bound on the attained set.
std::size_t sample_count( const ReluNetwork &net, std::size_t samples, const Rational &box_radius, std::uint64_t seed );

/// One attained prefix (s_1, ..., s_l) together with the affine map A x + c that
/// the first l layers realize on its region and the halfspaces cutting it out.
struct RegionRecord
{
    MultiSignature prefix;
    RationalMatrix A;
    std::vector<Rational> c;
    std::vector<Halfspace> constraints;
    std::vector<Rational> witness;
};

struct EnumerationOptions
{
    Rational box_radius = 1000000;
    bool override_guard = false;
    LpBackend backend = LpBackend::Exact;
    /// 0 = hardware concurrency capped by RELUBOUND_THREADS.
    std::size_t threads = 0;
};

struct EnumerationResult
{
    /// Sorted attained multi-signatures (full depth).
    std::vector<MultiSignature> signatures;
    /// witnesses[k] lies in the region of signatures[k].
    std::vector<std::vector<Rational>> witnesses;
    /// prefixes[l-1] = sorted attained prefixes of length l, l = 1..L.
    std::vector<std::vector<MultiSignature>> prefixes;

    std::size_t count() const { return signatures.size(); }
};

/// Exact breadth-first enumeration of attained multi-signatures inside the box.
/// Throws Error("instance too large") beyond n0 <= 3, widths <= 5, L <= 3 unless overridden.
EnumerationResult exact_count( const ReluNetwork &net, const EnumerationOptions &options = {} );

struct RecursionCheck
{
    std::string gamma;
    std::size_t layer = 0; ///< 1-based
    Histogram observed;    ///< dimension histogram of attained prefixes of this length
    Histogram bound;       ///< φ_{n_l} of the previous observed histogram (e_{n0} for l = 1)
    bool holds = false;
};

struct VerificationReport
{
    std::size_t exact = 0;
    BigInt binomial;
    BigInt zaslavsky;
    BigInt naive;
    bool chain_holds = false;
    std::vector<RecursionCheck> recursion;
    bool ok = false;
};

/// exact <= binomial <= zaslavsky <= naive plus per-layer dimension-histogram containment for all three γ.
VerificationReport verify_network( const ReluNetwork &net, const EnumerationOptions &options = {} );
VerificationReport verify_enumeration( const ReluNetwork &net, const EnumerationResult &enumeration );

/// Numerators uniform in [-scale, scale] over the fixed denominator scale.
ReluNetwork random_network( const Architecture &arch, std::uint64_t seed, long scale = 100 );

/// Hyperplane arrangement of the layer is in general position: every k <= n normals are
/// independent and no n+1 hyperplanes share a point.
bool in_general_position( const ReluLayer &layer );

/// Rank over the rationals.
std::size_t rank( RationalMatrix m );

/// The three-unit R^2 -> R^3 layer with lines x1+x2=1, x2-x1=1, x2=0 (1/√2 replaced by 29/41).
ReluNetwork figure_one_network();

/// {"n0": int, "layers": [{"W": [["p/q", ...], ...], "b": ["p/q", ...]}, ...]}
nlohmann::json to_json( const ReluNetwork &net );
ReluNetwork network_from_json( const nlohmann::json &doc );
ReluNetwork load_network_file( const std::string &path );

nlohmann::json to_json( const EnumerationResult &result );
nlohmann::json to_json( const VerificationReport &report );

} // namespace relubound
