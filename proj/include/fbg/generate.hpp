#ifndef FBG_GENERATE_HPP
#define FBG_GENERATE_HPP

#include "fbg/bigraph_category.hpp"
#include "fbg/crisp.hpp"
#include "fbg/fuzzy.hpp"
#include "fbg/type2.hpp"

#include <random>
#include <string>

/// Seeded random instances for law checking. Node and edge identifiers are
/// prefixed so that instances generated with different prefixes have
/// disjoint supports.
namespace fbg::gen {

using Rng = std::mt19937_64;

/// {K: 1, L: 2, M: 0}.
Signature default_signature();

struct Options {
    Frame frame = Frame::unit_interval();
    Signature signature = default_signature();
    std::size_t max_nodes = 6;
    std::size_t max_edges = 4;
    std::size_t max_width = 3;
    std::size_t max_names = 3;
    /// Chance that a generated degree is top.
    double top_bias = 0.25;
};

/// Any element of the frame, bottom included. Unit-interval values have
/// denominators up to 12.
FrameValue random_value(Rng& rng, const Frame& frame);
/// An element strictly above bottom.
FrameValue random_degree(Rng& rng, const Frame& frame, double top_bias = 0.25);
/// An element in [lo, hi], never bottom; lo ≤ hi required.
FrameValue random_between(Rng& rng, const FrameValue& lo, const FrameValue& hi);

/// Width in [1, max_width]; names drawn from x0 .. x(max_names-1).
Interface random_interface(Rng& rng, const Options& options);

/// Acyclic by construction: every node's parents have a larger index.
/// Every site, node and point has one or two entries, each above bottom.
FuzzyBigraph random_fuzzy_bigraph(Rng& rng, const Interface& inner, const Interface& outer,
                                  const std::string& prefix, const Options& options);
FuzzyPlaceGraph random_fuzzy_place(Rng& rng, std::size_t inner, std::size_t outer, const std::string& prefix,
                                   const Options& options);

struct FuzzyTriple {
    FuzzyBigraph a, b, c; ///< a: I -> J, b: J -> K, c: K -> M
};
FuzzyTriple random_fuzzy_triple(Rng& rng, const Options& options);

enum class Type2Mode {
    /// Memberships and degrees bounded below by β/δ and above by the
    /// memberships of what they connect; composition never drops entries.
    Coherent,
    /// Unconstrained positive degrees and plausibilities.
    General,
};

type2::Bigraph random_type2_bigraph(Rng& rng, const Interface& inner, const Interface& outer,
                                    const std::string& prefix, const Options& options,
                                    Type2Mode mode = Type2Mode::Coherent);

/// `count` coherent type-2 arrows between `objects` random interfaces,
/// named f0, f1, ... with disjoint supports.
std::vector<NamedType2> random_type2_arrows(Rng& rng, std::size_t count, std::size_t objects,
                                            const Options& options);

/// One control per node, one parent per site/node, one link per point.
crisp::Bigraph random_crisp_bigraph(Rng& rng, const Interface& inner, const Interface& outer,
                                    const std::string& prefix, const Options& options);

} // namespace fbg::gen

#endif
