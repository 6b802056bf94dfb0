#ifndef FBG_FUZZY_HPP
#define FBG_FUZZY_HPP

#include "fbg/crisp.hpp"
#include "fbg/lattice.hpp"
#include "fbg/relation.hpp"
#include "fbg/term.hpp"

#include <cstddef>
#include <set>
#include <string>

namespace fbg {

/// (V, ctrl~, prnt~) : inner -> outer. prnt~ relates sites and nodes to
/// nodes and roots; ctrl~ relates nodes to controls.
struct FuzzyPlaceGraph {
    Frame frame = Frame::unit_interval();
    Signature signature;
    std::size_t inner = 0;
    std::size_t outer = 0;
    std::set<std::string> nodes;
    FuzzyRelation ctrl{frame};
    FuzzyRelation prnt{frame};

    friend bool operator==(const FuzzyPlaceGraph&, const FuzzyPlaceGraph&) = default;
};

/// (V, E, ctrl~, link~) : inner -> outer. link~ relates inner names and
/// ports to edges and outer names.
struct FuzzyLinkGraph {
    Frame frame = Frame::unit_interval();
    Signature signature;
    NameSet inner;
    NameSet outer;
    std::set<std::string> nodes;
    std::set<std::string> edges;
    FuzzyRelation ctrl{frame};
    FuzzyRelation link{frame};

    friend bool operator==(const FuzzyLinkGraph&, const FuzzyLinkGraph&) = default;
};

/// A place graph and a link graph over the same nodes and ctrl~.
struct FuzzyBigraph {
    FuzzyPlaceGraph place;
    FuzzyLinkGraph link;

    Interface inner() const { return {place.inner, link.inner}; }
    Interface outer() const { return {place.outer, link.outer}; }
    const Frame& frame() const noexcept { return place.frame; }

    friend bool operator==(const FuzzyBigraph&, const FuzzyBigraph&) = default;
};

/// Assembles a bigraph from its parts; throws InterfaceMismatch when the
/// parts disagree on frame, signature, nodes or ctrl~.
FuzzyBigraph make_bigraph(FuzzyPlaceGraph place, FuzzyLinkGraph link);

/// Ports (v, i) for every control k with ctrl~(v, k) above bottom and
/// i < ar(k): the range up to the largest such arity.
std::set<Term> ports_fuzzy(const FuzzyLinkGraph& g);
std::set<Term> ports_fuzzy(const Signature& signature, const FuzzyRelation& ctrl);

ValidationReport validate(const FuzzyPlaceGraph& g);
ValidationReport validate(const FuzzyLinkGraph& g);
ValidationReport validate(const FuzzyBigraph& b);

FuzzyPlaceGraph identity_place(std::size_t width, const Frame& frame = Frame::unit_interval());
FuzzyLinkGraph identity_link(const NameSet& names, const Frame& frame = Frame::unit_interval());
FuzzyBigraph identity_bigraph(const Interface& at, const Frame& frame = Frame::unit_interval());

/// g ∘ f for f: k -> m, g: m -> n. The degree of a pair routed through the
/// shared interface is ⋁_j prnt~_f(w, j) ∧ prnt~_g(j, w').
FuzzyPlaceGraph compose(const FuzzyPlaceGraph& g, const FuzzyPlaceGraph& f);
/// g ∘ f for f: X -> Y, g: Y -> Z, routing points of f through y ∈ Y.
FuzzyLinkGraph compose(const FuzzyLinkGraph& g, const FuzzyLinkGraph& f);
FuzzyBigraph compose(const FuzzyBigraph& g, const FuzzyBigraph& f);

/// f ⊗ g. Sites and roots of g are shifted past those of f.
FuzzyPlaceGraph tensor(const FuzzyPlaceGraph& f, const FuzzyPlaceGraph& g);
FuzzyLinkGraph tensor(const FuzzyLinkGraph& f, const FuzzyLinkGraph& g);
FuzzyBigraph tensor(const FuzzyBigraph& f, const FuzzyBigraph& g);

/// Every entry of the crisp maps becomes a top entry.
FuzzyPlaceGraph fuzzify(const crisp::PlaceGraph& g, const Frame& frame = Frame::two_point());
FuzzyLinkGraph fuzzify(const crisp::LinkGraph& g, const Frame& frame = Frame::two_point());
FuzzyBigraph fuzzify(const crisp::Bigraph& b, const Frame& frame = Frame::two_point());

/// Inverse of fuzzify; throws NotCrisp unless every ctrl~/prnt~/link~ row
/// holds exactly one entry and that entry is top.
crisp::PlaceGraph defuzzify(const FuzzyPlaceGraph& g);
crisp::LinkGraph defuzzify(const FuzzyLinkGraph& g);
crisp::Bigraph defuzzify(const FuzzyBigraph& b);

} // namespace fbg

#endif
