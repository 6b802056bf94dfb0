#ifndef FBG_TYPE2_HPP
#define FBG_TYPE2_HPP

#include "fbg/fuzzy.hpp"
#include "fbg/relation.hpp"
#include "fbg/support.hpp"

#include <set>

/// Type-2 fuzzy bigraphs: node and edge sets are fuzzy sets, and each part
/// carries the degree to which its interfaces are functional.
namespace fbg::type2 {

/// (Ṽ, ctrl~, prnt~) : inner -β-> outer.
struct PlaceGraph {
    Frame frame = Frame::unit_interval();
    Signature signature;
    std::size_t inner = 0;
    std::size_t outer = 0;
    FuzzySet nodes{frame};
    FuzzyRelation ctrl{frame};
    FuzzyRelation prnt{frame};
    FrameValue beta = frame.top();

    friend bool operator==(const PlaceGraph&, const PlaceGraph&) = default;
};

/// (Ṽ, Ẽ, ctrl~, link~) : inner -δ-> outer.
struct LinkGraph {
    Frame frame = Frame::unit_interval();
    Signature signature;
    NameSet inner;
    NameSet outer;
    FuzzySet nodes{frame};
    FuzzySet edges{frame};
    FuzzyRelation ctrl{frame};
    FuzzyRelation link{frame};
    FrameValue delta = frame.top();

    friend bool operator==(const LinkGraph&, const LinkGraph&) = default;
};

/// <k,X> -γ-> <m,Y> with γ = β ∧ δ, fixed at construction.
class Bigraph {
public:
    /// Throws InterfaceMismatch unless both parts share frame, signature,
    /// node memberships and ctrl~.
    Bigraph(PlaceGraph place, LinkGraph link);

    const PlaceGraph& place() const noexcept { return place_; }
    const LinkGraph& link() const noexcept { return link_; }
    const FrameValue& gamma() const noexcept { return gamma_; }
    const Frame& frame() const noexcept { return place_.frame; }

    Interface inner() const { return {place_.inner, link_.inner}; }
    Interface outer() const { return {place_.outer, link_.outer}; }

    friend bool operator==(const Bigraph&, const Bigraph&) = default;

private:
    PlaceGraph place_;
    LinkGraph link_;
    FrameValue gamma_;
};

/// For each node with positive membership, the control attaining
/// ⋁_k ctrl~(v, k) (lexicographically least on ties) determines the ports
/// (v, 0) .. (v, ar(k)-1).
std::set<Term> ports(const LinkGraph& g);
std::set<Term> ports(const Signature& signature, const FuzzyRelation& ctrl, const FuzzySet& nodes);

ValidationReport validate(const PlaceGraph& g);
ValidationReport validate(const LinkGraph& g);
ValidationReport validate(const Bigraph& b);

/// Identities carry plausibility top.
PlaceGraph identity_place(std::size_t width, const Frame& frame = Frame::unit_interval());
LinkGraph identity_link(const NameSet& names, const Frame& frame = Frame::unit_interval());
Bigraph identity(const Interface& at, const Frame& frame = Frame::unit_interval());

/// g ∘ f with κ = μ ∧ ν. Entries copied from f, and entries routed through
/// the shared interface, survive only at degree ≥ κ and from sources of
/// membership ≥ κ; entries of g survive when their source node has
/// membership ≥ κ (place) or unconditionally (ports of g, link).
PlaceGraph compose(const PlaceGraph& g, const PlaceGraph& f);
LinkGraph compose(const LinkGraph& g, const LinkGraph& f);
Bigraph compose(const Bigraph& g, const Bigraph& f);

/// A fuzzy bigraph with every node and edge at membership top and
/// β = δ = plausibility.
Bigraph embed(const FuzzyBigraph& f, const FrameValue& plausibility);
Bigraph embed(const FuzzyBigraph& f);
/// Meet of every prnt~ and link~ degree of f (top when there are none): the
/// largest plausibility at which embedding makes no composition threshold bite.
FrameValue coherent_plausibility(const FuzzyBigraph& f);

/// Every membership and every prnt~/link~ degree is at least β (place) or
/// δ (link). Composition of coherent bigraphs never drops an entry, so it is
/// associative and has the identities as units.
bool is_coherent(const Bigraph& b);

/// prnt~(w, u) ≤ Ṽ(w) ∧ Ṽ(u) and link~(q, l) ≤ Ṽ(node of q) ∧ Ẽ(l), with
/// sites, roots and names at membership top.
bool is_membership_bounded(const Bigraph& b);

enum class SupportConvention {
    /// Off-sort membership is bottom: the support is the disjoint union Ṽ ⊎ Ẽ.
    OffSortBottom,
    /// Ẽ(v) = top for nodes, as printed; every node gets membership top.
    OffSortTopForNodes,
};

FuzzySet support(const PlaceGraph& g);
FuzzySet support(const Bigraph& b, SupportConvention convention = SupportConvention::OffSortBottom);

struct TranslationOptions {
    /// Check the second inequality in its printed form
    /// link~_G ∘ (Id_X ⊎ ρ~_V) ≤ (Id_n ⊎ ρ~_V) ∘ prnt~_F instead of
    /// link~_G ∘ (Id_X ⊎ ρ~_P) ≤ (Id_Y ⊎ ρ~_E) ∘ link~_F.
    bool literal_link_inequality = false;
};

/// Checks ρ~ = (ρ~_V, ρ~_E) : |F| -> |G|. Properties reported:
/// "node-membership", "edge-membership" (each positive entry equals the
/// target's membership in G), "controls" (ctrl~_G ∘ ρ~_V ≤ ctrl~_F),
/// "ports" (ρ~_V(v,v') ≤ ρ~_P((v,i),(v',i)) for every port),
/// "parents", "links" (the two ≤ inequalities) and "equivalence" (F ≍ G:
/// G is exactly the structure determined by F and ρ~).
/// Throws InterfaceMismatch on differing interfaces and MalformedTranslation
/// on entries outside the supports.
TranslationReport check_support_translation(const FuzzyRelation& rho_v, const FuzzyRelation& rho_e,
                                            const Bigraph& f, const Bigraph& g,
                                            const TranslationOptions& options = {});

/// F ≍ G under ρ~.
bool support_equivalent(const FuzzyRelation& rho_v, const FuzzyRelation& rho_e, const Bigraph& f,
                        const Bigraph& g);

/// The relations of a renaming onto `target`: ρ~_V(v, ρ_V(v)) = Ṽ_target(ρ_V(v)),
/// and likewise for edges.
std::pair<FuzzyRelation, FuzzyRelation> fuzzy_translation(const SupportTranslation& renaming,
                                                          const Bigraph& target);

/// G determined by F and ρ~; throws MalformedTranslation unless ρ~ is a
/// bijection between the supports.
Bigraph apply_translation(const FuzzyRelation& rho_v, const FuzzyRelation& rho_e, const Bigraph& f);

} // namespace fbg::type2

#endif
