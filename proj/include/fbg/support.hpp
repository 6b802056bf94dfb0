#ifndef FBG_SUPPORT_HPP
#define FBG_SUPPORT_HPP

#include "fbg/fuzzy.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace fbg {

/// |F^P| = V and |F^L| = V ⊎ E, as node and edge terms.
struct BigraphSupport {
    std::set<Term> place;
    std::set<Term> link;

    friend bool operator==(const BigraphSupport&, const BigraphSupport&) = default;
};

BigraphSupport support(const FuzzyBigraph& f);

/// Bijections ρ_V : V_F -> V_G and ρ_E : E_F -> E_G.
struct SupportTranslation {
    std::map<std::string, std::string> nodes;
    std::map<std::string, std::string> edges;

    static SupportTranslation identity_on(const FuzzyBigraph& f);
    SupportTranslation inverse() const;
};

struct PropertyCheck {
    std::string property;
    bool passed = true;
    std::string witness;
};

struct TranslationReport {
    std::vector<PropertyCheck> checks;

    bool ok() const;
    const PropertyCheck* find(std::string_view property) const;
    bool passed(std::string_view property) const;
};

/// Checks ρ : |F| -> |G| against the three conditions a support
/// translation must satisfy:
///   "controls": ctrl~_F pushed along ρ~_V is ≤ ctrl~_G;
///   "ports":    (v, i) ↦ (ρ_V(v), i) is a bijection P_F -> P_G;
///   "parents":  prnt~_G ∘ (Id_m ⊎ ρ~_V) ≥ (Id_n ⊎ ρ~_V) ∘ prnt~_F;
///   "links":    link~_G ∘ (Id_X ⊎ ρ~_P) ≥ (Id_Y ⊎ ρ~_E) ∘ link~_F.
/// Relations are composed "first, then second" with the translation applied
/// on the side that makes the composite well-typed.
/// Throws InterfaceMismatch when F and G have different interfaces and
/// MalformedTranslation when ρ is not a pair of bijections.
TranslationReport check_support_translation(const SupportTranslation& rho, const FuzzyBigraph& f,
                                            const FuzzyBigraph& g);

/// The bigraph G determined by F and ρ: every node and edge renamed, every
/// degree copied.
FuzzyBigraph apply_translation(const SupportTranslation& rho, const FuzzyBigraph& f);

/// Crisp-valued relations induced by ρ (top on mapped pairs).
FuzzyRelation induced_node_relation(const SupportTranslation& rho, const Frame& frame);
FuzzyRelation induced_edge_relation(const SupportTranslation& rho, const Frame& frame);

} // namespace fbg

#endif
