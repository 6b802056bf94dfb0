#ifndef FBG_RELATION_HPP
#define FBG_RELATION_HPP

#include "fbg/lattice.hpp"
#include "fbg/term.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace fbg {

/// An L-fuzzy relation with finite support: a map from pairs of terms to
/// degrees in one frame. Pairs not stored have degree bottom, and bottom is
/// never stored, so two relations are equal iff their entry maps are.
class FuzzyRelation {
public:
    using Key = std::pair<Term, Term>;
    using Entries = std::map<Key, FrameValue>;

    explicit FuzzyRelation(Frame frame) : frame_(frame) {}

    const Frame& frame() const noexcept { return frame_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    FrameValue at(const Term& a, const Term& b) const;
    /// Stores the degree; setting bottom removes the pair.
    void set(const Term& a, const Term& b, const FrameValue& degree);
    /// Joins the degree into the existing entry.
    void raise(const Term& a, const Term& b, const FrameValue& degree);

    /// Entries whose first component is `a`, in order.
    std::vector<std::pair<Term, FrameValue>> row(const Term& a) const;
    std::set<Term> sources() const;
    std::set<Term> targets() const;

    /// Applies `rename` to both components of every pair.
    FuzzyRelation renamed(const std::function<Term(const Term&)>& rename) const;

    friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;

private:
    Frame frame_;
    Entries entries_;
};

/// Sup-min composite "first, then second":
/// (a, c) ↦ ⋁_b first(a, b) ∧ second(b, c).
FuzzyRelation compose(const FuzzyRelation& first, const FuzzyRelation& second);

FuzzyRelation transpose(const FuzzyRelation& r);

/// Union of relations on disjoint carriers; throws SupportOverlap if a pair
/// occurs in both.
FuzzyRelation disjoint_union(const FuzzyRelation& a, const FuzzyRelation& b);

/// Degree top on (t, t) for every t in `carrier`, bottom elsewhere.
FuzzyRelation identity_relation(const Frame& frame, const std::set<Term>& carrier);

/// First pair (in order) where lhs exceeds rhs; nullopt when lhs ≤ rhs pointwise.
std::optional<FuzzyRelation::Key> first_excess(const FuzzyRelation& lhs, const FuzzyRelation& rhs);

inline bool pointwise_leq(const FuzzyRelation& lhs, const FuzzyRelation& rhs)
{
    return !first_excess(lhs, rhs).has_value();
}

/// Pairs of the crisp skeleton (degree above bottom) whose source and
/// target are both of kind `kind`; used for cycle detection.
bool skeleton_acyclic(const FuzzyRelation& r, TermKind kind, std::vector<Term>* cycle = nullptr);

/// A fuzzy set with finite support; bottom is never stored.
class FuzzySet {
public:
    using Entries = std::map<Term, FrameValue>;

    explicit FuzzySet(Frame frame) : frame_(frame) {}

    const Frame& frame() const noexcept { return frame_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    FrameValue at(const Term& t) const;
    void set(const Term& t, const FrameValue& degree);
    bool contains(const Term& t) const { return entries_.contains(t); }
    std::set<Term> support() const;

    FuzzySet renamed(const std::function<Term(const Term&)>& rename) const;

    friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

private:
    Frame frame_;
    Entries entries_;
};

/// Throws SupportOverlap when both sets have positive membership somewhere.
FuzzySet disjoint_union(const FuzzySet& a, const FuzzySet& b);

} // namespace fbg

#endif
