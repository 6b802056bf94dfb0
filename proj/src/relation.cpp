#include "fbg/relation.hpp"

#include "fbg/error.hpp"

#include <algorithm>

namespace fbg {

namespace {

void require_frame(const Frame& expected, const FrameValue& v)
{
    if (v.frame() != expected)
        throw InstanceMismatch("degree from " + v.frame().name() + " stored in a " +
                               expected.name() + " relation");
}

void require_frames(const Frame& a, const Frame& b)
{
    if (a != b)
        throw InstanceMismatch("relations over " + a.name() + " and " + b.name());
}

} // namespace

FrameValue FuzzyRelation::at(const Term& a, const Term& b) const
{
    auto it = entries_.find({a, b});
    return it == entries_.end() ? frame_.bottom() : it->second;
}

void FuzzyRelation::set(const Term& a, const Term& b, const FrameValue& degree)
{
    require_frame(frame_, degree);
    if (degree.is_bottom())
        entries_.erase({a, b});
    else
        entries_.insert_or_assign({a, b}, degree);
}

void FuzzyRelation::raise(const Term& a, const Term& b, const FrameValue& degree)
{
    require_frame(frame_, degree);
    if (degree.is_bottom())
        return;
    auto [it, inserted] = entries_.try_emplace({a, b}, degree);
    if (!inserted)
        it->second = join(it->second, degree);
}

std::vector<std::pair<Term, FrameValue>> FuzzyRelation::row(const Term& a) const
{
    std::vector<std::pair<Term, FrameValue>> out;
    for (auto it = entries_.lower_bound({a, Term::site(0)}); it != entries_.end() && it->first.first == a;
         ++it)
        out.emplace_back(it->first.second, it->second);
    return out;
}

std::set<Term> FuzzyRelation::sources() const
{
    std::set<Term> out;
    for (const auto& [k, v] : entries_)
        out.insert(k.first);
    return out;
}

std::set<Term> FuzzyRelation::targets() const
{
    std::set<Term> out;
    for (const auto& [k, v] : entries_)
        out.insert(k.second);
    return out;
}

FuzzyRelation FuzzyRelation::renamed(const std::function<Term(const Term&)>& rename) const
{
    FuzzyRelation out(frame_);
    for (const auto& [k, v] : entries_)
        out.raise(rename(k.first), rename(k.second), v);
    return out;
}

FuzzyRelation compose(const FuzzyRelation& first, const FuzzyRelation& second)
{
    require_frames(first.frame(), second.frame());
    FuzzyRelation out(first.frame());
    for (const auto& [k, d1] : first.entries())
        for (const auto& [c, d2] : second.row(k.second))
            out.raise(k.first, c, meet(d1, d2));
    return out;
}

FuzzyRelation transpose(const FuzzyRelation& r)
{
    FuzzyRelation out(r.frame());
    for (const auto& [k, v] : r.entries())
        out.set(k.second, k.first, v);
    return out;
}

FuzzyRelation disjoint_union(const FuzzyRelation& a, const FuzzyRelation& b)
{
    require_frames(a.frame(), b.frame());
    FuzzyRelation out = a;
    for (const auto& [k, v] : b.entries()) {
        if (a.entries().contains(k))
            throw SupportOverlap("relations overlap at (" + k.first.to_string() + ", " +
                                 k.second.to_string() + ")");
        out.set(k.first, k.second, v);
    }
    return out;
}

FuzzyRelation identity_relation(const Frame& frame, const std::set<Term>& carrier)
{
    FuzzyRelation out(frame);
    for (const auto& t : carrier)
        out.set(t, t, frame.top());
    return out;
}

std::optional<FuzzyRelation::Key> first_excess(const FuzzyRelation& lhs, const FuzzyRelation& rhs)
{
    require_frames(lhs.frame(), rhs.frame());
    for (const auto& [k, v] : lhs.entries())
        if (!leq(v, rhs.at(k.first, k.second)))
            return k;
    return std::nullopt;
}

bool skeleton_acyclic(const FuzzyRelation& r, TermKind kind, std::vector<Term>* cycle)
{
    std::map<Term, std::vector<Term>> adjacent;
    for (const auto& [k, v] : r.entries())
        if (k.first.is(kind) && k.second.is(kind))
            adjacent[k.first].push_back(k.second);

    enum class Mark { Fresh, Active, Done };
    std::map<Term, Mark> mark;
    std::vector<Term> path;

    // Iterative DFS; a back edge to an Active vertex closes a cycle.
    for (const auto& [start, ignored] : adjacent) {
        if (mark[start] != Mark::Fresh)
            continue;
        std::vector<std::pair<Term, std::size_t>> stack{{start, 0}};
        mark[start] = Mark::Active;
        path.assign(1, start);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& succ = adjacent[v];
            if (next == succ.size()) {
                mark[v] = Mark::Done;
                stack.pop_back();
                path.pop_back();
                continue;
            }
            const Term w = succ[next++];
            if (mark[w] == Mark::Active) {
                if (cycle) {
                    auto from = std::find(path.begin(), path.end(), w);
                    cycle->assign(from, path.end());
                }
                return false;
            }
            if (mark[w] == Mark::Fresh) {
                mark[w] = Mark::Active;
                stack.emplace_back(w, 0);
                path.push_back(w);
            }
        }
    }
    return true;
}

FrameValue FuzzySet::at(const Term& t) const
{
    auto it = entries_.find(t);
    return it == entries_.end() ? frame_.bottom() : it->second;
}

void FuzzySet::set(const Term& t, const FrameValue& degree)
{
    require_frame(frame_, degree);
    if (degree.is_bottom())
        entries_.erase(t);
    else
        entries_.insert_or_assign(t, degree);
}

std::set<Term> FuzzySet::support() const
{
    std::set<Term> out;
    for (const auto& [t, v] : entries_)
        out.insert(t);
    return out;
}

FuzzySet FuzzySet::renamed(const std::function<Term(const Term&)>& rename) const
{
    FuzzySet out(frame_);
    for (const auto& [t, v] : entries_)
        out.set(rename(t), v);
    return out;
}

FuzzySet disjoint_union(const FuzzySet& a, const FuzzySet& b)
{
    require_frames(a.frame(), b.frame());
    FuzzySet out = a;
    for (const auto& [t, v] : b.entries()) {
        if (a.contains(t))
            throw SupportOverlap(t.to_string() + " belongs to both supports");
        out.set(t, v);
    }
    return out;
}

} // namespace fbg
