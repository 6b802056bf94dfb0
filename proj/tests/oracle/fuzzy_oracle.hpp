#ifndef FBG_TESTS_FUZZY_ORACLE_HPP
#define FBG_TESTS_FUZZY_ORACLE_HPP

// Brute-force recomputation of fuzzy and type-2 composites. Every degree is
// obtained by enumerating the carriers explicitly and reading single
// entries with at(); nothing here calls the library's compose().

#include "fbg/fuzzy.hpp"
#include "fbg/type2.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using fbg::Frame;
using fbg::FrameValue;
using fbg::FuzzyRelation;
using fbg::FuzzySet;
using fbg::Term;
using fbg::TermKind;

/// (a, c) ↦ ⋁_b r(a, b) ∧ s(b, c) over every b mentioned by either relation.
inline FuzzyRelation brute_compose(const FuzzyRelation& r, const FuzzyRelation& s)
{
    std::set<Term> left, middle, right;
    for (const auto& [k, d] : r.entries()) {
        left.insert(k.first);
        middle.insert(k.second);
    }
    for (const auto& [k, d] : s.entries()) {
        middle.insert(k.first);
        right.insert(k.second);
    }
    FuzzyRelation out(r.frame());
    for (const auto& a : left)
        for (const auto& c : right) {
            FrameValue best = r.frame().bottom();
            for (const auto& b : middle)
                best = fbg::join(best, fbg::meet(r.at(a, b), s.at(b, c)));
            out.set(a, c, best);
        }
    return out;
}

inline std::vector<Term> node_terms(const std::set<std::string>& ids)
{
    std::vector<Term> out;
    for (const auto& v : ids)
        out.push_back(Term::node(v));
    return out;
}

inline std::vector<Term> ordinal_terms(std::size_t n, bool roots)
{
    std::vector<Term> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(roots ? Term::root(i) : Term::site(i));
    return out;
}

inline std::vector<Term> concat(std::vector<Term> a, const std::vector<Term>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Ports up to the largest arity of the signature: a superset of the ports
/// of any node, so no entry is missed.
inline std::vector<Term> port_candidates(const std::set<std::string>& nodes, const fbg::Signature& signature)
{
    std::size_t widest = 0;
    for (const auto& [k, a] : signature.arity)
        widest = std::max(widest, a);
    std::vector<Term> out;
    for (const auto& v : nodes)
        for (std::size_t i = 0; i < widest; ++i)
            out.push_back(Term::port(v, i));
    return out;
}

inline std::vector<Term> name_terms(const fbg::NameSet& names, bool outer)
{
    std::vector<Term> out;
    for (const auto& x : names)
        out.push_back(outer ? Term::outer_name(x) : Term::inner_name(x));
    return out;
}

/// ⋁_{j < m} first(w, root j) ∧ second(site j, w').
inline FrameValue through_width(const FuzzyRelation& first, const FuzzyRelation& second, std::size_t m,
                                const Term& w, const Term& w2)
{
    FrameValue best = first.frame().bottom();
    for (std::size_t j = 0; j < m; ++j)
        best = fbg::join(best, fbg::meet(first.at(w, Term::root(j)), second.at(Term::site(j), w2)));
    return best;
}

/// ⋁_{y ∈ Y} first(q, y) ∧ second(y, l).
inline FrameValue through_names(const FuzzyRelation& first, const FuzzyRelation& second, const fbg::NameSet& ys,
                                const Term& q, const Term& l)
{
    FrameValue best = first.frame().bottom();
    for (const auto& y : ys)
        best = fbg::join(best, fbg::meet(first.at(q, Term::outer_name(y)), second.at(Term::inner_name(y), l)));
    return best;
}

inline FuzzyRelation expected_prnt(const fbg::FuzzyPlaceGraph& g, const fbg::FuzzyPlaceGraph& f)
{
    FuzzyRelation out(f.frame);
    const auto f_sources = concat(ordinal_terms(f.inner, false), node_terms(f.nodes));
    const auto g_targets = concat(node_terms(g.nodes), ordinal_terms(g.outer, true));
    for (const auto& w : f_sources) {
        for (const auto& w2 : node_terms(f.nodes))
            out.set(w, w2, f.prnt.at(w, w2));
        for (const auto& w2 : g_targets)
            out.set(w, w2, through_width(f.prnt, g.prnt, f.outer, w, w2));
    }
    for (const auto& w : node_terms(g.nodes))
        for (const auto& w2 : g_targets)
            out.set(w, w2, g.prnt.at(w, w2));
    return out;
}

inline FuzzyRelation expected_link(const fbg::FuzzyLinkGraph& g, const fbg::FuzzyLinkGraph& f)
{
    FuzzyRelation out(f.frame);
    const auto f_points = concat(name_terms(f.inner, false), port_candidates(f.nodes, f.signature));
    std::vector<Term> f_edges, g_links;
    for (const auto& e : f.edges)
        f_edges.push_back(Term::edge(e));
    for (const auto& e : g.edges)
        g_links.push_back(Term::edge(e));
    g_links = concat(g_links, name_terms(g.outer, true));
    for (const auto& q : f_points) {
        for (const auto& l : f_edges)
            out.set(q, l, f.link.at(q, l));
        for (const auto& l : g_links)
            out.set(q, l, through_names(f.link, g.link, f.outer, q, l));
    }
    for (const auto& q : port_candidates(g.nodes, g.signature))
        for (const auto& l : g_links)
            out.set(q, l, g.link.at(q, l));
    return out;
}

/// prnt~ of f ⊗ g: sites of g shifted by f.inner, roots by f.outer.
inline FuzzyRelation expected_tensor_prnt(const fbg::FuzzyPlaceGraph& f, const fbg::FuzzyPlaceGraph& g)
{
    FuzzyRelation out = f.prnt;
    const auto sources = concat(ordinal_terms(g.inner, false), node_terms(g.nodes));
    const auto targets = concat(node_terms(g.nodes), ordinal_terms(g.outer, true));
    for (const auto& w : sources)
        for (const auto& w2 : targets) {
            Term a = w.is(TermKind::Site) ? Term::site(w.index() + f.inner) : w;
            Term b = w2.is(TermKind::Root) ? Term::root(w2.index() + f.outer) : w2;
            out.set(a, b, g.prnt.at(w, w2));
        }
    return out;
}

// ---------------------------------------------------------------- type 2

inline bool at_least(const FrameValue& v, const FrameValue& kappa) { return fbg::leq(kappa, v); }

inline FuzzyRelation expected_type2_prnt(const fbg::type2::PlaceGraph& g, const fbg::type2::PlaceGraph& f)
{
    const FrameValue kappa = fbg::meet(f.beta, g.beta);
    const Frame& frame = f.frame;
    FuzzyRelation out(frame);
    std::set<std::string> f_nodes, g_nodes;
    for (const auto& [t, m] : f.nodes.entries())
        f_nodes.insert(t.id());
    for (const auto& [t, m] : g.nodes.entries())
        g_nodes.insert(t.id());
    auto membership = [&](const Term& w) { return w.is(TermKind::Site) ? frame.top() : f.nodes.at(w); };
    const auto g_targets = concat(node_terms(g_nodes), ordinal_terms(g.outer, true));
    for (const auto& w : concat(ordinal_terms(f.inner, false), node_terms(f_nodes))) {
        if (!at_least(membership(w), kappa))
            continue;
        for (const auto& w2 : node_terms(f_nodes))
            if (at_least(f.prnt.at(w, w2), kappa))
                out.set(w, w2, f.prnt.at(w, w2));
        for (const auto& w2 : g_targets) {
            FrameValue d = through_width(f.prnt, g.prnt, f.outer, w, w2);
            if (at_least(d, kappa))
                out.set(w, w2, d);
        }
    }
    for (const auto& w : node_terms(g_nodes))
        if (at_least(g.nodes.at(w), kappa))
            for (const auto& w2 : g_targets)
                out.set(w, w2, g.prnt.at(w, w2));
    return out;
}

inline FuzzyRelation expected_type2_link(const fbg::type2::LinkGraph& g, const fbg::type2::LinkGraph& f)
{
    const FrameValue kappa = fbg::meet(f.delta, g.delta);
    FuzzyRelation out(f.frame);
    std::set<std::string> f_nodes, g_nodes;
    for (const auto& [t, m] : f.nodes.entries())
        f_nodes.insert(t.id());
    for (const auto& [t, m] : g.nodes.entries())
        g_nodes.insert(t.id());
    std::vector<Term> f_edges, g_links;
    for (const auto& [t, m] : f.edges.entries())
        f_edges.push_back(t);
    for (const auto& [t, m] : g.edges.entries())
        g_links.push_back(t);
    g_links = concat(g_links, name_terms(g.outer, true));
    for (const auto& q : concat(name_terms(f.inner, false), port_candidates(f_nodes, f.signature))) {
        for (const auto& l : f_edges)
            if (at_least(f.link.at(q, l), kappa))
                out.set(q, l, f.link.at(q, l));
        for (const auto& l : g_links) {
            FrameValue d = through_names(f.link, g.link, f.outer, q, l);
            if (at_least(d, kappa))
                out.set(q, l, d);
        }
    }
    for (const auto& q : port_candidates(g_nodes, g.signature))
        for (const auto& l : g_links)
            out.set(q, l, g.link.at(q, l));
    return out;
}

} // namespace oracle

#endif
