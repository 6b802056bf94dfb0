#include "fbg/type2.hpp"

#include "fbg/error.hpp"

#include <optional>

namespace fbg::type2 {

namespace {

void require_same_frame(const Frame& a, const Frame& b)
{
    if (a != b)
        throw InstanceMismatch("operands over " + a.name() + " and " + b.name());
}

bool at_least(const FrameValue& v, const FrameValue& threshold) { return leq(threshold, v); }

/// Membership of a place-graph term: sites and roots are crisp.
FrameValue place_membership(const Term& t, const FuzzySet& nodes)
{
    return t.is(TermKind::Node) ? nodes.at(t) : nodes.frame().top();
}

std::string names_to_string(const NameSet& names)
{
    std::string out = "{";
    for (const auto& n : names)
        out += (out.size() > 1 ? "," : "") + n;
    return out + "}";
}

void check_ctrl(const FuzzyRelation& ctrl, const Signature& signature, const FuzzySet& nodes,
                ValidationReport& report)
{
    for (const auto& [key, degree] : ctrl.entries()) {
        if (!key.first.is(TermKind::Node) || !nodes.contains(key.first))
            report.add("membership", "ctrl~ entry for " + key.first.to_string() +
                                         " which has no positive membership");
        if (!key.second.is(TermKind::Control) || !signature.has(key.second.id()))
            report.add("control", "ctrl~ entry targets " + key.second.to_string() +
                                      " which is not in the signature");
    }
}

} // namespace

Bigraph::Bigraph(PlaceGraph place, LinkGraph link)
    : place_(std::move(place)), link_(std::move(link)), gamma_(place_.beta)
{
    if (place_.frame != link_.frame)
        throw InterfaceMismatch("place and link parts use different frames");
    if (place_.signature != link_.signature)
        throw InterfaceMismatch("place and link parts use different signatures");
    if (place_.nodes != link_.nodes)
        throw InterfaceMismatch("place and link parts have different node memberships");
    if (place_.ctrl != link_.ctrl)
        throw InterfaceMismatch("place and link parts have different ctrl~");
    gamma_ = meet(place_.beta, link_.delta);
}

std::set<Term> ports(const Signature& signature, const FuzzyRelation& ctrl, const FuzzySet& nodes)
{
    std::set<Term> out;
    for (const auto& [v, membership] : nodes.entries()) {
        std::optional<std::string> best;
        FrameValue best_degree = ctrl.frame().bottom();
        // Rows are ordered by control name, so strict improvement keeps the
        // least name among maximisers.
        for (const auto& [k, degree] : ctrl.row(v)) {
            if (!k.is(TermKind::Control) || !signature.has(k.id()))
                continue;
            if (!best || !leq(degree, best_degree)) {
                best = k.id();
                best_degree = degree;
            }
        }
        if (!best)
            continue;
        for (std::size_t i = 0; i < signature.arity_of(*best); ++i)
            out.insert(Term::port(v.id(), i));
    }
    return out;
}

std::set<Term> ports(const LinkGraph& g) { return ports(g.signature, g.ctrl, g.nodes); }

ValidationReport validate(const PlaceGraph& g)
{
    ValidationReport report;
    if (g.beta.frame() != g.frame || g.nodes.frame() != g.frame || g.ctrl.frame() != g.frame ||
        g.prnt.frame() != g.frame)
        report.add("frame", "components use a frame other than " + g.frame.name());
    check_ctrl(g.ctrl, g.signature, g.nodes, report);
    for (const auto& [key, degree] : g.prnt.entries()) {
        const auto& [w, p] = key;
        if (w.is(TermKind::Site)) {
            if (w.index() >= g.inner)
                report.add("domain", "prnt~ entry from " + w.to_string() + " beyond the inner width");
        } else if (!w.is(TermKind::Node)) {
            report.add("domain", "prnt~ entry from " + w.to_string() + " which is not a site or node");
        } else if (!g.nodes.contains(w)) {
            report.add("membership", "prnt~ entry from " + w.to_string() + " which has no positive membership");
        }
        if (p.is(TermKind::Root)) {
            if (p.index() >= g.outer)
                report.add("codomain", "prnt~ entry to " + p.to_string() + " beyond the outer width");
        } else if (!p.is(TermKind::Node)) {
            report.add("codomain", "prnt~ entry to " + p.to_string() + " which is not a node or root");
        } else if (!g.nodes.contains(p)) {
            report.add("membership", "prnt~ entry to " + p.to_string() + " which has no positive membership");
        }
    }
    if (!skeleton_acyclic(g.prnt, TermKind::Node))
        report.add("acyclicity", "prnt~ skeleton has a cycle");
    return report;
}

ValidationReport validate(const LinkGraph& g)
{
    ValidationReport report;
    if (g.delta.frame() != g.frame || g.nodes.frame() != g.frame || g.edges.frame() != g.frame ||
        g.ctrl.frame() != g.frame || g.link.frame() != g.frame)
        report.add("frame", "components use a frame other than " + g.frame.name());
    check_ctrl(g.ctrl, g.signature, g.nodes, report);
    const auto port_set = ports(g);
    for (const auto& [key, degree] : g.link.entries()) {
        const auto& [q, l] = key;
        if (q.is(TermKind::Port)) {
            if (!g.nodes.contains(Term::node(q.id())))
                report.add("membership", q.to_string() + " belongs to a node without positive membership");
            else if (!port_set.contains(q))
                report.add("arity", q.to_string() + " is not a port of its node's leading control");
        } else if (!q.is(TermKind::InnerName) || !g.inner.contains(q.id())) {
            report.add("domain", "link~ entry from " + q.to_string() + " which is not a point");
        }
        if (l.is(TermKind::Edge)) {
            if (!g.edges.contains(l))
                report.add("membership", "link~ entry to " + l.to_string() + " which has no positive membership");
        } else if (!l.is(TermKind::OuterName) || !g.outer.contains(l.id())) {
            report.add("codomain", "link~ entry to " + l.to_string() + " which is not a link");
        }
    }
    return report;
}

ValidationReport validate(const Bigraph& b)
{
    ValidationReport report;
    report.append(validate(b.place()), "place: ");
    report.append(validate(b.link()), "link: ");
    if (b.gamma() != meet(b.place().beta, b.link().delta))
        report.add("gamma", "gamma differs from beta ∧ delta");
    return report;
}

PlaceGraph identity_place(std::size_t width, const Frame& frame)
{
    PlaceGraph g{frame, {}, width, width, FuzzySet(frame), FuzzyRelation(frame), FuzzyRelation(frame), frame.top()};
    for (std::size_t i = 0; i < width; ++i)
        g.prnt.set(Term::site(i), Term::root(i), frame.top());
    return g;
}

LinkGraph identity_link(const NameSet& names, const Frame& frame)
{
    LinkGraph g{frame,          {},           names, names, FuzzySet(frame), FuzzySet(frame), FuzzyRelation(frame),
                FuzzyRelation(frame), frame.top()};
    for (const auto& x : names)
        g.link.set(Term::inner_name(x), Term::outer_name(x), frame.top());
    return g;
}

Bigraph identity(const Interface& at, const Frame& frame)
{
    return Bigraph(type2::identity_place(at.width, frame), type2::identity_link(at.names, frame));
}

PlaceGraph compose(const PlaceGraph& g, const PlaceGraph& f)
{
    require_same_frame(g.frame, f.frame);
    if (f.outer != g.inner)
        throw InterfaceMismatch("interface mismatch: expected width " + std::to_string(g.inner) + ", got " +
                                std::to_string(f.outer));
    const FrameValue kappa = meet(f.beta, g.beta);
    PlaceGraph out{f.frame,
                   Signature::merge(f.signature, g.signature),
                   f.inner,
                   g.outer,
                   disjoint_union(f.nodes, g.nodes),
                   disjoint_union(f.ctrl, g.ctrl),
                   FuzzyRelation(f.frame),
                   kappa};

    FuzzyRelation routed(f.frame);
    for (const auto& [key, d] : f.prnt.entries()) {
        const auto& [w, parent] = key;
        if (!at_least(place_membership(w, f.nodes), kappa))
            continue;
        if (parent.is(TermKind::Node)) {
            if (at_least(d, kappa))
                out.prnt.set(w, parent, d);
            continue;
        }
        for (const auto& [target, e] : g.prnt.row(Term::site(parent.index())))
            routed.raise(w, target, meet(d, e));
    }
    for (const auto& [key, d] : routed.entries())
        if (at_least(d, kappa))
            out.prnt.set(key.first, key.second, d);
    for (const auto& [key, d] : g.prnt.entries())
        if (key.first.is(TermKind::Node) && at_least(g.nodes.at(key.first), kappa))
            out.prnt.set(key.first, key.second, d);
    return out;
}

LinkGraph compose(const LinkGraph& g, const LinkGraph& f)
{
    require_same_frame(g.frame, f.frame);
    if (f.outer != g.inner)
        throw InterfaceMismatch("interface mismatch: expected names " + names_to_string(g.inner) + ", got " +
                                names_to_string(f.outer));
    const FrameValue kappa = meet(f.delta, g.delta);
    LinkGraph out{f.frame,
                  Signature::merge(f.signature, g.signature),
                  f.inner,
                  g.outer,
                  disjoint_union(f.nodes, g.nodes),
                  disjoint_union(f.edges, g.edges),
                  disjoint_union(f.ctrl, g.ctrl),
                  FuzzyRelation(f.frame),
                  kappa};

    FuzzyRelation routed(f.frame);
    for (const auto& [key, d] : f.link.entries()) {
        const auto& [q, l] = key;
        if (l.is(TermKind::Edge)) {
            if (at_least(d, kappa))
                out.link.set(q, l, d);
            continue;
        }
        for (const auto& [target, e] : g.link.row(Term::inner_name(l.id())))
            routed.raise(q, target, meet(d, e));
    }
    for (const auto& [key, d] : routed.entries())
        if (at_least(d, kappa))
            out.link.set(key.first, key.second, d);
    for (const auto& [key, d] : g.link.entries())
        if (key.first.is(TermKind::Port))
            out.link.set(key.first, key.second, d);
    return out;
}

Bigraph compose(const Bigraph& g, const Bigraph& f)
{
    if (f.outer() != g.inner())
        throw InterfaceMismatch("interface mismatch: expected " + g.inner().to_string() + ", got " +
                                f.outer().to_string());
    return Bigraph(compose(g.place(), f.place()), compose(g.link(), f.link()));
}

Bigraph embed(const FuzzyBigraph& f, const FrameValue& plausibility)
{
    const Frame& frame = f.frame();
    if (plausibility.frame() != frame)
        throw InstanceMismatch("plausibility from " + plausibility.frame().name() + " for a " + frame.name() +
                               " bigraph");
    FuzzySet nodes(frame);
    for (const auto& v : f.place.nodes)
        nodes.set(Term::node(v), frame.top());
    FuzzySet edges(frame);
    for (const auto& e : f.link.edges)
        edges.set(Term::edge(e), frame.top());
    PlaceGraph place{frame, f.place.signature, f.place.inner, f.place.outer, nodes, f.place.ctrl, f.place.prnt,
                     plausibility};
    LinkGraph link{frame, f.link.signature, f.link.inner, f.link.outer, nodes, edges, f.link.ctrl, f.link.link,
                   plausibility};
    return Bigraph(std::move(place), std::move(link));
}

Bigraph embed(const FuzzyBigraph& f) { return embed(f, f.frame().top()); }

FrameValue coherent_plausibility(const FuzzyBigraph& f)
{
    FrameValue out = f.frame().top();
    for (const auto& [key, d] : f.place.prnt.entries())
        out = meet(out, d);
    for (const auto& [key, d] : f.link.link.entries())
        out = meet(out, d);
    return out;
}

bool is_coherent(const Bigraph& b)
{
    const auto& p = b.place();
    const auto& l = b.link();
    for (const auto& [t, m] : p.nodes.entries())
        if (!at_least(m, p.beta) || !at_least(m, l.delta))
            return false;
    for (const auto& [t, m] : l.edges.entries())
        if (!at_least(m, l.delta))
            return false;
    for (const auto& [key, d] : p.prnt.entries())
        if (!at_least(d, p.beta))
            return false;
    for (const auto& [key, d] : l.link.entries())
        if (!at_least(d, l.delta))
            return false;
    return true;
}

bool is_membership_bounded(const Bigraph& b)
{
    const auto& p = b.place();
    const auto& l = b.link();
    const FrameValue top = b.frame().top();
    for (const auto& [key, d] : p.prnt.entries()) {
        if (!leq(d, place_membership(key.first, p.nodes)) || !leq(d, place_membership(key.second, p.nodes)))
            return false;
    }
    for (const auto& [key, d] : l.link.entries()) {
        const FrameValue source = key.first.is(TermKind::Port) ? l.nodes.at(Term::node(key.first.id())) : top;
        const FrameValue target = key.second.is(TermKind::Edge) ? l.edges.at(key.second) : top;
        if (!leq(d, source) || !leq(d, target))
            return false;
    }
    return true;
}

FuzzySet support(const PlaceGraph& g) { return g.nodes; }

FuzzySet support(const Bigraph& b, SupportConvention convention)
{
    // (Ṽ ⊎ Ẽ)(t) = Ṽ(t) ∨ Ẽ(t), with Ṽ(e) = bottom and Ẽ(v) set by the convention.
    const Frame& frame = b.frame();
    FuzzySet out(frame);
    const FrameValue off_sort_for_nodes =
        convention == SupportConvention::OffSortTopForNodes ? frame.top() : frame.bottom();
    for (const auto& [v, m] : b.link().nodes.entries())
        out.set(v, join(m, off_sort_for_nodes));
    for (const auto& [e, m] : b.link().edges.entries())
        out.set(e, join(m, frame.bottom()));
    return out;
}

} // namespace fbg::type2
