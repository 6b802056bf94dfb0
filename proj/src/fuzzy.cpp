#include "fbg/fuzzy.hpp"

#include "fbg/error.hpp"

#include <algorithm>

namespace fbg {

namespace {

void require_same_frame(const Frame& a, const Frame& b)
{
    if (a != b)
        throw InstanceMismatch("operands over " + a.name() + " and " + b.name());
}

void require_disjoint(const std::set<std::string>& a, const std::set<std::string>& b,
                      const char* what)
{
    for (const auto& x : a)
        if (b.contains(x))
            throw SupportOverlap(std::string(what) + " '" + x + "' belongs to both operands");
}

void require_disjoint_names(const NameSet& a, const NameSet& b, const char* side)
{
    for (const auto& x : a)
        if (b.contains(x))
            throw NameClash(std::string(side) + " name '" + x + "' occurs in both operands");
}

std::string names_to_string(const NameSet& names)
{
    std::string out = "{";
    for (const auto& n : names)
        out += (out.size() > 1 ? "," : "") + n;
    return out + "}";
}

void check_ctrl(const FuzzyRelation& ctrl, const Signature& signature,
                const std::set<std::string>& nodes, ValidationReport& report)
{
    for (const auto& [key, degree] : ctrl.entries()) {
        const auto& [v, k] = key;
        if (!v.is(TermKind::Node) || !nodes.contains(v.id()))
            report.add("domain", "ctrl~ entry for " + v.to_string() + " which is not a node");
        if (!k.is(TermKind::Control) || !signature.has(k.id()))
            report.add("control", "ctrl~ entry targets " + k.to_string() +
                                      " which is not in the signature");
    }
}

} // namespace

FuzzyBigraph make_bigraph(FuzzyPlaceGraph place, FuzzyLinkGraph link)
{
    if (place.frame != link.frame)
        throw InterfaceMismatch("place and link parts use different frames");
    if (place.signature != link.signature)
        throw InterfaceMismatch("place and link parts use different signatures");
    if (place.nodes != link.nodes)
        throw InterfaceMismatch("place and link parts have different node sets");
    if (place.ctrl != link.ctrl)
        throw InterfaceMismatch("place and link parts have different ctrl~");
    return FuzzyBigraph{std::move(place), std::move(link)};
}

std::set<Term> ports_fuzzy(const Signature& signature, const FuzzyRelation& ctrl)
{
    std::map<std::string, std::size_t> width;
    for (const auto& [key, degree] : ctrl.entries()) {
        const auto& [v, k] = key;
        if (!v.is(TermKind::Node) || !k.is(TermKind::Control) || !signature.has(k.id()))
            continue;
        auto& w = width[v.id()];
        w = std::max(w, signature.arity_of(k.id()));
    }
    std::set<Term> out;
    for (const auto& [v, w] : width)
        for (std::size_t i = 0; i < w; ++i)
            out.insert(Term::port(v, i));
    return out;
}

std::set<Term> ports_fuzzy(const FuzzyLinkGraph& g) { return ports_fuzzy(g.signature, g.ctrl); }

ValidationReport validate(const FuzzyPlaceGraph& g)
{
    ValidationReport report;
    check_ctrl(g.ctrl, g.signature, g.nodes, report);
    std::set<Term> has_parent;
    for (const auto& [key, degree] : g.prnt.entries()) {
        const auto& [w, p] = key;
        const bool site_ok = w.is(TermKind::Site) && w.index() < g.inner;
        const bool node_ok = w.is(TermKind::Node) && g.nodes.contains(w.id());
        if (!site_ok && !node_ok)
            report.add("domain", "prnt~ entry from " + w.to_string() + " which is not a site or node");
        const bool root_ok = p.is(TermKind::Root) && p.index() < g.outer;
        const bool parent_node_ok = p.is(TermKind::Node) && g.nodes.contains(p.id());
        if (!root_ok && !parent_node_ok)
            report.add("codomain", "prnt~ entry to " + p.to_string() + " which is not a node or root");
        has_parent.insert(w);
    }
    for (std::size_t i = 0; i < g.inner; ++i)
        if (!has_parent.contains(Term::site(i)))
            report.add("totality", "site " + std::to_string(i) + " has no parent above bottom");
    for (const auto& v : g.nodes)
        if (!has_parent.contains(Term::node(v)))
            report.add("totality", "node " + v + " has no parent above bottom");
    std::vector<Term> cycle;
    if (!skeleton_acyclic(g.prnt, TermKind::Node, &cycle)) {
        std::string path;
        for (const auto& t : cycle)
            path += t.id() + " -> ";
        report.add("acyclicity", "prnt~ skeleton has a cycle " + path + cycle.front().id());
    }
    return report;
}

ValidationReport validate(const FuzzyLinkGraph& g)
{
    ValidationReport report;
    check_ctrl(g.ctrl, g.signature, g.nodes, report);
    const auto ports = ports_fuzzy(g);
    std::set<Term> linked;
    for (const auto& [key, degree] : g.link.entries()) {
        const auto& [q, l] = key;
        if (q.is(TermKind::Port)) {
            if (!g.nodes.contains(q.id()))
                report.add("domain", "link~ entry from " + q.to_string() + " of an unknown node");
            else if (!ports.contains(q))
                report.add("arity", q.to_string() + " exceeds the arity of its node's controls");
        } else if (!q.is(TermKind::InnerName) || !g.inner.contains(q.id())) {
            report.add("domain", "link~ entry from " + q.to_string() + " which is not a point");
        }
        const bool edge_ok = l.is(TermKind::Edge) && g.edges.contains(l.id());
        const bool name_ok = l.is(TermKind::OuterName) && g.outer.contains(l.id());
        if (!edge_ok && !name_ok)
            report.add("codomain", "link~ entry to " + l.to_string() + " which is not a link");
        linked.insert(q);
    }
    for (const auto& x : g.inner)
        if (!linked.contains(Term::inner_name(x)))
            report.add("totality", "inner name " + x + " has no link above bottom");
    for (const auto& p : ports)
        if (!linked.contains(p))
            report.add("totality", p.to_string() + " has no link above bottom");
    return report;
}

ValidationReport validate(const FuzzyBigraph& b)
{
    ValidationReport report;
    report.append(validate(b.place), "place: ");
    report.append(validate(b.link), "link: ");
    if (b.place.frame != b.link.frame || b.place.signature != b.link.signature ||
        b.place.nodes != b.link.nodes || b.place.ctrl != b.link.ctrl)
        report.add("shared-support", "place and link parts disagree on frame, signature, nodes or ctrl~");
    return report;
}

FuzzyPlaceGraph identity_place(std::size_t width, const Frame& frame)
{
    FuzzyPlaceGraph g{frame, {}, width, width, {}, FuzzyRelation(frame), FuzzyRelation(frame)};
    for (std::size_t i = 0; i < width; ++i)
        g.prnt.set(Term::site(i), Term::root(i), frame.top());
    return g;
}

FuzzyLinkGraph identity_link(const NameSet& names, const Frame& frame)
{
    FuzzyLinkGraph g{frame, {}, names, names, {}, {}, FuzzyRelation(frame), FuzzyRelation(frame)};
    for (const auto& x : names)
        g.link.set(Term::inner_name(x), Term::outer_name(x), frame.top());
    return g;
}

FuzzyBigraph identity_bigraph(const Interface& at, const Frame& frame)
{
    return FuzzyBigraph{identity_place(at.width, frame), identity_link(at.names, frame)};
}

FuzzyPlaceGraph compose(const FuzzyPlaceGraph& g, const FuzzyPlaceGraph& f)
{
    require_same_frame(g.frame, f.frame);
    if (f.outer != g.inner)
        throw InterfaceMismatch("interface mismatch: expected width " + std::to_string(g.inner) +
                                ", got " + std::to_string(f.outer));
    require_disjoint(f.nodes, g.nodes, "node");

    FuzzyPlaceGraph out{f.frame,
                        Signature::merge(f.signature, g.signature),
                        f.inner,
                        g.outer,
                        f.nodes,
                        disjoint_union(f.ctrl, g.ctrl),
                        FuzzyRelation(f.frame)};
    out.nodes.insert(g.nodes.begin(), g.nodes.end());

    for (const auto& [key, d] : f.prnt.entries()) {
        const auto& [w, parent] = key;
        if (parent.is(TermKind::Node)) {
            out.prnt.set(w, parent, d);
            continue;
        }
        // parent is root j of f, i.e. site j of g
        for (const auto& [target, e] : g.prnt.row(Term::site(parent.index())))
            out.prnt.raise(w, target, meet(d, e));
    }
    for (const auto& [key, d] : g.prnt.entries())
        if (key.first.is(TermKind::Node))
            out.prnt.set(key.first, key.second, d);
    return out;
}

FuzzyLinkGraph compose(const FuzzyLinkGraph& g, const FuzzyLinkGraph& f)
{
    require_same_frame(g.frame, f.frame);
    if (f.outer != g.inner)
        throw InterfaceMismatch("interface mismatch: expected names " + names_to_string(g.inner) +
                                ", got " + names_to_string(f.outer));
    require_disjoint(f.nodes, g.nodes, "node");
    require_disjoint(f.edges, g.edges, "edge");

    FuzzyLinkGraph out{f.frame,
                       Signature::merge(f.signature, g.signature),
                       f.inner,
                       g.outer,
                       f.nodes,
                       f.edges,
                       disjoint_union(f.ctrl, g.ctrl),
                       FuzzyRelation(f.frame)};
    out.nodes.insert(g.nodes.begin(), g.nodes.end());
    out.edges.insert(g.edges.begin(), g.edges.end());

    for (const auto& [key, d] : f.link.entries()) {
        const auto& [q, l] = key;
        if (l.is(TermKind::Edge)) {
            out.link.set(q, l, d);
            continue;
        }
        // l is outer name y of f, i.e. inner name y of g
        for (const auto& [target, e] : g.link.row(Term::inner_name(l.id())))
            out.link.raise(q, target, meet(d, e));
    }
    for (const auto& [key, d] : g.link.entries())
        if (key.first.is(TermKind::Port))
            out.link.set(key.first, key.second, d);
    return out;
}

FuzzyBigraph compose(const FuzzyBigraph& g, const FuzzyBigraph& f)
{
    if (f.outer() != g.inner())
        throw InterfaceMismatch("interface mismatch: expected " + g.inner().to_string() + ", got " +
                                f.outer().to_string());
    return FuzzyBigraph{compose(g.place, f.place), compose(g.link, f.link)};
}

FuzzyPlaceGraph tensor(const FuzzyPlaceGraph& f, const FuzzyPlaceGraph& g)
{
    require_same_frame(f.frame, g.frame);
    require_disjoint(f.nodes, g.nodes, "node");
    FuzzyPlaceGraph out{f.frame,
                        Signature::merge(f.signature, g.signature),
                        f.inner + g.inner,
                        f.outer + g.outer,
                        f.nodes,
                        disjoint_union(f.ctrl, g.ctrl),
                        f.prnt};
    out.nodes.insert(g.nodes.begin(), g.nodes.end());
    auto shift = [&](const Term& t) {
        if (t.is(TermKind::Site))
            return Term::site(t.index() + f.inner);
        if (t.is(TermKind::Root))
            return Term::root(t.index() + f.outer);
        return t;
    };
    out.prnt = disjoint_union(out.prnt, g.prnt.renamed(shift));
    return out;
}

FuzzyLinkGraph tensor(const FuzzyLinkGraph& f, const FuzzyLinkGraph& g)
{
    require_same_frame(f.frame, g.frame);
    require_disjoint_names(f.inner, g.inner, "inner");
    require_disjoint_names(f.outer, g.outer, "outer");
    require_disjoint(f.nodes, g.nodes, "node");
    require_disjoint(f.edges, g.edges, "edge");
    FuzzyLinkGraph out{f.frame,
                       Signature::merge(f.signature, g.signature),
                       f.inner,
                       f.outer,
                       f.nodes,
                       f.edges,
                       disjoint_union(f.ctrl, g.ctrl),
                       disjoint_union(f.link, g.link)};
    out.inner.insert(g.inner.begin(), g.inner.end());
    out.outer.insert(g.outer.begin(), g.outer.end());
    out.nodes.insert(g.nodes.begin(), g.nodes.end());
    out.edges.insert(g.edges.begin(), g.edges.end());
    return out;
}

FuzzyBigraph tensor(const FuzzyBigraph& f, const FuzzyBigraph& g)
{
    // Link first so name clashes are reported before anything else.
    auto link = tensor(f.link, g.link);
    return FuzzyBigraph{tensor(f.place, g.place), std::move(link)};
}

namespace {

FuzzyRelation fuzzify_ctrl(const std::map<std::string, std::string>& ctrl, const Frame& frame)
{
    FuzzyRelation out(frame);
    for (const auto& [v, k] : ctrl)
        out.set(Term::node(v), Term::control(k), frame.top());
    return out;
}

FuzzyRelation fuzzify_map(const std::map<Term, Term>& m, const Frame& frame)
{
    FuzzyRelation out(frame);
    for (const auto& [a, b] : m)
        out.set(a, b, frame.top());
    return out;
}

std::map<Term, Term> defuzzify_map(const FuzzyRelation& r, const char* what)
{
    std::map<Term, Term> out;
    for (const auto& [key, degree] : r.entries()) {
        if (!degree.is_top())
            throw NotCrisp(std::string(what) + " entry (" + key.first.to_string() + ", " +
                           key.second.to_string() + ") has degree " + degree.to_string());
        if (!out.emplace(key.first, key.second).second)
            throw NotCrisp(std::string(what) + " relates " + key.first.to_string() +
                           " to more than one target");
    }
    return out;
}

std::map<std::string, std::string> defuzzify_ctrl(const FuzzyRelation& r)
{
    std::map<std::string, std::string> out;
    for (const auto& [from, to] : defuzzify_map(r, "ctrl~"))
        out.emplace(from.id(), to.id());
    return out;
}

} // namespace

FuzzyPlaceGraph fuzzify(const crisp::PlaceGraph& g, const Frame& frame)
{
    return FuzzyPlaceGraph{frame,      g.signature, g.inner, g.outer, g.nodes, fuzzify_ctrl(g.ctrl, frame),
                           fuzzify_map(g.prnt, frame)};
}

FuzzyLinkGraph fuzzify(const crisp::LinkGraph& g, const Frame& frame)
{
    return FuzzyLinkGraph{frame,   g.signature, g.inner, g.outer, g.nodes, g.edges, fuzzify_ctrl(g.ctrl, frame),
                          fuzzify_map(g.link, frame)};
}

FuzzyBigraph fuzzify(const crisp::Bigraph& b, const Frame& frame)
{
    return FuzzyBigraph{fuzzify(b.place, frame), fuzzify(b.link, frame)};
}

crisp::PlaceGraph defuzzify(const FuzzyPlaceGraph& g)
{
    return crisp::PlaceGraph{g.signature, g.inner, g.outer, g.nodes, defuzzify_ctrl(g.ctrl),
                             defuzzify_map(g.prnt, "prnt~")};
}

crisp::LinkGraph defuzzify(const FuzzyLinkGraph& g)
{
    return crisp::LinkGraph{g.signature, g.inner,  g.outer, g.nodes, g.edges, defuzzify_ctrl(g.ctrl),
                            defuzzify_map(g.link, "link~")};
}

crisp::Bigraph defuzzify(const FuzzyBigraph& b) { return crisp::Bigraph{defuzzify(b.place), defuzzify(b.link)}; }

} // namespace fbg
