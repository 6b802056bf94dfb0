#include "fbg/crisp.hpp"

#include "fbg/error.hpp"
#include "fbg/fuzzy.hpp"

namespace fbg::crisp {

std::set<Term> ports(const Signature& signature, const std::map<std::string, std::string>& ctrl)
{
    std::set<Term> out;
    for (const auto& [v, k] : ctrl) {
        if (!signature.has(k))
            continue;
        for (std::size_t i = 0; i < signature.arity_of(k); ++i)
            out.insert(Term::port(v, i));
    }
    return out;
}

bool is_hypergraph(const std::set<std::string>& vertices,
                   const std::vector<std::set<std::string>>& edge_family)
{
    std::set<std::string> covered;
    for (const auto& e : edge_family) {
        if (e.empty())
            return false;
        for (const auto& v : e) {
            if (!vertices.contains(v))
                return false;
            covered.insert(v);
        }
    }
    return covered == vertices;
}

namespace {

void check_ctrl(const Signature& signature, const std::set<std::string>& nodes,
                const std::map<std::string, std::string>& ctrl, ValidationReport& report)
{
    for (const auto& v : nodes)
        if (!ctrl.contains(v))
            report.add("totality", "node " + v + " has no control");
    for (const auto& [v, k] : ctrl) {
        if (!nodes.contains(v))
            report.add("domain", "ctrl assigns a control to unknown node " + v);
        if (!signature.has(k))
            report.add("control", "node " + v + " has control " + k + " outside the signature");
    }
}

void check_prnt(const PlaceGraph& g, ValidationReport& report)
{
    for (std::size_t i = 0; i < g.inner; ++i)
        if (!g.prnt.contains(Term::site(i)))
            report.add("totality", "site " + std::to_string(i) + " has no parent");
    for (const auto& v : g.nodes)
        if (!g.prnt.contains(Term::node(v)))
            report.add("totality", "node " + v + " has no parent");
    for (const auto& [child, parent] : g.prnt) {
        const bool child_ok = (child.is(TermKind::Site) && child.index() < g.inner) ||
                              (child.is(TermKind::Node) && g.nodes.contains(child.id()));
        if (!child_ok)
            report.add("domain", "prnt is defined on " + child.to_string());
        const bool parent_ok = (parent.is(TermKind::Root) && parent.index() < g.outer) ||
                               (parent.is(TermKind::Node) && g.nodes.contains(parent.id()));
        if (!parent_ok)
            report.add("codomain", child.to_string() + " has parent " + parent.to_string() +
                                       " outside nodes and roots");
    }
    // Following prnt from any node must leave the node set within |V| steps.
    for (const auto& v : g.nodes) {
        Term at = Term::node(v);
        std::size_t steps = 0;
        while (at.is(TermKind::Node) && steps <= g.nodes.size()) {
            auto it = g.prnt.find(at);
            if (it == g.prnt.end())
                break;
            at = it->second;
            ++steps;
        }
        if (at.is(TermKind::Node) && steps > g.nodes.size()) {
            report.add("acyclicity", "node " + v + " lies on or above a prnt cycle");
        }
    }
}

void check_link(const LinkGraph& g, ValidationReport& report)
{
    const auto all_ports = ports(g.signature, g.ctrl);
    for (const auto& x : g.inner)
        if (!g.link.contains(Term::inner_name(x)))
            report.add("totality", "inner name " + x + " is not linked");
    for (const auto& p : all_ports)
        if (!g.link.contains(p))
            report.add("totality", p.to_string() + " is not linked");
    for (const auto& [point, target] : g.link) {
        if (point.is(TermKind::Port)) {
            if (!g.nodes.contains(point.id()))
                report.add("domain", point.to_string() + " belongs to an unknown node");
            else if (!all_ports.contains(point))
                report.add("arity", point.to_string() + " exceeds the arity of its control");
        } else if (!point.is(TermKind::InnerName) || !g.inner.contains(point.id())) {
            report.add("domain", "link is defined on " + point.to_string());
        }
        const bool target_ok = (target.is(TermKind::Edge) && g.edges.contains(target.id())) ||
                               (target.is(TermKind::OuterName) && g.outer.contains(target.id()));
        if (!target_ok)
            report.add("codomain", point.to_string() + " is linked to " + target.to_string() +
                                       " outside edges and outer names");
    }
}

} // namespace

ValidationReport validate(const PlaceGraph& g)
{
    ValidationReport report;
    check_ctrl(g.signature, g.nodes, g.ctrl, report);
    check_prnt(g, report);
    return report;
}

ValidationReport validate(const LinkGraph& g)
{
    ValidationReport report;
    check_ctrl(g.signature, g.nodes, g.ctrl, report);
    check_link(g, report);
    return report;
}

ValidationReport validate_bigraph(const Bigraph& b)
{
    ValidationReport report;
    check_ctrl(b.place.signature, b.place.nodes, b.place.ctrl, report);
    check_prnt(b.place, report);
    check_link(b.link, report);
    if (b.place.nodes != b.link.nodes)
        report.add("shared-support", "place and link parts have different node sets");
    if (b.place.ctrl != b.link.ctrl)
        report.add("shared-support", "place and link parts have different control maps");
    if (b.place.signature != b.link.signature)
        report.add("shared-support", "place and link parts have different signatures");
    return report;
}

Bigraph identity(const Interface& at, const Signature& signature)
{
    Bigraph out;
    out.place.signature = signature;
    out.link.signature = signature;
    out.place.inner = out.place.outer = at.width;
    for (std::size_t i = 0; i < at.width; ++i)
        out.place.prnt.emplace(Term::site(i), Term::root(i));
    out.link.inner = out.link.outer = at.names;
    for (const auto& x : at.names)
        out.link.link.emplace(Term::inner_name(x), Term::outer_name(x));
    return out;
}

Bigraph compose(const Bigraph& g, const Bigraph& f)
{
    return defuzzify(fbg::compose(fuzzify(g), fuzzify(f)));
}

Bigraph tensor(const Bigraph& f, const Bigraph& g)
{
    return defuzzify(fbg::tensor(fuzzify(f), fuzzify(g)));
}

} // namespace fbg::crisp
