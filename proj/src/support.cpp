#include "fbg/support.hpp"

#include "fbg/error.hpp"

#include <algorithm>

namespace fbg {

BigraphSupport support(const FuzzyBigraph& f)
{
    BigraphSupport out;
    for (const auto& v : f.place.nodes)
        out.place.insert(Term::node(v));
    out.link = out.place;
    for (const auto& v : f.link.nodes)
        out.link.insert(Term::node(v));
    for (const auto& e : f.link.edges)
        out.link.insert(Term::edge(e));
    return out;
}

SupportTranslation SupportTranslation::identity_on(const FuzzyBigraph& f)
{
    SupportTranslation rho;
    for (const auto& v : f.place.nodes)
        rho.nodes.emplace(v, v);
    for (const auto& e : f.link.edges)
        rho.edges.emplace(e, e);
    return rho;
}

SupportTranslation SupportTranslation::inverse() const
{
    SupportTranslation out;
    for (const auto& [a, b] : nodes)
        out.nodes.emplace(b, a);
    for (const auto& [a, b] : edges)
        out.edges.emplace(b, a);
    return out;
}

bool TranslationReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const PropertyCheck* TranslationReport::find(std::string_view property) const
{
    for (const auto& c : checks)
        if (c.property == property)
            return &c;
    return nullptr;
}

bool TranslationReport::passed(std::string_view property) const
{
    const auto* c = find(property);
    return c != nullptr && c->passed;
}

namespace {

void require_bijection(const std::map<std::string, std::string>& map, const std::set<std::string>& from,
                       const std::set<std::string>& to, const char* what)
{
    std::set<std::string> keys, image;
    for (const auto& [a, b] : map) {
        keys.insert(a);
        image.insert(b);
    }
    if (keys != from)
        throw MalformedTranslation(std::string("rho_") + what + " is not defined on exactly the " + what +
                                   " support of F");
    if (image.size() != map.size())
        throw MalformedTranslation(std::string("rho_") + what + " is not injective");
    if (image != to)
        throw MalformedTranslation(std::string("rho_") + what + " does not map onto the " + what +
                                   " support of G");
}

std::string describe(const FuzzyRelation::Key& k, const FuzzyRelation& lhs, const FuzzyRelation& rhs)
{
    return "at (" + k.first.to_string() + ", " + k.second.to_string() + "): " +
           lhs.at(k.first, k.second).to_string() + " vs " + rhs.at(k.first, k.second).to_string();
}

PropertyCheck inequality(std::string name, const FuzzyRelation& smaller, const FuzzyRelation& larger)
{
    PropertyCheck check{std::move(name), true, {}};
    if (auto k = first_excess(smaller, larger)) {
        check.passed = false;
        check.witness = describe(*k, smaller, larger);
    }
    return check;
}

} // namespace

FuzzyRelation induced_node_relation(const SupportTranslation& rho, const Frame& frame)
{
    FuzzyRelation out(frame);
    for (const auto& [a, b] : rho.nodes)
        out.set(Term::node(a), Term::node(b), frame.top());
    return out;
}

FuzzyRelation induced_edge_relation(const SupportTranslation& rho, const Frame& frame)
{
    FuzzyRelation out(frame);
    for (const auto& [a, b] : rho.edges)
        out.set(Term::edge(a), Term::edge(b), frame.top());
    return out;
}

TranslationReport check_support_translation(const SupportTranslation& rho, const FuzzyBigraph& f,
                                            const FuzzyBigraph& g)
{
    if (f.inner() != g.inner() || f.outer() != g.outer())
        throw InterfaceMismatch("interface mismatch: F is " + f.inner().to_string() + " -> " +
                                f.outer().to_string() + " but G is " + g.inner().to_string() + " -> " +
                                g.outer().to_string());
    if (f.frame() != g.frame())
        throw InstanceMismatch("F and G use different frames");
    require_bijection(rho.nodes, f.place.nodes, g.place.nodes, "V");
    require_bijection(rho.edges, f.link.edges, g.link.edges, "E");

    const Frame& frame = f.frame();
    const FuzzyRelation rho_v = induced_node_relation(rho, frame);
    const FuzzyRelation rho_e = induced_edge_relation(rho, frame);
    TranslationReport report;

    // controls: (v', k) ↦ ⋁_v ρ~_V(v, v') ∧ ctrl~_F(v, k)
    report.checks.push_back(inequality("controls", compose(transpose(rho_v), f.place.ctrl), g.place.ctrl));

    // ports
    const auto ports_f = ports_fuzzy(f.link);
    const auto ports_g = ports_fuzzy(g.link);
    FuzzyRelation rho_p(frame);
    PropertyCheck ports{"ports", true, {}};
    std::set<Term> image;
    for (const auto& p : ports_f) {
        auto target = rho.nodes.find(p.id());
        if (target == rho.nodes.end()) {
            ports.passed = false;
            ports.witness = p.to_string() + " belongs to a node outside the support";
            break;
        }
        Term q = Term::port(target->second, p.index());
        if (!ports_g.contains(q)) {
            ports.passed = false;
            ports.witness = p.to_string() + " maps to " + q.to_string() + " which is not a port of G";
            break;
        }
        rho_p.set(p, q, frame.top());
        image.insert(q);
    }
    if (ports.passed && image != ports_g) {
        ports.passed = false;
        for (const auto& q : ports_g)
            if (!image.contains(q)) {
                ports.witness = q.to_string() + " of G has no preimage";
                break;
            }
    }
    report.checks.push_back(ports);

    // parents
    std::set<Term> sites, roots, inner_names, outer_names;
    for (std::size_t i = 0; i < f.place.inner; ++i)
        sites.insert(Term::site(i));
    for (std::size_t i = 0; i < f.place.outer; ++i)
        roots.insert(Term::root(i));
    for (const auto& x : f.link.inner)
        inner_names.insert(Term::inner_name(x));
    for (const auto& y : f.link.outer)
        outer_names.insert(Term::outer_name(y));

    const auto id_m_rho = disjoint_union(identity_relation(frame, sites), rho_v);
    const auto id_n_rho = disjoint_union(identity_relation(frame, roots), rho_v);
    report.checks.push_back(
        inequality("parents", compose(f.place.prnt, id_n_rho), compose(id_m_rho, g.place.prnt)));

    // links
    const auto id_x_rho = disjoint_union(identity_relation(frame, inner_names), rho_p);
    const auto id_y_rho = disjoint_union(identity_relation(frame, outer_names), rho_e);
    report.checks.push_back(
        inequality("links", compose(f.link.link, id_y_rho), compose(id_x_rho, g.link.link)));
    return report;
}

FuzzyBigraph apply_translation(const SupportTranslation& rho, const FuzzyBigraph& f)
{
    auto rename = [&](const Term& t) {
        switch (t.kind()) {
        case TermKind::Node:
            return Term::node(rho.nodes.at(t.id()));
        case TermKind::Edge:
            return Term::edge(rho.edges.at(t.id()));
        case TermKind::Port:
            return Term::port(rho.nodes.at(t.id()), t.index());
        default:
            return t;
        }
    };
    auto rename_set = [](const std::set<std::string>& s, const std::map<std::string, std::string>& m) {
        std::set<std::string> out;
        for (const auto& x : s)
            out.insert(m.at(x));
        return out;
    };
    FuzzyBigraph g = f;
    g.place.nodes = rename_set(f.place.nodes, rho.nodes);
    g.place.ctrl = f.place.ctrl.renamed(rename);
    g.place.prnt = f.place.prnt.renamed(rename);
    g.link.nodes = g.place.nodes;
    g.link.edges = rename_set(f.link.edges, rho.edges);
    g.link.ctrl = g.place.ctrl;
    g.link.link = f.link.link.renamed(rename);
    return g;
}

} // namespace fbg
