#include "fbg/type2.hpp"

#include "fbg/error.hpp"

namespace fbg::type2 {

namespace {

void require_on_carrier(const FuzzyRelation& rho, TermKind kind, const FuzzySet& from, const FuzzySet& to,
                        const char* name)
{
    for (const auto& [key, degree] : rho.entries()) {
        const auto& [a, b] = key;
        if (!a.is(kind) || !b.is(kind))
            throw MalformedTranslation(std::string(name) + " relates " + a.to_string() + " and " +
                                       b.to_string() + ", which are of the wrong sort");
        if (!from.contains(a))
            throw MalformedTranslation(std::string(name) + " has an entry from " + a.to_string() +
                                       " outside the support of F");
        if (!to.contains(b))
            throw MalformedTranslation(std::string(name) + " has an entry to " + b.to_string() +
                                       " outside the support of G");
    }
}

/// The bijection underlying ρ~, read off its positive entries.
std::map<Term, Term> as_bijection(const FuzzyRelation& rho, TermKind kind, const FuzzySet& from,
                                  const char* name)
{
    std::map<Term, Term> out;
    std::set<Term> image;
    for (const auto& [key, degree] : rho.entries()) {
        const auto& [a, b] = key;
        if (!a.is(kind) || !b.is(kind) || !from.contains(a))
            throw MalformedTranslation(std::string(name) + " relates terms outside the support of F");
        if (!out.emplace(a, b).second)
            throw MalformedTranslation(std::string(name) + " relates " + a.to_string() + " to several terms");
        if (!image.insert(b).second)
            throw MalformedTranslation(std::string(name) + " is not injective at " + b.to_string());
    }
    if (out.size() != from.size())
        throw MalformedTranslation(std::string(name) + " is not defined on the whole support of F");
    return out;
}

PropertyCheck inequality(std::string name, const FuzzyRelation& smaller, const FuzzyRelation& larger)
{
    PropertyCheck check{std::move(name), true, {}};
    if (auto k = first_excess(smaller, larger)) {
        check.passed = false;
        check.witness = "at (" + k->first.to_string() + ", " + k->second.to_string() + "): " +
                        smaller.at(k->first, k->second).to_string() + " vs " +
                        larger.at(k->first, k->second).to_string();
    }
    return check;
}

PropertyCheck memberships(std::string name, const FuzzyRelation& rho, const FuzzySet& target)
{
    PropertyCheck check{std::move(name), true, {}};
    for (const auto& [key, degree] : rho.entries()) {
        if (degree != target.at(key.second)) {
            check.passed = false;
            check.witness = "at (" + key.first.to_string() + ", " + key.second.to_string() + "): " +
                            degree.to_string() + " but the membership of " + key.second.to_string() +
                            " is " + target.at(key.second).to_string();
            break;
        }
    }
    return check;
}

std::set<Term> range(std::size_t n, Term (*make)(std::size_t))
{
    std::set<Term> out;
    for (std::size_t i = 0; i < n; ++i)
        out.insert(make(i));
    return out;
}

std::set<Term> names(const NameSet& set, Term (*make)(std::string))
{
    std::set<Term> out;
    for (const auto& x : set)
        out.insert(make(x));
    return out;
}

/// ρ~_P((v, i), (v', i)) = ρ~_V(v, v') on the ports of F and G.
FuzzyRelation port_relation(const FuzzyRelation& rho_v, const std::set<Term>& ports_f,
                            const std::set<Term>& ports_g)
{
    FuzzyRelation out(rho_v.frame());
    for (const auto& [key, degree] : rho_v.entries()) {
        for (auto p = ports_f.lower_bound(Term::port(key.first.id(), 0));
             p != ports_f.end() && p->id() == key.first.id(); ++p) {
            Term q = Term::port(key.second.id(), p->index());
            if (ports_g.contains(q))
                out.set(*p, q, degree);
        }
    }
    return out;
}

PropertyCheck port_check(const FuzzyRelation& rho_v, const FuzzyRelation& rho_p, const std::set<Term>& ports_f,
                         const std::set<Term>& ports_g)
{
    PropertyCheck check{"ports", true, {}};
    auto fail = [&](std::string witness) {
        if (check.passed) {
            check.passed = false;
            check.witness = std::move(witness);
        }
    };
    for (const auto& [key, degree] : rho_v.entries()) {
        const auto& [v, w] = key;
        for (auto p = ports_f.lower_bound(Term::port(v.id(), 0)); p != ports_f.end() && p->id() == v.id(); ++p) {
            Term q = Term::port(w.id(), p->index());
            if (!leq(degree, rho_p.at(*p, q)))
                fail(p->to_string() + " has no counterpart " + q.to_string() + " in G");
        }
        for (auto q = ports_g.lower_bound(Term::port(w.id(), 0)); q != ports_g.end() && q->id() == w.id(); ++q) {
            Term p = Term::port(v.id(), q->index());
            if (!leq(degree, rho_p.at(p, *q)))
                fail(q->to_string() + " of G has no counterpart " + p.to_string() + " in F");
        }
    }
    return check;
}

} // namespace

TranslationReport check_support_translation(const FuzzyRelation& rho_v, const FuzzyRelation& rho_e,
                                            const Bigraph& f, const Bigraph& g,
                                            const TranslationOptions& options)
{
    if (f.inner() != g.inner() || f.outer() != g.outer())
        throw InterfaceMismatch("interface mismatch: F is " + f.inner().to_string() + " -> " +
                                f.outer().to_string() + " but G is " + g.inner().to_string() + " -> " +
                                g.outer().to_string());
    const Frame& frame = f.frame();
    if (g.frame() != frame || rho_v.frame() != frame || rho_e.frame() != frame)
        throw InstanceMismatch("F, G and the translation must share one frame");
    require_on_carrier(rho_v, TermKind::Node, f.link().nodes, g.link().nodes, "rho_V");
    require_on_carrier(rho_e, TermKind::Edge, f.link().edges, g.link().edges, "rho_E");

    TranslationReport report;
    report.checks.push_back(memberships("node-membership", rho_v, g.link().nodes));
    report.checks.push_back(memberships("edge-membership", rho_e, g.link().edges));
    report.checks.push_back(inequality("controls", compose(rho_v, g.link().ctrl), f.link().ctrl));

    const auto ports_f = ports(f.link());
    const auto ports_g = ports(g.link());
    const auto rho_p = port_relation(rho_v, ports_f, ports_g);
    report.checks.push_back(port_check(rho_v, rho_p, ports_f, ports_g));

    const auto sites = range(f.place().inner, &Term::site);
    const auto roots = range(f.place().outer, &Term::root);
    const auto id_m_rho = disjoint_union(identity_relation(frame, sites), rho_v);
    const auto id_n_rho = disjoint_union(identity_relation(frame, roots), rho_v);
    report.checks.push_back(
        inequality("parents", compose(id_m_rho, g.place().prnt), compose(f.place().prnt, id_n_rho)));

    const auto inner_names = names(f.link().inner, &Term::inner_name);
    const auto outer_names = names(f.link().outer, &Term::outer_name);
    if (options.literal_link_inequality) {
        const auto id_x_rho = disjoint_union(identity_relation(frame, inner_names), rho_v);
        report.checks.push_back(
            inequality("links", compose(id_x_rho, g.link().link), compose(f.place().prnt, id_n_rho)));
    } else {
        const auto id_x_rho = disjoint_union(identity_relation(frame, inner_names), rho_p);
        const auto id_y_rho = disjoint_union(identity_relation(frame, outer_names), rho_e);
        report.checks.push_back(
            inequality("links", compose(id_x_rho, g.link().link), compose(f.link().link, id_y_rho)));
    }

    PropertyCheck equivalence{"equivalence", support_equivalent(rho_v, rho_e, f, g), {}};
    if (!equivalence.passed)
        equivalence.witness = "G is not the bigraph determined by F and the translation";
    report.checks.push_back(equivalence);
    return report;
}

bool support_equivalent(const FuzzyRelation& rho_v, const FuzzyRelation& rho_e, const Bigraph& f,
                        const Bigraph& g)
{
    try {
        return apply_translation(rho_v, rho_e, f) == g;
    } catch (const MalformedTranslation&) {
        return false;
    } catch (const InterfaceMismatch&) {
        return false;
    }
}

std::pair<FuzzyRelation, FuzzyRelation> fuzzy_translation(const SupportTranslation& renaming,
                                                          const Bigraph& target)
{
    const Frame& frame = target.frame();
    FuzzyRelation rho_v(frame), rho_e(frame);
    for (const auto& [a, b] : renaming.nodes)
        rho_v.set(Term::node(a), Term::node(b), target.link().nodes.at(Term::node(b)));
    for (const auto& [a, b] : renaming.edges)
        rho_e.set(Term::edge(a), Term::edge(b), target.link().edges.at(Term::edge(b)));
    return {rho_v, rho_e};
}

Bigraph apply_translation(const FuzzyRelation& rho_v, const FuzzyRelation& rho_e, const Bigraph& f)
{
    const auto nodes = as_bijection(rho_v, TermKind::Node, f.link().nodes, "rho_V");
    const auto edges = as_bijection(rho_e, TermKind::Edge, f.link().edges, "rho_E");
    auto rename = [&](const Term& t) {
        switch (t.kind()) {
        case TermKind::Node:
            return nodes.at(t);
        case TermKind::Edge:
            return edges.at(t);
        case TermKind::Port:
            return Term::port(nodes.at(Term::node(t.id())).id(), t.index());
        default:
            return t;
        }
    };
    PlaceGraph place = f.place();
    place.nodes = f.place().nodes.renamed(rename);
    place.ctrl = f.place().ctrl.renamed(rename);
    place.prnt = f.place().prnt.renamed(rename);
    LinkGraph link = f.link();
    link.nodes = place.nodes;
    link.edges = f.link().edges.renamed(rename);
    link.ctrl = place.ctrl;
    link.link = f.link().link.renamed(rename);
    return Bigraph(std::move(place), std::move(link));
}

} // namespace fbg::type2
