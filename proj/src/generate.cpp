#include "fbg/generate.hpp"

#include "fbg/error.hpp"

#include <algorithm>
#include <vector>

namespace fbg::gen {

namespace {

constexpr std::int64_t max_denominator = 12;

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items)
{
    std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
    return items[d(rng)];
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Rational> carrier_between(const FrameValue& lo, const FrameValue& hi)
{
    const Frame& frame = lo.frame();
    std::vector<Rational> out;
    const Rational a = lo.rational();
    const Rational b = hi.rational();
    if (frame.kind() == FrameKind::UnitInterval) {
        std::set<Rational> seen{a, b};
        for (std::int64_t q = 1; q <= max_denominator; ++q)
            for (std::int64_t p = 0; p <= q; ++p) {
                Rational r(p, q);
                if (a <= r && r <= b)
                    seen.insert(r);
            }
        out.assign(seen.begin(), seen.end());
    } else {
        for (std::int64_t k = a.numerator(); k <= b.numerator(); ++k)
            out.emplace_back(k);
    }
    return out;
}

std::vector<std::string> control_names(const Signature& signature)
{
    std::vector<std::string> out;
    for (const auto& [k, arity] : signature.arity)
        out.push_back(k);
    return out;
}

std::vector<std::string> ids(const std::string& prefix, char sort, std::size_t count)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(prefix + sort + std::to_string(i));
    return out;
}

/// Between one and two distinct elements of `candidates`.
std::vector<Term> some_of(Rng& rng, const std::vector<Term>& candidates)
{
    if (candidates.empty())
        return {};
    std::vector<Term> out{pick(rng, candidates)};
    if (candidates.size() > 1 && chance(rng, 0.3)) {
        Term other = pick(rng, candidates);
        if (other != out.front())
            out.push_back(other);
    }
    return out;
}

FuzzyRelation random_ctrl(Rng& rng, const std::vector<std::string>& nodes, const Options& options)
{
    const auto controls = control_names(options.signature);
    FuzzyRelation ctrl(options.frame);
    std::vector<Term> control_terms;
    for (const auto& k : controls)
        control_terms.push_back(Term::control(k));
    for (const auto& v : nodes)
        for (const auto& k : some_of(rng, control_terms))
            ctrl.set(Term::node(v), k, random_degree(rng, options.frame, options.top_bias));
    return ctrl;
}

/// Parents for sites and nodes; node i only ever points to nodes j > i.
template <class Degree>
FuzzyRelation random_prnt(Rng& rng, std::size_t inner, std::size_t outer, const std::vector<std::string>& nodes,
                          const Frame& frame, Degree degree)
{
    FuzzyRelation prnt(frame);
    std::vector<Term> roots;
    for (std::size_t j = 0; j < outer; ++j)
        roots.push_back(Term::root(j));
    auto candidates_above = [&](std::size_t first) {
        std::vector<Term> out = roots;
        for (std::size_t j = first; j < nodes.size(); ++j)
            out.push_back(Term::node(nodes[j]));
        return out;
    };
    if (inner > 0) {
        const auto all = candidates_above(0);
        for (std::size_t i = 0; i < inner; ++i)
            for (const auto& p : some_of(rng, all))
                prnt.set(Term::site(i), p, degree(Term::site(i), p));
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto& p : some_of(rng, candidates_above(i + 1)))
            prnt.set(Term::node(nodes[i]), p, degree(Term::node(nodes[i]), p));
    return prnt;
}

template <class Degree>
FuzzyRelation random_link(Rng& rng, const std::vector<Term>& points, const NameSet& outer,
                          const std::vector<std::string>& edges, const Frame& frame, Degree degree)
{
    FuzzyRelation link(frame);
    std::vector<Term> links;
    for (const auto& e : edges)
        links.push_back(Term::edge(e));
    for (const auto& y : outer)
        links.push_back(Term::outer_name(y));
    for (const auto& q : points)
        for (const auto& l : some_of(rng, links))
            link.set(q, l, degree(q, l));
    return link;
}

std::size_t node_count(Rng& rng, std::size_t outer, const Options& options)
{
    // With no roots there is nowhere for a node to sit.
    return outer == 0 ? 0 : uniform(rng, 0, options.max_nodes);
}

std::size_t edge_count(Rng& rng, bool has_points, const NameSet& outer, const Options& options)
{
    std::size_t n = uniform(rng, 0, options.max_edges);
    if (n == 0 && has_points && outer.empty())
        n = 1;
    return n;
}

std::vector<Term> points_of(const NameSet& inner, const std::set<Term>& ports)
{
    std::vector<Term> out;
    for (const auto& x : inner)
        out.push_back(Term::inner_name(x));
    out.insert(out.end(), ports.begin(), ports.end());
    return out;
}

} // namespace

Signature default_signature() { return Signature{{{"K", 1}, {"L", 2}, {"M", 0}}}; }

FrameValue random_value(Rng& rng, const Frame& frame)
{
    return frame.value(pick(rng, carrier_between(frame.bottom(), frame.top())));
}

FrameValue random_degree(Rng& rng, const Frame& frame, double top_bias)
{
    if (chance(rng, top_bias))
        return frame.top();
    return random_between(rng, frame.bottom(), frame.top());
}

FrameValue random_between(Rng& rng, const FrameValue& lo, const FrameValue& hi)
{
    auto values = carrier_between(lo, hi);
    if (values.front() == Rational(0))
        values.erase(values.begin());
    return lo.frame().value(pick(rng, values));
}

Interface random_interface(Rng& rng, const Options& options)
{
    Interface out;
    out.width = uniform(rng, 1, options.max_width);
    for (std::size_t i = 0; i < options.max_names; ++i)
        if (chance(rng, 0.5))
            out.names.insert("x" + std::to_string(i));
    return out;
}

FuzzyPlaceGraph random_fuzzy_place(Rng& rng, std::size_t inner, std::size_t outer, const std::string& prefix,
                                   const Options& options)
{
    const auto nodes = ids(prefix, 'v', node_count(rng, outer, options));
    FuzzyPlaceGraph g{options.frame, options.signature, inner, outer, {nodes.begin(), nodes.end()},
                      random_ctrl(rng, nodes, options), FuzzyRelation(options.frame)};
    g.prnt = random_prnt(rng, inner, outer, nodes, options.frame,
                         [&](const Term&, const Term&) { return random_degree(rng, options.frame, options.top_bias); });
    return g;
}

FuzzyBigraph random_fuzzy_bigraph(Rng& rng, const Interface& inner, const Interface& outer,
                                  const std::string& prefix, const Options& options)
{
    FuzzyPlaceGraph place = random_fuzzy_place(rng, inner.width, outer.width, prefix, options);
    const auto points = points_of(inner.names, ports_fuzzy(options.signature, place.ctrl));
    const auto edges = ids(prefix, 'e', edge_count(rng, !points.empty(), outer.names, options));
    FuzzyLinkGraph link{options.frame, options.signature, inner.names, outer.names, place.nodes,
                        {edges.begin(), edges.end()}, place.ctrl, FuzzyRelation(options.frame)};
    link.link = random_link(rng, points, outer.names, edges, options.frame, [&](const Term&, const Term&) {
        return random_degree(rng, options.frame, options.top_bias);
    });
    return make_bigraph(std::move(place), std::move(link));
}

FuzzyTriple random_fuzzy_triple(Rng& rng, const Options& options)
{
    const Interface i = random_interface(rng, options);
    const Interface j = random_interface(rng, options);
    const Interface k = random_interface(rng, options);
    const Interface m = random_interface(rng, options);
    return {random_fuzzy_bigraph(rng, i, j, "a", options), random_fuzzy_bigraph(rng, j, k, "b", options),
            random_fuzzy_bigraph(rng, k, m, "c", options)};
}

type2::Bigraph random_type2_bigraph(Rng& rng, const Interface& inner, const Interface& outer,
                                    const std::string& prefix, const Options& options, Type2Mode mode)
{
    const Frame& frame = options.frame;
    const bool coherent = mode == Type2Mode::Coherent;
    const FrameValue beta = random_degree(rng, frame, options.top_bias);
    const FrameValue delta = random_degree(rng, frame, options.top_bias);
    const FrameValue floor = coherent ? join(beta, delta) : frame.bottom();

    const auto nodes = ids(prefix, 'v', node_count(rng, outer.width, options));
    FuzzySet node_set(frame);
    for (const auto& v : nodes)
        node_set.set(Term::node(v), random_between(rng, floor, frame.top()));
    const FuzzyRelation ctrl = random_ctrl(rng, nodes, options);

    auto membership = [&](const FuzzySet& set, const Term& t) {
        return t.is(TermKind::Node) || t.is(TermKind::Edge) ? set.at(t) : frame.top();
    };

    type2::PlaceGraph place{frame, options.signature, inner.width, outer.width, node_set, ctrl,
                            FuzzyRelation(frame), beta};
    place.prnt = random_prnt(rng, inner.width, outer.width, nodes, frame, [&](const Term& w, const Term& u) {
        if (!coherent)
            return random_degree(rng, frame, options.top_bias);
        return random_between(rng, beta, meet(membership(node_set, w), membership(node_set, u)));
    });

    const auto port_set = type2::ports(options.signature, ctrl, node_set);
    const auto points = points_of(inner.names, port_set);
    const auto edges = ids(prefix, 'e', edge_count(rng, !points.empty(), outer.names, options));
    FuzzySet edge_set(frame);
    for (const auto& e : edges)
        edge_set.set(Term::edge(e), random_between(rng, coherent ? delta : frame.bottom(), frame.top()));

    type2::LinkGraph link{frame,    options.signature, inner.names,          outer.names, node_set,
                          edge_set, ctrl,              FuzzyRelation(frame), delta};
    link.link = random_link(rng, points, outer.names, edges, frame, [&](const Term& q, const Term& l) {
        if (!coherent)
            return random_degree(rng, frame, options.top_bias);
        const FrameValue source = q.is(TermKind::Port) ? node_set.at(Term::node(q.id())) : frame.top();
        return random_between(rng, delta, meet(source, membership(edge_set, l)));
    });
    return type2::Bigraph(std::move(place), std::move(link));
}

std::vector<NamedType2> random_type2_arrows(Rng& rng, std::size_t count, std::size_t objects,
                                            const Options& options)
{
    std::vector<Interface> pool;
    for (std::size_t i = 0; i < std::max<std::size_t>(objects, 1); ++i)
        pool.push_back(random_interface(rng, options));
    std::vector<NamedType2> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::string name = "f" + std::to_string(i);
        out.push_back({name, random_type2_bigraph(rng, pick(rng, pool), pick(rng, pool), name + "_", options)});
    }
    return out;
}

crisp::Bigraph random_crisp_bigraph(Rng& rng, const Interface& inner, const Interface& outer,
                                    const std::string& prefix, const Options& options)
{
    const auto nodes = ids(prefix, 'v', node_count(rng, outer.width, options));
    const auto controls = control_names(options.signature);
    crisp::Bigraph b;
    b.place.signature = b.link.signature = options.signature;
    b.place.inner = inner.width;
    b.place.outer = outer.width;
    b.place.nodes = b.link.nodes = {nodes.begin(), nodes.end()};
    for (const auto& v : nodes)
        b.place.ctrl[v] = pick(rng, controls);
    b.link.ctrl = b.place.ctrl;

    std::vector<Term> roots;
    for (std::size_t j = 0; j < outer.width; ++j)
        roots.push_back(Term::root(j));
    auto parent_from = [&](std::size_t first) {
        std::vector<Term> out = roots;
        for (std::size_t j = first; j < nodes.size(); ++j)
            out.push_back(Term::node(nodes[j]));
        return pick(rng, out);
    };
    if (roots.empty() && inner.width > 0)
        throw InterfaceMismatch("sites need somewhere to go");
    for (std::size_t i = 0; i < inner.width; ++i)
        b.place.prnt.emplace(Term::site(i), parent_from(0));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        b.place.prnt.emplace(Term::node(nodes[i]), parent_from(i + 1));

    b.link.inner = inner.names;
    b.link.outer = outer.names;
    const auto points = points_of(inner.names, crisp::ports(options.signature, b.place.ctrl));
    const auto edges = ids(prefix, 'e', edge_count(rng, !points.empty(), outer.names, options));
    b.link.edges = {edges.begin(), edges.end()};
    std::vector<Term> links;
    for (const auto& e : edges)
        links.push_back(Term::edge(e));
    for (const auto& y : outer.names)
        links.push_back(Term::outer_name(y));
    for (const auto& q : points)
        if (!links.empty())
            b.link.link.emplace(q, pick(rng, links));
    return b;
}

} // namespace fbg::gen
