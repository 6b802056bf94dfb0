#include "helpers.hpp"
#include "oracle/fuzzy_oracle.hpp"

#include "fbg/error.hpp"
#include "fbg/generate.hpp"

#include <doctest.h>

using namespace fbg;
using namespace helpers;

namespace {

const Signature sig{{{"K", 1}, {"L", 2}}};

struct Parts {
    type2::PlaceGraph place;
    type2::LinkGraph link;
};

/// Empty parts over U with the given interfaces and plausibilities.
Parts parts(std::size_t m, std::size_t n, NameSet x, NameSet y, const char* beta = "1", const char* delta = "1")
{
    Parts p;
    p.place.signature = p.link.signature = sig;
    p.place.inner = m;
    p.place.outer = n;
    p.place.beta = u(beta);
    p.link.inner = std::move(x);
    p.link.outer = std::move(y);
    p.link.delta = u(delta);
    return p;
}

void add_node(Parts& p, const char* v, const char* membership, const char* k = "K")
{
    p.place.nodes.set(node(v), u(membership));
    p.place.ctrl.set(node(v), control(k), U.top());
    p.link.nodes = p.place.nodes;
    p.link.ctrl = p.place.ctrl;
}

type2::Bigraph build(const Parts& p) { return type2::Bigraph(p.place, p.link); }

SupportTranslation priming(const type2::Bigraph& b)
{
    SupportTranslation rho;
    for (const auto& [v, m] : b.link().nodes.entries())
        rho.nodes.emplace(v.id(), v.id() + "'");
    for (const auto& [e, m] : b.link().edges.entries())
        rho.edges.emplace(e.id(), e.id() + "'");
    return rho;
}

/// G renamed along `renaming` with memberships copied, and the graded
/// relations that go with it.
struct Renamed {
    type2::Bigraph g;
    FuzzyRelation rho_v, rho_e;
};

Renamed rename(const type2::Bigraph& f, const SupportTranslation& renaming)
{
    FuzzyRelation rv(f.frame()), re(f.frame());
    for (const auto& [a, b] : renaming.nodes)
        rv.set(Term::node(a), Term::node(b), f.link().nodes.at(Term::node(a)));
    for (const auto& [a, b] : renaming.edges)
        re.set(Term::edge(a), Term::edge(b), f.link().edges.at(Term::edge(a)));
    auto g = type2::apply_translation(rv, re, f);
    return {g, rv, re};
}

type2::Bigraph coherent(std::uint64_t seed, const std::string& prefix = "n")
{
    gen::Rng rng(seed);
    gen::Options options;
    options.max_nodes = 4;
    return gen::random_type2_bigraph(rng, {1, {"x0"}}, {2, {"y"}}, prefix, options);
}

} // namespace

TEST_CASE("gamma is the meet of beta and delta")
{
    auto p = parts(1, 1, {}, {}, "0.7", "0.4");
    p.place.prnt.set(site(0), root(0), U.top());
    auto b = build(p);
    CHECK(b.gamma() == u("0.4"));
    CHECK(type2::validate(b).ok());
    CHECK(type2::identity({2, {"x"}}).gamma() == U.top());
}

TEST_CASE("parts must agree on memberships and controls")
{
    auto p = parts(0, 1, {}, {});
    add_node(p, "a", "0.5");
    p.link.nodes.set(node("a"), u("0.6"));
    CHECK_THROWS_AS(build(p), InterfaceMismatch);
}

TEST_CASE("ports follow the strongest control, least name on ties")
{
    FuzzyRelation ctrl(U);
    FuzzySet nodes(U);
    nodes.set(node("v"), u("0.9"));
    nodes.set(node("w"), u("0.9"));
    ctrl.set(node("v"), control("K"), u("0.3"));
    ctrl.set(node("v"), control("L"), u("0.7"));
    ctrl.set(node("w"), control("K"), u("0.5"));
    ctrl.set(node("w"), control("L"), u("0.5"));
    auto ps = type2::ports(sig, ctrl, nodes);
    CHECK(ps == std::set<Term>{port("v", 0), port("v", 1), port("w", 0)});

    FuzzySet without_v(U);
    without_v.set(node("w"), u("0.9"));
    CHECK(type2::ports(sig, ctrl, without_v) == std::set<Term>{port("w", 0)});
}

TEST_CASE("validation flags entries touching absent nodes")
{
    auto p = parts(0, 1, {}, {});
    add_node(p, "a", "0.5");
    p.place.prnt.set(node("a"), root(0), u("0.5"));
    CHECK(type2::validate(build(p)).ok());
    p.place.prnt.set(node("ghost"), root(0), u("0.5"));
    CHECK(type2::validate(build(p)).has("membership"));

    auto q = parts(0, 1, {}, {"y"});
    add_node(q, "a", "0.5");
    q.place.prnt.set(node("a"), root(0), u("0.5"));
    q.link.link.set(port("a", 1), outer("y"), u("0.5"));
    CHECK(type2::validate(build(q)).has("arity"));
}

TEST_CASE("place composition drops what falls below the threshold")
{
    auto f = parts(0, 1, {}, {}, "0.6");
    add_node(f, "a", "1");
    f.place.prnt.set(node("a"), root(0), u("0.5"));
    auto g = parts(1, 1, {}, {}, "0.8");
    g.place.prnt.set(site(0), root(0), U.top());

    auto gf = type2::compose(g.place, f.place);
    CHECK(gf.beta == u("0.6"));
    CHECK(gf.prnt.empty());
    CHECK(gf.nodes.at(node("a")) == U.top());
    CHECK(gf.prnt == oracle::expected_type2_prnt(g.place, f.place));

    f.place.prnt.set(node("a"), root(0), u("0.6"));
    CHECK(type2::compose(g.place, f.place).prnt.at(node("a"), root(0)) == u("0.6"));
}

TEST_CASE("link composition keeps routes at or above the threshold")
{
    auto f = parts(0, 0, {"x"}, {"y"}, "1", "0.7");
    f.link.link.set(inner("x"), outer("y"), u("0.7"));
    auto g = parts(0, 0, {"y"}, {"z"}, "1", "0.5");
    g.link.link.set(inner("y"), outer("z"), u("0.6"));
    auto gf = type2::compose(g.link, f.link);
    CHECK(gf.delta == u("0.5"));
    CHECK(gf.link.at(inner("x"), outer("z")) == u("0.6"));
    CHECK(gf.link == oracle::expected_type2_link(g.link, f.link));

    auto both = type2::compose(build(g), build(f));
    CHECK(both.gamma() == u("0.5"));
}

TEST_CASE("plausibility of a composite is the meet")
{
    auto f = parts(1, 1, {}, {}, "0.7", "0.9");
    f.place.prnt.set(site(0), root(0), U.top());
    auto g = parts(1, 1, {}, {}, "0.4", "1");
    g.place.prnt.set(site(0), root(0), U.top());
    auto gf = type2::compose(build(g), build(f));
    CHECK(gf.gamma() == u("0.4"));
    CHECK(gf.gamma() == meet(build(f).gamma(), build(g).gamma()));
}

TEST_CASE("composition checks interfaces and supports")
{
    auto f = coherent(1, "f");
    CHECK_THROWS_AS(type2::compose(f, f), InterfaceMismatch);

    auto a = parts(0, 1, {}, {});
    add_node(a, "a", "1");
    a.place.prnt.set(node("a"), root(0), U.top());
    auto b = parts(1, 1, {}, {});
    add_node(b, "a", "1");
    b.place.prnt.set(site(0), node("a"), U.top());
    b.place.prnt.set(node("a"), root(0), U.top());
    CHECK_THROWS_AS(type2::compose(build(b), build(a)), SupportOverlap);
}

TEST_CASE("identities are units on coherent bigraphs")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto f = coherent(seed);
        REQUIRE(type2::is_coherent(f));
        REQUIRE(type2::validate(f).ok());
        auto left = type2::compose(type2::identity(f.outer()), f);
        auto right = type2::compose(f, type2::identity(f.inner()));
        CHECK(left == f);
        CHECK(right == f);
    }
}

TEST_CASE("threshold composition is not associative in general")
{
    auto a = parts(0, 1, {}, {}, "0.5");
    add_node(a, "a", "1");
    a.place.prnt.set(node("a"), root(0), u("0.4"));
    auto b = parts(1, 1, {}, {}, "0.9");
    b.place.prnt.set(site(0), root(0), U.top());
    auto c = parts(1, 1, {}, {}, "0.3");
    c.place.prnt.set(site(0), root(0), U.top());

    auto left = type2::compose(c.place, type2::compose(b.place, a.place));
    auto right = type2::compose(type2::compose(c.place, b.place), a.place);
    CHECK(left.prnt.empty());
    CHECK(right.prnt.at(node("a"), root(0)) == u("0.4"));
    CHECK(left != right);
    CHECK_FALSE(type2::is_coherent(build(a)));
}

TEST_CASE("coherent bigraphs compose associatively")
{
    gen::Rng rng(17);
    gen::Options options;
    for (int i = 0; i < 60; ++i) {
        auto i0 = gen::random_interface(rng, options);
        auto i1 = gen::random_interface(rng, options);
        auto i2 = gen::random_interface(rng, options);
        auto i3 = gen::random_interface(rng, options);
        auto a = gen::random_type2_bigraph(rng, i0, i1, "a", options);
        auto b = gen::random_type2_bigraph(rng, i1, i2, "b", options);
        auto c = gen::random_type2_bigraph(rng, i2, i3, "c", options);
        REQUIRE(type2::is_coherent(a));
        REQUIRE(type2::is_membership_bounded(a));
        auto ba = type2::compose(b, a);
        CHECK(type2::is_coherent(ba));
        CHECK(type2::validate(ba).ok());
        CHECK(ba.place().prnt == oracle::expected_type2_prnt(b.place(), a.place()));
        CHECK(ba.link().link == oracle::expected_type2_link(b.link(), a.link()));
        CHECK(type2::compose(c, ba) == type2::compose(type2::compose(c, b), a));
    }
}

TEST_CASE("embedding a crisp bigraph at top commutes with composition")
{
    gen::Rng rng(3);
    gen::Options options;
    options.max_nodes = 3;
    for (int i = 0; i < 40; ++i) {
        auto i0 = gen::random_interface(rng, options);
        auto i1 = gen::random_interface(rng, options);
        auto i2 = gen::random_interface(rng, options);
        auto f = fuzzify(gen::random_crisp_bigraph(rng, i0, i1, "f", options), U);
        auto g = fuzzify(gen::random_crisp_bigraph(rng, i1, i2, "g", options), U);
        CHECK(type2::compose(type2::embed(g), type2::embed(f)) == type2::embed(compose(g, f)));
    }
}

TEST_CASE("embedding at the coherent plausibility commutes with composition")
{
    gen::Rng rng(4);
    gen::Options options;
    for (int i = 0; i < 40; ++i) {
        auto t = gen::random_fuzzy_triple(rng, options);
        auto pa = type2::coherent_plausibility(t.a);
        auto pb = type2::coherent_plausibility(t.b);
        auto ea = type2::embed(t.a, pa);
        auto eb = type2::embed(t.b, pb);
        CHECK(type2::is_coherent(ea));
        CHECK(type2::compose(eb, ea) == type2::embed(compose(t.b, t.a), meet(pa, pb)));
    }
}

TEST_CASE("support conventions")
{
    auto p = parts(0, 1, {}, {"y"});
    add_node(p, "a", "0.4");
    p.place.prnt.set(node("a"), root(0), u("0.4"));
    p.link.edges.set(edge("e"), u("0.3"));
    p.link.link.set(port("a", 0), edge("e"), u("0.3"));
    auto b = build(p);
    auto s = type2::support(b);
    CHECK(s.at(node("a")) == u("0.4"));
    CHECK(s.at(edge("e")) == u("0.3"));
    auto top = type2::support(b, type2::SupportConvention::OffSortTopForNodes);
    CHECK(top.at(node("a")) == U.top());
    CHECK(top.at(edge("e")) == u("0.3"));
    CHECK(type2::support(b.place()).size() == 1);
}

TEST_CASE("a renamed copy is a support translation")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto f = coherent(seed);
        auto r = rename(f, priming(f));
        auto report = type2::check_support_translation(r.rho_v, r.rho_e, f, r.g);
        CAPTURE(seed);
        for (const auto& c : report.checks) {
            CAPTURE(c.property);
            CAPTURE(c.witness);
            CHECK(c.passed);
        }
        auto [rv, re] = type2::fuzzy_translation(priming(f), r.g);
        CHECK(rv == r.rho_v);
        CHECK(re == r.rho_e);
    }
}

TEST_CASE("support equivalence is reflexive, symmetric and transitive")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto f = coherent(seed);
        SupportTranslation same;
        for (const auto& [v, m] : f.link().nodes.entries())
            same.nodes.emplace(v.id(), v.id());
        for (const auto& [e, m] : f.link().edges.entries())
            same.edges.emplace(e.id(), e.id());
        auto refl = rename(f, same);
        CHECK(refl.g == f);
        CHECK(type2::support_equivalent(refl.rho_v, refl.rho_e, f, f));

        auto step = priming(f);
        auto fg = rename(f, step);
        auto back = rename(fg.g, step.inverse());
        CHECK(back.g == f);
        CHECK(type2::support_equivalent(back.rho_v, back.rho_e, fg.g, f));

        auto step2 = priming(fg.g);
        auto gh = rename(fg.g, step2);
        SupportTranslation chained;
        for (const auto& [a, b] : step.nodes)
            chained.nodes.emplace(a, step2.nodes.at(b));
        for (const auto& [a, b] : step.edges)
            chained.edges.emplace(a, step2.edges.at(b));
        auto direct = rename(f, chained);
        CHECK(direct.g == gh.g);
        CHECK(type2::support_equivalent(direct.rho_v, direct.rho_e, f, gh.g));
    }
}

TEST_CASE("translation checks notice changed memberships and degrees")
{
    auto f = coherent(7);
    REQUIRE_FALSE(f.link().nodes.empty());
    auto r = rename(f, priming(f));

    // The target's membership for one node no longer matches rho~_V.
    auto place = r.g.place();
    auto link = r.g.link();
    auto [v, m] = *place.nodes.entries().begin();
    const auto lowered = m == U.top() ? u("0.5") : U.top();
    place.nodes.set(v, lowered);
    link.nodes = place.nodes;
    type2::Bigraph changed(place, link);
    auto report = type2::check_support_translation(r.rho_v, r.rho_e, f, changed);
    CHECK_FALSE(report.passed("node-membership"));
    CHECK_FALSE(report.passed("equivalence"));
    CHECK_FALSE(type2::support_equivalent(r.rho_v, r.rho_e, f, changed));
}

TEST_CASE("translations must be bijections on the supports")
{
    auto f = coherent(9);
    auto r = rename(f, priming(f));
    auto bad = r.rho_v;
    bad.set(Term::node("nowhere"), r.rho_v.entries().begin()->first.second, U.top());
    CHECK_THROWS_AS(type2::check_support_translation(bad, r.rho_e, f, r.g), MalformedTranslation);
    CHECK_THROWS_AS(type2::apply_translation(bad, r.rho_e, f), MalformedTranslation);
    CHECK_FALSE(type2::support_equivalent(bad, r.rho_e, f, r.g));

    FuzzyRelation empty(U);
    if (!f.link().nodes.empty())
        CHECK_THROWS_AS(type2::apply_translation(empty, r.rho_e, f), MalformedTranslation);
}

TEST_CASE("the literal link inequality can be requested")
{
    auto f = coherent(11);
    auto r = rename(f, priming(f));
    type2::TranslationOptions literal{true};
    auto report = type2::check_support_translation(r.rho_v, r.rho_e, f, r.g, literal);
    CHECK(report.find("links") != nullptr);
    CHECK(report.passed("equivalence"));
}
