#include "helpers.hpp"
#include "oracle/crisp_oracle.hpp"
#include "oracle/fuzzy_oracle.hpp"

#include "fbg/error.hpp"
#include "fbg/generate.hpp"

#include <doctest.h>

using namespace fbg;
using namespace helpers;

namespace {

FuzzyPlaceGraph place(std::size_t inner, std::size_t outer, std::set<std::string> nodes)
{
    FuzzyPlaceGraph g;
    g.frame = U;
    g.signature = Signature{{{"K", 1}, {"L", 2}}};
    g.inner = inner;
    g.outer = outer;
    g.nodes = std::move(nodes);
    g.ctrl = FuzzyRelation(U);
    g.prnt = FuzzyRelation(U);
    for (const auto& v : g.nodes)
        g.ctrl.set(Term::node(v), control("K"), U.top());
    return g;
}

FuzzyLinkGraph link(NameSet inner, NameSet outer)
{
    FuzzyLinkGraph g;
    g.frame = U;
    g.signature = Signature{{{"K", 1}, {"L", 2}}};
    g.inner = std::move(inner);
    g.outer = std::move(outer);
    g.ctrl = FuzzyRelation(U);
    g.link = FuzzyRelation(U);
    return g;
}

} // namespace

TEST_CASE("ports cover the largest arity among positive controls")
{
    FuzzyRelation ctrl(U);
    ctrl.set(node("v"), control("K"), u("0.9"));
    ctrl.set(node("v"), control("L"), u("0.2"));
    ctrl.set(node("w"), control("K"), u("0.5"));
    Signature sig{{{"K", 1}, {"L", 2}, {"M", 0}}};
    auto ports = ports_fuzzy(sig, ctrl);
    CHECK(ports == std::set<Term>{port("v", 0), port("v", 1), port("w", 0)});

    FuzzyRelation atom(U);
    atom.set(node("a"), control("M"), U.top());
    CHECK(ports_fuzzy(sig, atom).empty());
}

TEST_CASE("place composition routes through the shared roots and sites")
{
    // f : 0 -> 2 with one node u under both roots; g : 2 -> 1 with w
    // holding both sites.
    auto f = place(0, 2, {"u"});
    f.prnt.set(node("u"), root(0), u("0.5"));
    f.prnt.set(node("u"), root(1), u("0.3"));
    auto g = place(2, 1, {"w"});
    g.prnt.set(site(0), node("w"), u("0.8"));
    g.prnt.set(site(1), node("w"), u("0.9"));
    g.prnt.set(node("w"), root(0), U.top());

    auto gf = compose(g, f);
    CHECK(gf.inner == 0);
    CHECK(gf.outer == 1);
    CHECK(gf.nodes == std::set<std::string>{"u", "w"});
    CHECK(gf.prnt.at(node("u"), node("w")) == u("0.5"));
    CHECK(gf.prnt.at(node("w"), root(0)) == U.top());
    CHECK(gf.prnt.size() == 2);
    CHECK(gf.prnt == oracle::expected_prnt(g, f));
    CHECK(validate(gf).ok());
}

TEST_CASE("link composition takes the best route through outer names")
{
    auto f = link({"x"}, {"y1", "y2"});
    f.link.set(inner("x"), outer("y1"), u("0.7"));
    f.link.set(inner("x"), outer("y2"), u("0.4"));
    auto g = link({"y1", "y2"}, {"z"});
    g.link.set(inner("y1"), outer("z"), u("0.6"));
    g.link.set(inner("y2"), outer("z"), U.top());
    auto gf = compose(g, f);
    CHECK(gf.link.at(inner("x"), outer("z")) == u("0.6"));
    CHECK(gf.link.size() == 1);
    CHECK(gf.link == oracle::expected_link(g, f));
}

TEST_CASE("composition rejects mismatched interfaces, frames and shared nodes")
{
    auto f = place(0, 2, {"u"});
    f.prnt.set(node("u"), root(0), U.top());
    auto g = place(1, 1, {"w"});
    CHECK_THROWS_AS(compose(g, f), InterfaceMismatch);

    auto g2 = place(2, 1, {"u"});
    CHECK_THROWS_AS(compose(g2, f), SupportOverlap);

    auto g3 = place(2, 1, {});
    g3.frame = Frame::chain(5);
    g3.prnt = FuzzyRelation(g3.frame);
    g3.ctrl = FuzzyRelation(g3.frame);
    CHECK_THROWS_AS(compose(g3, f), InstanceMismatch);

    CHECK_THROWS_AS(compose(link({"y"}, {}), link({}, {"z"})), InterfaceMismatch);
}

TEST_CASE("identities are two-sided units")
{
    gen::Rng rng(21);
    gen::Options options;
    for (int i = 0; i < 50; ++i) {
        auto a = gen::random_interface(rng, options);
        auto b = gen::random_interface(rng, options);
        auto f = gen::random_fuzzy_bigraph(rng, a, b, "f", options);
        auto left = compose(identity_bigraph(b, U), f);
        auto right = compose(f, identity_bigraph(a, U));
        CHECK(left == f);
        CHECK(right == f);
    }
}

TEST_CASE("tensor shifts the second operand's sites and roots")
{
    auto f = place(3, 2, {"a"});
    f.prnt.set(site(0), node("a"), U.top());
    f.prnt.set(site(1), root(0), U.top());
    f.prnt.set(site(2), root(1), U.top());
    f.prnt.set(node("a"), root(0), U.top());
    auto g = place(1, 1, {});
    g.prnt.set(site(0), root(0), u("0.9"));
    auto fg = tensor(f, g);
    CHECK(fg.inner == 4);
    CHECK(fg.outer == 3);
    CHECK(fg.prnt.at(site(3), root(2)) == u("0.9"));
    CHECK(fg.prnt == oracle::expected_tensor_prnt(f, g));

    auto unit = identity_place(0, U);
    unit.signature = f.signature;
    CHECK(tensor(f, unit) == f);
    CHECK(tensor(unit, f) == f);
}

TEST_CASE("tensor refuses shared names and nodes")
{
    auto f = link({"x"}, {"y"});
    f.link.set(inner("x"), outer("y"), U.top());
    CHECK_THROWS_AS(tensor(f, f), NameClash);
    auto p = place(0, 1, {"a"});
    p.prnt.set(node("a"), root(0), U.top());
    CHECK_THROWS_AS(tensor(p, p), SupportOverlap);
}

TEST_CASE("fuzzify and defuzzify are inverse on crisp bigraphs")
{
    auto h = h_figure();
    auto fh = fuzzify(h, Frame::two_point());
    CHECK(validate(fh).ok());
    CHECK(defuzzify(fh) == h);
    auto fu = fuzzify(h, U);
    CHECK(defuzzify(fu) == h);
    CHECK(fu.place.prnt.at(node("v1"), node("v0")) == U.top());
}

TEST_CASE("defuzzify rejects graded or branching entries")
{
    auto fh = fuzzify(h_figure(), U);
    auto graded = fh;
    graded.place.prnt.set(node("v1"), node("v0"), u("0.5"));
    CHECK_THROWS_AS(defuzzify(graded), NotCrisp);
    auto branching = fh;
    branching.place.prnt.set(node("v1"), node("v3"), U.top());
    CHECK_THROWS_AS(defuzzify(branching), NotCrisp);
    auto ctrl = fh;
    ctrl.place.ctrl.set(node("v0"), control("L"), U.top());
    ctrl.link.ctrl = ctrl.place.ctrl;
    CHECK_THROWS_AS(defuzzify(ctrl), NotCrisp);
}

TEST_CASE("validation of fuzzy graphs")
{
    auto g = place(1, 1, {"a", "b"});
    g.prnt.set(site(0), node("a"), u("0.2"));
    g.prnt.set(node("a"), node("b"), u("0.1"));
    g.prnt.set(node("b"), root(0), u("0.6"));
    CHECK(validate(g).ok());
    g.prnt.set(node("b"), node("a"), u("0.01"));
    CHECK(validate(g).has("acyclicity"));

    auto orphan = place(1, 1, {"a"});
    orphan.prnt.set(node("a"), root(0), U.top());
    CHECK(validate(orphan).has("totality"));

    auto l = link({"x"}, {"y"});
    l.nodes = {"v"};
    l.ctrl.set(node("v"), control("K"), U.top());
    l.link.set(inner("x"), outer("y"), U.top());
    l.link.set(port("v", 0), outer("y"), u("0.3"));
    CHECK(validate(l).ok());
    l.link.set(port("v", 1), outer("y"), u("0.3"));
    CHECK(validate(l).has("arity"));
}

TEST_CASE("make_bigraph insists on shared nodes and controls")
{
    auto p = place(1, 1, {"a"});
    auto l = link({}, {});
    CHECK_THROWS_AS(make_bigraph(p, l), InterfaceMismatch);
    l.nodes = p.nodes;
    l.ctrl = p.ctrl;
    CHECK_NOTHROW(make_bigraph(p, l));
}

TEST_CASE("fuzzy composition extends crisp composition")
{
    gen::Rng rng(8);
    gen::Options options;
    options.max_nodes = 3;
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto i0 = gen::random_interface(rng, options);
        auto i1 = gen::random_interface(rng, options);
        auto i2 = gen::random_interface(rng, options);
        auto f = gen::random_crisp_bigraph(rng, i0, i1, "f", options);
        auto g = gen::random_crisp_bigraph(rng, i1, i2, "g", options);
        for (const Frame& frame : {Frame::two_point(), U}) {
            auto fuzzy = compose(fuzzify(g, frame), fuzzify(f, frame));
            CHECK(fuzzy == fuzzify(oracle::compose(g, f), frame));
        }
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("random composites match the oracle, stay acyclic and associate")
{
    gen::Rng rng(99);
    for (const Frame& frame : {U, Frame::chain(5)}) {
        gen::Options options;
        options.frame = frame;
        for (int i = 0; i < 100; ++i) {
            auto t = gen::random_fuzzy_triple(rng, options);
            REQUIRE(validate(t.a).ok());
            REQUIRE(validate(t.b).ok());
            auto ba = compose(t.b, t.a);
            CHECK(ba.place.prnt == oracle::expected_prnt(t.b.place, t.a.place));
            CHECK(ba.link.link == oracle::expected_link(t.b.link, t.a.link));
            CHECK(skeleton_acyclic(ba.place.prnt, TermKind::Node));
            CHECK(validate(ba).ok());
            CHECK(compose(t.c, ba) == compose(compose(t.c, t.b), t.a));
        }
    }
}
