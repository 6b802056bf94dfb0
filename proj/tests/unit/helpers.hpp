#ifndef FBG_TESTS_HELPERS_HPP
#define FBG_TESTS_HELPERS_HPP

#include "fbg/crisp.hpp"
#include "fbg/fuzzy.hpp"
#include "fbg/lattice.hpp"
#include "fbg/type2.hpp"

#include <string>

namespace helpers {

using namespace fbg;

inline const Frame U = Frame::unit_interval();

/// A unit-interval degree from its text ("0.3", "1/3").
inline FrameValue u(const char* text) { return U.parse_value(text); }

inline Term site(std::size_t i) { return Term::site(i); }
inline Term root(std::size_t i) { return Term::root(i); }
inline Term node(const char* v) { return Term::node(v); }
inline Term edge(const char* e) { return Term::edge(e); }
inline Term port(const char* v, std::size_t i) { return Term::port(v, i); }
inline Term inner(const char* x) { return Term::inner_name(x); }
inline Term outer(const char* y) { return Term::outer_name(y); }
inline Term control(const char* k) { return Term::control(k); }

/// The bigraph H : <3,{x1,x2}> -> <2,{y}>: two rooted trees v0{v1,v2} and
/// v3{v4,v5}, sites under v1, v2 and v4, and two edges plus the outer name.
inline crisp::Bigraph h_figure()
{
    crisp::Bigraph h;
    h.place.signature = h.link.signature = Signature{{{"K", 2}, {"L", 1}, {"M", 1}}};
    h.place.inner = 3;
    h.place.outer = 2;
    h.place.nodes = h.link.nodes = {"v0", "v1", "v2", "v3", "v4", "v5"};
    h.place.ctrl = h.link.ctrl = {{"v0", "K"}, {"v1", "L"}, {"v2", "L"}, {"v3", "K"}, {"v4", "M"}, {"v5", "L"}};
    h.place.prnt = {{site(0), node("v1")},    {site(1), node("v2")},    {site(2), node("v4")},
                    {node("v0"), root(0)},    {node("v1"), node("v0")}, {node("v2"), node("v0")},
                    {node("v3"), root(1)},    {node("v4"), node("v3")}, {node("v5"), node("v3")}};
    h.link.inner = {"x1", "x2"};
    h.link.outer = {"y"};
    h.link.edges = {"e0", "e1"};
    h.link.link = {{inner("x1"), outer("y")},     {inner("x2"), edge("e1")},    {port("v0", 0), edge("e0")},
                   {port("v0", 1), outer("y")},   {port("v1", 0), edge("e0")},  {port("v2", 0), edge("e1")},
                   {port("v3", 0), edge("e0")},   {port("v3", 1), edge("e1")},  {port("v4", 0), outer("y")},
                   {port("v5", 0), edge("e1")}};
    return h;
}

} // namespace helpers

#endif
