#include "fbg/dot.hpp"

#include <optional>
#include <sstream>

namespace fbg::io {

namespace {

struct PlaceData {
    std::size_t inner = 0;
    std::size_t outer = 0;
    std::map<std::string, std::string> nodes; ///< id -> label
    FuzzyRelation prnt{Frame::two_point()};
    bool graded = false;
};

struct LinkData {
    NameSet inner;
    NameSet outer;
    std::map<std::string, std::string> nodes;
    std::map<std::string, std::string> edges;
    std::set<Term> ports;
    FuzzyRelation link{Frame::two_point()};
    bool graded = false;
};

std::string crisp_labels(const std::string& v, const std::map<std::string, std::string>& ctrl)
{
    auto k = ctrl.find(v);
    return k == ctrl.end() ? v : v + " : " + k->second;
}

std::map<std::string, std::string> fuzzy_labels(const std::set<std::string>& nodes, const FuzzyRelation& ctrl,
                                                const FuzzySet* membership = nullptr)
{
    std::map<std::string, std::string> out;
    for (const auto& v : nodes) {
        std::string label = v;
        if (membership != nullptr)
            label += " (" + membership->at(Term::node(v)).to_string() + ")";
        std::string controls;
        for (const auto& [k, degree] : ctrl.row(Term::node(v)))
            controls += (controls.empty() ? "" : ", ") + k.id() + " " + degree.to_string();
        out.emplace(v, controls.empty() ? label : label + " : " + controls);
    }
    return out;
}

std::set<std::string> ids(const FuzzySet& s)
{
    std::set<std::string> out;
    for (const auto& [t, degree] : s.entries())
        out.insert(t.id());
    return out;
}

std::map<std::string, std::string> edge_labels(const std::set<std::string>& edges, const FuzzySet* membership)
{
    std::map<std::string, std::string> out;
    for (const auto& e : edges)
        out.emplace(e, membership ? e + " (" + membership->at(Term::edge(e)).to_string() + ")" : e);
    return out;
}

PlaceData place_data(const crisp::PlaceGraph& g)
{
    PlaceData d{g.inner, g.outer, {}, fuzzify(g).prnt, false};
    for (const auto& v : g.nodes)
        d.nodes.emplace(v, crisp_labels(v, g.ctrl));
    return d;
}

PlaceData place_data(const FuzzyPlaceGraph& g)
{
    return {g.inner, g.outer, fuzzy_labels(g.nodes, g.ctrl), g.prnt, true};
}

PlaceData place_data(const type2::PlaceGraph& g)
{
    return {g.inner, g.outer, fuzzy_labels(ids(g.nodes), g.ctrl, &g.nodes), g.prnt, true};
}

LinkData link_data(const crisp::LinkGraph& g)
{
    LinkData d{g.inner, g.outer, {}, edge_labels(g.edges, nullptr), crisp::ports(g.signature, g.ctrl),
               fuzzify(g).link, false};
    for (const auto& v : g.nodes)
        d.nodes.emplace(v, crisp_labels(v, g.ctrl));
    return d;
}

LinkData link_data(const FuzzyLinkGraph& g)
{
    return {g.inner, g.outer, fuzzy_labels(g.nodes, g.ctrl), edge_labels(g.edges, nullptr), ports_fuzzy(g), g.link,
            true};
}

LinkData link_data(const type2::LinkGraph& g)
{
    return {g.inner,
            g.outer,
            fuzzy_labels(ids(g.nodes), g.ctrl, &g.nodes),
            edge_labels(ids(g.edges), &g.edges),
            type2::ports(g),
            g.link,
            true};
}

std::optional<PlaceData> place_part(const Graph& g)
{
    return std::visit(
        [](const auto& x) -> std::optional<PlaceData> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, crisp::PlaceGraph> || std::is_same_v<T, FuzzyPlaceGraph> ||
                          std::is_same_v<T, type2::PlaceGraph>)
                return place_data(x);
            else if constexpr (std::is_same_v<T, crisp::Bigraph> || std::is_same_v<T, FuzzyBigraph>)
                return place_data(x.place);
            else if constexpr (std::is_same_v<T, type2::Bigraph>)
                return place_data(x.place());
            else
                return std::nullopt;
        },
        g);
}

std::optional<LinkData> link_part(const Graph& g)
{
    return std::visit(
        [](const auto& x) -> std::optional<LinkData> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, crisp::LinkGraph> || std::is_same_v<T, FuzzyLinkGraph> ||
                          std::is_same_v<T, type2::LinkGraph>)
                return link_data(x);
            else if constexpr (std::is_same_v<T, crisp::Bigraph> || std::is_same_v<T, FuzzyBigraph>)
                return link_data(x.link);
            else if constexpr (std::is_same_v<T, type2::Bigraph>)
                return link_data(x.link());
            else
                return std::nullopt;
        },
        g);
}

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string id_of(const Term& t)
{
    switch (t.kind()) {
    case TermKind::Site:
        return quote("site " + std::to_string(t.index()));
    case TermKind::Root:
        return quote("root " + std::to_string(t.index()));
    case TermKind::Node:
        return quote("node " + t.id());
    case TermKind::Edge:
        return quote("edge " + t.id());
    case TermKind::InnerName:
        return quote("inner " + t.id());
    case TermKind::OuterName:
        return quote("outer " + t.id());
    case TermKind::Port:
        return quote("port " + t.id() + " " + std::to_string(t.index()));
    case TermKind::Control:
        return quote("control " + t.id());
    }
    return {};
}

std::string arc_attributes(const FrameValue& degree, bool graded)
{
    return graded ? " [label=" + quote(degree.to_string()) + "]" : "";
}

std::string place_dot(const std::string& name, const PlaceData& d)
{
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t j = 0; j < d.outer; ++j)
        out << "  " << id_of(Term::root(j)) << " [label=" << quote(std::to_string(j))
            << ", shape=box, style=dashed];\n";
    for (std::size_t i = 0; i < d.inner; ++i)
        out << "  " << id_of(Term::site(i)) << " [label=" << quote(std::to_string(i))
            << ", shape=square, style=filled, fillcolor=lightgrey];\n";
    for (const auto& [v, label] : d.nodes)
        out << "  " << id_of(Term::node(v)) << " [label=" << quote(label) << ", shape=ellipse];\n";
    for (const auto& [key, degree] : d.prnt.entries())
        out << "  " << id_of(key.first) << " -> " << id_of(key.second) << arc_attributes(degree, d.graded)
            << ";\n";
    out << "}\n";
    return out.str();
}

std::string link_dot(const std::string& name, const LinkData& d)
{
    std::ostringstream out;
    out << "graph " << quote(name) << " {\n";
    if (!d.outer.empty()) {
        out << "  { rank=min;";
        for (const auto& y : d.outer)
            out << " " << id_of(Term::outer_name(y)) << " [label=" << quote(y) << ", shape=plaintext];";
        out << " }\n";
    }
    if (!d.inner.empty()) {
        out << "  { rank=max;";
        for (const auto& x : d.inner)
            out << " " << id_of(Term::inner_name(x)) << " [label=" << quote(x) << ", shape=plaintext];";
        out << " }\n";
    }
    for (const auto& [v, label] : d.nodes)
        out << "  " << id_of(Term::node(v)) << " [label=" << quote(label) << ", shape=ellipse];\n";
    for (const auto& p : d.ports)
        out << "  " << id_of(p) << " [label=\"\", xlabel=" << quote(std::to_string(p.index()))
            << ", shape=point];\n  " << id_of(Term::node(p.id())) << " -- " << id_of(p) << " [style=dotted];\n";
    for (const auto& [e, label] : d.edges)
        out << "  " << id_of(Term::edge(e)) << " [label=" << quote(label) << ", shape=diamond];\n";
    for (const auto& [key, degree] : d.link.entries())
        out << "  " << id_of(key.first) << " -- " << id_of(key.second) << arc_attributes(degree, d.graded)
            << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace

std::string export_dot(const Document& doc, const std::string& name, View view)
{
    auto it = doc.graphs.find(name);
    if (it == doc.graphs.end())
        throw UnknownGraph("no graph named '" + name + "'");
    if (view == View::Place) {
        auto d = place_part(it->second);
        if (!d)
            throw UnknownGraph("graph '" + name + "' is a " + kind_name(it->second) + " and has no place part");
        return place_dot(name, *d);
    }
    auto d = link_part(it->second);
    if (!d)
        throw UnknownGraph("graph '" + name + "' is a " + kind_name(it->second) + " and has no link part");
    return link_dot(name, *d);
}

} // namespace fbg::io
