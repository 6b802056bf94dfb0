#include "fbg/model_io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace fbg::io {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- writing

json term_to_json(const Term& t)
{
    switch (t.kind()) {
    case TermKind::Site:
        return {{"site", t.index()}};
    case TermKind::Root:
        return {{"root", t.index()}};
    case TermKind::Node:
        return {{"node", t.id()}};
    case TermKind::Edge:
        return {{"edge", t.id()}};
    case TermKind::InnerName:
    case TermKind::OuterName:
        return {{"name", t.id()}};
    case TermKind::Port:
        return {{"port", json::array({t.id(), t.index()})}};
    case TermKind::Control:
        return {{"control", t.id()}};
    }
    return {};
}

json relation_to_json(const FuzzyRelation& r)
{
    json out = json::array();
    for (const auto& [key, degree] : r.entries())
        out.push_back(json::array({term_to_json(key.first), term_to_json(key.second), degree.to_string()}));
    return out;
}

json ctrl_to_json(const FuzzyRelation& ctrl)
{
    json out = json::array();
    for (const auto& [key, degree] : ctrl.entries())
        out.push_back(json::array({key.first.id(), key.second.id(), degree.to_string()}));
    return out;
}

json map_to_json(const std::map<Term, Term>& m)
{
    json out = json::array();
    for (const auto& [a, b] : m)
        out.push_back(json::array({term_to_json(a), term_to_json(b)}));
    return out;
}

json fuzzy_set_to_json(const FuzzySet& s)
{
    json out = json::object();
    for (const auto& [t, degree] : s.entries())
        out[t.id()] = degree.to_string();
    return out;
}

json width_json(std::size_t w) { return {{"width", w}}; }
json names_json(const NameSet& n) { return {{"names", n}}; }
json interface_json(std::size_t w, const NameSet& n) { return {{"width", w}, {"names", n}}; }

json graph_to_json(const crisp::PlaceGraph& g)
{
    return {{"kind", "crisp-place"}, {"inner", width_json(g.inner)}, {"outer", width_json(g.outer)},
            {"nodes", g.nodes},      {"ctrl", g.ctrl},                {"prnt", map_to_json(g.prnt)}};
}

json graph_to_json(const crisp::LinkGraph& g)
{
    return {{"kind", "crisp-link"}, {"inner", names_json(g.inner)}, {"outer", names_json(g.outer)},
            {"nodes", g.nodes},     {"edges", g.edges},              {"ctrl", g.ctrl},
            {"link", map_to_json(g.link)}};
}

json graph_to_json(const crisp::Bigraph& b)
{
    return {{"kind", "crisp-bigraph"},
            {"inner", interface_json(b.place.inner, b.link.inner)},
            {"outer", interface_json(b.place.outer, b.link.outer)},
            {"nodes", b.place.nodes},
            {"edges", b.link.edges},
            {"ctrl", b.place.ctrl},
            {"prnt", map_to_json(b.place.prnt)},
            {"link", map_to_json(b.link.link)}};
}

json graph_to_json(const FuzzyPlaceGraph& g)
{
    return {{"kind", "fuzzy-place"}, {"inner", width_json(g.inner)}, {"outer", width_json(g.outer)},
            {"nodes", g.nodes},      {"ctrl", ctrl_to_json(g.ctrl)},  {"prnt", relation_to_json(g.prnt)}};
}

json graph_to_json(const FuzzyLinkGraph& g)
{
    return {{"kind", "fuzzy-link"}, {"inner", names_json(g.inner)},   {"outer", names_json(g.outer)},
            {"nodes", g.nodes},     {"edges", g.edges},                {"ctrl", ctrl_to_json(g.ctrl)},
            {"link", relation_to_json(g.link)}};
}

json graph_to_json(const FuzzyBigraph& b)
{
    return {{"kind", "fuzzy-bigraph"},
            {"inner", interface_json(b.place.inner, b.link.inner)},
            {"outer", interface_json(b.place.outer, b.link.outer)},
            {"nodes", b.place.nodes},
            {"edges", b.link.edges},
            {"ctrl", ctrl_to_json(b.place.ctrl)},
            {"prnt", relation_to_json(b.place.prnt)},
            {"link", relation_to_json(b.link.link)}};
}

json graph_to_json(const type2::PlaceGraph& g)
{
    return {{"kind", "type2-place"},
            {"inner", width_json(g.inner)},
            {"outer", width_json(g.outer)},
            {"nodes", fuzzy_set_to_json(g.nodes)},
            {"ctrl", ctrl_to_json(g.ctrl)},
            {"prnt", relation_to_json(g.prnt)},
            {"beta", g.beta.to_string()}};
}

json graph_to_json(const type2::LinkGraph& g)
{
    return {{"kind", "type2-link"},
            {"inner", names_json(g.inner)},
            {"outer", names_json(g.outer)},
            {"nodes", fuzzy_set_to_json(g.nodes)},
            {"edges", fuzzy_set_to_json(g.edges)},
            {"ctrl", ctrl_to_json(g.ctrl)},
            {"link", relation_to_json(g.link)},
            {"delta", g.delta.to_string()}};
}

json graph_to_json(const type2::Bigraph& b)
{
    const auto& p = b.place();
    const auto& l = b.link();
    return {{"kind", "type2-bigraph"},
            {"inner", interface_json(p.inner, l.inner)},
            {"outer", interface_json(p.outer, l.outer)},
            {"nodes", fuzzy_set_to_json(p.nodes)},
            {"edges", fuzzy_set_to_json(l.edges)},
            {"ctrl", ctrl_to_json(p.ctrl)},
            {"prnt", relation_to_json(p.prnt)},
            {"link", relation_to_json(l.link)},
            {"beta", p.beta.to_string()},
            {"delta", l.delta.to_string()},
            {"gamma", b.gamma().to_string()}};
}

// ---------------------------------------------------------------- reading

std::string escape_pointer(const std::string& token)
{
    std::string out;
    for (char c : token) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

/// A JSON value together with its JSON-pointer location.
struct At {
    const json& value;
    std::string path;

    At operator[](const std::string& key) const { return {value.at(key), path + "/" + escape_pointer(key)}; }
    At operator[](std::size_t i) const { return {value.at(i), path + "/" + std::to_string(i)}; }
};

[[noreturn]] void fail(ParseErrorKind kind, const At& at, const std::string& message)
{
    throw ParseError(kind, at.path.empty() ? "/" : at.path, message);
}

void expect_object(const At& at, const std::set<std::string>& required, const std::set<std::string>& optional = {})
{
    if (!at.value.is_object())
        fail(ParseErrorKind::Schema, at, "expected an object");
    for (const auto& [key, value] : at.value.items())
        if (!required.contains(key) && !optional.contains(key))
            fail(ParseErrorKind::Schema, at, "unknown field '" + key + "'");
    for (const auto& key : required)
        if (!at.value.contains(key))
            fail(ParseErrorKind::Schema, at, "missing field '" + key + "'");
}

void expect_array(const At& at, std::size_t arity = 0)
{
    if (!at.value.is_array())
        fail(ParseErrorKind::Schema, at, "expected an array");
    if (arity != 0 && at.value.size() != arity)
        fail(ParseErrorKind::Schema, at, "expected " + std::to_string(arity) + " elements");
}

std::string read_string(const At& at)
{
    if (!at.value.is_string())
        fail(ParseErrorKind::Schema, at, "expected a string");
    return at.value.get<std::string>();
}

std::size_t read_natural(const At& at)
{
    if (!at.value.is_number_unsigned())
        fail(ParseErrorKind::Schema, at, "expected a non-negative integer");
    return at.value.get<std::size_t>();
}

std::set<std::string> read_string_set(const At& at)
{
    expect_array(at);
    std::set<std::string> out;
    for (std::size_t i = 0; i < at.value.size(); ++i)
        if (!out.insert(read_string(at[i])).second)
            fail(ParseErrorKind::Schema, at[i], "duplicate identifier '" + at.value[i].get<std::string>() + "'");
    return out;
}

FrameValue read_degree(const At& at, const Frame& frame)
{
    const std::string text = read_string(at);
    try {
        return frame.parse_value(text);
    } catch (const DegreeOutOfRange& e) {
        fail(ParseErrorKind::DegreeRange, at, e.what());
    }
}

FrameValue read_positive_degree(const At& at, const Frame& frame)
{
    FrameValue v = read_degree(at, frame);
    if (v.is_bottom())
        fail(ParseErrorKind::DegreeRange, at, "bottom entries are implicit and must be omitted");
    return v;
}

enum class Slot { PlaceSource, PlaceTarget, LinkSource, LinkTarget };

/// Everything a relation entry may refer to.
struct Scope {
    std::set<std::string> nodes;
    std::set<std::string> edges;
    NameSet inner;
    NameSet outer;
};

Term read_term(const At& at, Slot slot, const Scope& scope)
{
    if (!at.value.is_object() || at.value.size() != 1)
        fail(ParseErrorKind::Schema, at, "expected a term such as {\"node\": \"v0\"}");
    const std::string tag = at.value.begin().key();
    const At inner = at[tag];
    auto node = [&](const std::string& id, const At& where) {
        if (!scope.nodes.contains(id))
            fail(ParseErrorKind::DanglingIdentifier, where, "undeclared node '" + id + "'");
        return id;
    };
    const bool place = slot == Slot::PlaceSource || slot == Slot::PlaceTarget;
    const bool source = slot == Slot::PlaceSource || slot == Slot::LinkSource;
    if (tag == "node" && place)
        return Term::node(node(read_string(inner), inner));
    if (tag == "site" && slot == Slot::PlaceSource)
        return Term::site(read_natural(inner));
    if (tag == "root" && slot == Slot::PlaceTarget)
        return Term::root(read_natural(inner));
    if (tag == "edge" && slot == Slot::LinkTarget) {
        const std::string id = read_string(inner);
        if (!scope.edges.contains(id))
            fail(ParseErrorKind::DanglingIdentifier, inner, "undeclared edge '" + id + "'");
        return Term::edge(id);
    }
    if (tag == "name" && !place) {
        const std::string id = read_string(inner);
        if (!(source ? scope.inner : scope.outer).contains(id))
            fail(ParseErrorKind::DanglingIdentifier, inner,
                 std::string("'") + id + "' is not an " + (source ? "inner" : "outer") + " name");
        return source ? Term::inner_name(id) : Term::outer_name(id);
    }
    if (tag == "port" && slot == Slot::LinkSource) {
        expect_array(inner, 2);
        return Term::port(node(read_string(inner[0]), inner[0]), read_natural(inner[1]));
    }
    fail(ParseErrorKind::Schema, at, "a '" + tag + "' term cannot appear here");
}

class Reader {
public:
    Reader(const Frame& frame, const Signature& signature) : frame_(frame), signature_(signature) {}

    Graph read(const At& at)
    {
        if (!at.value.is_object() || !at.value.contains("kind"))
            fail(ParseErrorKind::Schema, at, "a graph needs a 'kind'");
        const std::string kind = read_string(at["kind"]);
        if (kind == "crisp-place")
            return crisp_place(at);
        if (kind == "crisp-link")
            return crisp_link(at);
        if (kind == "crisp-bigraph")
            return crisp_bigraph(at);
        if (kind == "fuzzy-place")
            return fuzzy_place(at);
        if (kind == "fuzzy-link")
            return fuzzy_link(at);
        if (kind == "fuzzy-bigraph")
            return fuzzy_bigraph(at);
        if (kind == "type2-place")
            return type2_place(at);
        if (kind == "type2-link")
            return type2_link(at);
        if (kind == "type2-bigraph")
            return type2_bigraph(at);
        fail(ParseErrorKind::Schema, at["kind"], "unknown graph kind '" + kind + "'");
    }

private:
    const Frame& frame_;
    const Signature& signature_;

    std::size_t width(const At& at)
    {
        expect_object(at, {"width"});
        return read_natural(at["width"]);
    }

    NameSet names(const At& at)
    {
        expect_object(at, {"names"});
        return read_string_set(at["names"]);
    }

    Interface interface(const At& at)
    {
        expect_object(at, {"width", "names"});
        return {read_natural(at["width"]), read_string_set(at["names"])};
    }

    std::string control(const At& at)
    {
        std::string k = read_string(at);
        if (!signature_.has(k))
            fail(ParseErrorKind::DanglingIdentifier, at, "control '" + k + "' is not in the signature");
        return k;
    }

    std::map<std::string, std::string> crisp_ctrl(const At& at, const Scope& scope)
    {
        if (!at.value.is_object())
            fail(ParseErrorKind::Schema, at, "expected an object from node to control");
        std::map<std::string, std::string> out;
        for (const auto& [v, k] : at.value.items()) {
            if (!scope.nodes.contains(v))
                fail(ParseErrorKind::DanglingIdentifier, at, "undeclared node '" + v + "'");
            out.emplace(v, control(at[v]));
        }
        return out;
    }

    std::map<Term, Term> crisp_map(const At& at, Slot from, Slot to, const Scope& scope)
    {
        expect_array(at);
        std::map<Term, Term> out;
        for (std::size_t i = 0; i < at.value.size(); ++i) {
            const At entry = at[i];
            expect_array(entry, 2);
            Term a = read_term(entry[0], from, scope);
            if (!out.emplace(a, read_term(entry[1], to, scope)).second)
                fail(ParseErrorKind::Schema, entry, "a second entry for " + a.to_string());
        }
        return out;
    }

    FuzzyRelation fuzzy_ctrl(const At& at, const Scope& scope)
    {
        expect_array(at);
        FuzzyRelation out(frame_);
        for (std::size_t i = 0; i < at.value.size(); ++i) {
            const At entry = at[i];
            expect_array(entry, 3);
            const std::string v = read_string(entry[0]);
            if (!scope.nodes.contains(v))
                fail(ParseErrorKind::DanglingIdentifier, entry[0], "undeclared node '" + v + "'");
            const Term k = Term::control(control(entry[1]));
            if (!out.at(Term::node(v), k).is_bottom())
                fail(ParseErrorKind::Schema, entry, "a second entry for (" + v + ", " + k.id() + ")");
            out.set(Term::node(v), k, read_positive_degree(entry[2], frame_));
        }
        return out;
    }

    FuzzyRelation relation(const At& at, Slot from, Slot to, const Scope& scope)
    {
        expect_array(at);
        FuzzyRelation out(frame_);
        for (std::size_t i = 0; i < at.value.size(); ++i) {
            const At entry = at[i];
            expect_array(entry, 3);
            Term a = read_term(entry[0], from, scope);
            Term b = read_term(entry[1], to, scope);
            if (!out.at(a, b).is_bottom())
                fail(ParseErrorKind::Schema, entry,
                     "a second entry for (" + a.to_string() + ", " + b.to_string() + ")");
            out.set(a, b, read_positive_degree(entry[2], frame_));
        }
        return out;
    }

    FuzzySet memberships(const At& at, TermKind kind)
    {
        if (!at.value.is_object())
            fail(ParseErrorKind::Schema, at, "expected an object from identifier to membership");
        FuzzySet out(frame_);
        for (const auto& [id, degree] : at.value.items()) {
            Term t = kind == TermKind::Node ? Term::node(id) : Term::edge(id);
            out.set(t, read_positive_degree(at[id], frame_));
        }
        return out;
    }

    static std::set<std::string> ids(const FuzzySet& s)
    {
        std::set<std::string> out;
        for (const auto& [t, degree] : s.entries())
            out.insert(t.id());
        return out;
    }

    crisp::PlaceGraph crisp_place(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "ctrl", "prnt"});
        crisp::PlaceGraph g;
        g.signature = signature_;
        g.inner = width(at["inner"]);
        g.outer = width(at["outer"]);
        g.nodes = read_string_set(at["nodes"]);
        Scope scope{g.nodes, {}, {}, {}};
        g.ctrl = crisp_ctrl(at["ctrl"], scope);
        g.prnt = crisp_map(at["prnt"], Slot::PlaceSource, Slot::PlaceTarget, scope);
        return g;
    }

    crisp::LinkGraph crisp_link(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "edges", "ctrl", "link"});
        crisp::LinkGraph g;
        g.signature = signature_;
        g.inner = names(at["inner"]);
        g.outer = names(at["outer"]);
        g.nodes = read_string_set(at["nodes"]);
        g.edges = read_string_set(at["edges"]);
        Scope scope{g.nodes, g.edges, g.inner, g.outer};
        g.ctrl = crisp_ctrl(at["ctrl"], scope);
        g.link = crisp_map(at["link"], Slot::LinkSource, Slot::LinkTarget, scope);
        return g;
    }

    crisp::Bigraph crisp_bigraph(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "edges", "ctrl", "prnt", "link"});
        const Interface inner = interface(at["inner"]);
        const Interface outer = interface(at["outer"]);
        crisp::Bigraph b;
        b.place.signature = b.link.signature = signature_;
        b.place.inner = inner.width;
        b.place.outer = outer.width;
        b.link.inner = inner.names;
        b.link.outer = outer.names;
        b.place.nodes = b.link.nodes = read_string_set(at["nodes"]);
        b.link.edges = read_string_set(at["edges"]);
        Scope scope{b.place.nodes, b.link.edges, inner.names, outer.names};
        b.place.ctrl = b.link.ctrl = crisp_ctrl(at["ctrl"], scope);
        b.place.prnt = crisp_map(at["prnt"], Slot::PlaceSource, Slot::PlaceTarget, scope);
        b.link.link = crisp_map(at["link"], Slot::LinkSource, Slot::LinkTarget, scope);
        return b;
    }

    FuzzyPlaceGraph fuzzy_place(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "ctrl", "prnt"});
        FuzzyPlaceGraph g{frame_, signature_, width(at["inner"]), width(at["outer"]), read_string_set(at["nodes"]),
                          FuzzyRelation(frame_), FuzzyRelation(frame_)};
        Scope scope{g.nodes, {}, {}, {}};
        g.ctrl = fuzzy_ctrl(at["ctrl"], scope);
        g.prnt = relation(at["prnt"], Slot::PlaceSource, Slot::PlaceTarget, scope);
        return g;
    }

    FuzzyLinkGraph fuzzy_link(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "edges", "ctrl", "link"});
        FuzzyLinkGraph g{frame_,
                         signature_,
                         names(at["inner"]),
                         names(at["outer"]),
                         read_string_set(at["nodes"]),
                         read_string_set(at["edges"]),
                         FuzzyRelation(frame_),
                         FuzzyRelation(frame_)};
        Scope scope{g.nodes, g.edges, g.inner, g.outer};
        g.ctrl = fuzzy_ctrl(at["ctrl"], scope);
        g.link = relation(at["link"], Slot::LinkSource, Slot::LinkTarget, scope);
        return g;
    }

    FuzzyBigraph fuzzy_bigraph(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "edges", "ctrl", "prnt", "link"});
        const Interface inner = interface(at["inner"]);
        const Interface outer = interface(at["outer"]);
        const auto nodes = read_string_set(at["nodes"]);
        const auto edges = read_string_set(at["edges"]);
        Scope scope{nodes, edges, inner.names, outer.names};
        const auto ctrl = fuzzy_ctrl(at["ctrl"], scope);
        FuzzyPlaceGraph place{frame_, signature_, inner.width, outer.width, nodes, ctrl,
                              relation(at["prnt"], Slot::PlaceSource, Slot::PlaceTarget, scope)};
        FuzzyLinkGraph link{frame_, signature_, inner.names, outer.names, nodes, edges, ctrl,
                            relation(at["link"], Slot::LinkSource, Slot::LinkTarget, scope)};
        return FuzzyBigraph{std::move(place), std::move(link)};
    }

    type2::PlaceGraph type2_place(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "ctrl", "prnt", "beta"});
        const auto nodes = memberships(at["nodes"], TermKind::Node);
        Scope scope{ids(nodes), {}, {}, {}};
        return type2::PlaceGraph{frame_,
                                 signature_,
                                 width(at["inner"]),
                                 width(at["outer"]),
                                 nodes,
                                 fuzzy_ctrl(at["ctrl"], scope),
                                 relation(at["prnt"], Slot::PlaceSource, Slot::PlaceTarget, scope),
                                 read_degree(at["beta"], frame_)};
    }

    type2::LinkGraph type2_link(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "edges", "ctrl", "link", "delta"});
        const auto inner = names(at["inner"]);
        const auto outer = names(at["outer"]);
        const auto nodes = memberships(at["nodes"], TermKind::Node);
        const auto edges = memberships(at["edges"], TermKind::Edge);
        Scope scope{ids(nodes), ids(edges), inner, outer};
        return type2::LinkGraph{frame_,
                                signature_,
                                inner,
                                outer,
                                nodes,
                                edges,
                                fuzzy_ctrl(at["ctrl"], scope),
                                relation(at["link"], Slot::LinkSource, Slot::LinkTarget, scope),
                                read_degree(at["delta"], frame_)};
    }

    type2::Bigraph type2_bigraph(const At& at)
    {
        expect_object(at, {"kind", "inner", "outer", "nodes", "edges", "ctrl", "prnt", "link", "beta", "delta",
                           "gamma"});
        const Interface inner = interface(at["inner"]);
        const Interface outer = interface(at["outer"]);
        const auto nodes = memberships(at["nodes"], TermKind::Node);
        const auto edges = memberships(at["edges"], TermKind::Edge);
        Scope scope{ids(nodes), ids(edges), inner.names, outer.names};
        const auto ctrl = fuzzy_ctrl(at["ctrl"], scope);
        type2::PlaceGraph place{frame_,
                                signature_,
                                inner.width,
                                outer.width,
                                nodes,
                                ctrl,
                                relation(at["prnt"], Slot::PlaceSource, Slot::PlaceTarget, scope),
                                read_degree(at["beta"], frame_)};
        type2::LinkGraph link{frame_,
                              signature_,
                              inner.names,
                              outer.names,
                              nodes,
                              edges,
                              ctrl,
                              relation(at["link"], Slot::LinkSource, Slot::LinkTarget, scope),
                              read_degree(at["delta"], frame_)};
        type2::Bigraph b(std::move(place), std::move(link));
        const FrameValue gamma = read_degree(at["gamma"], frame_);
        if (gamma != b.gamma())
            fail(ParseErrorKind::Gamma, at["gamma"],
                 "gamma " + gamma.to_string() + " differs from beta ∧ delta = " + b.gamma().to_string());
        return b;
    }
};

Signature read_signature(const At& at)
{
    if (!at.value.is_object())
        fail(ParseErrorKind::Schema, at, "expected an object from control to arity");
    Signature out;
    for (const auto& [k, arity] : at.value.items())
        out.arity.emplace(k, read_natural(at[k]));
    return out;
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(ParseErrorKind::Syntax, "offset " + std::to_string(e.byte), e.what());
    }
}

} // namespace

std::string kind_name(const Graph& g)
{
    const json j = std::visit([](const auto& x) { return graph_to_json(x); }, g);
    return j.at("kind").get<std::string>();
}

Document parse(std::string_view text)
{
    const json root = parse_json(text);
    const At at{root, ""};
    expect_object(at, {"frame", "signature", "graphs"});
    Document doc;
    const std::string frame = read_string(at["frame"]);
    try {
        doc.frame = Frame::parse(frame);
    } catch (const DegreeOutOfRange&) {
        fail(ParseErrorKind::UnknownFrame, at["frame"], "unknown frame '" + frame + "'");
    }
    doc.signature = read_signature(at["signature"]);
    const At graphs = at["graphs"];
    if (!graphs.value.is_object())
        fail(ParseErrorKind::Schema, graphs, "expected an object from name to graph");
    Reader reader(doc.frame, doc.signature);
    for (const auto& [name, value] : graphs.value.items())
        doc.graphs.emplace(name, reader.read(graphs[name]));
    return doc;
}

std::string serialize(const Document& doc)
{
    json root;
    root["frame"] = doc.frame.name();
    root["signature"] = json::object();
    for (const auto& [k, arity] : doc.signature.arity)
        root["signature"][k] = arity;
    root["graphs"] = json::object();
    for (const auto& [name, graph] : doc.graphs)
        root["graphs"][name] = std::visit([](const auto& g) { return graph_to_json(g); }, graph);
    return root.dump(2) + "\n";
}

Document read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(ParseErrorKind::Io, path.string(), "cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

void write_file(const std::filesystem::path& path, const Document& doc)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError(ParseErrorKind::Io, path.string(), "cannot open file for writing");
    out << serialize(doc);
    if (!out)
        throw ParseError(ParseErrorKind::Io, path.string(), "write failed");
}

TranslationFile parse_translation(std::string_view text, const Frame& frame)
{
    const json root = parse_json(text);
    const At at{root, ""};
    expect_object(at, {"nodes", "edges"});
    TranslationFile out;
    out.rho_v = FuzzyRelation(frame);
    out.rho_e = FuzzyRelation(frame);
    const At nodes = at["nodes"];
    const At edges = at["edges"];
    if (nodes.value.is_object() && edges.value.is_object()) {
        for (const auto& [a, b] : nodes.value.items())
            out.renaming.nodes.emplace(a, read_string(nodes[a]));
        for (const auto& [a, b] : edges.value.items())
            out.renaming.edges.emplace(a, read_string(edges[a]));
        return out;
    }
    out.graded = true;
    auto graded = [&](const At& list, FuzzyRelation& into, Term (*make)(std::string)) {
        expect_array(list);
        for (std::size_t i = 0; i < list.value.size(); ++i) {
            const At entry = list[i];
            expect_array(entry, 3);
            into.set(make(read_string(entry[0])), make(read_string(entry[1])), read_degree(entry[2], frame));
        }
    };
    graded(nodes, out.rho_v, &Term::node);
    graded(edges, out.rho_e, &Term::edge);
    return out;
}

} // namespace fbg::io
