#include "helpers.hpp"

#include "fbg/cli.hpp"
#include "fbg/generate.hpp"
#include "fbg/model_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fbg;
using namespace helpers;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string figure = (fs::path(FBG_DATA_DIR) / "h_figure.fbg.json").string();

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// A scratch directory removed on destruction.
struct Scratch {
    fs::path dir;

    Scratch()
    {
        static int counter = 0;
        dir = fs::temp_directory_path() / ("fbg_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(dir / name, std::ios::binary) << text;
        return (dir / name).string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

/// Two ions a : 1 -> <1,{y}> and b : <1,{y}> -> <1,{z}> as fuzzy bigraphs.
io::Document ions()
{
    io::Document doc;
    doc.frame = U;
    doc.signature = Signature{{{"K", 1}}};
    auto make = [&](const char* v, NameSet inner, const char* y, const char* degree) {
        FuzzyPlaceGraph p;
        p.frame = U;
        p.signature = doc.signature;
        p.inner = 1;
        p.outer = 1;
        p.nodes = {v};
        p.ctrl.set(node(v), control("K"), U.top());
        p.prnt.set(site(0), node(v), u(degree));
        p.prnt.set(node(v), root(0), U.top());
        FuzzyLinkGraph l;
        l.frame = U;
        l.signature = doc.signature;
        l.inner = inner;
        l.outer = {y};
        l.nodes = p.nodes;
        l.ctrl = p.ctrl;
        l.link.set(port(v, 0), outer(y), U.top());
        for (const auto& x : inner)
            l.link.set(Term::inner_name(x), outer(y), u(degree));
        return make_bigraph(p, l);
    };
    doc.graphs.emplace("A", make("a", {}, "y", "0.5"));
    doc.graphs.emplace("B", make("b", {"y"}, "z", "0.8"));
    return doc;
}

} // namespace

TEST_CASE("validate succeeds on the figure")
{
    auto r = run({"validate", figure});
    CHECK(r.code == cli::Ok);
    CHECK(r.out == "H (crisp-bigraph): valid\n");
    CHECK(run({"validate", figure + "#H"}).code == cli::Ok);
}

TEST_CASE("validate reports violations with exit code 1")
{
    Scratch s;
    json j = json::parse(io::serialize(io::read_file(figure)));
    j["graphs"]["H"]["prnt"].push_back(json::array({{{"node", "v5"}}, {{"node", "v5"}}}));
    // Replace v5's parent with itself.
    auto& prnt = j["graphs"]["H"]["prnt"];
    for (auto it = prnt.begin(); it != prnt.end(); ++it)
        if ((*it)[0] == json{{"node", "v5"}} && (*it)[1] == json{{"node", "v3"}}) {
            prnt.erase(it);
            break;
        }
    auto path = s.write("cyclic.fbg.json", j.dump());
    auto r = run({"validate", path});
    CHECK(r.code == cli::Failure);
    CHECK(r.out.find("acyclicity") != std::string::npos);

    auto js = run({"--format", "json", "validate", path});
    CHECK(js.code == cli::Failure);
    auto parsed = json::parse(js.out);
    CHECK(parsed["valid"] == false);
    CHECK(parsed["graphs"][0]["violations"][0]["rule"] == "acyclicity");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"frobnicate"}).code == cli::Usage);
    CHECK(run({}).code == cli::Usage);
    CHECK(run({"validate"}).code == cli::Usage);
    CHECK(run({"export-dot", figure, "--view", "sideways"}).code == cli::Usage);
    CHECK(run({"laws"}).code == cli::Usage);
    CHECK(run({"--help"}).code == cli::Ok);
}

TEST_CASE("input errors exit with 3")
{
    Scratch s;
    CHECK(run({"validate", s.path("missing.json")}).code == cli::InputError);
    auto bad = s.write("bad.json", "{\"frame\": \"unit-interval\", \"graphs\": {");
    auto r = run({"validate", bad});
    CHECK(r.code == cli::InputError);
    CHECK(r.err.find("offset") != std::string::npos);
    CHECK(run({"validate", figure + "#Nope"}).code == cli::InputError);
    auto range = s.write("range.json", R"({"frame": "chain:3", "signature": {}, "graphs": {"T": {
        "kind": "type2-place", "inner": 0, "outer": 1, "nodes": {"v": "3"}, "ctrl": [],
        "prnt": [], "beta": "2"}}})");
    CHECK(run({"validate", range}).code == cli::InputError);
}

TEST_CASE("compose writes a canonical model and is deterministic")
{
    Scratch s;
    auto model = s.write("ions.fbg.json", io::serialize(ions()));
    auto r1 = run({"compose", "--left", model + "#B", "--right", model + "#A", "--name", "BA"});
    auto r2 = run({"compose", "--left", model + "#B", "--right", model + "#A", "--name", "BA"});
    REQUIRE(r1.code == cli::Ok);
    CHECK(r1.out == r2.out);
    auto doc = io::parse(r1.out);
    const auto& ba = std::get<FuzzyBigraph>(doc.graphs.at("BA"));
    CHECK(ba.place.prnt.at(node("a"), node("b")) == u("0.8"));
    CHECK(ba.place.prnt.at(site(0), node("a")) == u("0.5"));
    CHECK(ba.link.link.at(port("a", 0), outer("z")) == u("0.8"));

    auto written = run({"--format", "json", "compose", "--left", model + "#B", "--right", model + "#A", "--out",
                        s.path("ba.fbg.json")});
    CHECK(written.code == cli::Ok);
    CHECK(json::parse(written.out)["outer"] == "<1,{z}>");
    CHECK(io::read_file(s.path("ba.fbg.json")).graphs.size() == 1);
}

TEST_CASE("composition errors exit with 1")
{
    Scratch s;
    auto model = s.write("ions.fbg.json", io::serialize(ions()));
    auto r = run({"compose", "--left", model + "#A", "--right", model + "#B"});
    CHECK(r.code == cli::Failure);
    CHECK(r.err.find("interface mismatch") != std::string::npos);
    CHECK(run({"compose", "--left", figure, "--right", figure}).code == cli::Failure);
}

TEST_CASE("tensor places graphs side by side")
{
    Scratch s;
    auto model = s.write("ions.fbg.json", io::serialize(ions()));
    auto r = run({"tensor", "--left", model + "#A", "--right", model + "#B"});
    REQUIRE(r.code == cli::Ok);
    auto doc = io::parse(r.out);
    REQUIRE(doc.graphs.size() == 1);
    const auto& t = std::get<FuzzyBigraph>(doc.graphs.begin()->second);
    CHECK(t.inner().to_string() == "<2,{y}>");
    CHECK(t.outer().to_string() == "<2,{y,z}>");
    CHECK(run({"tensor", "--left", model + "#A", "--right", model + "#A"}).code == cli::Failure);
}

TEST_CASE("support lists nodes and edges")
{
    auto r = run({"support", figure});
    CHECK(r.code == cli::Ok);
    CHECK(r.out.find("nodes: {v0,v1,v2,v3,v4,v5}") != std::string::npos);
    CHECK(r.out.find("edges: {e0,e1}") != std::string::npos);
    auto js = json::parse(run({"--format", "json", "support", figure}).out);
    CHECK(js["edges"].size() == 2);
}

TEST_CASE("translate-check on a renamed copy")
{
    Scratch s;
    auto doc = io::read_file(figure);
    auto h = fuzzify(std::get<crisp::Bigraph>(doc.graphs.at("H")), U);
    SupportTranslation rho;
    for (const auto& v : h.place.nodes)
        rho.nodes.emplace(v, "w" + v.substr(1));
    for (const auto& e : h.link.edges)
        rho.edges.emplace(e, "d" + e.substr(1));
    io::Document g;
    g.frame = U;
    g.signature = doc.signature;
    g.graphs.emplace("G", apply_translation(rho, h));
    auto f_path = s.write("f.fbg.json", io::serialize(doc));
    auto g_path = s.write("g.fbg.json", io::serialize(g));
    json r = {{"nodes", rho.nodes}, {"edges", rho.edges}};
    auto rho_path = s.write("rho.json", r.dump());

    auto ok = run({"translate-check", "--rho", rho_path, f_path, g_path});
    CHECK(ok.code == cli::Ok);
    CHECK(ok.out.find("parents: pass") != std::string::npos);

    r["nodes"]["v0"] = "w1";
    r["nodes"]["v1"] = "w0";
    auto swapped = s.write("swapped.json", r.dump());
    auto bad = run({"translate-check", "--rho", swapped, f_path, g_path});
    CHECK(bad.code == cli::Failure);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("laws on generated arrows pass and are reproducible")
{
    auto a = run({"laws", "--generate", "8", "--seed", "3"});
    auto b = run({"laws", "--generate", "8", "--seed", "3"});
    CHECK(a.code == cli::Ok);
    CHECK(a.out == b.out);
    CHECK(a.out.find("violations: 0") != std::string::npos);
    auto js = json::parse(run({"--format", "json", "laws", "--generate", "6", "--frame", "chain:5"}).out);
    CHECK(js["ok"] == true);
    CHECK(js["arrows"] == 6);
}

TEST_CASE("laws on a model file")
{
    Scratch s;
    auto model = s.write("ions.fbg.json", io::serialize(ions()));
    auto r = run({"laws", model});
    CHECK(r.code == cli::Ok);
    CHECK(r.out.find("pairs checked: 1") != std::string::npos);
    CHECK(run({"laws", figure}).code == cli::Failure);
}

TEST_CASE("export-dot prints the chosen view")
{
    auto place = run({"export-dot", figure});
    CHECK(place.code == cli::Ok);
    CHECK(place.out.rfind("digraph \"H\"", 0) == 0);
    auto link = run({"export-dot", figure + "#H", "--view", "link"});
    CHECK(link.out.rfind("graph \"H\"", 0) == 0);
    CHECK(run({"export-dot", figure, "--view", "link"}).out == link.out);
}
