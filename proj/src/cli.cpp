#include "fbg/cli.hpp"

#include "fbg/bigraph_category.hpp"
#include "fbg/dot.hpp"
#include "fbg/generate.hpp"
#include "fbg/model_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fbg::cli {

namespace {

using nlohmann::json;

struct Loaded {
    io::Document doc;
    std::string name;

    const io::Graph& graph() const { return doc.graphs.at(name); }
};

/// FILE or FILE#GRAPH; the graph may be omitted when the file holds one.
Loaded load(const std::string& ref)
{
    const auto hash = ref.rfind('#');
    const std::string file = hash == std::string::npos ? ref : ref.substr(0, hash);
    std::string name = hash == std::string::npos ? std::string() : ref.substr(hash + 1);
    Loaded out{io::read_file(file), {}};
    if (name.empty()) {
        if (out.doc.graphs.size() != 1)
            throw UnknownGraph(file + " defines " + std::to_string(out.doc.graphs.size()) +
                               " graphs; name one as " + file + "#GRAPH");
        name = out.doc.graphs.begin()->first;
    } else if (!out.doc.graphs.contains(name)) {
        throw UnknownGraph(file + " defines no graph named '" + name + "'");
    }
    out.name = name;
    return out;
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io::ParseError(io::ParseErrorKind::Io, path, "cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string set_to_string(const std::set<std::string>& s)
{
    std::string out = "{";
    for (const auto& x : s)
        out += (out.size() > 1 ? "," : "") + x;
    return out + "}";
}

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

ValidationReport validate_graph(const io::Graph& g)
{
    return std::visit(Overload{
                          [](const crisp::Bigraph& b) { return crisp::validate_bigraph(b); },
                          [](const crisp::PlaceGraph& x) { return crisp::validate(x); },
                          [](const crisp::LinkGraph& x) { return crisp::validate(x); },
                          [](const auto& x) { return validate(x); },
                      },
                      g);
}

std::pair<Interface, Interface> interfaces(const io::Graph& g)
{
    return std::visit(Overload{
                          [](const crisp::PlaceGraph& x) { return std::pair{Interface{x.inner, {}}, Interface{x.outer, {}}}; },
                          [](const FuzzyPlaceGraph& x) { return std::pair{Interface{x.inner, {}}, Interface{x.outer, {}}}; },
                          [](const type2::PlaceGraph& x) { return std::pair{Interface{x.inner, {}}, Interface{x.outer, {}}}; },
                          [](const crisp::LinkGraph& x) { return std::pair{Interface{0, x.inner}, Interface{0, x.outer}}; },
                          [](const FuzzyLinkGraph& x) { return std::pair{Interface{0, x.inner}, Interface{0, x.outer}}; },
                          [](const type2::LinkGraph& x) { return std::pair{Interface{0, x.inner}, Interface{0, x.outer}}; },
                          [](const auto& x) { return std::pair{x.inner(), x.outer()}; },
                      },
                      g);
}

template <class T>
void set_signature(T& g, const Signature& s)
{
    if constexpr (std::is_same_v<T, crisp::Bigraph> || std::is_same_v<T, FuzzyBigraph>) {
        g.place.signature = s;
        g.link.signature = s;
    } else if constexpr (std::is_same_v<T, type2::Bigraph>) {
        auto place = g.place();
        auto link = g.link();
        place.signature = link.signature = s;
        g = type2::Bigraph(std::move(place), std::move(link));
    } else {
        g.signature = s;
    }
}

enum class Operation { Compose, Tensor };

/// Crisp place and link graphs go through their two-point images.
template <class T>
io::Graph combine(Operation op, const T& left, const T& right)
{
    if constexpr (std::is_same_v<T, crisp::PlaceGraph> || std::is_same_v<T, crisp::LinkGraph>) {
        auto l = fuzzify(left);
        auto r = fuzzify(right);
        return defuzzify(op == Operation::Compose ? compose(l, r) : tensor(l, r));
    } else if constexpr (std::is_same_v<T, crisp::Bigraph>) {
        return op == Operation::Compose ? crisp::compose(left, right) : crisp::tensor(left, right);
    } else if constexpr (std::is_same_v<T, type2::PlaceGraph> || std::is_same_v<T, type2::LinkGraph> ||
                         std::is_same_v<T, type2::Bigraph>) {
        if (op == Operation::Tensor)
            throw Error("tensor is not defined for type-2 graphs");
        return type2::compose(left, right);
    } else {
        return op == Operation::Compose ? compose(left, right) : tensor(left, right);
    }
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json_output = false;

    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

int cmd_validate(const Context& ctx, const std::string& ref)
{
    io::Document doc;
    std::vector<std::string> names;
    if (ref.find('#') == std::string::npos) {
        doc = io::read_file(ref);
        for (const auto& [name, g] : doc.graphs)
            names.push_back(name);
    } else {
        Loaded l = load(ref);
        names.push_back(l.name);
        doc = std::move(l.doc);
    }
    bool all_valid = true;
    json records = json::array();
    for (const auto& name : names) {
        const auto& g = doc.graphs.at(name);
        const auto report = validate_graph(g);
        all_valid = all_valid && report.ok();
        if (ctx.json_output) {
            json violations = json::array();
            for (const auto& v : report.violations)
                violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
            records.push_back(
                {{"name", name}, {"kind", io::kind_name(g)}, {"valid", report.ok()}, {"violations", violations}});
            continue;
        }
        ctx.out << name << " (" << io::kind_name(g) << "): ";
        if (report.ok()) {
            ctx.out << "valid\n";
            continue;
        }
        ctx.out << report.violations.size() << (report.violations.size() == 1 ? " violation\n" : " violations\n");
        for (const auto& v : report.violations)
            ctx.out << "  " << v.rule << ": " << v.detail << "\n";
    }
    if (ctx.json_output)
        ctx.emit({{"valid", all_valid}, {"graphs", records}});
    return all_valid ? Ok : Failure;
}

int cmd_combine(const Context& ctx, Operation op, const std::string& left_ref, const std::string& right_ref,
                const std::string& out_path, const std::string& name)
{
    const Loaded left = load(left_ref);
    const Loaded right = load(right_ref);
    if (left.graph().index() != right.graph().index())
        throw Error("cannot combine a " + io::kind_name(left.graph()) + " with a " + io::kind_name(right.graph()));
    const bool crisp_kind = left.graph().index() <= 2;
    if (!crisp_kind && left.doc.frame != right.doc.frame)
        throw InstanceMismatch("operands use frames " + left.doc.frame.name() + " and " + right.doc.frame.name());
    const Signature signature = Signature::merge(left.doc.signature, right.doc.signature);

    io::Document result;
    result.frame = left.doc.frame;
    result.signature = signature;
    io::Graph combined = std::visit(
        [&](const auto& l) -> io::Graph {
            using T = std::decay_t<decltype(l)>;
            T a = l;
            T b = std::get<T>(right.graph());
            set_signature(a, signature);
            set_signature(b, signature);
            return combine(op, a, b);
        },
        left.graph());
    const auto [inner, outer] = interfaces(combined);
    const std::string kind = io::kind_name(combined);
    result.graphs.emplace(name, std::move(combined));

    if (out_path.empty()) {
        ctx.out << io::serialize(result);
        return Ok;
    }
    io::write_file(out_path, result);
    if (ctx.json_output)
        ctx.emit({{"written", out_path},
                  {"name", name},
                  {"kind", kind},
                  {"inner", inner.to_string()},
                  {"outer", outer.to_string()}});
    else
        ctx.out << "wrote " << name << " (" << kind << ") " << inner.to_string() << " -> " << outer.to_string()
                << " to " << out_path << "\n";
    return Ok;
}

int cmd_support(const Context& ctx, const std::string& ref, bool off_sort_top)
{
    const Loaded l = load(ref);
    auto ids = [](const std::set<std::string>& s) { return s; };
    auto fuzzy_json = [](const FuzzySet& s) {
        json j = json::object();
        for (const auto& [t, d] : s.entries())
            j[t.to_string()] = d.to_string();
        return j;
    };
    auto fuzzy_text = [](const FuzzySet& s) {
        std::string out = "{";
        for (const auto& [t, d] : s.entries())
            out += (out.size() > 1 ? ", " : "") + t.to_string() + ": " + d.to_string();
        return out + "}";
    };
    std::optional<std::set<std::string>> nodes, edges;
    std::optional<FuzzySet> graded;
    std::visit(Overload{
                   [&](const crisp::PlaceGraph& g) { nodes = ids(g.nodes); },
                   [&](const FuzzyPlaceGraph& g) { nodes = ids(g.nodes); },
                   [&](const crisp::LinkGraph& g) { nodes = g.nodes, edges = g.edges; },
                   [&](const FuzzyLinkGraph& g) { nodes = g.nodes, edges = g.edges; },
                   [&](const crisp::Bigraph& g) { nodes = g.place.nodes, edges = g.link.edges; },
                   [&](const FuzzyBigraph& g) { nodes = g.place.nodes, edges = g.link.edges; },
                   [&](const type2::PlaceGraph& g) { graded = type2::support(g); },
                   [&](const type2::LinkGraph& g) {
                       FuzzySet s = disjoint_union(g.nodes, g.edges);
                       if (off_sort_top)
                           for (const auto& [v, m] : g.nodes.entries())
                               s.set(v, g.frame.top());
                       graded = s;
                   },
                   [&](const type2::Bigraph& g) {
                       graded = type2::support(g, off_sort_top ? type2::SupportConvention::OffSortTopForNodes
                                                               : type2::SupportConvention::OffSortBottom);
                   },
               },
               l.graph());
    if (graded) {
        if (ctx.json_output)
            ctx.emit({{"name", l.name}, {"support", fuzzy_json(*graded)}});
        else
            ctx.out << "support: " << fuzzy_text(*graded) << "\n";
        return Ok;
    }
    std::set<std::string> link_support = *nodes;
    if (edges)
        link_support.insert(edges->begin(), edges->end());
    if (ctx.json_output) {
        json j = {{"name", l.name}, {"nodes", *nodes}};
        if (edges)
            j["edges"] = *edges;
        ctx.emit(j);
        return Ok;
    }
    ctx.out << "nodes: " << set_to_string(*nodes) << "\n";
    if (edges) {
        ctx.out << "edges: " << set_to_string(*edges) << "\n";
        ctx.out << "support: " << set_to_string(link_support) << "\n";
    }
    return Ok;
}

int cmd_translate_check(const Context& ctx, const std::string& rho_path, const std::string& f_ref,
                        const std::string& g_ref, bool literal_links)
{
    const Loaded f = load(f_ref);
    const Loaded g = load(g_ref);
    if (f.doc.frame != g.doc.frame)
        throw InstanceMismatch("F and G use frames " + f.doc.frame.name() + " and " + g.doc.frame.name());
    const auto rho = io::parse_translation(read_text(rho_path), f.doc.frame);

    TranslationReport report;
    const Frame frame = f.doc.frame;
    auto as_fuzzy = [&frame](const io::Graph& x) -> std::optional<FuzzyBigraph> {
        if (const auto* b = std::get_if<FuzzyBigraph>(&x))
            return *b;
        if (const auto* c = std::get_if<crisp::Bigraph>(&x))
            return fuzzify(*c, frame);
        return std::nullopt;
    };
    const auto* tf = std::get_if<type2::Bigraph>(&f.graph());
    const auto* tg = std::get_if<type2::Bigraph>(&g.graph());
    if (tf != nullptr && tg != nullptr) {
        auto [rho_v, rho_e] = rho.graded ? std::pair{rho.rho_v, rho.rho_e} : type2::fuzzy_translation(rho.renaming, *tg);
        report = type2::check_support_translation(rho_v, rho_e, *tf, *tg, {literal_links});
    } else if (auto ff = as_fuzzy(f.graph()), fg = as_fuzzy(g.graph()); ff && fg) {
        if (rho.graded)
            throw io::ParseError(io::ParseErrorKind::Schema, rho_path,
                                 "graded translations apply to type-2 bigraphs only");
        report = check_support_translation(rho.renaming, *ff, *fg);
    } else {
        throw Error("translate-check needs two bigraphs of the same family, got " + io::kind_name(f.graph()) +
                    " and " + io::kind_name(g.graph()));
    }

    if (ctx.json_output) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"property", c.property}, {"passed", c.passed}, {"witness", c.witness}});
        ctx.emit({{"ok", report.ok()}, {"checks", checks}});
    } else {
        for (const auto& c : report.checks) {
            ctx.out << c.property << ": " << (c.passed ? "pass" : "FAIL");
            if (!c.passed && !c.witness.empty())
                ctx.out << " (" << c.witness << ")";
            ctx.out << "\n";
        }
    }
    return report.ok() ? Ok : Failure;
}

template <class Payload>
int print_laws(const Context& ctx, const ArrowSystem<Payload>& sys, const LawOptions& options)
{
    const LawReport report = check_category_laws(sys, options);
    if (ctx.json_output) {
        json violations = json::array();
        for (const auto& v : report.violations)
            violations.push_back({{"law", v.law}, {"witness", v.witness}});
        ctx.emit({{"ok", report.ok()},
                  {"arrows", report.arrows},
                  {"objects", sys.objects.size()},
                  {"identity_checks", report.identity_checks},
                  {"pairs", report.pairs},
                  {"triples", report.triples},
                  {"skipped", report.skipped},
                  {"violations", violations}});
    } else {
        ctx.out << "arrows: " << report.arrows << "\n"
                << "objects: " << sys.objects.size() << "\n"
                << "identity checks: " << report.identity_checks << "\n"
                << "pairs checked: " << report.pairs << "\n"
                << "triples checked: " << report.triples << "\n"
                << "skipped (supports overlap): " << report.skipped << "\n"
                << "violations: " << report.violations.size() << "\n";
        for (const auto& v : report.violations)
            ctx.out << "  " << v.law << ": " << v.witness << "\n";
    }
    return report.ok() ? Ok : Failure;
}

int cmd_laws(const Context& ctx, const std::string& file, std::size_t generate, std::size_t objects,
             const std::string& frame_name, const LawOptions& options)
{
    if (file.empty() == (generate == 0))
        throw CLI::ValidationError("laws needs either a model file or --generate N");
    if (generate > 0) {
        gen::Options gen_options;
        gen_options.frame = Frame::parse(frame_name);
        gen::Rng rng(options.seed);
        auto arrows = gen::random_type2_arrows(rng, generate, objects, gen_options);
        return print_laws(ctx, type2_arrow_system(gen_options.frame, arrows), options);
    }
    const io::Document doc = io::read_file(file);
    std::vector<NamedType2> type2_arrows;
    std::vector<NamedFuzzy> fuzzy_arrows;
    for (const auto& [name, g] : doc.graphs) {
        if (const auto* b = std::get_if<type2::Bigraph>(&g))
            type2_arrows.push_back({name, *b});
        else if (const auto* f = std::get_if<FuzzyBigraph>(&g))
            fuzzy_arrows.push_back({name, *f});
    }
    if (!type2_arrows.empty())
        return print_laws(ctx, type2_arrow_system(doc.frame, type2_arrows), options);
    if (!fuzzy_arrows.empty())
        return print_laws(ctx, fuzzy_arrow_system(doc.frame, fuzzy_arrows), options);
    throw Error(file + " contains no fuzzy or type-2 bigraphs");
}

int cmd_export_dot(const Context& ctx, const std::string& ref, const std::string& view)
{
    const Loaded l = load(ref);
    ctx.out << io::export_dot(l.doc, l.name, view == "place" ? io::View::Place : io::View::Link);
    return Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fuzzy bigraph toolkit: validate, compose, tensor and check models", "fbg"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::function<int(const Context&)> action;

    auto* validate = app.add_subcommand("validate", "Validate every graph in a model file (or FILE#GRAPH)");
    std::string validate_ref;
    validate->add_option("file", validate_ref, "Model file")->required();
    validate->callback([&] { action = [&](const Context& c) { return cmd_validate(c, validate_ref); }; });

    std::string left, right, out_path, result_name;
    for (auto [command, op] : {std::pair{"compose", Operation::Compose}, std::pair{"tensor", Operation::Tensor}}) {
        auto* sub = app.add_subcommand(command, op == Operation::Compose ? "Compose LEFT after RIGHT"
                                                                         : "Tensor product LEFT ⊗ RIGHT");
        sub->add_option("--left", left, "FILE[#GRAPH]")->required();
        sub->add_option("--right", right, "FILE[#GRAPH]")->required();
        sub->add_option("--out", out_path, "Output model file (default: standard output)");
        sub->add_option("--name", result_name, "Name of the result graph")
            ->default_val(op == Operation::Compose ? "composite" : "tensor");
        sub->callback([&, op = op] {
            action = [&, op](const Context& c) { return cmd_combine(c, op, left, right, out_path, result_name); };
        });
    }

    auto* support = app.add_subcommand("support", "Print the support of a graph");
    std::string support_ref;
    bool off_sort_top = false;
    support->add_option("file", support_ref, "FILE[#GRAPH]")->required();
    support->add_flag("--off-sort-top", off_sort_top, "Type-2: give every node edge-membership top");
    support->callback([&] { action = [&](const Context& c) { return cmd_support(c, support_ref, off_sort_top); }; });

    auto* translate = app.add_subcommand("translate-check", "Check a support translation from F to G");
    std::string rho_path, f_ref, g_ref;
    bool literal_links = false;
    translate->add_option("--rho", rho_path, "Translation file")->required();
    translate->add_option("f", f_ref, "FILE[#GRAPH] of F")->required();
    translate->add_option("g", g_ref, "FILE[#GRAPH] of G")->required();
    translate->add_flag("--literal-links", literal_links, "Type-2: check the link inequality in its literal form");
    translate->callback([&] {
        action = [&](const Context& c) { return cmd_translate_check(c, rho_path, f_ref, g_ref, literal_links); };
    });

    auto* laws = app.add_subcommand("laws", "Check the fuzzy category laws");
    std::string laws_file;
    std::size_t generate = 0, objects = 3;
    std::string frame_name = "unit-interval";
    LawOptions law_options;
    laws->add_option("file", laws_file, "Model file whose bigraphs are the arrows");
    laws->add_option("--generate", generate, "Generate N coherent type-2 arrows instead of reading a file");
    laws->add_option("--objects", objects, "Number of interfaces for generated arrows")->default_val(3);
    laws->add_option("--frame", frame_name, "Frame for generated arrows")->default_val("unit-interval");
    laws->add_option("--samples", law_options.samples, "Pairs and triples to sample (0: all)")->default_val(0);
    laws->add_option("--seed", law_options.seed, "Random seed")->default_val(42);
    laws->callback([&] {
        action = [&](const Context& c) {
            return cmd_laws(c, laws_file, generate, objects, frame_name, law_options);
        };
    });

    auto* dot = app.add_subcommand("export-dot", "Write a Graphviz view of a graph");
    std::string dot_ref, view = "place";
    dot->add_option("file", dot_ref, "FILE[#GRAPH]")->required();
    dot->add_option("--view", view, "place or link")->check(CLI::IsMember({"place", "link"}))->default_val("place");
    dot->callback([&] { action = [&](const Context& c) { return cmd_export_dot(c, dot_ref, view); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return Ok;
        }
        err << "usage error: " << e.what() << "\n";
        return Usage;
    }

    const Context ctx{out, err, format == "json"};
    try {
        return action(ctx);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const UnknownGraph& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Failure;
    }
}

} // namespace fbg::cli
