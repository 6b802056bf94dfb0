#ifndef FBG_MODEL_IO_HPP
#define FBG_MODEL_IO_HPP

#include "fbg/crisp.hpp"
#include "fbg/error.hpp"
#include "fbg/fuzzy.hpp"
#include "fbg/support.hpp"
#include "fbg/type2.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>

/// The ".fbg.json" model format. A document fixes one frame and one
/// signature and holds named graphs of nine kinds:
///
///   {
///     "frame": "unit-interval",
///     "signature": {"K": 2},
///     "graphs": {
///       "F": {"kind": "fuzzy-bigraph",
///             "inner": {"width": 1, "names": ["x"]}, "outer": {...},
///             "nodes": ["v"], "edges": [],
///             "ctrl": [["v", "K", "1"]],
///             "prnt": [[{"site": 0}, {"node": "v"}, "1/2"], ...],
///             "link": [[{"port": ["v", 0]}, {"name": "y"}, "1"], ...]}
///     }
///   }
///
/// Kinds are "crisp-", "fuzzy-" or "type2-" followed by "place", "link" or
/// "bigraph". Crisp graphs give ctrl as an object and prnt/link as pairs;
/// type-2 graphs give nodes and edges as objects from identifier to
/// membership and carry "beta", "delta" and (bigraphs) "gamma".
namespace fbg::io {

using Graph = std::variant<crisp::PlaceGraph, crisp::LinkGraph, crisp::Bigraph, FuzzyPlaceGraph, FuzzyLinkGraph,
                           FuzzyBigraph, type2::PlaceGraph, type2::LinkGraph, type2::Bigraph>;

struct Document {
    Frame frame = Frame::unit_interval();
    Signature signature;
    std::map<std::string, Graph> graphs;

    friend bool operator==(const Document&, const Document&) = default;
};

enum class ParseErrorKind { Syntax, Schema, UnknownFrame, DegreeRange, DanglingIdentifier, Gamma, Io };

class ParseError : public Error {
public:
    /// `where` is a byte offset ("offset 12") or a JSON pointer ("/graphs/H/prnt/0").
    ParseError(ParseErrorKind kind, std::string where, const std::string& message)
        : Error(where.empty() ? message : where + ": " + message), kind_(kind), where_(std::move(where))
    {
    }

    ParseErrorKind kind() const noexcept { return kind_; }
    const std::string& where() const noexcept { return where_; }

private:
    ParseErrorKind kind_;
    std::string where_;
};

/// "fuzzy-bigraph" etc.
std::string kind_name(const Graph& g);

/// Rejects unknown fields, degrees outside the frame, references to
/// undeclared nodes, edges, controls or names, and inconsistent gamma.
/// Semantic invariants (acyclicity, totality, arity) are left to the
/// validators.
Document parse(std::string_view text);

/// Canonical text: sorted keys and entries, two-space indent, LF endings,
/// trailing newline. Graphs are written with the document's frame and
/// signature.
std::string serialize(const Document& doc);

Document read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Document& doc);

/// A translation file: {"nodes": {...}, "edges": {...}} mapping identifiers
/// of F to identifiers of G, or for type-2 graphs {"nodes": [["v", "w",
/// "4/5"], ...], "edges": [...]} listing graded entries.
struct TranslationFile {
    SupportTranslation renaming;
    bool graded = false;
    FuzzyRelation rho_v{Frame::unit_interval()};
    FuzzyRelation rho_e{Frame::unit_interval()};
};

TranslationFile parse_translation(std::string_view text, const Frame& frame);

} // namespace fbg::io

#endif
