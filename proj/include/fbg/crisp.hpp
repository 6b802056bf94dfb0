#ifndef FBG_CRISP_HPP
#define FBG_CRISP_HPP

#include "fbg/term.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

/// Milner's concrete bigraphs. Composition and tensor are the two-point
/// image of the fuzzy operations.
namespace fbg::crisp {

struct PlaceGraph {
    Signature signature;
    std::size_t inner = 0; ///< sites 0..inner-1
    std::size_t outer = 0; ///< roots 0..outer-1
    std::set<std::string> nodes;
    std::map<std::string, std::string> ctrl;
    /// Site or node -> node or root.
    std::map<Term, Term> prnt;

    friend bool operator==(const PlaceGraph&, const PlaceGraph&) = default;
};

struct LinkGraph {
    Signature signature;
    NameSet inner;
    NameSet outer;
    std::set<std::string> nodes;
    std::set<std::string> edges;
    std::map<std::string, std::string> ctrl;
    /// Inner name or port -> edge or outer name.
    std::map<Term, Term> link;

    friend bool operator==(const LinkGraph&, const LinkGraph&) = default;
};

struct Bigraph {
    PlaceGraph place;
    LinkGraph link;

    Interface inner() const { return {place.inner, link.inner}; }
    Interface outer() const { return {place.outer, link.outer}; }

    friend bool operator==(const Bigraph&, const Bigraph&) = default;
};

/// Ports (v, i), i < ar(ctrl(v)), of every node with a known control.
std::set<Term> ports(const Signature& signature, const std::map<std::string, std::string>& ctrl);

/// True iff every member of the family is nonempty and the family covers
/// the vertex set.
bool is_hypergraph(const std::set<std::string>& vertices,
                   const std::vector<std::set<std::string>>& edge_family);

ValidationReport validate(const PlaceGraph& g);
ValidationReport validate(const LinkGraph& g);
/// Rules: "totality", "codomain", "acyclicity", "control", "arity",
/// "shared-support".
ValidationReport validate_bigraph(const Bigraph& b);

/// Identity on an interface: no nodes, every site/name mapped to itself.
Bigraph identity(const Interface& at, const Signature& signature = {});

/// g ∘ f for f: <k,X> -> <m,Y> and g: <m,Y> -> <n,Z> with disjoint supports.
Bigraph compose(const Bigraph& g, const Bigraph& f);
/// f ⊗ g with disjoint supports and disjoint inner/outer name sets.
Bigraph tensor(const Bigraph& f, const Bigraph& g);

} // namespace fbg::crisp

#endif
