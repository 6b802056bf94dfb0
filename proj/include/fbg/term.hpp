#ifndef FBG_TERM_HPP
#define FBG_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fbg {

enum class TermKind : std::uint8_t { Site, Root, Node, Edge, InnerName, OuterName, Port, Control };

/// Anything a relation can relate: sites and roots (ordinals), nodes, edges,
/// inner and outer names, ports (node, index), and controls. Kinds never
/// compare equal to each other, so a ⊎ of carriers is a plain union of terms.
class Term {
public:
    static Term site(std::size_t i) { return Term(TermKind::Site, {}, i); }
    static Term root(std::size_t i) { return Term(TermKind::Root, {}, i); }
    static Term node(std::string id) { return Term(TermKind::Node, std::move(id), 0); }
    static Term edge(std::string id) { return Term(TermKind::Edge, std::move(id), 0); }
    static Term inner_name(std::string name) { return Term(TermKind::InnerName, std::move(name), 0); }
    static Term outer_name(std::string name) { return Term(TermKind::OuterName, std::move(name), 0); }
    static Term port(std::string node, std::size_t i) { return Term(TermKind::Port, std::move(node), i); }
    static Term control(std::string name) { return Term(TermKind::Control, std::move(name), 0); }

    TermKind kind() const noexcept { return kind_; }
    /// Node, edge, name or control identifier; the owning node for ports.
    const std::string& id() const noexcept { return id_; }
    /// Site/root ordinal, or port index.
    std::size_t index() const noexcept { return index_; }

    bool is(TermKind k) const noexcept { return kind_ == k; }

    std::string to_string() const;

    friend auto operator<=>(const Term&, const Term&) = default;

private:
    Term(TermKind kind, std::string id, std::size_t index)
        : kind_(kind), id_(std::move(id)), index_(index) {}

    TermKind kind_;
    std::string id_;
    std::size_t index_;
};

using NameSet = std::set<std::string>;

/// ⟨width, names⟩. Objects of the bigraphical categories.
struct Interface {
    std::size_t width = 0;
    NameSet names;

    /// Canonical rendering with sorted names, e.g. "<3,{x1,x2}>".
    std::string to_string() const;

    friend auto operator<=>(const Interface&, const Interface&) = default;
};

/// Controls and their arities.
struct Signature {
    std::map<std::string, std::size_t> arity;

    bool has(const std::string& control) const { return arity.contains(control); }
    std::size_t arity_of(const std::string& control) const;

    /// Union; throws SignatureConflict on disagreeing arities.
    static Signature merge(const Signature& a, const Signature& b);

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct Violation {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(std::string_view rule) const;
    void add(std::string rule, std::string detail);
    void append(const ValidationReport& other, std::string_view prefix = {});
};

} // namespace fbg

#endif
