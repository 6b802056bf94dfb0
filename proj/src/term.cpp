#include "fbg/term.hpp"

#include "fbg/error.hpp"

namespace fbg {

std::string Term::to_string() const
{
    switch (kind_) {
    case TermKind::Site:
        return "site " + std::to_string(index_);
    case TermKind::Root:
        return "root " + std::to_string(index_);
    case TermKind::Node:
        return "node " + id_;
    case TermKind::Edge:
        return "edge " + id_;
    case TermKind::InnerName:
        return "inner " + id_;
    case TermKind::OuterName:
        return "outer " + id_;
    case TermKind::Port:
        return "port (" + id_ + "," + std::to_string(index_) + ")";
    case TermKind::Control:
        return "control " + id_;
    }
    return {};
}

std::string Interface::to_string() const
{
    std::string out = "<" + std::to_string(width) + ",{";
    bool first = true;
    for (const auto& n : names) {
        if (!first)
            out += ",";
        out += n;
        first = false;
    }
    return out + "}>";
}

std::size_t Signature::arity_of(const std::string& control) const
{
    auto it = arity.find(control);
    if (it == arity.end())
        throw SignatureConflict("control '" + control + "' is not in the signature");
    return it->second;
}

Signature Signature::merge(const Signature& a, const Signature& b)
{
    Signature out = a;
    for (const auto& [control, ar] : b.arity) {
        auto [it, inserted] = out.arity.emplace(control, ar);
        if (!inserted && it->second != ar)
            throw SignatureConflict("control '" + control + "' has arity " +
                                    std::to_string(it->second) + " and " + std::to_string(ar));
    }
    return out;
}

bool ValidationReport::has(std::string_view rule) const
{
    for (const auto& v : violations)
        if (v.rule == rule)
            return true;
    return false;
}

void ValidationReport::add(std::string rule, std::string detail)
{
    violations.push_back({std::move(rule), std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other, std::string_view prefix)
{
    for (const auto& v : other.violations)
        violations.push_back({v.rule, std::string(prefix) + v.detail});
}

} // namespace fbg
