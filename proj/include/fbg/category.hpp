#ifndef FBG_CATEGORY_HPP
#define FBG_CATEGORY_HPP

#include "fbg/error.hpp"
#include "fbg/lattice.hpp"
#include "fbg/term.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fbg {

/// f : source -p-> target, carrying an arbitrary payload.
template <class Payload>
struct FuzzyArrow {
    std::string name;
    Interface source;
    Interface target;
    Payload payload;
    FrameValue degree;
};

template <class Payload>
struct ArrowSystem {
    Frame frame = Frame::unit_interval();
    std::set<Interface> objects;
    std::vector<FuzzyArrow<Payload>> arrows;
    /// g ∘ f on payloads; nullopt when this particular pair cannot be
    /// formed (overlapping supports, for instance).
    std::function<std::optional<Payload>(const Payload& g, const Payload& f)> compose;
    std::map<Interface, FuzzyArrow<Payload>> identities;
    /// When set, the degree of a composite is measured from its payload
    /// rather than computed as the meet of the operands' degrees; the law
    /// checker then verifies that both agree.
    std::function<FrameValue(const Payload&)> plausibility;
};

/// Throws NotComposable when target(f) differs from source(g) or the
/// payloads do not compose.
template <class Payload>
FuzzyArrow<Payload> compose_arrow(const ArrowSystem<Payload>& sys, const FuzzyArrow<Payload>& g,
                                  const FuzzyArrow<Payload>& f)
{
    if (f.target != g.source)
        throw NotComposable("cannot compose " + g.name + " after " + f.name + ": " + f.target.to_string() +
                            " is not " + g.source.to_string());
    std::optional<Payload> payload = sys.compose(g.payload, f.payload);
    if (!payload)
        throw NotComposable("payloads of " + g.name + " and " + f.name + " do not compose");
    FrameValue degree = sys.plausibility ? sys.plausibility(*payload) : meet(f.degree, g.degree);
    return {g.name + "∘" + f.name, f.source, g.target, std::move(*payload), degree};
}

struct LawOptions {
    /// 0 checks every composable pair and triple; otherwise that many of
    /// each are drawn with the seed.
    std::size_t samples = 0;
    std::uint64_t seed = 42;
};

struct LawViolation {
    std::string law;
    std::string witness;
};

struct LawReport {
    std::size_t arrows = 0;
    std::size_t identity_checks = 0;
    std::size_t pairs = 0;
    std::size_t triples = 0;
    /// Pairs or triples whose payloads did not compose.
    std::size_t skipped = 0;
    std::vector<LawViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

template <class Payload>
bool same_arrow(const FuzzyArrow<Payload>& a, const FuzzyArrow<Payload>& b)
{
    return a.source == b.source && a.target == b.target && a.degree == b.degree && a.payload == b.payload;
}

template <class T>
void sample_in_place(std::vector<T>& items, std::size_t samples, std::mt19937_64& rng)
{
    if (samples == 0 || samples >= items.size())
        return;
    // Partial Fisher-Yates, then restore enumeration order for stable reports.
    std::vector<std::size_t> index(items.size());
    for (std::size_t i = 0; i < index.size(); ++i)
        index[i] = i;
    for (std::size_t i = 0; i < samples; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, index.size() - 1);
        std::swap(index[i], index[pick(rng)]);
    }
    index.resize(samples);
    std::sort(index.begin(), index.end());
    std::vector<T> out;
    out.reserve(samples);
    for (auto i : index)
        out.push_back(std::move(items[i]));
    items = std::move(out);
}

} // namespace detail

/// Identity laws (degree top, units on both sides), associativity and the
/// degree law p(g∘f) = p(f) ∧ p(g), each compared exactly.
template <class Payload>
LawReport check_category_laws(const ArrowSystem<Payload>& sys, const LawOptions& options = {})
{
    using Arrow = FuzzyArrow<Payload>;
    LawReport report;
    report.arrows = sys.arrows.size();
    std::mt19937_64 rng(options.seed);

    for (const auto& [object, id] : sys.identities) {
        if (!id.degree.is_top())
            report.violations.push_back({"identity", id.name + " has degree " + id.degree.to_string()});
        if (id.source != object || id.target != object)
            report.violations.push_back({"identity", id.name + " is not an endo-arrow on " + object.to_string()});
    }
    auto identity_on = [&](const Interface& at) -> const Arrow* {
        auto it = sys.identities.find(at);
        return it == sys.identities.end() ? nullptr : &it->second;
    };
    auto attempt = [&](const Arrow& g, const Arrow& f) -> std::optional<Arrow> {
        try {
            return compose_arrow(sys, g, f);
        } catch (const NotComposable&) {
            return std::nullopt;
        }
    };

    for (const auto& f : sys.arrows) {
        for (const Interface* end : {&f.source, &f.target}) {
            const Arrow* id = identity_on(*end);
            if (id == nullptr) {
                report.violations.push_back({"identity", "no identity on " + end->to_string()});
                continue;
            }
            ++report.identity_checks;
            auto composite = end == &f.target ? attempt(*id, f) : attempt(f, *id);
            if (!composite || !detail::same_arrow(*composite, f))
                report.violations.push_back(
                    {"identity", (end == &f.target ? id->name + "∘" + f.name : f.name + "∘" + id->name) +
                                     " differs from " + f.name});
        }
    }

    auto check_degree = [&](const Arrow& composite, const Arrow& g, const Arrow& f) {
        FrameValue expected = meet(f.degree, g.degree);
        if (composite.degree != expected)
            report.violations.push_back({"degree", composite.name + " has degree " + composite.degree.to_string() +
                                                       " but " + f.degree.to_string() + " ∧ " +
                                                       g.degree.to_string() + " = " + expected.to_string()});
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < sys.arrows.size(); ++i)
        for (std::size_t j = 0; j < sys.arrows.size(); ++j)
            if (sys.arrows[i].target == sys.arrows[j].source)
                pairs.emplace_back(j, i);
    detail::sample_in_place(pairs, options.samples, rng);
    for (const auto& [gi, fi] : pairs) {
        const Arrow& g = sys.arrows[gi];
        const Arrow& f = sys.arrows[fi];
        auto composite = attempt(g, f);
        if (!composite) {
            ++report.skipped;
            continue;
        }
        ++report.pairs;
        check_degree(*composite, g, f);
    }

    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < sys.arrows.size(); ++i)
        for (std::size_t j = 0; j < sys.arrows.size(); ++j) {
            if (sys.arrows[i].target != sys.arrows[j].source)
                continue;
            for (std::size_t k = 0; k < sys.arrows.size(); ++k)
                if (sys.arrows[j].target == sys.arrows[k].source)
                    triples.push_back({k, j, i});
        }
    detail::sample_in_place(triples, options.samples, rng);
    for (const auto& [hi, gi, fi] : triples) {
        const Arrow& h = sys.arrows[hi];
        const Arrow& g = sys.arrows[gi];
        const Arrow& f = sys.arrows[fi];
        auto gf = attempt(g, f);
        auto hg = attempt(h, g);
        std::optional<Arrow> left, right;
        if (gf)
            left = attempt(h, *gf);
        if (hg)
            right = attempt(*hg, f);
        if (!left || !right) {
            ++report.skipped;
            continue;
        }
        ++report.triples;
        check_degree(*left, h, *gf);
        check_degree(*right, *hg, f);
        if (!detail::same_arrow(*left, *right))
            report.violations.push_back({"associativity", "(" + h.name + ", " + g.name + ", " + f.name + "): " +
                                                              h.name + "∘(" + g.name + "∘" + f.name + ") differs from (" +
                                                              h.name + "∘" + g.name + ")∘" + f.name});
    }
    return report;
}

} // namespace fbg

#endif
