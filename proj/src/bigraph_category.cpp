#include "fbg/bigraph_category.hpp"

namespace fbg {

ArrowSystem<type2::Bigraph> type2_arrow_system(const Frame& frame, const std::vector<NamedType2>& arrows)
{
    ArrowSystem<type2::Bigraph> sys;
    sys.frame = frame;
    for (const auto& [name, b] : arrows) {
        sys.arrows.push_back({name, b.inner(), b.outer(), b, b.gamma()});
        sys.objects.insert(b.inner());
        sys.objects.insert(b.outer());
    }
    for (const auto& object : sys.objects) {
        auto id = type2::identity(object, frame);
        sys.identities.emplace(object, FuzzyArrow<type2::Bigraph>{"id" + object.to_string(), object, object, id,
                                                                  id.gamma()});
    }
    sys.compose = [](const type2::Bigraph& g, const type2::Bigraph& f) -> std::optional<type2::Bigraph> {
        try {
            return type2::compose(g, f);
        } catch (const SupportOverlap&) {
            return std::nullopt;
        }
    };
    sys.plausibility = [](const type2::Bigraph& b) { return b.gamma(); };
    return sys;
}

ArrowSystem<FuzzyBigraph> fuzzy_arrow_system(const Frame& frame, const std::vector<NamedFuzzy>& arrows)
{
    ArrowSystem<FuzzyBigraph> sys;
    sys.frame = frame;
    for (const auto& [name, b] : arrows) {
        sys.arrows.push_back({name, b.inner(), b.outer(), b, frame.top()});
        sys.objects.insert(b.inner());
        sys.objects.insert(b.outer());
    }
    for (const auto& object : sys.objects)
        sys.identities.emplace(object, FuzzyArrow<FuzzyBigraph>{"id" + object.to_string(), object, object,
                                                                identity_bigraph(object, frame), frame.top()});
    sys.compose = [](const FuzzyBigraph& g, const FuzzyBigraph& f) -> std::optional<FuzzyBigraph> {
        try {
            return compose(g, f);
        } catch (const SupportOverlap&) {
            return std::nullopt;
        }
    };
    return sys;
}

} // namespace fbg
