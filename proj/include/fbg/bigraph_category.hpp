#ifndef FBG_BIGRAPH_CATEGORY_HPP
#define FBG_BIGRAPH_CATEGORY_HPP

#include "fbg/category.hpp"
#include "fbg/fuzzy.hpp"
#include "fbg/type2.hpp"

#include <string>
#include <vector>

namespace fbg {

struct NamedType2 {
    std::string name;
    type2::Bigraph bigraph;
};

struct NamedFuzzy {
    std::string name;
    FuzzyBigraph bigraph;
};

/// Objects are the interfaces met by the arrows, each arrow has degree γ,
/// and composites are measured by their own γ.
ArrowSystem<type2::Bigraph> type2_arrow_system(const Frame& frame, const std::vector<NamedType2>& arrows);

/// Fuzzy bigraphs as arrows of degree top.
ArrowSystem<FuzzyBigraph> fuzzy_arrow_system(const Frame& frame, const std::vector<NamedFuzzy>& arrows);

} // namespace fbg

#endif
