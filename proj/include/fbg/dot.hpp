#ifndef FBG_DOT_HPP
#define FBG_DOT_HPP

#include "fbg/model_io.hpp"

#include <string>

namespace fbg::io {

enum class View { Place, Link };

/// Graphviz text for one graph of a document. The place view draws every
/// site and node below its parents, roots as dashed boxes and sites as
/// shaded squares; the link view draws nodes with their ports as bullets,
/// edges as diamonds and inner/outer names as plain-text terminals.
/// Fuzzy degrees label the arcs. Throws UnknownGraph when the document has
/// no such graph or the graph lacks the requested part.
std::string export_dot(const Document& doc, const std::string& name, View view);

} // namespace fbg::io

#endif
