#pragma once

#include <string>

#include "gsc/graph.hpp"

namespace gsc {

/// Largest order accepted by the search-based (non-tree) canonizer.
inline constexpr int kDefaultCanonicalCeiling = 12;

/// Canonical byte string: the graph6 encoding of a canonical relabeling, so
/// two graphs get the same string exactly when they are isomorphic.
///
/// Trees are canonized in linear time by rooting at the center and sorting
/// subtree codes. Everything else goes through an individualization /
/// refinement search that keeps the lexicographically smallest graph6 over
/// all leaves; twin vertices are branched on once. Non-trees above `ceiling`
/// vertices are refused with GraphError.
std::string canonical_form(const Graph& g, int ceiling = kDefaultCanonicalCeiling);

/// The search-based route regardless of structure (trees included).
std::string canonical_form_search(const Graph& g, int ceiling = kDefaultCanonicalCeiling);

/// The rooted-code route; throws GraphError if g is not a tree.
std::string canonical_form_tree(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace gsc
