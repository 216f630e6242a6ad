#pragma once

#include <optional>
#include <string>
#include <stdexcept>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

enum class GraphClass { kTree, kUnicyclic };

std::string to_string(GraphClass c);

/// Order limits for exhaustive generation.
struct EnumerationLimits {
  int tree_ceiling = 12;
  int unicyclic_ceiling = 11;
};

class CeilingError : public std::out_of_range {
 public:
  CeilingError(int n, int ceiling);
  int ceiling() const { return ceiling_; }

 private:
  int ceiling_;
};

/// One representative per isomorphism class of free trees on n vertices,
/// each in canonical labeling, sorted by canonical form. Grown leaf by leaf
/// from the trees on n-1 vertices.
std::vector<Graph> all_trees(int n, const EnumerationLimits& limits = {});

/// One representative per isomorphism class of connected graphs with n
/// vertices and n edges (tree plus one chord), canonical labeling, sorted by
/// canonical form.
std::vector<Graph> all_unicyclic(int n, const EnumerationLimits& limits = {});

std::vector<Graph> enumerate_class(GraphClass cls, int n, const EnumerationLimits& limits = {});

/// Graphs whose maximum degree equals delta exactly.
std::vector<Graph> filter_max_degree(const std::vector<Graph>& graphs, int delta);

}  // namespace gsc
