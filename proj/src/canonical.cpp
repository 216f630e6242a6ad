#include "gsc/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>

#include "gsc/graph6.hpp"

namespace gsc {
namespace {

// ---- trees ----------------------------------------------------------------

std::vector<Vertex> tree_centers(const Graph& g) {
  const int n = g.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg = g.degrees();
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct RootedCode {
  std::string code;
  std::vector<Vertex> preorder;
};

RootedCode encode_rooted(const Graph& g, Vertex root) {
  const int n = g.order();
  std::vector<std::string> codes(n);
  std::vector<std::vector<Vertex>> children(n);
  std::function<void(Vertex, Vertex)> build = [&](Vertex v, Vertex parent) {
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      build(w, v);
      children[v].push_back(w);
    }
    std::sort(children[v].begin(), children[v].end(),
              [&](Vertex a, Vertex b) { return codes[a] < codes[b]; });
    std::string code = "(";
    for (Vertex c : children[v]) code += codes[c];
    code += ')';
    codes[v] = std::move(code);
  };
  build(root, -1);

  RootedCode out;
  out.code = codes[root];
  out.preorder.reserve(n);
  std::function<void(Vertex)> walk = [&](Vertex v) {
    out.preorder.push_back(v);
    for (Vertex c : children[v]) walk(c);
  };
  walk(root);
  return out;
}

// ---- individualization / refinement ----------------------------------------

using Cells = std::vector<std::vector<Vertex>>;

class SearchCanonizer {
 public:
  explicit SearchCanonizer(const Graph& g) : g_(g), n_(g.order()), rows_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) rows_[v] |= std::uint64_t{1} << w;
    }
  }

  std::string run() {
    Cells cells;
    std::vector<Vertex> by_degree(n_);
    for (Vertex v = 0; v < n_; ++v) by_degree[v] = v;
    std::sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
      return std::pair(g_.degree(a), a) < std::pair(g_.degree(b), b);
    });
    for (std::size_t i = 0; i < by_degree.size();) {
      std::size_t j = i;
      std::vector<Vertex> cell;
      while (j < by_degree.size() && g_.degree(by_degree[j]) == g_.degree(by_degree[i])) {
        cell.push_back(by_degree[j++]);
      }
      cells.push_back(std::move(cell));
      i = j;
    }
    search(std::move(cells));
    return *best_;
  }

 private:
  bool twins(Vertex a, Vertex b) const {
    std::uint64_t mask = ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    return (rows_[a] & mask) == (rows_[b] & mask);
  }

  void refine(Cells& cells) const {
    std::vector<int> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
      }
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> sig(cells.size(), 0);
          for (Vertex w : g_.neighbors(v)) ++sig[cell_of[w]];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size();) {
          std::size_t j = i;
          std::vector<Vertex> part;
          while (j < keyed.size() && keyed[j].first == keyed[i].first) part.push_back(keyed[j++].second);
          next.push_back(std::move(part));
          i = j;
        }
      }
      if (next.size() == cells.size()) return;
      cells = std::move(next);
    }
  }

  void search(Cells cells) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) {
      std::vector<Vertex> perm(n_);
      for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = static_cast<Vertex>(c);
      std::string leaf = write_graph6(g_.relabeled(perm));
      if (!best_ || leaf < *best_) best_ = std::move(leaf);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    }
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(v, w); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> rows_;
  std::optional<std::string> best_;
};

}  // namespace

std::string canonical_form_tree(const Graph& g) {
  if (classify(g).tag != StructureTag::kTree) throw GraphError("canonical_form_tree: graph is not a tree");
  std::optional<RootedCode> best;
  for (Vertex c : tree_centers(g)) {
    RootedCode rc = encode_rooted(g, c);
    if (!best || rc.code < best->code) best = std::move(rc);
  }
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < best->preorder.size(); ++i) perm[best->preorder[i]] = static_cast<Vertex>(i);
  return write_graph6(g.relabeled(perm));
}

std::string canonical_form_search(const Graph& g, int ceiling) {
  if (g.order() > ceiling || g.order() > 64) {
    throw GraphError("canonical form refused: n = " + std::to_string(g.order()) + " exceeds ceiling " +
                     std::to_string(std::min(ceiling, 64)));
  }
  return SearchCanonizer(g).run();
}

std::string canonical_form(const Graph& g, int ceiling) {
  if (g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g)) return canonical_form_tree(g);
  return canonical_form_search(g, ceiling);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degrees();
  auto dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace gsc
