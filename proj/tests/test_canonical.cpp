#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "gsc/canonical.hpp"
#include "gsc/enumerate.hpp"
#include "gsc/families.hpp"
#include "gsc/graph6.hpp"
#include "oracles/oracles.hpp"

using namespace gsc;

namespace {

std::vector<Vertex> random_perm(int n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return make_graph(leaves + 1, edges);
}

}  // namespace

TEST_CASE("relabeled path has the same canonical form") {
  Graph p4 = path_graph(4);
  // 0-1-2-3 relabeled as 2-0-3-1.
  Graph relabeled = make_graph(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_form(p4) == canonical_form(relabeled));
  CHECK(canonical_form(p4) != canonical_form(star(3)));
}

TEST_CASE("four-vertex trees fall into two classes") {
  std::set<std::string> forms;
  oracle::for_each_pruefer_tree(4, [&](const oracle::SmallGraph& t) { forms.insert(canonical_form(t.to_graph())); });
  CHECK(forms.size() == 2);
}

TEST_CASE("is_isomorphic examples") {
  std::mt19937 rng(3);
  Graph c5 = cycle_graph(5);
  CHECK(is_isomorphic(c5, c5.relabeled(random_perm(5, rng))));
  CHECK_FALSE(is_isomorphic(path_graph(5), star(4)));
  CHECK_FALSE(is_isomorphic(path_graph(5), path_graph(6)));

  // T_{7,4}: three pendants... legs (2,2,1,1) at one center.
  Graph spider_like = make_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {0, 6}});
  CHECK(is_isomorphic(tree_T(7, 4), spider_like));
  CHECK(oracle::brute_isomorphic(tree_T(7, 4), spider_like));
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937 rng(11);
  std::vector<Graph> samples{tree_T(9, 5),          unicyclic_U(8, 5),         spider_tree({2, 3, 3}),
                             cycle_with_paths(4, {2, 3}), cycle_graph(10),   make_graph(6, {{0, 1}, {2, 3}, {4, 5}}),
                             make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})};
  for (const Graph& g : all_unicyclic(7)) samples.push_back(g);
  for (const Graph& g : samples) {
    const std::string base = canonical_form(g);
    for (int i = 0; i < 100; ++i) CHECK(canonical_form(g.relabeled(random_perm(g.order(), rng))) == base);
  }
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  // Random graphs on 6 vertices: equal forms exactly when brute force finds a
  // mapping.
  std::mt19937 rng(5);
  std::vector<Graph> graphs;
  for (int i = 0; i < 60; ++i) {
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) {
        if (std::bernoulli_distribution(0.4)(rng)) edges.emplace_back(u, v);
      }
    }
    graphs.push_back(make_graph(6, edges));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      CHECK((canonical_form(graphs[i]) == canonical_form(graphs[j])) ==
            oracle::brute_isomorphic(graphs[i], graphs[j]));
    }
  }
}

TEST_CASE("tree route and search route induce the same classes") {
  for (int n = 1; n <= 9; ++n) {
    auto trees = all_trees(n);
    std::set<std::string> search_forms;
    for (const Graph& t : trees) search_forms.insert(canonical_form_search(t));
    CHECK(search_forms.size() == trees.size());
  }
  CHECK_THROWS_AS(canonical_form_tree(cycle_graph(4)), GraphError);
}

TEST_CASE("canonical form is the graph6 of an isomorphic graph") {
  for (const Graph& g : {tree_T(8, 5), unicyclic_U(7, 5), cycle_with_paths(3, {2, 2})}) {
    Graph canon = parse_graph6(canonical_form(g));
    CHECK(oracle::brute_isomorphic(canon, g));
    CHECK(canonical_form(canon) == canonical_form(g));
  }
}

TEST_CASE("search route refuses orders above the ceiling") {
  CHECK_THROWS_AS(canonical_form(cycle_graph(13)), GraphError);
  CHECK_NOTHROW(canonical_form(cycle_graph(13), 13));
  // Trees are not subject to the ceiling.
  CHECK_NOTHROW(canonical_form(path_graph(40)));
}
