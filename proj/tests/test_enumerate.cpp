#include <set>

#include "doctest.h"
#include "gsc/canonical.hpp"
#include "gsc/enumerate.hpp"
#include "gsc/families.hpp"
#include "oracles/oracles.hpp"

using namespace gsc;

TEST_CASE("small counts") {
  CHECK(all_trees(1).size() == 1);
  CHECK(all_trees(2).size() == 1);
  CHECK(all_trees(4).size() == 2);
  CHECK(all_trees(7).size() == 11);
  CHECK(all_unicyclic(3).size() == 1);
  CHECK(all_unicyclic(4).size() == 2);
  CHECK(all_unicyclic(5).size() == 5);
  CHECK(all_unicyclic(7).size() == 33);
}

TEST_CASE("tree counts match the labeled oracle and the rooted-tree recurrence") {
  auto counts = oracle::free_tree_counts(12);
  for (int n = 1; n <= 9; ++n) {
    oracle::ClassCollector classes;
    oracle::for_each_pruefer_tree(n, [&](const oracle::SmallGraph& t) { classes.add(t); });
    CHECK(all_trees(n).size() == classes.count());
    CHECK(classes.count() == counts[n]);
  }
  CHECK(all_trees(12).size() == counts[12]);
  CHECK(counts[12] == 551);
}

TEST_CASE("unicyclic counts match the oracle") {
  for (int n = 3; n <= 8; ++n) CHECK(all_unicyclic(n).size() == oracle::count_unicyclic_classes(n));
}

TEST_CASE("output is canonical, sorted and pairwise distinct") {
  for (GraphClass cls : {GraphClass::kTree, GraphClass::kUnicyclic}) {
    for (int n = 3; n <= 9; ++n) {
      auto graphs = enumerate_class(cls, n);
      std::vector<std::string> forms;
      for (const Graph& g : graphs) {
        forms.push_back(canonical_form(g));
        CHECK(classify(g).tag == (cls == GraphClass::kTree ? StructureTag::kTree : StructureTag::kUnicyclic));
      }
      CHECK(std::is_sorted(forms.begin(), forms.end()));
      CHECK(std::set<std::string>(forms.begin(), forms.end()).size() == forms.size());
    }
  }
}

TEST_CASE("repeated runs agree") {
  auto a = all_unicyclic(8);
  auto b = all_unicyclic(8);
  CHECK(a == b);
}

TEST_CASE("filter_max_degree") {
  auto p5 = filter_max_degree(all_trees(5), 2);
  REQUIRE(p5.size() == 1);
  CHECK(is_isomorphic(p5[0], path_graph(5)));

  auto c5 = filter_max_degree(all_unicyclic(5), 2);
  REQUIRE(c5.size() == 1);
  CHECK(is_isomorphic(c5[0], cycle_graph(5)));

  auto star = filter_max_degree(all_trees(4), 3);
  REQUIRE(star.size() == 1);
  CHECK(star[0].degrees() != path_graph(4).degrees());

  for (int n = 3; n <= 10; ++n) {
    auto trees = all_trees(n);
    std::size_t total = 0;
    for (int delta = 1; delta <= n - 1; ++delta) total += filter_max_degree(trees, delta).size();
    CHECK(total == trees.size());
  }
}

TEST_CASE("ceilings") {
  CHECK_THROWS_AS(all_trees(13), CeilingError);
  CHECK_THROWS_AS(all_unicyclic(12), CeilingError);
  try {
    all_trees(13);
  } catch (const CeilingError& e) {
    CHECK(e.ceiling() == 12);
  }
  EnumerationLimits small{5, 4};
  CHECK_THROWS_AS(all_trees(6, small), CeilingError);
  CHECK_THROWS_AS(all_unicyclic(5, small), CeilingError);
  CHECK_THROWS(all_trees(0));
  CHECK_THROWS(all_unicyclic(2));
}
