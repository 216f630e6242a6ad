#include <cmath>
#include <random>

#include "doctest.h"
#include "gsc/canonical.hpp"
#include "gsc/families.hpp"
#include "gsc/indices.hpp"
#include "gsc/numerics.hpp"
#include "gsc/transforms.hpp"

using namespace gsc;

TEST_CASE("path merge on K2") {
  Graph k2 = make_graph(2, {{0, 1}});
  auto pair = lemma1_setup(k2, 0, 1, 1);
  CHECK(is_isomorphic(pair.split, make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(is_isomorphic(pair.merged, path_graph(4)));

  const double d = index_delta(pair.split, pair.merged, -0.5);
  CHECK(d == doctest::Approx(2.0 / std::sqrt(3.0) + 0.5 - 1.5).epsilon(1e-14));
  CHECK(index_delta(pair.split, pair.merged, -1.7) > 0.0);
  CHECK(index_delta(pair.split, pair.merged, -1.0) > 0.0);
}

TEST_CASE("path merge degrees and sizes") {
  Graph q = cycle_graph(4);
  auto pair = lemma1_setup(q, 2, 3, 2);
  CHECK(pair.split.order() == 9);
  CHECK(pair.merged.order() == 9);
  CHECK(pair.split.degree(2) == 4);
  CHECK(pair.merged.degree(2) == 3);
  CHECK(pair.split.edge_count() == pair.merged.edge_count());
  CHECK(classify(pair.split).tag == StructureTag::kUnicyclic);
  CHECK(classify(pair.merged).tag == StructureTag::kUnicyclic);
}

TEST_CASE("path merge preconditions") {
  Graph k2 = make_graph(2, {{0, 1}});
  CHECK_THROWS_AS(lemma1_setup(k2, 0, 1, 2), PreconditionError);
  CHECK_THROWS_AS(lemma1_setup(k2, 0, 1, 0), PreconditionError);
  CHECK_THROWS_AS(lemma1_setup(make_graph(1, {}), 0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(lemma1_setup(make_graph(3, {{0, 1}}), 0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(lemma1_setup(k2, 2, 1, 1), PreconditionError);
}

TEST_CASE("reroute with a single-vertex path") {
  // u = 0 with neighbors 1 (u1), 2 (u2) and pendant 3 (u').
  Graph h = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  Graph after = lemma2_reroute(h, 0, 2, 3);
  CHECK(is_isomorphic(after, path_graph(4)));
  CHECK(after.has_edge(3, 2));
  CHECK_FALSE(after.has_edge(0, 2));
  // Distance-one closed form: (d1+2)^a + (d2+2)^a - (d1+3)^a - (d2+3)^a.
  for (double alpha : {-1.0, -0.5, -0.1}) {
    const double expected = 2 * std::pow(3.0, alpha) - 2 * std::pow(4.0, alpha);
    CHECK(index_delta(h, after, alpha) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(index_delta(h, after, alpha) > 0.0);
  }
}

TEST_CASE("reroute on a triangle with a hanging path") {
  Graph tri_p1 = attach_path(cycle_graph(3), 0, 2);
  Graph after = lemma2_reroute(tri_p1, 0, 1, 4);
  CHECK(after.order() == 5);
  CHECK(after.edge_count() == 5);
  CHECK(classify(after).tag == StructureTag::kUnicyclic);
  CHECK(index_delta(tri_p1, after, -1.0) > 0.0);

  Graph tri_p3 = attach_path(cycle_graph(3), 0, 3);
  CHECK(index_delta(tri_p3, lemma2_reroute(tri_p3, 0, 2, 5), -0.5) > 0.0);
}

TEST_CASE("reroute preconditions") {
  Graph h = attach_path(cycle_graph(3), 0, 2);  // 0-3-4 hangs from the triangle
  CHECK_THROWS_AS(lemma2_reroute(h, 0, 4, 4), PreconditionError);   // u2 not adjacent to u
  CHECK_THROWS_AS(lemma2_reroute(h, 0, 1, 3), PreconditionError);   // u' not pendant
  CHECK_THROWS_AS(lemma2_reroute(h, 1, 2, 4), PreconditionError);   // deg(u) != 3

  // u2 of degree 4.
  Graph heavy = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {2, 5}, {2, 6}, {1, 7}});
  CHECK_THROWS_AS(lemma2_reroute(heavy, 0, 2, 3), PreconditionError);
  // The path from u' must not run through u2.
  Graph through = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {2, 4}});
  CHECK_THROWS_AS(lemma2_reroute(through, 0, 2, 4), PreconditionError);
}

TEST_CASE("index_delta") {
  Graph p5 = path_graph(5);
  CHECK(index_delta(p5, p5, -0.5) == 0.0);
  CHECK(index_delta(cycle_graph(5), p5, -0.5) == doctest::Approx(2.0 / std::sqrt(3.0) - 1.5).epsilon(1e-13));
  RewriteOutcome out = make_outcome(cycle_graph(5), p5, -0.5);
  CHECK(out.delta_chi == index_delta(cycle_graph(5), p5, -0.5));
  CHECK(out.alpha == -0.5);
}

TEST_CASE("randomized path merges raise the index") {
  std::mt19937_64 rng(20240501);
  const double a1 = numerics::alpha1_value();
  for (int i = 0; i < 500; ++i) {
    auto inst = random_path_merge_instance(rng);
    auto pair = lemma1_setup(inst.q, inst.u, inst.a, inst.b);
    CHECK(pair.split.order() == pair.merged.order());
    CHECK(pair.split.edge_count() == pair.merged.edge_count());
    CHECK(classify(pair.split).tag == classify(pair.merged).tag);
    for (double alpha : {a1 + 1e-6, -1.5, -1.0, -0.5, -0.1}) CHECK(index_delta(pair.split, pair.merged, alpha) > 0.0);
  }
}

TEST_CASE("randomized reroutes raise the index") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    auto inst = random_reroute_instance(rng);
    CHECK(inst.h.degree(inst.u) == 3);
    CHECK(inst.h.degree(inst.u_prime) == 1);
    Graph after = lemma2_reroute(inst.h, inst.u, inst.u2, inst.u_prime);
    CHECK(after.order() == inst.h.order());
    CHECK(after.edge_count() == inst.h.edge_count());
    CHECK(is_connected(after));
    CHECK(classify(after).tag == classify(inst.h).tag);
    for (double alpha : {-1.0, -0.75, -0.5, -0.25, -0.1}) CHECK(index_delta(inst.h, after, alpha) > 0.0);
  }
}

TEST_CASE("the reroute difference is monotone") {
  auto grid = numerics::linear_grid(0.0, 10.0, 0.5);
  for (double alpha : {-1.7, -1.0, -0.5, -0.1}) {
    CHECK(numerics::monotone_check(numerics::MonotoneClaim::kRerouteDiffDecreasing, alpha, grid));
  }
}
