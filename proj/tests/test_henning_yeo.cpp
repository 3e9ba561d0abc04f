#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "apsbench/henning_yeo.hpp"
#include "apsbench/matching.hpp"

using namespace apsbench;

TEST_CASE("quasi-complete even blocks") {
  auto qc = build_quasi_complete_even(4);
  CHECK(qc.graph.order() == 5);
  CHECK(qc.graph.edge_count() == 9);
  CHECK(qc.graph.degree(qc.x) == 3);
  CHECK(qc.graph.degree(qc.y) == 3);
  std::multiset<int> degs;
  for (int v = 0; v < 5; ++v) degs.insert(qc.graph.degree(v));
  CHECK(degs == std::multiset<int>{3, 3, 4, 4, 4});

  auto qc6 = build_quasi_complete_even(6);
  CHECK(qc6.graph.order() == 7);
  CHECK(qc6.graph.edge_count() == 20);

  CHECK_THROWS_AS(build_quasi_complete_even(3), std::invalid_argument);
  CHECK_THROWS_AS(build_quasi_complete_even(2), std::invalid_argument);
}

TEST_CASE("quasi-complete odd blocks") {
  auto qc = build_quasi_complete_odd(3);
  CHECK(qc.graph.order() == 5);
  CHECK(qc.graph.edge_count() == 7);
  std::multiset<int> degs;
  for (int v = 0; v < 5; ++v) degs.insert(qc.graph.degree(v));
  CHECK(degs == std::multiset<int>{2, 3, 3, 3, 3});
  CHECK(qc.graph.degree(qc.attach) == 2);

  auto qc5 = build_quasi_complete_odd(5);
  CHECK(qc5.graph.order() == 7);
  CHECK(qc5.graph.edge_count() == 17);  // 21 - (k-1)/2 - 2 deletions
  CHECK(qc5.graph.degree(qc5.attach) == 4);

  CHECK_THROWS_AS(build_quasi_complete_odd(4), std::invalid_argument);
}

TEST_CASE("even construction: order, regularity, tags") {
  for (auto [k, p] : {std::pair{4, 2}, {4, 3}, {6, 2}, {8, 2}}) {
    HYInstance inst = build_henning_yeo({.k = k, .p = p});
    CHECK(inst.graph.order() == hy_order(k, p));
    CHECK(inst.graph.is_regular(k));
    CHECK(inst.graph.is_simple());
    CHECK(static_cast<int>(inst.edge_class.size()) == inst.graph.edge_count());
    CHECK(odd_components_after_scaffold_deletion(inst));
    for (EdgeClass c : inst.edge_class) CHECK(c != EdgeClass::OtherExternal);
  }
  CHECK(hy_order(4, 2) == 22);
  CHECK(hy_order(4, 3) == 33);
  CHECK(hy_order(6, 2) == 44);
}

TEST_CASE("odd construction: order, regularity, tags") {
  for (auto [k, p] : {std::pair{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    HYInstance inst = build_henning_yeo({.k = k, .p = p});
    CHECK(inst.graph.order() == hy_order(k, p));
    CHECK(inst.graph.is_regular(k));
    CHECK(inst.graph.is_simple());
    CHECK(odd_components_after_scaffold_deletion(inst));
  }
  CHECK(hy_order(3, 1) == 34);
  CHECK(hy_order(3, 2) == 52);
  CHECK(hy_order(5, 1) == 146);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(build_henning_yeo({.k = 4, .p = 1}));   // no loop-free base
  CHECK_THROWS(build_henning_yeo({.k = 2, .p = 3}));
  CHECK_THROWS(build_henning_yeo({.k = 3, .p = 0}));
  CHECK_THROWS(build_henning_yeo({.k = 1, .p = 1}));
}

TEST_CASE("random base stays k-regular with the right order") {
  for (uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    HYInstance inst = build_henning_yeo(
        {.k = 4, .p = 5, .base = HYParams::BaseKind::Random, .seed = seed});
    CHECK(inst.graph.order() == hy_order(4, 5));
    CHECK(inst.graph.is_regular(4));
    CHECK(odd_components_after_scaffold_deletion(inst));
  }
  // same seed, same graph
  HYInstance a = build_henning_yeo(
      {.k = 6, .p = 4, .base = HYParams::BaseKind::Random, .seed = 7});
  HYInstance b = build_henning_yeo(
      {.k = 6, .p = 4, .base = HYParams::BaseKind::Random, .seed = 7});
  REQUIRE(a.graph.edge_count() == b.graph.edge_count());
  for (int id = 0; id < a.graph.edge_count(); ++id) {
    CHECK(a.graph.edge(id).u == b.graph.edge(id).u);
    CHECK(a.graph.edge(id).v == b.graph.edge(id).v);
  }
}

TEST_CASE("apply_weights by class") {
  HYInstance inst = build_henning_yeo({.k = 4, .p = 2});
  int internal = 0, external = 0;
  for (EdgeClass c : inst.edge_class)
    (c == EdgeClass::InternalQuasiComplete ? internal : external)++;
  CHECK(internal == 2 * inst.p * 9);
  CHECK(external == 2 * 2 * inst.p);

  Graph w = apply_weights(inst.graph, inst.edge_class, 10.0, 1.0);
  CHECK(w.total_weight() == 10.0 * internal + external);
  Graph swapped = apply_weights(inst.graph, inst.edge_class, 1.0, 10.0);
  CHECK(w.total_weight() - swapped.total_weight() ==
        doctest::Approx(9.0 * (internal - external)));
  // uniform weights keep the edge count as total
  Graph u = apply_weights(inst.graph, inst.edge_class, 1.0, 1.0);
  CHECK(u.total_weight() == inst.graph.edge_count());

  CHECK_THROWS_AS(apply_weights(inst.graph, {}, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(apply_weights(inst.graph, inst.edge_class, 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("weighted build dispatches both classes") {
  HYInstance inst = build_henning_yeo({.k = 3, .p = 1, .weights = {{10.0, 1.0}}});
  std::map<EdgeClass, int> byclass;
  for (int id = 0; id < inst.graph.edge_count(); ++id) {
    ++byclass[inst.edge_class[id]];
    double w = inst.graph.edge(id).weight;
    if (inst.edge_class[id] == EdgeClass::InternalQuasiComplete)
      CHECK(w == 10.0);
    else
      CHECK(w == 1.0);
  }
  CHECK(byclass[EdgeClass::OtherExternal] == 3 * inst.p);  // p*k bipartite edges
  CHECK(byclass[EdgeClass::ExternalAttachment] == inst.block_count);
}

TEST_CASE("matching on constructions achieves the tight bound") {
  for (auto [k, p] : {std::pair{4, 2}, {4, 3}, {6, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    HYInstance inst = build_henning_yeo({.k = k, .p = p});
    long long n = inst.graph.order();
    auto m = max_weight_matching(inst.graph);
    CHECK(m.value == tight_bound(k, n));
    auto fm = max_weight_fractional_matching(inst.graph);
    CHECK(fm.value == Rational(n, 2));
  }
}

TEST_CASE("smallest_p_for_order") {
  CHECK(smallest_p_for_order(3, 500) == 27);
  CHECK(smallest_p_for_order(9, 500) == 1);
  CHECK(smallest_p_for_order(4, 500) == 46);
  CHECK(hy_order(3, 27) == 502);
}

TEST_CASE("edge class names round trip") {
  for (EdgeClass c : {EdgeClass::InternalQuasiComplete, EdgeClass::ExternalAttachment,
                      EdgeClass::OtherExternal})
    CHECK(edge_class_from_name(edge_class_name(c)) == c);
  CHECK_THROWS(edge_class_from_name("nope"));
}
