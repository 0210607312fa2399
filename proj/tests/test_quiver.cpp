#include <doctest.h>

#include "quiverhh/errors.hpp"
#include "quiverhh/quiver.hpp"
#include "support/corpus.hpp"

using namespace quiverhh;
using quiverhh::testing::generate_corpus;
using quiverhh::testing::named_example;
using quiverhh::testing::worked_example;

namespace {

Quiver worked_quiver() { return worked_example({}).quiver(); }

Quiver loops_quiver(std::size_t r) {
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 0; i < r; ++i) arrows.push_back({"x" + std::to_string(i), "e", "e"});
  return Quiver({"e"}, arrows);
}

}  // namespace

TEST_CASE("quiver construction rejects bad input") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {{"a", "1", "1"}}), ValidationError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "2"}}), ValidationError);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "1"}}), ValidationError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "1"}, {"a", "1", "1"}}), ValidationError);
  CHECK_THROWS_AS(Quiver({}, {}), ValidationError);
}

TEST_CASE("ids follow sorted names") {
  Quiver q({"z", "m"}, {{"y", "z", "m"}, {"b", "m", "z"}});
  CHECK(q.vertex_name(0) == "m");
  CHECK(q.arrow(0).name == "b");
  CHECK(q.arrow(1).source == *q.find_vertex("z"));
}

TEST_CASE("compose") {
  const Quiver q = worked_quiver();
  const Path ba = q.path_from_names({"b", "a"});
  const Path v1 = q.trivial(*q.find_vertex("v1"));
  CHECK(compose(ba, v1) == ba);
  CHECK(compose(q.path_from_names({"c"}), q.path_from_names({"b"})) == q.path_from_names({"c", "b"}));
  CHECK_FALSE(compose(q.path_from_names({"c"}), q.path_from_names({"a"})).has_value());
  CHECK_THROWS_AS(q.path_from_names({"a", "b"}), ValidationError);
}

TEST_CASE("divides") {
  const Quiver q = worked_quiver();
  const Path cba = q.path_from_names({"c", "b", "a"});
  CHECK(divides(q, q.path_from_names({"c", "b"}), cba));
  CHECK(divides(q, cba, cba));
  CHECK_FALSE(divides(q, q.path_from_names({"d"}), cba));
  CHECK_FALSE(divides(q, q.path_from_names({"b", "a"}), q.path_from_names({"c", "b"})));
}

TEST_CASE("parallel") {
  const Quiver q = worked_quiver();
  CHECK(parallel(q.path_from_names({"d"}), q.path_from_names({"b", "a"})));
  CHECK(parallel(q.path_from_names({"c"}), q.path_from_names({"c"})));
  CHECK_FALSE(parallel(q.path_from_names({"a"}), q.path_from_names({"b"})));
}

TEST_CASE("enumerate_paths") {
  const Quiver loop({"e"}, {{"a", "e", "e"}});
  const auto p = enumerate_paths(loop, 2);
  REQUIRE(p.size() == 3);
  CHECK(p[0].is_trivial());
  CHECK(p[2].length() == 2);
  CHECK(enumerate_paths(worked_quiver(), 1).size() == 8);
  CHECK(enumerate_paths(named_example("kronecker-2").algebra.quiver(), 2).size() == 4);
}

TEST_CASE("bar quiver and Euler characteristic") {
  SUBCASE("loops") {
    const BarQuiver bq = bar_quiver(loops_quiver(3));
    CHECK(bq.classes.size() == 1);
    CHECK(bq.multiple_classes().size() == 1);
    CHECK(bq.classes[0].size() == 3);
    CHECK(euler_characteristic(bq) == 1);
  }
  SUBCASE("worked quiver") {
    const BarQuiver bq = bar_quiver(worked_quiver());
    CHECK(bq.classes.size() == 4);
    CHECK(bq.multiple_classes().empty());
    CHECK(euler_characteristic(bq) == 1);
    CHECK_FALSE(bq.underlying_tree());
  }
  SUBCASE("kronecker") {
    const BarQuiver bq = bar_quiver(named_example("kronecker-3").algebra.quiver());
    CHECK(bq.classes.size() == 1);
    CHECK(bq.classes[0].size() == 3);
    CHECK(bq.underlying_tree());
    CHECK(euler_characteristic(bq) == 0);
  }
}

TEST_CASE("graph predicates") {
  const GraphPredicates loop = graph_predicates(Quiver({"e"}, {{"a", "e", "e"}}));
  CHECK(loop.has_loops);
  CHECK(loop.is_oriented_cycle);
  CHECK_FALSE(loop.underlying_tree);
  CHECK(graph_predicates(named_example("cycle-3").algebra.quiver()).is_oriented_cycle);
  CHECK_FALSE(graph_predicates(loops_quiver(2)).is_oriented_cycle);
  const GraphPredicates w = graph_predicates(worked_quiver());
  CHECK(w.is_connected);
  CHECK_FALSE(w.has_oriented_cycles);
  CHECK_FALSE(w.underlying_tree);
  CHECK_FALSE(w.is_oriented_cycle);
}

TEST_CASE("quiver invariants over the corpus") {
  for (const auto& e : generate_corpus(11, 80)) {
    CAPTURE(e.name);
    const Quiver& q = e.algebra.quiver();
    const auto n = q.arrow_count();
    for (ArrowId a = 0; a < n; ++a)
      for (ArrowId b = 0; b < n; ++b) {
        const Path pa = q.arrow_path(a), pb = q.arrow_path(b);
        CHECK(parallel(pa, pb) == parallel(pb, pa));
        for (ArrowId c = 0; c < n; ++c)
          if (parallel(pa, pb) && parallel(pb, q.arrow_path(c))) CHECK(parallel(pa, q.arrow_path(c)));
      }
    const BarQuiver bq = bar_quiver(q);
    CHECK(bq.classes.size() <= n);
    CHECK((bq.classes.size() == n) == bq.multiple_classes().empty());
    CHECK(euler_characteristic(bq) >= 0);
    CHECK((euler_characteristic(bq) == 0) == bq.underlying_tree());

    const auto paths = enumerate_paths(q, 3);
    for (const Path& x : paths)
      for (const Path& y : paths) {
        if (divides(q, x, y)) CHECK(x.length() <= y.length());
        if (auto xy = compose(x, y))
          for (const Path& z : paths)
            if (auto yz = compose(y, z)) CHECK(compose(*xy, z) == compose(x, *yz));
      }
    for (const Path& x : paths) {
      CHECK(compose(q.trivial(x.target()), x) == x);
      CHECK(compose(x, q.trivial(x.source())) == x);
      CHECK(divides(q, x, x));
    }
  }
}
