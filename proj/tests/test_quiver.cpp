#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace pathgb;
using testutil::layered_scheme;

namespace {

Quiver chain_quiver() {
  return Quiver::make({"u", "v", "w", "x"},
                      {{"a", "u", "v"}, {"b", "v", "w"}, {"c", "w", "x"}});
}

}  // namespace

TEST_CASE("quiver construction validates identifiers") {
  CHECK_THROWS_AS(Quiver::make({"u", "u"}, {}), QuiverError);
  CHECK_THROWS_AS(Quiver::make({"u"}, {{"a", "u", "zz"}}), QuiverError);
  CHECK_THROWS_AS(Quiver::make({"u"}, {{"a", "u", "u"}, {"a", "u", "u"}}), QuiverError);
  // reserved punctuation and whitespace are not identifier material
  CHECK_THROWS_AS(Quiver::make({"u.v"}, {}), QuiverError);
  CHECK_THROWS_AS(Quiver::make({""}, {}), QuiverError);
  CHECK_THROWS_AS(Quiver::make({"u"}, {{"a b", "u", "u"}}), QuiverError);
  CHECK_THROWS_AS(Quiver::make({"u"}, {{"a->", "u", "u"}}), QuiverError);
  CHECK(Quiver::make({"u'"}, {{"a_1", "u'", "u'"}}).arrow_count() == 1);
}

TEST_CASE("compose joins composable paths and rejects endpoint mismatches") {
  Quiver q = chain_quiver();
  Path a = *q.path_by_names({"a"});
  Path b = *q.path_by_names({"b"});
  Path c = *q.path_by_names({"c"});

  auto ab = q.compose(a, b);
  REQUIRE(ab);
  CHECK(q.path_name(*ab) == "a.b");
  CHECK(ab->length() == 2);

  // trivial paths are one-sided identities
  Path at_v = Path::trivial(*q.vertex_id("v"));
  CHECK(*q.compose(a, at_v) == a);
  CHECK(*q.compose(at_v, b) == b);
  CHECK_FALSE(q.compose(at_v, a));

  CHECK_FALSE(q.compose(a, c));  // target v, source w
}

TEST_CASE("compose is associative and adds lengths") {
  Quiver q = chain_quiver();
  Path a = *q.path_by_names({"a"});
  Path b = *q.path_by_names({"b"});
  Path c = *q.path_by_names({"c"});
  auto left = q.compose(*q.compose(a, b), c);
  auto right = q.compose(a, *q.compose(b, c));
  REQUIRE(left);
  REQUIRE(right);
  CHECK(*left == *right);
  CHECK(left->length() == a.length() + b.length() + c.length());
}

TEST_CASE("compose associativity on random composable triples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = testutil::random_quiver(rng, 4, 6);
    auto p = testutil::random_path(rng, q, 0, 3);
    if (!p) continue;
    // extend twice from the end to force composability
    auto extend = [&](const Path& base) -> std::optional<Path> {
      std::vector<ArrowId> next;
      for (ArrowId arw = 0; arw < static_cast<ArrowId>(q.arrow_count()); ++arw)
        if (q.arrow(arw).src == q.target(base)) next.push_back(arw);
      if (next.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
      return Path::from_arrows({next[pick(rng)]});
    };
    auto s = extend(*p);
    if (!s) continue;
    auto t = extend(*q.compose(*p, *s));
    if (!t) continue;
    auto left = q.compose(*q.compose(*p, *s), *t);
    auto right = q.compose(*p, *q.compose(*s, *t));
    REQUIRE(left);
    REQUIRE(right);
    CHECK(*left == *right);
    CHECK(left->length() == p->length() + s->length() + t->length());
  }
}

TEST_CASE("parallel paths share both endpoints") {
  Quiver one = Quiver::make({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}});
  Path x = *one.path_by_names({"x"});
  Path y = *one.path_by_names({"y"});
  CHECK(one.is_parallel(x, y));  // one vertex forces parallelism
  CHECK(one.is_parallel(x, x));

  auto s = layered_scheme();
  Path af = *s.quiver.path_by_names({"a", "f"});
  Path cj = *s.quiver.path_by_names({"c", "j"});
  Path ae = *s.quiver.path_by_names({"a", "e"});
  CHECK(s.quiver.is_parallel(af, cj));
  CHECK_FALSE(s.quiver.is_parallel(af, ae));
}

TEST_CASE("subpath occurrences enumerate factorizations left to right") {
  Quiver q = Quiver::make({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}});
  Path xyx = *q.path_by_names({"x", "y", "x"});
  Path yx = *q.path_by_names({"y", "x"});
  Path yxyx = *q.path_by_names({"y", "x", "y", "x"});
  Path xx = *q.path_by_names({"x", "x"});

  auto occ = find_subpath_occurrences(q, xyx, yx);
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].position == 1);
  CHECK(q.path_name(occ[0].prefix) == "x");
  CHECK(occ[0].suffix.is_trivial());

  auto occ2 = find_subpath_occurrences(q, yxyx, yx);
  REQUIRE(occ2.size() == 2);
  CHECK(occ2[0].prefix.is_trivial());
  CHECK(q.path_name(occ2[0].suffix) == "y.x");
  CHECK(q.path_name(occ2[1].prefix) == "y.x");
  CHECK(occ2[1].suffix.is_trivial());

  CHECK(find_subpath_occurrences(q, xx, yx).empty());
  CHECK_THROWS_AS(find_subpath_occurrences(q, xx, Path::trivial(0)), QuiverError);
}

TEST_CASE("every factorization reconstructs the original path") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = testutil::random_quiver(rng, 3, 5);
    auto p = testutil::random_path(rng, q, 1, 5);
    auto t = testutil::random_path(rng, q, 1, 2);
    if (!p || !t) continue;
    CHECK(find_subpath_occurrences(q, *p, *p).size() >= 1);  // p is a subpath of itself
    for (const auto& occ : find_subpath_occurrences(q, *p, *t)) {
      auto rebuilt = q.compose(*q.compose(occ.prefix, *t), occ.suffix);
      REQUIRE(rebuilt);
      CHECK(*rebuilt == *p);
    }
  }
}
