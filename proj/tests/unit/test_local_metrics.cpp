#include <cmath>

#include "doctest.h"
#include "flownet/local_metrics.hpp"
#include "flownet/null_model.hpp"
#include "support/oracles.hpp"

using namespace flownet;

namespace {

NodeIndex idx(const TimeSlice& s, const char* code) { return *s.index_of(CountryCode(code)); }

std::vector<double> random_population(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  for (auto& x : w) x = static_cast<double>(rng.below(50));
  w[rng.below(n)] += 1.0;  // at least one positive value
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("local-metrics");

TEST_CASE("drain index from strengths") {
  CHECK(*drain_index(2, 0) == 1.0);
  CHECK(*drain_index(0, 3) == -1.0);
  CHECK(*drain_index(114, 116) == -2.0 / 230.0);
  CHECK_FALSE(drain_index(0, 0).has_value());
}

TEST_CASE("drain index properties on random slices") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = oracle::to_slice(oracle::random_graph(rng, 2, 7, 5, 0));
    auto r = reversed(s);
    for (NodeIndex i = 0; i < s.size(); ++i) {
      auto b = drain_index(s, i);
      auto br = drain_index(r, i);
      REQUIRE(b.has_value() == br.has_value());
      if (!b) continue;
      CHECK(*b >= -1.0);
      CHECK(*b <= 1.0);
      CHECK(*br == -*b);
      CHECK((*b == 1.0) == (s.in_strength(i) == 0));
      CHECK((*b == -1.0) == (s.out_strength(i) == 0));
    }
  }
}

TEST_CASE("clustering coefficient") {
  auto full = make_slice(2014, {{"I", "J", 1}, {"K", "I", 1}, {"J", "K", 1}, {"K", "J", 1}});
  CHECK(*clustering_coefficient(full, idx(full, "I")) == 1.0);

  auto open = make_slice(2014, {{"I", "J", 1}, {"K", "I", 1}});
  CHECK(*clustering_coefficient(open, idx(open, "I")) == 0.0);

  // 4 leaves, 12 ordered leaf pairs, one of them linked
  auto star = make_slice(2014, {{"C", "L1", 1}, {"C", "L2", 1}, {"L3", "C", 1}, {"C", "L4", 1},
                                {"L1", "L2", 1}});
  CHECK(*clustering_coefficient(star, idx(star, "C")) == doctest::Approx(1.0 / 12.0));

  auto single = make_slice(2014, {{"A", "B", 1}});
  CHECK_FALSE(clustering_coefficient(single, idx(single, "A")).has_value());
}

TEST_CASE("clustering is 1 when every neighbourhood is a complete digraph") {
  std::vector<NamedEdge> edges;
  const char* names[] = {"A", "B", "C", "D", "E"};
  for (auto a : names)
    for (auto b : names)
      if (std::string(a) != b) edges.push_back({a, b, 3});
  auto s = make_slice(2014, edges);
  for (NodeIndex i = 0; i < s.size(); ++i) CHECK(*clustering_coefficient(s, i) == 1.0);
}

TEST_CASE("node reciprocity") {
  auto pair = make_slice(2014, {{"I", "J", 1}, {"J", "I", 4}});
  CHECK(*node_reciprocity(pair, idx(pair, "I")) == 2.0);
  CHECK(*node_reciprocity(pair, idx(pair, "I"), ReciprocityVariant::normalized) == 1.0);

  auto two = make_slice(2014, {{"I", "J", 1}, {"J", "I", 1}, {"I", "K", 1}, {"K", "I", 1}});
  CHECK(*node_reciprocity(two, idx(two, "I")) == 2.0);

  auto none = make_slice(2014, {{"I", "J", 1}, {"I", "K", 1}});
  CHECK(*node_reciprocity(none, idx(none, "I")) == 0.0);

  auto isolated = make_slice(2014, {{"I", "J", 1}}, {"Z"});
  CHECK_FALSE(node_reciprocity(isolated, idx(isolated, "Z")).has_value());
}

TEST_CASE("network reciprocity") {
  CHECK(*network_reciprocity(make_slice(2014, {{"A", "B", 1}, {"B", "A", 1}})) == 1.0);
  CHECK(*network_reciprocity(make_slice(2014, {{"A", "B", 1}, {"B", "A", 1}, {"A", "C", 1}})) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(*network_reciprocity(make_slice(2014, {{"A", "B", 1}, {"B", "C", 1}, {"C", "A", 1}})) ==
        0.0);
  CHECK_FALSE(network_reciprocity(make_slice(2014, {}, {"A"})).has_value());
}

TEST_CASE("network reciprocity extremes on random graphs") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_graph(rng, 2, 7, 4);
    auto sym = g;
    auto tour = g;
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t j = 0; j < g.n; ++j) {
        if (g.w[i][j] > 0) sym.w[j][i] = std::max<std::uint64_t>(sym.w[j][i], 1);
        if (i < j && g.w[i][j] > 0) tour.w[j][i] = 0;
        if (i > j && g.w[i][j] > 0 && g.w[j][i] > 0) tour.w[i][j] = 0;
      }
    }
    CHECK(*network_reciprocity(oracle::to_slice(sym)) == 1.0);
    if (tour.edges() > 0) CHECK(*network_reciprocity(oracle::to_slice(tour)) == 0.0);
  }
}

TEST_CASE("gini") {
  std::vector<double> equal{5, 5, 5, 5};
  CHECK(*gini(equal) == 0.0);
  std::vector<double> half{1, 0};
  CHECK(*gini(half) == oracle::gini_pairwise(half));
  CHECK(*gini(half) == 0.5);
  std::vector<double> quarter{1, 0, 0, 0};
  CHECK(oracle::gini_pairwise(quarter) == 0.75);
  CHECK(*gini(quarter) == 0.75);
  std::vector<double> zeros{0, 0};
  CHECK_FALSE(gini(zeros).has_value());
  CHECK_FALSE(gini(std::vector<double>{}).has_value());
}

TEST_CASE("gini agrees with the pairwise definition and is scale invariant") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_population(rng, 1 + rng.below(30));
    const double g = *gini(w);
    CHECK(g == doctest::Approx(oracle::gini_pairwise(w)).epsilon(1e-12));
    CHECK(g >= 0.0);
    CHECK(g <= 1.0 - 1.0 / static_cast<double>(w.size()) + 1e-12);
    auto scaled = w;
    for (auto& x : scaled) x *= 7.25;
    CHECK(std::abs(*gini(scaled) - g) <= 1e-12);
  }
}

TEST_CASE("lorenz curve") {
  auto eq = *lorenz(std::vector<double>{1, 1});
  CHECK(eq.points == std::vector<std::pair<double, double>>{{0, 0}, {0.5, 0.5}, {1, 1}});
  CHECK(eq.gini == doctest::Approx(0.0));

  auto uneven = *lorenz(std::vector<double>{3, 1});
  CHECK(uneven.points == std::vector<std::pair<double, double>>{{0, 0}, {0.5, 0.25}, {1, 1}});

  auto single = *lorenz(std::vector<double>{1, 0, 0, 0});
  CHECK(single.points ==
        std::vector<std::pair<double, double>>{{0, 0}, {0.25, 0}, {0.5, 0}, {0.75, 0}, {1, 1}});
  CHECK(std::abs(single.gini - 0.75) <= 1e-12);
  CHECK_FALSE(lorenz(std::vector<double>{0}).has_value());
}

TEST_CASE("lorenz curve shape and gini field on random populations") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_population(rng, 1 + rng.below(25));
    auto c = *lorenz(w);
    CHECK(c.points.front() == std::pair<double, double>{0.0, 0.0});
    CHECK(c.points.back() == std::pair<double, double>{1.0, 1.0});
    for (std::size_t k = 1; k < c.points.size(); ++k) {
      CHECK(c.points[k].first >= c.points[k - 1].first);
      CHECK(c.points[k].second >= c.points[k - 1].second);
      CHECK(c.points[k].second <= c.points[k].first + 1e-15);
    }
    CHECK(std::abs(c.gini - *gini(w)) <= 1e-12);
  }
}

TEST_CASE("neighbor weight population") {
  auto s = make_slice(2014, {{"A", "B", 3}, {"A", "C", 1}});
  auto out = neighbor_weight_population(s, idx(s, "A"), Side::out);
  std::sort(out.begin(), out.end());
  CHECK(out == std::vector<double>{1, 3});
  CHECK(neighbor_weight_population(s, idx(s, "A"), Side::in).empty());
  CHECK(neighbor_weight_population(s, idx(s, "B"), Side::in) == std::vector<double>{3});
}

TEST_CASE("score vectors mark undefined values") {
  auto s = make_slice(2014, {{"A", "B", 2}}, {"Z"});
  auto beta = drain_index_scores(s);
  CHECK(beta.size() == 3);
  CHECK(*beta.at(CountryCode("A")) == 1.0);
  CHECK_FALSE(beta.at(CountryCode("Z")).has_value());
  CHECK(beta.defined_count() == 2);
}

TEST_SUITE_END();
