#include <catch_amalgamated.hpp>

#include <random>

#include "pif/preferences.hpp"
#include "pif/sampling.hpp"

using namespace pif;

namespace {

// Independent survival-function evaluation for dominance checks.
bool dominates_by_survival(const std::vector<double>& u, const Allocation& p,
                           const Allocation& q) {
  for (double x : u) {
    double sp = 0.0, sq = 0.0;
    for (std::size_t c = 0; c < u.size(); ++c) {
      if (u[c] >= x) {
        sp += p[c];
        sq += q[c];
      }
    }
    if (sp < sq - 1e-12) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("expected utility comparison follows the inner product") {
  const ExpectedUtility eu{{1.0, 0.5}};
  const auto dp = Allocation::point_mass(0, 2);
  const auto dq = Allocation::point_mass(1, 2);
  CHECK(weakly_prefers(eu, dp, dq) == Comparison::WeaklyPreferred);
  CHECK(weakly_prefers(eu, dq, dp) == Comparison::NotWeaklyPreferred);
  CHECK(weakly_prefers(eu, dq, dq) == Comparison::WeaklyPreferred);
}

TEST_CASE("every variant is reflexive") {
  std::mt19937 rng(3);
  const std::vector<PreferenceRelation> rels = {
      ExpectedUtility{{0.3, 0.9, 0.1}},
      StochasticDominance{{0.3, 0.9, 0.1}, 1.0},
      TrivialReflexive{},
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = sample_allocation(rng, 3);
    for (const auto& rel : rels)
      CHECK(weakly_prefers(rel, p, p) == Comparison::WeaklyPreferred);
  }
  const BinaryRanking br{1};
  const auto p = sample_allocation(rng, 2);
  CHECK(weakly_prefers(br, p, p) == Comparison::WeaklyPreferred);
}

TEST_CASE("stochastic dominance detects crossing survival functions") {
  const StochasticDominance sd{{1.0, 0.5, 0.0}, 1.0};
  const Allocation p({0.5, 0.0, 0.5});
  const Allocation q({0.0, 1.0, 0.0});
  // Oracle: Pr[u >= 1] is 0.5 vs 0 (p ahead), Pr[u >= 0.5] is 0.5 vs 1 (q ahead).
  CHECK_FALSE(dominates_by_survival(sd.u, p, q));
  CHECK_FALSE(dominates_by_survival(sd.u, q, p));
  CHECK(weakly_prefers(sd, p, q) == Comparison::Incomparable);
  CHECK(weakly_prefers(sd, q, p) == Comparison::Incomparable);

  // One-sided dominance comes back asymmetric.
  const Allocation top({1.0, 0.0, 0.0});
  CHECK(weakly_prefers(sd, top, q) == Comparison::WeaklyPreferred);
  CHECK(weakly_prefers(sd, q, top) == Comparison::NotWeaklyPreferred);
}

TEST_CASE("all-equal utilities make dominance vacuous") {
  const StochasticDominance sd{{5.0, 5.0, 5.0}, 5.0};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = sample_allocation(rng, 3);
    const auto q = sample_allocation(rng, 3);
    CHECK(weakly_prefers(sd, p, q) == Comparison::WeaklyPreferred);
  }
}

TEST_CASE("trivial relation only relates equal allocations") {
  const TrivialReflexive tr;
  const auto p = Allocation({0.5, 0.5});
  const auto q = Allocation({0.4, 0.6});
  CHECK(weakly_prefers(tr, p, q) == Comparison::Incomparable);
  CHECK(weakly_prefers(tr, p, p) == Comparison::WeaklyPreferred);
}

TEST_CASE("sorted_outcome_order merges tie groups") {
  {
    const auto ord = sorted_outcome_order(StochasticDominance{{0.2, 0.9, 0.9}, 1.0});
    CHECK(ord.order == std::vector<int>{1, 2, 0});
    CHECK(ord.boundaries == std::vector<int>{2, 3});
  }
  {
    const auto ord = sorted_outcome_order(StochasticDominance{{1.0, 2.0, 3.0}, 3.0});
    CHECK(ord.order == std::vector<int>{2, 1, 0});
    CHECK(ord.boundaries == std::vector<int>{1, 2, 3});
  }
  {
    const auto ord = sorted_outcome_order(StochasticDominance{{5.0, 5.0, 5.0}, 5.0});
    CHECK(ord.boundaries == std::vector<int>{3});
  }
  CHECK_THROWS_MATCHES(sorted_outcome_order(ExpectedUtility{{1.0}}), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::WrongVariant; }));
}

TEST_CASE("expected-utility verdicts survive positive affine rescaling") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> u(3);
    for (double& v : u) v = std::round(unif(rng) * 20) / 20;
    std::vector<double> scaled(3);
    const double a = 0.5 + 2 * unif(rng), b = unif(rng) - 0.5;
    for (std::size_t c = 0; c < 3; ++c) scaled[c] = a * u[c] + b;
    const auto p = sample_allocation(rng, 3);
    const auto q = sample_allocation(rng, 3);
    CHECK(weakly_prefers(ExpectedUtility{u}, p, q) ==
          weakly_prefers(ExpectedUtility{scaled}, p, q));
  }
}

TEST_CASE("dominance implies at least the same expectation") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> u(4);
    for (double& v : u) v = std::round(unif(rng) * 20) / 20;
    const StochasticDominance sd{u, 1.0};
    const auto p = sample_allocation(rng, 4);
    const auto q = sample_allocation(rng, 4);
    if (weakly_prefers(sd, p, q) == Comparison::WeaklyPreferred)
      CHECK(dot(u, p) >= dot(u, q) - 1e-9);
  }
}

TEST_CASE("weak preference is transitive on sampled triples") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<double> u(3);
    for (double& v : u) v = std::round(unif(rng) * 20) / 20;
    const auto p = sample_allocation(rng, 3);
    const auto q = sample_allocation(rng, 3);
    const auto r = sample_allocation(rng, 3);
    for (const PreferenceRelation& rel :
         {PreferenceRelation(ExpectedUtility{u}), PreferenceRelation(StochasticDominance{u, 1.0})}) {
      if (weakly_prefers(rel, p, q) == Comparison::WeaklyPreferred &&
          weakly_prefers(rel, q, r) == Comparison::WeaklyPreferred)
        CHECK(weakly_prefers(rel, p, r) == Comparison::WeaklyPreferred);
    }
  }
}

TEST_CASE("binary ranking matches its one-hot expected-utility form") {
  std::mt19937 rng(23);
  for (int favored : {0, 1}) {
    const BinaryRanking br{favored};
    const auto u = utility_vector(br, 2);
    REQUIRE(u.has_value());
    for (int trial = 0; trial < 40; ++trial) {
      const auto p = sample_allocation(rng, 2);
      const auto q = sample_allocation(rng, 2);
      CHECK(weakly_prefers(br, p, q) == weakly_prefers(ExpectedUtility{*u}, p, q));
    }
  }
}

TEST_CASE("preference validation rejects malformed relations") {
  CHECK_THROWS_AS(validate_preference(StochasticDominance{{0.5, 1.5}, 1.0}, 2), Error);
  CHECK_THROWS_AS(validate_preference(StochasticDominance{{0.5, 0.5}, -1.0}, 2), Error);
  CHECK_THROWS_AS(validate_preference(BinaryRanking{0}, 3), Error);
  CHECK_THROWS_AS(validate_preference(BinaryRanking{2}, 2), Error);
  CHECK_NOTHROW(validate_preference(BinaryRanking{1}, 2));
}
