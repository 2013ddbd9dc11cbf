#include <catch_amalgamated.hpp>

#include <random>

#include "pif/core.hpp"
#include "pif/generators.hpp"
#include "pif/sampling.hpp"

using namespace pif;
using Catch::Approx;

TEST_CASE("tv_distance evaluates the half L1 formula") {
  const auto d0 = Allocation::point_mass(0, 3);
  const auto d1 = Allocation::point_mass(1, 3);
  CHECK(tv_distance(d0, d0) == 0.0);
  CHECK(tv_distance(d0, d1) == 1.0);
  const Allocation p({0.5, 0.5, 0.0});
  const Allocation q({0.0, 0.5, 0.5});
  // Oracle: direct evaluation of (1/2) sum |p_c - q_c| = (0.5 + 0 + 0.5) / 2.
  CHECK(tv_distance(p, q) == Approx(0.5));
  CHECK_THROWS_AS(tv_distance(d0, Allocation::point_mass(0, 2)), Error);
}

TEST_CASE("tv_distance is a metric on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = sample_allocation(rng, 4);
    const auto q = sample_allocation(rng, 4);
    const auto r = sample_allocation(rng, 4);
    CHECK(tv_distance(p, q) >= 0.0);
    CHECK(tv_distance(p, q) == Approx(tv_distance(q, p)));
    CHECK(tv_distance(p, r) <= tv_distance(p, q) + tv_distance(q, r) + 1e-12);
    CHECK((tv_distance(p, q) == 0.0) == approx_equal(p, q, 1e-12));
  }
}

TEST_CASE("social_welfare sums weighted own-allocation utilities") {
  Instance inst = distinct_favorites(4);
  Policy own, uniform;
  for (int i = 0; i < 4; ++i) {
    own.alloc[i] = Allocation::point_mass(i, 4);
    uniform.alloc[i] = Allocation::uniform(4);
  }
  CHECK(social_welfare(inst, own) == Approx(4.0));
  CHECK(social_welfare(inst, uniform) == Approx(1.0));

  for (int i = 0; i < 4; ++i) inst.preferences[i] = ExpectedUtility{{0, 0, 0, 0}};
  CHECK(social_welfare(inst, own) == 0.0);

  inst.preferences[2] = TrivialReflexive{};
  CHECK_THROWS_MATCHES(social_welfare(inst, own), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::NoUtility; }));
}

TEST_CASE("social_welfare is linear in the policy") {
  std::mt19937 rng(11);
  SampleOptions opt;
  opt.allow_stochastic_dominance = true;
  opt.allow_trivial = false;
  opt.random_weights = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = sample_instance(rng, opt);
    const Policy a = sample_policy(rng, inst);
    const Policy b = sample_policy(rng, inst);
    const double lambda = 0.25;
    Policy mix;
    for (const auto& ind : inst.individuals) {
      Allocation m;
      m.probs.resize(a.at(ind.id).size());
      for (std::size_t c = 0; c < m.size(); ++c)
        m.probs[c] = lambda * a.at(ind.id)[c] + (1 - lambda) * b.at(ind.id)[c];
      mix.alloc[ind.id] = m;
    }
    CHECK(social_welfare(inst, mix) ==
          Approx(lambda * social_welfare(inst, a) + (1 - lambda) * social_welfare(inst, b))
              .margin(1e-10));
  }
}

TEST_CASE("normalize_utilities rescales to [0,1] and keeps orderings") {
  Instance inst = distinct_favorites(3);
  inst.preferences[0] = ExpectedUtility{{0.0, 10.0, 5.0}};
  inst.preferences[1] = ExpectedUtility{{3.0, 3.0, 3.0}};
  inst.preferences[2] = StochasticDominance{{0.2, 0.8, 0.5}, 1.0};
  const Instance out = normalize_utilities(inst);
  CHECK(std::get<ExpectedUtility>(out.preference(0)).u == std::vector<double>{0.0, 1.0, 0.5});
  CHECK(std::get<ExpectedUtility>(out.preference(1)).u == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(std::get<StochasticDominance>(out.preference(2)).u ==
        std::vector<double>{0.0, 1.0, 0.5});

  Instance two = distinct_favorites(2);
  two.preferences[0] = ExpectedUtility{{0.2, 0.8}};
  CHECK(std::get<ExpectedUtility>(normalize_utilities(two).preference(0)).u ==
        std::vector<double>{0.0, 1.0});
}

TEST_CASE("normalize_utilities preserves weak-preference verdicts") {
  std::mt19937 rng(13);
  SampleOptions opt;
  opt.allow_trivial = false;
  for (int trial = 0; trial < 80; ++trial) {
    const Instance inst = sample_instance(rng, opt);
    const Instance norm = normalize_utilities(inst);
    const Policy a = sample_policy(rng, inst);
    const Policy b = sample_policy(rng, inst);
    for (const auto& ind : inst.individuals) {
      const auto before =
          weakly_prefers(inst.preference(ind.id), a.at(ind.id), b.at(ind.id));
      const auto after =
          weakly_prefers(norm.preference(ind.id), a.at(ind.id), b.at(ind.id));
      CHECK(before == after);
    }
  }
}

TEST_CASE("instance validation enforces the hard invariants") {
  auto base = [] {
    Instance inst = distinct_favorites(3);
    return inst;
  };
  CHECK_NOTHROW(base().validate());

  SECTION("asymmetric metric") {
    Instance inst = base();
    inst.metrics[0].dist[0][1] = 0.4;
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("nonzero diagonal") {
    Instance inst = base();
    inst.metrics[0].dist[1][1] = 0.1;
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("metric out of range") {
    Instance inst = base();
    inst.metrics[0].dist[0][1] = inst.metrics[0].dist[1][0] = 1.5;
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("metric count neither 1 nor |C|") {
    Instance inst = base();
    inst.metrics.push_back(inst.metrics[0]);
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("missing preference") {
    Instance inst = base();
    inst.preferences.erase(1);
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("utility length mismatch") {
    Instance inst = base();
    inst.preferences[0] = ExpectedUtility{{1.0, 0.0}};
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("negative weight") {
    Instance inst = base();
    inst.individuals[0].weight = -0.5;
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("zero total weight") {
    Instance inst = base();
    for (auto& ind : inst.individuals) ind.weight = 0.0;
    CHECK_THROWS_AS(inst.validate(), Error);
  }
  SECTION("non-dense outcome ids") {
    Instance inst = base();
    inst.outcomes[2].id = 5;
    CHECK_THROWS_AS(inst.validate(), Error);
  }
}

TEST_CASE("triangle inequality is linted, not enforced") {
  Instance inst = distinct_favorites(3);
  inst.metrics[0].dist[0][1] = inst.metrics[0].dist[1][0] = 1.0;
  inst.metrics[0].dist[0][2] = inst.metrics[0].dist[2][0] = 0.1;
  inst.metrics[0].dist[1][2] = inst.metrics[0].dist[2][1] = 0.1;
  CHECK_NOTHROW(inst.validate());
  CHECK_FALSE(inst.lint().empty());
  CHECK(distinct_favorites(3).lint().empty());
}

TEST_CASE("policy validation checks coverage and simplex membership") {
  const Instance inst = distinct_favorites(2);
  Policy ok;
  ok.alloc[0] = Allocation({0.25, 0.75});
  ok.alloc[1] = Allocation({1.0, 0.0});
  CHECK_NOTHROW(validate_policy(inst, ok));

  Policy missing = ok;
  missing.alloc.erase(1);
  CHECK_THROWS_AS(validate_policy(inst, missing), Error);

  Policy short_sum = ok;
  short_sum.alloc[0] = Allocation({0.4, 0.5});
  CHECK_THROWS_AS(validate_policy(inst, short_sum), Error);

  Policy negative = ok;
  negative.alloc[0] = Allocation({-0.1, 1.1});
  CHECK_THROWS_AS(validate_policy(inst, negative), Error);

  // Sum tolerance is 1e-9.
  Policy dust = ok;
  dust.alloc[0] = Allocation({0.25 + 5e-10, 0.75});
  CHECK_NOTHROW(validate_policy(inst, dust));
  Policy drift = ok;
  drift.alloc[0] = Allocation({0.25 + 1e-7, 0.75});
  CHECK_THROWS_AS(validate_policy(inst, drift), Error);
}
