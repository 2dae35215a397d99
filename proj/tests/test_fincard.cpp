#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sectorform/error.hpp"
#include "sectorform/fincard.hpp"

using namespace sf;

namespace {
  constexpr auto E = GenKind::epsilon;
  constexpr auto D = GenKind::delta;
  constexpr auto S = GenKind::sigma;

  std::vector<std::uint32_t> table(FinMap const& f) {
    return f.table1();
  }

  using T = std::vector<std::uint32_t>;
}  // namespace

TEST_CASE("FinMap construction and evaluation") {
  auto f = FinMap::of(2, {1, 1, 2});
  CHECK(f.dom() == 3);
  CHECK(f.cod() == 2);
  CHECK(f(3) == 2);
  CHECK(table(FinMap::identity(0)).empty());
  CHECK(FinMap::identity(0).dom() == 0);
  CHECK_THROWS_AS(FinMap::of(2, {1, 3}), Error);
  CHECK_THROWS_AS(FinMap::of(2, {0}), Error);
  CHECK_THROWS_AS(f(0), Error);
  CHECK_THROWS_AS(f(4), Error);
  // maps out of 0 into anything, none from a nonempty set into 0
  CHECK(all_maps(0, 3).size() == 1);
  CHECK(all_maps(2, 0).empty());
  CHECK(all_maps(3, 2).size() == 8);
  CHECK(all_surjections(4, 2).size() == 14);
}

TEST_CASE("compose") {
  auto f = FinMap::of(3, {2, 3, 1});
  CHECK(compose(FinMap::identity(3), f) == f);
  CHECK(compose(generator_map(epsilon(2, 1)), generator_map(epsilon(1, 1)))
        == FinMap::of(1, {1, 1, 1}));
  CHECK(compose(generator_map(sigma(2, 1)), generator_map(sigma(2, 1))) == FinMap::identity(2));
  try {
    compose(FinMap::identity(2), f);
    FAIL("expected an arity error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::arity);
  }
}

TEST_CASE("monoidal_sum") {
  auto f = FinMap::of(3, {2, 3, 1});
  CHECK(monoidal_sum(f, FinMap::identity(0)) == f);
  CHECK(monoidal_sum(FinMap::identity(0), f) == f);
  CHECK(monoidal_sum(generator_map(epsilon(1, 1)), FinMap::identity(1))
        == FinMap::of(2, {1, 1, 2}));
  CHECK(monoidal_sum(FinMap::identity(1), generator_map(sigma(2, 1)))
        == FinMap::of(3, {1, 3, 2}));
  CHECK(monoidal_sum(FinMap::identity(1), generator_map(sigma(2, 1)))
        == generator_map(sigma(3, 2)));
}

TEST_CASE("monoidal_sum is associative, unital and satisfies interchange") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> card(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = oracle::random_map_of(rng, card(rng), card(rng) + 1);
    auto g = oracle::random_map_of(rng, card(rng), card(rng) + 1);
    auto h = oracle::random_map_of(rng, card(rng), card(rng) + 1);
    CHECK(monoidal_sum(monoidal_sum(f, g), h) == monoidal_sum(f, monoidal_sum(g, h)));
    CHECK(monoidal_sum(f, FinMap::identity(0)) == f);
    // (a + m) ; (n' + b) = (n + b) ; (a + m')
    auto a = oracle::random_map_of(rng, card(rng), card(rng) + 1);
    auto b = oracle::random_map_of(rng, card(rng), card(rng) + 1);
    auto lhs = compose(monoidal_sum(a, FinMap::identity(b.dom())),
                       monoidal_sum(FinMap::identity(a.cod()), b));
    auto rhs = compose(monoidal_sum(FinMap::identity(a.dom()), b),
                       monoidal_sum(a, FinMap::identity(b.cod())));
    CHECK(lhs == rhs);
    CHECK(lhs == monoidal_sum(a, b));
  }
}

TEST_CASE("generator tables") {
  CHECK(table(generator_map(epsilon(1, 1))) == T{1, 1});
  CHECK(table(generator_map(delta(1, 1))) == T{2});
  CHECK(table(generator_map(sigma(3, 2))) == T{1, 3, 2});
  CHECK(table(generator_map(epsilon(3, 2))) == T{1, 2, 2, 3});
  CHECK(table(generator_map(delta(2, 3))) == T{1, 2});
  CHECK(table(generator_map(delta(0, 1))).empty());
  CHECK_THROWS_AS(epsilon(1, 2), Error);
  CHECK_THROWS_AS(epsilon(0, 1), Error);
  CHECK_THROWS_AS(delta(1, 3), Error);
  CHECK_THROWS_AS(sigma(1, 1), Error);
  CHECK_THROWS_AS(sigma(3, 0), Error);
  CHECK_THROWS_AS(generator_map({S, 2, 2}), Error);
}

TEST_CASE("generators are the monoidal building blocks") {
  // epsilon^n_i = (i-1) + mu + (n-i), delta^n_i = (i-1) + eta + (n-i+1),
  // sigma^n_i = (i-1) + swap + (n-i-1)
  auto const mu   = FinMap::of(1, {1, 1});
  auto const eta  = FinMap(1, {});
  auto const swap = FinMap::of(2, {2, 1});
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t i = 1; i <= n + 1; ++i) {
      if (i <= n) {
        CHECK(generator_map(epsilon(n, i))
              == monoidal_sum(monoidal_sum(FinMap::identity(i - 1), mu),
                              FinMap::identity(n - i)));
      }
      CHECK(generator_map(delta(n, i))
            == monoidal_sum(monoidal_sum(FinMap::identity(i - 1), eta),
                            FinMap::identity(n - i + 1)));
      if (i + 1 <= n) {
        CHECK(generator_map(sigma(n, i))
              == monoidal_sum(monoidal_sum(FinMap::identity(i - 1), swap),
                              FinMap::identity(n - i - 1)));
      }
    }
  }
}

TEST_CASE("sigma_cycle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(sigma_cycle(n, 1) == FinMap::identity(n));
  }
  CHECK(table(sigma_cycle(3, 3)) == T{3, 1, 2});
  CHECK(table(sigma_cycle(4, 2)) == T{2, 1, 3, 4});
  CHECK_THROWS_AS(sigma_cycle(3, 4), Error);
  CHECK_THROWS_AS(sigma_cycle(3, 0), Error);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(sigma_cycle(n, i) == eval_word(sigma_cycle_word(n, i)));
      // the cycle (i i-1 ... 1) written out
      for (std::uint32_t x = 1; x <= n; ++x) {
        std::uint32_t const expect = x == 1 ? static_cast<std::uint32_t>(i) : (x <= i ? x - 1 : x);
        CHECK(sigma_cycle(n, i)(x) == expect);
      }
    }
  }
}

TEST_CASE("alpha") {
  CHECK(table(alpha(1, 1)) == T{1, 1});
  CHECK(table(alpha(2, 1)) == T{1, 1, 2});
  CHECK(table(alpha(3, 2)) == T{2, 1, 2, 3});
  CHECK_THROWS_AS(alpha(2, 3), Error);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      auto const a = alpha(n, j);
      CHECK(a == compose(sigma_cycle(n + 1, j), generator_map(epsilon(n, j))));
      CHECK(a(1) == j);
      for (std::uint32_t x = 2; x <= n + 1; ++x) {
        CHECK(a(x) == x - 1);
      }
    }
  }
}

TEST_CASE("classify") {
  auto const id = classify(FinMap::identity(4));
  CHECK(id == Classification{true, true, true, true});
  auto const eps = classify(generator_map(epsilon(2, 1)));
  CHECK(eps.surjective);
  CHECK_FALSE(eps.bijective);
  CHECK(eps.order_preserving);
  auto const sig = classify(generator_map(sigma(2, 1)));
  CHECK(sig.surjective);
  CHECK(sig.bijective);
  CHECK_FALSE(sig.order_preserving);
  CHECK_FALSE(classify(generator_map(delta(1, 1))).surjective);
}

TEST_CASE("classify is closed under composition") {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      for (std::size_t c = 0; c <= 3; ++c) {
        for (auto const& f : all_maps(a, b)) {
          for (auto const& g : all_maps(b, c)) {
            auto const cf = classify(f), cg = classify(g);
            auto const h  = classify(compose(f, g));
            if (cf.surjective && cg.surjective) {
              CHECK(h.surjective);
            }
            if (cf.order_preserving && cg.order_preserving) {
              CHECK(h.order_preserving);
            }
            if (cf.bijective && cg.bijective) {
              CHECK(h.bijective);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("words") {
  CHECK(eval_word(GenWord::identity(3)) == FinMap::identity(3));
  CHECK(eval_word(chain(2, {{S, 1}, {S, 1}})) == FinMap::identity(2));
  CHECK(eval_word(chain(1, {{D, 1}, {E, 1}})) == FinMap::identity(1));
  CHECK(chain(2, {{D, 1}, {E, 2}}).gens()[1] == epsilon(2, 2));
  try {
    GenWord(2, 2, {sigma(2, 1), epsilon(1, 1)});
    FAIL("expected a word error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::word);
  }
  CHECK_THROWS_AS(GenWord(2, 3, {sigma(2, 1)}), Error);
  CHECK_THROWS_AS(chain(0, {{E, 1}}), Error);
}

TEST_CASE("factor_surjection examples") {
  CHECK(factor_surjection(FinMap::identity(4)).empty());
  CHECK(factor_surjection(FinMap::identity(4)).dom() == 4);
  auto const w = factor_surjection(FinMap::of(1, {1, 1}));
  CHECK(w.gens() == std::vector<Generator>{epsilon(1, 1)});
  auto const u = FinMap::of(2, {2, 1, 1});
  auto const v = factor_surjection(u);
  CHECK(eval_word(v).table1() == T{2, 1, 1});
  for (auto const& g : v.gens()) {
    CHECK(g.kind != D);
  }
  // pinned deterministic output
  CHECK(v.gens() == std::vector<Generator>{sigma(3, 1), sigma(3, 2), epsilon(2, 1)});
  try {
    factor_surjection(FinMap::of(3, {1, 2}));
    FAIL("expected a domain error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

TEST_CASE("factor_map examples") {
  auto const u = FinMap::of(2, {2, 1, 1});
  CHECK(factor_map(u) == factor_surjection(u));
  CHECK(factor_map(FinMap::of(2, {2})).gens() == std::vector<Generator>{delta(1, 1)});
  CHECK(factor_map(FinMap::of(2, {1})).gens()
        == std::vector<Generator>{delta(1, 1), sigma(2, 1)});
  CHECK(eval_word(factor_map(FinMap::of(2, {1}))) == FinMap::of(2, {1}));
  CHECK(factor_map(FinMap(3, {})).gens()
        == std::vector<Generator>{delta(0, 1), delta(1, 1), sigma(2, 1), delta(2, 1),
                                  sigma(3, 1), sigma(3, 2)});
}

TEST_CASE("factorization round trips, exhaustive") {
  std::size_t count = 0;
  for (std::size_t a = 0; a <= 6; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      for (auto const& f : all_surjections(a, b)) {
        auto const w = factor_surjection(f);
        CHECK(eval_word(w) == f);
        for (auto const& g : w.gens()) {
          CHECK(g.kind != D);
        }
        ++count;
      }
    }
  }
  CHECK(count > 0);
  for (std::size_t a = 0; a <= 5; ++a) {
    for (std::size_t b = 0; b <= 5; ++b) {
      for (auto const& f : all_maps(a, b)) {
        auto const w = factor_map(f);
        REQUIRE(eval_word(w) == f);
        for (auto const& g : w.gens()) {
          CHECK((g.kind != D || g.i == 1));
        }
      }
    }
  }
}

TEST_CASE("factorization round trips, random up to 9") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const a = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    std::size_t const b = std::uniform_int_distribution<std::size_t>(1, a)(rng);
    auto const        f = oracle::random_surjection(rng, a, b);
    CHECK(eval_word(factor_surjection(f)) == f);
    CHECK(eval_word(oracle::random_factorization(rng, f)) == f);
  }
}

TEST_CASE("alternative words evaluate to the map") {
  std::mt19937_64 rng(2025);
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; b <= 4; ++b) {
      for (auto const& f : all_maps(a, b)) {
        CHECK(eval_word(oracle::alternative_word(rng, f)) == f);
      }
    }
  }
}

TEST_CASE("relation sweep") {
  auto const reports = check_relations(2);
  REQUIRE(reports.size() == 10);
  for (auto const& r : reports) {
    INFO(r.family);
    CHECK(r.passed());
  }
  CHECK(reports[3].family == "moore");
  CHECK(reports[3].checked > 0);

  auto const full = check_relations(8);
  for (auto const& r : full) {
    INFO(r.family);
    CHECK(r.checked > 0);
    CHECK(r.failures.empty());
    CHECK(r.bound == 8);
  }
}

TEST_CASE("relation sweep is independent of the job count") {
  auto const one  = check_relations(6, 1);
  auto const four = check_relations(6, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].family == four[k].family);
    CHECK(one[k].checked == four[k].checked);
    CHECK(one[k].failures.size() == four[k].failures.size());
  }
}

TEST_CASE("relation instances include the boundary indices") {
  auto const inst  = relation_instances(3);
  bool       seen  = false;
  bool       empty = false;
  for (auto const& r : inst) {
    for (auto const& g : r.lhs.gens()) {
      seen = seen || (g.kind == D && g.n == 3 && g.i == 4);
    }
    empty = empty || r.lhs.dom() == 0;
  }
  CHECK(seen);
  CHECK(empty);
}

TEST_CASE("a corrupted codegeneracy is caught") {
  // epsilon^n_i realized as epsilon^n_1 regardless of i
  Realizer broken = [](Generator const& g) {
    if (g.kind == E) {
      return generator_map(epsilon(g.n, 1));
    }
    return generator_map(g);
  };
  auto const  reports  = check_relations(4, broken);
  std::size_t failures = 0;
  for (auto const& r : reports) {
    failures += r.failures.size();
  }
  CHECK(failures > 0);
  // failures are accumulated, not cut off at the first
  CHECK(failures > 1);
  for (auto const& r : reports) {
    for (auto const& f : r.failures) {
      CHECK_FALSE(f.lhs_map == f.rhs_map);
    }
  }
}
