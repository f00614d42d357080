#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orjsj/errors.hpp"
#include "orjsj/hnn_subgroup.hpp"
#include "orjsj/oracle.hpp"
#include "orjsj/whitehead.hpp"

using namespace orjsj;
using namespace orjsj::oracle;

namespace {

CyclicWord C(const char* s) { return cyclic_reduce(Word::from_letters(s)).core; }

}  // namespace

TEST_CASE("bfs_orbit examples") {
  CHECK(bfs_orbit(C("abAB"), 4).min_length == 4);
  CHECK(bfs_orbit(C("abb"), 3).min_length == 1);
  const auto r = bfs_orbit(C("aabbABAB"), 8);
  CHECK(r.min_length == 8);
  CHECK(r.layers > 0);
  CHECK(r.max_frontier > 0);
  CHECK(std::is_sorted(r.reachable.begin(), r.reachable.end()));
  CHECK_THROWS_AS(bfs_orbit(C("abAB"), 3), std::invalid_argument);
  CHECK_THROWS_AS(bfs_orbit(C("aabbABAB"), 12, 10), BudgetExhausted);
}

TEST_CASE("bfs_orbit is closed under capped moves") {
  const auto r = bfs_orbit(C("aabAB"), 5);
  for (const auto& c : r.reachable) {
    for (const auto& g : generating_set()) {
      const auto img = apply(g, c);
      if (img.size() <= 5) CHECK(std::binary_search(r.reachable.begin(), r.reachable.end(), img));
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_cyclic_words(0).empty());
  const auto one = enumerate_cyclic_words(1);
  CHECK(one.size() == 4);
  for (std::size_t len = 1; len <= 7; ++len) {
    const auto words = enumerate_cyclic_words(len);
    std::set<CyclicWord> unique(words.begin(), words.end());
    CHECK(unique.size() == words.size());
    for (const auto& c : words) CHECK(c.size() == len);
  }
}

TEST_CASE("generators") {
  CHECK(random_word(5, 17) == random_word(5, 17));
  CHECK(random_word(5, 17).size() == 17);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Word w = random_subgroup_word(seed, 1 + seed % 9);
    CHECK(membership(w));
    CHECK(exponent_sums(w).b == 0);
    CHECK(syllables(rewrite_to_xy(w)).x + syllables(rewrite_to_xy(w)).y > 0);

    const std::size_t len = 4 + 2 * (seed % 10);
    const Word d = random_derived_word(seed, len);
    CHECK(d.size() == len);
    CHECK(exponent_sums(d).in_derived_subgroup());
    CHECK(cyclic_reduce(d).core.size() == len);
    CHECK(random_derived_word(seed, len) == d);
  }
  CHECK_THROWS_AS(random_derived_word(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(random_derived_word(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(random_subgroup_word(1, 0), std::invalid_argument);
}

TEST_CASE("subgroup word syllable count") {
  // Syllable count of the generated word matches its rewrite.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t syl = 1 + seed % 7;
    const auto t = rewrite_to_xy(random_subgroup_word(seed, syl));
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == 0 || generator(t.word()[i]) != generator(t.word()[i - 1])) ++count;
    }
    CHECK(count == syl);
  }
}

TEST_CASE("minimize agrees with the oracle up to length 8") {
  const auto a = exhaustive_minimize_agreement(8);
  CHECK(a.checked > 1000);
  CHECK(a.disagreements.empty());
}

TEST_CASE("minimize agrees with the oracle on 1000 longer random words") {
  std::mt19937_64 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const CyclicWord c = cyclic_reduce(random_word(rng(), 11 + rng() % 10)).core;
    if (c.empty()) continue;
    CHECK(bfs_orbit(c, c.size()).min_length == minimize(c).min.size());
  }
}

TEST_CASE("orbit sets agree with the oracle") {
  const auto a = orbit_set_agreement(42, 500, 16);
  CHECK(a.checked == 500);
  CHECK(a.disagreements.empty());
}

TEST_CASE("orbit set size stays below the guard") {
  std::mt19937_64 rng(9);
  std::size_t worst = 0;
  for (int i = 0; i < 500; ++i) {
    const CyclicWord c = cyclic_reduce(random_derived_word(rng(), 4 + 2 * (rng() % 18))).core;
    const auto o = shortest_orbit_set(c);
    worst = std::max(worst, o.members.size() / o.min_length);
  }
  MESSAGE("max |O_S| / min_length = " << worst);
  CHECK(worst < kDefaultOrbitCap);
}
