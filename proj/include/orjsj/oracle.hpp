#pragma once

// Brute-force oracles and seeded corpus generators.
//
// The orbit search here shares nothing with the whitehead module beyond the
// word primitives: automorphisms are written out as image strings and applied
// by plain substitution.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <json.hpp>
#include <vector>

#include "orjsj/word.hpp"

namespace orjsj::oracle {

inline constexpr std::size_t kDefaultNodeBudget = 5'000'000;

struct OrbitBfsResult {
  std::vector<CyclicWord> reachable;  // sorted
  std::size_t min_length = 0;
  std::vector<CyclicWord> minimal;  // reachable words of length min_length, sorted
  std::size_t layers = 0;
  std::size_t max_frontier = 0;
};

// Every cyclic word reachable from start through Whitehead moves whose
// intermediate words never exceed length_cap. Throws BudgetExhausted.
OrbitBfsResult bfs_orbit(const CyclicWord& start, std::size_t length_cap,
                         std::size_t node_budget = kDefaultNodeBudget);

void for_each_cyclic_word(std::size_t length, const std::function<void(const CyclicWord&)>& fn);
std::vector<CyclicWord> enumerate_cyclic_words(std::size_t length);

// Uniform freely reduced word of the given length.
Word random_word(std::uint64_t seed, std::size_t length);

// expand_xy of a random reduced XY-word with `syllables` maximal syllables.
Word random_subgroup_word(std::uint64_t seed, std::size_t syllables);

// Random cyclically reduced word with zero exponent sums. length must be even
// and at least 4. Throws GenerationFailure when the retry budget runs out.
Word random_derived_word(std::uint64_t seed, std::size_t length);

struct Agreement {
  std::size_t checked = 0;
  std::vector<std::string> disagreements;
};

// minimize() against bfs_orbit over every cyclic word of length 1..max_length.
Agreement exhaustive_minimize_agreement(std::size_t max_length);

// shortest_orbit_set() against the minimal layer of bfs_orbit on random words.
Agreement orbit_set_agreement(std::uint64_t seed, std::size_t samples, std::size_t max_length);

nlohmann::ordered_json agreement_report(std::size_t max_length, std::size_t samples,
                                        std::uint64_t seed);

}  // namespace orjsj::oracle
