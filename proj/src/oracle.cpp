#include "orjsj/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "orjsj/errors.hpp"
#include "orjsj/hnn_subgroup.hpp"
#include "orjsj/whitehead.hpp"

namespace orjsj::oracle {

namespace {

struct NaiveAut {
  Word image_a;
  Word image_b;
};

// Rank-two Whitehead automorphisms spelled out by hand.
const std::vector<NaiveAut>& naive_generators() {
  static const std::vector<NaiveAut> gens = [] {
    const char* const table[][2] = {
        {"a", "b"},   {"a", "B"},   {"A", "b"},   {"A", "B"},   {"b", "a"},
        {"b", "A"},   {"B", "a"},   {"B", "A"},   {"ab", "b"},  {"aB", "b"},
        {"Ba", "b"},  {"ba", "b"},  {"Bab", "b"}, {"baB", "b"}, {"a", "ba"},
        {"a", "bA"},  {"a", "Ab"},  {"a", "ab"},  {"a", "Aba"}, {"a", "abA"},
    };
    std::vector<NaiveAut> v;
    for (const auto& row : table) {
      v.push_back({Word::from_letters(row[0]), Word::from_letters(row[1])});
    }
    return v;
  }();
  return gens;
}

CyclicWord naive_apply(const NaiveAut& g, const CyclicWord& c) {
  return cyclic_reduce(apply_endo(c.word(), g.image_a, g.image_b)).core;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Word random_reduced(std::mt19937_64& rng, std::size_t length) {
  std::vector<Letter> v;
  v.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    Letter x;
    do {
      x = kLetters[pick(rng, 4)];
    } while (!v.empty() && x == inverse(v.back()));
    v.push_back(x);
  }
  return Word::reduce(v);
}

}  // namespace

OrbitBfsResult bfs_orbit(const CyclicWord& start, std::size_t length_cap,
                         std::size_t node_budget) {
  if (length_cap < start.size()) throw std::invalid_argument("length cap below start length");
  OrbitBfsResult result;
  std::unordered_set<std::string> seen{start.str()};
  std::vector<CyclicWord> all{start};
  std::vector<CyclicWord> frontier{start};
  while (!frontier.empty()) {
    ++result.layers;
    result.max_frontier = std::max(result.max_frontier, frontier.size());
    std::vector<CyclicWord> next;
    for (const auto& c : frontier) {
      for (const auto& g : naive_generators()) {
        CyclicWord image = naive_apply(g, c);
        if (image.size() > length_cap) continue;
        if (seen.insert(image.str()).second) {
          if (seen.size() > node_budget) throw BudgetExhausted(node_budget);
          all.push_back(image);
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  result.min_length = start.size();
  for (const auto& c : all) result.min_length = std::min(result.min_length, c.size());
  for (const auto& c : all) {
    if (c.size() == result.min_length) result.minimal.push_back(c);
  }
  result.reachable = std::move(all);
  return result;
}

void for_each_cyclic_word(std::size_t length, const std::function<void(const CyclicWord&)>& fn) {
  if (length == 0) return;
  std::vector<Letter> buf(length);
  // Depth-first over freely reduced words; keep cyclically reduced ones that
  // are already in least rotation.
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == length) {
      if (length > 1 && buf.front() == inverse(buf.back())) return;
      if (least_rotation(buf) != 0) return;
      fn(CyclicWord::from_reduced(Word::reduce(buf)));
      return;
    }
    for (Letter x : kLetters) {
      if (pos > 0 && x == inverse(buf[pos - 1])) continue;
      buf[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
}

std::vector<CyclicWord> enumerate_cyclic_words(std::size_t length) {
  std::vector<CyclicWord> out;
  for_each_cyclic_word(length, [&](const CyclicWord& c) { out.push_back(c); });
  return out;
}

Word random_word(std::uint64_t seed, std::size_t length) {
  std::mt19937_64 rng(seed);
  return random_reduced(rng, length);
}

Word random_subgroup_word(std::uint64_t seed, std::size_t syllables) {
  if (syllables == 0) throw std::invalid_argument("syllables must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Letter> raw;
  int gen = static_cast<int>(pick(rng, 2));
  for (std::size_t i = 0; i < syllables; ++i) {
    int e = static_cast<int>(pick(rng, 3)) + 1;
    if (pick(rng, 2)) e = -e;
    for (int k = 0; k < std::abs(e); ++k) raw.push_back(make_letter(gen, e));
    gen ^= 1;
  }
  return expand_xy(XYWord(Word::reduce(raw)));
}

Word random_derived_word(std::uint64_t seed, std::size_t length) {
  if (length < 4 || length % 2 != 0) {
    throw std::invalid_argument("derived words need an even length of at least 4");
  }
  constexpr std::size_t kRetries = 1'000'000;
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < kRetries; ++attempt) {
    Word w = random_reduced(rng, length);
    if (w.front() == inverse(w.back())) continue;
    if (exponent_sums(w).in_derived_subgroup()) return w;
  }
  throw GenerationFailure("no derived word of length " + std::to_string(length) + " after " +
                          std::to_string(kRetries) + " attempts");
}

Agreement exhaustive_minimize_agreement(std::size_t max_length) {
  Agreement a;
  // A component at cap L is the same from every length-L node in it, so its
  // minimum is reused for the other length-L members.
  std::unordered_map<std::string, std::size_t> known;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for_each_cyclic_word(len, [&](const CyclicWord& c) {
      ++a.checked;
      std::size_t expected;
      if (auto it = known.find(c.str()); it != known.end()) {
        expected = it->second;
      } else {
        const auto bfs = bfs_orbit(c, len);
        expected = bfs.min_length;
        for (const auto& r : bfs.reachable) {
          if (r.size() == len) known.emplace(r.str(), expected);
        }
      }
      const auto got = minimize(c).min.size();
      if (got != expected) {
        a.disagreements.push_back(c.str() + ": minimize " + std::to_string(got) + " vs bfs " +
                                  std::to_string(expected));
      }
    });
  }
  return a;
}

Agreement orbit_set_agreement(std::uint64_t seed, std::size_t samples, std::size_t max_length) {
  Agreement a;
  std::mt19937_64 rng(seed);
  while (a.checked < samples) {
    const Word w = random_reduced(rng, 1 + pick(rng, max_length));
    const CyclicWord core = cyclic_reduce(w).core;
    if (core.empty()) continue;
    ++a.checked;
    const auto bfs = bfs_orbit(core, core.size());
    const auto orbit = shortest_orbit_set(core);
    if (bfs.minimal != orbit.members) {
      a.disagreements.push_back(core.str() + ": orbit sets differ (" +
                                std::to_string(bfs.minimal.size()) + " vs " +
                                std::to_string(orbit.members.size()) + ")");
    }
  }
  return a;
}

nlohmann::ordered_json agreement_report(std::size_t max_length, std::size_t samples,
                                        std::uint64_t seed) {
  const Agreement exhaustive = exhaustive_minimize_agreement(max_length);
  const Agreement orbits = orbit_set_agreement(seed, samples, 2 * max_length);
  nlohmann::ordered_json j;
  j["max_length"] = max_length;
  j["minimize"] = {{"checked", exhaustive.checked},
                   {"disagreements", exhaustive.disagreements}};
  j["orbit_sets"] = {{"seed", seed},
                     {"checked", orbits.checked},
                     {"disagreements", orbits.disagreements}};
  j["ok"] = exhaustive.disagreements.empty() && orbits.disagreements.empty();
  return j;
}

}  // namespace orjsj::oracle
