#pragma once

// Whitehead's algorithm in rank two.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orjsj/word.hpp"

namespace orjsj {

// Default for the guard |O_S| <= C * min_length.
inline constexpr std::size_t kDefaultOrbitCap = 1000;

struct WhiteheadAut {
  enum class Kind { Permutation, Multiplier };
  enum class Mode { Right, Left, Conj };  // z -> zm, z -> m^-1 z, z -> m^-1 z m

  Kind kind = Kind::Permutation;
  // Permutation: images of a and b.
  Letter perm_a = Letter::a;
  Letter perm_b = Letter::b;
  // Multiplier: acted generator z (a or b), multiplier m of the other generator.
  Letter acted = Letter::a;
  Letter multiplier = Letter::b;
  Mode mode = Mode::Right;

  static WhiteheadAut permutation(Letter image_a, Letter image_b);
  static WhiteheadAut multiply(Letter z, Letter m, Mode mode);

  Word image_a() const;
  Word image_b() const;
  // "a->ab, b->b"
  std::string describe() const;

  friend bool operator==(const WhiteheadAut&, const WhiteheadAut&) = default;
};

// 8 signed permutations followed by 12 multiplier automorphisms, fixed order.
const std::vector<WhiteheadAut>& generating_set();

CyclicWord apply(const WhiteheadAut& aut, const CyclicWord& c);

struct Minimization {
  CyclicWord min;
  std::vector<WhiteheadAut> witness;
};

// Greedy peak reduction: repeatedly applies the first strictly shortening
// generator until none exists.
Minimization minimize(const CyclicWord& c);

// Minimal-length cyclic words of one Aut(F(a, b))-orbit, sorted.
struct OrbitSet {
  std::vector<CyclicWord> members;
  std::size_t min_length = 0;
  // The minimize() output the closure was grown from.
  CyclicWord seed;

  bool contains(const CyclicWord& c) const;
};

// Throws CardinalityBlown when more than cap_factor * min_length members are found.
OrbitSet shortest_orbit_set(const CyclicWord& c, std::size_t cap_factor = kDefaultOrbitCap);

// Throws EmptyWord on the identity.
bool is_primitive(const Word& w);

// k with w conjugate to [a, b]^k, where [a, b] = abAB; 0 for the identity.
std::optional<long long> commutator_power(const Word& w);

}  // namespace orjsj
