#include "orjsj/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "orjsj/errors.hpp"

namespace orjsj {

namespace {

// Image table indexed by letter code: image of a, A, b, B.
struct ImageTable {
  std::vector<Letter> image[4];
};

std::vector<Letter> invert_letters(const std::vector<Letter>& v) {
  std::vector<Letter> out(v.rbegin(), v.rend());
  for (auto& x : out) x = inverse(x);
  return out;
}

ImageTable table_for(const WhiteheadAut& aut) {
  ImageTable t;
  Word ia = aut.image_a();
  Word ib = aut.image_b();
  t.image[0].assign(ia.begin(), ia.end());
  t.image[1] = invert_letters(t.image[0]);
  t.image[2].assign(ib.begin(), ib.end());
  t.image[3] = invert_letters(t.image[2]);
  return t;
}

const std::vector<ImageTable>& tables() {
  static const std::vector<ImageTable> all = [] {
    std::vector<ImageTable> v;
    for (const auto& aut : generating_set()) v.push_back(table_for(aut));
    return v;
  }();
  return all;
}

// Substitutes, freely reduces on a stack, then cyclically reduces.
CyclicWord apply_table(const ImageTable& t, const CyclicWord& c) {
  std::vector<Letter> out;
  out.reserve(c.size() * 3);
  for (Letter x : c.letters()) {
    for (Letter y : t.image[index(x)]) {
      if (!out.empty() && out.back() == inverse(y)) {
        out.pop_back();
      } else {
        out.push_back(y);
      }
    }
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == inverse(out[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(out.begin() + static_cast<std::ptrdiff_t>(lo),
                           out.begin() + static_cast<std::ptrdiff_t>(hi));
  return CyclicWord::from_reduced(Word::reduce(core));
}

Letter other_generator(Letter z) { return generator(z) == 0 ? Letter::b : Letter::a; }

}  // namespace

WhiteheadAut WhiteheadAut::permutation(Letter image_a, Letter image_b) {
  WhiteheadAut w;
  w.kind = Kind::Permutation;
  w.perm_a = image_a;
  w.perm_b = image_b;
  return w;
}

WhiteheadAut WhiteheadAut::multiply(Letter z, Letter m, Mode mode) {
  WhiteheadAut w;
  w.kind = Kind::Multiplier;
  w.acted = z;
  w.multiplier = m;
  w.mode = mode;
  return w;
}

Word WhiteheadAut::image_a() const {
  if (kind == Kind::Permutation) return Word::reduce(std::vector<Letter>{perm_a});
  if (acted != Letter::a) return Word::reduce(std::vector<Letter>{Letter::a});
  const Letter m = multiplier, mi = inverse(multiplier);
  switch (mode) {
    case Mode::Right: return Word::reduce(std::vector<Letter>{Letter::a, m});
    case Mode::Left: return Word::reduce(std::vector<Letter>{mi, Letter::a});
    case Mode::Conj: return Word::reduce(std::vector<Letter>{mi, Letter::a, m});
  }
  return {};
}

Word WhiteheadAut::image_b() const {
  if (kind == Kind::Permutation) return Word::reduce(std::vector<Letter>{perm_b});
  if (acted != Letter::b) return Word::reduce(std::vector<Letter>{Letter::b});
  const Letter m = multiplier, mi = inverse(multiplier);
  switch (mode) {
    case Mode::Right: return Word::reduce(std::vector<Letter>{Letter::b, m});
    case Mode::Left: return Word::reduce(std::vector<Letter>{mi, Letter::b});
    case Mode::Conj: return Word::reduce(std::vector<Letter>{mi, Letter::b, m});
  }
  return {};
}

std::string WhiteheadAut::describe() const {
  return "a->" + image_a().str() + ", b->" + image_b().str();
}

const std::vector<WhiteheadAut>& generating_set() {
  static const std::vector<WhiteheadAut> set = [] {
    std::vector<WhiteheadAut> v;
    // Signed permutations, identity first.
    for (Letter ia : {Letter::a, Letter::A}) {
      for (Letter ib : {Letter::b, Letter::B}) v.push_back(WhiteheadAut::permutation(ia, ib));
    }
    for (Letter ia : {Letter::b, Letter::B}) {
      for (Letter ib : {Letter::a, Letter::A}) v.push_back(WhiteheadAut::permutation(ia, ib));
    }
    using Mode = WhiteheadAut::Mode;
    for (Letter z : {Letter::a, Letter::b}) {
      const Letter g = other_generator(z);
      for (Mode mode : {Mode::Right, Mode::Left, Mode::Conj}) {
        for (Letter m : {g, inverse(g)}) v.push_back(WhiteheadAut::multiply(z, m, mode));
      }
    }
    return v;
  }();
  return set;
}

CyclicWord apply(const WhiteheadAut& aut, const CyclicWord& c) {
  const auto& set = generating_set();
  auto it = std::find(set.begin(), set.end(), aut);
  if (it != set.end()) return apply_table(tables()[static_cast<std::size_t>(it - set.begin())], c);
  return apply_table(table_for(aut), c);
}

Minimization minimize(const CyclicWord& c) {
  Minimization result{c, {}};
  if (c.size() <= 1) return result;
  const auto& set = generating_set();
  const auto& tabs = tables();
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i].kind == WhiteheadAut::Kind::Permutation) continue;
      CyclicWord image = apply_table(tabs[i], result.min);
      if (image.size() < result.min.size()) {
        result.min = std::move(image);
        result.witness.push_back(set[i]);
        reduced = true;
        break;
      }
    }
  }
  return result;
}

bool OrbitSet::contains(const CyclicWord& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

OrbitSet shortest_orbit_set(const CyclicWord& c, std::size_t cap_factor) {
  OrbitSet orbit;
  orbit.seed = minimize(c).min;
  orbit.min_length = orbit.seed.size();
  const std::size_t bound = cap_factor * std::max<std::size_t>(orbit.min_length, 1);

  std::set<CyclicWord> seen{orbit.seed};
  std::deque<CyclicWord> queue{orbit.seed};
  const auto& tabs = tables();
  while (!queue.empty()) {
    CyclicWord cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : tabs) {
      CyclicWord image = apply_table(t, cur);
      if (image.size() != orbit.min_length) continue;
      if (seen.insert(image).second) {
        if (seen.size() > bound) throw CardinalityBlown(seen.size(), bound);
        queue.push_back(std::move(image));
      }
    }
  }
  orbit.members.assign(seen.begin(), seen.end());
  return orbit;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw EmptyWord();
  return minimize(cyclic_reduce(w).core).min.size() == 1;
}

std::optional<long long> commutator_power(const Word& w) {
  const CyclicWord core = cyclic_reduce(w).core;
  if (core.empty()) return 0;
  if (core.size() % 4 != 0) return std::nullopt;
  const auto k = static_cast<long long>(core.size() / 4);
  static const Word kCommutator = Word::from_letters("abAB");
  static const Word kInverse = Word::from_letters("baBA");
  if (core == CyclicWord::from_reduced(power(kCommutator, k))) return k;
  if (core == CyclicWord::from_reduced(power(kInverse, k))) return -k;
  return std::nullopt;
}

}  // namespace orjsj
