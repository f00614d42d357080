#include "orjsj/hnn_subgroup.hpp"

#include <array>

#include "orjsj/errors.hpp"
#include "orjsj/whitehead.hpp"

namespace orjsj {

namespace {

enum State : int { kU = 0, kW = 1, kFail = -1 };

// transition[state][letter]
constexpr std::array<std::array<int, 4>, 2> kCoreGraph = {{
    // a    A     b      B
    {kU, kU, kFail, kW},  // u
    {kW, kW, kU, kFail},  // w
}};

constexpr Letter kX = Letter::a, kXi = Letter::A, kY = Letter::b, kYi = Letter::B;

}  // namespace

std::string XYWord::plain() const {
  std::string s;
  for (Letter c : w_) {
    static constexpr char kChars[4] = {'x', 'X', 'y', 'Y'};
    s.push_back(kChars[index(c)]);
  }
  return s;
}

bool membership(const Word& w) {
  int state = kU;
  for (Letter x : w) {
    state = kCoreGraph[state][index(x)];
    if (state == kFail) return false;
  }
  return state == kU;
}

XYWord rewrite_to_xy(const Word& w) {
  if (!membership(w)) throw NotInSubgroup(w.str());
  std::vector<Letter> out;
  out.reserve(w.size());
  auto s = w.letters();
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == Letter::B) {
      // Excursion B a^k b through w reads y^k.
      ++i;
      while (s[i] != Letter::b) {
        out.push_back(s[i] == Letter::a ? kY : kYi);
        ++i;
      }
      ++i;
    } else {
      out.push_back(s[i] == Letter::a ? kX : kXi);
      ++i;
    }
  }
  return XYWord(Word::reduce(out));
}

Word expand_xy(const XYWord& t) {
  static const Word kImageY = Word::from_letters("Bab");
  return apply_endo(t.word(), Word::from_letters("a"), kImageY);
}

SyllableCounts syllables(const XYWord& t) {
  SyllableCounts c;
  auto s = t.word().letters();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (generator(s[i]) == 0) {
      ++c.x;
    } else {
      ++c.y;
      if (i == 0 || generator(s[i - 1]) != 1) ++c.y_syllables;
    }
  }
  return c;
}

std::optional<Representative> find_representative(const OrbitSet& orbit) {
  auto least_in = [](const CyclicWord& c) -> std::optional<Word> {
    std::optional<Word> best;
    for (auto& r : rotations(c)) {
      if (membership(r) && (!best || r < *best)) best = std::move(r);
    }
    return best;
  };

  std::optional<Word> best;
  if (orbit.contains(orbit.seed)) best = least_in(orbit.seed);
  if (!best) {
    for (const auto& member : orbit.members) {
      auto candidate = least_in(member);
      if (candidate && (!best || *candidate < *best)) best = std::move(candidate);
    }
  }
  if (!best) return std::nullopt;
  XYWord t0 = rewrite_to_xy(*best);
  return Representative{std::move(*best), std::move(t0)};
}

}  // namespace orjsj
