#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orjsj/errors.hpp"
#include "orjsj/oracle.hpp"
#include "orjsj/word.hpp"

using namespace orjsj;

namespace {

Word W(const char* s) { return Word::from_letters(s); }

CyclicWord C(const char* s) { return cyclic_reduce(W(s)).core; }

std::vector<Letter> letters(const char* s) {
  std::vector<Letter> v;
  for (const char* p = s; *p; ++p) v.push_back(*letter_from_char(*p));
  return v;
}

std::vector<Letter> random_raw(std::mt19937_64& rng, std::size_t n) {
  std::vector<Letter> v(n);
  for (auto& x : v) x = kLetters[rng() % 4];
  return v;
}

}  // namespace

TEST_CASE("letters") {
  CHECK(inverse(Letter::a) == Letter::A);
  CHECK(inverse(Letter::B) == Letter::b);
  CHECK(generator(Letter::B) == 1);
  CHECK(sign(Letter::A) == -1);
  CHECK(make_letter(1, -1) == Letter::B);
  CHECK(to_char(Letter::b) == 'b');
  CHECK_FALSE(letter_from_char('x').has_value());
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(letters("abBa")).str() == "aa");
  CHECK(free_reduce(letters("aA")).empty());
  CHECK(free_reduce(letters("aabbABAB")).str() == "aabbABAB");
  CHECK(free_reduce(letters("abBAbaAB")).empty());
}

TEST_CASE("from_letters rejects bad characters") {
  CHECK_THROWS_AS(Word::from_letters("abc"), ParseError);
}

TEST_CASE("invert and concat") {
  CHECK(invert(W("abAB")).str() == "baBA");
  CHECK(invert(Word()).empty());
  CHECK(invert(W("a")).str() == "A");
  CHECK(concat(W("ab"), W("BA")).empty());
  CHECK(concat(W("aB"), W("ba")).str() == "aa");
  CHECK(concat(Word(), W("abAB")) == W("abAB"));
}

TEST_CASE("power") {
  CHECK(power(W("ab"), 3).str() == "ababab");
  CHECK(power(W("ab"), -2).str() == "BABA");
  CHECK(power(W("ab"), 0).empty());
  CHECK(power(W("Bab"), 3).str() == "Baaab");
}

TEST_CASE("cyclic_reduce") {
  auto r = cyclic_reduce(W("Bab"));
  CHECK(r.conjugator.str() == "B");
  CHECK(r.core.str() == "a");

  r = cyclic_reduce(W("abAB"));
  CHECK(r.conjugator.empty());
  CHECK(r.core == C("abAB"));

  r = cyclic_reduce(W("AabABa"));
  CHECK(r.conjugator.str() == "A");
  CHECK(r.outer.empty());
  CHECK(r.reduced.str() == "bABa");
  CHECK(r.core == C("abAB"));

  r = cyclic_reduce(W("Abaaa"));
  CHECK(r.outer.str() == "A");
  CHECK(r.reduced.str() == "baa");
  CHECK(r.core.str() == "aab");
  CHECK(r.conjugator.str() == "Ab");

  r = cyclic_reduce(Word());
  CHECK(r.conjugator.empty());
  CHECK(r.core.empty());
}

TEST_CASE("exponent_sums") {
  CHECK(exponent_sums(W("aabbABAB")) == ExponentSums{0, 0});
  CHECK(exponent_sums(W("AABaab")) == ExponentSums{0, 0});
  CHECK(exponent_sums(W("aab")) == ExponentSums{2, 1});
  CHECK(exponent_sums(W("aab")).in_derived_subgroup() == false);
}

TEST_CASE("max_root") {
  auto r = max_root(W("abABabAB"));
  CHECK(r.root.str() == "abAB");
  CHECK(r.exponent == 2);
  r = max_root(W("AABaab"));
  CHECK(r.root.str() == "AABaab");
  CHECK(r.exponent == 1);
  r = max_root(W("aabbABAB"));
  CHECK(r.exponent == 1);
  // Conjugated power keeps its conjugator on the root.
  r = max_root(W("Baaab"));
  CHECK(r.root.str() == "Bab");
  CHECK(r.exponent == 3);
  CHECK_THROWS_AS(max_root(Word()), EmptyWord);
}

TEST_CASE("max_root periods cross-checked by direct comparison") {
  // Independent oracle: try every divisor period on the cyclic core.
  auto direct = [](const CyclicWord& c) {
    const auto s = c.str();
    for (std::size_t p = 1; p <= s.size(); ++p) {
      if (s.size() % p) continue;
      bool ok = true;
      for (std::size_t i = p; i < s.size() && ok; ++i) ok = s[i] == s[i - p];
      if (ok) return static_cast<int>(s.size() / p);
    }
    return 1;
  };
  for (std::size_t len = 1; len <= 8; ++len) {
    for (const auto& c : oracle::enumerate_cyclic_words(len)) {
      CHECK(max_root(c.word()).exponent == direct(c));
    }
  }
}

TEST_CASE("apply_endo") {
  CHECK(apply_endo(W("abb"), W("aBB"), W("b")).str() == "a");
  CHECK(apply_endo(W("aabbABAB"), W("a"), W("b")) == W("aabbABAB"));
  CHECK(apply_endo(W("abAB"), W("b"), W("a")).str() == "baBA");
}

TEST_CASE("rotations") {
  auto rs = rotations(C("abAB"));
  std::vector<std::string> got;
  for (const auto& w : rs) got.push_back(w.str());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"ABab", "BabA", "abAB", "bABa"});
  CHECK(rotations(C("a")).size() == 1);
  CHECK(rotations(C("aa")).size() == 1);
  CHECK(rotations(C("abab")).size() == 2);
}

TEST_CASE("CyclicWord canonical form") {
  CHECK(C("bABa") == C("abAB"));
  CHECK(C("bABa").str() == "abAB");
  CHECK(C("ba").str() == "ab");
  CHECK_THROWS_AS(CyclicWord::from_reduced(W("aBA")), std::invalid_argument);
}

TEST_CASE("enumerate_cyclic_words small lengths") {
  CHECK(oracle::enumerate_cyclic_words(0).empty());
  CHECK(oracle::enumerate_cyclic_words(1).size() == 4);
  // Cross-count by filtering all raw strings of length 2 and 3.
  for (std::size_t len : {2u, 3u, 4u}) {
    std::set<std::string> classes;
    std::vector<Letter> buf(len);
    const std::size_t total = std::size_t{1} << (2 * len);
    for (std::size_t code = 0; code < total; ++code) {
      for (std::size_t i = 0; i < len; ++i) buf[i] = kLetters[(code >> (2 * i)) & 3];
      bool ok = true;
      for (std::size_t i = 0; i < len; ++i) ok = ok && buf[(i + 1) % len] != inverse(buf[i]);
      if (!ok) continue;
      std::string best;
      for (std::size_t r = 0; r < len; ++r) {
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s += static_cast<char>('0' + index(buf[(r + i) % len]));
        if (best.empty() || s < best) best = s;
      }
      classes.insert(best);
    }
    CHECK(oracle::enumerate_cyclic_words(len).size() == classes.size());
  }
}

TEST_CASE("properties on random words") {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto raw = random_raw(rng, rng() % 30);
    const Word w = free_reduce(raw);
    CHECK(free_reduce(w.letters()) == w);
    CHECK(invert(invert(w)) == w);
    CHECK(concat(w, invert(w)).empty());

    const auto cr = cyclic_reduce(w);
    CHECK(cr.core.size() <= w.size());
    const bool cyclically_reduced = w.size() < 2 || w.front() != inverse(w.back());
    CHECK((cr.core.size() == w.size()) == cyclically_reduced);
    CHECK(concat(concat(cr.outer, cr.reduced), invert(cr.outer)) == w);
    CHECK(concat(concat(cr.conjugator, cr.core.word()), invert(cr.conjugator)) == w);
    for (const auto& r : rotations(cr.core)) CHECK(cyclic_reduce(r).core == cr.core);

    const Word v = free_reduce(random_raw(rng, rng() % 20));
    CHECK(exponent_sums(concat(w, v)) == exponent_sums(w) + exponent_sums(v));

    if (!w.empty()) {
      const Root root = max_root(w);
      CHECK(power(root.root, root.exponent) == w);
      const auto period = smallest_period(cr.core.letters());
      CHECK(cr.core.size() / period == static_cast<std::size_t>(root.exponent));
      // No larger exponent: any m > n with a root would give a smaller period.
      for (std::size_t m = root.exponent + 1; m <= cr.core.size(); ++m) {
        if (cr.core.size() % m) continue;
        const auto p = cr.core.size() / m;
        bool periodic = true;
        for (std::size_t i = p; i < cr.core.size() && periodic; ++i) {
          periodic = cr.core.letters()[i] == cr.core.letters()[i - p];
        }
        CHECK_FALSE(periodic);
      }
    }
  }
}
