#include "orjsj/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "orjsj/errors.hpp"

namespace orjsj {

char to_char(Letter x) {
  static constexpr char kChars[4] = {'a', 'A', 'b', 'B'};
  return kChars[index(x)];
}

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

Word Word::from_letters(std::string_view plain) {
  std::vector<Letter> raw;
  raw.reserve(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    auto x = letter_from_char(plain[i]);
    if (!x) {
      throw ParseError(i, std::string("unexpected character '") + plain[i] + "'");
    }
    raw.push_back(*x);
  }
  return reduce(raw);
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(to_char(x));
  return s;
}

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter x = s[(i + k) % n];
    Letter y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::size_t smallest_period(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // KMP border array; the shortest period is n - border(n).
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

CyclicWord CyclicWord::from_reduced(const Word& w) {
  auto s = w.letters();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == inverse(s[i - 1])) throw std::invalid_argument("word is not freely reduced");
  }
  if (s.size() > 1 && s.front() == inverse(s.back())) {
    throw std::invalid_argument("word " + w.str() + " is not cyclically reduced");
  }
  std::vector<Letter> out(s.size());
  std::rotate_copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(least_rotation(s)), s.end(),
                   out.begin());
  return CyclicWord(std::move(out));
}

Word free_reduce(std::span<const Letter> raw) { return Word::reduce(raw); }

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(inverse(*it));
  return Word::reduce(out);
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> raw(u.begin(), u.end());
  raw.insert(raw.end(), v.begin(), v.end());
  return Word::reduce(raw);
}

Word power(const Word& w, long long n) {
  const Word base = n < 0 ? invert(w) : w;
  const auto reps = static_cast<std::size_t>(n < 0 ? -n : n);
  std::vector<Letter> raw;
  raw.reserve(base.size() * reps);
  for (std::size_t i = 0; i < reps; ++i) raw.insert(raw.end(), base.begin(), base.end());
  return Word::reduce(raw);
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto s = w.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo] == inverse(s[hi - 1])) {
    ++lo;
    --hi;
  }
  Word outer = Word::reduce(s.subspan(0, lo));
  Word middle = Word::reduce(s.subspan(lo, hi - lo));
  CyclicWord core = CyclicWord::from_reduced(middle);
  // middle = u v with core = v u: both outer u and outer v^-1 conjugate core to w.
  const auto m = middle.letters();
  const std::size_t k = m.empty() ? 0 : least_rotation(m);
  Word via_u = concat(outer, Word::reduce(m.subspan(0, k)));
  Word via_v = concat(outer, invert(Word::reduce(m.subspan(k))));
  Word conjugator = via_v.size() < via_u.size() ? std::move(via_v) : std::move(via_u);
  return {std::move(conjugator), std::move(outer), std::move(middle), std::move(core)};
}

ExponentSums exponent_sums(const Word& w) {
  ExponentSums e;
  for (Letter x : w) {
    (generator(x) == 0 ? e.a : e.b) += sign(x);
  }
  return e;
}

Root max_root(const Word& w) {
  if (w.empty()) throw EmptyWord();
  auto cr = cyclic_reduce(w);
  auto s = cr.reduced.letters();
  std::size_t p = smallest_period(s);
  std::vector<Letter> raw(cr.outer.begin(), cr.outer.end());
  raw.insert(raw.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p));
  Word inv = invert(cr.outer);
  raw.insert(raw.end(), inv.begin(), inv.end());
  return {Word::reduce(raw), static_cast<int>(s.size() / p)};
}

Word apply_endo(const Word& w, const Word& image_a, const Word& image_b) {
  const Word inv_a = invert(image_a);
  const Word inv_b = invert(image_b);
  const Word* images[4] = {&image_a, &inv_a, &image_b, &inv_b};
  std::vector<Letter> raw;
  for (Letter x : w) {
    const Word& img = *images[index(x)];
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return Word::reduce(raw);
}

std::vector<Word> rotations(const CyclicWord& c) {
  auto s = c.letters();
  const std::size_t n = s.size();
  std::vector<Word> out;
  if (n == 0) return out;
  // Distinct rotations are exactly the first `period` of them.
  const std::size_t p = smallest_period(s);
  out.reserve(p);
  std::vector<Letter> buf(n);
  for (std::size_t r = 0; r < p; ++r) {
    std::rotate_copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r), s.end(), buf.begin());
    out.push_back(Word::reduce(buf));
  }
  return out;
}

}  // namespace orjsj
