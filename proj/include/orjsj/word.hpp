#pragma once

// Words in the free group F(a, b).
//
// Letters are encoded as the integers 0..3 in the order a < A < b < B, where
// upper case denotes the inverse generator. Flipping the low bit inverts a
// letter and the high bit selects the generator.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orjsj {

enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

inline constexpr Letter kLetters[4] = {Letter::a, Letter::A, Letter::b, Letter::B};

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u);
}

// 0 for a, 1 for b.
constexpr int generator(Letter x) { return static_cast<std::uint8_t>(x) >> 1; }

constexpr int sign(Letter x) { return (static_cast<std::uint8_t>(x) & 1u) ? -1 : 1; }

constexpr Letter make_letter(int gen, int sgn) {
  return static_cast<Letter>((gen << 1) | (sgn < 0 ? 1 : 0));
}

constexpr int index(Letter x) { return static_cast<int>(x); }

char to_char(Letter x);
std::optional<Letter> letter_from_char(char c);

class CyclicWord;

// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Freely reduces the raw sequence.
  static Word reduce(std::span<const Letter> raw);
  // Plain letters only ("aabbABAB"); throws ParseError on any other character.
  static Word from_letters(std::string_view plain);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  friend class CyclicWord;

  std::vector<Letter> letters_;
};

// Cyclically reduced word stored in its least rotation under a < A < b < B.
// Two CyclicWords are equal iff they are conjugate.
class CyclicWord {
 public:
  CyclicWord() = default;

  // Throws std::invalid_argument if w is not cyclically reduced.
  static CyclicWord from_reduced(const Word& w);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Word word() const { return Word(letters_); }
  std::string str() const { return word().str(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(std::vector<Letter> canonical) : letters_(std::move(canonical)) {}

  std::vector<Letter> letters_;
};

struct ExponentSums {
  long long a = 0;
  long long b = 0;

  bool in_derived_subgroup() const { return a == 0 && b == 0; }

  friend ExponentSums operator+(ExponentSums x, ExponentSums y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

// w = outer * reduced * outer^-1, where reduced is the cyclically reduced
// middle of w, and w = conjugator * core * conjugator^-1 for the canonical
// rotation core (the shorter of the two conjugators that achieve it).
struct CyclicReduction {
  Word conjugator;
  Word outer;
  Word reduced;
  CyclicWord core;
};

struct Root {
  Word root;
  int exponent = 1;
};

Word free_reduce(std::span<const Letter> raw);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, long long n);

CyclicReduction cyclic_reduce(const Word& w);

ExponentSums exponent_sums(const Word& w);

// w = root^n with n maximal. Throws EmptyWord on the identity.
Root max_root(const Word& w);

// Image of w under the endomorphism a -> image_a, b -> image_b.
Word apply_endo(const Word& w, const Word& image_a, const Word& image_b);

// All distinct rotations of c, starting with the stored canonical one.
std::vector<Word> rotations(const CyclicWord& c);

// Smallest p dividing letters.size() with letters periodic of period p.
std::size_t smallest_period(std::span<const Letter> letters);

// Index of the least rotation of a sequence (Booth / two-pointer scan, O(n)).
std::size_t least_rotation(std::span<const Letter> letters);

}  // namespace orjsj
