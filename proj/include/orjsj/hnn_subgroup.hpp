#pragma once

// The subgroup <a, b^-1 a b> of F(a, b).
//
// Its Stallings core graph has two states: the base u and w, each with an
// a-loop, joined by a b-edge from w to u. A word lies in the subgroup iff it
// can be read from u back to u.

#include <cstddef>
#include <optional>
#include <string>

#include "orjsj/word.hpp"

namespace orjsj {

struct OrbitSet;

// Word over {x, y} with x = a and y = b^-1 a b. Stored with the letter codes
// of Word (x in place of a, y in place of b).
class XYWord {
 public:
  XYWord() = default;
  explicit XYWord(Word w) : w_(std::move(w)) {}

  const Word& word() const { return w_; }
  std::size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  // Plain letters, e.g. "XXyy".
  std::string plain() const;

  friend bool operator==(const XYWord&, const XYWord&) = default;

 private:
  Word w_;
};

struct SyllableCounts {
  std::size_t x = 0;            // number of x-letters
  std::size_t y = 0;            // number of y-letters
  std::size_t y_syllables = 0;  // maximal y^i subwords
};

bool membership(const Word& w);

// Throws NotInSubgroup when membership(w) is false.
XYWord rewrite_to_xy(const Word& w);

Word expand_xy(const XYWord& t);

SyllableCounts syllables(const XYWord& t);

struct Representative {
  Word T;
  XYWord T0;
};

// A rotation of an orbit member lying in the subgroup. Rotations of the
// orbit's seed class are preferred; otherwise the least qualifying rotation
// over all members is returned.
std::optional<Representative> find_representative(const OrbitSet& orbit);

}  // namespace orjsj
