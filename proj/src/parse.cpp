#include "orjsj/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "orjsj/errors.hpp"

namespace orjsj {

namespace {

constexpr std::size_t kMaxExpandedLength = 50'000'000;

// Recursive-descent parser producing raw (unreduced) letters. `alphabet`
// holds the characters for codes 0..3 in order.
class Parser {
 public:
  Parser(std::string_view text, std::string_view alphabet, std::size_t offset)
      : text_(text), alphabet_(alphabet), offset_(offset) {}

  std::vector<Letter> parse() {
    auto out = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(text_[pos_] == ')' ? "unbalanced ')'" : unexpected());
    return out;
  }

 private:
  std::vector<Letter> expr() {
    std::vector<Letter> out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      auto t = term();
      if (out.size() + t.size() > kMaxExpandedLength) fail("expanded word too long");
      out.insert(out.end(), t.begin(), t.end());
    }
  }

  std::vector<Letter> term() {
    std::vector<Letter> base = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      long long n = integer();
      return raise(base, n);
    }
    return base;
  }

  std::vector<Letter> atom() {
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      auto inner = expr();
      skip_ws();
      if (pos_ >= text_.size()) fail_at(open, "unbalanced '('");
      ++pos_;  // ')'
      return inner;
    }
    auto code = alphabet_.find(c);
    if (code == std::string_view::npos) fail(unexpected());
    ++pos_;
    return {static_cast<Letter>(code)};
  }

  long long integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer exponent after '^'");
    }
    long long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_] - '0');
      if (n > static_cast<long long>(kMaxExpandedLength)) fail("exponent too large");
      ++pos_;
    }
    return negative ? -n : n;
  }

  std::vector<Letter> raise(const std::vector<Letter>& base, long long n) {
    std::vector<Letter> unit;
    if (n >= 0) {
      unit = base;
    } else {
      unit.assign(base.rbegin(), base.rend());
      for (auto& x : unit) x = inverse(x);
      n = -n;
    }
    if (!unit.empty() && static_cast<std::size_t>(n) > kMaxExpandedLength / unit.size()) {
      fail("expanded word too long");
    }
    std::vector<Letter> out;
    out.reserve(unit.size() * static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string unexpected() const {
    return std::string("unexpected character '") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(offset_ + at, msg);
  }

  std::string_view text_;
  std::string_view alphabet_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::vector<Letter> parse_raw(std::string_view text, std::string_view alphabet,
                              std::size_t offset = 0) {
  return Parser(text, alphabet, offset).parse();
}

}  // namespace

Word parse_word(std::string_view text) { return Word::reduce(parse_raw(text, "aAbB")); }

XYWord parse_xy(std::string_view text) { return XYWord(Word::reduce(parse_raw(text, "xXyY"))); }

Word parse_relator(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return parse_word(text);

  const auto head = text.substr(0, bar);
  const auto open_ascii = head.find('<');
  const auto open_unicode = head.find("⟨");
  if (open_ascii == std::string_view::npos && open_unicode == std::string_view::npos) {
    throw ParseError(0, "presentation must start with '<'");
  }
  for (std::size_t i = 0; i < head.size(); ++i) {
    const char c = head[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == 'a' || c == 'b' || c == ',' ||
        c == '<') {
      continue;
    }
    if (head.substr(i, 3) == "⟨") {
      i += 2;
      continue;
    }
    throw ParseError(i, "presentation generators must be a, b");
  }

  auto body = text.substr(bar + 1);
  auto close = body.rfind('>');
  const auto close_unicode = body.rfind("⟩");
  if (close_unicode != std::string_view::npos) close = close_unicode;
  if (close == std::string_view::npos) throw ParseError(text.size(), "missing closing '>'");
  for (std::size_t i = close + (close == close_unicode ? 3 : 1); i < body.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(body[i]))) {
      throw ParseError(bar + 1 + i, "trailing characters after presentation");
    }
  }
  return Word::reduce(parse_raw(body.substr(0, close), "aAbB", bar + 1));
}

std::string format_xy(const XYWord& t) {
  std::string out;
  auto s = t.word().letters();
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out.push_back(' ');
    out.push_back(generator(s[i]) == 0 ? 'x' : 'y');
    const long long e = static_cast<long long>(j - i) * sign(s[i]);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace orjsj
