#pragma once

#include <string>
#include <string_view>

#include "dyadic/errors.hpp"

namespace dyadic::detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Minimal scanner for the bracketed literal grammars (points, matrices,
// triangles, hats). Errors quote the whole literal and the position.
class Cursor {
 public:
  Cursor(std::string_view text, std::string_view what) : text_(text), what_(what) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  // Trimmed token up to (not including) the first character in delims.
  std::string_view token(std::string_view delims) {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && delims.find(text_[pos_]) == std::string_view::npos) ++pos_;
    auto tok = trim(text_.substr(start, pos_ - start));
    if (tok.empty()) fail("expected a number");
    return tok;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("invalid " + std::string(what_) + " '" + std::string(text_) + "': " + msg +
                     " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::string_view what_;
  std::size_t pos_ = 0;
};

}  // namespace dyadic::detail
