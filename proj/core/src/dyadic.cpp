#include "dyadic/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "dyadic/errors.hpp"
#include "text_cursor.hpp"

namespace dyadic {

Dyadic::Dyadic(const Integer& value) : num_(value) { normalize(); }

Dyadic::Dyadic(Integer num, std::int64_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

Dyadic Dyadic::pow2(std::int64_t k) { return Dyadic(Integer(1), k); }

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const std::int64_t tz = trailing_zeros(num_);
  if (tz > 0) {
    num_ = shift(num_, -tz);
    exp_ += tz;
  }
}

Integer Dyadic::to_integer() const {
  if (exp_ < 0) throw DomainError("not an integer: " + format_dyadic(*this));
  return shift(num_, exp_);
}

Dyadic Dyadic::scaled(std::int64_t k) const {
  Dyadic r = *this;
  if (!r.is_zero()) r.exp_ += k;
  return r;
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  if (r.num_ < 0) r.num_ = -r.num_;
  return r;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const std::int64_t e = std::min(exp_, rhs.exp_);
  num_ = shift(num_, exp_ - e) + shift(rhs.num_, rhs.exp_ - e);
  exp_ = e;
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Dyadic();
  // odd * odd is odd: the product is already canonical
  num_ *= rhs.num_;
  exp_ += rhs.exp_;
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  const std::int64_t e = std::min(a.exp_, b.exp_);
  const int c = shift(a.num_, a.exp_ - e).compare(shift(b.num_, b.exp_ - e));
  return c <=> 0;
}

Dyadic midpoint(const Dyadic& x, const Dyadic& y) { return (x + y).scaled(-1); }

Valuation val2(const Dyadic& x) {
  if (x.is_zero()) throw DomainError("valuation of zero");
  return {x.exp(), x.num()};
}

namespace {

Integer parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("invalid dyadic literal '" + std::string(whole) + "'");
  }
  return Integer(std::string(digits));
}

}  // namespace

Dyadic parse_dyadic(std::string_view text) {
  const std::string_view whole = detail::trim(text);
  std::string_view s = whole;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Dyadic value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer p = parse_digits(s.substr(0, slash), whole);
    const Integer q = parse_digits(s.substr(slash + 1), whole);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    if ((q & (q - 1)) != 0) throw ParseError("denominator not a power of 2: " + q.str());
    value = Dyadic(p, -static_cast<std::int64_t>(boost::multiprecision::lsb(q)));
  } else if (const auto star = s.find('*'); star != std::string_view::npos) {
    const Integer n = parse_digits(s.substr(0, star), whole);
    std::string_view rest = s.substr(star + 1);
    if (rest.substr(0, 2) != "2^") throw ParseError("invalid dyadic literal '" + std::string(whole) + "'");
    rest.remove_prefix(2);
    std::int64_t e = 0;
    const auto* first = rest.data();
    const auto* last = rest.data() + rest.size();
    if (!rest.empty() && rest.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, e);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw ParseError("invalid exponent in '" + std::string(whole) + "'");
    }
    value = Dyadic(n, e);
  } else {
    value = Dyadic(parse_digits(s, whole));
  }
  return negative ? -value : value;
}

std::string format_dyadic(const Dyadic& x) {
  if (x.exp() >= 0) return shift(x.num(), x.exp()).str();
  return x.num().str() + "/" + pow2(-x.exp()).str();
}

std::ostream& operator<<(std::ostream& os, const Dyadic& x) { return os << format_dyadic(x); }

}  // namespace dyadic
