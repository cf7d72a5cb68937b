#include "gpss/rational.hpp"

#include <limits>
#include <stdexcept>

namespace gpss {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rat(Int(-num), Int(-den));
  return Rat(num, den);
}

std::optional<std::int64_t> as_int64(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v < kMin || v > kMax) return std::nullopt;
  return v.convert_to<std::int64_t>();
}

std::optional<std::int64_t> rat_as_int64(const Rat& v) {
  if (denominator(v) != 1) return std::nullopt;
  return as_int64(numerator(v));
}

bool is_integer(const Rat& v) { return denominator(v) == 1; }

std::string rat_to_string(const Rat& v) {
  Int num = numerator(v);
  Int den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rat> parse_rat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int_token = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int_token(text)) return std::nullopt;
      return Rat(Int(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int_token(num) || !is_int_token(den)) return std::nullopt;
    Int d{std::string(den)};
    if (d == 0) return std::nullopt;
    return make_rat(Int{std::string(num)}, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a > 0) == (b > 0))) ++q;
  return q;
}

Int floor_sqrt(const Int& a) {
  if (a < 0) throw std::domain_error("floor_sqrt of negative value");
  if (a == 0) return 0;
  Int r = boost::multiprecision::sqrt(a);
  while (r * r > a) --r;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r;
}

}  // namespace gpss
