#pragma once
/**
 * @file numbers.hpp
 * @brief Exact integers, rationals and the extended rationals Q ∪ {∞}.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace lattrig {

using Int = boost::multiprecision::cpp_int;
/// Always normalized, denominator positive.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }
inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Floor division, c != 0.
inline Int floor_div(const Int& a, const Int& c) {
  if (c == 0) throw std::domain_error("division by zero");
  Int q = a / c;
  Int r = a % c;
  if (r != 0 && ((r < 0) != (c < 0))) --q;
  return q;
}

/// Remainder in [0, |c|).
inline Int floor_mod(const Int& a, const Int& c) {
  Int r = a % c;
  if (r < 0) r += abs_int(c);
  return r;
}

inline Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(abs_int(a), abs_int(b)); }

/// Extended Euclid: returns (g, u, v) with a*u + b*v = g = gcd(a, b) >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

/// gcd and lcm of a nonempty list. gcd(0, x) = |x|; lcm rejects zero operands.
inline std::pair<Int, Int> gcd_lcm(std::span<const Int> xs) {
  if (xs.empty()) throw std::invalid_argument("empty operand list");
  Int g = 0, l = 1;
  bool zero = false;
  for (const Int& x : xs) {
    g = gcd(g, x);
    if (x == 0) {
      zero = true;
      continue;
    }
    l = abs_int(l * x) / gcd(l, x);
  }
  if (zero) throw std::domain_error("zero operand");
  return {g, l};
}

inline std::pair<Int, Int> gcd_lcm(std::initializer_list<Int> xs) {
  std::vector<Int> v(xs);
  return gcd_lcm(std::span<const Int>(v));
}

/// The a in [1, c] with a*b = 1 (mod c). c = 1 gives 1.
inline Int mod_inverse(const Int& b, const Int& c) {
  if (c < 1) throw std::domain_error("modulus must be positive");
  if (c == 1) return 1;
  auto [g, u, v] = ext_gcd(floor_mod(b, c), c);
  if (g != 1) throw std::domain_error("not invertible");
  Int a = floor_mod(u, c);
  return a == 0 ? c : a;
}

/// Element of Q ∪ {∞}; the single ∞ is unsigned.
class ExtRat {
 public:
  ExtRat() : v_(Rat(0)) {}
  ExtRat(const Rat& q) : v_(q) {}
  ExtRat(const Int& n) : v_(Rat(n)) {}
  ExtRat(long long n) : v_(Rat(n)) {}
  static ExtRat infinity() {
    ExtRat e;
    e.v_.reset();
    return e;
  }

  bool is_inf() const { return !v_.has_value(); }
  const Rat& value() const {
    if (!v_) throw std::domain_error("infinite value has no rational part");
    return *v_;
  }

  /// 1/0 = ∞ and 1/∞ = 0.
  ExtRat recip() const {
    if (is_inf()) return ExtRat(Rat(0));
    if (*v_ == 0) return infinity();
    return ExtRat(Rat(1) / *v_);
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.is_inf() && b.is_inf()) throw std::domain_error("undefined extended sum");
    if (a.is_inf() || b.is_inf()) return infinity();
    return ExtRat(*a.v_ + *b.v_);
  }
  friend ExtRat operator-(const ExtRat& a) { return a.is_inf() ? a : ExtRat(Rat(-*a.v_)); }

  friend bool operator==(const ExtRat& a, const ExtRat& b) { return a.v_ == b.v_; }
  /// ∞ is greater than every finite value.
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.is_inf()) return false;
    if (b.is_inf()) return true;
    return *a.v_ < *b.v_;
  }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }

 private:
  std::optional<Rat> v_;
};

inline std::string to_string(const Int& n) { return n.str(); }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline std::string to_string(const ExtRat& e) { return e.is_inf() ? std::string("inf") : to_string(e.value()); }

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}
}  // namespace detail

inline Int parse_int(std::string_view s) {
  s = detail::trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  for (char ch : digits)
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

inline Rat parse_rat(std::string_view s) {
  s = detail::trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  return Rat(p) / Rat(q);
}

inline ExtRat parse_extrat(std::string_view s) {
  if (detail::trim(s) == "inf") return ExtRat::infinity();
  return ExtRat(parse_rat(s));
}

/// Splits on `sep`; an all-blank input gives an empty list.
inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (detail::trim(s).empty()) return out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<Int> parse_int_list(std::string_view s, char sep = ',') {
  std::vector<Int> out;
  for (auto part : split(s, sep)) out.push_back(parse_int(part));
  return out;
}

inline std::vector<Rat> parse_rat_list(std::string_view s, char sep = ';') {
  std::vector<Rat> out;
  for (auto part : split(s, sep)) out.push_back(parse_rat(part));
  return out;
}

inline std::string join(std::span<const Int> xs, std::string_view sep = ",") {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].str();
  }
  return out;
}

}  // namespace lattrig
