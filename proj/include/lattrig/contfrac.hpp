#pragma once
/**
 * @file contfrac.hpp
 * @brief Regular, odd, even and signed continued fractions.
 */

#include "numbers.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lattrig {

/// Shortest regular expansion: last element >= 2 unless the value is an integer.
inline std::vector<Int> regular_cf(const Rat& x) {
  std::vector<Int> out;
  Int p = num(x), q = den(x);
  while (q != 0) {
    Int a = floor_div(p, q);
    out.push_back(a);
    Int r = p - a * q;
    p = q;
    q = r;
  }
  return out;
}

/// Odd-length expansion [a0; ...; a2n].
inline std::vector<Int> to_odd_cf(const Rat& x) {
  auto cf = regular_cf(x);
  if (cf.size() % 2 == 0) {
    cf.back() -= 1;
    cf.push_back(1);
  }
  return cf;
}

/// Even-length expansion [a0; ...; a2n+1].
inline std::vector<Int> to_even_cf(const Rat& x) {
  auto cf = regular_cf(x);
  if (cf.size() % 2 == 1) {
    cf.back() -= 1;
    cf.push_back(1);
  }
  return cf;
}

/// ]a0, ..., an[ evaluated right to left in Q ∪ {∞}.
inline ExtRat eval_signed(std::span<const Int> a) {
  if (a.empty()) throw std::invalid_argument("empty sequence");
  ExtRat v(a.back());
  for (size_t i = a.size() - 1; i-- > 0;) v = ExtRat(a[i]) + v.recip();
  return v;
}

inline ExtRat eval_signed(std::initializer_list<Int> a) {
  std::vector<Int> v(a);
  return eval_signed(std::span<const Int>(v));
}

/// ]q1, ..., qn[: concatenation of the odd expansions of the q_i, then evaluated.
inline ExtRat concat_rationals(std::span<const Rat> qs) {
  std::vector<Int> seq;
  for (const Rat& q : qs) {
    auto cf = to_odd_cf(q);
    seq.insert(seq.end(), cf.begin(), cf.end());
  }
  return eval_signed(seq);
}

inline ExtRat concat_rationals(std::initializer_list<Rat> qs) {
  std::vector<Rat> v(qs);
  return concat_rationals(std::span<const Rat>(v));
}

/// Convergents (p_k, q_k) of [a0; ...; an].
inline std::vector<std::pair<Int, Int>> convergents(std::span<const Int> a) {
  std::vector<std::pair<Int, Int>> out;
  Int p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (const Int& ak : a) {
    Int pn = ak * p_prev + p;
    Int qn = ak * q_prev + q;
    p = p_prev;
    q = q_prev;
    p_prev = pn;
    q_prev = qn;
    out.emplace_back(pn, qn);
  }
  return out;
}

inline std::vector<std::pair<Int, Int>> convergents(std::initializer_list<Int> a) {
  std::vector<Int> v(a);
  return convergents(std::span<const Int>(v));
}

/// Eventually periodic expansion pre, period, period, ...
struct PeriodicCF {
  std::vector<Int> pre;
  std::vector<Int> period;

  PeriodicCF() = default;
  PeriodicCF(std::vector<Int> pre_, std::vector<Int> period_) : pre(std::move(pre_)), period(std::move(period_)) {
    if (period.empty()) throw std::invalid_argument("empty period");
  }

  const Int& at(size_t i) const {
    if (i < pre.size()) return pre[i];
    return period[(i - pre.size()) % period.size()];
  }

  std::vector<Int> take(size_t n) const {
    std::vector<Int> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
  }

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

/// Checks the expansion is a regular one: elements after the first are positive.
inline void validate_regular(const PeriodicCF& cf) {
  for (size_t i = 1; i < cf.pre.size() + cf.period.size(); ++i)
    if (cf.at(i) < 1) throw std::domain_error("non-positive partial quotient");
}

/// Shortest period and shortest preperiod describing the same sequence.
inline PeriodicCF canonical(PeriodicCF cf) {
  size_t n = cf.period.size();
  for (size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = cf.period[i] == cf.period[i - d];
    if (ok) {
      cf.period.resize(d);
      break;
    }
  }
  while (!cf.pre.empty() && cf.pre.back() == cf.period.back()) {
    cf.pre.pop_back();
    std::rotate(cf.period.rbegin(), cf.period.rbegin() + 1, cf.period.rend());
  }
  return cf;
}

/// The depth-th convergent, i.e. [a0; ...; a_{depth-1}].
inline Rat periodic_eval(const PeriodicCF& cf, size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be positive");
  validate_regular(cf);
  auto c = convergents(cf.take(depth)).back();
  return Rat(c.first) / Rat(c.second);
}

}  // namespace lattrig
