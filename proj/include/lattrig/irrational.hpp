#pragma once
/**
 * @file irrational.hpp
 * @brief Lattice angles with quadratic irrational slopes: infinite sequences, normal forms and sums.
 */

#include "angles.hpp"
#include "expanded.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lattrig {

enum class Side { R, L, LR };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::R: return "R";
    case Side::L: return "L";
    case Side::LR: return "LR";
  }
  return "";
}

/// Signed LLS infinite to the right, left or both.
/// R reads prefix, tail_r...; L reads ...tail_l reversed, prefix; LR reads ...tail_l reversed, prefix, tail_r...
/// tail_l is stored outward, so tail_l[0] is adjacent to the prefix.
struct InfiniteLLS {
  Side side = Side::R;
  std::vector<Int> prefix;
  std::optional<PeriodicCF> tail_r;
  std::optional<PeriodicCF> tail_l;

  void validate() const {
    bool need_r = side != Side::L, need_l = side != Side::R;
    if (need_r != tail_r.has_value() || need_l != tail_l.has_value())
      throw std::invalid_argument("tails do not match the side");
    for (const auto& t : {tail_r, tail_l})
      if (t)
        for (size_t i = 0; i < t->pre.size() + t->period.size(); ++i)
          if (t->at(i) < 1) throw std::domain_error("tail elements must be positive");
    for (const Int& x : prefix)
      if (x == 0) throw std::domain_error("zero element in prefix");
    size_t want = side == Side::LR ? 1 : 0;
    if (prefix.size() % 2 != want)
      throw std::domain_error(side == Side::LR ? "LR prefix length must be odd" : "prefix length must be even");
  }

  bool positive() const {
    return std::all_of(prefix.begin(), prefix.end(), [](const Int& x) { return x > 0; });
  }

  /// Element i, counted from the start of the prefix; negative i reaches into the left tail.
  Int at(std::ptrdiff_t i) const {
    auto m = static_cast<std::ptrdiff_t>(prefix.size());
    if (i >= 0 && i < m) return prefix[static_cast<size_t>(i)];
    if (i >= m) {
      if (!tail_r) throw std::out_of_range("no right tail");
      return tail_r->at(static_cast<size_t>(i - m));
    }
    if (!tail_l) throw std::out_of_range("no left tail");
    return tail_l->at(static_cast<size_t>(-i - 1));
  }

  friend bool operator==(const InfiniteLLS&, const InfiniteLLS&) = default;
};

/// kπ + arctan([tail]) on side R, or kπ + arctanᵗ([tail]) on side L.
struct IrrationalNormalForm {
  Int k = 0;
  PeriodicCF tail;
  Side side = Side::R;

  friend bool operator==(const IrrationalNormalForm&, const IrrationalNormalForm&) = default;
};

/// Sail LLS of arctan([cf]), which is cf itself.
inline InfiniteLLS irr_arctan(const PeriodicCF& cf) {
  InfiniteLLS s{Side::R, {}, cf, std::nullopt};
  s.validate();
  return s;
}

/// Sail vertices V0 = (1,0), V1, ..., Vn of arctan([cf]) with 2n - 1 <= depth.
inline std::vector<LPoint> irr_sail_vertices(const PeriodicCF& cf, size_t depth) {
  validate_regular(cf);
  auto conv = convergents(cf.take(depth));
  std::vector<LPoint> out{{1, 0}};
  for (size_t i = 0; i < conv.size(); i += 2) out.push_back({conv[i].second, conv[i].first});
  return out;
}

/// Value of the first `depth` elements of an R sequence.
inline ExtRat irr_tangent(const InfiniteLLS& s, size_t depth) {
  if (s.side != Side::R) throw std::domain_error("tangent is defined for R sequences");
  std::vector<Int> v;
  for (size_t i = 0; i < depth; ++i) v.push_back(s.at(static_cast<std::ptrdiff_t>(i)));
  return eval_signed(v);
}

/// The characteristic sequence of a normal form.
inline InfiniteLLS irr_characteristic(const IrrationalNormalForm& n) {
  std::vector<Int> block;
  int s = n.k < 0 ? -1 : 1;
  for (Int i = 0; i < abs_int(n.k); ++i) block.insert(block.end(), {Int(s), Int(-2 * s), Int(s), Int(-2 * s)});
  if (n.side == Side::R) return {Side::R, block, n.tail, std::nullopt};
  if (n.side == Side::L) {
    std::reverse(block.begin(), block.end());
    return {Side::L, block, std::nullopt, n.tail};
  }
  throw std::domain_error("no normal form on side LR");
}

namespace detail {

/// Normal form of prefix ++ tail[0..n), as k and the odd expansion of the tangent.
inline std::pair<Int, std::vector<Int>> truncated_form(std::span<const Int> prefix, const PeriodicCF& tail, size_t n) {
  std::vector<Int> seq(prefix.begin(), prefix.end());
  auto t = tail.take(n);
  seq.insert(seq.end(), t.begin(), t.end());
  NormalForm nf = normalize(seq);
  if (nf.phi_tan == 0) return {nf.k, {}};
  return {nf.k, to_odd_cf(nf.phi_tan)};
}

/// tail[s..] as a periodic expansion.
inline PeriodicCF suffix(const PeriodicCF& x, size_t s) {
  if (s < x.pre.size()) return PeriodicCF(std::vector<Int>(x.pre.begin() + static_cast<std::ptrdiff_t>(s), x.pre.end()), x.period);
  std::vector<Int> p = x.period;
  std::rotate(p.begin(), p.begin() + static_cast<std::ptrdiff_t>((s - x.pre.size()) % p.size()), p.end());
  return PeriodicCF({}, std::move(p));
}

inline IrrationalNormalForm normalize_right(std::span<const Int> prefix, const PeriodicCF& x) {
  size_t pre = x.pre.size(), per = x.period.size();
  size_t need = pre + 2 * per + 2;
  for (size_t n = pre + 4 * per + 2 * prefix.size() + 9; n < (size_t{1} << 14); n *= 2) {
    n |= 1;
    auto [k1, c1] = truncated_form(prefix, x, n);
    auto [k2, c2] = truncated_form(prefix, x, n + 2 * per);
    if (k1 != k2) continue;
    size_t cp = 0;
    while (cp < c1.size() && cp < c2.size() && c1[cp] == c2[cp]) ++cp;
    for (size_t h = 0; h + need <= cp; ++h) {
      for (size_t s = h % 2; s < pre + 2 * per; s += 2) {
        bool ok = true;
        for (size_t j = 0; h + j < cp && ok; ++j) ok = c1[h + j] == x.at(s + j);
        if (!ok) continue;
        PeriodicCF rest = suffix(x, s);
        std::vector<Int> head(c1.begin(), c1.begin() + static_cast<std::ptrdiff_t>(h));
        head.insert(head.end(), rest.pre.begin(), rest.pre.end());
        IrrationalNormalForm out{k1, canonical(PeriodicCF(std::move(head), rest.period)), Side::R};
        auto [k3, c3] = truncated_form(prefix, x, 2 * n + 1);
        bool stable = k3 == k1 && c3.size() > 3;
        for (size_t j = 0; stable && j + 3 < c3.size(); ++j) stable = c3[j] == out.tail.at(j);
        if (stable) return out;
      }
    }
  }
  throw std::logic_error("normal form did not stabilize");
}

}  // namespace detail

/// Normal form of an almost-positive R or L sequence.
inline IrrationalNormalForm irr_normalize(const InfiniteLLS& s) {
  s.validate();
  if (s.side == Side::R) return detail::normalize_right(s.prefix, *s.tail_r);
  if (s.side == Side::L) {
    std::vector<Int> rev(s.prefix.rbegin(), s.prefix.rend());
    IrrationalNormalForm n = detail::normalize_right(rev, *s.tail_l);
    n.side = Side::L;
    return n;
  }
  throw std::domain_error("no normal form on side LR");
}

namespace detail {

inline bool lr_equal_shifted(const InfiniteLLS& a, const InfiniteLLS& b, std::ptrdiff_t shift) {
  auto span = [](const InfiniteLLS& s) {
    size_t l = s.tail_l->pre.size() + 2 * s.tail_l->period.size();
    size_t r = s.tail_r->pre.size() + 2 * s.tail_r->period.size();
    return static_cast<std::ptrdiff_t>(l * s.tail_r->period.size() + r * s.tail_l->period.size() + s.prefix.size());
  };
  std::ptrdiff_t w = span(a) + span(b) + std::abs(shift) + 2;
  for (std::ptrdiff_t i = -w; i <= w; ++i)
    if (a.at(i) != b.at(i + shift)) return false;
  return true;
}

}  // namespace detail

/// Lattice congruence on matching sides; signed LR sequences are undecided.
inline bool irr_congruent(const InfiniteLLS& a, const InfiniteLLS& b) {
  a.validate();
  b.validate();
  if (a.side != b.side) throw std::domain_error("sides differ");
  if (a.side != Side::LR) return irr_normalize(a) == irr_normalize(b);
  if (!a.positive() || !b.positive()) throw std::domain_error("undecided");
  auto reach = [](const InfiniteLLS& s) {
    return s.prefix.size() + s.tail_l->pre.size() + s.tail_r->pre.size() + 2 * std::lcm(s.tail_l->period.size(), s.tail_r->period.size());
  };
  auto bound = static_cast<std::ptrdiff_t>(reach(a) + reach(b) + 2);
  for (std::ptrdiff_t d = -bound; d <= bound; d += 2)
    if (detail::lr_equal_shifted(a, b, d)) return true;
  return false;
}

struct IrrationalSum {
  InfiniteLLS sequence;
  std::optional<IrrationalNormalForm> normal;
};

/// M_R, M_L or M_LR sum; the separator count is one less than the number of summands.
inline IrrationalSum irr_sum(const std::optional<IrrationalNormalForm>& left, std::span<const NormalForm> middles,
                             const std::optional<IrrationalNormalForm>& right, std::span<const Int> seps) {
  if (!left && !right) throw std::invalid_argument("an irrational summand is required");
  if (left && left->side != Side::L) throw std::invalid_argument("left summand must be an L form");
  if (right && right->side != Side::R) throw std::invalid_argument("right summand must be an R form");
  size_t summands = middles.size() + (left ? 1 : 0) + (right ? 1 : 0);
  if (seps.size() + 1 != summands) throw std::invalid_argument("separator count must be one less than the summand count");

  std::vector<Int> seq;
  size_t next = 0;
  bool started = left.has_value();
  if (left) {
    auto c = irr_characteristic(*left).prefix;
    seq.insert(seq.end(), c.begin(), c.end());
  }
  for (const auto& m : middles) {
    auto c = characteristic(m);
    if (c.empty()) throw std::domain_error("empty characteristic sequence");
    if (started) seq.push_back(seps[next++]);
    started = true;
    seq.insert(seq.end(), c.begin(), c.end());
  }
  if (right) {
    if (started) seq.push_back(seps[next++]);
    auto c = irr_characteristic(*right).prefix;
    seq.insert(seq.end(), c.begin(), c.end());
  }

  IrrationalSum out;
  if (left && right) {
    out.sequence = {Side::LR, seq, right->tail, left->tail};
  } else if (right) {
    out.sequence = {Side::R, seq, right->tail, std::nullopt};
  } else {
    out.sequence = {Side::L, seq, std::nullopt, left->tail};
  }
  out.sequence.validate();
  if (out.sequence.side != Side::LR) out.normal = irr_normalize(out.sequence);
  return out;
}

}  // namespace lattrig
