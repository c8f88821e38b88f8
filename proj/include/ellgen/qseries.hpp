#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ellgen/errors.hpp"
#include "ellgen/rational.hpp"
#include "ellgen/ring.hpp"
#include "ellgen/series.hpp"

namespace ellgen {

// Truncated Laurent series in s with s^2 = q. Exponents are in s-units, so
// q^{-k/2} is s^{-k}. Coefficients are known exactly through exponent order();
// exact series (constants built from scalars) carry order() == kExact.
template <CoefficientRing R>
class QSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  QSeries() = default;
  QSeries(const R& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  template <class T>
    requires(std::same_as<T, Rational> && !std::same_as<R, Rational>)
  QSeries(const T& c) : QSeries(R(c)) {}  // NOLINT(google-explicit-constructor)

  static QSeries zero(int order) {
    QSeries s;
    s.order_ = order;
    return s;
  }
  static QSeries monomial(int exponent, const R& c, int order) {
    return from_coefficients(exponent, {c}, order);
  }
  // Coefficients for exponents low, low+1, ...; entries beyond `order` are dropped.
  static QSeries from_coefficients(int low, std::vector<R> coeffs, int order) {
    QSeries s;
    s.order_ = order;
    s.low_ = low;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }
  // Embedding R[[q]] -> R((s)), q^j -> s^{2j}.
  static QSeries from_q_series(const Series<R>& in_q) {
    std::vector<R> coeffs;
    for (int j = 0; j <= in_q.cap(); ++j) {
      coeffs.push_back(in_q[j]);
      if (j < in_q.cap()) coeffs.push_back(ring_zero<R>());
    }
    return from_coefficients(0, std::move(coeffs), 2 * in_q.cap());
  }

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  // Lowest exponent with nonzero coefficient; order()+1 for a zero series.
  int valuation() const { return is_zero() ? sat_add(order_, 1) : low_; }
  int lowest_stored() const { return low_; }
  const std::vector<R>& stored() const { return coeffs_; }

  R coeff(int exponent) const {
    if (exponent > order_) {
      fail(ErrorCode::kStructural, "coefficient of s^" + std::to_string(exponent) + " beyond truncation order " + std::to_string(order_));
    }
    if (is_zero() || exponent < low_ || exponent >= low_ + static_cast<int>(coeffs_.size())) return ring_zero<R>();
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }
  // Coefficient of q^j (s^{2j}).
  R q_coeff(int j) const { return coeff(2 * j); }

  QSeries truncated(int order) const {
    QSeries s = *this;
    s.order_ = std::min(order_, order);
    s.normalize();
    return s;
  }
  // Multiply by s^k.
  QSeries shifted(int k) const {
    QSeries s = *this;
    s.low_ += k;
    if (!s.is_exact()) s.order_ += k;
    return s;
  }

  // Equality of all coefficients through exponent `up_to` (both must be known there).
  bool agrees_with(const QSeries& o, int up_to) const {
    if (up_to > order_ || up_to > o.order_) {
      fail(ErrorCode::kStructural, "comparison beyond known order");
    }
    const int from = std::min(is_zero() ? up_to + 1 : low_, o.is_zero() ? up_to + 1 : o.low_);
    for (int e = from; e <= up_to; ++e) {
      if (!(coeff(e) == o.coeff(e))) return false;
    }
    return true;
  }

  QSeries operator-() const {
    QSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }
  friend QSeries operator+(const QSeries& a, const QSeries& b) { return a.combine(b, false); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a.combine(b, true); }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int order = std::min(sat_add(a.order_, b.valuation()), sat_add(b.order_, a.valuation()));
    QSeries out;
    out.order_ = order;
    if (a.is_zero() || b.is_zero()) return out;
    out.low_ = a.low_ + b.low_;
    const long top = std::min<long>(static_cast<long>(order) - out.low_,
                                    static_cast<long>(a.coeffs_.size() + b.coeffs_.size()) - 2);
    if (top < 0) return out;
    out.coeffs_.assign(static_cast<std::size_t>(top) + 1, ring_zero<R>());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<long>(i + j) <= top; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.normalize();
    return out;
  }
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // s^v u -> s^{-v} u^{-1}; known through order - 2v.
  QSeries inverse() const {
    if (is_zero()) fail(ErrorCode::kNonUnit, "inverse of zero q-series");
    const R inv0 = coeffs_.front().inverse();  // throws kNonUnit
    if (is_exact()) {
      if (coeffs_.size() != 1) fail(ErrorCode::kStructural, "inverse of exact non-monomial q-series needs a truncation order");
      return from_coefficients(-low_, {inv0}, kExact);
    }
    const int relative = order_ - low_;
    std::vector<R> b(static_cast<std::size_t>(relative) + 1, ring_zero<R>());
    b[0] = inv0;
    for (int n = 1; n <= relative; ++n) {
      R acc = ring_zero<R>();
      for (int k = 1; k <= n && k < static_cast<int>(coeffs_.size()); ++k) {
        if (coeffs_[static_cast<std::size_t>(k)].is_zero()) continue;
        acc = acc + coeffs_[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
      }
      b[static_cast<std::size_t>(n)] = -(inv0 * acc);
    }
    return from_coefficients(-low_, std::move(b), order_ - 2 * low_);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[i].to_string() + ")";
      const int e = low_ + static_cast<int>(i);
      if (e != 0) out += "*s^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(s^" + std::to_string(order_ + 1) + ")";
    return out;
  }

 private:
  static int sat_add(int a, int b) {
    if (a == kExact || b == kExact) return kExact;
    const long s = static_cast<long>(a) + b;
    return s >= kExact ? kExact - 1 : static_cast<int>(s);
  }

  QSeries combine(const QSeries& b, bool subtract) const {
    const int order = std::min(order_, b.order_);
    if (is_zero() && b.is_zero()) return zero(order);
    const int low = is_zero() ? b.low_ : (b.is_zero() ? low_ : std::min(low_, b.low_));
    const int high_a = is_zero() ? low - 1 : low_ + static_cast<int>(coeffs_.size()) - 1;
    const int high_b = b.is_zero() ? low - 1 : b.low_ + static_cast<int>(b.coeffs_.size()) - 1;
    const int high = std::min(std::max(high_a, high_b), order);
    std::vector<R> coeffs;
    for (int e = low; e <= high; ++e) {
      R ca = (is_zero() || e < low_ || e > high_a) ? ring_zero<R>() : coeffs_[static_cast<std::size_t>(e - low_)];
      R cb = (b.is_zero() || e < b.low_ || e > high_b) ? ring_zero<R>() : b.coeffs_[static_cast<std::size_t>(e - b.low_)];
      coeffs.push_back(subtract ? ca - cb : ca + cb);
    }
    return from_coefficients(low, std::move(coeffs), order);
  }

  // Drop entries beyond order, strip leading/trailing zeros.
  void normalize() {
    if (!is_exact()) {
      const long keep = static_cast<long>(order_) - low_ + 1;
      if (keep <= 0) {
        coeffs_.clear();
      } else if (static_cast<long>(coeffs_.size()) > keep) {
        coeffs_.resize(static_cast<std::size_t>(keep));
      }
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      low_ += static_cast<int>(lead);
    }
  }

  int low_ = 0;
  std::vector<R> coeffs_;
  int order_ = kExact;
};

using QSeriesQ = QSeries<Rational>;
using QSeriesQi = QSeries<GaussianRational>;

}  // namespace ellgen
