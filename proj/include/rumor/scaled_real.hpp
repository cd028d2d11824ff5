#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rumor {

// Nonnegative real stored as mantissa * 2^scale with mantissa in [1,2); zero is
// encoded as (0, 0). Keeps long products of rate ratios out of double
// under/overflow: the unnormalized QSD weights at N = 200 span hundreds of
// orders of magnitude. Addition and multiplication are closed and monotone.
class ScaledReal {
 public:
  ScaledReal() = default;

  explicit ScaledReal(double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::domain_error("ScaledReal: value must be finite and >= 0");
    if (v != 0.0) {
      int k = 0;
      m_ = 2.0 * std::frexp(v, &k);
      e_ = k - 1;
    }
  }

  static ScaledReal from_ln(double l) {
    if (l == -std::numeric_limits<double>::infinity()) return {};
    if (!std::isfinite(l)) throw std::domain_error("ScaledReal::from_ln: non-finite log");
    double e = std::floor(l / ln2());
    ScaledReal r;
    r.m_ = std::exp(l - e * ln2());
    r.e_ = static_cast<long long>(e);
    r.normalize();
    return r;
  }

  bool zero() const { return m_ == 0.0; }
  double mantissa() const { return m_; }
  long long scale() const { return e_; }

  // Saturates to 0 / HUGE_VAL outside double range.
  double to_double() const {
    if (zero()) return 0.0;
    if (e_ > 1024) return HUGE_VAL;
    if (e_ < -1100) return 0.0;
    return std::ldexp(m_, static_cast<int>(e_));
  }

  double ln() const {
    if (zero()) return -std::numeric_limits<double>::infinity();
    return std::log(m_) + static_cast<double>(e_) * ln2();
  }

  double log10() const {
    if (zero()) return -std::numeric_limits<double>::infinity();
    return std::log10(m_) + static_cast<double>(e_) * log10_2();
  }

  ScaledReal& operator+=(const ScaledReal& o) {
    if (o.zero()) return *this;
    if (zero()) return *this = o;
    if (o.e_ > e_ || (o.e_ == e_ && o.m_ > m_)) {
      ScaledReal t = o;
      t += *this;
      return *this = t;
    }
    long long d = e_ - o.e_;
    if (d < 128) {
      m_ += std::ldexp(o.m_, static_cast<int>(-d));
      normalize();
    }
    return *this;
  }

  ScaledReal& operator*=(const ScaledReal& o) {
    if (zero() || o.zero()) return *this = ScaledReal();
    m_ *= o.m_;
    e_ += o.e_;
    normalize();
    return *this;
  }

  ScaledReal& operator/=(const ScaledReal& o) {
    if (o.zero()) throw std::domain_error("ScaledReal: division by zero");
    if (zero()) return *this;
    m_ /= o.m_;
    e_ -= o.e_;
    normalize();
    return *this;
  }

  // Exact multiplication by 2^k.
  ScaledReal& mul_pow2(long long k) {
    if (!zero()) e_ += k;
    return *this;
  }

  friend ScaledReal operator+(ScaledReal a, const ScaledReal& b) { return a += b; }
  friend ScaledReal operator*(ScaledReal a, const ScaledReal& b) { return a *= b; }
  friend ScaledReal operator/(ScaledReal a, const ScaledReal& b) { return a /= b; }

  friend bool operator==(const ScaledReal& a, const ScaledReal& b) {
    return a.m_ == b.m_ && a.e_ == b.e_;
  }
  friend bool operator<(const ScaledReal& a, const ScaledReal& b) {
    if (a.zero()) return !b.zero();
    if (b.zero()) return false;
    if (a.e_ != b.e_) return a.e_ < b.e_;
    return a.m_ < b.m_;
  }
  friend bool operator>(const ScaledReal& a, const ScaledReal& b) { return b < a; }
  friend bool operator<=(const ScaledReal& a, const ScaledReal& b) { return !(b < a); }
  friend bool operator>=(const ScaledReal& a, const ScaledReal& b) { return !(a < b); }

 private:
  static constexpr double ln2() { return 0.69314718055994530942; }
  static constexpr double log10_2() { return 0.30102999566398119521; }

  void normalize() {
    if (m_ == 0.0) {
      e_ = 0;
      return;
    }
    int k = 0;
    m_ = 2.0 * std::frexp(m_, &k);
    e_ += k - 1;
  }

  double m_ = 0.0;
  long long e_ = 0;
};

}  // namespace rumor
