#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moplab {

// Exact rational with an allocation-free int64 path; promotes to GMP on overflow.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : n_(n) {}       // NOLINT(google-explicit-constructor)
  Rational(int n) : n_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    set_small128(static_cast<__int128>(n), static_cast<__int128>(d));
  }
  explicit Rational(const mpq_class& q) { set_big(q); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  static Rational parse(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
    q.canonicalize();
    return Rational(q);
  }

  bool is_small() const { return !big_; }
  bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), n_);
    mpz_set_si(q.get_den_mpz_t(), d_);
    return q;
  }
  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

  std::string str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  Rational operator-() const {
    Rational r;
    if (big_) {
      r.set_big(-*big_);
    } else if (n_ == INT64_MIN) {
      r.set_small128(-static_cast<__int128>(n_), d_);
    } else {
      r.n_ = -n_;
      r.d_ = d_;
    }
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.d_ == 1 && b.d_ == 1) {
        long long s;
        if (!__builtin_add_overflow(a.n_, b.n_, &s)) {
          r.n_ = s;
          return r;
        }
      }
      __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
      __int128 d = static_cast<__int128>(a.d_) * b.d_;
      r.set_small128(n, d);
      return r;
    }
    return Rational(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.d_ == 1 && b.d_ == 1) {
        long long s;
        if (!__builtin_sub_overflow(a.n_, b.n_, &s)) {
          r.n_ = s;
          return r;
        }
      }
      __int128 n = static_cast<__int128>(a.n_) * b.d_ - static_cast<__int128>(b.n_) * a.d_;
      __int128 d = static_cast<__int128>(a.d_) * b.d_;
      r.set_small128(n, d);
      return r;
    }
    return Rational(a.to_mpq() - b.to_mpq());
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.n_ == 0 || b.n_ == 0) return r;
      if (a.d_ == 1 && b.d_ == 1) {
        long long s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &s)) {
          r.n_ = s;
          return r;
        }
      }
      // cross-cancel first to keep the product small
      long long g1 = std::gcd(a.n_, b.d_);
      long long g2 = std::gcd(b.n_, a.d_);
      __int128 n = static_cast<__int128>(a.n_ / g1) * (b.n_ / g2);
      __int128 d = static_cast<__int128>(a.d_ / g2) * (b.d_ / g1);
      r.set_reduced128(n, d);
      return r;
    }
    return Rational(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.n_ == 0) return r;
      long long g1 = std::gcd(a.n_, b.n_);
      long long g2 = std::gcd(a.d_, b.d_);
      __int128 n = static_cast<__int128>(a.n_ / g1) * (b.d_ / g2);
      __int128 d = static_cast<__int128>(a.d_ / g2) * (b.n_ / g1);
      if (d < 0) {
        n = -n;
        d = -d;
      }
      r.set_reduced128(n, d);
      return r;
    }
    return Rational(a.to_mpq() / b.to_mpq());
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value that fits small is never stored big
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 l = static_cast<__int128>(a.n_) * b.d_;
      __int128 r = static_cast<__int128>(b.n_) * a.d_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  size_t hash() const {
    if (big_) return std::hash<std::string>()(big_->get_str());
    return std::hash<long long>()(n_) * 1000003u ^ std::hash<long long>()(d_);
  }

 private:
  long long n_ = 0;
  long long d_ = 1;
  std::unique_ptr<mpq_class> big_;

  static bool fits(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static void set_mpz128(mpz_t z, __int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_set_ui(z, static_cast<unsigned long>(u >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    if (neg) mpz_neg(z, z);
  }

  void set_small128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    set_reduced128(n, d);
  }

  void set_reduced128(__int128 n, __int128 d) {
    if (fits(n) && fits(d)) {
      big_.reset();
      n_ = static_cast<long long>(n);
      d_ = static_cast<long long>(d);
      return;
    }
    mpq_class q;
    set_mpz128(q.get_num_mpz_t(), n);
    set_mpz128(q.get_den_mpz_t(), d);
    big_ = std::make_unique<mpq_class>(std::move(q));
  }

  void set_big(const mpq_class& q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
      big_.reset();
      n_ = mpz_get_si(q.get_num_mpz_t());
      d_ = mpz_get_si(q.get_den_mpz_t());
      return;
    }
    big_ = std::make_unique<mpq_class>(q);
  }
};

inline Rational factorial(int n) {
  Rational r(1);
  for (int k = 2; k <= n; ++k) r *= Rational(k);
  return r;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

// Exact Gaussian rational re + i*im.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}        // NOLINT(google-explicit-constructor)
  GaussianRational(long long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ + b.re_);
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ - b.re_);
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    bool ar = a.im_.is_zero(), br = b.im_.is_zero();
    if (ar && br) return GaussianRational(a.re_ * b.re_);
    if (ar) return {a.re_ * b.re_, a.re_ * b.im_};
    if (br) return {a.re_ * b.re_, a.im_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
    Rational n = b.re_ * b.re_ + b.im_ * b.im_;
    GaussianRational t = a * b.conj();
    return {t.re_ / n, t.im_ / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

  // Plain-text form: "3/2", "-I", "(1/2+3*I)".
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string ims;
    if (im_ == Rational(1)) ims = "I";
    else if (im_ == Rational(-1)) ims = "-I";
    else ims = im_.str() + "*I";
    if (re_.is_zero()) return ims;
    std::string s = "(" + re_.str();
    if (ims[0] != '-') s += "+";
    return s + ims + ")";
  }

  size_t hash() const { return re_.hash() * 31u + im_.hash(); }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace moplab
