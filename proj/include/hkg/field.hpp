#pragma once

// Exact fields for the trivector code: the rationals and F_p.

#include "hkg/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkg {

class RationalField {
 public:
  using Elem = Rational;
  static constexpr bool is_finite = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  bool is_zero(const Elem& a) const { return a == 0; }

  /// Uniform in [-9, 9].
  template <class Rng>
  Elem random(Rng& rng) const {
    return Elem(static_cast<long long>(rng() % 19) - 9);
  }

  std::string name() const { return "Q"; }
  std::string format(const Elem& a) const { return hkg::to_string(a); }
  Elem parse(const std::string& s) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool is_finite = true;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);
  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }

  template <class Rng>
  Elem random(Rng& rng) const {
    return static_cast<Elem>(rng() % p_);
  }

  std::string name() const { return "Fp " + std::to_string(p_); }
  std::string format(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace hkg
