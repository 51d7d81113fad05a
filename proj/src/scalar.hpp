#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "errors.hpp"

namespace mhd {

// p == 0 means the rationals, otherwise the prime field F_p
struct Field {
  std::uint64_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t q);

  bool operator==(const Field&) const = default;
  std::string str() const;
};

class Scalar {
 public:
  Scalar(const Field& f, std::int64_t n);
  Scalar(const Field& f, const mpq_class& q);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  // parses "a", "-a" or "a/b"
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(std::int64_t e) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Field f_;
  std::uint64_t r_ = 0;  // residue when f_.p != 0
  mpq_class q_;          // value when f_.p == 0
};

// [n]_q, [n]_q!, and the Gaussian binomial via the q-Pascal recursion
Scalar qint(const Scalar& q, std::int64_t n);
Scalar qfact(const Scalar& q, std::int64_t n);
Scalar qbinom(const Scalar& q, std::int64_t n, std::int64_t k);

// smallest element of exact multiplicative order m, scanning the canonical
// enumeration of the field (rationals only reach m = 1, 2)
Scalar find_root_of_unity(const Field& f, std::int64_t m);

}  // namespace mhd
