#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "solvlie/error.hpp"

namespace solvlie {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

/// Which exact field scalars live in: GF(p) for a prime p, or Q.
class FieldDescriptor {
 public:
  FieldDescriptor() = default;  // rationals

  static FieldDescriptor gf(std::int64_t p);
  static FieldDescriptor rationals() { return FieldDescriptor(); }

  bool is_prime_field() const { return p_ != 0; }
  bool is_rationals() const { return p_ == 0; }

  /// Prime modulus, 0 for Q.
  std::int64_t p() const { return p_; }
  std::int64_t characteristic() const { return p_; }

  bool operator==(const FieldDescriptor&) const = default;

  std::string to_string() const;

 private:
  std::int64_t p_ = 0;
};

/// Exact field element: residue in [0,p) over GF(p), reduced fraction over Q.
/// Values carry their field; mixing fields in one operation throws.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldDescriptor& f);
  static Scalar one(const FieldDescriptor& f);
  static Scalar of_int(const FieldDescriptor& f, std::int64_t value);
  static Scalar of_rat(BigRat value);

  /// Accepts "7", "-2", "1/3", "-4/6" (reduced on construction).
  /// Over GF(p) a fraction is resolved by modular inversion of the
  /// denominator. Throws parse_error on malformed input or zero
  /// denominator.
  static Scalar parse(const FieldDescriptor& f, std::string_view text);

  FieldDescriptor field() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order within one field; used for the deterministic
  /// lexicographic ordering of vectors and subspaces. Residues compare
  /// as integers in [0,p), rationals by value.
  bool less(const Scalar& o) const;

  std::string to_string() const;

  /// Residue in [0,p); prime fields only.
  std::int64_t residue() const;
  /// Underlying fraction; rationals only.
  const BigRat& rat() const;

 private:
  std::int64_t p_ = 0;   // 0 means Q
  std::int64_t res_ = 0; // residue when p_ > 0
  BigRat rat_;           // value when p_ == 0

  void check_same_field(const Scalar& o) const;
};

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldDescriptor& f, std::size_t n);
Vec unit_vector(const FieldDescriptor& f, std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scaled(const Vec& a, const Scalar& c);
bool vec_eq(const Vec& a, const Vec& b);
bool vec_lex_less(const Vec& a, const Vec& b);

/// "1,0,2" with Scalar::to_string entries.
std::string vec_to_string(const Vec& v);
/// Parses "a,b,c"; requires exactly n entries.
Vec parse_vector(const FieldDescriptor& f, std::size_t n, std::string_view text);

}  // namespace solvlie
