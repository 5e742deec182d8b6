#include "solvlie/field.hpp"

#include <charconv>
#include <sstream>

namespace solvlie {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::gf(std::int64_t p) {
  if (!is_prime(p)) fail("not_prime", "GF(p) requires a prime modulus, got " + std::to_string(p));
  FieldDescriptor f;
  f.p_ = p;
  return f;
}

std::string FieldDescriptor::to_string() const {
  return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, a in [1,p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

std::int64_t big_mod(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  auto s = r.convert_to<std::int64_t>();
  return s < 0 ? s + p : s;
}

}  // namespace

Scalar Scalar::zero(const FieldDescriptor& f) { return of_int(f, 0); }

Scalar Scalar::one(const FieldDescriptor& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldDescriptor& f, std::int64_t value) {
  Scalar s;
  s.p_ = f.p();
  if (s.p_ > 0)
    s.res_ = mod_reduce(value, s.p_);
  else
    s.rat_ = value;
  return s;
}

Scalar Scalar::of_rat(BigRat value) {
  Scalar s;
  s.rat_ = std::move(value);
  return s;
}

Scalar Scalar::parse(const FieldDescriptor& f, std::string_view text) {
  auto bad = [&]() {
    fail("parse_error", "malformed scalar '" + std::string(text) + "'");
  };

  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto parse_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) bad();
    std::size_t i = 0;
    bool neg = false;
    if (part[0] == '+' || part[0] == '-') {
      neg = part[0] == '-';
      i = 1;
      if (i == part.size()) bad();
    }
    BigInt value = 0;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') bad();
      value = value * 10 + (part[i] - '0');
    }
    return neg ? -value : value;
  };

  BigInt n = parse_int(num);
  BigInt d = den.data() == nullptr ? BigInt(1) : parse_int(den);
  if (d == 0) fail("parse_error", "zero denominator in scalar '" + std::string(text) + "'");

  if (f.is_rationals()) return of_rat(BigRat(n, d));

  std::int64_t p = f.p();
  std::int64_t dn = big_mod(d, p);
  if (dn == 0)
    fail("parse_error", "denominator of '" + std::string(text) + "' is not invertible mod " + std::to_string(p));
  Scalar s;
  s.p_ = p;
  s.res_ = mod_reduce(big_mod(n, p) * mod_inverse(dn, p), p);
  return s;
}

FieldDescriptor Scalar::field() const {
  return p_ == 0 ? FieldDescriptor::rationals() : FieldDescriptor::gf(p_);
}

bool Scalar::is_zero() const { return p_ > 0 ? res_ == 0 : rat_ == 0; }

bool Scalar::is_one() const { return p_ > 0 ? res_ == 1 : rat_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) fail("field_mismatch", "scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.res_ = mod_reduce(res_ + o.res_, p_);
  else
    s.rat_ = rat_ + o.rat_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.res_ = mod_reduce(res_ - o.res_, p_);
  else
    s.rat_ = rat_ - o.rat_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.res_ = mod_reduce(res_ * o.res_, p_);
  else
    s.rat_ = rat_ * o.rat_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail("division_by_zero", "inverse of zero");
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.res_ = mod_inverse(res_, p_);
  else
    s.rat_ = 1 / rat_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.res_ = mod_reduce(-res_, p_);
  else
    s.rat_ = -rat_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  return p_ == o.p_ && (p_ > 0 ? res_ == o.res_ : rat_ == o.rat_);
}

bool Scalar::less(const Scalar& o) const {
  check_same_field(o);
  return p_ > 0 ? res_ < o.res_ : rat_ < o.rat_;
}

std::string Scalar::to_string() const {
  if (p_ > 0) return std::to_string(res_);
  std::ostringstream out;
  out << numerator(rat_);
  if (denominator(rat_) != 1) out << "/" << denominator(rat_);
  return out.str();
}

std::int64_t Scalar::residue() const {
  if (p_ == 0) fail("field_mismatch", "residue() on a rational scalar");
  return res_;
}

const BigRat& Scalar::rat() const {
  if (p_ != 0) fail("field_mismatch", "rat() on a prime-field scalar");
  return rat_;
}

Vec vec_zero(const FieldDescriptor& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec unit_vector(const FieldDescriptor& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail("ambient_mismatch", "vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail("ambient_mismatch", "vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool vec_lex_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].less(b[i])) return true;
    if (b[i].less(a[i])) return false;
  }
  return false;
}

std::string vec_to_string(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out;
}

Vec parse_vector(const FieldDescriptor& f, std::size_t n, std::string_view text) {
  Vec v;
  std::size_t start = 0;
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view part = comma == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, comma - start);
    v.push_back(Scalar::parse(f, strip(part)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != n)
    fail("parse_error", "expected " + std::to_string(n) + " coordinates in '" +
                            std::string(text) + "', got " + std::to_string(v.size()));
  return v;
}

}  // namespace solvlie
