#pragma once

// Exact scalars over Q and the cyclotomic fields Q(zeta_n).
//
// A cyclotomic element is stored as the unique polynomial in z = zeta_n of
// degree < phi(n) with reduced rational coefficients and no trailing zeros, so
// two scalars are equal iff their coefficient vectors are identical.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhc/error.hpp"

namespace bhc {

namespace detail {
struct FieldData;
}

class Field {
 public:
  Field();  // the rationals

  static Field rational();
  static Field cyclotomic(unsigned n);
  // Accepts "rational", "Q", "cyclotomic(n)" and "cyclotomic:n".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept;
  // n for cyclotomic(n), 1 for the rationals.
  unsigned order() const noexcept;
  // Dimension over Q: phi(n), or 1.
  unsigned degree() const noexcept;
  // Coefficients of Phi_n, lowest degree first; monic.
  const std::vector<mpz_class>& modulus() const noexcept;
  bool contains_root_of_unity(unsigned m) const noexcept;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.data_ != b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  // zeta_m^k; requires f.contains_root_of_unity(m).
  static Scalar root_of_unity(Field f, unsigned m, long k);
  static Scalar parse(Field f, std::string_view literal);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  // Coefficients of 1, z, z^2, ... (trailing zeros removed).
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  std::optional<mpq_class> as_rational() const;

  Scalar inv() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other) { return *this *= other.inv(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;
  void trim();

  Field field_;
  std::vector<mpq_class> coeffs_;
};

Scalar embed_rational(const mpq_class& q, Field f);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bhc
