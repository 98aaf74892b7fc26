#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "cnkit/error.hpp"

namespace cnkit {

enum class FieldKind { Rationals, PrimeField };

/// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Identifies the field a value lives in: the rationals, or F_p for a
/// word-sized prime p. Every FieldValue carries its spec and binary
/// operations reject mixed-field operands.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

  /// Requires p prime (checked) and p < 2^63 so sums of residues cannot
  /// overflow an unsigned word.
  static FieldSpec prime_field(std::uint64_t p);

  /// Parses a field selection string: "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }

  /// Only meaningful for PrimeField specs.
  std::uint64_t modulus() const { return modulus_; }

  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  FieldSpec(FieldKind kind, std::uint64_t modulus)
      : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

/// An immutable exact scalar: a canonical rational (reduced, positive
/// denominator, zero stored as 0/1) or a residue in [0, p).
class FieldValue {
public:
  /// Rational zero. Prefer the named constructors below.
  FieldValue() : spec_(FieldSpec::rationals()), payload_(mpq_class(0)) {}

  static FieldValue zero(const FieldSpec& spec);
  static FieldValue one(const FieldSpec& spec);

  /// The image of an integer in the field.
  static FieldValue integer(const FieldSpec& spec, const mpz_class& n);
  static FieldValue integer(const FieldSpec& spec, long n);

  /// The field element n/d. Rejects d = 0 over Q and d = 0 (mod p) over F_p.
  static FieldValue ratio(const FieldSpec& spec, const mpz_class& n,
                          const mpz_class& d);

  /// A rational from an already-built GMP value (canonicalized here).
  static FieldValue rational(mpq_class q);

  /// Scalar literal: optional '-', digits, optionally "/digits".
  static FieldValue parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  /// Sign (-1, 0, +1). Rationals only; prime fields are unordered.
  int sign() const;

  /// Payload accessors; the variant alternative must match the spec kind.
  const mpq_class& rational_value() const { return std::get<mpq_class>(payload_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(payload_); }

  FieldValue operator-() const;
  FieldValue inverse() const;

  FieldValue& operator+=(const FieldValue& rhs);
  FieldValue& operator-=(const FieldValue& rhs);
  FieldValue& operator*=(const FieldValue& rhs);
  FieldValue& operator/=(const FieldValue& rhs);

  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }

  friend bool operator==(const FieldValue& a, const FieldValue& b);
  friend bool operator!=(const FieldValue& a, const FieldValue& b) {
    return !(a == b);
  }

  /// Canonical text form: "n/d" rationals (no "/1" for integers),
  /// decimal residues for prime fields.
  std::string str() const;

private:
  FieldValue(FieldSpec spec, mpq_class q)
      : spec_(spec), payload_(std::move(q)) {}
  FieldValue(FieldSpec spec, std::uint64_t r) : spec_(spec), payload_(r) {}

  void require_same_spec(const FieldValue& other) const;

  FieldSpec spec_;
  std::variant<mpq_class, std::uint64_t> payload_;
};

FieldValue pow(const FieldValue& base, std::uint64_t exponent);

std::ostream& operator<<(std::ostream& os, const FieldValue& v);

}  // namespace cnkit
