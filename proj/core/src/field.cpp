#include "cnkit/field.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace cnkit {
namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid; a in (0, p), p prime.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, next_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t next_r = static_cast<std::int64_t>(a);
  while (next_r != 0) {
    std::int64_t q = r / next_r;
    t -= q * next_t;
    std::swap(t, next_t);
    r -= q * next_r;
    std::swap(r, next_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& n, std::uint64_t p) {
  mpz_class r = n % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
  return r.get_ui();
}

constexpr std::array<std::uint64_t, 12> kMillerRabinBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kMillerRabinBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kMillerRabinBases) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63)) {
    throw Error(Errc::not_prime, "prime field modulus must be below 2^63");
  }
  if (!is_prime_u64(p)) {
    throw Error(Errc::not_prime,
                "prime field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q") return rationals();
  if (text.starts_with("fp:")) {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      throw Error(Errc::parse,
                  "bad field string \"" + std::string(text) +
                      "\": expected \"q\" or \"fp:<prime>\"");
    }
    return prime_field(p);
  }
  throw Error(Errc::parse, "bad field string \"" + std::string(text) +
                               "\": expected \"q\" or \"fp:<prime>\"");
}

std::string FieldSpec::str() const {
  if (kind_ == FieldKind::Rationals) return "q";
  return "fp:" + std::to_string(modulus_);
}

FieldValue FieldValue::zero(const FieldSpec& spec) {
  if (spec.kind() == FieldKind::Rationals) return FieldValue(spec, mpq_class(0));
  return FieldValue(spec, std::uint64_t{0});
}

FieldValue FieldValue::one(const FieldSpec& spec) {
  if (spec.kind() == FieldKind::Rationals) return FieldValue(spec, mpq_class(1));
  return FieldValue(spec, std::uint64_t{1} % spec.modulus());
}

FieldValue FieldValue::integer(const FieldSpec& spec, const mpz_class& n) {
  if (spec.kind() == FieldKind::Rationals) return FieldValue(spec, mpq_class(n));
  return FieldValue(spec, reduce_mpz(n, spec.modulus()));
}

FieldValue FieldValue::integer(const FieldSpec& spec, long n) {
  return integer(spec, mpz_class(n));
}

FieldValue FieldValue::ratio(const FieldSpec& spec, const mpz_class& n,
                             const mpz_class& d) {
  if (spec.kind() == FieldKind::Rationals) {
    if (d == 0) {
      throw Error(Errc::division_by_zero, "rational with zero denominator");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return FieldValue(spec, std::move(q));
  }
  std::uint64_t den = reduce_mpz(d, spec.modulus());
  if (den == 0) {
    throw Error(Errc::division_by_zero,
                "denominator is divisible by the field characteristic " +
                    std::to_string(spec.modulus()));
  }
  std::uint64_t num = reduce_mpz(n, spec.modulus());
  return FieldValue(spec,
                    mulmod_u64(num, invmod_u64(den, spec.modulus()),
                               spec.modulus()));
}

FieldValue FieldValue::rational(mpq_class q) {
  q.canonicalize();
  return FieldValue(FieldSpec::rationals(), std::move(q));
}

FieldValue FieldValue::parse(const FieldSpec& spec, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::size_t slash = body.find('/');
  mpz_class num, den = 1;
  if (slash == std::string_view::npos) {
    if (!all_digits(body)) {
      throw Error(Errc::parse, "bad scalar \"" + std::string(text) + "\"");
    }
    num = mpz_class(std::string(body), 10);
  } else {
    std::string_view n = body.substr(0, slash);
    std::string_view d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) {
      throw Error(Errc::parse, "bad scalar \"" + std::string(text) + "\"");
    }
    num = mpz_class(std::string(n), 10);
    den = mpz_class(std::string(d), 10);
  }
  if (negative) num = -num;
  return ratio(spec, num, den);
}

bool FieldValue::is_zero() const {
  if (spec_.kind() == FieldKind::Rationals) {
    return sgn(rational_value()) == 0;
  }
  return residue() == 0;
}

bool FieldValue::is_one() const {
  if (spec_.kind() == FieldKind::Rationals) return rational_value() == 1;
  return residue() == 1 % spec_.modulus();
}

int FieldValue::sign() const {
  if (spec_.kind() != FieldKind::Rationals) {
    throw Error(Errc::precondition, "sign() is defined for rationals only");
  }
  return sgn(rational_value());
}

void FieldValue::require_same_spec(const FieldValue& other) const {
  if (!(spec_ == other.spec_)) {
    throw Error(Errc::field_mismatch,
                "operands live in different fields (" + spec_.str() + " vs " +
                    other.spec_.str() + ")");
  }
}

FieldValue FieldValue::operator-() const {
  if (spec_.kind() == FieldKind::Rationals) {
    return FieldValue(spec_, mpq_class(-rational_value()));
  }
  std::uint64_t r = residue();
  return FieldValue(spec_, r == 0 ? 0 : spec_.modulus() - r);
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) {
    throw Error(Errc::division_by_zero, "inverse of zero");
  }
  if (spec_.kind() == FieldKind::Rationals) {
    mpq_class inv(rational_value().get_den(), rational_value().get_num());
    inv.canonicalize();
    return FieldValue(spec_, std::move(inv));
  }
  return FieldValue(spec_, invmod_u64(residue(), spec_.modulus()));
}

FieldValue& FieldValue::operator+=(const FieldValue& rhs) {
  require_same_spec(rhs);
  if (spec_.kind() == FieldKind::Rationals) {
    std::get<mpq_class>(payload_) += rhs.rational_value();
  } else {
    std::uint64_t s = residue() + rhs.residue();
    if (s >= spec_.modulus()) s -= spec_.modulus();
    payload_ = s;
  }
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& rhs) {
  require_same_spec(rhs);
  if (spec_.kind() == FieldKind::Rationals) {
    std::get<mpq_class>(payload_) -= rhs.rational_value();
  } else {
    std::uint64_t a = residue(), b = rhs.residue();
    payload_ = a >= b ? a - b : a + spec_.modulus() - b;
  }
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& rhs) {
  require_same_spec(rhs);
  if (spec_.kind() == FieldKind::Rationals) {
    std::get<mpq_class>(payload_) *= rhs.rational_value();
  } else {
    payload_ = mulmod_u64(residue(), rhs.residue(), spec_.modulus());
  }
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& rhs) {
  return *this *= rhs.inverse();
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  return a.spec_ == b.spec_ && a.payload_ == b.payload_;
}

std::string FieldValue::str() const {
  if (spec_.kind() == FieldKind::PrimeField) {
    return std::to_string(residue());
  }
  const mpq_class& q = rational_value();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

FieldValue pow(const FieldValue& base, std::uint64_t exponent) {
  FieldValue result = FieldValue::one(base.spec());
  FieldValue b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const FieldValue& v) {
  return os << v.str();
}

}  // namespace cnkit
