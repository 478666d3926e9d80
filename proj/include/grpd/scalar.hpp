#ifndef GRPD_SCALAR_HPP_
#define GRPD_SCALAR_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>

namespace grpd {

// Coefficient domain for the idempotent algebras: exact rationals or a prime
// field F_p. Elements are carried as mpq_class; for F_p they are kept reduced
// to an integer representative in [0, p).
struct BaseRing {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  long p = 0;  // modulus, only meaningful for prime_field

  static BaseRing rationals() { return BaseRing{Kind::rationals, 0}; }
  static BaseRing prime_field(long p);

  // "Q" or "Fp:<p>"
  static std::optional<BaseRing> parse(const std::string& s);
  std::string str() const;

  bool operator==(const BaseRing&) const = default;

  long characteristic() const {
    return kind == Kind::prime_field ? p : 0;
  }

  // Canonical representative of x in this ring. For F_p the rational a/b is
  // mapped to a * b^{-1} mod p; b not invertible is a ParseError.
  mpq_class reduce(const mpq_class& x) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  // Multiplicative inverse; nullopt for 0 (or non-unit).
  std::optional<mpq_class> inv(const mpq_class& a) const;

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }

  // Scalars serialize as "3/2", "-1", or plain integers mod p.
  std::optional<mpq_class> parse_scalar(const std::string& s) const;
  std::string render_scalar(const mpq_class& x) const;
};

bool is_prime(long p);

}  // namespace grpd

#endif  // GRPD_SCALAR_HPP_
