#include "grpd/scalar.hpp"

#include <stdexcept>

#include "grpd/error.hpp"

namespace grpd {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

BaseRing BaseRing::prime_field(long p) {
  if (!is_prime(p)) {
    throw ParseError("base ring modulus " + std::to_string(p) + " is not prime");
  }
  return BaseRing{Kind::prime_field, p};
}

std::optional<BaseRing> BaseRing::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Fp:", 0) == 0) {
    try {
      long p = std::stol(s.substr(3));
      if (!is_prime(p)) return std::nullopt;
      return prime_field(p);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string BaseRing::str() const {
  return kind == Kind::rationals ? "Q" : "Fp:" + std::to_string(p);
}

mpq_class BaseRing::reduce(const mpq_class& x) const {
  if (kind == Kind::rationals) {
    mpq_class r = x;
    r.canonicalize();
    return r;
  }
  mpz_class num = x.get_num(), den = x.get_den(), mod(p);
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw ParseError("denominator not invertible mod " + std::to_string(p));
  }
  mpz_class r = (num * dinv) % mod;
  if (r < 0) r += mod;
  return mpq_class(r);
}

mpq_class BaseRing::add(const mpq_class& a, const mpq_class& b) const {
  return reduce(a + b);
}

mpq_class BaseRing::sub(const mpq_class& a, const mpq_class& b) const {
  return reduce(a - b);
}

mpq_class BaseRing::mul(const mpq_class& a, const mpq_class& b) const {
  return reduce(a * b);
}

mpq_class BaseRing::neg(const mpq_class& a) const { return reduce(-a); }

std::optional<mpq_class> BaseRing::inv(const mpq_class& a) const {
  mpq_class r = reduce(a);
  if (r == 0) return std::nullopt;
  if (kind == Kind::rationals) return mpq_class(1) / r;
  mpz_class ai = r.get_num(), mod(p), out;
  if (mpz_invert(out.get_mpz_t(), ai.get_mpz_t(), mod.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return mpq_class(out);
}

std::optional<mpq_class> BaseRing::parse_scalar(const std::string& s) const {
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  try {
    return reduce(v);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::string BaseRing::render_scalar(const mpq_class& x) const {
  return reduce(x).get_str();
}

std::string join_violations(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += v.code + ": " + v.detail;
  }
  return out;
}

}  // namespace grpd
