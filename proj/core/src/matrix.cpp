#include "lindeg/matrix.hpp"

#include <cctype>
#include <charconv>

namespace lindeg {

PrimeOps::PrimeOps(std::uint64_t prime) : p(prime) {
  if (!lindeg::is_prime(prime) || prime >= (1ull << 32)) {
    throw Error(ErrorCode::InvalidParams, "not a prime below 2^32: " + std::to_string(prime));
  }
}

std::uint64_t PrimeOps::inv(std::uint64_t a) const {
  if (a % p == 0) throw Error(ErrorCode::FieldError, "division by zero in F_p");
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::uint64_t PrimeOps::reduce(const Rational& q) const {
  mpz_class num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % static_cast<unsigned long>(p);
  if (den == 0) {
    throw Error(ErrorCode::FieldError, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  }
  return mul(num.get_ui(), inv(den.get_ui()));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime_field(std::uint64_t p) {
  if (!lindeg::is_prime(p) || p >= (1ull << 32)) {
    throw Error(ErrorCode::InvalidParams, "not a prime below 2^32: " + std::to_string(p));
  }
  return {Kind::Prime, p};
}

std::string Field::to_string() const {
  return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(prime);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime_field(p);
  }
  throw Error(ErrorCode::InvalidInput, "field must be \"Q\" or \"Fp:<p>\", got \"" + std::string(text) + "\"");
}

DenseMatrix<std::uint64_t> reduce_mod(const Matrix& m, const PrimeOps& ops) {
  DenseMatrix<std::uint64_t> out(m.rows(), m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ops.reduce(m(r, c));
  }
  return out;
}

std::size_t rank(const Matrix& m, const Field& field) {
  if (field.is_prime()) {
    PrimeOps ops(field.prime);
    return rank(ops, reduce_mod(m, ops));
  }
  return rank(RationalOps{}, m);
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& field) {
  if (field.is_prime()) {
    PrimeOps ops(field.prime);
    auto c = multiply(ops, reduce_mod(a, ops), reduce_mod(b, ops));
    Matrix out(c.rows(), c.cols(), 0);
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t k = 0; k < c.cols(); ++k) out(r, k) = static_cast<unsigned long>(c(r, k));
    }
    return out;
  }
  return multiply(RationalOps{}, a, b);
}

Matrix identity_matrix(std::size_t n) { return identity(RationalOps{}, n); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.starts_with('-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? valid_int(text)
                : valid_int(text.substr(0, slash)) && valid_int(text.substr(slash + 1)) &&
                      !text.substr(slash + 1).starts_with('-');
  if (!ok) throw Error(ErrorCode::InvalidInput, "not an exact rational: \"" + std::string(text) + "\"");
  Rational q(std::string(text), 10);
  if (slash != std::string_view::npos && q.get_den() == 0) {
    throw Error(ErrorCode::InvalidInput, "zero denominator: \"" + std::string(text) + "\"");
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace lindeg
