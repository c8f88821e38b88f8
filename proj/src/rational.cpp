#include "ellgen/rational.hpp"

#include <cctype>
#include <climits>

#include "ellgen/errors.hpp"

namespace ellgen {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::kDomain, "rational with zero denominator");
  v_ = mpq_class(num, 1);
  v_ /= den;
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  num = trim(num);
  den = trim(den);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    fail(ErrorCode::kSchema, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::kSchema, "rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    fail(ErrorCode::kDomain, "rational " + to_string() + " is not a machine integer");
  }
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::kNonUnit, "inverse of zero rational");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::kNonUnit, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

bool Rational::try_sqrt(Rational& out) const {
  if (sign() < 0) return false;
  const mpz_class num = v_.get_num();
  const mpz_class den = v_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = Rational(mpq_class(rn, rd));
  return true;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational binomial(const Rational& e, long j) {
  if (j < 0) return Rational(0);
  Rational out(1);
  for (long i = 0; i < j; ++i) {
    out *= (e - Rational(i));
    out /= Rational(i + 1);
  }
  return out;
}

Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) fail(ErrorCode::kNonUnit, "inverse of zero Gaussian rational");
  const Rational n = norm().inverse();
  return {re_ * n, -(im_ * n)};
}

GaussianRational GaussianRational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  GaussianRational base = *this;
  GaussianRational out(1);
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    base *= base;
    exponent >>= 1;
  }
  return out;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag_part;
  if (im_ == Rational(1)) {
    imag_part = "i";
  } else if (im_ == Rational(-1)) {
    imag_part = "-i";
  } else {
    imag_part = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return imag_part;
  if (imag_part.front() == '-') return re_.to_string() + imag_part;
  return re_.to_string() + "+" + imag_part;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStructural: return "structural";
    case ErrorCode::kNonUnit: return "non_unit";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kZeroPairing: return "zero_pairing";
    case ErrorCode::kUnknownName: return "unknown_name";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kAdmissibility: return "admissibility";
    case ErrorCode::kEffectiveness: return "effectiveness";
    case ErrorCode::kInternalInconsistency: return "internal_inconsistency";
    case ErrorCode::kResourceCap: return "resource_cap";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInternalInconsistency: return 3;
    case ErrorCode::kResourceCap: return 4;
    default: return 2;
  }
}

}  // namespace ellgen
