#include "nctorus/integer.hpp"

#include "nctorus/error.hpp"

#include <cctype>
#include <stdexcept>

namespace nct {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::RationalTheta: return "RationalTheta";
    case Errc::NonSquarefree: return "NonSquarefree";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonPositiveRank: return "NonPositiveRank";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NonPositive: return "NonPositive";
    case Errc::OracleBoundTooSmall: return "OracleBoundTooSmall";
    case Errc::OracleAmbiguous: return "OracleAmbiguous";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TargetOnBoundary: return "TargetOnBoundary";
    case Errc::ZeroRankPiece: return "ZeroRankPiece";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotInCTheta: return "NotInCTheta";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::EqualVectors: return "EqualVectors";
    case Errc::ConeViolation: return "ConeViolation";
    case Errc::IncompatiblePresentations: return "IncompatiblePresentations";
    case Errc::NonPositiveQuotient: return "NonPositiveQuotient";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int sign(const Int& x) { return sgn(x); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  Int am = abs(m);
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int am = abs(m);
  if (am == 1) return 0;
  Int inv;
  Int ar = mod_floor(a, am);
  if (mpz_invert(inv.get_mpz_t(), ar.get_mpz_t(), am.get_mpz_t()) == 0)
    throw DomainError(Errc::NotPrimitive, "no inverse of " + to_string(a) + " mod " + to_string(m));
  return inv;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_squarefree(const Int& d) {
  Int n = abs(d);
  if (n == 0) return false;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("malformed number '" + text + "'");
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw std::invalid_argument("malformed number '" + text + "'");
    std::size_t used = 0;
    std::string rest = text.substr(i + 1);
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + text + "'");
    }
    if (used != rest.size()) throw std::invalid_argument("malformed exponent in '" + text + "'");
  }
  Int mantissa(digits, 10);
  long scale = exponent - frac_digits;
  Int ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(mantissa, ten_pow) : Rational(mantissa * ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

bool fits_long(const Int& x) { return x.fits_slong_p(); }

}  // namespace nct
