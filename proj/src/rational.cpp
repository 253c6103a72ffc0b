#include "thinsec/rational.hpp"

#include <algorithm>
#include <cmath>

namespace thinsec
{
  const char* error_kind_name(ErrorKind k)
  {
    switch (k)
    {
      case ErrorKind::NotSquarefree: return "NotSquarefree";
      case ErrorKind::NotIsolating: return "NotIsolating";
      case ErrorKind::FieldMismatch: return "FieldMismatch";
      case ErrorKind::DivisionByZero: return "DivisionByZero";
      case ErrorKind::NotAnEigenvalue: return "NotAnEigenvalue";
      case ErrorKind::NotSquare: return "NotSquare";
      case ErrorKind::NegativeEntries: return "NegativeEntries";
      case ErrorKind::InvalidSystem: return "InvalidSystem";
      case ErrorKind::NotContained: return "NotContained";
      case ErrorKind::SelfTransmission: return "SelfTransmission";
      case ErrorKind::PreconditionFailed: return "PreconditionFailed";
      case ErrorKind::NoAdmissibleMove: return "NoAdmissibleMove";
      case ErrorKind::AmbiguousMove: return "AmbiguousMove";
      case ErrorKind::OutOfSupport: return "OutOfSupport";
      case ErrorKind::NotFree: return "NotFree";
      case ErrorKind::NotMaximal: return "NotMaximal";
      case ErrorKind::Halted: return "Halted";
      case ErrorKind::NearSaddle: return "NearSaddle";
      case ErrorKind::EmptyWindow: return "EmptyWindow";
      case ErrorKind::Parse: return "Parse";
      case ErrorKind::Audit: return "Audit";
    }
    return "Unknown";
  }

  std::string to_string(const Rational& q)
  {
    return q.get_str();
  }

  Rational parse_rational(const std::string& raw)
  {
    std::string s;
    for (char ch : raw)
      if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos)
    {
      bool neg = s[0] == '-';
      std::string digits = s.substr(neg ? 1 : 0);
      dot = digits.find('.');
      std::string whole = digits.substr(0, dot), frac = digits.substr(dot + 1);
      if (whole.empty()) whole = "0";
      std::string all = whole + frac;
      if (all.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::Parse, "bad decimal '" + raw + "'");
      Rational q = Rational(Integer(all, 10), 1) * pow10_inv(static_cast<unsigned>(frac.size()));
      return neg ? Rational(-q) : q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + raw + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + raw + "'");
    q.canonicalize();
    return q;
  }

  Rational pow10_inv(unsigned k)
  {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
    return Rational(Integer(1), d);
  }

  Rational from_double(double x)
  {
    Rational q(x);
    return q;
  }

  RatInterval operator+(const RatInterval& a, const RatInterval& b)
  {
    return {a.lo + b.lo, a.hi + b.hi};
  }

  RatInterval operator-(const RatInterval& a, const RatInterval& b)
  {
    return {a.lo - b.hi, a.hi - b.lo};
  }

  RatInterval operator*(const RatInterval& a, const RatInterval& b)
  {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }

  RatInterval operator*(const RatInterval& a, const Rational& c)
  {
    if (c >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
  }
}
