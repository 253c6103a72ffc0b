#include "thinsec/poly.hpp"

#include <algorithm>
#include <sstream>

namespace thinsec
{
  IntPoly::IntPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
  {
    for (auto& q : c_) q.canonicalize();
    trim();
  }

  IntPoly::IntPoly(std::initializer_list<long> coeffs)
  {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  IntPoly IntPoly::constant(const Rational& c)
  {
    return IntPoly(std::vector<Rational>{c});
  }

  IntPoly IntPoly::monomial(const Rational& c, int degree)
  {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
  }

  void IntPoly::trim()
  {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  Rational IntPoly::coeff(int i) const
  {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<size_t>(i)];
  }

  IntPoly IntPoly::operator-() const
  {
    IntPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  IntPoly& IntPoly::operator+=(const IntPoly& o)
  {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); i++) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  IntPoly& IntPoly::operator-=(const IntPoly& o)
  {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); i++) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  IntPoly& IntPoly::operator*=(const Rational& s)
  {
    if (sgn(s) == 0) { c_.clear(); return *this; }
    for (auto& q : c_) q *= s;
    return *this;
  }

  Rational IntPoly::eval(const Rational& x) const
  {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  RatInterval IntPoly::eval(const RatInterval& x) const
  {
    RatInterval acc{0, 0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    {
      acc = acc * x;
      acc.lo += *it;
      acc.hi += *it;
    }
    return acc;
  }

  double IntPoly::eval(double x) const
  {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  IntPoly IntPoly::derivative() const
  {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); i++) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
  }

  IntPoly IntPoly::monic() const
  {
    if (is_zero()) return *this;
    IntPoly r = *this;
    Rational l = lead();
    for (auto& q : r.c_) q /= l;
    return r;
  }

  std::string IntPoly::to_string(const std::string& var) const
  {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; i--)
    {
      const Rational& q = c_[static_cast<size_t>(i)];
      if (sgn(q) == 0) continue;
      Rational mag = abs(q);
      if (first) { if (sgn(q) < 0) os << "-"; }
      else os << (sgn(q) < 0 ? " - " : " + ");
      first = false;
      bool unit = mag == 1;
      if (i == 0 || !unit) os << mag.get_str();
      if (i > 0)
      {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

  IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
  IntPoly operator-(IntPoly a, const IntPoly& b) { a -= b; return a; }
  IntPoly operator*(IntPoly a, const Rational& s) { a *= s; return a; }

  IntPoly operator*(const IntPoly& a, const IntPoly& b)
  {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); i++)
      for (size_t j = 0; j < b.coeffs().size(); j++) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPoly(std::move(r));
  }

  std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b)
  {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {IntPoly{}, a};
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1);
    const Rational& lb = b.lead();
    for (int k = a.degree(); k >= db; k--)
    {
      Rational t = rem[static_cast<size_t>(k)] / lb;
      quo[static_cast<size_t>(k - db)] = t;
      if (sgn(t) == 0) continue;
      for (int i = 0; i <= db; i++) rem[static_cast<size_t>(k - db + i)] -= t * b.coeffs()[static_cast<size_t>(i)];
    }
    rem.resize(static_cast<size_t>(db));
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
  }

  IntPoly operator%(const IntPoly& a, const IntPoly& b) { return divmod(a, b).second; }
  IntPoly operator/(const IntPoly& a, const IntPoly& b) { return divmod(a, b).first; }

  IntPoly gcd(const IntPoly& a, const IntPoly& b)
  {
    IntPoly x = a, y = b;
    while (!y.is_zero())
    {
      IntPoly r = x % y;
      x = std::move(y);
      y = std::move(r);
    }
    return x.monic();
  }

  ExtGcd ext_gcd(const IntPoly& a, const IntPoly& b)
  {
    IntPoly r0 = a, r1 = b, s0 = IntPoly::constant(1), s1, t0, t1 = IntPoly::constant(1);
    while (!r1.is_zero())
    {
      auto [q, r] = divmod(r0, r1);
      IntPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
      r0 = std::move(r1); r1 = std::move(r);
      s0 = std::move(s1); s1 = std::move(s2);
      t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational l = r0.lead();
    Rational li = 1 / l;
    return {r0 * li, s0 * li, t0 * li};
  }

  IntPoly squarefree_part(const IntPoly& p)
  {
    if (p.degree() <= 0) return p;
    IntPoly g = gcd(p, p.derivative());
    return (p / g).monic();
  }

  namespace
  {
    std::vector<Integer> divisors(Integer n)
    {
      if (n < 0) n = -n;
      std::vector<Integer> out;
      if (n == 0) return out;
      for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0)
        {
          out.push_back(d);
          if (d * d != n) out.push_back(n / d);
        }
      return out;
    }
  }

  std::vector<Rational> rational_roots(const IntPoly& p)
  {
    std::vector<Rational> roots;
    if (p.is_zero()) return roots;
    // clear denominators, strip the x^k factor first
    Integer lcm = 1;
    for (const auto& q : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& q : p.coeffs()) z.push_back(Integer(q * Rational(lcm)));
    size_t k = 0;
    while (k < z.size() && z[k] == 0) k++;
    if (k > 0) roots.emplace_back(0);
    if (k + 1 >= z.size()) return roots;
    auto num = divisors(z[k]), den = divisors(z.back());
    for (const auto& a : num)
      for (const auto& b : den)
        for (int s : {1, -1})
        {
          Rational cand(a * s, b);
          cand.canonicalize();
          if (sgn(p.eval(cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
}
