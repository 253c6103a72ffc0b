#include "thinsec/numberfield.hpp"

#include <algorithm>

namespace thinsec
{
  namespace
  {
    constexpr unsigned kTightBits = 256;
    constexpr long kMaxRefinements = 1000000;

    Rational dyadic_floor(const Rational& x, unsigned bits)
    {
      Integer scale = 1;
      scale <<= bits;
      Integer n;
      Rational y = x * Rational(scale);
      mpz_fdiv_q(n.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
      return Rational(n, scale);
    }

    Rational dyadic_ceil(const Rational& x, unsigned bits)
    {
      Integer scale = 1;
      scale <<= bits;
      Integer n;
      Rational y = x * Rational(scale);
      mpz_cdiv_q(n.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
      return Rational(n, scale);
    }

    RatInterval tighten(const IntPoly& m, const RatInterval& root)
    {
      if (root.lo == root.hi) return root;
      Rational w(Integer(1), Integer(1) << kTightBits);
      RatInterval iv = refine_root(m, root, w);
      if (iv.lo == iv.hi) return iv;
      RatInterval d{dyadic_floor(iv.lo, kTightBits + 2), dyadic_ceil(iv.hi, kTightBits + 2)};
      // the rounded interval must still isolate the root with a sign change
      if (sgn(m.eval(d.lo)) * sgn(m.eval(d.hi)) < 0 && SturmChain(m).count(d.lo, d.hi) == 1) return d;
      return iv;
    }

    bool excludes_zero(const RatInterval& v)
    {
      return sgn(v.lo) > 0 || sgn(v.hi) < 0;
    }
  }

  NumberField::NumberField(IntPoly original, IntPoly modulus, RatInterval root, std::vector<Rational> stripped)
    : original_(std::move(original)), modulus_(std::move(modulus)), root_(std::move(root)),
      stripped_(std::move(stripped))
  {
    tight_ = tighten(modulus_, root_);
  }

  bool NumberField::same_as(const NumberField& o) const
  {
    if (this == &o) return true;
    if (modulus_ != o.modulus_) return false;
    return !(root_.hi < o.root_.lo || o.root_.hi < root_.lo);
  }

  FieldPtr field_new(const IntPoly& modulus, const RatInterval& hint)
  {
    if (modulus.degree() < 1) throw Error(ErrorKind::NotIsolating, "modulus must have positive degree");
    if (hint.hi < hint.lo) throw Error(ErrorKind::NotIsolating, "empty hint interval");
    if (gcd(modulus, modulus.derivative()).degree() > 0)
      throw Error(ErrorKind::NotSquarefree, modulus.to_string());

    SturmChain sc(modulus);
    int inside = sc.count(hint.lo, hint.hi) + (sgn(modulus.eval(hint.lo)) == 0 ? 1 : 0);
    if (inside != 1)
      throw Error(ErrorKind::NotIsolating,
                  "hint [" + to_string(hint.lo) + ", " + to_string(hint.hi) + "] holds " + std::to_string(inside) +
                    " roots of " + modulus.to_string());

    // split off rational linear factors; keep the factor carrying the root
    IntPoly m = modulus.monic();
    std::vector<Rational> stripped;
    for (const Rational& r : rational_roots(m))
    {
      IntPoly lin{0, 1};
      lin -= IntPoly::constant(r);
      if (hint.contains(r))
        return std::make_shared<NumberField>(modulus, lin, RatInterval{r, r}, std::vector<Rational>{});
      m = m / lin;
      stripped.push_back(r);
    }

    RatInterval iv = hint;
    if (sgn(m.eval(iv.lo)) == 0 || sgn(m.eval(iv.hi)) == 0)
      throw Error(ErrorKind::Audit, "rational endpoint root survived stripping");
    return std::make_shared<NumberField>(modulus, m, iv, stripped);
  }

  FieldPtr rational_field()
  {
    static const FieldPtr q = field_new(IntPoly{0, 1}, RatInterval{-1, 1});
    return q;
  }

  FieldElement::FieldElement(const Rational& q) : poly_(IntPoly::constant(q)) {}

  FieldElement::FieldElement(FieldPtr field, IntPoly poly) : field_(std::move(field))
  {
    if (field_ && poly.degree() >= field_->degree()) poly = poly % field_->modulus();
    poly_ = std::move(poly);
    if (!field_ && poly_.degree() > 0) throw Error(ErrorKind::FieldMismatch, "non-constant element without a field");
  }

  FieldElement FieldElement::generator(const FieldPtr& field)
  {
    return FieldElement(field, IntPoly{0, 1});
  }

  Rational FieldElement::rational_value() const
  {
    if (!is_rational()) throw Error(ErrorKind::PreconditionFailed, "element is not rational");
    return poly_.coeff(0);
  }

  FieldPtr FieldElement::join(const FieldPtr& a, const FieldPtr& b)
  {
    if (!a) return b;
    if (!b) return a;
    if (a == b || a->same_as(*b)) return a;
    throw Error(ErrorKind::FieldMismatch, "elements of different fields");
  }

  FieldElement FieldElement::operator-() const
  {
    FieldElement r = *this;
    r.poly_ = -r.poly_;
    return r;
  }

  FieldElement& FieldElement::operator+=(const FieldElement& o)
  {
    field_ = join(field_, o.field_);
    poly_ += o.poly_;
    return *this;
  }

  FieldElement& FieldElement::operator-=(const FieldElement& o)
  {
    field_ = join(field_, o.field_);
    poly_ -= o.poly_;
    return *this;
  }

  FieldElement& FieldElement::operator*=(const FieldElement& o)
  {
    field_ = join(field_, o.field_);
    if (poly_.degree() <= 0 || o.poly_.degree() <= 0)
    {
      // scalar times residue stays reduced
      poly_ = poly_.degree() <= 0 ? o.poly_ * poly_.coeff(0) : poly_ * o.poly_.coeff(0);
      return *this;
    }
    poly_ = (poly_ * o.poly_) % field_->modulus();
    return *this;
  }

  FieldElement& FieldElement::operator/=(const FieldElement& o)
  {
    return *this *= inverse(o);
  }

  FieldElement operator+(FieldElement a, const FieldElement& b) { a += b; return a; }
  FieldElement operator-(FieldElement a, const FieldElement& b) { a -= b; return a; }
  FieldElement operator*(FieldElement a, const FieldElement& b) { a *= b; return a; }
  FieldElement operator/(FieldElement a, const FieldElement& b) { a /= b; return a; }

  FieldElement inverse(const FieldElement& x)
  {
    if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (x.is_rational()) return FieldElement(x.field(), IntPoly::constant(1 / x.poly().coeff(0)));
    ExtGcd eg = ext_gcd(x.poly(), x.field()->modulus());
    if (eg.g.degree() != 0)
      throw Error(ErrorKind::Audit, "zero divisor: modulus " + x.field()->modulus().to_string() + " is reducible");
    return FieldElement(x.field(), eg.s);
  }

  FieldElement pow(const FieldElement& x, unsigned k)
  {
    FieldElement r(x.field(), IntPoly::constant(1)), b = x;
    while (k)
    {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1u;
    }
    return r;
  }

  FieldElement arith(const FieldElement& x, const FieldElement& y, ArithOp op)
  {
    switch (op)
    {
      case ArithOp::Add: return x + y;
      case ArithOp::Sub: return x - y;
      case ArithOp::Mul: return x * y;
      case ArithOp::Div:
        if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
        return x / y;
    }
    return {};
  }

  bool operator==(const FieldElement& a, const FieldElement& b)
  {
    return (a - b).is_zero();
  }

  namespace
  {
    // Bisect the enclosure of lambda until the value enclosure satisfies done.
    template<class Done>
    RatInterval refine_value(const FieldElement& x, Done done)
    {
      const NumberField& f = *x.field();
      RatInterval lam = f.tight_interval();
      RatInterval v = x.poly().eval(lam);
      if (done(v)) return v;
      const IntPoly& m = f.modulus();
      int slo = sgn(m.eval(lam.lo));
      for (long it = 0; it < kMaxRefinements; it++)
      {
        Rational mid = lam.mid();
        int sm = sgn(m.eval(mid));
        if (sm == 0) { lam = {mid, mid}; }
        else if (sm == slo) lam.lo = mid;
        else lam.hi = mid;
        v = x.poly().eval(lam);
        if (done(v)) return v;
      }
      throw Error(ErrorKind::Audit, "refinement bound exceeded for " + x.poly().to_string("l"));
    }
  }

  int sign_of(const FieldElement& x)
  {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.poly().coeff(0));
    const NumberField& f = *x.field();
    RatInterval v = x.poly().eval(f.tight_interval());
    if (excludes_zero(v)) return sgn(v.lo);
    // a common factor with the modulus vanishing at lambda means x = 0
    IntPoly g = gcd(x.poly(), f.modulus());
    if (g.degree() > 0)
    {
      RatInterval r = f.root_interval();
      if (sgn(g.eval(r.lo)) == 0 || SturmChain(g).count(r.lo, r.hi) > 0) return 0;
    }
    v = refine_value(x, excludes_zero);
    return sgn(v.lo);
  }

  RatInterval enclose(const FieldElement& x, const Rational& w)
  {
    if (x.is_rational()) return {x.poly().coeff(0), x.poly().coeff(0)};
    return refine_value(x, [&](const RatInterval& v) { return v.width() < w; });
  }

  Rational approximate(const FieldElement& x, const Rational& eps)
  {
    if (sgn(eps) <= 0) throw Error(ErrorKind::PreconditionFailed, "eps must be positive");
    return enclose(x, eps).mid();
  }

  double to_double(const FieldElement& x)
  {
    static const Rational w(Integer(1), Integer(1) << 80);
    return approximate(x, w).get_d();
  }

  std::string to_string(const FieldElement& x, const std::string& var)
  {
    return x.poly().to_string(var);
  }
}

namespace thinsec
{
  bool ResidueLess::operator()(const FieldElement& a, const FieldElement& b) const
  {
    const auto& x = a.poly().coeffs();
    const auto& y = b.poly().coeffs();
    if (x.size() != y.size()) return x.size() < y.size();
    for (size_t i = x.size(); i-- > 0;)
      if (x[i] != y[i]) return x[i] < y[i];
    return false;
  }
}
