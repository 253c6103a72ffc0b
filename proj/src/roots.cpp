#include "thinsec/roots.hpp"

#include <algorithm>

namespace thinsec
{
  SturmChain::SturmChain(const IntPoly& p)
  {
    if (p.is_zero()) return;
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero())
    {
      IntPoly r = -(chain_[chain_.size() - 2] % chain_.back());
      chain_.push_back(r);
    }
    chain_.pop_back();
  }

  int SturmChain::variations(const Rational& x) const
  {
    int v = 0, last = 0;
    for (const auto& f : chain_)
    {
      int s = sgn(f.eval(x));
      if (s == 0) continue;
      if (last != 0 && s != last) v++;
      last = s;
    }
    return v;
  }

  int SturmChain::count(const Rational& a, const Rational& b) const
  {
    return variations(a) - variations(b);
  }

  Rational root_bound(const IntPoly& p)
  {
    Rational m = 0;
    for (int i = 0; i < p.degree(); i++) m = std::max(m, Rational(abs(p.coeff(i) / p.lead())));
    return m + 1;
  }

  namespace
  {
    //! a split point strictly inside (lo, hi) where p does not vanish
    Rational split_point(const IntPoly& p, const Rational& lo, const Rational& hi)
    {
      for (long k = 2;; k++)
      {
        // (lo + hi)/2, then (lo + 2 hi)/3 ... always strictly inside
        Rational t = (lo * (k - 1) + hi) / k;
        if (k == 2) t = (lo + hi) / 2;
        if (sgn(p.eval(t)) != 0) return t;
      }
    }

    void isolate(const IntPoly& q, const SturmChain& sc, Rational lo, Rational hi, int n,
                 std::vector<RatInterval>& out)
    {
      if (n == 0) return;
      if (n == 1) { out.push_back({lo, hi}); return; }
      Rational m = split_point(q, lo, hi);
      int left = sc.count(lo, m);
      isolate(q, sc, lo, m, left, out);
      isolate(q, sc, m, hi, n - left, out);
    }
  }

  std::vector<RatInterval> isolate_real_roots(const IntPoly& p)
  {
    if (p.is_zero()) throw Error(ErrorKind::PreconditionFailed, "isolate_real_roots of the zero polynomial");
    std::vector<RatInterval> out;
    IntPoly q = squarefree_part(p);
    if (q.degree() <= 0) return out;
    SturmChain sc(q);
    Rational b = root_bound(q);
    // endpoints +-b are never roots
    isolate(q, sc, -b, b, sc.count(-b, b), out);
    std::sort(out.begin(), out.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
  }

  RatInterval refine_root(const IntPoly& p, RatInterval iv, const Rational& width)
  {
    if (iv.lo == iv.hi) return iv;
    int slo = sgn(p.eval(iv.lo));
    if (slo == 0) return {iv.lo, iv.lo};
    if (sgn(p.eval(iv.hi)) == 0) return {iv.hi, iv.hi};
    while (iv.width() >= width)
    {
      Rational m = iv.mid();
      int sm = sgn(p.eval(m));
      if (sm == 0) return {m, m};
      if (sm == slo) iv.lo = m;
      else iv.hi = m;
    }
    return iv;
  }
}
