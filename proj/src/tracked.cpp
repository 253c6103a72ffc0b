#include "thinsec/tracked.hpp"

namespace thinsec
{
  Rational Tracked::coeff(int key) const
  {
    auto it = form_.find(key);
    return it == form_.end() ? Rational(0) : it->second;
  }

  bool Tracked::has_offsets() const
  {
    return !form_.empty() && form_.begin()->first < 0;
  }

  Tracked Tracked::operator-() const
  {
    Tracked r(-value_);
    for (const auto& [k, c] : form_) r.form_[k] = -c;
    return r;
  }

  Tracked& Tracked::operator+=(const Tracked& o)
  {
    value_ += o.value_;
    for (const auto& [k, c] : o.form_)
    {
      Rational& slot = form_[k];
      slot += c;
      if (sgn(slot) == 0) form_.erase(k);
    }
    return *this;
  }

  Tracked& Tracked::operator-=(const Tracked& o)
  {
    return *this += -o;
  }
}
