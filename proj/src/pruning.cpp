#include "thinsec/pruning.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "thinsec/error.hpp"

namespace thinsec
{
  namespace
  {
    struct Map
    {
      double lo, hi, shift;  // [lo, hi] -> [lo + shift, hi + shift]
    };

    struct Walker
    {
      std::vector<Map> maps;
      std::vector<double> critical;
      long budget = 0;
      long visits = 0;
      double guard = 0;
      bool exhausted = false;
      bool near = false;

      int neighbors(double x, double* out)
      {
        for (double c : critical)
          if (std::fabs(x - c) < guard)
          {
            near = true;
            return 0;
          }
        int n = 0;
        for (const Map& m : maps)
        {
          if (m.lo <= x && x <= m.hi) out[n++] = x + m.shift;
          if (m.lo + m.shift <= x && x <= m.hi + m.shift) out[n++] = x - m.shift;
        }
        return n;
      }

      // min(height of the branch at y seen from p, c)
      int height(double p, double y, int c)
      {
        if (c == 0 || exhausted || near) return c;
        if (++visits > budget)
        {
          exhausted = true;
          return c;
        }
        double nb[16];
        int n = neighbors(y, nb);
        int best = 0;
        for (int k = 0; k < n && best < c - 1; k++)
        {
          if (std::fabs(nb[k] - p) < guard) continue;
          best = std::max(best, height(y, nb[k], c - 1));
        }
        return std::min(c, 1 + best);
      }
    };

    Walker make_walker(const IIS& s, long budget, double guard)
    {
      if (s.order() > 8) throw Error(ErrorKind::PreconditionFailed, "pruning supports at most 8 pairs");
      Walker w;
      for (const auto& p : s.pairs)
      {
        double lo = to_double(p.left.lo), hi = to_double(p.left.hi), c = to_double(p.right.lo);
        w.maps.push_back({lo, hi, c - lo});
        for (double v : {lo, hi, c, to_double(p.right.hi)}) w.critical.push_back(v);
      }
      w.budget = budget;
      w.guard = guard;
      return w;
    }

    int round_of(Walker& w, double x, int cap)
    {
      w.visits = 0;
      w.exhausted = w.near = false;
      double nb[16];
      int n = w.neighbors(x, nb);
      if (w.near) return -2;
      if (n <= 1) return 1;
      std::vector<int> h;
      for (int k = 0; k < n; k++) h.push_back(w.height(x, nb[k], cap));
      if (w.exhausted) return -1;
      if (w.near) return -2;
      std::sort(h.rbegin(), h.rend());
      return std::min(1 + h[1], cap + 1);
    }
  }

  int removal_round(const IIS& s, double x, int cap, long visit_budget, double guard)
  {
    if (cap < 1) throw Error(ErrorKind::PreconditionFailed, "cap must be positive");
    Walker w = make_walker(s, visit_budget, guard);
    return round_of(w, x, cap);
  }

  PruningResult pruning_decay(const IIS& s, const PruningOptions& opt)
  {
    if (opt.rounds < 1 || opt.samples < 1) throw Error(ErrorKind::PreconditionFailed, "rounds and samples must be positive");
    Walker w = make_walker(s, opt.visit_budget, opt.guard);
    std::uniform_real_distribution<double> U(to_double(s.A), to_double(s.B));
    PruningResult r;
    std::vector<long> hist(static_cast<size_t>(opt.rounds) + 2, 0);
    for (int i = 0; i < opt.samples; i++)
    {
      // one generator per sample, so any subset of samples can be replayed
      std::mt19937_64 rng(opt.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1));
      int k = round_of(w, U(rng), opt.rounds);
      if (k == -1)
        r.exhausted++;
      else if (k == -2)
        r.near_critical++;
      else
      {
        r.decided++;
        r.removal_round.push_back(k);
        hist[static_cast<size_t>(k)]++;
      }
    }
    // alive after round j  <=>  removed in a round later than j
    r.surviving.assign(static_cast<size_t>(opt.rounds), 0.0);
    long alive = r.decided;
    for (int j = 1; j <= opt.rounds; j++)
    {
      alive -= hist[static_cast<size_t>(j)];
      r.surviving[static_cast<size_t>(j - 1)] = r.decided > 0 ? static_cast<double>(alive) / r.decided : 1.0;
    }
    return r;
  }
}
