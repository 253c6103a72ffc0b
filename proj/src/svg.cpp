#include "thinsec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace thinsec::svg
{
  namespace
  {
    const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
                             "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

    std::string colour(size_t i)
    {
      return palette[i % (sizeof palette / sizeof palette[0])];
    }

    std::string f(double x)
    {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", x);
      return buf;
    }

    std::string escape(const std::string& s)
    {
      std::string out;
      for (char c : s)
      {
        switch (c)
        {
          case '<': out += "&lt;"; break;
          case '>': out += "&gt;"; break;
          case '&': out += "&amp;"; break;
          default: out += c;
        }
      }
      return out;
    }

    void header(std::ostringstream& os, double w, double h, const std::string& title)
    {
      os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f(w) << "\" height=\"" << f(h)
         << "\" viewBox=\"0 0 " << f(w) << " " << f(h) << "\">\n";
      os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
      if (!title.empty())
        os << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";
    }
  }

  std::string iis(const IIS& s, const std::string& title)
  {
    const double W = 800, margin = 40, row = 40;
    const double A = to_double(s.A), B = to_double(s.B);
    auto X = [&](const FieldElement& x) { return margin + (to_double(x) - A) / (B - A) * (W - 2 * margin); };
    const double H = 80 + row * static_cast<double>(s.pairs.size() + 1);
    std::ostringstream os;
    header(os, W, H, title);
    os << "<line x1=\"" << f(X(s.A)) << "\" y1=\"50\" x2=\"" << f(X(s.B))
       << "\" y2=\"50\" stroke=\"black\" stroke-width=\"3\"/>\n";
    for (size_t i = 0; i < s.pairs.size(); i++)
    {
      const auto& p = s.pairs[i];
      const double y = 50 + row * static_cast<double>(i + 1);
      const std::string c = colour(i);
      for (const Interval* iv : {&p.left, &p.right})
        os << "<line x1=\"" << f(X(iv->lo)) << "\" y1=\"" << f(y) << "\" x2=\"" << f(X(iv->hi)) << "\" y2=\"" << f(y)
           << "\" stroke=\"" << c << "\" stroke-width=\"8\"/>\n";
      // the translation taking one member to the other
      os << "<path d=\"M " << f((X(p.left.lo) + X(p.left.hi)) / 2) << " " << f(y - 4) << " Q "
         << f((X(p.left.lo) + X(p.right.hi)) / 2) << " " << f(y - 30) << " "
         << f((X(p.right.lo) + X(p.right.hi)) / 2) << " " << f(y - 4) << "\" fill=\"none\" stroke=\"" << c
         << "\" stroke-dasharray=\"4 3\"/>\n";
      os << "<text x=\"" << f(margin - 30) << "\" y=\"" << f(y + 4)
         << "\" font-family=\"sans-serif\" font-size=\"12\">" << (i + 1) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
  }

  std::string band_complex(const BandComplex& X, const std::string& title)
  {
    const double W = 800, H = 320, margin = 40, low = 260, high = 70;
    if (X.arcs.empty())
    {
      std::ostringstream os;
      header(os, W, H, title);
      os << "</svg>\n";
      return os.str();
    }
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& a : X.arcs)
    {
      lo = std::min(lo, to_double(a.lo));
      hi = std::max(hi, to_double(a.hi));
    }
    auto px = [&](double x) { return margin + (x - lo) / (hi - lo) * (W - 2 * margin); };
    std::ostringstream os;
    header(os, W, H, title);
    for (size_t i = 0; i < X.bands.size(); i++)
    {
      const Band& b = X.bands[i];
      const double w = to_double(b.width), x0 = to_double(b.bottom), x1 = to_double(b.top);
      os << "<polygon points=\"" << f(px(x0)) << "," << f(low) << " " << f(px(x0 + w)) << "," << f(low) << " "
         << f(px(x1 + w)) << "," << f(high) << " " << f(px(x1)) << "," << f(high) << "\" fill=\"" << colour(i)
         << "\" fill-opacity=\"0.45\" stroke=\"" << colour(i) << "\"/>\n";
      std::string label = b.name.empty() ? "b" + std::to_string(b.id) : b.name;
      os << "<text x=\"" << f(px((x0 + x1) / 2 + w / 2)) << "\" y=\"" << f((low + high) / 2)
         << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << escape(label) << " ("
         << to_string(b.length) << ")</text>\n";
    }
    for (const auto& a : X.arcs)
      for (double y : {low, high})
        os << "<line x1=\"" << f(px(to_double(a.lo))) << "\" y1=\"" << f(y) << "\" x2=\"" << f(px(to_double(a.hi)))
           << "\" y2=\"" << f(y) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    os << "</svg>\n";
    return os.str();
  }

  std::string section(const std::vector<SectionComponent>& comps, double R, const std::string& title)
  {
    const double S = 700, margin = 30;
    auto px = [&](double x) { return margin + (x + R) / (2 * R) * S; };
    auto pz = [&](double z) { return margin + (R - z) / (2 * R) * S; };
    std::ostringstream os;
    header(os, S + 2 * margin, S + 2 * margin, title);
    const long k = static_cast<long>(std::floor(R));
    for (long i = -k; i <= k; i++)
    {
      const double t = static_cast<double>(i);
      os << "<line x1=\"" << f(px(t)) << "\" y1=\"" << f(pz(-R)) << "\" x2=\"" << f(px(t)) << "\" y2=\"" << f(pz(R))
         << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
      os << "<line x1=\"" << f(px(-R)) << "\" y1=\"" << f(pz(t)) << "\" x2=\"" << f(px(R)) << "\" y2=\"" << f(pz(t))
         << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    }
    os << "<rect x=\"" << f(px(-R)) << "\" y=\"" << f(pz(R)) << "\" width=\"" << f(S) << "\" height=\"" << f(S)
       << "\" fill=\"none\" stroke=\"#999999\"/>\n";
    for (const auto& c : comps)
    {
      const char* stroke = c.window_class == WindowClass::Spanning ? "black" : "#555555";
      for (const auto& pl : c.polylines)
      {
        os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2.2\" stroke-linejoin=\"round\" points=\"";
        for (const auto& p : pl) os << f(px(p.x1)) << "," << f(pz(p.x3)) << " ";
        os << "\"/>\n";
      }
    }
    os << "</svg>\n";
    return os.str();
  }
}
