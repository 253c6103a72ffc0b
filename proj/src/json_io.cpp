#include "thinsec/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace thinsec::json
{
  namespace
  {
    [[noreturn]] void bad(const std::string& what)
    {
      throw Error(ErrorKind::Parse, what);
    }

    const Json& at(const Json& j, const char* key)
    {
      if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
      return j.at(key);
    }

    FieldPtr field_of(const BandComplex& X)
    {
      for (const auto& a : X.arcs)
        if (a.lo.field()) return a.lo.field();
      for (const auto& b : X.bands)
        for (const FieldElement* x : {&b.bottom, &b.top, &b.width})
          if (x->field()) return x->field();
      return nullptr;
    }

    Json reals(const std::vector<FieldElement>& v)
    {
      Json out = Json::array();
      for (const auto& x : v) out.push_back(to_double(x));
      return out;
    }
  }

  Json rational(const Rational& q)
  {
    return to_string(q);
  }

  Rational rational_from(const Json& j)
  {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    bad("expected a \"p/q\" string");
  }

  Json poly(const IntPoly& p)
  {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational(c));
    return out;
  }

  IntPoly poly_from(const Json& j)
  {
    if (!j.is_array()) bad("expected a coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from(x));
    return IntPoly(std::move(c));
  }

  Json matrix(const RatMatrix& m)
  {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++)
    {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < m.cols(); k++) row.push_back(rational(m(i, k)));
      out.push_back(row);
    }
    return out;
  }

  RatMatrix matrix_from(const Json& j)
  {
    if (!j.is_array() || j.empty() || !j[0].is_array()) bad("expected an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size()), cols = static_cast<Eigen::Index>(j[0].size());
    RatMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; i++)
    {
      const Json& row = j[static_cast<size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) bad("ragged matrix");
      for (Eigen::Index k = 0; k < cols; k++) m(i, k) = rational_from(row[static_cast<size_t>(k)]);
    }
    return m;
  }

  Json field(const FieldPtr& f)
  {
    const FieldPtr& g = f ? f : rational_field();
    return {{"modulus", poly(g->modulus())},
            {"root_interval", {rational(g->root_interval().lo), rational(g->root_interval().hi)}}};
  }

  FieldPtr field_from(const Json& j)
  {
    IntPoly m = poly_from(at(j, "modulus"));
    const Json& iv = at(j, "root_interval");
    if (!iv.is_array() || iv.size() != 2) bad("root_interval must have two ends");
    if (m.degree() == 1) return nullptr;
    return field_new(m, RatInterval{rational_from(iv[0]), rational_from(iv[1])});
  }

  Json element(const FieldElement& x)
  {
    Json j = field(x.field());
    j["poly"] = poly(x.poly());
    return j;
  }

  FieldElement element_from(const Json& j)
  {
    return FieldElement(field_from(j), poly_from(at(j, "poly")));
  }

  Json coordinate(const FieldElement& x)
  {
    if (x.is_rational()) return rational(x.rational_value());
    return poly(x.poly());
  }

  FieldElement coordinate_from(const Json& j, const FieldPtr& f)
  {
    if (j.is_string() || j.is_number_integer()) return FieldElement(rational_from(j));
    IntPoly p = poly_from(j);
    if (p.degree() <= 0) return FieldElement(p.is_zero() ? Rational(0) : p.coeff(0));
    if (!f) bad("non-constant coordinate without a field");
    return FieldElement(f, std::move(p));
  }

  Json iis(const IIS& s)
  {
    Json pairs = Json::array();
    for (const auto& p : s.pairs)
      pairs.push_back({{"left", {coordinate(p.left.lo), coordinate(p.left.hi)}},
                       {"right", {coordinate(p.right.lo), coordinate(p.right.hi)}}});
    return {{"field", field(s.field)}, {"support", {coordinate(s.A), coordinate(s.B)}}, {"pairs", pairs}};
  }

  IIS iis_from(const Json& j)
  {
    FieldPtr f = field_from(at(j, "field"));
    const Json& sup = at(j, "support");
    if (!sup.is_array() || sup.size() != 2) bad("support must have two ends");
    auto interval = [&](const Json& x) {
      if (!x.is_array() || x.size() != 2) bad("interval must have two ends");
      return Interval{coordinate_from(x[0], f), coordinate_from(x[1], f)};
    };
    std::vector<IntervalPair> pairs;
    for (const auto& p : at(j, "pairs")) pairs.push_back({interval(at(p, "left")), interval(at(p, "right"))});
    return make_iis(f, coordinate_from(sup[0], f), coordinate_from(sup[1], f), std::move(pairs));
  }

  Json moves(const std::vector<Move>& log)
  {
    Json out = Json::array();
    for (const auto& m : log)
      out.push_back({{"move", m.kind == Move::Transmit ? "transmit" : "reduce"},
                     {"side", side_name(m.side)},
                     {"pair", m.pair}});
    return out;
  }

  Json similarity(const SimilarityReport& r)
  {
    Json sched = Json::array();
    for (Side s : r.schedule) sched.push_back(side_name(s));
    return {{"period", r.period},
            {"contraction", element(r.contraction)},
            {"contraction_value", to_double(r.contraction)},
            {"translation", element(r.translation)},
            {"schedule", sched},
            {"moves", moves(r.move_log)}};
  }

  Json band_complex(const BandComplex& X)
  {
    Json arcs = Json::array(), bands = Json::array();
    for (const auto& a : X.arcs) arcs.push_back({{"id", a.id}, {"lo", coordinate(a.lo)}, {"hi", coordinate(a.hi)}});
    for (const auto& b : X.bands)
    {
      Json jb = {{"id", b.id},
                 {"bottom", coordinate(b.bottom)},
                 {"top", coordinate(b.top)},
                 {"width", coordinate(b.width)},
                 {"length", rational(b.length)}};
      if (!b.name.empty()) jb["name"] = b.name;
      if (!b.length_form.empty())
      {
        Json lf = Json::array();
        for (const auto& q : b.length_form) lf.push_back(rational(q));
        jb["length_form"] = lf;
      }
      bands.push_back(jb);
    }
    return {{"field", field(field_of(X))},
            {"arcs", arcs},
            {"bands", bands},
            {"next_arc_id", X.next_arc_id},
            {"next_band_id", X.next_band_id}};
  }

  BandComplex band_complex_from(const Json& j)
  {
    FieldPtr f = field_from(at(j, "field"));
    BandComplex X;
    int max_arc = -1, max_band = -1;
    for (const auto& a : at(j, "arcs"))
    {
      SupportArc arc{at(a, "id").get<int>(), coordinate_from(at(a, "lo"), f), coordinate_from(at(a, "hi"), f)};
      if (!(arc.lo < arc.hi)) bad("arc " + std::to_string(arc.id) + " is empty");
      max_arc = std::max(max_arc, arc.id);
      X.arcs.push_back(std::move(arc));
    }
    for (const auto& b : at(j, "bands"))
    {
      Band band;
      band.id = at(b, "id").get<int>();
      band.bottom = coordinate_from(at(b, "bottom"), f);
      band.top = coordinate_from(at(b, "top"), f);
      band.width = coordinate_from(at(b, "width"), f);
      band.length = rational_from(at(b, "length"));
      if (b.contains("name")) band.name = b.at("name").get<std::string>();
      if (b.contains("length_form"))
        for (const auto& q : b.at("length_form")) band.length_form.push_back(rational_from(q));
      if (sign_of(band.width) <= 0) bad("band " + std::to_string(band.id) + " has non-positive width");
      // both bases must sit on a support arc
      for (const FieldElement* x : {&band.bottom, &band.top})
      {
        int ai = arc_containing(X, *x);
        if (ai < 0 || X.arcs[static_cast<size_t>(ai)].hi < *x + band.width)
          bad("band " + std::to_string(band.id) + " leaves the support");
      }
      max_band = std::max(max_band, band.id);
      X.bands.push_back(std::move(band));
    }
    X.next_arc_id = j.contains("next_arc_id") ? j.at("next_arc_id").get<int>() : max_arc + 1;
    X.next_band_id = j.contains("next_band_id") ? j.at("next_band_id").get<int>() : max_band + 1;
    return X;
  }

  Json rips_moves(const std::vector<RipsMove>& log)
  {
    Json out = Json::array();
    for (const auto& m : log)
    {
      Json jm = {{"move", m.kind}, {"arc", m.arc}, {"band", m.band}, {"side", m.side}};
      if (!m.note.empty()) jm["note"] = m.note;
      out.push_back(jm);
    }
    return out;
  }

  Json cycle(const CycleReport& r)
  {
    Json lengths = Json::array();
    for (const auto& q : r.lengths) lengths.push_back(rational(q));
    Json params = Json::array();
    for (size_t i = 0; i < r.parameters.size(); i++)
      params.push_back({{"name", r.parameter_names[i]}, {"value", coordinate(r.parameters[i])},
                        {"approx", to_double(r.parameters[i])}});
    Json widths = Json::array();
    for (const auto& w : r.widths) widths.push_back(coordinate(w));
    return {{"policy", policy_name(r.policy)},
            {"prefix_steps", r.prefix_steps},
            {"period_steps", r.period_steps},
            {"contraction", element(r.contraction)},
            {"contraction_value", to_double(r.contraction)},
            {"width_matrix", matrix(r.width_matrix)},
            {"length_matrix", matrix(r.length_matrix)},
            {"parameters", params},
            {"widths", widths},
            {"widths_approx", reals(r.widths)},
            {"lengths", lengths},
            {"start", band_complex(r.start)},
            {"end", band_complex(r.end)}};
  }

  Json components(const std::vector<SectionComponent>& comps)
  {
    Json out = Json::array();
    for (const auto& c : comps)
    {
      Json chains = Json::array();
      for (const auto& pl : c.polylines)
      {
        Json chain = Json::array();
        for (const auto& p : pl) chain.push_back({p.x1, p.x3});
        chains.push_back(chain);
      }
      out.push_back({{"class", window_class_name(c.window_class)},
                     {"touches", {{"left", c.touches[0]}, {"right", c.touches[1]},
                                  {"bottom", c.touches[2]}, {"top", c.touches[3]}}},
                     {"diameter", c.diameter},
                     {"segments", c.segments},
                     {"chains", chains}});
    }
    return out;
  }

  Json census(const Census& c)
  {
    return {{"spanning", c.spanning}, {"boundary_clipped", c.clipped}, {"closed", c.closed},
            {"long_components", c.long_components}};
  }

  Json pruning(const PruningResult& r)
  {
    return {{"surviving", r.surviving},
            {"decided", r.decided},
            {"depth_exhausted", r.exhausted},
            {"near_critical", r.near_critical}};
  }

  Json rows(const std::vector<VerificationRow>& rows)
  {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back({{"id", r.id},
                     {"claim", r.claim},
                     {"printed", r.printed},
                     {"computed", r.computed},
                     {"tolerance", r.tolerance},
                     {"status", row_status_name(r.status)}});
    return out;
  }

  Json read_file(const std::string& path)
  {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try
    {
      return Json::parse(in);
    }
    catch (const nlohmann::json::exception& e)
    {
      bad(path + ": " + e.what());
    }
  }

  void write_file(const std::string& path, const Json& j)
  {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
    out << j.dump(2) << "\n";
  }
}
