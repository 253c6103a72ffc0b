// Command line front end: regression table, induction runners, plane sections.
//
// Exit codes: 0 success, 1 a verification row failed, 2 internal or input
// error, 3 the run stopped early (no admissible move, machine halted).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "thinsec/cycle.hpp"
#include "thinsec/json_io.hpp"
#include "thinsec/section.hpp"
#include "thinsec/surface.hpp"
#include "thinsec/svg.hpp"
#include "thinsec/verify.hpp"

namespace fs = std::filesystem;
using namespace thinsec;
using thinsec::json::Json;

namespace
{
  constexpr int kExitFail = 1;
  constexpr int kExitError = 2;
  constexpr int kExitStopped = 3;

  struct VerifyArgs
  {
    std::string scope = "all";
    bool as_json = false;
    std::string n1, n2;
  };

  struct RunArgs
  {
    std::string kind;
    std::string system = "s1";
    int steps = 12;
    std::string side = "right";
    std::string emit_json, svg_dir;
  };

  struct SectionArgs
  {
    int example = 1;
    int levels = 0;
    std::vector<double> level;
    double radius = 20;
    std::uint64_t seed = 7;
    std::string svg, json;
  };

  void write_text(const fs::path& p, const std::string& s)
  {
    std::ofstream out(p);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + p.string());
    out << s;
  }

  std::string padded(int i)
  {
    std::ostringstream os;
    os << std::setw(3) << std::setfill('0') << i;
    return os.str();
  }

  int cmd_verify(const VerifyArgs& a)
  {
    VerifyOptions opt;
    if (!a.n1.empty()) opt.N1 = json::matrix_from(json::read_file(a.n1));
    if (!a.n2.empty()) opt.N2 = json::matrix_from(json::read_file(a.n2));
    auto rows = run_verification(a.scope, opt);
    if (a.as_json)
      std::cout << json::rows(rows).dump(2) << "\n";
    else
      std::cout << format_rows(rows);
    return all_passed(rows) ? 0 : kExitFail;
  }

  // a system name or the path of an IIS file
  IIS load_system(const std::string& s)
  {
    if (s == "s1") return build_system(SystemId::S1);
    if (s == "s2") return build_system(SystemId::S2);
    return json::iis_from(json::read_file(s));
  }

  int cmd_run_rauzy(const RunArgs& a)
  {
    IIS s = load_system(a.system);
    const IIS start = s;
    std::vector<Move> log;
    int code = 0;
    auto emit = [&](int step) {
      if (!a.emit_json.empty()) json::write_file((fs::path(a.emit_json) / ("step_" + padded(step) + ".json")).string(), json::iis(s));
      if (!a.svg_dir.empty())
        write_text(fs::path(a.svg_dir) / ("step_" + padded(step) + ".svg"), svg::iis(s, "step " + std::to_string(step)));
    };
    emit(0);
    for (int i = 1; i <= a.steps; i++)
    {
      Side side = a.side == "left" ? Side::Left
                  : a.side == "right" ? Side::Right
                                      : (i % 2 == 1 ? Side::Right : Side::Left);
      try
      {
        RauzyStep st = rauzy_step(s, side);
        log.insert(log.end(), st.moves.begin(), st.moves.end());
        s = std::move(st.system);
      }
      catch (const Error& e)
      {
        std::cerr << "step " << i << ": " << e.what() << "\n";
        code = kExitStopped;
        break;
      }
      emit(i);
    }
    std::cout << "move log: " << json::moves(log).dump() << "\n";
    Policy policy = a.side == "left" ? Policy::Left : a.side == "right" ? Policy::Right : Policy::Alternating;
    if (a.steps == 0)
      return code;
    if (auto rep = detect_self_similarity(start, a.steps, policy))
    {
      std::cout << "self-similar: period " << rep->period << ", contraction " << to_string(rep->contraction) << " ~ "
                << to_double(rep->contraction) << "\n";
      std::cout << json::similarity(*rep).dump(2) << "\n";
      if (!a.emit_json.empty()) json::write_file((fs::path(a.emit_json) / "similarity.json").string(), json::similarity(*rep));
    }
    else
      std::cout << "no self-similarity within " << a.steps << " steps\n";
    return code;
  }

  int cmd_run_rips(const RunArgs& a)
  {
    BandComplex X;
    if (a.system == "s1" || a.system == "s2")
      X = complex_from_iis(load_system(a.system));
    else
    {
      Json j = json::read_file(a.system);
      X = j.contains("arcs") ? json::band_complex_from(j) : complex_from_iis(json::iis_from(j));
    }
    const BandComplex start = X;
    int code = 0;
    auto emit = [&](int step) {
      if (!a.emit_json.empty())
        json::write_file((fs::path(a.emit_json) / ("step_" + padded(step) + ".json")).string(), json::band_complex(X));
      if (!a.svg_dir.empty())
        write_text(fs::path(a.svg_dir) / ("step_" + padded(step) + ".svg"), svg::band_complex(X, "step " + std::to_string(step)));
    };
    emit(0);
    Json log = Json::array();
    for (int i = 1; i <= a.steps; i++)
    {
      try
      {
        auto r = rips_step(X, RipsPolicy::Sweep);
        for (auto& m : json::rips_moves(r.moves)) log.push_back(m);
        X = std::move(r.complex);
      }
      catch (const Error& e)
      {
        std::cerr << "step " << i << ": " << e.what() << "\n";
        code = kExitStopped;
        break;
      }
      emit(i);
    }
    std::cout << "move log: " << log.dump() << "\n";
    if (code == 0 && a.steps > 0)
    {
      if (auto rep = detect_rips_cycle(start, a.steps))
      {
        EndCriterion ec = one_end_criterion(*rep);
        std::cout << "cycle: prefix " << rep->prefix_steps << ", period " << rep->period_steps << ", contraction "
                  << to_string(rep->contraction) << " ~ " << to_double(rep->contraction) << "\n";
        std::cout << "contraction x mu in [" << to_double(ec.product.lo) << ", " << to_double(ec.product.hi) << "]"
                  << (ec.holds ? " < 1" : " not certified below 1") << "\n";
        Json c = json::cycle(*rep);
        std::cout << json::Json{{"width_matrix", c["width_matrix"]}, {"length_matrix", c["length_matrix"]}}.dump() << "\n";
        if (!a.emit_json.empty()) json::write_file((fs::path(a.emit_json) / "cycle.json").string(), c);
      }
      else
        std::cout << "no cycle within " << a.steps << " steps\n";
    }
    return code;
  }

  int cmd_run(const RunArgs& a)
  {
    for (const std::string& d : {a.emit_json, a.svg_dir})
      if (!d.empty()) fs::create_directories(d);
    return a.kind == "rauzy" ? cmd_run_rauzy(a) : cmd_run_rips(a);
  }

  int cmd_section(const SectionArgs& a)
  {
    const double eps = default_eps();
    PLSurface S = build_surface(a.example);
    std::vector<double> levels = a.level.empty() ? random_levels(S, a.levels, a.seed, eps) : a.level;
    std::map<int, int> histogram;
    Json per_level = Json::array();
    int traced = 0, one = 0, skipped = 0;
    bool drawn = false;
    std::cout << "example " << a.example << ", radius " << a.radius << ", seed " << a.seed << ", eps " << eps << "\n";
    for (double y : levels)
    {
      try
      {
        auto comps = trace_section(S, y, a.radius, eps);
        Census c = component_census(comps, a.radius);
        histogram[c.spanning]++;
        traced++;
        one += c.spanning == 1;
        std::cout << std::setprecision(12) << "level " << y << ": spanning " << c.spanning << ", boundary-clipped "
                  << c.clipped << ", closed " << c.closed << ", diameter >= R " << c.long_components << "\n";
        Json entry = {{"level", y}, {"census", json::census(c)}};
        if (!a.json.empty()) entry["components"] = json::components(comps);
        per_level.push_back(entry);
        if (!a.svg.empty() && !drawn)
        {
          std::ostringstream t;
          t << "x2 = " << std::setprecision(6) << y << ", R = " << a.radius;
          write_text(a.svg, svg::section(comps, a.radius, t.str()));
          drawn = true;
        }
      }
      catch (const Error& e)
      {
        if (e.kind() != ErrorKind::NearSaddle) throw;
        skipped++;
        std::cout << std::setprecision(12) << "level " << y << ": skipped (NearSaddle)\n";
        per_level.push_back({{"level", y}, {"skipped", "NearSaddle"}});
      }
    }
    Json hist = Json::object();
    for (auto [k, n] : histogram) hist[std::to_string(k)] = n;
    const double fraction = traced ? static_cast<double>(one) / traced : 0.0;
    std::cout << "spanning histogram " << hist.dump() << ", fraction with exactly one " << fraction << ", skipped "
              << skipped << "\n";
    if (!a.json.empty())
      json::write_file(a.json, {{"example", a.example},
                                {"radius", a.radius},
                                {"seed", a.seed},
                                {"eps", eps},
                                {"levels", per_level},
                                {"spanning_histogram", hist},
                                {"fraction_one_spanning", fraction},
                                {"skipped", skipped}});
    return 0;
  }
}

int main(int argc, char** argv)
{
  CLI::App app{"Thin interval systems, band complexes and sections of periodic surfaces"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "compare every published number with the exact computation");
  verify->add_option("--scope", va.scope, "all, s1, s2 or surface")->check(CLI::IsMember({"all", "s1", "s2", "surface"}));
  verify->add_flag("--json", va.as_json, "print the rows as JSON");
  verify->add_option("--matrix-n1", va.n1, "replace N1 by the matrix in this JSON file");
  verify->add_option("--matrix-n2", va.n2, "replace N2 by the matrix in this JSON file");

  RunArgs ra;
  auto* run = app.add_subcommand("run", "run Rauzy induction or the Rips machine");
  run->add_option("kind", ra.kind, "rauzy or rips")->required()->check(CLI::IsMember({"rauzy", "rips"}));
  run->add_option("--system", ra.system, "s1, s2 or a JSON file");
  run->add_option("--steps", ra.steps, "number of steps")->check(CLI::NonNegativeNumber);
  run->add_option("--side", ra.side, "Rauzy side: right, left or alternating")
    ->check(CLI::IsMember({"right", "left", "alternating"}));
  run->add_option("--emit-json", ra.emit_json, "directory for per-step JSON states");
  run->add_option("--svg", ra.svg_dir, "directory for per-step SVG frames");

  SectionArgs sa;
  auto* section = app.add_subcommand("section", "trace plane sections x2 = level of the surface");
  section->add_option("--example", sa.example, "1 or 2")->check(CLI::IsMember({1, 2}));
  auto* n_levels = section->add_option("--levels", sa.levels, "number of random levels")->check(CLI::PositiveNumber);
  auto* explicit_levels = section->add_option("--level", sa.level, "explicit levels")->delimiter(',');
  n_levels->excludes(explicit_levels);
  section->add_option("--radius", sa.radius, "half side of the window")->required();
  section->add_option("--seed", sa.seed, "seed of the random levels");
  section->add_option("--svg", sa.svg, "SVG picture of the first traced level");
  section->add_option("--json", sa.json, "census and components as JSON");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try
  {
    if (*verify) return cmd_verify(va);
    if (*run) return cmd_run(ra);
    if (*section)
    {
      if (!(sa.radius > 0)) throw Error(ErrorKind::EmptyWindow, "radius must be positive");
      if (sa.level.empty() && sa.levels == 0) sa.levels = 20;
      return cmd_section(sa);
    }
  }
  catch (const Error& e)
  {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
