#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tempdual/analyzer.hpp"
#include "tempdual/catalog.hpp"
#include "tempdual/census.hpp"
#include "tempdual/finrep.hpp"
#include "tempdual/scenario_io.hpp"

namespace tempdual::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kValidation = 2, kConsistency = 3, kCensusRefused = 4 };

struct Options {
  std::string path;
  std::string format = "text";
  std::optional<std::int64_t> resolution;
  std::string chi;
  bool verify = false;
  bool timing = false;
};

// ------------------------------------------------------------ rendering

inline Json subgroup_json(const Subgroup& g) { return Json{{"order", g.order()}, {"generators", g.generator_words()}}; }

inline Json twist_json(const Twist& x) {
  Json out = Json::array();
  for (const auto& a : x.angles) out.push_back(to_string(a));
  return out;
}

inline Json point_json(const Model& model, const SigmaPoint& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks) out.push_back(model.block_text(b));
  return out;
}

inline Json roots_json(const std::vector<RootLabel>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}

inline Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

inline Json knapp_stein_json(const KnappSteinData& d) {
  return Json{{"stabilizer", subgroup_json(d.w_stab)},
              {"relevant_roots", roots_json(d.relevant_roots)},
              {"w_prime", subgroup_json(d.w_prime)},
              {"r_group", subgroup_json(d.r_group)},
              {"decomposition_ok", d.decomposition_ok}};
}

inline Json orbits_json(const std::vector<OrbitInfo>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) {
    Json entry{{"members", one_based(o.members)}, {"type", to_string(o.type)}, {"base", o.base + 1}};
    if (o.type == OrbitType::Mixed) {
      entry["per"] = one_based(o.per);
      entry["flip"] = one_based(o.flip);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

inline Json witness_json(const Witness& w) {
  return Json{{"chi", twist_json(w.chi)},
              {"proof_case", w.proof_case},
              {"orbit_base", w.orbit_base + 1},
              {"r_order", {w.r_before, w.r_after}},
              {"w_prime_order", {w.wprime_before, w.wprime_after}},
              {"validated", w.validated()}};
}

inline Json classification_json(const Classification& c) {
  Json orbits = Json::array();
  for (const auto& [orbit, rel] : c.per_orbit) {
    orbits.push_back({{"base", orbit.base + 1},
                      {"status", to_string(rel.status)},
                      {"weakly_relevant", rel.weakly},
                      {"super_relevant", rel.super},
                      {"relevant", rel.relevant}});
  }
  Json out{{"verdict", to_string(c.verdict)}, {"orbits", std::move(orbits)}};
  if (c.witness) out["witness"] = witness_json(*c.witness);
  return out;
}

inline Json census_json(const CensusTable& t) {
  Json strata = Json::array();
  for (const auto& s : t.strata) {
    strata.push_back({{"r_group", subgroup_json(s.r_group)}, {"orbits", s.orbits}, {"grid_points", s.points}});
  }
  Json histogram = Json::object();
  for (const auto& [count, points] : t.constituent_histogram) histogram[std::to_string(count)] = points;
  return Json{{"resolution", t.resolution},
              {"grid_points", t.grid_points},
              {"quotient_points", t.orbit_count()},
              {"strata", std::move(strata)},
              {"constituent_histogram", std::move(histogram)},
              {"total_spectrum_points", t.total_spectrum_points}};
}

inline bool is_scalar_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

inline std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void render_text(const Json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_primitive()) {
        out << pad << key << ": " << scalar_text(value) << "\n";
      } else if (is_scalar_array(value)) {
        out << pad << key << ": [";
        for (std::size_t k = 0; k < value.size(); ++k) out << (k ? ", " : "") << scalar_text(value[k]);
        out << "]\n";
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_primitive() || is_scalar_array(e)) {
        out << pad << "- " << (e.is_primitive() ? scalar_text(e) : e.dump()) << "\n";
      } else {
        out << pad << "-\n";
        render_text(e, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

inline void emit(const Json& report, const Options& opt, std::ostream& out) {
  if (opt.format == "structured") {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out, 0);
  }
}

// ------------------------------------------------------------ commands

inline Json header(const std::string& command, const Options& opt, const Scenario& s) {
  return Json{{"command", command}, {"scenario", std::filesystem::path(opt.path).filename().string()},
              {"digest", io::digest(s)}};
}

inline std::int64_t effective_resolution(const Model& model, const Options& opt, Json& notices) {
  const std::int64_t base = default_resolution(model);
  if (!opt.resolution) return base;
  if (*opt.resolution <= 0) throw InputError("--resolution must be positive");
  const std::int64_t L = lcm_of(base, *opt.resolution);
  if (L != *opt.resolution) {
    notices.push_back("resolution raised from " + std::to_string(*opt.resolution) + " to " + std::to_string(L) +
                      " (must be a multiple of lcm(2m_i) = " + std::to_string(base) + ")");
  }
  return L;
}

inline Twist parse_chi(const std::string& text, std::size_t r) {
  Twist x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) x.angles.push_back(reduce_mod(parse_rational(item), 1));
  }
  if (x.angles.size() != r) {
    throw InputError("--chi needs " + std::to_string(r) + " angles, got " + std::to_string(x.angles.size()));
  }
  return x;
}

// Full analysis of one scenario; throws on inconsistency.
inline Json analyze_report(const Model& model, std::int64_t L, bool verify) {
  Json out;
  const SigmaPoint& p = model.base_point();
  out["group"] = {{"kind", to_string(model.kind())}, {"n", model.n()}, {"block_sizes", model.levi().block_sizes},
                  {"q", model.q()}, {"tilde", to_string(model.tau().tilde)}};
  out["orbits"] = orbits_json(orbit_partition(model, p));
  const Subgroup wt = w_theta(model, p);
  out["w_theta"] = subgroup_json(wt);
  if (verify) {
    if (!(w_theta_bruteforce(model, p) == wt)) throw ConsistencyError("W_Θ generators disagree with the brute-force scan");
    out["w_theta"]["oracle"] = "agrees";
  }
  const FixedPoint fp = find_fixed_point(model, p);
  out["fixed_point"] = {{"twist", twist_json(fp.twist)}, {"point", point_json(model, fp.point)}};
  out["knapp_stein"] = knapp_stein_json(knapp_stein(model, fp.point, wt));
  const Classification cls = classify(model, fp.point, wt);
  out["classification"] = classification_json(cls);
  const InclusionReport inc = verify_inclusions(model, fp.point, L, wt);
  Json violations = Json::array();
  for (const auto& v : inc.violations) {
    violations.push_back({{"chi", twist_json(v.chi)}, {"w_prime_contained", v.wprime_contained},
                          {"r_contained", v.r_contained}});
  }
  out["inclusions"] = {{"resolution", inc.resolution}, {"grid_points", inc.points}, {"violations", violations}};
  if ((cls.verdict == Verdict::Good) != inc.violations.empty()) {
    throw ConsistencyError("inclusion scan contradicts the Good/Bad verdict");
  }
  if (verify) {
    if (cls.verdict == Verdict::Bad && !good_grid_twists(model, fp.point, L, wt).empty()) {
      throw ConsistencyError("a grid twist of a Bad fixed point classifies as Good");
    }
    out["classification"]["grid_recheck"] = "no Good twist on the grid";
  }
  return out;
}

inline int guarded(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err,
                   const std::function<int(Json&)>& body) {
  Json report{{"command", command}};
  try {
    return body(report);
  } catch (const ValidationFailed& e) {
    Json v = Json::array();
    for (const auto& violation : e.violations()) v.push_back({{"code", violation.code}, {"message", violation.message}});
    report["status"] = "invalid";
    report["violations"] = v;
    emit(report, opt, out);
    return kValidation;
  } catch (const InputError& e) {
    report["status"] = "invalid";
    report["violations"] = Json::array({Json{{"code", "parse"}, {"message", e.what()}}});
    emit(report, opt, out);
    return kValidation;
  } catch (const Error& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kConsistency;
  }
}

inline int cmd_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded("analyze", opt, out, err, [&](Json& report) {
    const auto start = std::chrono::steady_clock::now();
    const Scenario s = io::load_scenario(opt.path);
    const Model model = Model::build(s);
    report = header("analyze", opt, s);
    Json notices = Json::array();
    const std::int64_t L = effective_resolution(model, opt, notices);
    Json body = analyze_report(model, L, opt.verify);
    if (!notices.empty()) report["notices"] = notices;
    report.update(body);
    if (opt.timing) {
      report["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    emit(report, opt, out);
    return kOk;
  });
}

inline int cmd_rgroup(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded("rgroup", opt, out, err, [&](Json& report) {
    const Scenario s = io::load_scenario(opt.path);
    const Model model = Model::build(s);
    const Twist chi = opt.chi.empty() ? zero_twist(model.rank()) : parse_chi(opt.chi, model.rank());
    report = header("rgroup", opt, s);
    report["chi"] = twist_json(chi);
    const SigmaPoint tau = model.twist_apply(model.base_point(), chi);
    report["point"] = point_json(model, tau);
    report["knapp_stein"] = knapp_stein_json(knapp_stein(model, tau, w_theta(model)));
    emit(report, opt, out);
    return kOk;
  });
}

inline int cmd_fixed_point(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded("fixed-point", opt, out, err, [&](Json& report) {
    const Scenario s = io::load_scenario(opt.path);
    const Model model = Model::build(s);
    const FixedPoint fp = find_fixed_point(model, model.base_point());
    report = header("fixed-point", opt, s);
    report["orbits"] = orbits_json(orbit_partition(model, model.base_point()));
    report["twist"] = twist_json(fp.twist);
    report["point"] = point_json(model, fp.point);
    report["w_theta"] = subgroup_json(w_theta(model));
    emit(report, opt, out);
    return kOk;
  });
}

inline int cmd_census(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded("census", opt, out, err, [&](Json& report) {
    const Scenario s = io::load_scenario(opt.path);
    const Model model = Model::build(s);
    report = header("census", opt, s);
    Json notices = Json::array();
    const std::int64_t L = effective_resolution(model, opt, notices);
    if (!notices.empty()) report["notices"] = notices;
    const Subgroup wt = w_theta(model);
    const FixedPoint fp = find_fixed_point(model, model.base_point());
    const Classification cls = classify(model, fp.point, wt);
    report["fixed_point"] = point_json(model, fp.point);
    report["verdict"] = to_string(cls.verdict);
    if (cls.verdict == Verdict::Bad) {
      report["refused"] =
          "the fixed point is Bad: some weakly relevant orbit is not a super-relevant singleton, so the "
          "component is not described by an extended quotient of this form";
      if (cls.witness) report["witness"] = witness_json(*cls.witness);
      emit(report, opt, out);
      return kCensusRefused;
    }
    report["census"] = census_json(census(model, fp.point, L, wt));
    emit(report, opt, out);
    return kOk;
  });
}

inline int cmd_batch(const Options& opt, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(opt.path, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) {
    err << "cannot read directory '" << opt.path << "'\n";
    return kValidation;
  }
  std::sort(files.begin(), files.end());
  int code = kOk;
  Json rows = Json::array();
  std::size_t good = 0;
  std::size_t bad = 0;
  std::size_t invalid = 0;
  for (const auto& file : files) {
    Json row{{"scenario", file.filename().string()}};
    try {
      const Scenario s = io::load_scenario(file.string());
      const Model model = Model::build(s);
      const Json full = analyze_report(model, default_resolution(model), opt.verify);
      row["digest"] = io::digest(s);
      row["verdict"] = full["classification"]["verdict"];
      row["w_theta"] = full["w_theta"]["order"];
      row["w_prime"] = full["knapp_stein"]["w_prime"]["order"];
      row["r_group"] = full["knapp_stein"]["r_group"]["order"];
      row["witness"] = full["classification"].contains("witness");
      (row["verdict"] == "Good" ? good : bad) += 1;
    } catch (const ValidationFailed& e) {
      row["verdict"] = "invalid";
      row["violation"] = e.violations().front().code;
      ++invalid;
      code = std::max(code, static_cast<int>(kValidation));
    } catch (const InputError& e) {
      row["verdict"] = "invalid";
      row["violation"] = "parse";
      ++invalid;
      code = std::max(code, static_cast<int>(kValidation));
    } catch (const Error& e) {
      row["verdict"] = "error";
      row["message"] = e.what();
      code = kConsistency;
    }
    rows.push_back(std::move(row));
  }
  Json report{{"command", "batch"},
              {"directory", fs::path(opt.path).filename().string()},
              {"summary", {{"scenarios", files.size()}, {"good", good}, {"bad", bad}, {"invalid", invalid}}},
              {"results", rows}};
  if (opt.format == "structured") {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      out << row["scenario"].get<std::string>() << "  " << row["verdict"].get<std::string>();
      if (row.contains("w_theta")) {
        out << "  |W_theta|=" << row["w_theta"].dump() << " |W'|=" << row["w_prime"].dump()
            << " |R|=" << row["r_group"].dump() << " witness=" << (row["witness"].get<bool>() ? "yes" : "no");
      }
      if (row.contains("violation")) out << "  " << row["violation"].get<std::string>();
      out << "\n";
    }
    out << "total " << files.size() << ": " << good << " Good, " << bad << " Bad, " << invalid << " invalid\n";
  }
  return code;
}

inline int cmd_selfcheck(const Options& opt, std::ostream& out, std::ostream&) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks;
  checks.emplace_back("iwahori-sp4", [] {
    const Model m = Model::build(catalog::iwahori_sp4());
    const Subgroup wt = w_theta(m);
    const Twist chi{{Rational(1, 2), Rational(0)}};
    return knapp_stein(m, m.base_point(), wt).r_group.order() == 1 &&
           knapp_stein(m, m.twist_apply(m.base_point(), chi), wt).r_group.order() == 2 &&
           classify(m, m.base_point(), wt).verdict == Verdict::Bad;
  });
  checks.emplace_back("intro-sp8", [] {
    const Model m = Model::build(catalog::intro_sp8());
    const Subgroup wt = w_theta(m);
    const KnappSteinData d = knapp_stein(m, m.base_point(), wt);
    return d.r_group.order() == 4 && d.w_prime.order() == 2 &&
           classify(m, m.base_point(), wt).verdict == Verdict::Good &&
           verify_inclusions(m, m.base_point(), 2, wt).violations.empty();
  });
  checks.emplace_back("w-theta-oracle", [] {
    for (const auto& s : {catalog::iwahori_sp4(), catalog::intro_sp8(), catalog::mixed_pair(),
                          catalog::so10_mixed_parity()}) {
      const Model m = Model::build(s);
      if (!(w_theta(m) == w_theta_bruteforce(m, m.base_point()))) return false;
    }
    return true;
  });
  checks.emplace_back("census-singleton", [] {
    const Model m = Model::build(catalog::super_singleton());
    const CensusTable t = census(m, m.base_point(), 4, w_theta(m));
    return t.total_spectrum_points == 5 && t.orbit_count() == 3;
  });
  checks.emplace_back("finrep-order-8", [] {
    const auto g = finrep::FiniteGroup::elementary_abelian(2);
    const auto eta = finrep::bilinear_cocycle({{0, 1}, {0, 0}});
    const auto chars = finrep::elementary_extension_characters(2, eta);
    return !finrep::is_coboundary(g, eta).splitting && chars.extension.group.order() == 8 &&
           chars.genuine_count() == 1;
  });
  bool all = true;
  Json results = Json::object();
  for (const auto& [name, check] : checks) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception&) {
      ok = false;
    }
    all = all && ok;
    results[name] = ok ? "pass" : "fail";
  }
  emit(Json{{"command", "selfcheck"}, {"checks", results}, {"status", all ? "pass" : "fail"}}, opt, out);
  return all ? kOk : kConsistency;
}

// ------------------------------------------------------------ dispatch

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Components of the tempered dual of p-adic classical groups"};
  app.require_subcommand(1);
  Options opt;
  const auto add_common = [&](CLI::App* sub, bool needs_path) {
    if (needs_path) sub->add_option("path", opt.path, "scenario file or directory")->required();
    sub->add_option("--format", opt.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--verify", opt.verify, "enable brute-force oracles");
    sub->add_flag("--timing", opt.timing, "include wall-clock timing (breaks byte-identical output)");
  };
  auto* analyze = app.add_subcommand("analyze", "full component analysis");
  add_common(analyze, true);
  analyze->add_option("--resolution", opt.resolution, "grid resolution L");
  auto* rgroup = app.add_subcommand("rgroup", "Knapp-Stein data at a twist of sigma");
  add_common(rgroup, true);
  rgroup->add_option("--chi", opt.chi, "comma-separated angles p/q, one per GL block");
  auto* fixed = app.add_subcommand("fixed-point", "construct a W_Theta-fixed twist");
  add_common(fixed, true);
  auto* cens = app.add_subcommand("census", "extended-quotient census of a Good component");
  add_common(cens, true);
  cens->add_option("--resolution", opt.resolution, "grid resolution L");
  auto* batch = app.add_subcommand("batch", "analyze every *.json scenario in a directory");
  add_common(batch, true);
  auto* self = app.add_subcommand("selfcheck", "run built-in reference checks");
  add_common(self, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kValidation;
  }
  if (analyze->parsed()) return cmd_analyze(opt, out, err);
  if (rgroup->parsed()) return cmd_rgroup(opt, out, err);
  if (fixed->parsed()) return cmd_fixed_point(opt, out, err);
  if (cens->parsed()) return cmd_census(opt, out, err);
  if (batch->parsed()) return cmd_batch(opt, out, err);
  return cmd_selfcheck(opt, out, err);
}

}  // namespace tempdual::cli
