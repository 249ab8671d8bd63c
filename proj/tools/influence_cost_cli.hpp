#pragma once

// Command-line front end. `dispatch` takes the arguments after the program
// name and writes to the given streams, so it can be driven from tests.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "influence_cost/influence_cost.hpp"

namespace influence_cost::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitBudget = 3;

/// Default directory for emitted datasets when no --out is given.
inline constexpr const char* kOutputDirEnv = "INFLUENCE_COST_OUTPUT_DIR";

namespace detail {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::optional<std::filesystem::path> env_output_dir() {
  const char* dir = std::getenv(kOutputDirEnv);
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir);
}

inline void check_format(const std::string& format) {
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

inline Json metadata(const std::string& command, std::uint64_t seed, const std::string& format) {
  return Json{{"command", command}, {"seed", seed}, {"format", format}};
}

/// Emits to `out_path` when given, else to $INFLUENCE_COST_OUTPUT_DIR/default_name,
/// else to the output stream. Files get a sidecar <name>.meta.json.
inline void emit(const std::string& contents, const std::string& out_path, const std::string& default_name,
                 const Json& meta, std::ostream& out) {
  std::optional<std::filesystem::path> target;
  if (!out_path.empty()) target = out_path;
  else if (auto dir = env_output_dir()) target = *dir / default_name;
  if (!target) {
    out << contents;
    return;
  }
  write_file_atomically(*target, contents);
  auto meta_path = *target;
  meta_path += ".meta.json";
  write_file_atomically(meta_path, render(meta));
  out << target->string() << '\n';
}

}  // namespace detail

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::check_format;
  using detail::render;
  using detail::UsageError;

  CLI::App app{"Adversarial influence-concentration cost models", "influence-cost"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Recorded in output metadata; no operation is randomized");

  std::function<int()> action;

  // taxonomy
  std::string tax_format = "json";
  auto* tax = app.add_subcommand("taxonomy", "List the built-in resource taxonomy");
  tax->add_option("--format", tax_format, "csv|json");
  tax->callback([&] {
    action = [&] {
      check_format(tax_format);
      const auto presets = taxonomy_presets();
      out << (tax_format == "json" ? render(taxonomy_json(presets)) : taxonomy_csv(presets).str());
      return kExitOk;
    };
  });

  // classify
  std::string cls_spec, cls_format = "json";
  auto* cls = app.add_subcommand("classify", "Classify a preset or a JSON resource spec");
  cls->add_option("--spec", cls_spec, "Preset name or JSON file")->required();
  cls->add_option("--format", cls_format, "csv|json");
  cls->callback([&] {
    action = [&] {
      check_format(cls_format);
      const auto spec = resolve_resource(cls_spec);
      const auto c = classify(spec);
      if (cls_format == "json") {
        Json j = to_json(c);
        j["name"] = spec.name;
        out << render(j);
      } else {
        std::string reasons;
        for (const auto& r : c.reasons) reasons += (reasons.empty() ? "" : "; ") + r;
        CsvTable t({"name", "class", "reasons"});
        t.add_row({spec.name, std::string(to_string(c.resource_class)), reasons});
        out << t.str();
      }
      return kExitOk;
    };
  });

  // cost
  std::string cost_class, cost_coord = "zero", cost_format = "json";
  Count cost_s = 0, cost_T = 0;
  double cost_rmin = 1.0;
  std::optional<double> cost_rmin_t, cost_alpha;
  std::optional<Count> cost_k;
  auto* cost = app.add_subcommand("cost", "Evaluate a closed-form cost law");
  cost->add_option("--class", cost_class, "par|bnd|hybrid|partial|bounded-reuse")->required();
  cost->add_option("--s", cost_s, "Influence units")->required();
  cost->add_option("--T", cost_T, "Windows")->required();
  cost->add_option("--rmin", cost_rmin, "Activation threshold");
  cost->add_option("--rmin-t", cost_rmin_t, "Throughput component threshold for hybrid (default --rmin)");
  cost->add_option("--alpha", cost_alpha, "Transferable fraction (partial)");
  cost->add_option("--k", cost_k, "Reuse horizon in windows (bounded-reuse)");
  cost->add_option("--coord", cost_coord, "zero|linear");
  cost->add_option("--format", cost_format, "csv|json");
  cost->callback([&] {
    action = [&] {
      check_format(cost_format);
      const auto coord = coordination_from_name(cost_coord);
      CostReport report;
      std::optional<PartialTransferCost> partial;
      if (cost_class == "par") {
        report = cost_parallelizable(cost_s, cost_T, cost_rmin, coord);
      } else if (cost_class == "bnd") {
        report = cost_throughput_bounded(cost_s, cost_T, cost_rmin);
      } else if (cost_class == "hybrid") {
        report = cost_hybrid(cost_parallelizable(cost_s, cost_T, cost_rmin, coord),
                             cost_throughput_bounded(cost_s, cost_T, cost_rmin_t.value_or(cost_rmin)));
      } else if (cost_class == "partial") {
        if (!cost_alpha) throw UsageError("--class partial requires --alpha");
        partial = cost_partial_transferability(cost_s, cost_T, cost_rmin, *cost_alpha, coord);
        report = partial->report;
      } else if (cost_class == "bounded-reuse") {
        if (!cost_k) throw UsageError("--class bounded-reuse requires --k");
        report = cost_bounded_reuse(cost_s, cost_T, cost_rmin, *cost_k);
      } else {
        throw UsageError("unknown cost class '" + cost_class + "'");
      }
      if (cost_format == "json") {
        Json j = to_json(report);
        if (partial) {
          j["lower_bound"] = partial->lower_bound;
          j["model_cost"] = partial->model_cost;
        }
        out << render(j);
      } else {
        auto table = cost_report_csv({report});
        if (!partial) {
          out << table.str();
        } else {
          auto header = table.header();
          header.push_back("lower_bound");
          header.push_back("model_cost");
          CsvTable extended(header);
          auto row = table.rows().front();
          row.push_back(format_number(partial->lower_bound));
          row.push_back(format_number(partial->model_cost));
          extended.add_row(row);
          out << extended.str();
        }
      }
      return kExitOk;
    };
  });

  // crossover
  bool xo_table = false;
  std::optional<Count> xo_T;
  std::optional<double> xo_rmin;
  std::string xo_format = "csv";
  auto* xo = app.add_subcommand("crossover", "Crossover identity count s*");
  xo->add_flag("--table", xo_table, "Emit the full (T, r_min) table");
  xo->add_option("--T", xo_T, "Windows");
  xo->add_option("--rmin", xo_rmin, "Activation threshold");
  xo->add_option("--format", xo_format, "csv|json");
  xo->callback([&] {
    action = [&] {
      check_format(xo_format);
      if (xo_table) {
        const auto rows = crossover_table();
        out << (xo_format == "csv" ? crossover_csv(rows).str() : render(to_json(rows)));
        return kExitOk;
      }
      if (!xo_T || !xo_rmin) throw UsageError("crossover needs --table, or both --T and --rmin");
      const auto s_star = crossover(*xo_T, *xo_rmin);
      if (xo_format == "json") {
        out << render(Json{{"T", *xo_T}, {"r_min", *xo_rmin}, {"s_star", s_star ? Json(*s_star) : Json(nullptr)}});
      } else {
        CsvTable t({"T", "r_min", "s_star"});
        t.add_row({format_number(*xo_T), format_number(*xo_rmin), format_number(s_star)});
        out << t.str();
      }
      return kExitOk;
    };
  });

  // oracle
  std::string or_spec, or_coord = "zero", or_format = "json";
  Count or_s = 0, or_T = 0;
  std::optional<double> or_rmin, or_step;
  std::uint64_t or_ceiling = 10'000'000;
  auto* orc = app.add_subcommand("oracle", "Brute-force minimum cost on a small instance");
  orc->add_option("--spec", or_spec, "Preset name or JSON file")->required();
  orc->add_option("--s", or_s, "Influence units")->required();
  orc->add_option("--T", or_T, "Windows")->required();
  orc->add_option("--rmin", or_rmin, "Override the spec's activation threshold (tau scales along)");
  orc->add_option("--grid-step", or_step, "Allocation quantum (default r_min/2)");
  orc->add_option("--ceiling", or_ceiling, "Plan-count ceiling");
  orc->add_option("--coord", or_coord, "zero|linear");
  orc->add_option("--format", or_format, "csv|json");
  orc->callback([&] {
    action = [&] {
      check_format(or_format);
      auto spec = resolve_resource(or_spec);
      if (or_rmin) spec = with_r_min(spec, *or_rmin);
      auto sc = OracleScenario::make(spec, or_s, or_T, coordination_from_name(or_coord));
      const auto result = min_cost(sc, default_grid(sc, or_step, or_ceiling));
      const auto report = verify_bounds(result, sc);
      if (or_format == "json") {
        out << render(Json{{"scenario", {{"spec", to_json(sc.spec)}, {"s", sc.s}, {"T", sc.T}, {"coord", or_coord}}},
                           {"result", to_json(result)},
                           {"verification", to_json(report)}});
      } else {
        CsvTable t({"spec", "s", "T", "min_cost", "plans_examined", "verification"});
        t.add_row({sc.spec.name, format_number(sc.s), format_number(sc.T), format_number(result.min_cost),
                   format_number(result.plans_examined), report.passed() ? "pass" : "fail"});
        out << t.str();
      }
      return report.passed() ? kExitOk : kExitVerification;
    };
  });

  // simulate
  std::string sim_spec, sim_format = "csv";
  Count sim_m = 0, sim_s = 0, sim_n = 200, sim_T = 1;
  auto* sim = app.add_subcommand("simulate", "Window-by-window adversarial influence trace");
  sim->add_option("--spec", sim_spec, "Preset name or JSON file")->required();
  sim->add_option("--m", sim_m, "Adversarial channels");
  sim->add_option("--s", sim_s, "Adversarial identities")->required();
  sim->add_option("--n", sim_n, "Honest validators");
  sim->add_option("--T", sim_T, "Windows")->required();
  sim->add_option("--format", sim_format, "csv|json");
  sim->callback([&] {
    action = [&] {
      check_format(sim_format);
      const auto trace = run({sim_n, sim_m, sim_s, sim_T, resolve_resource(sim_spec)});
      out << (sim_format == "csv" ? sim_trace_csv(trace).str() : render(to_json(trace)));
      return kExitOk;
    };
  });

  // fig3
  std::string f3_out, f3_format = "csv";
  Count f3_n = 200;
  auto* f3 = app.add_subcommand("fig3", "Non-amplification dataset: share vs channel count");
  f3->add_option("--out", f3_out, "Output file");
  f3->add_option("--n", f3_n, "Honest validators");
  f3->add_option("--format", f3_format, "csv|json");
  f3->callback([&] {
    action = [&] {
      check_format(f3_format);
      const auto table = fig3_experiment(f3_n);
      for (const auto& w : table.warnings) err << "warning: " << w << '\n';
      const std::string body = f3_format == "csv" ? non_amplification_csv(table).str() : render(to_json(table));
      detail::emit(body, f3_out, "fig3." + f3_format, detail::metadata("fig3", seed, f3_format), out);
      return kExitOk;
    };
  });

  // calibrate
  std::string cal_which, cal_law = "both", cal_coord = "zero", cal_out, cal_format = "csv";
  auto* cal = app.add_subcommand("calibrate", "Write calibration figure panels");
  cal->add_option("scenario", cal_which, "eth|btc")->required();
  cal->add_option("--law", cal_law, "par|bnd|both");
  cal->add_option("--coord", cal_coord, "zero|linear");
  cal->add_option("--out", cal_out, "Output directory");
  cal->add_option("--format", cal_format, "csv|json");
  cal->callback([&] {
    action = [&] {
      check_format(cal_format);
      CalibrationScenario sc;
      if (cal_which == "eth") sc = eth_scenario();
      else if (cal_which == "btc") sc = btc_tiers();
      else throw UsageError("calibrate expects eth or btc");
      const auto series = run_calibration(sc, law_selector_from_name(cal_law), coordination_from_name(cal_coord));
      std::filesystem::path dir = cal_out.empty() ? detail::env_output_dir().value_or(".") : std::filesystem::path(cal_out);
      for (const auto& [stem, table] : calibration_panels(sc, series)) {
        std::string body;
        if (cal_format == "csv") {
          body = table.str();
        } else {
          Json rows = Json::array();
          for (const auto& row : table.rows()) {
            Json j;
            for (std::size_t i = 0; i < row.size(); ++i) j[table.header()[i]] = row[i];
            rows.push_back(std::move(j));
          }
          body = render(rows);
        }
        const auto path = dir / (stem + "." + cal_format);
        write_file_atomically(path, body);
        out << path.string() << '\n';
      }
      Json meta = detail::metadata("calibrate " + cal_which, seed, cal_format);
      meta["law"] = cal_law;
      meta["coord"] = cal_coord;
      meta["r_min"] = sc.r_min;
      meta["window_unit"] = sc.window_unit;
      write_file_atomically(dir / "metadata.json", render(meta));
      return kExitOk;
    };
  });

  // sweep
  std::string sw_preset, sw_out, sw_format = "csv";
  std::vector<Count> sw_s, sw_T;
  std::vector<double> sw_rmin;
  std::vector<std::string> sw_coord;
  unsigned sw_jobs = 1;
  auto* sw = app.add_subcommand("sweep", "Grid sweep over the closed-form laws");
  sw->add_option("--preset", sw_preset, "fig1|fig2");
  sw->add_option("--s", sw_s, "Comma-separated s values")->delimiter(',');
  sw->add_option("--T", sw_T, "Comma-separated T values")->delimiter(',');
  sw->add_option("--rmin", sw_rmin, "Comma-separated r_min values")->delimiter(',');
  sw->add_option("--coord", sw_coord, "Comma-separated coordination models")->delimiter(',');
  sw->add_option("--jobs", sw_jobs, "Worker threads");
  sw->add_option("--out", sw_out, "Output file");
  sw->add_option("--format", sw_format, "csv|json");
  sw->callback([&] {
    action = [&] {
      check_format(sw_format);
      SweepSpec spec;
      if (!sw_preset.empty()) {
        spec = sweep_preset(sw_preset);
      } else {
        spec.s = sw_s;
        spec.T = sw_T;
        spec.r_min = sw_rmin;
        spec.coords.clear();
        for (const auto& c : sw_coord) spec.coords.push_back(coordination_from_name(c).kind());
        if (spec.coords.empty()) spec.coords.push_back(CoordinationModel::Kind::LinearSum);
      }
      const auto rows = sweep(spec, sw_jobs);
      const std::string body = sw_format == "csv" ? sweep_csv(rows).str() : render(to_json(rows));
      const std::string name = "sweep-" + (sw_preset.empty() ? std::string("grid") : sw_preset) + "." + sw_format;
      Json meta = detail::metadata("sweep", seed, sw_format);
      meta["preset"] = sw_preset;
      detail::emit(body, sw_out, name, meta, out);
      return kExitOk;
    };
  });

  // verify-all
  std::uint64_t va_ceiling = 10'000'000;
  std::string va_format = "csv";
  auto* va = app.add_subcommand("verify-all", "Oracle vs closed-form grid and crossover sign checks");
  va->add_option("--ceiling", va_ceiling, "Plan-count ceiling per oracle run");
  va->add_option("--format", va_format, "csv|json");
  va->callback([&] {
    action = [&] {
      check_format(va_format);
      const auto results = verify_all(va_ceiling);
      bool ok = true;
      if (va_format == "csv") {
        CsvTable t({"check", "status", "cases", "detail"});
        for (const auto& r : results) {
          ok = ok && r.passed;
          t.add_row({r.name, r.passed ? "pass" : "fail", format_number(r.cases), r.detail});
        }
        out << t.str();
      } else {
        Json arr = Json::array();
        for (const auto& r : results) {
          ok = ok && r.passed;
          arr.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        }
        out << render(Json{{"passed", ok}, {"checks", arr}});
      }
      return ok ? kExitOk : kExitVerification;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "usage: influence-cost <taxonomy|classify|cost|crossover|oracle|simulate|fig3|calibrate|sweep|verify-all> "
           "[options]; see --help\n";
    return kExitUsage;
  }

  if (!action) {
    err << "error: no command given\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace influence_cost::cli
