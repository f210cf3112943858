#include "jperf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "jperf/analysis.hpp"
#include "jperf/core.hpp"
#include "jperf/dataset_io.hpp"
#include "jperf/indicators.hpp"
#include "jperf/properties.hpp"
#include "jperf/synth.hpp"

namespace jperf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct DatasetOptions {
  std::string journals;
  std::string matrix;
};

struct IndicatorOptions {
  std::string indicator;
  double alpha = 0.85;
  double beta = 0.0;
  double gamma = 0.0;
  std::string iw_normalization = "total";
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* norm_opt = nullptr;
};

struct SolverOptions {
  std::string method = "auto";
  double tolerance = 1e-12;
  std::size_t max_iterations = 100000;
};

struct OutputOptions {
  std::string format = "csv";
  int precision = 6;
};

void add_dataset(CLI::App& cmd, DatasetOptions& o) {
  cmd.add_option("--journals", o.journals, "journals.csv")->required();
  cmd.add_option("--matrix", o.matrix, "matrix.csv")->required();
}

void add_indicator(CLI::App& cmd, IndicatorOptions& o, bool required = true) {
  auto* opt = cmd.add_option("--indicator", o.indicator, "if|af|iw|ipp|ef|ai|wpr|sjr");
  if (required) opt->required();
  o.alpha_opt = cmd.add_option("--alpha", o.alpha, "Eigenfactor damping (ef, ai); default 0.85");
  o.beta_opt = cmd.add_option("--beta", o.beta, "citation weight (wpr, sjr)");
  o.gamma_opt = cmd.add_option("--gamma", o.gamma, "article-share weight (wpr, sjr)");
  o.norm_opt = cmd.add_option("--iw-normalization", o.iw_normalization,
                              "influence weight scale (iw, ipp): total|mean")
                   ->check(CLI::IsMember({"total", "mean"}));
}

void add_solver(CLI::App& cmd, SolverOptions& o) {
  cmd.add_option("--method", o.method, "auto|direct|power")
      ->check(CLI::IsMember({"auto", "direct", "power"}));
  cmd.add_option("--tolerance", o.tolerance, "relative L1 convergence threshold");
  cmd.add_option("--max-iterations", o.max_iterations, "power iteration cap");
}

void add_output(CLI::App& cmd, OutputOptions& o) {
  cmd.add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--precision", o.precision, "decimals in printed values")
      ->check(CLI::Range(0, 17));
}

SolverConfig solver_config(const SolverOptions& o) {
  SolverConfig config;
  config.tolerance = o.tolerance;
  config.max_iterations = o.max_iterations;
  config.method = o.method == "direct"  ? SolveMethod::direct
                  : o.method == "power" ? SolveMethod::power
                                        : SolveMethod::automatic;
  config.check();
  return config;
}

struct IndicatorRequest {
  IndicatorKind kind;
  IndicatorParams params;
};

IndicatorRequest indicator_request(const IndicatorOptions& o) {
  const auto kind = parse_indicator_kind(o.indicator);
  if (!kind) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("unknown indicator '{}'", o.indicator));
  }
  const bool eigen = *kind == IndicatorKind::EF || *kind == IndicatorKind::AI;
  const bool pagerank = *kind == IndicatorKind::WPR || *kind == IndicatorKind::SJR;
  const bool iw = *kind == IndicatorKind::IW || *kind == IndicatorKind::IPP;
  auto reject = [&](CLI::Option* opt, bool allowed) {
    if (opt != nullptr && opt->count() > 0 && !allowed) {
      throw Error(ErrorKind::InvalidParameter,
                  fmt::format("{} does not apply to indicator {}", opt->get_name(),
                              to_string(*kind)));
    }
  };
  reject(o.alpha_opt, eigen);
  reject(o.beta_opt, pagerank);
  reject(o.gamma_opt, pagerank);
  reject(o.norm_opt, iw);

  IndicatorRequest req{*kind, {}};
  if (eigen) req.params.alpha = o.alpha;
  if (pagerank) {
    if ((o.beta_opt->count() > 0) != (o.gamma_opt->count() > 0)) {
      throw Error(ErrorKind::InvalidParameter, "--beta and --gamma must be given together");
    }
    if (o.beta_opt->count() > 0) {
      req.params.beta = o.beta;
      req.params.gamma = o.gamma;
    }
  }
  if (iw) req.params.iw_normalization = parse_iw_normalization(o.iw_normalization);
  return req;
}

/// Parses "kind[:p1[:p2]]": ai:0.5, wpr:0.85:0, ipp:mean.
IndicatorRequest parse_indicator_token(const std::string& token) {
  std::vector<std::string> parts;
  std::stringstream ss(token);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty()) throw Error(ErrorKind::InvalidParameter, "empty indicator in list");
  const auto kind = parse_indicator_kind(parts[0]);
  if (!kind) throw Error(ErrorKind::InvalidParameter, fmt::format("unknown indicator '{}'", token));
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidParameter, fmt::format("bad parameter in '{}'", token));
  };
  IndicatorRequest req{*kind, {}};
  switch (*kind) {
    case IndicatorKind::EF:
    case IndicatorKind::AI:
      if (parts.size() > 2) break;
      if (parts.size() == 2) req.params.alpha = number(parts[1]);
      return req;
    case IndicatorKind::WPR:
    case IndicatorKind::SJR:
      if (parts.size() == 2 || parts.size() > 3) break;
      if (parts.size() == 3) {
        req.params.beta = number(parts[1]);
        req.params.gamma = number(parts[2]);
      }
      return req;
    case IndicatorKind::IW:
    case IndicatorKind::IPP:
      if (parts.size() > 2) break;
      if (parts.size() == 2) {
        req.params.iw_normalization = parse_iw_normalization(parts[1]);
        if (!req.params.iw_normalization) break;
      }
      return req;
    default:
      if (parts.size() == 1) return req;
      break;
  }
  throw Error(ErrorKind::InvalidParameter, fmt::format("malformed indicator '{}'", token));
}

std::string fixed(double value, int precision) {
  if (std::isnan(value)) return "nan";
  return fmt::format("{:.{}f}", value, precision);
}

double rounded(double value, int precision) {
  const double scale = std::pow(10.0, precision);
  return std::round(value * scale) / scale;
}

Json params_json(const IndicatorVector& v) {
  Json p = Json::object();
  if (v.params.alpha) p["alpha"] = *v.params.alpha;
  if (v.params.beta) p["beta"] = *v.params.beta;
  if (v.params.gamma) p["gamma"] = *v.params.gamma;
  if (v.params.iw_normalization) p["iw_normalization"] = to_string(*v.params.iw_normalization);
  return p;
}

Json solver_json(const std::optional<SolverReport>& report) {
  if (!report) return nullptr;
  return Json{{"iterations", report->iterations},
              {"residual", report->residual},
              {"method_used", to_string(report->method_used)},
              {"lazy", report->lazy}};
}

void write_indicator(std::ostream& out, const JournalSet& journals, const IndicatorVector& v,
                     const OutputOptions& o) {
  if (o.format == "json") {
    Json values = Json::object();
    for (std::size_t i = 0; i < journals.size(); ++i) {
      values[journals[i].id] = rounded(v[i], o.precision);
    }
    Json doc{{"indicator", to_string(v.kind)},
             {"params", params_json(v)},
             {"basis", to_string(v.basis)},
             {"values", values},
             {"solver", solver_json(v.solver)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "id,value\n";
  for (std::size_t i = 0; i < journals.size(); ++i) {
    out << csv_escape(journals[i].id) << ',' << fixed(v[i], o.precision) << '\n';
  }
}

Instance load(const DatasetOptions& o) { return load_dataset(o.journals, o.matrix); }

// ---------------------------------------------------------------------------
// commands

int cmd_compute(const DatasetOptions& d, const IndicatorOptions& ind, const SolverOptions& s,
                const OutputOptions& o, std::ostream& out) {
  const auto req = indicator_request(ind);
  const auto config = solver_config(s);
  const auto instance = load(d);
  const auto v = compute_indicator(instance, req.kind, req.params, config);
  write_indicator(out, instance.journals(), v, o);
  return kSuccess;
}

int cmd_correlate(const DatasetOptions& d, const std::string& list, const SolverOptions& s,
                  const OutputOptions& o, std::ostream& out) {
  const auto config = solver_config(s);
  std::vector<IndicatorRequest> requests;
  std::stringstream ss(list);
  for (std::string token; std::getline(ss, token, ',');) {
    requests.push_back(parse_indicator_token(token));
  }
  const auto instance = load(d);
  std::vector<IndicatorVector> vectors;
  for (const auto& r : requests) {
    vectors.push_back(compute_indicator(instance, r.kind, r.params, config));
  }
  const auto table = correlation_table(vectors);
  const std::size_t m = table.labels.size();
  if (o.format == "json") {
    Json doc{{"labels", table.labels}, {"pearson", table.pearson}, {"spearman", table.spearman}};
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  // Pearson below the diagonal, Spearman above it.
  out << "indicator";
  for (const auto& l : table.labels) out << ',' << csv_escape(l);
  out << '\n';
  for (std::size_t a = 0; a < m; ++a) {
    out << csv_escape(table.labels[a]);
    for (std::size_t b = 0; b < m; ++b) {
      const double v = a > b ? table.pearson[a][b] : a < b ? table.spearman[a][b] : 1.0;
      out << ',' << fixed(v, o.precision);
    }
    out << '\n';
  }
  return kSuccess;
}

int cmd_sensitivity(const DatasetOptions& d, const IndicatorOptions& ind, const SolverOptions& s,
                    const OutputOptions& o, const std::string& drop_id, bool sweep,
                    std::ostream& out) {
  const auto req = indicator_request(ind);
  const auto config = solver_config(s);
  const auto instance = load(d);
  const auto& journals = instance.journals();
  if (sweep == !drop_id.empty()) {
    throw Error(ErrorKind::InvalidParameter, "give exactly one of --drop ID or --sweep");
  }

  if (sweep) {
    const auto reports = leave_one_out_sweep(instance, req.kind, req.params, config);
    if (o.format == "json") {
      Json rows = Json::array();
      for (const auto& r : reports) {
        rows.push_back({{"dropped", journals[r.dropped].id},
                        {"max_relative_change", rounded(r.max_relative_change, o.precision)}});
      }
      out << Json{{"indicator", to_string(req.kind)}, {"sweep", rows}}.dump(2) << '\n';
      return kSuccess;
    }
    out << "dropped,max_relative_change\n";
    for (const auto& r : reports) {
      out << csv_escape(journals[r.dropped].id) << ',' << fixed(r.max_relative_change, o.precision)
          << '\n';
    }
    return kSuccess;
  }

  const auto index = journals.index_of(drop_id);
  if (!index) {
    throw Error(ErrorKind::IndexOutOfRange, fmt::format("no journal with id '{}'", drop_id));
  }
  const auto report = leave_one_out(instance, *index, req.kind, req.params, config);
  if (o.format == "json") {
    Json rows = Json::array();
    for (std::size_t k = 0; k < report.survivors.size(); ++k) {
      const double rc = report.relative_change[k];
      rows.push_back({{"id", journals[report.survivors[k]].id},
                      {"before", rounded(report.before[k], o.precision)},
                      {"after", rounded(report.after[k], o.precision)},
                      {"relative_change", std::isnan(rc) ? Json(nullptr) : Json(rc)}});
    }
    out << Json{{"indicator", to_string(req.kind)},
                {"dropped", drop_id},
                {"journals", rows},
                {"max_relative_change", report.max_relative_change}}
                   .dump(2)
        << '\n';
    return kSuccess;
  }
  out << "id,before,after,relative_change\n";
  for (std::size_t k = 0; k < report.survivors.size(); ++k) {
    out << csv_escape(journals[report.survivors[k]].id) << ',' << fixed(report.before[k], o.precision)
        << ',' << fixed(report.after[k], o.precision) << ','
        << fixed(report.relative_change[k], o.precision) << '\n';
  }
  return kSuccess;
}

int cmd_field_check(const DatasetOptions& d, const std::string& partition_path,
                    const IndicatorOptions& ind, const SolverOptions& s, const OutputOptions& o,
                    std::ostream& out) {
  const auto req = indicator_request(ind);
  const auto config = solver_config(s);
  const auto instance = load(d);
  const auto partition = load_partition(partition_path, instance.journals());
  const auto v = compute_indicator(instance, req.kind, req.params, config);
  const auto r = field_insensitivity_check(instance, partition, v);

  if (o.format == "json") {
    Json doc{{"indicator", to_string(v.kind)},
             {"params", params_json(v)},
             {"delta", r.delta},
             {"balanced", r.balanced},
             {"eta", r.eta ? Json(*r.eta) : Json(nullptr)},
             {"eta_deviation", r.eta_deviation},
             {"overall_mean", r.overall_mean},
             {"lower_bound", r.lower_bound},
             {"upper_bound", r.upper_bound},
             {"field_means", {r.field_means[0], r.field_means[1]}},
             {"bounds_hold", {r.bounds_hold[0], r.bounds_hold[1]}}};
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "key,value\n";
  out << "indicator," << csv_escape(v.label()) << '\n';
  out << "delta," << format_count(r.delta) << '\n';
  out << "balanced," << flag(r.balanced) << '\n';
  out << "eta," << (r.eta ? format_count(*r.eta) : std::string("none")) << '\n';
  out << "overall_mean," << fixed(r.overall_mean, o.precision) << '\n';
  out << "lower_bound," << fixed(r.lower_bound, o.precision) << '\n';
  out << "upper_bound," << fixed(r.upper_bound, o.precision) << '\n';
  out << "field1_mean," << fixed(r.field_means[0], o.precision) << '\n';
  out << "field2_mean," << fixed(r.field_means[1], o.precision) << '\n';
  out << "field1_bounds_hold," << flag(r.bounds_hold[0]) << '\n';
  out << "field2_bounds_hold," << flag(r.bounds_hold[1]) << '\n';
  return kSuccess;
}

void write_partition_file(const std::filesystem::path& dir, const Instance& instance,
                          const FieldPartition& partition) {
  std::ofstream f(dir / "partition.csv", std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, fmt::format("cannot write '{}'", (dir / "partition.csv").string()));
  write_partition_csv(f, instance.journals(), partition);
}

int cmd_demo(const std::string& which, const std::string& export_dir, int precision,
             std::ostream& out) {
  if (which == "table1") {
    const auto scenario1 = table1_instance();
    const auto scenario2 = drop_journal(scenario1, 7);
    if (!export_dir.empty()) {
      export_dataset(scenario1, export_dir);
      write_partition_file(export_dir, scenario1, table1_partition());
    }
    constexpr double ipp1[] = {5.500, 5.500, 0.055, 0.055, 5.500, 5.500, 0.055, 0.055};
    constexpr double ipp2[] = {5.513, 5.513, 0.055, 0.055, 5.490, 5.490, 0.055};
    constexpr double af1[] = {44.000, 44.000, 0.440, 0.440, 44.000, 44.000, 0.440, 0.440};
    constexpr double af2[] = {42.938, 42.938, 0.429, 0.429, 34.063, 34.063, 0.341};
    const auto mean = IwNormalization::mean_references;
    const auto c_ipp1 = influence_per_publication(scenario1, mean);
    const auto c_ipp2 = influence_per_publication(scenario2, mean);
    const auto c_af1 = audience_factor(scenario1);
    const auto c_af2 = audience_factor(scenario2);
    out << "journal,ipp_s1_expected,ipp_s1,ipp_s2_expected,ipp_s2,af_s1_expected,af_s1,"
           "af_s2_expected,af_s2\n";
    for (std::size_t i = 0; i < 8; ++i) {
      const bool covered = i < 7;
      out << scenario1.journals()[i].id << ',' << fixed(ipp1[i], precision) << ','
          << fixed(c_ipp1[i], precision) << ','
          << (covered ? fixed(ipp2[i], precision) : "") << ','
          << (covered ? fixed(c_ipp2[i], precision) : "") << ',' << fixed(af1[i], precision)
          << ',' << fixed(c_af1[i], precision) << ','
          << (covered ? fixed(af2[i], precision) : "") << ','
          << (covered ? fixed(c_af2[i], precision) : "") << '\n';
    }
    return kSuccess;
  }
  if (which == "counterexample") {
    const auto fixture = counterexample_instance();
    if (!export_dir.empty()) {
      export_dataset(fixture.instance, export_dir);
      write_partition_file(export_dir, fixture.instance, fixture.partition);
    }
    const auto ipp = influence_per_publication(fixture.instance);
    const auto r = field_insensitivity_check(fixture.instance, fixture.partition, ipp);
    out << "quantity,expected,computed\n";
    out << "delta,0.003," << format_count(r.delta) << '\n';
    out << "ipp_1,15," << fixed(ipp[0], precision) << '\n';
    out << "ipp_2,5," << fixed(ipp[1], precision) << '\n';
    out << "field1_mean,15," << fixed(r.field_means[0], precision) << '\n';
    out << "overall_mean,10," << fixed(r.overall_mean, precision) << '\n';
    out << "upper_bound,10.03," << fixed(r.upper_bound, precision) << '\n';
    out << "field1_bounds_hold,false," << (r.bounds_hold[0] ? "true" : "false") << '\n';
    return kSuccess;
  }
  throw Error(ErrorKind::InvalidParameter,
              fmt::format("unknown demo '{}'; expected table1 or counterexample", which));
}

int cmd_generate(const BlockModelSpec& spec, const std::string& export_dir, std::ostream& out) {
  const auto fixture = block_model(spec);
  export_dataset(fixture.instance, export_dir);
  write_partition_file(export_dir, fixture.instance, fixture.partition);
  out << fmt::format("wrote {} journals to {}\n", fixture.instance.size(), export_dir);
  return kSuccess;
}

int cmd_check(const DatasetOptions& d, std::ostream& out) {
  const auto instance = load(d);
  const auto r = structure(instance.matrix());
  Json components = Json::array();
  for (const auto& c : r.components) {
    Json ids = Json::array();
    for (auto i : c) ids.push_back(instance.journals()[i].id);
    components.push_back(ids);
  }
  auto ids = [&](const std::vector<std::size_t>& idx) {
    Json a = Json::array();
    for (auto i : idx) a.push_back(instance.journals()[i].id);
    return a;
  };
  out << Json{{"journals", instance.size()},
              {"irreducible", r.irreducible},
              {"aperiodic", r.aperiodic},
              {"period", r.period},
              {"dangling_rows", ids(r.dangling_rows)},
              {"zero_columns", ids(r.zero_columns)},
              {"components", components}}
             .dump(2)
      << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------
// error records

Json error_record(const Error& e) {
  Json rec{{"error", to_string(e.kind())}, {"message", e.what()}};
  if (e.journal()) rec["journal_index"] = *e.journal();
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) {
    Json list = Json::array();
    for (const auto& x : v->violations()) {
      Json item{{"error", to_string(x.kind)}, {"message", x.message}};
      if (x.row) item["row"] = *x.row;
      if (x.col) item["col"] = *x.col;
      list.push_back(item);
    }
    rec["violations"] = list;
  }
  if (const auto* ni = dynamic_cast<const NotIrreducibleError*>(&e)) {
    // Members of the first component versus everything else form a cut that
    // the citation graph cannot cross in both directions.
    rec["components"] = ni->report().components;
    rec["dangling_rows"] = ni->report().dangling_rows;
  }
  if (const auto* nc = dynamic_cast<const NoConvergenceError*>(&e)) {
    rec["iterations"] = nc->iterations();
    rec["residual"] = nc->residual();
  }
  return rec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Journal performance indicators from a citation matrix", "jperf"};
  app.require_subcommand(1);

  DatasetOptions dataset;
  // one per subcommand: each keeps pointers to its own options
  IndicatorOptions compute_ind, sensitivity_ind, field_ind;
  SolverOptions solver;
  OutputOptions output;

  auto* compute = app.add_subcommand("compute", "compute one indicator for every journal");
  add_dataset(*compute, dataset);
  add_indicator(*compute, compute_ind);
  add_solver(*compute, solver);
  add_output(*compute, output);

  std::string indicator_list;
  auto* correlate = app.add_subcommand("correlate", "Pearson / Spearman table of indicators");
  add_dataset(*correlate, dataset);
  correlate->add_option("--indicators", indicator_list, "comma list, e.g. if,af,ipp,ai:0,ai:1")
      ->required();
  add_solver(*correlate, solver);
  add_output(*correlate, output);

  std::string drop_id;
  bool sweep = false;
  auto* sensitivity = app.add_subcommand("sensitivity", "leave-one-out coverage sensitivity");
  add_dataset(*sensitivity, dataset);
  add_indicator(*sensitivity, sensitivity_ind);
  sensitivity->add_option("--drop", drop_id, "journal id to remove");
  sensitivity->add_flag("--sweep", sweep, "remove each journal in turn");
  add_solver(*sensitivity, solver);
  add_output(*sensitivity, output);

  std::string partition_path;
  auto* field_check = app.add_subcommand("field-check", "two-field insensitivity bounds");
  add_dataset(*field_check, dataset);
  field_check->add_option("--partition", partition_path, "partition.csv (id,field)")->required();
  add_indicator(*field_check, field_ind);
  add_solver(*field_check, solver);
  add_output(*field_check, output);

  std::string demo_name;
  std::string export_dir;
  auto* demo = app.add_subcommand("demo", "built-in fixtures with expected values");
  demo->add_option("fixture", demo_name, "table1|counterexample")
      ->required()
      ->check(CLI::IsMember({"table1", "counterexample"}));
  demo->add_option("--export", export_dir, "directory for journals.csv / matrix.csv");
  int demo_precision = 3;
  demo->add_option("--precision", demo_precision, "decimals")->check(CLI::Range(0, 17));

  BlockModelSpec spec;
  std::string generate_dir;
  bool unbalanced = false;
  auto* generate = app.add_subcommand("generate", "seeded two-field block model instance");
  generate->add_option("--seed", spec.seed, "random seed")->required();
  generate->add_option("--journals-per-field", spec.journals_per_field);
  generate->add_option("--within", spec.within_mean, "mean same-field count per pair");
  generate->add_option("--cross", spec.cross_mean, "mean cross-field count per pair");
  generate->add_option("--articles-min", spec.articles_min);
  generate->add_option("--articles-max", spec.articles_max);
  generate->add_option("--eta", spec.eta, "a_i2 = eta * a_i1");
  generate->add_flag("--size-scaled", spec.size_scaled, "scale pair means by article counts");
  generate->add_flag("--unbalanced", unbalanced, "draw field 2 article counts independently");
  generate->add_option("--export", generate_dir, "output directory")->required();

  auto* check = app.add_subcommand("check", "validate a dataset and report graph structure");
  add_dataset(*check, dataset);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return kFailure;
  }

  try {
    if (*compute) return cmd_compute(dataset, compute_ind, solver, output, out);
    if (*correlate) return cmd_correlate(dataset, indicator_list, solver, output, out);
    if (*sensitivity) {
      return cmd_sensitivity(dataset, sensitivity_ind, solver, output, drop_id, sweep, out);
    }
    if (*field_check) {
      return cmd_field_check(dataset, partition_path, field_ind, solver, output, out);
    }
    if (*demo) return cmd_demo(demo_name, export_dir, demo_precision, out);
    if (*generate) {
      spec.balanced = !unbalanced;
      return cmd_generate(spec, generate_dir, out);
    }
    if (*check) return cmd_check(dataset, out);
  } catch (const Error& e) {
    err << error_record(e).dump() << '\n';
    return e.kind() == ErrorKind::NoConvergence ? kNoConvergence : kFailure;
  } catch (const std::exception& e) {
    err << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace jperf::cli
