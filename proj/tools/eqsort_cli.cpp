#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqsort/bench.hpp"
#include "eqsort/datagen.hpp"
#include "eqsort/method.hpp"
#include "eqsort/svg.hpp"
#include "eqsort/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification or benchmark failure
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<eqsort::MethodId> resolve_methods(const std::vector<std::string>& names,
                                              bool include_reference) {
  std::vector<eqsort::MethodId> out;
  for (const std::string& name : names) {
    if (name == "all") {
      if (include_reference) {
        for (auto m : eqsort::all_methods()) out.push_back(m);
      } else {
        for (auto m : eqsort::bench_methods()) out.push_back(m);
      }
      continue;
    }
    const auto m = eqsort::parse_method(name);
    if (!m) throw UsageError("unknown method '" + name + "'");
    out.push_back(*m);
  }
  return out;
}

eqsort::Domain resolve_domain(const std::string& name) {
  const auto d = eqsort::parse_domain(name);
  if (!d) throw UsageError("unknown domain '" + name + "' (expected int, float, or string)");
  return *d;
}

// Writes to the named file, or to stdout for "" / "-".
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eqsort::BenchError("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw eqsort::BenchError("failed writing output file '" + path + "'");
}

struct GridArgs {
  std::size_t n = 100000;
  std::vector<std::size_t> ks = {2};
  std::size_t d = 50;
  int repeats = 3;
  std::vector<std::string> methods = {"all"};
  std::string domain = "int";
  std::uint64_t seed = 1;
  std::string out;
};

void add_grid_options(CLI::App* cmd, GridArgs& args, bool with_repeats) {
  cmd->add_option("--n", args.n, "keys per array")->capture_default_str();
  cmd->add_option("--k", args.ks, "palette sizes (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--d", args.d, "arrays per cell")->capture_default_str();
  if (with_repeats) {
    cmd->add_option("--repeats", args.repeats, "timed passes per cell")->capture_default_str();
  }
  cmd->add_option("--methods", args.methods, "methods (comma separated, or 'all')")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--domain", args.domain, "key domain: int, float, or string")
      ->capture_default_str();
  cmd->add_option("--seed", args.seed, "master seed")->capture_default_str();
  cmd->add_option("--out", args.out, "output CSV path ('-' for stdout)");
}

int run_grid_command(const GridArgs& args, eqsort::BenchKind kind) {
  eqsort::BenchConfig config;
  config.n = args.n;
  config.k_list = args.ks;
  config.d = args.d;
  config.repeats = args.repeats;
  config.methods = resolve_methods(args.methods, false);
  config.seed = args.seed;
  config.domain = resolve_domain(args.domain);
  const auto rows = eqsort::run_grid(config, kind, &std::cerr);
  std::ostringstream csv;
  eqsort::write_csv(rows, csv);
  write_output(args.out, csv.str());
  return kExitOk;
}

int run_verify_command(const std::vector<std::string>& method_names, std::size_t max_len,
                       std::size_t alphabet, std::size_t trials, std::uint64_t seed) {
  eqsort::VerifyOptions options;
  options.methods = resolve_methods(method_names, true);
  options.max_len = max_len;
  options.alphabet = alphabet;
  options.random_trials = trials;
  options.seed = seed;
  const auto report = eqsort::run_verify(options, &std::cerr);
  std::cout << "exhaustive inputs: " << report.exhaustive_inputs << "\n"
            << "random inputs:     " << report.random_inputs << "\n"
            << "pattern inputs:    " << report.pattern_inputs << "\n";
  if (report.ok()) {
    std::cout << "verify: all methods agree with sorted reference\n";
    return kExitOk;
  }
  for (const auto& f : report.failures) {
    std::cout << "FAIL " << eqsort::method_name(f.method) << " [" << f.phase << "] " << f.detail
              << "\n";
  }
  return kExitFailure;
}

int run_gen_command(std::size_t n, std::size_t k, const std::string& pattern,
                    const std::string& domain_name, std::uint64_t seed, const std::string& out) {
  const eqsort::Domain domain = resolve_domain(domain_name);
  std::optional<eqsort::Pattern> pat;
  if (!pattern.empty()) {
    pat = eqsort::parse_pattern(pattern);
    if (!pat) throw UsageError("unknown pattern '" + pattern + "'");
  }
  std::ostringstream body;
  auto emit = [&]<class Key>() {
    const std::vector<Key> keys = pat ? eqsort::pattern_sequence<Key>(*pat, n)
                                      : eqsort::uniform_multiset<Key>(n, k, seed);
    for (const Key& key : keys) body << key << "\n";
  };
  switch (domain) {
    case eqsort::Domain::int64: emit.template operator()<std::int64_t>(); break;
    case eqsort::Domain::float64: emit.template operator()<double>(); break;
    case eqsort::Domain::string: emit.template operator()<std::string>(); break;
  }
  write_output(out, body.str());
  return kExitOk;
}

int run_plot_command(const std::string& in_path, const std::string& mode,
                     const std::string& baseline_name, const std::string& out) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw eqsort::BenchError("cannot open input CSV '" + in_path + "'");
  const std::vector<eqsort::BenchRow> rows = eqsort::read_csv(in);
  if (rows.empty()) throw eqsort::BenchError("input CSV has no data rows");

  std::vector<std::size_t> ns, ks;
  for (const auto& r : rows) {
    if (std::find(ns.begin(), ns.end(), r.n) == ns.end()) ns.push_back(r.n);
    if (std::find(ks.begin(), ks.end(), r.k) == ks.end()) ks.push_back(r.k);
  }
  if (ns.size() != 1) throw eqsort::BenchError("plot expects rows for a single n");
  std::sort(ks.begin(), ks.end());
  std::vector<std::string> x_labels;
  for (std::size_t k : ks) x_labels.push_back(std::to_string(k));

  std::vector<eqsort::MethodId> methods;
  for (const auto& r : rows) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
  }

  auto value_at = [&](eqsort::MethodId m, std::size_t k,
                      auto pick) -> std::optional<double> {
    for (const auto& r : rows) {
      if (r.method == m && r.k == k) {
        if (auto v = pick(r)) return v;
      }
    }
    return std::nullopt;
  };
  auto series_for = [&](const std::string& label, eqsort::MethodId m, bool dashed, auto pick) {
    eqsort::SvgSeries s;
    s.label = label;
    s.dashed = dashed;
    for (std::size_t k : ks) s.values.push_back(value_at(m, k, pick));
    return s;
  };

  std::vector<eqsort::SvgSeries> series;
  std::string title, y_label;
  const std::string n_str = std::to_string(ns[0]);
  if (mode == "time") {
    title = "mean sort time, n=" + n_str;
    y_label = "seconds";
    for (auto m : methods) {
      auto s = series_for("T-" + std::string(eqsort::method_name(m)), m, false,
                          [](const eqsort::BenchRow& r) { return r.mean_time_s; });
      series.push_back(std::move(s));
    }
  } else if (mode == "counts") {
    title = "mean operation counts, n=" + n_str;
    y_label = "operations";
    for (auto m : methods) {
      series.push_back(series_for("com-" + std::string(eqsort::method_name(m)), m, false,
                                  [](const eqsort::BenchRow& r) { return r.mean_comparisons; }));
      series.push_back(series_for("sw-" + std::string(eqsort::method_name(m)), m, true,
                                  [](const eqsort::BenchRow& r) { return r.mean_swaps; }));
    }
  } else if (mode == "ratio") {
    const auto baseline = eqsort::parse_method(baseline_name);
    if (!baseline) throw UsageError("unknown method '" + baseline_name + "'");
    title = "ratios vs " + baseline_name + ", n=" + n_str;
    y_label = "ratio";
    const eqsort::RatioResult ratios = eqsort::compute_ratios(rows, *baseline);
    for (const auto& e : ratios.errors) std::cerr << "warning: " << e << "\n";
    auto ratio_at = [&](eqsort::MethodId m, std::size_t k,
                        auto pick) -> std::optional<double> {
      for (const auto& r : ratios.rows) {
        if (r.method == m && r.k == k) {
          if (auto v = pick(r)) return v;
        }
      }
      return std::nullopt;
    };
    auto ratio_series = [&](const std::string& prefix, eqsort::MethodId m, bool dashed,
                            auto pick) {
      eqsort::SvgSeries s;
      s.label = prefix + std::string(eqsort::method_name(m)) + "/" + prefix + baseline_name;
      s.dashed = dashed;
      for (std::size_t k : ks) s.values.push_back(ratio_at(m, k, pick));
      return s;
    };
    const bool has_time = std::any_of(rows.begin(), rows.end(), [](const eqsort::BenchRow& r) {
      return r.mean_time_s.has_value();
    });
    const bool has_counts = std::any_of(rows.begin(), rows.end(), [](const eqsort::BenchRow& r) {
      return r.mean_comparisons.has_value();
    });
    for (auto m : methods) {
      if (has_time) {
        series.push_back(ratio_series("T-", m, false,
                                      [](const eqsort::RatioRow& r) { return r.time_ratio; }));
      }
      if (has_counts) {
        series.push_back(ratio_series(
            "com-", m, false, [](const eqsort::RatioRow& r) { return r.comparison_ratio; }));
        series.push_back(ratio_series("sw-", m, true,
                                      [](const eqsort::RatioRow& r) { return r.swap_ratio; }));
      }
    }
  } else {
    throw UsageError("unknown plot mode '" + mode + "' (expected time, counts, or ratio)");
  }

  write_output(out, eqsort::render_line_chart(title, y_label, x_labels, series));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"duplicate-aware quicksort workbench"};
  app.require_subcommand(1);

  GridArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "time sorting runs and write a CSV");
  add_grid_options(bench, bench_args, true);

  GridArgs counts_args;
  CLI::App* counts = app.add_subcommand("counts", "count comparisons/swaps and write a CSV");
  add_grid_options(counts, counts_args, false);

  std::vector<std::string> verify_methods = {"all"};
  std::size_t verify_max_len = 8, verify_alphabet = 3, verify_trials = 2000;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "check every method against sorted references");
  verify->add_option("--methods", verify_methods, "methods (comma separated, or 'all')")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--max-len", verify_max_len, "exhaustive phase: longest sequence")
      ->capture_default_str();
  verify->add_option("--alphabet", verify_alphabet, "exhaustive phase: distinct keys")
      ->capture_default_str();
  verify->add_option("--trials", verify_trials, "random phase: multiset count")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "master seed")->capture_default_str();

  std::size_t gen_n = 1000, gen_k = 2;
  std::string gen_pattern, gen_domain = "int", gen_out;
  std::uint64_t gen_seed = 1;
  CLI::App* gen = app.add_subcommand("gen", "emit one dataset, one key per line");
  gen->add_option("--n", gen_n, "number of keys")->capture_default_str();
  gen->add_option("--k", gen_k, "palette size for random data")->capture_default_str();
  gen->add_option("--pattern", gen_pattern,
                  "structured input instead of random: sorted, reverse, organ_pipe, all_equal");
  gen->add_option("--domain", gen_domain, "key domain: int, float, or string")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "seed for random data")->capture_default_str();
  gen->add_option("--out", gen_out, "output path ('-' for stdout)");

  std::string plot_in, plot_mode = "time", plot_baseline = "dualpivot", plot_out;
  CLI::App* plot = app.add_subcommand("plot", "render a CSV as an SVG line chart");
  plot->add_option("--in", plot_in, "input CSV path")->required();
  plot->add_option("--mode", plot_mode, "time, counts, or ratio")->capture_default_str();
  plot->add_option("--baseline", plot_baseline, "denominator method for ratio mode")
      ->capture_default_str();
  plot->add_option("--out", plot_out, "output SVG path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bench->parsed()) return run_grid_command(bench_args, eqsort::BenchKind::timing);
    if (counts->parsed()) return run_grid_command(counts_args, eqsort::BenchKind::counting);
    if (verify->parsed()) {
      return run_verify_command(verify_methods, verify_max_len, verify_alphabet, verify_trials,
                                verify_seed);
    }
    if (gen->parsed()) {
      return run_gen_command(gen_n, gen_k, gen_pattern, gen_domain, gen_seed, gen_out);
    }
    if (plot->parsed()) return run_plot_command(plot_in, plot_mode, plot_baseline, plot_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
