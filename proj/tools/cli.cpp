// Copyright 2026 The ifsquant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ifsquant/ifsquant.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace ifsq::cli {

namespace {

using nlohmann::json;

struct CommandConfig {
  std::size_t n = 0;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::string format = "text";
  std::uint64_t seed = 20240317;
  std::size_t samples = 1'000'000;
  int depth = oracle::kDefaultDepth;
  std::size_t cap = kDefaultEnumerateCap;
  int digits = 10;
  unsigned threads = 0;
  std::string input;
  std::string output;
};

constexpr const char* kWordHelp =
    "Words are written with '.' between letters: a(2.1.1) is the centroid of J_{2,1,1} and "
    "a(2.1,inf) the centroid of the tail J_{2,2} u J_{2,3} u ...";

class Printer {
 public:
  Printer(std::ostream& out, int digits) : out_(out), digits_(digits) {}
  [[nodiscard]] std::string dec(const Rational& q) const { return to_decimal(q, digits_); }
  [[nodiscard]] std::string dec(double x) const {
    std::ostringstream s;
    s << std::setprecision(digits_) << x;
    return s.str();
  }
  std::ostream& out() { return out_; }

 private:
  std::ostream& out_;
  int digits_;
};

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::vector<double> to_doubles(const std::vector<Rational>& xs) {
  std::vector<double> out;
  for (const auto& x : xs) out.push_back(x.to_double());
  return out;
}

void print_set_text(Printer& p, const QuantizerSet& set) {
  for (const auto& node : set.nodes) {
    p.out() << to_fraction_string(node.centroid) << '\t' << p.dec(node.centroid) << '\t' << node_name(node.region)
            << "\terror " << to_fraction_string(node.error) << '\n';
  }
  p.out() << "V_" << set.n() << " = " << to_fraction_string(set.v) << " ~ " << p.dec(set.v) << '\n';
}

int cmd_optimal(const CommandConfig& cfg, Printer& p) {
  const QuantizerSet set = optimal_set(cfg.n);
  if (cfg.format == "json") {
    p.out() << io::to_json(set) << '\n';
  } else if (cfg.format == "csv") {
    p.out() << "word,kind,centroid,centroid_float,error\n";
    for (const auto& node : set.nodes) {
      p.out() << csv_quote(render(node.region.word())) << ',' << (node.region.is_tail() ? "tail" : "closed") << ','
              << csv_quote(to_fraction_string(node.centroid)) << ',' << p.dec(node.centroid) << ','
              << csv_quote(to_fraction_string(node.error)) << '\n';
    }
  } else {
    print_set_text(p, set);
  }
  return kExitOk;
}

int cmd_table(const CommandConfig& cfg, Printer& p) {
  GenerationState state;
  std::vector<std::pair<std::size_t, Rational>> rows;
  while (state.n() < cfg.n_lo) state.split();
  while (true) {
    rows.emplace_back(state.n(), state.v());
    if (state.n() >= cfg.n_hi) break;
    state.split();
  }
  if (cfg.format == "json") {
    json doc = json::array();
    for (const auto& [n, v] : rows) doc.push_back({{"n", n}, {"V", to_fraction_string(v)}, {"V_float", v.to_double()}});
    p.out() << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    p.out() << "n,V,V_float\n";
    for (const auto& [n, v] : rows) p.out() << n << ',' << csv_quote(to_fraction_string(v)) << ',' << p.dec(v) << '\n';
  } else {
    for (const auto& [n, v] : rows) p.out() << "V_" << n << " = " << to_fraction_string(v) << " ~ " << p.dec(v) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const CommandConfig& cfg, Printer& p) {
  const auto sets = enumerate_optimal_sets(cfg.n, cfg.cap);
  if (cfg.format == "json") {
    json doc = json::array();
    for (const auto& s : sets) doc.push_back(json::parse(io::to_json(s, -1)));
    p.out() << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    p.out() << TransitionGraph::label(cfg.n, i) << " :";
    for (const auto& node : sets[i].nodes) p.out() << ' ' << node_name(node.region);
    p.out() << '\n';
  }
  p.out() << "V_" << cfg.n << " = " << to_fraction_string(sets.front().v) << " ~ " << p.dec(sets.front().v) << '\n';
  p.out() << "card C_" << cfg.n << " = " << sets.size() << '\n';
  return kExitOk;
}

int cmd_count(const CommandConfig& cfg, Printer& p) {
  const BigInt count = count_optimal_sets(cfg.n);
  if (cfg.format == "json") {
    p.out() << json{{"n", cfg.n}, {"count", count.get_str()}}.dump() << '\n';
  } else {
    p.out() << count.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_tree(const CommandConfig& cfg, Printer& p) {
  const TransitionGraph graph = transition_graph(cfg.n_lo, cfg.n_hi, cfg.cap);
  if (cfg.format == "dot") {
    p.out() << io::to_dot(graph);
  } else if (cfg.format == "json") {
    p.out() << io::to_json(graph) << '\n';
  } else {
    for (const auto& layer : graph.layers) {
      for (std::size_t i = 0; i < layer.sets.size(); ++i) {
        p.out() << TransitionGraph::label(layer.n, i) << " :";
        for (const auto& node : layer.sets[i].nodes) p.out() << ' ' << node_name(node.region);
        p.out() << '\n';
      }
    }
    for (const auto& layer : graph.layers) {
      for (const auto& e : layer.edges_out) {
        p.out() << TransitionGraph::label(layer.n, e.from) << " -> " << TransitionGraph::label(layer.n + 1, e.to)
                << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_oracle_sample(const CommandConfig& cfg, Printer& p) {
  const auto batch = oracle::sample(cfg.samples, cfg.depth, cfg.seed, cfg.threads);
  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + cfg.output);
    oracle::write_batch(file, batch);
  }
  long double sum = 0, sum_sq = 0;
  std::size_t in_j2 = 0;
  for (double x : batch.values) {
    sum += x;
    sum_sq += static_cast<long double>(x) * x;
    in_j2 += (x >= 0.5 && x <= 0.625);
  }
  const auto n = static_cast<long double>(batch.count);
  const double mean = static_cast<double>(sum / n);
  const double variance = static_cast<double>(sum_sq / n - (sum / n) * (sum / n));
  const double mass = static_cast<double>(in_j2) / static_cast<double>(batch.count);
  if (cfg.format == "json") {
    p.out() << json{{"count", batch.count}, {"seed", batch.seed}, {"depth", batch.depth}, {"mean", mean},
                    {"variance", variance}, {"mass_J2", mass}}
                   .dump(2)
            << '\n';
  } else {
    p.out() << "count " << batch.count << "\nseed " << batch.seed << "\ndepth " << batch.depth << "\nmean "
            << p.dec(mean) << " (exact 4/7 ~ " << p.dec(constants().mean) << ")\nvariance " << p.dec(variance)
            << " (exact 288/3577 ~ " << p.dec(constants().variance) << ")\nmass of [1/2, 5/8] " << p.dec(mass)
            << " (exact 3/8)\n";
  }
  return kExitOk;
}

int cmd_oracle_lloyd(const CommandConfig& cfg, Printer& p) {
  const std::size_t k = cfg.n;
  if (k > cfg.samples) throw CLI::ValidationError("--n", "k must not exceed --samples");
  const auto batch = oracle::sample(cfg.samples, cfg.depth, cfg.seed, cfg.threads);
  const auto local = oracle::lloyd_splitting(batch, k);
  const auto global = oracle::kmeans_1d_exact(batch, k);
  const QuantizerSet exact = optimal_set(k);
  const auto target = to_doubles(exact.points());

  auto deviation = [&](const std::vector<double>& centers) {
    double d = 0;
    for (std::size_t i = 0; i < k; ++i) d = std::max(d, std::abs(centers[i] - target[i]));
    return d;
  };
  if (cfg.format == "json") {
    p.out() << json{{"k", k},
                    {"exact_centroids", target},
                    {"V", to_fraction_string(exact.v)},
                    {"lloyd", {{"centers", local.centers}, {"distortion", local.distortion},
                               {"iterations", local.iterations}, {"max_deviation", deviation(local.centers)}}},
                    {"kmeans_exact", {{"centers", global.centers}, {"distortion", global.distortion},
                                      {"max_deviation", deviation(global.centers)}}}}
                   .dump(2)
            << '\n';
    return kExitOk;
  }
  p.out() << "exact   ";
  for (double x : target) p.out() << ' ' << p.dec(x);
  p.out() << "\nlloyd   ";
  for (double x : local.centers) p.out() << ' ' << p.dec(x);
  p.out() << "\nkmeans  ";
  for (double x : global.centers) p.out() << ' ' << p.dec(x);
  p.out() << "\nV_" << k << " exact " << p.dec(exact.v) << ", lloyd " << p.dec(local.distortion) << ", kmeans "
          << p.dec(global.distortion) << '\n';
  p.out() << "max deviation lloyd " << p.dec(deviation(local.centers)) << ", kmeans "
          << p.dec(deviation(global.centers)) << '\n';
  return kExitOk;
}

int cmd_oracle_check(const CommandConfig& cfg, Printer& p) {
  QuantizerSet set;
  if (!cfg.input.empty()) {
    std::ifstream file(cfg.input);
    if (!file) throw std::runtime_error("cannot open " + cfg.input);
    std::stringstream text;
    text << file.rdbuf();
    set = io::quantizer_set_from_json(text.str());
  } else {
    set = optimal_set(cfg.n);
  }
  const auto batch = oracle::sample(cfg.samples, cfg.depth, cfg.seed, cfg.threads);
  const auto est = oracle::mc_distortion_estimate(batch, to_doubles(set.points()), cfg.threads);
  const double z = (est.mean - set.v.to_double()) / est.std_error;
  const bool mc_ok = std::abs(z) < 4.0;
  bool ok = mc_ok;

  json doc{{"n", set.n()},
           {"V", to_fraction_string(set.v)},
           {"V_float", set.v.to_double()},
           {"mc_distortion", est.mean},
           {"mc_std_error", est.std_error},
           {"z", z},
           {"mc_pass", mc_ok}};
  if (set.n() >= 2 && set.n() <= 13) {
    const auto ex = oracle::exhaustive_min(set.n());
    const bool ex_ok = ex.v == set.v;
    ok = ok && ex_ok;
    doc["exhaustive_V"] = to_fraction_string(ex.v);
    doc["exhaustive_pass"] = ex_ok;
  }
  if (cfg.format == "json") {
    p.out() << doc.dump(2) << '\n';
  } else {
    p.out() << "V_" << set.n() << " = " << to_fraction_string(set.v) << " ~ " << p.dec(set.v) << '\n';
    p.out() << "monte carlo " << p.dec(est.mean) << " +- " << p.dec(est.std_error) << " (z = " << p.dec(z) << ") "
            << (mc_ok ? "PASS" : "FAIL") << '\n';
    if (doc.contains("exhaustive_V")) {
      p.out() << "exhaustive V_" << set.n() << " = " << doc["exhaustive_V"].get<std::string>() << ' '
              << (doc["exhaustive_pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact optimal quantizers for an infinite self-similar measure on [0, 1]", "quantizer"};
  app.footer(kWordHelp);
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_n = [&](CLI::App* sub, std::size_t min_n) {
    sub->add_option("--n", cfg.n, "Number of means")->required()->check(CLI::Range(min_n, std::size_t{1} << 40));
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--from", cfg.n_lo, "First n")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
    sub->add_option("--to", cfg.n_hi, "Last n")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", cfg.digits, "Significant digits of decimal renderings")->check(CLI::Range(1, 100));
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Sampling seed");
    sub->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 34));
    sub->add_option("--depth", cfg.depth, "Word depth per sample")->check(CLI::Range(1, 1000));
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  };

  auto* optimal = app.add_subcommand("optimal", "One optimal set of n-means and V_n");
  add_n(optimal, 1);
  add_format(optimal, {"text", "json", "csv"});
  add_digits(optimal);

  auto* table = app.add_subcommand("table", "V_n for a range of n");
  add_range(table);
  add_format(table, {"text", "json", "csv"});
  add_digits(table);

  auto* enumerate = app.add_subcommand("enumerate", "All optimal sets of n-means");
  add_n(enumerate, 1);
  enumerate->add_option("--cap", cfg.cap, "Maximum sets per layer")->check(CLI::PositiveNumber);
  add_format(enumerate, {"text", "json"});
  add_digits(enumerate);

  auto* count = app.add_subcommand("count", "Number of optimal sets of n-means");
  add_n(count, 1);
  add_format(count, {"text", "json"});

  auto* tree = app.add_subcommand("tree", "Transition graph between optimal sets");
  add_range(tree);
  auto* tree_cap = tree->add_option("--cap", cfg.cap, "Maximum vertices")->check(CLI::PositiveNumber);
  add_format(tree, {"text", "json", "dot"});

  auto* sample = app.add_subcommand("oracle-sample", "Monte Carlo sample of the measure");
  add_sampling(sample);
  sample->add_option("--output", cfg.output, "Write the batch as little-endian binary");
  add_format(sample, {"text", "json"});
  add_digits(sample);

  auto* lloyd = app.add_subcommand("oracle-lloyd", "Lloyd and exact 1-D k-means on samples");
  add_n(lloyd, 1);
  add_sampling(lloyd);
  add_format(lloyd, {"text", "json"});
  add_digits(lloyd);

  auto* check = app.add_subcommand("oracle-check", "Monte Carlo and exhaustive cross-check of V_n");
  auto* check_n = check->add_option("--n", cfg.n, "Number of means")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  auto* check_input = check->add_option("--input", cfg.input, "Quantizer JSON to check instead of optimal_set(n)");
  check_n->excludes(check_input);
  add_sampling(check);
  add_format(check, {"text", "json"});
  add_digits(check);

  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification suite");
  cfg.n = 12;
  verify_cmd->add_option("--n", cfg.n, "Largest n to verify")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if ((*table || *tree) && cfg.n_lo > cfg.n_hi) throw CLI::ValidationError("--from", "--from must not exceed --to");
    if (*check && !*check_n && !*check_input) throw CLI::RequiredError("--n or --input");
    if (*tree && !*tree_cap) cfg.cap = kDefaultGraphCap;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "quantizer: " << e.what() << "\nusage: quantizer <command> [--n N] [--from A --to B] "
        << "[--format json|csv|dot|text] [--seed S] [--samples M] [--depth D] [--cap C] [--digits G] [--threads T]\n";
    return kExitUsage;
  }

  Printer printer(out, cfg.digits);
  try {
    if (*optimal) return cmd_optimal(cfg, printer);
    if (*table) return cmd_table(cfg, printer);
    if (*enumerate) return cmd_enumerate(cfg, printer);
    if (*count) return cmd_count(cfg, printer);
    if (*tree) return cmd_tree(cfg, printer);
    if (*sample) return cmd_oracle_sample(cfg, printer);
    if (*lloyd) return cmd_oracle_lloyd(cfg, printer);
    if (*check) return cmd_oracle_check(cfg, printer);
    if (*verify_cmd) return verify(cfg.n, out) == 0 ? kExitOk : kExitFailure;
  } catch (const CLI::ParseError& e) {
    err << "quantizer: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "quantizer: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ifsq::cli
