#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rx3/construct.hpp"
#include "rx3/core.hpp"
#include "rx3/search.hpp"
#include "rx3/serialize.hpp"
#include "rx3/verifier.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

// Exit codes shared by every subcommand.
constexpr int kOk = 0;           // success / verified
constexpr int kNotMet = 1;       // verification failed or bound not met
constexpr int kBadInput = 2;     // invalid input
constexpr int kBudgetRefused = 3;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  // Diagnostics only: timing never reaches standard output.
  ~Stopwatch() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    std::cerr << "elapsed_ms: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
              << "\n";
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rx3::InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string slurp_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

rx3::SearchOptions search_options(std::uint64_t budget, int jobs) {
  rx3::SearchOptions opt;
  opt.budget = budget;
  opt.jobs = jobs;
  opt.progress = [](std::uint64_t n) {
    std::cerr << "progress: " << n << " candidates\n";
  };
  return opt;
}

void emit_record(const char* op, ordered_json params, ordered_json result,
                 std::uint64_t candidates) {
  ordered_json rec;
  rec["op"] = op;
  rec["params"] = std::move(params);
  rec["result"] = std::move(result);
  rec["candidates_examined"] = candidates;
  std::cout << rec.dump() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"3-rainbow colorings of the complete bipartite graphs K_{2,t}: "
               "closed-form values, explicit constructions, exact verification, "
               "and exhaustive cross-checks"};
  app.require_subcommand(1);

  long long t_value = 0;
  auto* cmd_value = app.add_subcommand("value", "print the 3-rainbow index of K_{2,t}");
  cmd_value->add_option("--t", t_value, "number of W-vertices")->required();

  int k_interval = 0;
  auto* cmd_interval =
      app.add_subcommand("interval", "print the t-range on which the index equals k");
  cmd_interval->add_option("--k", k_interval, "color count")->required();

  long long t_construct = 0;
  std::string format = "json";
  auto* cmd_construct =
      app.add_subcommand("construct", "emit an optimal 3-rainbow coloring of K_{2,t}");
  cmd_construct->add_option("--t", t_construct, "number of W-vertices")->required();
  cmd_construct->add_option("--format", format, "output format (json | dot)")
      ->check(CLI::IsMember({"json", "dot"}));

  std::string verify_file;
  bool verify_stdin = false;
  int verify_jobs = 1;
  auto* cmd_verify = app.add_subcommand("verify", "verify a coloring document");
  cmd_verify->add_option("--file", verify_file, "coloring JSON file");
  cmd_verify->add_flag("--stdin", verify_stdin, "read the coloring JSON from stdin");
  cmd_verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::Range(1, 256));

  int oracle_t = 0, oracle_kmax = 0, oracle_jobs = 1;
  std::uint64_t oracle_budget = 100'000'000;
  auto* cmd_oracle =
      app.add_subcommand("oracle", "brute-force the 3-rainbow index from scratch");
  cmd_oracle->add_option("--t", oracle_t, "number of W-vertices")->required();
  cmd_oracle->add_option("--k-max", oracle_kmax, "largest palette to try")->required();
  cmd_oracle->add_option("--budget", oracle_budget, "candidate budget");
  cmd_oracle->add_option("--jobs", oracle_jobs, "worker threads")->check(CLI::Range(1, 256));

  int beta_b = 0, beta_ambient = 0, beta_jobs = 1;
  std::uint64_t beta_budget = 100'000'000;
  auto* cmd_beta =
      app.add_subcommand("beta", "largest acceptable code count over b colors");
  cmd_beta->add_option("--b", beta_b, "color subset size (1..3)")->required();
  cmd_beta->add_option("--k-ambient", beta_ambient, "ambient palette size (defaults to b)");
  cmd_beta->add_option("--budget", beta_budget, "candidate budget");
  cmd_beta->add_option("--jobs", beta_jobs, "worker threads")->check(CLI::Range(1, 256));

  int maxset_k = 0, maxset_cap = 0, maxset_jobs = 1;
  bool maxset_distinct = false;
  std::uint64_t maxset_budget = 100'000'000;
  auto* cmd_maxset =
      app.add_subcommand("maxset", "largest acceptable code collection over k colors");
  cmd_maxset->add_option("--k", maxset_k, "palette size")->required();
  cmd_maxset->add_flag("--distinct", maxset_distinct, "require pairwise distinct codes");
  cmd_maxset->add_option("--t-cap", maxset_cap,
                         "scan ceiling (required unless --distinct)");
  cmd_maxset->add_option("--budget", maxset_budget, "candidate budget");
  cmd_maxset->add_option("--jobs", maxset_jobs, "worker threads")->check(CLI::Range(1, 256));

  int rooks_n = 0;
  auto* cmd_rooks =
      app.add_subcommand("rooks", "maximum isolated rook placement on an n x n board");
  cmd_rooks->add_option("--n", rooks_n, "board size (1..5)")->required();

  long long table_min = 0, table_max = 0;
  auto* cmd_table =
      app.add_subcommand("table", "tabulate t, index, and verification status");
  cmd_table->add_option("--t-min", table_min, "first t")->required();
  cmd_table->add_option("--t-max", table_max, "last t")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  if (cmd_value->parsed()) {
    std::cout << rx3::rx3_value(t_value) << "\n";
    return kOk;
  }

  if (cmd_interval->parsed()) {
    const rx3::ValueInterval iv = rx3::rx3_interval(k_interval);
    ordered_json doc;
    doc["k"] = iv.k;
    doc["t_min"] = iv.t_min;
    doc["t_max"] = iv.t_max;
    std::cout << doc.dump() << "\n";
    return kOk;
  }

  if (cmd_construct->parsed()) {
    const rx3::BipartiteColoring coloring = rx3::construct_coloring(t_construct);
    if (format == "dot")
      std::cout << rx3::to_dot(coloring);
    else
      std::cout << rx3::to_json(coloring) << "\n";
    return kOk;
  }

  if (cmd_verify->parsed()) {
    if (verify_stdin == !verify_file.empty())
      throw rx3::InputError("verify needs exactly one of --file or --stdin");
    Stopwatch timer;
    const std::string text = verify_stdin ? slurp_stdin() : slurp_file(verify_file);
    const rx3::BipartiteColoring coloring = rx3::parse_coloring(text);
    const rx3::VerificationReport report = rx3::verify_3rainbow(coloring, verify_jobs);
    std::cout << rx3::report_to_json(report) << "\n";
    return report.pass ? kOk : kNotMet;
  }

  if (cmd_oracle->parsed()) {
    Stopwatch timer;
    const rx3::OracleResult r =
        rx3::brute_force_rx3(oracle_t, oracle_kmax, search_options(oracle_budget, oracle_jobs));
    emit_record("oracle", {{"t", oracle_t}, {"k_max", oracle_kmax}},
                r.k ? ordered_json(*r.k) : ordered_json(nullptr), r.candidates_examined);
    return r.k ? kOk : kNotMet;
  }

  if (cmd_beta->parsed()) {
    Stopwatch timer;
    const int ambient = beta_ambient == 0 ? beta_b : beta_ambient;
    const rx3::CountResult r =
        rx3::beta_limited(beta_b, ambient, search_options(beta_budget, beta_jobs));
    emit_record("beta", {{"b", beta_b}, {"k_ambient", ambient}}, r.value,
                r.candidates_examined);
    return kOk;
  }

  if (cmd_maxset->parsed()) {
    Stopwatch timer;
    const rx3::CountResult r = rx3::max_acceptable(
        maxset_k, maxset_distinct, maxset_cap, search_options(maxset_budget, maxset_jobs));
    emit_record("maxset",
                {{"k", maxset_k}, {"distinct_only", maxset_distinct}, {"t_cap", maxset_cap}},
                r.value, r.candidates_examined);
    return kOk;
  }

  if (cmd_rooks->parsed()) {
    Stopwatch timer;
    const rx3::RookResult r = rx3::max_isolated_rooks(rooks_n);
    ordered_json placement = ordered_json::array();
    for (const rx3::RookPlacement& rk : r.placement)
      placement.push_back({rk.row, rk.col});
    ordered_json result;
    result["count"] = r.count;
    result["placement"] = std::move(placement);
    emit_record("rooks", {{"n", rooks_n}}, std::move(result), r.candidates_examined);
    return kOk;
  }

  if (cmd_table->parsed()) {
    if (table_min < 1 || table_max < table_min)
      throw rx3::InputError("need 1 <= t-min <= t-max");
    Stopwatch timer;
    bool all_ok = true;
    std::cout << "t k verified\n";
    for (long long t = table_min; t <= table_max; ++t) {
      const rx3::BipartiteColoring coloring = rx3::construct_coloring(t);
      const bool ok = rx3::verify_3rainbow(coloring).pass;
      all_ok = all_ok && ok;
      std::cout << t << " " << coloring.k() << " " << (ok ? "yes" : "no") << "\n";
    }
    return all_ok ? kOk : kNotMet;
  }

  return kBadInput;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rx3::BudgetError& e) {
    std::cerr << "refused: " << e.what() << " (estimated " << e.estimate()
              << " candidates, budget " << e.budget() << ")\n";
    return kBudgetRefused;
  } catch (const rx3::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
