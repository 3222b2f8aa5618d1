#include "narayana/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "narayana/digits.hpp"
#include "narayana/narayana.hpp"
#include "narayana/oracle.hpp"
#include "narayana/triangle.hpp"

namespace narayana::cli {

VerifyReport verify_against_oracle(PrimeBase p, std::uint64_t max_n,
                                   unsigned jobs) {
  VerifyReport report;
  std::mutex guard;
  std::atomic<std::uint64_t> next{1};
  std::atomic<std::uint64_t> checked{0};

  const auto worker = [&] {
    std::vector<Mismatch> local;
    const oracle::ExactInteger modulus(std::to_string(p.value()));
    for (std::uint64_t n = next++; n <= max_n; n = next++) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const bool fast = prime_divides_narayana({p, n, k}).divisible;
        const bool exact = oracle::narayana_exact(n, k) % modulus == 0;
        if (fast != exact) local.push_back({n, k, fast, exact});
      }
      checked += n;
    }
    std::lock_guard lock(guard);
    report.mismatches.insert(report.mismatches.end(), local.begin(),
                             local.end());
  };

  const unsigned workers = std::max(1u, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  report.checked = checked;
  std::sort(report.mismatches.begin(), report.mismatches.end());
  return report;
}

BenchReport run_bench(PrimeBase p, std::uint64_t n, std::uint64_t k_min,
                      std::uint64_t k_max, std::uint64_t samples,
                      std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (k_min > k_max || k_max >= n) {
    throw std::invalid_argument("sample range [" + std::to_string(k_min) +
                                ", " + std::to_string(k_max) +
                                "] is empty or outside [0, n-1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(k_min, k_max);
  std::vector<std::uint64_t> ks(samples);
  for (auto& k : ks) k = pick(rng);

  BenchReport report{n, k_min, k_max, samples, 0, seed, 0.0};
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t k : ks) {
    if (!prime_divides_narayana({p, n, k}).divisible) ++report.survivors;
  }
  const auto stop = std::chrono::steady_clock::now();
  report.total_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

namespace {

constexpr std::uint64_t kMaxFullRow = std::uint64_t{1} << 24;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PrimeBase require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw UsageError("p=" + std::to_string(p) + " is not prime");
  }
  return PrimeBase(p);
}

NarayanaQuery require_query(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  const PrimeBase base = require_prime(p);
  try {
    return NarayanaQuery(base, n, k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_budget(std::uint64_t n, std::uint64_t budget) {
  if (n > budget) {
    throw UsageError("n=" + std::to_string(n) + " exceeds the oracle budget " +
                     std::to_string(budget) + " (raise --oracle-budget)");
  }
}

char require_symbol(const std::string& s, const char* flag) {
  if (s.size() != 1) {
    throw UsageError(std::string(flag) + " must be a single character");
  }
  return s[0];
}

std::string_view short_case(CriterionCase c) {
  return c == CriterionCase::case1 ? "case1" : "case2";
}

struct Options {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::vector<std::uint64_t> ks;
  std::uint64_t rows = 0;
  std::uint64_t max_n = 0;
  std::uint64_t budget = kDefaultOracleBudget;
  std::optional<unsigned> n_exp;
  std::optional<std::uint64_t> bench_n;
  std::uint64_t samples = 0;
  std::uint64_t seed = kBenchSeed;
  bool interior = false;
  unsigned jobs = 1;
  std::string format = "ascii";
  std::string survivor = "#";
  std::string nonsurvivor = ".";
  std::string out_path;
  bool explain = false;
  bool json = false;
};

int cmd_divides(const Options& o, std::ostream& out) {
  const NarayanaQuery q = require_query(o.p, o.n, o.k);
  const DivisibilityVerdict v = prime_divides_narayana(q);
  if (o.json) {
    nlohmann::json rec = {{"p", o.p},
                          {"n", o.n},
                          {"k", o.k},
                          {"divisible", v.divisible},
                          {"case", to_string(v.matched_case)}};
    if (v.witness) {
      rec["violated"] = to_string(v.witness->condition);
      rec["digit"] = v.witness->digit_index;
    } else {
      rec["violated"] = nullptr;
      rec["digit"] = nullptr;
    }
    out << rec.dump() << '\n';
    return kOk;
  }
  out << (v.divisible ? "divisible" : "nondivisible") << '\n';
  if (o.explain) {
    out << short_case(v.matched_case) << " (" << to_string(v.matched_case)
        << "): "
        << (v.witness ? v.witness->describe() : std::string("all conditions hold"))
        << '\n';
  }
  return kOk;
}

int cmd_order(const Options& o, std::ostream& out) {
  const ValuationReport r = narayana_valuation(require_query(o.p, o.n, o.k));
  if (o.json) {
    out << nlohmann::json{{"p", o.p},
                          {"n", o.n},
                          {"k", o.k},
                          {"order", r.omega_narayana},
                          {"order_binom_k", r.omega_binom_k},
                          {"order_binom_k1", r.omega_binom_k1},
                          {"order_n", r.omega_n}}
               .dump()
        << '\n';
  } else {
    out << r.omega_narayana << '\n';
  }
  return kOk;
}

int cmd_value(const Options& o, std::ostream& out) {
  if (o.n == 0 || o.k >= o.n) {
    throw UsageError("value requires 0 <= k < n");
  }
  require_budget(o.n, o.budget);
  out << oracle::narayana_exact(o.n, o.k).get_str() << '\n';
  return kOk;
}

int cmd_row(const Options& o, std::ostream& out) {
  const PrimeBase p = require_prime(o.p);
  if (o.n == 0) throw UsageError("n must be at least 1");
  const RenderFormat format = parse_render_format(o.format);
  if (!o.ks.empty()) {
    if (format != RenderFormat::csv) {
      throw UsageError("sampled entries (--k) are only rendered as csv");
    }
    for (std::uint64_t k : o.ks) (void)require_query(o.p, o.n, k);
    render_entries(o.n, o.ks, p, out);
    return kOk;
  }
  if (o.n > kMaxFullRow) {
    throw UsageError("row " + std::to_string(o.n) +
                     " is too long to build in full; sample it with --k");
  }
  const char on = require_symbol(o.survivor, "--survivor");
  const char off = require_symbol(o.nonsurvivor, "--nonsurvivor");
  RenderSpec{format, 1, on, off}.validate();
  render_row(build_row(o.n, p), format, on, off, out);
  return kOk;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  const PrimeBase p = require_prime(o.p);
  const RenderSpec spec{parse_render_format(o.format), o.rows,
                        require_symbol(o.survivor, "--survivor"),
                        require_symbol(o.nonsurvivor, "--nonsurvivor")};
  spec.validate();
  render(spec, p, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PrimeBase p = require_prime(o.p);
  require_budget(o.max_n, o.budget);
  const VerifyReport r = verify_against_oracle(p, o.max_n, o.jobs);
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& m : r.mismatches) {
      list.push_back({{"n", m.n},
                      {"k", m.k},
                      {"fast_divisible", m.fast_divisible},
                      {"oracle_divisible", m.oracle_divisible}});
    }
    out << nlohmann::json{{"p", o.p},
                          {"max_n", o.max_n},
                          {"checked", r.checked},
                          {"mismatches", list}}
               .dump()
        << '\n';
  } else {
    out << "checked " << r.checked << " queries, " << r.mismatches.size()
        << " mismatches\n";
    for (const auto& m : r.mismatches) {
      out << "mismatch n=" << m.n << " k=" << m.k
          << " fast=" << (m.fast_divisible ? "divisible" : "nondivisible")
          << " oracle=" << (m.oracle_divisible ? "divisible" : "nondivisible")
          << '\n';
    }
  }
  return r.mismatches.empty() ? kOk : kMismatch;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const PrimeBase p = require_prime(o.p);
  std::uint64_t n = 0;
  if (o.bench_n) {
    n = *o.bench_n;
  } else if (o.n_exp) {
    n = 1;
    for (unsigned i = 0; i < *o.n_exp; ++i) {
      if (__builtin_mul_overflow(n, std::uint64_t{10}, &n)) {
        throw UsageError("10^" + std::to_string(*o.n_exp) + " exceeds 64 bits");
      }
    }
  } else {
    throw UsageError("bench needs --n-exp or --n");
  }
  if (n == 0) throw UsageError("n must be at least 1");
  if (o.samples == 0) throw UsageError("--samples must be at least 1");
  if (o.interior && n < 3) {
    throw UsageError("--interior needs n >= 3");
  }
  const std::uint64_t k_min = o.interior ? 1 : 0;
  const std::uint64_t k_max = o.interior ? n - 2 : n - 1;
  const BenchReport r = run_bench(p, n, k_min, k_max, o.samples, o.seed);
  if (o.json) {
    out << nlohmann::json{{"p", o.p},
                          {"n", r.n},
                          {"k_min", r.k_min},
                          {"k_max", r.k_max},
                          {"samples", r.samples},
                          {"seed", r.seed},
                          {"survivors", r.survivors},
                          {"survivor_fraction", r.survivor_fraction()},
                          {"mean_ns_per_query", r.mean_ns_per_query()}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "n: " << r.n << '\n'
      << "p: " << o.p << '\n'
      << "k range: [" << r.k_min << ", " << r.k_max << "]\n"
      << "samples: " << r.samples << '\n'
      << "seed: " << r.seed << '\n'
      << "survivors: " << r.survivors << '\n'
      << "survivor fraction: " << std::fixed << std::setprecision(6)
      << r.survivor_fraction() << '\n'
      << "mean time per query: " << std::setprecision(1)
      << r.mean_ns_per_query() << " ns\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Prime divisibility of Narayana numbers", "narayana"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out_path, "Write primary output to FILE");

  const auto add_query = [&o](CLI::App* sub, bool with_p) {
    if (with_p) sub->add_option("--p", o.p, "Prime")->required();
    sub->add_option("--n", o.n, "Row index n >= 1")->required();
    sub->add_option("--k", o.k, "Column index 0 <= k < n")->required();
  };
  const auto add_symbols = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "ascii, csv or pbm");
    sub->add_option("--survivor", o.survivor, "ascii symbol for p not dividing");
    sub->add_option("--nonsurvivor", o.nonsurvivor, "ascii symbol for p dividing");
  };

  auto* divides = app.add_subcommand("divides", "Decide whether p | N(n,k)");
  add_query(divides, true);
  divides->add_flag("--explain", o.explain, "Report the deciding condition");
  divides->add_flag("--json", o.json, "Single-line JSON record");

  auto* order = app.add_subcommand("order", "p-adic order of N(n,k)");
  add_query(order, true);
  order->add_flag("--json", o.json, "Single-line JSON record");

  auto* value = app.add_subcommand("value", "Exact decimal N(n,k)");
  add_query(value, false);
  value->add_option("--oracle-budget", o.budget, "Largest n evaluated exactly");

  auto* row = app.add_subcommand("row", "Render one row of the mod-p triangle");
  row->add_option("--p", o.p, "Prime")->required();
  row->add_option("--n", o.n, "Row index n >= 1")->required();
  row->add_option("--k", o.ks, "Sample these columns only (csv)")
      ->delimiter(',');
  add_symbols(row);

  auto* triangle = app.add_subcommand("triangle", "Render rows 1..rows");
  triangle->add_option("--p", o.p, "Prime")->required();
  triangle->add_option("--rows", o.rows, "Number of rows")->required();
  add_symbols(triangle);

  auto* verify = app.add_subcommand("verify", "Check the fast path against exact values");
  verify->add_option("--p", o.p, "Prime")->required();
  verify->add_option("--max-n", o.max_n, "Largest row checked")->required();
  verify->add_option("--oracle-budget", o.budget, "Largest n evaluated exactly");
  verify->add_option("--jobs", o.jobs, "Worker threads");
  verify->add_flag("--json", o.json, "Single-line JSON record");

  auto* bench = app.add_subcommand("bench", "Time the predicate at large n");
  bench->add_option("--p", o.p, "Prime")->required();
  auto* n_exp = bench->add_option("--n-exp", o.n_exp, "Use n = 10^E");
  auto* n_abs = bench->add_option("--n", o.bench_n, "Use this n");
  n_exp->excludes(n_abs);
  bench->add_option("--samples", o.samples, "Number of sampled k")->required();
  bench->add_option("--seed", o.seed, "Sampling seed");
  bench->add_flag("--interior", o.interior, "Sample k in [1, n-2]");
  bench->add_flag("--json", o.json, "Single-line JSON record");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream body;
  int status = kOk;
  try {
    if (divides->parsed()) {
      status = cmd_divides(o, body);
    } else if (order->parsed()) {
      status = cmd_order(o, body);
    } else if (value->parsed()) {
      status = cmd_value(o, body);
    } else if (row->parsed()) {
      status = cmd_row(o, body);
    } else if (triangle->parsed()) {
      status = cmd_triangle(o, body);
    } else if (verify->parsed()) {
      status = cmd_verify(o, body);
    } else {
      status = cmd_bench(o, body);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (o.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << body.str()) || !file.flush()) {
      err << "error: cannot write " << o.out_path << '\n';
      return kUsage;
    }
  }
  return status;
}

}  // namespace narayana::cli
