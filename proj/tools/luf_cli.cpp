// Command-line front end over the C API: compute, oracle, verify, gen, bench.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "luf/luf.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kParseError = 2, kBudget = 3 };

constexpr int64_t kDefaultMaxDecode = int64_t{1} << 20;

struct StringDeleter {
  void operator()(luf_string* s) const { luf_string_free(s); }
};
struct ResultDeleter {
  void operator()(luf_result* r) const { luf_result_free(r); }
};
using StringPtr = std::unique_ptr<luf_string, StringDeleter>;
using ResultPtr = std::unique_ptr<luf_result, ResultDeleter>;

/// Failure carrying the process exit code.
struct CliError {
  int code;
  std::string message;
};

int exit_code_for(luf_status status) {
  switch (status) {
    case LUF_ERR_BUDGET_EXCEEDED:
    case LUF_ERR_DECODE_TOO_LARGE: return kBudget;
    default: return kParseError;
  }
}

void check(luf_status status, const std::string& context) {
  if (status == LUF_OK) return;
  std::string message = context + ": " + luf_status_name(status);
  if (*luf_last_error()) message += ": " + std::string(luf_last_error());
  throw CliError{exit_code_for(status), message};
}

int64_t max_decode_from_env() {
  const char* env = std::getenv("LUF_MAX_DECODE");
  if (!env || !*env) return kDefaultMaxDecode;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1) throw CliError{kParseError, "LUF_MAX_DECODE must be a positive integer"};
  return v;
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kParseError, "cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct InputOptions {
  std::string input = "-";
  std::string format = "auto";
  bool keep_newline = false;
};

void add_input_options(CLI::App* app, InputOptions& opts) {
  app->add_option("-i,--input", opts.input, "Input file, '-' for standard input")->capture_default_str();
  app->add_option("-f,--format", opts.format, "rle (c:exp tokens), raw (bytes), or auto (by .rle extension)")
      ->check(CLI::IsMember({"auto", "rle", "raw"}))
      ->capture_default_str();
  app->add_flag("--keep-newline", opts.keep_newline, "Raw format: keep a single trailing newline");
}

StringPtr parse_string(const std::string& content, bool rle, bool keep_newline, const std::string& name) {
  luf_string* s = nullptr;
  if (rle) {
    check(luf_string_from_rle_text(content.data(), content.size(), &s), name);
  } else {
    std::string_view bytes = content;
    if (!keep_newline && !bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
    check(luf_string_from_bytes(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), &s), name);
  }
  return StringPtr(s);
}

bool is_rle_path(const std::string& path) { return fs::path(path).extension() == ".rle"; }

StringPtr load(const InputOptions& opts) {
  const bool rle = opts.format == "rle" || (opts.format == "auto" && is_rle_path(opts.input));
  return parse_string(read_all(opts.input), rle, opts.keep_newline, opts.input);
}

std::string symbol_text(uint32_t c) {
  if (c >= 0x20 && c < 0x7f) return std::string(1, static_cast<char>(c));
  char buf[16];
  std::snprintf(buf, sizeof buf, c < 0x100 ? "\\x%02X" : "\\u%04X", c);
  return buf;
}

std::vector<luf_run> runs_of(const luf_string* s) {
  std::vector<luf_run> out(luf_string_runs(s));
  for (size_t k = 0; k < out.size(); ++k) check(luf_string_run(s, k + 1, &out[k]), "run");
  return out;
}

std::string rle_text(const luf_string* s) {
  std::string out;
  for (const luf_run& r : runs_of(s)) {
    if (!out.empty()) out += ' ';
    out += r.symbol < 0x100 && r.symbol > 0x20 && r.symbol < 0x7f ? std::string(1, static_cast<char>(r.symbol))
                                                                   : symbol_text(r.symbol);
    out += ':' + std::to_string(r.exp);
  }
  return out;
}

std::vector<std::pair<int64_t, int64_t>> occurrences_of(const luf_result* r) {
  std::vector<std::pair<int64_t, int64_t>> out(luf_result_count(r));
  for (size_t k = 0; k < out.size(); ++k) check(luf_result_occurrence(r, k, &out[k].first, &out[k].second), "result");
  return out;
}

json report(const luf_string* s, const luf_result* r, const char* algo) {
  json occ = json::array();
  json factors = json::array();
  std::vector<std::vector<std::pair<uint32_t, int64_t>>> seen;
  for (auto [a, b] : occurrences_of(r)) {
    occ.push_back({a, b});
    luf_string* f = nullptr;
    check(luf_string_factor(s, a, b, &f), "factor");
    StringPtr factor(f);
    std::vector<std::pair<uint32_t, int64_t>> key;
    for (const luf_run& run : runs_of(factor.get())) key.emplace_back(run.symbol, run.exp);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    json runs = json::array();
    for (auto [c, e] : key) runs.push_back({symbol_text(c), e});
    factors.push_back(runs);
    seen.push_back(std::move(key));
  }
  luf_stats st;
  check(luf_result_stats(r, &st), "stats");
  return {
      {"n", luf_string_length(s)},
      {"m", luf_string_runs(s)},
      {"length", luf_result_length(r)},
      {"occurrences", occ},
      {"factors_rle", factors},
      {"algo", algo},
      {"stats",
       {{"run_comparisons", st.run_comparisons},
        {"rmq_queries", st.rmq_queries},
        {"wlsq_node_visits", st.wlsq_node_visits},
        {"wlsq_search_steps", st.wlsq_search_steps},
        {"wlsq_queries", st.wlsq_queries},
        {"wlsq_step_bound_violations", st.wlsq_step_bound_violations},
        {"total_ops", st.total_ops},
        {"peak_aux_words", st.peak_words},
        {"wall_seconds", st.wall_seconds}}},
  };
}

ResultPtr compute(const luf_string* s, unsigned threads, bool cascade) {
  luf_options opts;
  luf_options_init(&opts);
  opts.threads = threads;
  opts.cascade = cascade ? 1 : 0;
  luf_result* r = nullptr;
  check(luf_compute(s, &opts, &r), "compute");
  return ResultPtr(r);
}

ResultPtr oracle(const luf_string* s, int64_t max_decode) {
  luf_result* r = nullptr;
  check(luf_oracle(s, max_decode, &r), "oracle");
  return ResultPtr(r);
}

void print_json(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

// ---------------------------------------------------------------------------
// Corpus generation.

struct ExpDistribution {
  enum Kind { kOnes, kUniform, kGeometric } kind = kUniform;
  int64_t lo = 1, hi = 20;
  double p = 0.3;

  int64_t draw(std::mt19937_64& rng) const {
    switch (kind) {
      case kOnes: return 1;
      case kUniform: return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
      case kGeometric: return 1 + std::geometric_distribution<int64_t>(p)(rng);
    }
    return 1;
  }
};

ExpDistribution parse_exp(const std::string& desc) {
  ExpDistribution d;
  try {
    if (desc == "all-1" || desc == "ones") {
      d.kind = ExpDistribution::kOnes;
    } else if (desc.rfind("uniform:", 0) == 0) {
      const std::string range = desc.substr(8);
      const auto dots = range.find("..");
      d.kind = ExpDistribution::kUniform;
      d.lo = dots == std::string::npos ? 1 : std::stoll(range.substr(0, dots));
      d.hi = std::stoll(dots == std::string::npos ? range : range.substr(dots + 2));
    } else if (desc.rfind("geometric:", 0) == 0) {
      d.kind = ExpDistribution::kGeometric;
      d.p = std::stod(desc.substr(10));
    } else {
      throw std::invalid_argument(desc);
    }
  } catch (const std::exception&) {
    throw CliError{kParseError, "bad exponent distribution '" + desc + "' (all-1, uniform:A..B, geometric:P)"};
  }
  if (d.lo < 1 || d.hi < d.lo || d.p <= 0 || d.p > 1)
    throw CliError{kParseError, "bad exponent distribution '" + desc + "'"};
  return d;
}

std::pair<size_t, size_t> parse_range(const std::string& desc) {
  try {
    const auto dots = desc.find("..");
    if (dots == std::string::npos) {
      const size_t v = std::stoull(desc);
      return {v, v};
    }
    const size_t lo = std::stoull(desc.substr(0, dots));
    const size_t hi = std::stoull(desc.substr(dots + 2));
    if (lo == 0 || hi < lo) throw std::invalid_argument(desc);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CliError{kParseError, "bad range '" + desc + "' (expected N or A..B)"};
  }
}

std::vector<luf_run> random_runs(std::mt19937_64& rng, uint32_t sigma, size_t m, const ExpDistribution& exp) {
  std::vector<luf_run> runs;
  if (sigma == 1) m = 1;
  std::uniform_int_distribution<uint32_t> sym(0, sigma - 1);
  while (runs.size() < m) {
    const uint32_t c = 'a' + sym(rng);
    if (!runs.empty() && runs.back().symbol == c) continue;
    runs.push_back({c, exp.draw(rng)});
  }
  return runs;
}

StringPtr from_runs(const std::vector<luf_run>& runs) {
  luf_string* s = nullptr;
  check(luf_string_from_runs(runs.data(), runs.size(), &s), "runs");
  return StringPtr(s);
}

/// Named verification corpora: exhaustive-binary-N, exhaustive-ternary-N,
/// exhaustive-SIGMA-N, random-COUNT[-SEED].
class Corpus {
 public:
  explicit Corpus(const std::string& name) : name_(name) {
    auto number_after = [&](const std::string& prefix) -> std::optional<std::string> {
      if (name.rfind(prefix, 0) != 0) return std::nullopt;
      return name.substr(prefix.size());
    };
    try {
      if (auto rest = number_after("exhaustive-binary-")) {
        sigma_ = 2, max_len_ = std::stoul(*rest);
      } else if (auto rest3 = number_after("exhaustive-ternary-")) {
        sigma_ = 3, max_len_ = std::stoul(*rest3);
      } else if (auto restr = number_after("random-")) {
        const auto dash = restr->find('-');
        random_count_ = std::stoul(restr->substr(0, dash));
        if (dash != std::string::npos) seed_ = std::stoull(restr->substr(dash + 1));
        rng_.seed(seed_);
        random_ = true;
      } else {
        throw std::invalid_argument(name);
      }
    } catch (const std::exception&) {
      throw CliError{kParseError, "unknown corpus '" + name +
                                      "' (exhaustive-binary-N, exhaustive-ternary-N, random-COUNT[-SEED])"};
    }
    word_.assign(1, 0);
  }

  /// Next string of the corpus, or nullopt when exhausted.
  std::optional<std::vector<luf_run>> next() {
    if (random_) {
      if (produced_ >= random_count_) return std::nullopt;
      ++produced_;
      static const uint32_t kSigmas[] = {2, 3, 4, 6};
      static const char* kExps[] = {"all-1", "uniform:1..20", "geometric:0.3"};
      const uint32_t sigma = kSigmas[rng_() % 4];
      const auto exp = parse_exp(kExps[rng_() % 3]);
      return random_runs(rng_, sigma, 1 + rng_() % 300, exp);
    }
    if (word_.size() > max_len_) return std::nullopt;
    std::vector<luf_run> runs;
    for (uint32_t c : word_) {
      if (!runs.empty() && runs.back().symbol == 'a' + c) {
        ++runs.back().exp;
      } else {
        runs.push_back({'a' + c, 1});
      }
    }
    // Advance to the next word: increment in base sigma, growing the length on overflow.
    size_t k = word_.size();
    while (k > 0 && word_[k - 1] + 1 == sigma_) word_[--k] = 0;
    if (k == 0) {
      word_.assign(word_.size() + 1, 0);
    } else {
      ++word_[k - 1];
    }
    return runs;
  }

 private:
  std::string name_;
  uint32_t sigma_ = 2;
  size_t max_len_ = 0;
  bool random_ = false;
  size_t random_count_ = 0;
  size_t produced_ = 0;
  uint64_t seed_ = 1;
  std::mt19937_64 rng_;
  std::vector<uint32_t> word_;
};

// ---------------------------------------------------------------------------
// Subcommands.

struct ComputeArgs {
  InputOptions in;
  unsigned threads = 1;
  bool no_cascade = false;
  bool pretty = false;
};

int cmd_compute(const ComputeArgs& a) {
  const auto s = load(a.in);
  const auto r = compute(s.get(), a.threads, !a.no_cascade);
  print_json(report(s.get(), r.get(), "rle"), a.pretty);
  return kOk;
}

struct OracleArgs {
  InputOptions in;
  std::optional<int64_t> max_decode;
  bool pretty = false;
};

int cmd_oracle(const OracleArgs& a) {
  const auto s = load(a.in);
  const auto r = oracle(s.get(), a.max_decode.value_or(max_decode_from_env()));
  print_json(report(s.get(), r.get(), "naive"), a.pretty);
  return kOk;
}

struct VerifyArgs {
  std::string corpus;
  std::vector<std::string> inputs;
  std::string format = "auto";
  bool keep_newline = false;
  unsigned threads = 1;
  bool no_cascade = false;
  std::optional<int64_t> max_decode;
};

int cmd_verify(const VerifyArgs& a) {
  const int64_t max_decode = a.max_decode.value_or(max_decode_from_env());
  size_t checked = 0, mismatches = 0;
  std::optional<std::pair<int64_t, std::string>> smallest;  // (n, RLE text)

  auto check_one = [&](const luf_string* s) {
    const auto fast = compute(s, a.threads, !a.no_cascade);
    const auto slow = oracle(s, max_decode);
    ++checked;
    if (luf_result_length(fast.get()) == luf_result_length(slow.get()) &&
        occurrences_of(fast.get()) == occurrences_of(slow.get()))
      return;
    ++mismatches;
    const int64_t n = luf_string_length(s);
    if (!smallest || n < smallest->first) smallest = {n, rle_text(s)};
  };

  if (!a.corpus.empty()) {
    Corpus corpus(a.corpus);
    while (auto runs = corpus.next()) check_one(from_runs(*runs).get());
  }
  for (const auto& path : a.inputs) {
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
      for (const auto& e : fs::directory_iterator(path))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
    } else {
      files.push_back(path);
    }
    for (const auto& f : files) {
      const bool rle = a.format == "rle" || (a.format == "auto" && f.extension() == ".rle");
      check_one(parse_string(read_all(f.string()), rle, a.keep_newline, f.string()).get());
    }
  }
  if (checked == 0) throw CliError{kParseError, "verify: nothing to check (use --corpus or --input)"};
  if (mismatches == 0) {
    std::cout << "verify: pass (" << checked << " strings)\n";
    return kOk;
  }
  std::cout << "verify: FAIL (" << mismatches << " of " << checked << " strings mismatch)\n"
            << "minimal failing input (n=" << smallest->first << "):\n"
            << smallest->second << '\n';
  return kMismatch;
}

struct GenArgs {
  uint32_t sigma = 2;
  std::string m = "50";
  std::string exp = "uniform:1..20";
  size_t count = 1;
  uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const auto [lo, hi] = parse_range(a.m);
  const auto exp = parse_exp(a.exp);
  if (a.sigma < 1 || a.sigma > 26) throw CliError{kParseError, "--sigma must be in 1..26"};
  std::mt19937_64 rng(a.seed);
  if (!a.out.empty()) fs::create_directories(a.out);
  for (size_t k = 0; k < a.count; ++k) {
    const size_t m = std::uniform_int_distribution<size_t>(lo, hi)(rng);
    const auto s = from_runs(random_runs(rng, a.sigma, m, exp));
    const std::string line = rle_text(s.get()) + '\n';
    if (a.out.empty()) {
      std::cout << line;
      continue;
    }
    char name[32];
    std::snprintf(name, sizeof name, "gen_%05zu.rle", k);
    std::ofstream f(fs::path(a.out) / name);
    f << "# sigma=" << a.sigma << " m=" << m << " exp=" << a.exp << " seed=" << a.seed << " index=" << k << '\n'
      << line;
    if (!f) throw CliError{kParseError, "cannot write " + (fs::path(a.out) / name).string()};
  }
  return kOk;
}

struct BenchArgs {
  std::string family = "random";
  std::vector<size_t> m{100, 1000};
  int64_t exp_max = 20;
  uint32_t sigma = 2;
  uint64_t seed = 1;
  unsigned repeat = 1;
  unsigned threads = 1;
  bool no_cascade = false;
};

/// Benchmark families: random (uniform exponents up to exp_max), tight
/// ((a^e b^e)^(m/2) with e = exp_max), staircase (a^E b^(E-1) c^E ... over
/// sigma symbols, E = exp_max).
std::vector<luf_run> family_runs(const BenchArgs& a, size_t m, std::mt19937_64& rng) {
  if (a.family == "random") {
    ExpDistribution d;
    d.hi = a.exp_max;
    return random_runs(rng, std::max<uint32_t>(a.sigma, 2), m, d);
  }
  std::vector<luf_run> runs;
  for (size_t k = 0; k < m; ++k) {
    if (a.family == "tight") {
      runs.push_back({static_cast<uint32_t>('a' + k % 2), a.exp_max});
    } else {
      const uint32_t sigma = std::max<uint32_t>(a.sigma, 3);
      runs.push_back({static_cast<uint32_t>('a' + k % sigma), k % 2 ? a.exp_max - 1 : a.exp_max});
    }
  }
  return runs;
}

int cmd_bench(const BenchArgs& a) {
  if (a.family != "random" && a.family != "tight" && a.family != "staircase")
    throw CliError{kParseError, "unknown family '" + a.family + "' (random, tight, staircase)"};
  if (a.exp_max < 2) throw CliError{kParseError, "--exp-max must be at least 2"};
  std::cout << "family,m,n,length,occurrences,run_comparisons,rmq_queries,wlsq_node_visits,wlsq_search_steps,"
               "wlsq_queries,wlsq_step_bound_violations,total_ops,peak_aux_words,wall_seconds\n";
  std::mt19937_64 rng(a.seed);
  for (size_t m : a.m) {
    const auto s = from_runs(family_runs(a, m, rng));
    for (unsigned rep = 0; rep < a.repeat; ++rep) {
      const auto r = compute(s.get(), a.threads, !a.no_cascade);
      luf_stats st;
      check(luf_result_stats(r.get(), &st), "stats");
      std::cout << a.family << ',' << m << ',' << luf_string_length(s.get()) << ',' << luf_result_length(r.get())
                << ',' << luf_result_count(r.get()) << ',' << st.run_comparisons << ',' << st.rmq_queries << ','
                << st.wlsq_node_visits << ',' << st.wlsq_search_steps << ',' << st.wlsq_queries << ','
                << st.wlsq_step_bound_violations << ',' << st.total_ops << ','
                << st.peak_words << ',' << st.wall_seconds << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest unbordered factors of run-length encoded strings"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* c = app.add_subcommand("compute", "Compute all longest unbordered factors (JSON report)");
  add_input_options(c, compute_args.in);
  c->add_option("--threads", compute_args.threads, "Worker threads for stage-parallel execution")
      ->check(CLI::Range(1u, 256u));
  c->add_flag("--no-cascade", compute_args.no_cascade, "Per-node binary search instead of fractional cascading");
  c->add_flag("--pretty", compute_args.pretty, "Indent the JSON output");

  OracleArgs oracle_args;
  auto* o = app.add_subcommand("oracle", "Brute-force reference on the decoded text (JSON report)");
  add_input_options(o, oracle_args.in);
  o->add_option("--max-decode", oracle_args.max_decode, "Decode budget in symbols (default: LUF_MAX_DECODE or 2^20)");
  o->add_flag("--pretty", oracle_args.pretty, "Indent the JSON output");

  VerifyArgs verify_args;
  auto* v = app.add_subcommand("verify", "Compare compute against the oracle; exit 1 on any mismatch");
  v->add_option("--corpus", verify_args.corpus,
                "Named corpus: exhaustive-binary-N, exhaustive-ternary-N, random-COUNT[-SEED]");
  v->add_option("-i,--input", verify_args.inputs, "Input files or directories");
  v->add_option("-f,--format", verify_args.format, "rle, raw, or auto (by .rle extension)")
      ->check(CLI::IsMember({"auto", "rle", "raw"}));
  v->add_flag("--keep-newline", verify_args.keep_newline, "Raw format: keep a single trailing newline");
  v->add_option("--threads", verify_args.threads)->check(CLI::Range(1u, 256u));
  v->add_flag("--no-cascade", verify_args.no_cascade);
  v->add_option("--max-decode", verify_args.max_decode, "Decode budget in symbols (default: LUF_MAX_DECODE or 2^20)");

  GenArgs gen_args;
  auto* g = app.add_subcommand("gen", "Generate reproducible random RLE corpora");
  g->add_option("--sigma", gen_args.sigma, "Alphabet size (1..26)")->capture_default_str();
  g->add_option("--m", gen_args.m, "Run count N or range A..B")->capture_default_str();
  g->add_option("--exp", gen_args.exp, "all-1, uniform:A..B, or geometric:P")->capture_default_str();
  g->add_option("--count", gen_args.count)->capture_default_str();
  g->add_option("--seed", gen_args.seed)->capture_default_str();
  g->add_option("--out", gen_args.out, "Output directory (default: one string per line on stdout)");

  BenchArgs bench_args;
  auto* b = app.add_subcommand("bench", "Operation counters and timing as CSV");
  b->add_option("--family", bench_args.family, "random, tight, or staircase")->capture_default_str();
  b->add_option("--m", bench_args.m, "Run counts")->delimiter(',')->capture_default_str();
  b->add_option("--exp-max", bench_args.exp_max, "Largest exponent")->capture_default_str();
  b->add_option("--sigma", bench_args.sigma)->capture_default_str();
  b->add_option("--seed", bench_args.seed)->capture_default_str();
  b->add_option("--repeat", bench_args.repeat)->capture_default_str();
  b->add_option("--threads", bench_args.threads)->check(CLI::Range(1u, 256u));
  b->add_flag("--no-cascade", bench_args.no_cascade);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*c) return cmd_compute(compute_args);
    if (*o) return cmd_oracle(oracle_args);
    if (*v) return cmd_verify(verify_args);
    if (*g) return cmd_gen(gen_args);
    if (*b) return cmd_bench(bench_args);
  } catch (const CliError& e) {
    std::cerr << "luf: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "luf: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}
