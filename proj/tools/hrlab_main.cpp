// hrlab command-line front end.
//
// Subcommands:
//   constants    sharp-constant tables A_{n,gamma}, C_{n,gamma}
//   verify       inequality slack suites over a parameter sweep
//   factor-check factorization-identity residuals on random bumps
//   probe        Rayleigh-quotient optimality probe
//   sweep        constants + verify + probe driven by one configuration
//
// Exit codes: 0 all checks pass, 1 slack/residual/consistency violation,
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "hrlab/engine.hpp"
#include "hrlab/probe.hpp"
#include "hrlab/quadrature.hpp"
#include "hrlab/reporting.hpp"
#include "hrlab/rng.hpp"
#include "hrlab/version.hpp"

namespace {

using hrlab::Record;

// ---------------------------------------------------------------------------
// list parsing: "2,3,4", "2..6", "-2:4:0.5"
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split(text, ',')) {
    const auto dots = piece.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(piece.substr(0, dots));
      const int hi = std::stoi(piece.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else if (!piece.empty()) {
      out.push_back(std::stoi(piece));
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty integer list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& piece : split(text, ',')) {
    const auto dots = piece.find("..");
    const auto colon = piece.find(':');
    if (dots != std::string::npos) {
      const int lo = std::stoi(piece.substr(0, dots));
      const int hi = std::stoi(piece.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else if (colon != std::string::npos) {
      const auto parts = split(piece, ':');
      if (parts.size() != 3) throw CLI::ValidationError("range must be lo:hi:step");
      const double lo = std::stod(parts[0]);
      const double hi = std::stod(parts[1]);
      const double step = std::stod(parts[2]);
      if (!(step > 0.0)) throw CLI::ValidationError("range step must be positive");
      for (double v = lo; v <= hi + 1e-12 * std::fabs(step); v += step) out.push_back(v);
    } else if (!piece.empty()) {
      out.push_back(std::stod(piece));
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty real list");
  return out;
}

// ---------------------------------------------------------------------------
// worker pool with deterministic merge (results stored by index)
// ---------------------------------------------------------------------------

int worker_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  workers = std::min<std::size_t>(std::max(workers, 1), count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// output: CSV (comment header block + one schema per section file) or JSON
// ---------------------------------------------------------------------------

struct OutputSection {
  std::string name;
  std::vector<Record> records;
};

nlohmann::ordered_json record_to_json(const Record& rec) {
  nlohmann::ordered_json j;
  for (const auto& [key, value] : rec) {
    if (value.empty()) {
      j[key] = value;
      continue;
    }
    char* end = nullptr;
    const long long as_int = std::strtoll(value.c_str(), &end, 10);
    if (end && *end == '\0') {
      j[key] = as_int;
      continue;
    }
    const double as_double = std::strtod(value.c_str(), &end);
    if (end && *end == '\0') {
      j[key] = as_double;
    } else {
      j[key] = value;
    }
  }
  return j;
}

void write_stream_csv(std::ostream& os, const Record& meta, const OutputSection& section) {
  for (const auto& [key, value] : meta) os << "# " << key << "=" << value << "\n";
  os << "# section=" << section.name << "\n";
  if (section.records.empty()) return;
  os << hrlab::csv_header(section.records.front()) << "\n";
  for (const Record& rec : section.records) os << hrlab::csv_row(rec) << "\n";
}

int write_outputs(const std::string& out, const std::string& format, const Record& meta,
                  const std::vector<OutputSection>& sections) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    for (const auto& [key, value] : meta) doc["meta"][key] = value;
    for (const OutputSection& section : sections) {
      auto& arr = doc[section.name] = nlohmann::ordered_json::array();
      for (const Record& rec : section.records) arr.push_back(record_to_json(rec));
    }
    if (out == "-") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream f(out);
      if (!f) {
        std::cerr << "hrlab: cannot open output file " << out << "\n";
        return 2;
      }
      f << doc.dump(2) << "\n";
    }
    return 0;
  }

  // CSV: one schema per file; multi-section outputs go to <stem>.<section>.csv
  if (out == "-") {
    for (const OutputSection& section : sections) write_stream_csv(std::cout, meta, section);
    return 0;
  }
  const bool multi = sections.size() > 1;
  for (const OutputSection& section : sections) {
    std::string path = out;
    if (multi) {
      const auto dot = path.rfind(".csv");
      if (dot != std::string::npos && dot == path.size() - 4) path.resize(dot);
      path += "." + section.name + ".csv";
    }
    std::ofstream f(path);
    if (!f) {
      std::cerr << "hrlab: cannot open output file " << path << "\n";
      return 2;
    }
    write_stream_csv(f, meta, section);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// shared option blocks
// ---------------------------------------------------------------------------

struct CommonOptions {
  std::string out = "-";
  std::string format = "csv";
  int workers = 0;  // 0: hardware concurrency (HRLAB_WORKERS overrides)
};

void add_common(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--out", c.out, "Output path ('-' for stdout)");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--workers", c.workers, "Worker threads (0: hardware)")
      ->envname("HRLAB_WORKERS");
}

Record make_meta(const std::string& command, const std::string& canonical) {
  Record meta;
  meta.emplace_back("tool", "hrlab");
  meta.emplace_back("version", hrlab::kVersion);
  meta.emplace_back("command", command);
  meta.emplace_back("spec", canonical);
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hrlab::fnv1a(canonical)));
  meta.emplace_back("spec_hash", hex);
  return meta;
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

struct ConstantsOptions {
  std::string n_list = "2..6";
  std::string gamma_list = "0";
  CommonOptions common;
};

int run_constants(const ConstantsOptions& opt) {
  const std::vector<int> ns = parse_int_list(opt.n_list);
  const std::vector<double> gammas = parse_real_list(opt.gamma_list);

  OutputSection section{"constants", {}};
  for (int n : ns) {
    for (double gamma : gammas) {
      if (n < 2) {
        std::cerr << "hrlab constants: n must be >= 2\n";
        return 2;
      }
      const auto a = hrlab::hardy_rellich_constant(n, gamma);
      const auto c = hrlab::rellich_constant(n, gamma);
      Record rec;
      rec.emplace_back("n", std::to_string(n));
      rec.emplace_back("gamma", hrlab::format_g17(gamma));
      rec.emplace_back("a_value", hrlab::format_g17(a.value));
      rec.emplace_back("a_argmin_j", std::to_string(a.argmin_j));
      rec.emplace_back("a_certified", a.tail_certified ? "1" : "0");
      rec.emplace_back("c_value", hrlab::format_g17(c.value));
      rec.emplace_back("c_argmin_j", std::to_string(c.argmin_j));
      rec.emplace_back("c_certified", c.tail_certified ? "1" : "0");
      section.records.push_back(std::move(rec));
    }
  }
  const std::string canonical = "constants;n=" + opt.n_list + ";gamma=" + opt.gamma_list;
  return write_outputs(opt.common.out, opt.common.format, make_meta("constants", canonical),
                       {section});
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string n_list = "2..6";
  std::string gamma_list = "-2..4";
  std::string depth_list = "0..2";
  std::string modes = "0..5";
  double radius = 1.0;
  double eta = 0.0;  // 0: auto rule eta = e_N * R
  int bumps = 1;
  std::vector<std::string> profiles;  // explicit records
  std::uint64_t seed = 42;
  double residual_tol = 1e-8;
  double inflate_a = 1.0;
  int count = 0;  // 0: full grid
  CommonOptions common;
};

struct VerifyInstance {
  int n;
  double gamma;
  int depth;
  double eta;
  std::size_t index;
};

struct VerifyOutcome {
  std::vector<Record> records;
  bool ok = true;
};

void push_front_columns(Record& rec, std::size_t instance, int mode_j, const std::string& profile) {
  Record head;
  head.emplace_back("instance", std::to_string(instance));
  head.emplace_back("mode_j", mode_j >= 0 ? std::to_string(mode_j) : "");
  head.emplace_back("profile", profile);
  rec.insert(rec.begin(), head.begin(), head.end());
}

Record residual_record(std::size_t instance, const hrlab::Parameters& params, double alpha,
                       int mode_j, const std::string& profile, double residual, double tol) {
  Record rec;
  rec.emplace_back("kind", "factorization");
  rec.emplace_back("n", std::to_string(params.n));
  rec.emplace_back("gamma", hrlab::format_g17(params.gamma));
  rec.emplace_back("big_n", std::to_string(params.depth));
  rec.emplace_back("radius", hrlab::format_g17(params.radius));
  rec.emplace_back("eta", hrlab::format_g17(params.eta));
  rec.emplace_back("alpha", hrlab::format_g17(alpha));
  rec.emplace_back("residual", hrlab::format_g17(residual));
  rec.emplace_back("residual_tol", hrlab::format_g17(tol));
  rec.emplace_back("verdict", residual <= tol ? "pass" : "fail");
  push_front_columns(rec, instance, mode_j, profile);
  return rec;
}

Record inequality_record(std::size_t instance, const hrlab::InequalityReport& rep, int mode_j,
                         const std::string& profile) {
  Record rec = hrlab::report_record(rep);
  push_front_columns(rec, instance, mode_j, profile);
  return rec;
}

hrlab::RadialProfile random_bump(hrlab::Rng& rng, double radius) {
  const double a = radius * rng.uniform(0.05, 0.45);
  const double b = radius * rng.uniform(0.55, 0.95);
  const int p = rng.uniform_int(3, 5);
  const int degree = rng.uniform_int(0, 2);
  std::vector<double> q(degree + 1);
  q[0] = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
  for (std::size_t k = 1; k < q.size(); ++k) q[k] = rng.uniform(-1.0, 1.0);
  return hrlab::make_poly_bump(a, b, p, std::move(q));
}

double auto_eta(int depth, double radius, double requested) {
  if (requested > 0.0) return requested;
  return depth == 0 ? radius : hrlab::iter_exp(depth) * radius;
}

VerifyOutcome run_verify_instance(const VerifyInstance& vi, const VerifyOptions& opt,
                                  const std::vector<int>& modes) {
  VerifyOutcome outcome;
  const auto params = hrlab::validate_params(
      {vi.n, vi.gamma, vi.depth, opt.radius, vi.eta});
  hrlab::Rng rng(hrlab::Rng::mix(opt.seed, vi.index));

  // profile pool: explicit records first, then seeded random bumps
  std::vector<hrlab::RadialProfile> pool;
  for (const std::string& rec : opt.profiles) pool.push_back(hrlab::profile_from_record(rec));
  for (int i = 0; i < opt.bumps; ++i) pool.push_back(random_bump(rng, opt.radius));

  std::vector<hrlab::ModeTerm> terms;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    terms.push_back({hrlab::make_mode(vi.n, modes[m]), pool[m % pool.size()]});
  }
  const hrlab::ModeExpansion expansion(params, std::move(terms));

  hrlab::EngineOptions engine_options;
  engine_options.debug_constant_scale = opt.inflate_a;
  const auto hardy_rellich = hrlab::hardy_rellich_report(expansion, engine_options);
  outcome.records.push_back(inequality_record(vi.index, hardy_rellich, -1, ""));
  outcome.ok &= hardy_rellich.pass;

  const auto rellich = hrlab::rellich_report(expansion, hrlab::EngineOptions{});
  outcome.records.push_back(inequality_record(vi.index, rellich, -1, ""));
  outcome.ok &= rellich.pass;

  // Near-extremal witness: a wide log bump at the argmin degree sits within a
  // few percent of saturating the constant term, so a corrupted constant
  // (--debug-inflate-a) cannot slip through the suite.
  {
    const int j_star = hrlab::hardy_rellich_constant(vi.n, vi.gamma).argmin_j;
    const double sigma = 0.5 * (4.0 - vi.gamma - vi.n);
    const double hi_w = (1.0 - 1e-3) * opt.radius;
    const auto witness =
        hrlab::make_log_bump(hi_w * std::exp(-13.8), hi_w, sigma, {1.0});
    const hrlab::ModeExpansion witness_expansion(
        params, {hrlab::ModeTerm{hrlab::make_mode(vi.n, j_star), witness}});
    const auto witness_report = hrlab::hardy_rellich_report(witness_expansion, engine_options);
    outcome.records.push_back(
        inequality_record(vi.index, witness_report, j_star, hrlab::to_record(witness)));
    outcome.ok &= witness_report.pass;
  }

  const double alpha = vi.gamma + vi.n - 1.0;
  const auto spec = params.log_weight_spec();
  for (const hrlab::ModeTerm& term : expansion.terms()) {
    const std::string profile = hrlab::to_record(term.profile);
    const auto radial = hrlab::radial_hardy_report(term.profile, alpha, spec);
    outcome.records.push_back(inequality_record(vi.index, radial, term.mode.degree, profile));
    outcome.ok &= radial.pass;

    const double residual = hrlab::factorization_residual(term.profile, alpha, spec);
    outcome.records.push_back(residual_record(vi.index, params.raw(), alpha, term.mode.degree,
                                              profile, residual, opt.residual_tol));
    outcome.ok &= residual <= opt.residual_tol;
  }
  return outcome;
}

int run_verify(const VerifyOptions& opt, OutputSection* section_out, bool* ok_out) {
  const std::vector<int> ns = parse_int_list(opt.n_list);
  const std::vector<double> gammas = parse_real_list(opt.gamma_list);
  const std::vector<int> depths = parse_int_list(opt.depth_list);
  const std::vector<int> modes = parse_int_list(opt.modes);

  if (opt.bumps <= 0 && opt.profiles.empty()) {
    std::cerr << "hrlab verify: empty profile manifest (need --bumps > 0 or --profile)\n";
    return 2;
  }
  if (opt.bumps < 0 || opt.radius <= 0.0) {
    std::cerr << "hrlab verify: invalid sweep specification\n";
    return 2;
  }

  std::vector<VerifyInstance> instances;
  try {
    for (int n : ns) {
      for (double gamma : gammas) {
        for (int depth : depths) {
          const double eta = auto_eta(depth, opt.radius, opt.eta);
          // every combination must validate before any work is scheduled
          hrlab::validate_params({n, gamma, depth, opt.radius, eta});
          instances.push_back({n, gamma, depth, eta, instances.size()});
        }
      }
    }
    if (opt.count > 0 && instances.size() > static_cast<std::size_t>(opt.count)) {
      instances.resize(static_cast<std::size_t>(opt.count));
    }
  } catch (const hrlab::Error& e) {
    std::cerr << "hrlab verify: " << e.what() << "\n";
    return 2;
  }

  std::vector<VerifyOutcome> outcomes(instances.size());
  parallel_for(instances.size(), worker_count(opt.common.workers),
               [&](std::size_t i) { outcomes[i] = run_verify_instance(instances[i], opt, modes); });

  OutputSection section{"verify", {}};
  bool ok = true;
  for (const VerifyOutcome& outcome : outcomes) {
    ok &= outcome.ok;
    section.records.insert(section.records.end(), outcome.records.begin(),
                           outcome.records.end());
  }
  if (section_out) {
    *section_out = std::move(section);
    *ok_out = ok;
    return 0;
  }

  std::ostringstream canonical;
  canonical << "verify;n=" << opt.n_list << ";gamma=" << opt.gamma_list
            << ";big_n=" << opt.depth_list << ";modes=" << opt.modes << ";radius=" << opt.radius
            << ";eta=" << opt.eta << ";bumps=" << opt.bumps << ";profiles=" << opt.profiles.size()
            << ";seed=" << opt.seed << ";tol=" << opt.residual_tol
            << ";inflate_a=" << opt.inflate_a << ";count=" << opt.count;
  const int rc = write_outputs(opt.common.out, opt.common.format,
                               make_meta("verify", canonical.str()), {section});
  if (rc != 0) return rc;
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// factor-check
// ---------------------------------------------------------------------------

struct FactorOptions {
  int bumps = 100;
  std::string alpha_list = "-2..3";
  std::string depth_list = "0..3";
  double radius = 1.0;
  double eta = 0.0;  // auto
  std::uint64_t seed = 42;
  double residual_tol = 1e-8;
  CommonOptions common;
};

int run_factor_check(const FactorOptions& opt, OutputSection* section_out, bool* ok_out) {
  const std::vector<double> alphas = parse_real_list(opt.alpha_list);
  const std::vector<int> depths = parse_int_list(opt.depth_list);
  if (opt.bumps <= 0 || opt.radius <= 0.0) {
    std::cerr << "hrlab factor-check: need --bumps > 0 and --radius > 0\n";
    return 2;
  }

  struct Job {
    hrlab::RadialProfile profile;
    double alpha;
    int depth;
    double eta;
    std::size_t index;
  };
  std::vector<Job> jobs;
  for (int b = 0; b < opt.bumps; ++b) {
    hrlab::Rng rng(hrlab::Rng::mix(opt.seed, static_cast<std::uint64_t>(b)));
    const auto profile = random_bump(rng, opt.radius);
    for (double alpha : alphas) {
      for (int depth : depths) {
        jobs.push_back({profile, alpha, depth, auto_eta(depth, opt.radius, opt.eta),
                        jobs.size()});
      }
    }
  }

  std::vector<Record> records(jobs.size());
  std::vector<char> passed(jobs.size(), 1);
  parallel_for(jobs.size(), worker_count(opt.common.workers), [&](std::size_t i) {
    const Job& job = jobs[i];
    const hrlab::LogWeightSpec spec{job.depth, job.eta, opt.radius};
    const double residual = hrlab::factorization_residual(job.profile, job.alpha, spec);
    hrlab::Parameters params{2, 0.0, job.depth, opt.radius, job.eta};
    records[i] = residual_record(job.index, params, job.alpha, -1,
                                 hrlab::to_record(job.profile), residual, opt.residual_tol);
    // the dimensional context does not apply to the 1-D identity
    for (auto& [key, value] : records[i]) {
      if (key == "n" || key == "gamma") value.clear();
    }
    passed[i] = residual <= opt.residual_tol;
  });

  OutputSection section{"factorization", std::move(records)};
  bool ok = true;
  for (char p : passed) ok &= p != 0;

  if (section_out) {
    *section_out = std::move(section);
    *ok_out = ok;
    return 0;
  }
  std::ostringstream canonical;
  canonical << "factor-check;bumps=" << opt.bumps << ";alpha=" << opt.alpha_list
            << ";big_n=" << opt.depth_list << ";radius=" << opt.radius << ";eta=" << opt.eta
            << ";seed=" << opt.seed << ";tol=" << opt.residual_tol;
  const int rc = write_outputs(opt.common.out, opt.common.format,
                               make_meta("factor-check", canonical.str()), {section});
  if (rc != 0) return rc;
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// probe
// ---------------------------------------------------------------------------

struct ProbeOptions {
  std::string n_list = "3..5";
  std::string gamma_list = "0";
  long budget = 2000;
  std::uint64_t seed = 1;
  int modulation_degree = 4;
  double margin = 1e-15;
  double radius = 1.0;
  CommonOptions common;
};

int run_probe(const ProbeOptions& opt, OutputSection* section_out, bool* ok_out) {
  const std::vector<int> ns = parse_int_list(opt.n_list);
  const std::vector<double> gammas = parse_real_list(opt.gamma_list);

  struct Job {
    int n;
    double gamma;
  };
  std::vector<Job> jobs;
  for (int n : ns) {
    for (double gamma : gammas) jobs.push_back({n, gamma});
  }

  std::vector<Record> records(jobs.size());
  std::vector<char> consistent(jobs.size(), 1);
  parallel_for(jobs.size(), worker_count(opt.common.workers), [&](std::size_t i) {
    const Job& job = jobs[i];
    const auto params = hrlab::validate_params({job.n, job.gamma, 0, opt.radius, opt.radius});
    hrlab::TrialFamily family;
    family.mode_j = hrlab::hardy_rellich_constant(job.n, job.gamma).argmin_j;
    family.modulation_degree = opt.modulation_degree;
    family.margin = opt.margin;
    const auto result =
        hrlab::minimize_quotient(family, params, opt.budget, opt.seed + i);

    Record rec;
    rec.emplace_back("n", std::to_string(job.n));
    rec.emplace_back("gamma", hrlab::format_g17(job.gamma));
    Record probe = hrlab::probe_record(result);
    rec.insert(rec.end(), probe.begin(), probe.end());
    // diagnostic: how close the winning trial sits to the second-order limit
    try {
      const auto best = hrlab::profile_from_record(result.best_member);
      const double ratio = hrlab::second_order_ratio(best, params);
      const double t2 = (2.0 - job.gamma - job.n) * (2.0 - job.gamma - job.n) *
                        (4.0 - job.gamma - job.n) * (4.0 - job.gamma - job.n) / 16.0;
      rec.emplace_back("second_order_ratio", hrlab::format_g17(ratio));
      rec.emplace_back("second_order_target", hrlab::format_g17(t2));
    } catch (const hrlab::Error&) {
      rec.emplace_back("second_order_ratio", "");
      rec.emplace_back("second_order_target", "");
    }
    records[i] = std::move(rec);

    const double floor = result.target - 1e-8 * (1.0 + std::fabs(result.target));
    consistent[i] = result.min_quotient_seen >= floor;
  });

  OutputSection section{"probe", std::move(records)};
  bool ok = true;
  for (char c : consistent) ok &= c != 0;

  if (section_out) {
    *section_out = std::move(section);
    *ok_out = ok;
    return 0;
  }
  std::ostringstream canonical;
  canonical << "probe;n=" << opt.n_list << ";gamma=" << opt.gamma_list
            << ";budget=" << opt.budget << ";seed=" << opt.seed
            << ";degree=" << opt.modulation_degree << ";margin=" << opt.margin
            << ";radius=" << opt.radius;
  const int rc = write_outputs(opt.common.out, opt.common.format,
                               make_meta("probe", canonical.str()), {section});
  if (rc != 0) return rc;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hrlab: numerical laboratory for power-weighted Hardy--Rellich-type "
               "inequalities with iterated-logarithm refinements"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key/value config file");
  app.set_version_flag("--version", hrlab::kVersion);

  ConstantsOptions constants_options;
  CLI::App* constants_cmd = app.add_subcommand("constants", "Sharp-constant table");
  constants_cmd->add_option("--n", constants_options.n_list, "Dimensions (list or a..b)")
      ->capture_default_str();
  constants_cmd->add_option("--gamma", constants_options.gamma_list, "Weight exponents")
      ->capture_default_str();
  add_common(constants_cmd, constants_options.common);

  VerifyOptions verify_options;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Inequality slack suites over a sweep");
  verify_cmd->add_option("--n", verify_options.n_list, "Dimensions (list or a..b)")
      ->capture_default_str();
  verify_cmd->add_option("--gamma", verify_options.gamma_list, "Weight exponents")
      ->capture_default_str();
  verify_cmd->add_option("--big-n", verify_options.depth_list, "Refinement depths N")
      ->capture_default_str();
  verify_cmd->add_option("--modes", verify_options.modes, "Spherical degrees j")
      ->capture_default_str();
  verify_cmd->add_option("--radius", verify_options.radius, "Ball radius R")
      ->capture_default_str();
  verify_cmd->add_option("--eta", verify_options.eta, "Log anchor (0: auto rule e_N * R)")
      ->capture_default_str();
  verify_cmd->add_option("--bumps", verify_options.bumps, "Seeded random bumps per instance")
      ->capture_default_str();
  verify_cmd->add_option("--profile", verify_options.profiles,
                         "Explicit profile record (repeatable)");
  verify_cmd->add_option("--seed", verify_options.seed, "Profile draw seed")
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify_options.residual_tol, "Factorization residual bound")
      ->capture_default_str();
  verify_cmd->add_option("--count", verify_options.count, "Limit instance count (0: full grid)")
      ->capture_default_str();
  verify_cmd
      ->add_option("--debug-inflate-a", verify_options.inflate_a,
                   "Falsifiability hook: scale the Hardy--Rellich constant")
      ->capture_default_str();
  add_common(verify_cmd, verify_options.common);

  FactorOptions factor_options;
  CLI::App* factor_cmd =
      app.add_subcommand("factor-check", "Factorization-identity residuals on random bumps");
  factor_cmd->add_option("--bumps", factor_options.bumps, "Seeded random bumps")
      ->capture_default_str();
  factor_cmd->add_option("--alpha", factor_options.alpha_list, "Radial exponents")
      ->capture_default_str();
  factor_cmd->add_option("--big-n", factor_options.depth_list, "Refinement depths N")
      ->capture_default_str();
  factor_cmd->add_option("--radius", factor_options.radius, "Domain radius R")
      ->capture_default_str();
  factor_cmd->add_option("--eta", factor_options.eta, "Log anchor (0: auto rule e_N * R)")
      ->capture_default_str();
  factor_cmd->add_option("--seed", factor_options.seed, "Bump draw seed")
      ->capture_default_str();
  factor_cmd->add_option("--tol", factor_options.residual_tol, "Residual bound")
      ->capture_default_str();
  add_common(factor_cmd, factor_options.common);

  ProbeOptions probe_options;
  CLI::App* probe_cmd = app.add_subcommand("probe", "Rayleigh-quotient optimality probe");
  probe_cmd->add_option("--n", probe_options.n_list, "Dimensions (list or a..b)")
      ->capture_default_str();
  probe_cmd->add_option("--gamma", probe_options.gamma_list, "Weight exponents")
      ->capture_default_str();
  probe_cmd->add_option("--budget", probe_options.budget, "Quotient evaluations per case")
      ->capture_default_str();
  probe_cmd->add_option("--seed", probe_options.seed, "Restart schedule seed")
      ->capture_default_str();
  probe_cmd->add_option("--degree", probe_options.modulation_degree, "Modulation degree")
      ->capture_default_str();
  probe_cmd->add_option("--margin", probe_options.margin, "Support box lower edge / R")
      ->capture_default_str();
  probe_cmd->add_option("--radius", probe_options.radius, "Ball radius R")
      ->capture_default_str();
  add_common(probe_cmd, probe_options.common);

  // sweep: one configuration driving all three suites
  VerifyOptions sweep_verify;
  FactorOptions sweep_factor;
  ProbeOptions sweep_probe;
  CommonOptions sweep_common;
  bool sweep_no_probe = false;
  bool sweep_no_factor = false;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Constants + verify + factor-check + probe in one run");
  sweep_cmd->add_option("--n", sweep_verify.n_list)->capture_default_str();
  sweep_cmd->add_option("--gamma", sweep_verify.gamma_list)->capture_default_str();
  sweep_cmd->add_option("--big-n", sweep_verify.depth_list)->capture_default_str();
  sweep_cmd->add_option("--modes", sweep_verify.modes)->capture_default_str();
  sweep_cmd->add_option("--radius", sweep_verify.radius)->capture_default_str();
  sweep_cmd->add_option("--eta", sweep_verify.eta)->capture_default_str();
  sweep_cmd->add_option("--bumps", sweep_verify.bumps)->capture_default_str();
  sweep_cmd->add_option("--profile", sweep_verify.profiles);
  sweep_cmd->add_option("--seed", sweep_verify.seed)->capture_default_str();
  sweep_cmd->add_option("--tol", sweep_verify.residual_tol)->capture_default_str();
  sweep_cmd->add_option("--count", sweep_verify.count)->capture_default_str();
  sweep_cmd->add_option("--debug-inflate-a", sweep_verify.inflate_a)->capture_default_str();
  sweep_cmd->add_option("--budget", sweep_probe.budget)->capture_default_str();
  sweep_cmd->add_flag("--no-probe", sweep_no_probe, "Skip the optimality probe");
  sweep_cmd->add_flag("--no-factor", sweep_no_factor, "Skip the factorization suite");
  add_common(sweep_cmd, sweep_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (constants_cmd->parsed()) return run_constants(constants_options);
    if (verify_cmd->parsed()) return run_verify(verify_options, nullptr, nullptr);
    if (factor_cmd->parsed()) return run_factor_check(factor_options, nullptr, nullptr);
    if (probe_cmd->parsed()) return run_probe(probe_options, nullptr, nullptr);

    // sweep
    sweep_verify.common = sweep_common;
    sweep_factor.common = sweep_common;
    sweep_factor.seed = sweep_verify.seed;
    sweep_factor.radius = sweep_verify.radius;
    sweep_factor.residual_tol = sweep_verify.residual_tol;
    sweep_probe.common = sweep_common;
    sweep_probe.n_list = sweep_verify.n_list;
    sweep_probe.gamma_list = sweep_verify.gamma_list;
    sweep_probe.radius = sweep_verify.radius;
    sweep_probe.seed = sweep_verify.seed;

    std::vector<OutputSection> sections;

    ConstantsOptions sweep_constants;
    sweep_constants.n_list = sweep_verify.n_list;
    sweep_constants.gamma_list = sweep_verify.gamma_list;
    OutputSection constants_section{"constants", {}};
    {
      for (int n : parse_int_list(sweep_constants.n_list)) {
        for (double gamma : parse_real_list(sweep_constants.gamma_list)) {
          const auto a = hrlab::hardy_rellich_constant(n, gamma);
          const auto c = hrlab::rellich_constant(n, gamma);
          Record rec;
          rec.emplace_back("n", std::to_string(n));
          rec.emplace_back("gamma", hrlab::format_g17(gamma));
          rec.emplace_back("a_value", hrlab::format_g17(a.value));
          rec.emplace_back("a_argmin_j", std::to_string(a.argmin_j));
          rec.emplace_back("a_certified", a.tail_certified ? "1" : "0");
          rec.emplace_back("c_value", hrlab::format_g17(c.value));
          rec.emplace_back("c_argmin_j", std::to_string(c.argmin_j));
          rec.emplace_back("c_certified", c.tail_certified ? "1" : "0");
          constants_section.records.push_back(std::move(rec));
        }
      }
    }
    sections.push_back(std::move(constants_section));

    bool ok = true;
    OutputSection verify_section{"verify", {}};
    bool verify_ok = true;
    int rc = run_verify(sweep_verify, &verify_section, &verify_ok);
    if (rc != 0) return rc;
    sections.push_back(std::move(verify_section));
    ok &= verify_ok;

    if (!sweep_no_factor) {
      OutputSection factor_section{"factorization", {}};
      bool factor_ok = true;
      rc = run_factor_check(sweep_factor, &factor_section, &factor_ok);
      if (rc != 0) return rc;
      sections.push_back(std::move(factor_section));
      ok &= factor_ok;
    }

    if (!sweep_no_probe) {
      OutputSection probe_section{"probe", {}};
      bool probe_ok = true;
      rc = run_probe(sweep_probe, &probe_section, &probe_ok);
      if (rc != 0) return rc;
      sections.push_back(std::move(probe_section));
      ok &= probe_ok;
    }

    std::ostringstream canonical;
    canonical << "sweep;n=" << sweep_verify.n_list << ";gamma=" << sweep_verify.gamma_list
              << ";big_n=" << sweep_verify.depth_list << ";modes=" << sweep_verify.modes
              << ";radius=" << sweep_verify.radius << ";eta=" << sweep_verify.eta
              << ";bumps=" << sweep_verify.bumps << ";seed=" << sweep_verify.seed
              << ";tol=" << sweep_verify.residual_tol << ";budget=" << sweep_probe.budget
              << ";inflate_a=" << sweep_verify.inflate_a;
    rc = write_outputs(sweep_common.out, sweep_common.format,
                       make_meta("sweep", canonical.str()), sections);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
  } catch (const hrlab::Error& e) {
    std::cerr << "hrlab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hrlab: " << e.what() << "\n";
    return 2;
  }
}
