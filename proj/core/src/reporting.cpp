#include "hrlab/reporting.hpp"

#include <cstdio>

namespace hrlab {

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

constexpr std::size_t kMaxRhsTerms = 3;

void push(Record& rec, const std::string& key, const std::string& value) {
  rec.emplace_back(key, value);
}

void push(Record& rec, const std::string& key, double value) {
  rec.emplace_back(key, format_g17(value));
}

}  // namespace

Record report_record(const InequalityReport& rep) {
  Record rec;
  push(rec, "kind", rep.kind);
  if (rep.params) {
    push(rec, "n", std::to_string(rep.params->n));
    push(rec, "gamma", rep.params->gamma);
    push(rec, "big_n", std::to_string(rep.params->depth));
    push(rec, "radius", rep.params->radius);
    push(rec, "eta", rep.params->eta);
  } else {
    push(rec, "n", "");
    push(rec, "gamma", "");
    push(rec, "big_n", "");
    push(rec, "radius", "");
    push(rec, "eta", "");
  }
  push(rec, "alpha", rep.radial_alpha ? format_g17(*rep.radial_alpha) : "");
  push(rec, "lhs", rep.lhs);
  for (std::size_t i = 0; i < kMaxRhsTerms; ++i) {
    const std::string tag = "rhs" + std::to_string(i + 1);
    if (i < rep.rhs_terms.size()) {
      push(rec, tag + "_name", rep.rhs_terms[i].name);
      push(rec, tag, rep.rhs_terms[i].value);
    } else {
      push(rec, tag + "_name", "");
      push(rec, tag, "");
    }
  }
  push(rec, "rhs_total", rep.rhs_total);
  push(rec, "slack", rep.slack);
  push(rec, "quad_err", rep.quad_err);
  push(rec, "tolerance", rep.tolerance);
  push(rec, "verdict", rep.pass ? "pass" : "fail");
  return rec;
}

Record probe_record(const ProbeResult& res) {
  Record rec;
  push(rec, "kind", std::string("probe"));
  push(rec, "mode_j", std::to_string(res.mode_j));
  push(rec, "best_quotient", res.best_quotient);
  push(rec, "target", res.target);
  push(rec, "gap", res.gap);
  push(rec, "evaluations", std::to_string(res.evaluations));
  push(rec, "budget_exhausted", res.budget_exhausted ? "1" : "0");
  push(rec, "optimality", res.optimality_open ? "open" : "claimed");
  push(rec, "min_quotient_seen", res.min_quotient_seen);
  push(rec, "best_member", res.best_member);
  return rec;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_header(const Record& record) {
  std::string out;
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(record[i].first);
  }
  return out;
}

std::string csv_row(const Record& record) {
  std::string out;
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(record[i].second);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace hrlab
