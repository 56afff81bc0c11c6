#ifndef HRLAB_REPORTING_HPP
#define HRLAB_REPORTING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hrlab/engine.hpp"
#include "hrlab/probe.hpp"

namespace hrlab {

/// Ordered flat key/value record; the unit of CSV and JSON emission.
using Record = std::vector<std::pair<std::string, std::string>>;

/// Shortest fixed formatting that preserves doubles exactly: %.17g.
std::string format_g17(double v);

/// Flatten a report into a record with stable field order. Reports without a
/// dimensional context (the 1-D radial inequality) leave n/gamma/... empty.
Record report_record(const InequalityReport& rep);
Record probe_record(const ProbeResult& res);

std::string csv_escape(const std::string& field);
std::string csv_header(const Record& record);
std::string csv_row(const Record& record);

/// FNV-1a 64-bit hash; stamps a canonical sweep description into output
/// headers so records stay traceable to the configuration that produced them.
std::uint64_t fnv1a(const std::string& data);

}  // namespace hrlab

#endif  // HRLAB_REPORTING_HPP
