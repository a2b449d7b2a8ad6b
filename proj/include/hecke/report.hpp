#pragma once

#include <string>
#include <vector>

#include "hecke/asymptotics.hpp"
#include "hecke/counting.hpp"
#include "hecke/enumerate.hpp"

namespace hecke {

/// One row of the count/compare table. Numeric fields are pre-rendered,
/// locale-free strings; empty string means "not available".
struct CountReportRow {
  int p = 0;
  long long x = 0;
  std::string exact;           // total class count by enumeration
  std::string dp_exact;        // symmetric-shape count via DP (total count for odd p)
  std::string estimate_log10;  // fixed-point, 6 decimals
  std::string ratio;           // exact / estimate, fixed-point, 6 decimals
  std::string primitive;
  std::string nonprimitive;
};

/// Header exactly `p,x,exact,dp_exact,estimate_log10,ratio,primitive,nonprimitive`,
/// LF line ends, rows sorted by (p, x) by the caller.
std::string emit_csv(const std::vector<CountReportRow>& rows);

/// JSON array mirroring the CSV fields; counts stay strings.
std::string emit_json(const std::vector<CountReportRow>& rows);

/// Fixed-point rendering with six decimals, locale independent.
std::string fixed6(double v);

/// Assembles a compare row. Enumeration fills `exact` only when
/// x <= enum_max; the estimate uses thm1/thm2 by parity.
CountReportRow make_compare_row(const HeckeParams& params, long long x, long long enum_max,
                                int parallelism);

std::string records_csv(int p, const std::vector<ReciprocalClassRecord>& records);
std::string records_json(int p, const std::vector<ReciprocalClassRecord>& records);
std::string records_list(const std::vector<ReciprocalClassRecord>& records);

}  // namespace hecke
