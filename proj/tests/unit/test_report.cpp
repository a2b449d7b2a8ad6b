#include <sstream>

#include "doctest.h"
#include "hecke/report.hpp"

using namespace hecke;

TEST_CASE("emit_csv layout") {
  CountReportRow row;
  row.p = 3;
  row.x = 8;
  row.exact = "3";
  row.dp_exact = "3";
  row.estimate_log10 = "0.477121";
  row.ratio = "1.000000";
  row.primitive = "2";
  row.nonprimitive = "1";
  CHECK(emit_csv({row}) ==
        "p,x,exact,dp_exact,estimate_log10,ratio,primitive,nonprimitive\n"
        "3,8,3,3,0.477121,1.000000,2,1\n");
  CHECK(emit_csv({}) == "p,x,exact,dp_exact,estimate_log10,ratio,primitive,nonprimitive\n");
}

TEST_CASE("emit_json mirrors the csv fields") {
  CountReportRow row;
  row.p = 3;
  row.x = 8;
  row.exact = "3";
  row.dp_exact = "3";
  row.estimate_log10 = "0.477121";
  row.ratio = "1.000000";
  row.primitive = "2";
  row.nonprimitive = "1";
  const std::string json = emit_json({row});
  CHECK(json.find("\"exact\": \"3\"") != std::string::npos);
  CHECK(json.find("\"p\": 3") != std::string::npos);
  CHECK(json.find("\"estimate_log10\": \"0.477121\"") != std::string::npos);
}

TEST_CASE("compare row for p=3, x=8 matches the frozen expectation") {
  const CountReportRow row = make_compare_row(HeckeParams(3), 8, 24, 1);
  CHECK(row.exact == "3");
  CHECK(row.dp_exact == "3");
  CHECK(row.estimate_log10 == "0.477121");
  CHECK(row.ratio == "1.000000");
  CHECK(row.primitive == "2");
  CHECK(row.nonprimitive == "1");
}

TEST_CASE("csv rows parse back to the same values") {
  std::vector<CountReportRow> rows;
  rows.push_back(make_compare_row(HeckeParams(3), 8, 24, 1));
  rows.push_back(make_compare_row(HeckeParams(5), 12, 24, 1));
  rows.push_back(make_compare_row(HeckeParams(5), 100, 24, 1));
  const std::string csv = emit_csv(rows);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  for (const CountReportRow& expected : rows) {
    REQUIRE(std::getline(in, line));
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    REQUIRE(fields.size() == 8);
    CHECK(fields[0] == std::to_string(expected.p));
    CHECK(fields[1] == std::to_string(expected.x));
    CHECK(fields[2] == expected.exact);
    CHECK(fields[3] == expected.dp_exact);
    CHECK(fields[4] == expected.estimate_log10);
    CHECK(fields[5] == expected.ratio);
    CHECK(fields[6] == expected.primitive);
    CHECK(fields[7] == expected.nonprimitive);
  }
}

TEST_CASE("large-x compare rows leave enumeration columns empty") {
  const CountReportRow row = make_compare_row(HeckeParams(5), 100, 24, 1);
  CHECK(row.exact.empty());
  CHECK(row.ratio.empty());
  CHECK(row.primitive.empty());
  CHECK(!row.dp_exact.empty());
  CHECK(!row.estimate_log10.empty());
}

TEST_CASE("fixed6 is locale independent and plain") {
  CHECK(fixed6(1.0) == "1.000000");
  CHECK(fixed6(0.4771212547196624) == "0.477121");
  CHECK(fixed6(-2.5) == "-2.500000");
}

TEST_CASE("records_list format") {
  const auto records = enumerate_reciprocal_classes(HeckeParams(3), 8);
  const std::string list = records_list(records);
  CHECK(list.find("4\tsymmetric\ttrue\ti g^1 i g^-1\n") != std::string::npos);
  CHECK(list.find("8\tsymmetric\tfalse\t") != std::string::npos);
}
