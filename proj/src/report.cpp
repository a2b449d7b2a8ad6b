#include "hecke/report.hpp"

#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

namespace hecke {

std::string fixed6(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
  return std::string(buf, ptr);
}

std::string emit_csv(const std::vector<CountReportRow>& rows) {
  std::string out = "p,x,exact,dp_exact,estimate_log10,ratio,primitive,nonprimitive\n";
  for (const CountReportRow& r : rows) {
    out += std::to_string(r.p);
    out += ',';
    out += std::to_string(r.x);
    out += ',';
    out += r.exact;
    out += ',';
    out += r.dp_exact;
    out += ',';
    out += r.estimate_log10;
    out += ',';
    out += r.ratio;
    out += ',';
    out += r.primitive;
    out += ',';
    out += r.nonprimitive;
    out += '\n';
  }
  return out;
}

std::string emit_json(const std::vector<CountReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CountReportRow& r : rows) {
    nlohmann::ordered_json obj;
    obj["p"] = r.p;
    obj["x"] = r.x;
    obj["exact"] = r.exact;
    obj["dp_exact"] = r.dp_exact;
    obj["estimate_log10"] = r.estimate_log10;
    obj["ratio"] = r.ratio;
    obj["primitive"] = r.primitive;
    obj["nonprimitive"] = r.nonprimitive;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

CountReportRow make_compare_row(const HeckeParams& params, long long x, long long enum_max,
                                int parallelism) {
  CountReportRow row;
  row.p = params.p;
  row.x = x;
  row.dp_exact = symmetric_class_count_exact(params, x).str();
  const EstimateValue est =
      estimate_count(params, params.even() ? Setting::Thm2 : Setting::Thm1, x);
  row.estimate_log10 = fixed6(est.log10_value);
  if (x <= enum_max) {
    const auto classes = enumerate_reciprocal_classes(params, x, parallelism);
    const auto [prim, nonprim] = split_primitive_counts(classes);
    row.exact = std::to_string(classes.size());
    row.primitive = std::to_string(prim);
    row.nonprimitive = std::to_string(nonprim);
    if (!classes.empty())
      row.ratio = fixed6(ratio_exact_over_estimate(BigInt(classes.size()), est));
  }
  return row;
}

namespace {

std::string record_type(const ReciprocalClassRecord& r) { return to_string(r.rtype); }

}  // namespace

std::string records_csv(int p, const std::vector<ReciprocalClassRecord>& records) {
  std::string out = "p,length,type,primitive,canonical\n";
  for (const auto& r : records) {
    out += std::to_string(p);
    out += ',';
    out += std::to_string(r.length);
    out += ',';
    out += record_type(r);
    out += ',';
    out += r.primitive ? "true" : "false";
    out += ',';
    out += r.key;
    out += '\n';
  }
  return out;
}

std::string records_json(int p, const std::vector<ReciprocalClassRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["p"] = p;
    obj["length"] = r.length;
    obj["type"] = record_type(r);
    obj["primitive"] = r.primitive;
    obj["canonical"] = r.key;
    nlohmann::ordered_json shapes = nlohmann::ordered_json::array();
    if (r.shapes.symmetric) shapes.push_back("symmetric");
    if (r.shapes.p_reciprocal) shapes.push_back("p-reciprocal");
    if (r.shapes.mixed) shapes.push_back("symmetric-p-reciprocal");
    if (r.shapes.power) shapes.push_back("power-of-iota-gamma-tilde");
    obj["shapes"] = std::move(shapes);
    if (r.tuple) obj["tuple"] = *r.tuple;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string records_list(const std::vector<ReciprocalClassRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += std::to_string(r.length);
    out += '\t';
    out += record_type(r);
    out += '\t';
    out += r.primitive ? "true" : "false";
    out += '\t';
    out += r.key;
    out += '\n';
  }
  return out;
}

}  // namespace hecke
