#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "hecke/counting.hpp"
#include "hecke/params.hpp"

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;

/// Standard normal CDF; absolute error <= 1e-12 on [-37, 8].
double phi_cdf(double z);

/// log Phi(z); relative error of the log value <= 1e-9. Uses direct
/// evaluation for z >= -8 and a Mills-ratio asymptotic series below.
double log_phi_cdf(double z);

/// CLT parameters and summation ranges for one counting problem.
struct CltParams {
  Setting setting;
  Rational mu;
  Rational sigma2;
  long long base;  // 2r or 2r-1
  int r;
  bool half;  // theorem settings carry the 1/2 prefactor

  long long n_full_max(long long x) const;  // full-weight sum runs n = 1..n_full_max
  long long n_tail_max(long long x) const;  // Phi-weighted tail runs n_full_max+1..n_tail_max
};

/// Exact rational (mu, sigma^2) per setting. Throws ParityMismatchError when
/// the theorem settings disagree with p.
CltParams clt_params(const HeckeParams& params, Setting setting);

struct EstimateValue {
  double log10_value = 0;    // log10 of the estimate
  std::string decimal_string;
  bool exact = false;        // true when the value is an exactly computed integer
  BigInt exact_value = 0;    // meaningful when exact
  std::vector<std::pair<long long, double>> term_breakdown;  // (n, natural log of term)
};

/// Two-part estimator: sum of base^n for n <= n_full_max plus
/// base^n * Phi((x - n mu)/(sqrt(n) sigma)) up to n_tail_max, halved for the
/// theorem settings; tail terms accumulated by log-sum-exp in ascending n.
EstimateValue estimate_count(const HeckeParams& params, Setting setting, long long x);

/// log10 of a positive big integer, good to ~1e-15 relative.
double log10_big(const BigInt& v);

/// exact / estimate as a double, computed through logs.
double ratio_exact_over_estimate(const BigInt& exact, const EstimateValue& est);

struct Lemma71Report {
  BigInt nonprimitive;     // |W^np_x|
  BigInt w_half;           // |W_{floor(x/2)}|
  BigInt rhs_proof;        // x(x+1)/2 * w_half
  BigInt rhs_statement;    // 2x(x+1) * w_half
  bool holds_proof = false;
  bool holds_statement = false;
};

/// Exact check of the non-primitive bound at enumeration scale.
Lemma71Report check_lemma71(const HeckeParams& params, long long x);

struct Lemma72Report {
  BigInt w_half;
  BigInt w_x;
  double min_c;  // sqrt(2 w_half^2 / w_x), smallest constant closing the bound
};

/// Throws EmptyCountError when no class has length <= x.
Lemma72Report check_lemma72(const HeckeParams& params, long long x);

struct PrimitiveRatioPoint {
  long long x;
  BigInt primitive;
  BigInt total;
};

/// Exact (primitive, total) class counts over a grid; entries with total = 0
/// (x below the minimal class length) are reported with zeros.
std::vector<PrimitiveRatioPoint> primitive_ratio_series(const HeckeParams& params,
                                                        const std::vector<long long>& grid);

}  // namespace hecke
