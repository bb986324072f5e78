#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subsum/bigint.h"

namespace subsum {

enum class CheckId {
  THM_NUM_MINUS1,
  THM_NUM_I_ABS2,
  THM_NUM_ZETA6_ABS2,
  PROP_DEN_AT_1,
  PROP_NUM_AT_1_AS_STATED,
  PROP_NUM_AT_1_CORRECTED,
  PROP_QG,
  PROP_QD,
  PROP_DEG,
  COR_S_SEQ,
  C_MATRIX,
  C_COUNTS,
  C_COUNTS_AS_STATED,
  SHAPE_ORDINARY,
  CONJ_GCD_COPRIME,
  CONJ_IRREDUCIBLE,
  CONJ_NUM0_UNIMODAL,
  CONJ_DEN_LOGCONCAVE,
  PROP_NUMR_IDENTITY,
  LEMMA_RESTRICTED_SUM,
  BIN_RECURRENCE,
  BIN_MINUS1,
  BIN_THIRDROOT,
  BIN_NONDIV_CONJ,
  BIN_BCOEFFS,
  BIN_B2MOD4,
  BIN_DDEG,
  BIN_SHAPE_CONJ,
  POW_COLORED,
  POW_MINUS1,
  POW_DERIV_VAL,
  ODD_MINUS1_CONJ,
  TERNARY_S_CONJ,
  TERNARY_T_CONJ,
  TERNARY_T_DELTA,
};

/// How a check's verdict affects the exit status of a run.
enum class CheckKind {
  Proven,      // always gating
  Conjecture,  // gating only in strict mode
  Report,      // no verdict, never gating
};

struct CheckInfo {
  CheckId id;
  std::string_view name;
  std::string_view statement;
  CheckKind kind;
  std::int64_t n_min;
  std::int64_t n_max;  // 0: no upper limit
  std::int64_t default_lo;
  std::int64_t default_hi;
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo& check_info(CheckId id);
std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

/// Named groups of checks: "all", "proven", "conjectures", "ordinary",
/// "binary", "power-sums", "families". Returns nullopt for unknown names.
std::optional<std::vector<CheckId>> check_suite(std::string_view name);

enum class CheckStatus { Pass, Fail, Inconclusive, ReportOnly };

std::string_view to_string(CheckStatus status);

struct CheckReport {
  CheckId check = CheckId::THM_NUM_MINUS1;
  std::int64_t n = 0;
  CheckStatus status = CheckStatus::Inconclusive;
  bool gating = false;
  std::string computed;
  std::string expected;
  double elapsed_ms = 0.0;
};

/// A gating report that did not pass.
bool is_gating_failure(const CheckReport& report);

class NoExpectationError : public std::invalid_argument {
 public:
  explicit NoExpectationError(CheckId id);
};

using ExactValue = std::variant<BigInt, std::vector<BigInt>>;

std::string format_exact(const ExactValue& value);

/// The closed-form expectation of a check at n. Throws NoExpectationError
/// for checks that only compare two computations or test a property.
ExactValue expected_value(CheckId check, std::int64_t n);

struct RunOptions {
  bool strict = false;
  unsigned jobs = 1;
};

/// One report per n in [n_lo, n_hi]. Throws std::out_of_range when the range
/// leaves the check's domain or is empty.
std::vector<CheckReport> run_check(CheckId check, std::int64_t n_lo, std::int64_t n_hi, const RunOptions& options = {});

struct CheckRequest {
  CheckId check;
  std::int64_t n_lo;
  std::int64_t n_hi;
};

/// Runs all requests, parallel over (check, n) with options.jobs workers;
/// the result order is the request order, then n ascending, independent of
/// the worker count.
std::vector<CheckReport> run_checks(const std::vector<CheckRequest>& requests, const RunOptions& options = {});

/// Requests covering each check of a suite over its default range, clipped
/// to [n_lo, n_hi] when given.
std::vector<CheckRequest> suite_requests(const std::vector<CheckId>& checks,
                                         std::optional<std::int64_t> n_lo = std::nullopt,
                                         std::optional<std::int64_t> n_hi = std::nullopt);

/// The literal reading u(n) = t(3n-2) / 2^{2n}, t(n) = u(n+1) - u(n), for
/// 1 <= n <= n_hi. Always ReportOnly.
std::vector<CheckReport> ternary_t_interpretation(std::int64_t n_hi);

}  // namespace subsum
