#include "app.h"

#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bfile.h"
#include "cache.h"
#include "records.h"
#include "subsum/binary.h"
#include "subsum/cyclo_residue.h"
#include "subsum/cyclotomic.h"
#include "subsum/irreducibility.h"
#include "subsum/power_sums.h"
#include "subsum/store.h"
#include "subsum/subsum.h"
#include "subsum/verify.h"

namespace subsum::cli {

namespace {

std::vector<std::string> decimal_list(std::span<const BigInt> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

template <typename Tag>
Record exponent_object(const ExponentMap<Tag>& map) {
  Record obj = Record::object();
  for (const auto& [index, exponent] : map.entries()) obj[std::to_string(index)] = exponent;
  return obj;
}

Record base_record(const std::string& object, std::int64_t n, const std::string& family) {
  Record r;
  r["object"] = object;
  r["n"] = n;
  r["family"] = family;
  return r;
}

PartFamily family_from(const std::string& name) {
  try {
    return PartFamily::parse(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_nonnegative(std::int64_t n) {
  if (n < 0) throw UsageError("n must be >= 0");
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

// Family a check's objects live in, for the record schema.
std::string check_family(CheckId id) {
  const std::string_view name = check_name(id);
  if (name.starts_with("BIN_")) return "binary";
  if (name.starts_with("ODD_")) return "odd";
  if (name.starts_with("TERNARY_")) return "ternary";
  return "all";
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string object;
  std::int64_t n = 0;
  std::string family = "all";
  std::string format = "json";
  std::string strategy;
  std::int64_t m = 1;
  bool expand = false;
};

const std::set<std::string> kComputeObjects = {"num", "den", "g", "num-star", "den-star", "num-b", "beta", "c-row"};

Record compute_record(const ComputeArgs& a) {
  require_nonnegative(a.n);
  if (!kComputeObjects.contains(a.object)) throw UsageError("unknown object '" + a.object + "'");
  const PartFamily family = family_from(a.family);
  const bool all = family.kind() == FamilyKind::All;
  auto only_all = [&] {
    if (!all) throw UsageError("object '" + a.object + "' is only defined for the family 'all'");
  };
  auto no_strategy = [&] {
    if (!a.strategy.empty()) throw UsageError("object '" + a.object + "' takes no --strategy");
  };

  if (a.object == "num") {
    no_strategy();
    Record r = base_record("num", a.n, family.name());
    r["coeffs"] = decimal_list(num_den(a.n, family)->num.coeffs());
    return r;
  }
  if (a.object == "num-star") {
    NumStarStrategy strategy = NumStarStrategy::PartDP;
    if (a.strategy == "naive") {
      strategy = NumStarStrategy::Naive;
    } else if (!a.strategy.empty() && a.strategy != "partdp") {
      throw UsageError("num-star strategies: partdp, naive");
    }
    const std::string strategy_name = strategy == NumStarStrategy::Naive ? "naive" : "partdp";
    const CacheKey key{"num-star", family.name(), a.n, strategy_name};
    auto store = installed_poly_store();
    std::optional<DensePoly> value = store ? store->load(key) : std::nullopt;
    if (!value) {
      value = num_star(a.n, family, strategy);
      if (store) store->save(key, *value);
    }
    Record r = base_record("num-star", a.n, family.name());
    r["strategy"] = strategy_name;
    r["coeffs"] = decimal_list(value->coeffs());
    return r;
  }
  if (a.object == "den" || a.object == "g" || a.object == "den-star") {
    BinomialProduct value;
    if (a.object == "den-star") {
      no_strategy();
      value = den_star(a.n, family);
    } else if (a.object == "den") {
      no_strategy();
      value = num_den(a.n, family)->den;
    } else {
      GStrategy strategy = all ? GStrategy::ClosedForm : GStrategy::Oracle;
      if (a.strategy == "oracle") {
        strategy = GStrategy::Oracle;
      } else if (a.strategy == "closed") {
        only_all();
        strategy = GStrategy::ClosedForm;
      } else if (!a.strategy.empty()) {
        throw UsageError("g strategies: closed, oracle");
      }
      value = big_g(a.n, family, strategy);
    }
    Record r = base_record(a.object, a.n, family.name());
    r["exponents"] = exponent_object(value);
    if (a.expand) r["coeffs"] = decimal_list(fbp_expand(value).coeffs());
    return r;
  }
  if (a.object == "num-b") {
    if (!all && family.kind() != FamilyKind::Binary) throw UsageError("num-b is the binary family's numerator");
    NumBStrategy strategy = NumBStrategy::Recurrence;
    if (a.strategy == "naive") {
      strategy = NumBStrategy::Naive;
    } else if (!a.strategy.empty() && a.strategy != "recurrence") {
      throw UsageError("num-b strategies: recurrence, naive");
    }
    Record r = base_record("num-b", a.n, "binary");
    r["coeffs"] = decimal_list(num_b(a.n, strategy).coeffs());
    return r;
  }
  if (a.object == "beta") {
    only_all();
    no_strategy();
    if (a.m < 0) throw UsageError("beta coefficients need m >= 0 (use eval for negative powers)");
    Record r = base_record("beta", a.n, "all");
    r["m"] = a.m;
    r["coeffs"] = decimal_list(beta_poly(a.n, a.m).coeffs());
    return r;
  }
  // c-row
  only_all();
  no_strategy();
  const auto row = c_row(a.n);
  std::vector<std::string> c;
  for (auto v : row) c.push_back(std::to_string(v));
  Record r = base_record("c-row", a.n, "all");
  r["c"] = c;
  return r;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::int64_t n = 0;
  std::string point;
  std::string family = "all";
  std::string format = "json";
  bool abs2 = false;
};

Record eval_record(const EvalArgs& a) {
  require_nonnegative(a.n);
  const PartFamily family = family_from(a.family);
  const DensePoly& num = num_den(a.n, family)->num;
  Record r = base_record("eval", a.n, family.name());
  r["point"] = a.point;
  if (a.point == "minus1" || a.point == "one") {
    if (a.abs2) throw UsageError("--abs2 applies to root-of-unity points");
    r["value"] = poly_eval_int(num, a.point == "one" ? 1 : -1).get_str();
    return r;
  }
  std::int64_t m = 0;
  if (a.point == "i") {
    m = 4;
  } else if (a.point == "zeta6") {
    m = 6;
  } else if (a.point.starts_with("zeta:") && is_integer(a.point.substr(5))) {
    m = std::stoll(a.point.substr(5));
  }
  if (m < 1) throw UsageError("unknown point '" + a.point + "' (minus1, one, i, zeta6, zeta:<m>)");
  if (a.abs2 && !abs_squared_supported(m)) {
    throw UsageError("|value|^2 is a rational integer readout only for m in {1,2,3,4,6}");
  }
  const CycloResidue residue = reduce_mod_cyclotomic(num, m);
  r["modulus"] = m;
  r["residue"] = decimal_list(residue.coeffs());
  if (abs_squared_supported(m)) r["abs2"] = abs_squared_at_root(residue).get_str();
  return r;
}

// ---------------------------------------------------------------------------

struct FactorArgs {
  std::string object;
  std::int64_t n = 0;
  std::string family = "all";
  std::string format = "json";
};

Record factor_record(const FactorArgs& a) {
  require_nonnegative(a.n);
  const PartFamily family = family_from(a.family);
  Record r = base_record(a.object, a.n, family.name());
  if (a.object == "den" || a.object == "g" || a.object == "den-star") {
    BinomialProduct value;
    if (a.object == "den") value = num_den(a.n, family)->den;
    if (a.object == "g") value = num_den(a.n, family)->g;
    if (a.object == "den-star") value = den_star(a.n, family);
    r["cyclotomic"] = exponent_object(fbp_to_cyclo(value));
    return r;
  }
  if (a.object != "num" && a.object != "num-star") {
    throw UsageError("factor objects: num, num-star, den, g, den-star");
  }
  DensePoly p = a.object == "num" ? num_den(a.n, family)->num : num_star(a.n, family);
  const BigInt c = content(p);
  p = primitive_part(p);
  CycloFactored cyclo;
  for (std::int64_t e = 1; p.degree() >= 1 && e <= 2 * p.degree() + 2; ++e) {
    if (euler_phi(e) > p.degree()) continue;
    while (p.degree() >= euler_phi(e) && reduce_mod_cyclotomic(p, e).is_zero()) {
      p = poly_divmod_unit(p, cyclotomic(e)).quotient;
      cyclo.add(e, 1);
    }
  }
  r["content"] = c.get_str();
  r["cyclotomic"] = exponent_object(cyclo);
  r["cofactor_degree"] = p.degree();
  if (p.degree() < 1) {
    r["cofactor"] = "unit";
  } else {
    r["cofactor"] = to_string(probable_irreducibility(p).verdict);
  }
  return r;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::vector<std::string> targets;
  bool strict = false;
  unsigned jobs = 1;
  std::string format = "json";
  std::string bfile;
  std::string sequence;
  bool no_timing = false;
};

std::vector<Record> bfile_records(const CheckArgs& a, std::optional<std::int64_t> lo, std::optional<std::int64_t> hi,
                                  bool* gating_failure) {
  if (a.sequence.empty()) throw UsageError("--bfile needs --sequence");
  if (!known_sequence(a.sequence)) throw UsageError("unknown sequence '" + a.sequence + "'");
  std::ifstream in(a.bfile);
  if (!in) throw UsageError("cannot read b-file " + a.bfile);
  std::vector<std::pair<std::int64_t, BigInt>> entries;
  try {
    entries = parse_bfile(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::int64_t max_n = 0;
  for (const auto& [index, value] : entries) max_n = std::max(max_n, index);
  const auto terms = sequence_terms(a.sequence, max_n);
  std::vector<Record> out;
  for (const auto& [index, value] : entries) {
    if ((lo && index < *lo) || (hi && index > *hi)) continue;
    Record r = base_record("bfile", index, "all");
    r["sequence"] = a.sequence;
    const bool in_domain = index >= 0 && terms[static_cast<std::size_t>(index)].has_value();
    if (!in_domain) {
      r["status"] = "inconclusive";
      r["gating"] = false;
      r["computed"] = "";
    } else {
      const BigInt& ours = *terms[static_cast<std::size_t>(index)];
      const bool match = ours == value;
      r["status"] = match ? "pass" : "fail";
      r["gating"] = true;
      r["computed"] = ours.get_str();
      if (!match) *gating_failure = true;
    }
    r["expected"] = value.get_str();
    out.push_back(std::move(r));
  }
  return out;
}

int run_check_command(const CheckArgs& a, std::ostream& out) {
  std::vector<std::string> names;
  std::vector<std::int64_t> bounds;
  for (const auto& t : a.targets) {
    if (is_integer(t)) {
      bounds.push_back(std::stoll(t));
      continue;
    }
    if (!bounds.empty()) throw UsageError("the n range must come after the check names");
    std::stringstream parts(t);
    std::string item;
    while (std::getline(parts, item, ',')) {
      if (!item.empty()) names.push_back(item);
    }
  }
  if (bounds.size() == 1 || bounds.size() > 2) throw UsageError("give the range as two integers: n_lo n_hi");
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  if (bounds.size() == 2) {
    lo = bounds[0];
    hi = bounds[1];
    if (*lo > *hi) throw UsageError("empty range");
  }
  if (names.empty() && a.bfile.empty()) throw UsageError("name at least one check id or suite");

  std::vector<CheckRequest> requests;
  for (const auto& name : names) {
    if (auto id = parse_check_id(name)) {
      if (lo) {
        requests.push_back(CheckRequest{*id, *lo, *hi});
      } else {
        auto r = suite_requests({*id});
        requests.insert(requests.end(), r.begin(), r.end());
      }
    } else if (auto suite = check_suite(name)) {
      auto r = suite_requests(*suite, lo, hi);
      requests.insert(requests.end(), r.begin(), r.end());
    } else {
      throw UsageError("unknown check id or suite '" + name + "'");
    }
  }

  RunOptions options;
  options.strict = a.strict;
  options.jobs = a.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.jobs;
  std::vector<CheckReport> reports;
  try {
    reports = run_checks(requests, options);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }

  bool gating_failure = false;
  std::vector<Record> records;
  for (const auto& report : reports) {
    Record r = base_record("check", report.n, check_family(report.check));
    r["check"] = std::string(check_name(report.check));
    r["status"] = std::string(to_string(report.status));
    r["gating"] = report.gating;
    r["computed"] = report.computed;
    r["expected"] = report.expected;
    if (!a.no_timing) r["elapsed_ms"] = report.elapsed_ms;
    if (is_gating_failure(report)) gating_failure = true;
    records.push_back(std::move(r));
  }
  if (!a.bfile.empty()) {
    auto extra = bfile_records(a, lo, hi, &gating_failure);
    records.insert(records.end(), extra.begin(), extra.end());
  }
  write_records(records, parse_format(a.format), out);
  return gating_failure ? kExitGatingFailure : kExitOk;
}

// Installs the disk cache for the duration of one command.
class StoreGuard {
 public:
  explicit StoreGuard(std::shared_ptr<PolyStore> store) { install_poly_store(std::move(store)); }
  ~StoreGuard() { install_poly_store(nullptr); }
  StoreGuard(const StoreGuard&) = delete;
  StoreGuard& operator=(const StoreGuard&) = delete;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with subsum polynomials of integer partitions", "subsum"};
  app.require_subcommand(1);
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir, "Result cache directory (default: $SUBSUM_CACHE_DIR or ~/.cache/subsum)");
  app.add_flag("--no-cache", no_cache, "Do not read or write the result cache");

  const std::vector<std::string> formats{"json", "csv"};

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Compute one object and print it as a record");
  compute_cmd->add_option("object", compute.object, "num|den|g|num-star|den-star|num-b|beta|c-row")->required();
  compute_cmd->add_option("n", compute.n, "Partition size")->required();
  compute_cmd->add_option("--family", compute.family, "all|binary|ternary|odd|parts-in:a,b,...");
  compute_cmd->add_option("--format", compute.format)->check(CLI::IsMember(formats));
  compute_cmd->add_option("--strategy", compute.strategy, "num-star: partdp|naive; g: closed|oracle; num-b: recurrence|naive");
  compute_cmd->add_option("--power,-m", compute.m, "Power m for beta (default 1)");
  compute_cmd->add_flag("--expand", compute.expand, "Also print expanded coefficients of den/g/den-star");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run checks or suites, optionally over n_lo n_hi");
  check_cmd->add_option("targets", check.targets, "Check ids or suite names, then optionally n_lo n_hi");
  check_cmd->add_flag("--strict", check.strict, "Conjecture checks also gate the exit status");
  check_cmd->add_option("--jobs,-j", check.jobs, "Worker threads (0: one per core)");
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember(formats));
  check_cmd->add_option("--bfile", check.bfile, "Compare a sequence against a b-file (lines \"n value\")");
  check_cmd->add_option("--sequence", check.sequence, "Sequence for --bfile: s|d-half|B|sigma1-sum");
  check_cmd->add_flag("--no-timing", check.no_timing, "Omit elapsed_ms from records");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate num(n,x) at -1, 1 or a root of unity");
  eval_cmd->add_option("n", eval.n)->required();
  eval_cmd->add_option("point", eval.point, "minus1|one|i|zeta6|zeta:<m>")->required();
  eval_cmd->add_option("--family", eval.family);
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember(formats));
  eval_cmd->add_flag("--abs2", eval.abs2, "Require |value|^2 (m in {1,2,3,4,6})");

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "Cyclotomic factorization of num, den, g, num-star or den-star");
  factor_cmd->add_option("object", factor.object)->required();
  factor_cmd->add_option("n", factor.n)->required();
  factor_cmd->add_option("--family", factor.family);
  factor_cmd->add_option("--format", factor.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::shared_ptr<PolyStore> store;
    if (!no_cache) store = std::make_shared<DiskStore>(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
    StoreGuard guard(store);

    if (*compute_cmd) {
      write_records({compute_record(compute)}, parse_format(compute.format), out);
    } else if (*eval_cmd) {
      write_records({eval_record(eval)}, parse_format(eval.format), out);
    } else if (*factor_cmd) {
      write_records({factor_record(factor)}, parse_format(factor.format), out);
    } else if (*check_cmd) {
      return run_check_command(check, out);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace subsum::cli
