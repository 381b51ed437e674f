#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace trifree {

inline constexpr int kReportSchemaVersion = 1;
/// Failures kept per check; failure_count still counts all of them.
inline constexpr std::size_t kMaxStoredFailures = 25;

struct Failure {
  std::string graph6;
  std::string detail;
};

struct PropertyCheckResult {
  std::string property_id;
  std::int64_t graphs_tested = 0;
  std::int64_t hypothesis_hits = 0;
  /// Hits among the named-family supplement (included in hypothesis_hits).
  std::int64_t family_hits = 0;
  std::int64_t failure_count = 0;
  std::vector<Failure> failures;
  std::string note;

  bool passed() const { return failure_count == 0; }
  void fail(std::string graph6, std::string detail);
  void merge(const PropertyCheckResult& other);
};

struct NuZeroClass {
  std::string graph6;
  std::optional<std::string> member;  // family member name, if recognised
};

struct OrderSummary {
  int order = 0;
  std::int64_t classes = 0;
  std::optional<std::int64_t> min_nu;
  std::optional<std::int64_t> min_t;
  std::vector<NuZeroClass> nu_zero;
  std::vector<std::string> expected_members;
  std::vector<std::string> missing_members;
  std::int64_t violation_count = 0;
  std::vector<Failure> violations;

  bool passed() const;
};

struct MainTheoremReport {
  int n_max = 0;
  std::vector<OrderSummary> orders;
  bool passed() const;
};

struct EdgeNumberCell {
  int n = 0;
  int k = 0;
  std::optional<int> min_edges;  // nullopt: no triangle-free graph of order n has α <= k
  std::string certificate;
  std::int64_t bound = 0;  // 6n − 13k
  bool bound_ok = true;
  std::optional<int> c4free_min_edges;
  std::string c4free_certificate;
  std::int64_t c4free_bound_times3 = 0;  // 17n − 35k, compared with 3 · min
  bool c4free_bound_ok = true;
};

struct EdgeNumberTable {
  int n_max = 0;
  int k_max = 0;
  std::vector<EdgeNumberCell> rows;
  bool passed() const;
  const EdgeNumberCell* cell(int n, int k) const;
};

/// Every connected triangle-free class of order <= n_max: ν >= 0, t >= 0,
/// the four weaker linear bounds, and the ν = 0 classes equal to the
/// family members of each order.
MainTheoremReport verify_main_theorem(int n_max, int jobs = 1);

/// Identifiers understood by verify_property_suite, in report order.
std::vector<std::string> property_ids();
/// Runs the named properties ("all" or one id) over every triangle-free
/// graph of order <= n_max plus a fixed supplement of named family graphs.
std::vector<PropertyCheckResult> verify_property_suite(int n_max, const std::string& filter = "all", int jobs = 1);

/// Exhaustive subset checks of the destabiliser lemmas on Ch_2..Ch_{k_max}
/// (the extra-edge lemma from Ch_3), and G_v connectivity at bivalent v.
std::vector<PropertyCheckResult> verify_chain_lemmas(int k_max);

/// Minimum edges over triangle-free (and over C<=4-free) graphs of order n
/// with α <= k, for n <= n_max and 1 <= k <= k_max, with bound checks.
EdgeNumberTable edge_number_table(int n_max, int k_max, int jobs = 1);

struct VerifyOptions {
  int n_max = 10;
  int chain_k_max = 6;
  int jobs = 1;
  /// all | main | properties | chains | edge-numbers | <property id>
  std::string suite = "all";
};

struct VerificationReport {
  VerifyOptions options;
  std::optional<MainTheoremReport> main_theorem;
  std::optional<std::vector<PropertyCheckResult>> properties;
  std::optional<std::vector<PropertyCheckResult>> chain_lemmas;
  std::optional<EdgeNumberTable> edge_numbers;
  std::map<std::string, double> seconds;  // wall time per phase

  bool passed() const;
};

VerificationReport run_verification(const VerifyOptions& options);
/// Versioned JSON; the timing block (and worker count) only when asked.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing);
nlohmann::ordered_json to_json(const EdgeNumberTable& table);
std::string text_summary(const VerificationReport& report);
/// One "graph6<TAB>check: detail" line per stored failure.
std::vector<std::string> failure_lines(const VerificationReport& report);

}  // namespace trifree
