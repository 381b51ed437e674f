#include <algorithm>
#include <set>

#include "mask_graph.hpp"
#include "trifree/canonical.hpp"
#include "trifree/enumerate.hpp"
#include "trifree/families.hpp"
#include "trifree/graph6.hpp"
#include "trifree/verify.hpp"

namespace trifree {
namespace {

using namespace verify_detail;

struct Tally {
  std::int64_t classes = 0;
  std::optional<std::int64_t> min_nu;
  std::optional<std::int64_t> min_t;
  std::vector<std::string> nu_zero;  // graph6 of canonical representatives
  std::int64_t violation_count = 0;
  std::vector<Failure> violations;

  void violate(const Graph& g, std::string detail) {
    ++violation_count;
    if (violations.size() < kMaxStoredFailures) violations.push_back({to_graph6(g), std::move(detail)});
  }
};

void keep_min(std::optional<std::int64_t>& slot, std::int64_t x) {
  if (!slot || x < *slot) slot = x;
}

std::vector<FamilyMember> expected_members(int n) {
  std::vector<FamilyMember> out;
  if ((n + 1) % 3 == 0 && (n + 1) / 3 >= 2) out.push_back({Family::Chain, (n + 1) / 3, chain((n + 1) / 3)});
  if (n % 3 == 0 && n / 3 >= 5) out.push_back({Family::Bicycle, n / 3, bicycle(n / 3)});
  if (n == 14) {
    out.push_back({Family::W5, std::nullopt, w5()});
    out.push_back({Family::GP72, std::nullopt, gp72()});
  }
  return out;
}

void visit(Tally& t, const Graph& g) {
  const MaskGraph m(g);
  const int n = g.order();
  const int e = g.size();
  const int a = m.alpha(m.all);
  const std::int64_t nu = nu_value(n, e, a, m.c4(m.all));
  const std::int64_t tv = t_value(n, e, a);
  ++t.classes;
  keep_min(t.min_nu, nu);
  keep_min(t.min_t, tv);
  if (nu == 0) t.nu_zero.push_back(to_graph6(g));
  if (nu < 0) t.violate(g, "nu = " + std::to_string(nu));
  if (tv < 0) t.violate(g, "t = " + std::to_string(tv));
  const std::int64_t weaker[] = {e, e - n + a, e - 3LL * n + 5LL * a, e - 5LL * n + 10LL * a};
  const char* names[] = {"e", "e-n+alpha", "e-3n+5alpha", "e-5n+10alpha"};
  for (int i = 0; i < 4; ++i) {
    if (weaker[i] < 0) t.violate(g, std::string(names[i]) + " = " + std::to_string(weaker[i]));
  }
}

}  // namespace

bool OrderSummary::passed() const { return violation_count == 0 && missing_members.empty(); }

bool MainTheoremReport::passed() const {
  return std::all_of(orders.begin(), orders.end(), [](const OrderSummary& o) { return o.passed(); });
}

MainTheoremReport verify_main_theorem(int n_max, int jobs) {
  if (n_max < 1 || n_max > enumeration_cap()) {
    throw GraphError(ErrorCode::InvalidArgument, "n_max must be in 1.." + std::to_string(enumeration_cap()));
  }
  MainTheoremReport report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const Enumerator en({n, true, 4, std::nullopt});
    const auto slots = run_items(en, jobs, Tally{}, visit);
    Tally all;
    for (const Tally& s : slots) {
      all.classes += s.classes;
      if (s.min_nu) keep_min(all.min_nu, *s.min_nu);
      if (s.min_t) keep_min(all.min_t, *s.min_t);
      all.nu_zero.insert(all.nu_zero.end(), s.nu_zero.begin(), s.nu_zero.end());
      all.violation_count += s.violation_count;
      for (const Failure& f : s.violations) {
        if (all.violations.size() < kMaxStoredFailures) all.violations.push_back(f);
      }
    }

    OrderSummary o;
    o.order = n;
    o.classes = all.classes;
    o.min_nu = all.min_nu;
    o.min_t = all.min_t;
    const auto expected = expected_members(n);
    std::set<std::string> found;
    for (const std::string& g6 : all.nu_zero) {
      const Graph g = parse_graph6(g6);
      found.insert(certificate(g));
      const auto member = classify_in_G(g);
      o.nu_zero.push_back({g6, member ? std::optional(member_name(member->family, member->parameter)) : std::nullopt});
      if (!member) {
        ++o.violation_count;
        if (o.violations.size() < kMaxStoredFailures) o.violations.push_back({g6, "nu = 0 outside the extremal family"});
      }
    }
    for (const FamilyMember& m : expected) {
      const std::string name = member_name(m.family, m.parameter);
      o.expected_members.push_back(name);
      if (!found.contains(certificate(m.graph))) o.missing_members.push_back(name);
    }
    o.violation_count += all.violation_count;
    for (const Failure& f : all.violations) {
      if (o.violations.size() < kMaxStoredFailures) o.violations.push_back(f);
    }
    report.orders.push_back(std::move(o));
  }
  return report;
}

}  // namespace trifree
