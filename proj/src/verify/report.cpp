#include <algorithm>
#include <chrono>
#include <sstream>

#include "trifree/graph.hpp"
#include "trifree/verify.hpp"

namespace trifree {
namespace {

using json = nlohmann::ordered_json;

json failures_json(const std::vector<Failure>& fs) {
  json out = json::array();
  for (const Failure& f : fs) out.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
  return out;
}

json results_json(const std::vector<PropertyCheckResult>& rs) {
  json out = json::array();
  for (const PropertyCheckResult& r : rs) {
    json j;
    j["property_id"] = r.property_id;
    j["passed"] = r.passed();
    j["graphs_tested"] = r.graphs_tested;
    j["hypothesis_hits"] = r.hypothesis_hits;
    j["family_hits"] = r.family_hits;
    j["failure_count"] = r.failure_count;
    j["failures"] = failures_json(r.failures);
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

json main_json(const MainTheoremReport& m) {
  json orders = json::array();
  for (const OrderSummary& o : m.orders) {
    json zero = json::array();
    for (const NuZeroClass& z : o.nu_zero) zero.push_back({{"graph6", z.graph6}, {"member", optional_json(z.member)}});
    orders.push_back({{"order", o.order},
                      {"classes", o.classes},
                      {"min_nu", optional_json(o.min_nu)},
                      {"min_t", optional_json(o.min_t)},
                      {"nu_zero", zero},
                      {"expected_members", o.expected_members},
                      {"missing_members", o.missing_members},
                      {"violation_count", o.violation_count},
                      {"violations", failures_json(o.violations)}});
  }
  return {{"passed", m.passed()}, {"n_max", m.n_max}, {"orders", orders}};
}

bool all_passed(const std::vector<PropertyCheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const PropertyCheckResult& r) { return r.passed(); });
}

bool is_property_id(const std::string& s) {
  const auto ids = property_ids();
  return std::find(ids.begin(), ids.end(), s) != ids.end();
}

template <class F>
auto timed(std::map<std::string, double>& seconds, const std::string& phase, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  seconds[phase] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

bool VerificationReport::passed() const {
  return (!main_theorem || main_theorem->passed()) && (!properties || all_passed(*properties)) &&
         (!chain_lemmas || all_passed(*chain_lemmas)) && (!edge_numbers || edge_numbers->passed());
}

VerificationReport run_verification(const VerifyOptions& options) {
  const std::string& s = options.suite;
  const bool known = s == "all" || s == "main" || s == "properties" || s == "chains" || s == "edge-numbers";
  if (!known && !is_property_id(s)) throw GraphError(ErrorCode::InvalidArgument, "unknown suite: " + s);
  VerificationReport report;
  report.options = options;
  auto& sec = report.seconds;
  if (s == "all" || s == "main") {
    report.main_theorem = timed(sec, "main", [&] { return verify_main_theorem(options.n_max, options.jobs); });
  }
  if (s == "all" || s == "properties" || is_property_id(s)) {
    const std::string filter = is_property_id(s) ? s : "all";
    report.properties =
        timed(sec, "properties", [&] { return verify_property_suite(options.n_max, filter, options.jobs); });
  }
  if (s == "all" || s == "chains") {
    report.chain_lemmas = timed(sec, "chains", [&] { return verify_chain_lemmas(options.chain_k_max); });
  }
  if (s == "all" || s == "edge-numbers") {
    report.edge_numbers =
        timed(sec, "edge-numbers", [&] { return edge_number_table(options.n_max, options.n_max, options.jobs); });
  }
  return report;
}

json to_json(const EdgeNumberTable& t) {
  json rows = json::array();
  for (const EdgeNumberCell& c : t.rows) {
    rows.push_back({{"n", c.n},
                    {"k", c.k},
                    {"min_edges", optional_json(c.min_edges)},
                    {"certificate", c.certificate},
                    {"bound", c.bound},
                    {"bound_ok", c.bound_ok},
                    {"c4free_min_edges", optional_json(c.c4free_min_edges)},
                    {"c4free_certificate", c.c4free_certificate},
                    {"c4free_bound_times3", c.c4free_bound_times3},
                    {"c4free_bound_ok", c.c4free_bound_ok}});
  }
  return {{"passed", t.passed()}, {"n_max", t.n_max}, {"k_max", t.k_max}, {"rows", rows}};
}

json to_json(const VerificationReport& r, bool include_timing) {
  json j;
  j["schema"] = "trifree.verify";
  j["schema_version"] = kReportSchemaVersion;
  j["parameters"] = {{"suite", r.options.suite}, {"n_max", r.options.n_max}, {"chain_k_max", r.options.chain_k_max}};
  j["passed"] = r.passed();
  if (r.main_theorem) j["main_theorem"] = main_json(*r.main_theorem);
  if (r.properties) j["properties"] = results_json(*r.properties);
  if (r.chain_lemmas) j["chain_lemmas"] = results_json(*r.chain_lemmas);
  if (r.edge_numbers) j["edge_numbers"] = to_json(*r.edge_numbers);
  if (include_timing) {
    json sec = json::object();
    for (const auto& [phase, s] : r.seconds) sec[phase] = s;
    j["timing"] = {{"jobs", r.options.jobs}, {"seconds", sec}};
  }
  return j;
}

std::string text_summary(const VerificationReport& r) {
  std::ostringstream out;
  if (r.main_theorem) {
    out << "main theorem (connected, n <= " << r.main_theorem->n_max << "): "
        << (r.main_theorem->passed() ? "ok" : "FAILED") << "\n";
    for (const OrderSummary& o : r.main_theorem->orders) {
      out << "  n=" << o.order << " classes=" << o.classes;
      if (o.min_nu) out << " min_nu=" << *o.min_nu << " min_t=" << *o.min_t;
      out << " nu0=[";
      for (std::size_t i = 0; i < o.nu_zero.size(); ++i) {
        out << (i ? " " : "") << o.nu_zero[i].member.value_or(o.nu_zero[i].graph6);
      }
      out << "]";
      if (o.violation_count > 0) out << " violations=" << o.violation_count;
      if (!o.missing_members.empty()) out << " missing=" << o.missing_members.size();
      out << "\n";
    }
  }
  auto list = [&](const char* title, const std::vector<PropertyCheckResult>& rs) {
    out << title << ": " << (all_passed(rs) ? "ok" : "FAILED") << "\n";
    for (const PropertyCheckResult& p : rs) {
      out << "  " << (p.passed() ? "ok  " : "FAIL") << " " << p.property_id << " tested=" << p.graphs_tested
          << " hits=" << p.hypothesis_hits << " (family " << p.family_hits << ") failures=" << p.failure_count;
      if (!p.note.empty()) out << "  [" << p.note << "]";
      out << "\n";
    }
  };
  if (r.properties) list("property suite", *r.properties);
  if (r.chain_lemmas) list("chain lemmas", *r.chain_lemmas);
  if (r.edge_numbers) {
    out << "edge numbers (n <= " << r.edge_numbers->n_max << "): " << (r.edge_numbers->passed() ? "ok" : "FAILED") << "\n";
    for (const EdgeNumberCell& c : r.edge_numbers->rows) {
      if (!c.min_edges) continue;
      out << "  n=" << c.n << " k=" << c.k << " e=" << *c.min_edges << " (>= " << c.bound << ")";
      if (c.c4free_min_edges) out << " c4free_e=" << *c.c4free_min_edges << " (3e >= " << c.c4free_bound_times3 << ")";
      out << "\n";
    }
  }
  out << (r.passed() ? "PASSED" : "FAILED") << "\n";
  return out.str();
}

std::vector<std::string> failure_lines(const VerificationReport& r) {
  std::vector<std::string> out;
  auto add = [&](const std::string& check, const std::vector<Failure>& fs) {
    for (const Failure& f : fs) out.push_back(f.graph6 + "\t" + check + ": " + f.detail);
  };
  if (r.main_theorem) {
    for (const OrderSummary& o : r.main_theorem->orders) add("main", o.violations);
  }
  for (const auto* rs : {&r.properties, &r.chain_lemmas}) {
    if (*rs) {
      for (const PropertyCheckResult& p : **rs) add(p.property_id, p.failures);
    }
  }
  if (r.edge_numbers) {
    for (const EdgeNumberCell& c : r.edge_numbers->rows) {
      const std::string cell = "edge-numbers n=" + std::to_string(c.n) + " k=" + std::to_string(c.k);
      if (!c.bound_ok) out.push_back(c.certificate + "\t" + cell + ": below 6n-13k");
      if (!c.c4free_bound_ok) out.push_back(c.c4free_certificate + "\t" + cell + ": below (17n-35k)/3");
    }
  }
  return out;
}

}  // namespace trifree
