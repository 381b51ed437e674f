#include "trifree/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "trifree/analysis.hpp"
#include "trifree/enumerate.hpp"
#include "trifree/families.hpp"
#include "trifree/graph6.hpp"
#include "trifree/verify.hpp"

namespace trifree {
namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string family;
  std::optional<int> k;
  int k_max = 6;
  int n_min = 1;
  int n_max = 10;
  int max_size = 3;
  std::optional<int> max_degree;
  std::string suite = "all";
  int girth = 4;
  bool connected = false;
  std::string format = "json";
  int jobs = 1;
  bool count_only = false;
  bool no_timing = false;
  std::string out;
  std::string input = "-";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Lines are "graph6" or "name graph6"; blank lines are skipped.
std::vector<NamedGraph> read_inputs(std::istream& in) {
  std::vector<NamedGraph> out;
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a)) continue;
    ++index;
    if (fields >> b) {
      out.push_back({a, parse_graph6(b)});
    } else {
      out.push_back({"#" + std::to_string(index), parse_graph6(a)});
    }
  }
  return out;
}

std::vector<NamedGraph> load(const Config& c, std::istream& in) {
  if (c.input == "-") return read_inputs(in);
  std::ifstream file(c.input);
  if (!file) throw UsageError("cannot open " + c.input);
  return read_inputs(file);
}

std::string members_text(const VertexSet& s) {
  std::string out;
  for (int v : s.members()) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

void emit_records(const Config& c, const std::vector<std::pair<std::string, InvariantRecord>>& rows, std::ostream& os) {
  if (c.format == "csv") {
    os << csv_header() << ",graph6\n";
    for (const auto& [g6, r] : rows) os << to_csv(r) << "," << g6 << "\n";
  } else if (c.format == "text") {
    for (const auto& [g6, r] : rows) {
      os << r.name << " " << g6 << ": n=" << r.n << " e=" << r.e << " alpha=" << r.alpha << " c4=" << r.c4
         << " nu=" << r.nu << " t=" << r.t << " mindeg=" << r.min_degree << " maxdeg=" << r.max_degree
         << " girth=" << (r.girth ? std::to_string(*r.girth) : "inf")
         << " edge_critical=" << (r.edge_critical ? "yes" : "no") << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& [g6, r] : rows) {
      json j = to_json(r);
      j["graph6"] = g6;
      arr.push_back(std::move(j));
    }
    os << (rows.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  }
}

int run_family(const Config& c, std::ostream& os) {
  std::vector<std::pair<std::string, InvariantRecord>> rows;
  if (c.family == "table") {
    const std::vector<InvariantRecord> table = family_table(c.k_max);
    // family_table lists the members in a fixed order; rebuild each to get its graph6.
    for (const InvariantRecord& r : table) rows.push_back({"", r});
    for (auto& [g6, r] : rows) {
      const auto sep = r.name.find('_');
      const std::string prefix = r.name.substr(0, sep);
      std::optional<int> k;
      if (sep != std::string::npos) k = std::stoi(r.name.substr(sep + 1));
      const Family f = prefix == "Ch" ? Family::Chain
                       : prefix == "BC" ? Family::Bicycle
                       : prefix == "SCh" ? Family::ShackledChain
                       : prefix == "W5" ? Family::W5
                                        : Family::GP72;
      g6 = to_graph6(build(f, k));
    }
  } else {
    const auto f = family_from_string(c.family);
    if (!f) throw UsageError("unknown family: " + c.family);
    const Graph g = build(*f, c.k);
    InvariantRecord r = invariants(g);
    r.name = member_name(*f, c.k);
    rows.push_back({to_graph6(g), r});
  }
  emit_records(c, rows, os);
  return kExitOk;
}

int run_invariants(const Config& c, std::istream& in, std::ostream& os) {
  std::vector<std::pair<std::string, InvariantRecord>> rows;
  for (const NamedGraph& ng : load(c, in)) {
    InvariantRecord r = invariants(ng.graph);
    r.name = ng.name;
    rows.push_back({to_graph6(ng.graph), r});
  }
  emit_records(c, rows, os);
  return kExitOk;
}

int run_enumerate(const Config& c, std::ostream& os) {
  if (c.n_min > c.n_max) throw UsageError("--n-min exceeds --n-max");
  for (int n = c.n_min; n <= c.n_max; ++n) {
    const EnumerationSpec spec{n, c.connected, c.girth, c.max_degree};
    validate(spec);
    if (c.count_only) {
      os << count_classes(spec, c.jobs) << "\n";
      continue;
    }
    const Enumerator en(spec);
    // Each item's output is buffered so the stream order does not depend on --jobs.
    const auto chunks = run_items(en, c.jobs, std::string{}, [](std::string& acc, const Graph& g) {
      acc += to_graph6(g);
      acc += '\n';
    });
    for (const std::string& s : chunks) os << s;
  }
  return kExitOk;
}

int run_destab(const Config& c, std::istream& in, std::ostream& os) {
  json arr = json::array();
  std::ostringstream text;
  if (c.format == "csv") text << "name,graph6,alpha,size,members,connected\n";
  for (const NamedGraph& ng : load(c, in)) {
    const int r = std::min(c.max_size, ng.graph.order() - 1);
    const DestabiliserReport rep = minimal_destabilisers(ng.graph, r);
    const std::string g6 = to_graph6(ng.graph);
    json sets = json::array();
    if (c.format == "text") {
      text << ng.name << " " << g6 << ": alpha=" << rep.alpha << " r_stable_up_to=" << rep.r_stable_up_to << "\n";
    }
    for (const Destabiliser& d : rep.minimal_sets) {
      sets.push_back({{"members", d.set.members()}, {"connected", d.connected}});
      if (c.format == "csv") {
        text << ng.name << "," << g6 << "," << rep.alpha << "," << d.set.size() << "," << members_text(d.set) << ","
             << (d.connected ? 1 : 0) << "\n";
      } else if (c.format == "text") {
        text << "  {" << members_text(d.set) << "}" << (d.connected ? " connected" : " disconnected") << "\n";
      }
    }
    arr.push_back({{"name", ng.name},
                   {"graph6", g6},
                   {"alpha", rep.alpha},
                   {"max_size", rep.max_size},
                   {"r_stable_up_to", rep.r_stable_up_to},
                   {"minimal_sets", sets}});
  }
  if (c.format == "json") {
    os << arr.dump(2) << "\n";
  } else {
    os << text.str();
  }
  return kExitOk;
}

int run_verify(const Config& c, std::ostream& os, std::ostream& err) {
  if (c.format == "csv") throw UsageError("verify supports --format json or text");
  VerifyOptions opt;
  opt.n_max = c.n_max;
  opt.chain_k_max = c.k_max;
  opt.jobs = c.jobs;
  opt.suite = c.suite;
  const VerificationReport report = run_verification(opt);
  if (c.format == "text") {
    os << text_summary(report);
  } else {
    os << to_json(report, !c.no_timing).dump(2) << "\n";
  }
  const auto lines = failure_lines(report);
  if (!c.out.empty()) {
    std::ofstream side(c.out + ".failures.g6");
    for (const std::string& l : lines) side << l << "\n";
  } else {
    for (const std::string& l : lines) err << l << "\n";
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int run_edge_numbers(const Config& c, std::ostream& os) {
  const EdgeNumberTable t = edge_number_table(c.n_max, c.k_max, c.jobs);
  if (c.format == "csv") {
    os << "n,k,min_edges,certificate,bound,bound_ok,c4free_min_edges,c4free_certificate,c4free_bound_times3,"
          "c4free_bound_ok\n";
    for (const EdgeNumberCell& r : t.rows) {
      os << r.n << "," << r.k << "," << (r.min_edges ? std::to_string(*r.min_edges) : "") << "," << r.certificate
         << "," << r.bound << "," << r.bound_ok << ","
         << (r.c4free_min_edges ? std::to_string(*r.c4free_min_edges) : "") << "," << r.c4free_certificate << ","
         << r.c4free_bound_times3 << "," << r.c4free_bound_ok << "\n";
    }
  } else if (c.format == "text") {
    for (const EdgeNumberCell& r : t.rows) {
      os << "n=" << r.n << " k=" << r.k << " min_edges=" << (r.min_edges ? std::to_string(*r.min_edges) : "-")
         << " c4free_min_edges=" << (r.c4free_min_edges ? std::to_string(*r.c4free_min_edges) : "-")
         << (r.bound_ok && r.c4free_bound_ok ? "" : " BOUND VIOLATED") << "\n";
    }
  } else {
    os << to_json(t).dump(2) << "\n";
  }
  return t.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Triangle-free graph invariants, enumeration and verification", "trifree"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> formats = {"text", "json", "csv"};

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    s->add_option("--out", c.out, "Write output to this file");
  };
  auto add_jobs = [&](CLI::App* s) { s->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber); };

  CLI::App* family = app.add_subcommand("family", "Construct a family member and report its invariants");
  family->add_option("name", c.family, "chain|bicycle|shackled_chain|w5|gp72|cycle|s1|s2, or table")->required();
  family->add_option("--k", c.k, "Family parameter");
  family->add_option("--k-max", c.k_max, "Largest parameter for the table")->check(CLI::Range(2, 30));
  add_format(family);

  CLI::App* inv = app.add_subcommand("invariants", "Invariant records for graph6 input");
  inv->add_option("input", c.input, "graph6 file, or - for stdin");
  add_format(inv);

  CLI::App* en = app.add_subcommand("enumerate", "Stream isomorphism-class representatives as graph6");
  en->add_option("--n-min", c.n_min, "Smallest order")->check(CLI::Range(1, kEnumerationHardCap));
  en->add_option("--n-max", c.n_max, "Largest order")->check(CLI::Range(1, kEnumerationHardCap));
  en->add_option("--girth", c.girth, "Minimum girth")->check(CLI::IsMember({4, 5}));
  en->add_flag("--connected", c.connected, "Connected graphs only");
  en->add_option("--max-degree", c.max_degree, "Maximum degree")->check(CLI::NonNegativeNumber);
  en->add_flag("--count-only", c.count_only, "Print one class count per order");
  en->add_option("--out", c.out, "Write output to this file");
  add_jobs(en);

  CLI::App* ds = app.add_subcommand("destab", "Minimal destabilisers of graph6 input");
  ds->add_option("input", c.input, "graph6 file, or - for stdin");
  ds->add_option("--max-size", c.max_size, "Largest set size")->check(CLI::Range(1, 8));
  add_format(ds);

  CLI::App* vf = app.add_subcommand("verify", "Run the verification suites");
  vf->add_option("--n-max", c.n_max, "Largest enumerated order")->check(CLI::Range(1, kEnumerationHardCap));
  vf->add_option("--k-max", c.k_max, "Largest chain parameter for the chain lemmas")->check(CLI::Range(2, 7));
  vf->add_option("--suite", c.suite, "all | main | properties | chains | edge-numbers | <property id>");
  vf->add_flag("--no-timing", c.no_timing, "Omit the timing block");
  add_format(vf);
  add_jobs(vf);

  CLI::App* eg = app.add_subcommand("edge-numbers", "Minimum edge counts for given order and independence number");
  eg->add_option("--n-max", c.n_max, "Largest order")->check(CLI::Range(1, kEnumerationHardCap));
  eg->add_option("--k-max", c.k_max, "Largest independence bound")->check(CLI::PositiveNumber);
  add_format(eg);
  add_jobs(eg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "error: cannot write " << c.out << "\n";
      return kExitUsage;
    }
    os = &file;
  }
  try {
    if (family->parsed()) return run_family(c, *os);
    if (inv->parsed()) return run_invariants(c, in, *os);
    if (en->parsed()) return run_enumerate(c, *os);
    if (ds->parsed()) return run_destab(c, in, *os);
    if (vf->parsed()) return run_verify(c, *os, err);
    return run_edge_numbers(c, *os);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace trifree
