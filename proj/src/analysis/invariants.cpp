#include <sstream>

#include "trifree/analysis.hpp"
#include "trifree/kernels.hpp"
#include "trifree/solvers.hpp"

namespace trifree {

std::int64_t nu_value(int n, int e, int alpha, std::int64_t c4) {
  return 3 * std::int64_t{e} - 17 * std::int64_t{n} + 35 * std::int64_t{alpha} + c4;
}

std::int64_t t_value(int n, int e, int alpha) { return std::int64_t{e} - 6 * std::int64_t{n} + 13 * std::int64_t{alpha}; }

namespace {

std::int64_t c4_of(const Graph& g) {
  return g.fits_word() ? kernels::count_c4(g.word_rows()) : count_cycles(g, 4).total;
}

}  // namespace

InvariantRecord invariants(const Graph& g) {
  InvariantRecord r;
  r.name = g.label();
  r.n = g.order();
  r.e = g.size();
  r.alpha = independence_number(g).alpha;
  r.c3 = g.fits_word() ? kernels::count_triangles(g.word_rows()) : count_cycles(g, 3).total;
  r.c4 = c4_of(g);
  r.c5 = count_cycles(g, 5).total;
  r.nu = nu_value(r.n, r.e, r.alpha, r.c4);
  r.t = t_value(r.n, r.e, r.alpha);
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.girth = girth(g);
  r.edge_critical = is_edge_critical(g);
  return r;
}

std::int64_t nu(const Graph& g) { return nu_value(g.order(), g.size(), independence_number(g).alpha, c4_of(g)); }

std::string csv_header() { return "name,n,e,alpha,c3,c4,c5,nu,t,mindeg,maxdeg,girth,edge_critical"; }

std::string to_csv(const InvariantRecord& r) {
  std::ostringstream out;
  out << r.name << ',' << r.n << ',' << r.e << ',' << r.alpha << ',' << r.c3 << ',' << r.c4 << ',' << r.c5 << ','
      << r.nu << ',' << r.t << ',' << r.min_degree << ',' << r.max_degree << ','
      << (r.girth ? std::to_string(*r.girth) : std::string("inf")) << ',' << (r.edge_critical ? "true" : "false");
  return out.str();
}

nlohmann::ordered_json to_json(const InvariantRecord& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["e"] = r.e;
  j["alpha"] = r.alpha;
  j["c3"] = r.c3;
  j["c4"] = r.c4;
  j["c5"] = r.c5;
  j["nu"] = r.nu;
  j["t"] = r.t;
  j["mindeg"] = r.min_degree;
  j["maxdeg"] = r.max_degree;
  if (r.girth) {
    j["girth"] = *r.girth;
  } else {
    j["girth"] = "inf";
  }
  j["edge_critical"] = r.edge_critical;
  return j;
}

}  // namespace trifree
