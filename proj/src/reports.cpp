#include "cheeger/reports.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

namespace cheeger {

using nlohmann::json;

json partition_info_json(const Partition& p) {
  return json{{"parts", p.parts()},
              {"conjugate", p.conjugate().parts()},
              {"box", p.box()},
              {"depth", p.depth()},
              {"weight", p.weight()},
              {"sq_weight", p.sq_weight()},
              {"n_r", p.n_r()},
              {"n_r_conj", p.conjugate().n_r()},
              {"n_d", p.n_d()},
              {"n_min", p.n_min()},
              {"h", p.h().str()},
              {"deficiency", p.deficiency().str()}};
}

json graph_h_json(const Graph& g) {
  return json{{"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"h", g.h().str()},
              {"odd_triangles", g.odd_triangle_count()}};
}

namespace {

json cut_report_json(const CutReport& r) {
  std::vector<int> vertices;
  for (int v = 0; v < 64; ++v)
    if ((r.cut_set >> v) & 1) vertices.push_back(v + 1);
  return json{{"cut_set", vertices},
              {"edges_across", r.edges_across},
              {"non_edges_across", r.non_edges_across},
              {"perfect", r.perfect}};
}

}  // namespace

json cut_check_json(const Graph& g) {
  std::optional<CutReport> witness = g.cut_minimality_witness();
  json out{{"n", g.vertex_count()},
           {"edges", g.edge_count()},
           {"cut_minimal", !witness.has_value()}};
  if (witness) out["witness"] = cut_report_json(*witness);
  return out;
}

json vertex_cert_json(const Graph& g) {
  VertexCertificate cert = g.vertex_certificate();
  return json{{"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"m_total", cert.m_total},
              {"m_min", cert.m_min},
              {"m_v", cert.m_v},
              {"sharp", cert.sharp},
              {"odd_triangles", g.odd_triangle_count()}};
}

json cochain_json(const Cochain& c) {
  return json{{"n", c.n()}, {"k", c.k()}, {"support", c.support_hex()}};
}

json cochain_hk_json(const CheegerKResult& r) {
  json minimizers = json::array();
  for (const Cochain& c : r.minimizers) minimizers.push_back(cochain_json(c));
  return json{{"n", r.n},
              {"k", r.k},
              {"augmented", r.augmented},
              {"h", r.h.str()},
              {"max_cosystole_expansion", r.max_cosystole_expansion.str()},
              {"cosystole_count", r.cosystole_count},
              {"minimizer_count", r.minimizer_count},
              {"minimizers", minimizers},
              {"truncated", r.truncated}};
}

json cm_json(const ComplexSummary& s) {
  long long euler = 0;
  for (size_t d = 0; d < s.f_vector.size(); ++d)
    euler += (d % 2 == 0 ? 1 : -1) * s.f_vector[d];
  json out{{"n", s.n}, {"f_vector", s.f_vector}, {"dim", s.dim},
           {"euler_characteristic", euler}};
  if (!s.maximal_by_dim.empty()) out["num_maximal_faces_by_dim"] = s.maximal_by_dim;
  if (!s.betti_gf2.empty()) out["betti_gf2"] = s.betti_gf2;
  return out;
}

json search_json(const SearchReport& r, const ConjectureVerdicts* conjectures,
                 bool with_graphs, bool with_timing) {
  json stats{{"isomorphism_classes_visited", r.isomorphism_classes_visited}};
  if (with_timing) stats["wall_time_seconds"] = r.wall_time_seconds;
  json out{{"n", r.n},
           {"h_value", r.h_value.str()},
           {"cheeger_class_count", static_cast<long long>(r.cheeger_graphs.size())},
           {"stats", stats}};
  if (with_graphs) {
    json graphs = json::array();
    for (const GraphClassInfo& info : r.cheeger_graphs) {
      json entry{{"canonical", info.canonical_hex},
                 {"edges", info.graph.edge_count()},
                 {"h", info.h.str()},
                 {"triangle_free", info.triangle_free},
                 {"bipartite", info.bipartite}};
      if (info.staircase)
        entry["staircase"] = info.staircase->parts();
      else
        entry["staircase"] = nullptr;
      graphs.push_back(std::move(entry));
    }
    out["cheeger_graphs"] = graphs;
  }
  if (conjectures) {
    out["conjectures"] = json{{"all_triangle_free", conjectures->all_triangle_free},
                              {"all_bipartite", conjectures->all_bipartite},
                              {"non_staircase_count", conjectures->non_staircase_count}};
  }
  return out;
}

std::string h_table_csv(const std::vector<HTableRow>& rows, bool approx) {
  auto dec = [](const Rational& v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v.approx());
    return std::string(buf);
  };
  std::ostringstream os;
  os << "n,lower,upper,exact,source";
  if (approx) os << ",lower_approx,upper_approx,exact_approx";
  os << "\n";
  for (const HTableRow& r : rows) {
    os << r.n << "," << r.lower.str() << "," << r.upper.str() << ","
       << (r.exact ? r.exact->str() : "") << "," << r.source;
    if (approx)
      os << "," << dec(r.lower) << "," << dec(r.upper) << ","
         << (r.exact ? dec(*r.exact) : "");
    os << "\n";
  }
  return os.str();
}

std::string verify_text(const VerifyReport& r) {
  std::ostringstream os;
  long long total = 0, passed = 0, documented = 0;
  for (const ClaimResult& c : r.claims) {
    const char* verdict = c.informational
                              ? (c.pass ? "INFO-PASS" : "INFO-FAIL")
                              : (c.pass ? "PASS"
                                        : (c.documented_failure ? "FAIL (documented)" : "FAIL"));
    os << c.id << " " << verdict << " | " << c.description << " | expected: " << c.expected
       << " | computed: " << c.computed << "\n";
    if (!c.informational) {
      ++total;
      if (c.pass) ++passed;
      else if (c.documented_failure) ++documented;
    }
  }
  os << "RESULT: " << (r.gate_ok ? "OK" : "FAIL") << " (" << passed << "/" << total
     << " criteria pass, " << documented << " documented failure"
     << (documented == 1 ? "" : "s") << ", " << (total - passed - documented)
     << " unexpected)\n";
  return os.str();
}

}  // namespace cheeger
