#include "cheeger/cheeger.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "cheeger/cm_complex.hpp"
#include "cheeger/cochain.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/partition.hpp"
#include "cheeger/rational.hpp"
#include "cheeger/reports.hpp"
#include "cheeger/search.hpp"
#include "cheeger/verify.hpp"

using namespace cheeger;

struct chg_partition {
  Partition value;
};
struct chg_graph {
  Graph value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
chg_status guarded(Fn&& fn) {
  try {
    fn();
    return CHG_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return CHG_ERR_PARSE;
  } catch (const InfeasibleError& e) {
    g_last_error = e.what();
    return CHG_ERR_INFEASIBLE;
  } catch (const RationalOverflow& e) {
    g_last_error = e.what();
    return CHG_ERR_OVERFLOW;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return CHG_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CHG_ERR_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return CHG_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CHG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CHG_ERR_INTERNAL;
  }
}

chg_status require(bool ok, const char* message) {
  if (ok) return CHG_OK;
  g_last_error = message;
  return CHG_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* chg_version(void) { return "1.0.0"; }

const char* chg_last_error(void) { return g_last_error.c_str(); }

void chg_string_free(char* s) { delete[] s; }

/* ---- partitions ------------------------------------------------------- */

chg_status chg_partition_parse(const char* text, chg_partition** out) {
  if (chg_status s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new chg_partition{Partition::parse(text)}; });
}

chg_status chg_partition_corner(long long t, chg_partition** out) {
  if (chg_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new chg_partition{Partition::staircase(t)}; });
}

chg_status chg_partition_pow2_family(long long t, chg_partition** out) {
  if (chg_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new chg_partition{Partition::power_of_two_family(t)}; });
}

chg_status chg_partition_blowup(const chg_partition* p, long long c, chg_partition** out) {
  if (chg_status s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = new chg_partition{p->value.blowup(c)}; });
}

void chg_partition_free(chg_partition* p) { delete p; }

chg_status chg_partition_info_json(const chg_partition* p, char** json_out) {
  if (chg_status s = require(p && json_out, "null argument")) return s;
  return guarded([&] { *json_out = dup_string(partition_info_json(p->value).dump(2)); });
}

/* ---- graphs ----------------------------------------------------------- */

chg_status chg_graph_parse(const char* text, chg_graph** out) {
  if (chg_status s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new chg_graph{Graph::parse(text)}; });
}

chg_status chg_graph_staircase(int n, const chg_partition* p, chg_graph** out) {
  if (chg_status s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = new chg_graph{Graph::staircase(n, p->value)}; });
}

chg_status chg_graph_blowup(const chg_graph* g, int c, chg_graph** out) {
  if (chg_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = new chg_graph{g->value.blowup(c)}; });
}

void chg_graph_free(chg_graph* g) { delete g; }

chg_status chg_graph_format(const chg_graph* g, char** text_out) {
  if (chg_status s = require(g && text_out, "null argument")) return s;
  return guarded([&] { *text_out = dup_string(g->value.format()); });
}

chg_status chg_graph_h_json(const chg_graph* g, char** json_out) {
  if (chg_status s = require(g && json_out, "null argument")) return s;
  return guarded([&] { *json_out = dup_string(graph_h_json(g->value).dump(2)); });
}

chg_status chg_graph_cut_check_json(const chg_graph* g, char** json_out) {
  if (chg_status s = require(g && json_out, "null argument")) return s;
  return guarded([&] { *json_out = dup_string(cut_check_json(g->value).dump(2)); });
}

chg_status chg_graph_vertex_cert_json(const chg_graph* g, char** json_out) {
  if (chg_status s = require(g && json_out, "null argument")) return s;
  return guarded([&] { *json_out = dup_string(vertex_cert_json(g->value).dump(2)); });
}

chg_status chg_graph_canonical_hex(const chg_graph* g, char** hex_out) {
  if (chg_status s = require(g && hex_out, "null argument")) return s;
  return guarded([&] { *hex_out = dup_string(g->value.canonical_hex()); });
}

/* ---- cochain sweeps, complex, search ---------------------------------- */

chg_status chg_cochain_hk_json(int n, int k, int augmented, int jobs, char** json_out) {
  if (chg_status s = require(json_out != nullptr, "null argument")) return s;
  return guarded([&] {
    *json_out =
        dup_string(cochain_hk_json(cheeger_constant(n, k, augmented != 0, jobs)).dump(2));
  });
}

chg_status chg_cm_json(int n, int with_betti, int with_maximal, char** json_out) {
  if (chg_status s = require(json_out != nullptr, "null argument")) return s;
  return guarded([&] {
    *json_out =
        dup_string(cm_json(cut_minimal_complex(n, with_betti != 0, with_maximal != 0)).dump(2));
  });
}

chg_status chg_search_json(int n, int jobs, int with_graphs, int with_conjectures,
                           int with_timing, char** json_out) {
  if (chg_status s = require(json_out != nullptr, "null argument")) return s;
  return guarded([&] {
    if (with_conjectures) {
      ConjectureVerdicts v = conjecture_report(n, jobs);
      *json_out =
          dup_string(search_json(v.report, &v, with_graphs != 0, with_timing != 0).dump(2));
    } else {
      SearchReport r = cheeger_number(n, jobs);
      *json_out =
          dup_string(search_json(r, nullptr, with_graphs != 0, with_timing != 0).dump(2));
    }
  });
}

chg_status chg_h_table_csv(int n_max, int jobs, int with_approx, char** csv_out) {
  if (chg_status s = require(csv_out != nullptr, "null argument")) return s;
  return guarded(
      [&] { *csv_out = dup_string(h_table_csv(h_table(n_max, jobs), with_approx != 0)); });
}

chg_status chg_verify_paper(int jobs, char** text_out, int* gate_ok_out) {
  if (chg_status s = require(text_out != nullptr, "null argument")) return s;
  return guarded([&] {
    VerifyReport report = verify_paper(jobs);
    *text_out = dup_string(verify_text(report));
    if (gate_ok_out) *gate_ok_out = report.gate_ok ? 1 : 0;
  });
}

} /* extern "C" */
