// Command-line front end.  Everything computational goes through the C
// interface of the shared library; this file only parses arguments, reads
// input files, and formats the result envelope.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cheeger/cheeger.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

int exit_code_for(chg_status s) {
  switch (s) {
    case CHG_OK:
      return kExitOk;
    case CHG_ERR_ARGUMENT:
    case CHG_ERR_PARSE:
      return kExitUsage;
    case CHG_ERR_INFEASIBLE:
      return kExitInfeasible;
    default:
      return kExitVerifyFail;
  }
}

int default_jobs() {
  if (const char* env = std::getenv("CHEEGER_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit_error(const std::string& command, chg_status s) {
  json envelope{{"command", command}, {"status", "error"}, {"message", chg_last_error()}};
  std::cout << envelope.dump(2) << "\n";
  return exit_code_for(s);
}

int emit_payload(const std::string& command, char* payload_json) {
  json envelope{{"command", command}, {"status", "ok"},
                {"payload", json::parse(payload_json)}};
  chg_string_free(payload_json);
  std::cout << envelope.dump(2) << "\n";
  return kExitOk;
}

struct GraphHandle {
  chg_graph* g = nullptr;
  ~GraphHandle() { chg_graph_free(g); }
};
struct PartitionHandle {
  chg_partition* p = nullptr;
  ~PartitionHandle() { chg_partition_free(p); }
};

int load_graph(const std::string& command, const std::string& path, GraphHandle& out) {
  std::string text;
  try {
    text = read_input(path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  if (chg_status s = chg_graph_parse(text.c_str(), &out.g)) return emit_error(command, s);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact expansion constants of simplices via cut-minimal graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --jobs/--timing/... after the subcommand too

  int jobs = default_jobs();
  bool timing = false;
  bool approx = false;
  unsigned long long seed = 0;
  app.add_option("--jobs", jobs, "worker threads (default: CHEEGER_JOBS or hardware)");
  app.add_flag("--timing", timing, "include wall-time fields (non-reproducible bytes)");
  app.add_flag("--approx", approx, "append decimal approximation columns where supported");
  app.add_option("--seed", seed, "accepted for interface stability; no command uses randomness");

  auto* partition = app.add_subcommand("partition", "partition calculus");
  partition->require_subcommand(1);
  auto* partition_info = partition->add_subcommand("info", "invariants of one partition");
  std::string partition_text;
  partition_info->add_option("parts", partition_text, "e.g. 3,3,1 or 3^2,1")->required();

  auto* staircase = app.add_subcommand("staircase", "emit a staircase graph (text format)");
  int staircase_n = 0;
  std::string staircase_parts;
  staircase->add_option("n", staircase_n, "vertex count")->required();
  staircase->add_option("parts", staircase_parts, "partition, e.g. 3,3,1")->required();

  auto* check = app.add_subcommand("check-cutmin", "test cut-minimality, with witness");
  std::string check_file{"-"};
  check->add_option("graph", check_file, "edge-list file, or - for stdin");

  auto* hgraph = app.add_subcommand("hgraph", "expansion functional of a graph");
  std::string hgraph_file{"-"};
  hgraph->add_option("graph", hgraph_file, "edge-list file, or - for stdin");

  auto* blowup = app.add_subcommand("blowup", "clone every vertex c times (text output)");
  int blowup_c = 0;
  std::string blowup_file{"-"};
  blowup->add_option("c", blowup_c, "clone count")->required();
  blowup->add_option("graph", blowup_file, "edge-list file, or - for stdin");

  auto* vcert = app.add_subcommand("vertex-cert", "per-vertex counting certificate");
  std::string vcert_file{"-"};
  vcert->add_option("graph", vcert_file, "edge-list file, or - for stdin");

  auto* cochain = app.add_subcommand("cochain", "cochain sweeps");
  cochain->require_subcommand(1);
  auto* hk = cochain->add_subcommand("hk", "exact k-dimensional constant by enumeration");
  int hk_n = 0, hk_k = 0;
  bool hk_no_augment = false;
  hk->add_option("n", hk_n, "ground-set size")->required();
  hk->add_option("k", hk_k, "dimension")->required();
  hk->add_flag("--no-augment", hk_no_augment, "drop the augmentation (k = 0 convention)");

  auto* cm = app.add_subcommand("cm", "complex of cut-minimal edge sets");
  int cm_n = 0;
  bool cm_betti = false, cm_maximal = false;
  cm->add_option("n", cm_n, "vertex count (<= 7; Betti needs <= 6)")->required();
  cm->add_flag("--betti", cm_betti, "compute GF(2) Betti numbers");
  cm->add_flag("--maximal", cm_maximal, "count maximal faces per dimension");

  auto* search = app.add_subcommand("search", "exhaustive isomorphism-class search (n <= 8)");
  int search_n = 0;
  bool search_all = false, search_conj = false;
  search->add_option("n", search_n, "vertex count")->required();
  search->add_flag("--all-cheeger", search_all, "list every minimizing class");
  search->add_flag("--conjectures", search_conj, "add the structural verdicts");

  auto* table = app.add_subcommand("table", "bounds table as CSV");
  int table_n_max = 0;
  table->add_option("n_max", table_n_max, "last row (<= 512)")->required();

  auto* verify = app.add_subcommand("verify", "reproduce the published claims");
  std::string verify_target;
  verify->add_option("target", verify_target, "must be: paper")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (partition_info->parsed()) {
    PartitionHandle p;
    if (chg_status s = chg_partition_parse(partition_text.c_str(), &p.p))
      return emit_error("partition info", s);
    char* out = nullptr;
    if (chg_status s = chg_partition_info_json(p.p, &out)) return emit_error("partition info", s);
    return emit_payload("partition info", out);
  }

  if (staircase->parsed()) {
    PartitionHandle p;
    if (chg_status s = chg_partition_parse(staircase_parts.c_str(), &p.p))
      return emit_error("staircase", s);
    GraphHandle g;
    if (chg_status s = chg_graph_staircase(staircase_n, p.p, &g.g))
      return emit_error("staircase", s);
    char* text = nullptr;
    if (chg_status s = chg_graph_format(g.g, &text)) return emit_error("staircase", s);
    std::cout << text;  // raw graph text, pipeable into the graph commands
    chg_string_free(text);
    return kExitOk;
  }

  if (check->parsed()) {
    GraphHandle g;
    if (int code = load_graph("check-cutmin", check_file, g)) return code;
    char* out = nullptr;
    if (chg_status s = chg_graph_cut_check_json(g.g, &out)) return emit_error("check-cutmin", s);
    return emit_payload("check-cutmin", out);
  }

  if (hgraph->parsed()) {
    GraphHandle g;
    if (int code = load_graph("hgraph", hgraph_file, g)) return code;
    char* out = nullptr;
    if (chg_status s = chg_graph_h_json(g.g, &out)) return emit_error("hgraph", s);
    return emit_payload("hgraph", out);
  }

  if (blowup->parsed()) {
    GraphHandle g;
    if (int code = load_graph("blowup", blowup_file, g)) return code;
    GraphHandle b;
    if (chg_status s = chg_graph_blowup(g.g, blowup_c, &b.g)) return emit_error("blowup", s);
    char* text = nullptr;
    if (chg_status s = chg_graph_format(b.g, &text)) return emit_error("blowup", s);
    std::cout << text;  // raw graph text
    chg_string_free(text);
    return kExitOk;
  }

  if (vcert->parsed()) {
    GraphHandle g;
    if (int code = load_graph("vertex-cert", vcert_file, g)) return code;
    char* out = nullptr;
    if (chg_status s = chg_graph_vertex_cert_json(g.g, &out)) return emit_error("vertex-cert", s);
    return emit_payload("vertex-cert", out);
  }

  if (hk->parsed()) {
    char* out = nullptr;
    if (chg_status s = chg_cochain_hk_json(hk_n, hk_k, hk_no_augment ? 0 : 1, jobs, &out))
      return emit_error("cochain hk", s);
    return emit_payload("cochain hk", out);
  }

  if (cm->parsed()) {
    char* out = nullptr;
    if (chg_status s = chg_cm_json(cm_n, cm_betti ? 1 : 0, cm_maximal ? 1 : 0, &out))
      return emit_error("cm", s);
    return emit_payload("cm", out);
  }

  if (search->parsed()) {
    char* out = nullptr;
    if (chg_status s = chg_search_json(search_n, jobs, search_all ? 1 : 0,
                                       search_conj ? 1 : 0, timing ? 1 : 0, &out))
      return emit_error("search", s);
    return emit_payload("search", out);
  }

  if (table->parsed()) {
    char* out = nullptr;
    if (chg_status s = chg_h_table_csv(table_n_max, jobs, approx ? 1 : 0, &out))
      return emit_error("table", s);
    std::cout << out;  // raw CSV
    chg_string_free(out);
    return kExitOk;
  }

  if (verify->parsed()) {
    if (verify_target != "paper") {
      std::cerr << "unknown verify target '" << verify_target << "' (expected: paper)\n";
      return kExitUsage;
    }
    char* out = nullptr;
    int gate_ok = 0;
    if (chg_status s = chg_verify_paper(jobs, &out, &gate_ok))
      return emit_error("verify paper", s);
    std::cout << out;  // raw text, one line per claim
    chg_string_free(out);
    return gate_ok ? kExitOk : kExitVerifyFail;
  }

  std::cerr << "no command selected\n";
  return kExitUsage;
}
