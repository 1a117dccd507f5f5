#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"

#include "cheeger/cheeger.h"

namespace {

using nlohmann::json;

// Fetch-and-free helper so the tests read naturally.
std::string take(char* s) {
  std::string out = s ? s : "";
  chg_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(chg_version() != nullptr);
  CHECK(std::strlen(chg_version()) >= 5);

  chg_partition* p = nullptr;
  CHECK(chg_partition_parse("not a partition", &p) == CHG_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::strlen(chg_last_error()) > 0);

  CHECK(chg_partition_parse(nullptr, &p) == CHG_ERR_ARGUMENT);
  CHECK(chg_partition_parse("3,3,1", nullptr) == CHG_ERR_ARGUMENT);
  chg_string_free(nullptr);  // must be a no-op
}

TEST_CASE("partition lifecycle and info payload") {
  chg_partition* p = nullptr;
  REQUIRE(chg_partition_parse("3,3,1", &p) == CHG_OK);
  REQUIRE(p != nullptr);

  char* out = nullptr;
  REQUIRE(chg_partition_info_json(p, &out) == CHG_OK);
  json info = take_json(out);
  CHECK(info["parts"] == json::array({3, 3, 1}));
  CHECK(info["conjugate"] == json::array({3, 2, 2}));
  CHECK(info["box"] == 6);
  CHECK(info["depth"] == 3);
  CHECK(info["weight"] == 7);
  CHECK(info["sq_weight"] == 18);
  CHECK(info["n_min"] == 8);
  CHECK(info["h"] == "20/7");
  CHECK(info["deficiency"] == "4/21");
  chg_partition_free(p);

  chg_partition* c = nullptr;
  REQUIRE(chg_partition_corner(3, &c) == CHG_OK);
  REQUIRE(chg_partition_info_json(c, &out) == CHG_OK);
  json corner = take_json(out);
  CHECK(corner["parts"] == json::array({3, 2, 1}));
  CHECK(corner["h"] == "7/3");
  CHECK(corner["deficiency"] == "0");
  chg_partition_free(c);

  chg_partition* f = nullptr;
  REQUIRE(chg_partition_pow2_family(4, &f) == CHG_OK);
  REQUIRE(chg_partition_info_json(f, &out) == CHG_OK);
  json fam = take_json(out);
  CHECK(fam["parts"] == json::array({7, 7, 5, 5, 3, 3, 1}));
  CHECK(fam["deficiency"] == "8/93");
  CHECK(fam["n_min"] == 16);
  chg_partition_free(f);
  CHECK(chg_partition_pow2_family(1, &f) == CHG_ERR_ARGUMENT);

  chg_partition* one = nullptr;
  REQUIRE(chg_partition_parse("1", &one) == CHG_OK);
  chg_partition* blown = nullptr;
  REQUIRE(chg_partition_blowup(one, 2, &blown) == CHG_OK);
  REQUIRE(chg_partition_info_json(blown, &out) == CHG_OK);
  CHECK(take_json(out)["parts"] == json::array({2, 2}));
  chg_partition_free(one);
  chg_partition_free(blown);
}

TEST_CASE("graph lifecycle, formatting and analysis payloads") {
  chg_graph* g = nullptr;
  REQUIRE(chg_graph_parse("4\n1 2\n3 4\n", &g) == CHG_OK);

  char* out = nullptr;
  REQUIRE(chg_graph_format(g, &out) == CHG_OK);
  CHECK(take(out) == "4\n1 2\n3 4\n\n");

  REQUIRE(chg_graph_h_json(g, &out) == CHG_OK);
  json h = take_json(out);
  CHECK(h["n"] == 4);
  CHECK(h["h"] == "2");
  CHECK(h["odd_triangles"] == 4);

  REQUIRE(chg_graph_cut_check_json(g, &out) == CHG_OK);
  json cut = take_json(out);
  CHECK(cut["cut_minimal"] == true);

  REQUIRE(chg_graph_vertex_cert_json(g, &out) == CHG_OK);
  json cert = take_json(out);
  CHECK(cert["m_total"] == 12);
  CHECK(cert["m_v"].size() == 4);

  REQUIRE(chg_graph_canonical_hex(g, &out) == CHG_OK);
  CHECK(take(out).size() == 2);
  chg_graph_free(g);

  chg_graph* bad = nullptr;
  CHECK(chg_graph_parse("4\n2 1\n", &bad) == CHG_ERR_PARSE);
  CHECK(bad == nullptr);

  // A witness is reported for graphs that are not cut-minimal.
  chg_graph* k22 = nullptr;
  REQUIRE(chg_graph_parse("4\n1 3\n1 4\n2 3\n2 4\n", &k22) == CHG_OK);
  REQUIRE(chg_graph_cut_check_json(k22, &out) == CHG_OK);
  json verdict = take_json(out);
  CHECK(verdict["cut_minimal"] == false);
  CHECK(verdict["witness"]["cut_set"] == json::array({1}));  // 1-based vertices
  CHECK(verdict["witness"]["edges_across"] == 2);
  chg_graph_free(k22);
}

TEST_CASE("staircase and blowup graph construction") {
  chg_partition* p = nullptr;
  REQUIRE(chg_partition_parse("3,3,1", &p) == CHG_OK);
  chg_graph* g = nullptr;
  REQUIRE(chg_graph_staircase(8, p, &g) == CHG_OK);
  char* out = nullptr;
  REQUIRE(chg_graph_h_json(g, &out) == CHG_OK);
  CHECK(take_json(out)["h"] == "20/7");

  // Below the box size the construction is rejected.
  chg_graph* small = nullptr;
  CHECK(chg_graph_staircase(5, p, &small) == CHG_ERR_ARGUMENT);

  chg_graph* doubled = nullptr;
  REQUIRE(chg_graph_blowup(g, 2, &doubled) == CHG_OK);
  REQUIRE(chg_graph_h_json(doubled, &out) == CHG_OK);
  CHECK(take_json(out)["h"] == "40/7");
  chg_graph* too_big = nullptr;
  CHECK(chg_graph_blowup(doubled, 5, &too_big) == CHG_ERR_INFEASIBLE);

  chg_graph_free(doubled);
  chg_graph_free(g);
  chg_partition_free(p);
}

TEST_CASE("cochain sweep payload") {
  char* out = nullptr;
  REQUIRE(chg_cochain_hk_json(5, 1, 1, 2, &out) == CHG_OK);
  json payload = take_json(out);
  CHECK(payload["h"] == "5/3");
  CHECK(payload["augmented"] == true);
  CHECK(payload["n"] == 5);
  CHECK(payload["k"] == 1);

  CHECK(chg_cochain_hk_json(8, 1, 1, 1, &out) == CHG_ERR_INFEASIBLE);
  CHECK(chg_cochain_hk_json(5, 9, 1, 1, &out) == CHG_ERR_ARGUMENT);
}

TEST_CASE("complex payload") {
  char* out = nullptr;
  REQUIRE(chg_cm_json(5, 1, 1, &out) == CHG_OK);
  json payload = take_json(out);
  CHECK(payload["f_vector"] == json::array({10, 45, 100, 10}));
  CHECK(payload["euler_characteristic"] == 55);
  CHECK(payload["betti_gf2"] == json::array({1, 0, 54, 0}));
  CHECK(payload["num_maximal_faces_by_dim"] == json::array({0, 0, 60, 10}));
  CHECK(chg_cm_json(7, 1, 0, &out) == CHG_ERR_INFEASIBLE);
}

TEST_CASE("search payload") {
  char* out = nullptr;
  REQUIRE(chg_search_json(5, 2, 1, 1, 0, &out) == CHG_OK);
  std::string text = take(out);
  json payload = json::parse(text);
  CHECK(payload["h_value"] == "5/3");
  CHECK(payload["conjectures"]["non_staircase_count"] == 0);
  CHECK(payload["cheeger_graphs"].is_array());
  CHECK(text.find("wall_time") == std::string::npos);
  CHECK(chg_search_json(9, 1, 0, 0, 0, &out) == CHG_ERR_INFEASIBLE);
}

TEST_CASE("bounds table payload") {
  char* out = nullptr;
  REQUIRE(chg_h_table_csv(16, 1, 0, &out) == CHG_OK);
  std::string plain = take(out);
  CHECK(plain.find("n,lower,upper,exact,source") == 0);
  CHECK(plain.find("16,16/3,168/31,,pow2-family-bound") != std::string::npos);
  CHECK(plain.find("approx") == std::string::npos);

  REQUIRE(chg_h_table_csv(8, 1, 1, &out) == CHG_OK);
  std::string approx = take(out);
  CHECK(approx.find("lower_approx") != std::string::npos);
  CHECK(approx.find("2.857143") != std::string::npos);  // 20/7 for n = 8

  CHECK(chg_h_table_csv(1000, 1, 0, &out) == CHG_ERR_INFEASIBLE);
  CHECK(chg_h_table_csv(16, 1, 0, nullptr) == CHG_ERR_ARGUMENT);
}
