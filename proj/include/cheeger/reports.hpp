#pragma once

#include <string>

#include "json.hpp"

#include "cheeger/cm_complex.hpp"
#include "cheeger/cochain.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/partition.hpp"
#include "cheeger/search.hpp"
#include "cheeger/verify.hpp"

namespace cheeger {

// JSON payloads for the public interface.  nlohmann::json keeps keys
// sorted, so serialization is deterministic.

nlohmann::json partition_info_json(const Partition& p);
nlohmann::json graph_h_json(const Graph& g);
nlohmann::json cut_check_json(const Graph& g);
nlohmann::json vertex_cert_json(const Graph& g);
nlohmann::json cochain_json(const Cochain& c);
nlohmann::json cochain_hk_json(const CheegerKResult& r);
nlohmann::json cm_json(const ComplexSummary& s);
nlohmann::json search_json(const SearchReport& r, const ConjectureVerdicts* conjectures,
                           bool with_graphs, bool with_timing);

std::string h_table_csv(const std::vector<HTableRow>& rows, bool approx = false);
std::string verify_text(const VerifyReport& r);

}  // namespace cheeger
