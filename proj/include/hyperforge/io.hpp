#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperforge/census.hpp"
#include "hyperforge/constructs.hpp"
#include "hyperforge/morphisms.hpp"
#include "hyperforge/symbolic.hpp"

namespace hyperforge {

using Json = nlohmann::json;

// Every emitted document is {"schema":"hyperforge/1","kind":...,"body":...}.
Json make_document(const std::string& kind, Json body);

// Unwraps a document, checking the schema tag and (when expected_kind is
// nonempty) the kind; a bare object without a schema tag passes through
// unchanged so hand-written fixture files stay valid inputs.
Json open_document(const Json& doc, const std::string& expected_kind = "");

// Subsets are sorted id arrays; absent mul/zero/one serialize as null.
Json to_json(const HyperTable& H);
HyperTable hypertable_from_json(const Json& j);  // re-validates the table

Json to_json(const Pair& P);
Pair pair_from_json(const Json& j);

Json to_json(const MagmaPair& M);
MagmaPair magma_from_json(const Json& j);

Json to_json(const AxiomCheck& c);
Json to_json(const AxiomReport& r);
Json to_json(const Verdict& v);
Json to_json(const IsoResult& r);  // the mapping is under "iso", null when absent
Json to_json(const Quotient& Q);
Json to_json(const MHyperRing& M);
Json to_json(const TensorResult& T);
Json to_json(const GapWitness& w);
Json to_json(const CensusEntry& e);

// Cell-safe flat forms: sets print as ids joined by '|', one line per cell.
std::string hypertable_csv(const HyperTable& H);
std::string census_csv(const std::vector<CensusEntry>& entries);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hyperforge
