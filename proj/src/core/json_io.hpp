#pragma once
#include "core/decompose.hpp"
#include "core/fatgraph.hpp"
#include "core/homology.hpp"
#include "core/roots.hpp"

#include <json.hpp>

namespace cyclact {

using json = nlohmann::ordered_json;

json dataset_to_json(const DataSet &d);
DataSet dataset_from_json(const json &j);
json report_to_json(const ValidationReport &r);

json polygon_to_json(const SidePairedPolygon &p);
json word_to_json(const SignedWord &w, const std::vector<std::string> &names);
SignedWord word_from_json(const json &j, std::vector<std::string> &names_out);

json fatgraph_to_json(const FatGraph &g);
FatGraph fatgraph_from_json(const json &j);

json matrix_to_json(const IntMatrix &m, const std::string &basis);
json rootrep_to_json(const RootRep &r, const std::string &basis);

json decomposition_to_json(const Decomposition &d);

} // namespace cyclact
