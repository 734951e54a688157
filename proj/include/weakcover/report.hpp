#pragma once

#include <string>

#include "json.hpp"
#include "weakcover/approx.hpp"
#include "weakcover/exact.hpp"
#include "weakcover/relaxations.hpp"

namespace weakcover {

using Json = nlohmann::ordered_json;

// Rationals travel as exact strings ("5/2", "3"); vertex sets as sorted arrays.

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j);

Json to_json(const CoverReport& r);
CoverReport cover_report_from_json(const Json& j);

/// {"kind","edge"?,"z","integral","cuts","values","tight_rows","basic"}
Json to_json(const RelaxationResult& r);
RelaxationResult relaxation_from_json(const Json& j);

/// {"edge":[i,j],"delta","delta_bar","sigma"}
Json to_json(const SigmaReport& r);
SigmaReport sigma_report_from_json(const Json& j);

Json to_json(const EdgeClass& c);
EdgeClass edge_class_from_json(const Json& j);

/// Emit-only view of a trace; frames do not keep enough to be re-read.
Json to_json(const Trace& t);

bool is_integral(const Assignment& x);

/// Pretty JSON text followed by a newline.
std::string emit(const Json& j);

}  // namespace weakcover
