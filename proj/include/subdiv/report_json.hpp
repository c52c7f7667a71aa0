#pragma once

// JSON views of the analysis results. Exact quantities are written as rational
// strings, eigenvalues as {"re": float, "im": float}.

#include "subdiv/catalog.hpp"
#include "subdiv/convergence.hpp"
#include "subdiv/dynamics.hpp"
#include "subdiv/local_matrix.hpp"
#include "subdiv/search.hpp"
#include "subdiv/spectrum.hpp"

#include <json.hpp>

namespace subdiv {

using Json = nlohmann::ordered_json;

Json to_json(const Mask& mask);
Json to_json(const SchemeRecord& record);
Json to_json(const ConvergenceReport& report);
Json to_json(const LocalMatrix& matrix);
Json to_json(const Spectrum& spectrum);
Json to_json(const SearchCell& cell);
/// Summary only (counts and witnesses); cells go to CSV.
Json to_json(const SearchResult& result);
Json to_json(const MinWidthReport& report);
Json to_json(const TrajectoryReport& report);

}  // namespace subdiv
