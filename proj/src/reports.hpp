#pragma once

#include <json.hpp>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/recognition.hpp"

namespace gemkit::reports {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json half(HalfInteger h);
json gem(const ColoredGraph& g);
json census(const ColoredGraph& g);
json genus(const GenusReport& r);
json verify_boundary(const VerificationReport& r);
json verify_closed(const ClosedVerification& r);
json boundary_genus(const BoundaryGenusReport& r);
json relations(const GRelationReport& r);
json handlebody(const HandlebodyVerdict& r);
json bounds(const std::vector<BoundCertificate>& certs);
json dipoles(const std::vector<DipoleSite>& sites);
json boundary(const BoundaryGraph& b);
json site(const DipoleSite& s);

}  // namespace gemkit::reports
