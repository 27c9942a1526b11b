#pragma once

#include "json.hpp"

#include "chgraph/conjectures.hpp"
#include "chgraph/constructions.hpp"
#include "chgraph/counting.hpp"
#include "chgraph/transparency.hpp"

namespace chgraph {

// JSON shapes for every report the CLI emits. Keys are ordered
// alphabetically by the serializer, so equal reports are equal bytes.
nlohmann::json to_json(const AuditReport &report);
nlohmann::json to_json(const CountAudit &audit);
nlohmann::json to_json(const ConjectureReport &report);
nlohmann::json to_json(const SweepSummary &summary);
nlohmann::json to_json(const LabelingClaims &claims);
nlohmann::json to_json(const CycleCertificate &cert);
nlohmann::json to_json(const TransparencyMatrix &t);
nlohmann::json to_json(const DifferenceProfile &profile);

}  // namespace chgraph
