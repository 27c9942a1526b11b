#include "chgraph/json_io.hpp"

namespace chgraph {

nlohmann::json to_json(const AuditReport &report) {
  nlohmann::json obj;
  obj["claim"] = report.claim;
  obj["instance"] = report.instance;
  obj["expected"] = nlohmann::json::parse(report.expected);
  obj["actual"] = nlohmann::json::parse(report.actual);
  obj["verdict"] = report.equal ? "equal" : "mismatch";
  if (!report.detail.empty()) obj["detail"] = report.detail;
  return obj;
}

nlohmann::json to_json(const CountAudit &audit) {
  nlohmann::json obj;
  obj["claim"] = audit.formula;
  obj["n"] = audit.n;
  obj["j"] = audit.j;
  obj["expected"] = audit.oracle_value;
  obj["actual"] = audit.formula_value;
  obj["verdict"] = audit.equal ? "equal" : "mismatch";
  return obj;
}

nlohmann::json to_json(const CycleCertificate &cert) {
  nlohmann::json obj;
  obj["vertices"] = cert.vertices;
  obj["length"] = cert.length();
  return obj;
}

nlohmann::json to_json(const ConjectureReport &report) {
  nlohmann::json obj;
  obj["conjecture"] = report.conjecture;
  obj["instance"] = report.instance;
  if (report.spec)
    obj["spec"] = nlohmann::json::parse(report.spec->to_json());
  obj["n"] = report.n;
  obj["r"] = report.r;
  obj["bound"] = report.bound;
  obj["girth"] = report.girth_length ? nlohmann::json(*report.girth_length)
                                     : nlohmann::json(nullptr);
  obj["verdict"] = report.holds ? "holds" : "violated";
  if (report.certificate) obj["certificate"] = to_json(*report.certificate);
  if (report.witness) obj["witness"] = *report.witness;
  if (report.ge2_variant_holds) {
    obj["ge2_variant"] = *report.ge2_variant_holds ? "holds" : "violated";
    if (report.ge2_witness) obj["ge2_witness"] = *report.ge2_witness;
  }
  return obj;
}

nlohmann::json to_json(const SweepSummary &summary) {
  nlohmann::json obj;
  obj["predicate"] = summary.predicate == Predicate::CH ? "CH" : "Seymour";
  obj["n"] = summary.n;
  obj["enumerated"] = summary.enumerated;
  obj["checked"] = summary.checked;
  obj["held"] = summary.held;
  obj["violated"] = summary.violated;
  obj["first_violation"] = summary.first_violation
                               ? nlohmann::json(*summary.first_violation)
                               : nlohmann::json(nullptr);
  return obj;
}

nlohmann::json to_json(const LabelingClaims &claims) {
  nlohmann::json obj;
  obj["n"] = claims.n;
  obj["r"] = claims.r;
  obj["bound"] = claims.bound;
  obj["path_bound"] = claims.path_bound_holds ? "holds" : "violated";
  obj["max_path_to_forced_stage"] = claims.max_path_to_forced_stage;
  obj["arcs_into_labeled"] = claims.arcs_into_labeled;
  obj["distinct_labeled_targets"] = claims.distinct_labeled_targets;
  obj["forced_arcs_bound"] =
      claims.forced_arcs_bound_holds ? "holds" : "violated";
  obj["forced_targets_bound"] =
      claims.forced_targets_bound_holds ? "holds" : "violated";
  obj["reachability"] = claims.reachability_holds ? "holds" : "violated";
  return obj;
}

nlohmann::json to_json(const TransparencyMatrix &t) {
  return nlohmann::json::parse(matrix_to_json(t));
}

nlohmann::json to_json(const DifferenceProfile &profile) {
  auto side = [](const std::vector<std::int64_t> &counts) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t d = 1; d < counts.size(); ++d)
      if (counts[d] != 0)
        rows.push_back(nlohmann::json::array(
            {static_cast<std::int64_t>(d), counts[d]}));
    return rows;
  };
  nlohmann::json obj;
  obj["forward"] = side(profile.forward);
  obj["backward"] = side(profile.backward);
  obj["total"] = profile.total();
  return obj;
}

}  // namespace chgraph
