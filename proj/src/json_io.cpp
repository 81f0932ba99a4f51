#include "apll/json_io.hpp"

#include <stdexcept>

namespace apll::json_io {

namespace {

Json element_list(const GroupSpec& g, const std::vector<GroupElement>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(g.format_element(x));
  return arr;
}

std::vector<GroupElement> parse_list(const GroupSpec& g, const Json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected an array of element strings");
  std::vector<GroupElement> out;
  for (const auto& x : arr) out.push_back(g.parse_element(x.get<std::string>()));
  return out;
}

Json witness_json(const GroupSpec& g, const Verdict& v) {
  if (!v.witness) return nullptr;
  Json w;
  w["element"] = g.format_element(v.witness->element);
  w["lhs"] = v.witness->lhs;
  w["rhs"] = v.witness->rhs;
  return w;
}

Json partition_json(const MultiplicityPartition& p) {
  Json j;
  j["side"] = p.side == Side::X ? "X" : "Y";
  Json sizes = Json::object();
  for (const auto& [i, s] : p.sizes) sizes[std::to_string(i)] = s;
  j["sizes"] = sizes;
  j["max_multiplicity"] = p.max_multiplicity;
  j["weighted_mass"] = p.weighted_mass;
  j["expected_weighted_mass"] = p.expected_weighted;
  j["class_total"] = p.class_total;
  j["mass_identities_hold"] = p.mass_identities_hold;
  return j;
}

Json pair_counts_json(const PairCounts& c) {
  Json j;
  j["k"] = c.k;
  j["C0"] = c.counts[0];
  j["C1"] = c.counts[1];
  j["C2"] = c.counts[2];
  j["over_two"] = c.over_two;
  j["intersection_sum"] = c.intersection_sum;
  j["formula_C1_times2"] = c.formula_c1_twice;
  j["formula_C2_times2"] = c.formula_c2_twice;
  j["formula_sum"] = c.formula_sum;
  j["formulas_hold"] = c.formulas_hold;
  j["diagnostic_only"] = c.diagnostic_only;
  return j;
}

template <typename F>
auto translating(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
  }
}

}  // namespace

Json to_json(const CodeCandidate& c) {
  Json j;
  j["group"] = c.group.to_string();
  j["n"] = c.n;
  j["elements"] = element_list(c.group, c.elements);
  return j;
}

Json to_json(const SplitCandidate& s) {
  Json j;
  j["group"] = s.subgroup.to_string();
  j["n"] = s.n;
  j["t0"] = element_list(s.subgroup, s.t0);
  j["t1"] = element_list(s.subgroup, s.t1);
  return j;
}

Json to_json(const RingElement& a) {
  Json j;
  j["group"] = a.group().to_string();
  Json coeffs = Json::array();
  for (const auto& [idx, c] : a.terms()) coeffs.push_back(Json::array({a.group().format_element(a.group().element_at(idx)), c}));
  j["coeffs"] = coeffs;
  return j;
}

Json to_json(const LeeLattice& l) {
  Json j;
  j["n"] = l.dimension();
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < l.basis().rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < l.basis().cols(); ++c) row.push_back(l.basis()(r, c));
    rows.push_back(row);
  }
  j["basis"] = rows;
  return j;
}

Json to_json(const CodeMetrics& m) {
  Json j;
  j["n"] = m.n;
  j["r"] = m.intended_radius;
  j["det"] = m.det_abs;
  j["min_distance"] = m.min_distance;
  j["packing_radius"] = m.packing_radius;
  j["covering_radius"] = m.covering_radius;
  j["density"] = m.density.to_string();
  Json flags = Json::array();
  if (m.perfect) flags.push_back("PERFECT");
  if (m.almost_perfect) flags.push_back("ALMOST_PERFECT");
  j["flags"] = flags;
  return j;
}

Json to_json(const GroupSpec& g, const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["witness"] = witness_json(g, v);
  return j;
}

Json to_json(const GroupSpec& h, const SplitVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["product"] = to_json(h, v.product);
  j["square_sum"] = to_json(h, v.square_sum);
  return j;
}

Json to_json(const BatteryReport& b) {
  Json j = Json::object();
  for (std::size_t i = 0; i < b.passed.size(); ++i) j[BatteryReport::kNames[i]] = static_cast<bool>(b.passed[i]);
  return j;
}

Json to_json(const GroupSpec& h, const AnalysisReport& r) {
  Json j;
  j["n"] = r.n;
  j["k0"] = r.k0;
  j["k1"] = r.k1;
  j["verified"] = r.verified;
  j["diagnostic_only"] = !r.verified;
  j["X"] = partition_json(r.x);
  j["Y"] = partition_json(r.y);
  Json th;
  th["theta0"] = r.thetas.theta0;
  th["theta1"] = r.thetas.theta1 ? Json(*r.thetas.theta1) : Json(nullptr);
  th["theta11"] = r.thetas.theta11;
  th["theta12"] = r.thetas.theta12;
  th["sum_identity_holds"] = r.thetas.sum_identity_holds;
  j["thetas"] = th;
  j["pair_counts"] = Json::array({pair_counts_json(r.c0), pair_counts_json(r.c1)});
  j["ell"] = Json::array({r.ell0, r.ell1});
  Json ie;
  ie["x_closed_form"] = r.inclusion_exclusion.x_closed_form;
  ie["y_closed_form"] = r.inclusion_exclusion.y_closed_form;
  ie["x_raw"] = r.inclusion_exclusion.x_raw;
  ie["y_raw"] = r.inclusion_exclusion.y_raw;
  ie["x_lhs"] = r.inclusion_exclusion.x_lhs;
  ie["x_rhs"] = r.inclusion_exclusion.x_rhs;
  ie["y_lhs"] = r.inclusion_exclusion.y_lhs;
  ie["y_rhs"] = r.inclusion_exclusion.y_rhs;
  j["inclusion_exclusion"] = ie;
  Json tp;
  tp["x_exact"] = r.triple_product.x_exact;
  tp["y_exact"] = r.triple_product.y_exact;
  tp["x_mod3"] = r.triple_product.x_mod3;
  tp["y_mod3"] = r.triple_product.y_mod3;
  j["triple_product"] = tp;
  if (r.order3) {
    Json o;
    o["precondition_met"] = r.order3->precondition_met;
    o["delta0"] = element_list(h, r.order3->repeated[0]);
    o["delta1"] = element_list(h, r.order3->repeated[1]);
    o["max_multiplicity"] = Json::array({r.order3->max_multiplicity[0], r.order3->max_multiplicity[1]});
    o["identity_multiplicity_t0"] = r.order3->identity_multiplicity_t0;
    o["violations"] = r.order3->violations;
    j["order3"] = o;
  } else {
    j["order3"] = nullptr;
  }
  j["e_in_X1"] = r.e_in_x1;
  j["X_parity_pattern"] = r.x_parity_pattern;
  return j;
}

Json to_json(const SieveVerdict& v) {
  Json j;
  j["n"] = v.n;
  j["status"] = to_string(v.status);
  j["reason"] = to_string(v.reason);
  j["n2n1"] = v.n2n1;
  j["trace"] = v.detail;
  return j;
}

Json histogram_json(const SieveTable& t) {
  Json j;
  Json s = Json::object();
  for (const auto& [k, v] : t.status_histogram) s[k] = v;
  Json r = Json::object();
  for (const auto& [k, v] : t.reason_histogram) r[k] = v;
  j["from"] = t.rows.empty() ? 0 : t.rows.front().n;
  j["to"] = t.rows.empty() ? 0 : t.rows.back().n;
  j["statuses"] = s;
  j["reasons"] = r;
  return j;
}

Json summary_json(int n, const SearchResult& r) {
  Json j;
  j["n"] = n;
  j["group"] = r.group.to_string();
  j["raw_count"] = r.solutions.size();
  j["orbit_count"] = r.orbit_representatives.size();
  j["examined"] = r.candidates_examined;
  j["complete"] = r.complete;
  j["nodes"] = r.nodes_visited;
  j["battery_rejections"] = r.battery_rejections;
  j["battery_passed_non_solutions"] = r.battery_passed_non_solutions;
  j["orbit_dedup_applied"] = r.orbit_dedup_applied;
  j["warnings"] = r.warnings;
  return j;
}

CodeCandidate code_candidate_from_json(const Json& j) {
  return translating([&] {
    const GroupSpec g = GroupSpec::parse(j.at("group").get<std::string>());
    return make_code_candidate(g, j.at("n").get<int>(), parse_list(g, j.at("elements")));
  });
}

SplitCandidate split_candidate_from_json(const Json& j) {
  return translating([&] {
    const GroupSpec h = GroupSpec::parse(j.at("group").get<std::string>());
    return make_split_candidate(h, j.at("n").get<int>(), parse_list(h, j.at("t0")), parse_list(h, j.at("t1")));
  });
}

RingElement ring_element_from_json(const Json& j) {
  return translating([&] {
    const GroupSpec g = GroupSpec::parse(j.at("group").get<std::string>());
    RingElement out(g);
    for (const auto& term : j.at("coeffs")) {
      const GroupElement x = g.parse_element(term.at(0).get<std::string>());
      out = out + RingElement::from_element(g, x, term.at(1).get<std::int64_t>());
    }
    return out;
  });
}

}  // namespace apll::json_io
