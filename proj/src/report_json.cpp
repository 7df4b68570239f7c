#include "z4kit/report_json.hpp"

namespace z4kit {

Json to_json(const WeightDistribution& w) {
  Json j = Json::object();
  for (int i = 0; i <= w.n; ++i) {
    if (w.counts[i] != 0) j[std::to_string(i)] = w.counts[i].str();
  }
  return j;
}

Json to_json(const ExtremalityReport& r) {
  Json j;
  j["extremal"] = r.extremal;
  j["n"] = r.length;
  j["bound"] = r.bound;
  j["excluded_weights_checked"] = r.excluded_weights;
  Json torsion = Json::object();
  for (const auto& [w, c] : r.torsion_low_counts) torsion[std::to_string(w)] = c.str();
  j["torsion_low_counts"] = torsion;
  Json residue = Json::object();
  for (const auto& [w, c] : r.residue_low_profile) residue[std::to_string(w)] = c;
  j["residue_low_profile"] = residue;
  j["residue_min_weight"] = r.residue_min_weight ? Json(*r.residue_min_weight) : Json(nullptr);
  if (r.witness) {
    j["witness"] = r.witness->digits();
    j["witness_euclidean_weight"] = euclidean_weight(*r.witness);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["suitable"] = v.suitable;
  if (v.witness) {
    j["condition"] = static_cast<int>(v.witness->condition);
    j["codeword"] = v.witness->v.digits();
    j["doubled_word"] = v.witness->word.digits();
    j["euclidean_weight"] = v.witness->euclidean_weight;
  } else {
    j["condition"] = nullptr;
  }
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  Json sets = Json::array();
  for (Word b : r.suitable) sets.push_back(format_positions(b));
  j["suitable"] = sets;
  j["drawn"] = r.drawn;
  j["duplicates"] = r.duplicates;
  j["prefiltered"] = r.prefiltered;
  j["checked"] = r.checked;
  Json by = Json::object();
  for (int c = 0; c < 4; ++c) by[std::to_string(c)] = r.unsuitable_by_condition[c];
  j["unsuitable_by_condition"] = by;
  j["even_missed_by_prefilter"] = r.even_missed_by_prefilter;
  return j;
}

Json to_json(const AlgBCounts& c) {
  Json j;
  Json steps = Json::object();
  for (int s = 0; s < kAlgBStepCount; ++s) steps[std::string(step_label(static_cast<AlgBStep>(s)))] = c.per_step[s];
  j["per_step"] = steps;
  j["total"] = c.total;
  return j;
}

Json to_json(const Design& d) {
  Json j;
  j["v"] = d.v;
  j["b"] = d.blocks.size();
  j["k"] = d.uniform_k ? Json(*d.uniform_k) : Json(nullptr);
  j["lambda"] = d.lambda1 ? Json(*d.lambda1) : Json(nullptr);
  j["self_orthogonal"] = d.self_orthogonal;
  j["intersections"] = d.intersection_numbers;
  j["quasi_symmetric"] = d.quasi_symmetric();
  return j;
}

Json to_json(const LatticeStats& s) {
  Json j;
  j["min_norm"] = std::to_string(s.min_norm4) + "/4";
  j["kissing"] = s.kissing;
  return j;
}

Json code_summary(const Z4Code& c) {
  Json j;
  j["n"] = c.length();
  j["k1"] = c.k1();
  j["k2"] = c.k2();
  j["self_orthogonal"] = is_self_orthogonal(c);
  j["self_dual"] = is_self_dual(c);
  j["type_ii"] = is_type_ii(c);
  return j;
}

}  // namespace z4kit
