#include "arr/report_json.hpp"

namespace arr {

namespace {

Json checks_json(const std::map<std::string, bool>& checks) {
  Json j = Json::object();
  for (const auto& [k, v] : checks) j[k] = v;
  return j;
}

} // namespace

Json resolution_json(const FreeResolution& res) {
  Json j;
  Json betti = Json::object();
  for (const auto& [step, row] : betti_table(res)) {
    Json r = Json::object();
    for (const auto& [deg, count] : row) r[std::to_string(deg)] = count;
    betti[std::to_string(step)] = r;
  }
  j["betti"] = betti;
  j["pd"] = res.pd();
  return j;
}

Json classification_json(const ClassificationReport& r, const std::vector<int>& indices) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["exponents"] = r.verdict == Verdict::Free ? Json(r.exponents) : Json();
  j["po_exponents"] = r.verdict == Verdict::Spog ? Json(r.po_exponents) : Json();
  j["level"] = r.verdict == Verdict::Spog ? Json(r.level) : Json();
  j["level_coefficient"] = r.level_coefficient
                               ? Json(r.level_coefficient->to_string())
                               : Json();
  j["ds"] = r.ds;
  j["pd"] = r.pd;
  j["case_tag"] = r.case_tag.empty() ? Json() : Json(r.case_tag);
  j["checks"] = checks_json(r.checks);
  j["indices"] = indices.empty() ? Json() : Json(indices);
  j["resolution"] = resolution_json(r.res);
  return j;
}

Json nt1_json(const NT1Report& r) {
  Json j = classification_json(r.deletion, {r.i + 1});
  j["case_tag"] = r.case_tag;
  j["restriction_size"] = r.restriction_size;
  Json merged = j["checks"];
  for (const auto& [k, v] : r.checks) merged[k] = v;
  j["checks"] = merged;
  return j;
}

Json nt2_json(const NT2Report& r) {
  Json j = classification_json(r.a12, {r.i + 1, r.j + 1});
  j["case_tag"] = r.case_tag;
  j["delegated"] = r.delegated;
  if (r.delegated && r.delegate) {
    j["delegate"] = nt1_json(*r.delegate);
  } else {
    j["levels"] = Json::array({r.c1, r.c2});
    j["level_order"] = Json::array({r.h1 + 1, r.h2 + 1});
    j["flat_multiplicity"] = r.flat_mult;
    j["kernel_sums"] = Json::object({{"side1", r.ker_sum_1}, {"side2", r.ker_sum_2}});
    j["a"] = classification_json(r.parent);
    j["a1"] = classification_json(r.a1, {r.h1 + 1});
    j["a2"] = classification_json(r.a2, {r.h2 + 1});
  }
  Json merged = j["checks"];
  for (const auto& [k, v] : r.checks) merged[k] = v;
  j["checks"] = merged;
  return j;
}

Json arrangement_json(const Arrangement& a) {
  Json j;
  j["vars"] = a.nvars;
  Json forms = Json::array();
  for (int i = 0; i < a.size(); ++i) {
    Json f;
    f["form"] = a.forms[i].to_string();
    if (a.mult[i] != 1) f["mult"] = a.mult[i];
    forms.push_back(f);
  }
  j["forms"] = forms;
  return j;
}

Json deletion_json(const Deletion& d) {
  Json j = arrangement_json(d.arr);
  Json tr = Json::object();
  for (std::size_t i = 0; i < d.new_to_old.size(); ++i)
    tr[std::to_string(i + 1)] = d.new_to_old[i] + 1;
  j["translation"] = tr;
  return j;
}

} // namespace arr
