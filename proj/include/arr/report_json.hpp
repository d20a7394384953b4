#ifndef ARR_REPORT_JSON_HPP
#define ARR_REPORT_JSON_HPP

#include <json.hpp>

#include "arr/classify.hpp"

namespace arr {

using Json = nlohmann::ordered_json;

// Stable field names: verdict, exponents, po_exponents, level,
// level_coefficient, ds, pd, case_tag, checks, indices.
Json classification_json(const ClassificationReport& r,
                         const std::vector<int>& indices_1based = {});
Json resolution_json(const FreeResolution& res); // {"betti": {...}, "pd": k}
Json nt1_json(const NT1Report& r);
Json nt2_json(const NT2Report& r);
Json arrangement_json(const Arrangement& a);
Json deletion_json(const Deletion& d);

} // namespace arr

#endif
