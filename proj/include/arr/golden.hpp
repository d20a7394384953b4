#ifndef ARR_GOLDEN_HPP
#define ARR_GOLDEN_HPP

#include <functional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

// Embedded verification corpus: arrangements with externally known exponent,
// degree-sequence and resolution data, used by `arrtool verify-paper` and the
// acceptance suite.
struct GoldenArrangement {
  std::string id;
  std::string text; // .arr source
};

const std::vector<GoldenArrangement>& golden_corpus();
Arrangement golden(const std::string& id);

struct GoldenExpectation {
  std::string id;        // stable check identifier
  std::string claim;     // what must hold
  std::string citation;  // corpus case the value comes from
  int criterion;         // acceptance criterion this check belongs to (1..6)
  std::function<bool()> run;
};

// Every corpus expectation, in fixed order.
std::vector<GoldenExpectation> golden_expectations();

} // namespace arr

#endif
