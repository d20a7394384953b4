#ifndef ARR_CLASSIFY_HPP
#define ARR_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>

#include "arr/resolution.hpp"

namespace arr {

enum class Verdict { Free, Spog, Other };
std::string to_string(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::Other;
  std::vector<int> exponents;    // free only
  std::vector<int> po_exponents; // SPOG only
  int level = -1;                // SPOG only
  std::optional<LinearForm> level_coefficient; // SPOG only
  int level_slot = -1;           // generator index of the chosen level element
  std::vector<int> ds;
  int pd = 0;
  std::string case_tag;
  std::map<std::string, bool> checks;

  DerivationModule module;
  FreeResolution res;

  bool all_checks_pass() const {
    for (const auto& [k, v] : checks)
      if (!v) return false;
    return true;
  }
};

// Verdict + exponent data + per-theorem consistency flags for one arrangement.
// Saito's determinant criterion is verified whenever the verdict is Free.
ClassificationReport classify_arrangement(const Arrangement& a);

bool is_free(const Arrangement& a);
std::vector<int> exponents(const Arrangement& a); // throws when not free

// Classification of A \ {H_i} for free A, with the level formula
// d = |A'| - |A^{H_i}| and addition-deletion consistency checks.
struct NT1Report {
  int i = 0;
  int restriction_size = 0; // |A^{H_i}|
  ClassificationReport deletion;
  std::string case_tag; // NT1-free | NT1-spog
  std::map<std::string, bool> checks;
};
NT1Report nt1_report(const Arrangement& a, int i);

// Full two-deletion analysis of a free arrangement against the structure
// theorems; delegates to NT1 when one single deletion is free.
struct NT2Report {
  int i = 0, j = 0;   // as passed in
  int h1 = 0, h2 = 0; // sorted so that level(A_{h1}) <= level(A_{h2})
  int c1 = -1, c2 = -1;
  int flat_mult = 0;
  bool delegated = false;
  std::optional<NT1Report> delegate;
  ClassificationReport parent; // A
  ClassificationReport a1, a2; // deletions in (h1, h2) order
  ClassificationReport a12;
  std::vector<int> exp_a;
  bool ker_sum_1 = false; // D(A) + ker rho_1^2 == D(A_1)
  bool ker_sum_2 = false; // D(A) + ker rho_2^1 == D(A_2)
  std::string case_tag;
  std::map<std::string, bool> checks;
  std::optional<Thm38Report> thm38;

  bool all_checks_pass() const {
    for (const auto& [k, v] : checks)
      if (!v) return false;
    return true;
  }
};
NT2Report nt2_report(const Arrangement& a, int i, int j);

// Necessary-condition probe for free additions of a SPOG arrangement whose
// level exceeds every PO-exponent: the only possible added hyperplane is the
// kernel of the level coefficient.
struct FreeAdditionReport {
  LinearForm candidate;
  bool already_present = false;
  bool addition_free = false; // verdict of C u {ker alpha}
  std::vector<int> addition_exponents;
};
FreeAdditionReport free_addition_candidate(const Arrangement& a, const ClassificationReport& c);

// Explicit lattice comparison: bijection of hyperplanes carrying rank-2 flats
// onto rank-2 flats, found by fingerprint-pruned backtracking.
struct LatticeIsoReport {
  bool isomorphic = false;
  std::vector<int> bijection; // b-hyperplane -> c-hyperplane
};
LatticeIsoReport lattice_isomorphic(const Arrangement& b, const Arrangement& c);

struct CombinatoricsDemo {
  LatticeIsoReport iso;
  std::vector<int> ds_b, ds_c;
  bool ds_equal = false;
  std::vector<int> flat_sizes_b, flat_sizes_c; // rank-2 flat sizes, sorted
  bool flat_sizes_equal = false;
};
CombinatoricsDemo combinatorics_vs_geometry(const Arrangement& b, const Arrangement& c);

} // namespace arr

#endif
