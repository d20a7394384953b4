#ifndef ARR_ARRANGEMENT_HPP
#define ARR_ARRANGEMENT_HPP

#include <string>
#include <vector>

#include "arr/polynomial.hpp"

namespace arr {

// Canonical defining form of a hyperplane: primitive integer coefficients,
// first nonzero entry positive.
struct LinearForm {
  std::vector<Int> c;

  static LinearForm from_rationals(std::vector<Rat> coeffs);
  static LinearForm from_polynomial(const Polynomial& p);

  int nvars() const { return static_cast<int>(c.size()); }
  Polynomial to_polynomial() const;
  std::string to_string() const { return to_polynomial().to_string(); }
  bool operator==(const LinearForm& o) const { return c == o.c; }
  bool operator!=(const LinearForm& o) const { return !(*this == o); }
  bool operator<(const LinearForm& o) const { return c < o.c; }
};

// Central (multi)arrangement: ordered distinct normalized forms with one
// multiplicity each. A simple arrangement has every multiplicity equal to 1.
struct Arrangement {
  int nvars = 0;
  std::vector<LinearForm> forms;
  std::vector<int> mult;

  int size() const { return static_cast<int>(forms.size()); } // |A|
  int weight() const;                                         // |m|
  bool is_simple() const;
  bool empty() const { return forms.empty(); }
};
using Multiarrangement = Arrangement;

struct ArrParseError : std::runtime_error {
  int line;
  ArrParseError(int ln, const std::string& msg)
      : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

// `.arr` text: `vars: <n>`, then `form: <expr>` lines, each optionally
// followed by `mult: <k>`; `#` comments. Hyperplane order = file order.
Arrangement parse_arrangement(const std::string& text);
Arrangement parse_arrangement_file(const std::string& path);
std::string serialize_arrangement(const Arrangement& a);

// Q(A) = product of the normalized forms (each exactly once).
Polynomial defining_polynomial(const Arrangement& a);

// Closed flat: every hyperplane of A containing the intersection, plus the
// rank (codimension) of the intersection. Indices are 0-based.
struct Flat {
  std::vector<int> hyps;
  int rank = 0;
  bool operator==(const Flat& o) const { return hyps == o.hyps && rank == o.rank; }
};

// All flats of rank <= up_to_rank, including the rank-0 ambient flat.
std::vector<Flat> intersection_lattice(const Arrangement& a, int up_to_rank);

// Closure of the intersection of the given hyperplanes.
Flat flat_closure(const Arrangement& a, const std::vector<int>& hyps);

// |A_X| for X = H_i cap H_j.
int flat_multiplicity(const Arrangement& a, int i, int j);

struct Deletion {
  Arrangement arr;
  std::vector<int> old_to_new; // -1 for removed hyperplanes
  std::vector<int> new_to_old;
};
Deletion delete_hyperplanes(const Arrangement& a, std::vector<int> indices);

struct Restriction {
  Arrangement arr;            // A^{H_i} in nvars-1 variables, simple
  std::vector<int> image;     // original index -> restricted index (-1 for i)
  int pivot = 0;              // eliminated variable
};
Restriction euler_restriction(const Arrangement& a, int i);

// (A^{H_i}, m^{H_i}) with m^H(X) = #{L != H_i : L cap H_i = X}.
Arrangement ziegler_restriction(const Arrangement& a, int i);

// Sub-arrangement of hyperplanes containing the flat.
Arrangement localization(const Arrangement& a, const Flat& flat);

// Substitute the solution of alpha = 0 for its pivot variable and drop that
// variable; the coordinate chart used by all restriction maps.
Polynomial eliminate_modulo(const Polynomial& p, const LinearForm& alpha);

// Coordinate change x -> M x (integer M, |det M| = 1): forms pull back by the
// transpose. Degree data of D(A) is invariant under such changes.
Arrangement change_coordinates(const Arrangement& a, const std::vector<std::vector<Int>>& m);

} // namespace arr

#endif
