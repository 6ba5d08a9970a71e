#ifndef WALLCRYS_PERFECT_HPP
#define WALLCRYS_PERFECT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wallcrys/cartan.hpp"

namespace wallcrys {

/// One symbol of a level-1 perfect crystal: boxes 1..n, barred boxes, the
/// 0-box, or the empty box (phi), as the family admits.
struct PerfectElem {
  enum class Kind { Box, Bar, ZeroBox, Empty };
  Kind kind = Kind::Empty;
  int idx = 0;  // box index; 0 allowed only in type A (Box 0..n)

  bool operator==(const PerfectElem&) const = default;
  bool operator<(const PerfectElem& o) const {
    if (kind != o.kind) return kind < o.kind;
    return idx < o.idx;
  }
};

inline PerfectElem box(int j) { return {PerfectElem::Kind::Box, j}; }
inline PerfectElem bar(int j) { return {PerfectElem::Kind::Bar, j}; }
inline PerfectElem zerobox() { return {PerfectElem::Kind::ZeroBox, 0}; }
inline PerfectElem emptybox() { return {PerfectElem::Kind::Empty, 0}; }

/// "1", "3b" (bar), "0" (0-box), "e" (empty).  Type A renders Box j as "j".
std::string elem_to_string(const PerfectElem& e);
std::optional<PerfectElem> elem_from_string(const std::string& s);

/// Arrow table and minimal-element data of the level-1 perfect crystal B.
class PerfectCrystal {
 public:
  explicit PerfectCrystal(const AffineType& t);

  const AffineType& type() const { return type_; }
  const std::vector<PerfectElem>& elements() const { return elems_; }

  std::optional<PerfectElem> f(const PerfectElem& b, int i) const;
  std::optional<PerfectElem> e(const PerfectElem& b, int i) const;

  // String lengths through the arrow table (Eq. 2.2).
  int eps(const PerfectElem& b, int i) const;
  int phi(const PerfectElem& b, int i) const;

  /// <h_i, wt(b)> = phi_i(b) - eps_i(b) for all i.
  std::vector<std::int64_t> classical_wt(const PerfectElem& b) const;

  /// phi(b) as a fundamental-weight index when phi(b) = Lambda_j (level-1
  /// minimal elements only); nullopt otherwise.  Same for eps.
  std::optional<int> phi_weight_index(const PerfectElem& b) const;
  std::optional<int> eps_weight_index(const PerfectElem& b) const;

  PerfectElem b_upper(int lambda) const;  // b^{Lambda} with eps(b) = Lambda
  PerfectElem b_lower(int lambda) const;  // b_{Lambda} with phi(b) = Lambda

  struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
  };
  /// Verifies Def 3.4 clauses (ii)-(v) at level 1 plus the Def 3.1 axioms on B.
  CheckReport check_perfect() const;

  /// Copy with one arrow deleted; for mutation tests of check_perfect.
  PerfectCrystal without_arrow(const PerfectElem& from, int i) const;

 private:
  AffineType type_;
  std::vector<PerfectElem> elems_;
  std::map<std::pair<PerfectElem, int>, PerfectElem> f_;
  std::map<std::pair<PerfectElem, int>, PerfectElem> e_;
  std::map<int, PerfectElem> b_upper_, b_lower_;

  void add_arrow(const PerfectElem& from, int i, const PerfectElem& to);
};

/// Cached instance per type.
const PerfectCrystal& perfect_crystal(const AffineType& t);

}  // namespace wallcrys

#endif
