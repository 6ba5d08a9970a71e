#ifndef WALLCRYS_CORRESPONDENCE_HPP
#define WALLCRYS_CORRESPONDENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "wallcrys/path_model.hpp"
#include "wallcrys/young_wall.hpp"

namespace wallcrys {

/// Column-reading map: the top state of column k determines the path entry
/// p(k).  Total on all column states of the pattern.
PerfectElem psi_column(const WallModel& wm, int k, const ColState& s);

/// Psi: Y(lambda) -> P(lambda).  The wall must be a valid reduced proper
/// wall (Psi is injective only on reduced walls); returns nullopt otherwise.
std::optional<LambdaPath> psi(const WallModel& wm, const PathModel& pm, const Wall& w);

/// Explicit lookup table per column class: entry for the ground state plus
/// one per count residue (two where a lone split half admits both colors).
struct PsiTable {
  struct Entry {
    int residue;  // 0 = ground state, else 1 + (count-1) mod P
    int tag;      // -1 or the lone half-block color
    PerfectElem image;
  };
  std::vector<std::vector<Entry>> per_class;
};
PsiTable build_psi_table(const WallModel& wm);

struct IsoReport {
  std::string type;
  int lambda = 0;
  int depth = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool ok = false;
  bool truncated = false;
  std::string detail;
  std::vector<int> counterexample_word;

  std::string to_json() const;
};

/// Bounded-depth certification of the main theorem for one (type, lambda):
/// checks that Psi is a depth-preserving bijection between the reduced wall
/// crystal and the path crystal, commutes with e_i and f_i (including
/// none-results), and preserves classical weights, eps and phi.
IsoReport verify_isomorphism(const AffineType& t, int lambda, int depth,
                             std::size_t node_budget = 1000000);

/// Debug/negative-testing hook: same check but with two entries of the
/// column reading swapped; must fail with a witness word.
IsoReport verify_isomorphism_mutated(const AffineType& t, int lambda, int depth);

struct CaseTableReport {
  bool ok = true;
  int rows_checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> unmatched_rows;
};

/// Checks the local column-configuration vs path-factor signature cases the
/// B_n^(1) proof tabulates (i = 0, 2, generic middle i, n-1, and the
/// presence table for i = n) against a pool of enumerated reduced walls.
CaseTableReport case_table_check(const AffineType& t, int max_blocks = 20);

}  // namespace wallcrys

#endif
