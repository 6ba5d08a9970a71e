#ifndef WALLCRYS_YOUNG_WALL_HPP
#define WALLCRYS_YOUNG_WALL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallcrys/cartan.hpp"
#include "wallcrys/crystal.hpp"

namespace wallcrys {

/// One cell of a column pattern.  A column is a periodic stack of cells:
///   Cube      - one block, unit height, unit thickness
///   HalfPair  - two blocks of one color, half-unit height each, unit thickness
///   Split     - two blocks of different colors sharing one unit cell,
///               unit height, half-unit thickness each
struct PatternCell {
  enum class Kind { Cube, HalfPair, Split };
  Kind kind = Kind::Cube;
  int color_a = 0;
  int color_b = 0;  // Split only

  int slots() const { return kind == Kind::Cube ? 1 : 2; }
};

enum class GroundKind {
  Bare,       // type A: no ground blocks, columns start empty
  SplitHalf,  // ground block = one half-thickness block in cells[0]
  LowerHalf,  // ground block = the lower half-height block of cells[0]
};

/// Periodic cell pattern of one column (cells[0] holds the ground block).
struct ColumnShape {
  std::vector<PatternCell> cells;
  GroundKind ground = GroundKind::Bare;
  int ground_color = -1;
  int blocks_per_period = 0;

  const PatternCell& cell(int m) const { return cells[m % cells.size()]; }
};

/// Column state: number of added blocks, plus - when the top block is a lone
/// half-thickness block of a Split cell - the color of that block.  Either
/// color of a Split pair may be placed first; the two resulting columns are
/// distinct states.
struct ColState {
  std::uint32_t count = 0;
  std::int8_t tag = -1;

  bool operator==(const ColState&) const = default;
};

struct Wall {
  std::vector<ColState> cols;  // index 0 = rightmost; trailing ground trimmed
  bool operator==(const Wall&) const = default;
};

/// Decoded top-of-column information.
struct TopInfo {
  enum class Top {
    Empty,        // count 0 on a bare ground
    GroundSplit,  // count 0, lone ground half-block of a Split cell
    GroundLower,  // count 0, ground lower half of a HalfPair cell
    LoneSplit,    // lone added half-block of a Split cell (color = tag)
    FullSplit,    // complete Split cell
    LowerHalf,    // lone added lower half of a HalfPair cell
    FullPair,     // complete HalfPair cell
    Cube,
  };
  Top top = Top::Empty;
  int color = -1;      // top block color
  int other = -1;      // partner color for Split cells
  int cell_index = 0;  // absolute cell number of the top cell
  int h2 = 0;          // column height in half-units, ground included
  int s2 = 0;          // solid (full-thickness, gap-free) height in half-units
};

/// The affine crystal of proper Young walls F(lambda) and its reduced
/// subcrystal Y(lambda) for one (type, level-1 lambda).
class WallModel {
 public:
  using Elem = Wall;

  WallModel(const AffineType& t, int lambda);

  const AffineType& type() const { return type_; }
  int lambda() const { return lambda_; }
  int blocks_per_delta() const { return period_blocks_; }
  const ColumnShape& shape(int k) const;

  Elem root() const { return Wall{}; }
  int n_labels() const { return type_.n_indices(); }

  TopInfo top_info(int k, const ColState& s) const;
  ColState col_state(const Wall& w, int k) const;

  /// Building rules (1)-(4) plus Def 5.1(a): every stored column covered on
  /// its right and weakly decreasing heights.
  bool validate(const Wall& w) const;
  bool is_proper(const Wall& w) const;

  /// Kashiwara operators and statistics via wall i-signatures (Section 6
  /// steps (1)-(4)).  Results are valid proper walls or nullopt.
  std::optional<Elem> f(const Elem& w, int i) const;
  std::optional<Elem> e(const Elem& w, int i) const;
  int eps(const Elem& w, int i) const;
  int phi(const Elem& w, int i) const;

  /// Per-column signature as one of "--", "-", "-+", "+", "++", "".
  std::string column_signature(const Elem& w, int k, int i) const;

  std::vector<std::int64_t> classical_wt(const Elem& w) const;
  AffineWeight wall_weight(const Elem& w) const;   // lambda - sum k_i alpha_i
  std::vector<std::int64_t> block_content(const Elem& w) const;  // k_i

  bool has_removable_delta(const Elem& w, int k) const;
  bool is_reduced(const Elem& w) const;

  std::string key(const Elem& w) const;            // canonical, injective
  std::string render_ascii(const Elem& w) const;
  std::optional<Wall> parse_counts(const std::string& s) const;  // "5:0,1"

  /// All reduced proper walls with at most max_blocks added blocks,
  /// lexicographically ordered by key.
  std::vector<Wall> enumerate_reduced(int max_blocks) const;

 private:
  AffineType type_;
  int lambda_;
  int period_blocks_;
  std::vector<ColumnShape> shapes_;  // per column class
  int class_count_;

  int col_class(int k) const { return k % class_count_; }
  ColState ground_state_of(int) const { return ColState{}; }

  // Colors addable / removable at a column top (ignoring neighbors).
  std::vector<int> addable_colors(int k, const ColState& s) const;
  std::vector<int> removable_colors(int k, const ColState& s) const;
  ColState added(int k, const ColState& s, int color) const;
  ColState removed(int k, const ColState& s, int color) const;

  bool covered(int k_left, const ColState& left, const ColState& right) const;
  bool proper_with(const Wall& w, int k, const ColState& replacement) const;

  std::optional<Wall> try_add(const Wall& w, int k, int color) const;
  std::optional<Wall> try_remove(const Wall& w, int k, int color) const;

  struct ColSig {
    SignatureRun run;
    // realized actions for this column and this i
    std::optional<ColState> removed_state;
    std::optional<ColState> added_state;
  };
  ColSig column_sig(const Elem& w, int k, int i) const;

  Wall normalized(Wall w) const;

  friend class WallEnumerator;
};

}  // namespace wallcrys

#endif
