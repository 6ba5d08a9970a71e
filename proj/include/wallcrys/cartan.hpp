#ifndef WALLCRYS_CARTAN_HPP
#define WALLCRYS_CARTAN_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcrys {

/// The six classical affine families handled by this library.
enum class Family {
  A1,      // A_n^(1),      n >= 1
  A2odd,   // A_{2n-1}^(2), n >= 3
  D1,      // D_n^(1),      n >= 4
  A2even,  // A_{2n}^(2),   n >= 2
  D2,      // D_{n+1}^(2),  n >= 2
  B1,      // B_n^(1),      n >= 3
};

struct AffineType {
  Family family;
  int rank;  // the n of the family header; index set is I = {0,...,n}

  int n_indices() const { return rank + 1; }
  bool operator==(const AffineType&) const = default;
};

/// Thrown on out-of-range ranks or malformed type strings.
struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool rank_in_range(Family f, int rank);
AffineType make_type(Family f, int rank);  // throws TypeError on bad rank

/// Parses "A2~1", "A5~2", "A4~2", "D4~1", "D3~2", "B3~1".
/// The printed rank is the subscript of the family symbol; for A_{2n-1}^(2),
/// A_{2n}^(2) and D_{n+1}^(2) it is converted back to n.
AffineType parse_type(const std::string& s);
std::string type_to_string(const AffineType& t);

struct CartanData {
  std::vector<std::vector<int>> a;  // (n+1)x(n+1) generalized Cartan matrix
  std::vector<int> delta;           // null root coefficients d_i
  std::vector<int> central;         // canonical central element coefficients c_i
  std::vector<int> level1_weights;  // indices i with Lambda_i of level 1
};

const CartanData& cartan_data(const AffineType& t);  // cached per (family, rank)

/// A weight Lambda_base - sum_i content[i]*alpha_i.  base = -1 denotes the
/// zero base (pure root lattice content).
struct AffineWeight {
  int base = -1;
  std::vector<std::int64_t> content;

  bool operator==(const AffineWeight&) const = default;
};

AffineWeight fundamental_weight(const AffineType& t, int i);
std::int64_t pair_coroot(const AffineType& t, const AffineWeight& w, int i);
std::int64_t level(const AffineType& t, const AffineWeight& w);
AffineWeight subtract_root(const AffineWeight& w, int i);

/// All <h_i, w> in one vector (the classical coordinates of the weight).
std::vector<std::int64_t> pairing_vector(const AffineType& t, const AffineWeight& w);

/// Parses "L0", "L3" and checks the index is a level-1 fundamental weight.
int parse_level1_lambda(const AffineType& t, const std::string& s);

}  // namespace wallcrys

#endif
