#ifndef WALLCRYS_PATH_MODEL_HPP
#define WALLCRYS_PATH_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "wallcrys/cartan.hpp"
#include "wallcrys/crystal.hpp"
#include "wallcrys/perfect.hpp"

namespace wallcrys {

/// The periodic tail every lambda-path eventually agrees with.
struct GroundState {
  int period = 0;
  std::vector<int> lambda_idx;        // lambda_k as fundamental-weight indices
  std::vector<PerfectElem> elems;     // b_k, k = 0..period-1
  PerfectElem at(std::size_t k) const { return elems[k % period]; }
  int weight_at(std::size_t k) const { return lambda_idx[k % period]; }
};

GroundState ground_state(const AffineType& t, int lambda);

/// A lambda-path stored as its finite deviation from the ground tail:
/// entries[j] = p(j) for j < entries.size(), and p(k) = b_k beyond.
/// Normalized: entries.back() != ground entry (or entries empty).
struct LambdaPath {
  std::vector<PerfectElem> entries;
  bool operator==(const LambdaPath&) const = default;
};

/// Classical crystal structure on P(lambda) for one (type, lambda).
class PathModel {
 public:
  using Elem = LambdaPath;

  PathModel(const AffineType& t, int lambda);

  const AffineType& type() const { return type_; }
  int lambda() const { return lambda_; }
  const GroundState& ground() const { return ground_; }

  Elem root() const { return LambdaPath{}; }
  int n_labels() const { return type_.n_indices(); }

  std::optional<Elem> f(const Elem& p, int i) const;
  std::optional<Elem> e(const Elem& p, int i) const;
  int eps(const Elem& p, int i) const;
  int phi(const Elem& p, int i) const;
  std::vector<std::int64_t> classical_wt(const Elem& p) const;
  std::string key(const Elem& p) const;

  /// "(... b2 b1 b0)" over at least `min_width` entries, matching the
  /// figure notation (left = large index).
  std::string render(const Elem& p, int min_width = 6) const;

  /// Same operators computed with the acting window padded by `extra`
  /// ground factors; used by the N'-stability property tests.
  std::optional<Elem> f_windowed(const Elem& p, int i, int extra) const;
  std::optional<Elem> e_windowed(const Elem& p, int i, int extra) const;
  int eps_windowed(const Elem& p, int i, int extra) const;
  int phi_windowed(const Elem& p, int i, int extra) const;

 private:
  AffineType type_;
  int lambda_;
  const PerfectCrystal* crystal_;
  GroundState ground_;

  LambdaPath normalized(std::vector<PerfectElem> entries) const;
  // Builds the word p(N-1+extra)...p(0), leftmost first, N = deviation size.
  std::vector<PerfectElem> word(const Elem& p, int extra) const;
};

}  // namespace wallcrys

#endif
