#include "wallcrys/path_model.hpp"

#include <cassert>
#include <sstream>

namespace wallcrys {

GroundState ground_state(const AffineType& t, int lambda) {
  const PerfectCrystal& B = perfect_crystal(t);
  GroundState g;
  int cur = lambda;
  while (true) {
    g.lambda_idx.push_back(cur);
    PerfectElem b = B.b_lower(cur);
    g.elems.push_back(b);
    auto next = B.eps_weight_index(b);
    assert(next && "minimal element must have fundamental eps at level 1");
    cur = *next;
    if (cur == lambda) break;
  }
  g.period = int(g.elems.size());
  return g;
}

PathModel::PathModel(const AffineType& t, int lambda)
    : type_(t), lambda_(lambda), crystal_(&perfect_crystal(t)), ground_(ground_state(t, lambda)) {}

LambdaPath PathModel::normalized(std::vector<PerfectElem> entries) const {
  while (!entries.empty() && entries.back() == ground_.at(entries.size() - 1)) entries.pop_back();
  return LambdaPath{std::move(entries)};
}

std::vector<PerfectElem> PathModel::word(const Elem& p, int extra) const {
  // The display acts on p(N) (x) ... (x) p(0) with p(k) = b_k for k >= N;
  // `extra` >= 1 appends that many ground factors on the left.
  const int N = int(p.entries.size());
  std::vector<PerfectElem> w;
  w.reserve(N + extra);
  for (int k = N + extra - 1; k >= 0; --k)
    w.push_back(k < N ? p.entries[k] : ground_.at(k));
  return w;
}

namespace {
std::vector<SignatureRun> word_runs(const PerfectCrystal& B, const std::vector<PerfectElem>& w,
                                    int i) {
  std::vector<SignatureRun> runs(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) runs[j] = {B.eps(w[j], i), B.phi(w[j], i)};
  return runs;
}
}  // namespace

int PathModel::eps_windowed(const Elem& p, int i, int extra) const {
  // eps_i(p) = max(eps_i(p') - phi_i(b_N), 0), iterated once per appended
  // ground factor; equivalently computed on the word with the left-most
  // factor's eps contribution discarded against the infinite tail.
  const int N = int(p.entries.size());
  auto w = word(p, extra);  // leftmost = p(N+extra-1)
  auto red = reduce_signature(word_runs(*crystal_, w, i));
  // The infinite tail absorbs the surviving minuses of the left-most ground
  // factor (each further tail factor's pluses equal the previous one's
  // eps, so inner ground minuses are already cancelled inside the window):
  // eps_i(word) = eps_i(p) + eps_i(b_{N+extra-1}).
  int absorbed = crystal_->eps(ground_.at(N + extra - 1), i);
  int v = red.eps - absorbed;
  return v < 0 ? 0 : v;
}

int PathModel::phi_windowed(const Elem& p, int i, int extra) const {
  auto w = word(p, extra);
  auto red = reduce_signature(word_runs(*crystal_, w, i));
  return red.phi;
}

int PathModel::eps(const Elem& p, int i) const { return eps_windowed(p, i, 1); }
int PathModel::phi(const Elem& p, int i) const { return phi_windowed(p, i, 1); }

std::optional<PathModel::Elem> PathModel::f_windowed(const Elem& p, int i, int extra) const {
  if (phi_windowed(p, i, extra) == 0) return std::nullopt;
  auto w = word(p, extra);
  auto red = reduce_signature(word_runs(*crystal_, w, i));
  assert(red.f_factor >= 0);
  int pos = int(w.size()) - 1 - red.f_factor;  // path index of the acted factor
  auto img = crystal_->f(w[red.f_factor], i);
  assert(img);
  std::vector<PerfectElem> entries = p.entries;
  if (pos >= int(entries.size())) {
    for (int k = int(entries.size()); k <= pos; ++k) entries.push_back(ground_.at(k));
  }
  entries[pos] = *img;
  return normalized(std::move(entries));
}

std::optional<PathModel::Elem> PathModel::e_windowed(const Elem& p, int i, int extra) const {
  if (eps_windowed(p, i, extra) == 0) return std::nullopt;
  auto w = word(p, extra);
  auto red = reduce_signature(word_runs(*crystal_, w, i));
  assert(red.e_factor >= 0);
  int pos = int(w.size()) - 1 - red.e_factor;
  auto img = crystal_->e(w[red.e_factor], i);
  assert(img);
  std::vector<PerfectElem> entries = p.entries;
  if (pos >= int(entries.size())) {
    for (int k = int(entries.size()); k <= pos; ++k) entries.push_back(ground_.at(k));
  }
  entries[pos] = *img;
  return normalized(std::move(entries));
}

std::optional<PathModel::Elem> PathModel::f(const Elem& p, int i) const {
  return f_windowed(p, i, 1);
}
std::optional<PathModel::Elem> PathModel::e(const Elem& p, int i) const {
  return e_windowed(p, i, 1);
}

std::vector<std::int64_t> PathModel::classical_wt(const Elem& p) const {
  const int N = int(p.entries.size());
  AffineWeight lam = fundamental_weight(type_, ground_.weight_at(N));
  auto v = pairing_vector(type_, lam);
  for (int k = 0; k < N; ++k) {
    auto w = crystal_->classical_wt(p.entries[k]);
    for (int i = 0; i < type_.n_indices(); ++i) v[i] += w[i];
  }
  return v;
}

std::string PathModel::key(const Elem& p) const {
  std::ostringstream os;
  os << "p";
  for (int k = int(p.entries.size()) - 1; k >= 0; --k) os << "." << elem_to_string(p.entries[k]);
  return os.str();
}

std::string PathModel::render(const Elem& p, int min_width) const {
  int width = std::max<int>(min_width, int(p.entries.size()));
  std::ostringstream os;
  os << "(...";
  for (int k = width - 1; k >= 0; --k) {
    os << " "
       << elem_to_string(k < int(p.entries.size()) ? p.entries[k] : ground_.at(k));
  }
  os << ")";
  return os.str();
}

}  // namespace wallcrys
