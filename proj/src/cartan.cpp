#include "wallcrys/cartan.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace wallcrys {

bool rank_in_range(Family f, int rank) {
  switch (f) {
    case Family::A1: return rank >= 1;
    case Family::A2odd: return rank >= 3;
    case Family::D1: return rank >= 4;
    case Family::A2even: return rank >= 2;
    case Family::D2: return rank >= 2;
    case Family::B1: return rank >= 3;
  }
  return false;
}

AffineType make_type(Family f, int rank) {
  if (!rank_in_range(f, rank)) throw TypeError("rank out of range for family");
  return AffineType{f, rank};
}

AffineType parse_type(const std::string& s) {
  // <letter><digits>~<twist>
  if (s.size() < 4) throw TypeError("malformed type string: " + s);
  char fam = s[0];
  auto tilde = s.find('~');
  if (tilde == std::string::npos || tilde < 2 || tilde + 2 != s.size())
    throw TypeError("malformed type string: " + s);
  int printed = 0;
  for (size_t i = 1; i < tilde; ++i) {
    if (!isdigit(static_cast<unsigned char>(s[i]))) throw TypeError("malformed rank in: " + s);
    printed = printed * 10 + (s[i] - '0');
  }
  char twist = s[tilde + 1];
  if (fam == 'A' && twist == '1') return make_type(Family::A1, printed);
  if (fam == 'A' && twist == '2') {
    if (printed % 2 == 1) return make_type(Family::A2odd, (printed + 1) / 2);
    return make_type(Family::A2even, printed / 2);
  }
  if (fam == 'D' && twist == '1') return make_type(Family::D1, printed);
  if (fam == 'D' && twist == '2') return make_type(Family::D2, printed - 1);
  if (fam == 'B' && twist == '1') return make_type(Family::B1, printed);
  throw TypeError("unknown family/twist in: " + s);
}

std::string type_to_string(const AffineType& t) {
  std::ostringstream os;
  switch (t.family) {
    case Family::A1: os << 'A' << t.rank << "~1"; break;
    case Family::A2odd: os << 'A' << (2 * t.rank - 1) << "~2"; break;
    case Family::D1: os << 'D' << t.rank << "~1"; break;
    case Family::A2even: os << 'A' << (2 * t.rank) << "~2"; break;
    case Family::D2: os << 'D' << (t.rank + 1) << "~2"; break;
    case Family::B1: os << 'B' << t.rank << "~1"; break;
  }
  return os.str();
}

namespace {

CartanData build_cartan(const AffineType& t) {
  const int n = t.rank;
  const int m = n + 1;
  CartanData d;
  d.a.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) d.a[i][i] = 2;
  auto bond = [&](int i, int j, int aij, int aji) {
    d.a[i][j] = aij;
    d.a[j][i] = aji;
  };
  switch (t.family) {
    case Family::A1: {
      if (n == 1) {
        bond(0, 1, -2, -2);
      } else {
        for (int i = 0; i < m; ++i) bond(i, (i + 1) % m, -1, -1);
      }
      d.delta.assign(m, 1);
      d.central.assign(m, 1);
      for (int i = 0; i < m; ++i) d.level1_weights.push_back(i);
      break;
    }
    case Family::A2odd: {
      // 0 and 1 both attach to 2; chain 2-...-n with the double bond at the end.
      bond(0, 2, -1, -1);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -2, -1);
      d.delta.assign(m, 2);
      d.delta[0] = d.delta[1] = d.delta[n] = 1;
      d.central.assign(m, 2);
      d.central[0] = d.central[1] = 1;
      d.level1_weights = {0, 1};
      break;
    }
    case Family::D1: {
      bond(0, 2, -1, -1);
      for (int i = 1; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n - 2, -1, -1);
      bond(n, n - 2, -1, -1);
      d.delta.assign(m, 2);
      d.delta[0] = d.delta[1] = d.delta[n - 1] = d.delta[n] = 1;
      d.central = d.delta;
      d.level1_weights = {0, 1, n - 1, n};
      break;
    }
    case Family::A2even: {
      bond(0, 1, -2, -1);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -2, -1);
      d.delta.assign(m, 2);
      d.delta[n] = 1;
      d.central.assign(m, 2);
      d.central[0] = 1;
      d.level1_weights = {0};
      break;
    }
    case Family::D2: {
      bond(0, 1, -2, -1);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -1, -2);
      d.delta.assign(m, 1);
      d.central.assign(m, 2);
      d.central[0] = d.central[n] = 1;
      d.level1_weights = {0, n};
      break;
    }
    case Family::B1: {
      bond(0, 2, -1, -1);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -1, -2);
      d.delta.assign(m, 2);
      d.delta[0] = d.delta[1] = 1;
      d.central.assign(m, 2);
      d.central[0] = d.central[1] = d.central[n] = 1;
      d.level1_weights = {0, 1, n};
      break;
    }
  }
  return d;
}

}  // namespace

const CartanData& cartan_data(const AffineType& t) {
  static std::map<std::pair<int, int>, CartanData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(static_cast<int>(t.family), t.rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (!rank_in_range(t.family, t.rank)) throw TypeError("rank out of range");
    it = cache.emplace(key, build_cartan(t)).first;
  }
  return it->second;
}

AffineWeight fundamental_weight(const AffineType& t, int i) {
  AffineWeight w;
  w.base = i;
  w.content.assign(t.n_indices(), 0);
  return w;
}

std::int64_t pair_coroot(const AffineType& t, const AffineWeight& w, int i) {
  const CartanData& cd = cartan_data(t);
  std::int64_t v = (w.base == i) ? 1 : 0;
  for (int j = 0; j < t.n_indices(); ++j) v -= std::int64_t(cd.a[i][j]) * w.content[j];
  return v;
}

std::int64_t level(const AffineType& t, const AffineWeight& w) {
  const CartanData& cd = cartan_data(t);
  std::int64_t v = 0;
  for (int i = 0; i < t.n_indices(); ++i) v += std::int64_t(cd.central[i]) * pair_coroot(t, w, i);
  return v;
}

AffineWeight subtract_root(const AffineWeight& w, int i) {
  AffineWeight r = w;
  r.content[i] += 1;
  return r;
}

std::vector<std::int64_t> pairing_vector(const AffineType& t, const AffineWeight& w) {
  std::vector<std::int64_t> v(t.n_indices());
  for (int i = 0; i < t.n_indices(); ++i) v[i] = pair_coroot(t, w, i);
  return v;
}

int parse_level1_lambda(const AffineType& t, const std::string& s) {
  if (s.size() < 2 || s[0] != 'L') throw TypeError("malformed weight selector: " + s);
  int idx = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(s[i]))) throw TypeError("malformed weight selector: " + s);
    idx = idx * 10 + (s[i] - '0');
  }
  for (int j : cartan_data(t).level1_weights)
    if (j == idx) return idx;
  throw TypeError("weight " + s + " is not level 1 for " + type_to_string(t));
}

}  // namespace wallcrys
