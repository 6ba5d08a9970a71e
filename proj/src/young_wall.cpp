#include "wallcrys/young_wall.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace wallcrys {

namespace {

PatternCell cube(int c) { return {PatternCell::Kind::Cube, c, c}; }
PatternCell half_pair(int c) { return {PatternCell::Kind::HalfPair, c, c}; }
PatternCell split(int a, int b) { return {PatternCell::Kind::Split, a, b}; }

int blocks_of(const std::vector<PatternCell>& cells) {
  int n = 0;
  for (const auto& c : cells) n += c.slots();
  return n;
}

}  // namespace

WallModel::WallModel(const AffineType& t, int lambda) : type_(t), lambda_(lambda) {
  const int n = t.rank;
  bool ok_lambda = false;
  for (int j : cartan_data(t).level1_weights) ok_lambda |= (j == lambda);
  if (!ok_lambda) throw TypeError("lambda is not a level-1 weight for this type");

  auto make_shape = [&](std::vector<PatternCell> cells, GroundKind g, int gc) {
    ColumnShape s;
    s.cells = std::move(cells);
    s.ground = g;
    s.ground_color = gc;
    s.blocks_per_period = blocks_of(s.cells);
    return s;
  };

  switch (t.family) {
    case Family::A1: {
      class_count_ = n + 1;
      for (int r = 0; r < class_count_; ++r) {
        std::vector<PatternCell> cells;
        int base = ((lambda - r) % (n + 1) + (n + 1)) % (n + 1);
        for (int j = 0; j <= n; ++j) cells.push_back(cube((base + j) % (n + 1)));
        shapes_.push_back(make_shape(std::move(cells), GroundKind::Bare, -1));
      }
      break;
    }
    case Family::A2odd: {
      class_count_ = 2;
      for (int r = 0; r < 2; ++r) {
        int g = (lambda + r + 1) % 2;
        std::vector<PatternCell> cells;
        cells.push_back(split(0, 1));
        for (int j = 2; j <= n; ++j) cells.push_back(cube(j));
        for (int j = n - 1; j >= 2; --j) cells.push_back(cube(j));
        shapes_.push_back(make_shape(std::move(cells), GroundKind::SplitHalf, g));
      }
      break;
    }
    case Family::D1: {
      class_count_ = 2;
      for (int r = 0; r < 2; ++r) {
        std::vector<PatternCell> cells;
        if (lambda <= 1) {
          int g = (lambda + r + 1) % 2;
          cells.push_back(split(0, 1));
          for (int j = 2; j <= n - 2; ++j) cells.push_back(cube(j));
          cells.push_back(split(n - 1, n));
          for (int j = n - 2; j >= 2; --j) cells.push_back(cube(j));
          shapes_.push_back(make_shape(std::move(cells), GroundKind::SplitHalf, g));
        } else {
          int g = (lambda == n - 1) ? (r == 0 ? n : n - 1) : (r == 0 ? n - 1 : n);
          cells.push_back(split(n - 1, n));
          for (int j = n - 2; j >= 2; --j) cells.push_back(cube(j));
          cells.push_back(split(0, 1));
          for (int j = 2; j <= n - 2; ++j) cells.push_back(cube(j));
          shapes_.push_back(make_shape(std::move(cells), GroundKind::SplitHalf, g));
        }
      }
      break;
    }
    case Family::A2even: {
      class_count_ = 1;
      std::vector<PatternCell> cells;
      cells.push_back(half_pair(0));
      for (int j = 1; j <= n; ++j) cells.push_back(cube(j));
      for (int j = n - 1; j >= 1; --j) cells.push_back(cube(j));
      shapes_.push_back(make_shape(std::move(cells), GroundKind::LowerHalf, 0));
      break;
    }
    case Family::D2: {
      class_count_ = 1;
      std::vector<PatternCell> cells;
      if (lambda == 0) {
        cells.push_back(half_pair(0));
        for (int j = 1; j <= n - 1; ++j) cells.push_back(cube(j));
        cells.push_back(half_pair(n));
        for (int j = n - 1; j >= 1; --j) cells.push_back(cube(j));
        shapes_.push_back(make_shape(std::move(cells), GroundKind::LowerHalf, 0));
      } else {
        cells.push_back(half_pair(n));
        for (int j = n - 1; j >= 1; --j) cells.push_back(cube(j));
        cells.push_back(half_pair(0));
        for (int j = 1; j <= n - 1; ++j) cells.push_back(cube(j));
        shapes_.push_back(make_shape(std::move(cells), GroundKind::LowerHalf, n));
      }
      break;
    }
    case Family::B1: {
      if (lambda <= 1) {
        class_count_ = 2;
        for (int r = 0; r < 2; ++r) {
          int g = (lambda + r + 1) % 2;
          std::vector<PatternCell> cells;
          cells.push_back(split(0, 1));
          for (int j = 2; j <= n - 1; ++j) cells.push_back(cube(j));
          cells.push_back(half_pair(n));
          for (int j = n - 1; j >= 2; --j) cells.push_back(cube(j));
          shapes_.push_back(make_shape(std::move(cells), GroundKind::SplitHalf, g));
        }
      } else {
        class_count_ = 1;
        std::vector<PatternCell> cells;
        cells.push_back(half_pair(n));
        for (int j = n - 1; j >= 2; --j) cells.push_back(cube(j));
        cells.push_back(split(0, 1));
        for (int j = 2; j <= n - 1; ++j) cells.push_back(cube(j));
        shapes_.push_back(make_shape(std::move(cells), GroundKind::LowerHalf, n));
      }
      break;
    }
  }
  period_blocks_ = shapes_[0].blocks_per_period;
}

const ColumnShape& WallModel::shape(int k) const { return shapes_[col_class(k)]; }

ColState WallModel::col_state(const Wall& w, int k) const {
  if (k < int(w.cols.size())) return w.cols[k];
  return ColState{};
}

TopInfo WallModel::top_info(int k, const ColState& s) const {
  const ColumnShape& sh = shape(k);
  TopInfo ti;
  const int off = sh.ground == GroundKind::Bare ? 0 : 1;
  const int total = int(s.count) + off;
  if (total == 0) {
    ti.top = TopInfo::Top::Empty;
    return ti;
  }
  int consumed = 0, m = 0, h2 = 0;
  while (consumed + sh.cell(m).slots() <= total) {
    consumed += sh.cell(m).slots();
    h2 += 2;
    ++m;
  }
  const int rem = total - consumed;
  if (rem == 0) {
    const PatternCell& c = sh.cell(m - 1);
    ti.cell_index = m - 1;
    ti.h2 = ti.s2 = h2;
    ti.color = c.color_a;
    ti.other = c.color_b;
    switch (c.kind) {
      case PatternCell::Kind::Cube: ti.top = TopInfo::Top::Cube; break;
      case PatternCell::Kind::HalfPair: ti.top = TopInfo::Top::FullPair; break;
      case PatternCell::Kind::Split: ti.top = TopInfo::Top::FullSplit; break;
    }
    return ti;
  }
  const PatternCell& c = sh.cell(m);
  ti.cell_index = m;
  if (c.kind == PatternCell::Kind::Split) {
    ti.h2 = h2 + 2;
    ti.s2 = h2;
    if (s.count == 0) {
      ti.top = TopInfo::Top::GroundSplit;
      ti.color = sh.ground_color;
      ti.other = c.color_a == sh.ground_color ? c.color_b : c.color_a;
    } else {
      ti.top = TopInfo::Top::LoneSplit;
      ti.color = s.tag;
      ti.other = c.color_a == s.tag ? c.color_b : c.color_a;
    }
  } else {  // HalfPair lower half: full thickness, solid
    ti.h2 = ti.s2 = h2 + 1;
    ti.color = c.color_a;
    ti.other = c.color_a;
    ti.top = (s.count == 0) ? TopInfo::Top::GroundLower : TopInfo::Top::LowerHalf;
  }
  return ti;
}

std::vector<int> WallModel::addable_colors(int k, const ColState& s) const {
  const ColumnShape& sh = shape(k);
  TopInfo ti = top_info(k, s);
  switch (ti.top) {
    case TopInfo::Top::Empty: return {sh.cell(0).color_a};
    case TopInfo::Top::GroundSplit:
    case TopInfo::Top::LoneSplit: return {ti.other};
    case TopInfo::Top::GroundLower:
    case TopInfo::Top::LowerHalf: return {ti.color};
    case TopInfo::Top::FullSplit:
    case TopInfo::Top::FullPair:
    case TopInfo::Top::Cube: {
      const PatternCell& next = sh.cell(ti.cell_index + 1);
      if (next.kind == PatternCell::Kind::Split) {
        if (next.color_a == next.color_b) return {next.color_a};
        return {next.color_a, next.color_b};
      }
      return {next.color_a};
    }
  }
  return {};
}

std::vector<int> WallModel::removable_colors(int k, const ColState& s) const {
  const ColumnShape& sh = shape(k);
  TopInfo ti = top_info(k, s);
  switch (ti.top) {
    case TopInfo::Top::Empty:
    case TopInfo::Top::GroundSplit:
    case TopInfo::Top::GroundLower: return {};
    case TopInfo::Top::LoneSplit: return {ti.color};
    case TopInfo::Top::LowerHalf:
    case TopInfo::Top::FullPair:
    case TopInfo::Top::Cube: return {ti.color};
    case TopInfo::Top::FullSplit:
      if (ti.cell_index == 0 && sh.ground == GroundKind::SplitHalf) {
        // the ground block is part of the frame; only its partner comes off
        int g = sh.ground_color;
        return {sh.cell(0).color_a == g ? sh.cell(0).color_b : sh.cell(0).color_a};
      }
      return {sh.cell(ti.cell_index % sh.cells.size()).color_a,
              sh.cell(ti.cell_index % sh.cells.size()).color_b};
  }
  return {};
}

ColState WallModel::added(int k, const ColState& s, int color) const {
  TopInfo ti = top_info(k, s);
  ColState ns{s.count + 1, -1};
  bool next_is_lone_split = false;
  switch (ti.top) {
    case TopInfo::Top::Empty:
    case TopInfo::Top::FullSplit:
    case TopInfo::Top::FullPair:
    case TopInfo::Top::Cube: {
      const PatternCell& next = shape(k).cell(ti.cell_index + (ti.top == TopInfo::Top::Empty ? 0 : 1));
      next_is_lone_split = next.kind == PatternCell::Kind::Split;
      break;
    }
    default: break;  // completing a partial cell
  }
  if (next_is_lone_split) ns.tag = std::int8_t(color);
  return ns;
}

ColState WallModel::removed(int k, const ColState& s, int color) const {
  TopInfo ti = top_info(k, s);
  ColState ns{s.count - 1, -1};
  if (ti.top == TopInfo::Top::FullSplit &&
      !(ti.cell_index == 0 && shape(k).ground == GroundKind::SplitHalf)) {
    const PatternCell& c = shape(k).cell(ti.cell_index);
    ns.tag = std::int8_t(c.color_a == color ? c.color_b : c.color_a);
  }
  return ns;
}

bool WallModel::covered(int k_left, const ColState& left, const ColState& right) const {
  TopInfo L = top_info(k_left, left);
  TopInfo R = top_info(k_left - 1, right);
  if (L.s2 > R.s2) return false;
  bool l_lone = L.top == TopInfo::Top::LoneSplit || L.top == TopInfo::Top::GroundSplit;
  if (!l_lone) return true;
  if (R.s2 >= L.s2 + 2) return true;
  bool r_lone = R.top == TopInfo::Top::LoneSplit || R.top == TopInfo::Top::GroundSplit;
  // Same-level lone half-blocks: the alternating front/back layout covers
  // the left block exactly when the colors differ.
  return r_lone && R.s2 == L.s2 && R.color != L.color;
}

bool WallModel::validate(const Wall& w) const {
  for (int k = 0; k < int(w.cols.size()); ++k) {
    const ColState& s = w.cols[k];
    // tag sanity
    TopInfo ti = top_info(k, s);
    if (ti.top == TopInfo::Top::LoneSplit) {
      const PatternCell& c = shape(k).cell(ti.cell_index);
      if (s.tag != c.color_a && s.tag != c.color_b) return false;
    } else if (s.tag != -1) {
      return false;
    }
  }
  for (int k = 1; k <= int(w.cols.size()); ++k)
    if (!covered(k, col_state(w, k), col_state(w, k - 1))) return false;
  return true;
}

bool WallModel::is_proper(const Wall& w) const {
  if (type_.family == Family::A1) return true;
  std::vector<int> full_heights;
  for (int k = 0; k < int(w.cols.size()); ++k) {
    const ColState& s = w.cols[k];
    if (s.count == 0) continue;
    TopInfo ti = top_info(k, s);
    bool complete = ti.top == TopInfo::Top::FullSplit || ti.top == TopInfo::Top::FullPair ||
                    ti.top == TopInfo::Top::Cube;
    if (complete && ti.h2 % 2 == 0) full_heights.push_back(ti.h2);
  }
  std::sort(full_heights.begin(), full_heights.end());
  return std::adjacent_find(full_heights.begin(), full_heights.end()) == full_heights.end();
}

bool WallModel::proper_with(const Wall& w, int k, const ColState& replacement) const {
  Wall cand = w;
  if (k >= int(cand.cols.size())) cand.cols.resize(k + 1);
  cand.cols[k] = replacement;
  return is_proper(cand);
}

std::optional<Wall> WallModel::try_add(const Wall& w, int k, int color) const {
  ColState s = col_state(w, k);
  auto colors = addable_colors(k, s);
  if (std::find(colors.begin(), colors.end(), color) == colors.end()) return std::nullopt;
  ColState ns = added(k, s, color);
  if (k >= 1 && !covered(k, ns, col_state(w, k - 1))) return std::nullopt;
  if (!covered(k + 1, col_state(w, k + 1), ns)) return std::nullopt;
  if (!proper_with(w, k, ns)) return std::nullopt;
  Wall out = w;
  if (k >= int(out.cols.size())) out.cols.resize(k + 1);
  out.cols[k] = ns;
  return normalized(std::move(out));
}

std::optional<Wall> WallModel::try_remove(const Wall& w, int k, int color) const {
  ColState s = col_state(w, k);
  auto colors = removable_colors(k, s);
  if (std::find(colors.begin(), colors.end(), color) == colors.end()) return std::nullopt;
  ColState ns = removed(k, s, color);
  if (k >= 1 && !covered(k, ns, col_state(w, k - 1))) return std::nullopt;
  if (!covered(k + 1, col_state(w, k + 1), ns)) return std::nullopt;
  if (!proper_with(w, k, ns)) return std::nullopt;
  Wall out = w;
  if (k >= int(out.cols.size())) out.cols.resize(k + 1);
  out.cols[k] = ns;
  return normalized(std::move(out));
}

Wall WallModel::normalized(Wall w) const {
  while (!w.cols.empty() && w.cols.back() == ColState{}) w.cols.pop_back();
  return w;
}

WallModel::ColSig WallModel::column_sig(const Elem& w, int k, int i) const {
  ColSig sig;
  ColState s = col_state(w, k);

  bool r1 = false, r2 = false, a1 = false, a2 = false;
  if (auto w1 = try_remove(w, k, i)) {
    r1 = true;
    sig.removed_state = col_state(*w1, k);
    if (try_remove(*w1, k, i)) r2 = true;
  }
  if (auto w1 = try_add(w, k, i)) {
    a1 = true;
    sig.added_state = col_state(*w1, k);
    if (try_add(*w1, k, i)) a2 = true;
  }
  (void)s;
  if (r2) sig.run = {2, 0};
  else if (r1 && a1) sig.run = {1, 1};
  else if (r1) sig.run = {1, 0};
  else if (a2) sig.run = {0, 2};
  else if (a1) sig.run = {0, 1};
  else sig.run = {0, 0};
  return sig;
}

std::string WallModel::column_signature(const Elem& w, int k, int i) const {
  auto sig = column_sig(w, k, i);
  std::string out(sig.run.minus, '-');
  out.append(sig.run.plus, '+');
  return out;
}

std::optional<WallModel::Elem> WallModel::f(const Elem& w, int i) const {
  const int len = int(w.cols.size());
  std::vector<SignatureRun> runs(len + 1);
  for (int k = len; k >= 0; --k) runs[len - k] = column_sig(w, k, i).run;
  auto red = reduce_signature(runs);
  if (red.phi == 0) return std::nullopt;
  int k = len - red.f_factor;
  auto out = try_add(w, k, i);
  assert(out && "signature promised an admissible slot");
  return out;
}

std::optional<WallModel::Elem> WallModel::e(const Elem& w, int i) const {
  const int len = int(w.cols.size());
  std::vector<SignatureRun> runs(len + 1);
  for (int k = len; k >= 0; --k) runs[len - k] = column_sig(w, k, i).run;
  auto red = reduce_signature(runs);
  if (red.eps == 0) return std::nullopt;
  int k = len - red.e_factor;
  auto out = try_remove(w, k, i);
  assert(out && "signature promised a removable block");
  return out;
}

int WallModel::eps(const Elem& w, int i) const {
  const int len = int(w.cols.size());
  std::vector<SignatureRun> runs(len + 1);
  for (int k = len; k >= 0; --k) runs[len - k] = column_sig(w, k, i).run;
  return reduce_signature(runs).eps;
}

int WallModel::phi(const Elem& w, int i) const {
  const int len = int(w.cols.size());
  std::vector<SignatureRun> runs(len + 1);
  for (int k = len; k >= 0; --k) runs[len - k] = column_sig(w, k, i).run;
  return reduce_signature(runs).phi;
}

std::vector<std::int64_t> WallModel::block_content(const Elem& w) const {
  std::vector<std::int64_t> content(type_.n_indices(), 0);
  for (int k = 0; k < int(w.cols.size()); ++k) {
    const ColumnShape& sh = shape(k);
    const ColState& s = w.cols[k];
    const int off = sh.ground == GroundKind::Bare ? 0 : 1;
    const int total = int(s.count) + off;
    if (total == 0) continue;
    int consumed = 0, m = 0;
    while (consumed + sh.cell(m).slots() <= total) {
      const PatternCell& c = sh.cell(m);
      switch (c.kind) {
        case PatternCell::Kind::Cube: content[c.color_a] += 1; break;
        case PatternCell::Kind::HalfPair: content[c.color_a] += 2; break;
        case PatternCell::Kind::Split:
          content[c.color_a] += 1;
          content[c.color_b] += 1;
          break;
      }
      consumed += c.slots();
      ++m;
    }
    if (total > consumed) {  // partial top cell
      const PatternCell& c = sh.cell(m);
      if (c.kind == PatternCell::Kind::Split) {
        content[s.count == 0 ? sh.ground_color : s.tag] += 1;
      } else {
        content[c.color_a] += 1;
      }
    }
    if (sh.ground != GroundKind::Bare) content[sh.ground_color] -= 1;
  }
  return content;
}

AffineWeight WallModel::wall_weight(const Elem& w) const {
  AffineWeight wt = fundamental_weight(type_, lambda_);
  wt.content = block_content(w);
  return wt;
}

std::vector<std::int64_t> WallModel::classical_wt(const Elem& w) const {
  return pairing_vector(type_, wall_weight(w));
}

bool WallModel::has_removable_delta(const Elem& w, int k) const {
  ColState s = col_state(w, k);
  if (int(s.count) < period_blocks_) return false;
  const std::uint32_t target = s.count - period_blocks_;
  // removed multiset must be one delta-column: a_i blocks of color i
  std::vector<std::int64_t> period_colors(type_.n_indices(), 0);
  for (const auto& c : shape(k).cells) {
    period_colors[c.color_a] += 1;
    if (c.slots() == 2) period_colors[c.color_b] += 1;  // HalfPair has color_b == color_a
  }
  Wall solo_now;
  solo_now.cols = {s};
  // evaluate column content in isolation (content is per-column additive)
  auto content_of = [&](const ColState& cs) {
    Wall tmp;
    tmp.cols.assign(k + 1, ColState{});
    tmp.cols[k] = cs;
    return block_content(tmp);
  };
  auto have = content_of(s);

  // candidate result states at the target count
  std::vector<ColState> candidates;
  {
    ColState base{target, -1};
    TopInfo ti = top_info(k, base);
    if (target > 0 && ti.top == TopInfo::Top::LoneSplit) {
      const PatternCell& c = shape(k).cell(ti.cell_index);
      candidates.push_back(ColState{target, std::int8_t(c.color_a)});
      if (c.color_b != c.color_a) candidates.push_back(ColState{target, std::int8_t(c.color_b)});
    } else {
      candidates.push_back(base);
    }
  }
  for (const auto& cs : candidates) {
    auto rest = content_of(cs);
    bool is_delta = true;
    for (int i = 0; i < type_.n_indices(); ++i)
      if (have[i] - rest[i] != period_colors[i]) is_delta = false;
    if (!is_delta) continue;
    Wall cand = w;
    if (k >= int(cand.cols.size())) cand.cols.resize(k + 1);
    cand.cols[k] = cs;
    cand = normalized(std::move(cand));
    if (validate(cand) && is_proper(cand)) return true;
  }
  return false;
}

bool WallModel::is_reduced(const Elem& w) const {
  for (int k = 0; k < int(w.cols.size()); ++k)
    if (has_removable_delta(w, k)) return false;
  return true;
}

std::string WallModel::key(const Elem& w) const {
  std::ostringstream os;
  os << "w";
  for (const auto& c : w.cols) {
    os << "|" << c.count;
    if (c.tag >= 0) os << "t" << int(c.tag);
  }
  return os.str();
}

std::string WallModel::render_ascii(const Elem& w) const {
  const int len = int(w.cols.size());
  // token per (column, cell level), cells aligned across columns
  int max_cells = 0;
  std::vector<TopInfo> tops(len);
  for (int k = 0; k < len; ++k) {
    tops[k] = top_info(k, w.cols[k]);
    max_cells = std::max(max_cells, tops[k].cell_index + 1);
  }
  int cw = 1;
  for (int i = 0; i < type_.n_indices(); ++i)
    cw = std::max(cw, int(std::to_string(i).size()));
  auto pad = [&](const std::string& s) {
    std::string out = s;
    while (int(out.size()) < cw) out += ' ';
    return out;
  };
  auto token = [&](int k, int m) -> std::string {
    const ColumnShape& sh = shape(k);
    const TopInfo& ti = tops[k];
    if (m > ti.cell_index) return std::string(2 * cw + 3, ' ');
    const PatternCell& c = sh.cell(m);
    std::string a = pad(std::to_string(c.color_a));
    std::string b = pad(std::to_string(c.color_b));
    bool partial = m == ti.cell_index &&
                   (ti.top == TopInfo::Top::LoneSplit || ti.top == TopInfo::Top::GroundSplit ||
                    ti.top == TopInfo::Top::LowerHalf || ti.top == TopInfo::Top::GroundLower);
    std::string dot = pad(".");
    switch (c.kind) {
      case PatternCell::Kind::Cube: return "[" + pad("") + a + "]";
      case PatternCell::Kind::HalfPair:
        return partial ? "[" + a + ":" + dot + "]" : "[" + a + ":" + b + "]";
      case PatternCell::Kind::Split: {
        if (!partial) return "[" + a + "\\" + b + "]";
        int present = (m == 0 && w.cols[k].count == 0) ? sh.ground_color : w.cols[k].tag;
        if (present == c.color_a) return "[" + a + "\\" + dot + "]";
        return "[" + dot + "\\" + b + "]";
      }
    }
    return "";
  };
  std::ostringstream os;
  for (int m = max_cells - 1; m >= 0; --m) {
    for (int k = len - 1; k >= 0; --k) {
      os << token(k, m);
      if (k > 0) os << ' ';
    }
    os << "\n";
  }
  for (int k = len - 1; k >= 0; --k) {
    os << std::string(2 * cw + 3, '=');
    if (k > 0) os << '=';
  }
  if (len == 0) os << "(ground wall)";
  os << "\n# counts=";
  for (int k = 0; k < len; ++k) {
    if (k) os << ",";
    os << w.cols[k].count;
    if (w.cols[k].tag >= 0) os << ":" << int(w.cols[k].tag);
  }
  if (len == 0) os << "-";
  os << "\n";
  return os.str();
}

std::optional<Wall> WallModel::parse_counts(const std::string& s) const {
  Wall w;
  if (s == "-" || s.empty()) return normalized(std::move(w));
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    ColState c;
    auto colon = item.find(':');
    try {
      if (colon == std::string::npos) {
        c.count = std::stoul(item);
      } else {
        c.count = std::stoul(item.substr(0, colon));
        c.tag = std::int8_t(std::stoi(item.substr(colon + 1)));
      }
    } catch (...) {
      return std::nullopt;
    }
    w.cols.push_back(c);
  }
  w = normalized(std::move(w));
  if (!validate(w)) return std::nullopt;
  return w;
}

std::vector<Wall> WallModel::enumerate_reduced(int max_blocks) const {
  std::vector<Wall> out;
  // per-column candidate states with a given block budget
  auto states_up_to = [&](int k, int max_count) {
    std::vector<ColState> states;
    for (int c = 0; c <= max_count; ++c) {
      ColState base{std::uint32_t(c), -1};
      TopInfo ti = top_info(k, base);
      if (c > 0 && ti.top == TopInfo::Top::LoneSplit) {
        const PatternCell& cell = shape(k).cell(ti.cell_index);
        states.push_back(ColState{std::uint32_t(c), std::int8_t(cell.color_a)});
        if (cell.color_b != cell.color_a)
          states.push_back(ColState{std::uint32_t(c), std::int8_t(cell.color_b)});
      } else {
        states.push_back(base);
      }
    }
    return states;
  };
  Wall cur;
  std::function<void(int, int)> rec = [&](int k, int budget) {
    // close the wall here (all further columns ground)
    {
      Wall cand = normalized(cur);
      if (int(cand.cols.size()) == k && validate(cand) && is_proper(cand) && is_reduced(cand))
        out.push_back(cand);
    }
    int cap = budget;
    if (k > 0) cap = std::min<int>(cap, int(cur.cols[k - 1].count));
    for (const auto& s : states_up_to(k, cap)) {
      if (s.count == 0) continue;
      if (k > 0 && !covered(k, s, cur.cols[k - 1])) continue;
      cur.cols.push_back(s);
      rec(k + 1, budget - int(s.count));
      cur.cols.pop_back();
    }
  };
  rec(0, max_blocks);
  std::sort(out.begin(), out.end(),
            [&](const Wall& a, const Wall& b) { return key(a) < key(b); });
  return out;
}

}  // namespace wallcrys
