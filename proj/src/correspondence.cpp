#include "wallcrys/correspondence.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

namespace wallcrys {

PerfectElem psi_column(const WallModel& wm, int k, const ColState& s) {
  const AffineType& t = wm.type();
  const int n = t.rank;
  const ColumnShape& sh = wm.shape(k);
  TopInfo ti = wm.top_info(k, s);

  if (t.family == Family::A1) {
    // the image is the box of the next slot's color
    int next_cell = ti.top == TopInfo::Top::Empty ? 0 : ti.cell_index + 1;
    return box(sh.cell(next_cell).color_a);
  }

  auto lone_image = [&](int x) -> PerfectElem {
    if (x == 0) return box(1);
    if (x == 1) return bar(1);
    if (x == n - 1) return box(n);  // D_n^(1) spin cells only
    return bar(n);                  // x == n
  };

  switch (ti.top) {
    case TopInfo::Top::Empty:
      break;  // unreachable outside type A
    case TopInfo::Top::GroundSplit:
    case TopInfo::Top::LoneSplit:
      return lone_image(ti.color);
    case TopInfo::Top::FullSplit: {
      const PatternCell& c = sh.cell(ti.cell_index);
      bool zero_one = (c.color_a == 0 || c.color_a == 1);
      return zero_one ? box(2) : bar(n - 1);
    }
    case TopInfo::Top::GroundLower:
    case TopInfo::Top::LowerHalf:
      return ti.color == 0 ? emptybox() : zerobox();
    case TopInfo::Top::FullPair:
      return ti.color == 0 ? box(1) : bar(n);
    case TopInfo::Top::Cube: {
      const int c = ti.color;
      const PatternCell& below = sh.cell(ti.cell_index - 1);
      switch (below.kind) {
        case PatternCell::Kind::Split: {
          bool zero_one = (below.color_a == 0 || below.color_a == 1);
          return zero_one ? box(c + 1) : bar(c);
        }
        case PatternCell::Kind::HalfPair:
          return below.color_a == 0 ? box(c + 1) : bar(c);
        case PatternCell::Kind::Cube:
          if (below.color_a == c - 1) return c == n ? bar(n) : box(c + 1);
          return bar(c);
      }
    }
  }
  assert(false && "unclassified column top");
  return emptybox();
}

std::optional<LambdaPath> psi(const WallModel& wm, const PathModel& pm, const Wall& w) {
  if (!wm.validate(w) || !wm.is_proper(w) || !wm.is_reduced(w)) return std::nullopt;
  std::vector<PerfectElem> entries(w.cols.size());
  for (int k = 0; k < int(w.cols.size()); ++k) entries[k] = psi_column(wm, k, w.cols[k]);
  while (!entries.empty() && entries.back() == pm.ground().at(entries.size() - 1))
    entries.pop_back();
  return LambdaPath{std::move(entries)};
}

PsiTable build_psi_table(const WallModel& wm) {
  PsiTable table;
  const int P = wm.blocks_per_delta();
  int classes = 1;
  // probe how many distinct column classes exist by key of shape content
  {
    std::set<std::string> seen;
    for (int k = 0;; ++k) {
      std::ostringstream os;
      for (const auto& c : wm.shape(k).cells)
        os << int(c.kind) << "." << c.color_a << "." << c.color_b << ";";
      os << wm.shape(k).ground_color;
      if (!seen.insert(os.str()).second) {
        classes = k;
        break;
      }
    }
  }
  for (int cls = 0; cls < classes; ++cls) {
    std::vector<PsiTable::Entry> entries;
    for (int c = 0; c <= P; ++c) {
      int residue = c == 0 ? 0 : 1 + (c - 1) % P;
      ColState base{std::uint32_t(c), -1};
      TopInfo ti = wm.top_info(cls, base);
      if (c > 0 && ti.top == TopInfo::Top::LoneSplit) {
        const PatternCell& cell = wm.shape(cls).cell(ti.cell_index);
        for (int tag : {cell.color_a, cell.color_b}) {
          ColState s{std::uint32_t(c), std::int8_t(tag)};
          entries.push_back({residue, tag, psi_column(wm, cls, s)});
        }
      } else {
        entries.push_back({residue, -1, psi_column(wm, cls, base)});
      }
    }
    table.per_class.push_back(std::move(entries));
  }
  return table;
}

std::string IsoReport::to_json() const {
  nlohmann::json j;
  j["type"] = type;
  j["lambda"] = lambda;
  j["depth"] = depth;
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["status"] = ok ? "pass" : (truncated ? "truncated" : "fail");
  if (!detail.empty()) j["detail"] = detail;
  if (!counterexample_word.empty()) j["counterexample_word"] = counterexample_word;
  return j.dump(2);
}

namespace {

IsoReport verify_impl(const AffineType& t, int lambda, int depth, std::size_t budget,
                      bool mutate) {
  IsoReport rep;
  rep.type = type_to_string(t);
  rep.lambda = lambda;
  rep.depth = depth;

  WallModel wm(t, lambda);
  PathModel pm(t, lambda);

  // optional table mutation for negative testing: swap the images of the
  // first two added-block states of column class 0
  PerfectElem mut_a = psi_column(wm, 0, ColState{1, wm.top_info(0, ColState{1, -1}).top ==
                                                        TopInfo::Top::LoneSplit
                                                    ? std::int8_t(wm.shape(0).cell(0).color_a)
                                                    : std::int8_t(-1)});
  PerfectElem mut_b = psi_column(wm, 0, ColState{2, -1});
  auto read = [&](const Wall& w) -> std::optional<LambdaPath> {
    if (!mutate) return psi(wm, pm, w);
    if (!wm.validate(w) || !wm.is_proper(w)) return std::nullopt;
    std::vector<PerfectElem> entries(w.cols.size());
    for (int k = 0; k < int(w.cols.size()); ++k) {
      PerfectElem v = psi_column(wm, k, w.cols[k]);
      if (v == mut_a) v = mut_b;
      else if (v == mut_b) v = mut_a;
      entries[k] = v;
    }
    while (!entries.empty() && entries.back() == pm.ground().at(entries.size() - 1))
      entries.pop_back();
    return LambdaPath{std::move(entries)};
  };

  CrystalGraph pg = generate_graph(pm, depth, budget);
  if (pg.truncated) {
    rep.truncated = true;
    rep.detail = "path graph truncated by node budget";
    return rep;
  }

  struct Item {
    Wall w;
    int depth;
    std::vector<int> word;
  };
  std::deque<Item> queue;
  std::map<std::string, int> wall_depth;
  std::map<std::string, std::string> path_to_wall;
  queue.push_back({wm.root(), 0, {}});
  wall_depth[wm.key(wm.root())] = 0;
  std::size_t nodes = 0, edges = 0;
  auto fail = [&](const Item& it, std::vector<int> word, const std::string& why) {
    rep.ok = false;
    rep.counterexample_word = std::move(word);
    rep.detail = why + " (wall " + wm.key(it.w) + ")";
    rep.nodes = nodes;
    rep.edges = edges;
    return rep;
  };
  while (!queue.empty()) {
    Item it = queue.front();
    queue.pop_front();
    ++nodes;
    if (nodes > budget) {
      rep.truncated = true;
      rep.detail = "wall graph truncated by node budget";
      return rep;
    }
    auto p = read(it.w);
    if (!p) return fail(it, it.word, "wall not in the domain of Psi");
    std::string pkey = pm.key(*p);
    auto pit = pg.index_of.find(pkey);
    if (pit == pg.index_of.end()) return fail(it, it.word, "Psi image " + pkey + " not a path node");
    const auto& pnode = pg.nodes[pit->second];
    if (pnode.depth != it.depth) return fail(it, it.word, "Psi image depth mismatch");
    auto ins = path_to_wall.emplace(pkey, wm.key(it.w));
    if (!ins.second && ins.first->second != wm.key(it.w))
      return fail(it, it.word, "Psi not injective: " + pkey);
    if (wm.classical_wt(it.w) != pm.classical_wt(*p))
      return fail(it, it.word, "classical weight mismatch at " + pkey);
    for (int i = 0; i < t.n_indices(); ++i) {
      if (wm.eps(it.w, i) != pm.eps(*p, i))
        return fail(it, it.word, "eps_" + std::to_string(i) + " mismatch at " + pkey);
      if (wm.phi(it.w, i) != pm.phi(*p, i))
        return fail(it, it.word, "phi_" + std::to_string(i) + " mismatch at " + pkey);
    }
    for (int i = 0; i < t.n_indices(); ++i) {
      // e-commutation is safe at any depth; f only below the horizon
      auto ew = wm.e(it.w, i);
      auto ep = pm.e(*p, i);
      if (ew.has_value() != ep.has_value()) {
        auto word = it.word;
        word.push_back(-(i + 1));
        return fail(it, word, "e_" + std::to_string(i) + " defined on one side only");
      }
      if (ew) {
        auto ewp = read(*ew);
        if (!ewp || !(pm.key(*ewp) == pm.key(*ep))) {
          auto word = it.word;
          word.push_back(-(i + 1));
          return fail(it, word, "Psi(e_i Y) != e_i Psi(Y)");
        }
      }
      if (it.depth >= depth) continue;
      auto fw = wm.f(it.w, i);
      auto fp = pm.f(*p, i);
      if (fw.has_value() != fp.has_value()) {
        auto word = it.word;
        word.push_back(i);
        return fail(it, word, "f_" + std::to_string(i) + " defined on one side only");
      }
      if (fw) {
        auto fwp = read(*fw);
        if (!fwp || !(pm.key(*fwp) == pm.key(*fp))) {
          auto word = it.word;
          word.push_back(i);
          return fail(it, word, "Psi(f_i Y) != f_i Psi(Y)");
        }
        ++edges;
        std::string wkey = wm.key(*fw);
        if (!wall_depth.count(wkey)) {
          wall_depth[wkey] = it.depth + 1;
          auto word = it.word;
          word.push_back(i);
          queue.push_back({*fw, it.depth + 1, std::move(word)});
        }
      }
    }
  }
  if (nodes != pg.nodes.size()) {
    rep.ok = false;
    rep.detail = "node counts differ: walls " + std::to_string(nodes) + ", paths " +
                 std::to_string(pg.nodes.size());
    rep.nodes = nodes;
    rep.edges = edges;
    return rep;
  }
  rep.ok = true;
  rep.nodes = nodes;
  rep.edges = edges;
  return rep;
}

}  // namespace

IsoReport verify_isomorphism(const AffineType& t, int lambda, int depth, std::size_t budget) {
  return verify_impl(t, lambda, depth, budget, false);
}

IsoReport verify_isomorphism_mutated(const AffineType& t, int lambda, int depth) {
  return verify_impl(t, lambda, depth, 1000000, true);
}

// ---------------------------------------------------------------------------
// Case tables for B_n^(1)
// ---------------------------------------------------------------------------

namespace {

struct ColView {
  TopInfo ti;
  ColState st;
  bool present = false;  // column exists (k <= support)
};

// local configuration classifiers
bool is_lone(const ColView& v, int color) {
  return (v.ti.top == TopInfo::Top::LoneSplit || v.ti.top == TopInfo::Top::GroundSplit) &&
         v.ti.color == color;
}
bool is_full_split(const ColView& v) { return v.ti.top == TopInfo::Top::FullSplit; }
bool is_cube(const ColView& v, int color) {
  return v.ti.top == TopInfo::Top::Cube && v.ti.color == color;
}
bool next_cell_is(const WallModel& wm, int k, const ColView& v, PatternCell::Kind kind) {
  return wm.shape(k).cell(v.ti.cell_index + 1).kind == kind;
}
bool below_cell_is(const WallModel& wm, int k, const ColView& v, PatternCell::Kind kind) {
  return v.ti.cell_index >= 1 && wm.shape(k).cell(v.ti.cell_index - 1).kind == kind;
}
bool is_lower_half(const ColView& v, int color) {
  return (v.ti.top == TopInfo::Top::LowerHalf || v.ti.top == TopInfo::Top::GroundLower) &&
         v.ti.color == color;
}
bool is_full_pair(const ColView& v, int color) {
  return v.ti.top == TopInfo::Top::FullPair && v.ti.color == color;
}

std::string run_str(const SignatureRun& r) {
  return std::string(r.minus, '-') + std::string(r.plus, '+');
}

}  // namespace

CaseTableReport case_table_check(const AffineType& t, int max_blocks) {
  if (t.family != Family::B1) throw TypeError("case tables are specific to B_n^(1)");
  CaseTableReport rep;
  const int n = t.rank;

  struct Row {
    std::string name;
    int i;
    // match on (left = col k+1, mid = col k, right = col k-1)
    std::function<bool(const WallModel&, int, const ColView&, const ColView&, const ColView&)>
        match;
    std::string expect_mid;                 // expected signature of column k
    std::optional<std::string> expect_left; // expected signature of column k+1
    std::optional<PerfectElem> psi_mid;     // expected reading of column k
  };

  std::vector<Row> rows;
  auto same_cell = [](const ColView& a, const ColView& b) { return a.ti.s2 == b.ti.s2; };
  auto stacked = [](const ColView& hi, const ColView& lo) { return hi.ti.s2 == lo.ti.s2 + 2; };

  // Table "i = 0" (colors 0/1 swap roles on Y_{Lambda_1}; both orientations listed)
  for (int z : {0, 1}) {
    int zb = 1 - z;  // partner color
    PerfectElem img_lone_z = z == 0 ? box(1) : bar(1);
    rows.push_back({"T01.cancel.lone-lone(z=" + std::to_string(z) + ")", z,
                    [=](const WallModel&, int, const ColView& L, const ColView& M, const ColView&) {
                      return is_lone(L, zb) && is_lone(M, z) && L.ti.s2 == M.ti.s2;
                    },
                    "", "", img_lone_z});
    rows.push_back({"T01.cancel.cube2-loneover(z=" + std::to_string(z) + ")", z,
                    [=](const WallModel& wm, int k, const ColView& L, const ColView& M,
                        const ColView&) {
                      return is_cube(L, 2) && next_cell_is(wm, k + 1, L, PatternCell::Kind::Split) &&
                             is_lone(M, z) && M.ti.s2 == L.ti.s2;
                    },
                    "", "", img_lone_z});
    rows.push_back({"T01.cancel.lone-full(z=" + std::to_string(z) + ")", z,
                    [=](const WallModel&, int, const ColView& L, const ColView& M, const ColView&) {
                      return is_lone(L, zb) && is_full_split(M) && stacked(M, L);
                    },
                    "", "", box(2)});
    rows.push_back({"T01.minus.lone(z=" + std::to_string(z) + ")", z,
                    [=](const WallModel& wm, int k, const ColView& L, const ColView& M,
                        const ColView&) {
                      if (!is_lone(M, z)) return false;
                      bool cancel1 = is_lone(L, zb) && L.ti.s2 == M.ti.s2;
                      bool cancel2 = is_cube(L, 2) &&
                                     next_cell_is(wm, k + 1, L, PatternCell::Kind::Split) &&
                                     M.ti.s2 == L.ti.s2;
                      return !cancel1 && !cancel2;
                    },
                    "-", std::nullopt, img_lone_z});
    rows.push_back({"T01.minus.full(z=" + std::to_string(z) + ")", z,
                    [=](const WallModel&, int, const ColView& L, const ColView& M, const ColView&) {
                      if (!is_full_split(M)) return false;
                      return !(is_lone(L, zb) && stacked(M, L));
                    },
                    "-", std::nullopt, box(2)});
    rows.push_back({"T01.plus.cube2(z=" + std::to_string(z) + ")", z,
                    [=](const WallModel& wm, int k, const ColView&, const ColView& M,
                        const ColView& R) {
                      if (!(is_cube(M, 2) && next_cell_is(wm, k, M, PatternCell::Kind::Split)))
                        return false;
                      // the open split slot wants color z here
                      Wall probe;  // addability is checked by the signature itself
                      (void)probe;
                      bool cancel = R.present && is_lone(R, z) && R.ti.s2 == M.ti.s2;
                      return !cancel;
                    },
                    "", std::nullopt, bar(2)});
  }

  // Table "i = 2": full split cells against the 2-cube above them.
  rows.push_back({"T2.cancel.full-cube", 2,
                  [&](const WallModel& wm, int k, const ColView&, const ColView& M,
                      const ColView& R) {
                    return is_full_split(M) && R.present && is_cube(R, 2) &&
                           below_cell_is(wm, k - 1, R, PatternCell::Kind::Split) &&
                           stacked(R, M);
                  },
                  "", std::nullopt, box(2)});
  rows.push_back({"T2.plus.full", 2,
                  [&](const WallModel& wm, int k, const ColView&, const ColView& M,
                      const ColView& R) {
                    if (!is_full_split(M)) return false;
                    bool cancel = R.present && is_cube(R, 2) &&
                                  below_cell_is(wm, k - 1, R, PatternCell::Kind::Split) &&
                                  stacked(R, M);
                    return !cancel;
                  },
                  "+", std::nullopt, box(2)});
  rows.push_back({"T2.cancel.cube-over-full", 2,
                  [&](const WallModel& wm, int k, const ColView& L, const ColView& M,
                      const ColView&) {
                    return is_cube(M, 2) && below_cell_is(wm, k, M, PatternCell::Kind::Split) &&
                           is_full_split(L) && stacked(M, L);
                  },
                  "", "", box(3)});
  rows.push_back({"T2.minus.cube-over-full", 2,
                  [&](const WallModel& wm, int k, const ColView& L, const ColView& M,
                      const ColView&) {
                    if (!(is_cube(M, 2) && below_cell_is(wm, k, M, PatternCell::Kind::Split)))
                      return false;
                    return !(is_full_split(L) && stacked(M, L));
                  },
                  "-", std::nullopt, box(3)});

  // Table "3 <= i <= n-2" (middle cubes; applicable for n >= 5)
  for (int i = 3; i <= n - 2; ++i) {
    rows.push_back({"T3.asc.cancel.i=" + std::to_string(i), i,
                    [=](const WallModel&, int, const ColView&, const ColView& M, const ColView& R) {
                      return is_cube(M, i - 1) && R.present && is_cube(R, i) && stacked(R, M);
                    },
                    "", std::nullopt, box(i)});
    rows.push_back({"T3.asc.plus.i=" + std::to_string(i), i,
                    [=](const WallModel&, int, const ColView&, const ColView& M, const ColView& R) {
                      if (!is_cube(M, i - 1)) return false;
                      return !(R.present && is_cube(R, i) && stacked(R, M));
                    },
                    "+", std::nullopt, box(i)});
    rows.push_back({"T3.desc.cancel.i=" + std::to_string(i), i,
                    [=](const WallModel& wm, int k, const ColView&, const ColView& M,
                        const ColView& R) {
                      // M topped by i+1 on the descending side, R topped by i over i+1
                      bool m_desc = is_cube(M, i + 1) &&
                                    wm.shape(k).cell(M.ti.cell_index + 1).color_a == i;
                      return m_desc && R.present && is_cube(R, i) && stacked(R, M) &&
                             below_cell_is(wm, k - 1, R, PatternCell::Kind::Cube) &&
                             wm.shape(k - 1).cell(R.ti.cell_index - 1).color_a == i + 1;
                    },
                    "", std::nullopt, bar(i + 1)});
    rows.push_back({"T3.desc.minus.i=" + std::to_string(i), i,
                    [=](const WallModel& wm, int k, const ColView& L, const ColView& M,
                        const ColView&) {
                      bool m_is = is_cube(M, i) &&
                                  below_cell_is(wm, k, M, PatternCell::Kind::Cube) &&
                                  wm.shape(k).cell(M.ti.cell_index - 1).color_a == i + 1;
                      if (!m_is) return false;
                      bool cancel = L.present && is_cube(L, i + 1) && stacked(M, L) &&
                                    wm.shape(k + 1).cell(L.ti.cell_index + 1).color_a == i;
                      return !cancel;
                    },
                    "-", std::nullopt, bar(i)});
  }

  // Table "i = n-1": ascending n-2/n-1 and the n-pair descent.
  rows.push_back({"T4.asc.cancel", n - 1,
                  [&](const WallModel& wm, int k, const ColView&, const ColView& M,
                      const ColView& R) {
                    return is_cube(M, n - 2) &&
                           wm.shape(k).cell(M.ti.cell_index + 1).color_a == n - 1 &&
                           R.present && is_cube(R, n - 1) && stacked(R, M) &&
                           below_cell_is(wm, k - 1, R, PatternCell::Kind::Cube);
                  },
                  "", std::nullopt, std::nullopt});
  rows.push_back({"T4.pair.cancel", n - 1,
                  [&](const WallModel& wm, int k, const ColView&, const ColView& M,
                      const ColView& R) {
                    return is_full_pair(M, n) && R.present && is_cube(R, n - 1) &&
                           below_cell_is(wm, k - 1, R, PatternCell::Kind::HalfPair) &&
                           stacked(R, M);
                  },
                  "", std::nullopt, bar(n)});
  rows.push_back({"T4.pair.plus", n - 1,
                  [&](const WallModel& wm, int k, const ColView&, const ColView& M,
                      const ColView& R) {
                    if (!is_full_pair(M, n)) return false;
                    bool cancel = R.present && is_cube(R, n - 1) &&
                                  below_cell_is(wm, k - 1, R, PatternCell::Kind::HalfPair) &&
                                  stacked(R, M);
                    return !cancel;
                  },
                  "+", std::nullopt, bar(n)});
  rows.push_back({"T4.overpair.minus", n - 1,
                  [&](const WallModel& wm, int k, const ColView& L, const ColView& M,
                      const ColView&) {
                    bool m_is = is_cube(M, n - 1) &&
                                below_cell_is(wm, k, M, PatternCell::Kind::HalfPair);
                    if (!m_is) return false;
                    return !(L.present && is_full_pair(L, n) && stacked(M, L));
                  },
                  "-", std::nullopt, bar(n - 1)});
  rows.push_back({"T4.overpair.cancel", n - 1,
                  [&](const WallModel&, int, const ColView& L, const ColView& M, const ColView&) {
                    bool m_is = M.ti.top == TopInfo::Top::Cube && M.ti.color == n - 1;
                    return m_is && L.present && is_full_pair(L, n) && stacked(M, L);
                  },
                  "", "", bar(n - 1)});

  std::map<std::string, int> matched;
  for (const auto& r : rows) matched[r.name] = 0;

  // i = n presence table: total signature of one n-level segment
  std::map<std::string, std::string> combo_expect = {
      {"ABC", ""}, {"AB", "++"}, {"AC", ""}, {"A", "++"},
      {"BC", "--"}, {"B", "-+"}, {"C", "--"},
  };
  std::map<std::string, int> combo_seen;

  for (int lambda : cartan_data(t).level1_weights) {
    WallModel wm(t, lambda);
    PathModel pm(t, lambda);
    auto pool = wm.enumerate_reduced(max_blocks);
    for (const auto& w : pool) {
      const int len = int(w.cols.size());
      auto view = [&](int k) {
        ColView v;
        if (k < 0) return v;
        v.present = k <= len;  // implicit ground columns count as present
        v.st = wm.col_state(w, k);
        v.ti = wm.top_info(k, v.st);
        return v;
      };
      auto p = psi(wm, pm, w);
      assert(p);
      auto factor = [&](int k) {
        return k < int(p->entries.size()) ? p->entries[k] : pm.ground().at(k);
      };
      for (int k = 0; k <= len; ++k) {
        ColView L = view(k + 1), M = view(k), R = view(k - 1);
        for (const auto& row : rows) {
          if (!row.match(wm, k, L, M, R)) continue;
          ++matched[row.name];
          auto sig_m = wm.column_signature(w, k, row.i);
          if (sig_m != row.expect_mid) {
            rep.ok = false;
            rep.failures.push_back(row.name + ": column sig '" + sig_m + "' != '" +
                                   row.expect_mid + "' at " + wm.key(w) + " k=" +
                                   std::to_string(k));
          }
          if (row.expect_left) {
            auto sig_l = wm.column_signature(w, k + 1, row.i);
            if (sig_l != *row.expect_left) {
              rep.ok = false;
              rep.failures.push_back(row.name + ": left sig '" + sig_l + "' at " + wm.key(w));
            }
          }
          if (row.psi_mid && !(factor(k) == *row.psi_mid)) {
            rep.ok = false;
            rep.failures.push_back(row.name + ": psi reads " + elem_to_string(factor(k)) +
                                   " at " + wm.key(w));
          }
          // wall column run must equal the path factor run for this i
          const PerfectCrystal& B = perfect_crystal(t);
          SignatureRun pr{B.eps(factor(k), row.i), B.phi(factor(k), row.i)};
          auto cr = wm.column_signature(w, k, row.i);
          std::string prs = run_str(pr);
          // only the reduced totals are required to agree; the per-column
          // comparison below uses rows whose contexts force equality
          if (row.expect_mid == cr && row.psi_mid && prs != cr && row.expect_mid != "") {
            rep.ok = false;
            rep.failures.push_back(row.name + ": path factor run " + prs + " vs wall " + cr);
          }
        }
      }

      // n-level segments: A = exposed ascending n-1, B = lower half n,
      // C = complete exposed n-pair, scanned right to left at one cell level.
      {
        std::vector<std::pair<int, char>> marks;  // (k, class)
        for (int k = 0; k <= len; ++k) {
          ColView M = view(k);
          char cls = 0;
          if (is_cube(M, n - 1) && next_cell_is(wm, k, M, PatternCell::Kind::HalfPair)) cls = 'A';
          else if (is_lower_half(M, n)) cls = 'B';
          else if (is_full_pair(M, n)) cls = 'C';
          if (cls) marks.push_back({k, cls});
        }
        // group maximal consecutive-k runs on the same n-pair cell
        std::size_t idx = 0;
        while (idx < marks.size()) {
          std::size_t j = idx;
          auto pair_cell = [&](std::size_t q) {
            ColView v = view(marks[q].first);
            return marks[q].second == 'A' ? v.ti.cell_index + 1 : v.ti.cell_index;
          };
          while (j + 1 < marks.size() && marks[j + 1].first == marks[j].first + 1 &&
                 pair_cell(j + 1) == pair_cell(idx))
            ++j;
          bool hasA = false, hasB = false, hasC = false;
          std::vector<SignatureRun> runs;
          for (std::size_t q = j + 1; q-- > idx;) {  // leftmost column first
            int k = marks[q].first;
            if (marks[q].second == 'A') hasA = true;
            if (marks[q].second == 'B') hasB = true;
            if (marks[q].second == 'C') hasC = true;
            auto sig = wm.column_signature(w, k, n);
            SignatureRun run{0, 0};
            for (char ch : sig) (ch == '-' ? run.minus : run.plus)++;
            runs.push_back(run);
          }
          std::string combo;
          if (hasA) combo += 'A';
          if (hasB) combo += 'B';
          if (hasC) combo += 'C';
          if (!combo.empty()) {
            auto red = reduce_signature(runs);
            std::string total = std::string(red.eps, '-') + std::string(red.phi, '+');
            auto it = combo_expect.find(combo);
            if (it != combo_expect.end()) {
              ++combo_seen[combo];
              if (total != it->second) {
                rep.ok = false;
                rep.failures.push_back("n-segment " + combo + ": total '" + total + "' != '" +
                                       it->second + "' at " + wm.key(w));
              }
            }
          }
          idx = j + 1;
        }
      }
      ++rep.rows_checked;
    }
  }

  for (const auto& [name, count] : matched)
    if (count == 0) rep.unmatched_rows.push_back(name);
  for (const auto& [combo, expect] : combo_expect) {
    (void)expect;
    if (!combo_seen.count(combo)) rep.unmatched_rows.push_back("n-segment " + combo);
  }
  return rep;
}

}  // namespace wallcrys
