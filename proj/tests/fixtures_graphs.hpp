// Hand-transcribed crystal-graph fixtures: the top parts of the seven
// basic-representation graphs drawn for small ranks (path notation, last
// six entries, p(0) rightmost; "3b" denotes a barred box, "0" the 0-box,
// "e" the empty box).  Each fixture is complete to the stated depth: the
// node set at every depth <= yes and every f-edge between drawn levels.
#ifndef WALLCRYS_TESTS_FIXTURES_GRAPHS_HPP
#define WALLCRYS_TESTS_FIXTURES_GRAPHS_HPP

#include <string>
#include <vector>

namespace fixtures {

struct FixtureEdge {
  std::string src;
  int label;
  std::string dst;
};

struct GraphFixture {
  std::string type;
  std::string lambda;
  int depth;                                          // complete to this depth
  std::vector<std::vector<std::string>> levels;       // node suffixes per depth
  std::vector<FixtureEdge> edges;
  // nodes/edges one level past `depth` that the figure draws without being
  // exhaustive there (the figures show "top parts")
  std::vector<std::string> partial_nodes;
  std::vector<FixtureEdge> partial_edges;
};

inline std::vector<GraphFixture> path_figures() {
  std::vector<GraphFixture> out;

  // A_2^(1), B(Lambda_0), four levels
  out.push_back({"A2~1",
                 "L0",
                 4,
                 {
                     {"1 2 0 1 2 0"},
                     {"1 2 0 1 2 1"},
                     {"1 2 0 1 2 2", "1 2 0 1 0 1"},
                     {"1 2 0 1 0 2", "1 2 0 2 0 1"},
                     {"1 2 0 1 1 2", "1 2 0 1 0 0", "1 2 1 2 0 1", "1 2 0 2 0 2"},
                 },
                 {
                     {"1 2 0 1 2 0", 0, "1 2 0 1 2 1"},
                     {"1 2 0 1 2 1", 1, "1 2 0 1 2 2"},
                     {"1 2 0 1 2 1", 2, "1 2 0 1 0 1"},
                     {"1 2 0 1 2 2", 2, "1 2 0 1 0 2"},
                     {"1 2 0 1 0 1", 1, "1 2 0 2 0 1"},
                     {"1 2 0 1 0 2", 0, "1 2 0 1 1 2"},
                     {"1 2 0 1 0 2", 2, "1 2 0 1 0 0"},
                     {"1 2 0 2 0 1", 0, "1 2 1 2 0 1"},
                     {"1 2 0 2 0 1", 1, "1 2 0 2 0 2"},
                 }});

  // A_5^(2), B(Lambda_0): complete to five levels; the drawn sixth row omits
  // one branch (f_0 of (... 3 3b)) and is kept as partial data.
  out.push_back({"A5~2",
                 "L0",
                 5,
                 {
                     {"1 1b 1 1b 1 1b"},
                     {"1 1b 1 1b 1 2"},
                     {"1 1b 1 1b 1 3"},
                     {"1 1b 1 1b 2 3", "1 1b 1 1b 1 3b"},
                     {"1 1b 1 1b 2 3b", "1 1b 1 1b 1 2b"},
                     {"1 1b 1 1b 3 3b", "1 1b 1 1b 1 1", "1 1b 1 1b 2 2b"},
                 },
                 {
                     {"1 1b 1 1b 1 1b", 0, "1 1b 1 1b 1 2"},
                     {"1 1b 1 1b 1 2", 2, "1 1b 1 1b 1 3"},
                     {"1 1b 1 1b 1 3", 1, "1 1b 1 1b 2 3"},
                     {"1 1b 1 1b 1 3", 3, "1 1b 1 1b 1 3b"},
                     {"1 1b 1 1b 2 3", 3, "1 1b 1 1b 2 3b"},
                     {"1 1b 1 1b 1 3b", 1, "1 1b 1 1b 2 3b"},
                     {"1 1b 1 1b 1 3b", 2, "1 1b 1 1b 1 2b"},
                     {"1 1b 1 1b 2 3b", 2, "1 1b 1 1b 3 3b"},
                     {"1 1b 1 1b 1 2b", 0, "1 1b 1 1b 1 1"},
                     {"1 1b 1 1b 1 2b", 1, "1 1b 1 1b 2 2b"},
                 },
                 {"1 1b 1 1b 3 2b", "1 1b 1 1b 2 1", "1 1b 1 1b 2 1b"},
                 {
                     {"1 1b 1 1b 3 3b", 2, "1 1b 1 1b 3 2b"},
                     {"1 1b 1 1b 1 1", 1, "1 1b 1 1b 2 1"},
                     {"1 1b 1 1b 2 2b", 0, "1 1b 1 1b 2 1"},
                     {"1 1b 1 1b 2 2b", 1, "1 1b 1 1b 2 1b"},
                 }});

  // D_4^(1), B(Lambda_0), six levels.  Three deep nodes are printed with a
  // stale p(2) (and one missing bar) in the source figure; the values here
  // are the recomputed ones, cross-checked against the wall figure.
  out.push_back({"D4~1",
                 "L0",
                 6,
                 {
                     {"1 1b 1 1b 1 1b"},
                     {"1 1b 1 1b 1 2"},
                     {"1 1b 1 1b 1 3"},
                     {"1 1b 1 1b 1 4", "1 1b 1 1b 2 3", "1 1b 1 1b 1 4b"},
                     {"1 1b 1 1b 2 4", "1 1b 1 1b 1 3b", "1 1b 1 1b 2 4b"},
                     {"1 1b 1 1b 3 4", "1 1b 1 1b 2 3b", "1 1b 1 1b 1 2b", "1 1b 1 1b 3 4b"},
                     {"1 1b 1 2 3 4", "1 1b 1 1b 4b 4", "1 1b 1 1b 3 3b", "1 1b 1 1b 1 1",
                      "1 1b 1 1b 2 2b", "1 1b 1 1b 4 4b", "1 1b 1 2 3 4b"},
                 },
                 {
                     {"1 1b 1 1b 1 1b", 0, "1 1b 1 1b 1 2"},
                     {"1 1b 1 1b 1 2", 2, "1 1b 1 1b 1 3"},
                     {"1 1b 1 1b 1 3", 3, "1 1b 1 1b 1 4"},
                     {"1 1b 1 1b 1 3", 1, "1 1b 1 1b 2 3"},
                     {"1 1b 1 1b 1 3", 4, "1 1b 1 1b 1 4b"},
                     {"1 1b 1 1b 1 4", 1, "1 1b 1 1b 2 4"},
                     {"1 1b 1 1b 1 4", 4, "1 1b 1 1b 1 3b"},
                     {"1 1b 1 1b 2 3", 3, "1 1b 1 1b 2 4"},
                     {"1 1b 1 1b 2 3", 4, "1 1b 1 1b 2 4b"},
                     {"1 1b 1 1b 1 4b", 3, "1 1b 1 1b 1 3b"},
                     {"1 1b 1 1b 1 4b", 1, "1 1b 1 1b 2 4b"},
                     {"1 1b 1 1b 2 4", 2, "1 1b 1 1b 3 4"},
                     {"1 1b 1 1b 2 4", 4, "1 1b 1 1b 2 3b"},
                     {"1 1b 1 1b 1 3b", 1, "1 1b 1 1b 2 3b"},
                     {"1 1b 1 1b 1 3b", 2, "1 1b 1 1b 1 2b"},
                     {"1 1b 1 1b 2 4b", 3, "1 1b 1 1b 2 3b"},
                     {"1 1b 1 1b 2 4b", 2, "1 1b 1 1b 3 4b"},
                     {"1 1b 1 1b 3 4", 0, "1 1b 1 2 3 4"},
                     {"1 1b 1 1b 3 4", 4, "1 1b 1 1b 4b 4"},
                     {"1 1b 1 1b 2 3b", 2, "1 1b 1 1b 3 3b"},
                     {"1 1b 1 1b 1 2b", 0, "1 1b 1 1b 1 1"},
                     {"1 1b 1 1b 1 2b", 1, "1 1b 1 1b 2 2b"},
                     {"1 1b 1 1b 3 4b", 3, "1 1b 1 1b 4 4b"},
                     {"1 1b 1 1b 3 4b", 0, "1 1b 1 2 3 4b"},
                 }});

  // A_4^(2), B(Lambda_0), six levels
  out.push_back({"A4~2",
                 "L0",
                 6,
                 {
                     {"e e e e e e"},
                     {"e e e e e 1"},
                     {"e e e e e 2"},
                     {"e e e e 1 2", "e e e e e 2b"},
                     {"e e e e 1 2b", "e e e e e 1b"},
                     {"e e e e 2 2b", "e e e e 1 1b"},
                     {"e e e 1 2 2b", "e e e e 2 1b", "e e e e 1 1"},
                 },
                 {
                     {"e e e e e e", 0, "e e e e e 1"},
                     {"e e e e e 1", 1, "e e e e e 2"},
                     {"e e e e e 2", 0, "e e e e 1 2"},
                     {"e e e e e 2", 2, "e e e e e 2b"},
                     {"e e e e 1 2", 2, "e e e e 1 2b"},
                     {"e e e e e 2b", 0, "e e e e 1 2b"},
                     {"e e e e e 2b", 1, "e e e e e 1b"},
                     {"e e e e 1 2b", 1, "e e e e 2 2b"},
                     {"e e e e e 1b", 0, "e e e e 1 1b"},
                     {"e e e e 2 2b", 0, "e e e 1 2 2b"},
                     {"e e e e 2 2b", 1, "e e e e 2 1b"},
                     {"e e e e 1 1b", 0, "e e e e 1 1"},
                 }});

  // D_3^(2), B(Lambda_0), six levels
  out.push_back({"D3~2",
                 "L0",
                 6,
                 {
                     {"e e e e e e"},
                     {"e e e e e 1"},
                     {"e e e e e 2"},
                     {"e e e e 1 2", "e e e e e 0"},
                     {"e e e e 1 0", "e e e e e 2b"},
                     {"e e e e 2 0", "e e e e 1 2b", "e e e e e 1b"},
                     {"e e e 1 2 0", "e e e e 0 0", "e e e e 2 2b", "e e e e 1 1b"},
                 },
                 {
                     {"e e e e e e", 0, "e e e e e 1"},
                     {"e e e e e 1", 1, "e e e e e 2"},
                     {"e e e e e 2", 0, "e e e e 1 2"},
                     {"e e e e e 2", 2, "e e e e e 0"},
                     {"e e e e 1 2", 2, "e e e e 1 0"},
                     {"e e e e e 0", 0, "e e e e 1 0"},
                     {"e e e e e 0", 2, "e e e e e 2b"},
                     {"e e e e 1 0", 1, "e e e e 2 0"},
                     {"e e e e 1 0", 2, "e e e e 1 2b"},
                     {"e e e e e 2b", 0, "e e e e 1 2b"},
                     {"e e e e e 2b", 1, "e e e e e 1b"},
                     {"e e e e 2 0", 0, "e e e 1 2 0"},
                     {"e e e e 2 0", 2, "e e e e 0 0"},
                     {"e e e e 1 2b", 1, "e e e e 2 2b"},
                     {"e e e e e 1b", 0, "e e e e 1 1b"},
                 }});

  // B_3^(1), B(Lambda_0), six levels (one deep node recomputed as for D_4^(1))
  out.push_back({"B3~1",
                 "L0",
                 6,
                 {
                     {"1 1b 1 1b 1 1b"},
                     {"1 1b 1 1b 1 2"},
                     {"1 1b 1 1b 1 3"},
                     {"1 1b 1 1b 2 3", "1 1b 1 1b 1 0"},
                     {"1 1b 1 1b 2 0", "1 1b 1 1b 1 3b"},
                     {"1 1b 1 1b 3 0", "1 1b 1 1b 2 3b", "1 1b 1 1b 1 2b"},
                     {"1 1b 1 2 3 0", "1 1b 1 1b 0 0", "1 1b 1 1b 3 3b", "1 1b 1 1b 1 1",
                      "1 1b 1 1b 2 2b"},
                 },
                 {
                     {"1 1b 1 1b 1 1b", 0, "1 1b 1 1b 1 2"},
                     {"1 1b 1 1b 1 2", 2, "1 1b 1 1b 1 3"},
                     {"1 1b 1 1b 1 3", 1, "1 1b 1 1b 2 3"},
                     {"1 1b 1 1b 1 3", 3, "1 1b 1 1b 1 0"},
                     {"1 1b 1 1b 2 3", 3, "1 1b 1 1b 2 0"},
                     {"1 1b 1 1b 1 0", 1, "1 1b 1 1b 2 0"},
                     {"1 1b 1 1b 1 0", 3, "1 1b 1 1b 1 3b"},
                     {"1 1b 1 1b 2 0", 2, "1 1b 1 1b 3 0"},
                     {"1 1b 1 1b 2 0", 3, "1 1b 1 1b 2 3b"},
                     {"1 1b 1 1b 1 3b", 1, "1 1b 1 1b 2 3b"},
                     {"1 1b 1 1b 1 3b", 2, "1 1b 1 1b 1 2b"},
                     {"1 1b 1 1b 3 0", 0, "1 1b 1 2 3 0"},
                     {"1 1b 1 1b 3 0", 3, "1 1b 1 1b 0 0"},
                     {"1 1b 1 1b 2 3b", 2, "1 1b 1 1b 3 3b"},
                     {"1 1b 1 1b 1 2b", 0, "1 1b 1 1b 1 1"},
                     {"1 1b 1 1b 1 2b", 1, "1 1b 1 1b 2 2b"},
                 }});

  // B_3^(1), B(Lambda_3), five levels
  out.push_back({"B3~1",
                 "L3",
                 5,
                 {
                     {"0 0 0 0 0 0"},
                     {"0 0 0 0 0 3b"},
                     {"0 0 0 0 0 2b"},
                     {"0 0 0 0 0 1", "0 0 0 0 0 1b", "0 0 0 0 3b 2b"},
                     {"0 0 0 0 0 2", "0 0 0 0 3b 1", "0 0 0 0 3b 1b"},
                     {"0 0 0 0 0 3", "0 0 0 0 3b 2", "0 0 0 0 2b 1", "0 0 0 0 2b 1b"},
                 },
                 {
                     {"0 0 0 0 0 0", 3, "0 0 0 0 0 3b"},
                     {"0 0 0 0 0 3b", 2, "0 0 0 0 0 2b"},
                     {"0 0 0 0 0 2b", 0, "0 0 0 0 0 1"},
                     {"0 0 0 0 0 2b", 1, "0 0 0 0 0 1b"},
                     {"0 0 0 0 0 2b", 3, "0 0 0 0 3b 2b"},
                     {"0 0 0 0 0 1", 1, "0 0 0 0 0 2"},
                     {"0 0 0 0 0 1", 3, "0 0 0 0 3b 1"},
                     {"0 0 0 0 0 1b", 0, "0 0 0 0 0 2"},
                     {"0 0 0 0 0 1b", 3, "0 0 0 0 3b 1b"},
                     {"0 0 0 0 3b 2b", 0, "0 0 0 0 3b 1"},
                     {"0 0 0 0 3b 2b", 1, "0 0 0 0 3b 1b"},
                     {"0 0 0 0 0 2", 2, "0 0 0 0 0 3"},
                     {"0 0 0 0 0 2", 3, "0 0 0 0 3b 2"},
                     {"0 0 0 0 3b 1", 1, "0 0 0 0 3b 2"},
                     {"0 0 0 0 3b 1", 2, "0 0 0 0 2b 1"},
                     {"0 0 0 0 3b 1b", 0, "0 0 0 0 3b 2"},
                     {"0 0 0 0 3b 1b", 2, "0 0 0 0 2b 1b"},
                 }});

  return out;
}

/// Wall anchors transcribed directly from the reduced-proper-wall figures:
/// (type, lambda, counts literal, depth).  The counts literal lists columns
/// rightmost first; "c:t" marks a lone split half-block of color t on top.
struct WallAnchor {
  std::string type;
  std::string lambda;
  std::string counts;
  int depth;
};

inline std::vector<WallAnchor> wall_anchors() {
  return {
      // (a) A_2^(1), Y(Lambda_0)
      {"A2~1", "L0", "-", 0},
      {"A2~1", "L0", "1", 1},
      {"A2~1", "L0", "2", 2},
      {"A2~1", "L0", "1,1", 2},
      {"A2~1", "L0", "2,1", 3},
      {"A2~1", "L0", "1,1,1", 3},
      {"A2~1", "L0", "2,2", 4},
      {"A2~1", "L0", "2,1,1", 4},
      {"A2~1", "L0", "1,1,1,1", 4},
      {"A2~1", "L0", "3,1", 4},
      // (b) A_5^(2), Y(Lambda_0)
      {"A5~2", "L0", "1", 1},
      {"A5~2", "L0", "2", 2},
      {"A5~2", "L0", "3", 3},
      {"A5~2", "L0", "2,1", 3},
      {"A5~2", "L0", "4", 4},
      {"A5~2", "L0", "3,1", 4},
      {"A5~2", "L0", "5:0", 5},
      {"A5~2", "L0", "4,1", 5},
      {"A5~2", "L0", "3,2", 5},
      {"A5~2", "L0", "5:0,1", 6},
      {"A5~2", "L0", "5:1,1", 6},
      {"A5~2", "L0", "4,2", 6},
      // (c) D_4^(1), Y(Lambda_0): the depth-6 fork pair with both tags
      {"D4~1", "L0", "1", 1},
      {"D4~1", "L0", "2", 2},
      {"D4~1", "L0", "3:3", 3},
      {"D4~1", "L0", "3:4", 3},
      {"D4~1", "L0", "2,1", 3},
      {"D4~1", "L0", "4", 4},
      {"D4~1", "L0", "3:3,1", 4},
      {"D4~1", "L0", "3:4,1", 4},
      {"D4~1", "L0", "3:3,3:4", 6},
      {"D4~1", "L0", "3:4,3:3", 6},  // not drawn; forced by the fork symmetry
      {"D4~1", "L0", "5", 5},
      {"D4~1", "L0", "4,2", 6},
      // (d) A_4^(2), Y(Lambda_0)
      {"A4~2", "L0", "1", 1},
      {"A4~2", "L0", "2", 2},
      {"A4~2", "L0", "2,1", 3},
      {"A4~2", "L0", "3", 3},
      {"A4~2", "L0", "3,1", 4},
      {"A4~2", "L0", "4", 4},
      {"A4~2", "L0", "3,2", 5},
      {"A4~2", "L0", "4,1", 5},
      {"A4~2", "L0", "3,2,1", 6},
      {"A4~2", "L0", "4,2", 6},
      {"A4~2", "L0", "5,1", 6},
      // (e) D_3^(2), Y(Lambda_0)
      {"D3~2", "L0", "1", 1},
      {"D3~2", "L0", "2", 2},
      {"D3~2", "L0", "2,1", 3},
      {"D3~2", "L0", "3", 3},
      {"D3~2", "L0", "3,1", 4},
      {"D3~2", "L0", "4", 4},
      {"D3~2", "L0", "3,2", 5},
      {"D3~2", "L0", "4,1", 5},
      {"D3~2", "L0", "5", 5},
      {"D3~2", "L0", "3,2,1", 6},
      {"D3~2", "L0", "3,3", 6},
      {"D3~2", "L0", "4,2", 6},
      {"D3~2", "L0", "5,1", 6},
      // (f) B_3^(1), Y(Lambda_0)
      {"B3~1", "L0", "1", 1},
      {"B3~1", "L0", "2", 2},
      {"B3~1", "L0", "2,1", 3},
      {"B3~1", "L0", "3", 3},
      {"B3~1", "L0", "3,1", 4},
      {"B3~1", "L0", "4", 4},
      {"B3~1", "L0", "3,2", 5},
      {"B3~1", "L0", "4,1", 5},
      {"B3~1", "L0", "5", 5},
      {"B3~1", "L0", "3,2,1", 6},
      {"B3~1", "L0", "3,3", 6},
      {"B3~1", "L0", "4,2", 6},
      {"B3~1", "L0", "6", 6},
      {"B3~1", "L0", "5,1", 6},
      // (g) B_3^(1), Y(Lambda_3): tagged pair at depth 3
      {"B3~1", "L3", "1", 1},
      {"B3~1", "L3", "2", 2},
      {"B3~1", "L3", "3:0", 3},
      {"B3~1", "L3", "3:1", 3},
      {"B3~1", "L3", "2,1", 3},
      {"B3~1", "L3", "4", 4},
      {"B3~1", "L3", "3:0,1", 4},
      {"B3~1", "L3", "3:1,1", 4},
      {"B3~1", "L3", "5", 5},
      {"B3~1", "L3", "4,1", 5},
      {"B3~1", "L3", "3:0,2", 5},
      {"B3~1", "L3", "3:1,2", 5},
  };
}

}  // namespace fixtures

#endif
