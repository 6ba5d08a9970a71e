#include "wallcrys.h"

#include <cstring>
#include <json.hpp>
#include <memory>
#include <string>

#include "wallcrys/correspondence.hpp"

using namespace wallcrys;

struct wc_engine {
  AffineType type;
  int lambda;
  std::unique_ptr<WallModel> walls;
  std::unique_ptr<PathModel> paths;
};

struct wc_graph {
  CrystalGraph g;
};

struct wc_wall {
  wc_engine* engine;
  Wall w;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

wc_status wc_engine_create(const char* type_str, const char* lambda_str, wc_engine** out) {
  if (!type_str || !lambda_str || !out) return WC_ERR_INVALID_ARG;
  try {
    AffineType t = parse_type(type_str);
    int lambda;
    try {
      lambda = parse_level1_lambda(t, lambda_str);
    } catch (const TypeError&) {
      return WC_ERR_INVALID_WEIGHT;
    }
    auto* e = new wc_engine{t, lambda, std::make_unique<WallModel>(t, lambda),
                            std::make_unique<PathModel>(t, lambda)};
    *out = e;
    return WC_OK;
  } catch (const TypeError&) {
    return WC_ERR_INVALID_TYPE;
  } catch (...) {
    return WC_ERR_INVALID_ARG;
  }
}

void wc_engine_destroy(wc_engine* e) { delete e; }

int wc_engine_rank(const wc_engine* e) { return e ? e->type.rank : -1; }

wc_status wc_graph_generate(wc_engine* e, wc_model model, int depth, size_t node_budget,
                            wc_graph** out) {
  if (!e || !out || depth < 0) return WC_ERR_INVALID_ARG;
  auto* g = new wc_graph;
  if (model == WC_MODEL_WALL)
    g->g = generate_graph(*e->walls, depth, node_budget ? node_budget : 1000000);
  else
    g->g = generate_graph(*e->paths, depth, node_budget ? node_budget : 1000000);
  *out = g;
  return g->g.truncated ? WC_ERR_BUDGET : WC_OK;
}

void wc_graph_destroy(wc_graph* g) { delete g; }

size_t wc_graph_node_count(const wc_graph* g) { return g ? g->g.nodes.size() : 0; }

int wc_graph_truncated(const wc_graph* g) { return g && g->g.truncated ? 1 : 0; }

wc_status wc_graph_json(const wc_graph* g, char** out) {
  if (!g || !out) return WC_ERR_INVALID_ARG;
  *out = dup_string(graph_to_json(g->g));
  return WC_OK;
}

wc_status wc_graph_dot(const wc_graph* g, char** out) {
  if (!g || !out) return WC_ERR_INVALID_ARG;
  *out = dup_string(graph_to_dot(g->g));
  return WC_OK;
}

wc_status wc_verify(wc_engine* e, int depth, size_t node_budget, char** report_json, int* passed) {
  if (!e || depth < 0) return WC_ERR_INVALID_ARG;
  IsoReport rep = verify_isomorphism(e->type, e->lambda, depth,
                                     node_budget ? node_budget : 1000000);
  if (report_json) *report_json = dup_string(rep.to_json());
  if (passed) *passed = rep.ok ? 1 : 0;
  if (rep.truncated) return WC_ERR_BUDGET;
  return rep.ok ? WC_OK : WC_ERR_VERIFY_FAIL;
}

wc_status wc_character_json(wc_engine* e, int max_blocks, char** out) {
  if (!e || !out || max_blocks < 0) return WC_ERR_INVALID_ARG;
  auto walls = e->walls->enumerate_reduced(max_blocks);
  nlohmann::json j;
  j["type"] = type_to_string(e->type);
  j["lambda"] = e->lambda;
  j["max_blocks"] = max_blocks;
  std::map<std::string, std::int64_t> mult;
  std::vector<std::int64_t> per_count(max_blocks + 1, 0);
  for (const auto& w : walls) {
    auto content = e->walls->block_content(w);
    std::int64_t total = 0;
    std::string key;
    for (std::size_t i = 0; i < content.size(); ++i) {
      total += content[i];
      if (i) key += ",";
      key += std::to_string(content[i]);
    }
    mult[key] += 1;
    per_count[total] += 1;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [content, count] : mult)
    rows.push_back({{"content", content}, {"multiplicity", count}});
  j["multiplicities"] = std::move(rows);
  j["per_block_count"] = per_count;
  *out = dup_string(j.dump(2));
  return WC_OK;
}

wc_status wc_wall_create(wc_engine* e, wc_wall** out) {
  if (!e || !out) return WC_ERR_INVALID_ARG;
  *out = new wc_wall{e, e->walls->root()};
  return WC_OK;
}

wc_status wc_wall_parse(wc_engine* e, const char* counts, wc_wall** out) {
  if (!e || !counts || !out) return WC_ERR_INVALID_ARG;
  auto w = e->walls->parse_counts(counts);
  if (!w) return WC_ERR_INVALID_ARG;
  *out = new wc_wall{e, *w};
  return WC_OK;
}

void wc_wall_destroy(wc_wall* w) { delete w; }

wc_status wc_wall_apply(wc_wall* w, char op, int i) {
  if (!w || i < 0 || i >= w->engine->type.n_indices()) return WC_ERR_INVALID_ARG;
  std::optional<Wall> next;
  if (op == 'f') next = w->engine->walls->f(w->w, i);
  else if (op == 'e') next = w->engine->walls->e(w->w, i);
  else return WC_ERR_INVALID_ARG;
  if (!next) return WC_ERR_DEAD_END;
  w->w = *next;
  return WC_OK;
}

wc_status wc_wall_render(const wc_wall* w, char** out) {
  if (!w || !out) return WC_ERR_INVALID_ARG;
  *out = dup_string(w->engine->walls->render_ascii(w->w));
  return WC_OK;
}

wc_status wc_wall_info_json(const wc_wall* w, char** out) {
  if (!w || !out) return WC_ERR_INVALID_ARG;
  const auto& wm = *w->engine->walls;
  nlohmann::json j;
  j["key"] = wm.key(w->w);
  j["content"] = wm.block_content(w->w);
  j["wt"] = wm.classical_wt(w->w);
  std::vector<int> eps(w->engine->type.n_indices()), phi(w->engine->type.n_indices());
  for (int i = 0; i < w->engine->type.n_indices(); ++i) {
    eps[i] = wm.eps(w->w, i);
    phi[i] = wm.phi(w->w, i);
  }
  j["eps"] = eps;
  j["phi"] = phi;
  j["proper"] = wm.is_proper(w->w);
  j["reduced"] = wm.is_reduced(w->w);
  *out = dup_string(j.dump(2));
  return WC_OK;
}

void wc_string_free(char* s) { std::free(s); }

}  // extern "C"
