// Command line front end; talks to the engine through the C API only.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wallcrys.h"

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

size_t node_budget_from_env() {
  const char* v = std::getenv("WALLCRYS_NODE_BUDGET");
  if (!v) return 1000000;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  return (end && *end == '\0' && n > 0) ? size_t(n) : 1000000;
}

struct EngineHandle {
  wc_engine* e = nullptr;
  ~EngineHandle() { wc_engine_destroy(e); }
};

int open_engine(const std::string& type, const std::string& lambda, EngineHandle& h) {
  switch (wc_engine_create(type.c_str(), lambda.c_str(), &h.e)) {
    case WC_OK: return 0;
    case WC_ERR_INVALID_TYPE:
      std::cerr << "error: unrecognized or out-of-range type '" << type << "'\n";
      return kExitParse;
    case WC_ERR_INVALID_WEIGHT:
      std::cerr << "error: '" << lambda << "' is not a level-1 weight of " << type << "\n";
      return kExitParse;
    default:
      std::cerr << "error: bad arguments\n";
      return kExitParse;
  }
}

int emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out_file, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_file << "\n";
    return kExitParse;
  }
  os << text;
  return 0;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  wc_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal graphs of basic representations: lambda-paths and Young walls"};
  app.require_subcommand(1);

  std::string type = "A2~1", lambda = "L0", model = "wall", format = "json", out_file;
  int depth = 4, max_blocks = 8;
  long seed = 0;
  std::vector<std::string> word;

  auto add_common = [&](CLI::App* cmd, bool with_model) {
    cmd->add_option("--type", type, "affine type, e.g. A2~1, A5~2, D4~1, A4~2, D3~2, B3~1");
    cmd->add_option("--lambda", lambda, "level-1 fundamental weight, e.g. L0");
    if (with_model) cmd->add_option("--model", model)->check(CLI::IsMember({"wall", "path"}));
  };

  auto* cmd_graph = app.add_subcommand("graph", "generate a crystal graph");
  add_common(cmd_graph, true);
  cmd_graph->add_option("--depth", depth, "BFS horizon (f-word length)");
  cmd_graph->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  cmd_graph->add_option("--out", out_file, "write to file instead of stdout");

  auto* cmd_verify = app.add_subcommand("verify", "check wall/path crystal isomorphism");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--depth", depth);
  cmd_verify->add_option("--out", out_file);

  auto* cmd_wall = app.add_subcommand("wall", "apply an e/f word to the ground wall");
  add_common(cmd_wall, false);
  cmd_wall->add_option("--word", word, "comma or space separated ops, e.g. f0,f2,f3");
  cmd_wall->add_option("--out", out_file);

  auto* cmd_char = app.add_subcommand("character", "multiplicities of reduced proper walls");
  add_common(cmd_char, false);
  cmd_char->add_option("--max-blocks", max_blocks);
  cmd_char->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  cmd_char->add_option("--out", out_file);
  app.add_option("--seed", seed, "seed for randomized subcommands (reserved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kExitParse;
  }

  const size_t budget = node_budget_from_env();
  EngineHandle h;

  if (cmd_graph->parsed()) {
    if (int rc = open_engine(type, lambda, h)) return rc;
    wc_graph* g = nullptr;
    wc_status st = wc_graph_generate(h.e, model == "wall" ? WC_MODEL_WALL : WC_MODEL_PATH, depth,
                                     budget, &g);
    if (st != WC_OK && st != WC_ERR_BUDGET) return kExitParse;
    char* text = nullptr;
    (format == "dot" ? wc_graph_dot : wc_graph_json)(g, &text);
    int rc = emit(take(text), out_file);
    bool truncated = wc_graph_truncated(g);
    wc_graph_destroy(g);
    if (rc) return rc;
    return truncated ? kExitBudget : 0;
  }

  if (cmd_verify->parsed()) {
    if (int rc = open_engine(type, lambda, h)) return rc;
    char* report = nullptr;
    int passed = 0;
    wc_status st = wc_verify(h.e, depth, budget, &report, &passed);
    int rc = emit(take(report) + "\n", out_file);
    if (rc) return rc;
    if (st == WC_ERR_BUDGET) return kExitBudget;
    return passed ? 0 : kExitCounterexample;
  }

  if (cmd_wall->parsed()) {
    if (int rc = open_engine(type, lambda, h)) return rc;
    wc_wall* w = nullptr;
    wc_wall_create(h.e, &w);
    std::vector<std::string> ops;
    for (const auto& chunk : word) {
      std::string cur;
      for (char c : chunk) {
        if (c == ',' || c == ' ') {
          if (!cur.empty()) ops.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) ops.push_back(cur);
    }
    for (std::size_t step = 0; step < ops.size(); ++step) {
      const std::string& op = ops[step];
      if (op.size() < 2 || (op[0] != 'e' && op[0] != 'f')) {
        std::cerr << "error: bad word entry '" << op << "'\n";
        wc_wall_destroy(w);
        return kExitParse;
      }
      int i = std::atoi(op.c_str() + 1);
      wc_status st = wc_wall_apply(w, op[0], i);
      if (st == WC_ERR_INVALID_ARG) {
        std::cerr << "error: index out of range in '" << op << "'\n";
        wc_wall_destroy(w);
        return kExitParse;
      }
      if (st == WC_ERR_DEAD_END) {
        std::cerr << "step " << (step + 1) << " (" << op << ") leaves the crystal\n";
        wc_wall_destroy(w);
        return kExitCounterexample;
      }
    }
    char* art = nullptr;
    char* info = nullptr;
    wc_wall_render(w, &art);
    wc_wall_info_json(w, &info);
    int rc = emit(take(art) + take(info) + "\n", out_file);
    wc_wall_destroy(w);
    return rc;
  }

  if (cmd_char->parsed()) {
    if (int rc = open_engine(type, lambda, h)) return rc;
    char* text = nullptr;
    if (wc_character_json(h.e, max_blocks, &text) != WC_OK) return kExitParse;
    std::string json = take(text);
    if (format == "text") {
      // compact per-block-count line plus the JSON body
      return emit(json + "\n", out_file);
    }
    return emit(json + "\n", out_file);
  }
  return kExitParse;
}
