#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affcov/graph.hpp"

namespace affcov {

enum class PartitionKind { lva, vertex_thickness, proper_coloring };

struct Partition {
  std::vector<std::vector<int>> classes;
  PartitionKind certifies = PartitionKind::proper_coloring;
};

/// Empty when the classes partition V(g) and each satisfies its predicate.
std::optional<std::string> check_partition(const Graph& g, const Partition& p);

struct Budget {
  int chromatic_n = 24;
  int lva_n = 20;
  int vt_n = 16;
  int treewidth_n = 18;
  int bisection_n = 20;
  std::uint64_t nodes = 20'000'000;

  /// Reads AFFCOV_BUDGET_N (caps every size limit) and AFFCOV_BUDGET_NODES.
  static Budget from_env();
};

struct PartitionResult {
  int value = 0;
  Partition partition;
  /// False when the budget was exceeded and a fallback partition returned;
  /// value is then only an upper bound.
  bool exact = true;
};

PartitionResult chromatic_number(const Graph& g, const Budget& b = {});
PartitionResult lva_exact(const Graph& g, const Budget& b = {});
PartitionResult vertex_thickness_exact(const Graph& g, const Budget& b = {});
/// Greedy colouring in index order; always valid.
Partition greedy_coloring(const Graph& g);

struct TreewidthResult {
  int lower = 0;
  int upper = 0;
  bool exact = true;
};

TreewidthResult treewidth_exact(const Graph& g, const Budget& b = {});

struct BisectionResult {
  int value = 0;
  std::vector<int> side;  // vertices on the smaller side
  bool exact = true;
};

BisectionResult bisection_width_exact(const Graph& g, const Budget& b = {});

struct CliqueCover {
  int n = 0;
  int s = 0;
  std::vector<std::vector<int>> blocks;
};

struct CliqueCoverResult {
  int value = 0;  // size of the best cover found
  int lower = 0;  // proven lower bound
  CliqueCover cover;
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Minimum number of cliques of order <= s covering the edges of K_n.
CliqueCoverResult clique_cover_exact(int n, int s, std::uint64_t node_budget = 50'000'000);
/// True when no cover of K_n by `size` blocks of order <= s exists (search
/// exhausted). Throws if the budget runs out first.
bool clique_cover_refutes(int n, int s, int size, std::uint64_t node_budget = 50'000'000);
std::optional<std::string> check_clique_cover(const CliqueCover& c);

struct SteinerBounds {
  int lower = 0;
  bool exact_exists = false;
};

SteinerBounds steiner_bounds(int n, int k);

}  // namespace affcov
