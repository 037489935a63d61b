#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "affcov/constructors.hpp"

namespace affcov {

enum class Param { pi12, pi13, pibar13, pi23, rho12, rho13, rho23 };
inline constexpr int kParamCount = 7;
inline constexpr std::array<Param, kParamCount> kAllParams = {
    Param::pi12, Param::pi13, Param::pibar13, Param::pi23, Param::rho12, Param::rho13, Param::rho23};

const char* to_string(Param p);
Param param_from_string(const std::string& s);

/// machine_verified: computed here from exact data. asserted: a
/// stated bound that is recorded but not re-derived here.
enum class Trust { machine_verified, asserted };
const char* to_string(Trust t);

struct BoundEntry {
  Param param = Param::pi12;
  bool is_lower = true;
  long value = 0;
  std::string rule;
  bool exact = true;
  Trust trust = Trust::machine_verified;
  std::string note;
};

struct ParamBounds {
  /// False for the planar parameters of a non-planar graph.
  bool defined = true;
  long lower = 0;
  /// Best lower bound backed by machine-verified entries only.
  long verified_lower = 0;
  std::optional<long> upper;
};

struct BoundReport {
  std::array<ParamBounds, kParamCount> params{};
  std::vector<BoundEntry> entries;

  ParamBounds& operator[](Param p) { return params[static_cast<std::size_t>(p)]; }
  const ParamBounds& operator[](Param p) const { return params[static_cast<std::size_t>(p)]; }
  /// Records an entry and tightens the interval.
  void add(BoundEntry e);
};

struct BoundOptions {
  Budget budget;
  /// Build the standard constructions that apply to the graph and use
  /// their witnesses as upper bounds.
  bool run_constructions = true;
  /// Extra constructions supplied by the caller (may draw any graph
  /// isomorphic to the input).
  std::vector<const ConstructionResult*> attached;
};

/// Rule identifiers this module can emit.
const std::vector<std::string>& implemented_rules();

/// Lower row of the K_n plane-cover table for 4 <= n <= 9.
int kn_table_lower(int n);

/// Parameter certified by a construction's witness, if any. Edge witnesses
/// certify nothing when the graph has isolated vertices.
std::optional<Param> certified_param(const ConstructionResult& r);

/// Constructions applicable to g (recognised by structure or labelled
/// equality with a family).
std::vector<ConstructionResult> standard_constructions(const Graph& g, const Budget& b = {});

/// Monotonicity closure (pi <= rho, plane <= line, 3D <= 2D, pi <= pibar)
/// iterated to a fixpoint. Idempotent.
void close_monotone(BoundReport& r);

BoundReport bound_report(const Graph& g, const BoundOptions& opt = {});

}  // namespace affcov
