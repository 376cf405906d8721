#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compnet/circuit.hpp"
#include "compnet/vectfield.hpp"

namespace compnet {

/// Seeded case source: identical seed yields the identical case sequence,
/// independent of run mode and thread count.
struct CaseGenerator {
  std::uint64_t seed = 0;
  int max_set_size = 4;
  int max_edges = 5;
  int max_degree = 3;
  int case_count = 1000;
};

struct LawFailure {
  int case_index = 0;
  std::string message;
  std::string repro;
};

struct LawReport {
  std::string law;
  int cases_run = 0;
  std::vector<LawFailure> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Cases are independent; Parallel runs them under OpenMP and merges the
/// results by case index, so both modes produce identical reports.
enum class RunMode { Serial, Parallel };

/// Associator/unitor certification, pentagon, triangle, naturality,
/// strict vertical composition and the interchange law.
LawReport check_pseudo_double_category(const CaseGenerator& gen,
                                       RunMode mode = RunMode::Parallel);

/// The interchanger/unit-interchanger diagrams of a monoidal double
/// category (tensor-associativity and unitor compatibility).
LawReport check_monoidal_structure(const CaseGenerator& gen, RunMode mode = RunMode::Parallel);

/// Braiding squares, braiding naturality and symmetry.
LawReport check_symmetry(const CaseGenerator& gen, RunMode mode = RunMode::Parallel);

/// Companion/conjoint equations, exhaustively for all vertical morphisms
/// between sets of size <= 3, undecorated and with trivial decorations in
/// both backends.
LawReport check_fibrancy(const CaseGenerator& gen, RunMode mode = RunMode::Parallel);

/// The five decoration laws plus the decorated coherence layer
/// (associativity hexagon, unitor/interchanger/braiding transport).
LawReport check_decoration_functor_circuit(const CaseGenerator& gen,
                                           RunMode mode = RunMode::Parallel);
LawReport check_decoration_functor_vectfield(const CaseGenerator& gen,
                                             RunMode mode = RunMode::Parallel);

/// Exhaustive comparison of the union-find pushout against an independent
/// equivalence-closure oracle, for all leg pairs with set sizes <= max.
LawReport pushout_oracle(int max_size, RunMode mode = RunMode::Parallel);

/// Randomized spot checks of the pushout against the closure oracle at
/// larger sizes.
LawReport pushout_spot_checks(const CaseGenerator& gen, RunMode mode = RunMode::Parallel);

/// The default bundle run by the CLI: structural suites at gen.case_count,
/// circuit decoration at half, vector fields at three tenths, fibrancy and
/// the exhaustive pushout oracle.
std::vector<LawReport> run_all_laws(const CaseGenerator& gen, RunMode mode = RunMode::Parallel);

}  // namespace compnet
