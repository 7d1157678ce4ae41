#pragma once

#include "duoidal/proof.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace duoidal {

struct SearchBudget {
  /// Longest proof considered.
  std::size_t max_steps = 12;
  /// Terms larger than this are not explored.
  std::size_t max_term_size = 200;
  /// States kept on both sides together.
  std::size_t max_states = 200000;
  double timeout_seconds = 30.0;
};

struct SearchResult {
  std::optional<PastingProof> proof;
  std::size_t states = 0;
  /// Why no proof was returned: "budget", "timeout" or "exhausted".
  std::string stop_reason;
};

/// Bidirectional best-first search from both sides of `goal`. Each side
/// expands its open state with the least term size plus depth, earliest
/// arrival first on ties; the side with fewer open states moves. Steps are
/// tried in path pre-order, catalogue order, forward before backward.
/// Identity-introducing steps are not used. The returned proof has been
/// re-checked by the kernel.
SearchResult search_proof(const Equation &goal, const SearchBudget &budget = {},
                          const KernelOptions &opt = {});

} // namespace duoidal
