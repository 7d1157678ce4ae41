#pragma once

#include "duoidal/axioms.hpp"
#include "duoidal/equation.hpp"
#include "duoidal/term.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace duoidal {

/// Child indices from the root of a normalized term.
using Path = std::vector<std::size_t>;

/// One rewrite: replace an instance of one side of `schema` found at `path`
/// by the other side. `subst` may be partial; the kernel completes it.
///
/// When the rewritten side is a composite and `path` ends inside a chain,
/// the last index is the first factor of the rewritten window; windows are
/// tried from shortest to longest.
struct RewriteStep {
  Path path;
  std::string schema;
  Direction direction = Direction::Forward;
  Subst subst;

  friend bool operator==(const RewriteStep &, const RewriteStep &) = default;
};

struct PastingProof {
  Equation goal;
  std::vector<RewriteStep> steps;
};

struct StepOutcome {
  Term result;
  /// The substitution the kernel settled on.
  Subst subst;
};

struct KernelOptions {
  bool with_negation = true;
  /// Allow rewriting a bare identity into something larger.
  bool allow_introduction = true;
};

/// Applies `step` to the normalized term `t`. Throws Error with a reason if
/// the schema is unknown, the path is invalid, nothing matches or the result
/// changes the type.
StepOutcome apply_step(const Term &t, const RewriteStep &step, const KernelOptions &opt = {});

struct ProofCheck {
  bool ok = false;
  /// Index of the rejected step; equals steps.size() when all steps apply
  /// but the end term is not the goal's right-hand side.
  std::size_t failed_step = 0;
  std::string reason;
  /// Terms visited, starting with the goal's left-hand side.
  std::vector<Term> trace;
};

ProofCheck verify_proof(const PastingProof &proof, const KernelOptions &opt = {});

/// Every single step leading out of `t`, in (path pre-order, catalogue,
/// forward-then-backward) order, with completed substitutions.
struct Rewrite {
  RewriteStep step;
  Term result;
};
std::vector<Rewrite> rewrites(const Term &t, const std::vector<const AxiomSchema *> &schemas,
                              const KernelOptions &opt = {});

/// Paths of all nodes of `t` in pre-order.
std::vector<Path> all_paths(const Term &t);

std::string path_to_string(const Path &p);
Path parse_path(std::string_view text);

/// Script form:
///   prove <lhs> = <rhs>
///   step <path> <schema> <fwd|bwd> {Var=value, ...}
/// `#` starts a comment. The root path is written `.`.
PastingProof parse_proof(std::string_view text);
std::string print_proof(const PastingProof &proof);

std::string to_string(const RewriteStep &step);

/// Builds step lists by rewriting at the first position where a schema
/// applies.
class ProofBuilder {
public:
  explicit ProofBuilder(Term start, KernelOptions opt = {});

  /// Rewrites with `schema` at the first applicable position (pre-order,
  /// windows shortest first) at or below `under`, or exactly at `at`.
  ProofBuilder &rw(const std::string &schema, Direction dir, const Subst &seed = {},
                   const Path &under = {});
  ProofBuilder &rw_at(const Path &at, const std::string &schema, Direction dir,
                      const Subst &seed = {});

  /// Appends the reverse of `other`'s steps, so that a proof built forward
  /// from both ends meets in the middle. Requires other.current() == current().
  ProofBuilder &append_reversed(const ProofBuilder &other);

  const Term &current() const { return cur_; }
  const Term &start() const { return start_; }
  const std::vector<RewriteStep> &steps() const { return steps_; }
  const std::vector<Term> &trace() const { return trace_; }

private:
  Term start_;
  Term cur_;
  KernelOptions opt_;
  std::vector<RewriteStep> steps_;
  std::vector<Term> trace_;
};

/// A single step turning `from` into `to` using `schema` (any schema if
/// empty), if one exists.
std::optional<RewriteStep> find_step(const Term &from, const Term &to,
                                     const std::string &schema = {},
                                     const KernelOptions &opt = {});

} // namespace duoidal
