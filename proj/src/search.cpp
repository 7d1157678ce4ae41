#include "duoidal/search.hpp"

#include "duoidal/error.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>

namespace duoidal {

namespace {

struct Visit {
  Term parent;
  RewriteStep step;
  std::size_t depth = 0;
  bool root = false;
};

using Seen = std::unordered_map<Term, Visit, TermHash>;

std::vector<Term> chain_to_root(const Seen &seen, const Term &t,
                                std::vector<RewriteStep> &steps) {
  std::vector<Term> terms{t};
  Term cur = t;
  while (!seen.at(cur).root) {
    const Visit &v = seen.at(cur);
    steps.push_back(v.step);
    cur = v.parent;
    terms.push_back(cur);
  }
  return terms;
}

} // namespace

SearchResult search_proof(const Equation &goal, const SearchBudget &budget,
                          const KernelOptions &kernel) {
  using Clock = std::chrono::steady_clock;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(budget.timeout_seconds));
  KernelOptions opt = kernel;
  opt.allow_introduction = false;

  std::vector<const AxiomSchema *> schemas;
  for (const auto &s : list_axioms(opt.with_negation))
    schemas.push_back(&s);

  SearchResult res;
  Seen seen[2];
  // (size + depth, arrival order): smaller terms first, FIFO among equals.
  using Key = std::pair<std::size_t, std::size_t>;
  std::map<Key, Term> open[2];
  std::size_t arrivals = 0;
  auto push = [&](int side, const Term &t, std::size_t depth) {
    open[side].emplace(Key{t.size() + depth, arrivals++}, t);
  };
  seen[0].emplace(goal.lhs, Visit{goal.lhs, {}, 0, true});
  seen[1].emplace(goal.rhs, Visit{goal.rhs, {}, 0, true});
  push(0, goal.lhs, 0);
  push(1, goal.rhs, 0);

  std::optional<Term> meet;
  if (goal.lhs == goal.rhs)
    meet = goal.lhs;

  while (!meet) {
    if (open[0].empty() && open[1].empty()) {
      res.stop_reason = "exhausted";
      break;
    }
    if (Clock::now() > deadline) {
      res.stop_reason = "timeout";
      break;
    }
    if (seen[0].size() + seen[1].size() > budget.max_states) {
      res.stop_reason = "budget";
      break;
    }
    int side = open[1].empty() || (!open[0].empty() && open[0].size() <= open[1].size()) ? 0 : 1;
    auto it = open[side].begin();
    Term t = it->second;
    open[side].erase(it);
    std::size_t d = seen[side].at(t).depth;
    if (d >= budget.max_steps)
      continue;
    for (auto &rw : rewrites(t, schemas, opt)) {
      if (rw.result.size() > budget.max_term_size || seen[side].count(rw.result))
        continue;
      auto other = seen[1 - side].find(rw.result);
      if (other != seen[1 - side].end() && other->second.depth + d + 1 > budget.max_steps)
        continue;
      seen[side].emplace(rw.result, Visit{t, rw.step, d + 1, false});
      if (other != seen[1 - side].end()) {
        meet = rw.result;
        break;
      }
      push(side, rw.result, d + 1);
    }
  }
  res.states = seen[0].size() + seen[1].size();
  if (!meet)
    return res;

  PastingProof proof{goal, {}};
  std::vector<RewriteStep> fwd;
  chain_to_root(seen[0], *meet, fwd);
  std::reverse(fwd.begin(), fwd.end());
  proof.steps = fwd;
  std::vector<RewriteStep> bwd;
  auto terms = chain_to_root(seen[1], *meet, bwd);
  // terms[k] came from terms[k+1] by bwd[k]; walk it back toward the goal.
  for (std::size_t k = 0; k < bwd.size(); ++k) {
    auto back = find_step(terms[k], terms[k + 1], bwd[k].schema, kernel);
    if (!back)
      throw Error("search could not reverse step " + to_string(bwd[k]));
    proof.steps.push_back(*back);
  }
  ProofCheck check = verify_proof(proof, kernel);
  if (!check.ok)
    throw Error("search produced a rejected certificate: " + check.reason);
  res.proof = std::move(proof);
  res.stop_reason.clear();
  return res;
}

} // namespace duoidal
