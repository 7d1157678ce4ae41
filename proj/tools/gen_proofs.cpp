// Regenerates assets/proofs from tools/plans.
//
//   gen_proofs <plans-dir> <out-dir>
//
// A plan names an obligation and either a search budget or a list of
// rewrites applied from one side:
//
//   goal cs-9
//   from rhs
//   rw <schema> <fwd|bwd> {Var=value, ...}
//   at <path> <schema> <fwd|bwd> {...}
//
//   goal cs-7
//   search 12 [timeout-seconds]
#include "duoidal/cs.hpp"
#include "duoidal/error.hpp"
#include "duoidal/proof.hpp"
#include "duoidal/search.hpp"
#include "duoidal/syntax.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace duoidal;

namespace {

Subst parse_seed(const Term &at, const std::string &schema, const std::string &dir,
                 const std::string &rest) {
  std::string s = to_string(at);
  return parse_proof("prove " + s + " = " + s + "\nstep . " + schema + " " + dir + " " + rest)
      .steps[0]
      .subst;
}

std::optional<PastingProof> run_plan(const fs::path &file, std::string &goal_id) {
  std::ifstream in(file);
  std::string line;
  bool from_rhs = false;
  std::optional<Obligation> ob;
  std::optional<ProofBuilder> b;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw))
      continue;
    if (kw == "goal") {
      ls >> goal_id;
      ob = find_obligation(goal_id);
    } else if (kw == "from") {
      std::string side;
      ls >> side;
      from_rhs = side == "rhs";
    } else if (kw == "search") {
      SearchBudget budget;
      ls >> budget.max_steps;
      if (double t; ls >> t)
        budget.timeout_seconds = t;
      auto t0 = std::chrono::steady_clock::now();
      SearchResult r = search_proof(ob->eq, budget);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << goal_id << ": search " << (r.proof ? "found" : "failed (" + r.stop_reason + ")")
                << " after " << r.states << " states, " << secs << " s\n";
      return r.proof;
    } else if (kw == "rw" || kw == "at") {
      if (!b)
        b.emplace(from_rhs ? ob->eq.rhs : ob->eq.lhs);
      std::string path, schema, dir, rest;
      if (kw == "at")
        ls >> path;
      ls >> schema >> dir;
      std::getline(ls, rest);
      Subst seed = parse_seed(b->current(), schema, dir, rest);
      Direction d = dir == "fwd" ? Direction::Forward : Direction::Backward;
      if (kw == "at")
        b->rw_at(parse_path(path), schema, d, seed);
      else
        b->rw(schema, d, seed);
    } else {
      throw Error(file.string() + ": unknown keyword " + kw);
    }
  }
  if (!ob || !b)
    throw Error(file.string() + ": incomplete plan");
  const Term &target = from_rhs ? ob->eq.lhs : ob->eq.rhs;
  if (!(b->current() == target))
    throw Error(file.string() + ": plan does not reach the other side");
  PastingProof p{ob->eq, {}};
  if (from_rhs) {
    ProofBuilder fwd(ob->eq.lhs);
    fwd.append_reversed(*b);
    p.steps = fwd.steps();
  } else {
    p.steps = b->steps();
  }
  return p;
}

} // namespace

int main(int argc, char **argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_proofs <plans-dir> <out-dir>\n";
    return 2;
  }
  std::vector<fs::path> plans;
  for (auto &e : fs::directory_iterator(argv[1]))
    if (e.path().extension() == ".plan")
      plans.push_back(e.path());
  std::sort(plans.begin(), plans.end());
  int status = 0;
  for (auto &file : plans) {
    std::string id;
    try {
      auto proof = run_plan(file, id);
      if (!proof)
        continue;
      ProofCheck chk = verify_proof(*proof);
      if (!chk.ok)
        throw Error("certificate rejected at step " + std::to_string(chk.failed_step) + ": " +
                    chk.reason);
      std::ofstream out(fs::path(argv[2]) / (id + ".proof"));
      out << "# " << id << ", generated from " << file.filename().string() << "\n"
          << print_proof(*proof);
      std::cerr << id << ": " << proof->steps.size() << " steps\n";
    } catch (const std::exception &e) {
      std::cerr << file.filename().string() << ": " << e.what() << "\n";
      status = 1;
    }
  }
  return status;
}
