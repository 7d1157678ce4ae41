#include "duoidal/verify.hpp"

#include "duoidal/cs.hpp"
#include "duoidal/error.hpp"
#include "duoidal/proof.hpp"
#include "duoidal/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace duoidal {

std::string to_string(Status s) {
  switch (s) {
  case Status::Proved:
    return "proved";
  case Status::ModelVerified:
    return "model-verified";
  case Status::Failed:
    return "failed";
  case Status::Unknown:
    break;
  }
  return "unknown";
}

bool VerificationReport::ok() const {
  return std::none_of(results.begin(), results.end(),
                      [](const ObligationResult &r) { return r.status == Status::Failed; });
}

namespace {

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string env_str(const ThinModel &m, const Env &env) {
  std::string out;
  for (const auto &[k, v] : env)
    out += (out.empty() ? "" : ",") + k + "=" + m.carrier[v];
  return out;
}

std::string join(const std::vector<std::string> &xs, const char *sep) {
  std::string out;
  for (const auto &x : xs)
    out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string label(const ObligationResult &r) {
  return to_string(r.status) + (r.searched ? " (searched)" : "");
}

bool has_bundled(const std::string &id) {
  auto names = bundled_proof_names();
  return std::find(names.begin(), names.end(), id) != names.end();
}

// Fills r from the models. Returns false if some model refutes the equation.
bool check_models(const Obligation &o, const VerifyOptions &opt,
                  const std::vector<bool> &sound, ObligationResult &r,
                  std::vector<std::string> &covered) {
  for (std::size_t i = 0; i < opt.models.size(); ++i) {
    const ThinModel &m = opt.models[i];
    if (!sound[i] || (o.negation && !m.neg))
      continue;
    EquationVerdict v = check_equation_all(m, o.eq);
    if (!v.ok) {
      r.status = Status::Failed;
      r.detail = "model " + m.name + " at " + env_str(m, v.witness) + ": " + v.detail;
      return false;
    }
    covered.push_back(m.name + "(" + std::to_string(v.assignments) + ")");
  }
  return true;
}

} // namespace

VerificationReport verify_all(const VerifyOptions &opt) {
  using Clock = std::chrono::steady_clock;
  VerificationReport rep;
  std::vector<ModelCheckReport> checks;
  std::vector<bool> sound;
  for (const auto &m : opt.models) {
    checks.push_back(check_duoidal(m));
    sound.push_back(checks.back().ok());
  }
  KernelOptions kopt;
  kopt.with_negation = opt.with_negation;

  for (const Obligation &o : obligations(opt.with_negation)) {
    auto t0 = Clock::now();
    ObligationResult r;
    r.id = o.id;
    std::vector<std::string> notes;
    if (has_bundled(o.id)) {
      PastingProof p = bundled_proof(o.id);
      ProofCheck c = verify_proof(p, kopt);
      if (!(p.goal == o.eq)) {
        r.status = Status::Failed;
        notes.push_back("certificate proves a different equation");
      } else if (!c.ok) {
        r.status = Status::Failed;
        notes.push_back("certificate rejected at step " + std::to_string(c.failed_step) + ": " +
                        c.reason);
      } else {
        r.status = Status::Proved;
        notes.push_back("certificate " + std::to_string(p.steps.size()) + " steps [" +
                        join(schemas_used(p), ",") + "]");
      }
    }
    if (o.search_budget > 0 && r.status != Status::Failed) {
      SearchBudget b;
      b.max_steps = std::min(o.search_budget, opt.budget);
      SearchResult s = search_proof(o.eq, b, kopt);
      if (s.proof) {
        r.status = Status::Proved;
        r.searched = true;
        notes.insert(notes.begin(), "searched " + std::to_string(s.proof->steps.size()) + " steps");
      } else {
        notes.push_back("search " + s.stop_reason);
      }
    }
    std::vector<std::string> covered;
    if (r.status != Status::Failed) {
      if (!check_models(o, opt, sound, r, covered)) {
        notes.clear();
        notes.push_back(r.detail);
      } else if (!covered.empty()) {
        if (r.status != Status::Proved)
          r.status = Status::ModelVerified;
        notes.push_back("models " + join(covered, ","));
      }
    }
    if (!o.note.empty())
      notes.push_back(o.note);
    r.detail = join(notes, "; ");
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    rep.results.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < opt.models.size(); ++i) {
    for (const FamilyCheck &f : checks[i].families) {
      ObligationResult r;
      r.id = f.family;
      r.status = f.ok ? Status::ModelVerified : Status::Failed;
      r.detail = "model " + opt.models[i].name + ", checked " + std::to_string(f.checked);
      if (!f.ok)
        r.detail = "model " + opt.models[i].name + ", witness " +
                   element_tuple(opt.models[i], f.witness) + ": " + f.detail;
      rep.results.push_back(std::move(r));
    }
  }
  return rep;
}

std::string VerificationReport::text(bool timings) const {
  std::size_t w = 0;
  for (const auto &r : results)
    w = std::max(w, label(r).size() + 2 + r.id.size());
  std::string out;
  for (const auto &r : results) {
    std::string head = label(r) + ": " + r.id;
    head.resize(w, ' ');
    out += head + "  " + r.detail;
    if (timings)
      out += " (" + seconds_str(r.seconds) + " s)";
    out += "\n";
  }
  std::size_t failed = std::count_if(results.begin(), results.end(), [](const auto &r) {
    return r.status == Status::Failed;
  });
  out += std::to_string(results.size()) + " obligations, " + std::to_string(failed) + " failed\n";
  return out;
}

std::string VerificationReport::tsv(bool timings) const {
  std::string out = timings ? "id\tstatus\tdetail\tseconds\n" : "id\tstatus\tdetail\n";
  for (const auto &r : results) {
    out += r.id + "\t" + label(r) + "\t" + r.detail;
    if (timings)
      out += "\t" + seconds_str(r.seconds);
    out += "\n";
  }
  return out;
}

} // namespace duoidal
