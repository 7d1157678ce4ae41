#pragma once

#include "duoidal/model.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace duoidal {

enum class Status { Proved, ModelVerified, Failed, Unknown };

std::string to_string(Status s);

struct ObligationResult {
  std::string id;
  Status status = Status::Unknown;
  /// Proof length, schemas used, model coverage or the failing witness.
  std::string detail;
  double seconds = 0;
  /// Proved by a fresh search during this run.
  bool searched = false;
};

struct VerificationReport {
  std::vector<ObligationResult> results;

  /// No obligation failed.
  bool ok() const;
  /// One aligned line per obligation: "<status>: <id>  <detail>". Timings
  /// are printed only on request so that plain reports are reproducible.
  std::string text(bool timings = false) const;
  /// id, status, detail separated by tabs, with a header line.
  std::string tsv(bool timings = false) const;
};

struct VerifyOptions {
  std::vector<ThinModel> models;
  bool with_negation = false;
  /// Step budget for obligations that are re-proved by search.
  std::size_t budget = 12;
};

/// Checks every registered obligation: bundled certificates through the
/// kernel, search where requested, then every model. Model families come
/// last, in model order.
VerificationReport verify_all(const VerifyOptions &opt);

} // namespace duoidal
