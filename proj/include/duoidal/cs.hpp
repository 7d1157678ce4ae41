#pragma once

#include "duoidal/bimodule.hpp"
#include "duoidal/equation.hpp"
#include "duoidal/proof.hpp"

#include <map>
#include <string>
#include <vector>

namespace duoidal {

/// Objects for the letters A, B, C, D; missing letters are free generators.
using ObjectAssignment = std::map<std::string, Obj>;

/// Numbers with a shipped equation.
const std::vector<int> &cs_ids();

/// True for the numbers whose equations must come from a user file.
bool is_cs_extension_point(int id);

/// The coherence condition `id` for d^l and d^r built from the default
/// bimodule structures. Throws Error for extension points and unknown ids.
Equation cs_equation(int id, const ObjectAssignment &objs = {});

/// Reads an extension-point equation from a proof script's `prove` line.
Equation load_cs_extension(int id, std::string_view script);

/// Certificates shipped with the library, by name ("cs-9", "hom-m", ...).
std::vector<std::string> bundled_proof_names();
/// Throws Error for unknown names.
PastingProof bundled_proof(const std::string &name);
PastingProof bundled_proof(int cs_id);

/// Schema ids occurring in a proof, sorted.
std::vector<std::string> schemas_used(const PastingProof &p);

/// The four negation conditions at A: the hexagon first, then its
/// three mates.
std::vector<NamedEquation> negation_axioms(const Obj &a);

/// Homomorphism condition of m[A,B,C,D] for the induced actions.
Equation hom_m_equation(const ObjectAssignment &objs = {});

/// An equation the verifier reports on. A bundled proof with the same id is
/// its certificate; `search_budget` > 0 asks verify_all to re-run the search.
struct Obligation {
  std::string id;
  Equation eq;
  bool negation = false;
  std::size_t search_budget = 0;
  std::string note;
};

/// Registered obligations in report order.
std::vector<Obligation> obligations(bool with_negation = false);

/// Throws Error for unknown ids.
Obligation find_obligation(const std::string &id, bool with_negation = true);

} // namespace duoidal
