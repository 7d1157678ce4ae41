#pragma once

#include "duoidal/equation.hpp"
#include "duoidal/object.hpp"
#include "duoidal/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace duoidal {

/// A finite thin model: a poset with two monotone monoid structures. A
/// morphism x --> y exists iff leq(x, y). Elements are indices into
/// `carrier`, which keeps the file's order.
struct ThinModel {
  std::string name;
  std::vector<std::string> carrier;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> tens;
  std::vector<std::vector<int>> par;
  int unit_tens = 0;
  int unit_par = 0;
  std::optional<std::vector<int>> neg;

  int size() const { return static_cast<int>(carrier.size()); }
  int element(const std::string &name) const;
};

/// Parses and validates the line format
///   carrier a b ...   leq x y   unit_tens x   unit_par x
///   tens x y z        par x y z neg x y       # comment
/// Throws ParseError on malformed lines and ModelError naming a witness
/// when an order or table law fails.
ThinModel parse_model(std::string_view text, const std::string &name = "model");
ThinModel load_model(const std::string &path);

/// Models shipped with the library, sorted by name.
std::vector<std::string> bundled_model_names();
ThinModel bundled_model(const std::string &name);
/// The shipped models expected to pass every check.
std::vector<std::string> default_models();

struct FamilyCheck {
  std::string family;
  bool ok = true;
  std::size_t checked = 0;
  /// First failing tuple, as element indices.
  std::vector<int> witness;
  std::string detail;
};

struct ModelCheckReport {
  std::vector<FamilyCheck> families;
  bool ok() const;
};

/// Interchange for all tuples in carrier order, then R * R <= R and I <= R.
ModelCheckReport check_duoidal(const ThinModel &m);

/// Generator name -> element.
using Env = std::map<std::string, int>;

int eval_object(const ThinModel &m, const Obj &o, const Env &env);

struct Denotation {
  int dom = 0;
  int cod = 0;
};

/// Endpoints of `t`. Throws ModelError on an unbound generator, a missing
/// negation table, or a subterm whose endpoints are not related.
Denotation eval_term(const ThinModel &m, const Term &t, const Env &env);

/// Elements a with (R * a) * R <= a.
std::vector<int> enumerate_bimodules(const ThinModel &m);

struct EquationVerdict {
  bool ok = true;
  std::size_t assignments = 0;
  /// First failing assignment and the reason.
  Env witness;
  std::string detail;
};

/// Both sides denote under `env`.
EquationVerdict check_equation_in_model(const ThinModel &m, const Equation &eq, const Env &env);

/// Both sides denote under every assignment of the equation's generators to
/// bimodule elements, in carrier order.
EquationVerdict check_equation_all(const ThinModel &m, const Equation &eq);

std::string element_tuple(const ThinModel &m, const std::vector<int> &xs);

} // namespace duoidal
