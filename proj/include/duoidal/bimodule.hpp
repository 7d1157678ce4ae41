#pragma once

#include "duoidal/equation.hpp"
#include "duoidal/object.hpp"
#include "duoidal/term.hpp"

#include <string>
#include <vector>

namespace duoidal {

/// An R-bimodule: a carrier with a two-sided action (R * X) * R --> X.
struct BimoduleSym {
  Obj carrier;
  Term action;
};

/// Bimodule with the free action symbol act[X].
BimoduleSym free_bimodule(const Obj &carrier);

/// The structure a carrier gets by default: R acts on itself through mu,
/// tensors and pars of bimodules carry the induced actions, anything else
/// gets the free action symbol. A Par list is split as first % rest.
BimoduleSym bimodule_of(const Obj &carrier);

/// Replaces every action(X) pattern node by the action of bimodule_of(X).
Term expand_actions(const Term &t);

/// Action on A * B: shuffle into (R * A) * (B * R), insert units, apply eta
/// on both inner sides and act componentwise.
Term induced_tens_action(const BimoduleSym &a, const BimoduleSym &b);

/// Which side the interchange reaches first when building the action on
/// A % B.
enum class InterchangeOrder { LeftFirst, RightFirst };

/// Action on A % B: two middle-four interchanges spread R over both parts,
/// then each part acts.
Term induced_par_action(const BimoduleSym &a, const BimoduleSym &b,
                        InterchangeOrder order = InterchangeOrder::LeftFirst);

/// The interchange part of `induced_par_action` alone:
/// (R * (A % B)) * R --> ((R * A) * R) % ((R * B) * R).
Term par_action_interchange(const Obj &a, const Obj &b, InterchangeOrder order);

/// R * X --> X, acting with eta on the right.
Term left_action(const BimoduleSym &x);
/// X * R --> X, acting with eta on the left.
Term right_action(const BimoduleSym &x);

/// d^l : A * (B % C) --> (A * B) % C.
Term build_dl(const BimoduleSym &a, const BimoduleSym &b, const BimoduleSym &c);
/// d^r : (B % C) * A --> B % (C * A).
Term build_dr(const BimoduleSym &b, const BimoduleSym &c, const BimoduleSym &a);

/// f o domAction = codAction o ((1 * f) * 1). Throws TypeError when the
/// actions' carriers are not f's endpoints.
Equation hom_condition(const Term &f, const Term &dom_action,
                       const Term &cod_action);

struct NamedEquation {
  std::string id;
  Equation eq;
};

/// Unit and associativity laws of the action, then the one-sided corollary
/// lact o (1 * lact) o a = lact o (mu * 1).
std::vector<NamedEquation> bimodule_obligations(const BimoduleSym &x);

// Sides of the bimodule laws for an arbitrary action term, normalized but not
// type-checked so the axiom catalogue can build them over action(X) patterns.
Equation bimod_unit_law(const BimoduleSym &x);
Equation bimod_assoc_law(const BimoduleSym &x);
Equation bimod_corollary_law(const BimoduleSym &x);
Equation bimod_corollary_right_law(const BimoduleSym &x);

} // namespace duoidal
