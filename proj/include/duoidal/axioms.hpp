#pragma once

#include "duoidal/equation.hpp"
#include "duoidal/object.hpp"
#include "duoidal/term.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace duoidal {

enum class VarKind { Object, Morphism };

/// Schema metavariable. Object variables occur in patterns as generators
/// named after the variable; morphism variables occur as gen(name, dom, cod)
/// where dom and cod are object patterns.
struct MetaVar {
  std::string name;
  VarKind kind = VarKind::Object;
  Obj dom = Obj::unit_tens();
  Obj cod = Obj::unit_tens();
};

enum class SchemaRole {
  Reflexivity, ///< the trivial t = t pseudo-schema
  Axiom,       ///< part of the theory
  Lemma,       ///< derived law; its instances are separate proof obligations
  Negation,    ///< only present when negation is enabled
};

struct AxiomSchema {
  std::string id;
  std::vector<MetaVar> vars;
  Term lhs;
  Term rhs;
  SchemaRole role = SchemaRole::Axiom;
  /// Free-form provenance flag, e.g. "reconstructed".
  std::string note;
  /// Interchange of composition with a tensor. Matching such a schema never
  /// pads with identities on R, which would only rewrite a term to itself.
  bool interchange = false;

  const MetaVar *var(const std::string &name) const;
};

/// Assignment of metavariables. Values are kept normalized.
struct Subst {
  std::map<std::string, Obj> objects;
  std::map<std::string, Term> morphisms;

  bool contains(const std::string &name) const {
    return objects.count(name) || morphisms.count(name);
  }
  friend bool operator==(const Subst &, const Subst &) = default;
};

enum class Direction { Forward, Backward };

inline Direction flip(Direction d) {
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

/// The fixed catalogue, in tie-breaking order. Negation snakes are appended
/// only when `with_negation` is set.
const std::vector<AxiomSchema> &list_axioms(bool with_negation = false);

/// Catalogue lookup by id (negation schemas included); nullptr if unknown.
const AxiomSchema *find_axiom(const std::string &id);

/// Index of a schema in the full catalogue, used for tie-breaking.
std::size_t catalogue_index(const std::string &id);

/// Instance of `s` under `subst`, type-checked and normalized. Throws Error
/// on a missing metavariable and TypeError when the instance is ill-typed
/// or a morphism value does not have its declared type.
Equation instantiate(const AxiomSchema &s, const Subst &subst);

/// One side of an instance, unchecked. Throws on a missing metavariable.
Term instantiate_side(const AxiomSchema &s, const Term &side, const Subst &subst);

/// Substitutions (extending `seed`) under which `pattern` may match
/// `target`, at most `limit` of them. Candidates are not verified; callers
/// compare the instantiated pattern with the target.
std::vector<Subst> match_pattern(const AxiomSchema &s, const Term &pattern,
                                 const Term &target, const Subst &seed,
                                 std::size_t limit = 16);

struct AxiomMatch {
  std::string schema_id;
  Subst subst;
  Direction direction;
};

/// First catalogue schema (in catalogue order, forward before backward)
/// having `eq` as an instance.
std::optional<AxiomMatch> match_axiom(const Equation &eq, bool with_negation = true);

/// `{A=X, f=...}` in the term grammar.
std::string to_string(const Subst &s);

/// `id : dom ==> cod : lhs = rhs`, sides instantiated at the identity
/// substitution.
std::string describe(const AxiomSchema &s);

} // namespace duoidal
