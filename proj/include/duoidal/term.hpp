#pragma once

#include "duoidal/object.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace duoidal {

enum class TermKind : std::uint8_t {
  Id,
  Comp,
  Tens,
  Par,
  Assoc,
  LUnit,
  RUnit,
  Mid4,
  Mu,
  Eta,
  Gamma,
  Tau,
  Act,
  FreeGen,
  // Pattern-only: the two-sided bimodule action of a carrier, expanded
  // before a pattern becomes a term.
  ActionOf,
};

/// Morphism term. Immutable and cheap to copy.
///
/// `Comp` holds its factors outermost first: comp(g, f) is g o f and has
/// factors {g, f}. After `normalize`, composites are flat with no identity
/// factors, and `Par` is an n-ary flat list without identities on R.
class Term {
public:
  static Term id(Obj o);
  static Term comp(Term after, Term before);
  static Term comp(std::vector<Term> factors);
  static Term tens(Term f, Term g);
  static Term par(Term f, Term g);
  static Term par(std::vector<Term> parts);
  static Term assoc(Obj x, Obj y, Obj z, bool inverse = false);
  static Term lunit(Obj x, bool inverse = false);
  static Term runit(Obj x, bool inverse = false);
  static Term mid4(Obj a, Obj b, Obj c, Obj d);
  static Term mu();
  static Term eta();
  static Term gamma(Obj a);
  static Term tau(Obj a);
  static Term act(Obj a);
  static Term free_gen(std::string name, Obj dom, Obj cod);
  static Term action_of(Obj carrier);

  TermKind kind() const { return node_->kind; }
  const std::vector<Term> &children() const { return node_->children; }
  const Term &child(std::size_t i) const { return node_->children.at(i); }
  const std::vector<Obj> &objects() const { return node_->objects; }
  const Obj &object(std::size_t i) const { return node_->objects.at(i); }
  const std::string &name() const { return node_->name; }
  bool inverse() const { return node_->inverse; }

  bool is_id() const { return kind() == TermKind::Id; }
  bool is_pattern_macro() const { return kind() == TermKind::ActionOf; }

  /// Same node with its children replaced.
  Term with_children(std::vector<Term> children) const;
  /// Same node with its object arguments replaced.
  Term with_objects(std::vector<Obj> objects) const;

  std::size_t hash() const { return node_->hash; }
  /// Node count, counting object expressions as one node each.
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Term &a, const Term &b);
  friend bool operator!=(const Term &a, const Term &b) { return !(a == b); }

private:
  struct Node {
    TermKind kind;
    bool inverse = false;
    std::string name;
    std::vector<Obj> objects;
    std::vector<Term> children;
    std::size_t hash = 0;
    std::size_t size = 1;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(TermKind kind, std::vector<Obj> objects,
                   std::vector<Term> children, std::string name = {},
                   bool inverse = false);

  std::shared_ptr<const Node> node_;
};

struct Typing {
  Obj dom = Obj::unit_tens();
  Obj cod = Obj::unit_tens();
  friend bool operator==(const Typing &, const Typing &) = default;
};

/// Domain and codomain, both %-normalized. Throws TypeError naming the
/// offending sub-term.
Typing infer_type(const Term &t);

/// Canonical form modulo %-strictness, associativity and unit laws of
/// composition, and functoriality of the tensors on identities. Requires a
/// well-typed term. Idempotent.
Term normalize(const Term &t);

/// Composite factors of `t` (a non-composite is a one-factor chain).
std::vector<Term> factors_of(const Term &t);

/// Generator names in objects of `t`, in first-occurrence order.
std::vector<std::string> object_gens(const Term &t);

/// Sub-term addressed by `path`; nullptr when the path is invalid.
const Term *subterm(const Term &t, const std::vector<std::size_t> &path);

struct TermHash {
  std::size_t operator()(const Term &t) const { return t.hash(); }
};

} // namespace duoidal
