#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace duoidal {

enum class ObjKind : std::uint8_t { UnitTens, UnitPar, Gen, Tens, Par, Neg };

/// Object expression. Immutable and cheap to copy.
///
/// `I` is the unit of the non-strict tensor `*`; `R` is the unit of the
/// strict tensor `%`. The smart constructors (`tens`, `par`, `neg`) always
/// return objects in %-normal form: Par lists are flat, never contain R and
/// have at least two parts. `raw_par` builds an arbitrary, possibly
/// un-normalized Par node and exists for tests of `normalize_par`.
class Obj {
public:
  static Obj unit_tens();
  static Obj unit_par();
  static Obj gen(std::string name);
  static Obj tens(Obj left, Obj right);
  static Obj par(Obj left, Obj right);
  static Obj par(std::vector<Obj> parts);
  static Obj neg(Obj inner);
  static Obj raw_tens(Obj left, Obj right);
  static Obj raw_par(std::vector<Obj> parts);

  ObjKind kind() const { return node_->kind; }
  const std::string &name() const { return node_->name; }
  const std::vector<Obj> &children() const { return node_->children; }
  const Obj &left() const { return node_->children.at(0); }
  const Obj &right() const { return node_->children.at(1); }
  const Obj &inner() const { return node_->children.at(0); }
  const std::vector<Obj> &parts() const { return node_->children; }

  bool is_unit_tens() const { return kind() == ObjKind::UnitTens; }
  bool is_unit_par() const { return kind() == ObjKind::UnitPar; }

  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Obj &a, const Obj &b);
  friend bool operator!=(const Obj &a, const Obj &b) { return !(a == b); }

private:
  struct Node {
    ObjKind kind;
    std::string name;
    std::vector<Obj> children;
    std::size_t hash = 0;
    std::size_t size = 1;
  };
  explicit Obj(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Obj make(ObjKind kind, std::string name, std::vector<Obj> children);

  std::shared_ptr<const Node> node_;
};

/// %-strictness normal form: flattens nested Par, drops R, collapses the
/// empty list to R and singletons to their element. Idempotent.
Obj normalize_par(const Obj &o);

/// Parts of `o` viewed as a %-list: R gives {}, a Par its parts, anything
/// else {o}.
std::vector<Obj> par_parts(const Obj &o);

/// Generator names occurring in `o`, in first-occurrence order.
void collect_gens(const Obj &o, std::vector<std::string> &out);

struct ObjHash {
  std::size_t operator()(const Obj &o) const { return o.hash(); }
};

} // namespace duoidal
