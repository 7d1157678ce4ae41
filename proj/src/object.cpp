#include "duoidal/object.hpp"

#include <algorithm>
#include <functional>

namespace duoidal {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Obj Obj::make(ObjKind kind, std::string name, std::vector<Obj> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->children = std::move(children);
  std::size_t h = mix(0x51ed2701, static_cast<std::size_t>(kind));
  h = mix(h, std::hash<std::string>{}(n->name));
  for (const auto &c : n->children) {
    h = mix(h, c.hash());
    n->size += c.size();
  }
  n->hash = h;
  return Obj(std::move(n));
}

Obj Obj::unit_tens() {
  static const Obj i = make(ObjKind::UnitTens, "", {});
  return i;
}

Obj Obj::unit_par() {
  static const Obj r = make(ObjKind::UnitPar, "", {});
  return r;
}

Obj Obj::gen(std::string name) { return make(ObjKind::Gen, std::move(name), {}); }

Obj Obj::raw_tens(Obj left, Obj right) {
  return make(ObjKind::Tens, "", {std::move(left), std::move(right)});
}

Obj Obj::tens(Obj left, Obj right) {
  return raw_tens(normalize_par(left), normalize_par(right));
}

Obj Obj::raw_par(std::vector<Obj> parts) {
  return make(ObjKind::Par, "", std::move(parts));
}

Obj Obj::par(std::vector<Obj> parts) { return normalize_par(raw_par(std::move(parts))); }

Obj Obj::par(Obj left, Obj right) { return par(std::vector<Obj>{std::move(left), std::move(right)}); }

Obj Obj::neg(Obj inner) { return make(ObjKind::Neg, "", {normalize_par(inner)}); }

bool operator==(const Obj &a, const Obj &b) {
  if (a.node_ == b.node_)
    return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.name() != b.name())
    return false;
  return a.children() == b.children();
}

namespace {

void flatten_into(const Obj &o, std::vector<Obj> &out) {
  switch (o.kind()) {
  case ObjKind::UnitPar:
    return;
  case ObjKind::Par:
    for (const auto &p : o.parts())
      flatten_into(p, out);
    return;
  default:
    out.push_back(normalize_par(o));
  }
}

} // namespace

Obj normalize_par(const Obj &o) {
  switch (o.kind()) {
  case ObjKind::UnitTens:
  case ObjKind::UnitPar:
  case ObjKind::Gen:
    return o;
  case ObjKind::Tens: {
    Obj l = normalize_par(o.left());
    Obj r = normalize_par(o.right());
    if (l == o.left() && r == o.right())
      return o;
    return Obj::raw_tens(std::move(l), std::move(r));
  }
  case ObjKind::Neg: {
    Obj i = normalize_par(o.inner());
    return i == o.inner() ? o : Obj::neg(std::move(i));
  }
  case ObjKind::Par: {
    std::vector<Obj> flat;
    for (const auto &p : o.parts())
      flatten_into(p, flat);
    if (flat.empty())
      return Obj::unit_par();
    if (flat.size() == 1)
      return flat.front();
    if (flat == o.parts())
      return o;
    return Obj::raw_par(std::move(flat));
  }
  }
  return o;
}

std::vector<Obj> par_parts(const Obj &o) {
  std::vector<Obj> out;
  flatten_into(o, out);
  return out;
}

void collect_gens(const Obj &o, std::vector<std::string> &out) {
  if (o.kind() == ObjKind::Gen) {
    if (std::find(out.begin(), out.end(), o.name()) == out.end())
      out.push_back(o.name());
    return;
  }
  for (const auto &c : o.children())
    collect_gens(c, out);
}

} // namespace duoidal
