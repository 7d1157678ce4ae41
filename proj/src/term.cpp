#include "duoidal/term.hpp"

#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace duoidal {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Term Term::make(TermKind kind, std::vector<Obj> objects,
                std::vector<Term> children, std::string name, bool inverse) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->inverse = inverse;
  n->name = std::move(name);
  n->objects = std::move(objects);
  n->children = std::move(children);
  std::size_t h = mix(0x7a3f11, static_cast<std::size_t>(kind));
  h = mix(h, inverse ? 1 : 2);
  h = mix(h, std::hash<std::string>{}(n->name));
  for (const auto &o : n->objects) {
    h = mix(h, o.hash());
    n->size += 1;
  }
  for (const auto &c : n->children) {
    h = mix(h, c.hash());
    n->size += c.size();
  }
  n->hash = h;
  return Term(std::move(n));
}

Term Term::id(Obj o) { return make(TermKind::Id, {std::move(o)}, {}); }
Term Term::comp(Term after, Term before) {
  return make(TermKind::Comp, {}, {std::move(after), std::move(before)});
}
Term Term::comp(std::vector<Term> factors) {
  return make(TermKind::Comp, {}, std::move(factors));
}
Term Term::tens(Term f, Term g) {
  return make(TermKind::Tens, {}, {std::move(f), std::move(g)});
}
Term Term::par(Term f, Term g) {
  return make(TermKind::Par, {}, {std::move(f), std::move(g)});
}
Term Term::par(std::vector<Term> parts) {
  return make(TermKind::Par, {}, std::move(parts));
}
Term Term::assoc(Obj x, Obj y, Obj z, bool inverse) {
  return make(TermKind::Assoc, {std::move(x), std::move(y), std::move(z)}, {},
              {}, inverse);
}
Term Term::lunit(Obj x, bool inverse) {
  return make(TermKind::LUnit, {std::move(x)}, {}, {}, inverse);
}
Term Term::runit(Obj x, bool inverse) {
  return make(TermKind::RUnit, {std::move(x)}, {}, {}, inverse);
}
Term Term::mid4(Obj a, Obj b, Obj c, Obj d) {
  return make(TermKind::Mid4,
              {std::move(a), std::move(b), std::move(c), std::move(d)}, {});
}
Term Term::mu() {
  static const Term t = make(TermKind::Mu, {}, {});
  return t;
}
Term Term::eta() {
  static const Term t = make(TermKind::Eta, {}, {});
  return t;
}
Term Term::gamma(Obj a) { return make(TermKind::Gamma, {std::move(a)}, {}); }
Term Term::tau(Obj a) { return make(TermKind::Tau, {std::move(a)}, {}); }
Term Term::act(Obj a) { return make(TermKind::Act, {std::move(a)}, {}); }
Term Term::free_gen(std::string name, Obj dom, Obj cod) {
  return make(TermKind::FreeGen, {std::move(dom), std::move(cod)}, {},
              std::move(name));
}
Term Term::action_of(Obj carrier) {
  return make(TermKind::ActionOf, {std::move(carrier)}, {});
}

Term Term::with_children(std::vector<Term> children) const {
  return make(kind(), objects(), std::move(children), name(), inverse());
}

Term Term::with_objects(std::vector<Obj> objects) const {
  return make(kind(), std::move(objects), children(), name(), inverse());
}

bool operator==(const Term &a, const Term &b) {
  if (a.node_ == b.node_)
    return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() ||
      a.inverse() != b.inverse() || a.name() != b.name())
    return false;
  return a.objects() == b.objects() && a.children() == b.children();
}

Typing infer_type(const Term &t) {
  const Obj I = Obj::unit_tens();
  const Obj R = Obj::unit_par();
  auto swap_if = [&](Obj d, Obj c) {
    return t.inverse() ? Typing{std::move(c), std::move(d)}
                       : Typing{std::move(d), std::move(c)};
  };
  switch (t.kind()) {
  case TermKind::Id: {
    Obj o = normalize_par(t.object(0));
    return {o, o};
  }
  case TermKind::Comp: {
    if (t.children().empty())
      throw TypeError("empty composite");
    std::vector<Typing> ty;
    ty.reserve(t.children().size());
    for (const auto &f : t.children())
      ty.push_back(infer_type(f));
    for (std::size_t i = 0; i + 1 < ty.size(); ++i) {
      if (ty[i].dom != ty[i + 1].cod)
        throw TypeError("composite endpoints mismatch in '" + to_string(t) +
                        "': '" + to_string(t.child(i)) + "' expects " +
                        to_string(ty[i].dom) + " but '" +
                        to_string(t.child(i + 1)) + "' yields " +
                        to_string(ty[i + 1].cod));
    }
    return {ty.back().dom, ty.front().cod};
  }
  case TermKind::Tens: {
    Typing f = infer_type(t.child(0));
    Typing g = infer_type(t.child(1));
    return {Obj::tens(f.dom, g.dom), Obj::tens(f.cod, g.cod)};
  }
  case TermKind::Par: {
    std::vector<Obj> d, c;
    for (const auto &p : t.children()) {
      Typing pt = infer_type(p);
      d.push_back(pt.dom);
      c.push_back(pt.cod);
    }
    return {Obj::par(std::move(d)), Obj::par(std::move(c))};
  }
  case TermKind::Assoc: {
    const Obj &x = t.object(0), &y = t.object(1), &z = t.object(2);
    return swap_if(Obj::tens(Obj::tens(x, y), z),
                   Obj::tens(x, Obj::tens(y, z)));
  }
  case TermKind::LUnit:
    return swap_if(Obj::tens(I, t.object(0)), normalize_par(t.object(0)));
  case TermKind::RUnit:
    return swap_if(Obj::tens(t.object(0), I), normalize_par(t.object(0)));
  case TermKind::Mid4: {
    const Obj &a = t.object(0), &b = t.object(1), &c = t.object(2),
              &d = t.object(3);
    return {Obj::tens(Obj::par(a, b), Obj::par(c, d)),
            Obj::par(Obj::tens(a, c), Obj::tens(b, d))};
  }
  case TermKind::Mu:
    return {Obj::tens(R, R), R};
  case TermKind::Eta:
    return {I, R};
  case TermKind::Gamma:
    return {Obj::tens(t.object(0), Obj::neg(t.object(0))), R};
  case TermKind::Tau:
    return {I, Obj::par(Obj::neg(t.object(0)), normalize_par(t.object(0)))};
  case TermKind::Act:
    return {Obj::tens(Obj::tens(R, t.object(0)), R), normalize_par(t.object(0))};
  case TermKind::FreeGen:
    return {normalize_par(t.object(0)), normalize_par(t.object(1))};
  case TermKind::ActionOf:
    throw TypeError("unexpanded action pattern '" + to_string(t) + "'");
  }
  throw TypeError("unknown term kind");
}

namespace {

void push_par_component(const Term &c, std::vector<Term> &out) {
  if (c.kind() == TermKind::Par) {
    for (const auto &p : c.children())
      push_par_component(p, out);
    return;
  }
  if (c.is_id()) {
    for (const auto &o : par_parts(c.object(0)))
      out.push_back(Term::id(o));
    return;
  }
  out.push_back(c);
}

} // namespace

Term normalize(const Term &t) {
  switch (t.kind()) {
  case TermKind::Id:
    return Term::id(normalize_par(t.object(0)));
  case TermKind::Comp: {
    std::vector<Term> flat;
    std::optional<Term> first_id;
    for (const auto &f : t.children()) {
      Term nf = normalize(f);
      if (nf.kind() == TermKind::Comp) {
        flat.insert(flat.end(), nf.children().begin(), nf.children().end());
      } else if (nf.is_id()) {
        if (!first_id)
          first_id = nf;
      } else {
        flat.push_back(std::move(nf));
      }
    }
    if (flat.empty())
      return *first_id;
    if (flat.size() == 1)
      return flat.front();
    return Term::comp(std::move(flat));
  }
  case TermKind::Tens: {
    Term f = normalize(t.child(0));
    Term g = normalize(t.child(1));
    if (f.is_id() && g.is_id())
      return Term::id(Obj::tens(f.object(0), g.object(0)));
    return Term::tens(std::move(f), std::move(g));
  }
  case TermKind::Par: {
    std::vector<Term> flat;
    for (const auto &p : t.children())
      push_par_component(normalize(p), flat);
    bool all_ids = std::all_of(flat.begin(), flat.end(),
                               [](const Term &x) { return x.is_id(); });
    if (all_ids) {
      std::vector<Obj> objs;
      for (const auto &x : flat)
        objs.push_back(x.object(0));
      return Term::id(Obj::par(std::move(objs)));
    }
    if (flat.size() == 1)
      return flat.front();
    return Term::par(std::move(flat));
  }
  default: {
    if (t.objects().empty())
      return t;
    std::vector<Obj> objs;
    bool changed = false;
    for (const auto &o : t.objects()) {
      objs.push_back(normalize_par(o));
      changed = changed || objs.back() != o;
    }
    return changed ? t.with_objects(std::move(objs)) : t;
  }
  }
}

std::vector<Term> factors_of(const Term &t) {
  if (t.kind() == TermKind::Comp)
    return t.children();
  return {t};
}

namespace {

void term_gens(const Term &t, std::vector<std::string> &out) {
  for (const auto &o : t.objects())
    collect_gens(o, out);
  for (const auto &c : t.children())
    term_gens(c, out);
}

} // namespace

std::vector<std::string> object_gens(const Term &t) {
  std::vector<std::string> out;
  term_gens(t, out);
  return out;
}

const Term *subterm(const Term &t, const std::vector<std::size_t> &path) {
  const Term *cur = &t;
  for (auto i : path) {
    if (i >= cur->children().size())
      return nullptr;
    cur = &cur->children()[i];
  }
  return cur;
}

} // namespace duoidal
