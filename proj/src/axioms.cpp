#include "duoidal/axioms.hpp"

#include "duoidal/bimodule.hpp"
#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace duoidal {

const MetaVar *AxiomSchema::var(const std::string &name) const {
  for (const auto &v : vars)
    if (v.name == name)
      return &v;
  return nullptr;
}

namespace {

MetaVar ov(const std::string &name) {
  MetaVar v;
  v.name = name;
  return v;
}

MetaVar mv(const std::string &name, const std::string &dom, const std::string &cod) {
  return {name, VarKind::Morphism, parse_object(dom), parse_object(cod)};
}

std::vector<MetaVar> ovs(std::initializer_list<const char *> names) {
  std::vector<MetaVar> out;
  for (const char *n : names)
    out.push_back(ov(n));
  return out;
}

AxiomSchema text_schema(std::string id, std::vector<MetaVar> vars,
                        std::string_view lhs, std::string_view rhs,
                        SchemaRole role = SchemaRole::Axiom, std::string note = {}) {
  return {std::move(id), std::move(vars), normalize(parse_term(lhs)),
          normalize(parse_term(rhs)), role, std::move(note)};
}

AxiomSchema law_schema(std::string id, std::vector<MetaVar> vars, const Equation &eq,
                       SchemaRole role, std::string note = {}) {
  return {std::move(id), std::move(vars), eq.lhs, eq.rhs, role, std::move(note)};
}

BimoduleSym pattern_bimodule(const Obj &carrier) {
  return {carrier, Term::action_of(carrier)};
}

std::vector<AxiomSchema> build_catalogue() {
  std::vector<AxiomSchema> c;
  const auto X = Obj::gen("X");
  const auto A = Obj::gen("A");
  const auto B = Obj::gen("B");
  const auto R = Obj::unit_par();

  c.push_back(text_schema("refl", {mv("f", "X", "Y"), ov("X"), ov("Y")},
                          "gen(f, X, Y)", "gen(f, X, Y)", SchemaRole::Reflexivity));

  // Monoidal structure of *.
  c.push_back(text_schema("pentagon", ovs({"A", "B", "C", "D"}),
                          "a[A,B,(C * D)] o a[(A * B),C,D]",
                          "(id[A] * a[B,C,D]) o a[A,(B * C),D] o (a[A,B,C] * id[D])"));
  c.push_back(text_schema("triangle", ovs({"A", "B"}), "(id[A] * l[B]) o a[A,I,B]",
                          "(r[A] * id[B])"));
  c.push_back(text_schema("unit-coherence", {}, "l[I]", "r[I]"));
  c.push_back(text_schema("a-inv", ovs({"A", "B", "C"}), "a'[A,B,C] o a[A,B,C]",
                          "id[((A * B) * C)]"));
  c.push_back(text_schema("a-inv'", ovs({"A", "B", "C"}), "a[A,B,C] o a'[A,B,C]",
                          "id[(A * (B * C))]"));
  c.push_back(text_schema("l-inv", ovs({"A"}), "l'[A] o l[A]", "id[(I * A)]"));
  c.push_back(text_schema("l-inv'", ovs({"A"}), "l[A] o l'[A]", "id[A]"));
  c.push_back(text_schema("r-inv", ovs({"A"}), "r'[A] o r[A]", "id[(A * I)]"));
  c.push_back(text_schema("r-inv'", ovs({"A"}), "r[A] o r'[A]", "id[A]"));

  // Bifunctoriality: interchange of composition with the two tensors.
  {
    std::vector<MetaVar> v = {mv("f", "A", "B"), mv("g", "B", "C"), mv("h", "D", "E"),
                              mv("k", "E", "F")};
    auto objs = ovs({"A", "B", "C", "D", "E", "F"});
    v.insert(v.end(), objs.begin(), objs.end());
    c.push_back(text_schema(
        "tens-interchange", v,
        "((gen(g, B, C) o gen(f, A, B)) * (gen(k, E, F) o gen(h, D, E)))",
        "(gen(g, B, C) * gen(k, E, F)) o (gen(f, A, B) * gen(h, D, E))"));
    c.push_back(text_schema(
        "par-interchange", v,
        "((gen(g, B, C) o gen(f, A, B)) % (gen(k, E, F) o gen(h, D, E)))",
        "(gen(g, B, C) % gen(k, E, F)) o (gen(f, A, B) % gen(h, D, E))"));
    c[c.size() - 2].interchange = true;
    c.back().interchange = true;
  }

  // Naturality.
  {
    std::vector<MetaVar> v = {mv("f", "A", "A2"), mv("g", "B", "B2"), mv("h", "C", "C2")};
    auto objs = ovs({"A", "B", "C", "A2", "B2", "C2"});
    v.insert(v.end(), objs.begin(), objs.end());
    const std::string f = "gen(f, A, A2)", g = "gen(g, B, B2)", h = "gen(h, C, C2)";
    c.push_back(text_schema("a-natural", v,
                            "a[A2,B2,C2] o ((" + f + " * " + g + ") * " + h + ")",
                            "(" + f + " * (" + g + " * " + h + ")) o a[A,B,C]"));
    c.push_back(text_schema("a'-natural", v,
                            "a'[A2,B2,C2] o (" + f + " * (" + g + " * " + h + "))",
                            "((" + f + " * " + g + ") * " + h + ") o a'[A,B,C]"));
    std::vector<MetaVar> u = {mv("f", "A", "A2"), ov("A"), ov("A2")};
    c.push_back(text_schema("l-natural", u, "l[A2] o (id[I] * " + f + ")",
                            f + " o l[A]"));
    c.push_back(text_schema("l'-natural", u, "l'[A2] o " + f,
                            "(id[I] * " + f + ") o l'[A]"));
    c.push_back(text_schema("r-natural", u, "r[A2] o (" + f + " * id[I])",
                            f + " o r[A]"));
    c.push_back(text_schema("r'-natural", u, "r'[A2] o " + f,
                            "(" + f + " * id[I]) o r'[A]"));
  }
  {
    std::vector<MetaVar> v = {mv("f", "A", "A2"), mv("g", "B", "B2"), mv("h", "C", "C2"),
                              mv("k", "D", "D2")};
    auto objs = ovs({"A", "B", "C", "D", "A2", "B2", "C2", "D2"});
    v.insert(v.end(), objs.begin(), objs.end());
    c.push_back(text_schema(
        "m-natural", v,
        "m[A2,B2,C2,D2] o ((gen(f, A, A2) % gen(g, B, B2)) * (gen(h, C, C2) % gen(k, D, D2)))",
        "((gen(f, A, A2) * gen(h, C, C2)) % (gen(g, B, B2) * gen(k, D, D2))) o m[A,B,C,D]"));
  }

  // Middle-four axioms.
  c.push_back(text_schema(
      "M1", ovs({"U", "V", "W", "X", "Y", "Z"}),
      "(a[U,W,Y] % a[V,X,Z]) o m[(U * W),(V * X),Y,Z] o (m[U,V,W,X] * id[(Y % Z)])",
      "m[U,V,(W * Y),(X * Z)] o (id[(U % V)] * m[W,X,Y,Z]) o a[(U % V),(W % X),(Y % Z)]"));
  c.push_back(text_schema("M2", ovs({"U", "V", "W", "X", "Y", "Z"}),
                          "(m[U,V,X,Y] % id[(W * Z)]) o m[(U % V),W,(X % Y),Z]",
                          "(id[(U * X)] % m[V,W,Y,Z]) o m[U,(V % W),X,(Y % Z)]",
                          SchemaRole::Axiom, "codomain (W * Z) read for (W % Z)"));
  c.push_back(text_schema(
      "M3", ovs({"A", "B", "C", "D"}),
      "(id[((A * B) * C)] % (mu * id[D])) o m[(A * B),(R * R),C,D] o (m[A,R,B,R] * id[(C % D)])",
      "m[(A * B),R,C,D]"));
  c.push_back(text_schema(
      "M4", ovs({"A", "B", "C", "D"}),
      "((id[B] * mu) % id[(C * (A * D))]) o m[B,C,(R * R),(A * D)] o (id[(B % C)] * m[R,A,R,D])",
      "m[B,C,R,(A * D)]", SchemaRole::Axiom,
      "reconstructed: source (B % C) * ((R % A) * (R % D))"));
  c.push_back(text_schema("m-unit-l", ovs({"A", "B"}), "(mu % id[(A * B)]) o m[R,A,R,B]",
                          "id[(A * B)]"));
  c.push_back(text_schema("m-unit-r", ovs({"A", "B"}), "(id[(A * B)] % mu) o m[A,R,B,R]",
                          "id[(A * B)]"));

  // (R, mu, eta) is a *-monoid.
  c.push_back(text_schema("mu-assoc", {}, "mu o (mu * id[R])",
                          "mu o (id[R] * mu) o a[R,R,R]"));
  c.push_back(text_schema("mu-unit-l", {}, "mu o (eta * id[R])", "l[R]"));
  c.push_back(text_schema("mu-unit-r", {}, "mu o (id[R] * eta)", "r[R]"));

  // Bimodule laws, stated for the action attached to each carrier.
  c.push_back(law_schema("bimod-unit", ovs({"X"}), bimod_unit_law(pattern_bimodule(X)),
                         SchemaRole::Axiom));
  c.push_back(law_schema("bimod-assoc", ovs({"X"}), bimod_assoc_law(pattern_bimodule(X)),
                         SchemaRole::Axiom));
  c.push_back(law_schema("bimod-corollary", ovs({"X"}),
                         bimod_corollary_law(pattern_bimodule(X)), SchemaRole::Lemma));
  c.push_back(law_schema("bimod-corollary-r", ovs({"X"}),
                         bimod_corollary_right_law(pattern_bimodule(X)), SchemaRole::Lemma));
  {
    const Obj ab_par = Obj::par(A, B);
    const Obj ab_tens = Obj::tens(A, B);
    const auto bA = pattern_bimodule(A);
    const auto bB = pattern_bimodule(B);
    auto eq = [](const Term &l, const Term &r) {
      return Equation{normalize(l), normalize(r)};
    };
    c.push_back(law_schema(
        "bimod-par-action-law", ovs({"A", "B"}),
        eq(right_action(pattern_bimodule(ab_par)),
           Term::comp(Term::par(right_action(bA), right_action(bB)),
                      Term::mid4(A, B, R, R))),
        SchemaRole::Lemma));
    c.push_back(law_schema(
        "bimod-par-action-law-l", ovs({"A", "B"}),
        eq(left_action(pattern_bimodule(ab_par)),
           Term::comp(Term::par(left_action(bA), left_action(bB)),
                      Term::mid4(R, R, A, B))),
        SchemaRole::Lemma));
    c.push_back(law_schema(
        "bimod-tens-action-law", ovs({"A", "B"}),
        eq(right_action(pattern_bimodule(ab_tens)),
           Term::comp(Term::tens(Term::id(A), right_action(bB)), Term::assoc(A, B, R))),
        SchemaRole::Lemma));
    c.push_back(law_schema(
        "bimod-tens-action-law-l", ovs({"A", "B"}),
        eq(left_action(pattern_bimodule(ab_tens)),
           Term::comp(Term::tens(left_action(bA), Term::id(B)),
                      Term::assoc(R, A, B, true))),
        SchemaRole::Lemma));
  }

  // Negation: the hexagon and three reconstructed mates.
  c.push_back(text_schema("neg-snake-1", ovs({"A"}),
                          "(gamma[A] % id[(R * A)]) o m[A,R,neg(A),A] o (id[A] * tau[A])",
                          "(eta * id[A]) o l'[A] o r[A]", SchemaRole::Negation));
  c.push_back(text_schema(
      "neg-snake-2", ovs({"A"}),
      "(id[(neg(A) * R)] % gamma[A]) o m[neg(A),A,R,neg(A)] o (tau[A] * id[neg(A)])",
      "(id[neg(A)] * eta) o r'[neg(A)] o l[neg(A)]", SchemaRole::Negation, "reconstructed"));
  c.push_back(text_schema(
      "neg-snake-3", ovs({"A"}),
      "(gamma[A] % id[(R * A)]) o m[A,R,neg(A),A] o (id[A] * tau[A]) o r'[A]",
      "(eta * id[A]) o l'[A]", SchemaRole::Negation, "reconstructed"));
  c.push_back(text_schema(
      "neg-snake-4", ovs({"A"}),
      "(id[(neg(A) * R)] % gamma[A]) o m[neg(A),A,R,neg(A)] o (tau[A] * id[neg(A)]) o l'[neg(A)]",
      "(id[neg(A)] * eta) o r'[neg(A)]", SchemaRole::Negation, "reconstructed"));
  return c;
}

const std::vector<AxiomSchema> &full_catalogue() {
  static const std::vector<AxiomSchema> all = build_catalogue();
  return all;
}

} // namespace

const std::vector<AxiomSchema> &list_axioms(bool with_negation) {
  static const std::vector<AxiomSchema> plain = [] {
    std::vector<AxiomSchema> out;
    for (const auto &s : full_catalogue())
      if (s.role != SchemaRole::Negation)
        out.push_back(s);
    return out;
  }();
  return with_negation ? full_catalogue() : plain;
}

const AxiomSchema *find_axiom(const std::string &id) {
  for (const auto &s : full_catalogue())
    if (s.id == id)
      return &s;
  return nullptr;
}

std::size_t catalogue_index(const std::string &id) {
  const auto &all = full_catalogue();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].id == id)
      return i;
  return all.size();
}

// ---------------------------------------------------------------------------
// Instantiation

namespace {

Obj subst_obj(const AxiomSchema &s, const Obj &o, const Subst &sub) {
  switch (o.kind()) {
  case ObjKind::Gen: {
    const MetaVar *v = s.var(o.name());
    if (!v || v->kind != VarKind::Object)
      return o;
    auto it = sub.objects.find(o.name());
    if (it == sub.objects.end())
      throw Error("missing metavariable " + o.name() + " for schema " + s.id);
    return it->second;
  }
  case ObjKind::Tens:
    return Obj::tens(subst_obj(s, o.left(), sub), subst_obj(s, o.right(), sub));
  case ObjKind::Par: {
    std::vector<Obj> parts;
    for (const auto &p : o.parts())
      parts.push_back(subst_obj(s, p, sub));
    return Obj::par(std::move(parts));
  }
  case ObjKind::Neg:
    return Obj::neg(subst_obj(s, o.inner(), sub));
  default:
    return o;
  }
}

Term subst_term(const AxiomSchema &s, const Term &t, const Subst &sub) {
  if (t.kind() == TermKind::FreeGen) {
    const MetaVar *v = s.var(t.name());
    if (v && v->kind == VarKind::Morphism) {
      auto it = sub.morphisms.find(t.name());
      if (it == sub.morphisms.end())
        throw Error("missing metavariable " + t.name() + " for schema " + s.id);
      Typing want{subst_obj(s, v->dom, sub), subst_obj(s, v->cod, sub)};
      Typing got = infer_type(it->second);
      if (got != want)
        throw TypeError("value of " + t.name() + " has type " + to_string(got.dom) +
                        " ==> " + to_string(got.cod) + ", expected " +
                        to_string(want.dom) + " ==> " + to_string(want.cod));
      return it->second;
    }
  }
  std::vector<Obj> objs;
  for (const auto &o : t.objects())
    objs.push_back(subst_obj(s, o, sub));
  std::vector<Term> kids;
  for (const auto &k : t.children())
    kids.push_back(subst_term(s, k, sub));
  Term out = t.with_objects(std::move(objs));
  return kids.empty() ? out : out.with_children(std::move(kids));
}

} // namespace

Term instantiate_side(const AxiomSchema &s, const Term &side, const Subst &subst) {
  return normalize(expand_actions(subst_term(s, side, subst)));
}

Equation instantiate(const AxiomSchema &s, const Subst &subst) {
  for (const auto &v : s.vars)
    if (!subst.contains(v.name))
      throw Error("missing metavariable " + v.name + " for schema " + s.id);
  Term l = expand_actions(subst_term(s, s.lhs, subst));
  Term r = expand_actions(subst_term(s, s.rhs, subst));
  try {
    return make_equation(l, r);
  } catch (const TypeError &e) {
    throw TypeError("ill-typed instance of " + s.id + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Matching

namespace {

using Cont = std::function<bool(const Subst &)>;

class Matcher {
public:
  explicit Matcher(const AxiomSchema &s) : s_(s) {}

  // Each returns true to stop the enumeration.
  bool obj(const Obj &p, const Obj &o, const Subst &sub, const Cont &k) const {
    switch (p.kind()) {
    case ObjKind::Gen: {
      const MetaVar *v = s_.var(p.name());
      if (!v)
        return p == o && k(sub);
      auto it = sub.objects.find(p.name());
      if (it != sub.objects.end())
        return it->second == o && k(sub);
      Subst next = sub;
      next.objects.emplace(p.name(), o);
      return k(next);
    }
    case ObjKind::Tens:
      if (o.kind() != ObjKind::Tens)
        return false;
      return obj(p.left(), o.left(), sub, [&](const Subst &s1) {
        return obj(p.right(), o.right(), s1, k);
      });
    case ObjKind::Neg:
      if (o.kind() != ObjKind::Neg)
        return false;
      return obj(p.inner(), o.inner(), sub, k);
    case ObjKind::Par:
      return obj_groups(p.parts(), 0, par_parts(o), 0, sub, k);
    default:
      return p == o && k(sub);
    }
  }

  bool term(const Term &p, const Term &t, const Subst &sub, const Cont &k) const {
    switch (p.kind()) {
    case TermKind::FreeGen: {
      const MetaVar *v = s_.var(p.name());
      if (!v || v->kind != VarKind::Morphism)
        return leaf(p, t, sub, k);
      auto it = sub.morphisms.find(p.name());
      if (it != sub.morphisms.end())
        return it->second == t && k(sub);
      std::optional<Typing> ty;
      try {
        ty = infer_type(t);
      } catch (const TypeError &) {
        return false;
      }
      Subst next = sub;
      next.morphisms.emplace(p.name(), t);
      return obj(v->dom, ty->dom, next, [&](const Subst &s1) {
        return obj(v->cod, ty->cod, s1, k);
      });
    }
    case TermKind::Id:
      if (!t.is_id())
        return false;
      return obj(p.object(0), t.object(0), sub, k);
    case TermKind::Comp: {
      std::vector<Term> tf;
      Obj end = Obj::unit_tens();
      if (t.is_id())
        end = t.object(0);
      else
        tf = factors_of(t);
      return chain(p.children(), 0, tf, 0, end, sub, k);
    }
    case TermKind::Tens:
      if (t.kind() == TermKind::Tens)
        return term(p.child(0), t.child(0), sub, [&](const Subst &s1) {
          return term(p.child(1), t.child(1), s1, k);
        });
      if (t.is_id() && t.object(0).kind() == ObjKind::Tens &&
          !(s_.interchange && only_vars(p.child(0)) && only_vars(p.child(1)))) {
        const Obj &o = t.object(0);
        return term(p.child(0), Term::id(o.left()), sub, [&](const Subst &s1) {
          return term(p.child(1), Term::id(o.right()), s1, k);
        });
      }
      return false;
    case TermKind::Par: {
      std::vector<Term> comps;
      if (t.kind() == TermKind::Par) {
        comps = t.children();
      } else if (t.is_id()) {
        for (const auto &o : par_parts(t.object(0)))
          comps.push_back(Term::id(o));
      } else {
        comps.push_back(t);
      }
      return term_groups(p.children(), 0, comps, 0, sub, k);
    }
    case TermKind::ActionOf: {
      if (bound(p.object(0), sub))
        return expanded(p, sub) == t && k(sub);
      // The carrier of an action is its codomain.
      Obj carrier = Obj::unit_tens();
      try {
        carrier = infer_type(t).cod;
      } catch (const TypeError &) {
        return false;
      }
      return obj(p.object(0), carrier, sub, [&](const Subst &s1) {
        return expanded(p, s1) == t && k(s1);
      });
    }
    default:
      return leaf(p, t, sub, k);
    }
  }

private:
  bool leaf(const Term &p, const Term &t, const Subst &sub, const Cont &k) const {
    if (p.kind() != t.kind() || p.inverse() != t.inverse() || p.name() != t.name() ||
        p.objects().size() != t.objects().size())
      return false;
    return objs(p.objects(), t.objects(), 0, sub, k);
  }

  bool objs(const std::vector<Obj> &ps, const std::vector<Obj> &os, std::size_t i,
            const Subst &sub, const Cont &k) const {
    if (i == ps.size())
      return k(sub);
    return obj(ps[i], os[i], sub, [&](const Subst &s1) { return objs(ps, os, i + 1, s1, k); });
  }

  bool bound(const Obj &o, const Subst &sub) const {
    std::vector<std::string> gens;
    collect_gens(o, gens);
    for (const auto &g : gens) {
      const MetaVar *v = s_.var(g);
      if (v && !sub.objects.count(g))
        return false;
    }
    return true;
  }

  Term expanded(const Term &p, const Subst &sub) const {
    return instantiate_side(s_, p, sub);
  }

  bool only_vars(const Term &p) const {
    if (p.kind() == TermKind::Comp) {
      for (const auto &c : p.children())
        if (!only_vars(c))
          return false;
      return true;
    }
    return is_var(p);
  }

  bool is_var(const Term &p) const {
    if (p.kind() != TermKind::FreeGen)
      return false;
    const MetaVar *v = s_.var(p.name());
    return v && v->kind == VarKind::Morphism;
  }

  // Distributes Par-list parts over pattern parts; a pattern part may take
  // an empty group (standing for R).
  bool obj_groups(const std::vector<Obj> &ps, std::size_t i, const std::vector<Obj> &os,
                  std::size_t j, const Subst &sub, const Cont &k) const {
    if (i == ps.size())
      return j == os.size() && k(sub);
    for (std::size_t len = 0; j + len <= os.size(); ++len) {
      std::vector<Obj> group(os.begin() + j, os.begin() + j + len);
      Obj g = Obj::par(std::move(group));
      if (obj(ps[i], g, sub, [&](const Subst &s1) {
            return obj_groups(ps, i + 1, os, j + len, s1, k);
          }))
        return true;
    }
    return false;
  }

  bool term_groups(const std::vector<Term> &ps, std::size_t i, const std::vector<Term> &ts,
                   std::size_t j, const Subst &sub, const Cont &k) const {
    if (i == ps.size())
      return j == ts.size() && k(sub);
    for (std::size_t len = s_.interchange && only_vars(ps[i]) ? 1 : 0; j + len <= ts.size(); ++len) {
      Term g = len == 0   ? Term::id(Obj::unit_par())
               : len == 1 ? ts[j]
                          : normalize(Term::par(std::vector<Term>(
                                ts.begin() + j, ts.begin() + j + len)));
      if (term(ps[i], g, sub, [&](const Subst &s1) {
            return term_groups(ps, i + 1, ts, j + len, s1, k);
          }))
        return true;
    }
    return false;
  }

  // Matches pattern factors ps[i..] against target factors ts[j..]. `end`
  // is the object of an empty target chain (an identity).
  bool chain(const std::vector<Term> &ps, std::size_t i, const std::vector<Term> &ts,
             std::size_t j, const Obj &end, const Subst &sub, const Cont &k) const {
    if (i == ps.size())
      return j == ts.size() && k(sub);
    const Term &p = ps[i];
    auto rest = [&](std::size_t next_j) {
      return [&, next_j](const Subst &s1) { return chain(ps, i + 1, ts, next_j, end, s1, k); };
    };
    if (p.kind() == TermKind::ActionOf) {
      if (bound(p.object(0), sub))
        return prefix(factors_of(expanded(p, sub)), ts, j, sub, rest);
      if (j >= ts.size())
        return false;
      Obj carrier = Obj::unit_tens();
      try {
        carrier = infer_type(ts[j]).cod;
      } catch (const TypeError &) {
        return false;
      }
      return obj(p.object(0), carrier, sub, [&](const Subst &s1) {
        return prefix(factors_of(expanded(p, s1)), ts, j, s1, rest);
      });
    }
    if (is_var(p)) {
      auto it = sub.morphisms.find(p.name());
      if (it != sub.morphisms.end()) {
        const Term &val = it->second;
        return prefix(val.is_id() ? std::vector<Term>{} : factors_of(val), ts, j, sub, rest);
      }
      for (std::size_t len = 0; j + len <= ts.size(); ++len) {
        Term g = len == 0   ? Term::id(identity_object(ts, j, end))
                 : len == 1 ? ts[j]
                            : Term::comp(std::vector<Term>(ts.begin() + j,
                                                           ts.begin() + j + len));
        if (term(p, g, sub, rest(j + len)))
          return true;
      }
      return false;
    }
    if (j >= ts.size())
      return false;
    return term(p, ts[j], sub, rest(j + 1));
  }

  template <class Rest>
  bool prefix(const std::vector<Term> &want, const std::vector<Term> &ts, std::size_t j,
              const Subst &sub, const Rest &rest) const {
    if (j + want.size() > ts.size())
      return false;
    for (std::size_t x = 0; x < want.size(); ++x)
      if (want[x] != ts[j + x])
        return false;
    return rest(j + want.size())(sub);
  }

  static Obj identity_object(const std::vector<Term> &ts, std::size_t j, const Obj &end) {
    try {
      if (j < ts.size())
        return infer_type(ts[j]).cod;
      if (j > 0)
        return infer_type(ts[j - 1]).dom;
    } catch (const TypeError &) {
    }
    return end;
  }

  const AxiomSchema &s_;
};

} // namespace

std::vector<Subst> match_pattern(const AxiomSchema &s, const Term &pattern,
                                 const Term &target, const Subst &seed,
                                 std::size_t limit) {
  std::vector<Subst> out;
  Matcher m(s);
  auto collect = [&](const Subst &sub) {
    return m.term(pattern, target, sub, [&](const Subst &full) {
      if (std::find(out.begin(), out.end(), full) == out.end())
        out.push_back(full);
      return out.size() >= limit;
    });
  };
  // Seeded morphisms fix the object variables of their declared types.
  std::vector<std::pair<const MetaVar *, Typing>> typed;
  for (const auto &[name, value] : seed.morphisms) {
    const MetaVar *v = s.var(name);
    if (!v || v->kind != VarKind::Morphism)
      continue;
    try {
      typed.push_back({v, infer_type(value)});
    } catch (const TypeError &) {
      return out;
    }
  }
  std::function<bool(std::size_t, const Subst &)> bind = [&](std::size_t i, const Subst &sub) {
    if (i == typed.size())
      return collect(sub);
    return m.obj(typed[i].first->dom, typed[i].second.dom, sub, [&](const Subst &s1) {
      return m.obj(typed[i].first->cod, typed[i].second.cod, s1,
                   [&](const Subst &s2) { return bind(i + 1, s2); });
    });
  };
  bind(0, seed);
  return out;
}

std::optional<AxiomMatch> match_axiom(const Equation &eq, bool with_negation) {
  for (const auto &s : list_axioms(with_negation)) {
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const Term &from = d == Direction::Forward ? s.lhs : s.rhs;
      const Term &to = d == Direction::Forward ? s.rhs : s.lhs;
      for (const auto &sub : match_pattern(s, from, eq.lhs, {}, 64)) {
        // Variables occurring only on the other side are bound by matching
        // that side against the right-hand term.
        for (const auto &full : match_pattern(s, to, eq.rhs, sub, 64)) {
          try {
            Equation inst = instantiate(s, full);
            Equation oriented = d == Direction::Forward
                                    ? inst
                                    : Equation{inst.rhs, inst.lhs};
            if (oriented == eq)
              return AxiomMatch{s.id, full, d};
          } catch (const Error &) {
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::string to_string(const Subst &s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto &[k, v] : s.objects) {
    os << (first ? "" : ", ") << k << "=" << to_string(v);
    first = false;
  }
  for (const auto &[k, v] : s.morphisms) {
    os << (first ? "" : ", ") << k << "=" << to_string(v);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string describe(const AxiomSchema &s) {
  Subst identity;
  for (const auto &v : s.vars) {
    if (v.kind == VarKind::Object)
      identity.objects.emplace(v.name, Obj::gen(v.name));
  }
  for (const auto &v : s.vars) {
    if (v.kind == VarKind::Morphism)
      identity.morphisms.emplace(v.name, Term::free_gen(v.name, subst_obj(s, v.dom, identity),
                                                        subst_obj(s, v.cod, identity)));
  }
  Equation eq = instantiate(s, identity);
  Typing ty = type_of(eq);
  return s.id + " : " + to_string(ty.dom) + " ==> " + to_string(ty.cod) + " : " +
         to_string(eq.lhs) + " = " + to_string(eq.rhs);
}

} // namespace duoidal
