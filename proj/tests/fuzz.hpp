#pragma once

// Random objects, terms, axiom instances and certificate mutants.

#include "duoidal/axioms.hpp"
#include "duoidal/error.hpp"
#include "duoidal/proof.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace duoidal::fuzz {
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Obj obj(int depth = 2) {
    int k = pick(depth > 0 ? 7 : 4);
    switch (k) {
    case 0:
      return Obj::unit_par();
    case 1:
      return Obj::unit_tens();
    case 2:
    case 3:
      return Obj::gen(std::string(1, "ABCD"[pick(4)]));
    case 4:
    case 5:
      return Obj::tens(obj(depth - 1), obj(depth - 1));
    default:
      return Obj::par(obj(depth - 1), obj(depth - 1));
    }
  }

  // A map out of `x`, chosen from the structural maps that fit.
  std::optional<Term> out_of(const Obj &x) {
    std::vector<Term> c;
    if (x.kind() == ObjKind::Tens) {
      const Obj &l = x.left(), &r = x.right();
      if (l.kind() == ObjKind::Tens)
        c.push_back(Term::assoc(l.left(), l.right(), r));
      if (r.kind() == ObjKind::Tens)
        c.push_back(Term::assoc(l, r.left(), r.right(), true));
      if (l.is_unit_tens())
        c.push_back(Term::lunit(r));
      if (r.is_unit_tens())
        c.push_back(Term::runit(l));
      if (l.is_unit_par() && r.is_unit_par())
        c.push_back(Term::mu());
      auto split = [](const Obj &o) {
        if (o.kind() == ObjKind::Par)
          return std::pair{o.parts().front(),
                           Obj::par(std::vector<Obj>(o.parts().begin() + 1, o.parts().end()))};
        return std::pair{o, Obj::unit_par()};
      };
      auto [a, b] = split(l);
      auto [cc, d] = split(r);
      c.push_back(Term::mid4(a, b, cc, d));
    }
    if (x.is_unit_tens())
      c.push_back(Term::eta());
    if (c.empty())
      return std::nullopt;
    return c[pick(static_cast<int>(c.size()))];
  }

  Term term(int depth = 3) {
    Obj x = obj();
    Term t = Term::id(x);
    int k = depth > 0 ? pick(4) : 0;
    if (k == 1)
      t = Term::tens(term(depth - 1), term(depth - 1));
    else if (k == 2)
      t = Term::par(term(depth - 1), term(depth - 1));
    for (int i = pick(3); i > 0; --i) {
      auto f = out_of(infer_type(t).cod);
      if (!f)
        break;
      t = Term::comp(*f, t);
    }
    return t;
  }

  // Instance of a random schema at random objects, or nothing when the
  // choice is ill-typed.
  std::optional<std::pair<std::string, Equation>> instance(bool negation) {
    const auto &all = list_axioms(negation);
    const AxiomSchema &s = all[1 + pick(static_cast<int>(all.size()) - 1)];
    Subst sub;
    for (const auto &v : s.vars)
      if (v.kind == VarKind::Object)
        sub.objects.emplace(v.name, obj(1));
    try {
      for (const auto &v : s.vars)
        if (v.kind == VarKind::Morphism) {
          Obj d = infer_type(instantiate_side(s, Term::id(v.dom), sub)).dom;
          Obj c = infer_type(instantiate_side(s, Term::id(v.cod), sub)).dom;
          sub.morphisms.emplace(v.name, Term::free_gen(v.name, d, c));
        }
      Equation e = instantiate(s, sub);
      if (e.lhs == e.rhs)
        return std::nullopt;
      return std::pair{s.id, e};
    } catch (const Error &) {
      return std::nullopt;
    }
  }
};


// Corrupts one step of `p` (or drops it) according to `kind` mod 4.
inline PastingProof mutate(const PastingProof &p, int kind, std::mt19937 &rng) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  const auto &schemas = list_axioms(true);
  PastingProof q = p;
  std::size_t k = pick(q.steps.size());
  RewriteStep &st = q.steps[k];
  switch (kind % 4) {
  case 0: // path out of range
    st.path.push_back(9 + pick(5));
    break;
  case 1: { // another schema
    std::string s;
    do
      s = schemas[1 + pick(schemas.size() - 1)].id;
    while (s == st.schema);
    st.schema = s;
    break;
  }
  case 2: // moved to a sibling
    if (st.path.empty())
      st.path.push_back(1 + pick(3));
    else
      st.path.back() += 1 + pick(3);
    break;
  default: // dropped
    q.steps.erase(q.steps.begin() + static_cast<long>(k));
    break;
  }
  return q;
}

} // namespace duoidal::fuzz
