#include "duoidal/bimodule.hpp"

#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

namespace duoidal {

namespace {

const Obj &R() {
  static const Obj r = Obj::unit_par();
  return r;
}

const Obj &I() {
  static const Obj i = Obj::unit_tens();
  return i;
}

Term id(const Obj &o) { return Term::id(o); }

Term chain(std::vector<Term> factors) { return normalize(Term::comp(std::move(factors))); }

Equation unchecked(const Term &lhs, const Term &rhs) {
  return {normalize(lhs), normalize(rhs)};
}

Equation checked(const Equation &eq) { return make_equation(eq.lhs, eq.rhs); }

} // namespace

BimoduleSym free_bimodule(const Obj &carrier) {
  Obj c = normalize_par(carrier);
  return {c, Term::act(c)};
}

BimoduleSym bimodule_of(const Obj &carrier) {
  Obj c = normalize_par(carrier);
  switch (c.kind()) {
  case ObjKind::UnitPar:
    return {c, chain({Term::mu(), Term::tens(Term::mu(), id(R()))})};
  case ObjKind::Tens:
    return {c, induced_tens_action(bimodule_of(c.left()), bimodule_of(c.right()))};
  case ObjKind::Par: {
    std::vector<Obj> rest(c.parts().begin() + 1, c.parts().end());
    return {c, induced_par_action(bimodule_of(c.parts().front()),
                                  bimodule_of(Obj::par(std::move(rest))))};
  }
  default:
    return free_bimodule(c);
  }
}

Term expand_actions(const Term &t) {
  if (t.kind() == TermKind::ActionOf)
    return bimodule_of(t.object(0)).action;
  if (t.children().empty())
    return t;
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  bool changed = false;
  for (const auto &c : t.children()) {
    kids.push_back(expand_actions(c));
    changed = changed || kids.back() != c;
  }
  return changed ? t.with_children(std::move(kids)) : t;
}

Term induced_tens_action(const BimoduleSym &a, const BimoduleSym &b) {
  const Obj &A = a.carrier;
  const Obj &B = b.carrier;
  // (R * (A * B)) * R  ~>  (R * A) * (B * R)
  Term shuffle = Term::comp({Term::assoc(R(), A, Obj::tens(B, R()), true),
                             Term::tens(id(R()), Term::assoc(A, B, R())),
                             Term::assoc(R(), Obj::tens(A, B), R())});
  // ~> ((R * A) * I) * ((I * B) * R)
  Term units = Term::tens(Term::runit(Obj::tens(R(), A), true),
                          Term::tens(Term::lunit(B, true), id(R())));
  // ~> ((R * A) * R) * ((R * B) * R)
  Term etas = Term::tens(Term::tens(id(Obj::tens(R(), A)), Term::eta()),
                         Term::tens(Term::tens(Term::eta(), id(B)), id(R())));
  return chain({Term::tens(a.action, b.action), etas, units, shuffle});
}

Term par_action_interchange(const Obj &a, const Obj &b, InterchangeOrder order) {
  Obj A = normalize_par(a);
  Obj B = normalize_par(b);
  if (order == InterchangeOrder::LeftFirst) {
    // R * (A % B) = (R % R) * (A % B), then (.) * R = (.) * (R % R).
    return chain({Term::mid4(Obj::tens(R(), A), Obj::tens(R(), B), R(), R()),
                  Term::tens(Term::mid4(R(), R(), A, B), id(R()))});
  }
  return chain({Term::par(Term::assoc(R(), A, R(), true),
                          Term::assoc(R(), B, R(), true)),
                Term::mid4(R(), R(), Obj::tens(A, R()), Obj::tens(B, R())),
                Term::tens(id(R()), Term::mid4(A, B, R(), R())),
                Term::assoc(R(), Obj::par(A, B), R())});
}

Term induced_par_action(const BimoduleSym &a, const BimoduleSym &b,
                        InterchangeOrder order) {
  return chain({Term::par(a.action, b.action),
                par_action_interchange(a.carrier, b.carrier, order)});
}

Term left_action(const BimoduleSym &x) {
  const Obj rx = Obj::tens(R(), x.carrier);
  return chain({x.action, Term::tens(id(rx), Term::eta()), Term::runit(rx, true)});
}

Term right_action(const BimoduleSym &x) {
  const Obj &X = x.carrier;
  const Obj xr = Obj::tens(X, R());
  return chain({x.action, Term::assoc(R(), X, R(), true),
                Term::tens(Term::eta(), id(xr)), Term::lunit(xr, true)});
}

Term build_dl(const BimoduleSym &a, const BimoduleSym &b, const BimoduleSym &c) {
  return chain({Term::par(id(Obj::tens(a.carrier, b.carrier)), left_action(c)),
                Term::mid4(a.carrier, R(), b.carrier, c.carrier)});
}

Term build_dr(const BimoduleSym &b, const BimoduleSym &c, const BimoduleSym &a) {
  return chain({Term::par(right_action(b), id(Obj::tens(c.carrier, a.carrier))),
                Term::mid4(b.carrier, c.carrier, R(), a.carrier)});
}

Equation hom_condition(const Term &f, const Term &dom_action,
                       const Term &cod_action) {
  Typing ft = infer_type(f);
  Typing dt = infer_type(dom_action);
  Typing ct = infer_type(cod_action);
  if (dt.cod != ft.dom || dt.dom != Obj::tens(Obj::tens(R(), ft.dom), R()))
    throw TypeError("domain action is not an action on " + to_string(ft.dom));
  if (ct.cod != ft.cod || ct.dom != Obj::tens(Obj::tens(R(), ft.cod), R()))
    throw TypeError("codomain action is not an action on " + to_string(ft.cod));
  return make_equation(
      Term::comp(f, dom_action),
      Term::comp(cod_action, Term::tens(Term::tens(id(R()), f), id(R()))));
}

Equation bimod_unit_law(const BimoduleSym &x) {
  const Obj &X = x.carrier;
  return unchecked(
      Term::comp({x.action,
                  Term::tens(Term::tens(Term::eta(), id(X)), Term::eta()),
                  Term::tens(Term::lunit(X, true), id(I())),
                  Term::runit(X, true)}),
      id(X));
}

Equation bimod_assoc_law(const BimoduleSym &x) {
  const Obj &X = x.carrier;
  const Obj rr = Obj::tens(R(), R());
  const Obj rrx = Obj::tens(rr, X);
  Term lhs = Term::comp(x.action, Term::tens(Term::tens(Term::mu(), id(X)), Term::mu()));
  Term rhs = Term::comp({x.action,
                         Term::tens(Term::tens(id(R()), x.action), id(R())),
                         Term::tens(Term::assoc(R(), Obj::tens(R(), X), R()), id(R())),
                         Term::tens(Term::tens(Term::assoc(R(), R(), X), id(R())), id(R())),
                         Term::assoc(rrx, R(), R(), true)});
  return unchecked(lhs, rhs);
}

Equation bimod_corollary_law(const BimoduleSym &x) {
  Term lam = left_action(x);
  return unchecked(
      Term::comp({lam, Term::tens(id(R()), lam), Term::assoc(R(), R(), x.carrier)}),
      Term::comp(lam, Term::tens(Term::mu(), id(x.carrier))));
}

Equation bimod_corollary_right_law(const BimoduleSym &x) {
  Term rho = right_action(x);
  return unchecked(
      Term::comp(rho, Term::tens(rho, id(R()))),
      Term::comp({rho, Term::tens(id(x.carrier), Term::mu()),
                  Term::assoc(x.carrier, R(), R())}));
}

std::vector<NamedEquation> bimodule_obligations(const BimoduleSym &x) {
  return {{"bimod-unit", checked(bimod_unit_law(x))},
          {"bimod-assoc", checked(bimod_assoc_law(x))},
          {"bimod-corollary", checked(bimod_corollary_law(x))}};
}

} // namespace duoidal
