#include "duoidal/axioms.hpp"
#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

#include <catch_amalgamated.hpp>

using namespace duoidal;

namespace {
Obj A = Obj::gen("A"), B = Obj::gen("B"), C = Obj::gen("C"), D = Obj::gen("D");
Obj R = Obj::unit_par();

Subst objs(std::initializer_list<std::pair<const char *, Obj>> xs) {
  Subst s;
  for (auto &[k, v] : xs)
    s.objects.emplace(k, v);
  return s;
}
} // namespace

TEST_CASE("every schema instantiates at the identity substitution") {
  for (const auto &s : list_axioms(true))
    CHECK_NOTHROW(describe(s));
}

TEST_CASE("catalogue lists the middle-four axioms") {
  for (const char *id : {"M1", "M2", "M3", "M4", "mu-assoc", "mu-unit-l", "mu-unit-r",
                         "m-natural", "tens-interchange", "par-interchange"})
    CHECK(find_axiom(id) != nullptr);
  CHECK(find_axiom("neg-snake-1")->role == SchemaRole::Negation);
  CHECK(find_axiom("M4")->note.find("reconstructed") != std::string::npos);
  CHECK(find_axiom("nonsense") == nullptr);
}

TEST_CASE("negation schemas are hidden unless requested") {
  std::size_t without = list_axioms(false).size(), with = list_axioms(true).size();
  CHECK(with == without + 4);
}

TEST_CASE("M3 instance endpoints") {
  Equation e = instantiate(*find_axiom("M3"), objs({{"A", A}, {"B", B}, {"C", C}, {"D", D}}));
  Typing t = type_of(e);
  CHECK(t.dom == parse_object("((A % R) * (B % R)) * (C % D)"));
  CHECK(t.cod == parse_object("((A * B) * C) % (R * D)"));
}

TEST_CASE("M2 at R everywhere starts from R * R") {
  Subst s;
  for (const char *v : {"U", "V", "W", "X", "Y", "Z"})
    s.objects.emplace(v, R);
  Equation e = instantiate(*find_axiom("M2"), s);
  CHECK(type_of(e).dom == Obj::tens(R, R));
  CHECK(type_of(e).cod == Obj::par({Obj::tens(R, R), Obj::tens(R, R), Obj::tens(R, R)}));
}

TEST_CASE("naturality at identities is trivial") {
  const AxiomSchema &s = *find_axiom("m-natural");
  Subst sub;
  const char *ms[] = {"f", "g", "h", "k"};
  for (const auto &v : s.vars)
    if (v.kind == VarKind::Object)
      sub.objects.emplace(v.name, Obj::gen(v.name));
  for (const char *m : ms) {
    const MetaVar *v = s.var(m);
    REQUIRE(v != nullptr);
  }
  // f : A -> E style pairs collapse when both ends are the same generator.
  for (const auto &v : s.vars)
    if (v.kind == VarKind::Object)
      sub.objects.insert_or_assign(v.name, A);
  for (const char *m : ms)
    sub.morphisms.emplace(m, Term::id(A));
  Equation e = instantiate(s, sub);
  CHECK(e.lhs == e.rhs);
}

TEST_CASE("ill-typed morphism values are rejected") {
  Subst s = objs({{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", A}, {"F", B}});
  s.morphisms.emplace("f", Term::id(C));
  s.morphisms.emplace("g", Term::id(B));
  s.morphisms.emplace("h", Term::id(C));
  s.morphisms.emplace("k", Term::id(D));
  CHECK_THROWS_AS(instantiate(*find_axiom("tens-interchange"), s), TypeError);
}

TEST_CASE("match_axiom recovers M2") {
  Subst s = objs({{"U", A}, {"V", B}, {"W", C}, {"X", D}, {"Y", Obj::gen("E")},
                  {"Z", Obj::gen("F")}});
  Equation e = instantiate(*find_axiom("M2"), s);
  auto m = match_axiom(e);
  REQUIRE(m);
  CHECK(m->schema_id == "M2");
  CHECK(m->direction == Direction::Forward);
  CHECK(m->subst.objects == s.objects);
  auto back = match_axiom(Equation{e.rhs, e.lhs});
  REQUIRE(back);
  CHECK(back->schema_id == "M2");
  CHECK(back->direction == Direction::Backward);
}

TEST_CASE("match_axiom recovers instances at composite objects") {
  Obj pq = Obj::par(Obj::gen("P"), Obj::gen("Q"));
  Equation e = instantiate(*find_axiom("M3"), objs({{"A", pq}, {"B", B}, {"C", R}, {"D", D}}));
  auto m = match_axiom(e);
  REQUIRE(m);
  CHECK(instantiate(*find_axiom(m->schema_id), m->subst) ==
        (m->direction == Direction::Forward ? e : Equation{e.rhs, e.lhs}));
}

TEST_CASE("reflexive equations match refl") {
  auto m = match_axiom(make_equation(Term::id(A), Term::id(A)));
  REQUIRE(m);
  CHECK(m->schema_id == "refl");
}

TEST_CASE("non-instances do not match") {
  Obj I = Obj::unit_tens();
  Equation e = make_equation(parse_term("mu o (eta * eta)"), parse_term("eta o l[I]"));
  REQUIRE(type_of(e).dom == Obj::tens(I, I));
  CHECK_FALSE(match_axiom(e));
}
