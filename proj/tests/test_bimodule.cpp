#include "duoidal/bimodule.hpp"
#include "duoidal/error.hpp"
#include "duoidal/model.hpp"
#include "duoidal/syntax.hpp"

#include <catch_amalgamated.hpp>

using namespace duoidal;

namespace {
Obj A = Obj::gen("A"), B = Obj::gen("B"), C = Obj::gen("C");
Obj R = Obj::unit_par(), I = Obj::unit_tens();
Obj o(const char *s) { return parse_object(s); }
BimoduleSym fb(const Obj &x) { return free_bimodule(x); }
} // namespace

TEST_CASE("induced tensor action endpoints") {
  Typing t = infer_type(induced_tens_action(fb(A), fb(B)));
  CHECK(t.dom == o("(R * (A * B)) * R"));
  CHECK(t.cod == o("A * B"));
  Typing rr = infer_type(induced_tens_action(bimodule_of(R), bimodule_of(R)));
  CHECK(rr.dom == o("(R * (R * R)) * R"));
  CHECK(rr.cod == o("R * R"));
}

TEST_CASE("induced tensor action in tropical-3") {
  ThinModel m = bundled_model("tropical-3");
  Denotation d = eval_term(m, induced_tens_action(fb(A), fb(B)), {{"A", 1}, {"B", 2}});
  // 0 + (1 + 2) + 0 truncated at 3, acting onto 1 + 2.
  CHECK(m.carrier[d.dom] == "3");
  CHECK(m.carrier[d.cod] == "3");
}

TEST_CASE("induced par action endpoints") {
  for (auto order : {InterchangeOrder::LeftFirst, InterchangeOrder::RightFirst}) {
    Typing t = infer_type(induced_par_action(fb(A), fb(B), order));
    CHECK(t.dom == o("(R * (A % B)) * R"));
    CHECK(t.cod == o("A % B"));
  }
  Typing rr = infer_type(induced_par_action(bimodule_of(R), bimodule_of(R)));
  CHECK(rr.dom == o("(R * R) * R"));
  CHECK(rr.cod == R);
}

TEST_CASE("bimodule_of picks the default structure") {
  CHECK(bimodule_of(A).action == Term::act(A));
  CHECK(infer_type(bimodule_of(R).action).cod == R);
  CHECK(infer_type(bimodule_of(o("A * B")).action) ==
        infer_type(induced_tens_action(fb(A), fb(B))));
  Obj abc = o("A % B % C");
  CHECK(infer_type(bimodule_of(abc).action).dom == Obj::tens(Obj::tens(R, abc), R));
}

TEST_CASE("one-sided actions") {
  CHECK(infer_type(left_action(fb(A))) == Typing{Obj::tens(R, A), A});
  CHECK(infer_type(right_action(fb(A))) == Typing{Obj::tens(A, R), A});
}

TEST_CASE("d^l and d^r endpoints") {
  Term dl = build_dl(fb(A), fb(B), fb(C));
  CHECK(infer_type(dl) == Typing{o("A * (B % C)"), o("(A * B) % C")});
  Term dr = build_dr(fb(B), fb(C), fb(A));
  CHECK(infer_type(dr) == Typing{o("(B % C) * A"), o("B % (C * A)")});
  Typing dl_r = infer_type(build_dl(fb(A), fb(B), bimodule_of(R)));
  CHECK(dl_r.cod == o("A * B"));
  Typing dr_r = infer_type(build_dr(bimodule_of(R), fb(C), fb(A)));
  CHECK(dr_r.cod == o("C * A"));
  Typing dr_i = infer_type(build_dr(fb(B), fb(C), free_bimodule(I)));
  CHECK(dr_i.dom == o("(B % C) * I"));
}

TEST_CASE("d^l denotes in the boolean model") {
  ThinModel m = bundled_model("bool-or-and");
  // a or (b and c) <= (a or b) and c at (0,1,1).
  Denotation d = eval_term(m, build_dl(fb(A), fb(B), fb(C)), {{"A", 0}, {"B", 1}, {"C", 1}});
  CHECK(m.carrier[d.dom] == "1");
  CHECK(m.carrier[d.cod] == "1");
}

TEST_CASE("hom condition") {
  Equation triv = hom_condition(Term::id(A), Term::act(A), Term::act(A));
  CHECK(triv.lhs == triv.rhs);
  Term m = Term::mid4(A, B, C, Obj::gen("D"));
  Equation h = hom_condition(m, bimodule_of(o("(A % B) * (C % D)")).action,
                             bimodule_of(o("(A * C) % (B * D)")).action);
  CHECK(type_of(h).dom == o("(R * ((A % B) * (C % D))) * R"));
  Term la = left_action(fb(A));
  CHECK_NOTHROW(hom_condition(la, bimodule_of(o("R * A")).action, Term::act(A)));
  CHECK_THROWS_AS(hom_condition(m, Term::act(A), Term::act(B)), TypeError);
}

TEST_CASE("bimodule obligations type-check") {
  for (const auto &x : {A, o("A * B"), o("A % B"), R}) {
    auto obs = bimodule_obligations(bimodule_of(x));
    CHECK(obs.size() == 3);
    for (const auto &n : obs)
      CHECK_NOTHROW(type_of(n.eq));
  }
}
