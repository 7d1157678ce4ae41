#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"
#include "duoidal/term.hpp"

#include <catch_amalgamated.hpp>

using namespace duoidal;

namespace {
Obj A = Obj::gen("A"), B = Obj::gen("B"), C = Obj::gen("C"), D = Obj::gen("D");
Obj R = Obj::unit_par(), I = Obj::unit_tens();

Typing ty(const char *t) { return infer_type(parse_term(t)); }
} // namespace

TEST_CASE("par unit is absorbed when parsing") {
  CHECK(parse_object("R % A") == A);
  CHECK(parse_object("A % R") == A);
}

TEST_CASE("objects print in the grammar") {
  CHECK(to_string(parse_object("(A % B) * (C % D)")) == "((A % B) * (C % D))");
  CHECK(parse_object("(A % B) * (C % D)") == Obj::tens(Obj::par(A, B), Obj::par(C, D)));
}

TEST_CASE("par is flat") {
  Obj abc = parse_object("A % (B % C)");
  REQUIRE(abc.kind() == ObjKind::Par);
  CHECK(abc.parts().size() == 3);
  CHECK(abc == parse_object("(A % B) % C"));
  CHECK(Obj::par(R, R) == R);
  CHECK(Obj::tens(Obj::par(A, R), B) == Obj::tens(A, B));
}

TEST_CASE("tensor is not strict") {
  CHECK(parse_object("(A * B) * C") != parse_object("A * (B * C)"));
  CHECK(parse_object("A * I") != A);
}

TEST_CASE("endpoints of the structural maps") {
  Typing m = ty("m[A,B,C,D]");
  CHECK(m.dom == parse_object("(A % B) * (C % D)"));
  CHECK(m.cod == parse_object("(A * C) % (B * D)"));
  CHECK(ty("id[A]") == Typing{A, A});
  Typing m2 = ty("m[A,R,B,C]");
  CHECK(m2.dom == Obj::tens(A, Obj::par(B, C)));
  CHECK(m2.cod == Obj::par(Obj::tens(A, B), Obj::tens(R, C)));
  CHECK(ty("mu") == Typing{Obj::tens(R, R), R});
  CHECK(ty("eta") == Typing{I, R});
  CHECK(ty("a[A,B,C]").dom == parse_object("(A * B) * C"));
  CHECK(ty("a'[A,B,C]").dom == parse_object("A * (B * C)"));
  CHECK(ty("act[A]") == Typing{parse_object("(R * A) * R"), A});
}

TEST_CASE("printing") {
  CHECK(to_string(Term::mu()) == "mu");
  CHECK(to_string(parse_term("mu o (eta * eta)")) == "mu o (eta * eta)");
  CHECK(to_string(Term::mid4(A, B, C, D)) == "m[A,B,C,D]");
}

TEST_CASE("ill-typed composites are rejected") {
  CHECK_THROWS_AS(ty("mu o m[A,B,C,D]"), TypeError);
  CHECK_THROWS_AS(ty("id[A] o id[B]"), TypeError);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_term("m[A,B"), ParseError);
  CHECK_THROWS_AS(parse_object("(A * )"), ParseError);
  CHECK_THROWS_AS(parse_term("frob[A]"), ParseError);
}

TEST_CASE("normalize drops identities and flattens") {
  Term t = normalize(parse_term("id[A] o (id[A] o id[A])"));
  CHECK(t == Term::id(A));
  Term u = normalize(parse_term("mu o (id[(R * R)] o (mu * id[R]))"));
  CHECK(to_string(u) == "mu o (mu * id[R])");
  CHECK(normalize(parse_term("id[A] * id[B]")) == Term::id(Obj::tens(A, B)));
  CHECK(normalize(parse_term("id[A] % id[B]")) == Term::id(Obj::par(A, B)));
  CHECK(normalize(u) == u);
}

TEST_CASE("paths address subterms") {
  Term t = normalize(parse_term("(mu * id[R]) o a'[R,R,R]"));
  REQUIRE(subterm(t, {}) != nullptr);
  CHECK(*subterm(t, {1}) == Term::assoc(R, R, R, true));
  CHECK(subterm(t, {5}) == nullptr);
}
