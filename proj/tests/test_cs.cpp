#include "duoidal/cs.hpp"
#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace duoidal;

namespace {
Obj o(const char *s) { return parse_object(s); }

bool uses(const PastingProof &p, const std::string &schema) {
  auto s = schemas_used(p);
  return std::find(s.begin(), s.end(), schema) != s.end();
}
} // namespace

TEST_CASE("coherence condition endpoints") {
  CHECK(type_of(cs_equation(9)) == Typing{o("(A * B) * (C % D)"), o("(A * (B * C)) % D")});
  CHECK(type_of(cs_equation(11)) == Typing{o("(A % B % C) * D"), o("A % B % (C * D)")});
  CHECK(type_of(cs_equation(7)) == Typing{o("A * B"), o("A * B")});
  CHECK(type_of(cs_equation(14)) == Typing{o("(A * (B % C)) * D"), o("(A * B) % (C * D)")});
}

TEST_CASE("cs-7 at R collapses") {
  ObjectAssignment all_r{{"A", Obj::unit_par()}, {"B", Obj::unit_par()}};
  Equation e = cs_equation(7, all_r);
  CHECK(type_of(e).dom == o("R * R"));
}

TEST_CASE("extension points need a file") {
  for (int id : {2, 3, 4}) {
    CHECK(is_cs_extension_point(id));
    CHECK_THROWS_WITH(cs_equation(id), Catch::Matchers::ContainsSubstring("extension point"));
  }
  CHECK_THROWS_AS(cs_equation(99), Error);
  Equation e = load_cs_extension(2, "# user supplied\nprove mu o (eta * id[R]) = l[R]\n");
  CHECK(type_of(e).cod == Obj::unit_par());
  CHECK_THROWS_AS(load_cs_extension(9, "prove mu = mu"), Error);
}

TEST_CASE("bundled certificates verify") {
  for (int id : cs_ids()) {
    PastingProof p = bundled_proof(id);
    CHECK(p.goal == cs_equation(id));
    ProofCheck c = verify_proof(p);
    INFO("cs-" << id << ": " << c.reason);
    CHECK(c.ok);
  }
}

TEST_CASE("certificates use the attributed axioms") {
  CHECK(uses(bundled_proof(9), "M1"));
  CHECK(uses(bundled_proof(9), "M3"));
  CHECK(uses(bundled_proof(10), "M1"));
  CHECK(uses(bundled_proof(10), "M4"));
  CHECK(uses(bundled_proof(11), "M2"));
  CHECK(uses(bundled_proof(11), "bimod-par-action-law"));
  CHECK(uses(bundled_proof(12), "M2"));
  CHECK(uses(bundled_proof(13), "M2"));
  CHECK(uses(bundled_proof(14), "M1"));
  CHECK_THROWS_AS(bundled_proof("cs-99"), Error);
}

TEST_CASE("negation hexagon endpoints") {
  auto negs = negation_axioms(Obj::gen("A"));
  REQUIRE(negs.size() == 4);
  CHECK(negs[0].id == "neg-snake-1");
  CHECK(type_of(negs[0].eq) == Typing{o("(A % R) * I"), o("R * A")});
  for (const auto &n : negation_axioms(Obj::unit_par()))
    CHECK_NOTHROW(type_of(n.eq));
}

TEST_CASE("homomorphism obligation") {
  Typing t = type_of(hom_m_equation());
  CHECK(t.dom == o("(R * ((A % B) * (C % D))) * R"));
  CHECK(t.cod == o("(A * C) % (B * D)"));
}

TEST_CASE("obligation registry") {
  auto obs = obligations(false);
  CHECK(obs.front().id == "cs-7");
  CHECK(std::none_of(obs.begin(), obs.end(), [](auto &x) { return x.negation; }));
  auto with = obligations(true);
  CHECK(with.size() == obs.size() + 4);
  CHECK(find_obligation("hom-m").eq == hom_m_equation());
  CHECK_THROWS_AS(find_obligation("nope"), Error);
  for (const auto &name : bundled_proof_names())
    CHECK(find_obligation(name).eq == bundled_proof(name).goal);
}
