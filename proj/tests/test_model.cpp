#include "duoidal/cs.hpp"
#include "duoidal/error.hpp"
#include "duoidal/model.hpp"
#include "duoidal/syntax.hpp"

#include <catch_amalgamated.hpp>

#include <array>
#include <functional>

using namespace duoidal;

namespace {

using Op = std::function<int(int, int)>;

// Oracle: first interchange failure of a two-element lattice model, tuples in
// the given element order.
std::optional<std::array<int, 4>> first_failure(Op tens, Op par, std::array<int, 2> order) {
  for (int a : order)
    for (int b : order)
      for (int c : order)
        for (int d : order)
          if (tens(par(a, b), par(c, d)) > par(tens(a, c), tens(b, d)))
            return std::array<int, 4>{a, b, c, d};
  return std::nullopt;
}

std::vector<int> values(const ThinModel &m, const std::vector<int> &idx) {
  std::vector<int> out;
  for (int i : idx)
    out.push_back(std::stoi(m.carrier[i]));
  return out;
}

} // namespace

TEST_CASE("shipped models load") {
  ThinModel b = bundled_model("bool-or-and");
  CHECK(b.carrier == std::vector<std::string>{"0", "1"});
  CHECK(b.carrier[b.unit_tens] == "0");
  CHECK(b.carrier[b.unit_par] == "1");
  ThinModel t = bundled_model("tropical-3");
  CHECK(t.size() == 4);
  CHECK(t.leq[3][0]);
  CHECK_FALSE(t.leq[0][3]);
  CHECK(bundled_model("singleton").size() == 1);
  CHECK_THROWS_AS(bundled_model("nope"), ModelError);
}

TEST_CASE("invalid models are rejected with a witness") {
  const char *base = "carrier 0 1\nleq 0 1\nunit_tens 0\nunit_par 1\n";
  std::string tables = "par 0 0 0\npar 0 1 0\npar 1 0 0\npar 1 1 1\n";
  // tensor that is not monotone: 0*1 = 1 but 1*1 = 0
  std::string bad = std::string(base) + "tens 0 0 0\ntens 0 1 1\ntens 1 0 1\ntens 1 1 0\n" + tables;
  CHECK_THROWS_AS(parse_model(bad), ModelError);
  std::string missing = std::string(base) + "tens 0 0 0\n" + tables;
  CHECK_THROWS_AS(parse_model(missing), ModelError);
  CHECK_THROWS_AS(parse_model("leq 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_model("carrier 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_model("carrier 0\nfrob 0\n"), ParseError);
}

TEST_CASE("interchange in the two boolean models matches the oracle") {
  Op lor = [](int x, int y) { return x | y; };
  Op land = [](int x, int y) { return x & y; };
  CHECK_FALSE(first_failure(lor, land, {0, 1}));
  auto w = first_failure(land, lor, {1, 0});
  REQUIRE(w);
  CHECK(*w == std::array<int, 4>{1, 0, 0, 1});

  ModelCheckReport ok = check_duoidal(bundled_model("bool-or-and"));
  CHECK(ok.ok());
  CHECK(ok.families[0].family == "duoidal-interchange");
  CHECK(ok.families[0].checked == 16);

  ThinModel sw = bundled_model("bool-swapped");
  ModelCheckReport bad = check_duoidal(sw);
  CHECK_FALSE(bad.ok());
  CHECK(values(sw, bad.families[0].witness) == std::vector<int>{(*w)[0], (*w)[1], (*w)[2], (*w)[3]});
  CHECK(element_tuple(sw, bad.families[0].witness) == "(1,0,0,1)");
}

TEST_CASE("tropical-3 passes all tuples") {
  ModelCheckReport r = check_duoidal(bundled_model("tropical-3"));
  CHECK(r.ok());
  CHECK(r.families[0].checked == 256);
  CHECK(check_duoidal(bundled_model("singleton")).ok());
}

TEST_CASE("bimodule elements") {
  // Oracle: a is a bimodule iff (R * a) * R <= a, evaluated by hand.
  ThinModel b = bundled_model("bool-or-and");
  auto eb = enumerate_bimodules(b);
  REQUIRE(eb.size() == 1);
  CHECK(b.carrier[eb[0]] == "1");
  CHECK(enumerate_bimodules(bundled_model("tropical-3")) == std::vector<int>{0, 1, 2, 3});
  CHECK(enumerate_bimodules(bundled_model("singleton")).size() == 1);
}

TEST_CASE("evaluating terms") {
  ThinModel b = bundled_model("bool-or-and");
  Env env{{"A", 1}, {"B", 0}, {"C", 0}, {"D", 1}};
  Denotation d = eval_term(b, parse_term("m[A,B,C,D]"), env);
  CHECK(d.dom == 0);
  CHECK(d.cod == 1);
  CHECK(eval_term(b, parse_term("id[A]"), env).dom == 1);
  ThinModel t = bundled_model("tropical-3");
  Denotation e = eval_term(t, Term::eta(), {});
  CHECK(t.carrier[e.dom] == "0");
  CHECK(t.carrier[e.cod] == "0");
  CHECK_THROWS_AS(eval_term(b, parse_term("id[Q]"), env), ModelError);
  CHECK_THROWS_AS(eval_term(bundled_model("tropical-3"), parse_term("id[neg(A)]"), env),
                  ModelError);
}

TEST_CASE("a term without denotation") {
  ThinModel b = bundled_model("bool-or-and");
  Term f = Term::free_gen("f", Obj::gen("A"), Obj::gen("B"));
  CHECK_THROWS_AS(eval_term(b, f, {{"A", 1}, {"B", 0}}), ModelError);
}

TEST_CASE("coherence conditions hold in the models") {
  EquationVerdict v9 = check_equation_all(bundled_model("bool-or-and"), cs_equation(9));
  CHECK(v9.ok);
  CHECK(v9.assignments == 1);
  EquationVerdict v11 = check_equation_all(bundled_model("tropical-3"), cs_equation(11));
  CHECK(v11.ok);
  CHECK(v11.assignments == 256);
  for (int id : cs_ids())
    CHECK(check_equation_all(bundled_model("singleton"), cs_equation(id)).ok);
}

TEST_CASE("free maps act as hypotheses") {
  Term f = Term::free_gen("f", Obj::gen("A"), Obj::gen("B"));
  Equation e = make_equation(f, f);
  ThinModel t = bundled_model("tropical-3");
  // f : a -> b exists iff a >= b: 10 of the 16 pairs.
  CHECK(check_equation_all(t, e).assignments == 10);
}
