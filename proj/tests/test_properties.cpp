#include "duoidal/axioms.hpp"
#include "duoidal/cs.hpp"
#include "duoidal/error.hpp"
#include "duoidal/proof.hpp"
#include "duoidal/search.hpp"
#include "duoidal/syntax.hpp"

#include <catch_amalgamated.hpp>

#include "fuzz.hpp"

#include <random>

using namespace duoidal;

using fuzz::Gen;

TEST_CASE("normalize is idempotent and preserves types") {
  Gen g(7);
  for (int i = 0; i < 300; ++i) {
    Term t = g.term();
    Typing ty = infer_type(t);
    Term n = normalize(t);
    CHECK(normalize(n) == n);
    CHECK(infer_type(n) == ty);
  }
}

TEST_CASE("print and parse round-trip") {
  Gen g(11);
  for (int i = 0; i < 300; ++i) {
    Obj o = g.obj(3);
    CHECK(parse_object(to_string(o)) == o);
    Term n = normalize(g.term());
    CHECK(normalize(parse_term(to_string(n))) == n);
  }
}

TEST_CASE("rewrites preserve types") {
  Gen g(13);
  std::vector<const AxiomSchema *> schemas;
  for (const auto &s : list_axioms(false))
    schemas.push_back(&s);
  std::size_t seen = 0;
  for (int i = 0; i < 40; ++i) {
    Term t = normalize(g.term(2));
    Typing ty = infer_type(t);
    for (const auto &rw : rewrites(t, schemas)) {
      ++seen;
      CHECK(infer_type(rw.result) == ty);
      CHECK(apply_step(t, rw.step).result == rw.result);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("axiom instances: matched, searched and re-verified") {
  Gen g(2024);
  SearchBudget b;
  b.max_steps = 4;
  b.timeout_seconds = 2;
  int cases = 0, found = 0;
  while (cases < 200) {
    auto inst = g.instance(true);
    if (!inst)
      continue;
    ++cases;
    const Equation &e = inst->second;
    auto m = match_axiom(e);
    REQUIRE(m);
    const Equation &back = m->direction == Direction::Forward ? e : Equation{e.rhs, e.lhs};
    CHECK(instantiate(*find_axiom(m->schema_id), m->subst) == back);
    SearchResult r = search_proof(e, b);
    if (r.proof) {
      ++found;
      ProofCheck c = verify_proof(*r.proof);
      INFO(inst->first << ": " << to_string(e) << " -- " << c.reason);
      CHECK(c.ok);
    }
  }
  INFO("found " << found << " of " << cases);
  CHECK(found >= 180);
}

TEST_CASE("corrupted certificates are rejected") {
  std::mt19937 rng(99);
  int mutants = 0;
  for (const auto &name : bundled_proof_names()) {
    const PastingProof p = bundled_proof(name);
    REQUIRE(verify_proof(p).ok);
    for (int round = 0; round < 8; ++round) {
      PastingProof q = fuzz::mutate(p, round, rng);
      ++mutants;
      INFO(name << " mutant " << round);
      CHECK_FALSE(verify_proof(q).ok);
    }
  }
  CHECK(mutants >= 50);
}
