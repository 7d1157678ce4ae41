#include "duoidal/cli.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace duoidal;

namespace {

struct Out {
  int rc;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  args.insert(args.begin(), "m4check");
  std::vector<const char *> argv;
  for (auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream o, e;
  int rc = run(static_cast<int>(argv.size()), argv.data(), o, e);
  return {rc, o.str(), e.str()};
}

} // namespace

TEST_CASE("typecheck prints endpoints") {
  Out r = call({"typecheck", "m[A,B,C,D]"});
  CHECK(r.rc == 0);
  CHECK(r.out == "((A % B) * (C % D)) ==> ((A * C) % (B * D))\n");
  CHECK(call({"typecheck", "mu o m[A,B,C,D]"}).rc == 2);
  CHECK(call({"typecheck", "m[A,"}).rc == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).rc == 2);
  CHECK(call({"frobnicate"}).rc == 2);
  CHECK(call({"verify", "--budget", "0"}).rc == 2);
  CHECK(call({"model", "check", "/nonexistent.model"}).rc == 2);
  CHECK(call({"prove", "/nonexistent.proof"}).rc == 2);
}

TEST_CASE("model commands") {
  Out bad = call({"model", "check", "bool-swapped.model"});
  CHECK(bad.rc == 1);
  CHECK(bad.out.find("(1,0,0,1)") != std::string::npos);
  CHECK(call({"model", "check", "bool-or-and"}).rc == 0);
  CHECK(call({"model", "bimodules", "tropical-3"}).out == "0 1 2 3\n");
  CHECK(call({"model", "bimodules", "bool-or-and"}).out == "1\n");
}

TEST_CASE("derive and search") {
  Out d = call({"derive", "dl", "A", "B", "C"});
  CHECK(d.rc == 0);
  CHECK(d.out.find("(A * (B % C)) ==> ((A * B) % C)") != std::string::npos);
  Out s = call({"search", "mu o (eta * id[R]) = l[R]", "--budget", "3"});
  CHECK(s.rc == 0);
  CHECK(s.out.find("mu-unit-l") != std::string::npos);
  CHECK(call({"search", "mu = mu o (mu * id[R])"}).rc == 2);
}

TEST_CASE("axioms list") {
  Out r = call({"axioms", "list"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("M1 : ") != std::string::npos);
  CHECK(r.out.find("neg-snake") == std::string::npos);
  CHECK(call({"axioms", "list", "--negation"}).out.find("neg-snake-1") != std::string::npos);
}

TEST_CASE("verify on the shipped models") {
  Out r = call({"verify"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("proved (searched): cs-7") != std::string::npos);
  CHECK(r.out.find("proved: cs-9") != std::string::npos);
  CHECK(r.out.find("failed:") == std::string::npos);
  CHECK(call({"verify"}).out == r.out);
  Out tsv = call({"verify", "--format", "tsv", "--negation"});
  CHECK(tsv.out.rfind("id\tstatus\tdetail\n", 0) == 0);
  CHECK(tsv.out.find("neg-snake-4\tmodel-verified") != std::string::npos);
}

TEST_CASE("verify with a failing model") {
  Out r = call({"verify", "--model", "bool-swapped.model"});
  CHECK(r.rc == 1);
  CHECK(r.out.find("failed: duoidal-interchange") != std::string::npos);
  CHECK(r.out.find("(1,0,0,1)") != std::string::npos);
}
