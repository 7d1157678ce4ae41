#include "duoidal/cs.hpp"

#include "duoidal/error.hpp"

#include <algorithm>
#include <set>

namespace duoidal {

namespace {

struct Embedded {
  const char *name;
  const char *text;
};

const Embedded kBundled[] = {
#include "bundled_proofs.inc"
    {nullptr, nullptr},
};

Obj letter(const ObjectAssignment &objs, const std::string &l) {
  auto it = objs.find(l);
  return it == objs.end() ? Obj::gen(l) : normalize_par(it->second);
}

Term dl(const Obj &a, const Obj &b, const Obj &c) {
  return build_dl(bimodule_of(a), bimodule_of(b), bimodule_of(c));
}

Term dr(const Obj &b, const Obj &c, const Obj &a) {
  return build_dr(bimodule_of(b), bimodule_of(c), bimodule_of(a));
}

} // namespace

const std::vector<int> &cs_ids() {
  static const std::vector<int> ids = {7, 8, 9, 10, 11, 12, 13, 14};
  return ids;
}

bool is_cs_extension_point(int id) { return id >= 2 && id <= 4; }

Equation cs_equation(int id, const ObjectAssignment &objs) {
  if (is_cs_extension_point(id))
    throw Error("extension point: supply equation file for condition " + std::to_string(id));
  const Obj A = letter(objs, "A"), B = letter(objs, "B"), C = letter(objs, "C"),
            D = letter(objs, "D");
  const Obj R = Obj::unit_par();
  auto id_ = [](const Obj &o) { return Term::id(o); };
  switch (id) {
  case 7:
    return make_equation(dl(A, B, R), id_(Obj::tens(A, B)));
  case 8:
    return make_equation(dr(R, C, A), id_(Obj::tens(C, A)));
  case 9:
    return make_equation(
        Term::comp(Term::par(Term::assoc(A, B, C), id_(D)), dl(Obj::tens(A, B), C, D)),
        Term::comp({dl(A, Obj::tens(B, C), D), Term::tens(id_(A), dl(B, C, D)),
                    Term::assoc(A, B, Obj::par(C, D))}));
  case 10:
    return make_equation(
        Term::comp({Term::par(id_(A), Term::assoc(B, C, D)), dr(A, Obj::tens(B, C), D),
                    Term::tens(dr(A, B, C), id_(D))}),
        Term::comp(dr(A, B, Obj::tens(C, D)), Term::assoc(Obj::par(A, B), C, D)));
  case 11:
    return make_equation(
        Term::comp(Term::par(id_(A), dr(B, C, D)), dr(A, Obj::par(B, C), D)),
        dr(Obj::par(A, B), C, D));
  case 12:
    return make_equation(
        Term::comp(Term::par(dl(A, B, C), id_(D)), dl(A, Obj::par(B, C), D)),
        dl(A, B, Obj::par(C, D)));
  case 13:
    return make_equation(
        Term::comp(Term::par(id_(A), dl(B, C, D)), dr(A, B, Obj::par(C, D))),
        Term::comp(Term::par(dr(A, B, C), id_(D)), dl(Obj::par(A, B), C, D)));
  case 14:
    return make_equation(
        Term::comp(dr(Obj::tens(A, B), C, D), Term::tens(dl(A, B, C), id_(D))),
        Term::comp({dl(A, B, Obj::tens(C, D)), Term::tens(id_(A), dr(B, C, D)),
                    Term::assoc(A, Obj::par(B, C), D)}));
  default:
    throw Error("no coherence condition numbered " + std::to_string(id));
  }
}

Equation load_cs_extension(int id, std::string_view script) {
  if (!is_cs_extension_point(id))
    throw Error("condition " + std::to_string(id) + " is not an extension point");
  return parse_proof(script).goal;
}

std::vector<std::string> bundled_proof_names() {
  std::vector<std::string> out;
  for (const Embedded *e = kBundled; e->name; ++e)
    out.push_back(e->name);
  return out;
}

PastingProof bundled_proof(const std::string &name) {
  for (const Embedded *e = kBundled; e->name; ++e)
    if (name == e->name)
      return parse_proof(e->text);
  throw Error("no bundled proof named " + name);
}

PastingProof bundled_proof(int cs_id) {
  if (is_cs_extension_point(cs_id))
    throw Error("extension point: supply equation file for condition " +
                std::to_string(cs_id));
  return bundled_proof("cs-" + std::to_string(cs_id));
}

std::vector<std::string> schemas_used(const PastingProof &p) {
  std::set<std::string> s;
  for (const auto &st : p.steps)
    s.insert(st.schema);
  return {s.begin(), s.end()};
}

std::vector<NamedEquation> negation_axioms(const Obj &a) {
  std::vector<NamedEquation> out;
  for (int i = 1; i <= 4; ++i) {
    std::string id = "neg-snake-" + std::to_string(i);
    const AxiomSchema *s = find_axiom(id);
    Subst sub;
    sub.objects.emplace("A", normalize_par(a));
    out.push_back({id, instantiate(*s, sub)});
  }
  return out;
}

Equation hom_m_equation(const ObjectAssignment &objs) {
  const Obj A = letter(objs, "A"), B = letter(objs, "B"), C = letter(objs, "C"),
            D = letter(objs, "D");
  const Obj dom = Obj::tens(Obj::par(A, B), Obj::par(C, D));
  const Obj cod = Obj::par(Obj::tens(A, C), Obj::tens(B, D));
  return hom_condition(Term::mid4(A, B, C, D), bimodule_of(dom).action,
                       bimodule_of(cod).action);
}

namespace {

Term free_map(const char *name, const Obj &dom, const Obj &cod) {
  return Term::free_gen(name, dom, cod);
}

std::vector<Obligation> naturality_squares() {
  const Obj A = Obj::gen("A"), B = Obj::gen("B"), C = Obj::gen("C");
  const Obj A2 = Obj::gen("A2"), B2 = Obj::gen("B2"), C2 = Obj::gen("C2");
  auto id_ = [](const Obj &o) { return Term::id(o); };
  std::vector<Obligation> out;
  Term f = free_map("f", A, A2), g = free_map("g", B, B2), h = free_map("h", C, C2);
  out.push_back({"dl-natural-a",
                 make_equation(Term::comp(dl(A2, B, C), Term::tens(f, id_(Obj::par(B, C)))),
                               Term::comp(Term::par(Term::tens(f, id_(B)), id_(C)), dl(A, B, C))),
                 false, 30, ""});
  out.push_back({"dl-natural-b",
                 make_equation(
                     Term::comp(dl(A, B2, C), Term::tens(id_(A), Term::par(g, id_(C)))),
                     Term::comp(Term::par(Term::tens(id_(A), g), id_(C)), dl(A, B, C))),
                 false, 30, ""});
  out.push_back({"dl-natural-c",
                 make_equation(
                     Term::comp(dl(A, B, C2), Term::tens(id_(A), Term::par(id_(B), h))),
                     Term::comp(Term::par(id_(Obj::tens(A, B)), h), dl(A, B, C))),
                 false, 0, "needs h to be a bimodule map"});
  // d^r[B, C, A] : (B % C) * A --> B % (C * A)
  Term f2 = free_map("f", A, A2), g2 = free_map("g", B, B2), h2 = free_map("h", C, C2);
  out.push_back({"dr-natural-a",
                 make_equation(Term::comp(dr(B, C, A2), Term::tens(id_(Obj::par(B, C)), f2)),
                               Term::comp(Term::par(id_(B), Term::tens(id_(C), f2)), dr(B, C, A))),
                 false, 30, ""});
  out.push_back({"dr-natural-b",
                 make_equation(
                     Term::comp(dr(B2, C, A), Term::tens(Term::par(g2, id_(C)), id_(A))),
                     Term::comp(Term::par(g2, id_(Obj::tens(C, A))), dr(B, C, A))),
                 false, 0, "needs g to be a bimodule map"});
  out.push_back({"dr-natural-c",
                 make_equation(
                     Term::comp(dr(B, C2, A), Term::tens(Term::par(id_(B), h2), id_(A))),
                     Term::comp(Term::par(id_(B), Term::tens(h2, id_(A))), dr(B, C, A))),
                 false, 30, ""});
  return out;
}

Equation lemma_instance(const std::string &schema) {
  const AxiomSchema *s = find_axiom(schema);
  Subst sub;
  if (s->var("X"))
    sub.objects.emplace("X", Obj::gen("A"));
  if (s->var("A"))
    sub.objects.emplace("A", Obj::gen("A"));
  if (s->var("B"))
    sub.objects.emplace("B", Obj::gen("B"));
  return instantiate(*s, sub);
}

} // namespace

std::vector<Obligation> obligations(bool with_negation) {
  std::vector<Obligation> out;
  for (int id : cs_ids())
    out.push_back({"cs-" + std::to_string(id), cs_equation(id), false,
                   id <= 8 ? std::size_t{12} : std::size_t{0}, ""});
  out.push_back({"hom-m", hom_m_equation(), false, 0, "m is a map of bimodules"});
  {
    const Obj A = Obj::gen("A"), B = Obj::gen("B");
    out.push_back({"par-action-agreement",
                   make_equation(induced_par_action(free_bimodule(A), free_bimodule(B),
                                                    InterchangeOrder::RightFirst),
                                 induced_par_action(free_bimodule(A), free_bimodule(B),
                                                    InterchangeOrder::LeftFirst)),
                   false, 0, "both interchange orders give the same action"});
  }
  for (auto &o : naturality_squares())
    out.push_back(std::move(o));
  for (const char *lemma : {"bimod-corollary", "bimod-corollary-r", "bimod-par-action-law",
                            "bimod-par-action-law-l", "bimod-tens-action-law",
                            "bimod-tens-action-law-l"})
    out.push_back({std::string("lemma-") + lemma, lemma_instance(lemma), false, 0, ""});
  {
    const Obj A = Obj::gen("A"), B = Obj::gen("B");
    for (const auto &[name, carrier] :
         std::vector<std::pair<std::string, Obj>>{{"tens", Obj::tens(A, B)},
                                                  {"par", Obj::par(A, B)}})
      for (const auto &law : bimodule_obligations(bimodule_of(carrier)))
        out.push_back({"induced-" + name + "-" + law.id, law.eq, false, 0, ""});
  }
  if (with_negation)
    for (auto &n : negation_axioms(Obj::gen("A")))
      out.push_back({n.id, n.eq, true, 0,
                     n.id == "neg-snake-1" ? "" : "reconstructed"});
  return out;
}

Obligation find_obligation(const std::string &id, bool with_negation) {
  for (auto &o : obligations(with_negation))
    if (o.id == id)
      return o;
  throw Error("no obligation named " + id);
}

} // namespace duoidal
