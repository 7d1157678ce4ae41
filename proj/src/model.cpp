#include "duoidal/model.hpp"

#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace duoidal {

int ThinModel::element(const std::string &n) const {
  for (int i = 0; i < size(); ++i)
    if (carrier[i] == n)
      return i;
  throw ModelError("unknown element " + n + " in model " + name);
}

namespace {

std::string tuple_of(const ThinModel &m, std::initializer_list<int> xs) {
  return element_tuple(m, std::vector<int>(xs));
}

void validate(const ThinModel &m) {
  const int n = m.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && m.leq[x][y] && m.leq[y][x])
        throw ModelError("leq is not antisymmetric at " + tuple_of(m, {x, y}));
      for (int z = 0; z < n; ++z)
        if (m.leq[x][y] && m.leq[y][z] && !m.leq[x][z])
          throw ModelError("leq is not transitive at " + tuple_of(m, {x, y, z}));
    }
  auto check_table = [&](const std::vector<std::vector<int>> &t, int unit, const char *what) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (t[x][y] < 0)
          throw ModelError(std::string(what) + " table misses " + tuple_of(m, {x, y}));
    for (int x = 0; x < n; ++x)
      if (t[unit][x] != x || t[x][unit] != x)
        throw ModelError(std::string(what) + " unit law fails at " + tuple_of(m, {x}));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (t[t[x][y]][z] != t[x][t[y][z]])
            throw ModelError(std::string(what) + " is not associative at " +
                             tuple_of(m, {x, y, z}));
    for (int x = 0; x < n; ++x)
      for (int x2 = 0; x2 < n; ++x2)
        if (m.leq[x][x2])
          for (int y = 0; y < n; ++y) {
            if (!m.leq[t[x][y]][t[x2][y]] || !m.leq[t[y][x]][t[y][x2]])
              throw ModelError(std::string(what) + " is not monotone at " +
                               tuple_of(m, {x, x2, y}));
          }
  };
  check_table(m.tens, m.unit_tens, "tens");
  check_table(m.par, m.unit_par, "par");
  if (m.neg)
    for (int x = 0; x < n; ++x)
      if ((*m.neg)[x] < 0)
        throw ModelError("neg table misses " + m.carrier[x]);
}

} // namespace

ThinModel parse_model(std::string_view text, const std::string &name) {
  ThinModel m;
  m.name = name;
  bool have_carrier = false, have_it = false, have_r = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0, offset = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t base = offset;
    offset += line.size() + 1;
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string tok; ls >> tok;)
      w.push_back(tok);
    if (w.empty())
      continue;
    auto fail = [&](const std::string &msg) {
      return ParseError("line " + std::to_string(lineno) + ": " + msg, base, w[0]);
    };
    auto arity = [&](std::size_t k) {
      if (w.size() != k + 1)
        throw fail("'" + w[0] + "' takes " + std::to_string(k) + " arguments");
    };
    auto el = [&](const std::string &s) {
      for (int i = 0; i < m.size(); ++i)
        if (m.carrier[i] == s)
          return i;
      throw fail("unknown element '" + s + "'");
    };
    if (w[0] == "carrier") {
      if (have_carrier)
        throw fail("second carrier line");
      if (w.size() < 2)
        throw fail("empty carrier");
      std::set<std::string> seen;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!seen.insert(w[i]).second)
          throw fail("duplicate element '" + w[i] + "'");
        m.carrier.push_back(w[i]);
      }
      const int n = m.size();
      m.leq.assign(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i)
        m.leq[i][i] = true;
      m.tens.assign(n, std::vector<int>(n, -1));
      m.par.assign(n, std::vector<int>(n, -1));
      have_carrier = true;
      continue;
    }
    if (!have_carrier)
      throw fail("'carrier' must come first");
    if (w[0] == "leq") {
      arity(2);
      m.leq[el(w[1])][el(w[2])] = true;
    } else if (w[0] == "unit_tens") {
      arity(1);
      m.unit_tens = el(w[1]);
      have_it = true;
    } else if (w[0] == "unit_par") {
      arity(1);
      m.unit_par = el(w[1]);
      have_r = true;
    } else if (w[0] == "tens" || w[0] == "par") {
      arity(3);
      auto &t = w[0] == "tens" ? m.tens : m.par;
      int x = el(w[1]), y = el(w[2]);
      if (t[x][y] >= 0 && t[x][y] != el(w[3]))
        throw fail("conflicting entry for " + w[1] + " " + w[2]);
      t[x][y] = el(w[3]);
    } else if (w[0] == "neg") {
      arity(2);
      if (!m.neg)
        m.neg = std::vector<int>(m.size(), -1);
      (*m.neg)[el(w[1])] = el(w[2]);
    } else {
      throw fail("unknown directive '" + w[0] + "'");
    }
  }
  if (!have_carrier)
    throw ParseError("missing carrier line", 0, "");
  if (!have_it || !have_r)
    throw ParseError("missing unit_tens or unit_par line", 0, "");
  validate(m);
  return m;
}

namespace {
struct Asset {
  const char *name;
  const char *text;
};
const Asset kModels[] = {
#include "bundled_models.inc"
    {nullptr, nullptr}};
} // namespace

std::vector<std::string> bundled_model_names() {
  std::vector<std::string> out;
  for (const Asset *a = kModels; a->name; ++a)
    out.push_back(a->name);
  return out;
}

ThinModel bundled_model(const std::string &name) {
  for (const Asset *a = kModels; a->name; ++a)
    if (name == a->name)
      return parse_model(a->text, name);
  throw ModelError("no bundled model named " + name);
}

std::vector<std::string> default_models() { return {"bool-or-and", "singleton", "tropical-3"}; }

ThinModel load_model(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw ModelError("cannot read model file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string name = path;
  if (auto s = name.find_last_of('/'); s != std::string::npos)
    name = name.substr(s + 1);
  if (auto d = name.rfind(".model"); d != std::string::npos && d + 6 == name.size())
    name = name.substr(0, d);
  return parse_model(ss.str(), name);
}

bool ModelCheckReport::ok() const {
  for (const auto &f : families)
    if (!f.ok)
      return false;
  return true;
}

std::string element_tuple(const ThinModel &m, const std::vector<int> &xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      out += ",";
    out += m.carrier.at(xs[i]);
  }
  return out + ")";
}

ModelCheckReport check_duoidal(const ThinModel &m) {
  ModelCheckReport rep;
  const int n = m.size();
  FamilyCheck inter;
  inter.family = "duoidal-interchange";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          ++inter.checked;
          int lhs = m.tens[m.par[a][b]][m.par[c][d]];
          int rhs = m.par[m.tens[a][c]][m.tens[b][d]];
          if (inter.ok && !m.leq[lhs][rhs]) {
            inter.ok = false;
            inter.witness = {a, b, c, d};
            inter.detail = "(a%b)*(c%d) = " + m.carrier[lhs] + " is not below (a*c)%(b*d) = " +
                           m.carrier[rhs];
          }
        }
  rep.families.push_back(inter);
  const int R = m.unit_par, I = m.unit_tens;
  FamilyCheck mu;
  mu.family = "duoidal-mu";
  mu.checked = 1;
  if (!m.leq[m.tens[R][R]][R]) {
    mu.ok = false;
    mu.witness = {R};
    mu.detail = "R * R is not below R";
  }
  rep.families.push_back(mu);
  FamilyCheck eta;
  eta.family = "duoidal-eta";
  eta.checked = 1;
  if (!m.leq[I][R]) {
    eta.ok = false;
    eta.witness = {I, R};
    eta.detail = "I is not below R";
  }
  rep.families.push_back(eta);
  return rep;
}

int eval_object(const ThinModel &m, const Obj &o, const Env &env) {
  switch (o.kind()) {
  case ObjKind::UnitTens:
    return m.unit_tens;
  case ObjKind::UnitPar:
    return m.unit_par;
  case ObjKind::Gen: {
    auto it = env.find(o.name());
    if (it == env.end())
      throw ModelError("unbound generator " + o.name());
    return it->second;
  }
  case ObjKind::Tens:
    return m.tens[eval_object(m, o.left(), env)][eval_object(m, o.right(), env)];
  case ObjKind::Par: {
    int acc = m.unit_par;
    for (const auto &p : o.parts())
      acc = m.par[acc][eval_object(m, p, env)];
    return acc;
  }
  case ObjKind::Neg:
    if (!m.neg)
      throw ModelError("model " + m.name + " has no negation table");
    return (*m.neg)[eval_object(m, o.inner(), env)];
  }
  return 0;
}

namespace {

Denotation eval_rec(const ThinModel &m, const Term &t, const Env &env) {
  Denotation d;
  switch (t.kind()) {
  case TermKind::Comp: {
    const auto &f = t.children();
    Denotation first = eval_rec(m, f.front(), env);
    Denotation prev = first;
    for (std::size_t i = 1; i < f.size(); ++i) {
      Denotation cur = eval_rec(m, f[i], env);
      if (cur.cod != prev.dom)
        throw ModelError("composite does not chain in model " + m.name);
      prev = cur;
    }
    d = {prev.dom, first.cod};
    break;
  }
  case TermKind::Tens: {
    Denotation l = eval_rec(m, t.child(0), env), r = eval_rec(m, t.child(1), env);
    d = {m.tens[l.dom][r.dom], m.tens[l.cod][r.cod]};
    break;
  }
  case TermKind::Par: {
    d = {m.unit_par, m.unit_par};
    for (const auto &c : t.children()) {
      Denotation x = eval_rec(m, c, env);
      d = {m.par[d.dom][x.dom], m.par[d.cod][x.cod]};
    }
    break;
  }
  default: {
    Typing ty = infer_type(t);
    d = {eval_object(m, ty.dom, env), eval_object(m, ty.cod, env)};
  }
  }
  if (!m.leq[d.dom][d.cod])
    throw ModelError(to_string(t) + " has no denotation: " + m.carrier[d.dom] +
                     " is not below " + m.carrier[d.cod]);
  return d;
}

} // namespace

Denotation eval_term(const ThinModel &m, const Term &t, const Env &env) {
  return eval_rec(m, t, env);
}

std::vector<int> enumerate_bimodules(const ThinModel &m) {
  std::vector<int> out;
  const int R = m.unit_par;
  for (int a = 0; a < m.size(); ++a)
    if (m.leq[m.tens[m.tens[R][a]][R]][a])
      out.push_back(a);
  return out;
}

EquationVerdict check_equation_in_model(const ThinModel &m, const Equation &eq,
                                        const Env &env) {
  EquationVerdict v;
  v.assignments = 1;
  for (const Term *side : {&eq.lhs, &eq.rhs}) {
    try {
      eval_term(m, *side, env);
    } catch (const ModelError &e) {
      std::string msg = e.what();
      if (msg.rfind("unbound", 0) == 0 || msg.find("no negation table") != std::string::npos)
        throw;
      v.ok = false;
      v.witness = env;
      v.detail = msg;
      return v;
    }
  }
  return v;
}

namespace {
void free_gens(const Term &t, std::vector<Term> &out) {
  if (t.kind() == TermKind::FreeGen) {
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
    return;
  }
  for (const auto &c : t.children())
    free_gens(c, out);
}
} // namespace

EquationVerdict check_equation_all(const ThinModel &m, const Equation &eq) {
  // Free morphisms are hypotheses: assignments where one has no denotation
  // are skipped.
  std::vector<Term> hyps;
  free_gens(eq.lhs, hyps);
  free_gens(eq.rhs, hyps);
  std::vector<std::string> gens = object_gens(eq.lhs);
  for (const auto &g : object_gens(eq.rhs))
    if (std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  const std::vector<int> elems = enumerate_bimodules(m);
  EquationVerdict total;
  if (elems.empty() && !gens.empty())
    return total;
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    Env env;
    for (std::size_t i = 0; i < gens.size(); ++i)
      env[gens[i]] = elems[idx[i]];
    bool vacuous = false;
    for (const auto &h : hyps) {
      Typing ty = infer_type(h);
      if (!m.leq[eval_object(m, ty.dom, env)][eval_object(m, ty.cod, env)])
        vacuous = true;
    }
    EquationVerdict v = vacuous ? EquationVerdict{} : check_equation_in_model(m, eq, env);
    total.assignments += vacuous ? 0 : 1;
    if (!v.ok) {
      total.ok = false;
      total.witness = v.witness;
      total.detail = v.detail;
      return total;
    }
    std::size_t k = gens.size();
    while (k > 0) {
      --k;
      if (++idx[k] < elems.size())
        break;
      idx[k] = 0;
      if (k == 0) {
        k = gens.size() + 1;
        break;
      }
    }
    if (gens.empty() || k == gens.size() + 1)
      break;
  }
  return total;
}

} // namespace duoidal
