#include "duoidal/proof.hpp"

#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

#include <sstream>

namespace duoidal {

namespace {

Term replace_at(const Term &t, const Path &path, std::size_t depth, const Term &repl) {
  if (depth == path.size())
    return repl;
  std::vector<Term> kids = t.children();
  kids.at(path[depth]) = replace_at(kids[path[depth]], path, depth + 1, repl);
  return t.with_children(std::move(kids));
}

struct Region {
  Term term;
  // Parent chain and window, when the region is a run of chain factors.
  Path parent;
  std::size_t start = 0;
  std::size_t len = 0;
  bool window = false;
};

std::vector<Region> regions_at(const Term &t, const Path &path, bool comp_pattern,
                               bool intro) {
  // An identity is introduced into the gap before chain factor path.back(),
  // or after the last factor when the index equals the chain length.
  if (intro && !path.empty()) {
    Path parent(path.begin(), path.end() - 1);
    const Term *p = subterm(t, parent);
    if (p && p->kind() == TermKind::Comp && path.back() <= p->children().size()) {
      const auto &f = p->children();
      std::size_t i = path.back();
      Obj o = i < f.size() ? infer_type(f[i]).cod : infer_type(f.back()).dom;
      return {{Term::id(o), parent, i, 0, true}};
    }
  }
  const Term *node = subterm(t, path);
  if (!node)
    throw Error("no subterm at path " + path_to_string(path));
  std::vector<Region> out;
  if (comp_pattern && !path.empty()) {
    Path parent(path.begin(), path.end() - 1);
    const Term *p = subterm(t, parent);
    if (p && p->kind() == TermKind::Comp) {
      const auto &f = p->children();
      std::size_t i = path.back();
      for (std::size_t len = 1; i + len <= f.size(); ++len) {
        Term w = len == 1 ? f[i]
                          : Term::comp(std::vector<Term>(f.begin() + i, f.begin() + i + len));
        out.push_back({std::move(w), parent, i, len, true});
      }
      return out;
    }
  }
  out.push_back({*node, path, 0, 0, false});
  return out;
}

Term splice(const Term &t, const Region &r, const Term &repl) {
  if (!r.window)
    return replace_at(t, r.parent, 0, repl);
  const Term *p = subterm(t, r.parent);
  std::vector<Term> f;
  const auto &old = p->children();
  f.insert(f.end(), old.begin(), old.begin() + r.start);
  if (!repl.is_id()) {
    auto mid = factors_of(repl);
    f.insert(f.end(), mid.begin(), mid.end());
  }
  f.insert(f.end(), old.begin() + r.start + r.len, old.end());
  Term chain = f.empty()      ? Term::id(infer_type(*p).dom)
               : f.size() == 1 ? f.front()
                               : Term::comp(std::move(f));
  return replace_at(t, r.parent, 0, chain);
}

bool complete(const AxiomSchema &s, const Subst &sub, std::string &missing) {
  for (const auto &v : s.vars)
    if (!sub.contains(v.name)) {
      missing = v.name;
      return false;
    }
  return true;
}

// Calls on(subst, result) for each way `s` rewrites t at `path`; stops when
// `on` returns true. Returns whether it was stopped.
template <class F>
bool enumerate_at(const Term &t, const Typing &type, const Path &path, const AxiomSchema &s,
                  Direction dir, const Subst &seed, const KernelOptions &opt,
                  std::size_t limit, std::string &why, F &&on) {
  const Term &src = dir == Direction::Forward ? s.lhs : s.rhs;
  if (!opt.allow_introduction && src.is_id())
    return false;
  for (const Region &r : regions_at(t, path, src.kind() == TermKind::Comp, src.is_id())) {
    for (const Subst &sub : match_pattern(s, src, r.term, seed, limit)) {
      std::string missing;
      if (!complete(s, sub, missing)) {
        why = "metavariable " + missing + " is not determined by the match";
        continue;
      }
      try {
        if (instantiate_side(s, src, sub) != r.term)
          continue;
      } catch (const Error &e) {
        why = e.what();
        continue;
      }
      Equation inst;
      try {
        inst = instantiate(s, sub);
      } catch (const Error &e) {
        why = e.what();
        continue;
      }
      const Term &from = dir == Direction::Forward ? inst.lhs : inst.rhs;
      const Term &to = dir == Direction::Forward ? inst.rhs : inst.lhs;
      if (from != r.term) {
        why = "instance " + to_string(from) + " does not match " + to_string(r.term);
        continue;
      }
      Term result = normalize(splice(t, r, to));
      Typing rt;
      try {
        rt = infer_type(result);
      } catch (const TypeError &e) {
        why = e.what();
        continue;
      }
      if (rt != type) {
        why = "rewrite changes the type";
        continue;
      }
      if (on(sub, result))
        return true;
    }
  }
  return false;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t from = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(from, i - from)));
      from = i + 1;
    }
  }
  std::string last = trim(s.substr(from));
  if (!last.empty() || !out.empty())
    out.push_back(last);
  return out;
}

} // namespace

std::vector<Path> all_paths(const Term &t) {
  std::vector<Path> out;
  Path cur;
  auto walk = [&](auto &self, const Term &n) -> void {
    out.push_back(cur);
    for (std::size_t i = 0; i < n.children().size(); ++i) {
      cur.push_back(i);
      self(self, n.child(i));
      cur.pop_back();
    }
  };
  walk(walk, t);
  return out;
}

StepOutcome apply_step(const Term &t, const RewriteStep &step, const KernelOptions &opt) {
  const AxiomSchema *s = find_axiom(step.schema);
  if (!s)
    throw Error("unknown schema " + step.schema);
  if (s->role == SchemaRole::Negation && !opt.with_negation)
    throw Error("schema " + step.schema + " needs negation to be enabled");
  for (const auto &[name, _] : step.subst.objects)
    if (!s->var(name))
      throw Error("schema " + step.schema + " has no metavariable " + name);
  for (const auto &[name, _] : step.subst.morphisms)
    if (!s->var(name))
      throw Error("schema " + step.schema + " has no metavariable " + name);
  Typing type = infer_type(t);
  std::string why = "no instance of " + step.schema + " at " + path_to_string(step.path);
  std::optional<StepOutcome> out;
  // Matches that leave the term unchanged are taken only if nothing else fits.
  enumerate_at(t, type, step.path, *s, step.direction, step.subst, opt, 16, why,
               [&](const Subst &sub, const Term &result) {
                 if (!out || out->result == t)
                   out = StepOutcome{result, sub};
                 return result != t;
               });
  if (!out)
    throw Error(why);
  return *out;
}

ProofCheck verify_proof(const PastingProof &proof, const KernelOptions &opt) {
  ProofCheck res;
  Term cur = proof.goal.lhs;
  res.trace.push_back(cur);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    try {
      cur = apply_step(cur, proof.steps[i], opt).result;
    } catch (const Error &e) {
      res.failed_step = i;
      res.reason = e.what();
      return res;
    }
    res.trace.push_back(cur);
  }
  if (cur != proof.goal.rhs) {
    res.failed_step = proof.steps.size();
    res.reason = "final term " + to_string(cur) + " is not the right-hand side";
    return res;
  }
  res.ok = true;
  res.failed_step = proof.steps.size();
  return res;
}

std::vector<Rewrite> rewrites(const Term &t, const std::vector<const AxiomSchema *> &schemas,
                              const KernelOptions &opt) {
  std::vector<Rewrite> out;
  Typing type = infer_type(t);
  std::string why;
  for (const Path &p : all_paths(t)) {
    for (const AxiomSchema *s : schemas) {
      if (s->role == SchemaRole::Reflexivity)
        continue;
      if (s->role == SchemaRole::Negation && !opt.with_negation)
        continue;
      for (Direction d : {Direction::Forward, Direction::Backward}) {
        enumerate_at(t, type, p, *s, d, {}, opt, 8, why,
                     [&](const Subst &sub, const Term &result) {
                       if (result != t)
                         out.push_back({{p, s->id, d, sub}, result});
                       return false;
                     });
      }
    }
  }
  return out;
}

std::optional<RewriteStep> find_step(const Term &from, const Term &to,
                                     const std::string &schema, const KernelOptions &opt) {
  std::vector<const AxiomSchema *> pool;
  if (schema.empty()) {
    for (const auto &s : list_axioms(opt.with_negation))
      pool.push_back(&s);
  } else if (const AxiomSchema *s = find_axiom(schema)) {
    pool.push_back(s);
  }
  Typing type = infer_type(from);
  std::string why;
  std::optional<RewriteStep> found;
  std::vector<Path> paths = all_paths(from);
  for (const Path &p : std::vector<Path>(paths)) {
    const Term *n = subterm(from, p);
    if (n->kind() == TermKind::Comp) {
      paths.push_back(p);
      paths.back().push_back(n->children().size());
    }
  }
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const Path &p = paths[k];
    const bool gap = !subterm(from, p);
    for (const AxiomSchema *s : pool) {
      if (s->role == SchemaRole::Reflexivity)
        continue;
      for (Direction d : {Direction::Forward, Direction::Backward}) {
        if (gap && !(d == Direction::Forward ? s->lhs : s->rhs).is_id())
          continue;
        if (enumerate_at(from, type, p, *s, d, {}, opt, 64, why,
                         [&](const Subst &sub, const Term &result) {
                           if (result != to)
                             return false;
                           found = RewriteStep{p, s->id, d, sub};
                           return true;
                         }))
          return found;
      }
    }
  }
  return std::nullopt;
}

std::string path_to_string(const Path &p) {
  if (p.empty())
    return ".";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += ".";
    out += std::to_string(p[i]);
  }
  return out;
}

Path parse_path(std::string_view text) {
  if (text == ".")
    return {};
  Path out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i)
      throw ParseError("bad path", i, std::string(text));
    out.push_back(std::stoul(std::string(text.substr(i, j - i))));
    if (j < text.size() && text[j] != '.')
      throw ParseError("bad path", j, std::string(text));
    i = j + 1;
  }
  return out;
}

std::string to_string(const RewriteStep &step) {
  return "step " + path_to_string(step.path) + " " + step.schema + " " +
         (step.direction == Direction::Forward ? "fwd" : "bwd") + " " + to_string(step.subst);
}

PastingProof parse_proof(std::string_view text) {
  PastingProof proof;
  bool have_goal = false;
  std::size_t offset = 0;
  std::size_t lineno = 0;
  while (offset <= text.size()) {
    std::size_t nl = text.find('\n', offset);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(offset, nl - offset);
    std::size_t base = offset;
    offset = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::string l = trim(line);
    if (l.empty())
      continue;
    auto fail = [&](const std::string &msg, const std::string &tok) -> ParseError {
      return ParseError("line " + std::to_string(lineno) + ": " + msg, base, tok);
    };
    std::istringstream in(l);
    std::string kw;
    in >> kw;
    if (kw == "prove") {
      if (have_goal)
        throw fail("second goal", kw);
      std::string rest = trim(l.substr(5));
      auto eq = rest.find('=');
      if (eq == std::string::npos)
        throw fail("expected '='", rest);
      proof.goal = make_equation(parse_term(trim(rest.substr(0, eq))),
                                 parse_term(trim(rest.substr(eq + 1))));
      have_goal = true;
    } else if (kw == "step") {
      if (!have_goal)
        throw fail("step before goal", kw);
      std::string path, schema, dir;
      in >> path >> schema >> dir;
      RewriteStep st;
      st.path = parse_path(path);
      st.schema = schema;
      if (dir == "fwd")
        st.direction = Direction::Forward;
      else if (dir == "bwd")
        st.direction = Direction::Backward;
      else
        throw fail("expected fwd or bwd", dir);
      const AxiomSchema *s = find_axiom(schema);
      if (!s)
        throw fail("unknown schema", schema);
      std::string rest;
      std::getline(in, rest);
      rest = trim(rest);
      if (!rest.empty()) {
        if (rest.front() != '{' || rest.back() != '}')
          throw fail("expected {...}", rest);
        for (const auto &entry : split_top(std::string_view(rest).substr(1, rest.size() - 2))) {
          if (entry.empty())
            continue;
          auto e = entry.find('=');
          if (e == std::string::npos)
            throw fail("expected Var=value", entry);
          std::string name = trim(entry.substr(0, e));
          std::string value = trim(entry.substr(e + 1));
          const MetaVar *v = s->var(name);
          if (!v)
            throw fail("schema " + schema + " has no metavariable", name);
          if (v->kind == VarKind::Object)
            st.subst.objects.emplace(name, parse_object(value));
          else
            st.subst.morphisms.emplace(name, normalize(parse_term(value)));
        }
      }
      proof.steps.push_back(std::move(st));
    } else {
      throw fail("expected 'prove' or 'step'", kw);
    }
  }
  if (!have_goal)
    throw ParseError("missing 'prove' line", 0, "");
  return proof;
}

std::string print_proof(const PastingProof &proof) {
  std::string out = "prove " + to_string(proof.goal.lhs) + " = " + to_string(proof.goal.rhs) + "\n";
  for (const auto &s : proof.steps)
    out += to_string(s) + "\n";
  return out;
}

ProofBuilder::ProofBuilder(Term start, KernelOptions opt)
    : start_(normalize(start)), cur_(start_), opt_(opt) {
  trace_.push_back(cur_);
}

ProofBuilder &ProofBuilder::rw(const std::string &schema, Direction dir, const Subst &seed,
                               const Path &under) {
  std::string last;
  for (const Path &p : all_paths(cur_)) {
    if (p.size() < under.size() || !std::equal(under.begin(), under.end(), p.begin()))
      continue;
    try {
      StepOutcome o = apply_step(cur_, {p, schema, dir, seed}, opt_);
      if (o.result == cur_)
        continue;
      steps_.push_back({p, schema, dir, o.subst});
      cur_ = o.result;
      trace_.push_back(cur_);
      return *this;
    } catch (const Error &e) {
      last = e.what();
    }
  }
  throw Error("cannot apply " + schema + (dir == Direction::Forward ? " fwd" : " bwd") +
              " to " + to_string(cur_));
}

ProofBuilder &ProofBuilder::rw_at(const Path &at, const std::string &schema, Direction dir,
                                  const Subst &seed) {
  StepOutcome o = apply_step(cur_, {at, schema, dir, seed}, opt_);
  steps_.push_back({at, schema, dir, o.subst});
  cur_ = o.result;
  trace_.push_back(cur_);
  return *this;
}

ProofBuilder &ProofBuilder::append_reversed(const ProofBuilder &other) {
  if (other.current() != cur_)
    throw Error("proof halves do not meet: " + to_string(cur_) + " vs " +
                to_string(other.current()));
  const auto &tr = other.trace();
  for (std::size_t k = other.steps().size(); k-- > 0;) {
    const RewriteStep &orig = other.steps()[k];
    auto back = find_step(tr[k + 1], tr[k], orig.schema, opt_);
    if (!back)
      throw Error("cannot reverse step " + to_string(orig));
    StepOutcome o = apply_step(cur_, *back, opt_);
    steps_.push_back(*back);
    cur_ = o.result;
    trace_.push_back(cur_);
  }
  return *this;
}

} // namespace duoidal
