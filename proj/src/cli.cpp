#include "duoidal/cli.hpp"

#include "duoidal/axioms.hpp"
#include "duoidal/bimodule.hpp"
#include "duoidal/cs.hpp"
#include "duoidal/error.hpp"
#include "duoidal/model.hpp"
#include "duoidal/proof.hpp"
#include "duoidal/search.hpp"
#include "duoidal/syntax.hpp"
#include "duoidal/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace duoidal {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A path, or the name of a shipped model with or without the extension.
ThinModel resolve_model(const std::string &arg) {
  if (std::filesystem::exists(arg))
    return load_model(arg);
  std::string name = std::filesystem::path(arg).filename().string();
  if (name.size() > 6 && name.ends_with(".model"))
    name.resize(name.size() - 6);
  auto names = bundled_model_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("no model file " + arg);
  return bundled_model(name);
}

Equation parse_equation(const std::string &text) {
  return parse_proof("prove " + text).goal;
}

std::string type_line(const Term &t) {
  Typing ty = infer_type(t);
  return to_string(ty.dom) + " ==> " + to_string(ty.cod);
}

int model_check(const ThinModel &m, std::ostream &out) {
  ModelCheckReport r = check_duoidal(m);
  for (const auto &f : r.families) {
    out << (f.ok ? "ok     " : "FAILED ") << f.family << " (" << f.checked << " checked)";
    if (!f.ok)
      out << " witness " << element_tuple(m, f.witness) << ": " << f.detail;
    out << "\n";
  }
  return r.ok() ? 0 : 1;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Checker for duoidal coherence obligations", "m4check"};
  app.require_subcommand(1);

  auto *axioms = app.add_subcommand("axioms", "Schema catalogue");
  auto *axioms_list = axioms->add_subcommand("list", "Print every schema with its type");
  axioms->require_subcommand(1);
  bool list_neg = false;
  axioms_list->add_flag("--negation", list_neg, "Include the negation schemas");

  auto *typecheck = app.add_subcommand("typecheck", "Print the type of a term");
  std::string term_text;
  typecheck->add_option("term", term_text)->required();

  auto *prove = app.add_subcommand("prove", "Check proof scripts");
  std::vector<std::string> scripts;
  prove->add_option("scripts", scripts)->required();

  auto *search = app.add_subcommand("search", "Search for a proof of an equation");
  std::string eq_text;
  SearchBudget budget;
  budget.max_steps = 30;
  budget.timeout_seconds = 60;
  search->add_option("equation", eq_text, "\"<lhs> = <rhs>\"")->required();

  auto *derive = app.add_subcommand("derive", "Build d^l or d^r from the default actions");
  std::string which;
  std::vector<std::string> objs;
  derive->add_option("map", which)->required()->check(CLI::IsMember({"dl", "dr"}));
  derive->add_option("objects", objs)->required()->expected(3);

  auto *model = app.add_subcommand("model", "Finite thin models");
  model->require_subcommand(1);
  auto *model_check_cmd = model->add_subcommand("check", "Check the duoidal inequalities");
  auto *model_bimods = model->add_subcommand("bimodules", "List the bimodule elements");
  std::string model_file;
  model_check_cmd->add_option("file", model_file)->required();
  model_bimods->add_option("file", model_file)->required();

  auto *verify = app.add_subcommand("verify", "Check every registered obligation");
  std::vector<std::string> model_files;
  bool negation = false, timings = false;
  std::string format = "text", output;
  verify->add_option("--model", model_files, "Model file (default: shipped models)");
  verify->add_flag("--negation", negation, "Include the negation conditions");
  verify->add_flag("--timings", timings, "Print elapsed times");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));
  verify->add_option("-o,--output", output, "Write the report to a file");

  for (auto *cmd : {search, verify})
    cmd->add_option("--budget", budget.max_steps, "Step budget")->check(CLI::PositiveNumber);
  search->add_option("--timeout", budget.timeout_seconds, "Seconds")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (axioms_list->parsed()) {
      for (const auto &s : list_axioms(list_neg)) {
        if (s.role == SchemaRole::Reflexivity)
          continue;
        out << describe(s);
        if (!s.note.empty())
          out << "  [" << s.note << "]";
        out << "\n";
      }
      return 0;
    }
    if (typecheck->parsed()) {
      out << type_line(parse_term(term_text)) << "\n";
      return 0;
    }
    if (prove->parsed()) {
      int rc = 0;
      for (const auto &file : scripts) {
        PastingProof p = parse_proof(read_file(file));
        ProofCheck c = verify_proof(p);
        if (c.ok) {
          out << file << ": ok, " << p.steps.size() << " steps\n";
        } else {
          out << file << ": rejected at step " << c.failed_step << ": " << c.reason << "\n";
          rc = 1;
        }
      }
      return rc;
    }
    if (search->parsed()) {
      SearchResult r = search_proof(parse_equation(eq_text), budget);
      if (!r.proof) {
        out << "no proof (" << r.stop_reason << ", " << r.states << " states)\n";
        return 1;
      }
      out << print_proof(*r.proof);
      return 0;
    }
    if (derive->parsed()) {
      std::vector<BimoduleSym> b;
      for (const auto &o : objs)
        b.push_back(bimodule_of(parse_object(o)));
      Term t = which == "dl" ? build_dl(b[0], b[1], b[2]) : build_dr(b[0], b[1], b[2]);
      out << to_string(t) << "\n  : " << type_line(t) << "\n";
      return 0;
    }
    if (model_check_cmd->parsed())
      return model_check(resolve_model(model_file), out);
    if (model_bimods->parsed()) {
      ThinModel m = resolve_model(model_file);
      std::string line;
      for (int e : enumerate_bimodules(m))
        line += (line.empty() ? "" : " ") + m.carrier[e];
      out << line << "\n";
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions opt;
      opt.with_negation = negation;
      opt.budget = budget.max_steps;
      if (model_files.empty())
        for (const auto &n : default_models())
          opt.models.push_back(bundled_model(n));
      for (const auto &f : model_files)
        opt.models.push_back(resolve_model(f));
      VerificationReport rep = verify_all(opt);
      std::string body = format == "tsv" ? rep.tsv(timings) : rep.text(timings);
      if (output.empty()) {
        out << body;
      } else {
        std::ofstream f(output);
        if (!f)
          throw UsageError("cannot write " + output);
        f << body;
      }
      return rep.ok() ? 0 : 1;
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const TypeError &e) {
    err << "type error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError &e) {
    err << "model error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace duoidal
