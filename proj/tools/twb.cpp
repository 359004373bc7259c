// twb: command-line front end of the theory workbench.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "twb/classifiers.hpp"
#include "twb/coding.hpp"
#include "twb/combinators.hpp"
#include "twb/eterm.hpp"
#include "twb/evaluator.hpp"
#include "twb/proofs.hpp"
#include "twb/syntax.hpp"
#include "twb/text.hpp"
#include "twb/translations.hpp"

using json = nlohmann::ordered_json;
using namespace twb;

namespace {

/// Exit statuses.
constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readInput(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Language languageArg(const std::string& s) {
  if (auto l = languageFromName(s)) return *l;
  try {
    return parseTheoryId(s).language();
  } catch (const DomainError&) {
    throw UsageError("unknown language '" + s + "'");
  }
}

const char* kindName(Kind k) {
  switch (k) {
    case Kind::Var: return "var";
    case Kind::Const: return "const";
    case Kind::Plus: return "plus";
    case Kind::Times: return "times";
    case Kind::Pair: return "pair";
    case Kind::Eval: return "eval";
    case Kind::Subst: return "subst";
    case Kind::DefinedG: return "g";
    case Kind::DefinedA: return "a";
    case Kind::Eq: return "eq";
    case Kind::In: return "in";
    case Kind::Tr: return "tr";
    case Kind::Ap: return "ap";
    case Kind::EqOmega: return "eqow";
    case Kind::EqType: return "eqok";
    case Kind::Mem: return "mem";
    case Kind::Form: return "form";
    case Kind::Subform: return "subform";
    case Kind::Ev: return "ev";
    case Kind::Bot: return "bot";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Imp: return "imp";
    case Kind::Forall: return "forall";
    case Kind::Exists: return "exists";
  }
  return "?";
}

json variableJson(const Variable& v) {
  json j;
  switch (v.sort.kind) {
    case SortKind::Num: j["sort"] = "num"; break;
    case SortKind::Type: j["sort"] = "type"; break;
    case SortKind::Set: j["sort"] = "set"; break;
  }
  j["level"] = v.sort.level;
  j["index"] = v.index;
  return j;
}

json exprJson(const Expr& e) {
  json j;
  j["kind"] = kindName(e.kind);
  switch (e.kind) {
    case Kind::In:
    case Kind::Tr:
    case Kind::EqType:
    case Kind::Mem:
    case Kind::DefinedG:
    case Kind::DefinedA: j["level"] = e.level; break;
    default: break;
  }
  if (e.kind == Kind::Var || e.isQuantifier()) j["var"] = variableJson(e.var);
  if (e.kind == Kind::Const) j["constant"] = printConstant(*e.constant);
  if (!e.kids.empty()) {
    json kids = json::array();
    for (const auto& k : e.kids) kids.push_back(exprJson(*k));
    j["kids"] = std::move(kids);
  }
  return j;
}

json pathJson(const std::optional<ExprPath>& p) {
  if (!p) return nullptr;
  json a = json::array();
  for (auto i : *p) a.push_back(i);
  return a;
}

void emit(bool asJson, const json& j, const std::string& text) {
  if (asJson) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}


ExprPtr parseIn(const std::string& text, Language lang, bool allowDefined = false) {
  return parseExpr(text, lang, SortCheckOptions{allowDefined});
}

Natural parseValues(const std::string& list) {
  std::vector<Natural> vals;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto n = parseDecimal(item);
    if (!n) throw UsageError("bad evaluation value '" + item + "'");
    vals.push_back(*n);
  }
  return coding::seqCode(vals);
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Theory named by a "; theory: ID" comment line.
std::string theoryHeader(const std::string& text) {
  const std::string marker = "; theory:";
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind(marker, 0) == 0) return trimmed(line.substr(marker.size()));
  throw UsageError("no --theory given and the file has no '; theory:' line");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twb: workbench for BT, SA, Ar and PATr"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "JSON output")->trigger_on_parse();

  std::string input = "-";
  std::string language = "BT";
  auto inputOpt = [&](CLI::App* sub) { sub->add_option("input", input, "input file, '-' for stdin"); };
  auto jsonOpt = [&](CLI::App* sub) { sub->add_flag("--json", asJson, "JSON output"); };

  // parse / print
  auto* parse = app.add_subcommand("parse", "parse and print canonically");
  parse->add_option("--language,-l", language, "BT, SA, Ar or PATr")->required();
  inputOpt(parse);
  jsonOpt(parse);

  auto* print = app.add_subcommand("print", "render in logical notation");
  print->add_option("--language,-l", language)->required();
  inputOpt(print);
  jsonOpt(print);

  // classify / fragment
  std::string klass;
  auto* classify = app.add_subcommand("classify", "decide a syntactic class");
  classify->add_option("--class", klass, "elementary:N | simple:K | fragment")->required();
  classify->add_option("--language,-l", language);
  inputOpt(classify);
  jsonOpt(classify);

  auto* fragment = app.add_subcommand("fragment", "smallest fragment containing the formula");
  fragment->add_option("--language,-l", language)->required();
  inputOpt(fragment);
  jsonOpt(fragment);

  // translate
  std::string from, to, method;
  bool eliminate = false, emitGodel = false;
  auto* translate = app.add_subcommand("translate", "translate a formula between theories");
  translate->add_option("--from", from)->required();
  translate->add_option("--to", to)->required();
  translate->add_option("--method", method, "hat | star | tilde | minus")->required();
  translate->add_flag("--eliminate", eliminate, "remove g_k and a_k after tilde");
  translate->add_flag("--emit-godel", emitGodel, "also print the Goedel code");
  inputOpt(translate);
  jsonOpt(translate);

  // combinators
  std::uint64_t budget = defaultBudget();
  bool trace = false;
  auto* reduceCmd = app.add_subcommand("reduce", "normal-order reduction");
  reduceCmd->add_option("--budget", budget)->check(CLI::PositiveNumber);
  reduceCmd->add_flag("--trace", trace, "print every intermediate term");
  inputOpt(reduceCmd);
  jsonOpt(reduceCmd);

  std::string lambdaVar;
  auto* lambda = app.add_subcommand("lambda", "bracket abstraction");
  lambda->add_option("--var", lambdaVar, "type-0 variable")->required();
  inputOpt(lambda);
  jsonOpt(lambda);

  auto* extract = app.add_subcommand("extract", "disjunct selected by a realizer");
  extract->add_option("--budget", budget)->check(CLI::PositiveNumber);
  inputOpt(extract);
  jsonOpt(extract);

  // coding
  auto* godel = app.add_subcommand("godel", "Goedel numbering");
  godel->require_subcommand(1);
  bool termInput = false;
  auto* gEncode = godel->add_subcommand("encode", "code of an expression");
  gEncode->add_option("--language,-l", language)->required();
  gEncode->add_flag("--term", termInput, "input is an external term");
  inputOpt(gEncode);
  jsonOpt(gEncode);
  std::string code;
  auto* gDecode = godel->add_subcommand("decode", "expression of a code");
  gDecode->add_option("--language,-l", language)->required();
  gDecode->add_option("code", code, "decimal code, or a file holding one (- for stdin)")->required();
  jsonOpt(gDecode);
  auto* gTags = godel->add_subcommand("tags", "tag table");
  gTags->add_option("--language,-l", language)->required();
  jsonOpt(gTags);

  // proofs
  std::string theory;
  auto* check = app.add_subcommand("check", "check a proof file");
  check->add_option("--theory", theory, "BT:2, SA, PATr:1:r, ...; defaults to the file's '; theory:' line");
  inputOpt(check);
  jsonOpt(check);

  // truth
  unsigned level = 0;
  std::uint64_t bound = 50;
  std::string env, values;
  auto* evalTruth = app.add_subcommand("eval-truth", "bounded truth evaluation");
  evalTruth->add_option("--level", level, "k >= 1 for Tr_k; omit for plain arithmetic");
  evalTruth->add_option("--bound", bound, "quantifier search bound");
  evalTruth->add_option("--env", env, "evaluation as a sequence code");
  evalTruth->add_option("--values", values, "evaluation as comma-separated values");
  inputOpt(evalTruth);
  jsonOpt(evalTruth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kUsage);
  }

  try {
    if (*parse) {
      auto e = parseIn(readInput(input), languageArg(language));
      emit(asJson, json{{"text", printExpr(*e)}, {"expr", exprJson(*e)}}, printExpr(*e) + "\n");
      return kOk;
    }
    if (*print) {
      auto e = parseIn(readInput(input), languageArg(language));
      emit(asJson, json{{"text", prettyExpr(*e)}}, prettyExpr(*e) + "\n");
      return kOk;
    }
    if (*classify) {
      std::string text = readInput(input);
      auto colon = klass.find(':');
      std::string name = klass.substr(0, colon);
      if (name == "fragment") {
        auto e = parseIn(text, languageArg(language), true);
        unsigned f = fragmentOf(*e);
        emit(asJson, json{{"class", klass}, {"fragment", f}}, std::to_string(f) + "\n");
        return kOk;
      }
      if (colon == std::string::npos) throw UsageError("class needs a level, e.g. elementary:1");
      unsigned n = 0;
      try {
        n = static_cast<unsigned>(std::stoul(klass.substr(colon + 1)));
      } catch (const std::exception&) {
        throw UsageError("bad class level in '" + klass + "'");
      }
      ClassReport r;
      if (name == "elementary") {
        r = isElementary(n, *parseIn(text, Language::BT));
      } else if (name == "simple") {
        Language lang = classify->count("--language") ? languageArg(language) : Language::SA;
        r = isKSimple(n, *parseIn(text, lang));
      } else {
        throw UsageError("unknown class '" + name + "'");
      }
      std::string out = r.isMember ? "true\n" : "false at " + pathString(*r.witness) + ": " + r.reason + "\n";
      emit(asJson,
           json{{"class", klass}, {"member", r.isMember}, {"witness", pathJson(r.witness)}, {"reason", r.reason}},
           out);
      return r.isMember ? kOk : kRejected;
    }
    if (*fragment) {
      auto e = parseIn(readInput(input), languageArg(language), true);
      unsigned f = fragmentOf(*e);
      emit(asJson, json{{"class", "fragment"}, {"fragment", f}}, std::to_string(f) + "\n");
      return kOk;
    }
    if (*translate) {
      std::string text = readInput(input);
      ExprPtr out;
      if (from == "SA" && to == "Ar" && method == "hat") {
        out = hat(*parseIn(text, Language::SA));
      } else if (from == "SA" && (to == "BT" || to == "BTcl") && method == "star") {
        out = star(*parseIn(text, Language::SA));
      } else if (from == "PATr" && to == "SA" && method == "tilde") {
        out = tilde(*parseIn(text, Language::PATr));
        if (eliminate) out = eliminateDefined(*out);
      } else if ((from == "BTcl" || from == "BT") && to == "BT" && method == "minus") {
        out = minus(*parseIn(text, Language::BT));
      } else {
        throw UsageError("no translation " + from + " -> " + to + " by " + method);
      }
      json j{{"from", from}, {"to", to}, {"method", method}, {"text", printExpr(*out)}};
      std::string txt = printExpr(*out) + "\n";
      if (emitGodel) {
        std::string c = toDecimal(coding::encode(*out));
        j["godel"] = c;
        txt += c + "\n";
      }
      emit(asJson, j, txt);
      return kOk;
    }
    if (*reduceCmd) {
      auto t = parseETerm(readInput(input));
      std::ostringstream traceOut;
      TraceFn fn;
      if (trace) fn = [&](const ETerm& x) { traceOut << printETerm(x) << "\n"; };
      auto r = reduce(t, budget, fn);
      json j{{"steps", r.steps}, {"exhausted", r.exhausted()},
             {"normal_form", r.exhausted() ? json(nullptr) : json(printETerm(*r.normalForm))},
             {"last", printETerm(*r.last)}};
      std::string txt = trace ? traceOut.str()
                              : (r.exhausted() ? "exhausted after " + std::to_string(r.steps) + " steps\n"
                                               : printETerm(*r.normalForm) + "\n");
      if (trace && r.exhausted()) txt += "exhausted after " + std::to_string(r.steps) + " steps\n";
      emit(asJson, j, txt);
      return kOk;
    }
    if (*lambda) {
      auto v = variableFromSexp(readSexp(lambdaVar));
      if (!v) throw UsageError("bad variable '" + lambdaVar + "'");
      auto out = lambdaAbstract(*v, parseETerm(readInput(input)));
      emit(asJson, json{{"text", printETerm(*out)}}, printETerm(*out) + "\n");
      return kOk;
    }
    if (*extract) {
      auto x = extractDisjunct(parseETerm(readInput(input)), budget);
      json j{{"side", disjunctName(x.side)},
             {"selector", printETerm(*x.selector)},
             {"steps", x.reduction.steps},
             {"exhausted", x.reduction.exhausted()}};
      emit(asJson, j, std::string(disjunctName(x.side)) + "\n");
      return kOk;
    }
    if (*gEncode) {
      std::string text = readInput(input);
      Natural c = termInput ? coding::encode(*parseETerm(text)) : coding::encode(*parseIn(text, languageArg(language), true));
      emit(asJson, json{{"code", toDecimal(c)}}, toDecimal(c) + "\n");
      return kOk;
    }
    if (*gDecode) {
      auto n = parseDecimal(trimmed(code));
      if (!n && (code == "-" || std::filesystem::exists(code))) n = parseDecimal(trimmed(readInput(code)));
      if (!n) throw UsageError("a code is a decimal natural");
      auto e = coding::decode(*n, languageArg(language), coding::DecodeOptions{true});
      emit(asJson, json{{"code", toDecimal(*n)}, {"text", printExpr(*e)}}, printExpr(*e) + "\n");
      return kOk;
    }
    if (*gTags) {
      Language lang = languageArg(language);
      json rows = json::array();
      std::string txt = coding::tagTableText(lang);
      std::istringstream lines(txt);
      std::string line;
      while (std::getline(lines, line)) {
        std::istringstream fields(line);
        unsigned tag = 0;
        std::string name, rest;
        fields >> tag >> name;
        std::getline(fields, rest);
        rows.push_back(json{{"tag", tag}, {"name", name}, {"children", trimmed(rest)}});
      }
      emit(asJson, json{{"language", std::string(languageName(lang))}, {"tags", rows}}, txt);
      return kOk;
    }
    if (*check) {
      std::string text = readInput(input);
      if (theory.empty()) theory = theoryHeader(text);
      TheoryId id;
      try {
        id = parseTheoryId(theory);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      Proof p = parseProof(text, id.language());
      Verdict v = checkProof(id, p);
      json j{{"theory", theoryName(id)}, {"accepted", v.accepted}, {"lines", p.lines.size()}};
      if (!v.accepted) {
        j["line"] = v.line;
        j["reason"] = v.reason;
      }
      std::string txt = v.accepted ? "accepted (" + std::to_string(p.lines.size()) + " lines)\n"
                                   : "rejected at line " + std::to_string(v.line) + ": " + v.reason + "\n";
      emit(asJson, j, txt);
      return v.accepted ? kOk : kRejected;
    }
    if (*evalTruth) {
      std::string text = trimmed(readInput(input));
      Natural l = 0;
      if (!env.empty()) {
        auto n = parseDecimal(env);
        if (!n) throw UsageError("--env takes a decimal sequence code");
        l = *n;
      } else if (!values.empty()) {
        l = parseValues(values);
      }
      TruthVerdict v;
      if (level > 0) {
        Natural m;
        if (auto n = parseDecimal(text)) m = *n;
        else m = coding::encode(*parseIn(text, Language::PATr));
        v = trEval(level, m, l, bound);
      } else {
        v = evalArithmetic(*parseIn(text, Language::PATr), l, bound);
      }
      json j{{"verdict", truthName(v.value)}, {"reason", openReasonName(v.reason)},
             {"witness", v.witness ? json(toDecimal(*v.witness)) : json(nullptr)}};
      std::string txt = truthName(v.value);
      if (v.value == Truth::Unknown) txt += std::string(" (") + openReasonName(v.reason) + ")";
      if (v.witness) txt += std::string(v.value == Truth::True ? " witness " : " counterexample ") + toDecimal(*v.witness);
      emit(asJson, j, txt + "\n");
      return kOk;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const SortError& e) {
    std::cerr << "sort error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejected;
  }
  return kUsage;
}
