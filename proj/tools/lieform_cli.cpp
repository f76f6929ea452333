// lieform: command-line front end.
//
//   lieform validate FILE
//   lieform analyze FILE [--formation NAME]...
//   lieform normalisers FILE [--formation NAME]
//   lieform derivations FILE
//   lieform check-intravariance FILE [--subalgebra SPEC] [--method linear|extension|both]
//   lieform verify-chain FILE CHAINFILE [--formation NAME]
//   lieform sweep --field GF(p) --max-dim N [--formation NAME] [--cap K] [--seed S]
//
// --json switches every command to JSON output.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lieform/lieform.hpp"

namespace {

using namespace lieform;

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kParseError = 2,
  kUnsupportedField = 3,
  kInvalidAlgebra = 4,
  kNotIntravariant = 10,
  kCoverAvoidViolation = 11,
  kCriteriaDisagree = 12,
  kChainRejected = 13,
  kIntravarianceCriteria = 14,
  kNoCriticalDescent = 15,
  kNotInFormation = 16,
};

int exit_code_for(Property p) {
  switch (p) {
    case Property::NotIntravariant: return kNotIntravariant;
    case Property::CoverAvoid: return kCoverAvoidViolation;
    case Property::CriteriaDisagree: return kCriteriaDisagree;
    case Property::IntravarianceCriteria: return kIntravarianceCriteria;
    case Property::NoCriticalDescent: return kNoCriticalDescent;
    case Property::NotInFormation: return kNotInFormation;
  }
  return kError;
}

struct Options {
  bool json = false;
  std::string file;
  std::string chain_file;
  std::vector<std::string> formations;
  std::optional<std::string> subalgebra;
  std::string method = "both";
  std::string field = "GF(2)";
  std::size_t max_dim = 3;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = 1;
};

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

template <FieldElement K>
std::vector<Formation<K>> formations_of(const Options& opt) {
  std::vector<Formation<K>> out;
  for (const auto& name : opt.formations) out.push_back(formations::by_name<K>(name));
  if (out.empty()) out.push_back(formations::nilpotent<K>());
  return out;
}

int cmd_validate(const Options& opt) {
  auto algebra = parse_algebra(read_json_file(opt.file));
  return std::visit(
      [&](const auto& L) {
        auto report = validate(L);
        Json j;
        j["valid"] = report.ok();
        Json triples = Json::array();
        std::string text;
        for (const auto& t : report.jacobi_violations) {
          triples.push_back({t.i, t.j, t.k});
          text += "Jacobi identity fails on basis triple (" + std::to_string(t.i) + ", " + std::to_string(t.j) +
                  ", " + std::to_string(t.k) + ")\n";
        }
        j["jacobi_violations"] = std::move(triples);
        j["soluble"] = report.soluble;
        if (report.jacobi_violations.empty() && !report.soluble) text += "algebra is not soluble\n";
        if (report.ok()) text = "valid: " + fingerprint(L) + "\n";
        emit(opt, j, text);
        return report.ok() ? kOk : kInvalidAlgebra;
      },
      algebra);
}

int cmd_analyze(const Options& opt) {
  auto algebra = load_algebra_file(opt.file);
  return std::visit(
      [&](const auto& L) {
        using K = std::decay_t<decltype(L.field().zero())>;
        auto report = analysis_report(L, formations_of<K>(opt));
        emit(opt, report, render_text(report));
        for (const auto& f : report["formations"]) {
          if (!f["normalisers"].is_array()) continue;
          for (const auto& n : f["normalisers"]) {
            if (n["intravariant_linear"] != n["intravariant_extension"]) return int(kIntravarianceCriteria);
            if (!n["intravariant_linear"].template get<bool>()) return int(kNotIntravariant);
            if (!n["cover_avoid"].template get<bool>()) return int(kCoverAvoidViolation);
          }
        }
        return int(kOk);
      },
      algebra);
}

int cmd_normalisers(const Options& opt) {
  auto algebra = load_algebra_file(opt.file);
  return std::visit(
      [&](const auto& L) {
        using K = std::decay_t<decltype(L.field().zero())>;
        auto F = formations_of<K>(opt).front();
        Json list = Json::array();
        std::string text;
        for (const auto& [v, chain] : f_normalisers(L, F)) {
          list.push_back({{"basis", to_json(v)}, {"chain", to_json(chain)}});
          text += to_string(v) + "\n";
          for (const auto& m : chain.members) text += "    > " + to_string(m) + "\n";
        }
        emit(opt, Json{{"formation", F.name}, {"normalisers", list}}, text);
        return int(kOk);
      },
      algebra);
}

int cmd_derivations(const Options& opt) {
  auto algebra = load_algebra_file(opt.file);
  return std::visit(
      [&](const auto& L) {
        auto der = derivation_algebra(L);
        auto inner = inner_derivations(L);
        Json basis = Json::array();
        std::string text = "Der(L): dim " + std::to_string(der.dim()) + ", inner dim " + std::to_string(inner.dim()) + "\n";
        for (const auto& d : der.basis()) {
          basis.push_back(to_json(d));
          text += "  " + to_string(d) + "\n";
        }
        emit(opt, Json{{"dim", der.dim()}, {"inner_dim", inner.dim()}, {"basis", basis}}, text);
        return int(kOk);
      },
      algebra);
}

int cmd_check_intravariance(const Options& opt) {
  auto doc = read_json_file(opt.file);
  // Accept a counterexample dump as well as a bare algebra file.
  const Json& algebra_json = doc.contains("algebra") ? doc["algebra"] : doc;
  auto algebra = load_algebra(algebra_json);
  if (opt.method != "linear" && opt.method != "extension" && opt.method != "both")
    throw ParseError("--method must be linear, extension or both");
  return std::visit(
      [&](const auto& L) {
        using K = std::decay_t<decltype(L.field().zero())>;
        Subspace<K> u = zero_subspace(L);
        if (opt.subalgebra)
          u = parse_basis_spec<K>(L.field(), L.dim(), *opt.subalgebra);
        else if (doc.contains("subalgebra"))
          u = subspace_from_json<K>(L.field(), L.dim(), doc["subalgebra"]);
        else
          throw ParseError("no subalgebra given (use --subalgebra)");
        Subalgebra<K>::checked(L, u);
        Json j;
        j["subalgebra"] = to_json(u);
        std::string text = "subalgebra " + to_string(u) + "\n";
        std::optional<bool> linear, extension;
        if (opt.method != "extension") {
          linear = is_intravariant_linear(L, u);
          j["linear"] = *linear;
          text += std::string("  linear criterion:    ") + (*linear ? "intravariant" : "not intravariant") + "\n";
        }
        if (opt.method != "linear") {
          auto bad = extension_counterexample(L, u);
          extension = !bad.has_value();
          j["extension"] = *extension;
          text += std::string("  extension criterion: ") + (*extension ? "intravariant" : "not intravariant") + "\n";
          if (bad) {
            j["witness_derivation"] = to_json(*bad);
            text += "    witness derivation " + to_string(*bad) + "\n";
          }
        }
        j["intravariant"] = linear.value_or(extension.value_or(false)) && extension.value_or(true);
        emit(opt, j, text);
        if (linear && extension && *linear != *extension) return int(kIntravarianceCriteria);
        return int(kOk);
      },
      algebra);
}

int cmd_verify_chain(const Options& opt) {
  auto algebra = load_algebra_file(opt.file);
  auto chain_json = read_json_file(opt.chain_file);
  return std::visit(
      [&](const auto& L) {
        using K = std::decay_t<decltype(L.field().zero())>;
        auto F = formations_of<K>(opt).front();
        auto chain = chain_from_json<K>(L.field(), L.dim(), chain_json);
        auto verdict = verify_chain(L, chain, F);
        Json j{{"formation", F.name}, {"valid", verdict.ok}};
        std::string text;
        if (verdict.ok) {
          text = "chain accepted: " + to_string(chain.result()) + " is a " + F.name + "-normaliser\n";
        } else {
          j["step"] = verdict.step;
          j["reason"] = verdict.reason;
          text = "chain rejected at member " + std::to_string(verdict.step) + ": " + verdict.reason + "\n";
        }
        emit(opt, j, text);
        return int(verdict.ok ? kOk : kChainRejected);
      },
      algebra);
}

int cmd_sweep(const Options& opt) {
  EnumerationBudget budget{opt.max_dim, {FieldSpec::parse(opt.field)}, opt.cap, opt.seed};
  auto names = opt.formations.empty() ? std::vector<std::string>{"nilpotent"} : opt.formations;
  Json results = Json::array();
  std::string text;
  int code = kOk;
  for (const auto& name : names) {
    auto F = formations::by_name<ModP>(name);
    auto summary = run_sweep(budget, F, worker_count());
    Json violations = Json::array();
    for (const auto& v : summary.violations) violations.push_back({{"tag", v.tag}, {"counterexample", v.counterexample}});
    results.push_back({{"formation", F.name},
                       {"algebras", summary.algebras},
                       {"maximal_subalgebras", summary.maximals},
                       {"normalisers", summary.normalisers},
                       {"violations", violations}});
    text += "sweep " + budget.fields.front().to_string() + " max-dim " + std::to_string(budget.max_dim) + " formation " +
            F.name + ": " + std::to_string(summary.algebras) + " algebras, " + std::to_string(summary.maximals) +
            " maximal subalgebras, " + std::to_string(summary.normalisers) + " normalisers, " +
            std::to_string(summary.violations.size()) + " violations\n";
    for (const auto& v : summary.violations) text += "counterexample " + v.tag + ": " + v.counterexample.dump() + "\n";
    if (!summary.violations.empty() && code == kOk) code = exit_code_for(summary.violations.front().property);
  }
  emit(opt, Json{{"field", opt.field}, {"max_dim", opt.max_dim}, {"seed", opt.seed}, {"results", results}}, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soluble Lie algebras: chief series, F-normalisers, derivations and intravariance"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");

  auto add_formation = [&](CLI::App* sub) {
    sub->add_option("--formation", opt.formations, "nilpotent, supersoluble or soluble");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity and solubility");
  validate_cmd->add_option("file", opt.file, "algebra JSON")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full structural report");
  analyze_cmd->add_option("file", opt.file, "algebra JSON")->required();
  add_formation(analyze_cmd);

  auto* normalisers_cmd = app.add_subcommand("normalisers", "F-normalisers with witnessing chains");
  normalisers_cmd->add_option("file", opt.file, "algebra JSON")->required();
  add_formation(normalisers_cmd);

  auto* derivations_cmd = app.add_subcommand("derivations", "Basis of the derivation algebra");
  derivations_cmd->add_option("file", opt.file, "algebra JSON")->required();

  auto* intra_cmd = app.add_subcommand("check-intravariance", "Decide whether a subalgebra is intravariant");
  intra_cmd->add_option("file", opt.file, "algebra JSON or counterexample dump")->required();
  intra_cmd->add_option("--subalgebra", opt.subalgebra, "basis such as \"1,0,0;0,1,1\"");
  intra_cmd->add_option("--method", opt.method, "linear, extension or both");

  auto* chain_cmd = app.add_subcommand("verify-chain", "Check a chain of critical maximal subalgebras");
  chain_cmd->add_option("file", opt.file, "algebra JSON")->required();
  chain_cmd->add_option("chain", opt.chain_file, "chain JSON")->required();
  add_formation(chain_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Check the normaliser properties on enumerated algebras");
  sweep_cmd->add_option("--field", opt.field, "prime field, e.g. GF(2)");
  sweep_cmd->add_option("--max-dim", opt.max_dim, "largest dimension");
  sweep_cmd->add_option("--cap", opt.cap, "derivations sampled per parent algebra");
  sweep_cmd->add_option("--seed", opt.seed, "sampling seed");
  add_formation(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt);
    if (*analyze_cmd) return cmd_analyze(opt);
    if (*normalisers_cmd) return cmd_normalisers(opt);
    if (*derivations_cmd) return cmd_derivations(opt);
    if (*intra_cmd) return cmd_check_intravariance(opt);
    if (*chain_cmd) return cmd_verify_chain(opt);
    if (*sweep_cmd) return cmd_sweep(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UnsupportedField& e) {
    std::cerr << "unsupported field: " << e.what() << "\n";
    return kUnsupportedField;
  } catch (const JacobiViolation& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kInvalidAlgebra;
  } catch (const NotSoluble& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kInvalidAlgebra;
  } catch (const CriteriaDisagree& e) {
    std::cerr << "criteria disagree: " << e.what() << "\n";
    return kCriteriaDisagree;
  } catch (const NoCriticalDescent& e) {
    std::cerr << "no critical descent: " << e.what() << "\n";
    return kNoCriticalDescent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
