#include "quivar/acceptance.hpp"
#include "quivar/bounds.hpp"
#include "quivar/equiv.hpp"
#include "quivar/extremal.hpp"
#include "quivar/graph.hpp"
#include "quivar/omega.hpp"
#include "quivar/oracle.hpp"
#include "quivar/util.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <csignal>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace quivar;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw BadInput("parse error in " + path + ": " + e.what());
  }
  return doc;
}

Quiver load_quiver(const std::string& path) { return Quiver::parse(load_json(path)); }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct CommonOpts {
  std::string quiver_file, word_file, delta_file;
  std::string chi = "2";
  std::string field = "q";
  int cutoff = -1;
  std::string format = "json";
  int k = 1;
  long seed = 0;
};

void handle_interrupt(int) { interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, handle_interrupt);
  CLI::App app{"quivar: degree bounds for generating invariants of quivers in dimension (2,...,2)"};
  app.require_subcommand(1);

  CommonOpts opt;
  auto add_common = [&](CLI::App* sub, bool quiver, bool word, bool delta) {
    if (quiver) sub->add_option("--quiver", opt.quiver_file, "quiver JSON file")->required();
    if (word) sub->add_option("--word", opt.word_file, "word JSON file")->required();
    if (delta) sub->add_option("--delta", opt.delta_file, "multidegree JSON file")->required();
    sub->add_option("--char", opt.chi, "characteristic: 2 or not2");
    sub->add_option("--field", opt.field, "field: q, gf2, gf3, ...");
    sub->add_option("--cutoff", opt.cutoff, "degree cutoff (defaults to the theorem bound)");
    sub->add_option("--format", opt.format, "json, csv or table");
    sub->add_option("--seed", opt.seed, "affects parallel chunking only; results are deterministic");
  };

  auto* c_equiv = app.add_subcommand("equiv-zero", "decide whether a closed word is equivalent to zero");
  add_common(c_equiv, true, true, false);

  auto* c_maxdeg = app.add_subcommand("max-degree", "largest degree of a word not equivalent to zero");
  add_common(c_maxdeg, true, false, false);

  auto* c_omega = app.add_subcommand("omega", "membership in the multidegree sets");
  add_common(c_omega, true, false, true);

  auto* c_chain = app.add_subcommand("chain", "build a complete chain for a multidegree");
  add_common(c_chain, true, false, true);

  auto* c_tree = app.add_subcommand("tree", "build a recursive chain tree for a multidegree");
  add_common(c_tree, true, false, true);

  int b_n = 0, b_d = 0, b_m = 0;
  auto* c_mbound = app.add_subcommand("m-bound", "evaluate the class bound formula");
  c_mbound->add_option("--n", b_n)->required();
  c_mbound->add_option("--d", b_d)->required();
  c_mbound->add_option("--m", b_m)->required();
  c_mbound->add_option("--char", opt.chi);

  auto* c_nonempty = app.add_subcommand("class-nonempty", "test whether the quiver class is non-empty");
  c_nonempty->add_option("--n", b_n)->required();
  c_nonempty->add_option("--d", b_d)->required();
  c_nonempty->add_option("--m", b_m)->required();

  auto* c_survey = app.add_subcommand("survey", "exact D over a labelled quiver class");
  c_survey->add_option("--n", b_n)->required();
  c_survey->add_option("--d", b_d)->required();
  c_survey->add_option("--m", b_m)->required();
  c_survey->add_option("--char", opt.chi);
  c_survey->add_option("--format", opt.format);

  std::string family = "a";
  int e_t = 1;
  bool e_verify = false;
  auto* c_extremal = app.add_subcommand("extremal", "build (and verify) an extremal witness");
  c_extremal->add_option("--family", family, "a, b, c, d or e")->required();
  c_extremal->add_option("--n", b_n);
  c_extremal->add_option("--d", b_d);
  c_extremal->add_option("--m", b_m);
  c_extremal->add_option("--t", e_t);
  c_extremal->add_option("--char", opt.chi);
  c_extremal->add_flag("--verify", e_verify, "run the verification checks");

  auto* c_oracle = app.add_subcommand("oracle", "symbolic invariant computations");
  c_oracle->require_subcommand(1);
  auto* c_oracle_decomp = c_oracle->add_subcommand("decomp", "decomposability of sigma_k along a word");
  add_common(c_oracle_decomp, true, true, false);
  c_oracle_decomp->add_option("--k", opt.k, "1 = trace, 2 = determinant");
  auto* c_oracle_inv = c_oracle->add_subcommand("invariant", "print sigma_k along a word");
  add_common(c_oracle_inv, true, true, false);
  c_oracle_inv->add_option("--k", opt.k, "1 = trace, 2 = determinant");

  bool inject_fault = false;
  auto* c_cross = app.add_subcommand("cross-validate", "engine vs oracle on all small necklaces");
  add_common(c_cross, true, false, false);
  c_cross->add_flag("--inject-engine-fault", inject_fault, "negate engine verdicts (exit-code self test)")
      ->group("");

  auto* c_accept = app.add_subcommand("accept", "run the full acceptance suite");
  (void)c_accept;

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_equiv->parsed()) {
      Quiver q = load_quiver(opt.quiver_file);
      Word w = parse_word(q, load_json(opt.word_file));
      Char chi = parse_char(opt.chi);
      auto r = equiv_zero(q, w, chi);
      json doc;
      doc["word"] = word_to_json(q, w)["word"];
      doc["char"] = char_str(chi);
      doc["equiv_zero"] = r.equiv_zero;
      doc["states_explored"] = r.states_explored;
      doc["certificate"] =
          r.certificate == Certificate::none ? json() : json(certificate_str(r.certificate));
      emit(doc);
      return 0;
    }
    if (c_maxdeg->parsed()) {
      Quiver q = load_quiver(opt.quiver_file);
      Char chi = parse_char(opt.chi);
      int cutoff = opt.cutoff > 0 ? opt.cutoff : static_cast<int>(upper_bound_for_quiver(q, chi));
      int m = max_nonzero_degree(q, chi, cutoff);
      emit(json{{"char", char_str(chi)}, {"cutoff", cutoff}, {"max_nonzero_degree", m}});
      return 0;
    }
    if (c_omega->parsed()) {
      Quiver q = load_quiver(opt.quiver_file);
      Multidegree delta = parse_multidegree(q, load_json(opt.delta_file));
      auto mem = omega_membership(q, delta, parse_char(opt.chi));
      emit(omega_report_json(q, delta, mem));
      return 0;
    }
    if (c_chain->parsed()) {
      Quiver q = load_quiver(opt.quiver_file);
      Multidegree delta = parse_multidegree(q, load_json(opt.delta_file));
      auto chain = build_complete_chain(q, delta);
      json paths = json::array();
      for (const auto& p : chain.paths) paths.push_back(word_to_json(q, p)["word"]);
      json comps = json::array();
      for (const auto& c : chain.decomposition) comps.push_back(multidegree_to_json(q, c.delta));
      emit(json{{"paths", paths},
                {"residual", multidegree_to_json(q, chain.residual)},
                {"decomposition", comps},
                {"valid", validate_complete_chain(q, delta, chain).empty()}});
      return 0;
    }
    if (c_tree->parsed()) {
      Quiver q = load_quiver(opt.quiver_file);
      Multidegree delta = parse_multidegree(q, load_json(opt.delta_file));
      auto tree = build_delta_tree(q, delta);
      json doc = delta_tree_json(q, tree);
      doc["valid"] = validate_delta_tree(q, delta, tree).empty();
      emit(doc);
      return 0;
    }
    if (c_mbound->parsed()) {
      emit(json{{"n", b_n}, {"d", b_d}, {"m", b_m}, {"char", opt.chi},
                {"M", m_formula(b_n, b_d, b_m, parse_char(opt.chi))}});
      return 0;
    }
    if (c_nonempty->parsed()) {
      emit(json{{"n", b_n}, {"d", b_d}, {"m", b_m}, {"nonempty", q_class_nonempty(b_n, b_d, b_m)}});
      return 0;
    }
    if (c_survey->parsed()) {
      auto rep = survey_class(b_n, b_d, b_m, parse_char(opt.chi));
      if (opt.format == "csv") {
        std::cout << "n,d,m,char,M,D,gap,holds\n" << bound_report_csv_row(rep) << "\n";
      } else if (opt.format == "table") {
        std::cout << "class Q(" << rep.n << "," << rep.d << "," << rep.m << "), char " << char_str(rep.chi)
                  << "\n"
                  << "  members (labelled): " << rep.quivers_in_class << "\n"
                  << "  M(n,d,m)          : " << rep.M_formula << "\n"
                  << "  effective bound   : " << rep.effective_bound << "\n"
                  << "  D (exact)         : " << rep.D_exact.value_or(-1) << "\n"
                  << "  theorem holds     : " << (rep.theorem_holds ? "yes" : "no") << "\n";
        for (const auto& w : rep.witnesses)
          std::cout << "  witness: sigma_" << w.k << "(" << word_str(rep.witness_quiver, w.word)
                    << "), degree " << w.degree << "\n";
      } else {
        emit(bound_report_json(rep));
      }
      return rep.theorem_holds ? 0 : 1;
    }
    if (c_extremal->parsed()) {
      ExtremalParams p;
      p.n = b_n;
      p.d = b_d;
      p.m = b_m;
      p.t = e_t;
      auto w = build_extremal(parse_family(family), p);
      WitnessReport rep;
      if (e_verify) {
        rep = verify_witness(w, w.chi);
      }
      emit(witness_json(w, rep));
      if (e_verify && !rep.ok) return 1;
      return 0;
    }
    if (c_oracle->parsed()) {
      Quiver q = load_quiver(opt.quiver_file);
      Word w = parse_word(q, load_json(opt.word_file));
      FieldChoice f = parse_field(opt.field);
      if (c_oracle_inv->parsed()) {
        emit(json{{"k", opt.k}, {"field", field_str(f)},
                  {"polynomial", invariant_polynomial_json(q, w, opt.k, f)}});
      } else {
        bool dec = decomposable(q, w, opt.k, f);
        emit(json{{"k", opt.k}, {"field", field_str(f)}, {"decomposable", dec}});
      }
      return 0;
    }
    if (c_cross->parsed()) {
      Quiver q = load_quiver(opt.quiver_file);
      Char chi = parse_char(opt.chi);
      // default: the theorem bound, clamped to the oracle's degree reach
      OracleConfig ocfg;
      int cutoff = opt.cutoff > 0
                       ? opt.cutoff
                       : static_cast<int>(std::min<long long>(upper_bound_for_quiver(q, chi), ocfg.degree_cap));
      auto rows = cross_validate(q, cutoff, chi);
      if (inject_fault) {
        // self test of the exit-code contract: report every agreeing word as a mismatch
        auto words = enumerate_closed_words(q, cutoff);
        std::vector<CrossMismatch> flipped;
        for (const auto& w : words) {
          bool engine = !equiv_zero(q, w, chi).equiv_zero;  // negated on purpose
          bool oracle = decomposable(q, w, 1, field_for(chi));
          if (engine != oracle) flipped.push_back({w, engine, oracle});
        }
        rows = flipped;
      }
      json mismatches = json::array();
      for (const auto& r : rows)
        mismatches.push_back(json{{"word", word_to_json(q, r.word)["word"]},
                                  {"equiv_zero", r.engine_zero},
                                  {"decomposable", r.oracle_decomposable}});
      emit(json{{"char", char_str(chi)}, {"cutoff", cutoff}, {"mismatches", mismatches}});
      return rows.empty() ? 0 : 1;
    }
    if (c_accept->parsed()) {
      auto results = run_acceptance(std::cout);
      return acceptance_exit_code(results);
    }
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const PropertyViolation& e) {
    std::cerr << "property violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
