#include "elmatch/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "elmatch/diagnostics.hpp"
#include "elmatch/inference.hpp"
#include "elmatch/matchmaker.hpp"
#include "elmatch/parser.hpp"
#include "elmatch/render.hpp"

namespace elmatch {
namespace {

constexpr int kOk = 0;
constexpr int kDiagnosed = 1;
constexpr int kUsage = 2;

struct CliError {
  int exit_code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    throw CliError{kDiagnosed};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics,
                       const std::string& path, std::ostream& err) {
  for (const auto& d : diagnostics) err << format_diagnostic(d, path) << "\n";
}

// Prints everything collected so far and aborts on errors; warnings pass.
void gate(const std::vector<Diagnostic>& diagnostics, const std::string& path,
          std::ostream& err) {
  print_diagnostics(diagnostics, path, err);
  if (has_errors(diagnostics)) throw CliError{kDiagnosed};
}

Ontology load_ontology(const std::string& path, std::ostream& err) {
  SourceDocument doc{path, read_file(path, err), DocumentKind::Ontology};
  std::vector<Diagnostic> diagnostics;
  Ontology ontology = parse_ontology(doc, diagnostics);
  gate(diagnostics, path, err);
  return ontology;
}

ConceptRef load_concept_arg(const std::string& text, std::ostream& err) {
  std::vector<Diagnostic> diagnostics;
  ConceptRef expr = parse_concept(text, diagnostics);
  gate(diagnostics, "<arg>", err);
  if (!expr) throw CliError{kDiagnosed};
  return expr;
}

struct RankArgs {
  std::string ontology_path;
  std::string parties_path;
  std::string demand_name;
  std::string weights_path;
  std::string format = "tsv";
  bool explain = false;
};

struct PairArgs {
  std::string ontology_path;
  std::string left;
  std::string right;
};

int run_rank(const RankArgs& a, std::ostream& out, std::ostream& err) {
  Reasoner reasoner(load_ontology(a.ontology_path, err));

  SourceDocument parties_doc{a.parties_path, read_file(a.parties_path, err),
                             DocumentKind::Parties};
  std::vector<Diagnostic> diagnostics;
  std::vector<PartyRecord> parties = parse_parties(parties_doc, reasoner, diagnostics);
  gate(diagnostics, a.parties_path, err);

  WeightTable weights;
  if (!a.weights_path.empty()) {
    SourceDocument weights_doc{a.weights_path, read_file(a.weights_path, err),
                               DocumentKind::Weights};
    diagnostics.clear();
    weights = parse_weights(weights_doc, reasoner.ontology(), diagnostics);
    gate(diagnostics, a.weights_path, err);
  }

  const PartyRecord* demand = nullptr;
  std::vector<PartyRecord> offers;
  for (const auto& record : parties) {
    if (record.kind == PartyKind::Offer) {
      offers.push_back(record);
    } else if (record.name == a.demand_name) {
      demand = &record;
    }
  }
  if (demand == nullptr) {
    err << "error: no demand named " << a.demand_name << " in " << a.parties_path
        << "\n";
    throw CliError{kDiagnosed};
  }

  RankingResult result = rank(*demand, offers, weights, reasoner);
  const OutputFormat format =
      a.format == "json" ? OutputFormat::Json : OutputFormat::Tsv;
  out << render_ranking(result, format, a.explain);
  return kOk;
}

int run_subsumes(const PairArgs& a, std::ostream& out, std::ostream& err) {
  Reasoner reasoner(load_ontology(a.ontology_path, err));
  ConceptRef left = load_concept_arg(a.left, err);
  ConceptRef right = load_concept_arg(a.right, err);
  out << (reasoner.subsumes(left, right) ? "true" : "false") << "\n";
  return kOk;
}

int run_lcs(const PairArgs& a, std::ostream& out, std::ostream& err) {
  Reasoner reasoner(load_ontology(a.ontology_path, err));
  ConceptRef left = load_concept_arg(a.left, err);
  ConceptRef right = load_concept_arg(a.right, err);
  out << render(lcs(left, right, reasoner)) << "\n";
  return kOk;
}

int run_diff(const PairArgs& a, std::ostream& out, std::ostream& err) {
  Reasoner reasoner(load_ontology(a.ontology_path, err));
  ConceptRef left = load_concept_arg(a.left, err);
  ConceptRef right = load_concept_arg(a.right, err);
  out << render(semantic_difference(left, right, reasoner)) << "\n";
  return kOk;
}

int run_classify(const std::string& ontology_path, std::ostream& out, std::ostream& err) {
  Reasoner reasoner(load_ontology(ontology_path, err));
  for (const auto& [sub, super] : hierarchy_axioms(reasoner)) {
    out << "sub " << sub << " " << super << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantic matchmaking over an ontology of offers and demands"};
  app.name("elmatch");
  app.require_subcommand(1);

  RankArgs rank_args;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "Rank the offers in a parties file against a demand");
  rank_cmd->add_option("--ontology", rank_args.ontology_path, "Ontology file")
      ->required()
      ->check(CLI::ExistingFile);
  rank_cmd->add_option("--parties", rank_args.parties_path, "Offers and demands file")
      ->required()
      ->check(CLI::ExistingFile);
  rank_cmd->add_option("--demand", rank_args.demand_name, "Name of the demand to serve")
      ->required();
  rank_cmd->add_option("--weights", rank_args.weights_path, "Component weights file")
      ->check(CLI::ExistingFile);
  rank_cmd->add_option("--format", rank_args.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  rank_cmd->add_flag("--explain", rank_args.explain,
                     "Attach the per-pair comparison trace");

  PairArgs subsumes_args;
  CLI::App* subsumes_cmd =
      app.add_subcommand("subsumes", "Test whether the first concept entails the second");
  PairArgs lcs_args;
  CLI::App* lcs_cmd =
      app.add_subcommand("lcs", "Least common subsumer of two concepts");
  PairArgs diff_args;
  CLI::App* diff_cmd = app.add_subcommand(
      "diff", "Semantic difference of the first concept by the second");
  for (auto& [cmd, pair_args] : {std::pair<CLI::App*, PairArgs*>{subsumes_cmd, &subsumes_args},
                                 {lcs_cmd, &lcs_args},
                                 {diff_cmd, &diff_args}}) {
    cmd->add_option("--ontology", pair_args->ontology_path, "Ontology file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("C", pair_args->left, "First concept expression")->required();
    cmd->add_option("D", pair_args->right, "Second concept expression")->required();
  }

  std::string classify_path;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Print the named concept hierarchy, transitively reduced");
  classify_cmd->add_option("--ontology", classify_path, "Ontology file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (rank_cmd->parsed()) return run_rank(rank_args, out, err);
    if (subsumes_cmd->parsed()) return run_subsumes(subsumes_args, out, err);
    if (lcs_cmd->parsed()) return run_lcs(lcs_args, out, err);
    if (diff_cmd->parsed()) return run_diff(diff_args, out, err);
    if (classify_cmd->parsed()) return run_classify(classify_path, out, err);
  } catch (const CliError& e) {
    return e.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << error_code_name(e.code()) << "]\n";
    return kDiagnosed;
  }
  err << "error: no command selected\n";
  return kUsage;
}

}  // namespace elmatch
