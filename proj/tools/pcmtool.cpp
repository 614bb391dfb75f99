// pcmtool: analyze pairwise comparison matrices, generate the special
// families, and export preference digraphs as DOT.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcm/core.hpp"
#include "pcm/efficiency.hpp"
#include "pcm/io.hpp"
#include "pcm/perturbation.hpp"
#include "pcm/spectral.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

const std::map<std::string, pcm::io::Format> kFormats{
    {"csv", pcm::io::Format::Csv}, {"json", pcm::io::Format::Json}};

std::vector<double> parse_list(const std::vector<std::string>& items, const char* what) {
  std::vector<double> out;
  for (const auto& s : items) {
    try {
      out.push_back(pcm::io::parse_number(s));
    } catch (const pcm::PcmError& e) {
      throw pcm::PcmError(pcm::ErrorCode::ParameterDomain, std::string(what) + ": " + e.what());
    }
  }
  return out;
}

pcm::PairwiseComparisonMatrix load(const std::string& path, std::optional<pcm::io::Format> format,
                                   std::optional<std::string>* label = nullptr) {
  auto doc = pcm::io::read_document(path, format);
  if (label) *label = doc.label;
  return pcm::validate_pcm(doc.entries);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise comparison matrix analysis: eigenvectors, efficiency, perturbation"};
  app.require_subcommand(1);

  std::string input;
  std::optional<pcm::io::Format> format;
  bool json_out = false;
  pcm::io::AnalysisOptions options;

  auto* analyze = app.add_subcommand("analyze", "Eigenvector, consistency, perturbation and efficiency report");
  analyze->add_option("input", input, "Matrix file (CSV or JSON)")->required();
  analyze->add_option("--format", format, "Input format (default: from file extension)")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  analyze->add_flag("--json", json_out, "Emit the report as a single JSON object");
  analyze->add_option("--seed", options.seed, "Seed for the dominance search");
  analyze->add_option("--trials", options.trials, "Dominance search budget (0 disables)");
  analyze->add_option("--eps-arc", options.eps_arc, "Relative slack for digraph arcs")
      ->check(CLI::NonNegativeNumber);

  std::string kind;
  std::size_t order = 0;
  std::vector<std::string> x_text, weight_text, position_text;
  std::string delta_text, p_text, q_text;
  pcm::io::Format out_format = pcm::io::Format::Csv;
  auto* generate = app.add_subcommand("generate", "Emit a matrix from one of the built-in families");
  generate->add_option("kind", kind, "simple-perturbed | parametric-pq | consistent")
      ->required()
      ->check(CLI::IsMember({"simple-perturbed", "parametric-pq", "consistent"}));
  generate->add_option("--n", order, "Matrix order");
  generate->add_option("--x", x_text, "Generator ratios x1,...,x(n-1)")->delimiter(',');
  generate->add_option("--delta", delta_text, "Perturbation factor");
  generate->add_option("--position", position_text, "Perturbed entry i,j (one-based, default 1,2)")
      ->delimiter(',');
  generate->add_option("--p", p_text, "Parameter p of the parametric family");
  generate->add_option("--q", q_text, "Parameter q of the parametric family");
  generate->add_option("--weights", weight_text, "Weights for a consistent matrix")->delimiter(',');
  generate->add_option("--format", out_format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* digraph = app.add_subcommand("digraph", "DOT export of the eigenvector's preference digraph");
  digraph->add_option("input", input, "Matrix file (CSV or JSON)")->required();
  digraph->add_option("--format", format, "Input format (default: from file extension)")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  digraph->add_option("--eps-arc", options.eps_arc, "Relative slack for digraph arcs")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (analyze->parsed()) {
      std::optional<std::string> label;
      const auto a = load(input, format, &label);
      const auto report = pcm::io::analyze(a, options, label);
      std::cout << (json_out ? pcm::io::report_to_json(report) : pcm::io::report_to_text(report));
      return 0;
    }

    if (digraph->parsed()) {
      const auto a = load(input, format);
      const auto pair = pcm::perron_eigenpair(a);
      std::cout << pcm::io::to_dot(pcm::build_digraph(a, pair.w_em, options.eps_arc));
      return 0;
    }

    // generate
    pcm::Matrix m;
    if (kind == "simple-perturbed") {
      if (delta_text.empty()) throw pcm::PcmError(pcm::ErrorCode::ParameterDomain, "--delta is required");
      pcm::PerturbationSpec spec;
      spec.x = parse_list(x_text, "--x");
      spec.delta = parse_list({delta_text}, "--delta").front();
      if (order != 0 && order != spec.order()) {
        throw pcm::PcmError(pcm::ErrorCode::ParameterDomain, "--x must list n-1 values");
      }
      if (!position_text.empty()) {
        const auto pos = parse_list(position_text, "--position");
        if (pos.size() != 2 || pos[0] < 1 || pos[1] < 1) {
          throw pcm::PcmError(pcm::ErrorCode::ParameterDomain, "--position takes two one-based indices");
        }
        spec.position = {static_cast<std::size_t>(pos[0]) - 1, static_cast<std::size_t>(pos[1]) - 1};
      }
      m = pcm::build_simple_perturbed(spec).entries();
    } else if (kind == "parametric-pq") {
      if (p_text.empty() || q_text.empty()) {
        throw pcm::PcmError(pcm::ErrorCode::ParameterDomain, "--p and --q are required");
      }
      m = pcm::parametric_inefficient(order, parse_list({p_text}, "--p").front(),
                                      parse_list({q_text}, "--q").front())
              .entries();
    } else {
      const auto w = parse_list(weight_text, "--weights");
      if (w.size() < 3) throw pcm::PcmError(pcm::ErrorCode::ParameterDomain, "--weights needs at least 3 values");
      if (order != 0 && order != w.size()) {
        throw pcm::PcmError(pcm::ErrorCode::ParameterDomain, "--weights must list n values");
      }
      m = pcm::from_weights(pcm::WeightVector(w)).entries();
    }
    std::cout << pcm::io::write_document(m, out_format);
    return 0;
  } catch (const pcm::PcmError& e) {
    std::cerr << "error (" << pcm::to_string(e.code()) << "): " << e.what() << '\n';
    return pcm::is_numerical(e.code()) ? kExitNumerical : kExitValidation;
  }
}
