#ifndef PCM_IO_HPP_
#define PCM_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/core.hpp"
#include "pcm/efficiency.hpp"
#include "pcm/perturbation.hpp"

namespace pcm::io {

enum class Format { Csv, Json };

/// Parsed but not yet validated matrix text.
struct MatrixDocument {
  std::optional<std::string> label;
  Matrix entries;
};

/// Decimal ("0.25", "1e-3") or fraction ("1/4") text to double.
/// Throws PcmError(Parse).
double parse_number(std::string_view text);

/// n lines of n comma-separated fields, no header. Blank lines are skipped.
MatrixDocument parse_csv(std::string_view text);

/// {"label": "...", "matrix": [[...], ...]} with numbers or numeric strings.
MatrixDocument parse_json(std::string_view text);

MatrixDocument parse_document(std::string_view text, Format format);
MatrixDocument read_document(const std::string& path, std::optional<Format> format);

/// Writes with shortest round-trip decimals so documents reparse bit-exactly.
std::string write_document(const Matrix& entries, Format format,
                           const std::optional<std::string>& label = std::nullopt);

/// `digits` significant digits, trailing zeros trimmed.
std::string format_number(double value, int digits = 12);

struct AnalysisOptions {
  double eps_arc = tol::kArc;
  std::size_t trials = 0;  // dominance search budget; 0 skips the search
  std::uint64_t seed = 42;
};

struct AnalysisReport {
  std::optional<std::string> label;
  std::size_t n = 0;
  double lambda_max = 0.0;
  std::vector<double> eigenvector;
  bool consistent = false;
  DetectionResult detection;
  EfficiencyVerdict verdict;
  std::vector<IndexPair> arcs;
  std::optional<bool> search_found_dominator;
};

AnalysisReport analyze(const PairwiseComparisonMatrix& a, const AnalysisOptions& options = {},
                       std::optional<std::string> label = std::nullopt);

/// Violations of the report's cross-field invariants; empty when consistent.
std::vector<std::string> check_report(const AnalysisReport& report);

/// Flat "key: value" lines, indices one-based.
std::string report_to_text(const AnalysisReport& report);
std::string report_to_json(const AnalysisReport& report);

/// Graphviz digraph; mutual arcs collapse into one edge with dir=both.
std::string to_dot(const PreferenceDigraph& g, std::string_view name = "pcm");

}  // namespace pcm::io

#endif  // PCM_IO_HPP_
