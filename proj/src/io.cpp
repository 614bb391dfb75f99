#include "pcm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "pcm/spectral.hpp"

namespace pcm::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_decimal(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string cell_error(std::size_t row, std::size_t col, const std::string& what) {
  std::ostringstream msg;
  msg << "row " << row << ", column " << col << ": " << what;
  return msg.str();
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      std::ostringstream msg;
      msg << "row " << r + 1 << " has " << rows[r].size() << " fields, expected " << rows.size();
      throw PcmError(ErrorCode::NonSquare, msg.str());
    }
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

std::string one_based(IndexPair p) {
  std::ostringstream s;
  s << "(" << p[0] + 1 << "," << p[1] + 1 << ")";
  return s.str();
}

std::string join_numbers(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += format_number(v[k]);
  }
  return out;
}

double rounded(double v) { return std::stod(format_number(v)); }

std::vector<double> rounded(const std::vector<double>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) out.push_back(rounded(x));
  return out;
}

json components_json(const std::vector<Component>& comps) {
  json out = json::array();
  for (const auto& c : comps) {
    json nodes = json::array();
    for (std::size_t v : c) nodes.push_back(v + 1);
    out.push_back(nodes);
  }
  return out;
}

json pairs_json(const std::vector<IndexPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back({p[0] + 1, p[1] + 1});
  return out;
}

}  // namespace

double parse_number(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::optional<double> value;
  if (slash == std::string_view::npos) {
    value = parse_decimal(s);
  } else {
    const auto num = parse_decimal(s.substr(0, slash));
    const auto den = parse_decimal(s.substr(slash + 1));
    if (num && den && *den != 0.0) value = *num / *den;
  }
  if (!value || !std::isfinite(*value)) {
    throw PcmError(ErrorCode::Parse, "cannot parse '" + std::string(s) + "' as a number or fraction");
  }
  return *value;
}

MatrixDocument parse_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (trim(line).empty()) continue;

    std::vector<double> row;
    std::size_t col = 0;
    while (true) {
      const auto comma = line.find(',');
      const std::string_view field = line.substr(0, comma);
      ++col;
      try {
        row.push_back(parse_number(field));
      } catch (const PcmError& e) {
        throw PcmError(ErrorCode::Parse, cell_error(rows.size() + 1, col, e.what()));
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw PcmError(ErrorCode::Parse, "input contains no matrix rows");
  return MatrixDocument{std::nullopt, from_rows(rows)};
}

MatrixDocument parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PcmError(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw PcmError(ErrorCode::Parse, "JSON document needs a \"matrix\" array of rows");
  }
  MatrixDocument out;
  if (doc.contains("label") && doc["label"].is_string()) out.label = doc["label"].get<std::string>();

  std::vector<std::vector<double>> rows;
  for (const auto& jrow : doc["matrix"]) {
    if (!jrow.is_array()) {
      throw PcmError(ErrorCode::Parse, cell_error(rows.size() + 1, 1, "row is not an array"));
    }
    std::vector<double> row;
    for (const auto& cell : jrow) {
      const std::size_t col = row.size() + 1;
      if (cell.is_number()) {
        row.push_back(cell.get<double>());
      } else if (cell.is_string()) {
        try {
          row.push_back(parse_number(cell.get<std::string>()));
        } catch (const PcmError& e) {
          throw PcmError(ErrorCode::Parse, cell_error(rows.size() + 1, col, e.what()));
        }
      } else {
        throw PcmError(ErrorCode::Parse, cell_error(rows.size() + 1, col, "expected a number or string"));
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw PcmError(ErrorCode::Parse, "matrix has no rows");
  if (doc.contains("n") && doc["n"].is_number_unsigned() && doc["n"].get<std::size_t>() != rows.size()) {
    throw PcmError(ErrorCode::Parse, "declared order n does not match the number of rows");
  }
  out.entries = from_rows(rows);
  return out;
}

MatrixDocument parse_document(std::string_view text, Format format) {
  return format == Format::Json ? parse_json(text) : parse_csv(text);
}

MatrixDocument read_document(const std::string& path, std::optional<Format> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PcmError(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!format) {
    const bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    format = json_ext ? Format::Json : Format::Csv;
  }
  return parse_document(buf.str(), *format);
}

std::string write_document(const Matrix& entries, Format format, const std::optional<std::string>& label) {
  std::ostringstream out;
  if (format == Format::Csv) {
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
      for (Eigen::Index j = 0; j < entries.cols(); ++j) {
        if (j) out << ',';
        out << shortest(entries(i, j));
      }
      out << '\n';
    }
    return out.str();
  }
  json doc;
  if (label) doc["label"] = *label;
  doc["n"] = entries.rows();
  json rows = json::array();
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < entries.cols(); ++j) row.push_back(entries(i, j));
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  return doc.dump(2) + "\n";
}

std::string format_number(double value, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << value;
  return s.str();
}

AnalysisReport analyze(const PairwiseComparisonMatrix& a, const AnalysisOptions& options,
                       std::optional<std::string> label) {
  AnalysisReport report;
  report.label = std::move(label);
  report.n = a.order();
  const auto pair = perron_eigenpair(a);
  report.lambda_max = pair.lambda_max;
  report.eigenvector = pair.w_em.to_std();
  report.consistent = is_consistent(a).consistent;
  report.detection = detect_simple_perturbed(a);
  report.verdict = is_efficient(a, pair.w_em, options.eps_arc);
  report.arcs = build_digraph(a, pair.w_em, options.eps_arc).arcs();
  if (options.trials > 0) {
    report.search_found_dominator =
        dominance_search(a, pair.w_em, options.trials, options.seed).has_value();
  }
  return report;
}

std::vector<std::string> check_report(const AnalysisReport& r) {
  std::vector<std::string> issues;
  const auto& v = r.verdict;
  if (r.consistent && !v.efficient) issues.push_back("consistent matrix reported inefficient");
  if (r.detection.is_simple_perturbed && !v.efficient) {
    issues.push_back("simple perturbed matrix reported inefficient");
  }
  if (r.consistent && r.detection.is_simple_perturbed) {
    issues.push_back("matrix reported both consistent and simple perturbed");
  }
  if (r.consistent != r.detection.is_consistent) issues.push_back("consistency flags disagree");
  if (r.detection.is_simple_perturbed != r.detection.recovered.has_value()) {
    issues.push_back("detection flag and recovered parameters disagree");
  }
  if (v.efficient != (v.scc_partition.size() == 1)) {
    issues.push_back("efficiency verdict disagrees with component count");
  }
  if (v.efficient == v.witness.has_value()) issues.push_back("witness presence disagrees with verdict");
  if (!v.efficient && v.improved_positions.empty()) issues.push_back("witness improves no position");
  if (r.search_found_dominator.value_or(false) && v.efficient) {
    issues.push_back("dominance search refuted an efficient verdict");
  }
  if (r.eigenvector.size() != r.n) issues.push_back("eigenvector length differs from order");
  if (r.lambda_max < static_cast<double>(r.n) - 1e-9) issues.push_back("lambda_max below n");
  return issues;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  if (r.label) out << "label: " << *r.label << '\n';
  out << "n: " << r.n << '\n';
  out << "lambda_max: " << format_number(r.lambda_max) << '\n';
  out << "eigenvector: " << join_numbers(r.eigenvector) << '\n';
  out << "consistent: " << (r.consistent ? "true" : "false") << '\n';
  out << "simple_perturbed: " << (r.detection.is_simple_perturbed ? "true" : "false") << '\n';
  if (r.detection.recovered) {
    const auto& spec = *r.detection.recovered;
    out << "delta: " << format_number(spec.delta) << '\n';
    out << "x: " << join_numbers(spec.x) << '\n';
    out << "position: " << one_based(spec.position) << '\n';
  }
  out << "efficient: " << (r.verdict.efficient ? "true" : "false") << '\n';
  out << "components:";
  for (const auto& c : r.verdict.scc_partition) {
    out << " {";
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? "," : "") << c[k] + 1;
    out << '}';
  }
  out << '\n';
  if (r.verdict.witness) {
    out << "witness: " << join_numbers(r.verdict.witness->to_std()) << '\n';
    out << "improved_pairs:";
    for (const auto& p : r.verdict.improved_positions) out << ' ' << one_based(p);
    out << '\n';
  }
  if (r.search_found_dominator) {
    out << "search_found_dominator: " << (*r.search_found_dominator ? "true" : "false") << '\n';
  }
  out << "arcs:";
  for (const auto& a : r.arcs) out << ' ' << a[0] + 1 << "->" << a[1] + 1;
  out << '\n';
  return out.str();
}

std::string report_to_json(const AnalysisReport& r) {
  json doc;
  if (r.label) doc["label"] = *r.label;
  doc["n"] = r.n;
  doc["lambda_max"] = rounded(r.lambda_max);
  doc["eigenvector"] = rounded(r.eigenvector);
  doc["consistent"] = r.consistent;
  doc["simple_perturbed"] = r.detection.is_simple_perturbed;
  if (r.detection.recovered) {
    const auto& spec = *r.detection.recovered;
    doc["delta"] = rounded(spec.delta);
    doc["x"] = rounded(spec.x);
    doc["position"] = {spec.position[0] + 1, spec.position[1] + 1};
  }
  doc["efficient"] = r.verdict.efficient;
  doc["components"] = components_json(r.verdict.scc_partition);
  if (r.verdict.witness) {
    doc["witness"] = rounded(r.verdict.witness->to_std());
    doc["improved_pairs"] = pairs_json(r.verdict.improved_positions);
  }
  if (r.search_found_dominator) doc["search_found_dominator"] = *r.search_found_dominator;
  doc["arcs"] = pairs_json(r.arcs);
  return doc.dump() + "\n";
}

std::string to_dot(const PreferenceDigraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  " << v + 1 << ";\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j || !g.has_arc(i, j)) continue;
      if (g.has_arc(j, i)) {
        if (i < j) out << "  " << i + 1 << " -> " << j + 1 << " [dir=both];\n";
      } else {
        out << "  " << i + 1 << " -> " << j + 1 << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pcm::io
