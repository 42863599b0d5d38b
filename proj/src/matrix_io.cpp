#include "meanlab/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "meanlab/errors.hpp"

namespace meanlab {
namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep a float marker so "-0" is not read back as the integer 0.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string escape_json(const std::string& s) { return nlohmann::json(s).dump(); }

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number_at(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw UsageError(where + ": expected a number");
  return v.get<double>();
}

}  // namespace

std::string format_matrix_file(const MatrixFile& file) {
  const Matrix& m = file.matrix.matrix();
  std::ostringstream out;
  out << "{\n  \"dim\": " << m.rows() << ",\n  \"entries\": [\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << '[' << format_double(m(i, j).real()) << ", " << format_double(m(i, j).imag()) << ']';
    }
    out << (i + 1 < m.rows() ? "],\n" : "]\n");
  }
  out << "  ]";
  if (file.label) out << ",\n  \"label\": " << escape_json(*file.label);
  out << "\n}\n";
  return out.str();
}

MatrixFile parse_matrix_file(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(source + ": malformed JSON at " + line_column(text, e.byte ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) throw UsageError(source + ": top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw UsageError(source + ": missing integer field \"dim\"");
  const long long dim = doc["dim"].get<long long>();
  if (dim < 1 || dim > kMaxDim)
    throw UsageError(source + ": dim must be in [1, " + std::to_string(kMaxDim) + "]");
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      doc["entries"].size() != static_cast<std::size_t>(dim))
    throw UsageError(source + ": \"entries\" must be an array of " + std::to_string(dim) + " rows");

  Matrix m(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const auto& row = doc["entries"][i];
    const std::string where = source + ": entries[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw UsageError(where + " must hold " + std::to_string(dim) + " entries");
    for (long long j = 0; j < dim; ++j) {
      const auto& e = row[j];
      const std::string at = where + "[" + std::to_string(j) + "]";
      if (!e.is_array() || e.size() != 2) throw UsageError(at + " must be [re, im]");
      m(i, j) = Complex(number_at(e[0], at), number_at(e[1], at));
    }
  }

  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw UsageError(source + ": \"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  try {
    return {HermitianMatrix(m), std::move(label)};
  } catch (const PreconditionError& e) {
    throw UsageError(source + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path.string() + " for writing");
  out << format_matrix_file(file);
  if (!out) throw UsageError("failed writing " + path.string());
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str(), path.string());
}

HpdMatrix read_hpd_file(const std::filesystem::path& path) {
  MatrixFile f = read_matrix_file(path);
  try {
    return HpdMatrix(std::move(f.matrix));
  } catch (const DomainError& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

}  // namespace meanlab
