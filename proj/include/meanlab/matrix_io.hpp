#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "meanlab/hermitian.hpp"

namespace meanlab {

/// On-disk matrix: UTF-8 JSON
///   {"dim": m, "entries": [[[re, im], ...], ...], "label": "..."}
/// with rows outermost. Floats are written with 17 significant digits
/// (%.17g), which round-trips every finite double exactly.
struct MatrixFile {
  HermitianMatrix matrix;
  std::optional<std::string> label;
};

std::string format_matrix_file(const MatrixFile& file);

/// Throws UsageError with "line L, column C" for malformed JSON, and a plain
/// UsageError for a wrong shape or a non-Hermitian matrix.
MatrixFile parse_matrix_file(const std::string& text, const std::string& source = "<input>");

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);
MatrixFile read_matrix_file(const std::filesystem::path& path);

/// Reads a file that must hold a positive definite matrix.
HpdMatrix read_hpd_file(const std::filesystem::path& path);

}  // namespace meanlab
