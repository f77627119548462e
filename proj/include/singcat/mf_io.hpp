#pragma once

#include <string>

#include "singcat/mf.hpp"

namespace singcat {

/// Text interchange format, one field per line:
///   field: QQ
///   variables: x, y
///   potential: x^3
///   rank: 2
///   A:
///   <rank lines of comma-separated polynomial entries>
///   B:
///   <rank lines>
/// The writer emits canonical polynomial strings; writer output round-trips
/// bit-exactly through the reader.
std::string write_mf(const MatrixFactorization& x);
MatrixFactorization read_mf(const std::string& text);
MatrixFactorization read_mf_file(const std::string& path);

}  // namespace singcat
