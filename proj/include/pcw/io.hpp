#ifndef PCW_IO_HPP
#define PCW_IO_HPP

#include <iosfwd>
#include <string>

#include "pcw/gf2.hpp"

namespace pcw {

enum class MatrixFormat { automatic, plain, alist };

// Plain format: "rows cols" on the first line, then one 0/1 row per line.
BinaryMatrix read_matrix_plain(std::istream& in);
std::string write_matrix_plain(const BinaryMatrix& h);

// alist format: "cols rows", max column/row degrees, the degree lists, then
// 1-based row indices per column and column indices per row; zero padding is
// ignored.  Both halves must describe the same matrix.
BinaryMatrix read_matrix_alist(std::istream& in);
std::string write_matrix_alist(const BinaryMatrix& h);

// Reads a parity-check matrix from disk.  With MatrixFormat::automatic the
// ".alist" extension selects the alist parser, anything else the plain one.
BinaryMatrix load_matrix(const std::string& path,
                         MatrixFormat format = MatrixFormat::automatic);

// FNV-1a 64 over the plain serialization, as 16 hex digits.  Stable content
// fingerprint for reports.
std::string matrix_digest(const BinaryMatrix& h);

} // namespace pcw

#endif
