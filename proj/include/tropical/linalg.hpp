#pragma once

#include "tropical/arith.hpp"

#include <optional>

// Exact dense linear algebra over Q. Matrices are row-major; every routine
// takes the column count explicitly so empty matrices stay meaningful.
namespace tropical::linalg {

struct Echelon {
  QMatrix rows;                     // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(QMatrix a, std::size_t cols);
std::size_t rank(const QMatrix& a, std::size_t cols);

/// Basis of {x : a x = 0}.
QMatrix nullspace(const QMatrix& a, std::size_t cols);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b, std::size_t cols);

Rational determinant(QMatrix a);

/// Linearly independent subset (as a basis in echelon form) of the row span.
QMatrix row_basis(const QMatrix& a, std::size_t cols);

bool in_span(const QMatrix& rows, const QVector& v, std::size_t cols);

/// Orthogonal projection of v onto the complement of span(rows).
QVector project_out(const QMatrix& rows, const QVector& v);

QMatrix transpose(const QMatrix& a, std::size_t cols);
QMatrix identity(std::size_t n);

}  // namespace tropical::linalg
