#pragma once

#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace coxhyp {

using QMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Reduced row echelon form in place; returns the rank.
size_t rref_in_place(QMatrix& m);

// Basis of the right kernel {v : m v = 0}, one vector per free column,
// in ascending free-column order.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m, size_t ncols);

// Determinant of a square polynomial matrix by first-column Laplace
// expansion with zero skipping; fine at the banded desk sizes used here.
Polynomial poly_det(const PolyMatrix& m);

// Evaluates every entry at a full assignment.
QMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& values);

}  // namespace coxhyp
