#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gring/coeff.hpp"

namespace gring {

/// Dense row-major matrix of exact coefficients.
struct Matrix {
    std::size_t rows{0}, cols{0};
    std::vector<Coeff> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Coeff(0)) {}
    Coeff& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Coeff& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct LinSolveResult {
    bool consistent{false};
    std::vector<Coeff> particular;          // one solution (free variables 0)
    std::vector<std::vector<Coeff>> kernel; // basis of the null space
    std::size_t rank{0};
};

/// Exact Gauss-Jordan elimination over a field domain, pivoting on the
/// first nonzero entry of each column.  Solutions are re-verified by
/// substitution in debug builds.
LinSolveResult solve_linear(const CoeffDomain& field, Matrix m, std::vector<Coeff> rhs);

/// Integer matrix system A x = b solved over Z via column Hermite normal
/// form with unimodular tracking.  Returns an integral solution or
/// nullopt when none exists (including when no rational solution exists).
std::optional<std::vector<Int>> solve_integer(std::size_t rows, std::size_t cols,
                                              const std::vector<Int>& a,
                                              const std::vector<Int>& b);

} // namespace gring
