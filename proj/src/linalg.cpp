#include "gring/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace gring {

LinSolveResult solve_linear(const CoeffDomain& field, Matrix m, std::vector<Coeff> rhs) {
    if (!field.is_field()) throw std::invalid_argument("solve_linear requires a field domain");
    if (rhs.size() != m.rows) throw std::invalid_argument("rhs size mismatch");

#ifndef NDEBUG
    const Matrix m0 = m;
    const std::vector<Coeff> rhs0 = rhs;
#endif

    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> col_is_pivot(m.cols, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && m.at(pr, col) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != row) {
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
            std::swap(rhs[pr], rhs[row]);
        }
        Coeff piv_inv = field.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols; ++c)
            m.at(row, c) = field.mul(m.at(row, c), piv_inv);
        rhs[row] = field.mul(rhs[row], piv_inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Coeff f = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = field.sub(m.at(r, c), field.mul(f, m.at(row, c)));
            rhs[r] = field.sub(rhs[r], field.mul(f, rhs[row]));
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[col] = true;
        ++row;
    }

    LinSolveResult out;
    out.rank = row;
    for (std::size_t r = row; r < m.rows; ++r)
        if (rhs[r] != 0) {
            out.consistent = false;
            return out;
        }
    out.consistent = true;

    out.particular.assign(m.cols, Coeff(0));
    for (std::size_t r = 0; r < row; ++r) out.particular[pivot_col_of_row[r]] = rhs[r];

    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (col_is_pivot[free_col]) continue;
        std::vector<Coeff> v(m.cols, Coeff(0));
        v[free_col] = field.one();
        for (std::size_t r = 0; r < row; ++r)
            v[pivot_col_of_row[r]] = field.neg(m.at(r, free_col));
        out.kernel.push_back(std::move(v));
    }

#ifndef NDEBUG
    auto check = [&](const std::vector<Coeff>& x, bool homogeneous) {
        for (std::size_t r = 0; r < m0.rows; ++r) {
            Coeff acc(0);
            for (std::size_t c = 0; c < m0.cols; ++c)
                acc = field.add(acc, field.mul(m0.at(r, c), x[c]));
            assert(acc == (homogeneous ? Coeff(0) : field.canon(rhs0[r])));
        }
    };
    check(out.particular, false);
    for (const auto& v : out.kernel) check(v, true);
#endif
    return out;
}

namespace {

inline Int& at(std::vector<Int>& m, std::size_t cols, std::size_t r, std::size_t c) {
    return m[r * cols + c];
}

} // namespace

std::optional<std::vector<Int>> solve_integer(std::size_t rows, std::size_t cols,
                                              const std::vector<Int>& a_in,
                                              const std::vector<Int>& b) {
    if (a_in.size() != rows * cols || b.size() != rows)
        throw std::invalid_argument("integer system shape mismatch");

    std::vector<Int> a = a_in;
    // u: cols x cols unimodular with A * u = h (column staircase).
    std::vector<Int> u(cols * cols, Int(0));
    for (std::size_t i = 0; i < cols; ++i) at(u, cols, i, i) = 1;

    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < rows; ++r) at(a, cols, r, dst) += f * at(a, cols, r, src);
        for (std::size_t r = 0; r < cols; ++r) at(u, cols, r, dst) += f * at(u, cols, r, src);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(at(a, cols, r, i), at(a, cols, r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(at(u, cols, r, i), at(u, cols, r, j));
    };
    auto col_neg = [&](std::size_t i) {
        for (std::size_t r = 0; r < rows; ++r) at(a, cols, r, i) = -at(a, cols, r, i);
        for (std::size_t r = 0; r < cols; ++r) at(u, cols, r, i) = -at(u, cols, r, i);
    };

    std::size_t pc = 0; // next pivot column slot
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    for (std::size_t r = 0; r < rows && pc < cols; ++r) {
        // Euclid across columns pc..cols-1 until one nonzero entry remains in row r.
        while (true) {
            std::size_t jmin = cols;
            for (std::size_t j = pc; j < cols; ++j) {
                if (at(a, cols, r, j) == 0) continue;
                if (jmin == cols ||
                    abs(at(a, cols, r, j)) < abs(at(a, cols, r, jmin)))
                    jmin = j;
            }
            if (jmin == cols) break; // row is zero on active columns
            bool lone = true;
            for (std::size_t j = pc; j < cols; ++j) {
                if (j == jmin || at(a, cols, r, j) == 0) continue;
                Int q = at(a, cols, r, j) / at(a, cols, r, jmin);
                col_addmul(j, jmin, -q);
                if (at(a, cols, r, j) != 0) lone = false;
            }
            if (lone) {
                col_swap(pc, jmin);
                if (at(a, cols, r, pc) < 0) col_neg(pc);
                pivots.emplace_back(r, pc);
                ++pc;
                break;
            }
        }
    }

    // Forward-substitute h y = b; non-pivot rows must vanish exactly.
    std::vector<Int> y(cols, Int(0));
    std::size_t next_piv = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        Int acc(0);
        for (std::size_t j = 0; j < pc; ++j) acc += at(a, cols, r, j) * y[j];
        Int resid = b[r] - acc;
        if (next_piv < pivots.size() && pivots[next_piv].first == r) {
            std::size_t j = pivots[next_piv].second;
            const Int& piv = at(a, cols, r, j);
            if (resid % piv != 0) return std::nullopt;
            y[j] = resid / piv;
            ++next_piv;
        } else if (resid != 0) {
            return std::nullopt;
        }
    }

    std::vector<Int> x(cols, Int(0));
    for (std::size_t r = 0; r < cols; ++r) {
        Int acc(0);
        for (std::size_t j = 0; j < cols; ++j) acc += at(u, cols, r, j) * y[j];
        x[r] = acc;
    }
#ifndef NDEBUG
    for (std::size_t r = 0; r < rows; ++r) {
        Int acc(0);
        for (std::size_t c = 0; c < cols; ++c) acc += a_in[r * cols + c] * x[c];
        assert(acc == b[r]);
    }
#endif
    return x;
}

} // namespace gring
