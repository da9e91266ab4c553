#include "priorforge/errors.hpp"
#include "priorforge/lp.hpp"

#include <algorithm>
#include <optional>

namespace priorforge::lp {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form of the augmented matrix [A | rhs].
// Returns the pivot columns; sets `consistent` to false on a 0 = c row.
std::vector<std::size_t> rref(Matrix& rows, std::size_t cols, bool& consistent)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        const Rational piv = rows[r][c];
        for (auto& v : rows[r]) {
            v /= piv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) {
                continue;
            }
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j <= cols; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    consistent = true;
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (!rows[i][cols].is_zero()) {
            consistent = false;
        }
    }
    return pivots;
}

// Unique solution of a square system, if it is non-singular.
std::optional<std::vector<Rational>> solve_square(Matrix system, std::size_t n)
{
    bool consistent = true;
    const auto pivots = rref(system, n, consistent);
    if (pivots.size() != n || !consistent) {
        return std::nullopt;
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[pivots[i]] = system[i][n];
    }
    return x;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_basic_solutions(const LinearProgram& program, EnumerationCaps caps)
{
    program.validate();
    const std::size_t n = program.variable_count();
    if (n > caps.max_variables || program.constraints.size() > caps.max_constraints) {
        throw SizeCapError("basis enumeration is capped at " + std::to_string(caps.max_variables) + " variables and " +
                           std::to_string(caps.max_constraints) + " constraints; program '" + program.name + "' has " +
                           std::to_string(n) + " and " + std::to_string(program.constraints.size()));
    }

    // Equalities as [a | b]; every inequality and bound normalized to a . x >= b.
    Matrix equalities;
    Matrix inequalities;
    for (const auto& c : program.constraints) {
        std::vector<Rational> row(n + 1);
        std::copy(c.coefficients.begin(), c.coefficients.end(), row.begin());
        row[n] = c.rhs;
        if (c.relation == Relation::Equal) {
            equalities.push_back(std::move(row));
            continue;
        }
        if (c.relation == Relation::LessEqual) {
            for (auto& v : row) {
                v = -v;
            }
        }
        inequalities.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (program.lower[j]) {
            std::vector<Rational> row(n + 1);
            row[j] = 1;
            row[n] = *program.lower[j];
            inequalities.push_back(std::move(row));
        }
        if (program.upper[j]) {
            std::vector<Rational> row(n + 1);
            row[j] = -1;
            row[n] = -*program.upper[j];
            inequalities.push_back(std::move(row));
        }
    }

    bool consistent = true;
    const auto pivots = rref(equalities, n, consistent);
    if (!consistent) {
        return {};
    }
    const std::size_t rank = pivots.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
            free_cols.push_back(c);
        }
    }
    const std::size_t k = free_cols.size();

    // On the affine hull x_pivot[i] = e[i] - sum_f R[i][f] x_f, rewrite every
    // inequality over the free coordinates only.
    auto lift = [&](const std::vector<Rational>& free_values) {
        std::vector<Rational> x(n);
        for (std::size_t f = 0; f < k; ++f) {
            x[free_cols[f]] = free_values[f];
        }
        for (std::size_t i = 0; i < rank; ++i) {
            Rational v = equalities[i][n];
            for (std::size_t f = 0; f < k; ++f) {
                v -= equalities[i][free_cols[f]] * free_values[f];
            }
            x[pivots[i]] = v;
        }
        return x;
    };
    Matrix reduced;
    for (const auto& row : inequalities) {
        std::vector<Rational> r(k + 1);
        for (std::size_t f = 0; f < k; ++f) {
            r[f] = row[free_cols[f]];
        }
        r[k] = row[n];
        for (std::size_t i = 0; i < rank; ++i) {
            const Rational& a = row[pivots[i]];
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t f = 0; f < k; ++f) {
                r[f] -= a * equalities[i][free_cols[f]];
            }
            r[k] -= a * equalities[i][n];
        }
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

    auto feasible = [&](const std::vector<Rational>& y) {
        for (const auto& r : reduced) {
            Rational lhs;
            for (std::size_t f = 0; f < k; ++f) {
                lhs += r[f] * y[f];
            }
            if (lhs < r[k]) {
                return false;
            }
        }
        return true;
    };

    std::vector<std::vector<Rational>> vertices;
    if (k == 0) {
        if (feasible({})) {
            vertices.push_back(lift({}));
        }
        return vertices;
    }
    if (reduced.size() < k) {
        return vertices;
    }
    // Walk all k-subsets of the reduced inequalities in lexicographic order.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
        pick[i] = i;
    }
    while (true) {
        Matrix system;
        system.reserve(k);
        for (std::size_t idx : pick) {
            system.push_back(reduced[idx]);
        }
        if (auto y = solve_square(std::move(system), k); y && feasible(*y)) {
            vertices.push_back(lift(*y));
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == reduced.size() - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

}  // namespace priorforge::lp
