#include "priorforge/lp.hpp"

#include "priorforge/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace priorforge::lp {

namespace {

thread_local std::ostream* dump_sink = nullptr;

// How an original variable maps onto non-negative tableau columns.
enum class Shape { FromLower, FromUpper, Free };

struct VariableMap {
    Shape shape = Shape::FromLower;
    Rational shift;                 // x = shift + x' (FromLower) or shift - x' (FromUpper)
    std::size_t column = 0;         // x' (or x+ for Free)
    std::size_t negative_column = 0;  // x- for Free
    std::optional<std::size_t> upper_row;
};

enum class ColumnKind { Structural, Slack, Artificial };

class Tableau {
public:
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<std::size_t> basis;
    std::vector<Rational> reduced;
    Rational value;
    std::vector<bool> blocked;

    void pivot(std::size_t r, std::size_t c)
    {
        const Rational piv = a[r][c];
        std::vector<std::size_t> nz;
        auto& row = a[r];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_zero()) {
                if (j != c) {
                    row[j] /= piv;
                }
                nz.push_back(j);
            }
        }
        row[c] = 1;
        b[r] /= piv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) {
                continue;
            }
            const Rational factor = a[i][c];
            for (std::size_t j : nz) {
                a[i][j] -= factor * row[j];
            }
            if (!b[r].is_zero()) {
                b[i] -= factor * b[r];
            }
        }
        if (!reduced[c].is_zero()) {
            const Rational factor = reduced[c];
            for (std::size_t j : nz) {
                reduced[j] -= factor * row[j];
            }
            value += factor * b[r];
        }
        basis[r] = c;
    }

    // Minimizes with Bland's rule. Returns false when unbounded.
    bool run()
    {
        const std::size_t cols = reduced.size();
        while (true) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!blocked[j] && reduced[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) {
                return true;
            }
            std::size_t leave = a.size();
            Rational best;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i][enter].sign() <= 0) {
                    continue;
                }
                Rational ratio = b[i] / a[i][enter];
                if (leave == a.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == a.size()) {
                return false;
            }
            pivot(leave, enter);
        }
    }

    void price(const std::vector<Rational>& cost)
    {
        reduced = cost;
        value = Rational();
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < reduced.size(); ++j) {
                if (!a[i][j].is_zero()) {
                    reduced[j] -= cb * a[i][j];
                }
            }
            value += cb * b[i];
        }
    }
};

Relation flipped(Relation r)
{
    switch (r) {
    case Relation::LessEqual: return Relation::GreaterEqual;
    case Relation::GreaterEqual: return Relation::LessEqual;
    case Relation::Equal: return Relation::Equal;
    }
    return r;
}

const Rational& coefficient(const Constraint& c, std::size_t j)
{
    static const Rational zero;
    return j < c.coefficients.size() ? c.coefficients[j] : zero;
}

}  // namespace

const char* to_string(Status status)
{
    switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    }
    return "?";
}

std::size_t LinearProgram::add_variable(std::string label, std::optional<Rational> lo, std::optional<Rational> hi)
{
    variable_names.push_back(std::move(label));
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    objective.resize(variable_names.size());
    return variable_names.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs, std::string label)
{
    constraints.push_back({std::move(coefficients), relation, std::move(rhs), std::move(label)});
}

void LinearProgram::set_objective(Sense s, std::vector<Rational> coefficients)
{
    sense = s;
    objective = std::move(coefficients);
    objective.resize(std::max(objective.size(), variable_names.size()));
}

void LinearProgram::validate() const
{
    const std::size_t n = variable_names.size();
    if (lower.size() != n || upper.size() != n) {
        throw MalformedProgramError("bound vectors do not match the variable count");
    }
    if (objective.size() != n) {
        throw MalformedProgramError("objective has " + std::to_string(objective.size()) + " coefficients for " +
                                    std::to_string(n) + " variables");
    }
    for (std::size_t k = 0; k < constraints.size(); ++k) {
        if (constraints[k].coefficients.size() > n) {
            throw MalformedProgramError("constraint " + std::to_string(k) + " has more coefficients than variables");
        }
    }
}

std::string LinearProgram::dump() const
{
    std::ostringstream os;
    auto term_list = [&](const std::vector<Rational>& coeffs) {
        bool first = true;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) {
                continue;
            }
            if (first) {
                os << (coeffs[j].sign() < 0 ? "- " : "");
            } else {
                os << (coeffs[j].sign() < 0 ? " - " : " + ");
            }
            os << coeffs[j].abs() << ' ' << variable_names[j];
            first = false;
        }
        if (first) {
            os << "0";
        }
    };
    os << "\\ " << (name.empty() ? "program" : name) << "\n";
    os << (sense == Sense::Maximize ? "maximize" : "minimize") << "\n obj: ";
    term_list(objective);
    os << "\nsubject to\n";
    for (std::size_t k = 0; k < constraints.size(); ++k) {
        const auto& c = constraints[k];
        os << ' ' << (c.label.empty() ? "c" + std::to_string(k) : c.label) << ": ";
        term_list(c.coefficients);
        os << (c.relation == Relation::LessEqual ? " <= " : c.relation == Relation::Equal ? " = " : " >= ") << c.rhs
           << "\n";
    }
    os << "bounds\n";
    for (std::size_t j = 0; j < variable_names.size(); ++j) {
        os << ' ';
        if (lower[j]) {
            os << *lower[j] << " <= ";
        } else {
            os << "-inf <= ";
        }
        os << variable_names[j];
        if (upper[j]) {
            os << " <= " << *upper[j];
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

Rational objective_at(const LinearProgram& program, std::span<const Rational> x)
{
    Rational total;
    for (std::size_t j = 0; j < program.objective.size() && j < x.size(); ++j) {
        if (!program.objective[j].is_zero()) {
            total += program.objective[j] * x[j];
        }
    }
    return total;
}

bool is_feasible_point(const LinearProgram& program, std::span<const Rational> x)
{
    if (x.size() != program.variable_count()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (program.lower[j] && x[j] < *program.lower[j]) {
            return false;
        }
        if (program.upper[j] && x[j] > *program.upper[j]) {
            return false;
        }
    }
    for (const auto& c : program.constraints) {
        Rational lhs;
        for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
            if (!c.coefficients[j].is_zero()) {
                lhs += c.coefficients[j] * x[j];
            }
        }
        switch (c.relation) {
        case Relation::LessEqual:
            if (lhs > c.rhs) {
                return false;
            }
            break;
        case Relation::GreaterEqual:
            if (lhs < c.rhs) {
                return false;
            }
            break;
        case Relation::Equal:
            if (lhs != c.rhs) {
                return false;
            }
            break;
        }
    }
    return true;
}

bool verify_farkas(const LinearProgram& program, const FarkasCertificate& cert)
{
    const std::size_t n = program.variable_count();
    if (cert.rows.size() != program.constraints.size() || cert.lower.size() != n || cert.upper.size() != n) {
        return false;
    }
    std::vector<Rational> combined(n);
    Rational rhs;
    for (std::size_t k = 0; k < program.constraints.size(); ++k) {
        const auto& c = program.constraints[k];
        const Rational& z = cert.rows[k];
        if ((c.relation == Relation::LessEqual && z.sign() > 0) || (c.relation == Relation::GreaterEqual && z.sign() < 0)) {
            return false;
        }
        if (z.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
            if (!c.coefficients[j].is_zero()) {
                combined[j] += z * c.coefficients[j];
            }
        }
        rhs += z * c.rhs;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (cert.lower[j].sign() < 0 || cert.upper[j].sign() > 0) {
            return false;
        }
        if (!cert.lower[j].is_zero()) {
            if (!program.lower[j]) {
                return false;
            }
            combined[j] += cert.lower[j];
            rhs += cert.lower[j] * *program.lower[j];
        }
        if (!cert.upper[j].is_zero()) {
            if (!program.upper[j]) {
                return false;
            }
            combined[j] += cert.upper[j];
            rhs += cert.upper[j] * *program.upper[j];
        }
    }
    return std::all_of(combined.begin(), combined.end(), [](const Rational& v) { return v.is_zero(); }) &&
           rhs.sign() > 0;
}

Outcome solve(const LinearProgram& program)
{
    program.validate();
    if (dump_sink != nullptr) {
        *dump_sink << program.dump();
    }
    const std::size_t n = program.variable_count();

    // Substitute every variable by non-negative columns.
    std::vector<VariableMap> vars(n);
    std::vector<std::pair<std::size_t, int>> column_source;  // original variable, +/-1
    for (std::size_t j = 0; j < n; ++j) {
        auto& v = vars[j];
        if (program.lower[j]) {
            v.shape = Shape::FromLower;
            v.shift = *program.lower[j];
            v.column = column_source.size();
            column_source.emplace_back(j, 1);
        } else if (program.upper[j]) {
            v.shape = Shape::FromUpper;
            v.shift = *program.upper[j];
            v.column = column_source.size();
            column_source.emplace_back(j, -1);
        } else {
            v.shape = Shape::Free;
            v.column = column_source.size();
            column_source.emplace_back(j, 1);
            v.negative_column = column_source.size();
            column_source.emplace_back(j, -1);
        }
    }
    const std::size_t structural = column_source.size();

    struct Row {
        std::vector<Rational> coeffs;  // over structural columns
        Relation relation;
        Rational rhs;
        int sign = 1;
    };
    std::vector<Row> rows;
    rows.reserve(program.constraints.size());
    for (const auto& c : program.constraints) {
        Row row{std::vector<Rational>(structural), c.relation, c.rhs, 1};
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& a = coefficient(c, j);
            if (a.is_zero()) {
                continue;
            }
            const auto& v = vars[j];
            switch (v.shape) {
            case Shape::FromLower:
                row.coeffs[v.column] += a;
                row.rhs -= a * v.shift;
                break;
            case Shape::FromUpper:
                row.coeffs[v.column] -= a;
                row.rhs -= a * v.shift;
                break;
            case Shape::Free:
                row.coeffs[v.column] += a;
                row.coeffs[v.negative_column] -= a;
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (vars[j].shape == Shape::FromLower && program.upper[j]) {
            Row row{std::vector<Rational>(structural), Relation::LessEqual, *program.upper[j] - *program.lower[j], 1};
            row.coeffs[vars[j].column] = 1;
            vars[j].upper_row = rows.size();
            rows.push_back(std::move(row));
        }
    }
    for (auto& row : rows) {
        if (row.rhs.sign() < 0) {
            row.sign = -1;
            row.rhs = -row.rhs;
            for (auto& v : row.coeffs) {
                v = -v;
            }
            row.relation = flipped(row.relation);
        }
    }

    // Columns: structural | one slack per inequality | one artificial per row lacking a +1 slack.
    const std::size_t m = rows.size();
    std::vector<ColumnKind> kind(structural, ColumnKind::Structural);
    std::vector<std::size_t> slack_col(m, 0), init_col(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
        if (rows[k].relation != Relation::Equal) {
            slack_col[k] = kind.size();
            kind.push_back(ColumnKind::Slack);
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (rows[k].relation == Relation::LessEqual) {
            init_col[k] = slack_col[k];
        } else {
            init_col[k] = kind.size();
            kind.push_back(ColumnKind::Artificial);
        }
    }
    const std::size_t cols = kind.size();

    Tableau t;
    t.a.assign(m, std::vector<Rational>(cols));
    t.b.resize(m);
    t.basis.resize(m);
    t.blocked.assign(cols, false);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < structural; ++j) {
            t.a[k][j] = rows[k].coeffs[j];
        }
        if (rows[k].relation == Relation::LessEqual) {
            t.a[k][slack_col[k]] = 1;
        } else if (rows[k].relation == Relation::GreaterEqual) {
            t.a[k][slack_col[k]] = -1;
        }
        t.a[k][init_col[k]] = 1;
        t.b[k] = rows[k].rhs;
        t.basis[k] = init_col[k];
    }

    // Phase 1.
    std::vector<Rational> phase1_cost(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        if (kind[j] == ColumnKind::Artificial) {
            phase1_cost[j] = 1;
        }
    }
    t.price(phase1_cost);
    t.run();

    Outcome out;
    if (t.value.sign() > 0) {
        std::vector<Rational> y(m);
        for (std::size_t k = 0; k < m; ++k) {
            y[k] = phase1_cost[init_col[k]] - t.reduced[init_col[k]];
        }
        FarkasCertificate cert;
        cert.rows.resize(program.constraints.size());
        cert.lower.resize(n);
        cert.upper.resize(n);
        std::vector<Rational> g(n);
        for (std::size_t k = 0; k < program.constraints.size(); ++k) {
            cert.rows[k] = rows[k].sign > 0 ? y[k] : -y[k];
            if (cert.rows[k].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& a = coefficient(program.constraints[k], j);
                if (!a.is_zero()) {
                    g[j] += cert.rows[k] * a;
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = vars[j];
            switch (v.shape) {
            case Shape::FromLower: {
                Rational nu;
                if (v.upper_row) {
                    nu = rows[*v.upper_row].sign > 0 ? y[*v.upper_row] : -y[*v.upper_row];
                }
                cert.upper[j] = nu;
                cert.lower[j] = -(g[j] + nu);
                break;
            }
            case Shape::FromUpper:
                cert.upper[j] = -g[j];
                break;
            case Shape::Free:
                break;
            }
        }
        if (!verify_farkas(program, cert)) {
            throw VerificationError("simplex produced an invalid infeasibility certificate for '" + program.name + "'");
        }
        out.status = Status::Infeasible;
        out.certificate = std::move(cert);
        return out;
    }

    // Drive artificials out of the basis; rows where that is impossible are redundant.
    for (std::size_t r = 0; r < m; ++r) {
        if (kind[t.basis[r]] != ColumnKind::Artificial) {
            continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (kind[j] != ColumnKind::Artificial && !t.a[r][j].is_zero()) {
                t.pivot(r, j);
                break;
            }
        }
    }
    for (std::size_t j = 0; j < cols; ++j) {
        t.blocked[j] = kind[j] == ColumnKind::Artificial;
    }

    // Phase 2, as a minimization.
    std::vector<Rational> cost(cols);
    const bool maximize = program.sense == Sense::Maximize;
    for (std::size_t c = 0; c < structural; ++c) {
        const auto [j, sgn] = column_source[c];
        const Rational& cj = program.objective[j];
        if (cj.is_zero()) {
            continue;
        }
        cost[c] = sgn > 0 ? cj : -cj;
        if (maximize) {
            cost[c] = -cost[c];
        }
    }
    t.price(cost);
    if (!t.run()) {
        out.status = Status::Unbounded;
        return out;
    }

    std::vector<Rational> column_value(cols);
    for (std::size_t r = 0; r < m; ++r) {
        column_value[t.basis[r]] = t.b[r];
    }
    out.primal.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& v = vars[j];
        switch (v.shape) {
        case Shape::FromLower: out.primal[j] = v.shift + column_value[v.column]; break;
        case Shape::FromUpper: out.primal[j] = v.shift - column_value[v.column]; break;
        case Shape::Free: out.primal[j] = column_value[v.column] - column_value[v.negative_column]; break;
        }
    }
    out.status = Status::Optimal;
    out.objective_value = objective_at(program, out.primal);

    Rational constant;
    for (std::size_t j = 0; j < n; ++j) {
        if (vars[j].shape != Shape::Free) {
            constant += program.objective[j] * vars[j].shift;
        }
    }
    const Rational tableau_value = maximize ? constant - t.value : constant + t.value;
    if (!is_feasible_point(program, out.primal) || tableau_value != *out.objective_value) {
        throw VerificationError("simplex produced an inconsistent optimal point for '" + program.name + "'");
    }
    return out;
}

ScopedDump::ScopedDump(std::ostream& out) : previous_(dump_sink)
{
    dump_sink = &out;
}

ScopedDump::~ScopedDump()
{
    dump_sink = previous_;
}

}  // namespace priorforge::lp
