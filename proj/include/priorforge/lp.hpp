#pragma once

#include "priorforge/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace priorforge::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status status);

struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::Equal;
    Rational rhs;
    std::string label;
};

/// A linear program over exact rationals. Every variable carries explicit
/// bounds; there is no implicit non-negativity (add_variable defaults the
/// lower bound to 0, pass std::nullopt for a free side).
struct LinearProgram {
    std::vector<std::string> variable_names;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;
    std::vector<Constraint> constraints;
    std::vector<Rational> objective;
    Sense sense = Sense::Maximize;
    std::string name;

    std::size_t add_variable(std::string label, std::optional<Rational> lo = Rational(0),
                             std::optional<Rational> hi = std::nullopt);
    [[nodiscard]] std::size_t variable_count() const noexcept { return variable_names.size(); }

    /// `coefficients` may be shorter than variable_count(); missing entries are 0.
    void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs, std::string label = {});
    void set_objective(Sense s, std::vector<Rational> coefficients);

    /// Throws MalformedProgramError on inconsistent dimensions.
    void validate() const;

    /// Human-readable dump in an LP-file-like layout.
    [[nodiscard]] std::string dump() const;
};

/// Farkas-type proof of infeasibility. Multipliers follow the relation of
/// the row they scale: <= rows and upper bounds take non-positive
/// multipliers, >= rows and lower bounds non-negative ones, = rows any sign.
/// Summing multiplier * row over all rows and bounds gives 0 . x on the
/// left and a strictly positive number on the right.
struct FarkasCertificate {
    std::vector<Rational> rows;
    std::vector<Rational> lower;
    std::vector<Rational> upper;
};

struct Outcome {
    Status status = Status::Infeasible;
    std::vector<Rational> primal;
    std::optional<Rational> objective_value;
    std::optional<FarkasCertificate> certificate;
};

/// Two-phase dense tableau simplex with Bland's rule. The returned point or
/// certificate has been re-verified exactly; a failed check throws
/// VerificationError.
Outcome solve(const LinearProgram& program);

[[nodiscard]] Rational objective_at(const LinearProgram& program, std::span<const Rational> x);

/// Exact primal feasibility, including bounds.
[[nodiscard]] bool is_feasible_point(const LinearProgram& program, std::span<const Rational> x);

[[nodiscard]] bool verify_farkas(const LinearProgram& program, const FarkasCertificate& certificate);

struct EnumerationCaps {
    std::size_t max_variables = 12;
    std::size_t max_constraints = 24;
};

/// All basic feasible solutions, found by exhaustive basis enumeration with
/// exact Gaussian elimination. Independent of solve(); used as its oracle.
/// Sorted lexicographically, duplicates removed. Throws SizeCapError when the
/// program exceeds `caps` (bounds do not count as constraints).
std::vector<std::vector<Rational>> enumerate_basic_solutions(const LinearProgram& program, EnumerationCaps caps = {});

/// While alive, every solve() on this thread writes program.dump() to `out`.
class ScopedDump {
public:
    explicit ScopedDump(std::ostream& out);
    ~ScopedDump();
    ScopedDump(const ScopedDump&) = delete;
    ScopedDump& operator=(const ScopedDump&) = delete;

private:
    std::ostream* previous_;
};

}  // namespace priorforge::lp
