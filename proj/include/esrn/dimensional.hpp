#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esrn/sample.hpp"

namespace esrn {

/// Exponents of one variable over the base dimensions (length, time for the
/// shipped instance; the solver is dimension-count agnostic).
using UnitVector = std::vector<std::int64_t>;

/// Dimension matrix: unit_of[j] are the base-dimension exponents of
/// variable j. Row i of the implied matrix is dimension i across variables.
struct UnitMatrix {
    std::vector<std::string> variable_names;
    std::vector<UnitVector> unit_of;  // one UnitVector per variable

    std::size_t n_vars() const { return unit_of.size(); }
    std::size_t n_dims() const { return unit_of.empty() ? 0 : unit_of.front().size(); }
};

/// A dimensionless combination of variables (or an output normalizer).
/// `exponents[j]` is the integer power of variable j. For an output group
/// the value is y / prod(x_j ^ exponents[j]); for an input group it is the
/// product itself. The all-zero input group is the constant 1.
struct PiGroup {
    std::vector<std::int64_t> exponents;
    bool is_output = false;
    std::string output_symbol;  // dependent-variable name when is_output

    bool constant_one() const;
    friend bool operator==(const PiGroup&, const PiGroup&) = default;
};

/// Inputs (dimensionless groups plus the constant 1) and candidate output
/// normalizer groups for one regression problem.
struct CandidateSet {
    UnitMatrix units;
    std::vector<PiGroup> inputs;
    std::vector<PiGroup> outputs;
};

/// Integer basis of the nullspace of the unit matrix: n - rank independent
/// vectors, each scaled to the smallest integer form with a positive
/// leading entry. These are the dimensionless input combinations. A zero
/// matrix yields the n unit vectors (every variable already dimensionless).
std::vector<std::vector<std::int64_t>> nullspace_exponents(const UnitMatrix& m);

/// All output normalizers: one particular solution p of M*p = output_unit
/// enlarged by integer combinations of the nullspace basis, keeping vectors
/// whose entries all lie in [min_exp, max_exp]. Results are sorted by
/// exponent vector, descending. Throws std::invalid_argument when the
/// output unit is not expressible in the inputs.
std::vector<PiGroup> output_normalizers(const UnitMatrix& m, const UnitVector& output_unit,
                                        const std::string& output_symbol,
                                        std::int64_t min_exp = -1, std::int64_t max_exp = 1);

/// Value of a group at a sample (all referenced variables must be positive).
/// Input groups map variable j onto the sample's j-th physical column;
/// output groups divide the sample's Dl by the normalizer product.
double evaluate_group(const PiGroup& group, const Sample& sample);

/// Human-readable form, e.g. "w/d", "1", "Dl/(d*U)".
std::string group_name(const PiGroup& group, const UnitMatrix& m);

/// The river dispersion instance: variables w, d, U, Ustar over dimensions
/// (L, T); w and d carry L^1, the velocities L^1 T^-1; the output Dl is
/// L^2 T^-1. Yields inputs {w/d, U/Ustar, 1} and outputs
/// {Dl/(w*U), Dl/(w*Ustar), Dl/(d*U), Dl/(d*Ustar)}.
UnitMatrix ldc_unit_matrix();
UnitVector ldc_output_unit();
CandidateSet ldc_candidates(std::int64_t min_exp = -1, std::int64_t max_exp = 1);

}  // namespace esrn
