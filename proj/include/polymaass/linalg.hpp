#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "polymaass/rational.hpp"

namespace pm {

struct RowEchelon {
    RMatrix reduced;
    std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(RMatrix m);
Eigen::Index rank(const RMatrix& m);
std::vector<RVector> kernel(const RMatrix& m);
// Particular solution with free variables set to zero, or nothing if inconsistent.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);
std::optional<RMatrix> inverse(const RMatrix& m);
bool is_zero(const RMatrix& m);

// Row-major list of rational strings.
nlohmann::json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const nlohmann::json& j, Eigen::Index rows, Eigen::Index cols);

}  // namespace pm
