#pragma once

#include <vector>

#include <json.hpp>

#include "polymaass/labels.hpp"
#include "polymaass/linalg.hpp"
#include "polymaass/symcalc.hpp"

namespace pm {

enum class Branch { L, R };

// Δ pulled back to W_d = (Q[T]/T^{d+1}) ⊗ V equals A + T B + T^2 C.
struct WModel {
    int k = 0;
    int m = 0;
    Branch branch = Branch::L;
    RMatrix A, B, C;
};

struct GradedVector {
    int k = 0;
    int m = 0;
    Branch branch = Branch::L;
    int d = 0;
    std::vector<RVector> layers;  // layer t is the coefficient of T^t
    // Δ w = μ(T) w with μ(T) = Σ_{t>=1} eigen[t-1] T^t (mod T^{d+1}).
    std::vector<Rational> eigen;
};

WModel build_model(int k, int m, Branch branch);
std::vector<RVector> apply_model(const WModel& w, const std::vector<RVector>& layers);

GradedVector build_w0(int k, int m, Branch branch);
GradedVector solve_wd(int k, int m, Branch branch, int d);
bool solver_applies(int k, int m, Branch branch);

Form emit_form(const GradedVector& w, const FamilySymbol& family);
// emit_form(solve_wd) rescaled so that Δ^d of it equals emit_form(build_w0).
Form normalized_preimage(const GradedVector& w, const FamilySymbol& family);

Form preimage_constant_weight(int k, int d, const FamilySymbol& family);
Form preimage_incoherent(long disc, int d);

struct CaseParams {
    long poincare_index = -1;
    long disc = 3;
};

Form construct_case(BKCase label, int k, int d, const CaseParams& params = {});

nlohmann::json graded_to_json(const GradedVector& w);
GradedVector graded_from_json(const nlohmann::json& j);

}  // namespace pm
