#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "polymaass/labels.hpp"
#include "polymaass/symcalc.hpp"

namespace pm {

struct WeightContext {
    int k = 0;
    int l = 0;
    int gamma = 0;

    static WeightContext of(int k);
};

struct CaseLabel {
    BKCase bk = BKCase::Ia;
    ReprCase repr = ReprCase::GIa;
    int depth = 0;
    WeightContext context;
};

inline constexpr int kDefaultDepthBound = 16;

int exact_depth(const Form& f, int d_max = kDefaultDepthBound);
CaseLabel classify_bk(const Form& f, int d_max = kDefaultDepthBound);

// (V_-, V_*, V_+) for Gelfand labels, (V_-, V_+) for CIa and CIb.
std::vector<int> expected_dimension_vector(ReprCase repr, int d);
inline std::vector<int> expected_dimension_vector(const CaseLabel& c) {
    return expected_dimension_vector(c.repr, c.depth);
}

nlohmann::json label_to_json(const CaseLabel& c);

}  // namespace pm
