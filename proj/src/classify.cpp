#include "polymaass/classify.hpp"

namespace pm {

WeightContext WeightContext::of(int k) {
    const int l = k < 1 ? 1 - k : k - 1;
    return {k, l, k * k - 2 * k};
}

int exact_depth(const Form& f, int d_max) {
    Form g = expand_pending(f);
    for (int d = 0; d <= d_max; ++d) {
        g = apply_laplace(g);
        if (is_zero(g)) return d;
    }
    throw DomainError("form is not polyharmonic within depth bound " + std::to_string(d_max));
}

CaseLabel classify_bk(const Form& f, int d_max) {
    const int k = f.weight();
    const int d = exact_depth(f, d_max);
    const Form top = apply_laplace(expand_pending(f), d);
    const bool low = is_zero(apply_lowering(top));

    BKCase bk;
    if (k < 1) {
        const bool high = is_zero(apply_raising(top, 1 - k));
        bk = low ? (high ? BKCase::Ia : BKCase::Ib) : (high ? BKCase::Ic : BKCase::Id);
    } else if (k == 1) {
        bk = low ? BKCase::IIa : BKCase::IIb;
    } else if (d >= 1 && is_zero(apply_lowering(apply_laplace(expand_pending(f), d - 1), k))) {
        bk = BKCase::IIId;
    } else if (low) {
        bk = BKCase::IIIa;
    } else if (is_zero(apply_lowering(top, k))) {
        bk = BKCase::IIIb;
    } else {
        bk = BKCase::IIIc;
    }
    return {bk, to_repr(bk), d, WeightContext::of(k)};
}

std::vector<int> expected_dimension_vector(ReprCase repr, int d) {
    switch (repr) {
    case ReprCase::GIa: return {d, d + 1, d};
    case ReprCase::GIb: return {d + 1, d + 1, d + 1};
    case ReprCase::GIc: return {d, d + 1, d + 1};
    case ReprCase::GId: return {d + 1, d + 1, d};
    case ReprCase::GIIa: return {d, d, d + 1};
    case ReprCase::GIIb: return {d, d + 1, d + 1};
    case ReprCase::GIIc: return {d + 1, d + 1, d + 1};
    case ReprCase::GIId:
        if (d < 1) throw DomainError("GIId exists only for depth d >= 1");
        return {d - 1, d, d + 1};
    case ReprCase::CIa: return {d, d + 1};
    case ReprCase::CIb: return {d + 1, d + 1};
    }
    throw DomainError("unknown representation label");
}

nlohmann::json label_to_json(const CaseLabel& c) {
    return {{"bk", to_string(c.bk)},  {"repr", to_string(c.repr)}, {"depth", c.depth},
            {"k", c.context.k},       {"l", c.context.l},          {"gamma", c.context.gamma}};
}

}  // namespace pm
