#include "polymaass/specsolve.hpp"

namespace pm {

WModel build_model(int k, int m, Branch branch) {
    if (m < 0) throw DomainError("m must be non-negative");
    const Eigen::Index n = m + 1;
    WModel w{k, m, branch, RMatrix::Zero(n, n), RMatrix::Zero(n, n), RMatrix::Zero(n, n)};
    // Column r holds the image of v_r.
    for (int r = 0; r <= m; ++r) {
        if (branch == Branch::L) {
            w.A(r, r) = Rational((m - r) * (m - 2 * r - k));
            if (r > 0) w.A(r - 1, r) = Rational(-1);
            if (r < m) w.A(r + 1, r) = Rational((r + 1) * (m - r) * (m - r - 1) * (m - r - k));
            w.B(r, r) = Rational(1 - k);
            if (r < m) w.B(r + 1, r) = Rational((r + 1) * (m - r) * (1 - k));
            w.C(r, r) = Rational(-1);
            if (r < m) w.C(r + 1, r) = Rational(-(r + 1) * (m - r));
        } else {
            w.A(r, r) = Rational(-(r * (m - 2 * r - k) + m));
            if (r > 0) w.A(r - 1, r) = Rational(r * (r - 1 + k));
            if (r < m) w.A(r + 1, r) = Rational(-(r + 1) * (m - r));
            w.B(r, r) = Rational(1 - k);
            if (r > 0) w.B(r - 1, r) = Rational(1 - k);
            w.C(r, r) = Rational(-1);
            if (r > 0) w.C(r - 1, r) = Rational(-1);
        }
    }
    return w;
}

std::vector<RVector> apply_model(const WModel& w, const std::vector<RVector>& layers) {
    std::vector<RVector> out;
    out.reserve(layers.size());
    for (size_t t = 0; t < layers.size(); ++t) {
        RVector x = w.A * layers[t];
        if (t >= 1) x += w.B * layers[t - 1];
        if (t >= 2) x += w.C * layers[t - 2];
        out.push_back(std::move(x));
    }
    return out;
}

GradedVector build_w0(int k, int m, Branch branch) {
    if (m < 0) throw DomainError("m must be non-negative");
    RVector c = RVector::Zero(m + 1);
    for (int r = 0; r <= m; ++r) {
        if (branch == Branch::L) {
            if (m >= k) {
                if (r <= std::min(m, m - k)) c(r) = Rational(1) / (factorial(m - r) * factorial(m - r - k));
            } else {
                c(r) = Rational(1) / (factorial(m - r) * pochhammer(Rational(1 - k), m - r));
            }
        } else {
            if (m > -k) {
                if (r >= std::max(0, 1 - k)) c(r) = Rational(1) / (factorial(m - r) * factorial(r + k - 1));
            } else {
                c(r) = Rational(1) / (factorial(m - r) * pochhammer(Rational(k), r));
            }
        }
    }
    const WModel w = build_model(k, m, branch);
    if (c.isZero() || !is_zero(RMatrix(w.A * c)))
        throw DomainError("no kernel vector for (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
    return GradedVector{k, m, branch, 0, {c}, {}};
}

bool solver_applies(int k, int m, Branch branch) {
    if (branch == Branch::L) return k <= 0 || k - m > 1;
    return k > 1 || k + m < 1;
}

GradedVector solve_wd(int k, int m, Branch branch, int d) {
    if (d < 0) throw DomainError("depth must be non-negative");
    if (!solver_applies(k, m, branch))
        throw DomainError("solver precondition fails for (k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                          ", " + (branch == Branch::L ? "L" : "R") + ")");
    GradedVector w = build_w0(k, m, branch);
    const WModel model = build_model(k, m, branch);
    const RVector& w0 = w.layers[0];
    if (w0(m).is_zero()) throw DomainError("gauge undefined: w0 has zero top coordinate");

    // Unknowns (v, μ_t): A v - μ_t w0 = rhs, with the gauge row v_m = 0.
    const Eigen::Index n = m + 1;
    RMatrix sys = RMatrix::Zero(n + 1, n + 1);
    sys.topLeftCorner(n, n) = model.A;
    sys.block(0, n, n, 1) = -w0;
    sys(n, m) = Rational(1);

    for (int t = 1; t <= d; ++t) {
        RVector rhs = -(model.B * w.layers[t - 1]);
        if (t >= 2) rhs -= model.C * w.layers[t - 2];
        for (int i = 1; i < t; ++i) rhs += w.eigen[i - 1] * w.layers[t - i];
        RVector full(n + 1);
        full << rhs, Rational(0);
        auto sol = solve(sys, full);
        if (!sol) throw DomainError("membership constraint has no solution");
        w.layers.push_back(sol->head(n));
        w.eigen.push_back((*sol)(n));
        if (t == 1 && w.eigen[0].is_zero()) throw DomainError("zero eigenvalue slope: depth cannot increase");
    }
    w.d = d;
    return w;
}

Form emit_form(const GradedVector& w, const FamilySymbol& family) {
    if (family.weight != w.k) throw DomainError("family weight does not match the model weight");
    const int weight = w.branch == Branch::L ? w.k - w.m : w.k + w.m;
    Form out(weight);
    for (int t = 0; t <= w.d; ++t) {
        for (int r = 0; r <= w.m; ++r) {
            const Rational& q = w.layers[t](r);
            if (q.is_zero()) continue;
            const int power = w.branch == Branch::L ? w.m - r : r;
            const PendingOp op{w.branch == Branch::L ? Dir::L : Dir::R, power};
            out += tensor(make_e_atom(w.m, r), spectral_form(family, w.d - t, op, Scalar(q)));
        }
    }
    return normalize(out);
}

Form normalized_preimage(const GradedVector& w, const FamilySymbol& family) {
    const Form f = emit_form(w, family);
    if (w.d == 0) return f;
    return Scalar(Rational(1) / pow(w.eigen[0], w.d)) * f;
}

Form preimage_constant_weight(int k, int d, const FamilySymbol& family) {
    if (family.weight != k) throw DomainError("family weight does not match k");
    if (d < 0) throw DomainError("depth must be non-negative");
    if (k == 1) return spectral_form(family, 2 * d, std::nullopt, Scalar(d % 2 == 0 ? 1 : -1));
    return spectral_form(family, d, std::nullopt, Scalar(Rational(1) / pow(Rational(1 - k), d)));
}

Form preimage_incoherent(long disc, int d) {
    if (d < 0) throw DomainError("depth must be non-negative");
    return spectral_form(FamilySymbol::incoherent(disc), 2 * d + 1, std::nullopt, Scalar(d % 2 == 0 ? 1 : -1));
}

namespace {

Form l_construction(const FamilySymbol& fs, int m, int d) { return emit_form(solve_wd(fs.weight, m, Branch::L, d), fs); }

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

}  // namespace

Form construct_case(BKCase label, int k, int d, const CaseParams& params) {
    require(d >= 0, "depth must be non-negative");
    const std::string name = to_string(label);
    switch (label) {
    case BKCase::Ia:
    case BKCase::Ib:
    case BKCase::Ic:
    case BKCase::Id:
        require(k < 1, "case " + name + " requires weight k < 1");
        break;
    case BKCase::IIa:
    case BKCase::IIb:
        require(k == 1, "case " + name + " requires weight k = 1");
        break;
    default:
        require(k > 1, "case " + name + " requires weight k > 1");
    }
    require(params.poincare_index < 0, "Poincaré index must be negative");

    switch (label) {
    case BKCase::Ia:
        return l_construction(FamilySymbol::eisenstein(0), -k, d);
    case BKCase::Ib:
        return l_construction(FamilySymbol::poincare_reflected(0, params.poincare_index), -k, d);
    case BKCase::Ic:
        return apply_flip(construct_case(BKCase::Ib, k, d, params));
    case BKCase::Id:
        if (k < 0) return preimage_constant_weight(k, d, FamilySymbol::eisenstein_reflected(k));
        return emit_form(solve_wd(-2, 2, Branch::R, d), FamilySymbol::eisenstein_reflected(-2));
    case BKCase::IIa:
        return preimage_constant_weight(1, d, FamilySymbol::poincare(1, params.poincare_index));
    case BKCase::IIb:
        return preimage_incoherent(params.disc, d);
    case BKCase::IIIa:
        return apply_raising(construct_case(BKCase::Id, 2 - k, d, params), k - 1);
    case BKCase::IIIb:
        return emit_form(solve_wd(2, k - 2, Branch::R, d), FamilySymbol::eisenstein(2));
    case BKCase::IIIc:
        return apply_raising(construct_case(BKCase::Ic, 2 - k, d + 1, params), k - 1);
    case BKCase::IIId:
        require(d >= 1, "case IIId requires depth d >= 1");
        return apply_raising(construct_case(BKCase::Ib, 2 - k, d, params), k - 1);
    }
    throw DomainError("unknown case");
}

nlohmann::json graded_to_json(const GradedVector& w) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& v : w.layers) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i).str());
        layers.push_back(row);
    }
    nlohmann::json eigen = nlohmann::json::array();
    for (const auto& e : w.eigen) eigen.push_back(e.str());
    return {{"k", w.k}, {"m", w.m}, {"branch", w.branch == Branch::L ? "L" : "R"}, {"d", w.d},
            {"layers", layers}, {"eigen", eigen}};
}

GradedVector graded_from_json(const nlohmann::json& j) {
    GradedVector w;
    w.k = j.at("k").get<int>();
    w.m = j.at("m").get<int>();
    w.branch = j.at("branch").get<std::string>() == "L" ? Branch::L : Branch::R;
    w.d = j.at("d").get<int>();
    for (const auto& row : j.at("layers")) {
        RVector v(static_cast<Eigen::Index>(row.size()));
        for (size_t i = 0; i < row.size(); ++i) v(static_cast<Eigen::Index>(i)) = Rational::parse(row[i].get<std::string>());
        w.layers.push_back(v);
    }
    if (j.contains("eigen"))
        for (const auto& e : j.at("eigen")) w.eigen.push_back(Rational::parse(e.get<std::string>()));
    if (static_cast<int>(w.layers.size()) != w.d + 1) throw DomainError("layer count must equal d + 1");
    return w;
}

}  // namespace pm
