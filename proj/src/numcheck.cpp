#include "polymaass/numcheck.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pm::num {

namespace {

constexpr cplx kI{0.0, 1.0};

struct Coset {
    int c, d;
};

// Representatives of Γ_∞\SL_2(Z) modulo ±1: the identity, then c > 0 with gcd(c, d) = 1.
const std::vector<Coset>& cosets(int N) {
    static std::mutex mu;
    static std::unordered_map<int, std::vector<Coset>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<Coset> out{{0, 1}};
    for (int c = 1; c <= N; ++c)
        for (int ad = 0; ad <= N; ++ad) {
            if (std::gcd(c, ad) != 1) continue;
            out.push_back({c, ad});
            if (ad != 0) out.push_back({c, -ad});
        }
    return cache.emplace(N, std::move(out)).first->second;
}

cplx int_power(cplx z, int e) {
    if (e < 0) {
        z = 1.0 / z;
        e = -e;
    }
    cplx out = 1.0;
    while (e > 0) {
        if (e & 1) out *= z;
        z *= z;
        e >>= 1;
    }
    return out;
}

void require_region(int k, cplx s) {
    if (!(k + 2.0 * s.real() > 2.0))
        throw std::domain_error("spectral point outside the region of absolute convergence (Re s > 1 - k/2)");
}

long mod(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m) {
    long g = m, x = 0, x1 = 1, b = mod(a, m);
    while (b != 0) {
        const long q = g / b;
        std::tie(g, b) = std::make_pair(b, g - q * b);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::domain_error("not invertible modulo D");
    return mod(x, m);
}

cplx twist(long disc, int c, int d) {
    if (c == 0) return 1.0;
    if (std::gcd(static_cast<long>(c), disc) == 1)
        return -kI * std::sqrt(static_cast<double>(disc)) * static_cast<double>(kronecker(-disc, c));
    return static_cast<double>(kronecker(-disc, inverse_mod(d, disc)));
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string describe(const SamplePoint& p, bool twisted) {
    std::ostringstream os;
    if (twisted) os << "D=" << p.disc << " ";
    os << "k=" << p.k << " s=" << fmt(p.s) << " tau=" << fmt(p.tau);
    return os.str();
}

double relative(cplx lhs, cplx rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / scale;
}

// First and second partials of fn at (x, y) by central differences.
struct Partials {
    cplx fx, fy, fxx, fyy, f;
};

Partials central(const Function& fn, double x, double y, double h) {
    const cplx f0 = fn(x, y);
    const cplx xp = fn(x + h, y), xm = fn(x - h, y), yp = fn(x, y + h), ym = fn(x, y - h);
    return {(xp - xm) / (2 * h), (yp - ym) / (2 * h), (xp - 2.0 * f0 + xm) / (h * h), (yp - 2.0 * f0 + ym) / (h * h), f0};
}

Partials partials(const Function& fn, cplx tau, const EvalConfig& cfg) {
    if (!(cfg.h > 1e-8)) throw std::domain_error("finite-difference step underflow");
    const double x = tau.real(), y = tau.imag();
    if (y - cfg.h <= 0) throw std::domain_error("stencil leaves the upper half-plane");
    const Partials coarse = central(fn, x, y, cfg.h);
    if (!cfg.richardson) return coarse;
    const Partials fine = central(fn, x, y, cfg.h / 2);
    auto extrapolate = [](cplx c, cplx f) { return (4.0 * f - c) / 3.0; };
    return {extrapolate(coarse.fx, fine.fx), extrapolate(coarse.fy, fine.fy), extrapolate(coarse.fxx, fine.fxx),
            extrapolate(coarse.fyy, fine.fyy), coarse.f};
}

cplx assemble(Op op, int k, const Partials& p, double y) {
    switch (op) {
    case Op::L: return -kI * y * y * (p.fx + kI * p.fy);
    case Op::R: return kI * (p.fx - kI * p.fy) + static_cast<double>(k) * p.f / y;
    case Op::Laplace: return -y * y * (p.fxx + p.fyy) + kI * static_cast<double>(k) * y * (p.fx + kI * p.fy);
    }
    return 0.0;
}

struct PointResiduals {
    double laplace, lowering, raising, mirror;
};

PointResiduals eisenstein_residuals(const SamplePoint& pt, const EvalConfig& cfg) {
    require_region(pt.k, pt.s);
    const Function fn = [&](double x, double y) { return eval_eisenstein(pt.k, pt.s, cplx(x, y), cfg); };
    const Partials p = partials(fn, pt.tau, cfg);
    const double y = pt.tau.imag();
    const cplx s = pt.s;
    const cplx lap = assemble(Op::Laplace, pt.k, p, y);
    const cplx low = assemble(Op::L, pt.k, p, y);
    const cplx up = assemble(Op::R, pt.k, p, y);
    const cplx mirrored = std::pow(y, pt.k) * std::conj(p.f);
    return {relative(lap, s * (1.0 - static_cast<double>(pt.k) - s) * p.f),
            relative(low, s * eval_eisenstein(pt.k - 2, s + 1.0, pt.tau, cfg)),
            relative(up, (s + static_cast<double>(pt.k)) * eval_eisenstein(pt.k + 2, s - 1.0, pt.tau, cfg)),
            relative(mirrored, eval_eisenstein(-pt.k, std::conj(s) + static_cast<double>(pt.k), pt.tau, cfg))};
}

}  // namespace

int kronecker(long a, long n) {
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) {
        ++v;
        n /= 2;
    }
    int k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    for (;;) {
        if (a == 0) return n > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) k *= tab2[n & 7];
        if (a & n & 2) k = -k;
        const long r = a < 0 ? -a : a;
        a = n % r;
        n = r;
    }
}

cplx eval_eisenstein(int k, cplx s, cplx tau, const EvalConfig& cfg) {
    require_region(k, s);
    if (cfg.N < 1) throw std::domain_error("truncation N must be at least 1");
    const double x = tau.real(), y = tau.imag();
    const double logy = std::log(y);
    cplx sum = 0.0;
    for (const Coset& g : cosets(cfg.N)) {
        const cplx z(g.c * x + g.d, g.c * y);
        const double norm = std::norm(z);
        sum += int_power(z, -k) * std::exp(s * (logy - std::log(norm)));
    }
    return sum;
}

cplx eval_character_eisenstein(long disc, cplx s, cplx tau, const EvalConfig& cfg, int k) {
    if (disc < 3 || mod(disc, 4) != 3) throw std::domain_error("D must be a prime with D = 3 mod 4");
    if (k % 2 == 0) throw std::domain_error("twisted series needs odd weight");
    if (!(s.real() > 1.0) && k == 1) throw std::domain_error("twisted series is evaluated only for Re s > 1");
    require_region(k, s);
    const double x = tau.real(), y = tau.imag();
    const double logy = std::log(y);
    cplx sum = 0.0;
    for (const Coset& g : cosets(cfg.N)) {
        const cplx z(g.c * x + g.d, g.c * y);
        sum += twist(disc, g.c, g.d) * int_power(z, -k) * std::exp(s * (logy - std::log(std::norm(z))));
    }
    return sum;
}

double truncation_estimate(int k, cplx s, cplx tau, int N) {
    const double beta = k + 2 * s.real();
    if (!(beta > 2)) throw std::domain_error("no tail bound outside the convergence region");
    const double x = tau.real(), y = tau.imag();
    // |cτ + d|^2 >= α (c^2 + d^2) with α the small eigenvalue of [[x²+y², x], [x, 1]].
    const double tr = x * x + y * y + 1, det = y * y;
    const double alpha = (tr - std::sqrt(tr * tr - 4 * det)) / 2;
    const double radius = std::max(1.0, N - 1.0);
    return std::pow(y, s.real()) * std::pow(alpha, -beta / 2) * M_PI * std::pow(radius, 2 - beta) / (beta - 2);
}

cplx lattice_eisenstein4(cplx tau, int N) {
    cplx sum = 0.0;
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            sum += int_power(static_cast<double>(m) * tau + static_cast<double>(n), -4);
        }
    const double zeta4 = std::pow(M_PI, 4) / 90.0;
    return sum / (2 * zeta4);
}

cplx fd_operator(Op op, int k, const Function& fn, cplx tau, const EvalConfig& cfg) {
    return assemble(op, k, partials(fn, tau, cfg), tau.imag());
}

WirtingerPoly WirtingerPoly::monomial(cplx c, int p, int q, int n) {
    WirtingerPoly w;
    if (c != 0.0) w.terms_[{p, q, n}] = c;
    return w;
}

WirtingerPoly WirtingerPoly::e_basis(int m, int r, cplx X) {
    if (r < 0 || r > m) throw std::domain_error("e-basis index out of range");
    const WirtingerPoly a = monomial(X, 0, 0, 0) + monomial(-1.0, 1, 0, 0);
    const WirtingerPoly b = monomial(X, 0, 0, 0) + monomial(-1.0, 0, 1, 0);
    double fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    WirtingerPoly out = monomial(((m - r) % 2 == 0 ? 1.0 : -1.0) / fact, 0, 0, r - m);
    for (int i = 0; i < r; ++i) out = out * a;
    for (int i = 0; i < m - r; ++i) out = out * b;
    return out;
}

WirtingerPoly WirtingerPoly::operator+(const WirtingerPoly& o) const {
    WirtingerPoly out = *this;
    for (const auto& [key, c] : o.terms_) out.terms_[key] += c;
    return out;
}

WirtingerPoly WirtingerPoly::operator*(const WirtingerPoly& o) const {
    WirtingerPoly out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            const Key key{std::get<0>(k1) + std::get<0>(k2), std::get<1>(k1) + std::get<1>(k2),
                          std::get<2>(k1) + std::get<2>(k2)};
            out.terms_[key] += c1 * c2;
        }
    return out;
}

WirtingerPoly WirtingerPoly::scaled(cplx c) const {
    WirtingerPoly out;
    for (const auto& [key, v] : terms_) out.terms_[key] = v * c;
    return out;
}

// ∂_τ y = 1/(2i), ∂_τ̄ y = -1/(2i).
WirtingerPoly WirtingerPoly::d_tau() const {
    WirtingerPoly out;
    for (const auto& [key, c] : terms_) {
        const auto [p, q, n] = key;
        if (p != 0) out.terms_[{p - 1, q, n}] += c * static_cast<double>(p);
        if (n != 0) out.terms_[{p, q, n - 1}] += c * static_cast<double>(n) / (2.0 * kI);
    }
    return out;
}

WirtingerPoly WirtingerPoly::d_tau_bar() const {
    WirtingerPoly out;
    for (const auto& [key, c] : terms_) {
        const auto [p, q, n] = key;
        if (q != 0) out.terms_[{p, q - 1, n}] += c * static_cast<double>(q);
        if (n != 0) out.terms_[{p, q, n - 1}] -= c * static_cast<double>(n) / (2.0 * kI);
    }
    return out;
}

WirtingerPoly WirtingerPoly::conj() const {
    WirtingerPoly out;
    for (const auto& [key, c] : terms_) {
        const auto [p, q, n] = key;
        out.terms_[{q, p, n}] += std::conj(c);
    }
    return out;
}

WirtingerPoly WirtingerPoly::lower(int) const { return (monomial(-2.0 * kI, 0, 0, 2) * d_tau_bar()); }

WirtingerPoly WirtingerPoly::raise(int k) const {
    return d_tau().scaled(2.0 * kI) + (monomial(static_cast<double>(k), 0, 0, -1) * *this);
}

WirtingerPoly WirtingerPoly::laplace(int k) const { return lower(k).raise(k - 2).scaled(-1.0); }

cplx WirtingerPoly::operator()(cplx tau) const {
    const double y = tau.imag();
    cplx sum = 0.0;
    for (const auto& [key, c] : terms_) {
        const auto [p, q, n] = key;
        sum += c * int_power(tau, p) * int_power(std::conj(tau), q) * std::pow(y, n);
    }
    return sum;
}

Report verify_identity(Identity id, const std::vector<SamplePoint>& points, const EvalConfig& cfg) {
    Report out;
    for (const SamplePoint& pt : points) {
        ReportEntry e;
        e.tolerance = cfg.tolerance;
        switch (id) {
        case Identity::LaplaceEigen:
        case Identity::Lowering:
        case Identity::Raising:
        case Identity::Mirror: {
            const PointResiduals r = eisenstein_residuals(pt, cfg);
            const char* names[] = {"laplace_eigen", "lowering_shift", "raising_shift", "mirror"};
            const double values[] = {r.laplace, r.lowering, r.raising, r.mirror};
            const int idx = static_cast<int>(id);
            e.identity = names[idx];
            e.residual = values[idx];
            e.point = describe(pt, false);
            break;
        }
        case Identity::TwistedLowering:
        case Identity::TwistedRaising: {
            const Function fn = [&](double x, double y) {
                return eval_character_eisenstein(pt.disc, pt.s, cplx(x, y), cfg, pt.k);
            };
            const Partials p = partials(fn, pt.tau, cfg);
            const double y = pt.tau.imag();
            if (id == Identity::TwistedLowering) {
                e.identity = "twisted_lowering_shift";
                e.residual = relative(assemble(Op::L, pt.k, p, y),
                                      pt.s * eval_character_eisenstein(pt.disc, pt.s + 1.0, pt.tau, cfg, pt.k - 2));
            } else {
                e.identity = "twisted_raising_shift";
                e.residual =
                    relative(assemble(Op::R, pt.k, p, y),
                             (pt.s + static_cast<double>(pt.k)) *
                                 eval_character_eisenstein(pt.disc, pt.s - 1.0, pt.tau, cfg, pt.k + 2));
            }
            e.point = describe(pt, true);
            break;
        }
        case Identity::EBasis: throw std::invalid_argument("use verify_ebasis for the e-basis identities");
        }
        e.pass = e.residual < e.tolerance;
        out.push_back(std::move(e));
    }
    return out;
}

Report verify_ebasis(const std::vector<EBasisPoint>& points, double tolerance) {
    Report out;
    for (const EBasisPoint& pt : points) {
        const int m = pt.m, r = pt.r, w = m - 2 * r;
        if (pt.X.imag() != 0.0) throw std::domain_error("the conjugation identity needs a real X");
        auto e = [&](int idx) { return WirtingerPoly::e_basis(m, idx, pt.X); };
        const WirtingerPoly self = e(r);
        const WirtingerPoly zero;
        double fact_mr = 1, fact_r = 1;
        for (int i = 2; i <= m - r; ++i) fact_mr *= i;
        for (int i = 2; i <= r; ++i) fact_r *= i;

        struct Check {
            const char* name;
            WirtingerPoly lhs, rhs;
        };
        const Check checks[] = {
            {"ebasis_lowering", self.lower(w), r < m ? e(r + 1).scaled(double((r + 1) * (m - r))) : zero},
            {"ebasis_raising", self.raise(w), r > 0 ? e(r - 1) : zero},
            {"ebasis_laplace", self.laplace(w), self.scaled(-double((r + 1) * (m - r)))},
            {"ebasis_conjugation", WirtingerPoly::monomial(1.0, 0, 0, w) * self.conj(),
             e(m - r).scaled((m % 2 == 0 ? 1.0 : -1.0) * fact_mr / fact_r)},
        };
        std::ostringstream os;
        os << "m=" << m << " r=" << r << " tau=" << fmt(pt.tau) << " X=" << fmt(pt.X);
        for (const Check& c : checks) {
            const cplx a = c.lhs(pt.tau), b = c.rhs(pt.tau);
            const double res = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
            out.push_back({c.name, os.str(), res, tolerance, res < tolerance});
        }
    }
    return out;
}

std::vector<SamplePoint> default_grid() {
    return {
        {0, {2.5, 0.0}, {0.1, 0.8}},    {0, {3.0, 0.5}, {0.05, 1.05}},   {0, {2.75, -1.0}, {-0.3, 1.2}},
        {2, {1.5, 0.0}, {0.2, 0.9}},    {2, {2.0, 1.0}, {0.45, 1.1}},  {4, {1.0, 0.0}, {0.15, 1.0}},
        {4, {0.75, 0.3}, {0.25, 0.95}}, {4, {1.25, -0.5}, {-0.4, 1.3}}, {6, {0.3, 0.0}, {0.1, 1.0}},
        {6, {0.5, 0.7}, {0.3, 0.85}},   {-2, {3.5, 0.0}, {0.0, 1.1}},  {-2, {3.75, 0.4}, {0.2, 1.25}},
    };
}

std::vector<SamplePoint> twisted_grid() {
    return {
        {1, {2.0, 0.0}, {0.1, 1.0}, 3},  {1, {2.5, 0.3}, {-0.2, 0.9}, 3},
        {1, {2.25, 0.0}, {0.3, 1.1}, 7}, {1, {3.0, -0.4}, {0.0, 1.2}, 11},
    };
}

std::vector<EBasisPoint> default_ebasis_grid() {
    std::vector<EBasisPoint> out;
    for (int m = 0; m <= 6; ++m)
        for (int r = 0; r <= m; ++r) out.push_back({m, r, {1.0 / 3.0, 1.0}, {2.0, 0.0}});
    out.push_back({3, 1, {-0.7, 0.6}, {-1.5, 0.0}});
    return out;
}

Report run_suite(const std::string& suite, const EvalConfig& cfg) {
    Report out;
    auto append = [&](Report r) { out.insert(out.end(), r.begin(), r.end()); };
    const bool all = suite == "all";
    if (!all && suite != "eisenstein" && suite != "ebasis" && suite != "character")
        throw std::invalid_argument("unknown suite '" + suite + "'");
    if (all || suite == "eisenstein") {
        for (const SamplePoint& pt : default_grid()) {
            const PointResiduals r = eisenstein_residuals(pt, cfg);
            const std::string where = describe(pt, false);
            out.push_back({"laplace_eigen", where, r.laplace, cfg.tolerance, r.laplace < cfg.tolerance});
            out.push_back({"lowering_shift", where, r.lowering, cfg.tolerance, r.lowering < cfg.tolerance});
            out.push_back({"raising_shift", where, r.raising, cfg.tolerance, r.raising < cfg.tolerance});
            out.push_back({"mirror", where, r.mirror, cfg.tolerance, r.mirror < cfg.tolerance});
        }
    }
    if (all || suite == "ebasis") append(verify_ebasis(default_ebasis_grid()));
    if (all || suite == "character") {
        append(verify_identity(Identity::TwistedLowering, twisted_grid(), cfg));
        append(verify_identity(Identity::TwistedRaising, twisted_grid(), cfg));
    }
    return out;
}

bool all_pass(const Report& r) {
    for (const auto& e : r)
        if (!e.pass) return false;
    return true;
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : r)
        out.push_back({{"identity", e.identity},
                       {"point", e.point},
                       {"residual", e.residual},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass}});
    return out;
}

}  // namespace pm::num
