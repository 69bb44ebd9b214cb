#include "polymaass/quiverrep.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "polymaass/symcalc.hpp"

namespace pm {

namespace {

// Nodes are indexed 0 = -, 1 = *, 2 = +.
constexpr int kMinus = 0, kStar = 1, kPlus = 2;

struct Arrow {
    int src, dst;
    const RMatrix* map;
};

std::vector<Arrow> arrows(const QuiverRep& r) {
    if (r.quiver == QuiverKind::Cyclic) return {{kMinus, kPlus, &r.A_plus}, {kPlus, kMinus, &r.A_minus}};
    return {{kMinus, kStar, &r.A_minus}, {kStar, kMinus, &r.B_minus}, {kPlus, kStar, &r.A_plus}, {kStar, kPlus, &r.B_plus}};
}

std::array<int, 3> node_dims(const QuiverRep& r) { return {r.n_minus, r.n_star, r.n_plus}; }

void check_shapes(const QuiverRep& r) {
    const auto n = node_dims(r);
    for (const Arrow& a : arrows(r))
        if (a.map->rows() != n[a.dst] || a.map->cols() != n[a.src])
            throw DomainError("arrow matrix has the wrong shape for the dimension vector");
}

// Truncated monomial lattice t^p .. t^{q-1} at each node.
struct Window {
    int p, q;
    int dim() const { return q - p; }
};

RMatrix multiply_by_t(const Window& src, const Window& dst, int power) {
    RMatrix m = RMatrix::Zero(dst.dim(), src.dim());
    for (int j = src.p; j < src.q; ++j) {
        const int target = j + power;
        if (target >= dst.q) continue;
        if (target < dst.p) throw std::logic_error("lattice map leaves the target lattice");
        m(target - dst.p, j - src.p) = Rational(1);
    }
    return m;
}

// Exponents listed as (*, +, -); P_* = D^3, P_+ = (m, D, m), P_- = (m, m, D), Q = (m, D, D).
using Lattice = std::array<int, 3>;
constexpr Lattice kPStar{0, 0, 0}, kPPlus{1, 0, 1}, kPMinus{1, 1, 0}, kQ{1, 0, 0};

QuiverRep gelfand_cokernel(const Lattice& source, int shift, const Lattice& target) {
    const Window star{target[0], source[0] + shift}, plus{target[1], source[1] + shift},
        minus{target[2], source[2] + shift};
    if (star.dim() < 0 || plus.dim() < 0 || minus.dim() < 0) throw std::logic_error("negative cokernel dimension");
    QuiverRep r = QuiverRep::zero(QuiverKind::Gelfand, minus.dim(), star.dim(), plus.dim());
    r.B_minus = multiply_by_t(star, minus, 0);
    r.B_plus = multiply_by_t(star, plus, 0);
    r.A_minus = multiply_by_t(minus, star, 1);
    r.A_plus = multiply_by_t(plus, star, 1);
    return r;
}

// Exponents listed as (+, -); P_+ = (D, D), P_- = (m, D).
QuiverRep cyclic_cokernel(const std::array<int, 2>& source, int shift, const std::array<int, 2>& target) {
    const Window plus{target[0], source[0] + shift}, minus{target[1], source[1] + shift};
    QuiverRep r = QuiverRep::zero(QuiverKind::Cyclic, minus.dim(), 0, plus.dim());
    r.A_minus = multiply_by_t(plus, minus, 0);
    r.A_plus = multiply_by_t(minus, plus, 1);
    return r;
}

QuiverRep swap_sides(QuiverRep r) {
    std::swap(r.n_minus, r.n_plus);
    std::swap(r.A_minus, r.A_plus);
    std::swap(r.B_minus, r.B_plus);
    return r;
}

bool in_span(const std::vector<RVector>& basis, const RVector& v, Eigen::Index n) {
    if (basis.empty()) return is_zero(RMatrix(v));
    RMatrix m(n, static_cast<Eigen::Index>(basis.size()) + 1);
    for (size_t i = 0; i < basis.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = basis[i];
    m.col(m.cols() - 1) = v;
    return rank(m) == static_cast<Eigen::Index>(basis.size());
}

bool generates(const QuiverRep& rep, int node, const RVector& v) {
    const auto n = node_dims(rep);
    std::array<std::vector<RVector>, 3> span;
    std::vector<std::pair<int, RVector>> queue;
    if (in_span(span[node], v, n[node])) return rep.total_dim() == 0;
    span[node].push_back(v);
    queue.emplace_back(node, v);
    const auto arr = arrows(rep);
    for (size_t head = 0; head < queue.size(); ++head) {
        const auto [at, x] = queue[head];
        for (const Arrow& a : arr) {
            if (a.src != at) continue;
            RVector y = *a.map * x;
            if (in_span(span[a.dst], y, n[a.dst])) continue;
            span[a.dst].push_back(y);
            queue.emplace_back(a.dst, std::move(y));
        }
    }
    return static_cast<int>(span[0].size() + span[1].size() + span[2].size()) == rep.total_dim();
}

RMatrix random_unimodular(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-2, 2);
    RMatrix lower = RMatrix::Identity(n, n), upper = RMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower(i, j) = Rational(dist(rng));
            upper(j, i) = Rational(dist(rng));
        }
    return lower * upper;
}

RMatrix product_chain(const std::vector<RMatrix>& maps, int first, int last, int dim) {
    RMatrix out = RMatrix::Identity(dim, dim);
    for (int i = first; i <= last; ++i) out = maps[i] * out;
    return out;
}

RMatrix x_star(const HCFragment& f) { return product_chain(f.X, 1, f.l - 1, f.dims[1]); }

RMatrix y_star(const HCFragment& f) {
    RMatrix out = RMatrix::Identity(f.dims[f.l], f.dims[f.l]);
    for (int i = f.l - 1; i >= 1; --i) out = f.Y[i] * out;
    return out;
}

RMatrix invert_interior(const RMatrix& m, const char* what) {
    auto inv = inverse(m);
    if (!inv) throw DomainError(std::string(what) + " is not invertible");
    return *inv;
}

}  // namespace

QuiverRep QuiverRep::zero(QuiverKind q, int n_minus, int n_star, int n_plus) {
    QuiverRep r;
    r.quiver = q;
    r.n_minus = n_minus;
    r.n_star = q == QuiverKind::Cyclic ? 0 : n_star;
    r.n_plus = n_plus;
    if (q == QuiverKind::Cyclic) {
        r.A_plus = RMatrix::Zero(n_plus, n_minus);
        r.A_minus = RMatrix::Zero(n_minus, n_plus);
    } else {
        r.A_minus = RMatrix::Zero(n_star, n_minus);
        r.B_minus = RMatrix::Zero(n_minus, n_star);
        r.A_plus = RMatrix::Zero(n_star, n_plus);
        r.B_plus = RMatrix::Zero(n_plus, n_star);
    }
    return r;
}

std::vector<RMatrix> loops(const QuiverRep& r) {
    check_shapes(r);
    if (r.quiver == QuiverKind::Cyclic) return {r.A_minus * r.A_plus, r.A_plus * r.A_minus};
    return {r.B_minus * r.A_minus, r.A_minus * r.B_minus, r.B_plus * r.A_plus};
}

bool relation_holds(const QuiverRep& r) {
    check_shapes(r);
    if (r.quiver == QuiverKind::Cyclic) return true;
    return r.A_minus * r.B_minus == r.A_plus * r.B_plus;
}

int nilpotency_degree(const RMatrix& m) {
    const Eigen::Index n = m.rows();
    RMatrix p = RMatrix::Identity(n, n);
    for (int e = 0; e <= n; ++e) {
        if (is_zero(p)) return e;
        p = p * m;
    }
    throw DomainError("loop endomorphism is not nilpotent");
}

QuiverRep build_cyclic_module(QuiverKind quiver, NodeType type, char which, int d) {
    if (d < 0) throw DomainError("depth must be non-negative");
    if (quiver == QuiverKind::Cyclic) {
        if (type == NodeType::Star) throw DomainError("the cyclic quiver has no node *");
        QuiverRep r;
        if (which == 'a') r = cyclic_cokernel({1, 0}, d, {0, 0});
        else if (which == 'b') r = cyclic_cokernel({0, 0}, d + 1, {0, 0});
        else throw DomainError("the cyclic quiver supports cases a and b only");
        return type == NodeType::Plus ? r : swap_sides(std::move(r));
    }
    if (type == NodeType::Star) {
        switch (which) {
        case 'a': return gelfand_cokernel(kQ, d, kPStar);
        case 'b': return gelfand_cokernel(kPStar, d + 1, kPStar);
        case 'c': return gelfand_cokernel(kPMinus, d, kPStar);
        case 'd': return gelfand_cokernel(kPPlus, d, kPStar);
        default: throw DomainError(std::string("unknown case ") + which);
        }
    }
    QuiverRep r;
    switch (which) {
    case 'a': r = gelfand_cokernel(kPStar, d + 1, kPPlus); break;
    case 'b': r = gelfand_cokernel(kQ, d + 1, kPPlus); break;
    case 'c': r = gelfand_cokernel(kPPlus, d + 1, kPPlus); break;
    case 'd':
        if (d < 1) throw DomainError("case d of a one-sided type exists only for d >= 1");
        r = gelfand_cokernel(kPMinus, d, kPPlus);
        break;
    default: throw DomainError(std::string("unknown case ") + which);
    }
    return type == NodeType::Plus ? r : swap_sides(std::move(r));
}

QuiverInvariants invariants_of(const QuiverRep& rep) {
    if (!relation_holds(rep)) throw DomainError("relation A_- B_- = A_+ B_+ is violated");
    QuiverInvariants inv;
    if (rep.quiver == QuiverKind::Cyclic) inv.dims = {rep.n_minus, rep.n_plus};
    else inv.dims = {rep.n_minus, rep.n_star, rep.n_plus};
    for (const RMatrix& c : loops(rep)) inv.degrees.push_back(nilpotency_degree(c));
    return inv;
}

std::optional<NodeType> is_cyclic(const QuiverRep& rep, std::uint64_t seed) {
    check_shapes(rep);
    if (rep.total_dim() == 0) return std::nullopt;
    const auto n = node_dims(rep);
    std::vector<std::pair<NodeType, int>> order;
    if (rep.quiver == QuiverKind::Gelfand) order.emplace_back(NodeType::Star, kStar);
    order.emplace_back(NodeType::Plus, kPlus);
    order.emplace_back(NodeType::Minus, kMinus);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (const auto& [type, node] : order) {
        if (n[node] == 0) continue;
        for (int i = 0; i < n[node]; ++i) {
            RVector e = RVector::Zero(n[node]);
            e(i) = Rational(1);
            if (generates(rep, node, e)) return type;
        }
        for (int trial = 0; trial < kCyclicTrials; ++trial) {
            RVector v(n[node]);
            for (int i = 0; i < n[node]; ++i) v(i) = Rational(dist(rng));
            if (generates(rep, node, v)) return type;
        }
    }
    return std::nullopt;
}

CyclicClass classify_cyclic(const QuiverRep& rep, std::uint64_t seed) {
    const auto type = is_cyclic(rep, seed);
    if (!type) throw DomainError("representation is not cyclic");
    const QuiverInvariants inv = invariants_of(rep);
    // Reduce type - to type + by reading the dimension vector backwards.
    std::vector<int> dims = inv.dims;
    if (*type == NodeType::Minus) std::reverse(dims.begin(), dims.end());

    std::vector<std::pair<char, std::vector<int>>> table;
    int d = 0;
    if (rep.quiver == QuiverKind::Cyclic) {
        d = dims[1] - 1;
        table = {{'a', {d, d + 1}}, {'b', {d + 1, d + 1}}};
    } else if (*type == NodeType::Star) {
        d = dims[1] - 1;
        table = {{'a', {d, d + 1, d}}, {'b', {d + 1, d + 1, d + 1}}, {'c', {d, d + 1, d + 1}}, {'d', {d + 1, d + 1, d}}};
    } else {
        d = dims[2] - 1;
        table = {{'a', {d, d, d + 1}}, {'b', {d, d + 1, d + 1}}, {'c', {d + 1, d + 1, d + 1}}};
        if (d >= 1) table.push_back({'d', {d - 1, d, d + 1}});
    }
    for (const auto& [which, expected] : table)
        if (expected == dims) return {*type, which, d};
    throw DomainError("cyclic representation with a dimension vector outside the classification");
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
    if (a.quiver != b.quiver) throw DomainError("direct sum of representations of different quivers");
    QuiverRep r = QuiverRep::zero(a.quiver, a.n_minus + b.n_minus, a.n_star + b.n_star, a.n_plus + b.n_plus);
    auto block = [](RMatrix& out, const RMatrix& x, const RMatrix& y) {
        out.topLeftCorner(x.rows(), x.cols()) = x;
        out.bottomRightCorner(y.rows(), y.cols()) = y;
    };
    block(r.A_minus, a.A_minus, b.A_minus);
    block(r.A_plus, a.A_plus, b.A_plus);
    if (a.quiver == QuiverKind::Gelfand) {
        block(r.B_minus, a.B_minus, b.B_minus);
        block(r.B_plus, a.B_plus, b.B_plus);
    }
    return r;
}

std::vector<RMatrix> endomorphisms(const QuiverRep& rep) {
    check_shapes(rep);
    const auto n = node_dims(rep);
    std::array<int, 3> offset{0, n[0] * n[0], n[0] * n[0] + n[1] * n[1]};
    const int unknowns = offset[2] + n[2] * n[2];
    auto var = [&](int node, int i, int j) { return offset[node] + i * n[node] + j; };

    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (const Arrow& a : arrows(rep)) {
        const RMatrix& m = *a.map;
        // φ_dst m - m φ_src = 0, entrywise.
        for (int i = 0; i < n[a.dst]; ++i)
            for (int j = 0; j < n[a.src]; ++j) {
                std::vector<std::pair<int, Rational>> row;
                for (int k = 0; k < n[a.dst]; ++k)
                    if (!m(k, j).is_zero()) row.emplace_back(var(a.dst, i, k), m(k, j));
                for (int k = 0; k < n[a.src]; ++k)
                    if (!m(i, k).is_zero()) row.emplace_back(var(a.src, k, j), -m(i, k));
                if (!row.empty()) rows.push_back(std::move(row));
            }
    }
    RMatrix sys = RMatrix::Zero(static_cast<Eigen::Index>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) sys(static_cast<Eigen::Index>(r), c) += v;

    const int total = rep.total_dim();
    std::array<int, 3> start{0, n[0], n[0] + n[1]};
    std::vector<RMatrix> basis;
    for (const RVector& v : kernel(sys)) {
        RMatrix phi = RMatrix::Zero(total, total);
        for (int node = 0; node < 3; ++node)
            for (int i = 0; i < n[node]; ++i)
                for (int j = 0; j < n[node]; ++j) phi(start[node] + i, start[node] + j) = v(var(node, i, j));
        basis.push_back(std::move(phi));
    }
    return basis;
}

bool has_local_endomorphism_ring(const QuiverRep& rep) {
    const int total = rep.total_dim();
    if (total == 0) return false;
    const RMatrix id = RMatrix::Identity(total, total);
    std::vector<RMatrix> radical;
    for (const RMatrix& phi : endomorphisms(rep)) {
        const Rational lambda = phi.trace() / Rational(total);
        radical.push_back(phi - lambda * id);
    }
    // Trace-zero span closed under products contains no idempotent, so it is nil.
    for (const RMatrix& a : radical)
        for (const RMatrix& b : radical)
            if (!(a * b).trace().is_zero()) return false;
    for (const RMatrix& a : radical) {
        RMatrix p = a;
        for (int e = 1; e < total; ++e) p = p * a;
        if (!is_zero(p)) return false;
    }
    return true;
}

void validate(const HCFragment& f) {
    if (f.l < 0) throw DomainError("fragment parameter l must be non-negative");
    const size_t spaces = static_cast<size_t>(f.l) + 2;
    if (f.dims.size() != spaces || f.X.size() != spaces - 1 || f.Y.size() != spaces - 1)
        throw DomainError("fragment needs l + 2 spaces and l + 1 maps in each direction");
    for (size_t i = 0; i + 1 < spaces; ++i) {
        if (f.X[i].rows() != f.dims[i + 1] || f.X[i].cols() != f.dims[i])
            throw DomainError("raising map X has the wrong shape");
        if (f.Y[i].rows() != f.dims[i] || f.Y[i].cols() != f.dims[i + 1])
            throw DomainError("lowering map Y has the wrong shape");
    }
    for (int i = 1; i < f.l; ++i) {
        if (!inverse(f.X[i])) throw DomainError("interior raising map is not invertible");
        if (!inverse(f.Y[i])) throw DomainError("interior lowering map is not invertible");
    }
}

bool casimir_consistent(const HCFragment& f) {
    validate(f);
    for (int i = 1; i <= f.l; ++i) {
        const int p = f.weight_of(static_cast<size_t>(i));
        const RMatrix lhs = f.X[i - 1] * f.Y[i - 1] - f.Y[i] * f.X[i];
        if (lhs != Rational(p) * RMatrix::Identity(f.dims[i], f.dims[i])) return false;
    }
    return true;
}

QuiverRep hc_to_quiver(const HCFragment& f) {
    validate(f);
    if (f.l == 0) {
        QuiverRep r = QuiverRep::zero(QuiverKind::Cyclic, f.dims[0], 0, f.dims[1]);
        r.A_plus = f.X[0];
        r.A_minus = f.Y[0];
        return r;
    }
    const RMatrix xs = x_star(f);
    QuiverRep r = QuiverRep::zero(QuiverKind::Gelfand, f.dims[0], f.dims[1], f.dims[f.l + 1]);
    r.A_minus = f.X[0];
    r.B_minus = f.Y[0];
    r.B_plus = f.X[f.l] * xs;
    r.A_plus = invert_interior(xs, "X_*") * f.Y[f.l];
    if (!relation_holds(r)) throw DomainError("fragment violates X_* X_- Y_- = Y_+ X_+ X_*");
    return r;
}

QuiverRep second_description(const HCFragment& f) {
    validate(f);
    if (f.l == 0) throw DomainError("second description needs l >= 1");
    const RMatrix ys = y_star(f);
    QuiverRep r = QuiverRep::zero(QuiverKind::Gelfand, f.dims[0], f.dims[f.l], f.dims[f.l + 1]);
    r.A_minus = invert_interior(ys, "Y_*") * f.X[0];
    r.B_minus = f.Y[0] * ys;
    r.A_plus = f.Y[f.l];
    r.B_plus = f.X[f.l];
    if (!relation_holds(r)) throw DomainError("fragment violates the relation in the second description");
    return r;
}

IsoWitness iso_two_descriptions(const HCFragment& f) {
    const QuiverRep first = hc_to_quiver(f);
    const QuiverRep second = second_description(f);
    const int n1 = f.dims[1], n0 = f.dims[0];
    const RMatrix nil1 = Rational(4) * f.X[0] * f.Y[0];
    const RMatrix nil0 = Rational(4) * f.Y[0] * f.X[0];
    const RMatrix target = y_star(f) * x_star(f);

    // Y_* X_* = Σ a_j (C_1 - γ)^j with C_1 - γ = 4 X_- Y_-, solved for the a_j.
    const int terms = n1 + 1;
    RMatrix sys(static_cast<Eigen::Index>(n1) * n1, terms);
    RVector rhs(static_cast<Eigen::Index>(n1) * n1);
    RMatrix power = RMatrix::Identity(n1, n1);
    for (int j = 0; j < terms; ++j) {
        for (int r = 0; r < n1; ++r)
            for (int c = 0; c < n1; ++c) sys(r * n1 + c, j) = power(r, c);
        power = power * nil1;
    }
    for (int r = 0; r < n1; ++r)
        for (int c = 0; c < n1; ++c) rhs(r * n1 + c) = target(r, c);
    const auto coeffs = solve(sys, rhs);
    if (!coeffs) throw DomainError("p-recovery system is singular: fragment is not Casimir-consistent");

    RMatrix t = RMatrix::Zero(n0, n0);
    RMatrix p0 = RMatrix::Identity(n0, n0);
    for (int j = 0; j < terms; ++j) {
        t += (*coeffs)(j) * p0;
        p0 = p0 * nil0;
    }
    if (!inverse(t)) throw DomainError("T = p(C_0) is not invertible");

    IsoWitness w{t, x_star(f), RMatrix::Identity(f.dims[f.l + 1], f.dims[f.l + 1])};
    const bool ok = second.A_minus * w.T == w.X_star * first.A_minus && w.T * first.B_minus == second.B_minus * w.X_star &&
                    second.A_plus * w.identity == w.X_star * first.A_plus &&
                    w.identity * first.B_plus == second.B_plus * w.X_star;
    if (!ok) throw DomainError("isomorphism square does not commute");
    return w;
}

HCFragment random_fragment(int l, int n, std::uint64_t seed) {
    if (l < 1 || n < 1) throw DomainError("random fragments need l >= 1 and n >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-2, 2);

    RMatrix upper = RMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v = dist(rng);
            if (j == i + 1 && v == 0) v = 1;  // nonzero superdiagonal: one Jordan block
            upper(i, j) = Rational(v);
        }
    const RMatrix s = random_unimodular(n, rng);
    const RMatrix nil = s * upper * *inverse(s);
    const int gamma = l * l - 1;
    const RMatrix id = RMatrix::Identity(n, n);
    const RMatrix casimir = Rational(gamma) * id + Rational(4) * nil;

    HCFragment f;
    f.l = l;
    f.dims.assign(static_cast<size_t>(l) + 2, n);
    f.X.assign(static_cast<size_t>(l) + 1, id);
    f.Y.assign(static_cast<size_t>(l) + 1, id);
    f.X[0] = nil;
    f.X[l] = nil;
    for (int i = 1; i < l; ++i) {
        const int p = f.weight_of(static_cast<size_t>(i) + 1);
        f.Y[i] = Rational(1, 4) * (casimir - Rational(p * p - 2 * p) * id);
    }

    std::vector<RMatrix> gauge, gauge_inv;
    for (int i = 0; i < l + 2; ++i) {
        gauge.push_back(random_unimodular(n, rng));
        gauge_inv.push_back(*inverse(gauge.back()));
    }
    for (int i = 0; i <= l; ++i) {
        f.X[i] = gauge[i + 1] * f.X[i] * gauge_inv[i];
        f.Y[i] = gauge[i] * f.Y[i] * gauge_inv[i + 1];
    }
    return f;
}

std::string to_string(NodeType t) {
    switch (t) {
    case NodeType::Star: return "star";
    case NodeType::Plus: return "plus";
    case NodeType::Minus: return "minus";
    }
    return "?";
}

std::optional<NodeType> parse_node_type(const std::string& s) {
    if (s == "star" || s == "*") return NodeType::Star;
    if (s == "plus" || s == "+") return NodeType::Plus;
    if (s == "minus" || s == "-") return NodeType::Minus;
    return std::nullopt;
}

nlohmann::json rep_to_json(const QuiverRep& r) {
    if (r.quiver == QuiverKind::Cyclic)
        return {{"quiver", "cyclic"},
                {"dims", {r.n_minus, r.n_plus}},
                {"A_plus", matrix_to_json(r.A_plus)},
                {"A_minus", matrix_to_json(r.A_minus)}};
    return {{"quiver", "gelfand"},
            {"dims", {r.n_minus, r.n_star, r.n_plus}},
            {"A_minus", matrix_to_json(r.A_minus)},
            {"B_minus", matrix_to_json(r.B_minus)},
            {"A_plus", matrix_to_json(r.A_plus)},
            {"B_plus", matrix_to_json(r.B_plus)}};
}

QuiverRep rep_from_json(const nlohmann::json& j) {
    const std::string q = j.at("quiver").get<std::string>();
    const auto dims = j.at("dims").get<std::vector<int>>();
    if (q == "cyclic") {
        if (dims.size() != 2) throw DomainError("cyclic quiver needs two dimensions");
        QuiverRep r = QuiverRep::zero(QuiverKind::Cyclic, dims[0], 0, dims[1]);
        r.A_plus = matrix_from_json(j.at("A_plus"), dims[1], dims[0]);
        r.A_minus = matrix_from_json(j.at("A_minus"), dims[0], dims[1]);
        return r;
    }
    if (q != "gelfand") throw DomainError("unknown quiver '" + q + "'");
    if (dims.size() != 3) throw DomainError("Gelfand quiver needs three dimensions");
    QuiverRep r = QuiverRep::zero(QuiverKind::Gelfand, dims[0], dims[1], dims[2]);
    r.A_minus = matrix_from_json(j.at("A_minus"), dims[1], dims[0]);
    r.B_minus = matrix_from_json(j.at("B_minus"), dims[0], dims[1]);
    r.A_plus = matrix_from_json(j.at("A_plus"), dims[1], dims[2]);
    r.B_plus = matrix_from_json(j.at("B_plus"), dims[2], dims[1]);
    return r;
}

nlohmann::json fragment_to_json(const HCFragment& f) {
    nlohmann::json xs = nlohmann::json::array(), ys = nlohmann::json::array();
    for (const auto& x : f.X) xs.push_back(matrix_to_json(x));
    for (const auto& y : f.Y) ys.push_back(matrix_to_json(y));
    return {{"l", f.l}, {"dims", f.dims}, {"X", xs}, {"Y", ys}};
}

HCFragment fragment_from_json(const nlohmann::json& j) {
    HCFragment f;
    f.l = j.at("l").get<int>();
    f.dims = j.at("dims").get<std::vector<int>>();
    const auto& xs = j.at("X");
    const auto& ys = j.at("Y");
    if (f.l < 0 || f.dims.size() != static_cast<size_t>(f.l) + 2 || xs.size() != f.dims.size() - 1 ||
        ys.size() != f.dims.size() - 1)
        throw DomainError("fragment needs l + 2 spaces and l + 1 maps in each direction");
    for (size_t i = 0; i + 1 < f.dims.size(); ++i) {
        f.X.push_back(matrix_from_json(xs[i], f.dims[i + 1], f.dims[i]));
        f.Y.push_back(matrix_from_json(ys[i], f.dims[i], f.dims[i + 1]));
    }
    return f;
}

}  // namespace pm
