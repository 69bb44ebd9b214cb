#include "polymaass/symcalc.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace pm {

namespace {

int parity_sign(int orientation, int j) { return (orientation == 1 || j % 2 == 0) ? 1 : -1; }

struct ShiftRule {
    std::vector<Scalar> poly;  // coefficients in the family parameter
    int weight = 0;
    Rational delta;
};

ShiftRule shift_rule(const Family& fam, int w, Dir d) {
    ShiftRule s;
    switch (fam.kind) {
    case FamilyKind::Eisenstein:
    case FamilyKind::Incoherent:
        if (d == Dir::L) s = {{Scalar(0), Scalar(1)}, w - 2, Rational(1)};
        else s = {{Scalar(w), Scalar(1)}, w + 2, Rational(-1)};
        break;
    case FamilyKind::Poincare: {
        const long n = fam.param < 0 ? -fam.param : fam.param;
        if (d == Dir::L) {
            const Scalar c = Scalar::pi_power(-1, Rational(1, 4 * n));
            s = {{c * Scalar(Rational(-w, 2)), c}, w - 2, Rational(0)};
        } else {
            const Scalar c = Scalar::pi_power(1, Rational(4 * n));
            s = {{c * Scalar(Rational(w, 2)), c}, w + 2, Rational(0)};
        }
        break;
    }
    case FamilyKind::Constant:
        break;
    }
    return s;
}

// Coefficients of P(u0 + t) in t.
std::vector<Scalar> reexpand(const std::vector<Scalar>& a, const Rational& u0) {
    std::vector<Scalar> b(a.size());
    for (size_t n = 0; n < a.size(); ++n)
        for (size_t i = 0; i <= n; ++i)
            b[i] += a[n] * Scalar(binomial(long(n), long(i)) * pow(u0, long(n - i)));
    return b;
}

void add_expanded(Form& out, const PolyAtom& p, const Family& fam, int w, const Rational& u, int j,
                  const Scalar& c) {
    if (c.is_zero()) return;
    if (fam.kind == FamilyKind::Constant) {
        if (j == 0) out.add(p, SpectralAtom::constant(), c);
        return;
    }
    const SpecialValueTable& table = special_values();
    if (j < table.lowest_index(fam, w, u)) return;
    if (j == -1) {
        const Form* res = table.residue(fam, w, u);
        for (const auto& [key, rc] : res->terms()) {
            if (key.first != PolyAtom{}) throw DomainError("residue forms must be scalar valued");
            out.add(p, key.second, c * rc);
        }
        return;
    }
    out.add(p, SpectralAtom{fam, w, u, j, 1, std::nullopt}, c);
}

void shift_expanded(Form& out, const PolyAtom& p, const SpectralAtom& a, Dir d, const Scalar& c) {
    const ShiftRule rule = shift_rule(a.family, a.weight, d);
    if (rule.poly.empty()) return;
    const std::vector<Scalar> b = reexpand(rule.poly, a.point);
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i].is_zero()) continue;
        add_expanded(out, p, a.family, rule.weight, a.point + rule.delta, a.index - int(i), c * b[i]);
    }
}

void expand_term(Form& out, const PolyAtom& p, const SpectralAtom& a, const Scalar& c) {
    const Scalar signed_c = c * Scalar(parity_sign(a.orientation, a.index));
    if (!a.pending) {
        add_expanded(out, p, a.family, a.weight, a.point, a.index, signed_c);
        return;
    }
    const int base = a.base_weight();
    Form cur(p.weight() + base);
    add_expanded(cur, p, a.family, base, a.point, a.index, signed_c);
    const int step = a.pending->dir == Dir::L ? -2 : 2;
    for (int i = 0; i < a.pending->power; ++i) {
        Form next(cur.weight() + step);
        for (const auto& [key, kc] : cur.terms()) shift_expanded(next, key.first, key.second, a.pending->dir, kc);
        cur = std::move(next);
    }
    out += cur;
}

bool has_pending(const Form& f) {
    return std::any_of(f.terms().begin(), f.terms().end(),
                       [](const auto& t) { return t.first.second.pending.has_value(); });
}

std::shared_ptr<const SpecialValueTable>& table_slot() {
    static std::shared_ptr<const SpecialValueTable> slot =
        std::make_shared<const SpecialValueTable>(SpecialValueTable::defaults());
    return slot;
}

}  // namespace

Family Family::poincare(long n) {
    if (n == 0) throw DomainError("Poincaré index must be nonzero");
    return {FamilyKind::Poincare, {}, n};
}

int SpectralAtom::base_weight() const {
    if (!pending) return weight;
    return pending->dir == Dir::L ? weight + 2 * pending->power : weight - 2 * pending->power;
}

void Form::add(const PolyAtom& p, const SpectralAtom& a, const Scalar& c) {
    if (c.is_zero()) return;
    if (p.r < 0 || p.r > p.m) throw DomainError("poly atom index out of range");
    if (p.weight() + a.weight != weight_)
        throw DomainError("term weight " + std::to_string(p.weight() + a.weight) + " does not match form weight " +
                          std::to_string(weight_));
    auto [it, inserted] = terms_.emplace(TermKey{p, a}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar Form::coefficient(const PolyAtom& p, const SpectralAtom& a) const {
    auto it = terms_.find(TermKey{p, a});
    return it == terms_.end() ? Scalar() : it->second;
}

Form& Form::operator+=(const Form& o) {
    if (o.empty()) return *this;
    if (empty()) weight_ = o.weight_;
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form Form::operator-() const {
    Form out(weight_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

Form operator*(const Scalar& c, const Form& f) {
    Form out(f.weight());
    for (const auto& [key, fc] : f.terms()) out.add(key.first, key.second, c * fc);
    return out;
}

// ---- special values ------------------------------------------------------

SpecialValueTable SpecialValueTable::defaults() {
    SpecialValueTable t;
    SpecialEntry pole;
    pole.family = Family::eisenstein();
    pole.weight = 0;
    pole.point = Rational(1);
    pole.order = 1;
    pole.residue = constant_form(Scalar::pi_power(-1, Rational(3)));
    t.add_entry(std::move(pole));
    t.add_rule(SpecialRule::PoincareHolomorphicBase);
    t.add_rule(SpecialRule::IncoherentBaseZero);
    return t;
}

void SpecialValueTable::add_entry(SpecialEntry e) {
    if (e.order != 1 && e.order != -1) throw DomainError("only simple poles and simple zeros are supported");
    if (e.order == 1 && e.residue.weight() != e.weight && !e.residue.empty())
        throw DomainError("residue form weight must match the entry weight");
    entries_.push_back(std::move(e));
}

const SpecialEntry* SpecialValueTable::find(const Family& fam, int weight, const Rational& point) const {
    for (const auto& e : entries_) {
        if (e.family.kind != fam.kind || e.family.character != fam.character) continue;
        if (!e.any_param && e.family.param != fam.param) continue;
        if (e.weight == weight && e.point == point) return &e;
    }
    return nullptr;
}

int SpecialValueTable::lowest_index(const Family& fam, int weight, const Rational& point) const {
    if (const SpecialEntry* e = find(fam, weight, point)) return e->order == 1 ? -1 : 1;
    for (SpecialRule r : rules_) {
        if (r == SpecialRule::PoincareHolomorphicBase && fam.kind == FamilyKind::Poincare) {
            const Rational two_sigma = Rational(2) * point;
            if (!two_sigma.is_integer() || point < Rational(1)) continue;
            if (!(point + Rational(weight, 2)).is_integer()) continue;
            if (fam.param < 0 && Rational(weight) <= -two_sigma) return 1;
            if (fam.param > 0 && Rational(weight) >= two_sigma) return 1;
        }
        if (r == SpecialRule::IncoherentBaseZero && fam.kind == FamilyKind::Incoherent) {
            const bool on_line = point.is_integer() && Rational(weight) + Rational(2) * point == Rational(1);
            const bool side = fam.character.empty() ? weight >= 1 : weight <= -1;
            if (on_line && side) return 1;
        }
    }
    return 0;
}

const Form* SpecialValueTable::residue(const Family& fam, int weight, const Rational& point) const {
    const SpecialEntry* e = find(fam, weight, point);
    if (!e || e->order != 1) throw DomainError("no residue recorded at this point");
    return &e->residue;
}

SpecialValueTable SpecialValueTable::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("special value table must be a JSON list");
    SpecialValueTable t;
    for (const auto& item : j) {
        if (item.contains("rule")) {
            const std::string name = item.at("rule").get<std::string>();
            if (name == "poincare_holomorphic_base") t.add_rule(SpecialRule::PoincareHolomorphicBase);
            else if (name == "incoherent_base_zero") t.add_rule(SpecialRule::IncoherentBaseZero);
            else throw DomainError("unknown special value rule " + name);
            continue;
        }
        SpecialEntry e;
        const auto& fj = item.at("family");
        e.family = family_from_json(fj);
        e.any_param = !fj.contains("index") && !fj.contains("disc");
        e.weight = item.at("weight").get<int>();
        e.point = Rational::parse(item.at("point").get<std::string>());
        e.order = item.at("order").get<int>();
        if (e.order > 1) throw DomainError("poles of order above one are not supported");
        if (item.contains("residue_form") && !item.at("residue_form").is_null())
            e.residue = form_from_json(item.at("residue_form"));
        else
            e.residue = Form(e.weight);
        t.add_entry(std::move(e));
    }
    return t;
}

nlohmann::json SpecialValueTable::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries_) {
        nlohmann::json fj = family_to_json(e.family, 1);
        fj.erase("orientation");
        if (e.any_param) { fj.erase("index"); fj.erase("disc"); }
        nlohmann::json item = {{"family", fj}, {"weight", e.weight}, {"point", e.point.str()}, {"order", e.order}};
        item["residue_form"] = e.order == 1 ? form_to_json(e.residue) : nlohmann::json(nullptr);
        out.push_back(item);
    }
    for (SpecialRule r : rules_)
        out.push_back({{"rule", r == SpecialRule::PoincareHolomorphicBase ? "poincare_holomorphic_base"
                                                                           : "incoherent_base_zero"}});
    return out;
}

const SpecialValueTable& special_values() { return *table_slot(); }

void set_special_values(SpecialValueTable table) {
    table_slot() = std::make_shared<const SpecialValueTable>(std::move(table));
}

// ---- constructors --------------------------------------------------------

Form make_e_atom(int m, int r) {
    if (m < 0 || r < 0 || r > m) throw DomainError("e-atom index out of range");
    Form f(m - 2 * r);
    f.add(PolyAtom{m, r}, SpectralAtom::constant(), Scalar(1));
    return f;
}

Form constant_form(const Scalar& c) {
    Form f(0);
    f.add(PolyAtom{}, SpectralAtom::constant(), c);
    return f;
}

Form laurent_form(const Family& fam, int weight, const Rational& point, int j, const Scalar& c) {
    Form f(weight);
    add_expanded(f, PolyAtom{}, fam, weight, point, j, c);
    return f;
}

Form spectral_form(const FamilySymbol& fs, int j, std::optional<PendingOp> op, const Scalar& c) {
    if (!op || op->power == 0) {
        Form f(fs.weight);
        add_expanded(f, PolyAtom{}, fs.family, fs.weight, fs.point, j, c * Scalar(parity_sign(fs.orientation, j)));
        return f;
    }
    if (op->power < 0) throw DomainError("operator power must be non-negative");
    SpectralAtom a{fs.family, fs.weight + (op->dir == Dir::L ? -2 : 2) * op->power, fs.point, j, fs.orientation, op};
    Form f(a.weight);
    f.add(PolyAtom{}, a, c);
    return f;
}

Form tensor(const Form& poly_part, const Form& spectral_part) {
    Form out(poly_part.weight() + spectral_part.weight());
    for (const auto& [pk, pc] : poly_part.terms()) {
        if (!pk.second.is_constant()) throw DomainError("tensor: left factor must be polynomial only");
        for (const auto& [sk, sc] : spectral_part.terms()) {
            if (sk.first != PolyAtom{}) throw DomainError("tensor: right factor must be spectral only");
            out.add(pk.first, sk.second, pc * sc);
        }
    }
    return out;
}

// ---- operators -----------------------------------------------------------

Form normalize(const Form& f) {
    Form out(f.weight());
    for (const auto& [key, c] : f.terms()) {
        const SpectralAtom& a = key.second;
        if (!a.pending) {
            expand_term(out, key.first, a, c);
            continue;
        }
        Form probe(f.weight());
        expand_term(probe, key.first, a, c);
        if (!probe.empty()) out.add(key.first, a, c);
    }
    return out;
}

Form expand_pending(const Form& f) {
    Form out(f.weight());
    for (const auto& [key, c] : f.terms()) expand_term(out, key.first, key.second, c);
    return out;
}

bool is_zero(const Form& f) { return expand_pending(f).empty(); }

Form apply_lowering(const Form& f) {
    const Form g = expand_pending(f);
    Form out(f.weight() - 2);
    for (const auto& [key, c] : g.terms()) {
        const auto& [p, a] = key;
        if (p.r < p.m) out.add(PolyAtom{p.m, p.r + 1}, a, c * Scalar((p.r + 1) * (p.m - p.r)));
        shift_expanded(out, p, a, Dir::L, c);
    }
    return out;
}

Form apply_raising(const Form& f) {
    const Form g = expand_pending(f);
    Form out(f.weight() + 2);
    for (const auto& [key, c] : g.terms()) {
        const auto& [p, a] = key;
        if (p.r > 0) out.add(PolyAtom{p.m, p.r - 1}, a, c);
        shift_expanded(out, p, a, Dir::R, c);
    }
    return out;
}

Form apply_lowering(const Form& f, int power) {
    if (power < 0) throw DomainError("operator power must be non-negative");
    Form g = expand_pending(f);
    for (int i = 0; i < power; ++i) g = apply_lowering(g);
    return g;
}

Form apply_raising(const Form& f, int power) {
    if (power < 0) throw DomainError("operator power must be non-negative");
    Form g = expand_pending(f);
    for (int i = 0; i < power; ++i) g = apply_raising(g);
    return g;
}

Form apply_laplace(const Form& f) { return -apply_raising(apply_lowering(f)); }

Form apply_laplace(const Form& f, int power) {
    if (power < 0) throw DomainError("operator power must be non-negative");
    Form g = expand_pending(f);
    for (int i = 0; i < power; ++i) g = apply_laplace(g);
    return g;
}

Form laplace_by_products(const Form& f) {
    const Form g = expand_pending(f);
    Form out(f.weight());
    for (const auto& [key, c] : g.terms()) {
        Form poly(key.first.weight());
        poly.add(key.first, SpectralAtom::constant(), Scalar(1));
        Form spec(key.second.weight);
        spec.add(PolyAtom{}, key.second, c);
        out += tensor(apply_laplace(poly), spec);
        out += tensor(poly, apply_laplace(spec));
        out -= tensor(apply_lowering(poly), apply_raising(spec));
        out -= tensor(apply_raising(poly), apply_lowering(spec));
    }
    return out;
}

Form apply_mirror(const Form& f) {
    if (has_pending(f)) throw DomainError("mirror requires an expanded form (expand pending operators first)");
    Form out(-f.weight());
    for (const auto& [key, c] : f.terms()) {
        const auto& [p, a] = key;
        const int sign_m = p.m % 2 == 0 ? 1 : -1;
        Scalar coef = c * Scalar(Rational(sign_m) * factorial(p.m - p.r) / factorial(p.r));
        const PolyAtom q{p.m, p.m - p.r};
        switch (a.family.kind) {
        case FamilyKind::Constant:
            out.add(q, a, coef);
            break;
        case FamilyKind::Eisenstein:
            add_expanded(out, q, a.family, -a.weight, a.point + Rational(a.weight), a.index, coef);
            break;
        case FamilyKind::Incoherent: {
            Family conj = a.family;
            conj.character = conj.character.empty() ? kConjugateTag : std::string{};
            add_expanded(out, q, conj, -a.weight, a.point + Rational(a.weight), a.index, coef);
            break;
        }
        case FamilyKind::Poincare: {
            const long n = a.family.param < 0 ? -a.family.param : a.family.param;
            const int sign_k = (1 - a.weight) % 2 == 0 ? 1 : -1;
            const Scalar factor = Scalar::pi_power(-a.weight, Rational(sign_k) * pow(Rational(4 * n), -a.weight));
            add_expanded(out, q, Family::poincare(-a.family.param), -a.weight, a.point, a.index, coef * factor);
            break;
        }
        }
    }
    return out;
}

Form apply_flip(const Form& f) {
    const int k = f.weight();
    if (k > 0) throw DomainError("flip requires weight <= 0");
    const Form raised = apply_raising(f, -k);
    return Scalar(Rational(1) / factorial(-k)) * apply_mirror(raised);
}

// ---- display -------------------------------------------------------------

Scalar display_coefficient(const SpectralAtom& a, const Scalar& c) {
    if (a.is_constant() || a.index < 0) return c;
    Rational f = Rational(1) / factorial(a.index);
    if (!a.pending && a.family.kind == FamilyKind::Poincare && a.index % 2 != 0) f = -f;
    return c * Scalar(f);
}

namespace {

std::string family_letter(const Family& f) {
    switch (f.kind) {
    case FamilyKind::Eisenstein: return f.character.empty() ? "E" : "E[" + f.character + "]";
    case FamilyKind::Incoherent: return f.character.empty() ? "E^-" : "E^-[" + f.character + "]";
    case FamilyKind::Poincare: return "F";
    case FamilyKind::Constant: return "1";
    }
    return "?";
}

std::string pending_family(const SpectralAtom& a) {
    const int base = a.base_weight();
    const std::string t = "^{(" + std::to_string(a.index) + ")}";
    if (a.family.kind == FamilyKind::Poincare) {
        if (a.orientation == -1 && a.point == Rational(2 - base, 2))
            return "P" + t + "_{" + std::to_string(base) + "," + std::to_string(a.family.param) + "}";
        return "F" + t + "_{" + std::to_string(base) + "," + std::to_string(a.family.param) + "}[" + a.point.str() +
               (a.orientation == 1 ? "+s]" : "-s]");
    }
    std::string sub = std::to_string(base);
    if (a.family.kind == FamilyKind::Incoherent) sub = std::to_string(a.family.param) + ";" + sub;
    std::string out = family_letter(a.family) + t + "_{" + sub + "}";
    if (!(a.point.is_zero() && a.orientation == 1))
        out += "[" + a.point.str() + (a.orientation == 1 ? "+s]" : "-s]");
    return out;
}

}  // namespace

std::string pretty_atom(const PolyAtom& p, const SpectralAtom& a) {
    std::string out;
    if (p != PolyAtom{} || a.is_constant())
        out = "e_{" + std::to_string(p.r) + "," + std::to_string(p.m - p.r) + "}";
    if (a.is_constant()) return out;
    if (!out.empty()) out += " ";
    if (a.pending) {
        out += (a.pending->dir == Dir::L ? "L^" : "R^") + std::to_string(a.pending->power) + " " + pending_family(a);
        return out;
    }
    const std::string t = "^{(" + std::to_string(a.index) + ")}";
    switch (a.family.kind) {
    case FamilyKind::Poincare: {
        const Rational s0 = Rational(2 - a.weight, 2) - a.point;
        out += "P" + t + "_{" + std::to_string(a.weight) + "," + std::to_string(a.family.param) + "," + s0.str() + "}";
        break;
    }
    case FamilyKind::Incoherent: {
        // At a forced zero the order counts from the first nonvanishing derivative: E^{-(t)} = ∂^{t+1}.
        const int shift = special_values().lowest_index(a.family, a.weight, a.point) == 1 ? 1 : 0;
        out += "E^{-(" + std::to_string(a.index - shift) + ")}";
        if (!a.family.character.empty()) out += "[" + a.family.character + "]";
        out += "_{" + std::to_string(a.family.param) + ";" + std::to_string(a.weight) + "," + a.point.str() + "}";
        break;
    }
    default:
        out += family_letter(a.family) + t + "_{" + std::to_string(a.weight) + "," + a.point.str() + "}";
    }
    return out;
}

std::vector<DisplayTerm> display_terms(const Form& f) {
    std::vector<DisplayTerm> rows;
    for (const auto& [key, c] : f.terms()) rows.push_back({key.first, key.second, display_coefficient(key.second, c)});
    std::stable_sort(rows.begin(), rows.end(), [](const DisplayTerm& x, const DisplayTerm& y) {
        if (x.atom.index != y.atom.index) return x.atom.index > y.atom.index;
        if (x.poly.r != y.poly.r) return x.poly.r < y.poly.r;
        return std::tie(x.poly, x.atom) < std::tie(y.poly, y.atom);
    });
    return rows;
}

std::string pretty(const Form& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const DisplayTerm& t : display_terms(f)) {
        std::string coef = t.coefficient.str();
        std::string sign = "+";
        if (coef[0] == '-') {
            sign = "-";
            coef = coef.substr(1);
        }
        if (!first) os << "\n";
        os << sign << " " << coef << " " << pretty_atom(t.poly, t.atom);
        first = false;
    }
    return os.str();
}

// ---- JSON ----------------------------------------------------------------

nlohmann::json family_to_json(const Family& f, int orientation) {
    nlohmann::json j;
    switch (f.kind) {
    case FamilyKind::Eisenstein:
        j["kind"] = "eisenstein";
        if (!f.character.empty()) j["character"] = f.character;
        break;
    case FamilyKind::Poincare: j = {{"kind", "poincare"}, {"index", f.param}}; break;
    case FamilyKind::Incoherent:
        j = {{"kind", "incoherent"}, {"disc", f.param}};
        if (!f.character.empty()) j["character"] = f.character;
        break;
    case FamilyKind::Constant: j["kind"] = "constant"; break;
    }
    j["orientation"] = orientation;
    return j;
}

Family family_from_json(const nlohmann::json& j, int* orientation) {
    const std::string kind = j.at("kind").get<std::string>();
    if (orientation) *orientation = j.value("orientation", 1);
    if (orientation && *orientation != 1 && *orientation != -1) throw DomainError("orientation must be +1 or -1");
    if (kind == "eisenstein") return Family::eisenstein(j.value("character", std::string{}));
    if (kind == "poincare") return Family::poincare(j.value("index", 0L));
    if (kind == "incoherent") {
        Family f = Family::incoherent(j.value("disc", 0L));
        f.character = j.value("character", std::string{});
        if (!f.character.empty() && f.character != kConjugateTag) throw DomainError("unknown incoherent character " + f.character);
        return f;
    }
    if (kind == "constant") return Family::constant();
    throw DomainError("unknown family kind " + kind);
}

nlohmann::json scalar_to_json(const Scalar& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, q] : s.terms()) out.push_back({{"pi_exp", e}, {"num", q.num_str()}, {"den", q.den_str()}});
    return out;
}

Scalar scalar_from_json(const nlohmann::json& j) {
    Scalar s;
    for (const auto& t : j) {
        const Rational q = Rational::parse(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
        s += Scalar::pi_power(t.at("pi_exp").get<int>(), q);
    }
    return s;
}

nlohmann::json form_to_json(const Form& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : f.terms()) {
        const auto& [p, a] = key;
        nlohmann::json sj = {{"family", family_to_json(a.family, a.orientation)},
                             {"weight", a.weight},
                             {"point", a.point.str()},
                             {"laurent", a.index}};
        sj["pending"] = a.pending ? nlohmann::json{{"dir", a.pending->dir == Dir::L ? "L" : "R"},
                                                   {"power", a.pending->power}}
                                  : nlohmann::json(nullptr);
        terms.push_back({{"poly", {{"m", p.m}, {"r", p.r}}}, {"spectral", sj}, {"coeff", scalar_to_json(c)}});
    }
    return {{"weight", f.weight()}, {"terms", terms}};
}

Form form_from_json(const nlohmann::json& j) {
    try {
        Form f(j.at("weight").get<int>());
        for (const auto& t : j.at("terms")) {
            const PolyAtom p{t.at("poly").at("m").get<int>(), t.at("poly").at("r").get<int>()};
            const auto& sj = t.at("spectral");
            SpectralAtom a;
            a.family = family_from_json(sj.at("family"), &a.orientation);
            a.weight = sj.at("weight").get<int>();
            a.point = Rational::parse(sj.at("point").get<std::string>());
            a.index = sj.at("laurent").get<int>();
            if (sj.contains("pending") && !sj.at("pending").is_null()) {
                const auto& pj = sj.at("pending");
                const std::string dir = pj.at("dir").get<std::string>();
                if (dir != "L" && dir != "R") throw DomainError("pending direction must be L or R");
                a.pending = PendingOp{dir == "L" ? Dir::L : Dir::R, pj.at("power").get<int>()};
                if (a.pending->power < 1) throw DomainError("pending power must be positive");
            }
            if (a.is_constant() && (a.weight != 0 || a.index != 0)) throw DomainError("malformed constant atom");
            f.add(p, a, scalar_from_json(t.at("coeff")));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed form JSON: ") + e.what());
    }
}

}  // namespace pm
