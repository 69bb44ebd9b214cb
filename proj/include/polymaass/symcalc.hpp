#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polymaass/rational.hpp"
#include "polymaass/scalar.hpp"

namespace pm {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 𝔢_{r,m-r} in Pol_m; weight m - 2r.
struct PolyAtom {
    int m = 0;
    int r = 0;
    int weight() const { return m - 2 * r; }
    auto operator<=>(const PolyAtom&) const = default;
};

// Character tag of the complex-conjugate twist; mirror toggles it on incoherent families.
inline constexpr const char* kConjugateTag = "conj";

enum class FamilyKind { Eisenstein, Poincare, Incoherent, Constant };

struct Family {
    FamilyKind kind = FamilyKind::Constant;
    std::string character;  // twist tag for Eisenstein-type families
    long param = 0;         // Poincaré index n, or discriminant D

    static Family eisenstein(std::string tag = {}) { return {FamilyKind::Eisenstein, std::move(tag), 0}; }
    static Family poincare(long n);
    static Family incoherent(long disc) { return {FamilyKind::Incoherent, {}, disc}; }
    static Family constant() { return {}; }

    auto operator<=>(const Family&) const = default;
};

enum class Dir { L, R };

struct PendingOp {
    Dir dir = Dir::L;
    int power = 1;
    auto operator<=>(const PendingOp&) const = default;
};

// A spectral family f_s = Φ_{weight}(point + orientation * s). The point is the
// Eisenstein parameter s of E_k(., s), or the global σ of F_{k,n}(., σ).
struct FamilySymbol {
    Family family;
    int weight = 0;
    Rational point;
    int orientation = 1;

    static FamilySymbol eisenstein(int k) { return {Family::eisenstein(), k, Rational(0), 1}; }
    // E_k(., 1-k-s)
    static FamilySymbol eisenstein_reflected(int k) { return {Family::eisenstein(), k, Rational(1 - k), -1}; }
    // F_{k,n}(., k/2 + s)
    static FamilySymbol poincare(int k, long n) { return {Family::poincare(n), k, Rational(k, 2), 1}; }
    // F_{k,n}(., 1 - k/2 - s)
    static FamilySymbol poincare_reflected(int k, long n) { return {Family::poincare(n), k, Rational(2 - k, 2), -1}; }
    static FamilySymbol incoherent(long disc) { return {Family::incoherent(disc), 1, Rational(0), 1}; }
};

// Expanded atoms (no pending op) are the Laurent coefficient [t^index] Φ_weight(point + t)
// and always carry orientation +1. Pending atoms are [s^index] op^a Φ_base(point + orientation*s)
// where weight is the weight after the op.
struct SpectralAtom {
    Family family;
    int weight = 0;
    Rational point;
    int index = 0;
    int orientation = 1;
    std::optional<PendingOp> pending;

    static SpectralAtom constant() { return {}; }
    int base_weight() const;
    bool is_constant() const { return family.kind == FamilyKind::Constant; }
    auto operator<=>(const SpectralAtom&) const = default;
};

using TermKey = std::pair<PolyAtom, SpectralAtom>;

class Form {
public:
    explicit Form(int weight = 0) : weight_(weight) {}

    int weight() const { return weight_; }
    const std::map<TermKey, Scalar>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const PolyAtom& p, const SpectralAtom& a, const Scalar& c);
    Scalar coefficient(const PolyAtom& p, const SpectralAtom& a) const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form operator-() const;
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Scalar& c, const Form& f);
    friend bool operator==(const Form& a, const Form& b) {
        return a.weight_ == b.weight_ && a.terms_ == b.terms_;
    }

private:
    int weight_;
    std::map<TermKey, Scalar> terms_;
};

// Known analytic coincidences at special spectral points. A simple pole keeps
// Laurent index -1 and substitutes the residue form; a zero drops index 0.
struct SpecialEntry {
    Family family;
    bool any_param = true;
    int weight = 0;
    Rational point;
    int order = 1;  // 1: simple pole, -1: simple zero
    Form residue;
};

enum class SpecialRule {
    // F_{w,n}(., σ) vanishes for n < 0, σ >= 1, w <= -2σ (and its mirror image for n > 0).
    PoincareHolomorphicBase,
    // E^-_{D} vanishes at (1 + 2a, -a) for a >= 0; its conjugate twist at (-1 - 2a, 1 + a).
    IncoherentBaseZero,
};

class SpecialValueTable {
public:
    static SpecialValueTable defaults();
    static SpecialValueTable from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    void add_entry(SpecialEntry e);
    void add_rule(SpecialRule r) { rules_.push_back(r); }

    // Smallest Laurent index that may carry a nonzero coefficient.
    int lowest_index(const Family& fam, int weight, const Rational& point) const;
    const Form* residue(const Family& fam, int weight, const Rational& point) const;

private:
    const SpecialEntry* find(const Family& fam, int weight, const Rational& point) const;
    std::vector<SpecialEntry> entries_;
    std::vector<SpecialRule> rules_;
};

const SpecialValueTable& special_values();
void set_special_values(SpecialValueTable table);

Form make_e_atom(int m, int r);
Form constant_form(const Scalar& c = Scalar(1));
// c * [s^j] op^a f_s as a single term against 𝔢_{0,0}; a = 0 gives the expanded atom.
Form spectral_form(const FamilySymbol& f, int j, std::optional<PendingOp> op = std::nullopt,
                   const Scalar& c = Scalar(1));
// Canonical Laurent coefficient c_j of Φ_w at the given point.
Form laurent_form(const Family& fam, int weight, const Rational& point, int j, const Scalar& c = Scalar(1));
Form tensor(const Form& poly_part, const Form& spectral_part);

// Drops pending atoms that expand to zero and resolves zero powers.
Form normalize(const Form& f);
Form expand_pending(const Form& f);
bool is_zero(const Form& f);

Form apply_lowering(const Form& f);
Form apply_raising(const Form& f);
Form apply_lowering(const Form& f, int power);
Form apply_raising(const Form& f, int power);
Form apply_laplace(const Form& f);
Form apply_laplace(const Form& f, int power);
Form apply_mirror(const Form& f);
Form apply_flip(const Form& f);

// Δ via the four-term product rule on each tensor factor.
Form laplace_by_products(const Form& f);

struct DisplayTerm {
    PolyAtom poly;
    SpectralAtom atom;
    Scalar coefficient;
};
// Terms in print order: descending derivative order, then ascending r.
std::vector<DisplayTerm> display_terms(const Form& f);
std::string pretty(const Form& f);
std::string pretty_atom(const PolyAtom& p, const SpectralAtom& a);
// Coefficient as printed next to a derivative-notation atom.
Scalar display_coefficient(const SpectralAtom& a, const Scalar& c);

nlohmann::json family_to_json(const Family& f, int orientation);
Family family_from_json(const nlohmann::json& j, int* orientation = nullptr);
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

}  // namespace pm
