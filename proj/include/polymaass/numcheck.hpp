#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace pm::num {

using cplx = std::complex<double>;

struct EvalConfig {
    int N = 400;
    double h = 1e-3;
    bool richardson = true;
    double tolerance = 1e-5;
};

struct SamplePoint {
    int k = 0;
    cplx s;
    cplx tau;
    long disc = 3;  // used by the twisted identities only
};

// Kronecker symbol (a/n).
int kronecker(long a, long n);

// Σ over Γ_∞\SL_2(Z), |c|, |d| <= N, of y^s |_k γ.
cplx eval_eisenstein(int k, cplx s, cplx tau, const EvalConfig& cfg);
// Same coset sum weighted by φ_D^-; weight k odd, k = 1 gives E^-_D.
cplx eval_character_eisenstein(long disc, cplx s, cplx tau, const EvalConfig& cfg, int k = 1);
// Tail bound for the absolutely convergent coset sum beyond |c|, |d| <= N.
double truncation_estimate(int k, cplx s, cplx tau, int N);
// Holomorphic E_4 from the lattice sum over (m, n) != 0 with max(|m|,|n|) <= N.
cplx lattice_eisenstein4(cplx tau, int N);

enum class Op { L, R, Laplace };
using Function = std::function<cplx(double x, double y)>;

cplx fd_operator(Op op, int k, const Function& fn, cplx tau, const EvalConfig& cfg);

// Polynomial in τ, τ̄ and y^{±1} with complex coefficients; exact Wirtinger calculus.
class WirtingerPoly {
public:
    using Key = std::tuple<int, int, int>;  // powers of τ, τ̄, y

    static WirtingerPoly monomial(cplx c, int p, int q, int n);
    static WirtingerPoly e_basis(int m, int r, cplx X);

    WirtingerPoly operator+(const WirtingerPoly& o) const;
    WirtingerPoly operator*(const WirtingerPoly& o) const;
    WirtingerPoly scaled(cplx c) const;
    WirtingerPoly d_tau() const;
    WirtingerPoly d_tau_bar() const;
    WirtingerPoly conj() const;  // valid for real X
    WirtingerPoly lower(int k) const;
    WirtingerPoly raise(int k) const;
    WirtingerPoly laplace(int k) const;
    cplx operator()(cplx tau) const;

private:
    std::map<Key, cplx> terms_;
};

struct ReportEntry {
    std::string identity;
    std::string point;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
};

using Report = std::vector<ReportEntry>;

enum class Identity { LaplaceEigen, Lowering, Raising, Mirror, EBasis, TwistedLowering, TwistedRaising };

Report verify_identity(Identity id, const std::vector<SamplePoint>& points, const EvalConfig& cfg);

struct EBasisPoint {
    int m = 0;
    int r = 0;
    cplx tau;
    cplx X;
};
Report verify_ebasis(const std::vector<EBasisPoint>& points, double tolerance = 1e-12);

std::vector<SamplePoint> default_grid();
std::vector<SamplePoint> twisted_grid();
std::vector<EBasisPoint> default_ebasis_grid();

// "eisenstein", "ebasis", "character" or "all".
Report run_suite(const std::string& suite, const EvalConfig& cfg);
bool all_pass(const Report& r);
nlohmann::json report_to_json(const Report& r);

}  // namespace pm::num
