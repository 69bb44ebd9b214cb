#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polymaass/classify.hpp"
#include "polymaass/numcheck.hpp"
#include "polymaass/quiverrep.hpp"
#include "polymaass/specsolve.hpp"
#include "polymaass/symcalc.hpp"

using json = nlohmann::json;
using namespace pm;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

constexpr const char* kPoleTableEnv = "MAASS_POLE_TABLE";

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    bool json = false;
    std::string pole_table;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "Emit JSON instead of text");
    cmd->add_option("--pole-table", c.pole_table, std::string("Special value table (JSON); overrides $") + kPoleTableEnv);
}

void load_pole_table(const Common& c) {
    std::string path = c.pole_table;
    if (path.empty())
        if (const char* env = std::getenv(kPoleTableEnv)) path = env;
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open pole table " + path);
    set_special_values(SpecialValueTable::from_json(json::parse(in)));
}

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    return json::parse(in);
}

void print_form(const Form& f, const Common& c) {
    if (c.json) std::cout << form_to_json(f).dump(2) << "\n";
    else std::cout << pretty(f) << "\n";
}

std::string dims_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// ---- construct -----------------------------------------------------------------

std::string case_family(BKCase c) {
    switch (c) {
    case BKCase::Ia:
    case BKCase::Id:
    case BKCase::IIIa:
    case BKCase::IIIb: return "eisenstein";
    case BKCase::IIb: return "incoherent";
    default: return "poincare";
    }
}

struct ConstructArgs {
    std::string label;
    int k = 0;
    int d = 0;
    std::string family;
    long index = -1;
    long disc = 3;
};

void run_construct(const ConstructArgs& a, const Common& c) {
    const auto label = parse_bk(a.label);
    if (!label) throw CLI::ValidationError("--case", "unknown BK label " + a.label);
    if (!a.family.empty() && a.family != case_family(*label))
        throw DomainError("case " + a.label + " is built from the " + case_family(*label) + " family");
    CaseParams params;
    params.poincare_index = a.index;
    params.disc = a.disc;
    print_form(construct_case(*label, a.k, a.d, params), c);
}

// ---- solve ---------------------------------------------------------------------

struct SolveArgs {
    int k = 0;
    int m = 0;
    std::string branch = "L";
    int d = 0;
};

void run_solve(const SolveArgs& a, const Common& c) {
    const Branch br = a.branch == "L" ? Branch::L : Branch::R;
    const GradedVector w = solve_wd(a.k, a.m, br, a.d);
    if (c.json) {
        std::cout << graded_to_json(w).dump(2) << "\n";
        return;
    }
    for (int t = 0; t <= w.d; ++t) {
        std::cout << "T^" << t << ":";
        for (Eigen::Index r = 0; r < w.layers[t].size(); ++r) std::cout << " " << w.layers[t](r);
        std::cout << "\n";
    }
    std::cout << "eigen:";
    for (const auto& q : w.eigen) std::cout << " " << q;
    std::cout << "\n";
}

// ---- apply / expand / classify -------------------------------------------------

struct ApplyArgs {
    std::string op;
    int power = 1;
    std::string in;
};

void run_apply(const ApplyArgs& a, const Common& c) {
    Form f = form_from_json(read_json(a.in));
    if (a.power < 0) throw CLI::ValidationError("--power", "must be non-negative");
    if (a.op == "raising") f = apply_raising(f, a.power);
    else if (a.op == "lowering") f = apply_lowering(f, a.power);
    else if (a.op == "laplace") f = apply_laplace(f, a.power);
    else
        for (int i = 0; i < a.power; ++i) f = a.op == "flip" ? apply_flip(f) : apply_mirror(f);
    print_form(f, c);
}

void run_classify(const std::string& in, int bound, const Common& c) {
    const CaseLabel lab = classify_bk(form_from_json(read_json(in)), bound);
    std::optional<std::vector<int>> dims;
    if (!(lab.repr == ReprCase::GIId && lab.depth == 0)) dims = expected_dimension_vector(lab);
    if (c.json) {
        json j = label_to_json(lab);
        if (dims) j["dims"] = *dims;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << to_string(lab.bk) << " (" << to_string(lab.repr) << ") depth " << lab.depth << ", k=" << lab.context.k
              << ", l=" << lab.context.l << ", gamma=" << lab.context.gamma;
    if (dims) std::cout << ", dimension vector " << dims_str(*dims);
    std::cout << "\n";
}

// ---- quiver --------------------------------------------------------------------

struct QuiverArgs {
    std::string quiver = "gelfand";
    std::string type;
    std::string which;
    int depth = 0;
    std::string in;
    bool second = false;
    bool iso = false;
    std::uint64_t seed = 1;
    int l = 1;
    int n = 2;
};

void print_rep(const QuiverRep& rep, const Common& c) {
    const QuiverInvariants inv = invariants_of(rep);
    if (c.json) {
        json j = rep_to_json(rep);
        j["invariants"] = {{"dims", inv.dims}, {"degrees", inv.degrees}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << (rep.quiver == QuiverKind::Gelfand ? "gelfand" : "cyclic") << " dims " << dims_str(inv.dims)
              << " nilpotency " << dims_str(inv.degrees) << "\n";
    auto show = [](const char* name, const RMatrix& m) {
        std::cout << name << " =";
        if (m.size() == 0) std::cout << " (empty)";
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            std::cout << (r ? "\n     " : " ") << "[";
            for (Eigen::Index col = 0; col < m.cols(); ++col) std::cout << (col ? " " : "") << m(r, col);
            std::cout << "]";
        }
        std::cout << "\n";
    };
    show("A_-", rep.A_minus);
    show("A_+", rep.A_plus);
    if (rep.quiver == QuiverKind::Gelfand) {
        show("B_-", rep.B_minus);
        show("B_+", rep.B_plus);
    }
}

QuiverKind parse_quiver(const std::string& s) {
    if (s == "gelfand") return QuiverKind::Gelfand;
    if (s == "cyclic") return QuiverKind::Cyclic;
    throw CLI::ValidationError("--quiver", "expected gelfand or cyclic");
}

void run_quiver_build(const QuiverArgs& a, const Common& c) {
    const auto type = parse_node_type(a.type);
    if (!type) throw CLI::ValidationError("--type", "expected star, plus or minus");
    if (a.which.size() != 1) throw CLI::ValidationError("--case", "expected one of a, b, c, d");
    print_rep(build_cyclic_module(parse_quiver(a.quiver), *type, a.which[0], a.depth), c);
}

void run_quiver_classify(const QuiverArgs& a, const Common& c) {
    const QuiverRep rep = rep_from_json(read_json(a.in));
    const CyclicClass cl = classify_cyclic(rep, a.seed);
    if (c.json) {
        std::cout << json{{"type", to_string(cl.type)}, {"case", std::string(1, cl.which)}, {"d", cl.d}}.dump(2) << "\n";
        return;
    }
    std::cout << "type " << to_string(cl.type) << ", case " << cl.which << ", d = " << cl.d << "\n";
}

void run_quiver_from_hc(const QuiverArgs& a, const Common& c) {
    const HCFragment frag = fragment_from_json(read_json(a.in));
    if (a.iso) {
        const IsoWitness w = iso_two_descriptions(frag);
        if (c.json) {
            std::cout << json{{"T", matrix_to_json(w.T)}, {"X_star", matrix_to_json(w.X_star)},
                              {"identity", matrix_to_json(w.identity)}}
                             .dump(2)
                      << "\n";
            return;
        }
        std::cout << "isomorphism verified: T = p(C_0) of size " << w.T.rows() << ", X_* of size " << w.X_star.rows()
                  << "x" << w.X_star.cols() << "\n";
        return;
    }
    print_rep(a.second ? second_description(frag) : hc_to_quiver(frag), c);
}

void run_quiver_random(const QuiverArgs& a, const Common&) {
    std::cout << fragment_to_json(random_fragment(a.l, a.n, a.seed)).dump(2) << "\n";
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    num::EvalConfig cfg;
    bool no_richardson = false;
};

void run_verify(VerifyArgs a, const Common& c) {
    a.cfg.richardson = !a.no_richardson;
    const num::Report report = num::run_suite(a.suite, a.cfg);
    if (c.json) {
        std::cout << num::report_to_json(report).dump(2) << "\n";
    } else {
        for (const auto& e : report)
            std::cout << (e.pass ? "ok   " : "FAIL ") << e.identity << " " << e.point << " residual " << e.residual
                      << "\n";
    }
    if (!num::all_pass(report)) throw VerificationFailure("verification failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus for polyharmonic Maass forms and Gelfand quiver modules"};
    app.require_subcommand(1);
    Common common;
    std::function<void()> action;

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a form realizing a BK case");
    construct->add_option("--case", ca.label, "BK label (Ia..IIId)")->required();
    construct->add_option("--k", ca.k, "Weight")->required();
    construct->add_option("--d", ca.d, "Depth")->required();
    construct->add_option("--family", ca.family, "Family check")
        ->check(CLI::IsMember({"eisenstein", "poincare", "incoherent"}));
    construct->add_option("--index", ca.index, "Poincare index n < 0");
    construct->add_option("--disc", ca.disc, "Discriminant D of the incoherent series");
    add_common(construct, common);
    construct->callback([&] { action = [&] { run_construct(ca, common); }; });

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Raw spectral-derivative solver output");
    solve->add_option("--k", sa.k)->required();
    solve->add_option("--m", sa.m)->required()->check(CLI::NonNegativeNumber);
    solve->add_option("--branch", sa.branch)->check(CLI::IsMember({"L", "R"}));
    solve->add_option("--d", sa.d)->required()->check(CLI::NonNegativeNumber);
    add_common(solve, common);
    solve->callback([&] { action = [&] { run_solve(sa, common); }; });

    ApplyArgs aa;
    auto* apply = app.add_subcommand("apply", "Apply an operator to a form");
    apply->add_option("--op", aa.op)->required()->check(CLI::IsMember({"raising", "lowering", "laplace", "flip", "mirror"}));
    apply->add_option("--power", aa.power);
    apply->add_option("--in", aa.in, "Form JSON file, - for stdin")->required();
    add_common(apply, common);
    apply->callback([&] { action = [&] { run_apply(aa, common); }; });

    std::string expand_in;
    auto* expand = app.add_subcommand("expand", "Unfold pending operator powers");
    expand->add_option("--in", expand_in)->required();
    add_common(expand, common);
    expand->callback([&] { action = [&] { print_form(expand_pending(form_from_json(read_json(expand_in))), common); }; });

    std::string classify_in;
    int bound = kDefaultDepthBound;
    auto* classify = app.add_subcommand("classify", "Exact depth and case label of a form");
    classify->add_option("--in", classify_in)->required();
    classify->add_option("--depth-bound", bound)->check(CLI::NonNegativeNumber);
    add_common(classify, common);
    classify->callback([&] { action = [&] { run_classify(classify_in, bound, common); }; });

    QuiverArgs qa;
    auto* quiver = app.add_subcommand("quiver", "Quiver representations");
    quiver->require_subcommand(1);
    auto* qbuild = quiver->add_subcommand("build", "Cyclic module of a given type and case");
    qbuild->add_option("--quiver", qa.quiver)->check(CLI::IsMember({"gelfand", "cyclic"}));
    qbuild->add_option("--type", qa.type)->required();
    qbuild->add_option("--case", qa.which)->required();
    qbuild->add_option("--depth", qa.depth)->required();
    add_common(qbuild, common);
    qbuild->callback([&] { action = [&] { run_quiver_build(qa, common); }; });
    auto* qclass = quiver->add_subcommand("classify", "Type, case and d of a cyclic representation");
    qclass->add_option("--in", qa.in)->required();
    qclass->add_option("--seed", qa.seed, "Seed for the generator search");
    add_common(qclass, common);
    qclass->callback([&] { action = [&] { run_quiver_classify(qa, common); }; });
    auto* qhc = quiver->add_subcommand("from-hc", "Quiver representation of a Harish-Chandra fragment");
    qhc->add_option("--in", qa.in)->required();
    qhc->add_flag("--second", qa.second, "Use the second description");
    qhc->add_flag("--iso", qa.iso, "Verify the isomorphism between both descriptions");
    add_common(qhc, common);
    qhc->callback([&] { action = [&] { run_quiver_from_hc(qa, common); }; });
    auto* qrand = quiver->add_subcommand("random-hc", "Seeded Casimir-consistent fragment (JSON)");
    qrand->add_option("--l", qa.l)->check(CLI::PositiveNumber);
    qrand->add_option("--n", qa.n)->check(CLI::PositiveNumber);
    qrand->add_option("--seed", qa.seed);
    qrand->callback([&] { action = [&] { run_quiver_random(qa, common); }; });

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Numeric identity checks on truncated series");
    verify->add_option("--suite", va.suite)->check(CLI::IsMember({"eisenstein", "ebasis", "character", "all"}));
    verify->add_option("--n", va.cfg.N, "Coset truncation")->check(CLI::PositiveNumber);
    verify->add_option("--tol", va.cfg.tolerance)->check(CLI::PositiveNumber);
    verify->add_option("--step", va.cfg.h, "Finite-difference step h")->check(CLI::PositiveNumber);
    verify->add_flag("--no-richardson", va.no_richardson);
    add_common(verify, common);
    verify->callback([&] { action = [&] { run_verify(va, common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        load_pole_table(common);
        action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
