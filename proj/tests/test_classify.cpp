#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polymaass/classify.hpp"
#include "polymaass/specsolve.hpp"

using namespace pm;

namespace {

Form E(int k, Rational s0, int t) { return laurent_form(Family::eisenstein(), k, s0, t, Scalar(factorial(t))); }

std::vector<int> weights_for(BKCase c) {
    if (c <= BKCase::Id) return {-4, -3, -2, -1, 0};
    if (c <= BKCase::IIb) return {1};
    return {2, 3, 4, 5};
}

}  // namespace

TEST_CASE("weight context") {
    CHECK(WeightContext::of(-3).l == 4);
    CHECK(WeightContext::of(1).l == 0);
    CHECK(WeightContext::of(5).l == 4);
    for (int k = -6; k <= 6; ++k) {
        const WeightContext c = WeightContext::of(k);
        CHECK(c.gamma == k * k - 2 * k);
        CHECK(c.gamma == c.l * c.l - 1);
    }
}

TEST_CASE("exact depth") {
    for (int m = 0; m <= 4; ++m) CHECK(exact_depth(make_e_atom(m, m)) == 0);
    CHECK_THROWS_AS(exact_depth(make_e_atom(2, 0)), DomainError);
    CHECK(exact_depth(construct_case(BKCase::Ia, -3, 2)) == 2);
    CHECK_THROWS_AS(exact_depth(E(0, Rational(2), 0)), DomainError);
    CHECK_THROWS_AS(exact_depth(E(-1, Rational(1, 2), 0), 40), DomainError);
    CHECK(exact_depth(E(0, Rational(0), 3)) == 3);
}

TEST_CASE("classification examples") {
    const CaseLabel ia = classify_bk(construct_case(BKCase::Ia, -3, 2));
    CHECK(ia.bk == BKCase::Ia);
    CHECK(ia.repr == ReprCase::GIa);
    CHECK(ia.depth == 2);
    CHECK(ia.context.l == 4);

    const CaseLabel e2 = classify_bk(E(2, Rational(0), 0));
    CHECK(e2.bk == BKCase::IIIb);
    CHECK(e2.repr == ReprCase::GIIb);
    CHECK(e2.depth == 0);

    const CaseLabel hol = classify_bk(construct_case(BKCase::IIIa, 4, 0));
    CHECK(hol.bk == BKCase::IIIa);
    CHECK(hol.repr == ReprCase::GIIa);
}

TEST_CASE("round trip over the construction grid") {
    for (BKCase c : kAllBKCases)
        for (int k : weights_for(c))
            for (int d = c == BKCase::IIId ? 1 : 0; d <= 2; ++d) {
                CAPTURE(to_string(c));
                CAPTURE(k);
                CAPTURE(d);
                const CaseLabel got = classify_bk(construct_case(c, k, d));
                CHECK(got.bk == c);
                CHECK(got.depth == d);
                CHECK(got.context.k == k);
            }
    for (int k = 2; k <= 5; ++k) CHECK_THROWS_AS(construct_case(BKCase::IIId, k, 0), DomainError);
}

TEST_CASE("implication chain in weight above one") {
    for (BKCase c : {BKCase::IIIa, BKCase::IIIb, BKCase::IIIc, BKCase::IIId})
        for (int k = 2; k <= 4; ++k)
            for (int d = 1; d <= 2; ++d) {
                const Form f = expand_pending(construct_case(c, k, d));
                const Form top = apply_laplace(f, d);
                const bool a = is_zero(apply_lowering(apply_laplace(f, d - 1), k));
                const bool b = is_zero(apply_lowering(top));
                const bool c3 = is_zero(apply_lowering(top, k));
                CAPTURE(to_string(c));
                CHECK((!a || b));
                CHECK((!b || c3));
            }
}

TEST_CASE("label translation is a bijection") {
    std::set<ReprCase> seen;
    for (BKCase c : kAllBKCases) {
        seen.insert(to_repr(c));
        CHECK(to_bk(to_repr(c)) == c);
        CHECK(parse_bk(to_string(c)) == c);
        CHECK(parse_repr(to_string(to_repr(c))) == to_repr(c));
    }
    CHECK(seen.size() == 10);
    CHECK(to_repr(BKCase::Ib) == ReprCase::GIc);
    CHECK(to_repr(BKCase::Id) == ReprCase::GIb);
    CHECK_FALSE(parse_bk("IV"));
}

TEST_CASE("expected dimension vectors") {
    CHECK(expected_dimension_vector(ReprCase::GIa, 2) == std::vector<int>{2, 3, 2});
    CHECK_THROWS_AS(expected_dimension_vector(ReprCase::GIId, 0), DomainError);
    CHECK(expected_dimension_vector(ReprCase::GIId, 1) == std::vector<int>{0, 1, 2});
    CHECK(expected_dimension_vector(ReprCase::CIa, 0) == std::vector<int>{0, 1});
    CHECK(expected_dimension_vector(ReprCase::CIb, 3) == std::vector<int>{4, 4});
    CHECK(expected_dimension_vector(ReprCase::GIIa, 1) == std::vector<int>{1, 1, 2});
}

TEST_CASE("label JSON") {
    const CaseLabel c = classify_bk(E(2, Rational(0), 0));
    const nlohmann::json j = label_to_json(c);
    CHECK(j["bk"] == "IIIb");
    CHECK(j["repr"] == "GIIb");
    CHECK(j["depth"] == 0);
    CHECK(j["l"] == 1);
    CHECK(j["gamma"] == 0);
}
