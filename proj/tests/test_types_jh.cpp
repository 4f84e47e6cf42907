#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sw/types_jh.hpp"

using namespace sw;

namespace {

std::multiset<std::pair<std::vector<int>, std::vector<int>>> weight_multiset(
    const std::vector<JhFactor>& fs) {
    std::multiset<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& f : fs)
        if (f.weight) out.insert({f.weight->a, f.weight->b});
    return out;
}

}  // namespace

TEST_CASE("type_reducible") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight w = weight_from_printed(c51, {0}, {2});
    {
        const ReducibleType t = type_reducible(c51, w, 1);  // J = S
        CHECK(to_printed(t.c.c) == std::vector<int>{1});
        CHECK(t.chi.exp == 0);
        CHECK(t.type == make_principal_series(c51, CharExp{1, 0}, CharExp{1, 1}));
    }
    {
        const ReducibleType t = type_reducible(c51, w, 0);  // J empty
        CHECK(to_printed(t.c.c) == std::vector<int>{3});
        CHECK(t.chi.exp == 1);
        CHECK(t.type == make_principal_series(c51, CharExp{1, 1}, CharExp{1, 0}));
    }
    const FieldContext c52 = make_context(5, 2);
    const SerreWeight w2 = weight_from_printed(c52, {0, 0}, {2, 2});
    const ReducibleType t = type_reducible(c52, w2, 2);  // J = {tau_1}
    CHECK(to_printed(t.c.c) == std::vector<int>{2, 2});

    CHECK_THROWS_AS(type_reducible(c51, weight_from_printed(c51, {0}, {4}), 1), input_error);
}

TEST_CASE("type_irreducible") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight w = weight_from_printed(c51, {0}, {2});
    {
        const IrreducibleType t = type_irreducible(c51, w, 2);  // J = {sigma_1}
        CHECK(t.K_J == 1);  // K_J = {tau_1} = S
        CHECK(to_printed(t.c.c) == std::vector<int>{2});
        CHECK(t.psi.exp == 3);
        CHECK(t.type == make_cuspidal(c51, CharExp{2, 9}));
        // theta != theta^{p^r}
        CHECK(frobenius_conjugate(c51, CharExp{2, 9}).exp == 21);
    }
    {
        const IrreducibleType t = type_irreducible(c51, w, 1);  // J = {sigma_0}
        CHECK(t.K_J == 0);
        CHECK(to_printed(t.c.c) == std::vector<int>{2});
        CHECK(t.psi.exp == 1);
    }
    CHECK_THROWS_AS(type_irreducible(c51, w, 3), input_error);  // not full
}

TEST_CASE("type_irreducible_simple") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight w = weight_from_printed(c51, {0}, {2});
    const InertialType a = type_irreducible_simple(c51, w, 2);
    CHECK(a == make_cuspidal(c51, CharExp{2, 9}));
    CHECK(a.first.exp == 9);
    CHECK(a.second.exp == 21);
    CHECK(type_irreducible_simple(c51, w, 1) == a);  // complement, same pair
    const SerreWeight w1 = weight_from_printed(c51, {1}, {2});
    const InertialType tw = type_irreducible_simple(c51, w1, 2);
    CHECK(tw == make_cuspidal(c51, CharExp{2, 15}));
    CHECK(tw.first.exp == 3);  // pair {15, 3}, stored small-first
    CHECK(tw.second.exp == 15);
}

TEST_CASE("tau-prime identity on a small sweep") {
    for (auto [p, r] : {std::pair<std::int64_t, int>{5, 1}, {5, 2}, {7, 2}}) {
        const FieldContext ctx = make_context(p, r);
        for (const auto& b : enumerate_regular_b(ctx)) {
            const SerreWeight w{std::vector<int>(ctx.r, 0), b};
            for (std::uint32_t J : full_subsets(ctx.r))
                CHECK(type_irreducible(ctx, w, J).type == type_irreducible_simple(ctx, w, J));
        }
    }
}

TEST_CASE("jh_principal") {
    const FieldContext c51 = make_context(5, 1);
    {
        const auto fs = jh_principal(c51, CharExp{1, 0}, CharExp{1, 1});
        REQUIRE(fs.size() == 2);
        REQUIRE(fs[0].weight.has_value());
        REQUIRE(fs[1].weight.has_value());
        CHECK(*fs[0].weight == weight_from_printed(c51, {1}, {4}));  // K empty
        CHECK(*fs[1].weight == weight_from_printed(c51, {0}, {2}));  // K = S
        CHECK(jh_total_dim(fs) == 6);
    }
    {
        const auto fs = jh_principal(c51, CharExp{1, 2}, CharExp{1, 3});
        CHECK(*fs[0].weight == weight_from_printed(c51, {3}, {4}));
        CHECK(*fs[1].weight == weight_from_printed(c51, {2}, {2}));
    }
    const FieldContext c52 = make_context(5, 2);
    {
        const auto fs = jh_principal(c52, CharExp{1, 0}, CharExp{1, 6});  // c = (1,1)
        CHECK(fs.size() == 4);
        CHECK(jh_total_dim(fs) == 26);
    }
    CHECK_THROWS_AS(jh_principal(c51, CharExp{1, 2}, CharExp{1, 2}), unsupported_error);
}

TEST_CASE("jh_principal is symmetric and twist-equivariant") {
    const FieldContext ctx = make_context(7, 2);
    for (std::int64_t x : {0L, 5L, 11L})
        for (std::int64_t y : {1L, 20L, 33L}) {
            if (x == y) continue;
            CHECK(weight_multiset(jh_principal(ctx, CharExp{1, x}, CharExp{1, y})) ==
                  weight_multiset(jh_principal(ctx, CharExp{1, y}, CharExp{1, x})));
        }
}

TEST_CASE("jh_principal twist equivariance") {
    const FieldContext ctx = make_context(7, 2);
    const CharExp x1{1, 3}, x2{1, 17};
    const auto base = jh_principal(ctx, x1, x2);
    for (std::int64_t nu = 1; nu < ctx.e1; nu += 5) {
        const auto tw = jh_principal(ctx, char_mul(ctx, x1, CharExp{1, nu}),
                                     char_mul(ctx, x2, CharExp{1, nu}));
        REQUIRE(tw.size() == base.size());
        for (std::size_t k = 0; k < base.size(); ++k) {
            REQUIRE(base[k].weight.has_value() == tw[k].weight.has_value());
            if (!base[k].weight) continue;
            CHECK(tw[k].weight->b == base[k].weight->b);
            CHECK(weight_det_char(ctx, *tw[k].weight) ==
                  char_mul(ctx, weight_det_char(ctx, *base[k].weight), CharExp{1, nu}));
        }
    }
}

TEST_CASE("jh dimension identity over all principal-series inputs") {
    for (auto [p, r] : {std::pair<std::int64_t, int>{5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
        const FieldContext ctx = make_context(p, r);
        for (std::int64_t e = 1; e < ctx.e1; ++e)
            CHECK(jh_total_dim(jh_principal(ctx, CharExp{1, 0}, CharExp{1, e})) == ctx.pr + 1);
    }
}

TEST_CASE("jh_cuspidal") {
    const FieldContext c51 = make_context(5, 1);
    {
        const auto fs = jh_cuspidal(c51, CVector{{2}}, CharExp{1, 0});
        REQUIRE(fs.size() == 2);
        CHECK(*fs[0].weight == weight_from_printed(c51, {3}, {2}));  // K empty
        CHECK(*fs[1].weight == weight_from_printed(c51, {1}, {2}));  // K = {0}
        CHECK(jh_total_dim(fs) == 4);
    }
    {
        const auto fs = jh_cuspidal(c51, CVector{{2}}, CharExp{1, 3});
        CHECK(*fs[0].weight == weight_from_printed(c51, {2}, {2}));
        CHECK(*fs[1].weight == weight_from_printed(c51, {0}, {2}));
    }
}

TEST_CASE("the weight reappears at K = J and K = K_J") {
    for (auto [p, r] : {std::pair<std::int64_t, int>{5, 1}, {5, 2}, {7, 2}}) {
        const FieldContext ctx = make_context(p, r);
        for (const auto& b : enumerate_regular_b(ctx)) {
            const SerreWeight w{std::vector<int>(ctx.r, 0), b};
            for (std::uint32_t J = 0; J < (1u << ctx.r); ++J) {
                const ReducibleType t = type_reducible(ctx, w, J);
                const auto fs = jh_principal(ctx, t.type.first, t.type.second);
                bool found = false;
                for (const auto& f : fs)
                    if (f.weight && *f.weight == w) found = true;
                CHECK(found);
            }
            for (std::uint32_t J : full_subsets(ctx.r)) {
                const IrreducibleType t = type_irreducible(ctx, w, J);
                const auto fs = jh_cuspidal(ctx, t.c, t.psi);
                REQUIRE(fs[t.K_J].weight.has_value());
                CHECK(*fs[t.K_J].weight == w);
            }
        }
    }
}

TEST_CASE("verify_unique_jh") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight w = weight_from_printed(c51, {0}, {2});
    {
        const auto rep = verify_unique_jh(c51, make_reducible(c51, 2, 0), w, 1);
        CHECK(rep.pass);
        CHECK(rep.compatible_K == std::vector<std::uint32_t>{1});
    }
    {
        const auto rep = verify_unique_jh(c51, IrreducibleData{CharExp{2, 10}}, w, 2);
        CHECK(rep.pass);
        REQUIRE(rep.compatible_K.size() == 1);
        REQUIRE(rep.factors[rep.compatible_K[0]].weight.has_value());
        CHECK(*rep.factors[rep.compatible_K[0]].weight == w);
    }
    // invalid witness
    CHECK_THROWS_AS(verify_unique_jh(c51, make_reducible(c51, 1, 0), w, 1), input_error);
    CHECK_THROWS_AS(verify_unique_jh(c51, make_reducible(c51, 2, 0), w, 0), input_error);
}

TEST_CASE("weak regularity of factors, small sweep") {
    CHECK(weak_regularity_violations(make_context(5, 1)).empty());
    CHECK(weak_regularity_violations(make_context(5, 2)).empty());
    CHECK(weak_regularity_violations(make_context(7, 1)).empty());
}
