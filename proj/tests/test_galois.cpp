#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sw/galois.hpp"

using namespace sw;

TEST_CASE("compatible_reducible") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight w = weight_from_printed(c51, {0}, {2});
    CHECK(compatible_reducible(c51, make_reducible(c51, 2, 0), w) ==
          std::vector<std::uint32_t>{1});
    CHECK(compatible_reducible(c51, make_reducible(c51, 1, 0), w).empty());

    const FieldContext c52 = make_context(5, 2);
    const SerreWeight w2 = weight_from_printed(c52, {0, 0}, {2, 2});
    // psi1 = omega_{tau_1}^2 omega_{tau_2}^2, psi2 trivial
    const std::int64_t psi1 = mod_reduce(2 * c52.omega_enc(1, 1) + 2 * c52.omega_enc(1, 2),
                                         c52.e1);
    const auto got = compatible_reducible(c52, make_reducible(c52, psi1, 0), w2);
    // oracle: brute-force scan of the 4 subsets
    std::vector<std::uint32_t> expect;
    for (std::uint32_t J = 0; J < 4; ++J) {
        std::int64_t s1 = 0, s2 = 0;
        for (int j = 0; j < 2; ++j)
            (delta(J, j, 2) ? s1 : s2) += 2 * c52.omega_enc(1, j);
        if (mod_reduce(s1, c52.e1) == psi1 && mod_reduce(s2, c52.e1) == 0) expect.push_back(J);
    }
    CHECK(got == expect);
    CHECK(got == std::vector<std::uint32_t>{3});  // J = S
}

TEST_CASE("compatible_irreducible") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight w = weight_from_printed(c51, {0}, {2});
    // theta = omega_{sigma_1}^2: the pair {10, 2} matches {theta, theta^5}
    const auto got = compatible_irreducible(c51, make_irreducible(c51, 10), w);
    CHECK(got == std::vector<std::uint32_t>{1, 2});
    CHECK(compatible_irreducible(c51, make_irreducible(c51, 9), w).empty());

    // complementation closure
    const FieldContext c52 = make_context(5, 2);
    const SerreWeight w2 = weight_from_printed(c52, {0, 0}, {2, 2});
    const std::int64_t th = mod_reduce(2 * c52.omega_enc(2, 1) + 2 * c52.omega_enc(2, 2), c52.e2);
    const auto wit = compatible_irreducible(c52, make_irreducible(c52, th), w2);
    CHECK(!wit.empty());
    const std::uint32_t all = full_mask(4);
    for (std::uint32_t J : wit) {
        const std::uint32_t comp = ~J & all;
        CHECK(std::find(wit.begin(), wit.end(), comp) != wit.end());
    }
}

TEST_CASE("irreducibility invariant") {
    const FieldContext c51 = make_context(5, 1);
    // exp 0 and exp 6 = omega_{sigma_1} omega_{sigma_2} are norm-inflated
    CHECK_THROWS_AS(make_irreducible(c51, 0), input_error);
    CHECK_THROWS_AS(make_irreducible(c51, 6), input_error);
    CHECK_NOTHROW(make_irreducible(c51, 10));
}

TEST_CASE("local_weight_set") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight target = weight_from_printed(c51, {0}, {2});

    const auto irr = local_weight_set(c51, IrreducibleData{CharExp{2, 10}}, true);
    CHECK(std::any_of(irr.begin(), irr.end(),
                      [&](const auto& e) { return e.weight == target; }));

    const auto red = local_weight_set(c51, make_reducible(c51, 2, 0), true);
    auto it = std::find_if(red.begin(), red.end(),
                           [&](const auto& e) { return e.weight == target; });
    REQUIRE(it != red.end());
    CHECK(it->witnesses == std::vector<std::uint32_t>{1});

    // both characters trivial: scan of the 8 regular weights finds nothing
    const auto trivial = local_weight_set(c51, make_reducible(c51, 0, 0), true);
    std::size_t oracle = 0;
    for (const SerreWeight& w : enumerate_weights(c51, RegularityClass::Regular))
        if (!compatible_reducible(c51, make_reducible(c51, 0, 0), w).empty()) ++oracle;
    CHECK(trivial.size() == oracle);
    CHECK(trivial.empty());
}

TEST_CASE("ordinarity") {
    const FieldContext c51 = make_context(5, 1);
    const SerreWeight w = weight_from_printed(c51, {0}, {2});
    CHECK(classify_ordinary(c51, make_reducible(c51, 2, 0), w) == Ordinarity::Ordinary);

    const FieldContext c52 = make_context(5, 2);
    const SerreWeight w2 = weight_from_printed(c52, {0, 0}, {2, 2});
    const ReducibleData d{CharExp{1, 2 * c52.omega_enc(1, 1)}, CharExp{1, 2 * c52.omega_enc(1, 2)}};
    CHECK(compatible_reducible(c52, d, w2) == std::vector<std::uint32_t>{2});  // J = {tau_1}
    CHECK(classify_ordinary(c52, d, w2) == Ordinarity::NonOrdinary);

    CHECK(classify_ordinary(c51, IrreducibleData{CharExp{2, 10}}, w) == Ordinarity::NonOrdinary);
    CHECK(classify_ordinary(c51, make_reducible(c51, 1, 0), w) == Ordinarity::NotInWeightSet);
}

TEST_CASE("global_weight_set") {
    const FieldContext c51 = make_context(5, 1);
    const Place a{c51, make_reducible(c51, 2, 0)};
    const Place b{c51, IrreducibleData{CharExp{2, 10}}};

    const auto single = global_weight_set({a}, true);
    const auto la = local_weight_set(c51, a.data, true);
    CHECK(single.size() == la.size());
    for (const auto& gw : single)
        if (gw.factors[0] == weight_from_printed(c51, {0}, {2}))
            CHECK(gw.ordinary_places == 1u);

    const auto both = global_weight_set({a, b}, true);
    const auto lb = local_weight_set(c51, b.data, true);
    CHECK(both.size() == la.size() * lb.size());
    for (const auto& gw : both) CHECK((gw.ordinary_places & 2u) == 0);
}

TEST_CASE("is_J_regular") {
    const FieldContext c51 = make_context(5, 1);
    {
        const auto got = is_J_regular(c51, make_reducible(c51, 2, 0), 1);
        REQUIRE(got.has_value());
        CHECK(to_printed(*got) == std::vector<int>{2});
    }
    CHECK(!is_J_regular(c51, make_reducible(c51, 1, 0), 1).has_value());

    const FieldContext c52 = make_context(5, 2);
    const std::int64_t diff =
        mod_reduce(2 * c52.omega_enc(1, 1) - 2 * c52.omega_enc(1, 2), c52.e1);
    const auto got = is_J_regular(c52, make_reducible(c52, diff, 0), 2);
    REQUIRE(got.has_value());
    CHECK(to_printed(*got) == std::vector<int>{2, 2});
}

TEST_CASE("witness uniqueness for regular weights") {
    // Within a fixed determinant class, a regular weight admits at most one
    // witness subset.
    const FieldContext ctx = make_context(5, 2);
    for (std::int64_t p1 = 0; p1 < ctx.e1; p1 += 5)
        for (std::int64_t p2 = 0; p2 < ctx.e1; p2 += 3) {
            const ReducibleData d = make_reducible(ctx, p1, p2);
            for (const SerreWeight& w : enumerate_weights(ctx, RegularityClass::Regular))
                CHECK(compatible_reducible(ctx, d, w).size() <= 1);
        }
}

TEST_CASE("irreducible weight set is Frobenius invariant") {
    const FieldContext ctx = make_context(5, 1);
    for (std::int64_t t = 0; t < ctx.e2; ++t) {
        const CharExp theta{2, t};
        if (frobenius_conjugate(ctx, theta) == theta) continue;
        const auto a = local_weight_set(ctx, IrreducibleData{theta}, true);
        const auto b =
            local_weight_set(ctx, IrreducibleData{frobenius_conjugate(ctx, theta)}, true);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].weight == b[i].weight);
            CHECK(a[i].witnesses == b[i].witnesses);
        }
    }
}

TEST_CASE("twist equivariance of witnesses") {
    const FieldContext ctx = make_context(7, 2);
    const SerreWeight w = weight_from_printed(ctx, {1, 2}, {3, 2});
    const ReducibleData base{b_partial_char(ctx, w, 1), b_partial_char(ctx, w, 2)};
    // witness set of (psi nu, a + digits(nu)) is independent of nu
    for (std::int64_t nu = 0; nu < ctx.e1; nu += 7) {
        const ReducibleData twisted{char_mul(ctx, base.psi1, CharExp{1, nu}),
                                    char_mul(ctx, base.psi2, CharExp{1, nu})};
        std::vector<int> a2(ctx.r);
        const DigitVector nd = digits_of(ctx, CharExp{1, nu});
        for (int j = 0; j < ctx.r; ++j) a2[j] = nd.d[j];
        const SerreWeight w0 = canonicalize_weight(ctx, std::vector<int>(ctx.r, 0), w.b);
        SerreWeight wt = w0;
        for (int j = 0; j < ctx.r; ++j) wt.a[j] += a2[j];
        wt = canonicalize_weight(ctx, wt.a, wt.b);
        CHECK(compatible_reducible(ctx, twisted, wt) ==
              compatible_reducible(ctx, base, w0));
    }
}
