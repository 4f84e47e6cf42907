#include "sw/arithmetic.hpp"

namespace sw {

namespace {

void check_niveau(int niveau) {
    if (niveau != 1 && niveau != 2) throw input_error("niveau must be 1 or 2");
}

}  // namespace

CharExp make_char(const FieldContext& ctx, int niveau, std::int64_t exp) {
    check_niveau(niveau);
    return CharExp{niveau, mod_reduce(exp, ctx.modulus(niveau))};
}

CharExp omega(const FieldContext& ctx, int niveau, int index) {
    check_niveau(niveau);
    return CharExp{niveau, ctx.omega_enc(niveau, index)};
}

int digit_at(const DigitVector& v, int j) {
    const int n = static_cast<int>(v.d.size());
    return v.d[((j % n) + n) % n];
}

CharExp encode_char(const FieldContext& ctx, const DigitVector& digits) {
    check_niveau(digits.niveau);
    const int n = ctx.n(digits.niveau);
    if (static_cast<int>(digits.d.size()) != n)
        throw input_error("digit vector has wrong length for this niveau");
    const std::int64_t m = ctx.modulus(digits.niveau);
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) {
        const int dj = digits.d[j];
        if (dj < 0 || dj >= ctx.p) throw input_error("digit out of range [0, p-1]");
        acc = mod_reduce(acc + mul_mod(dj, ctx.omega_enc(digits.niveau, j), m), m);
    }
    return CharExp{digits.niveau, acc};
}

DigitVector digits_of(const FieldContext& ctx, CharExp c) {
    check_niveau(c.niveau);
    const int n = ctx.n(c.niveau);
    DigitVector out{c.niveau, std::vector<int>(n, 0)};
    std::int64_t v = mod_reduce(c.exp, ctx.modulus(c.niveau));
    // v = sum_j d[j] * p^{(n-j) mod n}; peel base-p digits from the low end.
    // The digit of p^t belongs to index (n - t) mod n.
    for (int t = 0; t < n; ++t) {
        out.d[(n - t) % n] = static_cast<int>(v % ctx.p);
        v /= ctx.p;
    }
    return out;
}

CharExp char_mul(const FieldContext& ctx, CharExp a, CharExp b) {
    if (a.niveau != b.niveau) throw input_error("niveau mismatch in char_mul");
    const std::int64_t m = ctx.modulus(a.niveau);
    return CharExp{a.niveau, mod_reduce(a.exp + b.exp, m)};
}

CharExp char_pow(const FieldContext& ctx, CharExp a, std::int64_t n) {
    const std::int64_t m = ctx.modulus(a.niveau);
    return CharExp{a.niveau, mul_mod(mod_reduce(a.exp, m), mod_reduce(n, m), m)};
}

CharExp char_inv(const FieldContext& ctx, CharExp a) {
    const std::int64_t m = ctx.modulus(a.niveau);
    return CharExp{a.niveau, mod_reduce(-a.exp, m)};
}

CharExp frobenius_conjugate(const FieldContext& ctx, CharExp a) {
    return char_pow(ctx, a, ctx.pr);
}

CharExp inflate_to_niveau2(const FieldContext& ctx, CharExp c) {
    if (c.niveau != 1) throw input_error("inflate_to_niveau2 expects a niveau-1 character");
    return CharExp{2, mul_mod(c.exp, 1 + ctx.pr, ctx.e2)};
}

bool is_norm_inflated(const FieldContext& ctx, CharExp c) {
    if (c.niveau != 2) throw input_error("is_norm_inflated expects a niveau-2 character");
    return frobenius_conjugate(ctx, c) == c;
}

}  // namespace sw
