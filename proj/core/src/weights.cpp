#include "sw/weights.hpp"

#include <algorithm>

namespace sw {

SerreWeight canonicalize_weight(const FieldContext& ctx, std::vector<int> a, std::vector<int> b) {
    if (static_cast<int>(a.size()) != ctx.r || static_cast<int>(b.size()) != ctx.r)
        throw input_error("weight vectors must have length r");
    for (int bv : b)
        if (bv < 1 || bv > ctx.p) throw input_error("b entry out of range [1, p]");
    // a is defined through prod omega^a: encode, then take canonical digits.
    std::int64_t enc = 0;
    for (int j = 0; j < ctx.r; ++j)
        enc = mod_reduce(enc + mul_mod(mod_reduce(a[j], ctx.e1), ctx.omega_enc(1, j), ctx.e1), ctx.e1);
    DigitVector da = digits_of(ctx, CharExp{1, enc});
    return SerreWeight{da.d, std::move(b)};
}

SerreWeight weight_from_printed(const FieldContext& ctx, const std::vector<int>& a_printed,
                                const std::vector<int>& b_printed) {
    return canonicalize_weight(ctx, from_printed(a_printed), from_printed(b_printed));
}

RegularityClass classify_weight(const FieldContext& ctx, const SerreWeight& w) {
    bool regular = true, weakly = true;
    for (int bv : w.b) {
        if (bv < 2 || bv > ctx.p - 2) regular = false;
        if (bv < 1 || bv > ctx.p - 1) weakly = false;
    }
    if (regular) return RegularityClass::Regular;
    if (weakly) return RegularityClass::WeaklyRegularOnly;
    return RegularityClass::NotWeaklyRegular;
}

bool is_regular(const FieldContext& ctx, const SerreWeight& w) {
    return classify_weight(ctx, w) == RegularityClass::Regular;
}

bool is_weakly_regular(const FieldContext& ctx, const SerreWeight& w) {
    return classify_weight(ctx, w) != RegularityClass::NotWeaklyRegular;
}

CharExp weight_det_char(const FieldContext& ctx, const SerreWeight& w) {
    std::int64_t enc = 0;
    for (int j = 0; j < ctx.r; ++j)
        enc = mod_reduce(enc + mul_mod(w.a[j], ctx.omega_enc(1, j), ctx.e1), ctx.e1);
    return CharExp{1, enc};
}

CharExp b_partial_char(const FieldContext& ctx, const SerreWeight& w, std::uint32_t mask) {
    std::int64_t enc = 0;
    for (int j = 0; j < ctx.r; ++j)
        if (delta(mask, j, ctx.r))
            enc = mod_reduce(enc + mul_mod(w.b[j], ctx.omega_enc(1, j), ctx.e1), ctx.e1);
    return CharExp{1, enc};
}

namespace {

// Advances a printed-order vector through [lo, hi]^r, lexicographically.
bool next_vector(std::vector<int>& v, int lo, int hi) {
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) {
        if (v[k] < hi) {
            ++v[k];
            std::fill(v.begin() + k + 1, v.end(), lo);
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<SerreWeight> enumerate_weights(const FieldContext& ctx,
                                           std::optional<RegularityClass> class_filter) {
    std::vector<SerreWeight> out;
    std::vector<int> b_printed(ctx.r, 1);
    do {
        SerreWeight probe{std::vector<int>(ctx.r, 0), from_printed(b_printed)};
        if (class_filter && classify_weight(ctx, probe) != *class_filter) continue;
        std::vector<int> a_printed(ctx.r, 0);
        do {
            // Skip the all-(p-1) representative: it is the all-0 class.
            if (std::all_of(a_printed.begin(), a_printed.end(),
                            [&](int v) { return v == ctx.p - 1; }))
                continue;
            out.push_back(SerreWeight{from_printed(a_printed), probe.b});
        } while (next_vector(a_printed, 0, static_cast<int>(ctx.p) - 1));
    } while (next_vector(b_printed, 1, static_cast<int>(ctx.p)));
    return out;
}

std::vector<std::vector<int>> enumerate_regular_b(const FieldContext& ctx) {
    std::vector<std::vector<int>> out;
    if (ctx.p < 5) return out;
    std::vector<int> b_printed(ctx.r, 2);
    do {
        out.push_back(from_printed(b_printed));
    } while (next_vector(b_printed, 2, static_cast<int>(ctx.p) - 2));
    return out;
}

bool weight_less(const SerreWeight& lhs, const SerreWeight& rhs) {
    const auto lb = to_printed(lhs.b), rb = to_printed(rhs.b);
    if (lb != rb) return lb < rb;
    return to_printed(lhs.a) < to_printed(rhs.a);
}

}  // namespace sw
