#include "sw/galois.hpp"

#include <algorithm>

namespace sw {

ReducibleData make_reducible(const FieldContext& ctx, std::int64_t psi1, std::int64_t psi2) {
    return ReducibleData{make_char(ctx, 1, psi1), make_char(ctx, 1, psi2)};
}

IrreducibleData make_irreducible(const FieldContext& ctx, std::int64_t theta) {
    CharExp t = make_char(ctx, 2, theta);
    if (frobenius_conjugate(ctx, t) == t)
        throw input_error("theta is fixed by theta -> theta^{p^r}; the induced "
                          "representation is reducible");
    return IrreducibleData{t};
}

std::vector<std::uint32_t> compatible_reducible(const FieldContext& ctx, const ReducibleData& data,
                                                const SerreWeight& w) {
    std::vector<std::uint32_t> out;
    const CharExp det = weight_det_char(ctx, w);
    for (std::uint32_t J = 0; J < (1u << ctx.r); ++J) {
        const CharExp lhs1 = char_mul(ctx, det, b_partial_char(ctx, w, J));
        const CharExp lhs2 = char_mul(ctx, det, b_partial_char(ctx, w, ~J & full_mask(ctx.r)));
        if (lhs1 == data.psi1 && lhs2 == data.psi2) out.push_back(J);
    }
    return out;
}

namespace {

/// prod_{sigma in mask} omega_sigma^{b_{pi(sigma)}} as a niveau-2 character.
CharExp b_partial_char2(const FieldContext& ctx, const SerreWeight& w, std::uint32_t mask) {
    std::int64_t enc = 0;
    for (int k = 0; k < 2 * ctx.r; ++k)
        if (delta(mask, k, 2 * ctx.r))
            enc = mod_reduce(enc + mul_mod(w.b_at(k % ctx.r), ctx.omega_enc(2, k), ctx.e2), ctx.e2);
    return CharExp{2, enc};
}

}  // namespace

std::vector<std::uint32_t> compatible_irreducible(const FieldContext& ctx,
                                                  const IrreducibleData& data,
                                                  const SerreWeight& w) {
    std::vector<std::uint32_t> out;
    const CharExp base = inflate_to_niveau2(ctx, weight_det_char(ctx, w));
    const CharExp conj = frobenius_conjugate(ctx, data.theta);
    for (std::uint32_t J : full_subsets(ctx.r)) {
        const CharExp d1 = char_mul(ctx, base, b_partial_char2(ctx, w, J));
        const CharExp d2 = char_mul(ctx, base, b_partial_char2(ctx, w, ~J & full_mask(2 * ctx.r)));
        const bool match = (d1 == data.theta && d2 == conj) || (d1 == conj && d2 == data.theta);
        if (match) out.push_back(J);
    }
    return out;
}

std::vector<std::uint32_t> compatible_witnesses(const FieldContext& ctx,
                                                const LocalGaloisData& data, const SerreWeight& w) {
    if (const auto* red = std::get_if<ReducibleData>(&data))
        return compatible_reducible(ctx, *red, w);
    return compatible_irreducible(ctx, std::get<IrreducibleData>(data), w);
}

std::vector<WeightWithWitnesses> local_weight_set(const FieldContext& ctx,
                                                  const LocalGaloisData& data, bool regular_only) {
    std::vector<WeightWithWitnesses> out;
    auto filter = regular_only ? std::optional<RegularityClass>(RegularityClass::Regular)
                               : std::nullopt;
    for (const SerreWeight& w : enumerate_weights(ctx, filter)) {
        auto wit = compatible_witnesses(ctx, data, w);
        if (!wit.empty()) out.push_back(WeightWithWitnesses{w, std::move(wit)});
    }
    return out;
}

Ordinarity classify_ordinary(const FieldContext& ctx, const LocalGaloisData& data,
                             const SerreWeight& w) {
    if (std::holds_alternative<IrreducibleData>(data)) {
        return compatible_witnesses(ctx, data, w).empty() ? Ordinarity::NotInWeightSet
                                                          : Ordinarity::NonOrdinary;
    }
    const auto wit = compatible_witnesses(ctx, data, w);
    if (wit.empty()) return Ordinarity::NotInWeightSet;
    const std::uint32_t all = full_mask(ctx.r);
    for (std::uint32_t J : wit)
        if (J == 0 || J == all) return Ordinarity::Ordinary;
    return Ordinarity::NonOrdinary;
}

std::vector<GlobalWeight> global_weight_set(const std::vector<Place>& places, bool regular_only) {
    std::vector<std::vector<WeightWithWitnesses>> locals;
    locals.reserve(places.size());
    for (const Place& pl : places) locals.push_back(local_weight_set(pl.ctx, pl.data, regular_only));

    std::vector<GlobalWeight> out;
    std::vector<std::size_t> idx(places.size(), 0);
    if (locals.empty()) return out;
    for (const auto& l : locals)
        if (l.empty()) return out;
    for (;;) {
        GlobalWeight gw;
        for (std::size_t v = 0; v < places.size(); ++v) {
            const auto& entry = locals[v][idx[v]];
            gw.factors.push_back(entry.weight);
            if (classify_ordinary(places[v].ctx, places[v].data, entry.weight) ==
                Ordinarity::Ordinary)
                gw.ordinary_places |= 1u << v;
        }
        out.push_back(std::move(gw));
        // Row-major advance over the product.
        std::size_t v = places.size();
        while (v > 0) {
            --v;
            if (++idx[v] < locals[v].size()) break;
            idx[v] = 0;
            if (v == 0) return out;
        }
    }
}

std::optional<std::vector<int>> is_J_regular(const FieldContext& ctx, const ReducibleData& data,
                                             std::uint32_t J) {
    if (ctx.p < 5) return std::nullopt;
    const CharExp target = char_mul(ctx, data.psi1, char_inv(ctx, data.psi2));
    std::vector<int> b_printed(ctx.r, 2);
    for (;;) {
        std::vector<int> b = from_printed(b_printed);
        std::int64_t enc = 0;
        for (int j = 0; j < ctx.r; ++j) {
            const std::int64_t sgn = delta(J, j, ctx.r) ? b[j] : -b[j];
            enc = mod_reduce(enc + mul_mod(mod_reduce(sgn, ctx.e1), ctx.omega_enc(1, j), ctx.e1),
                             ctx.e1);
        }
        if (CharExp{1, enc} == target) return b;
        // lexicographic advance over [2, p-2]^r
        int k = ctx.r - 1;
        while (k >= 0 && b_printed[k] == ctx.p - 2) --k;
        if (k < 0) return std::nullopt;
        ++b_printed[k];
        std::fill(b_printed.begin() + k + 1, b_printed.end(), 2);
    }
}

}  // namespace sw
