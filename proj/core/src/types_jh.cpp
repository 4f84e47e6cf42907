#include "sw/types_jh.hpp"

#include <algorithm>
#include <sstream>

namespace sw {

namespace {

void require_regular(const FieldContext& ctx, const SerreWeight& w) {
    for (int j = 0; j < ctx.r; ++j)
        if (w.b[j] < 2 || w.b[j] > ctx.p - 2) {
            std::ostringstream os;
            os << "weight is not regular: b_{tau_" << (j == 0 ? ctx.r : j) << "} = " << w.b[j]
               << " violates 2 <= b <= p-2";
            throw input_error(os.str());
        }
}

std::string weight_str(const SerreWeight& w) {
    std::ostringstream os;
    auto pa = to_printed(w.a), pb = to_printed(w.b);
    os << "a=[";
    for (std::size_t k = 0; k < pa.size(); ++k) os << (k ? "," : "") << pa[k];
    os << "],b=[";
    for (std::size_t k = 0; k < pb.size(); ++k) os << (k ? "," : "") << pb[k];
    os << "]";
    return os.str();
}

}  // namespace

InertialType make_principal_series(const FieldContext& ctx, CharExp chi1, CharExp chi2) {
    if (chi1.niveau != 1 || chi2.niveau != 1)
        throw input_error("principal series characters must have niveau 1");
    (void)ctx;
    if (chi2.exp < chi1.exp) std::swap(chi1, chi2);
    return InertialType{InertialType::Kind::PrincipalSeries, chi1, chi2};
}

InertialType make_cuspidal(const FieldContext& ctx, CharExp theta) {
    if (theta.niveau != 2) throw input_error("cuspidal parameter must have niveau 2");
    CharExp conj = frobenius_conjugate(ctx, theta);
    if (conj == theta)
        throw input_error("cuspidal parameter factors through the norm");
    if (conj.exp < theta.exp) std::swap(theta, conj);
    return InertialType{InertialType::Kind::Cuspidal, theta, conj};
}

ReducibleType type_reducible(const FieldContext& ctx, const SerreWeight& w, std::uint32_t J) {
    require_regular(ctx, w);
    ReducibleType out;
    out.c.c.resize(ctx.r);
    for (int j = 0; j < ctx.r; ++j) {
        const int dnext = delta(J, j + 1, ctx.r) ? 1 : 0;
        out.c.c[j] = delta(J, j, ctx.r) ? w.b[j] - dnext
                                        : static_cast<int>(ctx.p) - w.b[j] - dnext;
        if (out.c.c[j] < 1 || out.c.c[j] > ctx.p - 2)
            throw std::logic_error("reducible c-exponent left [1, p-2]");
    }
    std::int64_t enc = weight_det_char(ctx, w).exp;
    for (int j = 0; j < ctx.r; ++j)
        if (!delta(J, j, ctx.r))
            enc = mod_reduce(enc + mul_mod(mod_reduce(w.b[j] - ctx.p, ctx.e1),
                                           ctx.omega_enc(1, j), ctx.e1),
                             ctx.e1);
    out.chi = CharExp{1, enc};
    std::int64_t cenc = 0;
    for (int j = 0; j < ctx.r; ++j)
        cenc = mod_reduce(cenc + mul_mod(out.c.c[j], ctx.omega_enc(1, j), ctx.e1), ctx.e1);
    out.type = make_principal_series(ctx, out.chi, char_mul(ctx, out.chi, CharExp{1, cenc}));
    return out;
}

IrreducibleType type_irreducible(const FieldContext& ctx, const SerreWeight& w, std::uint32_t J) {
    require_regular(ctx, w);
    if (!is_full_subset(J, ctx.r)) throw input_error("J is not a full subset of S'");
    IrreducibleType out;

    // K_J = pi(J cap {1, ..., r}); the index r projects to 0.
    out.K_J = 0;
    for (int i = 1; i <= ctx.r; ++i)
        if (delta(J, i, 2 * ctx.r)) out.K_J |= 1u << (i % ctx.r);

    const int d1 = delta(out.K_J, 1, ctx.r) ? 1 : 0;
    out.c.c.resize(ctx.r);
    for (int i = 0; i < ctx.r; ++i) {
        const bool in_K = delta(out.K_J, i, ctx.r);
        if (i == 0) {
            out.c.c[i] = in_K ? w.b_at(0) + d1 - 1
                              : static_cast<int>(ctx.p) - w.b_at(0) + d1 - 1;
        } else {
            const int dnext = delta(out.K_J, i + 1, ctx.r) ? 1 : 0;
            out.c.c[i] = in_K ? w.b[i] - dnext : static_cast<int>(ctx.p) - w.b[i] - dnext;
        }
        if (out.c.c[i] < 1 || out.c.c[i] > ctx.p - 2)
            throw std::logic_error("cuspidal c-exponent left [1, p-2]");
    }

    // psi = omega_{tau_0}^{-delta_{K_J}(1)} prod omega^a prod_{tau not in K_J} omega^{b-p}
    std::int64_t enc = weight_det_char(ctx, w).exp;
    enc = mod_reduce(enc + mul_mod(mod_reduce(-d1, ctx.e1), ctx.omega_enc(1, 0), ctx.e1), ctx.e1);
    for (int j = 0; j < ctx.r; ++j)
        if (!delta(out.K_J, j, ctx.r))
            enc = mod_reduce(enc + mul_mod(mod_reduce(w.b[j] - ctx.p, ctx.e1),
                                           ctx.omega_enc(1, j), ctx.e1),
                             ctx.e1);
    out.psi = CharExp{1, enc};

    // theta = inflate(psi) * omega_{sigma_r} * prod_{i=1}^{r} omega_{sigma_i}^{c_i}
    std::int64_t theta = inflate_to_niveau2(ctx, out.psi).exp;
    theta = mod_reduce(theta + ctx.omega_enc(2, ctx.r), ctx.e2);
    for (int i = 1; i <= ctx.r; ++i)
        theta = mod_reduce(theta + mul_mod(out.c.at(i), ctx.omega_enc(2, i), ctx.e2), ctx.e2);
    out.type = make_cuspidal(ctx, CharExp{2, theta});
    return out;
}

InertialType type_irreducible_simple(const FieldContext& ctx, const SerreWeight& w,
                                     std::uint32_t J) {
    if (!is_full_subset(J, ctx.r)) throw input_error("J is not a full subset of S'");
    const std::int64_t base = inflate_to_niveau2(ctx, weight_det_char(ctx, w)).exp;
    std::int64_t d1 = base, d2 = base;
    for (int k = 0; k < 2 * ctx.r; ++k) {
        const std::int64_t term =
            mul_mod(mod_reduce(w.b_at(k % ctx.r) - ctx.p, ctx.e2), ctx.omega_enc(2, k), ctx.e2);
        if (delta(J, k, 2 * ctx.r))
            d1 = mod_reduce(d1 + term, ctx.e2);
        else
            d2 = mod_reduce(d2 + term, ctx.e2);
    }
    CharExp t1{2, d1}, t2{2, d2};
    if (frobenius_conjugate(ctx, t1) != t2)
        throw std::logic_error("cuspidal pair is not a Frobenius-conjugate pair");
    return make_cuspidal(ctx, t1);
}

namespace {

std::vector<JhFactor> jh_factors_common(const FieldContext& ctx, const std::vector<int>& cvec,
                                        CharExp twist, bool cuspidal) {
    std::vector<JhFactor> out;
    out.reserve(std::size_t{1} << ctx.r);
    for (std::uint32_t K = 0; K < (1u << ctx.r); ++K) {
        std::vector<int> a(ctx.r), b(ctx.r);
        for (int i = 0; i < ctx.r; ++i) {
            const bool in_K = delta(K, i, ctx.r);
            const int ci = cvec[i];
            if (cuspidal && i == 0) {
                const int dK1 = delta(K, 1, ctx.r) ? 1 : 0;
                a[i] = in_K ? dK1 : ci + 1;
                b[i] = in_K ? ci + 1 - dK1 : static_cast<int>(ctx.p) - ci + dK1 - 1;
            } else {
                const int dnext = delta(K, i + 1, ctx.r) ? 1 : 0;
                a[i] = in_K ? 0 : ci + dnext;
                b[i] = in_K ? ci + dnext : static_cast<int>(ctx.p) - ci - dnext;
            }
        }
        JhFactor f;
        f.K = K;
        std::int64_t dim = 1;
        bool zero = false;
        for (int i = 0; i < ctx.r; ++i) {
            if (b[i] < 0 || b[i] > ctx.p)
                throw std::logic_error("JH factor b-exponent out of [0, p]");
            if (b[i] == 0) zero = true;
            dim *= b[i];
        }
        if (!zero) {
            std::int64_t enc = twist.exp;
            for (int j = 0; j < ctx.r; ++j)
                enc = mod_reduce(enc + mul_mod(mod_reduce(a[j], ctx.e1),
                                               ctx.omega_enc(1, j), ctx.e1),
                                 ctx.e1);
            DigitVector da = digits_of(ctx, CharExp{1, enc});
            f.weight = SerreWeight{da.d, b};
            f.dim = dim;
        } else {
            f.dim = 0;
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<JhFactor> jh_principal(const FieldContext& ctx, CharExp chi1, CharExp chi2) {
    if (chi1.niveau != 1 || chi2.niveau != 1)
        throw input_error("jh_principal expects niveau-1 characters");
    if (chi1 == chi2)
        throw unsupported_error("scalar principal series (chi1 == chi2) is unsupported");
    const DigitVector c = digits_of(ctx, char_mul(ctx, chi2, char_inv(ctx, chi1)));
    return jh_factors_common(ctx, c.d, chi1, /*cuspidal=*/false);
}

std::vector<JhFactor> jh_cuspidal(const FieldContext& ctx, const CVector& c, CharExp psi) {
    if (static_cast<int>(c.c.size()) != ctx.r) throw input_error("c vector must have length r");
    for (int ci : c.c)
        if (ci < 0 || ci >= ctx.p) throw input_error("c entry out of range [0, p-1]");
    if (psi.niveau != 1) throw input_error("jh_cuspidal expects a niveau-1 twist");
    return jh_factors_common(ctx, c.c, psi, /*cuspidal=*/true);
}

std::int64_t jh_total_dim(const std::vector<JhFactor>& factors) {
    std::int64_t total = 0;
    for (const auto& f : factors) total += f.dim;
    return total;
}

UniqueJhReport verify_unique_jh(const FieldContext& ctx, const LocalGaloisData& data,
                                const SerreWeight& w, std::uint32_t witness) {
    require_regular(ctx, w);
    const auto witnesses = compatible_witnesses(ctx, data, w);
    if (std::find(witnesses.begin(), witnesses.end(), witness) == witnesses.end())
        throw input_error("witness subset is not a compatibility witness for (data, w)");

    UniqueJhReport rep;
    if (std::holds_alternative<ReducibleData>(data)) {
        const ReducibleType t = type_reducible(ctx, w, witness);
        rep.factors = jh_principal(ctx, t.type.first, t.type.second);
    } else {
        const IrreducibleType t = type_irreducible(ctx, w, witness);
        rep.factors = jh_cuspidal(ctx, t.c, t.psi);
    }

    bool unique_equals_w = false;
    for (const JhFactor& f : rep.factors) {
        if (!f.weight) continue;
        if (!compatible_witnesses(ctx, data, *f.weight).empty()) {
            rep.compatible_K.push_back(f.K);
            unique_equals_w = (*f.weight == w);
        }
    }
    rep.pass = (rep.compatible_K.size() == 1) && unique_equals_w;
    if (!rep.pass) {
        std::ostringstream os;
        os << rep.compatible_K.size() << " compatible factor(s) for " << weight_str(w);
        rep.detail = os.str();
    }
    return rep;
}

std::vector<std::string> weak_regularity_violations(const FieldContext& ctx) {
    std::vector<std::string> out;
    auto check = [&](const std::vector<JhFactor>& factors, const char* kind, std::uint32_t J,
                     const SerreWeight& w) {
        for (const JhFactor& f : factors) {
            const bool ok = f.weight && classify_weight(ctx, *f.weight) !=
                                            RegularityClass::NotWeaklyRegular;
            if (!ok) {
                std::ostringstream os;
                os << kind << " " << weight_str(w) << ",J=0x" << std::hex << J << std::dec
                   << ",K=0x" << std::hex << f.K << std::dec << ": "
                   << (f.weight ? "factor not weakly regular" : "factor degenerates");
                out.push_back(os.str());
            }
        }
    };
    for (const auto& b : enumerate_regular_b(ctx)) {
        SerreWeight w{std::vector<int>(ctx.r, 0), b};
        for (std::uint32_t J = 0; J < (1u << ctx.r); ++J) {
            const ReducibleType t = type_reducible(ctx, w, J);
            check(jh_principal(ctx, t.type.first, t.type.second), "ps", J, w);
        }
        for (std::uint32_t J : full_subsets(ctx.r)) {
            const IrreducibleType t = type_irreducible(ctx, w, J);
            check(jh_cuspidal(ctx, t.c, t.psi), "cusp", J, w);
        }
    }
    return out;
}

}  // namespace sw
