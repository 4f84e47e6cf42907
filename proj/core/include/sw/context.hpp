#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sw {

/// Thrown on malformed user input (bad digits, niveau mismatch, (p,r) out of
/// range, ...).  The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown for inputs the underlying results do not cover (e.g. the scalar
/// case theta1 == theta2 of a principal series).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
    std::int64_t v = a % m;
    return v < 0 ? v + m : v;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t acc = 1 % m;
    base = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The pair (p, r) together with the tame character moduli
/// e1 = p^r - 1 (niveau 1) and e2 = p^{2r} - 1 (niveau 2).
///
/// Index conventions used throughout the library:
///  - embeddings of the residue field are indexed by Z/rZ (niveau 1) or
///    Z/2rZ (niveau 2), with tau_0 = tau_r and sigma_0 = sigma_{2r};
///  - a subset of embeddings is a bitmask whose bit j is index j;
///  - exponent vectors are stored index-wise: v[j] belongs to tau_j, so
///    the conventional listing (x_1, ..., x_n) is v[1], ..., v[n-1], v[0].
/// The basis character omega_{tau_i} encodes as p^{(r-i) mod r} modulo e1,
/// which realises omega_{tau_i} = omega_{tau_{i+1}}^p; likewise
/// omega_{sigma_i} as p^{(2r-i) mod 2r} modulo e2.
struct FieldContext {
    std::int64_t p = 0;
    int r = 0;
    std::int64_t e1 = 0;   // p^r - 1
    std::int64_t e2 = 0;   // p^{2r} - 1
    std::int64_t pr = 0;   // p^r
    std::vector<std::int64_t> ppow;  // p^0 .. p^{2r}

    int n(int niveau) const { return niveau == 1 ? r : 2 * r; }
    std::int64_t modulus(int niveau) const { return niveau == 1 ? e1 : e2; }

    /// Encoding of omega at embedding index j (mod n) for the given niveau.
    std::int64_t omega_enc(int niveau, int j) const {
        int nn = n(niveau);
        int jj = ((j % nn) + nn) % nn;
        return ppow[(nn - jj) % nn];
    }
};

/// Validates p prime (p >= 3), r >= 1 and that p^{2r} - 1 fits in 64 bits.
inline FieldContext make_context(std::int64_t p, int r) {
    if (r < 1) throw input_error("r must be >= 1");
    if (p < 3 || !is_prime(p)) throw input_error("p must be a prime >= 3");
    FieldContext ctx;
    ctx.p = p;
    ctx.r = r;
    ctx.ppow.resize(2 * r + 1);
    ctx.ppow[0] = 1;
    for (int t = 1; t <= 2 * r; ++t) {
        __int128 v = static_cast<__int128>(ctx.ppow[t - 1]) * p;
        if (v > (static_cast<__int128>(1) << 62))
            throw input_error("p^{2r} - 1 does not fit in 64 bits; choose smaller (p, r)");
        ctx.ppow[t] = static_cast<std::int64_t>(v);
    }
    ctx.pr = ctx.ppow[r];
    ctx.e1 = ctx.ppow[r] - 1;
    ctx.e2 = ctx.ppow[2 * r] - 1;
    return ctx;
}

// --- bitmask helpers over Z/nZ ---------------------------------------------

inline bool delta(std::uint32_t mask, int j, int n) {
    int jj = ((j % n) + n) % n;
    return (mask >> jj) & 1u;
}

inline std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

/// Left rotation by one position: bit j of the result is bit j-1 of m.
inline std::uint32_t rot_up(std::uint32_t m, int n) {
    return ((m << 1) | (m >> (n - 1))) & full_mask(n);
}

/// Right rotation by one position: bit j of the result is bit j+1 of m.
inline std::uint32_t rot_down(std::uint32_t m, int n) {
    return ((m >> 1) | (m << (n - 1))) & full_mask(n);
}

/// A full subset of Z/2rZ contains exactly one of {j, j+r} for each j.
inline bool is_full_subset(std::uint32_t mask, int r) {
    for (int j = 0; j < r; ++j)
        if (delta(mask, j, 2 * r) == delta(mask, j + r, 2 * r)) return false;
    return true;
}

/// All 2^r full subsets of Z/2rZ, in ascending bitmask order.
inline std::vector<std::uint32_t> full_subsets(int r) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t{1} << r);
    for (std::uint32_t pick = 0; pick < (1u << r); ++pick) {
        std::uint32_t m = 0;
        for (int j = 0; j < r; ++j) {
            if ((pick >> j) & 1u)
                m |= 1u << j;
            else
                m |= 1u << (j + r);
        }
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sw
