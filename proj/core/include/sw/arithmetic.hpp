#pragma once

#include <cstdint>
#include <vector>

#include "sw/context.hpp"

namespace sw {

/// A tame inertial character, encoded as an integer residue modulo
/// p^{nr} - 1 where n is the niveau (1 or 2).
struct CharExp {
    int niveau = 1;
    std::int64_t exp = 0;

    friend bool operator==(const CharExp&, const CharExp&) = default;
    friend auto operator<=>(const CharExp&, const CharExp&) = default;
};

/// Exponent vector of a character in the omega basis.  Stored index-wise
/// (d[j] belongs to tau_j resp. sigma_j, with index 0 meaning tau_r resp.
/// sigma_{2r}).  Canonical vectors have all digits in [0, p-1] and are
/// never all equal to p-1.
struct DigitVector {
    int niveau = 1;
    std::vector<int> d;

    friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

/// Conversion between index-wise storage and the conventional listing
/// (x_1, ..., x_n).  Printed slot k (0-based) is index k+1 mod n.
template <typename T>
std::vector<T> from_printed(const std::vector<T>& printed) {
    const int n = static_cast<int>(printed.size());
    std::vector<T> v(printed.size());
    for (int k = 0; k < n; ++k) v[(k + 1) % n] = printed[k];
    return v;
}

template <typename T>
std::vector<T> to_printed(const std::vector<T>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<T> printed(v.size());
    for (int k = 0; k < n; ++k) printed[k] = v[(k + 1) % n];
    return printed;
}

CharExp make_char(const FieldContext& ctx, int niveau, std::int64_t exp);

/// omega_{tau_j} (niveau 1) resp. omega_{sigma_j} (niveau 2).
CharExp omega(const FieldContext& ctx, int niveau, int index);

/// Basis evaluation: digits (d_{tau_1}, ..) |-> sum d_i p^{(nr)-i} mod p^{nr}-1.
CharExp encode_char(const FieldContext& ctx, const DigitVector& digits);

/// The unique canonical digit vector of a residue (never all p-1).
DigitVector digits_of(const FieldContext& ctx, CharExp c);

CharExp char_mul(const FieldContext& ctx, CharExp a, CharExp b);
CharExp char_pow(const FieldContext& ctx, CharExp a, std::int64_t n);
CharExp char_inv(const FieldContext& ctx, CharExp a);

/// Frobenius conjugate theta^{p^r} (niveau 2).
CharExp frobenius_conjugate(const FieldContext& ctx, CharExp a);

/// Restriction-compatible embedding of the niveau-1 character group into
/// the niveau-2 one: exp |-> exp * (1 + p^r) mod p^{2r}-1, i.e.
/// omega_{tau_j} |-> omega_{sigma_j} omega_{sigma_{j+r}}.
CharExp inflate_to_niveau2(const FieldContext& ctx, CharExp c);

/// Whether a niveau-2 character lies in the image of inflate_to_niveau2,
/// i.e. is fixed by exp |-> p^r exp.
bool is_norm_inflated(const FieldContext& ctx, CharExp c);

/// Digit at embedding index j (indices taken mod n).
int digit_at(const DigitVector& v, int j);

}  // namespace sw
