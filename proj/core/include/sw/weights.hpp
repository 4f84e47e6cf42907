#pragma once

#include <optional>
#include <vector>

#include "sw/arithmetic.hpp"
#include "sw/context.hpp"

namespace sw {

enum class RegularityClass { Regular, WeaklyRegularOnly, NotWeaklyRegular };

/// A Serre weight sigma_{a,b}: exponent vectors of length r, stored
/// index-wise (entry j belongs to tau_j, index 0 = tau_r).  Canonical form
/// has a in [0, p-1]^r, not all p-1, and b in [1, p]^r.
struct SerreWeight {
    std::vector<int> a;
    std::vector<int> b;

    friend bool operator==(const SerreWeight&, const SerreWeight&) = default;

    int a_at(int j) const {
        const int r = static_cast<int>(a.size());
        return a[((j % r) + r) % r];
    }
    int b_at(int j) const {
        const int r = static_cast<int>(b.size());
        return b[((j % r) + r) % r];
    }
};

/// Reduces a componentwise through the character encoding (a is only
/// defined through prod omega^a) and maps the all-(p-1) class to all-0.
/// b out of [1, p] is an input error.
SerreWeight canonicalize_weight(const FieldContext& ctx, std::vector<int> a, std::vector<int> b);

/// Convenience constructor from conventional (tau_1, ..., tau_r) listings.
SerreWeight weight_from_printed(const FieldContext& ctx, const std::vector<int>& a_printed,
                                const std::vector<int>& b_printed);

RegularityClass classify_weight(const FieldContext& ctx, const SerreWeight& w);

bool is_regular(const FieldContext& ctx, const SerreWeight& w);
bool is_weakly_regular(const FieldContext& ctx, const SerreWeight& w);

/// The determinant-twist character prod_tau omega_tau^{a_tau}.
CharExp weight_det_char(const FieldContext& ctx, const SerreWeight& w);

/// sum over i in mask of b_i omega_{tau_i}, as a niveau-1 character.
CharExp b_partial_char(const FieldContext& ctx, const SerreWeight& w, std::uint32_t mask);

/// All canonical weights matching the filter, ordered lexicographically on
/// the conventional listings (b_1..b_r, a_1..a_r).
std::vector<SerreWeight> enumerate_weights(const FieldContext& ctx,
                                           std::optional<RegularityClass> class_filter);

/// Ascending enumeration of regular b-vectors only (all entries in [2,p-2]),
/// in conventional-listing lexicographic order.  Used by the sweep drivers.
std::vector<std::vector<int>> enumerate_regular_b(const FieldContext& ctx);

/// Lexicographic order on (printed b, printed a).
bool weight_less(const SerreWeight& lhs, const SerreWeight& rhs);

}  // namespace sw
