#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sw/galois.hpp"

namespace sw {

/// An inertial type: an unordered pair of niveau-1 characters (principal
/// series) or a niveau-2 conjugate pair (cuspidal).
struct InertialType {
    enum class Kind { PrincipalSeries, Cuspidal };
    Kind kind;
    CharExp first;
    CharExp second;

    friend bool operator==(const InertialType&, const InertialType&) = default;
};

InertialType make_principal_series(const FieldContext& ctx, CharExp chi1, CharExp chi2);
InertialType make_cuspidal(const FieldContext& ctx, CharExp theta);

/// The c_{tau_i} vector attached to a weight and a subset (index-wise).
struct CVector {
    std::vector<int> c;
    int at(int j) const {
        const int r = static_cast<int>(c.size());
        return c[((j % r) + r) % r];
    }
    friend bool operator==(const CVector&, const CVector&) = default;
};

struct ReducibleType {
    CVector c;
    CharExp chi;
    InertialType type;
};

/// c per the two-case formula, chi = prod omega^a prod_{tau not in J}
/// omega^{b-p}, type = chi + chi prod omega^c.  Requires w regular.
ReducibleType type_reducible(const FieldContext& ctx, const SerreWeight& w, std::uint32_t J);

struct IrreducibleType {
    std::uint32_t K_J = 0;
    CVector c;
    CharExp psi;
    InertialType type;
};

/// K_J = pi(J cap {1..r}), c per the four-case formula, psi the displayed
/// niveau-1 character, theta = inflate(psi) * omega_{sigma_r} * prod
/// omega_{sigma_i}^{c_i}.  Requires w regular and J full.
IrreducibleType type_irreducible(const FieldContext& ctx, const SerreWeight& w, std::uint32_t J);

/// The same cuspidal type computed directly:
///   prod omega_tau^a prod_{sigma in J} omega_sigma^{b-p}  (+ conjugate).
InertialType type_irreducible_simple(const FieldContext& ctx, const SerreWeight& w,
                                     std::uint32_t J);

/// One Jordan-Holder factor of a mod-p type reduction.  A factor whose
/// b-vector vanishes somewhere is the zero representation; it keeps its
/// slot in the list with weight absent and dim 0.
struct JhFactor {
    std::uint32_t K = 0;
    std::optional<SerreWeight> weight;
    std::int64_t dim = 0;
};

/// Jordan-Holder factors of the reduction mod p of I(chi1, chi2), in
/// K-bitmask order, via the a_K/b_K formulas applied to the canonical
/// digits of chi2 chi1^{-1}, then twisted by chi1.  The factor dimensions
/// sum to p^r + 1 on every input.  chi1 == chi2 is unsupported.
std::vector<JhFactor> jh_principal(const FieldContext& ctx, CharExp chi1, CharExp chi2);

/// Jordan-Holder factors of the reduction mod p of the cuspidal
/// representation attached to (c, psi), in K-bitmask order, via the
/// four-case a_K/b_K formulas, twisted by psi.  Dimensions sum to p^r - 1.
std::vector<JhFactor> jh_cuspidal(const FieldContext& ctx, const CVector& c, CharExp psi);

std::int64_t jh_total_dim(const std::vector<JhFactor>& factors);

/// Witness for verify_unique_jh: a subset of S (reducible) or a full
/// subset of S' (irreducible).
struct UniqueJhReport {
    bool pass = false;
    std::vector<std::uint32_t> compatible_K;  // K-masks of compatible factors
    std::vector<JhFactor> factors;
    std::string detail;
};

/// Builds the type for (data, w, witness), reduces it, and tests
/// compatibility of data with every factor.  Passes iff precisely one
/// factor is compatible and that factor equals w.
UniqueJhReport verify_unique_jh(const FieldContext& ctx, const LocalGaloisData& data,
                                const SerreWeight& w, std::uint32_t witness);

/// Violations of the claim that all JH factors of type reductions attached
/// to regular weights are (weakly) regular, over every regular b, every
/// J subset of S (reducible) and every full subset (cuspidal).
std::vector<std::string> weak_regularity_violations(const FieldContext& ctx);

}  // namespace sw
