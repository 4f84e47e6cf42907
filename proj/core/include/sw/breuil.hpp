#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sw/types_jh.hpp"

namespace sw {

/// The integer quantities attached to (b, J): alpha, beta, the filtration
/// exponents i, and the comparison exponents n, n'.  All index-wise.
struct FlQuantities {
    std::vector<std::int64_t> alpha, beta, ivals, nvals, nprime;
};

/// Requires 2 <= b_tau <= p-2 for all tau.
FlQuantities fl_quantities(const FieldContext& ctx, const std::vector<int>& b, std::uint32_t J);

struct FlCheck {
    int property = 0;   // 1..12
    int index = 0;      // embedding index j
    bool pass = false;
    std::string detail;
};

struct FlReport {
    std::vector<FlCheck> checks;  // applicable checks only
    bool all_pass = true;
};

/// Checks the twelve numbered identities and inequalities attached to the
/// quantities above; conditioned properties are checked only where their
/// side condition holds.
FlReport fl_check_properties(const FieldContext& ctx, const std::vector<int>& b, std::uint32_t J);

/// Parameters of the rank-two model attached to (b, J): the filtration
/// shifts j, the twist exponents i, and the positions at which the
/// extension coefficient lambda may be nonzero.
struct Rank2ModelParams {
    std::uint32_t J = 0;
    std::vector<std::int64_t> j_exponents;  // e iff tau_{j+1} in J
    std::vector<std::int64_t> i_exponents;  // i_{tau_j}
    std::uint32_t lambda_allowed = 0;       // bit j iff tau_{j+1} in J
};

Rank2ModelParams rank2_model_params(const FieldContext& ctx, const std::vector<int>& b,
                                    std::uint32_t J);

/// Hodge-Tate weight tables of the canonical crystalline lift pair.
struct CrystalLiftSpec {
    std::vector<int> ht1, ht2;
};

CrystalLiftSpec crystalline_spec(const FieldContext& ctx, const std::vector<int>& b,
                                 std::uint32_t J);

/// A rank-one module datum: the descent-character pattern Z (indices
/// carrying theta_1), the derived boundary set Y, the filtration exponents
/// r_i (forced on Y, chosen in {0, e} on Y^c), and the derived set X.
struct Rank1Assignment {
    std::uint32_t z_mask = 0;
    std::uint32_t y_mask = 0;        // {i : delta_Z(i) != delta_Z(i+1)}
    std::uint32_t echoice_mask = 0;  // subset of Y^c where r_i = e
    std::uint32_t x_mask = 0;        // {i in Y^c : r_i = e} cup (Y cap Z)
    std::vector<std::int64_t> rvals; // index-wise
};

/// Solves the filtration exponents: on Y, r_i is the unique value in
/// (0, e) with theta^{i+1} = theta^i omega_{tau_{i+1}}^{p r_i}; on Y^c it
/// is the supplied choice.  theta1 == theta2 is unsupported.
Rank1Assignment rank1_solve(const FieldContext& ctx, CharExp theta1, CharExp theta2,
                            std::uint32_t z_mask, std::uint32_t echoice_mask);

/// Closed-form generic fibre:
///   psi_1|_I = theta2 * prod_{i in Z} omega_{tau_i}^{c_i} * prod_{i in X} omega_{tau_i},
/// where c is the canonical digit vector of theta1 theta2^{-1}.
CharExp rank1_generic_fibre(const FieldContext& ctx, const DigitVector& c,
                            const Rank1Assignment& asg, CharExp theta2);

struct Rank1Oracle {
    CharExp fibre;
    std::int64_t m1 = 0;  // delta_Z(tau_1) * (digit value of c based at tau_1)
    std::int64_t n1 = 0;
};

/// The same character computed through the solved exponent chain: the
/// product of the r_i-powers around the phi-orbit gives an exact multiple
/// of e, whose quotient is the omega_{tau_1}-exponent.  Never consults the
/// Z/X product form.
Rank1Oracle rank1_generic_fibre_oracle(const FieldContext& ctx, const DigitVector& c,
                                       const Rank1Assignment& asg, CharExp theta2);

struct JhcompatWitness {
    std::uint32_t K = 0;
    std::uint32_t L = 0;
};

/// K = {tau_i : tau_{i-1} in (X^c cap Y^c cap Z) cup (X cap Y^c cap Z^c)},
/// L = (K^c cap Z) cup (K cap Z^c).
JhcompatWitness jhcompat_witness(const FieldContext& ctx, const Rank1Assignment& asg);

/// The compatibility display, with theta2 normalised to 1:
///   psi_1 = prod_{(K^c cap L) cup (K cap L^c)} omega^{c_i + delta_{K^c}(tau_{i+1})}
///           * prod_S omega^{delta_{K cap L}(tau_{i+1})}.
bool jhcompat_display_holds(const FieldContext& ctx, const DigitVector& c,
                            const JhcompatWitness& wit, CharExp psi1_normalized);

/// Sweep primitives -----------------------------------------------------

/// Checks the uniqueness of the rank-one sub for one (b, J) with b regular:
/// among all assignments with descent characters drawn from the type-J lift
/// pair whose fibre is psi_1, only Z = S with X = {i : i+1 in J} occurs.
std::optional<std::string> lift_model_check_one(const FieldContext& ctx,
                                                const std::vector<int>& b, std::uint32_t J);

/// Checks the weight-compatibility implication for one (b weakly regular,
/// a = 0, psi_1, psi_2).  Returns a description when the hypothesis holds
/// but the conclusion fails.
std::optional<std::string> lemma_compat_check_one(const FieldContext& ctx,
                                                  const std::vector<int>& b, std::int64_t psi1,
                                                  std::int64_t psi2);

}  // namespace sw
