#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sw/arithmetic.hpp"
#include "sw/weights.hpp"

namespace sw {

/// Inertial data of a local mod-p representation.  Reducible: the ordered
/// pair of niveau-1 characters (psi_1|_I, psi_2|_I).  Irreducible: a
/// niveau-2 character theta with theta != theta^{p^r}.
struct ReducibleData {
    CharExp psi1;
    CharExp psi2;
    friend bool operator==(const ReducibleData&, const ReducibleData&) = default;
};

struct IrreducibleData {
    CharExp theta;
    friend bool operator==(const IrreducibleData&, const IrreducibleData&) = default;
};

using LocalGaloisData = std::variant<ReducibleData, IrreducibleData>;

ReducibleData make_reducible(const FieldContext& ctx, std::int64_t psi1, std::int64_t psi2);
IrreducibleData make_irreducible(const FieldContext& ctx, std::int64_t theta);

/// All J subset of S (ascending bitmasks) with
///   psi_1|_I = prod omega^a prod_J omega^b,
///   psi_2|_I = prod omega^a prod_{J^c} omega^b.
std::vector<std::uint32_t> compatible_reducible(const FieldContext& ctx, const ReducibleData& data,
                                                const SerreWeight& w);

/// All full subsets J of S' (ascending bitmasks) with
///   {theta, theta^{p^r}} = {prod omega_sigma^a prod_J omega_sigma^b,
///                           prod omega_sigma^a prod_{J^c} omega_sigma^b}.
/// Witnesses come in complementary pairs.
std::vector<std::uint32_t> compatible_irreducible(const FieldContext& ctx,
                                                  const IrreducibleData& data,
                                                  const SerreWeight& w);

std::vector<std::uint32_t> compatible_witnesses(const FieldContext& ctx,
                                                const LocalGaloisData& data, const SerreWeight& w);

struct WeightWithWitnesses {
    SerreWeight weight;
    std::vector<std::uint32_t> witnesses;
};

/// The predicted local weight set (the character-level set W' in the
/// reducible case), each weight paired with its witness subsets.
std::vector<WeightWithWitnesses> local_weight_set(const FieldContext& ctx,
                                                  const LocalGaloisData& data, bool regular_only);

enum class Ordinarity { NotInWeightSet, Ordinary, NonOrdinary };

/// Ordinary means some compatibility witness is S or the empty set
/// (reducible case; irreducible data is never ordinary).
Ordinarity classify_ordinary(const FieldContext& ctx, const LocalGaloisData& data,
                             const SerreWeight& w);

struct Place {
    FieldContext ctx;
    LocalGaloisData data;
};

struct GlobalWeight {
    std::vector<SerreWeight> factors;     // one per place
    std::uint32_t ordinary_places = 0;    // bit v set iff sigma_v is ordinary
};

/// Cartesian product of the local weight sets, each product weight tagged
/// with the set I of places at which it is ordinary.
std::vector<GlobalWeight> global_weight_set(const std::vector<Place>& places, bool regular_only);

/// J-regularity of the pair: psi_1 psi_2^{-1}|_I = prod_J omega^b prod_{J^c}
/// omega^{-b} for some b in [2, p-2]^r.  Returns the first witness b
/// (index-wise, conventional listing order of the scan) if one exists.
std::optional<std::vector<int>> is_J_regular(const FieldContext& ctx, const ReducibleData& data,
                                             std::uint32_t J);

}  // namespace sw
