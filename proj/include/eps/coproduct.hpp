#pragma once

#include "eps/forest.hpp"
#include "eps/freemod.hpp"
#include "eps/instance.hpp"

namespace eps {

using ForestComb = LinComb<Forest>;
using ForestTensor = LinComb<Tensor2<Forest>>;

/// Δε from its recursive definition: Δε(1) = 0, Δε(•x) = 1⊗1,
/// Δε(B⁺_ω F̄) = F̄⊗1 + (id⊗B⁺_ω)Δε(F̄), and Δε(T F') = T·Δε(F') + Δε(T)·F'.
/// Kept as the reference for forest_coproduct.
ForestTensor forest_coproduct_recursive(const Forest& f);

/// Δε(F) = Σ_k F|I_k ⊗ F|Ī_k over the proper biideals I_k, Ī_k = V(F) ∖ (I_k ⊔ {u_k}).
ForestTensor forest_coproduct(const Forest& f);

/// Linear extension of B⁺_ω.
ForestComb graft_lin(const Decoration& omega, const ForestComb& a);

/// Concatenation, unit 1, combinatorial Δε, weight 0, D lowers vertex count by one.
EpsInstance<Forest> forest_instance();

}  // namespace eps
