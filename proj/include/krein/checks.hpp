#pragma once

#include <cstdint>

#include "krein/finite_krein.hpp"
#include "krein/report.hpp"

namespace krein {

/// Names of the checks produced by verify_axioms, in report order.
inline constexpr const char* kAxiomCheckNames[] = {
    "alpha_automorphism",     "decomposition",       "cstar_identity",
    "krein_identity",         "bimodule_axioms",     "imprimitivity_identity",
    "bimodule_norms_coincide", "inner_product_positivity", "fullness",
    "commutative",            "symmetric_bimodule",  "commutativity_equivalence",
    "odd_symmetry",           "odd_symmetry_isometric",
};

/// Runs every structural check on an already validated algebra. Identities
/// over basis elements use the Frobenius norm of coordinate differences;
/// norm identities use `samples` seeded random elements.
Report verify_axioms(const KreinAlgebra& a, int samples, std::uint64_t seed,
                     double tol = kSpanTol);

}  // namespace krein
