#pragma once

#include <cstdint>

#include "fingeo/constructions.hpp"
#include "fingeo/psets.hpp"

namespace fingeo {

/// Exit status of a report: 0 all pass, 1 some item failed, 2 only skips.
int report_status(const Report& r);

/// Brute-force hyperplane weight histogram of moore_h_scattered(q, n, r, h)
/// against predicted_t, one item per i, plus an item for stray weights.
Report verify_ti_formula(std::uint64_t q, unsigned n, unsigned r, unsigned h);

/// Both hyperplane cases of the cone over moore_h_scattered(q, n, d, h).
Report verify_cone_profile(std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h);

/// Family sizes, weights, listed and excluded cases of an affine extension.
Report verify_extension_type(ExtensionKind kind, std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h);

/// recognize_hypercylinder on hypercylinder(q, r), then `trials` seeded
/// one-point perturbations, each of which must be rejected.
Report verify_hypercylinder_roundtrip(std::uint64_t q, unsigned r, unsigned trials, std::uint64_t seed);

/// stability_decide on hypercylinder_code(q, r), then the codes of `trials`
/// seeded one-point perturbations, each of which must be rejected either by
/// a hypothesis check or by the verdict.
Report verify_stability(std::uint64_t q, unsigned r, unsigned trials, std::uint64_t seed);

/// The rank-weight identity on every code of rank_code_suite(q, n, k),
/// followed by the weight claims for cone and construction-one codes.
Report verify_rank_duality(std::uint64_t q, unsigned n, unsigned k, std::uint64_t seed);

} // namespace fingeo
