#pragma once

#include "tropfrieze/index.hpp"
#include "tropfrieze/report.hpp"

namespace tropfrieze {

/*
 * The error-term homomorphism θ : K0(mod Γ) -> K0^sp(add t). Its column
 * for the simple S(t') is the alternating index sum over a determining
 * angle, i.e. an angle whose connecting morphism has image exactly S(t').
 */
struct ThetaMap {
    GroupHomomorphism hom;  // domain: simple basis, codomain: tilting basis
};

/*
 * Alternating index sum over all d+2 terms of an angle: the back term
 * (the source of γ) carries +1 and signs alternate leftward.
 */
FreeAbelianElement angle_alternating_sum(const CategorySpec& spec, const IndexTable& table,
                                         const Angle& angle);

/*
 * Builds θ from the determining angles. Throws ThetaError when some
 * simple has no determining angle or two of them disagree.
 */
ThetaMap theta_from_spec(const CategorySpec& spec, const IndexTable& table);

/*
 * Checks Σ (-1)^i index(s_i) = θ([Im Fγ]) on every angle whose image
 * class is known; angles without one are reported as skipped.
 */
CheckReport verify_additivity(const CategorySpec& spec, const IndexTable& table,
                             const ThetaMap& theta);

/*
 * Checks that each declared exchange pair has a vanishing image class on
 * at least one of its two angles. Requires calabi_yau_2d; pairs with a
 * missing label are reported as skipped.
 */
CheckReport verify_dichotomy(const CategorySpec& spec);

}  // namespace tropfrieze
