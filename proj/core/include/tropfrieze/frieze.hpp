#pragma once

#include "tropfrieze/theta.hpp"

namespace tropfrieze {

/* coordinates of a functional φ : K0^sp(add t) -> Z in the dual tilting basis */
struct PhiVector {
    std::vector<Coeff> coeffs;

    bool operator==(const PhiVector&) const = default;
};

/* an integer-valued function on indecomposables, extended additively to objects */
struct FriezeValues {
    std::vector<std::pair<std::string, Coeff>> values;  // spec order

    Coeff at(std::string_view name) const;  // throws Error
    Coeff at_object(const ObjectExpr& o) const;

    bool operator==(const FriezeValues&) const = default;
};

/*
 * Row for t' is θ([S(t')]) over the tilting basis; φ is admissible when
 * every row pairs nonnegatively with it. Nonnegativity on these rows is
 * equivalent to nonnegativity on all module classes, since those are
 * nonnegative combinations of simple classes.
 */
struct ConeMatrix {
    Basis tilting;
    std::vector<FreeAbelianElement> rows;  // tilting order
};

ConeMatrix cone_matrix(const CategorySpec& spec, const ThetaMap& theta);

bool phi_admissible(const ConeMatrix& cone, const PhiVector& phi);

/*
 * f = φ ∘ index on the indecomposables. Requires odd d and a declared
 * 2d-Calabi-Yau category; admissibility of φ is the caller's concern.
 */
FriezeValues frieze_from_phi(const CategorySpec& spec, const IndexTable& table,
                             const PhiVector& phi);

/*
 * Checks the exchange relation f(s0) + (-1)^(d+1) f(s_top) = max(X, Y)
 * on every declared exchange pair, where X and Y are the alternating
 * value sums over the middle terms of the pair's two angles.
 */
CheckReport check_frieze(const CategorySpec& spec, const FriezeValues& f);

struct EnumerateOptions {
    long long work_limit = 100000000;  // maximum box size (2B+1)^r
    int threads = 1;
};

/*
 * All integer φ in [-B, B]^r satisfying the cone, in lexicographic
 * order. Refuses boxes larger than the configured work limit.
 */
std::vector<PhiVector> enumerate_admissible(const ConeMatrix& cone, Coeff bound,
                                            const EnumerateOptions& options = {});

struct PropagateResult {
    std::optional<FriezeValues> values;  // engaged iff the recursion closed
    std::string conflict_at;
    Coeff existing = 0;
    Coeff recomputed = 0;

    bool closed() const { return values.has_value(); }
};

/*
 * Seeds d+1 consecutive values from `start` and solves each window
 * equation forward around the cycle. Requires odd d and a spec whose
 * declared pairs are consecutive windows covering every start, with a
 * trivial second angle each; refuses other shapes.
 */
PropagateResult propagate_window(const CategorySpec& spec, const std::vector<Coeff>& seed,
                                 const std::string& start);

}  // namespace tropfrieze
