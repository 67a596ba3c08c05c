#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "tropfrieze/catspec.hpp"

namespace tropfrieze {

/* index of every indecomposable over the tilting basis, in spec order */
struct IndexTable {
    Basis tilting;
    std::vector<std::pair<std::string, FreeAbelianElement>> entries;

    const FreeAbelianElement& at(std::string_view name) const;  // throws Error
};

/*
 * Alternating sum over the resolution angle [t_d, ..., t_0, s] of the
 * indecomposable: t_0 carries +1 and signs alternate leftward.
 */
FreeAbelianElement index_of_indec(const CategorySpec& spec, const std::string& name);

/* additive extension to objects; the zero object has index 0 */
FreeAbelianElement index_of_object(const CategorySpec& spec, const ObjectExpr& o);

IndexTable index_table(const CategorySpec& spec);

/*
 * Cross-check: any listed angle of resolution shape (first d+1 terms in
 * add(t), last term a single indecomposable) must give the same
 * alternating sum as that indecomposable's resolution.
 */
std::vector<Violation> resolution_consistency(const CategorySpec& spec);

}  // namespace tropfrieze
