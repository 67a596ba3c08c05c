#pragma once

#include "tropfrieze/frieze.hpp"

namespace tropfrieze {

/*
 * The 5-angulated cluster category of the type A4 algebra with
 * radical-square-zero relations: nine indecomposables on a directed
 * cycle, d = 3, cluster tilting object P(1) ⊕ P(2) ⊕ P(3) ⊕ P(4).
 * Ships with all eighteen angles labelled and all nine exchange pairs
 * declared. Suspension names are spelled S3P(i).
 */
CategorySpec builtin_ot_a4();

/* golden data for the built-in category */
struct BuiltinFixtures {
    std::vector<std::pair<std::string, FreeAbelianElement>> index_table_expected;  // 9 rows
    std::vector<FreeAbelianElement> theta_expected;         // 4 columns, tilting order
    std::vector<FreeAbelianElement> inequalities_expected;  // 4 cone rows
    std::vector<Coeff> figure_values;                       // 9 values, cycle order
    std::vector<FreeAbelianElement> angle_labels;           // 18, in angle order
    PhiVector sample_phi;                                   // admissible sample functional
};

BuiltinFixtures builtin_fixtures();

}  // namespace tropfrieze
