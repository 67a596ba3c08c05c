#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tropfrieze/catspec.hpp"

namespace tropfrieze {

/*
 * Graphviz rendering of the AR quiver: one node per indecomposable and
 * one edge per off-diagonal Hom arrow, labelled with the dimension when
 * it exceeds one.
 */
std::string emit_dot(const CategorySpec& spec);

/*
 * Command-line driver. Exit codes: 0 on success with every check
 * passing, 1 when some report line fails, 2 on usage, parse, or
 * validation errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropfrieze
