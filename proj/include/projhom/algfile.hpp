#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "projhom/algebra.hpp"

namespace projhom {

/* Parsed form of the line-oriented algebra description format:
 *
 *   field Q              # or: field F 5
 *   vertex 1
 *   vertex 2
 *   arrow a 1 2
 *   relation 1 * b a     # coefficient '*' arrow names, target applied last
 *   cap path-length 64   # optional
 *   cap resolution 8     # optional
 *
 * '#' starts a comment. Relation terms are separated by '+'; coefficients
 * are signed integers or fractions n/d. Arrow names are written in
 * function-composition order, so "b a" applies a first. */
struct RelationTermSpec {
    long num = 1;
    long den = 1;
    std::vector<std::string> arrow_names; // as written (target applied last)
    int line = 0;
    int column = 0;
};

struct RelationSpec {
    std::vector<RelationTermSpec> terms;
};

struct AlgebraSpecFile {
    long characteristic = 0;
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    std::vector<RelationSpec> relations;
    std::size_t path_length_cap = 64;
    std::size_t resolution_cutoff = 8;
};

AlgebraSpecFile parse_algebra_text(const std::string& text);
AlgebraSpecFile parse_algebra_file(const std::string& path);

AlgebraPtr realize(const AlgebraSpecFile& spec);

} // namespace projhom
