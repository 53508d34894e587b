#pragma once

#include <string>
#include <vector>

#include "projhom/algfile.hpp"

namespace projhom {

/* The built-in algebra zoo used by the demo command and the test suites:
 *   semi2  two vertices, no arrows (semisimple, gldim 0)
 *   a2     1 -> 2                  (hereditary, gldim 1)
 *   a3r    1 -> 2 -> 3 with ba = 0 (gldim 2)
 *   loop2  one loop x with x^2 = 0 (infinite gldim)
 * The same definitions are shipped as files under data/. */
struct ZooEntry {
    std::string name;
    std::string text;
};

const std::vector<ZooEntry>& algebra_zoo();
const std::string& zoo_text(const std::string& name);
AlgebraPtr zoo_algebra(const std::string& name);

} // namespace projhom
