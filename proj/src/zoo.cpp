#include "projhom/zoo.hpp"

namespace projhom {

const std::vector<ZooEntry>& algebra_zoo() {
    static const std::vector<ZooEntry> zoo = {
        {"semi2",
         "# two vertices, no arrows: a semisimple algebra\n"
         "field Q\n"
         "vertex 1\n"
         "vertex 2\n"},
        {"a2",
         "# the A2 quiver: 1 -> 2\n"
         "field Q\n"
         "vertex 1\n"
         "vertex 2\n"
         "arrow a 1 2\n"},
        {"a3r",
         "# A3 with the composite killed: 1 -> 2 -> 3, b a = 0\n"
         "field Q\n"
         "vertex 1\n"
         "vertex 2\n"
         "vertex 3\n"
         "arrow a 1 2\n"
         "arrow b 2 3\n"
         "relation 1 * b a\n"},
        {"loop2",
         "# one loop with x^2 = 0: the dual numbers\n"
         "field Q\n"
         "vertex 1\n"
         "arrow x 1 1\n"
         "relation 1 * x x\n"},
    };
    return zoo;
}

const std::string& zoo_text(const std::string& name) {
    for (const auto& entry : algebra_zoo())
        if (entry.name == name)
            return entry.text;
    throw Error("unknown zoo algebra '" + name + "'");
}

AlgebraPtr zoo_algebra(const std::string& name) {
    return realize(parse_algebra_text(zoo_text(name)));
}

} // namespace projhom
