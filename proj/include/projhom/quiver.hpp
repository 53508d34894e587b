#pragma once

#include <compare>
#include <string>
#include <vector>

#include "projhom/error.hpp"

namespace projhom {

struct Arrow {
    std::string name;
    int source; // vertex index
    int target;
};

class Quiver {
public:
    Quiver(std::vector<std::string> vertices,
           std::vector<std::tuple<std::string, std::string, std::string>> arrows);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& vertex_label(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& label) const;  // -1 if absent
    int arrow_index(const std::string& name) const;    // -1 if absent

    // same vertices, arrows with endpoints swapped
    Quiver reversed() const;

private:
    Quiver() = default;

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/* A path is stored in application order: arrows[0] acts first. The trivial
 * path at a vertex has an empty arrow list. */
struct Path {
    int source;
    int target;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool is_trivial() const { return arrows.empty(); }

    static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }

    // this path applied first, then q
    Path then(const Path& q) const;

    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }
};

// length-lexicographic order; total on paths of a fixed quiver
std::strong_ordering path_compare(const Path& a, const Path& b);

struct PathLess {
    bool operator()(const Path& a, const Path& b) const {
        return path_compare(a, b) == std::strong_ordering::less;
    }
};

} // namespace projhom
