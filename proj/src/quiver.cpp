#include "projhom/quiver.hpp"

#include <set>
#include <tuple>

namespace projhom {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
    if (vertices.empty())
        throw Error("quiver needs at least one vertex");
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (!seen.insert(v).second)
            throw Error("duplicate vertex label '" + v + "'");
    }
    vertices_ = std::move(vertices);

    std::set<std::string> arrow_names;
    for (const auto& [name, src, tgt] : arrows) {
        if (!arrow_names.insert(name).second)
            throw Error("duplicate arrow name '" + name + "'");
        int s = vertex_index(src);
        int t = vertex_index(tgt);
        if (s < 0 || t < 0)
            throw Error("arrow '" + name + "' references unknown vertex");
        arrows_.push_back(Arrow{name, s, t});
    }
}

int Quiver::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == label)
            return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

Quiver Quiver::reversed() const {
    Quiver q;
    q.vertices_ = vertices_;
    for (const auto& a : arrows_)
        q.arrows_.push_back(Arrow{a.name, a.target, a.source});
    return q;
}

Path Path::then(const Path& q) const {
    if (target != q.source)
        throw Error("paths do not compose");
    Path r{source, q.target, arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::strong_ordering path_compare(const Path& a, const Path& b) {
    if (auto c = a.length() <=> b.length(); c != 0)
        return c;
    if (auto c = a.arrows <=> b.arrows; c != 0)
        return c;
    return a.source <=> b.source; // distinguishes trivial paths
}

} // namespace projhom
