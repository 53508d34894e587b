#pragma once

#include <vector>

#include "projhom/algebra.hpp"
#include "projhom/matrix.hpp"

namespace projhom {

/* Quiver representation: one space per vertex, one matrix per arrow mapping
 * the source space to the target space. Every relation of the algebra must
 * evaluate to zero; this is checked at construction. */
class Module {
public:
    Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

    static Module zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(int v) const { return dims_.at(v); }
    std::size_t total_dim() const;
    const Matrix& arrow_map(int a) const { return arrow_maps_.at(a); }
    bool is_zero() const { return total_dim() == 0; }

    // composite of the arrow maps along a path, applied in order
    Matrix path_action(const Path& p) const;

    bool operator==(const Module& o) const;
    bool operator!=(const Module& o) const { return !(*this == o); }

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> arrow_maps_;
};

class ModuleMorphism {
public:
    ModuleMorphism(Module source, Module target, std::vector<Matrix> vertex_maps);

    static ModuleMorphism zero(Module source, Module target);
    static ModuleMorphism identity(const Module& m);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const Matrix& vertex_map(int v) const { return vertex_maps_.at(v); }

    ModuleMorphism operator+(const ModuleMorphism& o) const;
    ModuleMorphism operator-(const ModuleMorphism& o) const;
    ModuleMorphism scaled(const Scalar& s) const;

    bool is_zero() const;
    bool is_vertexwise_injective() const;
    bool is_vertexwise_surjective() const;
    bool is_isomorphism() const;
    ModuleMorphism inverse() const; // throws SingularMatrix unless iso

    bool operator==(const ModuleMorphism& o) const;
    bool operator!=(const ModuleMorphism& o) const { return !(*this == o); }

private:
    Module source_;
    Module target_;
    std::vector<Matrix> vertex_maps_;
};

// g after f
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

// vertex maps flattened row-major, vertices in order, as one column
Matrix flatten(const ModuleMorphism& f);
ModuleMorphism unflatten(const Module& source, const Module& target, const Matrix& column);

/* Indecomposable projective P(v): basis the reduced paths leaving v, arrows
 * acting by path extension. Simple S(v): one-dimensional at v. */
Module projective_of(const AlgebraPtr& alg, int v);
Module simple_of(const AlgebraPtr& alg, int v);

/* Direct sum of indecomposable projectives, multiplicities per vertex.
 * Summands are ordered by vertex, then copy; each summand occupies a
 * contiguous slice of every vertex space. */
struct SummandLayout {
    std::vector<int> summand_vertex;                // vertex of each summand
    std::vector<std::vector<std::size_t>> offsets;  // [summand][vertex] slice start
    std::vector<std::size_t> dims;                  // realized dims per vertex
};
SummandLayout projective_layout(const AlgebraPtr& alg, const std::vector<std::size_t>& mult);
Module projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& mult);

// echelonized basis of the solution space of all commuting squares
std::vector<ModuleMorphism> hom_basis(const Module& m, const Module& n);

struct ModuleKernel {
    Module module;
    ModuleMorphism inclusion; // vertex-wise injective
};
ModuleKernel kernel_mod(const ModuleMorphism& f);

struct ModuleCokernel {
    Module module;
    ModuleMorphism projection; // vertex-wise surjective
};
ModuleCokernel cokernel_mod(const ModuleMorphism& f);

struct ModuleImage {
    Module module;
    ModuleMorphism inclusion;     // into target of f
    ModuleMorphism corestriction; // from source of f; inclusion o corestriction == f
};
ModuleImage image_mod(const ModuleMorphism& f);

// dimension of M_v / (sum of incoming arrow images), per vertex
std::vector<std::size_t> top_multiplicities(const Module& m);

struct ModuleCover {
    std::vector<std::size_t> multiplicities; // cover = projective_sum of these
    Module cover;
    ModuleMorphism epi; // minimal: kernel lies in the radical of the cover
};
ModuleCover projective_cover(const Module& m);

} // namespace projhom
