#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projhom/module.hpp"

namespace projhom {

/* Object of proj Lambda: a formal direct sum of indecomposable projectives
 * with its realized module. Summands are ordered by vertex then copy, and
 * two objects are equal iff they share the algebra and the multiplicity
 * vector, so the identification is canonical throughout. */
class ProjObject {
public:
    ProjObject(AlgebraPtr algebra, std::vector<std::size_t> multiplicities);

    static ProjObject zero(AlgebraPtr algebra);
    static ProjObject indecomposable(AlgebraPtr algebra, int vertex);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<std::size_t>& multiplicities() const { return mult_; }
    const Module& realized() const { return realized_; }
    const SummandLayout& layout() const { return layout_; }
    std::size_t summand_count() const { return layout_.summand_vertex.size(); }
    bool is_zero() const { return realized_.is_zero(); }

    std::string str() const; // e.g. "P(1)^2 + P(3)"

    bool operator==(const ProjObject& o) const {
        return algebra_.get() == o.algebra_.get() && mult_ == o.mult_;
    }
    bool operator!=(const ProjObject& o) const { return !(*this == o); }

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> mult_;
    SummandLayout layout_;
    Module realized_;
};

class ProjMorphism {
public:
    ProjMorphism(ProjObject source, ProjObject target, ModuleMorphism underlying);

    static ProjMorphism zero(ProjObject source, ProjObject target);
    static ProjMorphism identity(const ProjObject& x);

    const ProjObject& source() const { return source_; }
    const ProjObject& target() const { return target_; }
    const ModuleMorphism& underlying() const { return underlying_; }
    const AlgebraPtr& algebra() const { return source_.algebra(); }

    ProjMorphism operator+(const ProjMorphism& o) const;
    ProjMorphism operator-(const ProjMorphism& o) const;
    ProjMorphism scaled(const Scalar& s) const;
    bool is_zero() const { return underlying_.is_zero(); }

    bool operator==(const ProjMorphism& o) const {
        return source_ == o.source_ && target_ == o.target_ && underlying_ == o.underlying_;
    }
    bool operator!=(const ProjMorphism& o) const { return !(*this == o); }

    std::string str() const; // path-coefficient rendering

private:
    ProjObject source_;
    ProjObject target_;
    ModuleMorphism underlying_;
};

// g after f
ProjMorphism compose(const ProjMorphism& g, const ProjMorphism& f);

std::vector<ProjMorphism> hom_basis(const ProjObject& x, const ProjObject& y);

/* The duality Hom(-, Lambda): contravariant, swaps the two algebras of the
 * build_algebra pair, and is an exact involution on morphisms. */
ProjMorphism star_dual(const ProjMorphism& f);

/* Minimal weak kernel: projective cover of the module kernel, composed with
 * the kernel inclusion. Every morphism killed by f factors through it. */
ProjMorphism weak_kernel(const ProjMorphism& f);

// star of the weak kernel of the star
ProjMorphism weak_cokernel(const ProjMorphism& f);

struct ProjSplit {
    ProjObject object;  // C
    ProjMorphism into;  // f: C -> X, a split mono
    ProjMorphism onto;  // g: X -> C; into o onto == e, onto o into == id
};

// splits an idempotent endomorphism through its image, identified as a
// projective object via its top. Throws NotIdempotent.
ProjSplit split_idempotent(const ProjMorphism& e);

/* Categorical tests, quantified over the indecomposable projectives; by
 * additivity this is equivalent to quantifying over every object. */
bool is_mono_cat(const ProjMorphism& f);
bool is_epi_cat(const ProjMorphism& f);

/* right: find t with pivot o t == candidate; left: find t with
 * t o pivot == candidate. Solved in hom-basis coordinates; nullopt when the
 * system is inconsistent. */
std::optional<ProjMorphism> factor_through(const ProjMorphism& pivot,
                                           const ProjMorphism& candidate, SolveSide side);

/* Identify a module as a projective object via its top, with the explicit
 * isomorphism from the canonical realization; nullopt when the module is not
 * projective (the cover has a kernel). */
struct ProjectiveIdentification {
    ProjObject object;
    ModuleMorphism iso; // object.realized() -> module
};
std::optional<ProjectiveIdentification> identify_projective(const Module& m);

struct ProjCover {
    ProjObject cover;
    ModuleMorphism epi; // cover.realized() -> m, minimal
};
ProjCover proj_cover(const Module& m);

} // namespace projhom
