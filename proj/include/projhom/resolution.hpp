#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projhom/projcat.hpp"

namespace projhom {

/* A projective dimension that may exceed the computation cutoff. AboveCutoff
 * is a distinct value, never conflated with a number. */
struct DimValue {
    bool finite;
    std::size_t value; // meaningful only when finite

    static DimValue of(std::size_t v) { return DimValue{true, v}; }
    static DimValue above_cutoff() { return DimValue{false, 0}; }

    bool operator==(const DimValue& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    std::string str(std::size_t cutoff) const {
        return finite ? std::to_string(value) : ">" + std::to_string(cutoff);
    }
};

/* Minimal projective resolution P_k -> ... -> P_0 -> M, built by iterated
 * projective covers of kernels. Stops early when a kernel vanishes;
 * truncated is set when the cutoff is reached first. */
struct Resolution {
    Module resolved;
    std::vector<ProjObject> terms;          // P_0 .. P_k
    std::vector<ProjMorphism> differentials; // d_i: P_i -> P_{i-1}
    ModuleMorphism augmentation;            // P_0 -> M
    bool truncated;
    bool minimal; // always true for this construction

    std::size_t length() const { return terms.size() - 1; }
};

Resolution minimal_resolution(const Module& m, std::size_t cutoff);

DimValue pdim(const Module& m, std::size_t cutoff);

struct DimReport {
    std::vector<DimValue> per_simple; // indexed by vertex
    DimValue gldim;
    std::size_t cutoff;
};

DimReport gldim_report(const AlgebraPtr& alg, std::size_t cutoff);

struct GldimComparison {
    DimReport lambda;
    DimReport opposite;
    bool equal;
};

GldimComparison gldim_compare(const AlgebraPtr& alg, std::size_t cutoff);

/* Witnesses the gldim-0 characterization: every sampled morphism factors as
 * f = g h with h a split epimorphism and g a split monomorphism, all
 * verified by exact composition. */
bool split_factorization_check(const AlgebraPtr& alg, std::size_t samples, std::uint64_t seed);

} // namespace projhom
