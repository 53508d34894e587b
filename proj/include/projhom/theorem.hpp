#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projhom/projcat.hpp"

namespace projhom {

/* Composable sequence of proj-morphisms. */
struct MorphismChain {
    std::vector<ProjMorphism> maps;

    static MorphismChain of(std::vector<ProjMorphism> maps);

    std::size_t length() const { return maps.size(); }
    const ProjObject& terminal() const { return maps.back().target(); }
    bool is_complex() const; // consecutive composites vanish
};

/* Every intermediate of a cokernel construction, one field per displayed
 * identity of the underlying argument; check_identities() re-evaluates all
 * of them from scratch. For n >= 1 the fields follow the ladder
 *
 *   A_0 -a0-> A_1 -a1-> ... -> A_{n+1} -a_{n+1}-> A_{n+2}
 *             B_1 -b1-> ... -> B_n -bn-> A_{n+1}
 *
 * with lifts c_i: A_i -> B_i, d_{i+1}: A_{i+1} -> B_i, the idempotent
 * e = d_{n+1} b_n on B_n and its splitting (C, f, g). For n = 0 they hold
 * a_1, the 0-kernel factorization a_1 = b c, the section r of c, the
 * idempotent 1 - rc and its splitting. */
struct ConstructionTrace {
    std::size_t n = 0;
    std::vector<ProjMorphism> a; // a_0 .. a_{n+2}; for n = 0: a_0, a_1
    std::vector<ProjMorphism> b; // b_1 .. b_n; for n = 0: the 0-kernel mono
    std::vector<ProjMorphism> c; // c_1 .. c_{n+1}; for n = 0: the split epi
    std::vector<ProjMorphism> d; // d_2 .. d_{n+2}
    std::optional<ProjMorphism> section;    // r with c r = 1 (n = 0 only)
    std::optional<ProjMorphism> idempotent; // e
    std::optional<ProjObject> summand;      // C
    std::optional<ProjMorphism> split_into; // f: C -> ...
    std::optional<ProjMorphism> split_onto; // g: ... -> C
    std::vector<ProjMorphism> output;
    bool used_fast_path = false;

    std::vector<std::pair<std::string, bool>> check_identities() const;
    bool identities_hold() const;
    std::string to_text() const;
};

// chain a_1 .. a_count with a_i a weak cokernel of a_{i-1}
MorphismChain iterate_weak_cokernels(const ProjMorphism& a0, std::size_t count);

/* Iterated minimal weak kernels b_1 .. b_n of a; throws
 * TheoremError(MonoFailure) when b_1 fails the monomorphism test, which
 * happens exactly when gldim(mod Lambda) exceeds n+1. */
MorphismChain compute_n_kernel(const ProjMorphism& a, std::size_t n);

/* Hom-exactness verifiers, quantified over the indecomposable projectives. */
bool verify_n_cokernel(const ProjMorphism& a0, const MorphismChain& chain);
bool verify_n_kernel(const ProjMorphism& a, const MorphismChain& chain);
bool verify_weak_cokernel(const ProjMorphism& a0, const ProjMorphism& w);
bool verify_weak_kernel(const ProjMorphism& a, const ProjMorphism& k);

enum class FastPathMode { automatic, force_general };

struct NCokernelResult {
    MorphismChain chain; // a_1, ..., a_{n-1}, g c_n
    ConstructionTrace trace;
};

/* The n >= 1 construction: weak-cokernel ladder, n-kernel, c- and d-lifts,
 * idempotent splitting. In automatic mode the n = 1 shortcut (d_2 b_1 = 1,
 * so f = g = 1) is attempted first. */
NCokernelResult construct_n_cokernel(const ProjMorphism& a0, std::size_t n,
                                     FastPathMode mode = FastPathMode::automatic);

struct ZeroCokernelResult {
    ProjMorphism epi;  // q = g a_0, a categorical epimorphism
    ProjMorphism mono; // m = f, a split monomorphism; m q = a_0
    ConstructionTrace trace;
};

ZeroCokernelResult construct_0_cokernel(const ProjMorphism& a0);

} // namespace projhom
