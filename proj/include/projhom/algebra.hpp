#pragma once

#include <map>
#include <memory>
#include <vector>

#include "projhom/matrix.hpp"
#include "projhom/quiver.hpp"

namespace projhom {

/* A relation is a linear combination of parallel paths, each of length >= 2.
 * The leading term under length-lex order becomes a rewrite rule. */
struct Relation {
    std::vector<std::pair<Scalar, Path>> terms;
};

// linear combination over algebra basis indices, sorted by index
using BasisCombo = std::vector<std::pair<int, Scalar>>;

struct AlgebraOptions {
    std::size_t path_length_cap = 64;
};

/* Finite-dimensional path algebra: quiver + admissible relations, with the
 * reduced-path basis and multiplication table. Built by build_algebra, which
 * also constructs the opposite algebra; the two are permanently paired so
 * opposite() of the opposite returns the original object. Immutable. */
class PathAlgebra {
public:
    const Quiver& quiver() const { return quiver_; }
    long characteristic() const { return characteristic_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t vertex_count() const { return quiver_.vertex_count(); }

    int basis_index(const Path& p) const; // -1 if not a basis path

    std::shared_ptr<const PathAlgebra> opposite() const;

    // normal form of an arbitrary composable word
    BasisCombo reduce_to_basis(const Path& word) const;

    // NF(basis[i] then basis[j]); empty combo when endpoints do not meet
    const BasisCombo& then_product(int i, int j) const;

    // basis indices of paths v -> w, in basis order
    const std::vector<int>& paths_from(int v, int w) const;

    std::string describe() const; // one-line summary

private:
    friend struct AlgebraPair;
    friend std::shared_ptr<const PathAlgebra> build_algebra(Quiver, long, std::vector<Relation>,
                                                            AlgebraOptions);
    PathAlgebra(Quiver quiver, long characteristic, std::vector<Relation> relations,
                const AlgebraOptions& opts);

    struct Rule {
        Path lead;
        std::vector<std::pair<Scalar, Path>> rest; // lead rewrites to this combo
    };

    void validate_relations();
    void extract_rules();
    void check_confluence() const;
    void enumerate_basis(std::size_t cap);
    void build_products();
    void check_arrow_ideal_nilpotent() const;

    bool is_reduced_tail(const Path& p) const; // no rule lead ends at the last arrow
    std::map<Path, Scalar, PathLess> normal_form(const Path& word) const;
    std::map<Path, Scalar, PathLess> normal_form(std::map<Path, Scalar, PathLess> combo) const;

    Quiver quiver_;
    long characteristic_;
    std::vector<Relation> relations_;
    std::vector<Rule> rules_;
    std::vector<Path> basis_;
    std::map<Path, int, PathLess> basis_lookup_;
    std::vector<std::vector<BasisCombo>> products_; // [i][j] = NF(basis_i then basis_j)
    std::vector<std::vector<std::vector<int>>> paths_from_; // [v][w] -> basis indices

    std::weak_ptr<const void> owner_;
    const PathAlgebra* sibling_ = nullptr;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

AlgebraPtr build_algebra(Quiver quiver, long characteristic, std::vector<Relation> relations,
                         AlgebraOptions opts = {});

inline AlgebraPtr opposite_algebra(const AlgebraPtr& alg) { return alg->opposite(); }

Path reverse_path(const Path& p);

} // namespace projhom
