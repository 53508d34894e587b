#include "projhom/sampler.hpp"

namespace projhom {

SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 base(seed);
    return SplitMix64(base.next() + trial);
}

ProjObject sample_object(const AlgebraPtr& alg, SplitMix64& rng, long max_mult) {
    std::vector<std::size_t> mult(alg->vertex_count());
    for (auto& m : mult)
        m = static_cast<std::size_t>(rng.in_range(0, max_mult));
    return ProjObject(alg, std::move(mult));
}

ProjMorphism sample_morphism(const ProjObject& x, const ProjObject& y, SplitMix64& rng,
                             long bound) {
    long ch = x.algebra()->characteristic();
    ProjMorphism f = ProjMorphism::zero(x, y);
    for (const auto& b : hom_basis(x, y))
        f = f + b.scaled(Scalar::of_int(rng.in_range(-bound, bound), ch));
    return f;
}

ProjMorphism sample_morphism(const AlgebraPtr& alg, SplitMix64& rng) {
    ProjObject x = sample_object(alg, rng);
    ProjObject y = sample_object(alg, rng);
    return sample_morphism(x, y, rng);
}

namespace {

// block-identity inclusion of the first summand copies: C -> X where
// mult_X[v] = mult_C[v] + mult_D[v] and C's copies come first at each vertex
ProjMorphism canonical_inclusion(const ProjObject& c, const ProjObject& x) {
    const AlgebraPtr& alg = c.algebra();
    long ch = alg->characteristic();
    std::size_t nv = alg->vertex_count();
    std::vector<Matrix> maps;
    for (std::size_t w = 0; w < nv; ++w)
        maps.emplace_back(x.layout().dims[w], c.layout().dims[w], ch);

    for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t copy = 0; copy < c.multiplicities()[v]; ++copy) {
            // locate the matching summands in both layouts
            std::size_t sc = 0, sx = 0;
            for (std::size_t u = 0; u < v; ++u) {
                sc += c.multiplicities()[u];
                sx += x.multiplicities()[u];
            }
            sc += copy;
            sx += copy;
            for (std::size_t w = 0; w < nv; ++w) {
                std::size_t len =
                    alg->paths_from(static_cast<int>(v), static_cast<int>(w)).size();
                if (len == 0)
                    continue;
                maps[w].set_block(x.layout().offsets[sx][w], c.layout().offsets[sc][w],
                                  Matrix::identity(len, ch));
            }
        }
    }
    return ProjMorphism(c, x, ModuleMorphism(c.realized(), x.realized(), std::move(maps)));
}

} // namespace

ProjMorphism sample_split_idempotent(const AlgebraPtr& alg, SplitMix64& rng) {
    ProjObject c = sample_object(alg, rng);
    ProjObject d = sample_object(alg, rng);
    std::vector<std::size_t> xm(alg->vertex_count());
    for (std::size_t v = 0; v < xm.size(); ++v)
        xm[v] = c.multiplicities()[v] + d.multiplicities()[v];
    ProjObject x(alg, xm);

    ProjMorphism s0 = canonical_inclusion(c, x);
    // the canonical projection is the transpose block structure
    std::vector<Matrix> pmaps;
    for (std::size_t w = 0; w < alg->vertex_count(); ++w)
        pmaps.push_back(s0.underlying().vertex_map(static_cast<int>(w)).transpose());
    ProjMorphism p0(x, c, ModuleMorphism(x.realized(), c.realized(), std::move(pmaps)));

    // conjugate by a sampled automorphism; fall back to the identity
    ProjMorphism w = ProjMorphism::identity(x);
    for (int attempt = 0; attempt < 8; ++attempt) {
        ProjMorphism cand = sample_morphism(x, x, rng);
        if (cand.underlying().is_isomorphism()) {
            w = cand;
            break;
        }
    }
    ProjMorphism winv(x, x, w.underlying().inverse());
    return compose(w, compose(s0, compose(p0, winv)));
}

} // namespace projhom
