#include "projhom/resolution.hpp"

#include "projhom/sampler.hpp"

namespace projhom {

Resolution minimal_resolution(const Module& m, std::size_t cutoff) {
    ProjCover c0 = proj_cover(m);
    std::vector<ProjObject> terms{c0.cover};
    std::vector<ProjMorphism> differentials;
    ModuleMorphism augmentation = c0.epi;

    ModuleMorphism onto = c0.epi; // cover -> current kernel (initially M)
    bool truncated = false;
    while (true) {
        ModuleKernel k = kernel_mod(onto);
        if (k.module.is_zero())
            break;
        if (differentials.size() >= cutoff) {
            truncated = true;
            break;
        }
        ProjCover next = proj_cover(k.module);
        ModuleMorphism diff = compose(k.inclusion, next.epi);
        differentials.emplace_back(next.cover, terms.back(),
                                   ModuleMorphism(diff));
        terms.push_back(next.cover);
        onto = next.epi;
    }
    return Resolution{m, std::move(terms), std::move(differentials), std::move(augmentation),
                      truncated, true};
}

DimValue pdim(const Module& m, std::size_t cutoff) {
    Resolution r = minimal_resolution(m, cutoff);
    return r.truncated ? DimValue::above_cutoff() : DimValue::of(r.length());
}

DimReport gldim_report(const AlgebraPtr& alg, std::size_t cutoff) {
    DimReport report;
    report.cutoff = cutoff;
    report.gldim = DimValue::of(0);
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
        DimValue d = pdim(simple_of(alg, static_cast<int>(v)), cutoff);
        report.per_simple.push_back(d);
        if (!d.finite)
            report.gldim = DimValue::above_cutoff();
        else if (report.gldim.finite && d.value > report.gldim.value)
            report.gldim = d;
    }
    return report;
}

GldimComparison gldim_compare(const AlgebraPtr& alg, std::size_t cutoff) {
    DimReport lambda = gldim_report(alg, cutoff);
    DimReport opposite = gldim_report(alg->opposite(), cutoff);
    bool equal = lambda.gldim == opposite.gldim;
    return GldimComparison{std::move(lambda), std::move(opposite), equal};
}

bool split_factorization_check(const AlgebraPtr& alg, std::size_t samples, std::uint64_t seed) {
    for (std::size_t trial = 0; trial < samples; ++trial) {
        SplitMix64 rng = trial_rng(seed, trial);
        ProjMorphism f = sample_morphism(alg, rng);

        ModuleImage img = image_mod(f.underlying());
        auto ident = identify_projective(img.module);
        if (!ident)
            return false;
        ProjObject b = ident->object;
        ProjMorphism g(b, f.target(), compose(img.inclusion, ident->iso));
        ProjMorphism h(f.source(), b, compose(ident->iso.inverse(), img.corestriction));
        if (compose(g, h) != f)
            return false;

        auto section = factor_through(h, ProjMorphism::identity(b), SolveSide::right);
        if (!section || compose(h, *section) != ProjMorphism::identity(b))
            return false;
        auto retraction = factor_through(g, ProjMorphism::identity(b), SolveSide::left);
        if (!retraction || compose(*retraction, g) != ProjMorphism::identity(b))
            return false;
    }
    return true;
}

} // namespace projhom
