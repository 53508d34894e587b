#include "projhom/projcat.hpp"

#include <map>
#include <sstream>

namespace projhom {

namespace {

// local position of every basis path inside its paths_from(source, target) list
std::vector<int> local_positions(const AlgebraPtr& alg) {
    std::vector<int> pos(alg->dimension(), -1);
    std::size_t nv = alg->vertex_count();
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t w = 0; w < nv; ++w) {
            const auto& list = alg->paths_from(static_cast<int>(v), static_cast<int>(w));
            for (std::size_t i = 0; i < list.size(); ++i)
                pos[list[i]] = static_cast<int>(i);
        }
    return pos;
}

std::string path_str(const AlgebraPtr& alg, const Path& p) {
    if (p.is_trivial())
        return "e_" + alg->quiver().vertex_label(p.source);
    // function-composition order: last applied arrow first
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty())
            s += "*";
        s += alg->quiver().arrow(*it).name;
    }
    return s;
}

} // namespace

ProjObject::ProjObject(AlgebraPtr algebra, std::vector<std::size_t> multiplicities)
    : algebra_(std::move(algebra)), mult_(std::move(multiplicities)),
      layout_(projective_layout(algebra_, mult_)),
      realized_(projective_sum(algebra_, mult_)) {}

ProjObject ProjObject::zero(AlgebraPtr algebra) {
    std::vector<std::size_t> mult(algebra->vertex_count(), 0);
    return ProjObject(std::move(algebra), std::move(mult));
}

ProjObject ProjObject::indecomposable(AlgebraPtr algebra, int vertex) {
    std::vector<std::size_t> mult(algebra->vertex_count(), 0);
    mult.at(vertex) = 1;
    return ProjObject(std::move(algebra), std::move(mult));
}

std::string ProjObject::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t v = 0; v < mult_.size(); ++v) {
        if (mult_[v] == 0)
            continue;
        if (!first)
            os << " + ";
        os << "P(" << algebra_->quiver().vertex_label(static_cast<int>(v)) << ")";
        if (mult_[v] > 1)
            os << "^" << mult_[v];
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

ProjMorphism::ProjMorphism(ProjObject source, ProjObject target, ModuleMorphism underlying)
    : source_(std::move(source)), target_(std::move(target)), underlying_(std::move(underlying)) {
    if (underlying_.source() != source_.realized() || underlying_.target() != target_.realized())
        throw ShapeError("underlying morphism does not match the realized modules");
}

ProjMorphism ProjMorphism::zero(ProjObject source, ProjObject target) {
    auto u = ModuleMorphism::zero(source.realized(), target.realized());
    return ProjMorphism(std::move(source), std::move(target), std::move(u));
}

ProjMorphism ProjMorphism::identity(const ProjObject& x) {
    return ProjMorphism(x, x, ModuleMorphism::identity(x.realized()));
}

ProjMorphism ProjMorphism::operator+(const ProjMorphism& o) const {
    return ProjMorphism(source_, target_, underlying_ + o.underlying_);
}

ProjMorphism ProjMorphism::operator-(const ProjMorphism& o) const {
    return ProjMorphism(source_, target_, underlying_ - o.underlying_);
}

ProjMorphism ProjMorphism::scaled(const Scalar& s) const {
    return ProjMorphism(source_, target_, underlying_.scaled(s));
}

ProjMorphism compose(const ProjMorphism& g, const ProjMorphism& f) {
    if (f.target() != g.source())
        throw ShapeError("proj morphism composition endpoint mismatch");
    return ProjMorphism(f.source(), g.target(), compose(g.underlying(), f.underlying()));
}

std::vector<ProjMorphism> hom_basis(const ProjObject& x, const ProjObject& y) {
    std::vector<ProjMorphism> out;
    for (auto& f : hom_basis(x.realized(), y.realized()))
        out.emplace_back(x, y, std::move(f));
    return out;
}

/* ---- path-coefficient form -------------------------------------------- */

namespace {

struct PathMatrix {
    AlgebraPtr algebra;
    std::vector<std::size_t> source_mult, target_mult;
    // [target summand][source summand] -> combo of paths tgt_vertex -> src_vertex
    std::vector<std::vector<BasisCombo>> entries;
};

PathMatrix to_path_matrix(const ProjMorphism& f) {
    const AlgebraPtr& alg = f.algebra();
    PathMatrix pm;
    pm.algebra = alg;
    pm.source_mult = f.source().multiplicities();
    pm.target_mult = f.target().multiplicities();
    const SummandLayout& src = f.source().layout();
    const SummandLayout& tgt = f.target().layout();
    pm.entries.assign(tgt.summand_vertex.size(),
                      std::vector<BasisCombo>(src.summand_vertex.size()));

    for (std::size_t j = 0; j < src.summand_vertex.size(); ++j) {
        int v = src.summand_vertex[j];
        // column of the generator e_v of summand j
        const auto& from_vv = alg->paths_from(v, v);
        int trivial_idx = alg->basis_index(Path::trivial(v));
        std::size_t local = 0;
        while (from_vv[local] != trivial_idx)
            ++local;
        const Matrix& at_v = f.underlying().vertex_map(v);
        std::size_t gen_col = src.offsets[j][v] + local;
        for (std::size_t i = 0; i < tgt.summand_vertex.size(); ++i) {
            int w = tgt.summand_vertex[i];
            const auto& paths = alg->paths_from(w, v);
            BasisCombo combo;
            for (std::size_t l = 0; l < paths.size(); ++l) {
                const Scalar& c = at_v.at(tgt.offsets[i][v] + l, gen_col);
                if (!c.is_zero())
                    combo.emplace_back(paths[l], c);
            }
            pm.entries[i][j] = std::move(combo);
        }
    }
    return pm;
}

ProjMorphism from_path_matrix(const PathMatrix& pm) {
    const AlgebraPtr& alg = pm.algebra;
    long ch = alg->characteristic();
    ProjObject source(alg, pm.source_mult);
    ProjObject target(alg, pm.target_mult);
    const SummandLayout& src = source.layout();
    const SummandLayout& tgt = target.layout();
    std::vector<int> pos = local_positions(alg);

    std::vector<Matrix> maps;
    for (std::size_t u = 0; u < alg->vertex_count(); ++u)
        maps.emplace_back(tgt.dims[u], src.dims[u], ch);

    for (std::size_t i = 0; i < tgt.summand_vertex.size(); ++i) {
        int w = tgt.summand_vertex[i];
        for (std::size_t j = 0; j < src.summand_vertex.size(); ++j) {
            int v = src.summand_vertex[j];
            for (const auto& [qidx, c] : pm.entries[i][j]) {
                const Path& q = alg->basis()[qidx];
                if (q.source != w || q.target != v)
                    throw Error("internal: path coefficient with wrong endpoints");
                // generator e_v maps to c*q; basis path p of P(v) maps to
                // c * NF(q then p) inside P(w)
                for (std::size_t u = 0; u < alg->vertex_count(); ++u) {
                    const auto& pv = alg->paths_from(v, static_cast<int>(u));
                    for (std::size_t l = 0; l < pv.size(); ++l) {
                        for (const auto& [kidx, d] : alg->then_product(qidx, pv[l])) {
                            std::size_t r = tgt.offsets[i][u] + pos[kidx];
                            std::size_t col = src.offsets[j][u] + l;
                            maps[u].set(r, col, maps[u].at(r, col) + c * d);
                        }
                    }
                }
            }
        }
    }
    ModuleMorphism underlying(source.realized(), target.realized(), std::move(maps));
    return ProjMorphism(std::move(source), std::move(target), std::move(underlying));
}

} // namespace

std::string ProjMorphism::str() const {
    const AlgebraPtr& alg = algebra();
    PathMatrix pm = to_path_matrix(*this);
    std::ostringstream os;
    os << source_.str() << " -> " << target_.str();
    if (source_.is_zero() || target_.is_zero())
        return os.str();
    os << " [";
    for (std::size_t i = 0; i < pm.entries.size(); ++i) {
        os << (i == 0 ? "[" : "; [");
        for (std::size_t j = 0; j < pm.entries[i].size(); ++j) {
            if (j > 0)
                os << ", ";
            const BasisCombo& combo = pm.entries[i][j];
            if (combo.empty()) {
                os << "0";
                continue;
            }
            bool first = true;
            for (const auto& [idx, c] : combo) {
                if (!first)
                    os << " + ";
                if (!c.is_one())
                    os << c.str() << "*";
                os << path_str(alg, alg->basis()[idx]);
                first = false;
            }
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

ProjMorphism star_dual(const ProjMorphism& f) {
    const AlgebraPtr& alg = f.algebra();
    AlgebraPtr op = alg->opposite();
    PathMatrix pm = to_path_matrix(f);

    PathMatrix out;
    out.algebra = op;
    out.source_mult = f.target().multiplicities();
    out.target_mult = f.source().multiplicities();
    out.entries.assign(f.source().summand_count(),
                       std::vector<BasisCombo>(f.target().summand_count()));

    for (std::size_t i = 0; i < pm.entries.size(); ++i) {
        for (std::size_t j = 0; j < pm.entries[i].size(); ++j) {
            // transpose the block structure and reverse each path; the
            // reversed path may be reducible over the opposite algebra
            std::map<int, Scalar> acc;
            for (const auto& [qidx, c] : pm.entries[i][j]) {
                Path rq = reverse_path(alg->basis()[qidx]);
                for (const auto& [kidx, d] : op->reduce_to_basis(rq)) {
                    auto [it, fresh] = acc.emplace(kidx, c * d);
                    if (!fresh)
                        it->second += c * d;
                }
            }
            BasisCombo combo;
            for (const auto& [k, c] : acc)
                if (!c.is_zero())
                    combo.emplace_back(k, c);
            out.entries[j][i] = std::move(combo);
        }
    }
    return from_path_matrix(out);
}

/* ---- weak kernels and cokernels --------------------------------------- */

ProjCover proj_cover(const Module& m) {
    ModuleCover c = projective_cover(m);
    ProjObject obj(m.algebra(), c.multiplicities);
    return ProjCover{std::move(obj), std::move(c.epi)};
}

std::optional<ProjectiveIdentification> identify_projective(const Module& m) {
    ModuleCover c = projective_cover(m);
    if (!c.epi.is_isomorphism())
        return std::nullopt;
    ProjObject obj(m.algebra(), c.multiplicities);
    return ProjectiveIdentification{std::move(obj), std::move(c.epi)};
}

ProjMorphism weak_kernel(const ProjMorphism& f) {
    ModuleKernel k = kernel_mod(f.underlying());
    ProjCover cover = proj_cover(k.module);
    ModuleMorphism underlying = compose(k.inclusion, cover.epi);
    return ProjMorphism(cover.cover, f.source(), std::move(underlying));
}

ProjMorphism weak_cokernel(const ProjMorphism& f) {
    return star_dual(weak_kernel(star_dual(f)));
}

ProjSplit split_idempotent(const ProjMorphism& e) {
    if (e.source() != e.target())
        throw NotIdempotent("idempotent must be an endomorphism");
    if (compose(e, e) != e)
        throw NotIdempotent("endomorphism is not idempotent");

    ModuleImage img = image_mod(e.underlying());
    auto ident = identify_projective(img.module);
    if (!ident)
        throw Error("internal: image of an idempotent failed to split off as a projective");

    ModuleMorphism rho = ident->iso;                     // C.realized -> image
    ModuleMorphism into_mod = compose(img.inclusion, rho);
    ModuleMorphism onto_mod = compose(rho.inverse(), img.corestriction);

    ProjMorphism into(ident->object, e.source(), std::move(into_mod));
    ProjMorphism onto(e.source(), ident->object, std::move(onto_mod));
    if (compose(into, onto) != e)
        throw Error("internal: idempotent splitting failed f*g == e");
    if (compose(onto, into) != ProjMorphism::identity(ident->object))
        throw Error("internal: idempotent splitting failed g*f == 1");
    return ProjSplit{std::move(ident->object), std::move(into), std::move(onto)};
}

/* ---- categorical tests ------------------------------------------------- */

bool is_mono_cat(const ProjMorphism& f) {
    const AlgebraPtr& alg = f.algebra();
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
        Module t = projective_of(alg, static_cast<int>(v));
        auto basis = hom_basis(t, f.source().realized());
        if (basis.empty())
            continue;
        Matrix cols(flatten(compose(f.underlying(), basis[0])).rows(), basis.size(),
                    alg->characteristic());
        for (std::size_t i = 0; i < basis.size(); ++i)
            cols.set_block(0, i, flatten(compose(f.underlying(), basis[i])));
        if (rank(cols) != basis.size())
            return false;
    }
    return true;
}

bool is_epi_cat(const ProjMorphism& f) {
    const AlgebraPtr& alg = f.algebra();
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
        Module t = projective_of(alg, static_cast<int>(v));
        auto basis = hom_basis(f.target().realized(), t);
        if (basis.empty())
            continue;
        Matrix cols(flatten(compose(basis[0], f.underlying())).rows(), basis.size(),
                    alg->characteristic());
        for (std::size_t i = 0; i < basis.size(); ++i)
            cols.set_block(0, i, flatten(compose(basis[i], f.underlying())));
        if (rank(cols) != basis.size())
            return false;
    }
    return true;
}

std::optional<ProjMorphism> factor_through(const ProjMorphism& pivot,
                                           const ProjMorphism& candidate, SolveSide side) {
    const AlgebraPtr& alg = pivot.algebra();
    long ch = alg->characteristic();

    std::vector<ProjMorphism> basis;
    if (side == SolveSide::right) {
        if (pivot.target() != candidate.target())
            throw ShapeError("factor_through(right): targets must agree");
        basis = hom_basis(candidate.source(), pivot.source());
    } else {
        if (pivot.source() != candidate.source())
            throw ShapeError("factor_through(left): sources must agree");
        basis = hom_basis(pivot.target(), candidate.target());
    }

    Matrix rhs = flatten(candidate.underlying());
    Matrix cols(rhs.rows(), basis.size(), ch);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        ProjMorphism composed = side == SolveSide::right ? compose(pivot, basis[i])
                                                         : compose(basis[i], pivot);
        cols.set_block(0, i, flatten(composed.underlying()));
    }
    auto x = solve_factor(cols, rhs, SolveSide::right);
    if (!x)
        return std::nullopt;

    ProjMorphism t = side == SolveSide::right
                         ? ProjMorphism::zero(candidate.source(), pivot.source())
                         : ProjMorphism::zero(pivot.target(), candidate.target());
    for (std::size_t i = 0; i < basis.size(); ++i)
        t = t + basis[i].scaled(x->at(i, 0));
    return t;
}

} // namespace projhom
