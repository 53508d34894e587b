#include "projhom/module.hpp"

#include <algorithm>

namespace projhom {

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), arrow_maps_(std::move(arrow_maps)) {
    const Quiver& q = algebra_->quiver();
    if (dims_.size() != q.vertex_count())
        throw ShapeError("module dimension vector has wrong length");
    if (arrow_maps_.size() != q.arrow_count())
        throw ShapeError("module needs one matrix per arrow");
    for (std::size_t a = 0; a < arrow_maps_.size(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (arrow_maps_[a].rows() != dims_[ar.target] || arrow_maps_[a].cols() != dims_[ar.source])
            throw ShapeError("arrow map shape mismatch at arrow '" + ar.name + "'");
        if (arrow_maps_[a].characteristic() != algebra_->characteristic())
            throw FieldMismatch("arrow map over the wrong field");
    }
    // every relation must act as zero
    for (const auto& rel : algebra_->relations()) {
        const Path& first = rel.terms.front().second;
        Matrix sum(dims_[first.target], dims_[first.source], algebra_->characteristic());
        for (const auto& [coeff, path] : rel.terms)
            sum = sum + path_action(path).scaled(coeff);
        if (!sum.is_zero())
            throw Error("module does not satisfy the algebra relations");
    }
}

Module Module::zero(AlgebraPtr algebra) {
    const Quiver& q = algebra->quiver();
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        maps.emplace_back(0, 0, algebra->characteristic());
    return Module(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Module::total_dim() const {
    std::size_t t = 0;
    for (std::size_t d : dims_)
        t += d;
    return t;
}

Matrix Module::path_action(const Path& p) const {
    Matrix m = Matrix::identity(dims_.at(p.source), algebra_->characteristic());
    for (int a : p.arrows)
        m = arrow_maps_.at(a) * m;
    return m;
}

bool Module::operator==(const Module& o) const {
    return algebra_.get() == o.algebra_.get() && dims_ == o.dims_ && arrow_maps_ == o.arrow_maps_;
}

ModuleMorphism::ModuleMorphism(Module source, Module target, std::vector<Matrix> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)),
      vertex_maps_(std::move(vertex_maps)) {
    if (source_.algebra().get() != target_.algebra().get())
        throw Error("morphism between modules over different algebras");
    const Quiver& q = source_.algebra()->quiver();
    if (vertex_maps_.size() != q.vertex_count())
        throw ShapeError("morphism needs one matrix per vertex");
    for (std::size_t v = 0; v < vertex_maps_.size(); ++v)
        if (vertex_maps_[v].rows() != target_.dim(v) || vertex_maps_[v].cols() != source_.dim(v))
            throw ShapeError("vertex map shape mismatch at vertex " + q.vertex_label(v));
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (target_.arrow_map(a) * vertex_maps_[ar.source] !=
            vertex_maps_[ar.target] * source_.arrow_map(a))
            throw Error("vertex maps do not commute with arrow '" + ar.name + "'");
    }
}

ModuleMorphism ModuleMorphism::zero(Module source, Module target) {
    std::vector<Matrix> maps;
    long ch = source.algebra()->characteristic();
    for (std::size_t v = 0; v < source.dims().size(); ++v)
        maps.emplace_back(target.dim(v), source.dim(v), ch);
    return ModuleMorphism(std::move(source), std::move(target), std::move(maps));
}

ModuleMorphism ModuleMorphism::identity(const Module& m) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        maps.push_back(Matrix::identity(m.dim(v), m.algebra()->characteristic()));
    return ModuleMorphism(m, m, std::move(maps));
}

ModuleMorphism ModuleMorphism::operator+(const ModuleMorphism& o) const {
    if (source_ != o.source_ || target_ != o.target_)
        throw ShapeError("morphism sum endpoint mismatch");
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < vertex_maps_.size(); ++v)
        maps.push_back(vertex_maps_[v] + o.vertex_maps_[v]);
    return ModuleMorphism(source_, target_, std::move(maps));
}

ModuleMorphism ModuleMorphism::operator-(const ModuleMorphism& o) const {
    return *this + o.scaled(-Scalar::one(source_.algebra()->characteristic()));
}

ModuleMorphism ModuleMorphism::scaled(const Scalar& s) const {
    std::vector<Matrix> maps;
    for (const auto& m : vertex_maps_)
        maps.push_back(m.scaled(s));
    return ModuleMorphism(source_, target_, std::move(maps));
}

bool ModuleMorphism::is_zero() const {
    for (const auto& m : vertex_maps_)
        if (!m.is_zero())
            return false;
    return true;
}

bool ModuleMorphism::is_vertexwise_injective() const {
    for (const auto& m : vertex_maps_)
        if (rank(m) != m.cols())
            return false;
    return true;
}

bool ModuleMorphism::is_vertexwise_surjective() const {
    for (const auto& m : vertex_maps_)
        if (rank(m) != m.rows())
            return false;
    return true;
}

bool ModuleMorphism::is_isomorphism() const {
    for (const auto& m : vertex_maps_)
        if (m.rows() != m.cols() || rank(m) != m.rows())
            return false;
    return true;
}

ModuleMorphism ModuleMorphism::inverse() const {
    std::vector<Matrix> maps;
    for (const auto& m : vertex_maps_)
        maps.push_back(projhom::inverse(m));
    return ModuleMorphism(target_, source_, std::move(maps));
}

bool ModuleMorphism::operator==(const ModuleMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && vertex_maps_ == o.vertex_maps_;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
    if (f.target() != g.source())
        throw ShapeError("morphism composition endpoint mismatch");
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.source().dims().size(); ++v)
        maps.push_back(g.vertex_map(v) * f.vertex_map(v));
    return ModuleMorphism(f.source(), g.target(), std::move(maps));
}

Matrix flatten(const ModuleMorphism& f) {
    long ch = f.source().algebra()->characteristic();
    std::size_t total = 0;
    for (std::size_t v = 0; v < f.source().dims().size(); ++v)
        total += f.target().dim(v) * f.source().dim(v);
    Matrix col(total, 1, ch);
    std::size_t at = 0;
    for (std::size_t v = 0; v < f.source().dims().size(); ++v) {
        const Matrix& m = f.vertex_map(v);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                col.set(at++, 0, m.at(i, j));
    }
    return col;
}

ModuleMorphism unflatten(const Module& source, const Module& target, const Matrix& column) {
    long ch = source.algebra()->characteristic();
    std::vector<Matrix> maps;
    std::size_t at = 0;
    for (std::size_t v = 0; v < source.dims().size(); ++v) {
        Matrix m(target.dim(v), source.dim(v), ch);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.set(i, j, column.at(at++, 0));
        maps.push_back(std::move(m));
    }
    return ModuleMorphism(source, target, std::move(maps));
}

Module projective_of(const AlgebraPtr& alg, int v) {
    const Quiver& q = alg->quiver();
    long ch = alg->characteristic();
    std::size_t nv = q.vertex_count();

    // local position of each basis path inside its (v, w) list
    std::vector<std::size_t> dims(nv);
    std::vector<std::vector<int>> local(nv); // [w] -> basis indices
    std::vector<int> pos(alg->dimension(), -1);
    for (std::size_t w = 0; w < nv; ++w) {
        local[w] = alg->paths_from(v, static_cast<int>(w));
        dims[w] = local[w].size();
        for (std::size_t i = 0; i < local[w].size(); ++i)
            pos[local[w][i]] = static_cast<int>(i);
    }

    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix m(dims[ar.target], dims[ar.source], ch);
        Path arrow_path{ar.source, ar.target, {static_cast<int>(a)}};
        int ai = alg->basis_index(arrow_path);
        for (std::size_t col = 0; col < local[ar.source].size(); ++col) {
            int pi = local[ar.source][col];
            for (const auto& [k, coeff] : alg->then_product(pi, ai)) {
                if (pos[k] < 0)
                    throw Error("internal: path product left the projective");
                m.set(static_cast<std::size_t>(pos[k]), col, coeff);
            }
        }
        maps.push_back(std::move(m));
    }
    return Module(alg, std::move(dims), std::move(maps));
}

Module simple_of(const AlgebraPtr& alg, int v) {
    const Quiver& q = alg->quiver();
    long ch = alg->characteristic();
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        maps.emplace_back(dims[ar.target], dims[ar.source], ch);
    }
    return Module(alg, std::move(dims), std::move(maps));
}

SummandLayout projective_layout(const AlgebraPtr& alg, const std::vector<std::size_t>& mult) {
    const Quiver& q = alg->quiver();
    if (mult.size() != q.vertex_count())
        throw ShapeError("multiplicity vector has wrong length");
    SummandLayout layout;
    layout.dims.assign(q.vertex_count(), 0);
    for (std::size_t v = 0; v < mult.size(); ++v) {
        for (std::size_t c = 0; c < mult[v]; ++c) {
            layout.summand_vertex.push_back(static_cast<int>(v));
            std::vector<std::size_t> offs(q.vertex_count());
            for (std::size_t w = 0; w < q.vertex_count(); ++w) {
                offs[w] = layout.dims[w];
                layout.dims[w] += alg->paths_from(static_cast<int>(v), static_cast<int>(w)).size();
            }
            layout.offsets.push_back(std::move(offs));
        }
    }
    return layout;
}

Module projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& mult) {
    const Quiver& q = alg->quiver();
    long ch = alg->characteristic();
    SummandLayout layout = projective_layout(alg, mult);

    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        maps.emplace_back(layout.dims[ar.target], layout.dims[ar.source], ch);
    }
    for (std::size_t s = 0; s < layout.summand_vertex.size(); ++s) {
        Module p = projective_of(alg, layout.summand_vertex[s]);
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);
            maps[a].set_block(layout.offsets[s][ar.target], layout.offsets[s][ar.source],
                              p.arrow_map(static_cast<int>(a)));
        }
    }
    return Module(alg, layout.dims, std::move(maps));
}

std::vector<ModuleMorphism> hom_basis(const Module& m, const Module& n) {
    if (m.algebra().get() != n.algebra().get())
        throw Error("hom between modules over different algebras");
    const Quiver& q = m.algebra()->quiver();
    long ch = m.algebra()->characteristic();
    std::size_t nv = q.vertex_count();

    std::vector<std::size_t> offsets(nv);
    std::size_t unknowns = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        offsets[v] = unknowns;
        unknowns += n.dim(v) * m.dim(v);
    }
    std::size_t equations = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        equations += n.dim(q.arrow(a).target) * m.dim(q.arrow(a).source);

    Matrix system(equations, unknowns, ch);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix& na = n.arrow_map(static_cast<int>(a));
        const Matrix& ma = m.arrow_map(static_cast<int>(a));
        for (std::size_t i = 0; i < n.dim(ar.target); ++i) {
            for (std::size_t j = 0; j < m.dim(ar.source); ++j) {
                // (N_a phi_s - phi_t M_a)[i, j] = 0
                for (std::size_t k = 0; k < n.dim(ar.source); ++k)
                    if (!na.at(i, k).is_zero())
                        system.set(row, offsets[ar.source] + k * m.dim(ar.source) + j,
                                   na.at(i, k));
                for (std::size_t l = 0; l < m.dim(ar.target); ++l)
                    if (!ma.at(l, j).is_zero()) {
                        std::size_t col = offsets[ar.target] + i * m.dim(ar.target) + l;
                        system.set(row, col, system.at(row, col) - ma.at(l, j));
                    }
                ++row;
            }
        }
    }

    Matrix k = kernel_basis(system);
    std::vector<ModuleMorphism> basis;
    for (std::size_t c = 0; c < k.cols(); ++c)
        basis.push_back(unflatten(m, n, k.column(c)));
    return basis;
}

ModuleKernel kernel_mod(const ModuleMorphism& f) {
    const AlgebraPtr& alg = f.source().algebra();
    const Quiver& q = alg->quiver();

    std::vector<Matrix> inclusions;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        inclusions.push_back(kernel_basis(f.vertex_map(static_cast<int>(v))));
        dims.push_back(inclusions.back().cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        // M_a maps ker(f_s) into ker(f_t); express in the kernel bases
        Matrix rhs = f.source().arrow_map(static_cast<int>(a)) * inclusions[ar.source];
        auto sol = solve_factor(inclusions[ar.target], rhs, SolveSide::right);
        if (!sol)
            throw Error("internal: kernel is not arrow-stable");
        maps.push_back(std::move(*sol));
    }
    Module kmod(alg, std::move(dims), std::move(maps));
    ModuleMorphism incl(kmod, f.source(), std::move(inclusions));
    return ModuleKernel{std::move(kmod), std::move(incl)};
}

ModuleCokernel cokernel_mod(const ModuleMorphism& f) {
    const AlgebraPtr& alg = f.source().algebra();
    const Quiver& q = alg->quiver();

    std::vector<Matrix> projections;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        // rows spanning the left null space of the image: kernel == im(f_v)
        Matrix img = image_basis(f.vertex_map(static_cast<int>(v)));
        projections.push_back(kernel_basis(img.transpose()).transpose());
        dims.push_back(projections.back().rows());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix rhs = projections[ar.target] * f.target().arrow_map(static_cast<int>(a));
        auto sol = solve_factor(projections[ar.source], rhs, SolveSide::left);
        if (!sol)
            throw Error("internal: cokernel arrow map unsolvable");
        maps.push_back(std::move(*sol));
    }
    Module cmod(alg, std::move(dims), std::move(maps));
    ModuleMorphism proj(f.target(), cmod, std::move(projections));
    return ModuleCokernel{std::move(cmod), std::move(proj)};
}

ModuleImage image_mod(const ModuleMorphism& f) {
    const AlgebraPtr& alg = f.source().algebra();
    const Quiver& q = alg->quiver();

    std::vector<Matrix> inclusions;
    std::vector<Matrix> corestrictions;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Matrix img = image_basis(f.vertex_map(static_cast<int>(v)));
        dims.push_back(img.cols());
        auto co = solve_factor(img, f.vertex_map(static_cast<int>(v)), SolveSide::right);
        if (!co)
            throw Error("internal: image corestriction unsolvable");
        inclusions.push_back(std::move(img));
        corestrictions.push_back(std::move(*co));
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix rhs = f.target().arrow_map(static_cast<int>(a)) * inclusions[ar.source];
        auto sol = solve_factor(inclusions[ar.target], rhs, SolveSide::right);
        if (!sol)
            throw Error("internal: image is not arrow-stable");
        maps.push_back(std::move(*sol));
    }
    Module imod(alg, std::move(dims), std::move(maps));
    ModuleMorphism incl(imod, f.target(), std::move(inclusions));
    ModuleMorphism core(f.source(), imod, std::move(corestrictions));
    return ModuleImage{std::move(imod), std::move(incl), std::move(core)};
}

std::vector<std::size_t> top_multiplicities(const Module& m) {
    const Quiver& q = m.algebra()->quiver();
    long ch = m.algebra()->characteristic();
    std::vector<std::size_t> mult(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Matrix rad(m.dim(v), 0, ch);
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
            if (q.arrow(a).target == static_cast<int>(v))
                rad = hstack(rad, m.arrow_map(static_cast<int>(a)));
        mult[v] = m.dim(v) - rank(rad);
    }
    return mult;
}

ModuleCover projective_cover(const Module& m) {
    const AlgebraPtr& alg = m.algebra();
    const Quiver& q = alg->quiver();
    long ch = alg->characteristic();

    // lift a basis of the top: greedily complete the radical image by
    // standard basis vectors, in index order, so the choice is deterministic
    std::vector<std::vector<Matrix>> generators(q.vertex_count());
    std::vector<std::size_t> mult(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Matrix rad(m.dim(v), 0, ch);
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
            if (q.arrow(a).target == static_cast<int>(v))
                rad = hstack(rad, m.arrow_map(static_cast<int>(a)));
        Matrix span = image_basis(rad);
        for (std::size_t j = 0; j < m.dim(v); ++j) {
            Matrix e(m.dim(v), 1, ch);
            e.set(j, 0, Scalar::one(ch));
            Matrix cand = hstack(span, e);
            if (rank(cand) > span.cols()) {
                span = image_basis(cand);
                generators[v].push_back(std::move(e));
            }
        }
        mult[v] = generators[v].size();
    }

    SummandLayout layout = projective_layout(alg, mult);
    Module cover = projective_sum(alg, mult);

    std::vector<Matrix> eps(q.vertex_count(), Matrix(0, 0, ch));
    for (std::size_t w = 0; w < q.vertex_count(); ++w)
        eps[w] = Matrix(m.dim(w), layout.dims[w], ch);

    std::size_t summand = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        for (std::size_t c = 0; c < mult[v]; ++c, ++summand) {
            const Matrix& gen = generators[v][c];
            for (std::size_t w = 0; w < q.vertex_count(); ++w) {
                const auto& paths = alg->paths_from(static_cast<int>(v), static_cast<int>(w));
                for (std::size_t idx = 0; idx < paths.size(); ++idx) {
                    Matrix img = m.path_action(alg->basis()[paths[idx]]) * gen;
                    eps[w].set_block(0, layout.offsets[summand][w] + idx, img);
                }
            }
        }
    }

    ModuleMorphism epi(cover, m, std::move(eps));
    if (!epi.is_vertexwise_surjective())
        throw Error("internal: projective cover is not surjective");
    return ModuleCover{std::move(mult), std::move(cover), std::move(epi)};
}

} // namespace projhom
