#include "projhom/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace projhom {

namespace {

// leftmost occurrence of `pattern` inside `word`, or -1
int find_subpath(const std::vector<int>& word, const std::vector<int>& pattern) {
    if (pattern.size() > word.size())
        return -1;
    for (std::size_t pos = 0; pos + pattern.size() <= word.size(); ++pos) {
        bool hit = true;
        for (std::size_t k = 0; k < pattern.size(); ++k)
            if (word[pos + k] != pattern[k]) {
                hit = false;
                break;
            }
        if (hit)
            return static_cast<int>(pos);
    }
    return -1;
}

} // namespace

Path reverse_path(const Path& p) {
    Path r{p.target, p.source, p.arrows};
    std::reverse(r.arrows.begin(), r.arrows.end());
    return r;
}

PathAlgebra::PathAlgebra(Quiver quiver, long characteristic, std::vector<Relation> relations,
                         const AlgebraOptions& opts)
    : quiver_(std::move(quiver)), characteristic_(characteristic),
      relations_(std::move(relations)) {
    if (characteristic_ != 0 && !is_prime(characteristic_))
        throw Error("field characteristic must be 0 or a prime");
    validate_relations();
    extract_rules();
    check_confluence();
    enumerate_basis(opts.path_length_cap);
    build_products();
    check_arrow_ideal_nilpotent();
}

void PathAlgebra::validate_relations() {
    std::vector<Relation> cleaned;
    for (const auto& rel : relations_) {
        std::map<Path, Scalar, PathLess> collected;
        int src = -1, tgt = -1;
        for (const auto& [coeff, path] : rel.terms) {
            if (coeff.characteristic() != characteristic_)
                throw FieldMismatch("relation coefficient from a different field");
            if (path.length() < 2)
                throw AlgebraBuildError(AlgebraBuildError::Kind::NonAdmissible,
                                        "relation term of length " +
                                            std::to_string(path.length()) +
                                            " (admissible relations need length >= 2)");
            // check the arrow chain is consistent with the quiver
            int at = path.source;
            for (int a : path.arrows) {
                if (a < 0 || a >= static_cast<int>(quiver_.arrow_count()))
                    throw Error("relation references unknown arrow");
                if (quiver_.arrow(a).source != at)
                    throw Error("relation path does not compose");
                at = quiver_.arrow(a).target;
            }
            if (at != path.target)
                throw Error("relation path has wrong target");
            if (src == -1) {
                src = path.source;
                tgt = path.target;
            } else if (src != path.source || tgt != path.target) {
                throw AlgebraBuildError(AlgebraBuildError::Kind::NonAdmissible,
                                        "relation terms are not parallel");
            }
            auto [it, fresh] = collected.emplace(path, coeff);
            if (!fresh)
                it->second += coeff;
        }
        Relation r;
        for (auto& [path, coeff] : collected)
            if (!coeff.is_zero())
                r.terms.emplace_back(coeff, path);
        if (!r.terms.empty())
            cleaned.push_back(std::move(r));
    }
    relations_ = std::move(cleaned);
}

void PathAlgebra::extract_rules() {
    for (const auto& rel : relations_) {
        // leading term = largest path in length-lex order
        std::size_t lead = 0;
        for (std::size_t i = 1; i < rel.terms.size(); ++i)
            if (path_compare(rel.terms[i].second, rel.terms[lead].second) ==
                std::strong_ordering::greater)
                lead = i;
        Rule rule;
        rule.lead = rel.terms[lead].second;
        Scalar inv = rel.terms[lead].first.inverse();
        for (std::size_t i = 0; i < rel.terms.size(); ++i) {
            if (i == lead)
                continue;
            rule.rest.emplace_back(-(rel.terms[i].first * inv), rel.terms[i].second);
        }
        rules_.push_back(std::move(rule));
    }
}

std::map<Path, Scalar, PathLess> PathAlgebra::normal_form(const Path& word) const {
    std::map<Path, Scalar, PathLess> start;
    start.emplace(word, Scalar::one(characteristic_));
    return normal_form(std::move(start));
}

/* Rewrites every term until no leading term occurs as a subpath. Each step
 * strictly decreases the term in length-lex order, so the loop terminates
 * for any rule set whose right-hand sides are below the lead. */
std::map<Path, Scalar, PathLess> PathAlgebra::normal_form(
    std::map<Path, Scalar, PathLess> work) const {
    std::map<Path, Scalar, PathLess> done;
    while (!work.empty()) {
        auto it = std::prev(work.end()); // largest first
        Path p = it->first;
        Scalar c = it->second;
        work.erase(it);
        if (c.is_zero())
            continue;

        int rule_idx = -1, pos = -1;
        for (std::size_t r = 0; r < rules_.size() && rule_idx < 0; ++r) {
            int at = find_subpath(p.arrows, rules_[r].lead.arrows);
            if (at >= 0) {
                rule_idx = static_cast<int>(r);
                pos = at;
            }
        }
        if (rule_idx < 0) {
            auto [dit, fresh] = done.emplace(p, c);
            if (!fresh) {
                dit->second += c;
                if (dit->second.is_zero())
                    done.erase(dit);
            }
            continue;
        }

        const Rule& rule = rules_[rule_idx];
        // p = prefix . lead . suffix
        std::vector<int> prefix(p.arrows.begin(), p.arrows.begin() + pos);
        std::vector<int> suffix(p.arrows.begin() + pos + rule.lead.length(), p.arrows.end());
        for (const auto& [rc, rpath] : rule.rest) {
            Path q;
            q.source = p.source;
            q.target = p.target;
            q.arrows = prefix;
            q.arrows.insert(q.arrows.end(), rpath.arrows.begin(), rpath.arrows.end());
            q.arrows.insert(q.arrows.end(), suffix.begin(), suffix.end());
            Scalar nc = c * rc;
            auto [wit, fresh] = work.emplace(std::move(q), nc);
            if (!fresh) {
                wit->second += nc;
                if (wit->second.is_zero())
                    work.erase(wit);
            }
        }
    }
    return done;
}

/* Diamond-lemma style check: every overlap or inclusion ambiguity between
 * two leading terms must resolve to the same normal form. */
void PathAlgebra::check_confluence() const {
    auto one_step = [&](const Path& word, std::size_t rule_idx,
                        std::size_t at) -> std::map<Path, Scalar, PathLess> {
        const Rule& rule = rules_[rule_idx];
        std::map<Path, Scalar, PathLess> out;
        std::vector<int> prefix(word.arrows.begin(), word.arrows.begin() + at);
        std::vector<int> suffix(word.arrows.begin() + at + rule.lead.length(),
                                word.arrows.end());
        for (const auto& [rc, rpath] : rule.rest) {
            Path q;
            q.source = word.source;
            q.target = word.target;
            q.arrows = prefix;
            q.arrows.insert(q.arrows.end(), rpath.arrows.begin(), rpath.arrows.end());
            q.arrows.insert(q.arrows.end(), suffix.begin(), suffix.end());
            out.emplace(std::move(q), rc);
        }
        return out;
    };

    auto resolve = [&](const Path& word, std::size_t r1, std::size_t at1, std::size_t r2,
                       std::size_t at2) {
        auto nf1 = normal_form(one_step(word, r1, at1));
        auto nf2 = normal_form(one_step(word, r2, at2));
        if (nf1 != nf2) {
            std::ostringstream os;
            os << "rewriting system is not confluent: ambiguity between rules " << r1 << " and "
               << r2 << " fails to resolve";
            throw AlgebraBuildError(AlgebraBuildError::Kind::NonConfluent, os.str());
        }
    };

    for (std::size_t r1 = 0; r1 < rules_.size(); ++r1) {
        const auto& u = rules_[r1].lead.arrows;
        for (std::size_t r2 = 0; r2 < rules_.size(); ++r2) {
            const auto& w = rules_[r2].lead.arrows;

            // overlap: a proper suffix of u equals a proper prefix of w
            for (std::size_t k = 1; k < u.size() && k < w.size(); ++k) {
                bool match = std::equal(u.end() - k, u.end(), w.begin(), w.begin() + k);
                if (!match)
                    continue;
                Path word;
                word.source = rules_[r1].lead.source;
                word.arrows = u;
                word.arrows.insert(word.arrows.end(), w.begin() + k, w.end());
                word.target = rules_[r2].lead.target;
                resolve(word, r1, 0, r2, u.size() - k);
            }

            // inclusion: w occurs inside u (identical rules only at offset 0)
            if (w.size() <= u.size()) {
                for (std::size_t at = 0; at + w.size() <= u.size(); ++at) {
                    if (r1 == r2 && at == 0 && w.size() == u.size())
                        continue;
                    if (!std::equal(w.begin(), w.end(), u.begin() + at))
                        continue;
                    resolve(rules_[r1].lead, r1, 0, r2, at);
                }
            }
        }
    }
}

void PathAlgebra::enumerate_basis(std::size_t cap) {
    std::vector<Path> current;
    for (std::size_t v = 0; v < quiver_.vertex_count(); ++v)
        current.push_back(Path::trivial(static_cast<int>(v)));
    basis_ = current;

    while (!current.empty()) {
        if (current.front().length() >= cap)
            throw AlgebraBuildError(AlgebraBuildError::Kind::Infinite,
                                    "reduced paths exceed the length cap of " +
                                        std::to_string(cap) +
                                        "; the algebra is not finite-dimensional under it");
        std::vector<Path> next;
        for (const auto& p : current) {
            for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
                if (quiver_.arrow(a).source != p.target)
                    continue;
                Path cand = p;
                cand.arrows.push_back(static_cast<int>(a));
                cand.target = quiver_.arrow(a).target;
                if (is_reduced_tail(cand))
                    next.push_back(std::move(cand));
            }
        }
        basis_.insert(basis_.end(), next.begin(), next.end());
        current = std::move(next);
    }

    std::sort(basis_.begin(), basis_.end(), PathLess{});
    for (std::size_t i = 0; i < basis_.size(); ++i)
        basis_lookup_.emplace(basis_[i], static_cast<int>(i));

    paths_from_.assign(quiver_.vertex_count(),
                       std::vector<std::vector<int>>(quiver_.vertex_count()));
    for (std::size_t i = 0; i < basis_.size(); ++i)
        paths_from_[basis_[i].source][basis_[i].target].push_back(static_cast<int>(i));
}

// the extension of an already reduced path stays reduced unless a rule lead
// ends exactly at the new final arrow
bool PathAlgebra::is_reduced_tail(const Path& p) const {
    for (const auto& rule : rules_) {
        std::size_t len = rule.lead.length();
        if (len > p.length())
            continue;
        if (std::equal(rule.lead.arrows.begin(), rule.lead.arrows.end(),
                       p.arrows.end() - len))
            return false;
    }
    return true;
}

void PathAlgebra::build_products() {
    std::size_t n = basis_.size();
    products_.assign(n, std::vector<BasisCombo>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (basis_[i].target != basis_[j].source)
                continue;
            auto nf = normal_form(basis_[i].then(basis_[j]));
            BasisCombo combo;
            for (const auto& [path, coeff] : nf) {
                auto it = basis_lookup_.find(path);
                if (it == basis_lookup_.end())
                    throw Error("internal: normal form left the basis");
                combo.emplace_back(it->second, coeff);
            }
            std::sort(combo.begin(), combo.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            products_[i][j] = std::move(combo);
        }
    }
}

/* Admissibility beyond the syntactic length check: the image of the arrow
 * ideal must be nilpotent, otherwise the radical is not the arrow ideal and
 * every cover/top computation downstream would be wrong. T_k = span of all
 * words of length >= k; T_{k+1} = T_k * arrows. */
void PathAlgebra::check_arrow_ideal_nilpotent() const {
    std::size_t n = basis_.size();
    Matrix span(n, 0, characteristic_);
    for (std::size_t i = 0; i < n; ++i) {
        if (basis_[i].length() >= 1) {
            Matrix col(n, 1, characteristic_);
            col.set(i, 0, Scalar::one(characteristic_));
            span = hstack(span, col);
        }
    }
    span = image_basis(span);

    while (span.cols() > 0) {
        Matrix next(n, 0, characteristic_);
        for (std::size_t c = 0; c < span.cols(); ++c) {
            for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
                Path arrow_path{quiver_.arrow(a).source, quiver_.arrow(a).target,
                                {static_cast<int>(a)}};
                int ai = basis_index(arrow_path);
                Matrix col(n, 1, characteristic_);
                bool nonzero = false;
                for (std::size_t i = 0; i < n; ++i) {
                    const Scalar& ci = span.at(i, c);
                    if (ci.is_zero())
                        continue;
                    for (const auto& [k, coeff] : then_product(static_cast<int>(i), ai)) {
                        col.set(k, 0, col.at(k, 0) + ci * coeff);
                        nonzero = true;
                    }
                }
                if (nonzero)
                    next = hstack(next, col);
            }
        }
        next = image_basis(next);
        if (next.cols() == span.cols())
            throw AlgebraBuildError(AlgebraBuildError::Kind::NonAdmissible,
                                    "arrow ideal is not nilpotent modulo the relations; "
                                    "the relation ideal is not admissible");
        span = std::move(next);
    }
}

int PathAlgebra::basis_index(const Path& p) const {
    auto it = basis_lookup_.find(p);
    return it == basis_lookup_.end() ? -1 : it->second;
}

BasisCombo PathAlgebra::reduce_to_basis(const Path& word) const {
    auto nf = normal_form(word);
    BasisCombo combo;
    for (const auto& [path, coeff] : nf) {
        int idx = basis_index(path);
        if (idx < 0)
            throw Error("internal: normal form left the basis");
        combo.emplace_back(idx, coeff);
    }
    std::sort(combo.begin(), combo.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return combo;
}

const BasisCombo& PathAlgebra::then_product(int i, int j) const {
    return products_.at(i).at(j);
}

const std::vector<int>& PathAlgebra::paths_from(int v, int w) const {
    return paths_from_.at(v).at(w);
}

std::string PathAlgebra::describe() const {
    std::ostringstream os;
    os << quiver_.vertex_count() << " vertices, " << quiver_.arrow_count() << " arrows, "
       << relations_.size() << " relations, dimension " << dimension() << ", field ";
    if (characteristic_ == 0)
        os << "Q";
    else
        os << "F" << characteristic_;
    return os.str();
}

std::shared_ptr<const PathAlgebra> PathAlgebra::opposite() const {
    auto owner = owner_.lock();
    if (!owner || sibling_ == nullptr)
        throw Error("algebra has no opposite wired (not built by build_algebra)");
    return std::shared_ptr<const PathAlgebra>(owner, sibling_);
}

struct AlgebraPair {
    PathAlgebra primal;
    PathAlgebra opp;

    AlgebraPair(PathAlgebra p, PathAlgebra o) : primal(std::move(p)), opp(std::move(o)) {}
};

AlgebraPtr build_algebra(Quiver quiver, long characteristic, std::vector<Relation> relations,
                         AlgebraOptions opts) {
    Quiver reversed = quiver.reversed();
    std::vector<Relation> reversed_relations;
    for (const auto& rel : relations) {
        Relation r;
        for (const auto& [coeff, path] : rel.terms)
            r.terms.emplace_back(coeff, reverse_path(path));
        reversed_relations.push_back(std::move(r));
    }

    PathAlgebra primal(std::move(quiver), characteristic, std::move(relations), opts);
    PathAlgebra opp(std::move(reversed), characteristic, std::move(reversed_relations), opts);
    if (primal.dimension() != opp.dimension())
        throw Error("internal: opposite algebra dimension mismatch");

    auto pair = std::make_shared<AlgebraPair>(std::move(primal), std::move(opp));
    pair->primal.owner_ = std::shared_ptr<const void>(pair, pair.get());
    pair->primal.sibling_ = &pair->opp;
    pair->opp.owner_ = pair->primal.owner_;
    pair->opp.sibling_ = &pair->primal;
    return std::shared_ptr<const PathAlgebra>(pair, &pair->primal);
}

} // namespace projhom
