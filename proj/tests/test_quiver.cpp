#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "projhom/algebra.hpp"

using namespace projhom;

namespace {

Quiver a2_quiver() {
    return Quiver({"1", "2"}, {{"a", "1", "2"}});
}

Quiver a3_quiver() {
    return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
}

Quiver loop_quiver() {
    return Quiver({"1"}, {{"x", "1", "1"}});
}

// path from arrow names in application order (first applied first)
Path path_of(const Quiver& q, std::vector<std::string> names) {
    Path p;
    p.arrows.reserve(names.size());
    for (const auto& n : names)
        p.arrows.push_back(q.arrow_index(n));
    p.source = q.arrow(p.arrows.front()).source;
    p.target = q.arrow(p.arrows.back()).target;
    return p;
}

Relation monomial(const Quiver& q, std::vector<std::string> names, long ch = 0) {
    return Relation{{{Scalar::one(ch), path_of(q, names)}}};
}

} // namespace

TEST_CASE("A2 path algebra: basis e1, e2, a") {
    auto alg = build_algebra(a2_quiver(), 0, {});
    CHECK(alg->dimension() == 3);
    REQUIRE(alg->basis().size() == 3);
    CHECK(alg->basis()[0] == Path::trivial(0));
    CHECK(alg->basis()[1] == Path::trivial(1));
    CHECK(alg->basis()[2].length() == 1);
}

TEST_CASE("A3 with relation b.a = 0: the length-2 path dies") {
    auto q = a3_quiver();
    auto alg = build_algebra(q, 0, {monomial(q, {"a", "b"})});
    CHECK(alg->dimension() == 5); // e1, e2, e3, a, b
    // the composite a-then-b reduces to zero
    auto nf = alg->reduce_to_basis(path_of(alg->quiver(), {"a", "b"}));
    CHECK(nf.empty());
}

TEST_CASE("loop modulo x^2: the dual numbers") {
    auto q = loop_quiver();
    auto alg = build_algebra(q, 0, {monomial(q, {"x", "x"})});
    CHECK(alg->dimension() == 2);
}

TEST_CASE("commuting square: equal-length binomial relation") {
    Quiver q({"1", "2", "3", "4"},
             {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "2", "4"}, {"d", "3", "4"}});
    Relation rel{{{Scalar::rational(1), path_of(q, {"a", "c"})},
                  {Scalar::rational(-1), path_of(q, {"b", "d"})}}};
    auto alg = build_algebra(q, 0, {rel});
    // e1..e4, four arrows, one surviving length-2 path
    CHECK(alg->dimension() == 9);
    auto nf = alg->reduce_to_basis(path_of(alg->quiver(), {"b", "d"}));
    REQUIRE(nf.size() == 1);
    CHECK(alg->basis()[nf[0].first] == path_of(alg->quiver(), {"a", "c"}));
    CHECK(nf[0].second == Scalar::rational(1));
}

TEST_CASE("opposite algebra reverses arrows and relations") {
    auto q = a3_quiver();
    auto alg = build_algebra(q, 0, {monomial(q, {"a", "b"})});
    auto op = opposite_algebra(alg);
    CHECK(op->dimension() == 5);
    CHECK(op->quiver().arrow(0).source == 1);
    CHECK(op->quiver().arrow(0).target == 0);
    // opposite of opposite is the very same object
    CHECK(op->opposite().get() == alg.get());

    auto a2 = build_algebra(a2_quiver(), 0, {});
    CHECK(opposite_algebra(a2)->dimension() == 3);

    auto lq = loop_quiver();
    auto loop = build_algebra(lq, 0, {monomial(lq, {"x", "x"})});
    CHECK(opposite_algebra(loop)->dimension() == 2);
}

TEST_CASE("non-admissible relation of length 1 is rejected") {
    auto q = a2_quiver();
    Path single = path_of(q, {"a"});
    Relation rel{{{Scalar::rational(1), single}}};
    try {
        build_algebra(q, 0, {rel});
        FAIL("expected NonAdmissible");
    } catch (const AlgebraBuildError& e) {
        CHECK(e.kind() == AlgebraBuildError::Kind::NonAdmissible);
    }
}

TEST_CASE("unresolvable overlap is rejected as non-confluent") {
    // k<x,y> with xy -> xx (lex leading term) and yy -> 0: the word xyy
    // reduces to both xxx and 0, and xxx is irreducible
    Quiver q({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
    Relation r1{{{Scalar::rational(1), path_of(q, {"x", "y"})},
                 {Scalar::rational(-1), path_of(q, {"x", "x"})}}};
    Relation r2{{{Scalar::rational(1), path_of(q, {"y", "y"})}}};
    try {
        build_algebra(q, 0, {r1, r2});
        FAIL("expected NonConfluent");
    } catch (const AlgebraBuildError& e) {
        CHECK(e.kind() == AlgebraBuildError::Kind::NonConfluent);
    }
}

TEST_CASE("free loop algebra overflows the length cap") {
    AlgebraOptions opts;
    opts.path_length_cap = 16;
    try {
        build_algebra(loop_quiver(), 0, {}, opts);
        FAIL("expected Infinite");
    } catch (const AlgebraBuildError& e) {
        CHECK(e.kind() == AlgebraBuildError::Kind::Infinite);
    }
}

TEST_CASE("non-nilpotent arrow ideal is rejected") {
    // x^3 = x^2 leaves x^2 idempotent, so the ideal (x^3 - x^2) is not
    // admissible even though every term has length >= 2
    auto q = loop_quiver();
    Relation rel{{{Scalar::rational(1), path_of(q, {"x", "x", "x"})},
                  {Scalar::rational(-1), path_of(q, {"x", "x"})}}};
    try {
        build_algebra(q, 0, {rel});
        FAIL("expected NonAdmissible");
    } catch (const AlgebraBuildError& e) {
        CHECK(e.kind() == AlgebraBuildError::Kind::NonAdmissible);
    }
}

TEST_CASE("multiplication table is associative") {
    auto q = a3_quiver();
    auto alg = build_algebra(q, 0, {monomial(q, {"a", "b"})});
    std::size_t n = alg->dimension();
    // (p q) r == p (q r) on every composable triple, expanded through combos
    auto mul_combo = [&](const BasisCombo& left, int j) {
        std::map<int, Scalar> acc;
        for (const auto& [i, c] : left)
            for (const auto& [k, d] : alg->then_product(i, j)) {
                auto [it, fresh] = acc.emplace(k, c * d);
                if (!fresh)
                    it->second += c * d;
            }
        BasisCombo out;
        for (const auto& [k, c] : acc)
            if (!c.is_zero())
                out.emplace_back(k, c);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (alg->basis()[i].target != alg->basis()[j].source ||
                    alg->basis()[j].target != alg->basis()[k].source)
                    continue;
                auto lhs = mul_combo(alg->then_product(i, j), static_cast<int>(k));
                BasisCombo pq_r;
                {
                    std::map<int, Scalar> acc;
                    for (const auto& [m, c] : alg->then_product(j, k))
                        for (const auto& [t, d] :
                             mul_combo(BasisCombo{{static_cast<int>(i), Scalar::rational(1)}},
                                       m)) {
                            auto [it, fresh] = acc.emplace(t, c * d);
                            if (!fresh)
                                it->second += c * d;
                        }
                    for (const auto& [t, c] : acc)
                        if (!c.is_zero())
                            pq_r.emplace_back(t, c);
                }
                CHECK(lhs == pq_r);
            }
}
