#include <doctest.h>

#include "gproj/algebra.hpp"

using namespace gproj;

namespace {
const Field F = Field::fp(101);
}

TEST_CASE("path algebra dimensions of the shipped families") {
    CHECK(from_presentation(presentation_trivial(F))->dim() == 1);
    CHECK(from_presentation(presentation_kA2(F))->dim() == 3);
    CHECK(from_presentation(presentation_dual_numbers(F))->dim() == 2);
    CHECK(from_presentation(presentation_kA3_zero_rel(F))->dim() == 5);
    CHECK(from_presentation(presentation_square_comm(F))->dim() == 9);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto bn = make_Bn(n, F);
        CHECK(bn->dim() == 2 * n);
        CHECK(bn->num_idempotents() == n);
        CHECK(bn->radical_basis().size() == n);
    }
}

TEST_CASE("from_presentation bookkeeping") {
    auto a = from_presentation(presentation_kA2(F));
    CHECK(a->num_idempotents() == 2);
    CHECK(a->radical_basis().size() == 1);
    CHECK(a->generators().size() == 3); // e0, e1, a
    CHECK(a->generator_index("a").has_value());
    // unit acts as the identity on both sides
    CHECK(a->left_mult_matrix(a->unit_elem()) == Mat::identity(F, a->dim()));
    CHECK(a->right_mult_matrix(a->unit_elem()) == Mat::identity(F, a->dim()));
}

TEST_CASE("presentation errors are named") {
    PathPresentation p = presentation_kA2(F);
    p.relations = {{{"1", {"a", "zz"}}}};
    CHECK_THROWS_WITH_AS(from_presentation(p), doctest::Contains("zz"), ParseError);

    p.relations = {{{"1", {"a"}}}}; // length-1 path is not admissible
    CHECK_THROWS_AS(from_presentation(p), ParseError);

    p = presentation_kA3_zero_rel(F);
    p.relations = {{{"1", {"b", "a"}}}}; // b then a does not compose
    CHECK_THROWS_AS(from_presentation(p), ParseError);

    // a free loop is infinite-dimensional: the cap must trip
    PathPresentation loop = presentation_dual_numbers(F);
    loop.relations.clear();
    loop.length_cap = 8;
    CHECK_THROWS_AS(from_presentation(loop), ParseError);
}

TEST_CASE("opposite is an involution on the structure constants") {
    for (auto pres : {presentation_kA2(F), presentation_kA3_zero_rel(F)}) {
        auto a = from_presentation(pres);
        auto op = opposite(a);
        CHECK(op->dim() == a->dim());
        // arrows reverse: source/target bookkeeping swaps
        for (std::size_t b = 0; b < a->dim(); ++b) {
            CHECK(op->src(b) == a->tgt(b));
            CHECK(op->tgt(b) == a->src(b));
        }
        CHECK(opposite(op)->mult_table() == a->mult_table());
    }
    // commutative algebra: isomorphic to itself, table unchanged
    auto d = from_presentation(presentation_dual_numbers(F));
    CHECK(opposite(d)->mult_table() == d->mult_table());
    // memoized: same object each time
    CHECK(opposite(d).get() == opposite(d).get());
}

TEST_CASE("tensor product structure") {
    auto a = from_presentation(presentation_dual_numbers(F));
    auto b = from_presentation(presentation_kA2(F));
    auto t = tensor(a, b);
    CHECK(t->dim() == a->dim() * b->dim());
    CHECK(t->num_idempotents() == 2);
    CHECK(t->radical_basis().size() == 4);
    CHECK(t->generators().size() == a->generators().size() + b->generators().size());
    CHECK(t->tensor_info().has_value());

    // unit of the tensor: k (x) B looks exactly like B under (0, y) -> y
    auto k = from_presentation(presentation_trivial(F));
    auto kb = tensor(k, b);
    CHECK(kb->dim() == b->dim());
    CHECK(kb->mult_table() == b->mult_table());
    CHECK(kb->radical_basis() == b->radical_basis());

    CHECK_THROWS_AS(tensor(a, from_presentation(presentation_kA2(Field::fp(5)))),
                    UsageError);
}

TEST_CASE("tensor is symmetric up to the swap of basis pairs") {
    auto a = from_presentation(presentation_dual_numbers(F));
    auto b = from_presentation(presentation_kA2(F));
    auto ab = tensor(a, b), ba = tensor(b, a);
    REQUIRE(ab->dim() == ba->dim());
    std::size_t da = a->dim(), db = b->dim(), d = ab->dim();
    auto swap_idx = [&](std::size_t i) { // (x, y) -> (y, x)
        return (i % db) * da + i / db;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t c = 0; c < d; ++c)
                CHECK(ab->mult_table().get(i * d + j, c) ==
                      ba->mult_table().get(swap_idx(i) * d + swap_idx(j), swap_idx(c)));
}

TEST_CASE("enveloping algebra") {
    auto k = from_presentation(presentation_trivial(F));
    CHECK(enveloping(k)->dim() == 1);
    auto d = from_presentation(presentation_dual_numbers(F));
    auto e = enveloping(d);
    CHECK(e->dim() == 4);
    CHECK(e->num_idempotents() == 1);
    CHECK(e->radical_basis().size() == 3);
}

TEST_CASE("B_1 is the dual numbers") {
    auto b1 = make_Bn(1, F);
    auto d = from_presentation(presentation_dual_numbers(F));
    CHECK(b1->dim() == 2);
    CHECK(b1->mult_table() == d->mult_table());
}

TEST_CASE("radical powers vanish") {
    for (auto alg : {from_presentation(presentation_kA3_zero_rel(F)),
                     from_presentation(presentation_square_comm(F)), make_Bn(3, F)}) {
        // rad^m = 0 for some m <= dim: multiply radical elements together
        std::vector<Mat> cols;
        for (std::size_t r : alg->radical_basis()) cols.push_back(alg->basis_elem(r));
        Mat span = Mat::hstack(cols).col_space_basis();
        std::size_t steps = 0;
        while (span.cols() > 0) {
            REQUIRE(steps++ <= alg->dim());
            std::vector<Mat> next;
            for (std::size_t r : alg->radical_basis())
                next.push_back(alg->basis_left_mult(r) * span);
            span = Mat::hstack(next).col_space_basis();
        }
        CHECK(steps <= alg->dim());
    }
}

TEST_CASE("rationals and other primes work the same way") {
    for (Field f : {Field::rationals(), Field::fp(5)}) {
        auto t = tensor(from_presentation(presentation_dual_numbers(f)),
                        from_presentation(presentation_kA2(f)));
        CHECK(t->dim() == 6);
        CHECK(t->radical_basis().size() == 4);
    }
}
