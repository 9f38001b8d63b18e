#include <doctest.h>

#include "gproj/matrix.hpp"
#include "gproj/rng.hpp"

using namespace gproj;

namespace {

const Field F5 = Field::fp(5);
const Field F101 = Field::fp(101);
const Field Q = Field::rationals();

Mat random_mat(Field f, std::size_t r, std::size_t c, Rng& rng) {
    Mat m = Mat::zeros(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long v = f.is_fp() ? static_cast<long>(rng.below(f.prime())) : rng.range(-3, 3);
            m.set(i, j, Scalar(f, v));
        }
    return m;
}

// Independent oracle: count the null space of m over F5 by enumerating all
// vectors of F5^cols. |ker| must equal 5^(cols - rank).
std::size_t brute_force_nullspace_size(const Mat& m) {
    REQUIRE(m.field() == F5);
    std::size_t n = m.cols();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 5;
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        Mat v = Mat::zeros(F5, n, 1);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            v.set(i, 0, Scalar(F5, static_cast<long>(c % 5)));
            c /= 5;
        }
        if ((m * v).is_zero()) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("rank on the stock examples") {
    CHECK(Mat::zeros(F101, 3, 3).rank() == 0);
    CHECK(Mat::identity(F101, 3).rank() == 3);
    CHECK(Mat::from_ints(F5, 2, 2, {1, 2, 2, 4}).rank() == 1);
}

TEST_CASE("kernel bases") {
    CHECK(Mat::identity(F101, 2).kernel_basis().cols() == 0);
    CHECK(Mat::zeros(F101, 2, 3).kernel_basis().cols() == 3);

    Mat m = Mat::from_ints(F5, 1, 2, {1, 1});
    Mat k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    // proportional to (1, 4): here the canonical output is (4, 1)
    CHECK(k.get(0, 0) == Scalar(F5, 4));
    CHECK(k.get(1, 0) == Scalar(F5, 1));
}

TEST_CASE("solve") {
    Mat rhs = Mat::from_ints(F5, 2, 1, {3, 4});
    CHECK(*Mat::identity(F5, 2).solve(rhs) == rhs);
    CHECK(!Mat::zeros(F5, 2, 2).solve(rhs).has_value());

    Mat m = Mat::from_ints(F5, 2, 2, {1, 2, 0, 1});
    Mat b = Mat::from_ints(F5, 2, 1, {0, 1});
    Mat x = *m.solve(b);
    CHECK(x == Mat::from_ints(F5, 2, 1, {3, 1}));
    CHECK(m * x == b);
}

TEST_CASE("cokernel projection") {
    CHECK(Mat::identity(F5, 3).cokernel_projection().second == 0);

    auto [proj, dim] = Mat::zeros(F5, 2, 2).cokernel_projection();
    CHECK(dim == 2);
    CHECK(proj == Mat::identity(F5, 2));

    auto [p1, d1] = Mat::from_ints(F5, 2, 1, {1, 0}).cokernel_projection();
    CHECK(d1 == 1);
    CHECK(p1 == Mat::from_ints(F5, 1, 2, {0, 1}));
}

TEST_CASE("brute-force null space oracle over F5") {
    Rng rng(20240801);
    for (int t = 0; t < 12; ++t) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        Mat m = random_mat(F5, r, c, rng);
        std::size_t nullity = m.cols() - m.rank();
        std::size_t expect = 1;
        for (std::size_t i = 0; i < nullity; ++i) expect *= 5;
        CHECK(brute_force_nullspace_size(m) == expect);
        Mat k = m.kernel_basis();
        CHECK(k.cols() == nullity);
        CHECK((m * k).is_zero());
        CHECK(k.rank() == nullity);
    }
}

TEST_CASE("rank-nullity and transpose invariance") {
    Rng rng(7);
    for (Field f : {F101, Q}) {
        for (int t = 0; t < 10; ++t) {
            Mat m = random_mat(f, 1 + rng.below(6), 1 + rng.below(6), rng);
            CHECK(m.rank() + m.kernel_basis().cols() == m.cols());
            CHECK(m.rank() == m.transpose().rank());
            auto [proj, dim] = m.cokernel_projection();
            CHECK(dim == m.rows() - m.rank());
            CHECK((proj * m).is_zero());
            CHECK(proj.rank() == dim);
        }
    }
}

TEST_CASE("solve succeeds exactly when ranks match") {
    Rng rng(99);
    for (int t = 0; t < 20; ++t) {
        Mat m = random_mat(F101, 1 + rng.below(5), 1 + rng.below(5), rng);
        Mat rhs = random_mat(F101, m.rows(), 1 + rng.below(2), rng);
        std::array<Mat, 2> parts{m, rhs};
        bool consistent = Mat::hstack(parts).rank() == m.rank();
        auto x = m.solve(rhs);
        CHECK(x.has_value() == consistent);
        if (x) CHECK(m * *x == rhs);
    }
}

TEST_CASE("exact arithmetic is association-independent") {
    Rng rng(5);
    for (Field f : {F5, Q}) {
        for (int t = 0; t < 8; ++t) {
            std::size_t n = 2 + rng.below(3);
            Mat a = random_mat(f, n, n, rng), b = random_mat(f, n, n, rng),
                c = random_mat(f, n, n, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("rational entries stay canonical") {
    Mat m = Mat::zeros(Q, 1, 1);
    m.set(0, 0, Scalar::parse(Q, "4/6"));
    CHECK(m.get(0, 0).str() == "2/3");
    Mat s = m + m; // 4/3
    CHECK(s.get(0, 0).str() == "4/3");
    CHECK(Scalar::parse(Q, "-3/-6").str() == "1/2");
    CHECK_THROWS_AS(Scalar::parse(F5, "1/2"), ParseError);
}

TEST_CASE("inverse") {
    Mat m = Mat::from_ints(F101, 2, 2, {1, 2, 3, 4});
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Mat::identity(F101, 2));
    CHECK(!Mat::from_ints(F101, 2, 2, {1, 2, 2, 4}).inverse().has_value());
}

TEST_CASE("kron and vec convention") {
    Rng rng(3);
    // vec(A F B) == kron(B^T, A) vec(F)
    Mat a = random_mat(F101, 3, 2, rng);
    Mat fm = random_mat(F101, 2, 4, rng);
    Mat b = random_mat(F101, 4, 3, rng);
    CHECK(vec_cols(a * fm * b) == b.transpose().kron(a) * vec_cols(fm));
}

TEST_CASE("empty shapes are fine") {
    Mat e = Mat::zeros(F101, 0, 3);
    CHECK(e.rank() == 0);
    CHECK(e.kernel_basis().cols() == 3);
    Mat z = Mat::zeros(F101, 3, 0);
    CHECK(z.kernel_basis().cols() == 0);
    auto [p, d] = z.cokernel_projection();
    CHECK(d == 3);
    CHECK((p * z).cols() == 0);
    CHECK((e * z).rows() == 0);
    CHECK((e * z).cols() == 0);
}
