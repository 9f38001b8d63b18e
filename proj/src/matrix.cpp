#include "gproj/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace gproj {

namespace {

// ---------------------------------------------------------------------------
// Field arithmetic policies. Fp residues live in 0..p-1 with p < 2^31, so
// products fit in int64. Rationals ride on GMP, which keeps results canonical
// as long as inputs are canonical.
// ---------------------------------------------------------------------------

struct FpOps {
    std::int64_t p;
    using T = std::int64_t;
    T zero() const { return 0; }
    T one() const { return 1; }
    static bool is_zero(const T& a) { return a == 0; }
    T add(T a, T b) const { T s = a + b; return s >= p ? s - p : s; }
    T sub(T a, T b) const { T s = a - b; return s < 0 ? s + p : s; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T mul(T a, T b) const { return (a * b) % p; }
    T inv(T a) const {
        // extended Euclid; a != 0 mod p
        T t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            T q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        return t < 0 ? t + p : t;
    }
    T from_long(long v) const { T r = v % p; return r < 0 ? r + p : r; }
};

struct QOps {
    using T = mpq_class;
    T zero() const { return T(0); }
    T one() const { return T(1); }
    static bool is_zero(const T& a) { return sgn(a) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T neg(const T& a) const { return -a; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return 1 / a; }
    T from_long(long v) const { return T(v); }
};

template <class Ops> using Vec = std::vector<typename Ops::T>;

FpOps fp_ops(Field f) { return FpOps{static_cast<std::int64_t>(f.prime())}; }

// Row echelon reduction (fully reduced, unit pivots), pivoting left to right.
template <class Ops>
struct Ech {
    std::size_t cols = 0;
    Vec<Ops> a;                    // rank x cols, reduced rows
    std::vector<std::size_t> piv;  // pivot column per row
    std::size_t rank() const { return piv.size(); }
};

template <class Ops>
Ech<Ops> echelon(const Ops& K, Vec<Ops> a, std::size_t rows, std::size_t cols) {
    std::size_t rk = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = rk; r < rows; ++r) {
            if (!Ops::is_zero(a[r * cols + c])) { sel = r; break; }
        }
        if (sel == rows) continue;
        if (sel != rk)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a[sel * cols + j], a[rk * cols + j]);
        typename Ops::T pinv = K.inv(a[rk * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            a[rk * cols + j] = K.mul(a[rk * cols + j], pinv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rk) continue;
            const typename Ops::T& f = a[r * cols + c];
            if (Ops::is_zero(f)) continue;
            typename Ops::T fc = f;
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = K.sub(a[r * cols + j], K.mul(fc, a[rk * cols + j]));
        }
        piv.push_back(c);
        ++rk;
    }
    Ech<Ops> e;
    e.cols = cols;
    e.piv = std::move(piv);
    e.a.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rk * cols));
    return e;
}

} // namespace

// ---------------------------------------------------------------------------
// Access to Mat internals for the generic algorithms.
// ---------------------------------------------------------------------------

struct MatOps {
    static Mat make(Field f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

    template <class F>
    static auto visit(const Mat& m, F&& fn) {
        if (m.f_.is_fp())
            return fn(fp_ops(m.f_), std::get<0>(m.d_));
        return fn(QOps{}, std::get<1>(m.d_));
    }

    template <class F>
    static auto visit2(const Mat& m, const Mat& o, F&& fn) {
        if (m.f_ != o.f_) throw UsageError("field mismatch between matrices");
        if (m.f_.is_fp())
            return fn(fp_ops(m.f_), std::get<0>(m.d_), std::get<0>(o.d_));
        return fn(QOps{}, std::get<1>(m.d_), std::get<1>(o.d_));
    }

    template <class Ops>
    static Mat from_vec(Field f, std::size_t r, std::size_t c, Vec<Ops> v) {
        Mat m(f, r, c);
        if constexpr (std::is_same_v<Ops, FpOps>)
            m.d_ = std::move(v);
        else
            m.d_ = std::move(v);
        return m;
    }

    template <class Ops>
    static const Vec<Ops>& data(const Mat& m) {
        if constexpr (std::is_same_v<Ops, FpOps>)
            return std::get<0>(m.d_);
        else
            return std::get<1>(m.d_);
    }
};

namespace {

// Dispatches an algorithm parameterized over the field policy and rebuilds a Mat.
template <class Fn>
Mat lift1(const Mat& m, std::size_t out_r, std::size_t out_c, Fn&& fn) {
    return MatOps::visit(m, [&](const auto& K, const auto& a) {
        using Ops = std::decay_t<decltype(K)>;
        Vec<Ops> out = fn(K, a);
        return MatOps::from_vec<Ops>(m.field(), out_r, out_c, std::move(out));
    });
}

} // namespace

Mat::Mat(Field f, std::size_t r, std::size_t c) : f_(f), rows_(r), cols_(c) {
    if (f.is_fp())
        d_ = std::vector<std::int64_t>(r * c, 0);
    else
        d_ = std::vector<mpq_class>(r * c);
}

Mat Mat::zeros(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }

Mat Mat::identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    Scalar one(f, 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Mat Mat::from_ints(Field f, std::size_t rows, std::size_t cols,
                   std::initializer_list<long> entries) {
    return from_ints(f, rows, cols, std::span<const long>(entries.begin(), entries.size()));
}

Mat Mat::from_ints(Field f, std::size_t rows, std::size_t cols,
                   std::span<const long> entries) {
    if (entries.size() != rows * cols)
        throw UsageError("entry count does not match matrix shape");
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i / cols, i % cols, Scalar(f, entries[i]));
    return m;
}

Scalar Mat::get(std::size_t i, std::size_t j) const {
    std::size_t k = i * cols_ + j;
    if (f_.is_fp()) return Scalar::fp_raw(f_.prime(), std::get<0>(d_)[k]);
    return Scalar::q_raw(std::get<1>(d_)[k]);
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.field() != f_) throw UsageError("scalar field mismatch");
    std::size_t k = i * cols_ + j;
    if (f_.is_fp())
        std::get<0>(d_)[k] = v.fp_value();
    else
        std::get<1>(d_)[k] = v.q_value();
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
    if (m.f_ != f_) throw UsageError("field mismatch in set_block");
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw UsageError("set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j)
            set(r0 + i, c0 + j, m.get(i, j));
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("shape mismatch in +");
    return MatOps::visit2(*this, o, [&](const auto& K, const auto& a, const auto& b) {
        using Ops = std::decay_t<decltype(K)>;
        Vec<Ops> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = K.add(a[i], b[i]);
        return MatOps::from_vec<Ops>(f_, rows_, cols_, std::move(out));
    });
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("shape mismatch in -");
    return MatOps::visit2(*this, o, [&](const auto& K, const auto& a, const auto& b) {
        using Ops = std::decay_t<decltype(K)>;
        Vec<Ops> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = K.sub(a[i], b[i]);
        return MatOps::from_vec<Ops>(f_, rows_, cols_, std::move(out));
    });
}

Mat Mat::operator-() const {
    return lift1(*this, rows_, cols_, [&](const auto& K, const auto& a) {
        using Ops = std::decay_t<decltype(K)>;
        Vec<Ops> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = K.neg(a[i]);
        return out;
    });
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw UsageError("shape mismatch in *");
    std::size_t n = rows_, k = cols_, m = o.cols_;
    return MatOps::visit2(*this, o, [&](const auto& K, const auto& a, const auto& b) {
        using Ops = std::decay_t<decltype(K)>;
        Vec<Ops> out(n * m, K.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < k; ++t) {
                const auto& aik = a[i * k + t];
                if (Ops::is_zero(aik)) continue;
                for (std::size_t j = 0; j < m; ++j) {
                    const auto& btj = b[t * m + j];
                    if (Ops::is_zero(btj)) continue;
                    out[i * m + j] = K.add(out[i * m + j], K.mul(aik, btj));
                }
            }
        return MatOps::from_vec<Ops>(f_, n, m, std::move(out));
    });
}

Mat Mat::scaled_by_int(long kk) const {
    return lift1(*this, rows_, cols_, [&](const auto& K, const auto& a) {
        using Ops = std::decay_t<decltype(K)>;
        auto c = K.from_long(kk);
        Vec<Ops> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = K.mul(c, a[i]);
        return out;
    });
}

Mat Mat::transpose() const {
    return lift1(*this, cols_, rows_, [&](const auto& K, const auto& a) {
        using Ops = std::decay_t<decltype(K)>;
        Vec<Ops> out(a.size(), K.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[j * rows_ + i] = a[i * cols_ + j];
        return out;
    });
}

Mat Mat::kron(const Mat& o) const {
    std::size_t R = rows_ * o.rows_, C = cols_ * o.cols_;
    return MatOps::visit2(*this, o, [&](const auto& K, const auto& a, const auto& b) {
        using Ops = std::decay_t<decltype(K)>;
        Vec<Ops> out(R * C, K.zero());
        for (std::size_t i1 = 0; i1 < rows_; ++i1)
            for (std::size_t j1 = 0; j1 < cols_; ++j1) {
                const auto& v = a[i1 * cols_ + j1];
                if (Ops::is_zero(v)) continue;
                for (std::size_t i2 = 0; i2 < o.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < o.cols_; ++j2) {
                        const auto& w = b[i2 * o.cols_ + j2];
                        if (Ops::is_zero(w)) continue;
                        out[(i1 * o.rows_ + i2) * C + (j1 * o.cols_ + j2)] = K.mul(v, w);
                    }
            }
        return MatOps::from_vec<Ops>(f_, R, C, std::move(out));
    });
}

Mat Mat::hstack(std::span<const Mat> mats) {
    if (mats.empty()) throw UsageError("hstack of nothing");
    std::size_t r = mats[0].rows(), c = 0;
    for (const Mat& m : mats) {
        if (m.rows() != r) throw UsageError("hstack row mismatch");
        c += m.cols();
    }
    Mat out = Mat::zeros(mats[0].field(), r, c);
    std::size_t at = 0;
    for (const Mat& m : mats) {
        out.set_block(0, at, m);
        at += m.cols();
    }
    return out;
}

Mat Mat::vstack(std::span<const Mat> mats) {
    if (mats.empty()) throw UsageError("vstack of nothing");
    std::size_t c = mats[0].cols(), r = 0;
    for (const Mat& m : mats) {
        if (m.cols() != c) throw UsageError("vstack col mismatch");
        r += m.rows();
    }
    Mat out = Mat::zeros(mats[0].field(), r, c);
    std::size_t at = 0;
    for (const Mat& m : mats) {
        out.set_block(at, 0, m);
        at += m.rows();
    }
    return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw UsageError("block out of range");
    Mat out = Mat::zeros(f_, h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j)
            out.set(i, j, get(r0 + i, c0 + j));
    return out;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
    Mat out = Mat::zeros(f_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.set(i, j, get(idx[i], j));
    return out;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
    Mat out = Mat::zeros(f_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            out.set(i, j, get(i, idx[j]));
    return out;
}

bool Mat::operator==(const Mat& o) const {
    if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (f_.is_fp()) return std::get<0>(d_) == std::get<0>(o.d_);
    const auto& a = std::get<1>(d_);
    const auto& b = std::get<1>(o.d_);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool Mat::is_zero() const {
    return MatOps::visit(*this, [&](const auto& K, const auto& a) {
        (void)K;
        using Ops = std::decay_t<decltype(K)>;
        for (const auto& v : a)
            if (!Ops::is_zero(v)) return false;
        return true;
    });
}

std::size_t Mat::rank() const {
    return MatOps::visit(*this, [&](const auto& K, const auto& a) {
        auto e = echelon(K, a, rows_, cols_);
        return e.rank();
    });
}

Mat Mat::kernel_basis() const {
    return MatOps::visit(*this, [&](const auto& K, const auto& a) {
        using Ops = std::decay_t<decltype(K)>;
        auto e = echelon(K, a, rows_, cols_);
        std::vector<bool> is_piv(cols_, false);
        for (std::size_t c : e.piv) is_piv[c] = true;
        std::size_t nul = cols_ - e.rank();
        Vec<Ops> out(cols_ * nul, K.zero());
        std::size_t k = 0;
        for (std::size_t fcol = 0; fcol < cols_; ++fcol) {
            if (is_piv[fcol]) continue;
            out[fcol * nul + k] = K.one();
            for (std::size_t r = 0; r < e.rank(); ++r)
                out[e.piv[r] * nul + k] = K.neg(e.a[r * cols_ + fcol]);
            ++k;
        }
        return MatOps::from_vec<Ops>(f_, cols_, nul, std::move(out));
    });
}

std::optional<Mat> Mat::solve(const Mat& rhs) const {
    if (rhs.rows() != rows_) throw UsageError("solve: rhs row count mismatch");
    std::array<Mat, 2> parts{*this, rhs};
    Mat aug = hstack(parts);
    std::size_t n = cols_, m = rhs.cols();
    return MatOps::visit(aug, [&](const auto& K, const auto& a) -> std::optional<Mat> {
        using Ops = std::decay_t<decltype(K)>;
        auto e = echelon(K, a, rows_, n + m);
        for (std::size_t c : e.piv)
            if (c >= n) return std::nullopt;
        Vec<Ops> out(n * m, K.zero());
        for (std::size_t r = 0; r < e.rank(); ++r) {
            std::size_t p = e.piv[r];
            for (std::size_t j = 0; j < m; ++j)
                out[p * m + j] = e.a[r * (n + m) + n + j];
        }
        return MatOps::from_vec<Ops>(f_, n, m, std::move(out));
    });
}

std::pair<Mat, std::size_t> Mat::cokernel_projection() const {
    Mat proj = transpose().kernel_basis().transpose();
    return {proj, proj.rows()};
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(f_, rows_));
    if (!x) return std::nullopt;
    if ((*this) * *x != identity(f_, rows_)) return std::nullopt;
    return x;
}

Mat Mat::col_space_basis() const {
    std::vector<std::size_t> piv = MatOps::visit(*this, [&](const auto& K, const auto& a) {
        auto e = echelon(K, a, rows_, cols_);
        return e.piv;
    });
    return select_cols(piv);
}

std::vector<std::string> Mat::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.push_back(get(i, j).str());
    return out;
}

Mat Mat::from_strings(Field f, std::size_t rows, std::size_t cols,
                      std::span<const std::string> entries) {
    if (entries.size() != rows * cols)
        throw ParseError("entry count does not match matrix shape");
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i / cols, i % cols, Scalar::parse(f, entries[i]));
    return m;
}

std::uint64_t Mat::hash64() const {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x1f;
        h *= 1099511628211ull;
    };
    eat(f_.str());
    eat(std::to_string(rows_));
    eat(std::to_string(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            eat(get(i, j).str());
    return h;
}

Mat vec_cols(const Mat& m) {
    Mat out = Mat::zeros(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            out.set(j * m.rows() + i, 0, m.get(i, j));
    return out;
}

Mat unvec_cols(const Mat& v, std::size_t rows, std::size_t cols) {
    if (v.rows() != rows * cols || v.cols() != 1)
        throw UsageError("unvec_cols shape mismatch");
    Mat out = Mat::zeros(v.field(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            out.set(i, j, v.get(j * rows + i, 0));
    return out;
}

} // namespace gproj
