#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "gproj/field.hpp"

namespace gproj {

/// Dense matrix over an exact field (F_p or Q), row-major storage.
/// Entries are always canonical, so operator== is the mathematical equality.
/// All operations are pure; a Mat never mutates after construction except
/// through set()/set_block() during assembly.
class Mat {
public:
    static Mat zeros(Field f, std::size_t rows, std::size_t cols);
    static Mat identity(Field f, std::size_t n);
    /// Lifts integer entries (row-major) into the field.
    static Mat from_ints(Field f, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries);
    static Mat from_ints(Field f, std::size_t rows, std::size_t cols,
                         std::span<const long> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return f_; }

    Scalar get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void set_block(std::size_t r0, std::size_t c0, const Mat& m);

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    /// k * M with the integer k lifted into the field.
    Mat scaled_by_int(long k) const;

    Mat transpose() const;
    Mat kron(const Mat& o) const;

    static Mat hstack(std::span<const Mat> mats);
    static Mat vstack(std::span<const Mat> mats);
    Mat block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
    Mat select_rows(std::span<const std::size_t> idx) const;
    Mat select_cols(std::span<const std::size_t> idx) const;
    Mat col(std::size_t j) const { return block(0, j, rows_, 1); }

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    std::size_t rank() const;
    /// Columns form a canonical basis of the null space; cols() - rank() of them.
    Mat kernel_basis() const;
    /// Returns X with (*this) * X = rhs, or nullopt when inconsistent.
    std::optional<Mat> solve(const Mat& rhs) const;
    /// Projection onto cokernel coordinates: full-row-rank proj with
    /// proj * this == 0 and proj surjective; second = rows() - rank().
    std::pair<Mat, std::size_t> cokernel_projection() const;
    std::optional<Mat> inverse() const;
    /// Canonical basis (pivot columns) of the column space.
    Mat col_space_basis() const;

    std::vector<std::string> to_strings() const;
    static Mat from_strings(Field f, std::size_t rows, std::size_t cols,
                            std::span<const std::string> entries);

    /// FNV-1a over the canonical serialization; stable across runs.
    std::uint64_t hash64() const;

private:
    Mat(Field f, std::size_t r, std::size_t c);
    Field f_;
    std::size_t rows_, cols_;
    std::variant<std::vector<std::int64_t>, std::vector<mpq_class>> d_;

    friend struct MatOps;
};

/// vec by columns: stacks the columns of m into one (rows*cols) x 1 matrix.
/// With this convention vec(A*F*B) = kron(B^T, A) * vec(F).
Mat vec_cols(const Mat& m);
Mat unvec_cols(const Mat& v, std::size_t rows, std::size_t cols);

} // namespace gproj
