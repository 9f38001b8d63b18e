#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gproj/matrix.hpp"

namespace gproj {

struct Quiver {
    struct Arrow {
        std::string id;
        std::size_t from, to;
    };
    std::size_t vertex_count = 0;
    std::vector<Arrow> arrows;
};

/// One summand of a relation: coeff * (arrow path in traversal order,
/// i.e. path[0] is applied first).
struct PathTerm {
    std::string coeff;
    std::vector<std::string> path;
};
using Relation = std::vector<PathTerm>;

struct PathPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    Field field = Field::rationals();
    std::size_t length_cap = 64;
};

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

/// Finite-dimensional algebra with a distinguished basis, structure
/// constants, a complete set of primitive orthogonal idempotents, a
/// generator set (every basis element is a product of generators via its
/// word) and a radical basis. Immutable once built.
class BasedAlgebra {
public:
    struct Generator {
        std::string name;
        Mat elem; // dim x 1 column over the basis
    };
    struct TensorInfo {
        AlgebraPtr left, right;
        std::size_t left_gen_count; // generators are [left gens..., right gens...]
    };
    struct QuiverInfo {
        PathPresentation presentation;
        std::vector<std::size_t> vertex_gen; // generator index of e_v
        std::vector<std::size_t> arrow_gen;  // generator index per arrow
    };

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    /// Structure constants: row (i*dim + j) holds the coefficients of b_i * b_j.
    const Mat& mult_table() const { return mult_; }

    const std::vector<std::vector<std::size_t>>& idempotents() const { return idem_; }
    std::size_t num_idempotents() const { return idem_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<std::size_t> generator_index(const std::string& name) const;
    /// Word of basis element b: product of the listed generators in order.
    const std::vector<std::uint32_t>& basis_word(std::size_t b) const { return words_[b]; }
    const std::vector<std::size_t>& radical_basis() const { return radical_; }

    /// b lies in e_tgt(b) * Lambda * e_src(b).
    std::size_t src(std::size_t b) const { return src_[b]; }
    std::size_t tgt(std::size_t b) const { return tgt_[b]; }

    Mat basis_elem(std::size_t b) const;
    Mat idempotent_elem(std::size_t i) const;
    Mat unit_elem() const;

    Mat mult_elems(const Mat& x, const Mat& y) const;
    const Mat& basis_left_mult(std::size_t b) const { return lmul_[b]; }
    const Mat& basis_right_mult(std::size_t b) const { return rmul_[b]; }
    Mat left_mult_matrix(const Mat& elem) const;
    Mat right_mult_matrix(const Mat& elem) const;

    const std::optional<TensorInfo>& tensor_info() const { return tensor_; }
    const std::optional<QuiverInfo>& quiver_info() const { return quiver_; }

    /// Basis index of the pair (a, b) in a tensor-product algebra.
    std::size_t pair_index(std::size_t a, std::size_t b) const;

private:
    BasedAlgebra() = default;
    void finalize(); // precomputes mult matrices, src/tgt; validates everything

    Field field_ = Field::rationals();
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    Mat mult_ = Mat::zeros(Field::rationals(), 0, 0);
    std::vector<std::vector<std::size_t>> idem_;
    std::vector<Generator> gens_;
    std::vector<std::vector<std::uint32_t>> words_;
    std::vector<std::size_t> radical_;
    std::vector<std::size_t> src_, tgt_;
    std::vector<Mat> lmul_, rmul_;
    std::optional<TensorInfo> tensor_;
    std::optional<QuiverInfo> quiver_;

    friend class AlgebraBuilder;
};

/// Path algebra modulo an admissible ideal: basis = residue classes of paths,
/// computed by degree-by-degree linear reduction. Throws on non-admissible
/// relations and when path growth survives past the length cap.
AlgebraPtr from_presentation(const PathPresentation& p);

/// Same basis, reversed multiplication. Memoized: repeated calls on the same
/// algebra object return the same opposite object.
AlgebraPtr opposite(const AlgebraPtr& a);

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr enveloping(const AlgebraPtr& a);

/// Radical-square-zero algebra of the cyclic quiver with n vertices (dim 2n).
AlgebraPtr make_Bn(std::size_t n, Field field);

// Shipped presentation families.
PathPresentation presentation_trivial(Field f);       // k: one vertex, no arrows
PathPresentation presentation_kA2(Field f);           // 0 --a--> 1
PathPresentation presentation_kA3_zero_rel(Field f);  // 0->1->2, composite = 0
PathPresentation presentation_dual_numbers(Field f);  // k[x]/(x^2)
PathPresentation presentation_Bn(std::size_t n, Field f);
PathPresentation presentation_square_comm(Field f);   // commutative square

} // namespace gproj
