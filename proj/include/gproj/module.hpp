#pragma once

#include <optional>

#include "gproj/algebra.hpp"

namespace gproj {

/// Finite-dimensional left module, stored as one action matrix per algebra
/// generator. Basis-element actions are recovered through the algebra's
/// generator words. Immutable.
class Module {
public:
    Module(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const Mat& action(std::size_t gen) const { return actions_[gen]; }
    const std::vector<Mat>& actions() const { return actions_; }

    Mat action_of_basis(std::size_t b) const;
    Mat action_of_elem(const Mat& elem) const;
    Mat action_of_idempotent(std::size_t i) const;
    std::vector<Mat> all_basis_actions() const;

    bool operator==(const Module& o) const;
    /// Content hash (field, dim, action entries); stable across runs.
    std::uint64_t hash64() const;

private:
    AlgebraPtr alg_;
    std::size_t dim_;
    std::vector<Mat> actions_;
};

/// Checks that the generator actions extend to an algebra representation:
/// basis products match the structure constants, the idempotents sum to the
/// identity, and the generator elements reproduce the generator actions.
void validate_module(const Module& m);

struct ModuleHom {
    Module source, target;
    Mat matrix; // target.dim x source.dim
};
bool is_module_hom(const Module& m, const Module& n, const Mat& f);

Module zero_module(const AlgebraPtr& alg);
Module regular_module(const AlgebraPtr& alg);
Module direct_sum(const Module& a, const Module& b);

/// Basis of Hom(m, n) as matrices (solution space of the intertwining
/// equations for the generators).
std::vector<Mat> hom_basis_mats(const Module& m, const Module& n);
std::vector<ModuleHom> hom_basis(const Module& m, const Module& n);

/// k-dual: same dimension, transposed actions, module over opposite(alg)
/// (or an explicitly provided structural opposite).
Module dual_module(const Module& m);
Module dual_module_to(const Module& m, const AlgebraPtr& target);

/// Underlying one-sided modules of a module over a tensor-product algebra.
Module restrict_to_left(const Module& x);
Module restrict_to_right(const Module& x);

struct SubQuot {
    Module module;
    ModuleHom map; // inclusion (sub) or projection (quotient)
};
SubQuot submodule_from_cols(const Module& m, const Mat& cols);
SubQuot quotient_by_cols(const Module& m, const Mat& span);
SubQuot radical_submodule(const Module& m);
SubQuot top_quotient(const Module& m);

/// X / rad(B)X for X over A (x) B, with the full tensor-algebra action.
Module rad_right_quotient(const Module& x);

/// m (x) n as a module over the tensor algebra t = tensor(a, b), where m
/// lives over a and n over b; the two factors act on their own slots.
Module outer_tensor(const AlgebraPtr& t, const Module& m, const Module& n);

/// p (x)_B x for a right B-module p (given as a left module over the
/// structural opposite of the right tensor factor) and x over A (x) B;
/// the result is a module over A. Computed as an explicit cokernel in the
/// k-tensor space.
Module tensor_with_right_module(const Module& p, const Module& x);

/// D(u) (x)_B x as a module over the left tensor factor A; u is a left
/// B-module, x a module over A (x) B.
Module tensor_over_right(const Module& u, const Module& x);

/// Hom_Lambda(x, w) as a module over opposite(Lambda), where w carries a
/// right Lambda-action (one matrix per generator) commuting with its left
/// structure. homs holds the chosen basis of the Hom space.
struct HomDual {
    Module module;
    std::vector<Mat> homs;
};
HomDual hom_dual(const Module& x, const Module& w, const std::vector<Mat>& w_right_actions);

/// Hom_Lambda(m, Lambda) as a module over opposite(Lambda).
Module lambda_dual(const Module& m);
/// Whether the evaluation map m -> m** (values in the regular module) is
/// bijective.
bool evaluation_iso_check(const Module& m);

/// Isomorphism search: equal dimensions plus a bijective hom, found by
/// seeded random combinations with a small-support exhaustive fallback.
std::optional<Mat> find_isomorphism(const Module& m, const Module& n);
bool is_isomorphic(const Module& m, const Module& n);

/// Finite direct sum of indecomposable projectives Lambda e_v with explicit
/// coordinate bookkeeping (used for covers, resolutions and fast Hom).
struct ProjSum {
    AlgebraPtr alg;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> offsets;                 // coordinate offset per summand
    std::vector<std::vector<std::size_t>> alg_basis;  // algebra basis indices per summand
    std::vector<std::size_t> unit_pos;                // global coordinate of e_v per summand
    Module mod;

    std::size_t dim() const { return mod.dim(); }
};
ProjSum projective_sum(const AlgebraPtr& alg, std::vector<std::size_t> vertices);

/// Hom(P, n) for a structured projective P: basis in bijection with
/// the direct sum of the e_v * n, plus coordinate extraction.
struct HomFromProj {
    std::vector<Mat> basis;          // hom matrices, n.dim x P.dim
    std::vector<Mat> comp_basis;     // per summand: column basis of e_v * n
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> unit_pos; // P coordinate of e_v per summand
    std::size_t space_dim = 0;

    Mat coords_of(const Mat& hom) const;
};
HomFromProj hom_from_projective(const ProjSum& P, const Module& n);

/// Matrix of the induced map between subspaces: cols_tgt^-1 * f * cols_src.
Mat restrict_map(const Mat& cols_src, const Mat& cols_tgt, const Mat& f);

} // namespace gproj
