#pragma once

#include <memory>

#include "gproj/module.hpp"

namespace gproj {

/// Cap-limited dimension: an exact value, or ">= cap" when the bound was hit.
struct DimVerdict {
    std::size_t value = 0;
    bool finite = false;
    std::size_t cap = 0;

    bool operator==(const DimVerdict& o) const {
        return finite == o.finite && cap == o.cap && (!finite || value == o.value);
    }
    std::string str() const {
        return finite ? std::to_string(value) : ">= " + std::to_string(cap);
    }
};

/// Minimal projective resolution ... -> P_1 -> P_0 -> target -> 0, built by
/// iterated projective covers. Image of every differential lies in the
/// radical of the previous term; when terminated, the last kernel is zero.
struct Resolution {
    Module target;
    std::vector<ProjSum> terms;
    std::vector<Mat> diffs;  // diffs[i]: terms[i+1] -> terms[i]
    Mat augmentation;        // terms[0] -> target
    bool terminated = false;
    std::size_t cap = 0;

    std::size_t length() const { return terms.size() - 1; }
};
using ResolutionPtr = std::shared_ptr<const Resolution>;

/// Minimal projective cover: P = sum of P_v with multiplicity dim e_v*top(m),
/// with a surjection whose kernel lies in rad P.
std::pair<ProjSum, Mat> projective_cover(const Module& m);

/// Memoized per (algebra, module content); extends on demand when a larger
/// cap is requested.
ResolutionPtr minimal_resolution(const Module& m, std::size_t cap);

bool is_projective(const Module& m);

std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t max_degree);
std::size_t ext_dim(const Module& m, const Module& n, std::size_t degree);

/// Tor of a right module (given as a left module over the structural
/// opposite) against a left module.
std::vector<std::size_t> tor_dims(const Module& u, const Module& x, std::size_t max_degree);
std::size_t tor_dim(const Module& u, const Module& x, std::size_t degree);

DimVerdict proj_dim(const Module& m, std::size_t cap);
DimVerdict inj_dim(const Module& m, std::size_t cap);
DimVerdict global_dim(const AlgebraPtr& alg, std::size_t cap);

struct GorensteinCert {
    bool certified = false; // both injective dimensions finite within the cap
    DimVerdict left, right;

    /// Exactness bound: Ext^n(-, algebra) vanishes for n beyond this.
    std::size_t bound() const { return std::max(left.value, right.value); }
};
GorensteinCert is_gorenstein(const AlgebraPtr& alg, std::size_t cap);
bool is_self_injective(const AlgebraPtr& alg);

/// Per-algebra cached artifacts. Values are returned by copy/shared_ptr; the
/// memo table is safe for concurrent readers and writers.
ProjSum indecomposable_projective(const AlgebraPtr& alg, std::size_t v);
Module simple_module(const AlgebraPtr& alg, std::size_t v);
/// D of the right regular module, as a left module over alg.
Module left_dual_of_regular(const AlgebraPtr& alg);

} // namespace gproj
