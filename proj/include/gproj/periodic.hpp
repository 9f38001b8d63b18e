#pragma once

#include "gproj/gpcriteria.hpp"

namespace gproj {

/// Cyclically indexed complex: terms X_0..X_{n-1} over one algebra with
/// differentials X_i -> X_{i+1 mod n} whose consecutive composites vanish.
/// n = 1 is allowed (a single square-zero endomorphism).
struct PeriodicComplex {
    std::size_t n = 0;
    std::vector<Module> terms;
    std::vector<Mat> diffs;
};

/// Validates shapes, hom property and d^2 = 0 cyclically.
PeriodicComplex make_periodic(std::vector<Module> terms, std::vector<Mat> diffs);

struct PeriodicChainMap {
    PeriodicComplex source, target;
    std::vector<Mat> components; // f_i: X_i -> Y_i with f_{i+1} d = d f_i
};
PeriodicChainMap make_chain_map(PeriodicComplex source, PeriodicComplex target,
                                std::vector<Mat> components);

/// Vertex components (1 (x) e_i)x with the induced A-maps of the cyclic
/// arrows; requires the algebra of x to be tensor(A, B_n).
PeriodicComplex functor_R(const Module& x);

bool is_periodic_complex_of_projectives(const PeriodicComplex& c);

/// Solves f_i = h_{i+1} d_i + d_{i-1} h_i for h_i: X_i -> Y_{i-1}.
std::optional<std::vector<Mat>> null_homotopy(const PeriodicChainMap& f);

/// Identity null-homotopic; requires projective terms.
bool is_contractible(const PeriodicComplex& c);

/// Object-level equivalences for modules over A (x) B_n with gldim A finite:
/// (Gorenstein projective <=> all components projective) and
/// (projective <=> the component complex is contractible).
bool object_equiv_check(const Module& x, std::size_t bound);

/// The regular bimodule over the enveloping algebra: Gorenstein projectivity
/// there against self-injectivity of the algebra itself.
struct BimoduleGpReport {
    GpVerdict gp_over_env;
    bool selfinj = false;
    bool agree = false;
};
BimoduleGpReport bimodule_gp_check(const AlgebraPtr& a, std::size_t bound);

} // namespace gproj
