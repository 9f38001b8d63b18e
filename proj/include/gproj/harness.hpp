#pragma once

#include "gproj/io.hpp"
#include "gproj/periodic.hpp"
#include "gproj/rng.hpp"

namespace gproj {

/// Seeded generation plan for one verification run. Family tokens: "kA2",
/// "kA3_with_relation", "dual_numbers", "Bn:<n>", "square_with_commutativity",
/// "custom:<file>". Two tokens mean (A, B) for tensor-product theorems; one
/// token selects a single algebra where that is what the check needs.
struct GenSpec {
    std::string theorem;
    std::vector<std::string> families;
    Field field = Field::fp(101);
    std::size_t dim_cap = 12;
    std::size_t samples = 200;
    std::size_t bound = 20;
    std::size_t max_degree = 6; // for the dimension-identity checks
    std::uint64_t seed = 1;
    long coeff_lo = -2, coeff_hi = 2;
};

extern const std::vector<std::string> kTheoremNames;

struct SampleRow {
    std::size_t index = 0;
    std::string module_hash;
    std::vector<std::pair<std::string, std::string>> verdicts;
    bool agree = false;
    bool inconclusive = false;
};

struct AgreementReport {
    GenSpec spec;
    std::string prng;
    std::vector<std::pair<std::string, std::string>> hypotheses;
    std::vector<SampleRow> rows;
    std::size_t agree_count = 0, disagree_count = 0, inconclusive_count = 0;
    std::vector<std::pair<std::size_t, ojson>> disagreements; // sample -> replay module

    bool passed() const { return disagree_count == 0 && inconclusive_count == 0; }
};

ojson report_to_json(const AgreementReport& r);
AgreementReport report_from_json(const ojson& j);

AlgebraPtr build_family(const std::string& token, Field field);

/// Cokernel of a seeded random map between random finite sums of
/// indecomposable projectives; always a valid module of dimension <= dim_cap.
Module random_module(const AlgebraPtr& alg, std::size_t dim_cap, Rng& rng,
                     long coeff_lo = -2, long coeff_hi = 2);

/// Random module filtered to a certified "yes" verdict, with a projective
/// fallback so the search always terminates.
Module random_gp_module(const AlgebraPtr& alg, std::size_t dim_cap, Rng& rng,
                        std::size_t bound, long coeff_lo = -2, long coeff_hi = 2);

Mat random_hom(const Module& from, const Module& to, Rng& rng,
               long coeff_lo = -2, long coeff_hi = 2);

/// Extension of quot by sub realized as a pushout along a random map from
/// the syzygy of quot; fits into 0 -> sub -> E -> quot -> 0.
Module random_extension(const Module& sub, const Module& quot, Rng& rng,
                        long coeff_lo = -2, long coeff_hi = 2);

/// Runs every criterion the named check compares, sample by sample, and
/// aggregates agreement. Hypothesis failures throw HypothesisError.
AgreementReport verify_theorem(const GenSpec& spec);

} // namespace gproj
