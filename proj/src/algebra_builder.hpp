#pragma once

#include "gproj/algebra.hpp"

namespace gproj {

// Internal construction access; every factory fills the fields and then runs
// finalize(), which precomputes multiplication matrices and validates the
// whole structure (associativity, idempotents, words, radical).
class AlgebraBuilder {
public:
    static std::shared_ptr<BasedAlgebra> fresh() {
        return std::shared_ptr<BasedAlgebra>(new BasedAlgebra());
    }
    static void fill(BasedAlgebra& a, Field f, std::size_t dim,
                     std::vector<std::string> labels, Mat mult,
                     std::vector<std::vector<std::size_t>> idem,
                     std::vector<BasedAlgebra::Generator> gens,
                     std::vector<std::vector<std::uint32_t>> words,
                     std::vector<std::size_t> radical) {
        a.field_ = f;
        a.dim_ = dim;
        a.labels_ = std::move(labels);
        a.mult_ = std::move(mult);
        a.idem_ = std::move(idem);
        a.gens_ = std::move(gens);
        a.words_ = std::move(words);
        a.radical_ = std::move(radical);
    }
    static void set_tensor(BasedAlgebra& a, BasedAlgebra::TensorInfo t) {
        a.tensor_ = std::move(t);
    }
    static void set_quiver(BasedAlgebra& a, BasedAlgebra::QuiverInfo q) {
        a.quiver_ = std::move(q);
    }
    static void finalize(BasedAlgebra& a) { a.finalize(); }
};

} // namespace gproj
