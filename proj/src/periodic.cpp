#include "gproj/periodic.hpp"

namespace gproj {

namespace {

void add_block(Mat& m, std::size_t r0, std::size_t c0, const Mat& t) {
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            Scalar v = t.get(i, j);
            if (!v.is_zero()) m.set(r0 + i, c0 + j, m.get(r0 + i, c0 + j) + v);
        }
}

// Arrow out of each vertex of the cyclic quiver underlying B_n, in vertex
// order; throws when the right tensor factor does not have that shape.
std::vector<std::size_t> cyclic_arrows(const AlgebraPtr& b) {
    const auto& qi = b->quiver_info();
    if (!qi) throw UsageError("functor_R: right factor has no quiver presentation");
    const Quiver& q = qi->presentation.quiver;
    std::size_t n = q.vertex_count;
    if (q.arrows.size() != n)
        throw UsageError("functor_R: right factor is not a cyclic radical-square-zero algebra");
    std::vector<std::size_t> out(n, q.arrows.size());
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        if (a.to != (a.from + 1) % n || out[a.from] != q.arrows.size())
            throw UsageError("functor_R: right factor is not a cyclic radical-square-zero algebra");
        out[a.from] = ai;
    }
    if (b->dim() != 2 * n)
        throw UsageError("functor_R: right factor is not a cyclic radical-square-zero algebra");
    return out;
}

} // namespace

PeriodicComplex make_periodic(std::vector<Module> terms, std::vector<Mat> diffs) {
    std::size_t n = terms.size();
    if (n == 0 || diffs.size() != n)
        throw UsageError("periodic complex: need n >= 1 terms and n differentials");
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        if (!is_module_hom(terms[i], terms[j], diffs[i]))
            throw UsageError("periodic complex: differential " + std::to_string(i) +
                             " is not a module map");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!(diffs[(i + 1) % n] * diffs[i]).is_zero())
            throw UsageError("periodic complex: consecutive differentials do not compose to zero");
    return {n, std::move(terms), std::move(diffs)};
}

PeriodicChainMap make_chain_map(PeriodicComplex source, PeriodicComplex target,
                                std::vector<Mat> components) {
    if (source.n != target.n || components.size() != source.n)
        throw UsageError("chain map: size mismatch");
    for (std::size_t i = 0; i < source.n; ++i) {
        std::size_t j = (i + 1) % source.n;
        if (components[j] * source.diffs[i] != target.diffs[i] * components[i])
            throw UsageError("chain map: square " + std::to_string(i) + " does not commute");
    }
    return {std::move(source), std::move(target), std::move(components)};
}

PeriodicComplex functor_R(const Module& x) {
    const auto& info = x.algebra()->tensor_info();
    if (!info) throw UsageError("functor_R: algebra is not a tensor product");
    const AlgebraPtr& a = info->left;
    const AlgebraPtr& b = info->right;
    std::vector<std::size_t> arrow_of = cyclic_arrows(b);
    std::size_t n = b->num_idempotents();
    Mat unit_a = a->unit_elem();

    std::vector<Mat> comp;
    std::vector<Module> terms;
    for (std::size_t i = 0; i < n; ++i) {
        Mat basis = x.action_of_elem(unit_a.kron(b->idempotent_elem(i))).col_space_basis();
        std::vector<Mat> acts;
        for (std::size_t g = 0; g < info->left_gen_count; ++g)
            acts.push_back(restrict_map(basis, basis, x.action(g)));
        terms.emplace_back(a, basis.cols(), std::move(acts));
        comp.push_back(std::move(basis));
    }
    std::vector<Mat> diffs;
    for (std::size_t i = 0; i < n; ++i) {
        const Mat& arrow_elem = b->generators()[b->quiver_info()->arrow_gen[arrow_of[i]]].elem;
        Mat act = x.action_of_elem(unit_a.kron(arrow_elem));
        diffs.push_back(restrict_map(comp[i], comp[(i + 1) % n], act));
    }
    return make_periodic(std::move(terms), std::move(diffs));
}

bool is_periodic_complex_of_projectives(const PeriodicComplex& c) {
    for (const Module& t : c.terms)
        if (!is_projective(t)) return false;
    return true;
}

std::optional<std::vector<Mat>> null_homotopy(const PeriodicChainMap& f) {
    std::size_t n = f.source.n;
    Field fd = f.source.terms[0].algebra()->field();
    auto xd = [&](std::size_t i) { return f.source.terms[i % n].dim(); };
    auto yd = [&](std::size_t i) { return f.target.terms[i % n].dim(); };
    auto prev = [&](std::size_t i) { return (i + n - 1) % n; };

    // unknown block j: h_j of shape Y_{j-1} x X_j, vectorized by columns
    std::vector<std::size_t> hoff(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) hoff[j + 1] = hoff[j] + yd(prev(j)) * xd(j);
    std::vector<std::size_t> eoff(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) eoff[i + 1] = eoff[i] + yd(i) * xd(i);

    Mat sys = Mat::zeros(fd, eoff[n], hoff[n]);
    Mat rhs = Mat::zeros(fd, eoff[n], 1);
    for (std::size_t i = 0; i < n; ++i) {
        // f_i = h_{i+1} dX_i + dY_{i-1} h_i
        std::size_t ip1 = (i + 1) % n;
        add_block(sys, eoff[i], hoff[ip1],
                  f.source.diffs[i].transpose().kron(Mat::identity(fd, yd(i))));
        add_block(sys, eoff[i], hoff[i],
                  Mat::identity(fd, xd(i)).kron(f.target.diffs[prev(i)]));
        rhs.set_block(eoff[i], 0, vec_cols(f.components[i]));
    }
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    std::vector<Mat> h;
    for (std::size_t j = 0; j < n; ++j)
        h.push_back(unvec_cols(sol->block(hoff[j], 0, hoff[j + 1] - hoff[j], 1),
                               yd(prev(j)), xd(j)));
    return h;
}

bool is_contractible(const PeriodicComplex& c) {
    for (const Module& t : c.terms)
        if (!is_projective(t))
            throw UsageError("is_contractible: complex has a non-projective term");
    std::vector<Mat> id;
    for (const Module& t : c.terms) id.push_back(Mat::identity(t.algebra()->field(), t.dim()));
    PeriodicChainMap f = make_chain_map(c, c, std::move(id));
    return null_homotopy(f).has_value();
}

bool object_equiv_check(const Module& x, std::size_t bound) {
    const auto& info = x.algebra()->tensor_info();
    if (!info) throw UsageError("object_equiv_check: algebra is not a tensor product");
    DimVerdict gd = global_dim(info->left, bound);
    if (!gd.finite)
        throw HypothesisError("object_equiv_check: global dimension of the left factor "
                              "unknown at cap " + std::to_string(bound));
    GpVerdict gp = gp_direct(x, bound);
    if (gp.is_unknown())
        throw HypothesisError("object_equiv_check: verdict unknown at bound");

    PeriodicComplex r = functor_R(x);
    bool termwise = is_periodic_complex_of_projectives(r);
    bool clause1 = gp.is_yes() == termwise;

    bool xproj = is_projective(x);
    bool contractible = termwise && is_contractible(r);
    bool clause2 = xproj == contractible;
    return clause1 && clause2;
}

BimoduleGpReport bimodule_gp_check(const AlgebraPtr& a, std::size_t bound) {
    GorensteinCert cert = is_gorenstein(a, bound);
    if (!cert.certified)
        throw HypothesisError("bimodule_gp_check: Gorenstein status unknown at cap " +
                              std::to_string(bound));
    AlgebraPtr env = enveloping(a);
    std::vector<Mat> acts;
    for (const auto& g : a->generators()) acts.push_back(a->left_mult_matrix(g.elem));
    for (const auto& g : a->generators()) acts.push_back(a->right_mult_matrix(g.elem));
    Module bimod(env, a->dim(), std::move(acts));
    validate_module(bimod);

    BimoduleGpReport out{gp_direct(bimod, bound), is_self_injective(a), false};
    out.agree = !out.gp_over_env.is_unknown() && (out.gp_over_env.is_yes() == out.selfinj);
    return out;
}

} // namespace gproj
