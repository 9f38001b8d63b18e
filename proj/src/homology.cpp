#include "gproj/homology.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace gproj {

namespace {

// ---------------------------------------------------------------------------
// Shared memo table, keyed by algebra identity. Entries pin their algebra so
// pointer keys can never be reused while cached.
// ---------------------------------------------------------------------------

struct CacheEntry {
    AlgebraPtr pin;
    std::map<std::size_t, ProjSum> projectives;
    std::map<std::size_t, Module> simples;
    std::shared_ptr<Module> dual_of_right_regular;
    std::shared_ptr<bool> selfinj;
    std::shared_ptr<GorensteinCert> gorenstein; // best certified result
    std::size_t gorenstein_unknown_cap = 0;
    std::map<std::uint64_t, ResolutionPtr> resolutions;
};

std::shared_mutex cache_mutex;
std::map<const BasedAlgebra*, CacheEntry> cache;

CacheEntry& entry_locked(const AlgebraPtr& alg) {
    auto it = cache.find(alg.get());
    if (it == cache.end()) {
        it = cache.emplace(alg.get(), CacheEntry{}).first;
        it->second.pin = alg;
    }
    return it->second;
}

} // namespace

ProjSum indecomposable_projective(const AlgebraPtr& alg, std::size_t v) {
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(alg.get());
        if (it != cache.end()) {
            auto p = it->second.projectives.find(v);
            if (p != it->second.projectives.end()) return p->second;
        }
    }
    ProjSum ps = projective_sum(alg, {v});
    std::unique_lock lock(cache_mutex);
    entry_locked(alg).projectives.emplace(v, ps);
    return ps;
}

Module simple_module(const AlgebraPtr& alg, std::size_t v) {
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(alg.get());
        if (it != cache.end()) {
            auto p = it->second.simples.find(v);
            if (p != it->second.simples.end()) return p->second;
        }
    }
    Module s = top_quotient(indecomposable_projective(alg, v).mod).module;
    if (s.dim() != 1)
        throw Error("simple_module: simple at vertex " + std::to_string(v) +
                    " is not one-dimensional");
    std::unique_lock lock(cache_mutex);
    entry_locked(alg).simples.emplace(v, s);
    return s;
}

Module left_dual_of_regular(const AlgebraPtr& alg) {
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(alg.get());
        if (it != cache.end() && it->second.dual_of_right_regular)
            return *it->second.dual_of_right_regular;
    }
    Module m = dual_module_to(regular_module(opposite(alg)), alg);
    std::unique_lock lock(cache_mutex);
    entry_locked(alg).dual_of_right_regular = std::make_shared<Module>(m);
    return m;
}

std::pair<ProjSum, Mat> projective_cover(const Module& m) {
    const AlgebraPtr& alg = m.algebra();
    Field f = alg->field();
    SubQuot top = top_quotient(m);
    const Mat& pi = top.map.matrix; // m -> top, full row rank

    std::vector<std::size_t> vertices;
    std::vector<Mat> lifts;
    for (std::size_t v = 0; v < alg->num_idempotents(); ++v) {
        Mat comp = top.module.action_of_idempotent(v).col_space_basis();
        for (std::size_t j = 0; j < comp.cols(); ++j) {
            auto pre = pi.solve(comp.col(j));
            if (!pre) throw Error("projective_cover: top projection is not surjective");
            vertices.push_back(v);
            lifts.push_back(m.action_of_idempotent(v) * *pre);
        }
    }
    ProjSum P = projective_sum(alg, vertices);
    Mat epi = Mat::zeros(f, m.dim(), P.dim());
    for (std::size_t k = 0; k < vertices.size(); ++k)
        for (std::size_t t = 0; t < P.alg_basis[k].size(); ++t)
            epi.set_block(0, P.offsets[k] + t, m.action_of_basis(P.alg_basis[k][t]) * lifts[k]);
    if (epi.rank() != m.dim())
        throw Error("projective_cover: lifted generators do not span the module");
    return {std::move(P), std::move(epi)};
}

bool is_projective(const Module& m) {
    return projective_cover(m).first.dim() == m.dim();
}

namespace {

ResolutionPtr build_resolution(const Module& m, std::size_t cap) {
    auto res = std::make_shared<Resolution>(Resolution{
        m, {}, {}, Mat::zeros(m.algebra()->field(), 0, 0), false, cap});
    auto [P0, aug] = projective_cover(m);
    res->terms.push_back(std::move(P0));
    res->augmentation = aug;

    Mat incl = aug.kernel_basis(); // syzygy inside the last term
    while (true) {
        if (incl.cols() == 0) {
            res->terminated = true;
            break;
        }
        if (res->length() >= cap) break;
        SubQuot syz = submodule_from_cols(res->terms.back().mod, incl);
        auto [P, phi] = projective_cover(syz.module);
        res->diffs.push_back(syz.map.matrix * phi);
        res->terms.push_back(std::move(P));
        incl = phi.kernel_basis();
    }
    return res;
}

} // namespace

ResolutionPtr minimal_resolution(const Module& m, std::size_t cap) {
    const AlgebraPtr& alg = m.algebra();
    std::uint64_t key = m.hash64();
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(alg.get());
        if (it != cache.end()) {
            auto r = it->second.resolutions.find(key);
            if (r != it->second.resolutions.end() && r->second->target == m &&
                (r->second->terminated || r->second->length() >= cap))
                return r->second;
        }
    }
    ResolutionPtr res = build_resolution(m, cap);
    std::unique_lock lock(cache_mutex);
    auto& slot = entry_locked(alg).resolutions[key];
    // keep the deeper of the two on a race; mismatched targets (hash
    // collision) simply stay uncached
    if (!slot || (slot->target == m && !slot->terminated && slot->length() < res->length()) ||
        (slot->target == m && res->terminated && !slot->terminated))
        slot = res;
    return res;
}

std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t max_degree) {
    if (m.algebra().get() != n.algebra().get())
        throw UsageError("ext_dims: modules over different algebras");
    std::vector<std::size_t> out(max_degree + 1, 0);
    if (m.dim() == 0 || n.dim() == 0) return out;

    ResolutionPtr res = minimal_resolution(m, max_degree + 1);
    std::size_t L = res->length();

    std::vector<HomFromProj> homs;
    std::size_t top_term = std::min(L, max_degree + 1);
    for (std::size_t i = 0; i <= top_term; ++i)
        homs.push_back(hom_from_projective(res->terms[i], n));

    // delta[i]: Hom(P_{i-1}, n) -> Hom(P_i, n), psi |-> psi . d_i
    std::vector<Mat> delta;
    Field f = m.algebra()->field();
    for (std::size_t i = 1; i <= top_term; ++i) {
        Mat d = Mat::zeros(f, homs[i].space_dim, homs[i - 1].space_dim);
        for (std::size_t j = 0; j < homs[i - 1].basis.size(); ++j)
            d.set_block(0, j, homs[i].coords_of(homs[i - 1].basis[j] * res->diffs[i - 1]));
        delta.push_back(std::move(d));
    }

    auto rank_of = [&](std::size_t i) -> std::size_t { // rank of delta_i, i >= 1
        if (i == 0 || i > delta.size()) return 0;
        return delta[i - 1].rank();
    };
    for (std::size_t deg = 0; deg <= max_degree; ++deg) {
        if (deg > L) continue; // zero beyond a terminated resolution
        std::size_t space = homs[deg].space_dim;
        std::size_t ker = (deg < top_term) ? space - rank_of(deg + 1) : space;
        out[deg] = ker - rank_of(deg);
    }
    return out;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t degree) {
    return ext_dims(m, n, degree)[degree];
}

std::vector<std::size_t> tor_dims(const Module& u, const Module& x, std::size_t max_degree) {
    const AlgebraPtr& lam = x.algebra();
    const AlgebraPtr& lop = u.algebra();
    if (lop->dim() != lam->dim() || lop->generators().size() != lam->generators().size())
        throw UsageError("tor_dims: first argument must live over the structural opposite");
    std::vector<std::size_t> out(max_degree + 1, 0);
    if (u.dim() == 0 || x.dim() == 0) return out;

    Field f = lam->field();
    std::size_t d = lam->dim(), dx = x.dim();
    ResolutionPtr res = minimal_resolution(u, max_degree + 1);
    std::size_t L = res->length();
    std::size_t top_term = std::min(L, max_degree + 1);

    // T_i = P_i (x)_Lambda x as a k-space: quotient of P_i (x)_k x by the
    // relations (p.b (x) v - p (x) b.v) over the algebra basis.
    std::vector<Mat> proj;   // quotient projections
    std::vector<std::size_t> tdim;
    std::vector<Mat> xacts;
    for (std::size_t b = 0; b < d; ++b) xacts.push_back(x.action_of_basis(b));
    for (std::size_t i = 0; i <= top_term; ++i) {
        const Module& P = res->terms[i].mod;
        std::size_t dp = P.dim();
        if (dp == 0) {
            proj.push_back(Mat::zeros(f, 0, 0));
            tdim.push_back(0);
            continue;
        }
        Mat ip = Mat::identity(f, dp), ix = Mat::identity(f, dx);
        std::vector<Mat> rel;
        for (std::size_t b = 0; b < d; ++b)
            rel.push_back(P.action_of_basis(b).kron(ix) - ip.kron(xacts[b]));
        auto [pr, q] = Mat::hstack(rel).cokernel_projection();
        proj.push_back(std::move(pr));
        tdim.push_back(q);
    }

    // induced maps t_i: T_i -> T_{i-1}
    std::vector<Mat> t;
    for (std::size_t i = 1; i <= top_term; ++i) {
        Mat big = res->diffs[i - 1].kron(Mat::identity(f, dx));
        if (tdim[i] == 0 || tdim[i - 1] == 0) {
            t.push_back(Mat::zeros(f, tdim[i - 1], tdim[i]));
            continue;
        }
        auto gt = proj[i].transpose().solve(big.transpose() * proj[i - 1].transpose());
        if (!gt) throw Error("tor_dims: induced map failed");
        t.push_back(gt->transpose());
    }

    auto rank_of = [&](std::size_t i) -> std::size_t { // rank of t_i, i >= 1
        if (i == 0 || i > t.size()) return 0;
        return t[i - 1].rank();
    };
    for (std::size_t deg = 0; deg <= max_degree; ++deg) {
        if (deg > L) continue;
        std::size_t ker = (deg == 0) ? tdim[0] : tdim[deg] - rank_of(deg);
        std::size_t im = (deg < top_term) ? rank_of(deg + 1) : 0;
        out[deg] = ker - im;
    }
    return out;
}

std::size_t tor_dim(const Module& u, const Module& x, std::size_t degree) {
    return tor_dims(u, x, degree)[degree];
}

DimVerdict proj_dim(const Module& m, std::size_t cap) {
    ResolutionPtr res = minimal_resolution(m, cap);
    if (res->terminated) return {res->length(), true, cap};
    return {0, false, cap};
}

DimVerdict inj_dim(const Module& m, std::size_t cap) {
    return proj_dim(dual_module(m), cap);
}

DimVerdict global_dim(const AlgebraPtr& alg, std::size_t cap) {
    DimVerdict best{0, true, cap};
    for (std::size_t v = 0; v < alg->num_idempotents(); ++v) {
        DimVerdict d = proj_dim(simple_module(alg, v), cap);
        if (!d.finite) return {0, false, cap};
        best.value = std::max(best.value, d.value);
    }
    return best;
}

GorensteinCert is_gorenstein(const AlgebraPtr& alg, std::size_t cap) {
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(alg.get());
        if (it != cache.end()) {
            if (it->second.gorenstein) return *it->second.gorenstein;
            if (it->second.gorenstein_unknown_cap >= cap)
                return GorensteinCert{false, {0, false, cap}, {0, false, cap}};
        }
    }
    // idim of the left regular module = pd of its dual over the opposite;
    // idim of the right regular module = pd of D(right regular) over alg.
    DimVerdict left = proj_dim(dual_module(regular_module(alg)), cap);
    DimVerdict right = proj_dim(left_dual_of_regular(alg), cap);
    GorensteinCert cert{left.finite && right.finite, left, right};
    std::unique_lock lock(cache_mutex);
    auto& e = entry_locked(alg);
    if (cert.certified)
        e.gorenstein = std::make_shared<GorensteinCert>(cert);
    else
        e.gorenstein_unknown_cap = std::max(e.gorenstein_unknown_cap, cap);
    return cert;
}

bool is_self_injective(const AlgebraPtr& alg) {
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(alg.get());
        if (it != cache.end() && it->second.selfinj) return *it->second.selfinj;
    }
    bool v = is_projective(left_dual_of_regular(alg));
    std::unique_lock lock(cache_mutex);
    entry_locked(alg).selfinj = std::make_shared<bool>(v);
    return v;
}

} // namespace gproj
