#include "gproj/module.hpp"

#include <algorithm>

#include "gproj/rng.hpp"

namespace gproj {

Module::Module(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions)
    : alg_(std::move(alg)), dim_(dim), actions_(std::move(actions)) {
    if (actions_.size() != alg_->generators().size())
        throw UsageError("module: one action per algebra generator required");
    for (const Mat& a : actions_)
        if (a.rows() != dim_ || a.cols() != dim_ || a.field() != alg_->field())
            throw UsageError("module: action matrix has wrong shape or field");
}

Mat Module::action_of_basis(std::size_t b) const {
    const auto& word = alg_->basis_word(b);
    Mat acc = actions_[word[0]];
    for (std::size_t k = 1; k < word.size(); ++k) acc = acc * actions_[word[k]];
    return acc;
}

Mat Module::action_of_elem(const Mat& elem) const {
    Mat out = Mat::zeros(alg_->field(), dim_, dim_);
    for (std::size_t b = 0; b < alg_->dim(); ++b) {
        Scalar c = elem.get(b, 0);
        if (c.is_zero()) continue;
        Mat t = action_of_basis(b);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Scalar v = t.get(i, j);
                if (!v.is_zero()) out.set(i, j, out.get(i, j) + c * v);
            }
    }
    return out;
}

Mat Module::action_of_idempotent(std::size_t i) const {
    return action_of_elem(alg_->idempotent_elem(i));
}

std::vector<Mat> Module::all_basis_actions() const {
    std::vector<Mat> out;
    out.reserve(alg_->dim());
    for (std::size_t b = 0; b < alg_->dim(); ++b) out.push_back(action_of_basis(b));
    return out;
}

bool Module::operator==(const Module& o) const {
    return alg_.get() == o.alg_.get() && dim_ == o.dim_ && actions_ == o.actions_;
}

std::uint64_t Module::hash64() const {
    std::uint64_t h = 0x9ae16a3b2f90404full;
    h ^= Rng::splitmix64(dim_);
    for (const Mat& a : actions_) h = Rng::splitmix64(h ^ a.hash64());
    return h;
}

void validate_module(const Module& m) {
    const BasedAlgebra& alg = *m.algebra();
    std::size_t d = alg.dim(), n = m.dim();
    std::vector<Mat> phi = m.all_basis_actions();

    Mat unit = Mat::zeros(alg.field(), n, n);
    for (std::size_t i = 0; i < alg.num_idempotents(); ++i)
        for (std::size_t b : alg.idempotents()[i]) unit = unit + phi[b];
    if (unit != Mat::identity(alg.field(), n))
        throw Error("module: idempotent actions do not sum to the identity");

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat want = phi[i] * phi[j];
            Mat got = Mat::zeros(alg.field(), n, n);
            for (std::size_t c = 0; c < d; ++c) {
                Scalar k = alg.mult_table().get(i * d + j, c);
                if (k.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = 0; s < n; ++s) {
                        Scalar v = phi[c].get(r, s);
                        if (!v.is_zero()) got.set(r, s, got.get(r, s) + k * v);
                    }
            }
            if (want != got)
                throw Error("module: actions violate the structure constants at (" +
                            alg.basis_labels()[i] + ", " + alg.basis_labels()[j] + ")");
        }

    for (std::size_t g = 0; g < alg.generators().size(); ++g) {
        Mat expect = Mat::zeros(alg.field(), n, n);
        const Mat& elem = alg.generators()[g].elem;
        for (std::size_t b = 0; b < d; ++b) {
            Scalar c = elem.get(b, 0);
            if (c.is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    Scalar v = phi[b].get(r, s);
                    if (!v.is_zero()) expect.set(r, s, expect.get(r, s) + c * v);
                }
        }
        if (expect != m.action(g))
            throw Error("module: generator action of '" + alg.generators()[g].name +
                        "' is inconsistent with the basis actions");
    }
}

bool is_module_hom(const Module& m, const Module& n, const Mat& f) {
    if (m.algebra().get() != n.algebra().get()) return false;
    if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
    for (std::size_t g = 0; g < m.actions().size(); ++g)
        if (f * m.action(g) != n.action(g) * f) return false;
    return true;
}

Module zero_module(const AlgebraPtr& alg) {
    std::vector<Mat> acts(alg->generators().size(), Mat::zeros(alg->field(), 0, 0));
    return Module(alg, 0, std::move(acts));
}

Module regular_module(const AlgebraPtr& alg) {
    std::vector<Mat> acts;
    for (const auto& g : alg->generators()) acts.push_back(alg->left_mult_matrix(g.elem));
    return Module(alg, alg->dim(), std::move(acts));
}

Module direct_sum(const Module& a, const Module& b) {
    if (a.algebra().get() != b.algebra().get()) throw UsageError("direct_sum: algebra mismatch");
    std::size_t n = a.dim() + b.dim();
    std::vector<Mat> acts;
    for (std::size_t g = 0; g < a.actions().size(); ++g) {
        Mat m = Mat::zeros(a.algebra()->field(), n, n);
        m.set_block(0, 0, a.action(g));
        m.set_block(a.dim(), a.dim(), b.action(g));
        acts.push_back(std::move(m));
    }
    return Module(a.algebra(), n, std::move(acts));
}

std::vector<Mat> hom_basis_mats(const Module& m, const Module& n) {
    if (m.algebra().get() != n.algebra().get())
        throw UsageError("hom_basis: modules over different algebras");
    Field f = m.algebra()->field();
    std::size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return {};
    // F * act_m(g) - act_n(g) * F = 0 vectorized over columns:
    // (act_m(g)^T kron I - I kron act_n(g)) vec(F) = 0.
    std::vector<Mat> blocks;
    Mat im = Mat::identity(f, dm), in = Mat::identity(f, dn);
    for (std::size_t g = 0; g < m.actions().size(); ++g)
        blocks.push_back(m.action(g).transpose().kron(in) - im.kron(n.action(g)));
    Mat sys = Mat::vstack(blocks);
    Mat ker = sys.kernel_basis();
    std::vector<Mat> out;
    for (std::size_t j = 0; j < ker.cols(); ++j)
        out.push_back(unvec_cols(ker.col(j), dn, dm));
    return out;
}

std::vector<ModuleHom> hom_basis(const Module& m, const Module& n) {
    std::vector<ModuleHom> out;
    for (Mat& h : hom_basis_mats(m, n)) out.push_back({m, n, std::move(h)});
    return out;
}

Module dual_module_to(const Module& m, const AlgebraPtr& target) {
    if (target->generators().size() != m.algebra()->generators().size() ||
        target->dim() != m.algebra()->dim())
        throw UsageError("dual_module_to: target is not a structural opposite");
    std::vector<Mat> acts;
    for (const Mat& a : m.actions()) acts.push_back(a.transpose());
    return Module(target, m.dim(), std::move(acts));
}

Module dual_module(const Module& m) { return dual_module_to(m, opposite(m.algebra())); }

namespace {

const BasedAlgebra::TensorInfo& tensor_info_of(const Module& x) {
    const auto& info = x.algebra()->tensor_info();
    if (!info) throw UsageError("module algebra is not a recorded tensor product");
    return *info;
}

} // namespace

Module restrict_to_left(const Module& x) {
    const auto& info = tensor_info_of(x);
    std::vector<Mat> acts(x.actions().begin(), x.actions().begin() + info.left_gen_count);
    return Module(info.left, x.dim(), std::move(acts));
}

Module restrict_to_right(const Module& x) {
    const auto& info = tensor_info_of(x);
    std::vector<Mat> acts(x.actions().begin() + info.left_gen_count, x.actions().end());
    return Module(info.right, x.dim(), std::move(acts));
}

SubQuot submodule_from_cols(const Module& m, const Mat& cols) {
    Mat basis = cols.col_space_basis();
    std::vector<Mat> acts;
    for (const Mat& a : m.actions()) {
        auto r = basis.solve(a * basis);
        if (!r) throw UsageError("submodule_from_cols: span is not action-invariant");
        acts.push_back(std::move(*r));
    }
    Module sub(m.algebra(), basis.cols(), std::move(acts));
    return {sub, {sub, m, basis}};
}

SubQuot quotient_by_cols(const Module& m, const Mat& span) {
    auto [proj, q] = span.cokernel_projection();
    std::vector<Mat> acts;
    for (const Mat& a : m.actions()) {
        auto gt = proj.transpose().solve(a.transpose() * proj.transpose());
        if (!gt) throw UsageError("quotient_by_cols: span is not action-invariant");
        acts.push_back(gt->transpose());
    }
    Module quot(m.algebra(), q, std::move(acts));
    return {quot, {m, quot, proj}};
}

namespace {

Mat radical_image(const Module& m) {
    const auto& rad = m.algebra()->radical_basis();
    if (rad.empty() || m.dim() == 0)
        return Mat::zeros(m.algebra()->field(), m.dim(), 0);
    std::vector<Mat> imgs;
    for (std::size_t r : rad) imgs.push_back(m.action_of_basis(r));
    return Mat::hstack(imgs).col_space_basis();
}

} // namespace

SubQuot radical_submodule(const Module& m) { return submodule_from_cols(m, radical_image(m)); }

SubQuot top_quotient(const Module& m) { return quotient_by_cols(m, radical_image(m)); }

Module rad_right_quotient(const Module& x) {
    const auto& info = tensor_info_of(x);
    const auto& radB = info.right->radical_basis();
    Mat span = Mat::zeros(x.algebra()->field(), x.dim(), 0);
    if (!radB.empty() && x.dim() > 0) {
        Mat unit_a = info.left->unit_elem();
        std::vector<Mat> imgs;
        for (std::size_t r : radB)
            imgs.push_back(x.action_of_elem(unit_a.kron(info.right->basis_elem(r))));
        span = Mat::hstack(imgs);
    }
    return quotient_by_cols(x, span).module;
}

Module outer_tensor(const AlgebraPtr& t, const Module& m, const Module& n) {
    const auto& info = t->tensor_info();
    if (!info) throw UsageError("outer_tensor: target algebra is not a tensor product");
    if (m.algebra().get() != info->left.get() || n.algebra().get() != info->right.get())
        throw UsageError("outer_tensor: factor modules do not match the tensor factors");
    Field f = t->field();
    Mat im = Mat::identity(f, m.dim()), in = Mat::identity(f, n.dim());
    std::vector<Mat> acts;
    for (std::size_t g = 0; g < info->left_gen_count; ++g)
        acts.push_back(m.action(g).kron(in));
    for (std::size_t g = 0; g < n.actions().size(); ++g)
        acts.push_back(im.kron(n.action(g)));
    return Module(t, m.dim() * n.dim(), std::move(acts));
}

Module tensor_with_right_module(const Module& p, const Module& x) {
    const auto& info = tensor_info_of(x);
    const AlgebraPtr& b = info.right;
    if (p.algebra()->dim() != b->dim() ||
        p.algebra()->generators().size() != b->generators().size())
        throw UsageError("tensor_with_right_module: p must live over the opposite of "
                         "the right tensor factor");
    Field f = x.algebra()->field();
    std::size_t dp = p.dim(), dx = x.dim(), db = b->dim();
    if (dp == 0 || dx == 0) return zero_module(info.left);

    Mat ip = Mat::identity(f, dp), ix = Mat::identity(f, dx);
    Mat unit_a = info.left->unit_elem();
    std::vector<Mat> rel;
    for (std::size_t bb = 0; bb < db; ++bb) {
        Mat rb = p.action_of_basis(bb); // right action of b on p, via opposite words
        Mat mb = x.action_of_elem(unit_a.kron(b->basis_elem(bb)));
        rel.push_back(rb.kron(ix) - ip.kron(mb));
    }
    Mat span = Mat::hstack(rel);
    auto [proj, q] = span.cokernel_projection();

    std::vector<Mat> acts;
    for (std::size_t g = 0; g < info.left_gen_count; ++g) {
        Mat n = ip.kron(x.action(g));
        auto gt = proj.transpose().solve(n.transpose() * proj.transpose());
        if (!gt) throw Error("tensor_with_right_module: induced action failed");
        acts.push_back(gt->transpose());
    }
    return Module(info.left, q, std::move(acts));
}

Module tensor_over_right(const Module& u, const Module& x) {
    const auto& info = tensor_info_of(x);
    if (u.algebra().get() != info.right.get())
        throw UsageError("tensor_over_right: u must live over the right tensor factor");
    return tensor_with_right_module(dual_module(u), x);
}

HomDual hom_dual(const Module& x, const Module& w,
                 const std::vector<Mat>& w_right_actions) {
    const AlgebraPtr& alg = x.algebra();
    if (w.algebra().get() != alg.get() || w_right_actions.size() != alg->generators().size())
        throw UsageError("hom_dual: bimodule must live over the same algebra");
    AlgebraPtr op = opposite(alg);
    std::vector<Mat> homs = hom_basis_mats(x, w);
    std::size_t s = homs.size();
    Field f = alg->field();
    if (s == 0) return {zero_module(op), {}};

    std::vector<Mat> vecs;
    for (const Mat& h : homs) vecs.push_back(vec_cols(h));
    Mat span = Mat::hstack(vecs);

    std::vector<Mat> acts;
    for (std::size_t g = 0; g < alg->generators().size(); ++g) {
        Mat coords = Mat::zeros(f, s, s);
        for (std::size_t i = 0; i < s; ++i) {
            auto c = span.solve(vec_cols(w_right_actions[g] * homs[i]));
            if (!c) throw Error("hom_dual: right action left the hom space");
            coords.set_block(0, i, *c);
        }
        acts.push_back(std::move(coords));
    }
    return {Module(op, s, std::move(acts)), std::move(homs)};
}

namespace {

HomDual lambda_dual_data(const Module& m) {
    const AlgebraPtr& alg = m.algebra();
    std::vector<Mat> right;
    for (const auto& g : alg->generators()) right.push_back(alg->right_mult_matrix(g.elem));
    return hom_dual(m, regular_module(alg), right);
}

} // namespace

Module lambda_dual(const Module& m) { return lambda_dual_data(m).module; }

bool evaluation_iso_check(const Module& m) {
    if (m.dim() == 0) return true;
    HomDual star = lambda_dual_data(m);
    HomDual dstar = lambda_dual_data(star.module);
    std::size_t s1 = star.homs.size(), s2 = dstar.homs.size();
    if (s2 != m.dim()) return false;
    if (s1 == 0) return false; // m nonzero with m* = 0: ev cannot be injective
    Field f = m.algebra()->field();

    std::vector<Mat> vecs;
    for (const Mat& h : dstar.homs) vecs.push_back(vec_cols(h));
    Mat span = Mat::hstack(vecs);

    Mat ev = Mat::zeros(f, s2, m.dim());
    for (std::size_t t = 0; t < m.dim(); ++t) {
        // ev(x_t): m* -> regular(op), F_i |-> F_i(x_t)
        Mat phi = Mat::zeros(f, m.algebra()->dim(), s1);
        for (std::size_t i = 0; i < s1; ++i) phi.set_block(0, i, star.homs[i].col(t));
        auto c = span.solve(vec_cols(phi));
        if (!c) throw Error("evaluation_iso_check: value is outside the double-dual hom space");
        ev.set_block(0, t, *c);
    }
    return ev.rank() == m.dim();
}

std::optional<Mat> find_isomorphism(const Module& m, const Module& n) {
    if (m.algebra().get() != n.algebra().get()) return std::nullopt;
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Mat::zeros(m.algebra()->field(), 0, 0);
    std::vector<Mat> homs = hom_basis_mats(m, n);
    if (homs.empty()) return std::nullopt;
    Field f = m.algebra()->field();

    auto combine = [&](const std::vector<long>& coeff) {
        Mat acc = Mat::zeros(f, n.dim(), m.dim());
        for (std::size_t i = 0; i < homs.size(); ++i)
            if (coeff[i] != 0) acc = acc + homs[i].scaled_by_int(coeff[i]);
        return acc;
    };

    for (const Mat& h : homs)
        if (h.rank() == m.dim()) return h;

    // Seeded random combinations; deterministic for a given input pair.
    Rng rng(m.hash64() ^ Rng::splitmix64(n.hash64()));
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<long> coeff;
        for (std::size_t i = 0; i < homs.size(); ++i) {
            long c = f.is_fp() ? static_cast<long>(rng.below(f.prime())) : rng.range(-5, 5);
            coeff.push_back(c);
        }
        Mat cand = combine(coeff);
        if (cand.rank() == m.dim()) return cand;
    }

    // Exhaustive small-support fallback: pairs and triples with small weights.
    static const long kW[] = {1, -1, 2, -2};
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = i + 1; j < homs.size(); ++j)
            for (long wi : kW)
                for (long wj : kW) {
                    std::vector<long> coeff(homs.size(), 0);
                    coeff[i] = wi;
                    coeff[j] = wj;
                    Mat cand = combine(coeff);
                    if (cand.rank() == m.dim()) return cand;
                }
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = i + 1; j < homs.size(); ++j)
            for (std::size_t k = j + 1; k < homs.size(); ++k) {
                std::vector<long> coeff(homs.size(), 0);
                coeff[i] = coeff[j] = coeff[k] = 1;
                Mat cand = combine(coeff);
                if (cand.rank() == m.dim()) return cand;
            }
    return std::nullopt;
}

bool is_isomorphic(const Module& m, const Module& n) {
    return find_isomorphism(m, n).has_value();
}

ProjSum projective_sum(const AlgebraPtr& alg, std::vector<std::size_t> vertices) {
    Field f = alg->field();
    std::vector<std::size_t> offsets, unit_pos;
    std::vector<std::vector<std::size_t>> alg_basis;
    std::size_t total = 0;
    for (std::size_t v : vertices) {
        if (v >= alg->num_idempotents()) throw UsageError("projective_sum: bad vertex");
        std::vector<std::size_t> bs;
        for (std::size_t b = 0; b < alg->dim(); ++b)
            if (alg->src(b) == v) bs.push_back(b);
        offsets.push_back(total);
        // position of e_v inside the summand (idempotents are singletons here)
        std::size_t ev = alg->idempotents()[v][0];
        std::size_t pos = static_cast<std::size_t>(
            std::find(bs.begin(), bs.end(), ev) - bs.begin());
        unit_pos.push_back(total + pos);
        total += bs.size();
        alg_basis.push_back(std::move(bs));
    }
    std::vector<Mat> acts;
    for (const auto& g : alg->generators()) {
        Mat L = alg->left_mult_matrix(g.elem);
        Mat a = Mat::zeros(f, total, total);
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            Mat blockk = L.select_rows(alg_basis[k]).select_cols(alg_basis[k]);
            a.set_block(offsets[k], offsets[k], blockk);
        }
        acts.push_back(std::move(a));
    }
    Module mod(alg, total, std::move(acts));
    return ProjSum{alg, std::move(vertices), std::move(offsets), std::move(alg_basis),
                   std::move(unit_pos), std::move(mod)};
}

HomFromProj hom_from_projective(const ProjSum& P, const Module& n) {
    HomFromProj out;
    out.unit_pos = P.unit_pos;
    Field f = P.alg->field();
    std::size_t dn = n.dim();
    std::vector<Mat> basis_actions;
    basis_actions.reserve(P.alg->dim());
    for (std::size_t b = 0; b < P.alg->dim(); ++b)
        basis_actions.push_back(n.action_of_basis(b));
    for (std::size_t k = 0; k < P.vertices.size(); ++k) {
        std::size_t v = P.vertices[k];
        Mat comp = n.action_of_idempotent(v).col_space_basis(); // basis of e_v * n
        out.offsets.push_back(out.space_dim);
        out.space_dim += comp.cols();
        for (std::size_t j = 0; j < comp.cols(); ++j) {
            Mat w = comp.col(j);
            Mat hom = Mat::zeros(f, dn, P.dim());
            for (std::size_t t = 0; t < P.alg_basis[k].size(); ++t) {
                Mat img = basis_actions[P.alg_basis[k][t]] * w;
                hom.set_block(0, P.offsets[k] + t, img);
            }
            out.basis.push_back(std::move(hom));
        }
        out.comp_basis.push_back(std::move(comp));
    }
    return out;
}

Mat HomFromProj::coords_of(const Mat& hom) const {
    Field f = hom.field();
    Mat out = Mat::zeros(f, space_dim, 1);
    for (std::size_t k = 0; k < comp_basis.size(); ++k) {
        if (comp_basis[k].cols() == 0) continue;
        Mat value = hom.col(unit_pos[k]); // determines the summand component
        auto c = comp_basis[k].solve(value);
        if (!c) throw Error("coords_of: hom value escapes e_v * n");
        out.set_block(offsets[k], 0, *c);
    }
    return out;
}

Mat restrict_map(const Mat& cols_src, const Mat& cols_tgt, const Mat& f) {
    auto r = cols_tgt.solve(f * cols_src);
    if (!r) throw UsageError("restrict_map: image not contained in target span");
    return *r;
}

} // namespace gproj
