#include "algebra_builder.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace gproj {

std::optional<std::size_t> BasedAlgebra::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

Mat BasedAlgebra::basis_elem(std::size_t b) const {
    Mat v = Mat::zeros(field_, dim_, 1);
    v.set(b, 0, Scalar(field_, 1));
    return v;
}

Mat BasedAlgebra::idempotent_elem(std::size_t i) const {
    Mat v = Mat::zeros(field_, dim_, 1);
    Scalar one(field_, 1);
    for (std::size_t b : idem_[i]) v.set(b, 0, one);
    return v;
}

Mat BasedAlgebra::unit_elem() const {
    Mat v = Mat::zeros(field_, dim_, 1);
    Scalar one(field_, 1);
    for (const auto& s : idem_)
        for (std::size_t b : s) v.set(b, 0, one);
    return v;
}

Mat BasedAlgebra::mult_elems(const Mat& x, const Mat& y) const {
    return left_mult_matrix(x) * y;
}

Mat BasedAlgebra::left_mult_matrix(const Mat& elem) const {
    Mat out = Mat::zeros(field_, dim_, dim_);
    for (std::size_t b = 0; b < dim_; ++b) {
        Scalar c = elem.get(b, 0);
        if (c.is_zero()) continue;
        Mat term = lmul_[b];
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Scalar t = term.get(i, j);
                if (!t.is_zero()) out.set(i, j, out.get(i, j) + c * t);
            }
    }
    return out;
}

Mat BasedAlgebra::right_mult_matrix(const Mat& elem) const {
    Mat out = Mat::zeros(field_, dim_, dim_);
    for (std::size_t b = 0; b < dim_; ++b) {
        Scalar c = elem.get(b, 0);
        if (c.is_zero()) continue;
        Mat term = rmul_[b];
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Scalar t = term.get(i, j);
                if (!t.is_zero()) out.set(i, j, out.get(i, j) + c * t);
            }
    }
    return out;
}

std::size_t BasedAlgebra::pair_index(std::size_t a, std::size_t b) const {
    if (!tensor_) throw UsageError("pair_index: not a tensor-product algebra");
    return a * tensor_->right->dim() + b;
}

void BasedAlgebra::finalize() {
    if (mult_.rows() != dim_ * dim_ || mult_.cols() != dim_)
        throw Error("algebra: structure-constant table has wrong shape");
    if (labels_.size() != dim_ || words_.size() != dim_)
        throw Error("algebra: label/word bookkeeping has wrong size");

    // Left/right multiplication matrices of the basis elements.
    lmul_.clear();
    rmul_.clear();
    lmul_.reserve(dim_);
    rmul_.reserve(dim_);
    for (std::size_t b = 0; b < dim_; ++b) {
        Mat L = Mat::zeros(field_, dim_, dim_);
        Mat R = Mat::zeros(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t c = 0; c < dim_; ++c) {
                L.set(c, j, mult_.get(b * dim_ + j, c));
                R.set(c, j, mult_.get(j * dim_ + b, c));
            }
        lmul_.push_back(std::move(L));
        rmul_.push_back(std::move(R));
    }

    // Idempotents: orthogonal, and their sum acts as the identity.
    for (std::size_t i = 0; i < idem_.size(); ++i) {
        if (idem_[i].empty()) throw Error("algebra: empty idempotent");
        for (std::size_t j = 0; j < idem_.size(); ++j) {
            Mat prod = mult_elems(idempotent_elem(i), idempotent_elem(j));
            Mat expect = (i == j) ? idempotent_elem(i) : Mat::zeros(field_, dim_, 1);
            if (prod != expect) throw Error("algebra: idempotents not orthogonal");
        }
    }
    Mat u = unit_elem();
    if (left_mult_matrix(u) != Mat::identity(field_, dim_) ||
        right_mult_matrix(u) != Mat::identity(field_, dim_))
        throw Error("algebra: idempotents do not sum to the identity");

    // Associativity on basis elements: L_{b_i b_j} == L_i L_j.
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            Mat want = lmul_[i] * lmul_[j];
            Mat got = Mat::zeros(field_, dim_, dim_);
            for (std::size_t c = 0; c < dim_; ++c) {
                Scalar k = mult_.get(i * dim_ + j, c);
                if (k.is_zero()) continue;
                for (std::size_t r = 0; r < dim_; ++r)
                    for (std::size_t s = 0; s < dim_; ++s) {
                        Scalar t = lmul_[c].get(r, s);
                        if (!t.is_zero()) got.set(r, s, got.get(r, s) + k * t);
                    }
            }
            if (want != got)
                throw Error("algebra: multiplication not associative at basis pair (" +
                            labels_[i] + ", " + labels_[j] + ")");
        }

    // Every basis element sits in a unique e_i * Lambda * e_j.
    src_.assign(dim_, idem_.size());
    tgt_.assign(dim_, idem_.size());
    for (std::size_t b = 0; b < dim_; ++b) {
        Mat eb = basis_elem(b);
        for (std::size_t i = 0; i < idem_.size(); ++i) {
            Mat left = mult_elems(idempotent_elem(i), eb);
            Mat right = mult_elems(eb, idempotent_elem(i));
            if (left == eb) {
                if (tgt_[b] != idem_.size()) throw Error("algebra: ambiguous target idempotent");
                tgt_[b] = i;
            } else if (!left.is_zero()) {
                throw Error("algebra: basis element " + labels_[b] + " not idempotent-homogeneous");
            }
            if (right == eb) {
                if (src_[b] != idem_.size()) throw Error("algebra: ambiguous source idempotent");
                src_[b] = i;
            } else if (!right.is_zero()) {
                throw Error("algebra: basis element " + labels_[b] + " not idempotent-homogeneous");
            }
        }
        if (src_[b] == idem_.size() || tgt_[b] == idem_.size())
            throw Error("algebra: basis element " + labels_[b] + " has no source/target idempotent");
    }

    // Generator words reproduce the basis elements.
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (!names.insert(g.name).second)
            throw Error("algebra: duplicate generator name " + g.name);
        if (g.elem.rows() != dim_ || g.elem.cols() != 1 || g.elem.is_zero())
            throw Error("algebra: bad generator element " + g.name);
    }
    for (std::size_t b = 0; b < dim_; ++b) {
        if (words_[b].empty()) throw Error("algebra: empty word for basis element");
        Mat acc = gens_[words_[b][0]].elem;
        for (std::size_t k = 1; k < words_[b].size(); ++k)
            acc = mult_elems(acc, gens_[words_[b][k]].elem);
        if (acc != basis_elem(b))
            throw Error("algebra: word of basis element " + labels_[b] +
                        " does not reproduce it");
    }

    // Radical: a coordinate subset spanning a nilpotent two-sided ideal whose
    // complement is exactly the idempotent members (one-dimensional simples).
    std::vector<bool> is_rad(dim_, false);
    for (std::size_t r : radical_) {
        if (r >= dim_ || is_rad[r]) throw Error("algebra: bad radical basis");
        is_rad[r] = true;
    }
    std::vector<bool> is_idem_member(dim_, false);
    for (const auto& s : idem_)
        for (std::size_t b : s) is_idem_member[b] = true;
    for (std::size_t b = 0; b < dim_; ++b)
        if (is_rad[b] == is_idem_member[b])
            throw Error("algebra: radical complement must be exactly the idempotent members");
    for (std::size_t b = 0; b < dim_; ++b)
        for (std::size_t r : radical_) {
            for (std::size_t c = 0; c < dim_; ++c) {
                if (is_rad[c]) continue;
                if (!mult_.get(b * dim_ + r, c).is_zero() ||
                    !mult_.get(r * dim_ + b, c).is_zero())
                    throw Error("algebra: radical basis does not span an ideal");
            }
        }
    if (!radical_.empty()) {
        // Nilpotency: powers of the radical span must shrink to zero.
        std::vector<Mat> cols;
        for (std::size_t r : radical_) cols.push_back(basis_elem(r));
        Mat span = Mat::hstack(cols).col_space_basis();
        std::size_t steps = 0;
        while (span.cols() > 0) {
            if (++steps > dim_) throw Error("algebra: radical is not nilpotent");
            std::vector<Mat> next;
            for (std::size_t r : radical_) next.push_back(lmul_[r] * span);
            span = Mat::hstack(next).col_space_basis();
        }
    }
}

namespace {

std::mutex op_memo_mutex;
std::map<const BasedAlgebra*, std::pair<AlgebraPtr, AlgebraPtr>> op_memo;

} // namespace

AlgebraPtr opposite(const AlgebraPtr& a) {
    {
        std::lock_guard<std::mutex> lock(op_memo_mutex);
        auto it = op_memo.find(a.get());
        if (it != op_memo.end()) return it->second.second;
    }
    std::size_t d = a->dim();
    Mat mult = Mat::zeros(a->field(), d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t c = 0; c < d; ++c)
                mult.set(i * d + j, c, a->mult_table().get(j * d + i, c));
    std::vector<std::vector<std::uint32_t>> words;
    words.reserve(d);
    for (std::size_t b = 0; b < d; ++b) {
        auto w = a->basis_word(b);
        std::reverse(w.begin(), w.end());
        words.push_back(std::move(w));
    }
    auto out = AlgebraBuilder::fresh();
    AlgebraBuilder::fill(*out, a->field(), d, a->basis_labels(), std::move(mult),
                         a->idempotents(), a->generators(), std::move(words),
                         a->radical_basis());
    AlgebraBuilder::finalize(*out);
    AlgebraPtr result = out;
    std::lock_guard<std::mutex> lock(op_memo_mutex);
    op_memo.emplace(a.get(), std::make_pair(a, result));
    return op_memo[a.get()].second;
}

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->field() != b->field())
        throw UsageError("tensor: field mismatch (" + a->field().str() + " vs " +
                         b->field().str() + ")");
    Field f = a->field();
    std::size_t da = a->dim(), db = b->dim(), d = da * db;
    auto pidx = [&](std::size_t x, std::size_t y) { return x * db + y; };

    std::vector<std::string> labels(d);
    for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y)
            labels[pidx(x, y)] = a->basis_labels()[x] + "@" + b->basis_labels()[y];

    Mat mult = Mat::zeros(f, d * d, d);
    for (std::size_t x1 = 0; x1 < da; ++x1)
        for (std::size_t y1 = 0; y1 < db; ++y1)
            for (std::size_t x2 = 0; x2 < da; ++x2)
                for (std::size_t y2 = 0; y2 < db; ++y2) {
                    std::size_t row = pidx(x1, y1) * d + pidx(x2, y2);
                    for (std::size_t cx = 0; cx < da; ++cx) {
                        Scalar ca = a->mult_table().get(x1 * da + x2, cx);
                        if (ca.is_zero()) continue;
                        for (std::size_t cy = 0; cy < db; ++cy) {
                            Scalar cb = b->mult_table().get(y1 * db + y2, cy);
                            if (cb.is_zero()) continue;
                            mult.set(row, pidx(cx, cy), ca * cb);
                        }
                    }
                }

    std::vector<std::vector<std::size_t>> idem;
    for (const auto& si : a->idempotents())
        for (const auto& sj : b->idempotents()) {
            std::vector<std::size_t> s;
            for (std::size_t x : si)
                for (std::size_t y : sj) s.push_back(pidx(x, y));
            idem.push_back(std::move(s));
        }

    Mat unit_a = a->unit_elem(), unit_b = b->unit_elem();
    std::vector<BasedAlgebra::Generator> gens;
    for (const auto& g : a->generators())
        gens.push_back({"A." + g.name, g.elem.kron(unit_b)});
    for (const auto& g : b->generators())
        gens.push_back({"B." + g.name, unit_a.kron(g.elem)});
    std::size_t offset = a->generators().size();

    std::vector<std::vector<std::uint32_t>> words(d);
    for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y) {
            auto& w = words[pidx(x, y)];
            for (auto g : a->basis_word(x)) w.push_back(g);
            for (auto g : b->basis_word(y)) w.push_back(static_cast<std::uint32_t>(g + offset));
        }

    std::vector<bool> rad_a(da, false), rad_b(db, false);
    for (std::size_t r : a->radical_basis()) rad_a[r] = true;
    for (std::size_t r : b->radical_basis()) rad_b[r] = true;
    std::vector<std::size_t> radical;
    for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y)
            if (rad_a[x] || rad_b[y]) radical.push_back(pidx(x, y));

    auto out = AlgebraBuilder::fresh();
    AlgebraBuilder::fill(*out, f, d, std::move(labels), std::move(mult), std::move(idem),
                         std::move(gens), std::move(words), std::move(radical));
    AlgebraBuilder::set_tensor(*out, {a, b, a->generators().size()});
    AlgebraBuilder::finalize(*out);
    return out;
}

AlgebraPtr enveloping(const AlgebraPtr& a) { return tensor(a, opposite(a)); }

AlgebraPtr make_Bn(std::size_t n, Field field) {
    if (n < 1) throw UsageError("make_Bn: n must be >= 1");
    return from_presentation(presentation_Bn(n, field));
}

} // namespace gproj
