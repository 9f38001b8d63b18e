#include <algorithm>
#include <map>
#include <set>

#include "algebra_builder.hpp"

// Path algebra quotients: enumerate paths degree by degree, span the ideal
// generated by the relations inside the enumerated window, and stop at the
// first length m0 at which every path reduces to zero (then rad^{m0} = 0 and
// the surviving path classes form the basis).

namespace gproj {

namespace {

constexpr std::size_t kMaxPaths = 100000;

struct PathRec {
    std::vector<std::uint32_t> arrows; // traversal order: arrows[0] first
    std::size_t src, tgt;
};

using SparseRow = std::map<std::size_t, Scalar>; // coordinate -> nonzero coeff

void row_add(SparseRow& r, std::size_t coord, const Scalar& c) {
    auto it = r.find(coord);
    if (it == r.end()) {
        if (!c.is_zero()) r.emplace(coord, c);
        return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
        r.erase(it);
    else
        it->second = s;
}

// Triangular row basis; pivots are the largest coordinates, and coordinates
// are assigned in order of increasing path length, so long paths get
// eliminated in favour of short ones.
class RowBasis {
public:
    bool reduces_to_zero(SparseRow r) const { return reduce(std::move(r)).empty(); }

    SparseRow reduce(SparseRow r) const {
        while (true) {
            const SparseRow* hit = nullptr;
            std::size_t coord = 0;
            Scalar coeff = Scalar(Field::rationals(), 0);
            for (auto it = r.rbegin(); it != r.rend(); ++it) {
                auto p = rows_.find(it->first);
                if (p != rows_.end()) {
                    hit = &p->second;
                    coord = it->first;
                    coeff = it->second;
                    break;
                }
            }
            if (!hit) return r;
            (void)coord;
            for (const auto& [c, v] : *hit) row_add(r, c, -(coeff * v));
        }
    }

    void insert(SparseRow r) {
        r = reduce(std::move(r));
        if (r.empty()) return;
        std::size_t pivot = r.rbegin()->first;
        Scalar inv = r.rbegin()->second.inverse();
        for (auto& [c, v] : r) v = v * inv;
        rows_.emplace(pivot, std::move(r));
    }

    bool is_pivot(std::size_t coord) const { return rows_.count(coord) != 0; }

private:
    std::map<std::size_t, SparseRow> rows_;
};

struct ParsedRelation {
    std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> terms;
    std::size_t src, tgt;
    std::size_t max_len;
};

} // namespace

PathPresentation presentation_trivial(Field f) {
    PathPresentation p;
    p.quiver.vertex_count = 1;
    p.field = f;
    return p;
}

PathPresentation presentation_kA2(Field f) {
    PathPresentation p;
    p.quiver.vertex_count = 2;
    p.quiver.arrows = {{"a", 0, 1}};
    p.field = f;
    return p;
}

PathPresentation presentation_kA3_zero_rel(Field f) {
    PathPresentation p;
    p.quiver.vertex_count = 3;
    p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    p.relations = {{{"1", {"a", "b"}}}};
    p.field = f;
    return p;
}

PathPresentation presentation_dual_numbers(Field f) {
    PathPresentation p;
    p.quiver.vertex_count = 1;
    p.quiver.arrows = {{"x", 0, 0}};
    p.relations = {{{"1", {"x", "x"}}}};
    p.field = f;
    return p;
}

PathPresentation presentation_Bn(std::size_t n, Field f) {
    PathPresentation p;
    p.quiver.vertex_count = n;
    for (std::size_t i = 0; i < n; ++i)
        p.quiver.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % n});
    for (std::size_t i = 0; i < n; ++i)
        p.relations.push_back(
            {{"1", {"a" + std::to_string(i), "a" + std::to_string((i + 1) % n)}}});
    p.field = f;
    return p;
}

PathPresentation presentation_square_comm(Field f) {
    PathPresentation p;
    p.quiver.vertex_count = 4;
    p.quiver.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
    p.relations = {{{"1", {"a", "c"}}, {"-1", {"b", "d"}}}};
    p.field = f;
    return p;
}

AlgebraPtr from_presentation(const PathPresentation& pres) {
    const Quiver& q = pres.quiver;
    Field f = pres.field;
    if (q.vertex_count == 0) throw ParseError("presentation: quiver has no vertices");

    std::map<std::string, std::uint32_t> arrow_index;
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& a = q.arrows[i];
        if (a.from >= q.vertex_count || a.to >= q.vertex_count)
            throw ParseError("presentation: arrow '" + a.id + "' has a bad endpoint");
        if (!arrow_index.emplace(a.id, static_cast<std::uint32_t>(i)).second)
            throw ParseError("presentation: duplicate arrow id '" + a.id + "'");
    }

    std::vector<ParsedRelation> rels;
    for (const Relation& rel : pres.relations) {
        ParsedRelation pr;
        pr.max_len = 0;
        bool first = true;
        for (const PathTerm& term : rel) {
            Scalar c = Scalar::parse(f, term.coeff);
            if (c.is_zero()) continue;
            if (term.path.size() < 2)
                throw ParseError("presentation: relation path of length " +
                                 std::to_string(term.path.size()) +
                                 " (admissible relations need length >= 2)");
            std::vector<std::uint32_t> arrows;
            for (const std::string& id : term.path) {
                auto it = arrow_index.find(id);
                if (it == arrow_index.end())
                    throw ParseError("presentation: unknown arrow id '" + id + "' in relation");
                arrows.push_back(it->second);
            }
            for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
                if (q.arrows[arrows[k]].to != q.arrows[arrows[k + 1]].from)
                    throw ParseError("presentation: arrows '" + term.path[k] + "' and '" +
                                     term.path[k + 1] + "' do not compose");
            std::size_t s = q.arrows[arrows.front()].from;
            std::size_t t = q.arrows[arrows.back()].to;
            if (first) {
                pr.src = s;
                pr.tgt = t;
                first = false;
            } else if (pr.src != s || pr.tgt != t) {
                throw ParseError("presentation: relation terms have mixed source/target");
            }
            pr.max_len = std::max(pr.max_len, arrows.size());
            pr.terms.emplace_back(std::move(c), std::move(arrows));
        }
        if (!pr.terms.empty()) rels.push_back(std::move(pr));
    }

    // Path enumeration with the ideal span, degree by degree.
    std::vector<PathRec> coords;
    std::map<std::vector<std::uint32_t>, std::size_t> index_of;
    std::vector<std::vector<std::size_t>> by_len;
    by_len.emplace_back();
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
        by_len[0].push_back(coords.size());
        coords.push_back({{}, v, v});
    }

    RowBasis ideal;
    std::size_t stop_len = 0;
    bool stopped = false;
    for (std::size_t m = 1; m <= pres.length_cap; ++m) {
        by_len.emplace_back();
        for (std::size_t pi : by_len[m - 1]) {
            const PathRec at = coords[pi];
            for (std::uint32_t ai = 0; ai < q.arrows.size(); ++ai) {
                if (q.arrows[ai].from != at.tgt) continue;
                PathRec np;
                np.arrows = at.arrows;
                np.arrows.push_back(ai);
                np.src = at.src;
                np.tgt = q.arrows[ai].to;
                by_len[m].push_back(coords.size());
                index_of.emplace(np.arrows, coords.size());
                coords.push_back(std::move(np));
                if (coords.size() > kMaxPaths)
                    throw ParseError("presentation: path count exceeds limit; "
                                     "quotient is not finite-dimensional");
            }
        }
        // Ideal elements u * r * v whose longest component has length m.
        for (const ParsedRelation& pr : rels) {
            if (pr.max_len > m) continue;
            std::size_t budget = m - pr.max_len;
            for (std::size_t lu = 0; lu <= budget; ++lu) {
                std::size_t lv = budget - lu;
                if (lu >= by_len.size() || lv >= by_len.size()) continue;
                for (std::size_t ui : by_len[lu]) {
                    if (coords[ui].src != pr.tgt) continue;
                    for (std::size_t vi : by_len[lv]) {
                        if (coords[vi].tgt != pr.src) continue;
                        SparseRow row;
                        for (const auto& [c, arrows] : pr.terms) {
                            std::vector<std::uint32_t> full = coords[vi].arrows;
                            full.insert(full.end(), arrows.begin(), arrows.end());
                            full.insert(full.end(), coords[ui].arrows.begin(),
                                        coords[ui].arrows.end());
                            row_add(row, index_of.at(full), c);
                        }
                        ideal.insert(std::move(row));
                    }
                }
            }
        }
        bool all_zero = true;
        for (std::size_t pi : by_len[m]) {
            SparseRow ind;
            ind.emplace(pi, Scalar(f, 1));
            if (!ideal.reduces_to_zero(std::move(ind))) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            stop_len = m;
            stopped = true;
            break;
        }
    }
    if (!stopped)
        throw ParseError("presentation: nonzero paths of length " +
                         std::to_string(pres.length_cap) +
                         " remain; relations are not admissible or the cap is too small");

    // Basis = non-pivot path classes of length < stop_len.
    std::vector<std::size_t> basis_coords;
    std::map<std::size_t, std::size_t> basis_pos;
    for (std::size_t len = 0; len < stop_len; ++len)
        for (std::size_t pi : by_len[len]) {
            if (ideal.is_pivot(pi)) continue;
            basis_pos[pi] = basis_coords.size();
            basis_coords.push_back(pi);
        }
    std::size_t dim = basis_coords.size();

    auto label_of = [&](const PathRec& p) {
        if (p.arrows.empty()) return "e" + std::to_string(p.src);
        std::string s;
        for (std::size_t k = 0; k < p.arrows.size(); ++k) {
            if (k) s += "*";
            s += q.arrows[p.arrows[k]].id;
        }
        return s;
    };
    std::vector<std::string> labels;
    for (std::size_t pi : basis_coords) labels.push_back(label_of(coords[pi]));

    Mat mult = Mat::zeros(f, dim * dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const PathRec& p = coords[basis_coords[i]];
            const PathRec& r = coords[basis_coords[j]];
            if (p.src != r.tgt) continue; // b_i * b_j applies b_j first
            if (p.arrows.size() + r.arrows.size() >= stop_len) continue;
            std::vector<std::uint32_t> cat = r.arrows;
            cat.insert(cat.end(), p.arrows.begin(), p.arrows.end());
            std::size_t coord =
                cat.empty() ? basis_coords[i] /* both trivial at same vertex */
                            : index_of.at(cat);
            SparseRow row;
            row.emplace(coord, Scalar(f, 1));
            for (const auto& [c, v] : ideal.reduce(std::move(row)))
                mult.set(i * dim + j, basis_pos.at(c), v);
        }

    std::vector<std::vector<std::size_t>> idem;
    for (std::size_t v = 0; v < q.vertex_count; ++v)
        idem.push_back({basis_pos.at(v)});

    std::vector<BasedAlgebra::Generator> gens;
    std::vector<std::size_t> vertex_gen, arrow_gen;
    auto indicator = [&](std::size_t pos) {
        Mat e = Mat::zeros(f, dim, 1);
        e.set(pos, 0, Scalar(f, 1));
        return e;
    };
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
        vertex_gen.push_back(gens.size());
        gens.push_back({"e" + std::to_string(v), indicator(basis_pos.at(v))});
    }
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        std::size_t coord = index_of.at({static_cast<std::uint32_t>(ai)});
        arrow_gen.push_back(gens.size());
        gens.push_back({q.arrows[ai].id, indicator(basis_pos.at(coord))});
    }

    std::vector<std::vector<std::uint32_t>> words(dim);
    std::vector<std::size_t> radical;
    for (std::size_t i = 0; i < dim; ++i) {
        const PathRec& p = coords[basis_coords[i]];
        if (p.arrows.empty()) {
            words[i] = {static_cast<std::uint32_t>(vertex_gen[p.src])};
        } else {
            for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
                words[i].push_back(static_cast<std::uint32_t>(arrow_gen[*it]));
            radical.push_back(i);
        }
    }

    auto out = AlgebraBuilder::fresh();
    AlgebraBuilder::fill(*out, f, dim, std::move(labels), std::move(mult), std::move(idem),
                         std::move(gens), std::move(words), std::move(radical));
    AlgebraBuilder::set_quiver(*out, {pres, vertex_gen, arrow_gen});
    AlgebraBuilder::finalize(*out);
    return out;
}

} // namespace gproj
