#include "gproj/harness.hpp"

#include <algorithm>
#include <functional>

namespace gproj {

const std::vector<std::string> kTheoremNames = {
    "thm34",  "prop42",  "cor35",        "lemma22",      "lemma32",    "lemma51",
    "prop53", "lemma21_dims", "lemma31_dims", "gp2_closure", "gp3_duality"};

AlgebraPtr build_family(const std::string& token, Field field) {
    if (token == "kA2") return from_presentation(presentation_kA2(field));
    if (token == "kA3_with_relation")
        return from_presentation(presentation_kA3_zero_rel(field));
    if (token == "dual_numbers") return from_presentation(presentation_dual_numbers(field));
    if (token == "square_with_commutativity")
        return from_presentation(presentation_square_comm(field));
    if (token.rfind("Bn:", 0) == 0) {
        std::size_t n = std::stoul(token.substr(3));
        return make_Bn(n, field);
    }
    if (token.rfind("custom:", 0) == 0) {
        PathPresentation p = load_presentation(token.substr(7));
        if (p.field != field)
            throw UsageError("custom family file uses field " + p.field.str() +
                             " but the run requests " + field.str());
        return from_presentation(p);
    }
    throw UsageError("unknown algebra family '" + token + "'");
}

Module random_module(const AlgebraPtr& alg, std::size_t dim_cap, Rng& rng,
                     long coeff_lo, long coeff_hi) {
    std::size_t r = alg->num_idempotents();
    auto pick_sum = [&](std::size_t count_max) {
        std::vector<std::size_t> verts;
        std::size_t dim = 0;
        std::size_t want = rng.below(count_max + 1);
        for (std::size_t k = 0; k < want; ++k) {
            std::size_t v = rng.below(r);
            std::size_t dv = indecomposable_projective(alg, v).dim();
            if (dim + dv > dim_cap) continue;
            verts.push_back(v);
            dim += dv;
        }
        return verts;
    };
    ProjSum q0 = projective_sum(alg, pick_sum(3));
    ProjSum q1 = projective_sum(alg, pick_sum(2));
    Mat phi = random_hom(q1.mod, q0.mod, rng, coeff_lo, coeff_hi);
    return quotient_by_cols(q0.mod, phi).module;
}

Module random_gp_module(const AlgebraPtr& alg, std::size_t dim_cap, Rng& rng,
                        std::size_t bound, long coeff_lo, long coeff_hi) {
    for (int tries = 0; tries < 40; ++tries) {
        Module x = random_module(alg, dim_cap, rng, coeff_lo, coeff_hi);
        if (x.dim() == 0) continue;
        if (gp_direct(x, bound).is_yes()) return x;
    }
    // fallback: a nonzero projective always qualifies
    std::vector<std::size_t> verts{rng.below(alg->num_idempotents())};
    return projective_sum(alg, verts).mod;
}

Mat random_hom(const Module& from, const Module& to, Rng& rng,
               long coeff_lo, long coeff_hi) {
    std::vector<Mat> basis = hom_basis_mats(from, to);
    Mat acc = Mat::zeros(from.algebra()->field(), to.dim(), from.dim());
    for (const Mat& h : basis) {
        long c = rng.range(coeff_lo, coeff_hi);
        if (c != 0) acc = acc + h.scaled_by_int(c);
    }
    return acc;
}

Module random_extension(const Module& sub, const Module& quot, Rng& rng,
                        long coeff_lo, long coeff_hi) {
    auto [p, pi] = projective_cover(quot);
    Mat incl = pi.kernel_basis();
    SubQuot omega = submodule_from_cols(p.mod, incl);
    Mat psi = random_hom(omega.module, sub, rng, coeff_lo, coeff_hi);
    Module e0 = direct_sum(sub, p.mod);
    Mat span = Mat::zeros(e0.algebra()->field(), e0.dim(), omega.module.dim());
    span.set_block(0, 0, psi);
    span.set_block(sub.dim(), 0, -omega.map.matrix);
    return quotient_by_cols(e0, span).module;
}

namespace {

struct RunContext {
    const GenSpec& spec;
    AgreementReport& report;

    void hypothesis(const std::string& name, const std::string& value) {
        report.hypotheses.emplace_back(name, value);
    }

    void row(std::size_t index, const Module& replay,
             std::vector<std::pair<std::string, std::string>> verdicts, bool agree,
             bool inconclusive) {
        SampleRow r;
        r.index = index;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(replay.hash64()));
        r.module_hash = buf;
        r.verdicts = std::move(verdicts);
        r.agree = agree;
        r.inconclusive = inconclusive;
        if (inconclusive)
            ++report.inconclusive_count;
        else if (agree)
            ++report.agree_count;
        else {
            ++report.disagree_count;
            report.disagreements.emplace_back(index, module_to_json(replay, true));
        }
        report.rows.push_back(std::move(r));
    }
};

std::vector<std::string> default_families(const std::string& theorem) {
    if (theorem == "cor35" || theorem == "lemma51") return {"kA2", "Bn:2"};
    if (theorem == "prop53") return {"dual_numbers", "kA2", "Bn:2", "Bn:3"};
    if (theorem == "lemma22") return {"dual_numbers"};
    if (theorem == "gp2_closure" || theorem == "gp3_duality") return {"kA2", "dual_numbers"};
    return {"dual_numbers", "kA2"};
}

// Single algebra for the one-algebra checks: one token = that algebra,
// two tokens = their tensor product.
AlgebraPtr family_algebra(const std::vector<std::string>& fams, Field field) {
    if (fams.size() == 1) return build_family(fams[0], field);
    if (fams.size() == 2)
        return tensor(build_family(fams[0], field), build_family(fams[1], field));
    throw UsageError("expected one or two family tokens");
}

void require_certified(const AlgebraPtr& alg, std::size_t bound, const std::string& name,
                       RunContext& ctx) {
    GorensteinCert c = is_gorenstein(alg, bound);
    if (!c.certified)
        throw HypothesisError("hypothesis failure: no Gorenstein certificate for " + name +
                              " at cap " + std::to_string(bound));
    ctx.hypothesis(name + "_gorenstein",
                   "(" + c.left.str() + ", " + c.right.str() + ")");
}

std::string vstr(const GpVerdict& v) { return outcome_str(v.outcome); }

void run_tensor_agreement(RunContext& ctx, const std::string& theorem) {
    const GenSpec& s = ctx.spec;
    auto fams = s.families;
    AlgebraPtr a = build_family(fams.at(0), s.field);
    AlgebraPtr b = build_family(fams.at(1), s.field);
    AlgebraPtr t = tensor(a, b);

    if (theorem == "thm34") {
        require_certified(b, s.bound, "B", ctx);
        require_certified(a, s.bound, "A", ctx);
        require_certified(t, s.bound, "AxB", ctx);
    } else if (theorem == "prop42") {
        DimVerdict gd = global_dim(b, s.bound);
        if (!gd.finite)
            throw HypothesisError("hypothesis failure: gldim of B unknown at cap " +
                                  std::to_string(s.bound));
        ctx.hypothesis("B_gldim", gd.str());
        require_certified(a, s.bound, "A", ctx);
        require_certified(t, s.bound, "AxB", ctx);
    } else { // cor35
        if (!is_self_injective(b))
            throw HypothesisError("hypothesis failure: B is not self-injective");
        ctx.hypothesis("B_self_injective", "true");
        require_certified(a, s.bound, "A", ctx);
        require_certified(t, s.bound, "AxB", ctx);
    }

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        Module x = random_module(t, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
        std::vector<GpVerdict> vs;
        vs.push_back(gp_direct(x, s.bound));
        if (theorem == "thm34") {
            vs.push_back(gp_thm2(x, s.bound));
            vs.push_back(gp_thm3(x, s.bound));
        } else if (theorem == "prop42") {
            vs.push_back(gp_propB(x, s.bound));
            vs.push_back(gp_quiver(x, s.bound));
        } else {
            vs.push_back(gp_selfinj(x, s.bound));
        }
        bool incon = false, agree = true;
        std::vector<std::pair<std::string, std::string>> verd;
        for (const auto& v : vs) {
            incon = incon || v.is_unknown();
            agree = agree && v.outcome == vs[0].outcome;
            verd.emplace_back(v.criterion, vstr(v));
        }
        ctx.row(i, x, std::move(verd), agree, incon);
    }
}

void run_dual_exactness(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    AlgebraPtr alg = family_algebra(s.families, s.field);
    require_certified(alg, s.bound, "algebra", ctx);

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        std::size_t maps = 1 + rng.below(2); // two- or three-term sequences
        ModuleSeq seq;
        for (std::size_t k = 0; k <= maps; ++k)
            seq.mods.push_back(random_gp_module(alg, s.dim_cap, rng, s.bound,
                                                s.coeff_lo, s.coeff_hi));
        for (std::size_t k = 0; k < maps; ++k)
            seq.maps.push_back(random_hom(seq.mods[k], seq.mods[k + 1], rng,
                                          s.coeff_lo, s.coeff_hi));
        bool ok = dual_exactness_check(seq, s.bound);
        ctx.row(i, seq.mods[0], {{"equivalence", ok ? "agree" : "disagree"}}, ok, false);
    }
}

void run_hom_tensor_equiv(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    AlgebraPtr a = build_family(s.families.at(0), s.field);
    AlgebraPtr b = build_family(s.families.at(1), s.field);
    AlgebraPtr t = tensor(a, b);
    require_certified(a, s.bound, "A", ctx);
    require_certified(b, s.bound, "B", ctx);

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        Module u = zero_module(b);
        Module x = zero_module(t);
        bool found = false;
        for (int tries = 0; tries < 60 && !found; ++tries) {
            u = random_module(b, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
            x = random_module(t, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
            if (u.dim() == 0) continue;
            if (!inj_dim(u, s.bound).finite) continue;
            if (!gp_direct(restrict_to_left(x), s.bound).is_yes()) continue;
            found = true;
        }
        if (!found)
            throw HypothesisError("hypothesis failure: could not sample admissible (u, x)");
        bool ok = hom_tensor_equiv_check(u, x, s.bound);
        ctx.row(i, x, {{"equivalence", ok ? "agree" : "disagree"}}, ok, false);
    }
}

void run_object_equiv(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    AlgebraPtr a = build_family(s.families.at(0), s.field);
    AlgebraPtr bn = build_family(s.families.at(1), s.field);
    AlgebraPtr t = tensor(a, bn);
    DimVerdict gd = global_dim(a, s.bound);
    if (!gd.finite)
        throw HypothesisError("hypothesis failure: gldim of A unknown at cap " +
                              std::to_string(s.bound));
    ctx.hypothesis("A_gldim", gd.str());
    require_certified(t, s.bound, "AxBn", ctx);

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        Module x = random_module(t, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
        bool ok = object_equiv_check(x, s.bound);
        ctx.row(i, x, {{"equivalence", ok ? "agree" : "disagree"}}, ok, false);
    }
}

void run_bimodule(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    for (std::size_t i = 0; i < s.families.size(); ++i) {
        AlgebraPtr a = build_family(s.families[i], s.field);
        BimoduleGpReport rep = bimodule_gp_check(a, s.bound);
        ctx.hypothesis(s.families[i] + "_gorenstein", "certified");
        std::vector<std::pair<std::string, std::string>> verd{
            {"gp_over_env", vstr(rep.gp_over_env)},
            {"self_injective", rep.selfinj ? "true" : "false"}};
        Module replay = regular_module(a);
        ctx.row(i, replay, std::move(verd), rep.agree, rep.gp_over_env.is_unknown());
    }
}

void run_adjunction_dims(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    AlgebraPtr a = build_family(s.families.at(0), s.field);
    AlgebraPtr b = build_family(s.families.at(1), s.field);
    AlgebraPtr t = tensor(a, b);
    ctx.hypothesis("degrees", "0.." + std::to_string(s.max_degree));

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        Module m = random_module(a, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
        Module x = random_module(t, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
        std::size_t vertex = rng.below(b->num_idempotents());
        bool ok = adjunction_dims_check(m, vertex, x, s.max_degree);
        ctx.row(i, x, {{"dimension_identity", ok ? "agree" : "disagree"}}, ok, false);
    }
}

void run_dual_transfer_dims(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    AlgebraPtr a = build_family(s.families.at(0), s.field);
    AlgebraPtr b = build_family(s.families.at(1), s.field);
    AlgebraPtr t = tensor(a, b);
    require_certified(t, s.bound, "AxB", ctx);
    std::size_t hyp_depth = is_gorenstein(t, s.bound).bound() + s.max_degree;

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        Module u = zero_module(b);
        Module x = zero_module(t);
        bool found = false;
        for (int tries = 0; tries < 60 && !found; ++tries) {
            u = random_module(b, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
            x = random_module(t, s.dim_cap, rng, s.coeff_lo, s.coeff_hi);
            if (u.dim() == 0 || x.dim() == 0) continue;
            try {
                bool ok = dual_transfer_dims_check(u, x, s.max_degree, hyp_depth);
                ctx.row(i, x, {{"dimension_identity", ok ? "agree" : "disagree"}}, ok, false);
                found = true;
            } catch (const HypothesisError&) {
                continue; // resample until the vanishing hypothesis holds
            }
        }
        if (!found)
            throw HypothesisError("hypothesis failure: could not sample an x with the "
                                  "required Ext vanishing");
    }
}

void run_gp2_closure(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    AlgebraPtr alg = family_algebra(s.families, s.field);
    require_certified(alg, s.bound, "algebra", ctx);

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        Module c = random_gp_module(alg, s.dim_cap, rng, s.bound, s.coeff_lo, s.coeff_hi);
        Module g = random_gp_module(alg, s.dim_cap, rng, s.bound, s.coeff_lo, s.coeff_hi);

        // kernel of an epimorphism between certified modules
        Module e = direct_sum(c, g);
        Mat f = Mat::zeros(alg->field(), c.dim(), e.dim());
        f.set_block(0, 0, random_hom(c, c, rng, s.coeff_lo, s.coeff_hi));
        f.set_block(0, c.dim(), random_hom(g, c, rng, s.coeff_lo, s.coeff_hi));
        if (f.rank() != c.dim())
            f.set_block(0, 0, Mat::identity(alg->field(), c.dim()));
        Module kernel = submodule_from_cols(e, f.kernel_basis()).module;
        bool kernel_ok = gp_direct(kernel, s.bound).is_yes();

        // extension of c by g
        Module ext = random_extension(g, c, rng, s.coeff_lo, s.coeff_hi);
        bool ext_ok = gp_direct(ext, s.bound).is_yes();

        ctx.row(i, e,
                {{"kernel_of_epi", kernel_ok ? "yes" : "no"},
                 {"extension", ext_ok ? "yes" : "no"}},
                kernel_ok && ext_ok, false);
    }
}

void run_gp3_duality(RunContext& ctx) {
    const GenSpec& s = ctx.spec;
    AlgebraPtr alg = family_algebra(s.families, s.field);
    require_certified(alg, s.bound, "algebra", ctx);

    for (std::size_t i = 0; i < s.samples; ++i) {
        Rng rng = Rng::stream(s.seed, i);
        Module x = random_gp_module(alg, s.dim_cap, rng, s.bound, s.coeff_lo, s.coeff_hi);
        Module xstar = lambda_dual(x);
        bool dual_gp = gp_direct(xstar, s.bound).is_yes();
        // reflexivity: the double dual recovers the module
        bool reflexive = lambda_dual(xstar).dim() == x.dim() && evaluation_iso_check(x);
        ctx.row(i, x,
                {{"dual_gp", dual_gp ? "yes" : "no"},
                 {"double_dual_iso", reflexive ? "yes" : "no"}},
                dual_gp && reflexive, false);
    }
}

} // namespace

AgreementReport verify_theorem(const GenSpec& spec_in) {
    GenSpec spec = spec_in;
    if (spec.families.empty()) spec.families = default_families(spec.theorem);
    AgreementReport report;
    report.spec = spec;
    report.prng = Rng::kName;
    RunContext ctx{spec, report};

    const std::string& t = spec.theorem;
    if (t == "thm34" || t == "prop42" || t == "cor35")
        run_tensor_agreement(ctx, t);
    else if (t == "lemma22")
        run_dual_exactness(ctx);
    else if (t == "lemma32")
        run_hom_tensor_equiv(ctx);
    else if (t == "lemma51")
        run_object_equiv(ctx);
    else if (t == "prop53")
        run_bimodule(ctx);
    else if (t == "lemma21_dims")
        run_adjunction_dims(ctx);
    else if (t == "lemma31_dims")
        run_dual_transfer_dims(ctx);
    else if (t == "gp2_closure")
        run_gp2_closure(ctx);
    else if (t == "gp3_duality")
        run_gp3_duality(ctx);
    else
        throw UsageError("unknown theorem '" + t + "'");
    return report;
}

ojson report_to_json(const AgreementReport& r) {
    ojson j;
    j["tool"] = "gproj";
    j["theorem"] = r.spec.theorem;
    j["field"] = r.spec.field.str();
    j["families"] = r.spec.families;
    j["prng"] = r.prng;
    j["seed"] = r.spec.seed;
    j["samples"] = r.spec.samples;
    j["dim_cap"] = r.spec.dim_cap;
    j["bound"] = r.spec.bound;
    j["max_degree"] = r.spec.max_degree;
    j["coeff_range"] = ojson::array({r.spec.coeff_lo, r.spec.coeff_hi});
    ojson hyp;
    for (const auto& [k, v] : r.hypotheses) hyp[k] = v;
    j["hypotheses"] = std::move(hyp);
    ojson rows = ojson::array();
    for (const SampleRow& row : r.rows) {
        ojson rj;
        rj["sample"] = row.index;
        rj["module"] = row.module_hash;
        ojson verd;
        for (const auto& [k, v] : row.verdicts) verd[k] = v;
        rj["verdicts"] = std::move(verd);
        rj["agree"] = row.agree;
        rj["inconclusive"] = row.inconclusive;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    j["totals"] = {{"agree", r.agree_count},
                   {"disagree", r.disagree_count},
                   {"inconclusive", r.inconclusive_count}};
    ojson dis = ojson::array();
    for (const auto& [idx, mod] : r.disagreements)
        dis.push_back({{"sample", idx}, {"module", mod}});
    j["disagreements"] = std::move(dis);
    return j;
}

AgreementReport report_from_json(const ojson& j) {
    AgreementReport r;
    r.spec.theorem = j.at("theorem").get<std::string>();
    r.spec.field = Field::parse(j.at("field").get<std::string>());
    r.spec.families = j.at("families").get<std::vector<std::string>>();
    r.prng = j.at("prng").get<std::string>();
    r.spec.seed = j.at("seed").get<std::uint64_t>();
    r.spec.samples = j.at("samples").get<std::size_t>();
    r.spec.dim_cap = j.at("dim_cap").get<std::size_t>();
    r.spec.bound = j.at("bound").get<std::size_t>();
    r.spec.max_degree = j.at("max_degree").get<std::size_t>();
    r.spec.coeff_lo = j.at("coeff_range").at(0).get<long>();
    r.spec.coeff_hi = j.at("coeff_range").at(1).get<long>();
    for (const auto& [k, v] : j.at("hypotheses").items())
        r.hypotheses.emplace_back(k, v.get<std::string>());
    for (const auto& rj : j.at("rows")) {
        SampleRow row;
        row.index = rj.at("sample").get<std::size_t>();
        row.module_hash = rj.at("module").get<std::string>();
        for (const auto& [k, v] : rj.at("verdicts").items())
            row.verdicts.emplace_back(k, v.get<std::string>());
        row.agree = rj.at("agree").get<bool>();
        row.inconclusive = rj.at("inconclusive").get<bool>();
        r.rows.push_back(std::move(row));
    }
    r.agree_count = j.at("totals").at("agree").get<std::size_t>();
    r.disagree_count = j.at("totals").at("disagree").get<std::size_t>();
    r.inconclusive_count = j.at("totals").at("inconclusive").get<std::size_t>();
    for (const auto& d : j.at("disagreements"))
        r.disagreements.emplace_back(d.at("sample").get<std::size_t>(), d.at("module"));
    return r;
}

} // namespace gproj
