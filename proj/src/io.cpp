#include "gproj/io.hpp"

#include <fstream>

namespace gproj {

namespace {

ojson require(const ojson& j, const char* key) {
    if (!j.contains(key))
        throw ParseError("missing field '" + std::string(key) + "'");
    return j.at(key);
}

} // namespace

PathPresentation presentation_from_json(const ojson& j) {
    PathPresentation p;
    p.field = Field::parse(require(j, "field").get<std::string>());
    p.quiver.vertex_count = require(j, "vertices").get<std::size_t>();
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows"))
            p.quiver.arrows.push_back({require(a, "id").get<std::string>(),
                                       require(a, "from").get<std::size_t>(),
                                       require(a, "to").get<std::size_t>()});
    if (j.contains("relations"))
        for (const auto& rel : j.at("relations")) {
            Relation r;
            for (const auto& term : rel) {
                PathTerm t;
                t.coeff = require(term, "coeff").get<std::string>();
                for (const auto& id : require(term, "path"))
                    t.path.push_back(id.get<std::string>());
                r.push_back(std::move(t));
            }
            p.relations.push_back(std::move(r));
        }
    if (j.contains("length_cap")) p.length_cap = j.at("length_cap").get<std::size_t>();
    return p;
}

ojson presentation_to_json(const PathPresentation& p) {
    ojson j;
    j["field"] = p.field.str();
    j["vertices"] = p.quiver.vertex_count;
    j["arrows"] = ojson::array();
    for (const auto& a : p.quiver.arrows)
        j["arrows"].push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
    j["relations"] = ojson::array();
    for (const auto& rel : p.relations) {
        ojson r = ojson::array();
        for (const auto& t : rel) r.push_back({{"coeff", t.coeff}, {"path", t.path}});
        j["relations"].push_back(std::move(r));
    }
    if (p.length_cap != 64) j["length_cap"] = p.length_cap;
    return j;
}

PathPresentation load_presentation(const std::filesystem::path& file) {
    return presentation_from_json(parse_json_file(file));
}

void save_presentation(const std::filesystem::path& file, const PathPresentation& p) {
    write_text_file(file, canonical_dump(presentation_to_json(p)));
}

AlgebraPtr algebra_from_json(const ojson& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        std::filesystem::path ref = j.get<std::string>();
        if (ref.is_relative()) ref = base_dir / ref;
        return algebra_from_json(parse_json_file(ref), ref.parent_path());
    }
    if (j.is_object() && j.contains("tensor")) {
        const auto& parts = j.at("tensor");
        if (!parts.is_array() || parts.size() != 2)
            throw ParseError("algebra: \"tensor\" must hold exactly two references");
        return tensor(algebra_from_json(parts.at(0), base_dir),
                      algebra_from_json(parts.at(1), base_dir));
    }
    return from_presentation(presentation_from_json(j));
}

ojson algebra_to_json(const AlgebraPtr& alg) {
    if (alg->quiver_info())
        return presentation_to_json(alg->quiver_info()->presentation);
    if (alg->tensor_info()) {
        ojson j;
        j["tensor"] = ojson::array({algebra_to_json(alg->tensor_info()->left),
                                    algebra_to_json(alg->tensor_info()->right)});
        return j;
    }
    throw UsageError("algebra has no presentation to serialize");
}

Module module_from_json(const ojson& j, const std::filesystem::path& base_dir,
                        AlgebraPtr algebra) {
    if (!algebra) {
        if (!j.contains("algebra"))
            throw ParseError("module: no \"algebra\" field and no algebra supplied");
        algebra = algebra_from_json(j.at("algebra"), base_dir);
    }
    std::size_t dim = require(j, "dim").get<std::size_t>();
    const ojson& acts = require(j, "actions");
    Field f = algebra->field();
    std::vector<Mat> actions;
    for (const auto& g : algebra->generators()) {
        if (!acts.contains(g.name))
            throw ParseError("module: missing action for generator '" + g.name + "'");
        const ojson& rows = acts.at(g.name);
        if (rows.size() != dim)
            throw ParseError("module: action of '" + g.name + "' has wrong row count");
        std::vector<std::string> entries;
        for (const auto& row : rows) {
            if (row.size() != dim)
                throw ParseError("module: action of '" + g.name + "' has wrong column count");
            for (const auto& e : row) entries.push_back(e.get<std::string>());
        }
        actions.push_back(Mat::from_strings(f, dim, dim, entries));
    }
    Module m(algebra, dim, std::move(actions));
    validate_module(m);
    return m;
}

ojson module_to_json(const Module& m, bool inline_algebra) {
    ojson j;
    if (inline_algebra) j["algebra"] = algebra_to_json(m.algebra());
    j["dim"] = m.dim();
    ojson acts;
    const auto& gens = m.algebra()->generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        ojson rows = ojson::array();
        for (std::size_t i = 0; i < m.dim(); ++i) {
            ojson row = ojson::array();
            for (std::size_t k = 0; k < m.dim(); ++k)
                row.push_back(m.action(g).get(i, k).str());
            rows.push_back(std::move(row));
        }
        acts[gens[g].name] = std::move(rows);
    }
    j["actions"] = std::move(acts);
    return j;
}

Module load_module(const std::filesystem::path& file, AlgebraPtr algebra) {
    return module_from_json(parse_json_file(file), file.parent_path(), std::move(algebra));
}

void save_module(const std::filesystem::path& file, const Module& m) {
    write_text_file(file, canonical_dump(module_to_json(m, true)));
}

ojson algebra_description(const AlgebraPtr& alg) {
    ojson j;
    j["field"] = alg->field().str();
    j["dim"] = alg->dim();
    j["idempotents"] = alg->num_idempotents();
    j["radical_dim"] = alg->radical_basis().size();
    ojson gens = ojson::array();
    for (const auto& g : alg->generators()) gens.push_back(g.name);
    j["generators"] = std::move(gens);
    j["basis"] = alg->basis_labels();
    return j;
}

ojson verdict_to_json(const GpVerdict& v) {
    ojson j;
    j["criterion"] = v.criterion;
    j["outcome"] = outcome_str(v.outcome);
    j["witness"] = v.witness;
    j["bound"] = v.bound_used;
    return j;
}

GpVerdict verdict_from_json(const ojson& j) {
    GpVerdict v;
    v.criterion = require(j, "criterion").get<std::string>();
    std::string o = require(j, "outcome").get<std::string>();
    if (o == "yes")
        v.outcome = Outcome::yes;
    else if (o == "no")
        v.outcome = Outcome::no;
    else if (o == "unknown_at_bound")
        v.outcome = Outcome::unknown_at_bound;
    else
        throw ParseError("verdict: bad outcome '" + o + "'");
    v.witness = require(j, "witness").get<std::string>();
    v.bound_used = require(j, "bound").get<std::size_t>();
    return v;
}

std::string canonical_dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson parse_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open '" + file.string() + "'");
    try {
        return ojson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("parse error in '" + file.string() + "': " + e.what());
    }
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error("cannot write '" + file.string() + "'");
    out << text;
}

} // namespace gproj
