// gproj: exact Gorenstein-projectivity checks for modules over
// finite-dimensional quiver algebras and their tensor products.
//
// Exit codes: 0 success/agreement, 1 usage or parse error, 2 hypothesis
// failure, 3 disagreement (or inconclusive rows) in a verify run.

#include <iostream>

#include <CLI11.hpp>

#include "gproj/harness.hpp"
#include "gproj/version.hpp"

namespace {

using namespace gproj;

struct CommonOpts {
    std::string algebra_file;
    std::vector<std::string> tensor_files;
    std::string format = "human";
    std::string emit_algebra;
    std::size_t bound = 20;
};

void add_algebra_flags(CLI::App* cmd, CommonOpts& o) {
    auto* a = cmd->add_option("--algebra", o.algebra_file, "algebra presentation file");
    auto* t = cmd->add_option("--tensor", o.tensor_files,
                              "two presentation files A B; the run uses A (x) B")
                  ->expected(2);
    a->excludes(t);
    cmd->add_option("--format", o.format, "output format: human or structured")
        ->check(CLI::IsMember({"human", "structured"}));
    cmd->add_option("--emit-algebra", o.emit_algebra,
                    "write the constructed algebra's generator list to this file");
}

AlgebraPtr resolve_algebra(const CommonOpts& o) {
    if (!o.tensor_files.empty())
        return tensor(algebra_from_json(ojson(o.tensor_files[0]), "."),
                      algebra_from_json(ojson(o.tensor_files[1]), "."));
    if (!o.algebra_file.empty())
        return algebra_from_json(ojson(o.algebra_file), ".");
    throw CLI::ValidationError("--algebra or --tensor is required");
}

void print_header(Field field, std::size_t bound, const std::uint64_t* seed,
                  bool structured) {
    // structured mode keeps stdout as pure JSON; the header goes to stderr
    std::ostream& os = structured ? std::cerr : std::cout;
    os << "gproj " << kVersion << " | field " << field.str() << " | bound " << bound;
    if (seed) os << " | seed " << *seed;
    os << "\n";
}

int cmd_algebra_info(const std::string& path, std::size_t cap, const std::string& format) {
    AlgebraPtr alg = algebra_from_json(ojson(path), ".");
    print_header(alg->field(), cap, nullptr, format == "structured");
    DimVerdict gd = global_dim(alg, cap);
    GorensteinCert cert = is_gorenstein(alg, cap);
    bool si = is_self_injective(alg);
    if (format == "structured") {
        ojson j = algebra_description(alg);
        j["global_dim"] = gd.str();
        j["gorenstein"] = cert.certified;
        j["inj_dims"] = ojson::array({cert.left.str(), cert.right.str()});
        j["self_injective"] = si;
        std::cout << canonical_dump(j);
    } else {
        std::cout << "dim " << alg->dim() << ", idempotents " << alg->num_idempotents()
                  << ", radical dim " << alg->radical_basis().size() << "\n"
                  << "global dimension: " << gd.str() << "\n"
                  << "Gorenstein: " << (cert.certified ? "yes" : "unknown at cap") << " ("
                  << cert.left.str() << ", " << cert.right.str() << ")\n"
                  << "self-injective: " << (si ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_check_gp(const CommonOpts& o, const std::string& module_file,
                 const std::string& criterion) {
    AlgebraPtr alg = resolve_algebra(o);
    if (!o.emit_algebra.empty())
        write_text_file(o.emit_algebra, canonical_dump(algebra_description(alg)));
    Module x = load_module(module_file, alg);
    print_header(alg->field(), o.bound, nullptr, o.format == "structured");

    GpVerdict v;
    if (criterion == "direct") v = gp_direct(x, o.bound);
    else if (criterion == "thm2") v = gp_thm2(x, o.bound);
    else if (criterion == "thm3") v = gp_thm3(x, o.bound);
    else if (criterion == "propB") v = gp_propB(x, o.bound);
    else if (criterion == "selfinj") v = gp_selfinj(x, o.bound);
    else if (criterion == "quiver") v = gp_quiver(x, o.bound);
    else if (criterion == "tor") v = gp_tor(x, o.bound);
    else throw CLI::ValidationError("unknown criterion '" + criterion + "'");

    if (o.format == "structured") {
        std::cout << canonical_dump(verdict_to_json(v));
    } else {
        std::cout << "criterion " << v.criterion << ": " << outcome_str(v.outcome) << "\n"
                  << "witness: " << v.witness << "\n"
                  << "bound used: " << v.bound_used << "\n";
    }
    return 0;
}

int cmd_table(const CommonOpts& o, const std::vector<std::string>& module_files,
              std::size_t max_degree, bool is_tor) {
    AlgebraPtr alg = resolve_algebra(o);
    if (!o.emit_algebra.empty())
        write_text_file(o.emit_algebra, canonical_dump(algebra_description(alg)));
    print_header(alg->field(), max_degree, nullptr, o.format == "structured");
    std::vector<std::size_t> dims;
    if (is_tor) {
        Module u = load_module(module_files[0], opposite(alg));
        Module x = load_module(module_files[1], alg);
        dims = tor_dims(u, x, max_degree);
    } else {
        Module m = load_module(module_files[0], alg);
        Module n = load_module(module_files[1], alg);
        dims = ext_dims(m, n, max_degree);
    }
    if (o.format == "structured") {
        ojson j;
        j[is_tor ? "tor" : "ext"] = dims;
        std::cout << canonical_dump(j);
    } else {
        for (std::size_t d = 0; d <= max_degree; ++d)
            std::cout << (is_tor ? "Tor_" : "Ext^") << d << " = " << dims[d] << "\n";
    }
    return 0;
}

int cmd_verify(GenSpec spec, const std::string& out, const std::string& format) {
    print_header(spec.field, spec.bound, &spec.seed, format == "structured");
    AgreementReport r = verify_theorem(spec);
    std::string doc = canonical_dump(report_to_json(r));
    if (!out.empty()) {
        write_text_file(out, doc);
        std::filesystem::path base(out);
        for (const auto& [idx, mod] : r.disagreements) {
            std::filesystem::path side = base;
            side += ".disagreement-" + std::to_string(idx) + ".json";
            write_text_file(side, canonical_dump(mod));
        }
    }
    if (format == "structured")
        std::cout << doc;
    else
        std::cout << "theorem " << r.spec.theorem << ": " << r.agree_count << " agree, "
                  << r.disagree_count << " disagree, " << r.inconclusive_count
                  << " inconclusive (" << r.rows.size() << " rows)\n";
    return r.passed() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gorenstein-projectivity toolkit for tensor products of "
                 "quiver algebras"};
    app.set_version_flag("--version", gproj::kVersion);
    app.require_subcommand(1);

    // algebra-info
    std::string info_path;
    std::size_t info_cap = 20;
    std::string info_format = "human";
    auto* info = app.add_subcommand("algebra-info", "invariants of a presented algebra");
    info->add_option("path", info_path, "presentation file")->required();
    info->add_option("--cap", info_cap, "resolution cap");
    info->add_option("--format", info_format)->check(CLI::IsMember({"human", "structured"}));

    // check-gp
    CommonOpts gp_opts;
    std::string gp_module, gp_criterion;
    auto* chk = app.add_subcommand("check-gp", "decide Gorenstein projectivity");
    add_algebra_flags(chk, gp_opts);
    chk->add_option("--module", gp_module, "module file")->required();
    chk->add_option("--criterion", gp_criterion,
                    "direct|thm2|thm3|propB|selfinj|quiver|tor")
        ->required()
        ->check(CLI::IsMember({"direct", "thm2", "thm3", "propB", "selfinj", "quiver", "tor"}));
    chk->add_option("--bound", gp_opts.bound, "degree bound (default 20)");

    // ext / tor
    CommonOpts ext_opts, tor_opts;
    std::vector<std::string> ext_modules, tor_modules;
    std::size_t ext_deg = 6, tor_deg = 6;
    auto* ext = app.add_subcommand("ext", "table of Ext dimensions");
    add_algebra_flags(ext, ext_opts);
    ext->add_option("--modules", ext_modules, "module files M N")->expected(2)->required();
    ext->add_option("--max-degree", ext_deg, "highest degree");
    auto* tor = app.add_subcommand("tor", "table of Tor dimensions (first module is a "
                                          "right module, i.e. lives over the opposite)");
    add_algebra_flags(tor, tor_opts);
    tor->add_option("--modules", tor_modules, "module files U X")->expected(2)->required();
    tor->add_option("--max-degree", tor_deg, "highest degree");

    // verify
    gproj::GenSpec spec;
    std::string verify_out, verify_format = "human", verify_field = "Fp:101";
    auto* ver = app.add_subcommand("verify", "seeded cross-criterion verification run");
    ver->add_option("--theorem", spec.theorem, "which check to run")
        ->required()
        ->check(CLI::IsMember(gproj::kTheoremNames));
    ver->add_option("--family", spec.families,
                    "algebra family token(s); repeat for (A, B) pairs");
    ver->add_option("--samples", spec.samples, "number of samples (default 200)");
    ver->add_option("--seed", spec.seed, "PRNG seed (default 1)");
    ver->add_option("--out", verify_out, "write the report to this file");
    ver->add_option("--field", verify_field, "ground field (default Fp:101)");
    ver->add_option("--dim-cap", spec.dim_cap, "module dimension cap (default 12)");
    ver->add_option("--bound", spec.bound, "degree bound (default 20)");
    ver->add_option("--max-degree", spec.max_degree,
                    "degree range for the dimension-identity checks (default 6)");
    ver->add_option("--format", verify_format)->check(CLI::IsMember({"human", "structured"}));

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_algebra_info(info_path, info_cap, info_format);
        if (chk->parsed()) return cmd_check_gp(gp_opts, gp_module, gp_criterion);
        if (ext->parsed()) return cmd_table(ext_opts, ext_modules, ext_deg, false);
        if (tor->parsed()) return cmd_table(tor_opts, tor_modules, tor_deg, true);
        if (ver->parsed()) {
            spec.field = gproj::Field::parse(verify_field);
            return cmd_verify(spec, verify_out, verify_format);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1, --help/--version exit 0
    } catch (const gproj::HypothesisError& e) {
        std::cerr << "hypothesis failure: " << e.what() << "\n";
        return 2;
    } catch (const gproj::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const gproj::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const gproj::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
