// Acceptance suite: runs every shipped verification at its stated size and
// prints one PASS/FAIL line per criterion. Exits nonzero when anything fails.
//
// Usage: acceptance [path-to-gproj-cli]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "gproj/harness.hpp"

using namespace gproj;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, double secs) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << secs << " s)\n"
              << std::flush;
    if (!ok) ++failures;
}

template <class Fn>
void criterion(const std::string& name, double budget_secs, Fn&& fn) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << "\n";
        ok = false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget_secs > 0 && secs > budget_secs) {
        std::cout << "  over budget: " << secs << " s > " << budget_secs << " s\n";
        ok = false;
    }
    report(name, ok, secs);
}

AgreementReport run(const std::string& theorem, std::vector<std::string> families,
                    std::size_t samples, Field field, std::uint64_t seed = 1) {
    GenSpec s;
    s.theorem = theorem;
    s.families = std::move(families);
    s.samples = samples;
    s.field = field;
    s.seed = seed;
    return verify_theorem(s);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

bool agreement_suite(Field f) {
    bool ok = true;
    ok &= run("thm34", {"dual_numbers", "kA2"}, 200, f).passed();
    ok &= run("prop42", {"dual_numbers", "kA2"}, 200, f).passed();
    ok &= run("prop42", {"dual_numbers", "kA3_with_relation"}, 200, f).passed();
    ok &= run("cor35", {"kA2", "Bn:2"}, 200, f).passed();
    ok &= run("lemma22", {"dual_numbers"}, 100, f).passed();
    ok &= run("lemma22", {"kA2", "dual_numbers"}, 100, f).passed();
    for (std::size_t n : {1, 2, 3})
        ok &= run("lemma51", {"kA2", "Bn:" + std::to_string(n)}, 100, f).passed();
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "./gproj";
    Field f101 = Field::fp(101);

    criterion("1. thm34 agreement: dual_numbers x kA2, 200 samples", 60, [&] {
        AgreementReport r = run("thm34", {"dual_numbers", "kA2"}, 200, f101);
        return r.passed() && r.inconclusive_count == 0 && r.rows.size() == 200;
    });

    criterion("2a. prop42 agreement + cokernel isomorphism: B = kA2, 200 samples", 90, [&] {
        return run("prop42", {"dual_numbers", "kA2"}, 200, f101).passed();
    });
    criterion("2b. prop42 agreement + cokernel isomorphism: B = kA3 with relation, "
              "200 samples", 90, [&] {
        return run("prop42", {"dual_numbers", "kA3_with_relation"}, 200, f101).passed();
    });

    criterion("3. cor35 agreement: A = kA2, B = B_2, 200 samples", 0, [&] {
        return run("cor35", {"kA2", "Bn:2"}, 200, f101).passed();
    });

    criterion("4. dimension identities (adjunction + dual transfer), 50 each, "
              "degrees <= 6", 0, [&] {
        return run("lemma21_dims", {"dual_numbers", "kA2"}, 50, f101).passed() &&
               run("lemma31_dims", {"dual_numbers", "kA2"}, 50, f101).passed();
    });

    criterion("5. dual-exactness equivalence: 100 sequences over k[x]/(x^2) and over "
              "kA2 (x) k[x]/(x^2)", 0, [&] {
        return run("lemma22", {"dual_numbers"}, 100, f101).passed() &&
               run("lemma22", {"kA2", "dual_numbers"}, 100, f101).passed();
    });

    criterion("6. periodic-complex equivalences: A = kA2, n in {1,2,3}, 100 each", 0, [&] {
        bool ok = true;
        for (std::size_t n : {1, 2, 3})
            ok &= run("lemma51", {"kA2", "Bn:" + std::to_string(n)}, 100, f101).passed();
        return ok;
    });

    criterion("7. bimodule criterion on {dual_numbers, kA2, B_2, B_3}", 40, [&] {
        struct Case { const char* fam; bool expect; };
        for (Case c : {Case{"dual_numbers", true}, Case{"kA2", false},
                       Case{"Bn:2", true}, Case{"Bn:3", true}}) {
            auto t0 = Clock::now();
            BimoduleGpReport rep = bimodule_gp_check(build_family(c.fam, f101), 20);
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            if (secs > 10) return false; // each case must finish in under 10 s
            if (!rep.agree || rep.gp_over_env.is_yes() != c.expect) return false;
        }
        return true;
    });

    criterion("8. homological oracle values", 0, [&] {
        auto a = from_presentation(presentation_kA2(f101));
        auto d = from_presentation(presentation_dual_numbers(f101));
        if (ext_dim(simple_module(a, 0), simple_module(a, 1), 1) != 1) return false;
        Module k = simple_module(d, 0);
        if (ext_dims(k, k, 6) != std::vector<std::size_t>(7, 1)) return false;
        if (!(global_dim(a, 10) == DimVerdict{1, true, 10})) return false;
        GorensteinCert c = is_gorenstein(d, 20);
        if (!c.certified || c.left.value != 0 || c.right.value != 0) return false;
        for (std::size_t n = 1; n <= 4; ++n)
            if (!is_self_injective(make_Bn(n, f101))) return false;
        return true;
    });

    criterion("9. structural properties: duality and closure suites (50 each), "
              "projectives are GP", 0, [&] {
        if (!run("gp3_duality", {"kA2", "dual_numbers"}, 50, f101).passed()) return false;
        if (!run("gp2_closure", {"kA2", "dual_numbers"}, 50, f101).passed()) return false;
        std::vector<std::string> fams = {"kA2", "kA3_with_relation", "dual_numbers",
                                         "square_with_commutativity", "Bn:1", "Bn:2",
                                         "Bn:3", "Bn:4"};
        for (const auto& fam : fams) {
            AlgebraPtr alg = build_family(fam, f101);
            for (std::size_t v = 0; v < alg->num_idempotents(); ++v)
                if (!gp_direct(indecomposable_projective(alg, v).mod, 20).is_yes())
                    return false;
        }
        return true;
    });

    criterion("10a. CLI determinism: same seed, byte-identical reports", 0, [&] {
        auto tmp = std::filesystem::temp_directory_path() / "gproj-acceptance";
        std::filesystem::create_directories(tmp);
        std::string out1 = (tmp / "r1.json").string(), out2 = (tmp / "r2.json").string();
        std::string base = cli + " verify --theorem thm34 --samples 50 --seed 11 --out ";
        if (std::system((base + out1 + " > /dev/null").c_str()) != 0) return false;
        if (std::system((base + out2 + " > /dev/null").c_str()) != 0) return false;
        std::string b1 = slurp(out1), b2 = slurp(out2);
        return !b1.empty() && b1 == b2;
    });

    criterion("10b. field independence: agreement suite over F_5", 0,
              [&] { return agreement_suite(Field::fp(5)); });
    criterion("10c. field independence: agreement suite over Q", 0,
              [&] { return agreement_suite(Field::rationals()); });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
