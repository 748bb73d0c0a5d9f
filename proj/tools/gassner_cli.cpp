// Command-line front end: compute Gassner matrices, verify the unitarity
// identity exactly, sweep randomized invariants, and run the numeric
// unit-torus checks.
//
// Exit codes: 0 pass, 1 property violated, 2 input error, 3 precondition
// error (non-pure braid or near-pole evaluation point).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gassner/braid.hpp"
#include "gassner/gassner.hpp"
#include "gassner/matrix.hpp"
#include "gassner/numeric.hpp"

using json = nlohmann::ordered_json;
using namespace gassner;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json matrix_json(const LaurentMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"entries", std::move(entries)}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

struct CommonOpts {
    int strands = 2;
    std::string word;
    std::string format = "pretty";
};

int run_compute(const CommonOpts& o) {
    Stopwatch timer;
    const BraidWord b = parse_word(o.word, o.strands);
    const AnnotatedBraid ab = annotate(b);
    const LaurentMatrix gamma = gassner_matrix(b);

    if (o.format == "json") {
        json rep{{"command", "compute"},
                 {"n", o.strands},
                 {"word", print_word(b)},
                 {"over", ab.over},
                 {"tau", ab.tau.one_line()},
                 {"gamma", matrix_json(gamma)},
                 {"outcome", "value"},
                 {"elapsed_ms", timer.ms()}};
        emit(rep);
    } else {
        std::cout << "word: " << (print_word(b).empty() ? "(empty)" : print_word(b))
                  << "   n = " << o.strands << "\n";
        std::cout << "over strands: ";
        for (size_t a = 0; a < ab.over.size(); ++a)
            std::cout << (a ? " " : "") << ab.over[a];
        std::cout << "\ntau: ";
        for (int p = 1; p <= ab.tau.size(); ++p)
            std::cout << (p > 1 ? " " : "") << ab.tau.image(p);
        std::cout << "\ngamma:\n" << gamma.str();
        std::cout << "elapsed_ms: " << timer.ms() << "\n";
    }
    return kExitPass;
}

int report_verification(const char* command, const CommonOpts& o, const std::string& word,
                        const UnitarityReport& rep, const Stopwatch& timer) {
    if (o.format == "json") {
        json out{{"command", command},
                 {"n", o.strands},
                 {"word", word},
                 {"holds", rep.holds},
                 {"lhs", matrix_json(rep.lhs)},
                 {"rhs", matrix_json(rep.rhs)},
                 {"outcome", rep.holds ? "pass" : "fail"},
                 {"elapsed_ms", timer.ms()}};
        if (rep.first_diff)
            out["first_diff"] = {rep.first_diff->first + 1, rep.first_diff->second + 1};
        emit(out);
    } else {
        std::cout << command << ": " << (rep.holds ? "holds" : "VIOLATED") << "\n";
        if (!rep.holds) {
            const auto [r, c] = *rep.first_diff;
            std::cout << "first differing entry (" << r + 1 << "," << c + 1 << "):\n"
                      << "  lhs: " << rep.lhs.at(r, c).str() << "\n"
                      << "  rhs: " << rep.rhs.at(r, c).str() << "\n";
        }
        std::cout << "elapsed_ms: " << timer.ms() << "\n";
    }
    return rep.holds ? kExitPass : kExitViolated;
}

int run_verify(const CommonOpts& o) {
    Stopwatch timer;
    const BraidWord b = parse_word(o.word, o.strands);
    return report_verification("verify", o, print_word(b), verify_unitarity(b), timer);
}

int run_verify_vw(const CommonOpts& o) {
    Stopwatch timer;
    const VWWord w = parse_vw_word(o.word, o.strands);
    return report_verification("verify-vw", o, print_vw_word(w), vw_verify_unitarity(w),
                               timer);
}

struct PropertyCount {
    std::string name;
    int cases = 0;
    int failures = 0;
};

int run_selftest(int max_n, int max_len, int cases, uint64_t seed,
                 const std::string& format) {
    Stopwatch timer;
    max_n = std::max(2, max_n);
    max_len = std::max(0, max_len);
    PropertyCount relations{"braid_relations"};
    PropertyCount unitarity{"unitarity"};
    PropertyCount inverse{"inverse"};
    PropertyCount twist{"twisted_multiplicativity"};
    PropertyCount det_prop{"determinant"};
    PropertyCount ones{"ones_fixed"};
    PropertyCount conj{"vw_conjugacy"};

    std::vector<std::string> failing;
    for (int case_id = 0; case_id < cases; ++case_id) {
        const uint64_t s = seed + static_cast<uint64_t>(case_id);
        const int n = 2 + static_cast<int>(s % static_cast<uint64_t>(std::max(1, max_n - 1)));
        const int len = static_cast<int>((s / 7) % static_cast<uint64_t>(max_len + 1));
        const BraidWord b = random_word(n, len, s);
        auto note_failure = [&](PropertyCount& p) {
            p.failures++;
            if (failing.size() < 20)
                failing.push_back(p.name + " case " + std::to_string(case_id) + " n=" +
                                  std::to_string(n) + " word \"" + print_word(b) + "\"");
        };

        // braid relations: insert a rewriting pair in the middle
        {
            relations.cases++;
            const int mid = len / 2;
            BraidWord left(n), right(n);
            for (int k = 0; k < mid; ++k)
                left.push(b.crossings()[k].pos, b.crossings()[k].sign);
            for (size_t k = mid; k < b.length(); ++k)
                right.push(b.crossings()[k].pos, b.crossings()[k].sign);
            bool ok = true;
            if (n >= 3) {
                const int i = 1 + static_cast<int>((s / 11) % static_cast<uint64_t>(n - 2));
                BraidWord lhs = left, rhs = left;
                for (int p : {i, i + 1, i}) lhs.push(p, 1);
                for (int p : {i + 1, i, i + 1}) rhs.push(p, 1);
                ok = gassner_matrix(concat(lhs, right)) == gassner_matrix(concat(rhs, right));
            }
            if (ok && n >= 4) {
                const int i = 1;
                const int j = 3 + static_cast<int>((s / 13) % static_cast<uint64_t>(n - 3));
                BraidWord lhs = left, rhs = left;
                lhs.push(i, 1);
                lhs.push(j, 1);
                rhs.push(j, 1);
                rhs.push(i, 1);
                ok = gassner_matrix(concat(lhs, right)) == gassner_matrix(concat(rhs, right));
            }
            if (!ok) note_failure(relations);
        }

        {
            unitarity.cases++;
            if (!verify_unitarity(b).holds) note_failure(unitarity);
        }
        {
            inverse.cases++;
            if (!(gassner_matrix(b) * gassner_inverse(b) ==
                  LaurentMatrix::identity(n, n)))
                note_failure(inverse);
        }
        {
            twist.cases++;
            const BraidWord c = random_word(n, static_cast<int>((s / 3) % (max_len + 1)),
                                            s ^ 0x9e3779b97f4a7c15ull);
            const LaurentMatrix expect = gassner_matrix(concat(b, c));
            const LaurentMatrix got = gassner_matrix(b) * relabel(gassner_matrix(c), annotate(b).tau);
            if (!(expect == got)) note_failure(twist);
        }
        if (n <= 5 && len <= 14) {  // keep cofactor determinants quick
            det_prop.cases++;
            if (!(gassner_matrix(b).det() == det_from_word(b))) note_failure(det_prop);
        }
        {
            ones.cases++;
            if (!gassner_matrix(b).ones_fixed()) note_failure(ones);
        }
        {
            conj.cases++;
            VWWord w(n);
            uint64_t r = s * 6364136223846793005ull + 1442695040888963407ull;
            const int vw_len = static_cast<int>(r % 6);
            for (int k = 0; k < vw_len; ++k) {
                r = r * 6364136223846793005ull + 1442695040888963407ull;
                int vi = 1 + static_cast<int>(r % n);
                int vj = 1 + static_cast<int>((r / 9) % n);
                if (vj == vi) vj = vi % n + 1;
                w.push(vi, vj, (r / 17) % 2 ? 1 : -1);
            }
            const LaurentMatrix d = d_matrix(n);
            if (!(d * vw_gassner_prime(w) == vw_gassner(w) * d)) note_failure(conj);
        }
    }

    const std::vector<PropertyCount> props = {relations, unitarity, inverse, twist,
                                              det_prop,  ones,      conj};
    int total_failures = 0;
    for (const auto& p : props) total_failures += p.failures;

    if (format == "json") {
        json jprops = json::object();
        for (const auto& p : props)
            jprops[p.name] = {{"cases", p.cases}, {"failures", p.failures}};
        json rep{{"command", "selftest"}, {"max_n", max_n},     {"max_len", max_len},
                 {"cases", cases},        {"seed", seed},       {"properties", jprops},
                 {"failing_cases", failing},
                 {"outcome", total_failures == 0 ? "pass" : "fail"},
                 {"elapsed_ms", timer.ms()}};
        emit(rep);
    } else {
        std::cout << "selftest  max_n=" << max_n << " max_len=" << max_len
                  << " cases=" << cases << " seed=" << seed << "\n";
        for (const auto& p : props)
            std::cout << "  " << p.name << ": " << p.cases << " cases, " << p.failures
                      << " failures\n";
        for (const auto& f : failing) std::cout << "  FAIL " << f << "\n";
        std::cout << (total_failures == 0 ? "all properties hold" : "FAILURES FOUND")
                  << "\nelapsed_ms: " << timer.ms() << "\n";
    }
    return total_failures == 0 ? kExitPass : kExitViolated;
}

int run_numeric(const CommonOpts& o, const std::vector<double>& thetas, double tol) {
    Stopwatch timer;
    const BraidWord b = parse_word(o.word, o.strands);
    if (static_cast<int>(thetas.size()) != o.strands)
        throw std::invalid_argument("--theta needs exactly n angles");
    const TorusPoint p(thetas);

    if (!is_pure(b)) {
        std::cerr << "numeric: braid is not pure (tau != identity)\n";
        return kExitPrecondition;
    }
    ComplexMatrix psi(1), psi_prime(1);
    try {
        psi = psi_numeric(p);
        psi_prime = psi_prime_numeric(p);
    } catch (const std::domain_error& e) {
        std::cerr << "numeric: " << e.what() << "\n";
        return kExitPrecondition;
    }

    const double herm_psi = hermitian_deviation(psi);
    const double herm_psi_prime = hermitian_deviation(psi_prime);
    const bool pd_psi = is_positive_definite(psi);
    const bool pd_psi_prime = is_positive_definite(psi_prime);
    const double res_psi = psi_unitarity_residual(b, p);
    const double res_psi_prime = psi_prime_unitarity_residual(b, p);
    const bool pass = res_psi <= tol && res_psi_prime <= tol;

    if (o.format == "json") {
        json rep{{"command", "numeric"},
                 {"n", o.strands},
                 {"word", print_word(b)},
                 {"theta", thetas},
                 {"tol", tol},
                 {"psi", {{"hermitian_deviation", herm_psi},
                          {"positive_definite", pd_psi},
                          {"unitarity_residual", res_psi}}},
                 {"psi_prime", {{"hermitian_deviation", herm_psi_prime},
                                {"positive_definite", pd_psi_prime},
                                {"unitarity_residual", res_psi_prime}}},
                 {"outcome", pass ? "pass" : "fail"},
                 {"elapsed_ms", timer.ms()}};
        emit(rep);
    } else {
        std::cout << "psi:       hermitian_deviation=" << herm_psi
                  << " positive_definite=" << (pd_psi ? "yes" : "no")
                  << " unitarity_residual=" << res_psi << "\n";
        std::cout << "psi_prime: hermitian_deviation=" << herm_psi_prime
                  << " positive_definite=" << (pd_psi_prime ? "yes" : "no")
                  << " unitarity_residual=" << res_psi_prime << "\n";
        std::cout << (pass ? "pass" : "FAIL") << " (tol=" << tol << ")\n"
                  << "elapsed_ms: " << timer.ms() << "\n";
    }
    return pass ? kExitPass : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gassner invariant calculator and unitarity checker"};
    app.require_subcommand(1);

    CommonOpts compute_opts, verify_opts, vw_opts, numeric_opts;

    auto* compute = app.add_subcommand("compute", "compute the Gassner matrix of a braid word");
    compute->add_option("-n,--strands", compute_opts.strands, "strand count")->required();
    compute->add_option("word", compute_opts.word, "braid word, e.g. \"1 -3 2\"");
    compute->add_option("--format", compute_opts.format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto* verify = app.add_subcommand("verify", "check the unitarity identity exactly");
    verify->add_option("-n,--strands", verify_opts.strands, "strand count")->required();
    verify->add_option("word", verify_opts.word, "braid word");
    verify->add_option("--format", verify_opts.format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto* verify_vw =
        app.add_subcommand("verify-vw", "run the unitarity check on a v/w word");
    verify_vw->add_option("-n,--strands", vw_opts.strands, "strand count")->required();
    verify_vw->add_option("word", vw_opts.word, "v/w word, e.g. \"1,2 -2,3\"");
    verify_vw->add_option("--format", vw_opts.format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    int st_max_n = 5, st_max_len = 20, st_cases = 500;
    uint64_t st_seed = 20140629;
    std::string st_format = "pretty";
    auto* selftest = app.add_subcommand("selftest", "randomized sweep of all exact invariants");
    selftest->add_option("-n,--strands", st_max_n, "maximum strand count");
    selftest->add_option("--max-len", st_max_len, "maximum word length");
    selftest->add_option("--cases", st_cases, "number of random cases");
    selftest->add_option("--seed", st_seed, "random seed");
    selftest->add_option("--format", st_format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    std::vector<double> thetas;
    double num_tol = 1e-8;
    auto* numeric = app.add_subcommand("numeric", "unit-torus Hermitian form checks");
    numeric->add_option("-n,--strands", numeric_opts.strands, "strand count")->required();
    numeric->add_option("word", numeric_opts.word, "pure braid word");
    numeric->add_option("--theta", thetas, "angles theta_1,...,theta_n")
        ->delimiter(',')
        ->required();
    numeric->add_option("--tol", num_tol, "residual tolerance");
    numeric->add_option("--format", numeric_opts.format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute) return run_compute(compute_opts);
        if (*verify) return run_verify(verify_opts);
        if (*verify_vw) return run_verify_vw(vw_opts);
        if (*selftest)
            return run_selftest(st_max_n, st_max_len, st_cases, st_seed, st_format);
        if (*numeric) return run_numeric(numeric_opts, thetas, num_tol);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
