// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure.  Usage: acceptance <path-to-cli> <golden-dir>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nqm/suite.hpp"

namespace {

struct Criterion {
    std::string name;
    bool pass = true;
    std::string detail;
};

bool all_pass(const std::vector<nqm::CaseResult>& cases, std::string& detail) {
    for (const auto& c : cases) {
        if (!c.pass) {
            detail = c.name + (c.lhs.empty() ? "" : " [" + c.lhs + " / " + c.rhs + "]");
            return false;
        }
    }
    return true;
}

std::string run_cli(const std::string& cli, const std::string& args, int* exitCode = nullptr) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    if (exitCode) *exitCode = WEXITSTATUS(status);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <golden-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string goldenDir = argv[2];

    // Criteria pin the sample counts; the env budget cap does not apply here.
    nqm::SuiteConfig cfg;
    cfg.seed = 42;
    std::vector<Criterion> crits;

    auto add = [&crits](const std::string& name, std::vector<nqm::CaseResult> cases) {
        Criterion c;
        c.name = name;
        c.pass = all_pass(cases, c.detail);
        crits.push_back(std::move(c));
    };

    add("01 exp-series identity through order 12", nqm::battery_identity18());
    add("02 rewriting: confluence, idempotence, associativity", nqm::battery_pbw(cfg));
    add("03 annihilation-operator vanishing bounds", nqm::battery_omega_bounds());
    add("04 operator commutation relation suites", nqm::battery_omega_relations(cfg));
    add("05 operator-algebra relations and anti-automorphism", nqm::battery_kashiwara(cfg));
    add("06 bilinear form axioms", nqm::battery_form_basic(cfg));
    add("07 nondegeneracy probe on truncations", nqm::battery_form_gram());
    add("08 module dichotomy by highest weight", nqm::battery_verma_dichotomy());
    add("09 dual-path operator evaluation", nqm::battery_verma_dualpath());
    add("10 length-two annihilation constraint scan", nqm::battery_verma_scan());

    // 11: CLI determinism plus golden files.
    {
        Criterion c;
        c.name = "11 CLI determinism and golden files";
        int code1 = 0, code2 = 0;
        const std::string run1 = run_cli(cli, "suite --name all --seed 42", &code1);
        const std::string run2 = run_cli(cli, "suite --name all --seed 42", &code2);
        if (run1.empty() || run1 != run2) {
            c.pass = false;
            c.detail = "suite output not byte-identical across runs";
        } else if (code1 != 0 || code2 != 0) {
            c.pass = false;
            c.detail = "suite exited with code " + std::to_string(code1);
        }

        const std::vector<std::pair<std::string, std::string>> goldens = {
            {"normal-form --expr \"xm(1)*xm(0)\"", "normal_form_swap.txt"},
            {"normal-form --expr \"xm(2)*xm(0)\"", "normal_form_gap2.txt"},
            {"normal-form --format json --expr \"xm(2)*xm(0)\"", "normal_form_gap2.json"},
            {"normal-form --expr \"xm(2)*xm(0) - q^(-4/2)*xm(0)*xm(2)\"", "normal_form_diff.txt"},
            {"multiply --lhs \"xm(0)*xm(1)\" --rhs \"xm(0)\"", "multiply_tail.txt"},
            {"omega --kind psi --k -3 --expr \"xm(3)\"", "omega_psi_delta.txt"},
            {"omega --kind psi --k 0 --expr \"xm(-1)*xm(1)\"", "omega_psi_len2.txt"},
            {"omega --kind phi --k 1 --expr \"xm(-1)*xm(1)\"", "omega_phi_len2.txt"},
            {"kact --word \"Wpsi(-3)*xm(3)\" --expr \"1\"", "kact_delta.txt"},
            {"kact --word \"q^2*gam(2/2)*Wpsi(-1)*xm(1) - Wpsi(0)*xm(0)\" --expr \"1\"",
             "kact_mixed_delta.txt"},
            {"alphabar --word \"xm(1)*Wpsi(2)\"", "alphabar_word.txt"},
            {"pair --lhs \"xm(0)*xm(0)\" --rhs \"xm(0)*xm(0)\"", "pair_norm.txt"},
            {"pair --lhs \"xm(2)\" --rhs \"xm(2)\"", "pair_delta.txt"},
            {"gram --length 2 --dsum 0 --window -2..2 --rank", "gram_2_0.txt"},
            {"gram --format json --length 2 --dsum 0 --window -2..2 --rank", "gram_2_0.json"},
            {"verma act --op xplus --idx -2 --lambda-h 2 --expr \"xm(2)\"", "verma_ladder.txt"},
            {"verma act --op psi --idx 1 --lambda-h 0 --expr \"xm(0)\"", "verma_psi1.txt"},
            {"verma singular --lambda-h 0 --length 1 --dsum 0 --window -2..2",
             "verma_singular_l1.txt"},
            {"verma lemma62 --A \"1,-1\" --m 1 --s-from 3 --s-to 8", "verma_scan.txt"},
            {"check identity18 --order 12", "check_identity18.txt"},
            {"suite --name identity18 --seed 42", "suite_identity18.json"},
        };
        for (const auto& [args, file] : goldens) {
            if (!c.pass) break;
            const std::string got = run_cli(cli, args);
            const std::string want = read_file(goldenDir + "/" + file);
            if (want.empty() || got != want) {
                c.pass = false;
                c.detail = "golden mismatch for " + file;
            }
        }
        crits.push_back(std::move(c));
    }

    bool ok = true;
    for (const auto& c : crits) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
        if (!c.pass) ok = false;
    }
    std::cout << (ok ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
    return ok ? 0 : 1;
}
