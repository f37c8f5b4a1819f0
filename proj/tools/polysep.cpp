/*
   Copyright 2026 The polysep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// polysep: construct integer-polynomial families with abnormally close
// roots, measure their separation at adaptive precision, and certify
// lower bounds on the separation exponent. All data output is JSON or CSV
// on stdout; diagnostics go to stderr. Exit codes: 0 ok, 2 flag error,
// 3 threshold (parameter below the asymptotic regime), 4 non-convergence.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polysep/errors.hpp"
#include "polysep/serialize.hpp"
#include "polysep/verify.hpp"

namespace {

using namespace polysep;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"integer-polynomial root separation laboratory"};
    app.require_subcommand(1);

    long d = 0, a = 0;
    long prec = 0;
    long a_from = 0, a_to = 0;
    double a_factor = 0;
    unsigned jobs = 1;
    bool no_timing = false;
    bool compact_json = false;
    std::string out_file;
    long d_max = 6, a_max = 20;

    auto add_da = [&](CLI::App* cmd) {
        cmd->add_option("-d", d, "family degree (>= 3)")->required();
        cmd->add_option("-a", a, "family parameter (>= 1)")->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "emit a family instance with its predictions");
    add_da(gen);

    CLI::App* roots = app.add_subcommand("roots", "compute all complex roots");
    add_da(roots);
    roots->add_option("--prec", prec, "force a fixed working precision in bits (>= 32)");

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full separation report");
    add_da(analyze_cmd);
    analyze_cmd->add_flag("--json", compact_json, "compact single-line JSON");

    CLI::App* recip = app.add_subcommand("reciprocal", "separation report for the monic variant");
    add_da(recip);

    CLI::App* mig = app.add_subcommand("mignotte", "emit the comparison family x^d - 2(ax-1)^2");
    add_da(mig);

    CLI::App* scan_cmd = app.add_subcommand("scan", "geometric sweep over a, CSV output");
    scan_cmd->add_option("-d", d, "family degree (>= 3)")->required();
    scan_cmd->add_option("--a-from", a_from, "first a value")->required();
    scan_cmd->add_option("--a-to", a_to, "last a value (inclusive bound)")->required();
    scan_cmd->add_option("--a-factor", a_factor, "geometric step factor (> 1)")->required();
    scan_cmd->add_option("--out", out_file, "write CSV to a file instead of stdout");
    scan_cmd->add_option("--jobs", jobs, "evaluate rows in parallel");
    scan_cmd->add_flag("--no-timing", no_timing, "pin elapsed_ms to 0 for reproducible output");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->add_option("--d-max", d_max, "largest degree to verify (default 6)");
    verify_cmd->add_option("--a-max", a_max, "largest a to verify (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the flag error
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        emit(instance_json(make_family_instance(d, a)));
        return 0;
    }

    if (roots->parsed()) {
        FamilyInstance inst = make_family_instance(d, a);
        RootSet rs = prec > 0 ? aberth_all_roots(inst.poly, prec)
                              : adaptive_roots(inst.poly, inst.prediction.sep_pred);
        emit(rootset_json(rs));
        return 0;
    }

    if (analyze_cmd->parsed()) {
        Json j = report_json(analyze(make_family_instance(d, a)));
        if (compact_json)
            std::cout << j.dump() << "\n";
        else
            emit(j);
        return 0;
    }

    if (recip->parsed()) {
        emit(report_json(analyze_reciprocal(make_family_instance(d, a))));
        return 0;
    }

    if (mig->parsed()) {
        emit(poly_json(mignotte_family(d, a)));
        return 0;
    }

    if (scan_cmd->parsed()) {
        if (a_from < 1 || a_to < a_from)
            throw std::invalid_argument("scan: need 1 <= a-from <= a-to");
        if (!(a_factor > 1.0))
            throw std::invalid_argument("scan: a-factor must be > 1");
        std::vector<long> as;
        for (long v = a_from; v <= a_to;) {
            as.push_back(v);
            long next = static_cast<long>(std::ceil(static_cast<double>(v) * a_factor));
            if (next <= v) next = v + 1;
            v = next;
        }
        std::vector<ScanRow> rows = scan(d, as, jobs);
        if (out_file.empty()) {
            write_scan_csv(rows, std::cout, !no_timing);
        } else {
            std::ofstream f(out_file);
            if (!f) throw std::invalid_argument("scan: cannot open " + out_file);
            write_scan_csv(rows, f, !no_timing);
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        VerifyResult res = run_verify(d_max, a_max);
        Json j;
        j["d_max"] = d_max;
        j["a_max"] = a_max;
        Json checks = Json::array();
        for (const VerifyCheck& c : res.checks) {
            Json cj;
            cj["name"] = c.name;
            cj["passed"] = c.passed;
            cj["cases"] = c.cases;
            if (!c.note.empty()) cj["note"] = c.note;
            if (c.name == "eisenstein" && res.eisenstein)
                cj.update(certificate_json(*res.eisenstein));
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        j["all_passed"] = res.all_passed;
        emit(j);
        return res.all_passed ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const polysep::ThresholdError& e) {
        std::cerr << "threshold error: " << e.what() << "\n";
        return 3;
    } catch (const polysep::NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
