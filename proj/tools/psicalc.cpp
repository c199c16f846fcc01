// psicalc: minimal polynomials of 2cos(2pi/n) and Chebyshev-family
// factorizations, with cross-method verification sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <vector>

#include "psicalc/cheb_factor.hpp"
#include "psicalc/identities.hpp"
#include "psicalc/minpoly.hpp"
#include "psicalc/numtheory.hpp"
#include "psicalc/sequences.hpp"

using json = nlohmann::json;
using namespace psicalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

IntPoly psi_by_method(const std::string& method, long long n) {
    if (method == "main") return psi(n);
    if (method == "wz") return psi_wz(n);
    if (method == "barnes") return n < 3 ? psi(n) : psi_barnes(n);
    if (method == "numeric") return psi_numeric(n);
    throw CLI::ValidationError("unknown method: " + method);
}

json expr_json(long long n) {
    json j;
    if (n <= 2) {
        j["num"] = json::array({psi_notation(n)});
        j["den"] = json::array();
        return j;
    }
    const PsiExpr expr = psi_expr(n);
    json num = json::array(), den = json::array();
    for (const auto& ref : expr.num) num.push_back(term_name(ref));
    for (const auto& ref : expr.den) den.push_back(term_name(ref));
    j["num"] = num;
    j["den"] = den;
    return j;
}

json coeffs_json(const IntPoly& p) {
    json coeffs = json::array();
    for (long k = p.degree(); k >= 0; --k)
        coeffs.push_back(p.coeff(k).get_str());
    return coeffs;
}

json psi_record(long long n, const IntPoly& p) {
    json j;
    j["n"] = n;
    j["degree"] = p.degree();
    j["expr"] = expr_json(n);
    j["coeffs"] = coeffs_json(p);
    return j;
}

int cmd_psi(long long n, const std::string& method, const std::string& format,
            bool expr_only) {
    if (format == "json") {
        std::cout << psi_record(n, psi_by_method(method, n)).dump() << "\n";
        return kExitOk;
    }
    if (expr_only) {
        std::cout << psi_notation(n) << "\n";
        return kExitOk;
    }
    std::cout << psi_by_method(method, n).to_string() << "\n";
    return kExitOk;
}

int cmd_table(long long max, const std::string& format, bool expand) {
    if (format == "json") {
        json rows = json::array();
        for (long long n = 1; n <= max; ++n) {
            json row;
            row["n"] = n;
            row["expr"] = psi_notation(n);
            if (expand) row["coeffs"] = coeffs_json(psi(n));
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
        return kExitOk;
    }
    for (long long n = 1; n <= max; ++n) {
        std::cout << n << " | " << psi_notation(n);
        if (expand) std::cout << " | " << psi(n).to_string();
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_factor(const std::string& kind, long long n, bool check,
               const std::string& format) {
    PsiFactorList list;
    IntPoly target;
    if (kind == "T") {
        list = factor_t(n);
        target = t(static_cast<long>(n));
    } else if (kind == "V") {
        list = factor_v(n);
        target = p_minus(static_cast<long>(n));
    } else if (kind == "W") {
        list = factor_w(n);
        target = p_plus(static_cast<long>(n));
    } else {
        throw CLI::ValidationError("kind must be T, V or W");
    }
    if (format == "json") {
        json j;
        j["kind"] = kind;
        j["n"] = n;
        j["psi_factors"] = list.factors;
        std::cout << j.dump() << "\n";
    } else {
        for (size_t i = 0; i < list.factors.size(); ++i)
            std::cout << (i ? " " : "") << "psi_" << list.factors[i];
        std::cout << "\n";
    }
    if (check) {
        if (factor_product(list) != target) {
            std::cerr << "check failed: product does not match target\n";
            return kExitVerifyFailure;
        }
        if (format != "json") std::cout << "check: ok\n";
    }
    return kExitOk;
}

std::vector<CheckReport> cross_method_reports(long long max) {
    std::vector<CheckReport> reports;
    {
        CheckReport r{"psi_methods", "3<=n<=" + std::to_string(max), {}};
        for (long long n = 3; n <= max; ++n) {
            const IntPoly a = psi(n);
            if (a != psi_wz(n) || a != psi_barnes(n))
                r.failures.push_back({"n=" + std::to_string(n), a.to_string(),
                                      "method disagreement"});
        }
        reports.push_back(std::move(r));
    }
    {
        const long long cap = std::min<long long>(max, 200);
        CheckReport r{"psi_numeric", "1<=n<=" + std::to_string(cap), {}};
        for (long long n = 1; n <= cap; ++n) {
            const IntPoly a = psi(n);
            if (a != psi_numeric(n))
                r.failures.push_back({"n=" + std::to_string(n), a.to_string(),
                                      "numeric oracle disagreement"});
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

int cmd_verify(long long max, const std::string& format) {
    if (max < 1) {
        std::cout << "no checks run\n";
        return kExitOk;
    }
    std::vector<CheckReport> reports = run_suite(max);
    for (auto& r : cross_method_reports(max)) reports.push_back(std::move(r));

    bool all_passed = true;
    json jreports = json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        if (format == "json") {
            json j;
            j["name"] = r.name;
            j["range"] = r.range;
            json fails = json::array();
            for (const auto& f : r.failures)
                fails.push_back({{"params", f.params},
                                 {"expected", f.expected},
                                 {"actual", f.actual}});
            j["failures"] = fails;
            jreports.push_back(std::move(j));
        } else {
            std::cout << r.to_line() << "\n";
        }
    }
    if (format == "json") std::cout << jreports.dump() << "\n";
    return all_passed ? kExitOk : kExitVerifyFailure;
}

int cmd_bench(long long max, std::string methods_csv) {
    std::vector<std::string> methods;
    for (size_t pos = 0; pos < methods_csv.size();) {
        size_t comma = methods_csv.find(',', pos);
        if (comma == std::string::npos) comma = methods_csv.size();
        methods.push_back(methods_csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    std::map<std::string, std::vector<double>> times_ms;
    std::map<std::string, std::vector<IntPoly>> results;
    for (const auto& method : methods) {
        const long long cap = method == "numeric"
                                  ? std::min<long long>(max, 200)
                                  : max;
        for (long long n = 1; n <= cap; ++n) {
            const auto start = std::chrono::steady_clock::now();
            IntPoly value = psi_by_method(method, n);
            const auto stop = std::chrono::steady_clock::now();
            times_ms[method].push_back(
                std::chrono::duration<double, std::milli>(stop - start).count());
            results[method].push_back(std::move(value));
        }
    }
    // Equality across methods is the contract; timings are informational.
    for (const auto& [method, values] : results) {
        for (size_t i = 0; i < values.size(); ++i) {
            if (values[i] != results[methods.front()][i]) {
                std::cerr << "method output mismatch at n=" << i + 1 << "\n";
                return kExitVerifyFailure;
            }
        }
    }
    std::cout << "method    n      total_ms    median_ms\n";
    for (const auto& method : methods) {
        auto times = times_ms[method];
        double total = 0;
        for (double ms : times) total += ms;
        std::nth_element(times.begin(), times.begin() + times.size() / 2,
                         times.end());
        const double median = times[times.size() / 2];
        std::printf("%-9s %-6zu %-11.3f %.5f\n", method.c_str(), times.size(),
                    total, median);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal polynomials of 2cos(2pi/n)"};
    app.require_subcommand(1);

    long long n = 0, max = 0;
    std::string method = "main", format = "text", kind, methods = "main,wz,barnes";
    bool expr_only = false, expand = false, check = false;

    auto* psi_cmd = app.add_subcommand("psi", "compute one minimal polynomial");
    psi_cmd->add_option("n", n, "index n >= 1")->required();
    psi_cmd->add_option("--method", method, "main|wz|barnes|numeric")
        ->check(CLI::IsMember({"main", "wz", "barnes", "numeric"}));
    psi_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    psi_cmd->add_flag("--expr", expr_only, "print the symbolic expression");

    auto* table_cmd = app.add_subcommand("table", "table of psi_n up to --max");
    table_cmd->add_option("--max", max, "largest n")->required();
    table_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    table_cmd->add_flag("--expand", expand, "include expanded coefficients");

    auto* factor_cmd =
        app.add_subcommand("factor", "psi-factorization of T/V/W polynomials");
    factor_cmd->add_option("kind", kind, "T|V|W")->required();
    factor_cmd->add_option("n", n, "index n >= 1")->required();
    factor_cmd->add_flag("--check", check, "verify the product exactly");
    factor_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "identity and method sweeps");
    verify_cmd->add_option("--max", max, "sweep bound")->required();
    verify_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* bench_cmd = app.add_subcommand("bench", "time the psi methods");
    bench_cmd->add_option("--max", max, "largest n")->required();
    bench_cmd->add_option("--methods", methods, "comma-separated method list");

    try {
        app.parse(argc, argv);
        if (psi_cmd->parsed()) return cmd_psi(n, method, format, expr_only);
        if (table_cmd->parsed()) {
            if (max < 1) throw std::invalid_argument("--max must be >= 1");
            return cmd_table(max, format, expand);
        }
        if (factor_cmd->parsed()) return cmd_factor(kind, n, check, format);
        if (verify_cmd->parsed()) return cmd_verify(max, format);
        if (bench_cmd->parsed()) {
            if (max < 1) throw std::invalid_argument("--max must be >= 1");
            return cmd_bench(max, methods);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const PrecisionExceeded& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
