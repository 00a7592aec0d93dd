// Command-line surface: evaluate class expressions, print standard classes,
// and run the symbolic and point-count verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "motivic/census.hpp"
#include "motivic/classes.hpp"
#include "motivic/errors.hpp"
#include "motivic/expr.hpp"
#include "motivic/pfaffian.hpp"

namespace {

using motivic::Poly;

int print_eval(const std::string& text, bool normal_form, bool has_at, long long at) {
    auto ast = motivic::expr::parse_expr(text);
    motivic::MotElem value = motivic::expr::eval_expr(*ast);
    if (normal_form) value = value.normal_form();
    if (!has_at) {
        std::cout << value.str() << "\n";
        return 0;
    }
    if (!value.is_scalar()) {
        std::cerr << "error: --at needs a pure scalar; the result still carries formal "
                     "generators (use --normal-form or drop --at)\n";
        return 1;
    }
    if (at < 0) {
        std::cerr << "error: --at takes a nonnegative integer\n";
        return 1;
    }
    std::cout << value.scalar().eval(mpz_class(static_cast<long>(at))).get_str() << "\n";
    return 0;
}

int print_class(const std::string& family, const std::vector<long long>& args, bool has_at,
                long long at) {
    Poly poly;
    if (family == "P" && args.size() == 1)
        poly = motivic::projective_class(static_cast<int>(args[0]));
    else if (family == "A" && args.size() == 1)
        poly = motivic::affine_class(static_cast<int>(args[0]));
    else if (family == "G" && args.size() == 2)
        poly = motivic::grassmannian_class(static_cast<int>(args[0]),
                                           static_cast<int>(args[1]));
    else {
        std::cerr << "error: expected 'class P <n>', 'class A <n>' or 'class G <k> <n>'\n";
        return 1;
    }
    if (has_at) {
        if (at < 0) {
            std::cerr << "error: --at takes a nonnegative integer\n";
            return 1;
        }
        std::cout << poly.eval(mpz_class(static_cast<long>(at))).get_str() << "\n";
    } else {
        std::cout << poly.str() << "\n";
    }
    return 0;
}

int run_symbolic(nlohmann::json* out) {
    bool all = true;
    for (const auto& check : motivic::pfaffian::run_symbolic_suite()) {
        std::cout << (check.passed ? "  [pass] " : "  [FAIL] ") << check.name << "\n";
        if (out) (*out)[check.name] = check.passed ? "pass" : "fail";
        all = all && check.passed;
    }
    std::cout << (all ? "symbolic suite: all checks passed\n"
                      : "symbolic suite: FAILURES present\n");
    return all ? 0 : 1;
}

int run_census(std::uint32_t prime, const std::vector<std::uint64_t>& seeds, bool full,
               int threads, const std::string& json_path, nlohmann::json* embed) {
    if (prime == 5 && !full) {
        std::cerr << "error: the p=5 census is heavyweight; pass --full to run it\n";
        return 1;
    }
    motivic::census::SuiteOptions options;
    options.threads = threads;
    auto reports = motivic::census::verify_suite(prime, seeds, options);

    bool all = true;
    nlohmann::json array = nlohmann::json::array();
    for (const auto& report : reports) {
        std::cout << "census p=" << report.prime << " seed=" << report.seed << "\n";
        for (const auto& [name, status] : report.checks) {
            std::cout << "  [" << motivic::census::to_string(status) << "] " << name << "\n";
            all = all && status != motivic::census::CheckStatus::Fail;
        }
        array.push_back(nlohmann::json::parse(report.to_json_string()));
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 1;
        }
        f << array.dump(2) << "\n";
    }
    if (embed) *embed = std::move(array);
    std::cout << (all ? "census: all checks passed\n" : "census: FAILURES present\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for Lefschetz-class arithmetic with a finite-field census"};
    app.require_subcommand(1);

    std::string expr_text;
    long long at_value = 0;
    bool normal_form = false;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a class expression");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"([X]-[Y])*L^6\"")->required();
    auto* eval_at = eval_cmd->add_option("--at", at_value, "specialize L to an integer");
    eval_cmd->add_flag("--normal-form", normal_form, "reduce modulo ([X]-[Y])*L^6");

    std::string family;
    std::vector<long long> class_args;
    long long class_at_value = 0;
    auto* class_cmd = app.add_subcommand("class", "Print a standard class polynomial");
    class_cmd->add_option("family", family, "P, A or G")->required();
    class_cmd->add_option("args", class_args, "n, or k n for G")->expected(1, 2);
    auto* class_at = class_cmd->add_option("--at", class_at_value, "specialize L to an integer");

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->require_subcommand(1);
    auto* symbolic_cmd = verify_cmd->add_subcommand("symbolic", "symbolic identity suite");

    std::uint32_t prime = 2;
    std::vector<std::uint64_t> seeds{1, 2, 3};
    bool full = false;
    int threads = 1;
    std::string json_path;
    auto* census_cmd = verify_cmd->add_subcommand("census", "point-count census");
    census_cmd->add_option("--prime", prime, "2, 3 or 5 (5 needs --full)")->required();
    census_cmd->add_option("--seeds", seeds, "comma-separated seed list")->delimiter(',');
    census_cmd->add_flag("--full", full, "allow the heavyweight p=5 census");
    census_cmd->add_option("--json", json_path, "write the reports as a JSON array");
    census_cmd->add_option("--threads", threads, "worker count; results are identical");

    std::string report_path;
    int report_threads = 1;
    auto* report_cmd = app.add_subcommand("report", "Combined symbolic + census report");
    report_cmd->add_option("--json", report_path, "output path")->required();
    report_cmd->add_option("--threads", report_threads, "worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed())
            return print_eval(expr_text, normal_form, !eval_at->empty(), at_value);
        if (class_cmd->parsed())
            return print_class(family, class_args, !class_at->empty(), class_at_value);
        if (symbolic_cmd->parsed()) return run_symbolic(nullptr);
        if (census_cmd->parsed())
            return run_census(prime, seeds, full, threads, json_path, nullptr);
        if (report_cmd->parsed()) {
            nlohmann::json combined;
            nlohmann::json symbolic;
            int rc = run_symbolic(&symbolic);
            combined["symbolic"] = symbolic;
            combined["census"] = nlohmann::json::array();
            for (std::uint32_t p : {2u, 3u}) {
                nlohmann::json census_out;
                int crc = run_census(p, {1, 2, 3}, false, report_threads, "", &census_out);
                for (auto& item : census_out) combined["census"].push_back(std::move(item));
                rc = rc == 0 ? crc : rc;
            }
            std::ofstream f(report_path);
            if (!f) {
                std::cerr << "error: cannot write " << report_path << "\n";
                return 1;
            }
            f << combined.dump(2) << "\n";
            return rc;
        }
    } catch (const motivic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
