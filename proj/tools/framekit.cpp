// framekit: command-line front-end for frame checks.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framekit/checks.hpp"
#include "framekit/errors.hpp"
#include "framekit/spec_io.hpp"

namespace {

using namespace framekit;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

struct CommonArgs {
    std::string json_path;
    std::string expect;
    Index horizon = 50;
    std::uint64_t seed = 1;
    Index samples = 200;
    Index truncation = 16;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--horizon", args.horizon, "Basis horizon M for Schauder and exactness scans")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "Seed for sampled retro-bound witnesses");
    cmd->add_option("--samples", args.samples, "Number of sampled functionals")->check(CLI::PositiveNumber);
    cmd->add_option("--truncation", args.truncation, "Support size of sampled functionals")->check(CLI::PositiveNumber);
    cmd->add_option("--json", args.json_path, "Write the machine-readable report to this path ('-' for stdout)");
    cmd->add_option("--expect", args.expect, "Expected verdicts, e.g. phi=true,typep=false");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::map<std::string, bool> parse_expect(const std::string& text) {
    std::map<std::string, bool> out;
    if (text.empty()) return out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("--expect", "expected name=true|false, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (!parse_check(key)) throw ValidationError("--expect", "unknown check \"" + key + "\"");
        if (value != "true" && value != "false") throw ValidationError("--expect", "expected true or false for " + key);
        out[key] = value == "true";
    }
    return out;
}

std::set<Check> parse_checks(const std::string& text) {
    std::set<Check> out;
    for (const auto& name : split(text, ',')) {
        auto c = parse_check(name);
        if (!c) throw ValidationError("--checks", "unknown check \"" + name + "\"");
        out.insert(*c);
    }
    return out;
}

CheckOptions options_from(const CommonArgs& args) {
    CheckOptions o;
    o.horizon = args.horizon;
    o.seed = args.seed;
    o.samples = args.samples;
    o.truncation = args.truncation;
    return o;
}

int emit(const CheckReport& report, const CommonArgs& args) {
    std::cout << to_text(report);
    const std::string json = to_json(report).dump(2) + "\n";
    if (args.json_path == "-") {
        std::cout << json;
    } else if (!args.json_path.empty()) {
        std::ofstream out(args.json_path, std::ios::binary);
        if (!out) throw ValidationError("--json", "cannot write \"" + args.json_path + "\"");
        out << json;
    }

    int status = kExitOk;
    for (const auto& [key, expected] : parse_expect(args.expect)) {
        auto it = report.verdicts.find(key);
        if (it == report.verdicts.end()) {
            std::cerr << "expectation on " << key << ": check was not run\n";
            status = kExitMismatch;
        } else if (it->second != expected) {
            std::cerr << "verdict mismatch: " << key << " = " << (it->second ? "true" : "false") << ", expected "
                      << (expected ? "true" : "false") << "\n";
            status = kExitMismatch;
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framekit: exact Schauder / Phi-Schauder / retro frame checks over l1 and c0"};
    app.require_subcommand(1);

    CommonArgs check_args;
    std::string check_spec;
    std::string check_list = "schauder,phi,retro,typep";
    std::string check_z0;
    std::string check_with;
    auto* check = app.add_subcommand("check", "Run checks on a spec file or builtin frame");
    check->add_option("spec", check_spec, "Spec file or builtin name")->required();
    check->add_option("--checks", check_list, "Comma-separated subset of schauder,phi,retro,typep,shift,product");
    check->add_option("--z0", check_z0, "Shift vector for the shift check, e.g. \"1:-1/2\"");
    check->add_option("--with", check_with, "Second frame for the product check");
    add_common(check, check_args);

    CommonArgs shift_args;
    std::string shift_spec;
    std::string shift_z0;
    std::string shift_phi;
    auto* shift = app.add_subcommand("shift", "Analyze the shifted family {x_n + z0}");
    shift->add_option("spec", shift_spec, "Spec file or builtin name")->required();
    shift->add_option("--z0", shift_z0, "Shift vector, e.g. \"1:-1/2\"")->required();
    shift->add_option("--phi", shift_phi, "Finitely supported Phi to test Phi(z0) = -1 against, e.g. \"1:2,2:1\"");
    add_common(shift, shift_args);

    CommonArgs product_args;
    std::string product_left;
    std::string product_right;
    std::vector<std::string> product_verify;
    Index product_basis = 10;
    auto* product = app.add_subcommand("product", "Interleaved product frame on E x F with the sum norm");
    product->add_option("specA", product_left, "Left spec file or builtin name")->required();
    product->add_option("specB", product_right, "Right spec file or builtin name")->required();
    product->add_option("--verify", product_verify, "Pair to reconstruct, e.g. --verify \"1:1,3:-2\" \"2:1/2\"")->expected(2);
    product->add_option("--basis", product_basis, "Check every (e_i, e_j) with i, j <= basis")->check(CLI::PositiveNumber);
    add_common(product, product_args);

    auto* list = app.add_subcommand("list-builtins", "List the builtin frames");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (list->parsed()) {
            for (const auto& name : builtin_names()) std::cout << name << "\n";
            return kExitOk;
        }
        if (check->parsed()) {
            CheckOptions o = options_from(check_args);
            o.checks = parse_checks(check_list);
            if (!check_z0.empty()) o.z0 = parse_finvec_literal(check_z0);
            if (!check_with.empty()) o.product_with = load_spec(check_with);
            return emit(run_checks(load_spec(check_spec), o), check_args);
        }
        if (shift->parsed()) {
            CheckOptions o = options_from(shift_args);
            o.checks = {Check::Shift};
            o.z0 = parse_finvec_literal(shift_z0);
            if (!shift_phi.empty()) o.shift_phi = DualFunctional::from_finvec(parse_finvec_literal(shift_phi));
            return emit(run_checks(load_spec(shift_spec), o), shift_args);
        }
        if (product->parsed()) {
            CheckOptions o = options_from(product_args);
            o.checks = {Check::Product};
            o.product_with = load_spec(product_right);
            o.product_basis = product_basis;
            if (!product_verify.empty()) {
                o.product_verify = std::make_pair(parse_finvec_literal(product_verify.at(0)), parse_finvec_literal(product_verify.at(1)));
            }
            return emit(run_checks(load_spec(product_left), o), product_args);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ZeroShift& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInput;
    } catch (const HorizonExceeded& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const UnsupportedTail& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitLimit;
    }
    return kExitOk;
}
