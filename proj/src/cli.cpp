#include "bfx/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bfx/erasure.hpp"
#include "bfx/families.hpp"
#include "bfx/json_io.hpp"
#include "bfx/spectral.hpp"
#include "bfx/theorems.hpp"

namespace bfx {

namespace {

Rational parse_rational_flag(const std::string& s, const char* flag) {
    try {
        const Rational r = Rational::from_string(s);
        if (r.den() <= 0) throw std::invalid_argument("nonpositive denominator");
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(flag) + ": expected num/den, got '" + s + "'");
    }
}

std::vector<long> parse_long_list(const std::string& s, const char* flag) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stol(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(flag) + ": empty list");
    return out;
}

// --function accepts: maj | dict:i | gopi | weights:w1,..,wn[:theta] | hex
BooleanFunction parse_function(const std::string& spec, int n) {
    const auto need_n = [&] {
        if (n <= 0) throw std::invalid_argument("--n: required for --function " + spec);
    };
    if (spec == "maj") {
        need_n();
        return make_majority(n);
    }
    if (spec == "gopi") {
        need_n();
        return gopi_g(n);
    }
    if (spec.rfind("dict:", 0) == 0) {
        need_n();
        const auto idx = parse_long_list(spec.substr(5), "--function dict");
        if (idx.size() != 1) throw std::invalid_argument("--function dict: expected one index");
        return make_dictator(n, static_cast<int>(idx[0]));
    }
    if (spec.rfind("weights:", 0) == 0) {
        std::string body = spec.substr(8);
        long theta = 0;
        if (const auto colon = body.find(':'); colon != std::string::npos) {
            theta = parse_long_list(body.substr(colon + 1), "--function weights")[0];
            body = body.substr(0, colon);
        }
        LTFWeights w{parse_long_list(body, "--function weights"), theta};
        if (n > 0 && static_cast<int>(w.weights.size()) != n) {
            throw std::invalid_argument("--function weights: weight count differs from --n");
        }
        return ltf_to_function(w, static_cast<int>(w.weights.size()));
    }
    need_n();
    try {
        return BooleanFunction::from_hex(n, spec);
    } catch (const std::exception& e) {
        throw std::invalid_argument("--function: not a known name and not a valid hex table (" +
                                    std::string(e.what()) + ")");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("--out: cannot open '" + out_path + "'");
    os << text;
}

std::string poly_csv(const UniPoly& p) {
    std::ostringstream os;
    os << "degree,coefficient\n";
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        os << k << "," << p.coeff(k).str() << "\n";
    }
    return os.str();
}

struct CommonFlags {
    std::string function;
    int n = 0;
    std::string at;
    std::string out;
    std::string format = "json";
    unsigned jobs = 1;
    uint64_t seed = 12345;
};

void add_common(CLI::App* cmd, CommonFlags& c, bool with_at) {
    cmd->add_option("--function", c.function,
                    "maj | dict:i | gopi | weights:w1,..,wn[:theta] | hex table");
    cmd->add_option("--n", c.n, "arity");
    if (with_at) cmd->add_option("--at", c.at, "evaluation point as num/den");
    cmd->add_option("--out", c.out, "write output to this path instead of stdout");
    cmd->add_option("--format", c.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    // accepted everywhere for interface uniformity; output never depends on them
    cmd->add_option("--jobs", c.jobs, "worker threads");
    cmd->add_option("--seed", c.seed, "seed for sampled checks");
}

int cmd_poly(const CommonFlags& c, bool phi_mode) {
    if (c.function.empty()) throw std::invalid_argument("--function: required");
    const BooleanFunction f = parse_function(c.function, c.n);
    if (phi_mode && f.n() > kPhiMaxN) {
        throw std::invalid_argument("--n: phi is capped at n <= 13");
    }
    const UniPoly poly = phi_mode ? phi_poly(f) : stab_poly(f);
    nlohmann::json j = poly_to_json(poly);
    j["n"] = f.n();
    j["table_hex"] = f.to_hex();
    if (!c.at.empty()) {
        const Rational x = parse_rational_flag(c.at, "--at");
        j["at"] = x.str();
        j["value"] = poly.eval(x).str();
    }
    if (c.format == "csv") {
        emit(poly_csv(poly), c.out);
    } else {
        emit(j.dump(2) + "\n", c.out);
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact noise-stability and erasure-correlation toolkit"};
    app.require_subcommand(1);

    CommonFlags stab_flags, phi_flags;
    auto* stab_cmd = app.add_subcommand("stab", "noise stability polynomial in rho");
    add_common(stab_cmd, stab_flags, true);
    auto* phi_cmd = app.add_subcommand("phi", "erasure functional polynomial in p");
    add_common(phi_cmd, phi_flags, true);
    bool phi_poly_flag = false;
    phi_cmd->add_flag("--poly", phi_poly_flag, "emit the full polynomial (default)");

    // gap
    int gap_n = 0;
    std::string gap_at, gap_out;
    auto* gap_cmd = app.add_subcommand("gap", "phi/stab gaps of the counterexample family");
    gap_cmd->add_option("--n", gap_n, "odd arity, 3..11")->required();
    gap_cmd->add_option("--at", gap_at, "q as num/den")->required();
    gap_cmd->add_option("--out", gap_out, "output path");
    unsigned gap_jobs = 1;
    uint64_t gap_seed = 12345;
    gap_cmd->add_option("--jobs", gap_jobs, "worker threads");
    gap_cmd->add_option("--seed", gap_seed, "seed (unused)");

    // enumerate
    std::string enum_class, enum_group = "flips", enum_out;
    int enum_n = 0;
    auto* enum_cmd = app.add_subcommand("enumerate", "function class catalogs");
    enum_cmd->add_option("--class", enum_class, "unbiased_ltf | monotone | unate_unbiased")
        ->required()
        ->check(CLI::IsMember({"unbiased_ltf", "monotone", "unate_unbiased"}));
    enum_cmd->add_option("--n", enum_n, "arity")->required();
    enum_cmd->add_option("--group", enum_group, "dedup group: flips | flips_perms")
        ->check(CLI::IsMember({"flips", "flips_perms"}));
    enum_cmd->add_option("--out", enum_out, "output path");
    unsigned enum_jobs = 1;
    uint64_t enum_seed = 12345;
    enum_cmd->add_option("--jobs", enum_jobs, "worker threads");
    enum_cmd->add_option("--seed", enum_seed, "seed (unused)");

    // verify
    std::string verify_claim = "all", verify_nlist, verify_out;
    int verify_grid = 0;
    uint64_t verify_seed = 12345;
    unsigned verify_jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "machine-check theorems and lemmas");
    verify_cmd->add_option("--claim", verify_claim,
                           "thm1..thm4, lem:*, conj*_sweep, consistency, counterexample, all");
    verify_cmd->add_option("--n-list", verify_nlist, "comma separated arities");
    verify_cmd->add_option("--grid", verify_grid, "grid density / sample count override");
    verify_cmd->add_option("--seed", verify_seed, "seed for sampled checks");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->add_option("--out", verify_out, "report path");

    // sweep
    std::string sweep_nlist = "5", sweep_out;
    int sweep_grid = 99;
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV table of exact gaps over a q grid");
    sweep_cmd->add_option("--n-list", sweep_nlist, "comma separated odd arities, 3..11");
    sweep_cmd->add_option("--grid", sweep_grid, "number of interior grid points");
    sweep_cmd->add_option("--out", sweep_out, "output path");
    unsigned sweep_jobs = 1;
    uint64_t sweep_seed = 12345;
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads");
    sweep_cmd->add_option("--seed", sweep_seed, "seed (unused)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (stab_cmd->parsed()) return cmd_poly(stab_flags, false);
        if (phi_cmd->parsed()) return cmd_poly(phi_flags, true);

        if (gap_cmd->parsed()) {
            const Rational q = parse_rational_flag(gap_at, "--at");
            if (gap_n % 2 == 0 || gap_n < 3 || gap_n > 11) {
                throw std::invalid_argument("--n: need odd n in [3, 11]");
            }
            const Rational phi_gap = phi_eval(gopi_g(gap_n), q) - phi_eval(make_majority(gap_n), q);
            const Rational rho = Rational(1) - Rational(2) * q;
            const Rational stab_gap =
                stab_poly(make_majority(gap_n)).eval(rho) - stab_poly(gopi_g(gap_n)).eval(rho);
            const Rational rhs = gap_formula_rhs(gap_n, q);
            const bool equal = Rational(1L << (gap_n - 2)) * phi_gap == rhs &&
                               Rational(1L << (gap_n - 3)) * stab_gap == rhs;
            nlohmann::json j{{"n", gap_n},
                             {"q", q.str()},
                             {"phi_gap", phi_gap.str()},
                             {"stab_gap", stab_gap.str()},
                             {"rhs", rhs.str()},
                             {"equal", equal}};
            emit(j.dump(2) + "\n", gap_out);
            return equal ? 0 : 1;
        }

        if (enum_cmd->parsed()) {
            const Group group = enum_group == "flips" ? Group::Flips : Group::FlipsPerms;
            FunctionCatalog cat;
            if (enum_class == "unbiased_ltf") cat = enumerate_unbiased_ltfs(enum_n, group);
            else if (enum_class == "monotone") cat = enumerate_monotone(enum_n, group);
            else cat = enumerate_unate_unbiased(enum_n, group);
            std::ostringstream os;
            for (const auto& e : cat.entries) {
                os << catalog_entry_to_json(e, cat.n).dump() << "\n";
            }
            emit(os.str(), enum_out);
            return 0;
        }

        if (verify_cmd->parsed()) {
            VerifyOptions opts;
            if (!verify_nlist.empty()) {
                for (long n : parse_long_list(verify_nlist, "--n-list")) {
                    opts.n_list.push_back(static_cast<int>(n));
                }
            }
            opts.grid = verify_grid;
            opts.seed = verify_seed;
            opts.jobs = verify_jobs;
            const auto reports = run_claim(verify_claim, opts);
            nlohmann::json arr = nlohmann::json::array();
            bool all_pass = true;
            for (const auto& r : reports) {
                arr.push_back(report_to_json(r));
                all_pass = all_pass && r.pass;
            }
            emit(arr.dump(2) + "\n", verify_out);
            return all_pass ? 0 : 1;
        }

        if (sweep_cmd->parsed()) {
            std::vector<int> ns;
            for (long n : parse_long_list(sweep_nlist, "--n-list")) {
                ns.push_back(static_cast<int>(n));
            }
            if (sweep_grid < 1) throw std::invalid_argument("--grid: must be >= 1");
            std::ostringstream os;
            os << "# bfx-sweep v1\n";
            os << "n,q_num,q_den,gap_phi,gap_stab,rhs\n";
            for (const auto& row : sweep_gap_rows(ns, sweep_grid)) {
                os << row.n << "," << row.q.num() << "," << row.q.den() << ","
                   << row.gap_phi.str() << "," << row.gap_stab.str() << "," << row.rhs.str()
                   << "\n";
            }
            emit(os.str(), sweep_out);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace bfx
