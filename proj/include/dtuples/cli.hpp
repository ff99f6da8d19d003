#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtuples/classify.hpp"
#include "dtuples/correspondence.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/factorize.hpp"
#include "dtuples/fixtures.hpp"
#include "dtuples/oracle.hpp"
#include "dtuples/parse.hpp"
#include "dtuples/serialize.hpp"
#include "dtuples/symmetry.hpp"

namespace dtuples {
namespace cli {

struct Options {
    std::string input_file;
    std::string expr;
    std::string format = "text";
    int samples = 100;
    double tol = 1e-6;
    std::uint64_t seed = 0;
    bool timings = false;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError(Errc::UnsupportedCoefficient, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Input text for a subcommand: --expr wins, otherwise --input is read.
inline std::string input_text(const Options& opt) {
    if (!opt.expr.empty()) return opt.expr;
    if (!opt.input_file.empty()) return slurp(opt.input_file);
    throw DomainError(Errc::UnsupportedCoefficient, "provide --expr or --input");
}

// A leading '{' means a matrix document; anything else is expression text.
inline Correspondence read_correspondence(const Options& opt) {
    const std::string text = input_text(opt);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded())
            throw DomainError(Errc::UnsupportedCoefficient, "input is not valid JSON");
        return load_matrix(doc);
    }
    return Correspondence::from_bipoly(parse_polynomial(text));
}

inline void print_symmetry_text(const SymmetryReport& rep, std::ostream& out) {
    out << "symmetric: " << (rep.symmetric ? "true" : "false") << "\n";
    out << "swap_scalar: " << (rep.swap_scalar ? "c = " + to_string(*rep.swap_scalar) : "none")
        << "\n";
    out << "real_up_to_constant: " << (rep.real_up_to_constant ? "true" : "false");
    if (rep.real_witness) out << " (witness " << to_string(*rep.real_witness) << ")";
    out << "\n";
    out << "hermitian_up_to_unimodular: ";
    if (rep.hermitian_unimodular) {
        out << "u = " << to_string(*rep.hermitian_unimodular);
        if (*rep.hermitian_unimodular == GaussianRational(-1)) out << " (skew-Hermitian)";
        if (*rep.hermitian_unimodular == GaussianRational(1)) out << " (Hermitian)";
    } else {
        out << "none";
    }
    out << "\n";
}

inline void print_classification_text(const Classification& cls, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (cls.is_rank2()) {
        const auto& r = cls.rank2();
        out << pad << "rank 2: map of tuples via separated maps\n";
        out << pad << "  phi(x) = " << map_to_string(r.factorization.phi, 'x') << "\n";
        out << pad << "  psi(y) = " << map_to_string(r.factorization.psi, 'y') << "\n";
        out << pad << "  round-trip scale: " << to_string(r.scale) << "\n";
    } else if (cls.is_perfect_power()) {
        const auto& r = cls.perfect_power();
        out << pad << "perfect power: exponent m = " << r.exponent << ", scale "
            << to_string(r.scale) << ", base degree " << r.base.d() << "\n";
        print_classification_text(*r.base_classification, out, indent + 2);
    } else {
        out << pad << "not a map of tuples (coefficient matrix rank " << cls.negative().rank
            << ", no perfect-power reduction)\n";
    }
}

}  // namespace detail

inline int cmd_classify(const Options& opt, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const Correspondence f = detail::read_correspondence(opt);
    const double parse_ms = detail::ms_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    const Classification cls = classify(f);
    const SymmetryReport rep = symmetry_report(f);
    const double compute_ms = detail::ms_since(t1);

    const bool is_map = cls.is_map_of_tuples();
    if (opt.format == "json") {
        ordered_json j;
        j["verdict"] = is_map ? "map_of_tuples" : "not_map_of_tuples";
        j["classification"] = classification_to_json(cls);
        j["symmetry"] = symmetry_to_json(rep);
        j["witnesses"] = ordered_json::array();
        if (opt.timings) j["timings"] = {{"parse_ms", parse_ms}, {"compute_ms", compute_ms}};
        out << j.dump(2) << "\n";
    } else {
        out << "degree: " << f.d() << "\n";
        out << "verdict: " << (is_map ? "map of " + std::to_string(f.d()) + "-tuples"
                                      : "not a map of tuples")
            << "\n";
        detail::print_classification_text(cls, out);
        if (opt.timings)
            out << "timings: parse " << parse_ms << " ms, compute " << compute_ms << " ms\n";
    }
    return is_map ? 0 : 1;
}

inline int cmd_factorize(const Options& opt, std::ostream& out) {
    const Correspondence f = detail::read_correspondence(opt);
    try {
        const FactorizeResult fr = factorize(f);
        if (opt.format == "json") {
            ordered_json j;
            j["verdict"] = "rank2";
            j["factorization"] = factorization_to_json(fr.factorization);
            j["scale"] = to_string(fr.scale);
            out << j.dump(2) << "\n";
        } else {
            out << "phi(x) = " << map_to_string(fr.factorization.phi, 'x') << "\n";
            out << "psi(y) = " << map_to_string(fr.factorization.psi, 'y') << "\n";
            out << "scale: " << to_string(fr.scale) << "\n";
        }
        return 0;
    } catch (const DomainError& e) {
        if (e.code() != Errc::RankNotTwo) throw;
        if (opt.format == "json") {
            ordered_json j;
            j["verdict"] = "rank_not_2";
            j["detail"] = e.what();
            out << j.dump(2) << "\n";
        } else {
            out << "FAIL: " << e.what() << "\n";
        }
        return 1;
    }
}

inline int cmd_compose(const Options& opt, std::ostream& out) {
    const std::string text = detail::input_text(opt);
    const auto [phi, psi] = parse_map_equation(text);
    const Correspondence f = compose(phi, psi);
    if (opt.format == "json") {
        out << save_matrix(f).dump(2) << "\n";
    } else {
        const int d = f.d();
        out << "degree: " << d << "\n";
        for (int r = 0; r <= d; ++r) {
            out << "[";
            for (int c = 0; c <= d; ++c)
                out << (c ? ", " : " ") << to_string(f.coeff(d - r, d - c));
            out << " ]\n";
        }
    }
    return 0;
}

inline int cmd_symmetry(const Options& opt, std::ostream& out) {
    const Correspondence f = detail::read_correspondence(opt);
    const SymmetryReport rep = symmetry_report(f);
    if (opt.format == "json") {
        ordered_json j;
        j["verdict"] = "ok";
        j["symmetry"] = symmetry_to_json(rep);
        out << j.dump(2) << "\n";
    } else {
        detail::print_symmetry_text(rep, out);
    }
    return 0;
}

inline int cmd_verify(const Options& opt, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const Correspondence f = detail::read_correspondence(opt);
    const auto t1 = std::chrono::steady_clock::now();
    const OracleVerdict v = verify_map_of_tuples(f, opt.samples, opt.tol, opt.seed);
    const double compute_ms = detail::ms_since(t1);
    const double parse_ms = detail::ms_since(t0) - compute_ms;
    if (opt.format == "json") {
        ordered_json j;
        j["verdict"] = v.pass ? "PASS" : "FAIL";
        j["oracle"] = oracle_to_json(v);
        if (opt.timings) j["timings"] = {{"parse_ms", parse_ms}, {"compute_ms", compute_ms}};
        out << j.dump(2) << "\n";
    } else {
        out << (v.pass ? "PASS" : "FAIL") << ": " << v.samples_used << " samples, "
            << v.samples_rejected << " rejected\n";
        if (v.worst) {
            out << "worst witness: start " << sphere_point_to_string(v.worst->start)
                << ", max mismatch " << dtuples::detail::fmt_double(v.worst->max_mismatch) << "\n";
        }
        if (opt.timings) out << "timings: compute " << compute_ms << " ms\n";
    }
    return v.pass ? 0 : 1;
}

inline int cmd_examples(const Options& opt, const std::string& dump_name, std::ostream& out) {
    if (!dump_name.empty()) {
        const Fixture* fx = fixture_by_name(dump_name);
        if (!fx)
            throw DomainError(Errc::UnsupportedCoefficient, "no such fixture: " + dump_name);
        out << save_matrix(fixture_correspondence(*fx)).dump(2) << "\n";
        return 0;
    }
    bool all_pass = true;
    ordered_json results = ordered_json::array();
    for (const auto& fx : all_fixtures()) {
        const FixtureResult r = run_fixture_checks(fx, opt.samples, opt.tol, opt.seed);
        all_pass = all_pass && r.pass;
        if (opt.format == "json") {
            ordered_json j{{"name", r.name}, {"pass", r.pass}};
            j["failures"] = r.failures;
            j["notes"] = r.notes;
            results.push_back(std::move(j));
        } else {
            out << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << fx.summary << ")\n";
            for (const auto& msg : r.failures) out << "    failure: " << msg << "\n";
            for (const auto& msg : r.notes) out << "    note: " << msg << "\n";
        }
    }
    if (opt.format == "json") out << results.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

// Runs the command line against the given streams and returns the process
// exit code: 0 success verdict, 1 negative verdict, 2 input/parse error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of polynomial correspondences that act on d-tuples"};
    app.require_subcommand(1);

    Options opt;
    std::string dump_name;

    auto add_common = [&](CLI::App* sub, bool with_oracle) {
        sub->add_option("--input", opt.input_file, "input file (expression text or matrix JSON)");
        sub->add_option("--expr", opt.expr, "inline expression");
        sub->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_oracle) {
            sub->add_option("--samples", opt.samples, "number of accepted oracle samples")
                ->check(CLI::PositiveNumber);
            sub->add_option("--tol", opt.tol, "chordal tolerance for fiber matching")
                ->check(CLI::PositiveNumber);
            sub->add_option("--seed", opt.seed, "random seed for sampling");
        }
        sub->add_flag("--timings", opt.timings, "include wall-clock timings in the report");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "decide map-of-tuples and explain how");
    add_common(c_classify, false);
    CLI::App* c_factorize = app.add_subcommand("factorize", "separate into phi(x) = psi(y)");
    add_common(c_factorize, false);
    CLI::App* c_compose = app.add_subcommand("compose", "expand 'phi(x) = psi(y)' into a matrix");
    add_common(c_compose, false);
    CLI::App* c_symmetry = app.add_subcommand("symmetry", "report coefficient-matrix symmetries");
    add_common(c_symmetry, false);
    CLI::App* c_verify = app.add_subcommand("verify", "numeric spot-check of the tuple property");
    add_common(c_verify, true);
    CLI::App* c_examples = app.add_subcommand("examples", "run the embedded worked examples");
    add_common(c_examples, true);
    c_examples->add_option("--dump", dump_name, "print the named example's matrix JSON");

    std::vector<const char*> argv;
    argv.push_back("dtuples");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(opt, out);
        if (c_factorize->parsed()) return cmd_factorize(opt, out);
        if (c_compose->parsed()) return cmd_compose(opt, out);
        if (c_symmetry->parsed()) return cmd_symmetry(opt, out);
        if (c_verify->parsed()) return cmd_verify(opt, out);
        if (c_examples->parsed()) return cmd_examples(opt, dump_name, out);
    } catch (const SyntaxError& e) {
        err << e.what() << "\n";  // already carries the position prefix
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cli
}  // namespace dtuples
