#pragma once

#include "capelli/contracted_reps.hpp"
#include "capelli/extremal_states.hpp"
#include "capelli/rpa_solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace capelli::cli {

enum ExitCode { kSuccess = 0, kFailures = 1, kUsage = 2 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Everything a subcommand needs; round-trips through JSON.
struct CommandConfig {
    std::string subcommand;
    std::string identity = "capelli";
    std::string type;
    int p = 0, q = 0, N = 0;
    int n = 0;
    int dmax = 3;
    std::string variant = "both";
    std::string nu;
    int k = 0;
    std::string scale = "1";
    bool oracle = false;
    bool pretty = false;
    int jobs = 1;
    std::string output;
    std::string input;
    int fock_check = 0;
    std::string convention = "sum";
    double tolerance = 1e-5;

    friend bool operator==(const CommandConfig&, const CommandConfig&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(CommandConfig, subcommand, identity, type, p, q, N, n, dmax, variant, nu,
                                                k, scale, oracle, pretty, jobs, output, input, fock_check, convention,
                                                tolerance)

inline AlgebraKind kind_from(const CommandConfig& c) {
    auto positive = [](int v, const char* what) {
        if (v < 1) throw UsageError(std::string(what) + " must be a positive integer");
        return v;
    };
    if (c.type == "I") {
        if (c.p > 0 || c.q > 0) return AlgebraKind::type_i(positive(c.p, "--p"), positive(c.q, "--q"));
        int n = positive(c.N, "--N (or --p and --q)");
        return AlgebraKind::type_i(n, n);
    }
    if (c.type == "II") return AlgebraKind::type_ii(positive(c.N, "--N"));
    if (c.type == "III") return AlgebraKind::type_iii(positive(c.N, "--N"));
    throw UsageError("--type must be I, II or III");
}

inline WeightVector weight_from(const CommandConfig& c) {
    WeightVector nu;
    if (c.nu.empty()) throw UsageError("--nu is required");
    std::stringstream ss(c.nu);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            nu.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--nu must be a comma-separated list of integers");
        }
    }
    return nu;
}

inline Rational scale_from(const CommandConfig& c) {
    try {
        return parse_rational(c.scale);
    } catch (const std::exception&) {
        throw UsageError("--scale must be a rational such as 1, 2 or 1/3");
    }
}

namespace detail {

inline void emit(const CommandConfig& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + c.output);
    f << text;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline std::vector<CapelliSide> sides_from(const std::string& v) {
    if (v == "both") return {CapelliSide::XD, CapelliSide::DX};
    if (v == "XD") return {CapelliSide::XD};
    if (v == "DX") return {CapelliSide::DX};
    throw UsageError("--variant must be XD, DX or both");
}

}  // namespace detail

inline int cmd_verify(const CommandConfig& c, std::ostream& out) {
    AlgebraKind kind = kind_from(c);
    if (c.dmax < 0) throw UsageError("--dmax must be non-negative");
    std::vector<Report> reports;
    if (c.identity == "capelli") {
        if (c.n < 1) throw UsageError("--n is required for the capelli identity");
        try {
            require_det_size(kind, c.n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        for (auto side : detail::sides_from(c.variant))
            reports.push_back(verify_capelli(kind, c.n, CapelliVariant::standard(kind, c.n, side), c.dmax, c.jobs));
    } else if (c.identity == "heisenberg") {
        reports.push_back(check_heisenberg(kind, c.dmax, c.jobs));
    } else if (c.identity == "contraction") {
        reports.push_back(verify_contraction(kind, c.dmax, scale_from(c), c.jobs));
    } else {
        throw UsageError("--identity must be capelli, heisenberg or contraction");
    }
    bool passed = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
    if (c.pretty) {
        std::ostringstream s;
        for (const auto& r : reports) {
            s << r.identity << "  " << r.kind;
            if (r.n) s << "  n=" << *r.n;
            if (r.variant) s << "  " << *r.variant;
            s << "  dmax=" << r.dmax << "  checked=" << r.checked_count << "  failures=" << r.failures.size() << "  "
              << (r.passed() ? "PASS" : "FAIL") << "\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 5); ++i)
                s << "    on " << r.failures[i].monomial << ": " << r.failures[i].lhs << " != " << r.failures[i].rhs << "\n";
        }
        detail::emit(c, s.str(), out);
    } else {
        nlohmann::json j;
        j["passed"] = passed;
        j["reports"] = nlohmann::json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        detail::emit(c, detail::dump(j), out);
    }
    return passed ? kSuccess : kFailures;
}

inline ExtremalLabel label_from(const CommandConfig& c) {
    AlgebraKind kind = kind_from(c);
    try {
        return ExtremalLabel::make(kind, weight_from(c));
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("inadmissible weight: ") + e.what());
    }
}

inline int cmd_norm(const CommandConfig& c, std::ostream& out) {
    ExtremalLabel label = label_from(c);
    Rational closed = norm_closed_form(label);
    nlohmann::json j{{"kind", label.kind.name()}, {"nu", label.nu}, {"norm", to_string(closed)}};
    bool match = true;
    if (c.oracle) {
        Poly psi = extremal_poly(label);
        Rational oracle = bargmann_inner(psi, psi);
        match = oracle == closed;
        j["oracle"] = to_string(oracle);
        j["match"] = match;
    }
    if (c.pretty) {
        std::string s = to_string(closed);
        if (c.oracle) s += std::string("  oracle=") + j["oracle"].get<std::string>() + (match ? "  match" : "  MISMATCH");
        detail::emit(c, s + "\n", out);
    } else {
        detail::emit(c, detail::dump(j), out);
    }
    return match ? kSuccess : kFailures;
}

// Oracle value of the normalized extremal matrix element, as coeff*sqrt(radicand).
inline RadicalValue matel_oracle(const AlgebraKind& kind, const WeightVector& nu, int k) {
    WeightVector shifted = shifted_weight(kind.type(), nu, k);
    if (!admissibility_error(kind.type(), shifted).empty()) return RadicalValue();
    Poly ket = extremal_poly(ExtremalLabel::make(kind, nu));
    Poly bra = extremal_poly(ExtremalLabel::make(kind, shifted));
    auto [a, b] = matel_operator_index(kind.type(), k);
    Rational inner = matel_bruteforce(bra, GeneratorSpec::z(a, b), ket);
    Rational bra_norm = bargmann_inner(bra, bra);
    return RadicalValue(inner / bra_norm, bra_norm / bargmann_inner(ket, ket));
}

inline int cmd_matel(const CommandConfig& c, std::ostream& out) {
    ExtremalLabel label = label_from(c);
    if (c.k < 1 || c.k > matel_k_range(label.kind))
        throw UsageError("--k must lie in 1.." + std::to_string(matel_k_range(label.kind)) + " for " + label.kind.name());
    RadicalValue closed = matel_extremal(label.kind, label.nu, c.k);
    nlohmann::json j{{"kind", label.kind.name()}, {"nu", label.nu}, {"k", c.k}, {"value", to_json(closed)},
                     {"value_squared", to_string(closed.square())}};
    bool match = true;
    if (c.oracle) {
        RadicalValue oracle = matel_oracle(label.kind, label.nu, c.k);
        match = oracle == closed;
        j["oracle"] = to_json(oracle);
        j["match"] = match;
    }
    if (c.pretty) {
        std::ostringstream s;
        s << to_string(closed.coeff()) << " * sqrt(" << to_string(closed.radicand()) << ")";
        if (c.oracle) s << (match ? "  match" : "  MISMATCH");
        detail::emit(c, s.str() + "\n", out);
    } else {
        detail::emit(c, detail::dump(j), out);
    }
    return match ? kSuccess : kFailures;
}

inline int cmd_extremal(const CommandConfig& c, std::ostream& out) {
    ExtremalLabel label = label_from(c);
    Poly psi = extremal_poly(label);
    nlohmann::json j{{"kind", label.kind.name()}, {"nu", label.nu}, {"exponents", label.exponents},
                     {"polynomial", to_string(psi)}};
    bool ok = true;
    if (c.oracle) {
        ok = is_extremal(psi);
        j["is_extremal"] = ok;
        j["norm"] = to_string(bargmann_inner(psi, psi));
    }
    detail::emit(c, c.pretty ? to_string(psi) + "\n" : detail::dump(j), out);
    return ok ? kSuccess : kFailures;
}

inline int cmd_export(const CommandConfig& c, std::ostream& out) {
    AlgebraKind kind = kind_from(c);
    if (c.dmax < 0) throw UsageError("--dmax must be non-negative");
    std::ostringstream s;
    for (const auto& m : build_rep_matrices(kind, default_export_generators(kind, scale_from(c)), c.dmax))
        s << to_json(m).dump() << "\n";
    detail::emit(c, s.str(), out);
    return kSuccess;
}

inline int cmd_rpa(const CommandConfig& c, std::ostream& out) {
    if (c.input.empty()) throw UsageError("--input is required");
    std::ifstream f(c.input);
    if (!f) throw UsageError("cannot open input file " + c.input);
    PairingConvention conv;
    if (c.convention == "sum")
        conv = PairingConvention::Sum;
    else if (c.convention == "average")
        conv = PairingConvention::Average;
    else
        throw UsageError("--convention must be sum or average");
    nlohmann::json input;
    try {
        input = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid Hamiltonian JSON: ") + e.what());
    }
    std::optional<QuadraticBosonHamiltonian> h;
    try {
        h.emplace(hamiltonian_from_json(input, conv));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    RpaSolution sol = solve_rpa(*h);
    nlohmann::json j = to_json(sol);
    int code = kSuccess;
    if (c.fock_check > 0) {
        if (!sol.stable) {
            j["fock"] = {{"skipped", "unstable Hamiltonian"}};
        } else {
            FockSpectrum fock = fock_oracle(*h, c.fock_check);
            FockComparison cmp = compare_with_fock(sol, fock);
            j["fock"] = {{"nmax", fock.nmax},
                         {"ground_energy", fock.energies.front()},
                         {"gaps", cmp.matched_gaps},
                         {"max_deviation", cmp.max_deviation},
                         {"boundary_weight", fock.boundary_weight},
                         {"cutoff_ok", fock.cutoff_ok}};
            if (cmp.max_deviation > c.tolerance) code = kFailures;
        }
    }
    if (c.pretty) {
        std::ostringstream s;
        s << std::setprecision(12) << "stable: " << (sol.stable ? "yes" : "no") << "\n";
        for (double w : sol.frequencies) s << "omega: " << w << "\n";
        if (sol.delta_E) s << "delta_E: " << *sol.delta_E << "\n";
        if (!sol.diagnostic.empty()) s << "diagnostic: " << sol.diagnostic << "\n";
        if (j.contains("fock") && j["fock"].contains("max_deviation"))
            s << "fock max deviation: " << j["fock"]["max_deviation"].get<double>() << "\n";
        detail::emit(c, s.str(), out);
    } else {
        detail::emit(c, detail::dump(j), out);
    }
    return code;
}

inline int dispatch(const CommandConfig& c, std::ostream& out) {
    if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (c.subcommand == "verify") return cmd_verify(c, out);
    if (c.subcommand == "norm") return cmd_norm(c, out);
    if (c.subcommand == "matel") return cmd_matel(c, out);
    if (c.subcommand == "extremal") return cmd_extremal(c, out);
    if (c.subcommand == "export") return cmd_export(c, out);
    if (c.subcommand == "rpa") return cmd_rpa(c, out);
    throw UsageError("unknown subcommand " + c.subcommand);
}

// Parses argv-style arguments (without the program name) into a config.
// Returns an exit code when parsing already finished the invocation (help or error).
inline std::optional<int> parse(const std::vector<std::string>& args, CommandConfig& c, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capelli identities, extremal states and contracted representations"};
    app.require_subcommand(1, 1);
    c.jobs = default_jobs();

    auto kind_options = [&](CLI::App* s) {
        s->add_option("--type", c.type, "Algebra kind: I, II or III")->required();
        s->add_option("--p", c.p, "Rows for type I");
        s->add_option("--q", c.q, "Columns for type I");
        s->add_option("--N", c.N, "Size (type I: p = q = N)");
    };
    auto common = [&](CLI::App* s) {
        s->add_flag("--pretty", c.pretty, "Human-readable output");
        s->add_option("--output", c.output, "Write output to a file");
        s->add_option("--jobs", c.jobs, "Worker threads (default CAPELLI_JOBS or 1)");
    };

    auto* verify = app.add_subcommand("verify", "Run an identity sweep");
    kind_options(verify);
    verify->add_option("--identity", c.identity, "capelli, heisenberg or contraction");
    verify->add_option("--n", c.n, "Determinant size for the capelli identity");
    verify->add_option("--dmax", c.dmax, "Maximum monomial degree");
    verify->add_option("--variant", c.variant, "XD, DX or both");
    verify->add_option("--scale", c.scale, "Contraction constant k");
    common(verify);

    for (const char* name : {"norm", "matel", "extremal"}) {
        auto* s = app.add_subcommand(name, std::string(name) == "norm"       ? "Closed-form norm of an extremal state"
                                           : std::string(name) == "matel" ? "Extremal matrix element of z"
                                                                          : "Extremal polynomial");
        kind_options(s);
        s->add_option("--nu", c.nu, "Weight, comma separated")->required();
        s->add_flag("--oracle", c.oracle, "Cross-check against the brute-force inner product");
        if (std::string(name) == "matel") s->add_option("--k", c.k, "Operator index")->required();
        common(s);
    }

    auto* exp = app.add_subcommand("export", "Representation matrices as JSON lines");
    kind_options(exp);
    exp->add_option("--dmax", c.dmax, "Basis degree");
    exp->add_option("--scale", c.scale, "Contraction constant k on Z and D");
    common(exp);

    auto* rpa = app.add_subcommand("rpa", "Solve a quadratic boson Hamiltonian (floating point)");
    rpa->add_option("--input", c.input, "Hamiltonian JSON {E0, V, W}")->required();
    rpa->add_option("--fock-check", c.fock_check, "Compare with exact diagonalization at this cutoff");
    rpa->add_option("--convention", c.convention, "Pairing matrix: sum (B = W + W^T) or average");
    rpa->add_option("--tolerance", c.tolerance, "Allowed Fock deviation");
    common(rpa);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    for (auto* s : app.get_subcommands()) c.subcommand = s->get_name();
    return std::nullopt;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig c;
    if (auto code = parse(args, c, out, err)) return *code;
    try {
        return dispatch(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailures;
    }
}

}  // namespace capelli::cli
