#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qfe/qfe.hpp"

namespace qfe::cli {

namespace {

constexpr const char* kCarlitzExpandNote =
    "computed by triangular solve in y = q^x; exact, but no closed form for C_k is claimed";

struct UsageError : Error {
    using Error::Error;
};

std::optional<Rational> parse_field_value(const std::string& flag, const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw UsageError(flag + " expects 'symbolic' or a rational p/q, got '" + text + "'");
    }
}

std::string read_poly_argument(const std::string& value) {
    std::error_code ec;
    if (!value.empty() && std::filesystem::is_regular_file(value, ec)) {
        std::ifstream in(value);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return value;
}

std::size_t max_order_from_env() {
    const char* env = std::getenv("QFE_MAX_ORDER");
    if (env == nullptr || *env == '\0') return 64;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string("QFE_MAX_ORDER must be a positive integer, got '") + env + "'");
    return v;
}

void require_order(const CliConfig& cfg, std::size_t degree) {
    if (degree + 2 > cfg.max_order)
        throw UsageError("truncation order " + std::to_string(degree + 2) + " exceeds QFE_MAX_ORDER=" +
                         std::to_string(cfg.max_order));
}

// ---------------------------------------------------------------------------
// Symbols

std::string plain_symbol(const FamilyId& f, std::size_t n, bool polynomial) {
    std::string idx = std::to_string(n);
    std::string r = "(" + std::to_string(f.r) + ")";
    switch (f.kind) {
        case FamilyKind::QBernoulli: return "B_" + idx + (polynomial ? "(x)" : "");
        case FamilyKind::QEuler: return "E_" + idx + (polynomial ? "(x)" : "");
        case FamilyKind::QFrobeniusEuler: return "H_" + idx + (polynomial ? "(x|lambda)" : "(lambda)");
        case FamilyKind::QFrobeniusEulerOrderR:
            return "H^" + r + "_" + idx + (polynomial ? "(x|lambda)" : "(lambda)");
        case FamilyKind::QBernoulliOrderR: return "B^" + r + "_" + idx + (polynomial ? "(x)" : "");
    }
    return {};
}

std::string symbol(const FamilyId& f, std::size_t n, bool polynomial, Style style) {
    return style == Style::Latex ? latex_symbol(f, n, polynomial) : plain_symbol(f, n, polynomial);
}

Style style_of(OutputFormat f) { return f == OutputFormat::Latex ? Style::Latex : Style::Plain; }

void note(std::ostream& out, OutputFormat f, std::string_view text) {
    out << (f == OutputFormat::Latex ? "% " : "# ") << text << "\n";
}

template <ExactField K>
void print_rows(std::ostream& out, OutputFormat fmt, const std::vector<std::pair<std::string, K>>& rows) {
    const Style style = style_of(fmt);
    for (const auto& [lhs, value] : rows) {
        out << lhs << " = " << render(value, style);
        if (fmt == OutputFormat::Latex) out << " \\\\";
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// Commands, generic over the scalar field

template <ExactField K>
int cmd_numbers(const CliConfig& cfg, const QContext<K>& ctx, std::ostream& out) {
    auto table = number_table(ctx, cfg.family, cfg.n);
    if (cfg.format == OutputFormat::Json) {
        out << to_json(table).dump() << "\n";
        return 0;
    }
    if (cfg.family.kind == FamilyKind::QBernoulliOrderR) note(out, cfg.format, kBernoulliOrderRAssumption);
    std::vector<std::pair<std::string, K>> rows;
    for (std::size_t k = 0; k < table.values.size(); ++k)
        rows.emplace_back(symbol(cfg.family, k, false, style_of(cfg.format)), table.values[k]);
    print_rows(out, cfg.format, rows);
    return 0;
}

template <ExactField K>
int cmd_poly(const CliConfig& cfg, const QContext<K>& ctx, std::ostream& out) {
    auto p = family_poly(ctx, cfg.family, cfg.n);
    if (cfg.format == OutputFormat::Json) {
        Json j = to_json(cfg.family);
        j["n"] = cfg.n;
        j["poly"] = to_json(p);
        if (cfg.family.kind == FamilyKind::QBernoulliOrderR) j["assumption"] = std::string(kBernoulliOrderRAssumption);
        out << j.dump() << "\n";
        return 0;
    }
    if (cfg.family.kind == FamilyKind::QBernoulliOrderR) note(out, cfg.format, kBernoulliOrderRAssumption);
    const Style style = style_of(cfg.format);
    out << symbol(cfg.family, cfg.n, true, style) << " = " << render(p, style) << "\n";
    return 0;
}

template <ExactField K>
int cmd_expand(const CliConfig& cfg, const QContext<K>& ctx, const Poly<Rational>& p, std::ostream& out) {
    const Poly<K> pk = lift<K>(p);
    BasisExpansion<K> e = cfg.basis.kind == FamilyKind::QFrobeniusEuler ? expand_in_fe(ctx, pk)
                                                                         : expand_in_fe_order_r(ctx, pk, cfg.basis.r);
    if (cfg.format == OutputFormat::Json) {
        out << to_json(e).dump() << "\n";
        return 0;
    }
    const Style style = style_of(cfg.format);
    std::vector<std::pair<std::string, K>> rows;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        std::string basis = symbol(cfg.basis, k, true, style);
        rows.emplace_back(style == Style::Latex ? "C_{" + std::to_string(k) + "}\\;[" + basis + "]"
                                                : "C_" + std::to_string(k) + " [" + basis + "]",
                          e.coeffs[k]);
    }
    print_rows(out, cfg.format, rows);
    return 0;
}

template <ExactField K>
int cmd_carlitz(const CliConfig& cfg, const QContext<K>& ctx, const Poly<Rational>& p, std::ostream& out) {
    const Style style = style_of(cfg.format);
    auto beta_symbol = [&](std::size_t k, bool poly) {
        if (style == Style::Latex) return "\\beta_{" + std::to_string(k) + ",q}" + (poly ? "(x)" : "");
        return "beta_" + std::to_string(k) + (poly ? "(x)" : "");
    };
    switch (cfg.carlitz) {
        case CarlitzTask::Numbers: {
            auto beta = carlitz_numbers(ctx, cfg.n);
            if (cfg.format == OutputFormat::Json) {
                out << Json{{"family", "carlitz"}, {"values", values_to_json(beta)}}.dump() << "\n";
                return 0;
            }
            std::vector<std::pair<std::string, K>> rows;
            for (std::size_t k = 0; k <= cfg.n; ++k) rows.emplace_back(beta_symbol(k, false), beta[k]);
            print_rows(out, cfg.format, rows);
            return 0;
        }
        case CarlitzTask::Poly: {
            auto beta = carlitz_poly(ctx, cfg.n);
            if (cfg.format == OutputFormat::Json) {
                out << to_json(beta).dump() << "\n";
                return 0;
            }
            note(out, cfg.format, "y = q^x");
            out << beta_symbol(cfg.n, true) << " = " << render(beta.in_y, style, "y") << "\n";
            return 0;
        }
        case CarlitzTask::Expand: {
            auto c = expand_in_carlitz_basis(ctx, QBracketPoly<K>{lift<K>(p)});
            if (cfg.format == OutputFormat::Json) {
                out << Json{{"basis", "carlitz"}, {"variable", "[x]_q"}, {"coeffs", values_to_json(c)},
                            {"note", kCarlitzExpandNote}}
                           .dump()
                    << "\n";
                return 0;
            }
            note(out, cfg.format, kCarlitzExpandNote);
            std::vector<std::pair<std::string, K>> rows;
            for (std::size_t k = 0; k < c.size(); ++k)
                rows.emplace_back((style == Style::Latex ? "C_{" + std::to_string(k) + ",q}" : "C_" + std::to_string(k)),
                                  c[k]);
            print_rows(out, cfg.format, rows);
            return 0;
        }
    }
    return 2;
}

template <ExactField K>
int dispatch(const CliConfig& cfg, const QContext<K>& ctx, const Poly<Rational>& p, std::ostream& out) {
    switch (cfg.command) {
        case Command::Numbers: return cmd_numbers(cfg, ctx, out);
        case Command::Poly: return cmd_poly(cfg, ctx, out);
        case Command::Expand: return cmd_expand(cfg, ctx, p, out);
        case Command::Carlitz: return cmd_carlitz(cfg, ctx, p, out);
        case Command::Verify: break;
    }
    return 2;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    require_order(cfg, cfg.max_n);
    if (cfg.format == OutputFormat::Latex) throw UsageError("verify writes plain or json output only");
    auto reg = IdentityRegistry::builtin();
    VerifyOptions opt;
    opt.max_n = cfg.max_n;
    opt.max_r = cfg.max_r;
    opt.mode = cfg.verify_mode;
    opt.trials = cfg.trials;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    auto reports = verify_suite(reg, cfg.suite, opt);
    std::size_t failed = 0;
    for (const auto& rep : reports) {
        if (!rep.pass) ++failed;
        if (cfg.format == OutputFormat::Json) {
            out << to_json(rep).dump() << "\n";
        } else {
            out << (rep.pass ? "ExactPass " : "Fail      ") << rep.identity << " n=" << rep.n;
            if (rep.r) out << " r=" << *rep.r;
            if (rep.point) out << " q=" << rep.point->first << " lambda=" << rep.point->second;
            out << "\n";
        }
    }
    err << reports.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

bool command_uses_lambda(const CliConfig& cfg) {
    switch (cfg.command) {
        case Command::Numbers:
        case Command::Poly: return cfg.family.uses_lambda();
        case Command::Expand: return true;
        case Command::Verify:
        case Command::Carlitz: return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<int> parse_args(int argc, const char* const* argv, CliConfig& cfg, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-Frobenius-Euler, q-Bernoulli and q-Euler computations", "qfe"};
    app.require_subcommand(1);

    std::string family = "frobenius", basis = "frobenius", q_text = "symbolic", lambda_text = "symbolic";
    std::string format, suite = "all", mode = "symbolic", carlitz_task = "numbers", poly;
    std::size_t n = cfg.n, max_n = cfg.max_n, trials = cfg.trials;
    unsigned r = 1, max_r = cfg.max_r, threads = 0;
    std::uint64_t seed = cfg.seed;

    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--q", q_text, "'symbolic' or a rational literal p/q")->capture_default_str();
        sub->add_option("--lambda", lambda_text, "'symbolic' or a rational literal p/q")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "plain, json or latex")
            ->check(CLI::IsMember({"plain", "json", "latex"}));
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", family, "bernoulli, euler, frobenius, frobenius-r or bernoulli-r")
            ->check(CLI::IsMember({"bernoulli", "euler", "frobenius", "frobenius-r", "bernoulli-r"}))
            ->capture_default_str();
        sub->add_option("--r", r, "order r >= 1 for the order-r families")->check(CLI::PositiveNumber);
    };

    auto* numbers = app.add_subcommand("numbers", "table of family numbers 0..n");
    add_family(numbers);
    numbers->add_option("--n", n, "largest index")->capture_default_str();
    add_field(numbers);
    add_format(numbers);

    auto* polycmd = app.add_subcommand("poly", "family polynomial of degree n");
    add_family(polycmd);
    polycmd->add_option("--n", n, "degree")->capture_default_str();
    add_field(polycmd);
    add_format(polycmd);

    auto* expand = app.add_subcommand("expand", "coefficients of a polynomial in a Frobenius-Euler basis");
    expand->add_option("--poly", poly, "polynomial in x, or a file containing one")->required();
    expand->add_option("--basis", basis, "frobenius or frobenius-r")
        ->check(CLI::IsMember({"frobenius", "frobenius-r"}))
        ->capture_default_str();
    expand->add_option("--r", r, "order of the frobenius-r basis")->check(CLI::PositiveNumber);
    add_field(expand);
    add_format(expand);

    auto* verify = app.add_subcommand("verify", "check identities exactly and emit one report per case");
    verify->add_option("--suite", suite, "'all' or a comma-separated list of identity ids")->capture_default_str();
    verify->add_option("--max-n", max_n, "largest n checked")->capture_default_str();
    verify->add_option("--max-r", max_r, "largest r checked")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--mode", mode, "symbolic or numeric")
        ->check(CLI::IsMember({"symbolic", "numeric"}))
        ->capture_default_str();
    verify->add_option("--trials", trials, "random (q, lambda) points per identity in numeric mode")
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for random points and polynomials")->capture_default_str();
    verify->add_option("--threads", threads, "worker threads (0: all cores)");
    verify->add_flag("--list", "print the identity ids and exit");
    add_format(verify);

    auto* carlitz = app.add_subcommand("carlitz", "Carlitz q-Bernoulli numbers, polynomials and basis expansion");
    carlitz->add_option("task", carlitz_task, "numbers, poly or expand")
        ->check(CLI::IsMember({"numbers", "poly", "expand"}))
        ->capture_default_str();
    carlitz->add_option("--n", n, "largest index or degree")->capture_default_str();
    carlitz->add_option("--poly", poly, "polynomial in [x]_q written with the variable x, or a file");
    add_field(carlitz);
    add_format(carlitz);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.max_order = max_order_from_env();
        if (*numbers) cfg.command = Command::Numbers;
        else if (*polycmd) cfg.command = Command::Poly;
        else if (*expand) cfg.command = Command::Expand;
        else if (*verify) cfg.command = Command::Verify;
        else cfg.command = Command::Carlitz;

        if (verify->count("--list")) {
            for (const auto& id : IdentityRegistry::builtin().ids()) out << id << "\n";
            return 0;
        }

        cfg.family = {parse_family(family), r};
        if (!cfg.family.is_order_r() && r != 1 && cfg.command != Command::Expand)
            throw UsageError("--r applies only to the frobenius-r and bernoulli-r families");
        cfg.basis = {basis == "frobenius" ? FamilyKind::QFrobeniusEuler : FamilyKind::QFrobeniusEulerOrderR, r};
        cfg.n = n;
        cfg.max_n = max_n;
        cfg.max_r = max_r;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.verify_mode = mode == "numeric" ? FieldMode::NumericRational : FieldMode::SymbolicQLambda;
        cfg.carlitz = carlitz_task == "poly"     ? CarlitzTask::Poly
                      : carlitz_task == "expand" ? CarlitzTask::Expand
                                                 : CarlitzTask::Numbers;
        if (format.empty()) format = cfg.command == Command::Verify ? "json" : "plain";
        cfg.format = format == "json"    ? OutputFormat::Json
                     : format == "latex" ? OutputFormat::Latex
                                         : OutputFormat::Plain;
        cfg.q = parse_field_value("--q", q_text);
        cfg.lambda = parse_field_value("--lambda", lambda_text);
        if (cfg.command == Command::Carlitz && cfg.carlitz == CarlitzTask::Expand && poly.empty())
            throw UsageError("carlitz expand needs --poly");
        cfg.poly = read_poly_argument(poly);

        cfg.suite.clear();
        if (suite != "all") {
            std::stringstream ss(suite);
            std::string id;
            while (std::getline(ss, id, ','))
                if (!id.empty()) cfg.suite.push_back(id);
            if (cfg.suite.empty()) throw UsageError("--suite needs 'all' or at least one identity id");
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return std::nullopt;
}

int run_command(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == Command::Verify) {
            for (const auto& id : cfg.suite) (void)IdentityRegistry::builtin().find(id);
            return cmd_verify(cfg, out, err);
        }

        Poly<Rational> p;
        bool needs_poly =
            cfg.command == Command::Expand || (cfg.command == Command::Carlitz && cfg.carlitz == CarlitzTask::Expand);
        if (needs_poly) {
            p = parse_poly(cfg.poly, cfg.max_order);
            require_order(cfg, p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()));
        } else {
            require_order(cfg, cfg.n);
        }

        const bool uses_lambda = command_uses_lambda(cfg);
        if (uses_lambda && cfg.q.has_value() != cfg.lambda.has_value())
            throw InvalidConfig("--q and --lambda must both be 'symbolic' or both be rational literals");

        if (!cfg.q) return dispatch(cfg, symbolic_context(), p, out);
        // lambda is irrelevant for this command when absent; any value other than 1 will do.
        Rational lambda = uses_lambda ? *cfg.lambda : Rational(0);
        return dispatch(cfg, numeric_context(*cfg.q, lambda), p, out);
    } catch (const ParseError& e) {
        err << "error: --poly: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qfe");
    for (const auto& a : args) argv.push_back(a.c_str());
    CliConfig cfg;
    if (auto code = parse_args(static_cast<int>(argv.size()), argv.data(), cfg, out, err)) return *code;
    return run_command(cfg, out, err);
}

}  // namespace qfe::cli
