#include "cli.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "umbral/combinatorics.hpp"
#include "umbral/dsl.hpp"
#include "umbral/error.hpp"
#include "umbral/evaluate.hpp"
#include "umbral/io.hpp"
#include "umbral/registry.hpp"
#include "umbral/sheffer.hpp"
#include "umbral/special.hpp"

namespace umbral::cli {

namespace {

struct Config {
    unsigned order = 10;
    std::string format = "pretty";
    std::string workspace;
};

// A computed result that failed its own cross-check; output is still printed.
struct VerificationFailed {
    std::string what;
};

int code_for(const std::exception& e) {
    if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const NameError*>(&e) ||
        dynamic_cast<const InputError*>(&e))
        return kUsage;
    if (dynamic_cast<const IoError*>(&e)) return kIo;
    return kMath;
}

// The offending line with a caret under the reported column.
std::string caret_diagram(const std::string& text, const SourcePos& pos) {
    std::size_t begin = pos.offset > text.size() ? text.size() : pos.offset;
    while (begin > 0 && text[begin - 1] != '\n') --begin;
    std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) end = text.size();
    return "  " + text.substr(begin, end - begin) + "\n  " + std::string(pos.column - 1, ' ') + "^\n";
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    if (out.empty()) throw InputError("empty list");
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& item : split_list(text)) out.push_back(Rational::parse(item));
    return out;
}

std::string join(const std::vector<Poly>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
    return s;
}

std::string pretty_matrix(const Matrix& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto& row : m) {
        std::vector<std::string> r;
        for (std::size_t k = 0; k < row.size(); ++k) {
            r.push_back(row[k].to_string());
            if (width.size() <= k) width.push_back(0);
            width[k] = std::max(width[k], r.back().size());
        }
        cells.push_back(std::move(r));
    }
    std::ostringstream os;
    for (std::size_t n = 0; n < cells.size(); ++n) {
        os << "n=" << n << ":";
        for (std::size_t k = 0; k < cells[n].size(); ++k) os << "  " << std::setw(int(width[k])) << cells[n][k];
        os << "\n";
    }
    return os.str();
}

Json table_json(const std::vector<Poly>& polys, unsigned width) {
    Json t = Json::array();
    for (const auto& p : polys) {
        Json row = Json::array();
        for (unsigned k = 0; k <= width; ++k) row.push_back(to_json(x_coefficient(p, k)));
        t.push_back(std::move(row));
    }
    return t;
}

class Session {
public:
    Session(Config cfg, std::ostream& out, std::ostream& err) : cfg_(std::move(cfg)), out_(out), err_(err),
        ws_(cfg_.workspace.empty() ? Workspace::default_path() : std::filesystem::path(cfg_.workspace)) {}

    void open_workspace() {
        ws_.load();
        ws_.apply(reg_);
    }

    int eval(const std::vector<std::string>& texts);
    int sheffer(const std::string& alpha, const std::string& gamma);
    int associated(const std::string& gamma);
    int appell(const std::string& alpha);
    int abel(const std::string& gamma);
    int connect(const std::string& from, const std::string& to);
    int stirling(const std::string& kind, std::optional<unsigned> n);
    int example(const std::string& name);
    int define(const std::string& name, const std::string& moments, const std::string& egf,
               const std::string& cumulants);
    int list();

private:
    ExprPtr parse_text(const std::string& text) {
        try {
            return parse(text);
        } catch (const SyntaxError& e) {
            err_ << "umbra: error: " << e.what() << "\n" << caret_diagram(text, e.pos());
            throw;
        }
    }

    // Requested order, lowered if a user umbra in any of the expressions is too short.
    unsigned order_for(const std::vector<ExprPtr>& es) {
        unsigned m = cfg_.order;
        for (const auto& e : es) m = std::min(m, feasible_order(e, cfg_.order, reg_));
        if (m < cfg_.order)
            err_ << "note: order lowered to " << m << " by the moments available in the workspace\n";
        return m;
    }

    // Named pair or "ALPHA ; GAMMA".
    std::pair<std::string, std::optional<ExprPtr>> pair_parts(const std::string& spec, ExprPtr& gamma) {
        const auto semi = spec.find(';');
        if (semi == std::string::npos) return {spec, std::nullopt};
        ExprPtr alpha = parse_text(spec.substr(0, semi));
        gamma = parse_text(spec.substr(semi + 1));
        return {pretty_print(alpha) + " ; " + pretty_print(gamma), alpha};
    }

    ShefferPair named_pair(const std::string& name, unsigned N) {
        if (name == "powers") return power_pair(N);
        if (name == "factorial") return factorial_pair(N);
        if (name == "exponential") return exponential_pair(N);
        if (name == "bernoulli") return bernoulli_pair(N);
        const std::string pc = "poisson-charlier:";
        if (name.rfind(pc, 0) == 0) return poisson_charlier_pair(Rational::parse(name.substr(pc.size())), N);
        throw InputError("unknown pair '" + name +
                         "' (expected powers, factorial, exponential, bernoulli, poisson-charlier:A or "
                         "\"ALPHA ; GAMMA\")");
    }

    int emit_sequence(const std::string& command, const Json& params, const std::vector<Poly>& polys,
                      unsigned order, bool verified, const std::string& check);

    void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

    Config cfg_;
    std::ostream& out_;
    std::ostream& err_;
    Registry reg_;
    Workspace ws_;
};

int Session::eval(const std::vector<std::string>& texts) {
    std::vector<ExprPtr> asts;
    for (const auto& t : texts) asts.push_back(parse_text(t));

    // Expressions are independent; evaluate them concurrently, report in input order.
    std::vector<std::future<std::pair<unsigned, Umbra>>> jobs;
    for (const auto& e : asts)
        jobs.push_back(std::async(std::launch::async, [this, e] {
            const unsigned n = feasible_order(e, cfg_.order, reg_);
            return std::make_pair(n, evaluate(e, n, reg_));
        }));
    std::vector<std::pair<unsigned, Umbra>> results;
    std::exception_ptr first_error;
    for (auto& j : jobs) {
        try {
            results.push_back(j.get());
        } catch (...) {
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    for (std::size_t i = 0; i < results.size(); ++i)
        if (results[i].first < cfg_.order)
            err_ << "note: " << texts[i] << ": order lowered to " << results[i].first
                 << " by the moments available in the workspace\n";

    if (cfg_.format == "json") {
        Json rs = Json::array();
        for (std::size_t i = 0; i < results.size(); ++i)
            rs.push_back({{"input", texts[i]},
                          {"canonical", pretty_print(asts[i])},
                          {"order", results[i].first},
                          {"moments", to_json(results[i].second.moments())}});
        emit({{"command", "eval"}, {"order", cfg_.order}, {"results", rs}});
    } else if (cfg_.format == "csv") {
        out_ << "expr,n,moment\n";
        for (std::size_t i = 0; i < results.size(); ++i)
            for (unsigned n = 0; n <= results[i].first; ++n)
                out_ << i << "," << n << "," << results[i].second[n] << "\n";
    } else if (cfg_.format == "latex") {
        for (std::size_t i = 0; i < results.size(); ++i) {
            out_ << "% " << pretty_print(asts[i]) << "\n\\begin{align*}\n";
            for (unsigned n = 0; n <= results[i].first; ++n)
                out_ << "m_{" << n << "} &= " << latex_poly(results[i].second[n]) << " \\\\\n";
            out_ << "\\end{align*}\n";
        }
    } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
            out_ << pretty_print(asts[i]) << "\n";
            for (unsigned n = 0; n <= results[i].first; ++n) out_ << "  " << n << ": " << results[i].second[n] << "\n";
        }
    }
    return kOk;
}

int Session::emit_sequence(const std::string& command, const Json& params, const std::vector<Poly>& polys,
                           unsigned order, bool verified, const std::string& check) {
    if (cfg_.format == "json") {
        Json j = {{"command", command}, {"order", order}};
        for (const auto& [k, v] : params.items()) j[k] = v;
        j["sequence"] = to_json(polys);
        j["table"] = table_json(polys, order);
        j["verified"] = verified;
        j["check"] = check;
        emit(j);
    } else if (cfg_.format == "csv") {
        out_ << csv_table(polys, order);
    } else if (cfg_.format == "latex") {
        out_ << latex_table(polys, order);
    } else {
        out_ << command;
        for (const auto& [k, v] : params.items()) out_ << ", " << k << " = " << v.get<std::string>();
        out_ << ", order " << order << "\n";
        for (std::size_t n = 0; n < polys.size(); ++n) out_ << "s_" << n << " = " << polys[n] << "\n";
        out_ << (verified ? "verified: " : "NOT verified: ") << check << "\n";
    }
    if (!verified) throw VerificationFailed{check};
    return kOk;
}

int Session::sheffer(const std::string& alpha_text, const std::string& gamma_text) {
    const ExprPtr a = parse_text(alpha_text), g = parse_text(gamma_text);
    const unsigned N = order_for({a, g});
    const ShefferPair pair(evaluate(a, N, reg_), evaluate(g, N, reg_));
    const PolySequence s = sheffer_moments(pair);
    const bool ok = s == sheffer_moments_umbral(pair);
    return emit_sequence("sheffer", {{"alpha", pretty_print(a)}, {"gamma", pretty_print(g)}}, s.polys, N, ok,
                         "generating function == (-1.alpha + x.u).adj(gamma)");
}

int Session::associated(const std::string& gamma_text) {
    const ExprPtr g = parse_text(gamma_text);
    const unsigned N = order_for({g});
    const Umbra gamma = evaluate(g, N, reg_);
    const PolySequence s = associated_moments(gamma);
    const bool ok = s == associated_moments_umbral(gamma);
    return emit_sequence("associated", {{"gamma", pretty_print(g)}}, s.polys, N, ok,
                         "generating function == x.adj(gamma)");
}

int Session::appell(const std::string& alpha_text) {
    const ExprPtr a = parse_text(alpha_text);
    const unsigned N = order_for({a});
    const Umbra alpha = evaluate(a, N, reg_);
    const PolySequence s = appell_moments(alpha);
    const bool ok = s == sheffer_moments(ShefferPair(alpha, builtin_umbra("chi", N)));
    return emit_sequence("appell", {{"alpha", pretty_print(a)}, }, s.polys, N, ok,
                         "-1.alpha + x.u == Sheffer sequence of (alpha, chi)");
}

int Session::abel(const std::string& gamma_text) {
    const ExprPtr g = parse_text(gamma_text);
    const unsigned N = order_for({g});
    const Umbra gamma = evaluate(g, N, reg_);
    const PolySequence s = abel_polynomials(gamma, N);
    const bool ok = s == associated_moments(derivative_umbra(gamma));
    return emit_sequence("abel", {{"gamma", pretty_print(g)}}, s.polys, N, ok,
                         "x(x - n.gamma)^(n-1) == x.adj(d(gamma))");
}

int Session::connect(const std::string& from_spec, const std::string& to_spec) {
    ExprPtr fg, tg;
    auto [from_desc, fa] = pair_parts(from_spec, fg);
    auto [to_desc, ta] = pair_parts(to_spec, tg);
    std::vector<ExprPtr> es;
    for (const auto& e : {fa, ta})
        if (e) es.push_back(*e);
    if (fg) es.push_back(fg);
    if (tg) es.push_back(tg);
    const unsigned N = order_for(es);
    auto build = [&](const std::string& desc, const std::optional<ExprPtr>& a, const ExprPtr& g) {
        return a ? ShefferPair(evaluate(*a, N, reg_), evaluate(g, N, reg_)) : named_pair(desc, N);
    };
    const ShefferPair from = build(from_desc, fa, fg);
    const ShefferPair to = build(to_desc, ta, tg);
    const ConnectionReport rep = connection_constants_report(from, to);
    const std::string check = "triangular solve == umbral formula";

    if (cfg_.format == "json") {
        emit({{"command", "connect"},
              {"order", N},
              {"from", from_desc},
              {"to", to_desc},
              {"matrix", to_json(rep.solve)},
              {"verified", rep.verified},
              {"check", check}});
    } else if (cfg_.format == "csv") {
        out_ << csv_matrix(rep.solve);
    } else if (cfg_.format == "latex") {
        out_ << latex_matrix(rep.solve);
    } else {
        out_ << "connection constants c(n,k): s_n = sum_k c(n,k) r_k, s from " << from_desc << ", r from "
             << to_desc << ", order " << N << "\n"
             << pretty_matrix(rep.solve) << (rep.verified ? "verified: " : "NOT verified: ") << check << "\n";
    }
    if (!rep.verified) throw VerificationFailed{check};
    return kOk;
}

int Session::stirling(const std::string& kind, std::optional<unsigned> n_opt) {
    const unsigned N = n_opt.value_or(cfg_.order);
    const bool first = kind == "first";
    Matrix tri(N + 1);
    bool ok = true;
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            const Rational v = first ? stirling_first_umbral(n, k) : stirling_second_umbral(n, k);
            ok = ok && v == (first ? stirling_first_classical(n, k) : stirling_second_classical(n, k));
            tri[n].push_back(v);
        }
    const std::string check = "umbral formula == classical recurrence";
    if (cfg_.format == "json") {
        emit({{"command", "stirling"}, {"kind", kind}, {"n", N}, {"matrix", to_json(tri)}, {"verified", ok},
              {"check", check}});
    } else if (cfg_.format == "csv") {
        out_ << csv_matrix(tri);
    } else if (cfg_.format == "latex") {
        out_ << latex_matrix(tri);
    } else {
        out_ << "stirling numbers of the " << kind << " kind" << (first ? " (signed)" : "") << ", n <= " << N
             << "\n"
             << pretty_matrix(tri) << (ok ? "verified: " : "NOT verified: ") << check << "\n";
    }
    if (!ok) throw VerificationFailed{check};
    return kOk;
}

int Session::example(const std::string& name) {
    const unsigned N = cfg_.order;
    RecurrenceReport rep;
    if (name == "bernoulli-diff") rep = recurrence_example_bernoulli(N);
    else if (name == "backward-diff") rep = recurrence_example_backward(N);
    else if (name == "fibonacci") rep = recurrence_example_fibonacci(N);
    else throw InputError("unknown example '" + name + "' (expected bernoulli-diff, backward-diff or fibonacci)");

    if (cfg_.format == "json") {
        Json checks = Json::array(), obs = Json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"identity", c.identity}, {"passed", c.passed}, {"checked_up_to", c.checked_up_to}});
        for (const auto& [k, v] : rep.observations) obs.push_back({{"name", k}, {"value", v}});
        emit({{"command", "example"},
              {"name", name},
              {"order", N},
              {"solution", to_json(rep.solution.polys)},
              {"checks", checks},
              {"observations", obs},
              {"verified", rep.passed()}});
    } else if (cfg_.format == "csv") {
        out_ << csv_table(rep.solution.polys, N);
    } else if (cfg_.format == "latex") {
        out_ << latex_table(rep.solution.polys, N);
    } else {
        out_ << "example " << name << ", order " << N << "\n";
        for (std::size_t n = 0; n < rep.solution.size(); ++n) out_ << "s_" << n << " = " << rep.solution[n] << "\n";
        for (const auto& c : rep.checks)
            out_ << (c.passed ? "[pass] " : "[FAIL] ") << c.identity << " (n <= " << c.checked_up_to << ")\n";
        for (const auto& [k, v] : rep.observations) out_ << "observed " << k << ": " << v << "\n";
    }
    if (!rep.passed()) throw VerificationFailed{"example " + name};
    return kOk;
}

int Session::define(const std::string& name, const std::string& moments, const std::string& egf,
                    const std::string& cumulants) {
    const int given = !moments.empty() + !egf.empty() + !cumulants.empty();
    if (given != 1) throw InputError("define needs exactly one of --moments, --egf, --cumulants");
    std::optional<Umbra> u;
    if (!moments.empty()) {
        u = Umbra::from_rationals(parse_rationals(moments), name);
    } else if (!egf.empty()) {
        // Coefficients of t^n; the moments are n! c_n.
        auto c = parse_rationals(egf);
        for (unsigned n = 0; n < c.size(); ++n) c[n] *= factorial(n);
        u = Umbra::from_rationals(c, name);
    } else {
        // k_1, k_2, ...: the moments are those of exp(sum k_n t^n / n!).
        const auto k = parse_rationals(cumulants);
        std::vector<Poly> h(k.size() + 1);
        for (unsigned n = 0; n < k.size(); ++n) h[n + 1] = k[n];
        u = Umbra::from_egf(egf_exp(TruncatedEGF(h)), name);
    }
    Registry probe;
    probe.define(name, *u); // rejects reserved and built-in names
    ws_.put(name, *u);
    ws_.save();
    if (cfg_.format == "json") {
        emit({{"command", "define"}, {"name", name}, {"order", u->order()}, {"moments", to_json(u->moments())},
              {"workspace", ws_.path().string()}});
    } else {
        out_ << "defined " << name << " (order " << u->order() << "): " << join(u->moments()) << "\n";
    }
    return kOk;
}

int Session::list() {
    const auto user = reg_.user_umbrae();
    if (cfg_.format == "json") {
        Json users = Json::object();
        for (const auto& [name, u] : user) users[name] = {{"order", u.order()}, {"moments", to_json(u.moments())}};
        emit({{"command", "list"}, {"builtin", Registry::builtin_names()}, {"user", users},
              {"workspace", ws_.path().string()}});
        return kOk;
    }
    out_ << "built-in:";
    for (const auto& n : Registry::builtin_names()) out_ << " " << n;
    out_ << "\nworkspace " << ws_.path().string() << ":";
    if (user.empty()) out_ << " (empty)";
    out_ << "\n";
    for (const auto& [name, u] : user)
        out_ << "  " << name << " (order " << u.order() << "): " << join(u.moments()) << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Umbral calculus: moments, Sheffer sequences, connection constants", "umbra"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--order,-N", cfg.order, "number of moments beyond a_0")->check(CLI::Range(0u, 64u));
    app.add_option("--format,-f", cfg.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv", "latex"}));
    app.add_option("--workspace,-w", cfg.workspace, "workspace file (default $UMBRA_WORKSPACE or ./umbrae.json)");

    std::vector<std::string> exprs;
    auto* eval = app.add_subcommand("eval", "moments of one or more umbral expressions");
    eval->add_option("expr", exprs, "expression")->required();

    std::string alpha, gamma;
    auto* sheffer = app.add_subcommand("sheffer", "Sheffer sequence of (alpha, gamma)");
    sheffer->add_option("--alpha", alpha)->required();
    sheffer->add_option("--gamma", gamma)->required();
    auto* associated = app.add_subcommand("associated", "sequence associated to gamma");
    associated->add_option("--gamma", gamma)->required();
    auto* appell = app.add_subcommand("appell", "Appell sequence of alpha");
    appell->add_option("--alpha", alpha)->required();
    auto* abel = app.add_subcommand("abel", "Abel polynomials x(x - n.gamma)^(n-1)");
    abel->add_option("--gamma", gamma)->required();

    std::string from, to;
    auto* connect = app.add_subcommand("connect", "connection constants between two Sheffer sequences");
    connect->add_option("--from", from, "powers, factorial, exponential, bernoulli, poisson-charlier:A or \"ALPHA ; GAMMA\"")
        ->required();
    connect->add_option("--to", to)->required();

    std::string kind;
    std::optional<unsigned> stirling_n;
    auto* stirling = app.add_subcommand("stirling", "Stirling triangle from the umbral formulas");
    stirling->add_option("kind", kind)->required()->check(CLI::IsMember({"first", "second"}));
    stirling->add_option("--n", stirling_n)->check(CLI::Range(0u, 64u));

    std::string example_name;
    auto* example = app.add_subcommand("example", "worked difference-equation examples");
    example->add_option("name", example_name, "bernoulli-diff, backward-diff or fibonacci")->required();

    std::string def_name, moments, egf, cumulants;
    auto* define = app.add_subcommand("define", "store a user umbra in the workspace");
    define->add_option("name", def_name)->required();
    define->add_option("--moments", moments, "1,a1,a2,...");
    define->add_option("--egf", egf, "c0,c1,... (coefficients of t^n)");
    define->add_option("--cumulants", cumulants, "k1,k2,...");

    auto* list = app.add_subcommand("list", "built-in and workspace umbrae");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "umbra: error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        Session s(cfg, out, err);
        s.open_workspace();
        if (eval->parsed()) return s.eval(exprs);
        if (sheffer->parsed()) return s.sheffer(alpha, gamma);
        if (associated->parsed()) return s.associated(gamma);
        if (appell->parsed()) return s.appell(alpha);
        if (abel->parsed()) return s.abel(gamma);
        if (connect->parsed()) return s.connect(from, to);
        if (stirling->parsed()) return s.stirling(kind, stirling_n);
        if (example->parsed()) return s.example(example_name);
        if (define->parsed()) return s.define(def_name, moments, egf, cumulants);
        if (list->parsed()) return s.list();
    } catch (const VerificationFailed& v) {
        err << "umbra: error: cross-check failed: " << v.what << "\n";
        return kMath;
    } catch (const SyntaxError&) {
        return kUsage; // already reported with a caret diagram
    } catch (const std::exception& e) {
        err << "umbra: error: " << e.what() << "\n";
        return code_for(e);
    }
    return kUsage;
}

} // namespace umbral::cli
