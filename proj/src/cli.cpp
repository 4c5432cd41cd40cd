#include "crepant/cli.hpp"

#include "crepant/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace crepant::cli {

namespace {

using io::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

long long parse_integer(const std::string& text, const std::string& context) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw std::invalid_argument("bad integer '" + text + "' in " + context);
    return v;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int pole_diagnostic(const PoleError& e, std::ostream& out, std::ostream& err) {
    json diag = {{"error", "pole"},
                 {"mu", e.index().mu},
                 {"nu", e.index().nu},
                 {"message", e.what()}};
    if (e.entry()) diag["entry"] = {e.entry()->first, e.entry()->second};
    emit(out, diag);
    err << "error: " << e.what() << "\n";
    return usage_or_pole;
}

LinearMap read_map(const std::string& spec, int n) {
    if (spec == "chtd") return chtd_map(n);
    if (spec.rfind("bgp:", 0) == 0) return bgp_map(n, parse_integer(spec.substr(4), "--map"));
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open map file '" + path + "'");
        const json doc = json::parse(in);
        return io::linear_map_from_json(doc.is_object() ? doc.at("map") : doc);
    }
    throw UsageError("unknown map '" + spec + "' (expected bgp:M, chtd or file:PATH)");
}

}  // namespace

std::vector<Cyclotomic> parse_q_spec(const std::string& text, int n) {
    std::vector<std::pair<long long, long long>> roots;
    long long conductor = 4LL * (n + 1);
    for (const std::string& item : split(text, ',')) {
        if (item.rfind("e:", 0) != 0) throw std::invalid_argument("q value '" + item + "' must look like e:j/k");
        const auto slash = item.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("q value '" + item + "' must look like e:j/k");
        const long long j = parse_integer(item.substr(2, slash - 2), "q value '" + item + "'");
        const long long k = parse_integer(item.substr(slash + 1), "q value '" + item + "'");
        if (k < 1) throw std::invalid_argument("q value '" + item + "': k must be >= 1");
        roots.emplace_back(j, k);
        conductor = std::lcm(conductor, k);
    }
    std::vector<Cyclotomic> q;
    for (auto [j, k] : roots) {
        q.push_back(Cyclotomic::root_of_unity(static_cast<std::uint32_t>(k), j).lifted(static_cast<std::uint32_t>(conductor)));
    }
    return q;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks of quantum-corrected products against Chen-Ruan products for A_n singularities"};
    app.require_subcommand(1);
    std::function<int()> action;

    int n = 1;
    std::string format = "json";
    std::string q_text;

    auto* table = app.add_subcommand("table", "Emit a product table (cr, cup or qc)");
    std::string kind;
    bool roundtrip = false;
    table->add_option("kind", kind, "cr, cup or qc")->required()->check(CLI::IsMember({"cr", "cup", "qc"}));
    table->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 64));
    table->add_option("--q", q_text, "evaluation point e:j/k,... (qc only)");
    table->add_option("--format", format, "json, text or latex")->check(CLI::IsMember({"json", "text", "latex"}));
    table->add_flag("--check-roundtrip", roundtrip, "re-read the JSON document and compare");
    table->callback([&] {
        action = [&]() -> int {
            ProductTable t(n, TableKind::chen_ruan);
            if (kind != "qc" && !q_text.empty()) throw UsageError("--q only applies to qc tables");
            if (kind == "cr") {
                t = cr_table(n);
            } else if (kind == "cup") {
                t = cup_table(cartan_build(n));
            } else {
                t = qc_table(cartan_build(n));
                if (!q_text.empty()) {
                    const auto q = parse_q_spec(q_text, n);
                    if (static_cast<int>(q.size()) != n) throw UsageError("--q needs exactly n values");
                    t = qc_eval(t, q);
                }
            }
            const json doc = io::to_json(t);
            if (roundtrip) {
                const ProductTable back = io::table_from_json(json::parse(doc.dump()));
                if (!(back == t)) {
                    err << "round-trip mismatch\n";
                    return verification_failed;
                }
            }
            if (format == "text") {
                out << io::table_text(t);
            } else if (format == "latex") {
                out << io::table_latex(t);
            } else {
                emit(out, doc);
            }
            return ok;
        };
    });

    auto* verify = app.add_subcommand("verify", "Transport check of a linear map at a point q");
    std::string map_spec;
    verify->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 64));
    verify->add_option("--map", map_spec, "bgp:M, chtd or file:PATH")->required();
    verify->add_option("--q", q_text, "evaluation point e:j/k,...")->required();
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->callback([&] {
        action = [&]() -> int {
            const auto q = parse_q_spec(q_text, n);
            if (static_cast<int>(q.size()) != n) throw UsageError("--q needs exactly n values");
            const LinearMap map = read_map(map_spec, n);
            const TransportReport report = transport_check(map, qc_eval(qc_table(cartan_build(n)), q), cr_table(n));
            if (format == "text") {
                out << io::report_text(report);
            } else {
                emit(out, io::to_json(report));
            }
            return report.pass ? ok : verification_failed;
        };
    });

    auto* solve = app.add_subcommand("solve", "Solve the isomorphism problem for n = 1 or 2");
    solve->add_option("--n", n, "rank")->required()->check(CLI::IsMember({1, 2}));
    solve->callback([&] {
        action = [&]() -> int {
            json solutions = json::array();
            if (n == 1) {
                for (const auto& s : solve_a1()) solutions.push_back(io::to_json(s));
            } else {
                for (const auto& s : solve_a2()) solutions.push_back(io::to_json(s));
            }
            emit(out, {{"n", n}, {"solutions", solutions}});
            return solutions.empty() ? verification_failed : ok;
        };
    });

    auto* scan = app.add_subcommand("scan", "Check the root-of-unity map at every primitive (n+1)-th root");
    scan->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 64));
    scan->callback([&] {
        action = [&]() -> int {
            json entries = json::array();
            for (const auto& e : conjecture_scan(n)) entries.push_back(io::to_json(e));
            emit(out, {{"n", n}, {"entries", entries}});
            return ok;
        };
    });

    auto* mckay = app.add_subcommand("mckay", "McKay graph of Z_{n+1} or of an ADE type");
    std::string type;
    bool full = false;
    bool compare = false;
    auto* mckay_n = mckay->add_option("--n", n, "rank of A_n")->check(CLI::Range(1, 64));
    mckay->add_option("--type", type, "ADE label such as D5 or E6")->excludes(mckay_n);
    mckay->add_flag("--full", full, "keep the trivial representation");
    mckay->add_flag("--compare-resolution", compare, "compare with the blow-up resolution graph (A_n only)");
    mckay->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    mckay->callback([&] {
        action = [&]() -> int {
            if (type.empty() && mckay_n->count() == 0) throw UsageError("mckay needs --n or --type");
            const AdeLabel label = type.empty() ? AdeLabel{AdeFamily::A, n} : AdeLabel::parse(type);
            const McKayGraph g = de_mckay(label, !full);
            if (!compare) {
                if (format == "dot") {
                    out << to_graphviz(g);
                } else {
                    emit(out, {{"graph", io::to_json(g)}, {"graphviz", to_graphviz(g)}});
                }
                return ok;
            }
            if (label.family != AdeFamily::A || full) {
                throw UsageError("--compare-resolution needs a reduced A_n graph");
            }
            const ResolutionGraph r = resolve_an(label.rank);
            const bool same = matches(r, g);
            emit(out, {{"mckay", io::to_json(g)}, {"resolution", io::to_json(r)}, {"match", same}});
            return same ? ok : verification_failed;
        };
    });

    auto* resolve = app.add_subcommand("resolve", "Blow-up resolution graph of the A_n singularity");
    resolve->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 64));
    resolve->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    resolve->callback([&] {
        action = [&]() -> int {
            const ResolutionGraph g = resolve_an(n);
            if (format == "dot") {
                out << to_graphviz(g);
            } else {
                emit(out, {{"graph", io::to_json(g)}, {"graphviz", to_graphviz(g)}});
            }
            return ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_or_pole;
    }
    try {
        return action();
    } catch (const PoleError& e) {
        return pole_diagnostic(e, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_or_pole;
    } catch (const json::exception& e) {
        err << "bad JSON input: " << e.what() << "\n";
        return usage_or_pole;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_or_pole;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"crepant"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace crepant::cli
