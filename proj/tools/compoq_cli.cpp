#include "compoq_cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "compoq/asymptotics.hpp"
#include "compoq/compositions.hpp"
#include "compoq/dirichlet.hpp"
#include "compoq/errors.hpp"
#include "compoq/identity_verifier.hpp"
#include "compoq/partitions.hpp"
#include "compoq/partsets.hpp"
#include "compoq/power_series.hpp"
#include "compoq/qgen.hpp"

namespace compoq::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kMaxVerifyN = 10000;
constexpr std::int64_t kMaxTableN = 100000;
constexpr std::int64_t kMaxZetaBound = 10'000'000;
constexpr std::size_t kMaxListed = 100000;

struct Config {
    std::size_t order = kDefaultOrder;
    std::string format;
    std::string output;
    std::string seed_corpus;

    std::string name;
    std::string set = "naturals";
    std::string weight;
    std::string oracle = "both";
    std::string kind = "composition";
    std::string n_list = "500,1000,2000";
    std::optional<std::int64_t> max_n;
    std::int64_t n = 0;
    int k = 0;
    int alpha = 0;
    int beta = 0;
    int sign_a = 1;
    int sign_b = 1;
    std::int64_t z = 1;
    double s = 2.0;
    std::int64_t bound = 1000;
    bool sparse = false;
};

Json coefficient_array(std::span<const Integer> values)
{
    Json array = Json::array();
    for (const auto& v : values) {
        array.push_back(v.get_str());
    }
    return array;
}

Json coefficient_array(const TruncatedSeries& s) { return coefficient_array(s.coeffs()); }

std::size_t order_from_env()
{
    const char* text = std::getenv("COMPOQ_ORDER");
    if (text == nullptr || *text == '\0') {
        return kDefaultOrder;
    }
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != std::string(text).size() || value < 0) {
            throw std::invalid_argument("bad");
        }
        return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        throw InvalidArgument(std::string("COMPOQ_ORDER must be a non-negative integer, got '") + text + "'");
    }
}

void check_order(std::size_t order)
{
    if (order > kMaxOrder) {
        throw Infeasible("order " + std::to_string(order) + " exceeds limit " + std::to_string(kMaxOrder));
    }
}

PartSetParams set_params(const Config& c) { return PartSetParams{c.k, c.alpha, c.beta}; }

// Series by name: the named generating functions plus the sum sides.
Json series_json(const std::string& name, std::size_t order, int k, bool sparse)
{
    check_order(order);
    Json j;
    j["name"] = name;
    j["order"] = order;
    TruncatedSeries coefficients(0);
    TruncatedSeries partner(0);
    std::string partner_key;
    if (name == "psi" || name == "phi" || name == "jacobi-cube" || name == "rr-theta" || name == "r-sum" ||
        name == "s-sum") {
        if (name == "psi") {
            coefficients = theta_sum({1, 3, 1, 1}, order);
        } else if (name == "phi") {
            coefficients = theta_sum({1, 1, 1, 1}, order);
        } else if (name == "jacobi-cube") {
            coefficients = jacobi_cube(order);
        } else if (name == "rr-theta") {
            coefficients = rr_theta_factor(order);
        } else if (name == "r-sum") {
            coefficients = r_sum_side(order);
        } else {
            coefficients = s_sum_side(order);
        }
        partner = series_recip(coefficients);
        partner_key = "reciprocal";
    } else {
        const NamedSeries id = parse_named_series(name);
        ProductSpec spec = named_gf_spec(id, k);
        coefficients = product_expand(spec, order);
        spec.power = -spec.power;
        partner = product_expand(spec, order);
        partner_key = "denominator";
    }
    j["coefficients"] = coefficient_array(coefficients);
    j[partner_key] = coefficient_array(partner);
    if (sparse) {
        j["sparse"] = coefficients.to_sparse_string();
        j[partner_key + "_sparse"] = partner.to_sparse_string();
    }
    return j;
}

Json report_json(const IdentityReport& report)
{
    Json j;
    j["identity"] = to_string(report.id);
    Json params = Json::object();
    for (const auto& [key, value] : report.parameters) {
        params[key] = value;
    }
    j["parameters"] = params;
    j["oracle"] = report.oracle;
    j["passed"] = report.passed();
    j["failing_n"] = report.failing_n();
    Json cells = Json::array();
    for (const auto& cell : report.cells) {
        Json values = Json::object();
        for (const auto& pv : cell.values) {
            values[pv.path] = pv.value.get_str();
        }
        cells.push_back(Json{{"n", cell.n}, {"pass", cell.pass}, {"values", values}});
    }
    j["cells"] = cells;
    return j;
}

Json reports_json(const std::vector<IdentityReport>& reports, const std::string& oracle)
{
    const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    Json summary = Json::array();
    for (const auto& r : reports) {
        if (!r.passed()) {
            Json failed{{"identity", to_string(r.id)}, {"failing_n", r.failing_n()}};
            for (const auto& [key, value] : r.parameters) {
                failed[key] = value;
            }
            summary.push_back(failed);
        }
    }
    Json j;
    j["oracle"] = oracle;
    j["passed"] = passed;
    j["failures"] = summary;
    Json all = Json::array();
    for (const auto& r : reports) {
        all.push_back(report_json(r));
    }
    j["reports"] = all;
    return j;
}

VerifyOptions verify_options(const Config& c)
{
    VerifyOptions o;
    o.max_n = c.max_n.value_or(60);
    if (o.max_n < 0) {
        throw InvalidArgument("--max-n must be >= 0");
    }
    if (o.max_n > kMaxVerifyN) {
        throw Infeasible("--max-n " + std::to_string(o.max_n) + " exceeds limit " + std::to_string(kMaxVerifyN));
    }
    o.oracle = parse_oracle_mode(c.oracle);
    o.k = c.k;
    o.alpha = c.alpha;
    o.beta = c.beta;
    o.sign_a = c.sign_a;
    o.sign_b = c.sign_b;
    return o;
}

std::vector<Integer> table_values(const Config& c, std::int64_t max_n)
{
    const auto order = static_cast<std::size_t>(max_n);
    const auto bound = std::max<std::int64_t>(max_n, 1);
    const std::string& f = c.name;
    if (f == "p") {
        return counts_ps(naturals_set(bound), max_n);
    }
    if (f == "ps") {
        return counts_ps(make_named_set(c.set, set_params(c), bound), max_n);
    }
    if (f == "p-sk") {
        return counts_ps(residue_set_sk(c.k, bound), max_n);
    }
    if (f == "pod") {
        return counts_pod(max_n);
    }
    if (f == "p3") {
        return counts_colored(max_n, 3);
    }
    if (f == "rr") {
        return counts_rr(max_n);
    }
    if (f == "overpartition" || f == "r" || f == "s") {
        const auto s = named_gf(parse_named_series(f), order);
        return {s.coeffs().begin(), s.coeffs().end()};
    }
    if (f == "weighted") {
        if (c.weight.empty()) {
            throw InvalidArgument("table weighted needs --weight");
        }
        const PartSet parts = make_named_set(c.set, set_params(c), bound);
        return weighted_sums(parts, stat_weight(parse_stat_kind(c.weight), c.k, c.z), max_n);
    }
    throw InvalidArgument("unknown table function '" + f +
                          "' (expected p, ps, p-sk, pod, overpartition, p3, r, s, rr, weighted)");
}

void write_csv_table(std::ostream& os, const std::vector<Integer>& values)
{
    os << "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) {
        os << n << ',' << values[n].get_str() << '\n';
    }
}

std::vector<std::int64_t> parse_n_list(const std::string& text)
{
    std::vector<std::int64_t> ns;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument("trailing");
            }
            ns.push_back(v);
        } catch (const std::exception&) {
            throw InvalidArgument("--n expects a comma-separated list of integers, got '" + text + "'");
        }
    }
    if (ns.empty()) {
        throw InvalidArgument("--n list is empty");
    }
    return ns;
}

void dump_corpus(const std::filesystem::path& dir, std::size_t order)
{
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& file, const Json& j) {
        std::ofstream f(dir / file);
        if (!f) {
            throw InvalidArgument("cannot write " + (dir / file).string());
        }
        f << j.dump(2) << '\n';
    };
    for (const auto id : all_named_series()) {
        const int k = id == NamedSeries::p_sk ? 5 : 0;
        write("series_" + to_string(id) + ".json", series_json(to_string(id), order, k, false));
    }
    for (const std::string name : {"psi", "phi", "jacobi-cube", "rr-theta", "r-sum", "s-sum"}) {
        write("series_" + name + ".json", series_json(name, order, 0, false));
    }
    VerifyOptions options;
    write("verify_all.json", reports_json(verify_all(options), to_string(options.oracle)));
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw InvalidArgument("cannot open output file '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void error_json(std::ostream& err, const std::string& kind, const std::string& message, const std::string& usage = {})
{
    Json j{{"error", kind}, {"message", message}};
    if (!usage.empty()) {
        j["usage"] = usage;
    }
    err << j.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Exact composition-sum series, identity checks and tables", "compoq"};
    std::optional<std::size_t> order_flag;
    app.add_option("--order", order_flag, "Truncation order (default $COMPOQ_ORDER or 200)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", c.output, "Write data here instead of stdout");
    app.add_option("--seed-corpus", c.seed_corpus, "Dump golden series and verification files into this directory");
    app.require_subcommand(0, 1);
    app.fallthrough();

    auto add_set_params = [&](CLI::App* sub) {
        sub->add_option("--k", c.k, "Polygonal parameter k");
        sub->add_option("--alpha", c.alpha, "alpha for the general (alpha,beta) sets");
        sub->add_option("--beta", c.beta, "beta for the general (alpha,beta) sets");
    };

    auto* series = app.add_subcommand("series", "Print a named series");
    series->add_option("name", c.name, "Series name")->required();
    series->add_option("--k", c.k, "k for p-sk");
    series->add_flag("--sparse", c.sparse, "Also print sparse text");

    auto* verify = app.add_subcommand("verify", "Check an identity on every n up to --max-n");
    verify->add_option("identity", c.name, "Identity id or 'all'")->required();
    add_set_params(verify);
    verify->add_option("--max-n", c.max_n, "Largest n checked (default 60)");
    verify->add_option("--oracle", c.oracle, "Computation paths")->check(CLI::IsMember({"brute", "dp", "both"}));
    verify->add_option("--sign-a", c.sign_a, "Sign of a (triple-product)");
    verify->add_option("--sign-b", c.sign_b, "Sign of b (triple-product)");

    auto* table = app.add_subcommand("table", "Tabulate a counting function");
    table->add_option("function", c.name, "p, ps, p-sk, pod, overpartition, p3, r, s, rr, weighted")->required();
    table->add_option("--max-n", c.max_n, "Largest n")->required();
    table->add_option("--set", c.set, "Part set for ps / weighted");
    table->add_option("--weight", c.weight, "Weight kind for weighted");
    table->add_option("--z", c.z, "z for the length-z weight");
    add_set_params(table);

    auto* compositions = app.add_subcommand("compositions", "Enumerate or weigh compositions of n");
    compositions->add_option("--set", c.set, "Part set name")->required();
    compositions->add_option("--n", c.n, "Size")->required();
    compositions->add_option("--weight", c.weight, "Weight kind; omit to list compositions");
    compositions->add_option("--z", c.z, "z for the length-z weight");
    compositions->add_option("--bound", c.bound, "Part set bound (default n)");
    add_set_params(compositions);

    auto* mu = app.add_subcommand("mu", "Moebius function two ways");
    mu->add_option("--max-n", c.max_n, "Largest n")->required();

    auto* zeta = app.add_subcommand("zeta", "Composition zeta closed form vs partial sum");
    zeta->add_option("--set", c.set, "Part set T*")->required();
    zeta->add_option("--z", c.z, "Weight per part");
    zeta->add_option("--s", c.s, "Real exponent s > 1")->required();
    zeta->add_option("--bound", c.bound, "Norm bound B")->required();
    zeta->add_option("--kind", c.kind, "composition or partition")
        ->check(CLI::IsMember({"composition", "partition"}));
    add_set_params(zeta);

    auto* asymptotic = app.add_subcommand("asymptotic", "Exact/asymptotic ratio report");
    asymptotic->add_option("id", c.name, "p-sk, p3, r, s, rr")->required();
    asymptotic->add_option("--n", c.n_list, "Comma-separated n values");
    asymptotic->add_option("--k", c.k, "k for p-sk");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        error_json(err, "usage", e.what(), app.help());
        return kExitUsage;
    }

    try {
        c.order = order_flag ? *order_flag : order_from_env();
        check_order(c.order);
        if (app.get_subcommands().empty() && c.seed_corpus.empty()) {
            error_json(err, "usage", "a subcommand is required", app.help());
            return kExitUsage;
        }
        if (!c.seed_corpus.empty()) {
            dump_corpus(c.seed_corpus, c.order);
        }
        if (app.get_subcommands().empty()) {
            return kExitPass;
        }

        Output sink(c.output, out);
        std::ostream& os = *sink;

        if (*series) {
            os << series_json(c.name, c.order, c.k, c.sparse).dump(2) << '\n';
            return kExitPass;
        }
        if (*verify) {
            const VerifyOptions options = verify_options(c);
            std::vector<IdentityReport> reports;
            if (c.name == "all") {
                reports = verify_all(options);
            } else {
                reports.push_back(compoq::verify(parse_identity_id(c.name), options));
            }
            const Json j = reports_json(reports, c.oracle);
            os << j.dump(2) << '\n';
            return j["passed"].get<bool>() ? kExitPass : kExitFailure;
        }
        if (*table) {
            const std::int64_t max_n = *c.max_n;
            if (max_n < 0) {
                throw InvalidArgument("--max-n must be >= 0");
            }
            if (max_n > kMaxTableN) {
                throw Infeasible("--max-n " + std::to_string(max_n) + " exceeds limit " + std::to_string(kMaxTableN));
            }
            const auto values = table_values(c, max_n);
            if (c.format == "json") {
                os << Json{{"function", c.name}, {"values", coefficient_array(values)}}.dump(2) << '\n';
            } else {
                write_csv_table(os, values);
            }
            return kExitPass;
        }
        if (*compositions) {
            if (c.n < 0) {
                throw InvalidArgument("--n must be >= 0");
            }
            const std::int64_t bound = compositions->count("--bound") ? c.bound : std::max<std::int64_t>(c.n, 1);
            const PartSet parts = make_named_set(c.set, set_params(c), bound);
            Json j{{"set", parts.name()}, {"n", c.n}};
            if (c.weight.empty()) {
                const Integer count = weighted_sum(parts, WeightRule::constant(1), c.n);
                if (count > kMaxListed) {
                    throw Infeasible(count.get_str() + " compositions exceed the listing limit of " +
                                     std::to_string(kMaxListed) + "; pass --weight for a weighted sum");
                }
                j["count"] = count.get_str();
                Json list = Json::array();
                for_each_composition(parts, c.n, [&](std::span<const std::int64_t> ps) {
                    list.push_back(std::vector<std::int64_t>(ps.begin(), ps.end()));
                });
                j["compositions"] = list;
            } else {
                const WeightRule rule = stat_weight(parse_stat_kind(c.weight), c.k, c.z);
                j["weight"] = rule.description();
                j["value"] = weighted_sum(parts, rule, c.n).get_str();
            }
            os << j.dump(2) << '\n';
            return kExitPass;
        }
        if (*mu) {
            const std::int64_t max_n = *c.max_n;
            if (max_n < 1) {
                throw InvalidArgument("--max-n must be >= 1");
            }
            SignedFactorizationCounter counter;
            bool agree = true;
            Json rows = Json::array();
            if (c.format != "json") {
                os << "n,mu_compositions,mu_factorization,agree\n";
            }
            for (std::int64_t n = 1; n <= max_n; ++n) {
                const Integer via_compositions = counter(n);
                const int via_factorization = mobius(n);
                const bool ok = via_compositions == via_factorization;
                agree = agree && ok;
                if (c.format == "json") {
                    rows.push_back(Json{{"n", n},
                                        {"mu_compositions", via_compositions.get_si()},
                                        {"mu_factorization", via_factorization},
                                        {"agree", ok}});
                } else {
                    os << n << ',' << via_compositions.get_str() << ',' << via_factorization << ','
                       << (ok ? "ok" : "MISMATCH") << '\n';
                }
            }
            if (c.format == "json") {
                os << Json{{"agree", agree}, {"rows", rows}}.dump(2) << '\n';
            }
            return agree ? kExitPass : kExitFailure;
        }
        if (*zeta) {
            if (c.bound < 1) {
                throw InvalidArgument("--bound must be >= 1");
            }
            if (c.bound > kMaxZetaBound) {
                throw Infeasible("--bound " + std::to_string(c.bound) + " exceeds limit " +
                                 std::to_string(kMaxZetaBound));
            }
            const PartSet parts = make_named_set(c.set, set_params(c), c.bound);
            const ZetaEvaluation e = c.kind == "partition" ? partition_zeta_value(parts, c.s, c.bound)
                                                           : comp_zeta_value(parts, Integer(std::to_string(c.z)), c.s, c.bound);
            Json j{{"set", parts.name()},
                   {"kind", c.kind},
                   {"s", c.s},
                   {"bound", c.bound},
                   {"closed_form", e.closed_form},
                   {"partial_sum", e.partial_sum},
                   {"difference", e.difference},
                   {"tail_bound", e.tail_bound},
                   {"set_tail", e.set_tail},
                   {"rankin_exponent", e.rankin_exponent},
                   {"within_bound", e.within_bound()}};
            if (c.kind == "composition") {
                j["z"] = c.z;
            }
            os << j.dump(2) << '\n';
            return e.within_bound() ? kExitPass : kExitFailure;
        }
        if (*asymptotic) {
            const AsymptoticId id = parse_asymptotic_id(c.name);
            const auto ns = parse_n_list(c.n_list);
            const auto rows = ratio_report(id, ns, c.k);
            if (c.format == "json") {
                Json list = Json::array();
                for (const auto& r : rows) {
                    list.push_back(Json{{"n", r.n},
                                        {"exact", r.exact.get_str()},
                                        {"asymptotic", format_significant(r.asymptotic)},
                                        {"ratio", format_significant(r.ratio)}});
                }
                os << Json{{"id", c.name}, {"rows", list}}.dump(2) << '\n';
            } else {
                os << "n,exact,asymptotic,ratio\n";
                for (const auto& r : rows) {
                    os << r.n << ',' << r.exact.get_str() << ',' << format_significant(r.asymptotic) << ','
                       << format_significant(r.ratio) << '\n';
                }
            }
            return kExitPass;
        }
    } catch (const Infeasible& e) {
        error_json(err, "infeasible", e.what());
        return kExitInfeasible;
    } catch (const Divergent& e) {
        error_json(err, "divergent", e.what());
        return kExitUsage;
    } catch (const NotInvertible& e) {
        error_json(err, "not_invertible", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        error_json(err, "invalid_argument", e.what());
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        error_json(err, "invalid_argument", e.what());
        return kExitUsage;
    }
    error_json(err, "usage", "unknown subcommand", app.help());
    return kExitUsage;
}

} // namespace compoq::cli
