#include "cli.hpp"

#include "qseries/errors.hpp"
#include "qseries/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace qseries::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv };

Json laurent_json(const LaurentPoly& p)
{
    Json obj = Json::object();
    for (const auto& [e, c] : p.terms())
        obj[std::to_string(e)] = to_decimal(c);
    return obj;
}

void emit_json(std::ostream& out, const std::string& command, Json parameters, Json payload)
{
    Json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = command;
    doc["parameters"] = std::move(parameters);
    doc["payload"] = std::move(payload);
    out << doc.dump(2) << "\n";
}

struct TablesArgs {
    std::string kind;
    int n_max = 0;
    std::optional<int> modulo;
};

int cmd_tables(const TablesArgs& a, Format fmt, std::ostream& out)
{
    Json params;
    params["kind"] = a.kind;
    params["n_max"] = a.n_max;
    if (a.modulo)
        params["modulo"] = *a.modulo;

    if (a.n_max < 0)
        throw UsageError("--n-max must be >= 0");
    if (a.kind == "p") {
        if (a.modulo)
            throw UsageError("--modulo applies to crank and rank tables only");
        const auto p = partition_numbers(a.n_max);
        if (fmt == Format::csv) {
            out << "n,p\n";
            for (int n = 0; n <= a.n_max; ++n)
                out << n << "," << to_decimal(p[n]) << "\n";
            return kExitPass;
        }
        Json rows = Json::array();
        for (int n = 0; n <= a.n_max; ++n)
            rows.push_back({{"n", n}, {"p", to_decimal(p[n])}});
        emit_json(out, "tables", params, {{"rows", rows}});
        return kExitPass;
    }

    if (a.n_max > kEnumerationCap)
        throw UsageError("--n-max " + std::to_string(a.n_max) + " exceeds the enumeration cap " +
                         std::to_string(kEnumerationCap));
    if (a.modulo && *a.modulo < 1)
        throw UsageError("--modulo must be >= 1");
    const Statistic kind = a.kind == "rank" ? Statistic::rank : Statistic::crank;
    const StatTable table = build_stat_table(kind, a.n_max);

    if (a.modulo) {
        const int t = *a.modulo;
        if (fmt == Format::csv) {
            out << "n,k,count\n";
            for (int n = 0; n <= a.n_max; ++n)
                for (int k = 0; k < t; ++k)
                    out << n << "," << k << "," << to_decimal(table.count_mod(k, t, n)) << "\n";
            return kExitPass;
        }
        Json rows = Json::array();
        for (int n = 0; n <= a.n_max; ++n) {
            Json classes = Json::array();
            for (int k = 0; k < t; ++k)
                classes.push_back(to_decimal(table.count_mod(k, t, n)));
            rows.push_back({{"n", n}, {"classes", classes}});
        }
        emit_json(out, "tables", params, {{"rows", rows}});
        return kExitPass;
    }

    if (fmt == Format::csv) {
        out << "n,m,count\n";
        for (int n = 0; n <= a.n_max; ++n)
            for (const auto& [m, c] : table.row(n).terms())
                out << n << "," << m << "," << to_decimal(c) << "\n";
        return kExitPass;
    }
    Json rows = Json::array();
    for (int n = 0; n <= a.n_max; ++n)
        rows.push_back({{"n", n}, {"counts", laurent_json(table.row(n))}});
    emit_json(out, "tables", params, {{"rows", rows}});
    return kExitPass;
}

struct VerifyArgs {
    std::string identity;
    std::optional<int> order;
    std::optional<int> n_root;
    std::optional<int> perturb_power;
};

using Perturb = std::optional<RhsPerturbation>;

struct IdentitySpec {
    int default_order;
    // Largest enumerated weight for a given order, or -1 when no enumeration is involved.
    int (*enumerated_weight)(int order);
    bool perturbable;
    std::vector<VerificationReport> (*run)(int order, std::optional<int> n_root, const Perturb& perturb);
};

int no_enumeration(int) { return -1; }
int same_weight(int order) { return order; }

template <int T, int R>
int equidist_weight(int order)
{
    return T * order + R;
}

template <int T, int R>
std::vector<VerificationReport> run_congruence(int order, std::optional<int>, const Perturb&)
{
    return {verify_congruence(T, R, order)};
}

template <Statistic S, int T, int R>
std::vector<VerificationReport> run_equidist(int order, std::optional<int>, const Perturb&)
{
    return {verify_equidistribution(S, T, R, order)};
}

const std::map<std::string, IdentitySpec>& identity_registry()
{
    static const std::map<std::string, IdentitySpec> registry{
        {"crank-gf", {40, same_weight, false,
                      [](int n, std::optional<int>, const Perturb&) { return std::vector{verify_crank_gf(n)}; }}},
        {"rank-gf", {40, same_weight, false,
                     [](int n, std::optional<int>, const Perturb&) { return std::vector{verify_rank_gf(n)}; }}},
        {"congruence-5-4", {20, no_enumeration, false, run_congruence<5, 4>}},
        {"congruence-7-5", {15, no_enumeration, false, run_congruence<7, 5>}},
        {"congruence-11-6", {10, no_enumeration, false, run_congruence<11, 6>}},
        {"equidist-crank-5", {8, equidist_weight<5, 4>, false, run_equidist<Statistic::crank, 5, 4>}},
        {"equidist-crank-7", {5, equidist_weight<7, 5>, false, run_equidist<Statistic::crank, 7, 5>}},
        {"equidist-crank-11", {3, equidist_weight<11, 6>, false, run_equidist<Statistic::crank, 11, 6>}},
        {"equidist-rank-5", {8, equidist_weight<5, 4>, false, run_equidist<Statistic::rank, 5, 4>}},
        {"equidist-rank-7", {5, equidist_weight<7, 5>, false, run_equidist<Statistic::rank, 7, 5>}},
        {"dissection-2", {80, no_enumeration, true,
                          [](int n, std::optional<int>, const Perturb& p) {
                              return std::vector{verify_2_dissection(n, p)};
                          }}},
        {"dissection-3", {81, no_enumeration, true,
                          [](int n, std::optional<int>, const Perturb& p) {
                              return std::vector{verify_3_dissection(n, p)};
                          }}},
        {"dissection-5", {100, no_enumeration, true,
                          [](int n, std::optional<int> root, const Perturb& p) {
                              std::vector<VerificationReport> out;
                              for (int r = 1; r <= 4; ++r)
                                  if (!root || *root == r)
                                      out.push_back(verify_5_dissection(n, r, p));
                              return out;
                          }}},
        {"component-4-vanishing", {100, no_enumeration, false,
                                   [](int n, std::optional<int>, const Perturb&) {
                                       return std::vector{verify_component4_vanishing(n)};
                                   }}},
    };
    return registry;
}

Json report_json(const VerificationReport& r)
{
    Json j;
    j["identity"] = r.identity;
    j["order"] = r.order;
    j["status"] = r.passed() ? "pass" : "fail";
    if (r.witness) {
        j["witness"] = {{"power", r.witness->power},
                        {"expected", r.witness->expected},
                        {"actual", r.witness->actual},
                        {"ring", r.witness->ring}};
    }
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

int cmd_verify(const VerifyArgs& a, Format fmt, std::ostream& out, std::ostream& err)
{
    const auto& registry = identity_registry();
    const auto it = registry.find(a.identity);
    if (it == registry.end()) {
        if (a.identity == "equidist-rank-11")
            throw UsageError("equidist-rank-11 is not supported: the rank does not split p(11n+6) into 11 "
                             "equal classes (use equidist-crank-11)");
        throw UsageError("unknown identity '" + a.identity + "'");
    }
    const IdentitySpec& spec = it->second;
    if (a.n_root && a.identity != "dissection-5")
        throw UsageError("--n-root applies to dissection-5 only");
    if (a.n_root && (*a.n_root < 1 || *a.n_root > 4))
        throw UsageError("--n-root must be in 1..4");
    const int order = a.order.value_or(spec.default_order);
    if (order < 0)
        throw UsageError("--order must be >= 0");
    if (spec.enumerated_weight(order) > kEnumerationCap)
        throw UsageError("order " + std::to_string(order) + " needs enumeration beyond the cap " +
                         std::to_string(kEnumerationCap));

    Perturb perturb;
    if (a.perturb_power) {
        if (!spec.perturbable)
            throw UsageError("--perturb-rhs applies to the dissection identities only");
        perturb = RhsPerturbation{*a.perturb_power, 1L};
    }

    const auto reports = spec.run(order, a.n_root, perturb);
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        err << r.identity << " order=" << r.order << " " << (r.passed() ? "pass" : "fail") << " in "
            << std::fixed << std::setprecision(3) << std::chrono::duration<double>(r.elapsed).count()
            << "s\n";
    }

    if (fmt == Format::csv) {
        out << "identity,order,status,power,expected,actual,ring\n";
        for (const auto& r : reports) {
            out << csv_field(r.identity) << "," << r.order << "," << (r.passed() ? "pass" : "fail") << ",";
            if (r.witness)
                out << r.witness->power << "," << csv_field(r.witness->expected) << ","
                    << csv_field(r.witness->actual) << "," << csv_field(r.witness->ring);
            else
                out << ",,,";
            out << "\n";
        }
    } else {
        Json params;
        params["identity"] = a.identity;
        params["order"] = order;
        if (a.n_root)
            params["n_root"] = *a.n_root;
        if (a.perturb_power)
            params["perturb_rhs"] = *a.perturb_power;
        Json list = Json::array();
        for (const auto& r : reports)
            list.push_back(report_json(r));
        emit_json(out, "verify", params, {{"status", all_pass ? "pass" : "fail"}, {"reports", list}});
    }
    return all_pass ? kExitPass : kExitFail;
}

struct DissectArgs {
    std::string series;
    int m = 1;
    int order = 0;
};

int cmd_dissect(const DissectArgs& a, Format fmt, std::ostream& out)
{
    if (a.m < 1)
        throw UsageError("--m must be >= 1");
    if (a.order < 0)
        throw UsageError("--order must be >= 0");
    Json params{{"series", a.series}, {"m", a.m}, {"order", a.order}};

    Json components = Json::array();
    if (a.series == "crank-gf") {
        const auto parts = dissect(crank_gf(a.order), a.m);
        if (fmt == Format::csv)
            out << "k,j,exponent,coefficient\n";
        for (int k = 0; k < a.m; ++k) {
            Json coeffs = Json::array();
            for (int j = 0; j <= parts[k].order(); ++j) {
                if (fmt == Format::csv)
                    for (const auto& [e, c] : parts[k][j].terms())
                        out << k << "," << j << "," << e << "," << to_decimal(c) << "\n";
                coeffs.push_back(laurent_json(parts[k][j]));
            }
            components.push_back({{"k", k}, {"order", parts[k].order()}, {"coefficients", coeffs}});
        }
    } else if (a.series == "partition-gf" || a.series == "euler") {
        const IntSeries s = a.series == "euler" ? euler_product(a.order) : partition_gf(a.order);
        const auto parts = dissect(s, a.m);
        if (fmt == Format::csv)
            out << "k,j,coefficient\n";
        for (int k = 0; k < a.m; ++k) {
            Json coeffs = Json::array();
            for (int j = 0; j <= parts[k].order(); ++j) {
                if (fmt == Format::csv)
                    out << k << "," << j << "," << to_decimal(parts[k][j]) << "\n";
                coeffs.push_back(to_decimal(parts[k][j]));
            }
            components.push_back({{"k", k}, {"order", parts[k].order()}, {"coefficients", coeffs}});
        }
    } else {
        throw UsageError("unknown series '" + a.series + "'");
    }
    if (fmt == Format::json)
        emit_json(out, "dissect", params, {{"components", components}});
    return kExitPass;
}

int cmd_coeffs(int count, Format fmt, std::ostream& out)
{
    if (count < 1)
        throw UsageError("--count must be >= 1");
    const auto coeffs = fa_coefficients(count - 1);
    if (fmt == Format::csv) {
        out << "n,exponent,coefficient\n";
        for (int n = 0; n < count; ++n)
            for (const auto& [e, c] : coeffs[n].terms())
                out << n << "," << e << "," << to_decimal(c) << "\n";
        return kExitPass;
    }
    Json rows = Json::array();
    for (int n = 0; n < count; ++n)
        rows.push_back({{"n", n}, {"terms", laurent_json(coeffs[n])}});
    emit_json(out, "coeffs", {{"count", count}}, {{"coefficients", rows}});
    return kExitPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series, crank and rank computations"};
    app.name("qseries");
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};
    Format fmt = Format::json;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "Output format (json|csv)")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    TablesArgs tables;
    auto* t = app.add_subcommand("tables", "p(n) column or crank/rank count tables");
    t->add_option("--kind", tables.kind, "p, crank or rank")->required()->check(CLI::IsMember({"p", "crank", "rank"}));
    t->add_option("--n-max", tables.n_max, "Largest n")->required();
    t->add_option("--modulo", tables.modulo, "Fold the statistic modulo t");
    add_format(t);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run an identity verification");
    v->add_option("--identity", verify.identity, "Identity name")->required();
    v->add_option("--order", verify.order, "Truncation order (or n range for congruences)");
    v->add_option("--n-root", verify.n_root, "Root of unity exponent for dissection-5 (1..4)");
    v->add_option("--perturb-rhs", verify.perturb_power,
                  "Add 1 to the right-hand-side coefficient of q^POWER (self-test of a dissection check)");
    add_format(v);

    DissectArgs dis;
    auto* d = app.add_subcommand("dissect", "m-dissection of a named series");
    d->add_option("--series", dis.series, "partition-gf, crank-gf or euler")->required();
    d->add_option("--m", dis.m, "Dissection modulus")->required();
    d->add_option("--order", dis.order, "Truncation order")->required();
    add_format(d);

    int count = 21;
    auto* c = app.add_subcommand("coeffs", "Leading coefficients of the crank generating function");
    c->add_option("--count", count, "Number of coefficients")->capture_default_str();
    add_format(c);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (t->parsed())
            return cmd_tables(tables, fmt, out);
        if (v->parsed())
            return cmd_verify(verify, fmt, out, err);
        if (d->parsed())
            return cmd_dissect(dis, fmt, out);
        return cmd_coeffs(count, fmt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace qseries::cli
