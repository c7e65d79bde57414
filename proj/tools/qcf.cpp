/* Command-line front end: verify the identity catalog, expand catalog
 * fractions as exact series, query partition counts, and evaluate the
 * numeric fractions. JSON on stdout by default; exit code 0 when every
 * requested check passes, 1 when any fails or errors, 2 on usage errors. */

#include "qcf/contfrac.hpp"
#include "qcf/identities.hpp"
#include "qcf/partitions.hpp"
#include "qcf/realeval.hpp"
#include "qcf/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

/* "1..5" or "1,2,4,8" or a mix of both list styles. */
std::vector<int> parse_parts(const std::string& text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                parts.push_back(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dots));
                const int hi = std::stoi(item.substr(dots + 2));
                for (int p = lo; p <= hi; ++p) parts.push_back(p);
            }
        } catch (const std::exception&) {
            throw CLI::ValidationError("--parts", "malformed part list '" + text + "'");
        }
        pos = comma + 1;
    }
    return parts;
}

int run_verify(const std::string& id, bool all, int order, std::uint64_t seed, int instances,
               bool parallel, bool timings, const std::string& corrupt_id, bool plain)
{
    qcf::identities::VerifyOptions opt;
    opt.order = order;
    opt.seed = seed;
    opt.instances = instances;

    std::vector<qcf::identities::IdentityReport> reports;
    if (all) {
        std::set<std::string> corrupt;
        if (!corrupt_id.empty()) {
            qcf::identities::find_case(corrupt_id);
            corrupt.insert(corrupt_id);
        }
        reports = qcf::identities::verify_all(opt, parallel, corrupt);
    } else {
        opt.corrupt = !corrupt_id.empty();
        if (opt.corrupt && corrupt_id != id)
            throw CLI::ValidationError("--selftest-corrupt",
                                       "single-id verify can only corrupt that id");
        reports.push_back(qcf::identities::verify_identity(id, opt));
    }

    bool all_pass = true;
    if (plain) {
        for (const auto& r : reports) {
            std::printf("%-22s %-5s order=%d depth=%d", r.id.c_str(),
                        qcf::identities::status_name(r.status), r.order, r.depth);
            if (timings) std::printf(" elapsed_ms=%lld", static_cast<long long>(r.elapsed_ms));
            if (r.first_mismatch)
                std::printf(" first_mismatch q=%d a^%d b^%d lhs=%s rhs=%s", r.first_mismatch->q,
                            r.first_mismatch->exps.ea, r.first_mismatch->exps.eb,
                            qcf::fraction_string(r.first_mismatch->lhs).c_str(),
                            qcf::fraction_string(r.first_mismatch->rhs).c_str());
            if (!r.message.empty()) std::printf(" message=%s", r.message.c_str());
            std::printf("\n");
            all_pass = all_pass && r.status == qcf::identities::Status::pass;
        }
    } else {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(qcf::report_to_json(r, timings));
            all_pass = all_pass && r.status == qcf::identities::Status::pass;
        }
        std::cout << arr.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_expand(const std::string& id, int order, int depth, const std::string& a_text,
               const std::string& b_text, const std::string& c_text)
{
    qcf::CFParams params;
    auto assign = [order](const std::string& text) -> std::optional<qcf::QSeries> {
        if (text.empty()) return std::nullopt;
        return qcf::QSeries::constant(order, qcf::parse_rational(text));
    };
    params.a = assign(a_text);
    params.b = assign(b_text);
    params.c = assign(c_text);

    qcf::QSeries series(order);
    int depth_used = 0;
    if (id == "THM_2_1" || id == "THM_2_2") {
        /* default substitution a_i = q^i; evaluated through the Euler form
         * of the telescoped sum, which keeps denominators invertible */
        qcf::identities::BuildCtx ctx{order, &depth_used};
        series = qcf::identities::builders::corollary_cf_series(qcf::exps_range(order),
                                                                id == "THM_2_2", ctx);
    } else if (id == "THREE_PARAM" && !params.a && !params.b) {
        throw CLI::ValidationError(
            "--id", "THREE_PARAM needs --a or --b fixed (e.g. --a 0) to admit a series expansion");
    } else {
        const int guard = depth > 0 ? depth : qcf::default_depth_guard(order);
        qcf::CFSpec cf = qcf::build_catalog_cf(id, params, guard + 1, order);
        series = qcf::eval_series(cf, guard, &depth_used);
    }
    json out;
    out["id"] = id;
    out["order"] = order;
    out["depth"] = depth_used;
    out["series"] = qcf::series_to_json(series);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_partitions(int k, const std::string& parts_text, bool distinct, bool enumerate, int cap)
{
    qcf::partitions::PartSpec spec{parse_parts(parts_text), distinct};
    json out;
    out["k"] = k;
    out["count"] = qcf::partitions::count_partitions(k, spec);
    if (enumerate) {
        json list = json::array();
        for (const auto& p : qcf::partitions::enumerate_partitions(k, spec, cap)) list.push_back(p);
        out["partitions"] = std::move(list);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_colored(const std::string& variant_text, int n, int i, int j, bool table, int max_n,
                int max_i, int max_j, const std::string& format)
{
    const auto variant = qcf::partitions::variant_from_name(variant_text);
    if (table) {
        if (format == "csv") {
            std::cout << qcf::partitions::colored_csv(variant, max_n, max_i, max_j);
        } else {
            json rows = json::array();
            for (int nn = 0; nn <= max_n; ++nn)
                for (int ii = 0; ii <= max_i; ++ii)
                    for (int jj = 0; jj <= max_j; ++jj)
                        rows.push_back({{"n", nn},
                                        {"i", ii},
                                        {"j", jj},
                                        {"variant", variant_text},
                                        {"count", qcf::partitions::count_colored(variant, nn, ii, jj)}});
            std::cout << rows.dump() << "\n";
        }
        return 0;
    }
    json out{{"variant", variant_text},
             {"n", n},
             {"i", i},
             {"j", j},
             {"count", qcf::partitions::count_colored(variant, n, i, j)}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_real(const std::string& constant, int depth, double z, const std::string& singular_case,
             bool plain)
{
    using namespace qcf::realeval;
    json out;
    if (!singular_case.empty() || constant == "rr") {
        SingularCase which = SingularCase::e_2pi;
        if (singular_case == "e-pi")
            which = SingularCase::e_pi;
        else if (singular_case == "e-2pi" || singular_case.empty())
            which = SingularCase::e_2pi;
        else if (singular_case == "e-4pi")
            which = SingularCase::e_4pi;
        else
            throw CLI::ValidationError("--case", "expected e-pi, e-2pi or e-4pi");
        const SingularCheck chk = singular_value_check(which, depth > 0 ? depth : 200);
        out = {{"case", singular_case_name(which)},
               {"cf", chk.cf_value},
               {"product", chk.product_value},
               {"closed_form", chk.closed_form_value},
               {"max_delta", chk.max_delta}};
        if (plain)
            std::printf("%s: cf=%.15g product=%.15g closed_form=%.15g max_delta=%.3g\n",
                        singular_case_name(which), chk.cf_value, chk.product_value,
                        chk.closed_form_value, chk.max_delta);
    } else {
        double value = 0.0;
        if (constant == "pi") {
            value = eval_cf_real(pi_cf(depth), depth);
        } else if (constant == "exp") {
            value = eval_cf_real(exp_cf(z, depth), depth);
        } else if (constant == "log") {
            value = eval_cf_real(log_cf(z, depth), depth);
        } else {
            throw CLI::ValidationError("--const", "expected pi, exp, log or rr");
        }
        out = {{"const", constant}, {"depth", depth}, {"value", value}};
        if (constant != "pi") out["z"] = z;
        if (plain) std::printf("%s(depth=%d) = %.15g\n", constant.c_str(), depth, value);
    }
    if (!plain) std::cout << out.dump() << "\n";
    return 0;
}

int run_list(bool plain)
{
    if (plain) {
        for (const auto& [id, desc, ref] : qcf::identities::list_identities())
            std::printf("%-22s %s [%s]\n", id.c_str(), desc.c_str(), ref.c_str());
        return 0;
    }
    json arr = json::array();
    for (const auto& [id, desc, ref] : qcf::identities::list_identities())
        arr.push_back({{"id", id}, {"description", desc}, {"reference", ref}});
    std::cout << arr.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact q-series and continued-fraction identity checker"};
    app.require_subcommand(1);

    /* verify */
    auto* verify = app.add_subcommand("verify", "run identity checks from the catalog");
    std::string verify_id, corrupt_id;
    bool verify_all_flag = false, parallel = false, timings = false, verify_plain = false;
    int order = 40, instances = 0;
    std::uint64_t seed = 1;
    verify->add_option("--id", verify_id, "catalog identity id");
    verify->add_flag("--all", verify_all_flag, "verify the whole catalog");
    verify->add_option("--order", order, "series truncation order")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "randomization seed");
    verify->add_option("--instances", instances, "override randomized instance count")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--parallel", parallel, "verify entries concurrently");
    verify->add_flag("--timings", timings, "include wall-clock timings in reports");
    verify->add_option("--selftest-corrupt", corrupt_id,
                       "harness self-test: perturb this entry's right-hand side");
    verify->add_flag("--plain", verify_plain, "plain text instead of JSON");

    /* expand */
    auto* expand = app.add_subcommand("expand", "exact series expansion of a catalog fraction");
    std::string expand_id, a_text, b_text, c_text;
    int expand_order = 40, expand_depth = 0;
    expand->add_option("--id", expand_id, "catalog fraction id")->required();
    expand->add_option("--order", expand_order, "series truncation order")
        ->check(CLI::NonNegativeNumber);
    expand->add_option("--depth", expand_depth, "depth guard override")->check(CLI::NonNegativeNumber);
    expand->add_option("--a", a_text, "rational value for parameter a (default: generic)");
    expand->add_option("--b", b_text, "rational value for parameter b (default: generic)");
    expand->add_option("--c", c_text, "rational value for parameter c (default: generic)");

    /* partitions */
    auto* parts = app.add_subcommand("partitions", "partition counting oracle");
    int k = 0, cap = qcf::partitions::default_enumeration_cap;
    std::string parts_text;
    bool distinct = false, enumerate = false;
    parts->add_option("--k", k, "weight to partition")->required()->check(CLI::NonNegativeNumber);
    parts->add_option("--parts", parts_text, "allowed parts, e.g. 1..5 or 1,2,4,8")->required();
    parts->add_flag("--distinct", distinct, "require distinct parts");
    parts->add_flag("--enumerate", enumerate, "list the partitions (capped)");
    parts->add_option("--cap", cap, "enumeration cap");

    /* colored */
    auto* colored = app.add_subcommand("colored", "two-color partition statistics");
    std::string variant_text = "BN", colored_format = "json";
    int cn = 0, ci = 0, cj = 0, max_n = 25, max_i = 3, max_j = 3;
    bool table = false;
    colored->add_option("--variant", variant_text, "AN|BN|CN|AD|BD|CD")->required();
    colored->add_option("--n", cn, "weight")->check(CLI::NonNegativeNumber);
    colored->add_option("--i", ci, "red statistic")->check(CLI::NonNegativeNumber);
    colored->add_option("--j", cj, "blue statistic")->check(CLI::NonNegativeNumber);
    colored->add_flag("--table", table, "emit the full count table");
    colored->add_option("--max-n", max_n, "table bound on n");
    colored->add_option("--max-i", max_i, "table bound on i");
    colored->add_option("--max-j", max_j, "table bound on j");
    colored->add_option("--format", colored_format, "json|csv (table only)");

    /* real */
    auto* real = app.add_subcommand("real", "floating-point fraction evaluation");
    std::string constant = "pi", singular_case;
    int real_depth = 1000;
    double zval = 1.0;
    bool real_plain = false;
    real->add_option("--const", constant, "pi|exp|log|rr");
    real->add_option("--depth", real_depth, "evaluation depth")->check(CLI::PositiveNumber);
    real->add_option("--z", zval, "argument for exp/log");
    real->add_option("--case", singular_case, "singular value case: e-pi|e-2pi|e-4pi");
    real->add_flag("--plain", real_plain, "plain text instead of JSON");

    /* list */
    auto* list = app.add_subcommand("list", "list catalog identities");
    bool list_plain = false;
    list->add_flag("--plain", list_plain, "plain text instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (verify_all_flag == !verify_id.empty()) {
                std::cerr << "verify: need exactly one of --all or --id\n";
                return 2;
            }
            if (!verify_id.empty()) qcf::identities::find_case(verify_id);
            return run_verify(verify_id, verify_all_flag, order, seed, instances, parallel,
                              timings, corrupt_id, verify_plain);
        }
        if (expand->parsed()) return run_expand(expand_id, expand_order, expand_depth, a_text, b_text, c_text);
        if (parts->parsed()) return run_partitions(k, parts_text, distinct, enumerate, cap);
        if (colored->parsed())
            return run_colored(variant_text, cn, ci, cj, table, max_n, max_i, max_j, colored_format);
        if (real->parsed()) return run_real(constant, real_depth, zval, singular_case, real_plain);
        if (list->parsed()) return run_list(list_plain);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
