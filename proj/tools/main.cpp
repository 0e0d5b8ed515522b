#include <algorithm>
#include <array>
#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerw/bijections.hpp"
#include "eulerw/partition.hpp"
#include "eulerw/qseries.hpp"
#include "eulerw/weighted.hpp"

namespace {

using nlohmann::ordered_json;
using namespace eulerw;

enum class Format { Text, Json, Tsv };

Format parse_format(const std::string& token) {
    if (token == "json")
        return Format::Json;
    if (token == "tsv")
        return Format::Tsv;
    return Format::Text;
}

int merged_rank(const RootedPartition& rp) {
    return Partition(rp.all_parts()).rank();
}

ordered_json partition_json(const Partition& p) {
    ordered_json j;
    j["render"] = to_string(p);
    j["parts"] = p.parts();
    j["weight"] = p.weight();
    j["length"] = p.length();
    j["rank"] = p.rank();
    return j;
}

ordered_json rooted_json(const RootedPartition& rp) {
    ordered_json j;
    j["render"] = to_string(rp);
    j["parts"] = rp.base().parts();
    j["root_part"] = rp.root_part();
    j["root_size"] = rp.root_size();
    j["weight"] = rp.weight();
    j["length"] = rp.length();
    j["rank"] = merged_rank(rp);
    return j;
}

void print_cells(std::ostream& os, const std::vector<int>& parts, bool two_modular) {
    for (int part : parts) {
        if (two_modular) {
            int cells = (part + 1) / 2;
            for (int i = 0; i < cells - 1; ++i)
                os << "[2]";
            os << "[1]";
        } else {
            for (int i = 0; i < part; ++i)
                os << "[ ]";
        }
        os << "\n";
    }
}

void run_enumerate(long long n, const std::string& cls_token, Format format) {
    auto cls = class_from_name(cls_token);
    if (!cls)
        throw CLI::ValidationError("unknown class '" + cls_token + "'");

    std::vector<std::array<std::string, 4>> cells; // render, weight, length, rank
    ordered_json items = ordered_json::array();
    if (is_rooted_class(*cls)) {
        for (const RootedPartition& rp : enumerate_rooted(n, *cls)) {
            cells.push_back({to_string(rp), std::to_string(rp.weight()),
                             std::to_string(rp.length()), std::to_string(merged_rank(rp))});
            items.push_back(rooted_json(rp));
        }
    } else {
        for (const Partition& p : enumerate_partitions(n, *cls)) {
            cells.push_back({to_string(p), std::to_string(p.weight()),
                             std::to_string(p.length()), std::to_string(p.rank())});
            items.push_back(partition_json(p));
        }
    }

    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "enumerate";
            doc["n"] = n;
            doc["class"] = cls_token;
            doc["count"] = cells.size();
            doc["items"] = std::move(items);
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Tsv:
            for (const auto& row : cells)
                std::cout << row[0] << '\t' << row[1] << '\t' << row[2] << '\t' << row[3]
                          << "\n";
            break;
        case Format::Text: {
            std::array<std::size_t, 4> width{};
            for (const auto& row : cells)
                for (std::size_t i = 0; i < 4; ++i)
                    width[i] = std::max(width[i], row[i].size());
            for (const auto& row : cells) {
                std::cout << row[0] << std::string(width[0] - row[0].size(), ' ');
                for (std::size_t i = 1; i < 4; ++i)
                    std::cout << "  " << std::string(width[i] - row[i].size(), ' ')
                              << row[i];
                std::cout << "\n";
            }
            break;
        }
    }
}

void run_map(const std::string& name, const std::string& parts_text,
             std::optional<int> r, std::optional<int> root, std::optional<int> mult,
             std::optional<int> index, bool trace, bool diagram, Format format) {
    const bool rooted_in = name == "tau" || name == "sigma" || name == "sigma-inv";

    if (name == "dyson" || name == "dyson-inv") {
        if (!r)
            throw CLI::ValidationError("--r is required for " + name);
    } else if (r) {
        throw CLI::ValidationError("--r only applies to dyson and dyson-inv");
    }
    if (rooted_in) {
        if (!root || !mult)
            throw CLI::ValidationError("--root and --mult are required for " + name);
    } else if (root || mult) {
        throw CLI::ValidationError("--root/--mult only apply to tau, sigma and sigma-inv");
    }
    if (name == "designate") {
        if (!index)
            throw CLI::ValidationError("--index is required for designate");
    } else if (index) {
        throw CLI::ValidationError("--index only applies to designate");
    }

    std::optional<Partition> plain_in;
    std::optional<Partition> plain_out;
    std::optional<RootedPartition> rooted_input;
    std::optional<RootedPartition> rooted_out;
    std::optional<HookDecomposition> hooks;
    std::optional<DysonTrace> dyson_trace;

    if (name == "sylvester") {
        plain_in = parse_partition(parts_text);
        plain_out = sylvester(*plain_in);
        if (trace && !plain_in->empty())
            hooks = two_modular_hooks(*plain_in);
    } else if (name == "sylvester-inv") {
        plain_in = parse_partition(parts_text);
        plain_out = sylvester_inv(*plain_in);
        if (trace && !plain_out->empty())
            hooks = two_modular_hooks(*plain_out);
    } else if (name == "dyson") {
        plain_in = parse_partition(parts_text);
        plain_out = dyson(*plain_in, *r);
    } else if (name == "dyson-inv") {
        plain_in = parse_partition(parts_text);
        plain_out = dyson_inv(*plain_in, *r);
    } else if (name == "iterated-dyson") {
        plain_in = parse_partition(parts_text);
        DysonTrace t = iterated_dyson_trace(*plain_in);
        plain_out = t.result();
        if (trace)
            dyson_trace = std::move(t);
    } else if (name == "iterated-dyson-inv") {
        plain_in = parse_partition(parts_text);
        plain_out = iterated_dyson_inv(*plain_in);
        if (trace)
            dyson_trace = iterated_dyson_inv_trace(*plain_in);
    } else if (rooted_in) {
        rooted_input = RootedPartition(parse_partition(parts_text), *root, *mult);
        if (name == "tau")
            rooted_out = tau(*rooted_input);
        else if (name == "sigma")
            rooted_out = sigma(*rooted_input);
        else
            rooted_out = sigma_inv(*rooted_input);
    } else if (name == "designate") {
        plain_in = parse_partition(parts_text);
        rooted_out = designate(*plain_in, *index);
    } else {
        throw CLI::ValidationError("unknown map '" + name + "'");
    }

    const std::string in_render =
        plain_in ? to_string(*plain_in) : to_string(*rooted_input);
    const std::string out_render =
        plain_out ? to_string(*plain_out) : to_string(*rooted_out);
    const std::vector<int> in_parts =
        plain_in ? plain_in->parts() : rooted_input->all_parts();
    const std::vector<int> out_parts =
        plain_out ? plain_out->parts() : rooted_out->all_parts();

    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "map";
            doc["map"] = name;
            if (r)
                doc["r"] = *r;
            if (index)
                doc["index"] = *index;
            doc["input"] = plain_in ? partition_json(*plain_in) : rooted_json(*rooted_input);
            doc["output"] =
                plain_out ? partition_json(*plain_out) : rooted_json(*rooted_out);
            if (hooks) {
                ordered_json arr = ordered_json::array();
                int j = 1;
                for (const Hook& h : hooks->hooks()) {
                    ordered_json hj;
                    hj["index"] = j++;
                    hj["cells"] = h.cells;
                    hj["twos"] = h.twos;
                    arr.push_back(std::move(hj));
                }
                doc["hooks"] = std::move(arr);
            }
            if (dyson_trace) {
                ordered_json tj;
                tj["start"] = partition_json(dyson_trace->initial);
                ordered_json steps = ordered_json::array();
                for (const DysonStep& s : dyson_trace->steps) {
                    ordered_json sj;
                    sj["r"] = s.r;
                    sj["partition"] = partition_json(s.partition);
                    steps.push_back(std::move(sj));
                }
                tj["steps"] = std::move(steps);
                doc["trace"] = std::move(tj);
            }
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Tsv:
            std::cout << in_render << '\t' << out_render << "\n";
            break;
        case Format::Text: {
            if (diagram) {
                std::cout << "input " << in_render << "\n";
                print_cells(std::cout, in_parts, name == "sylvester");
                std::cout << "\n";
            }
            if (hooks) {
                int j = 1;
                for (const Hook& h : hooks->hooks()) {
                    std::cout << "hook " << j++ << "\n"
                              << "cells=" << h.cells << " twos=" << h.twos << "\n\n";
                }
            }
            if (dyson_trace) {
                std::cout << "start " << to_string(dyson_trace->initial) << "\n";
                for (const DysonStep& s : dyson_trace->steps)
                    std::cout << "r=" << s.r << " -> " << to_string(s.partition) << "\n";
                std::cout << "\n";
            }
            if (diagram) {
                std::cout << "output " << out_render << "\n";
                print_cells(std::cout, out_parts, name == "sylvester-inv");
                std::cout << "\n";
            }
            std::cout << out_render << "\n";
            break;
        }
    }
}

void run_verify(const std::vector<std::string>& tokens, long long max_n,
                const std::string& method, std::optional<int> order_opt, Format format,
                int& exit_code) {
    if (max_n < 1)
        throw CLI::ValidationError("--max-n must be at least 1");
    const int order = order_opt ? *order_opt : static_cast<int>(max_n);
    if (order < 1)
        throw CLI::ValidationError("--order must be at least 1");

    std::vector<IdentityId> ids;
    for (const std::string& token : tokens) {
        if (token == "all") {
            std::vector<IdentityId> everything = all_identities();
            ids.insert(ids.end(), everything.begin(), everything.end());
        } else if (auto id = identity_from_name(token)) {
            ids.push_back(*id);
        } else {
            throw CLI::ValidationError("unknown identity '" + token + "'");
        }
    }

    std::vector<VerificationReport> reports;
    for (IdentityId id : ids) {
        if (method != "series")
            reports.push_back(verify_theorem(id, max_n));
        if (method != "enum")
            reports.push_back(verify_series(id, order));
    }
    const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                      [](const VerificationReport& r) { return r.passed; });

    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "verify";
            doc["max_n"] = max_n;
            doc["method"] = method;
            doc["order"] = order;
            doc["pass"] = all_pass;
            ordered_json arr = ordered_json::array();
            for (const VerificationReport& report : reports) {
                ordered_json rj;
                rj["identity"] = identity_name(report.id);
                rj["description"] = identity_description(report.id);
                rj["method"] = report.method;
                rj["n_min"] = report.n_min;
                rj["n_max"] = report.n_max;
                rj["pass"] = report.passed;
                ordered_json rows = ordered_json::array();
                for (const VerificationRow& row : report.rows) {
                    ordered_json row_json;
                    row_json["n"] = row.n;
                    row_json["lhs"] = coeff_to_string(row.lhs);
                    row_json["rhs"] = coeff_to_string(row.rhs);
                    row_json["pass"] = row.passed();
                    rows.push_back(std::move(row_json));
                }
                rj["rows"] = std::move(rows);
                if (report.first_failure) {
                    ordered_json fj;
                    fj["n"] = report.first_failure->n;
                    fj["lhs"] = coeff_to_string(report.first_failure->lhs);
                    fj["rhs"] = coeff_to_string(report.first_failure->rhs);
                    rj["first_failure"] = std::move(fj);
                }
                arr.push_back(std::move(rj));
            }
            doc["reports"] = std::move(arr);
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Tsv:
            for (const VerificationReport& report : reports)
                for (const VerificationRow& row : report.rows)
                    std::cout << identity_name(report.id) << '\t' << report.method << '\t'
                              << row.n << '\t' << coeff_to_string(row.lhs) << '\t'
                              << coeff_to_string(row.rhs) << '\t'
                              << (row.passed() ? "pass" : "FAIL") << "\n";
            break;
        case Format::Text:
            for (const VerificationReport& report : reports) {
                std::cout << identity_name(report.id) << " " << report.method << " ["
                          << report.n_min << ".." << report.n_max << "] "
                          << (report.passed ? "pass" : "FAIL") << "\n";
                for (const VerificationRow& row : report.rows)
                    std::cout << "  n=" << row.n << " lhs=" << coeff_to_string(row.lhs)
                              << " rhs=" << coeff_to_string(row.rhs) << " "
                              << (row.passed() ? "pass" : "FAIL") << "\n";
                if (report.first_failure)
                    std::cout << "  first failure: n=" << report.first_failure->n
                              << " lhs=" << coeff_to_string(report.first_failure->lhs)
                              << " rhs=" << coeff_to_string(report.first_failure->rhs)
                              << "\n";
                std::cout << "\n";
            }
            std::cout << "verify: " << (all_pass ? "pass" : "FAIL") << "\n";
            break;
    }
    exit_code = all_pass ? 0 : 1;
}

void run_series(const std::string& name, int order, std::optional<long long> a,
                std::optional<long long> b, const std::string& n_text, bool negate,
                Format format) {
    if (order < 0)
        throw CLI::ValidationError("--order must be nonnegative");

    TruncatedSeries series{0};
    ordered_json doc;
    doc["command"] = "series";
    doc["builder"] = name;
    doc["order"] = order;

    if (name == "pochhammer") {
        if (!a || !b)
            throw CLI::ValidationError("pochhammer needs --a and --b");
        std::optional<long long> factor_count;
        if (n_text != "inf") {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(),
                                             value);
            if (ec != std::errc() || ptr != n_text.data() + n_text.size())
                throw CLI::ValidationError("--n must be a nonnegative integer or 'inf'");
            factor_count = value;
        }
        doc["a"] = *a;
        doc["b"] = *b;
        doc["n"] = n_text;
        doc["negated"] = negate;
        series = pochhammer(order, *a, *b, factor_count, negate);
    } else {
        if (a || b || n_text != "inf" || negate)
            throw CLI::ValidationError("--a/--b/--n/--negate only apply to pochhammer");
        auto builder = builder_from_name(name);
        if (!builder)
            throw CLI::ValidationError("unknown builder '" + name + "'");
        series = build_series(*builder, order);
    }

    switch (format) {
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (int k = 0; k <= series.order(); ++k)
                arr.push_back(coeff_to_string(series.coeff(k)));
            doc["coefficients"] = std::move(arr);
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Tsv:
            for (int k = 0; k <= series.order(); ++k)
                std::cout << k << '\t' << coeff_to_string(series.coeff(k)) << "\n";
            break;
        case Format::Text:
            for (int k = 0; k <= series.order(); ++k)
                std::cout << (k > 0 ? "," : "") << coeff_to_string(series.coeff(k));
            std::cout << "\n";
            break;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer partition toolkit: enumeration, partition bijections, and "
                 "exact verification of weighted partition identities"};
    app.require_subcommand(1);

    std::string format_token = "text";
    app.add_option("--format", format_token, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();

    int exit_code = 0;

    // enumerate
    long long enum_n = 0;
    std::string enum_class;
    CLI::App* cmd_enum = app.add_subcommand(
        "enumerate", "List the members of a partition class in canonical order");
    cmd_enum->fallthrough();
    cmd_enum->add_option("n", enum_n, "Weight to enumerate")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_enum
        ->add_option("class", enum_class,
                     "all, distinct, odd, rooted-all, rooted-distinct, rooted-odd, "
                     "rooted-almost-distinct, rooted-almost-distinct-even-root or "
                     "rooted-almost-distinct-odd-root")
        ->required();
    cmd_enum->callback(
        [&] { run_enumerate(enum_n, enum_class, parse_format(format_token)); });

    // map
    std::string map_name;
    std::string map_parts;
    int map_r = 0;
    int map_root = 0;
    int map_mult = 0;
    int map_index = 0;
    bool map_trace = false;
    bool map_diagram = false;
    CLI::App* cmd_map =
        app.add_subcommand("map", "Apply a partition bijection to one input");
    cmd_map->fallthrough();
    cmd_map
        ->add_option("name", map_name,
                     "sylvester, sylvester-inv, dyson, dyson-inv, iterated-dyson, "
                     "iterated-dyson-inv, tau, sigma, sigma-inv or designate")
        ->required();
    cmd_map
        ->add_option("partition", map_parts,
                     "Comma-separated parts, weakly decreasing; () for the empty "
                     "partition (for rooted maps this is the base)")
        ->required();
    CLI::Option* opt_r =
        cmd_map->add_option("--r", map_r, "Rank shift for dyson and dyson-inv");
    CLI::Option* opt_root =
        cmd_map->add_option("--root", map_root, "Root part value (rooted maps)");
    CLI::Option* opt_mult =
        cmd_map->add_option("--mult", map_mult, "Root block size (rooted maps)");
    CLI::Option* opt_index =
        cmd_map->add_option("--index", map_index, "1-based part position (designate)");
    cmd_map->add_flag("--trace", map_trace,
                      "Print the hook decomposition or the intermediate chain");
    cmd_map->add_flag("--diagram", map_diagram,
                      "Print ASCII diagrams of input and output");
    cmd_map->callback([&] {
        run_map(map_name, map_parts,
                opt_r->count() ? std::optional<int>(map_r) : std::nullopt,
                opt_root->count() ? std::optional<int>(map_root) : std::nullopt,
                opt_mult->count() ? std::optional<int>(map_mult) : std::nullopt,
                opt_index->count() ? std::optional<int>(map_index) : std::nullopt,
                map_trace, map_diagram, parse_format(format_token));
    });

    // verify
    std::vector<std::string> verify_ids;
    long long verify_max_n = 20;
    std::string verify_method = "both";
    int verify_order = 0;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Check identities by enumeration and by series expansion");
    cmd_verify->fallthrough();
    cmd_verify
        ->add_option("ids", verify_ids,
                     "t1, t2, thm1, thm2, lem1, lem2, o1, o2, lem3, lem4, t4_1, t4_2, "
                     "eq1, eq2, or all")
        ->required()
        ->expected(-1);
    cmd_verify->add_option("--max-n", verify_max_n, "Largest weight for enumeration")
        ->capture_default_str();
    cmd_verify->add_option("--method", verify_method, "enum, series or both")
        ->check(CLI::IsMember({"enum", "series", "both"}))
        ->capture_default_str();
    CLI::Option* opt_order = cmd_verify->add_option(
        "--order", verify_order, "Series truncation order (defaults to --max-n)");
    cmd_verify->callback([&] {
        run_verify(verify_ids, verify_max_n, verify_method,
                   opt_order->count() ? std::optional<int>(verify_order) : std::nullopt,
                   parse_format(format_token), exit_code);
    });

    // series
    std::string series_name;
    int series_order = 60;
    long long series_a = 0;
    long long series_b = 0;
    std::string series_n = "inf";
    bool series_negate = false;
    CLI::App* cmd_series =
        app.add_subcommand("series", "Print the coefficients of a named series");
    cmd_series->fallthrough();
    cmd_series
        ->add_option("builder", series_name,
                     "A builder token (see README) or pochhammer")
        ->required();
    cmd_series->add_option("--order", series_order, "Truncation order")
        ->capture_default_str();
    CLI::Option* opt_a =
        cmd_series->add_option("--a", series_a, "Base exponent (pochhammer)");
    CLI::Option* opt_b =
        cmd_series->add_option("--b", series_b, "Exponent step (pochhammer)");
    cmd_series->add_option("--n", series_n,
                           "Factor count, an integer or inf (pochhammer)")
        ->capture_default_str();
    cmd_series->add_flag("--negate", series_negate,
                         "Use factors 1 + q^e instead of 1 - q^e (pochhammer)");
    cmd_series->callback([&] {
        run_series(series_name, series_order,
                   opt_a->count() ? std::optional<long long>(series_a) : std::nullopt,
                   opt_b->count() ? std::optional<long long>(series_b) : std::nullopt,
                   series_n, series_negate, parse_format(format_token));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::InvalidPartition ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
