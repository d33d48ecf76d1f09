#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "polybounds/bounds.hpp"
#include "polybounds/errors.hpp"
#include "polybounds/format.hpp"
#include "polybounds/series.hpp"
#include "polybounds/verify.hpp"

namespace pb = polybounds;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;

[[noreturn]] void fail(const std::string& code, const std::string& message, int exit_code) {
    ordered_json err{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
    std::exit(exit_code);
}

struct Options {
    std::string format = "json";
    std::string mode = "exact";
    unsigned digits = 12;
    long prec = 256;
};

void add_common(CLI::App* cmd, Options& opt, bool with_mode) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    if (with_mode)
        cmd->add_option("--mode", opt.mode, "Coefficient rendering")
            ->check(CLI::IsMember({"exact", "decimal"}));
    cmd->add_option("--digits", opt.digits, "Significant digits in decimal mode");
    cmd->add_option("--prec", opt.prec, "Working precision in bits");
}

pb::SeqId seq_from_name(const std::string& name) {
    if (name == "c") return pb::SeqId::wilker_c;
    if (name == "d3") return pb::SeqId::sf_d3;
    if (name == "dpi") return pb::SeqId::sf_dpi;
    if (name == "e") return pb::SeqId::sf_e;
    fail("usage", "unknown sequence '" + name + "'", kExitUsage);
}

pb::Target target_from_name(const std::string& name) {
    if (name == "wilker") return pb::Target::wilker;
    if (name == "sf-d3") return pb::Target::sf_d3;
    if (name == "sf-dpi") return pb::Target::sf_dpi;
    if (name == "sf-e") return pb::Target::sf_e;
    fail("usage", "unknown target '" + name + "'", kExitUsage);
}

unsigned min_order(pb::Target t) {
    switch (t) {
        case pb::Target::wilker: return 3;
        case pb::Target::sf_e: return 2;
        default: return 1;
    }
}

pb::BoundPair make_pair(pb::Target t, unsigned order) {
    switch (t) {
        case pb::Target::wilker: return pb::wilker_bounds(order);
        case pb::Target::sf_d3: return pb::sf_d_bounds(pb::SfK::three, order);
        case pb::Target::sf_dpi: return pb::sf_d_bounds(pb::SfK::pi, order);
        case pb::Target::sf_e: return pb::sf_e_bounds(order);
    }
    fail("usage", "bad target", kExitUsage);
}

std::string render(const pb::PiConstant& c, const Options& opt) {
    if (opt.mode == "decimal") return pb::to_decimal_string(c, opt.prec, opt.digits);
    return pb::to_exact_string(c);
}

// "A..B" or a single "A".
std::pair<unsigned, unsigned> parse_range(const std::string& s) {
    try {
        const size_t dots = s.find("..");
        if (dots == std::string::npos) {
            const unsigned v = static_cast<unsigned>(std::stoul(s));
            return {v, v};
        }
        return {static_cast<unsigned>(std::stoul(s.substr(0, dots))),
                static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
    } catch (const std::exception&) {
        fail("usage", "cannot parse range '" + s + "'", kExitUsage);
    }
}

int cmd_coeffs(const std::string& seq_name, unsigned from, unsigned to, const Options& opt) {
    if (from > to || to > 10000) fail("usage", "invalid range: need 0 <= from <= to <= 10000", kExitUsage);
    const pb::CoeffSeq seq(seq_from_name(seq_name));

    ordered_json out{{"schema_version", 1}, {"command", "coeffs"}, {"seq", seq_name},
                     {"from", from},       {"to", to},            {"mode", opt.mode}};
    ordered_json rows = ordered_json::array();
    for (unsigned m = from; m <= to; ++m) {
        const std::string value = render(seq.at(m), opt);
        if (opt.format == "csv") {
            std::cout << m << "," << value << "\n";
        } else {
            rows.push_back({{"m", m}, {"value", value}});
        }
    }
    if (opt.format == "json") {
        out["rows"] = rows;
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

int cmd_bounds(const std::string& target_name, unsigned order, const Options& opt) {
    const pb::Target target = target_from_name(target_name);
    if (order < min_order(target))
        fail("usage", "order must be >= " + std::to_string(min_order(target)) + " for " + target_name,
             kExitUsage);
    const pb::BoundPair pair = make_pair(target, order);

    auto side_rows = [&](const pb::OddPolyBound& bound) {
        ordered_json rows = ordered_json::array();
        for (const auto& [deg, coeff] : bound.terms)
            rows.push_back({{"deg", deg}, {"coeff", render(coeff, opt)}});
        return rows;
    };

    if (opt.format == "csv") {
        for (const auto& [deg, coeff] : pair.lower.terms)
            std::cout << "lower," << deg << "," << render(coeff, opt) << "\n";
        for (const auto& [deg, coeff] : pair.upper.terms)
            std::cout << "upper," << deg << "," << render(coeff, opt) << "\n";
        return kExitOk;
    }
    ordered_json out{
        {"schema_version", 1},
        {"command", "bounds"},
        {"target", target_name},
        {"order", order},
        {"mode", opt.mode},
        {"domain", target == pb::Target::wilker ? "(0, pi/2)" : "(0, 1)"},
        {"denominator", pair.lower.denom == pb::Denominator::two_plus_sqrt ? "2+sqrt(1-x^2)" : "1"},
        {"lower", side_rows(pair.lower)},
        {"upper", side_rows(pair.upper)},
    };
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& target_name, unsigned order, unsigned grid, const Options& opt) {
    if (grid < 2) fail("usage", "grid must be >= 2", kExitUsage);
    if (opt.prec < 32) fail("usage", "prec must be >= 32", kExitUsage);
    const pb::Target target = target_from_name(target_name);
    if (order < min_order(target))
        fail("usage", "order must be >= " + std::to_string(min_order(target)) + " for " + target_name,
             kExitUsage);

    const pb::VerificationReport rep = pb::verify_pair(make_pair(target, order), grid, opt.prec);
    const std::string status = pb::to_string(rep.status);

    if (opt.format == "csv") {
        std::cout << target_name << "," << order << "," << status << ","
                  << rep.min_lower_margin.to_string(opt.digits) << ","
                  << rep.min_upper_margin.to_string(opt.digits) << ","
                  << rep.max_gap.to_string(opt.digits) << "," << rep.argmax_x.to_string(opt.digits)
                  << "\n";
    } else {
        ordered_json out{
            {"schema_version", 1},
            {"command", "verify"},
            {"target", target_name},
            {"order", order},
            {"grid", grid},
            {"prec", opt.prec},
            {"status", status},
            {"min_lower_margin", rep.min_lower_margin.to_string(opt.digits)},
            {"min_upper_margin", rep.min_upper_margin.to_string(opt.digits)},
            {"max_gap", rep.max_gap.to_string(opt.digits)},
            {"argmax_x", rep.argmax_x.to_string(opt.digits)},
        };
        std::cout << out.dump() << "\n";
    }
    if (rep.status == pb::VerificationReport::Status::violated) return kExitViolated;
    if (rep.status == pb::VerificationReport::Status::indeterminate) return kExitIndeterminate;
    return kExitOk;
}

int cmd_table(const std::string& orders_str, const Options& opt) {
    const auto [from, to] = parse_range(orders_str);
    if (from < 3 || from > to || to > 10000)
        fail("usage", "orders must satisfy 3 <= from <= to <= 10000", kExitUsage);
    std::vector<unsigned> orders;
    for (unsigned m = from; m <= to; ++m) orders.push_back(m);
    const auto rows = pb::wilker_error_table(orders, opt.prec);

    if (opt.format == "csv") {
        for (const auto& row : rows)
            std::cout << row.m << "," << row.sup_gap.to_string(opt.digits) << "\n";
        return kExitOk;
    }
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows)
        jrows.push_back({{"m", row.m}, {"sup_gap", row.sup_gap.to_string(opt.digits)}});
    ordered_json out{{"schema_version", 1}, {"command", "table"},  {"target", "wilker"},
                     {"orders", orders_str}, {"prec", opt.prec},   {"rows", jrows}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified double-sided polynomial bounds for Wilker and Shafer-Fink type inequalities"};
    app.require_subcommand(1);

    Options opt;
    std::string seq_name, target_name, orders_str;
    unsigned from = 0, to = 0, order = 0, grid = 10000;

    auto* coeffs = app.add_subcommand("coeffs", "Print exact coefficient sequences");
    coeffs->add_option("--seq", seq_name, "Sequence: c, d3, dpi or e")->required();
    coeffs->add_option("--from", from, "First index");
    coeffs->add_option("--to", to, "Last index")->required();
    add_common(coeffs, opt, true);

    auto* bounds = app.add_subcommand("bounds", "Print a double-sided bound pair");
    bounds->add_option("--target", target_name, "Target: wilker, sf-d3, sf-dpi or sf-e")->required();
    bounds->add_option("--order", order, "Bound order")->required();
    add_common(bounds, opt, true);

    auto* verify = app.add_subcommand("verify", "Grid-verify the strict ordering of a bound pair");
    verify->add_option("--target", target_name, "Target: wilker, sf-d3, sf-dpi or sf-e")->required();
    verify->add_option("--order", order, "Bound order")->required();
    verify->add_option("--grid", grid, "Interior grid points");
    add_common(verify, opt, false);

    auto* table = app.add_subcommand("table", "Supremum of the Wilker gap per order");
    table->add_option("--orders", orders_str, "Order range, e.g. 3..6")->required();
    add_common(table, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("usage", e.what(), kExitUsage);
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(seq_name, from, to, opt);
        if (bounds->parsed()) return cmd_bounds(target_name, order, opt);
        if (verify->parsed()) return cmd_verify(target_name, order, grid, opt);
        if (table->parsed()) return cmd_table(orders_str, opt);
    } catch (const pb::PrecisionCapExceeded& e) {
        fail("precision-cap-exceeded", e.what(), kExitIndeterminate);
    } catch (const pb::OrderTooSmall& e) {
        fail("usage", e.what(), kExitUsage);
    } catch (const std::invalid_argument& e) {
        fail("usage", e.what(), kExitUsage);
    } catch (const std::exception& e) {
        fail("internal", e.what(), kExitUsage);
    }
    return kExitUsage;
}
