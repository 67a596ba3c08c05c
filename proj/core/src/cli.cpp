#include "tropfrieze/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropfrieze/example.hpp"
#include "tropfrieze/frieze.hpp"
#include "tropfrieze/index.hpp"
#include "tropfrieze/theta.hpp"

namespace tropfrieze {

std::string emit_dot(const CategorySpec& spec) {
    std::string s = "digraph quiver {\n";
    for (const auto& n : spec.indecs) s += "  \"" + n + "\";\n";
    for (std::size_t i = 0; i < spec.indecs.size() && i < spec.hom.dims.size(); ++i)
        for (std::size_t j = 0; j < spec.indecs.size() && j < spec.hom.dims[i].size(); ++j) {
            if (i == j || spec.hom.dims[i][j] < 1) continue;
            s += "  \"" + spec.indecs[i] + "\" -> \"" + spec.indecs[j] + "\"";
            if (spec.hom.dims[i][j] > 1)
                s += " [label=\"" + std::to_string(spec.hom.dims[i][j]) + "\"]";
            s += ";\n";
        }
    s += "}\n";
    return s;
}

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

CategorySpec resolve_spec(const std::string& arg) {
    constexpr std::string_view prefix = "builtin:";
    if (arg.rfind(prefix, 0) == 0) {
        const std::string name = arg.substr(prefix.size());
        if (name == "ot-a4") return builtin_ot_a4();
        throw SpecError("unknown builtin spec \"" + name + "\"");
    }
    std::ifstream in(arg);
    if (!in) throw SpecError("cannot read spec file " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_spec(ss.str());
}

bool ensure_valid(const CategorySpec& spec, std::ostream& err) {
    const auto report = validate(spec);
    for (const auto& v : report) err << "invalid spec: " << v.rule << ": " << v.detail << "\n";
    return report.empty();
}

std::vector<Coeff> parse_csv_ints(const std::string& text, const char* what) {
    std::vector<Coeff> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw SpecError(std::string(what) + ": not an integer: \"" + item + "\"");
        }
    }
    return out;
}

void print_rows(std::ostream& out, const std::string& h1, const std::string& h2,
                const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = h1.size();
    for (const auto& [a, b] : rows) {
        (void)b;
        w = std::max(w, a.size());
    }
    out << h1 << std::string(w - h1.size() + 2, ' ') << h2 << "\n";
    for (const auto& [a, b] : rows) out << a << std::string(w - a.size() + 2, ' ') << b << "\n";
}

void print_report(std::ostream& out, const CheckReport& report) {
    for (const auto& item : report)
        out << status_str(item.status) << " " << item.name << ": " << item.detail << "\n";
}

json element_to_json(const FreeAbelianElement& e) {
    json row = json::object();
    for (const auto& [label, c] : e.sparse()) row[label] = c;
    return row;
}

int cmd_validate(const CategorySpec& spec, std::ostream& out) {
    auto report = validate(spec);
    if (report.empty())
        for (auto& v : resolution_consistency(spec)) report.push_back(std::move(v));
    if (report.empty()) {
        out << "OK\n";
        return kExitOk;
    }
    for (const auto& v : report) out << "violation " << v.rule << ": " << v.detail << "\n";
    return kExitFail;
}

int cmd_index(const CategorySpec& spec, bool as_json, std::ostream& out) {
    const IndexTable table = index_table(spec);
    if (as_json) {
        json j = json::object();
        for (const auto& [name, e] : table.entries) j[name] = element_to_json(e);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [name, e] : table.entries) rows.emplace_back(name, e.str());
    print_rows(out, "object", "index", rows);
    return kExitOk;
}

int cmd_theta(const CategorySpec& spec, bool as_json, std::ostream& out) {
    const IndexTable table = index_table(spec);
    const ThetaMap theta = theta_from_spec(spec, table);
    if (as_json) {
        json j = json::object();
        for (std::size_t i = 0; i < theta.hom.domain().size(); ++i)
            j[theta.hom.domain().label(i)] = element_to_json(theta.hom.column(i));
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t i = 0; i < theta.hom.domain().size(); ++i)
        rows.emplace_back(theta.hom.domain().label(i), theta.hom.column(i).str());
    print_rows(out, "simple", "theta", rows);
    return kExitOk;
}

int cmd_check_additivity(const CategorySpec& spec, std::ostream& out) {
    const IndexTable table = index_table(spec);
    const ThetaMap theta = theta_from_spec(spec, table);
    const CheckReport report = verify_additivity(spec, table, theta);
    print_report(out, report);
    return report_has_failure(report) ? kExitFail : kExitOk;
}

int cmd_check_dichotomy(const CategorySpec& spec, std::ostream& out) {
    const CheckReport report = verify_dichotomy(spec);
    print_report(out, report);
    return report_has_failure(report) ? kExitFail : kExitOk;
}

int cmd_exchange_pairs(const CategorySpec& spec, std::ostream& out) {
    const auto declared = [&](const std::string& a, const std::string& b) {
        for (const auto& pr : spec.exchange_pairs)
            if (pr.s0 == a && pr.s_top == b) return true;
        return false;
    };
    for (const auto& [a, b] : candidate_exchange_pairs(spec)) {
        out << a << "\t" << b;
        if (declared(a, b)) out << "\tdeclared";
        out << "\n";
    }
    return kExitOk;
}

int cmd_frieze_cone(const CategorySpec& spec, bool as_json, std::ostream& out) {
    const IndexTable table = index_table(spec);
    const ThetaMap theta = theta_from_spec(spec, table);
    const ConeMatrix cone = cone_matrix(spec, theta);
    if (as_json) {
        json j = json::object();
        for (std::size_t i = 0; i < cone.rows.size(); ++i)
            j[simple_label(spec.tilting[i])] = element_to_json(cone.rows[i]);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < cone.rows.size(); ++i)
        out << simple_label(spec.tilting[i]) << ": " << cone.rows[i].str() << " >= 0\n";
    return kExitOk;
}

int cmd_frieze(const CategorySpec& spec, const std::string& phi_text, bool check, bool as_json,
               std::ostream& out, std::ostream& err) {
    const PhiVector phi{parse_csv_ints(phi_text, "--phi")};
    const IndexTable table = index_table(spec);
    const FriezeValues f = frieze_from_phi(spec, table, phi);
    try {
        const ThetaMap theta = theta_from_spec(spec, table);
        if (!phi_admissible(cone_matrix(spec, theta), phi))
            err << "warning: phi is not admissible; the values below need not satisfy the "
                   "exchange relations\n";
    } catch (const Error& e) {
        err << "warning: admissibility not checked (" << e.what() << ")\n";
    }

    CheckReport report;
    if (check) report = check_frieze(spec, f);

    if (as_json) {
        json j;
        j["phi"] = phi.coeffs;
        json values = json::object();
        for (const auto& [name, v] : f.values) values[name] = v;
        j["values"] = std::move(values);
        if (check) {
            json rep = json::array();
            for (const auto& item : report)
                rep.push_back(json{{"pair", item.name},
                                   {"status", status_str(item.status)},
                                   {"detail", item.detail}});
            j["report"] = std::move(rep);
        }
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [name, v] : f.values) rows.emplace_back(name, std::to_string(v));
        print_rows(out, "object", "f", rows);
        if (check) print_report(out, report);
    }
    return check && report_has_failure(report) ? kExitFail : kExitOk;
}

int cmd_check_frieze(const CategorySpec& spec, const std::string& values_path, std::ostream& out) {
    std::ifstream in(values_path);
    if (!in) throw SpecError("cannot read values file " + values_path);
    std::stringstream ss;
    ss << in.rdbuf();
    json doc;
    try {
        doc = json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("values file: parse error: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("values file must map indecomposable names to integers");
    FriezeValues f;
    for (const auto& name : spec.indecs) {
        if (!doc.contains(name)) throw SpecError("values file has no entry for " + name);
        if (!doc.at(name).is_number_integer())
            throw SpecError("values file entry for " + name + " must be an integer");
        f.values.emplace_back(name, doc.at(name).get<Coeff>());
    }
    for (const auto& [key, val] : doc.items()) {
        (void)val;
        if (std::find(spec.indecs.begin(), spec.indecs.end(), key) == spec.indecs.end())
            throw SpecError("values file names unknown indecomposable " + key);
    }
    const CheckReport report = check_frieze(spec, f);
    print_report(out, report);
    return report_has_failure(report) ? kExitFail : kExitOk;
}

int cmd_enumerate(const CategorySpec& spec, Coeff bound, long long limit, int threads,
                  std::ostream& out) {
    const IndexTable table = index_table(spec);
    const ThetaMap theta = theta_from_spec(spec, table);
    const ConeMatrix cone = cone_matrix(spec, theta);
    EnumerateOptions options;
    options.threads = threads;
    const auto points = enumerate_admissible(cone, bound, options);
    long long printed = 0;
    for (const auto& phi : points) {
        if (limit > 0 && printed >= limit) break;
        for (std::size_t i = 0; i < phi.coeffs.size(); ++i)
            out << (i ? " " : "") << phi.coeffs[i];
        out << "\n";
        ++printed;
    }
    return kExitOk;
}

int cmd_propagate(const CategorySpec& spec, const std::string& seed_text,
                  const std::string& start, std::ostream& out) {
    const std::vector<Coeff> seed = parse_csv_ints(seed_text, "--seed");
    const PropagateResult result = propagate_window(spec, seed, start);
    if (!result.closed()) {
        out << "FAIL closure at " << result.conflict_at << ": existing "
            << result.existing << ", recomputed " << result.recomputed << "\n";
        return kExitFail;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [name, v] : result.values->values)
        rows.emplace_back(name, std::to_string(v));
    print_rows(out, "object", "f", rows);
    return kExitOk;
}

int cmd_example_report(std::ostream& out) {
    const CategorySpec spec = builtin_ot_a4();
    const BuiltinFixtures fx = builtin_fixtures();
    bool all_ok = true;
    const auto line = [&](bool ok, const std::string& stage, const std::string& detail) {
        out << (ok ? "PASS " : "FAIL ") << stage << ": " << detail << "\n";
        all_ok = all_ok && ok;
    };

    auto violations = validate(spec);
    for (auto& v : resolution_consistency(spec)) violations.push_back(std::move(v));
    line(violations.empty(), "validate", std::to_string(violations.size()) + " violations");

    const IndexTable table = index_table(spec);
    bool ok = table.entries.size() == fx.index_table_expected.size();
    for (std::size_t i = 0; ok && i < table.entries.size(); ++i)
        ok = table.entries[i].first == fx.index_table_expected[i].first &&
             table.entries[i].second == fx.index_table_expected[i].second;
    line(ok, "index", std::to_string(table.entries.size()) + " rows against golden table");

    const ThetaMap theta = theta_from_spec(spec, table);
    ok = theta.hom.domain().size() == fx.theta_expected.size();
    for (std::size_t i = 0; ok && i < fx.theta_expected.size(); ++i)
        ok = theta.hom.column(i) == fx.theta_expected[i];
    line(ok, "theta", std::to_string(fx.theta_expected.size()) + " columns against golden table");

    const CheckReport ta = verify_additivity(spec, table, theta);
    std::size_t passed = 0;
    for (const auto& item : ta)
        if (item.status == CheckStatus::pass) ++passed;
    line(passed == ta.size() && ta.size() == spec.angles.size(), "additivity",
         std::to_string(passed) + "/" + std::to_string(ta.size()) + " angles");

    const CheckReport di = verify_dichotomy(spec);
    passed = 0;
    for (const auto& item : di)
        if (item.status == CheckStatus::pass) ++passed;
    line(passed == di.size() && di.size() == spec.exchange_pairs.size(), "dichotomy",
         std::to_string(passed) + "/" + std::to_string(di.size()) + " pairs");

    const ConeMatrix cone = cone_matrix(spec, theta);
    ok = cone.rows.size() == fx.inequalities_expected.size();
    for (std::size_t i = 0; ok && i < cone.rows.size(); ++i)
        ok = cone.rows[i] == fx.inequalities_expected[i];
    line(ok, "cone", std::to_string(cone.rows.size()) + " inequality rows");

    const FriezeValues f = frieze_from_phi(spec, table, fx.sample_phi);
    ok = f.values.size() == fx.figure_values.size();
    for (std::size_t i = 0; ok && i < f.values.size(); ++i)
        ok = f.values[i].second == fx.figure_values[i];
    const CheckReport fc = check_frieze(spec, f);
    ok = ok && !report_has_failure(fc);
    line(ok, "frieze", "sample functional reproduces the golden values, " +
                           std::to_string(fc.size()) + " pairs checked");

    std::vector<Coeff> seed(fx.figure_values.begin(), fx.figure_values.begin() + spec.d + 1);
    const PropagateResult pw = propagate_window(spec, seed, spec.indecs.front());
    ok = pw.closed() && *pw.values == f;
    line(ok, "propagate", "window recursion closes and agrees");

    ok = load_spec(emit_spec(spec)) == spec;
    line(ok, "round-trip", "emit then load is the identity");

    return all_ok ? kExitOk : kExitFail;
}

int cmd_example(const std::string& name, const std::string& emit_path, bool report,
                std::ostream& out) {
    if (name != "ot-a4") throw SpecError("unknown builtin example \"" + name + "\"");
    if (!emit_path.empty()) {
        std::ofstream file(emit_path);
        if (!file) throw SpecError("cannot write spec file " + emit_path);
        file << emit_spec(builtin_ot_a4());
        return kExitOk;
    }
    if (report) return cmd_example_report(out);
    out << emit_spec(builtin_ot_a4());
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"indices, the error-term homomorphism, and tropical friezes on finite "
                 "(d+2)-angulated categories"};
    app.name("tropfrieze");
    app.require_subcommand(1);

    std::string spec_arg;
    bool as_json = false;
    std::string phi_text;
    bool check = false;
    std::string values_path;
    Coeff bound = 0;
    long long limit = 0;
    int threads = 1;
    std::string seed_text;
    std::string start;
    std::string example_name;
    std::string emit_path;
    bool example_report = false;

    const auto add_spec_arg = [&](CLI::App* sub) {
        sub->add_option("spec", spec_arg, "spec file or builtin:NAME")->required();
    };

    CLI::App* sub_validate = app.add_subcommand("validate", "check every spec invariant");
    add_spec_arg(sub_validate);

    CLI::App* sub_index = app.add_subcommand("index", "index of every indecomposable");
    add_spec_arg(sub_index);
    sub_index->add_flag("--json", as_json, "emit JSON");

    CLI::App* sub_theta = app.add_subcommand("theta", "error-term homomorphism on the simples");
    add_spec_arg(sub_theta);
    sub_theta->add_flag("--json", as_json, "emit JSON");

    CLI::App* sub_add = app.add_subcommand(
        "check-additivity", "alternating index sums against theta on every labelled angle");
    add_spec_arg(sub_add);

    CLI::App* sub_dicho = app.add_subcommand(
        "check-dichotomy", "one vanishing image class per declared exchange pair");
    add_spec_arg(sub_dicho);

    CLI::App* sub_pairs =
        app.add_subcommand("exchange-pairs", "ordered pairs with dim Hom(s0, susp s_top) = 1");
    add_spec_arg(sub_pairs);

    CLI::App* sub_cone =
        app.add_subcommand("frieze-cone", "inequality rows cutting out the admissible functionals");
    add_spec_arg(sub_cone);
    sub_cone->add_flag("--json", as_json, "emit JSON");

    CLI::App* sub_frieze = app.add_subcommand("frieze", "values of phi composed with the index");
    add_spec_arg(sub_frieze);
    sub_frieze->add_option("--phi", phi_text, "comma-separated integers, one per tilting summand")
        ->required();
    sub_frieze->add_flag("--check", check, "append the per-pair exchange relation report");
    sub_frieze->add_flag("--json", as_json, "emit JSON");

    CLI::App* sub_checkf =
        app.add_subcommand("check-frieze", "exchange relations for values from a JSON file");
    add_spec_arg(sub_checkf);
    sub_checkf->add_option("--values", values_path, "JSON file mapping names to integers")
        ->required();

    CLI::App* sub_enum =
        app.add_subcommand("enumerate", "admissible integer functionals in a box");
    add_spec_arg(sub_enum);
    sub_enum->add_option("--bound", bound, "half-width B of the box [-B, B]^r")->required();
    sub_enum->add_option("--limit", limit, "print at most this many");
    sub_enum->add_option("--threads", threads, "worker threads (default 1)");

    CLI::App* sub_prop =
        app.add_subcommand("propagate", "solve the window recursion around the cycle");
    add_spec_arg(sub_prop);
    sub_prop->add_option("--seed", seed_text, "comma-separated integers, d+1 of them")->required();
    sub_prop->add_option("--start", start, "indecomposable the seed starts at")->required();

    CLI::App* sub_dot = app.add_subcommand("dot", "Graphviz rendering of the AR quiver");
    add_spec_arg(sub_dot);

    CLI::App* sub_example = app.add_subcommand("example", "built-in category specs");
    sub_example->add_option("name", example_name, "builtin name (ot-a4)")->required();
    sub_example->add_option("--emit", emit_path, "write the spec document to this file");
    sub_example->add_flag("--report", example_report, "run the full verification pipeline");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sub_example) return cmd_example(example_name, emit_path, example_report, out);

        const CategorySpec spec = resolve_spec(spec_arg);
        if (*sub_validate) return cmd_validate(spec, out);
        if (!ensure_valid(spec, err)) return kExitUsage;

        if (*sub_index) return cmd_index(spec, as_json, out);
        if (*sub_theta) return cmd_theta(spec, as_json, out);
        if (*sub_add) return cmd_check_additivity(spec, out);
        if (*sub_dicho) return cmd_check_dichotomy(spec, out);
        if (*sub_pairs) return cmd_exchange_pairs(spec, out);
        if (*sub_cone) return cmd_frieze_cone(spec, as_json, out);
        if (*sub_frieze) return cmd_frieze(spec, phi_text, check, as_json, out, err);
        if (*sub_checkf) return cmd_check_frieze(spec, values_path, out);
        if (*sub_enum) return cmd_enumerate(spec, bound, limit, threads, out);
        if (*sub_prop) return cmd_propagate(spec, seed_text, start, out);
        if (*sub_dot) {
            out << emit_dot(spec);
            return kExitOk;
        }
        err << "error: no subcommand dispatched\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace tropfrieze
