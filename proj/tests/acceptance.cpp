/*
 * Acceptance suite: runs the end-to-end checks for the built-in worked
 * example and prints one PASS/FAIL line per criterion. Exits nonzero if
 * any criterion fails. Everything here is exact integer arithmetic; the
 * only tolerance is a wall-clock bound on the exhaustive cone check.
 */
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "tropfrieze/cli.hpp"
#include "tropfrieze/example.hpp"
#include "tropfrieze/frieze.hpp"
#include "tropfrieze/index.hpp"
#include "tropfrieze/theta.hpp"

using namespace tropfrieze;

namespace {

struct Criterion {
    std::string name;
    std::function<std::string()> check;  // empty string = pass, otherwise failure detail
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (line.find(needle) != std::string::npos) ++n;
    return n;
}

std::string criterion_index_table() {
    const auto spec = builtin_ot_a4();
    const auto fx = builtin_fixtures();
    const auto table = index_table(spec);
    if (table.entries.size() != 9) return "expected 9 rows";
    for (std::size_t i = 0; i < 9; ++i) {
        if (table.entries[i].first != fx.index_table_expected[i].first ||
            table.entries[i].second != fx.index_table_expected[i].second)
            return "row " + table.entries[i].first + " is " + table.entries[i].second.str();
    }
    std::string text;
    if (run_cli({"index", "builtin:ot-a4"}, &text) != 0) return "CLI exit code nonzero";
    if (text.find("-P(1)+P(2)-P(3)+P(4)") == std::string::npos) return "CLI output lacks I(4) row";
    return "";
}

std::string criterion_theta_table() {
    const auto spec = builtin_ot_a4();
    const auto fx = builtin_fixtures();
    const auto theta = theta_from_spec(spec, index_table(spec));
    for (std::size_t j = 0; j < 4; ++j)
        if (theta.hom.column(j) != fx.theta_expected[j])
            return "column " + theta.hom.domain().label(j) + " is " + theta.hom.column(j).str();
    std::string text;
    if (run_cli({"theta", "builtin:ot-a4"}, &text) != 0) return "CLI exit code nonzero";
    return "";
}

std::string criterion_inequalities() {
    const auto spec = builtin_ot_a4();
    const auto fx = builtin_fixtures();
    const auto theta = theta_from_spec(spec, index_table(spec));
    const auto cone = cone_matrix(spec, theta);
    if (cone.rows.size() != 4) return "expected 4 rows";
    for (std::size_t i = 0; i < 4; ++i)
        if (cone.rows[i] != fx.inequalities_expected[i])
            return "row " + std::to_string(i) + " is " + cone.rows[i].str();
    std::string text;
    if (run_cli({"frieze-cone", "builtin:ot-a4"}, &text) != 0) return "CLI exit code nonzero";
    const std::string expected =
        "S(P(1)): P(2)-P(3)+P(4) >= 0\n"
        "S(P(2)): -P(1)+P(3)-P(4) >= 0\n"
        "S(P(3)): P(1)-P(2)+P(4) >= 0\n"
        "S(P(4)): -P(1)+P(2)-P(3) >= 0\n";
    if (text != expected) return "CLI rows differ";
    return "";
}

std::string criterion_figure_frieze() {
    const auto spec = builtin_ot_a4();
    const auto fx = builtin_fixtures();
    const auto f = frieze_from_phi(spec, index_table(spec), fx.sample_phi);
    for (std::size_t i = 0; i < 9; ++i)
        if (f.values[i].second != fx.figure_values[i])
            return "value at " + f.values[i].first + " is " + std::to_string(f.values[i].second);
    std::string text;
    if (run_cli({"frieze", "builtin:ot-a4", "--phi", "-17,-8,2,19", "--check"}, &text) != 0)
        return "CLI exit code nonzero";
    if (count_lines_with(text, "PASS pair") != 9) return "expected 9 PASS lines";
    return "";
}

std::string criterion_additivity() {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const auto theta = theta_from_spec(spec, table);
    const auto report = verify_additivity(spec, table, theta);
    if (report.size() != 18) return "expected 18 labelled angles";
    for (const auto& item : report)
        if (item.status != CheckStatus::pass) return item.name + ": " + item.detail;
    if (run_cli({"check-additivity", "builtin:ot-a4"}) != 0) return "CLI exit code nonzero";
    return "";
}

std::string criterion_dichotomy() {
    const auto report = verify_dichotomy(builtin_ot_a4());
    if (report.size() != 9) return "expected 9 pairs";
    for (const auto& item : report)
        if (item.status != CheckStatus::pass) return item.name + ": " + item.detail;
    if (run_cli({"check-dichotomy", "builtin:ot-a4"}) != 0) return "CLI exit code nonzero";
    return "";
}

std::string criterion_forward_exhaustive() {
    const auto start = std::chrono::steady_clock::now();
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const auto theta = theta_from_spec(spec, table);
    const auto cone = cone_matrix(spec, theta);
    const auto points = enumerate_admissible(cone, 5);
    // count fixed beforehand by brute force over all 11^4 = 14641 vectors
    if (points.size() != 196)
        return "expected 196 admissible functionals, got " + std::to_string(points.size());
    for (const auto& phi : points) {
        const auto f = frieze_from_phi(spec, table, phi);
        const auto report = check_frieze(spec, f);
        if (report.size() != 9) return "expected 9 pairs per functional";
        if (report_has_failure(report)) {
            std::string coords;
            for (Coeff c : phi.coeffs) coords += std::to_string(c) + " ";
            return "functional " + coords + "fails the exchange relations";
        }
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (ms >= 5000) return "took " + std::to_string(ms) + " ms, budget is 5000";
    return "";
}

std::string criterion_property_suites() {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const auto theta = theta_from_spec(spec, table);
    const auto cone = cone_matrix(spec, theta);
    const Basis tb = spec.tilting_basis();
    const Basis sb = spec.simple_basis();
    std::mt19937 rng(271828);

    // index additivity on random multisets
    {
        std::uniform_int_distribution<int> pick(0, 8);
        std::uniform_int_distribution<int> count(0, 6);
        for (int trial = 0; trial < 1000; ++trial) {
            ObjectExpr a, b;
            for (int i = count(rng); i > 0; --i)
                a.add(spec.indecs[static_cast<std::size_t>(pick(rng))]);
            for (int i = count(rng); i > 0; --i)
                b.add(spec.indecs[static_cast<std::size_t>(pick(rng))]);
            ObjectExpr both = a;
            for (const auto& [n, k] : b.mult) both.add(n, k);
            if (index_of_object(spec, both) != index_of_object(spec, a) + index_of_object(spec, b))
                return "index additivity failed on trial " + std::to_string(trial);
        }
    }

    // tilting normalization and the odd-d suspension sign
    for (const auto& t : spec.tilting) {
        if (index_of_indec(spec, t) != FreeAbelianElement::unit(tb, t))
            return "index of " + t + " is not its own class";
        if (index_of_indec(spec, spec.suspend(t)) != -FreeAbelianElement::unit(tb, t))
            return "index of the suspension of " + t + " is not the negated class";
    }

    // theta linearity
    {
        std::uniform_int_distribution<Coeff> dist(-10, 10);
        for (int trial = 0; trial < 500; ++trial) {
            const FreeAbelianElement a(sb, {dist(rng), dist(rng), dist(rng), dist(rng)});
            const FreeAbelianElement b(sb, {dist(rng), dist(rng), dist(rng), dist(rng)});
            if (theta.hom.apply(a + b) != theta.hom.apply(a) + theta.hom.apply(b))
                return "theta linearity failed on trial " + std::to_string(trial);
        }
    }

    // window propagation agrees with the functional construction
    {
        std::uniform_int_distribution<Coeff> dist(-10, 10);
        int found = 0;
        while (found < 100) {
            const PhiVector phi{{dist(rng), dist(rng), dist(rng), dist(rng)}};
            if (!phi_admissible(cone, phi)) continue;
            ++found;
            const auto f = frieze_from_phi(spec, table, phi);
            const std::vector<Coeff> seed = {f.values[0].second, f.values[1].second,
                                             f.values[2].second, f.values[3].second};
            const auto result = propagate_window(spec, seed, "P(1)");
            if (!result.closed()) return "propagation failed to close on an admissible functional";
            if (*result.values != f) return "propagation disagrees with the functional values";
        }
    }

    return "";
}

std::string criterion_round_trip() {
    const auto spec = builtin_ot_a4();
    if (load_spec(emit_spec(spec)) != spec) return "emit/load is not the identity";
    if (!validate(spec).empty()) return "built-in spec has violations";
    return "";
}

std::string criterion_negative_fixtures() {
    struct Corruption {
        std::string rule;
        std::function<void(CategorySpec&)> apply;
    };
    const std::vector<Corruption> corruptions = {
        {"suspension-not-bijective", [](CategorySpec& s) { s.suspension["S3P(4)"] = "P(1)"; }},
        {"ot-rigidity", [](CategorySpec& s) { s.hom.dims[0][5] = 1; }},
        {"angle-arity", [](CategorySpec& s) { s.angles[0].terms.pop_back(); }},
        {"resolution-missing", [](CategorySpec& s) { s.resolutions.erase("I(4)"); }},
        {"pair-endpoints", [](CategorySpec& s) { s.exchange_pairs[0].s_top = "P(2)"; }},
        {"image-class-negative",
         [](CategorySpec& s) {
             s.angles[13].image_class = FreeAbelianElement(s.simple_basis(), {-1, 0, 0, 0});
         }},
    };
    for (const auto& c : corruptions) {
        CategorySpec spec = builtin_ot_a4();
        c.apply(spec);
        const auto report = validate(spec);
        bool hit = false;
        for (const auto& v : report) hit = hit || v.rule == c.rule;
        if (!hit) return "corruption \"" + c.rule + "\" was not flagged";
    }
    return "";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"index table matches the golden 9-row table", criterion_index_table},
        {"theta matches the golden 4-column table", criterion_theta_table},
        {"admissibility cone emits the four golden inequality rows", criterion_inequalities},
        {"sample functional reproduces the golden frieze with 9/9 checks", criterion_figure_frieze},
        {"additivity with error term holds on all 18 labelled angles", criterion_additivity},
        {"dichotomy holds on all 9 exchange pairs", criterion_dichotomy},
        {"every admissible functional in [-5,5]^4 (196 of them) gives a frieze",
         criterion_forward_exhaustive},
        {"property suites: additivity, normalization, signs, linearity, propagation",
         criterion_property_suites},
        {"spec document round-trips and validates cleanly", criterion_round_trip},
        {"six single-field corruptions are rejected with the right rule",
         criterion_negative_fixtures},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            detail = criteria[i].check();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const bool ok = detail.empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].name;
        if (!ok) std::cout << " -- " << detail;
        std::cout << "\n";
    }
    std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failures)) << "/"
              << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
