#include "tropfrieze/theta.hpp"

namespace tropfrieze {

FreeAbelianElement angle_alternating_sum(const CategorySpec& spec, const IndexTable& table,
                                         const Angle& angle) {
    FreeAbelianElement out(table.tilting);
    const int last = static_cast<int>(angle.terms.size()) - 1;
    for (int j = 0; j <= last; ++j) {
        const int sign = ((last - j) % 2 == 0) ? 1 : -1;
        for (const auto& [name, k] : angle.terms[j].mult)
            out += (static_cast<Coeff>(sign) * k) * table.at(name);
    }
    return out;
}

namespace {

/* position of the simple when the class is a unit vector, else nullopt */
std::optional<std::size_t> as_unit_simple(const FreeAbelianElement& e) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
        if (e.coeffs()[i] == 0) continue;
        if (e.coeffs()[i] != 1 || hit) return std::nullopt;
        hit = i;
    }
    return hit;
}

std::string pair_name(const ExchangePairDecl& pr) {
    return "pair (" + pr.s0 + ", " + pr.s_top + ")";
}

}  // namespace

ThetaMap theta_from_spec(const CategorySpec& spec, const IndexTable& table) {
    const Basis sb = spec.simple_basis();
    std::vector<std::optional<FreeAbelianElement>> columns(spec.tilting.size());

    for (const auto& angle : spec.angles) {
        if (!angle.image_class) continue;
        if (angle.image_class->basis() != sb)
            throw ThetaError("angle image class is not over the simple basis");
        auto j = as_unit_simple(*angle.image_class);
        if (!j) continue;  // not a determining angle
        FreeAbelianElement sum = angle_alternating_sum(spec, table, angle);
        if (columns[*j] && *columns[*j] != sum)
            throw ThetaError("inconsistent determining angles for " + sb.label(*j) + ": " +
                             columns[*j]->str() + " vs " + sum.str());
        columns[*j] = std::move(sum);
    }

    std::vector<FreeAbelianElement> cols;
    cols.reserve(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (!columns[j]) throw ThetaError("no determining angle for " + sb.label(j));
        cols.push_back(std::move(*columns[j]));
    }
    return ThetaMap{GroupHomomorphism::from_columns(sb, table.tilting, cols)};
}

CheckReport verify_additivity(const CategorySpec& spec, const IndexTable& table,
                             const ThetaMap& theta) {
    CheckReport report;
    for (std::size_t i = 0; i < spec.angles.size(); ++i) {
        const Angle& angle = spec.angles[i];
        const std::string name = "angle " + std::to_string(i);
        if (!angle.image_class) {
            report.push_back({CheckStatus::skipped, name, "no image class label"});
            continue;
        }
        FreeAbelianElement lhs = angle_alternating_sum(spec, table, angle);
        FreeAbelianElement rhs = theta.hom.apply(*angle.image_class);
        report.push_back({lhs == rhs ? CheckStatus::pass : CheckStatus::fail, name,
                          "sum=" + lhs.str() + " theta=" + rhs.str()});
    }
    return report;
}

CheckReport verify_dichotomy(const CategorySpec& spec) {
    if (!spec.calabi_yau_2d)
        throw Error("dichotomy check requires a 2d-Calabi-Yau category (calabi_yau_2d = true)");
    CheckReport report;
    for (const auto& pr : spec.exchange_pairs) {
        const std::string name = pair_name(pr);
        auto in_range = [&](int r) {
            return r >= 0 && r < static_cast<int>(spec.angles.size());
        };
        if (!in_range(pr.angle01) || !in_range(pr.angle02)) {
            report.push_back({CheckStatus::skipped, name, "angle reference out of range"});
            continue;
        }
        const auto& im01 = spec.angles[pr.angle01].image_class;
        const auto& im02 = spec.angles[pr.angle02].image_class;
        if (!im01 || !im02) {
            report.push_back({CheckStatus::skipped, name, "missing image class label"});
            continue;
        }
        const bool ok = im01->is_zero() || im02->is_zero();
        report.push_back({ok ? CheckStatus::pass : CheckStatus::fail, name,
                          "im01=" + im01->str() + " im02=" + im02->str()});
    }
    return report;
}

}  // namespace tropfrieze
