#include "tropfrieze/index.hpp"

namespace tropfrieze {

namespace {

/* sum of the first d+1 terms with the term at position d carrying +1 */
FreeAbelianElement resolution_alternating_sum(const CategorySpec& spec, const Basis& tilting,
                                              const Angle& res, const std::string& name) {
    FreeAbelianElement out(tilting);
    for (int j = 0; j <= spec.d; ++j) {
        const int sign = ((spec.d - j) % 2 == 0) ? 1 : -1;
        for (const auto& [tn, k] : res.terms[j].mult) {
            auto idx = tilting.find(tn);
            if (!idx)
                throw Error("resolution of " + name + " uses non-tilting term " + tn);
            out += (static_cast<Coeff>(sign) * k) * FreeAbelianElement::unit(tilting, tn);
        }
    }
    return out;
}

}  // namespace

const FreeAbelianElement& IndexTable::at(std::string_view name) const {
    for (const auto& [n, e] : entries)
        if (n == name) return e;
    throw Error("no index entry for " + std::string(name));
}

FreeAbelianElement index_of_indec(const CategorySpec& spec, const std::string& name) {
    auto it = spec.resolutions.find(name);
    if (it == spec.resolutions.end()) throw Error("no resolution angle for " + name);
    const Angle& res = it->second;
    if (static_cast<int>(res.terms.size()) != spec.d + 2)
        throw Error("resolution of " + name + " has wrong arity");
    return resolution_alternating_sum(spec, spec.tilting_basis(), res, name);
}

FreeAbelianElement index_of_object(const CategorySpec& spec, const ObjectExpr& o) {
    FreeAbelianElement out(spec.tilting_basis());
    for (const auto& [name, k] : o.mult)
        out += static_cast<Coeff>(k) * index_of_indec(spec, name);
    return out;
}

IndexTable index_table(const CategorySpec& spec) {
    IndexTable table{spec.tilting_basis(), {}};
    table.entries.reserve(spec.indecs.size());
    for (const auto& name : spec.indecs)
        table.entries.emplace_back(name, index_of_indec(spec, name));
    return table;
}

std::vector<Violation> resolution_consistency(const CategorySpec& spec) {
    std::vector<Violation> out;
    const Basis tilting = spec.tilting_basis();
    const int arity = spec.d + 2;
    for (std::size_t i = 0; i < spec.angles.size(); ++i) {
        const Angle& a = spec.angles[i];
        if (static_cast<int>(a.terms.size()) != arity) continue;
        const ObjectExpr& back = a.terms.back();
        if (back.mult.size() != 1 || back.mult.begin()->second != 1) continue;
        const std::string& target = back.mult.begin()->first;
        if (!spec.resolutions.count(target)) continue;
        bool supported = true;
        for (int j = 0; j <= spec.d && supported; ++j)
            for (const auto& [tn, k] : a.terms[j].mult) {
                (void)k;
                if (!tilting.find(tn)) supported = false;
            }
        if (!supported) continue;
        FreeAbelianElement from_angle =
            resolution_alternating_sum(spec, tilting, a, target);
        FreeAbelianElement from_resolution = index_of_indec(spec, target);
        if (from_angle != from_resolution)
            out.push_back(Violation{
                "resolution-consistency",
                "angle " + std::to_string(i) + " resolves " + target + " to " +
                    from_angle.str() + " but its resolution gives " + from_resolution.str()});
    }
    return out;
}

}  // namespace tropfrieze
