#include "tropfrieze/frieze.hpp"

#include <algorithm>
#include <thread>

namespace tropfrieze {

Coeff FriezeValues::at(std::string_view name) const {
    for (const auto& [n, v] : values)
        if (n == name) return v;
    throw Error("no frieze value for " + std::string(name));
}

Coeff FriezeValues::at_object(const ObjectExpr& o) const {
    Coeff out = 0;
    for (const auto& [name, k] : o.mult) out += static_cast<Coeff>(k) * at(name);
    return out;
}

ConeMatrix cone_matrix(const CategorySpec& spec, const ThetaMap& theta) {
    ConeMatrix cone{spec.tilting_basis(), {}};
    cone.rows.reserve(spec.tilting.size());
    for (std::size_t j = 0; j < spec.tilting.size(); ++j) cone.rows.push_back(theta.hom.column(j));
    return cone;
}

namespace {

Coeff dot(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    Coeff out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

}  // namespace

bool phi_admissible(const ConeMatrix& cone, const PhiVector& phi) {
    if (phi.coeffs.size() != cone.tilting.size())
        throw FriezeError("phi needs " + std::to_string(cone.tilting.size()) + " coordinates, got " +
                          std::to_string(phi.coeffs.size()));
    for (const auto& row : cone.rows)
        if (dot(row.coeffs(), phi.coeffs) < 0) return false;
    return true;
}

FriezeValues frieze_from_phi(const CategorySpec& spec, const IndexTable& table,
                             const PhiVector& phi) {
    if (spec.d % 2 == 0)
        throw FriezeError("tropical frieze construction requires odd d, got d = " +
                          std::to_string(spec.d));
    if (!spec.calabi_yau_2d)
        throw FriezeError("tropical frieze construction requires a 2d-Calabi-Yau category "
                          "(calabi_yau_2d = true)");
    if (phi.coeffs.size() != table.tilting.size())
        throw FriezeError("phi needs " + std::to_string(table.tilting.size()) +
                          " coordinates, got " + std::to_string(phi.coeffs.size()));
    FriezeValues f;
    f.values.reserve(table.entries.size());
    for (const auto& [name, index] : table.entries)
        f.values.emplace_back(name, dot(phi.coeffs, index.coeffs()));
    return f;
}

namespace {

/*
 * Alternating value sum over the middle terms of an angle. The term next
 * to the s0 end carries +1 and signs alternate away from it; s0 sits at
 * the back of angle01 and at the front of angle02.
 */
Coeff middle_sum(const FriezeValues& f, const Angle& angle, bool s0_at_back) {
    const int d = static_cast<int>(angle.terms.size()) - 2;
    Coeff out = 0;
    for (int j = 1; j <= d; ++j) {
        const int dist = s0_at_back ? d - j : j - 1;
        const Coeff sign = (dist % 2 == 0) ? 1 : -1;
        out += sign * f.at_object(angle.terms[j]);
    }
    return out;
}

}  // namespace

CheckReport check_frieze(const CategorySpec& spec, const FriezeValues& f) {
    CheckReport report;
    const Coeff top_sign = ((spec.d + 1) % 2 == 0) ? 1 : -1;
    for (const auto& pr : spec.exchange_pairs) {
        const std::string name = "pair (" + pr.s0 + ", " + pr.s_top + ")";
        auto in_range = [&](int r) {
            return r >= 0 && r < static_cast<int>(spec.angles.size());
        };
        if (!in_range(pr.angle01) || !in_range(pr.angle02)) {
            report.push_back({CheckStatus::skipped, name, "angle reference out of range"});
            continue;
        }
        const Coeff L = f.at(pr.s0) + top_sign * f.at(pr.s_top);
        const Coeff X = middle_sum(f, spec.angles[pr.angle01], /*s0_at_back=*/true);
        const Coeff Y = middle_sum(f, spec.angles[pr.angle02], /*s0_at_back=*/false);
        const bool ok = L == std::max(X, Y);
        report.push_back({ok ? CheckStatus::pass : CheckStatus::fail, name,
                          "L=" + std::to_string(L) + " X=" + std::to_string(X) +
                              " Y=" + std::to_string(Y)});
    }
    return report;
}

namespace {

void enumerate_range(const ConeMatrix& cone, Coeff bound, Coeff first_lo, Coeff first_hi,
                     std::vector<PhiVector>& out) {
    const std::size_t r = cone.tilting.size();
    std::vector<Coeff> phi(r, -bound);
    if (r == 0) {
        out.push_back(PhiVector{});
        return;
    }
    phi[0] = first_lo;
    while (true) {
        bool ok = true;
        for (const auto& row : cone.rows)
            if (dot(row.coeffs(), phi) < 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(PhiVector{phi});
        // odometer step, most significant coordinate first
        std::size_t pos = r;
        while (pos > 0) {
            --pos;
            const Coeff hi = (pos == 0) ? first_hi : bound;
            if (phi[pos] < hi) {
                ++phi[pos];
                std::fill(phi.begin() + static_cast<std::ptrdiff_t>(pos) + 1, phi.end(), -bound);
                break;
            }
            if (pos == 0) return;
        }
    }
}

}  // namespace

std::vector<PhiVector> enumerate_admissible(const ConeMatrix& cone, Coeff bound,
                                            const EnumerateOptions& options) {
    if (bound < 0) throw FriezeError("bound must be nonnegative");
    const std::size_t r = cone.tilting.size();
    const long long side = 2 * static_cast<long long>(bound) + 1;
    long long box = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (box > options.work_limit / side)
            throw FriezeError("enumeration box (2*" + std::to_string(bound) + "+1)^" +
                              std::to_string(r) + " exceeds the work limit " +
                              std::to_string(options.work_limit));
        box *= side;
    }

    std::vector<PhiVector> out;
    const int threads = std::max(1, options.threads);
    if (threads == 1 || r == 0 || side < 2 * threads) {
        enumerate_range(cone, bound, -bound, bound, out);
        return out;
    }

    // split the first coordinate; chunk order preserves lexicographic order
    std::vector<std::vector<PhiVector>> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    const long long span = side / threads;
    for (int w = 0; w < threads; ++w) {
        const Coeff lo = -bound + static_cast<Coeff>(w) * static_cast<Coeff>(span);
        const Coeff hi =
            (w == threads - 1) ? bound : lo + static_cast<Coeff>(span) - 1;
        workers.emplace_back([&cone, bound, lo, hi, &parts, w]() {
            enumerate_range(cone, bound, lo, hi, parts[static_cast<std::size_t>(w)]);
        });
    }
    for (auto& t : workers) t.join();
    for (auto& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    return out;
}

PropagateResult propagate_window(const CategorySpec& spec, const std::vector<Coeff>& seed,
                                 const std::string& start) {
    const int d = spec.d;
    const int n = static_cast<int>(spec.indecs.size());
    if (d % 2 == 0)
        throw FriezeError("window propagation requires odd d, got d = " + std::to_string(d));
    if (static_cast<int>(seed.size()) != d + 1)
        throw FriezeError("seed needs d+1 = " + std::to_string(d + 1) + " values, got " +
                          std::to_string(seed.size()));
    if (n < d + 2)
        throw FriezeError("not of cyclic-window shape: fewer than d+2 indecomposables");
    auto start_pos = spec.position(start);
    if (!start_pos) throw FriezeError("unknown start indecomposable " + start);

    // every declared pair must be a consecutive window with a trivial second angle
    if (static_cast<int>(spec.exchange_pairs.size()) != n)
        throw FriezeError("not of cyclic-window shape: need one exchange pair per "
                          "indecomposable, got " +
                          std::to_string(spec.exchange_pairs.size()));
    std::vector<int> pair_of_start(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < spec.exchange_pairs.size(); ++p) {
        const ExchangePairDecl& pr = spec.exchange_pairs[p];
        if (pr.angle01 < 0 || pr.angle01 >= static_cast<int>(spec.angles.size()) ||
            pr.angle02 < 0 || pr.angle02 >= static_cast<int>(spec.angles.size()))
            throw FriezeError("not of cyclic-window shape: bad angle reference");
        const Angle& a01 = spec.angles[static_cast<std::size_t>(pr.angle01)];
        const Angle& a02 = spec.angles[static_cast<std::size_t>(pr.angle02)];
        if (static_cast<int>(a01.terms.size()) != d + 2 ||
            static_cast<int>(a02.terms.size()) != d + 2)
            throw FriezeError("not of cyclic-window shape: wrong angle arity");
        std::optional<std::size_t> c;
        for (int j = 0; j < d + 2; ++j) {
            const ObjectExpr& term = a01.terms[static_cast<std::size_t>(j)];
            if (term.mult.size() != 1 || term.mult.begin()->second != 1)
                throw FriezeError("not of cyclic-window shape: window terms must be single "
                                  "indecomposables");
            auto pos = spec.position(term.mult.begin()->first);
            if (!pos)
                throw FriezeError("not of cyclic-window shape: unknown term " +
                                  term.mult.begin()->first);
            if (j == 0)
                c = *pos;
            else if (static_cast<int>(*pos) != (static_cast<int>(*c) + j) % n)
                throw FriezeError("not of cyclic-window shape: window of pair " +
                                  std::to_string(p) + " is not consecutive");
        }
        for (int j = 1; j <= d; ++j)
            if (!a02.terms[static_cast<std::size_t>(j)].is_zero())
                throw FriezeError("not of cyclic-window shape: second angle of pair " +
                                  std::to_string(p) + " is not trivial");
        if (spec.suspend(pr.s0) != pr.s_top)
            throw FriezeError("not of cyclic-window shape: suspension of " + pr.s0 +
                              " is not " + pr.s_top);
        if (pair_of_start[*c] != -1)
            throw FriezeError("not of cyclic-window shape: two windows start at " +
                              spec.indecs[*c]);
        pair_of_start[*c] = static_cast<int>(p);
    }
    for (int c = 0; c < n; ++c)
        if (pair_of_start[static_cast<std::size_t>(c)] == -1)
            throw FriezeError("not of cyclic-window shape: no window starts at " +
                              spec.indecs[static_cast<std::size_t>(c)]);

    // seed d+1 consecutive positions, then walk the windows once around
    std::vector<std::optional<Coeff>> f(static_cast<std::size_t>(n));
    const int p0 = static_cast<int>(*start_pos);
    for (int k = 0; k <= d; ++k)
        f[static_cast<std::size_t>((p0 + k) % n)] = seed[static_cast<std::size_t>(k)];

    PropagateResult result;
    for (int step = 0; step < n; ++step) {
        const int c = (p0 + step) % n;
        Coeff x = 0;
        for (int j = 1; j <= d; ++j) {
            const Coeff sign = ((d - j) % 2 == 0) ? 1 : -1;
            x += sign * *f[static_cast<std::size_t>((c + j) % n)];
        }
        const Coeff v = std::max<Coeff>(x, 0) - *f[static_cast<std::size_t>(c)];
        const int tgt = (c + d + 1) % n;
        auto& slot = f[static_cast<std::size_t>(tgt)];
        if (!slot) {
            slot = v;
        } else if (*slot != v) {
            result.conflict_at = spec.indecs[static_cast<std::size_t>(tgt)];
            result.existing = *slot;
            result.recomputed = v;
            return result;
        }
    }

    FriezeValues values;
    values.values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        values.values.emplace_back(spec.indecs[static_cast<std::size_t>(i)],
                                   *f[static_cast<std::size_t>(i)]);
    result.values = std::move(values);
    return result;
}

}  // namespace tropfrieze
