#include "tropfrieze/catspec.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace tropfrieze {

using json = nlohmann::ordered_json;

ObjectExpr ObjectExpr::single(std::string name) {
    ObjectExpr o;
    o.mult.emplace(std::move(name), 1);
    return o;
}

void ObjectExpr::add(std::string_view name, int k) {
    if (k < 0) throw Error("negative multiplicity for " + std::string(name));
    if (k == 0) return;
    mult[std::string(name)] += k;
}

bool ObjectExpr::is_single(std::string_view name) const {
    return mult.size() == 1 && mult.begin()->first == name && mult.begin()->second == 1;
}

std::string ObjectExpr::str() const {
    std::string out;
    for (const auto& [name, k] : mult) {
        if (!out.empty()) out += '+';
        if (k != 1) out += std::to_string(k) + "*";
        out += name;
    }
    return out.empty() ? "0" : out;
}

std::string simple_label(std::string_view tilting_name) {
    return "S(" + std::string(tilting_name) + ")";
}

std::optional<std::size_t> CategorySpec::position(std::string_view name) const {
    for (std::size_t i = 0; i < indecs.size(); ++i)
        if (indecs[i] == name) return i;
    return std::nullopt;
}

int CategorySpec::hom_dim(std::string_view src, std::string_view dst) const {
    auto i = position(src);
    auto j = position(dst);
    if (!i) throw Error("unknown indecomposable: " + std::string(src));
    if (!j) throw Error("unknown indecomposable: " + std::string(dst));
    if (*i >= hom.dims.size() || *j >= hom.dims[*i].size())
        throw Error("hom table does not cover all indecomposables");
    return hom.dims[*i][*j];
}

const std::string& CategorySpec::suspend(std::string_view name) const {
    auto it = suspension.find(std::string(name));
    if (it == suspension.end())
        throw Error("no suspension image for " + std::string(name));
    return it->second;
}

Basis CategorySpec::tilting_basis() const {
    return Basis(tilting);
}

Basis CategorySpec::simple_basis() const {
    std::vector<std::string> labels;
    labels.reserve(tilting.size());
    for (const auto& t : tilting) labels.push_back(simple_label(t));
    return Basis(std::move(labels));
}

ObjectExpr suspend_object(const CategorySpec& spec, const ObjectExpr& o) {
    ObjectExpr out;
    for (const auto& [name, k] : o.mult) out.add(spec.suspend(name), k);
    return out;
}

std::vector<std::pair<std::string, std::string>> candidate_exchange_pairs(const CategorySpec& spec) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& a : spec.indecs)
        for (const auto& b : spec.indecs)
            if (spec.hom_dim(a, spec.suspend(b)) == 1) out.emplace_back(a, b);
    return out;
}

std::vector<Violation> validate(const CategorySpec& spec) {
    std::vector<Violation> out;
    auto flag = [&](std::string rule, std::string detail) {
        out.push_back(Violation{std::move(rule), std::move(detail)});
    };

    if (spec.d < 1) flag("d-positive", "d = " + std::to_string(spec.d));
    const int arity = spec.d + 2;

    std::set<std::string> names;
    for (const auto& n : spec.indecs)
        if (!names.insert(n).second) flag("indec-duplicate", n);
    auto known = [&](const std::string& n) { return names.count(n) != 0; };

    auto check_object = [&](const ObjectExpr& o, const std::string& where) {
        for (const auto& [n, k] : o.mult) {
            if (!known(n)) flag("indec-unknown", where + " references " + n);
            if (k <= 0)
                flag("object-negative",
                     where + " has multiplicity " + std::to_string(k) + " for " + n);
        }
    };

    // suspension: total and bijective on the indecomposables
    bool susp_total = true;
    for (const auto& n : spec.indecs)
        if (!spec.suspension.count(n)) {
            flag("suspension-total", "no image for " + n);
            susp_total = false;
        }
    bool susp_values_ok = true;
    std::map<std::string, int> hits;
    for (const auto& [src, dst] : spec.suspension) {
        if (!known(src)) flag("indec-unknown", "suspension key " + src);
        if (!known(dst)) {
            flag("indec-unknown", "suspension value " + dst);
            susp_values_ok = false;
        } else {
            ++hits[dst];
        }
    }
    if (susp_total && susp_values_ok) {
        for (const auto& [dst, c] : hits)
            if (c > 1)
                flag("suspension-not-bijective",
                     std::to_string(c) + " indecomposables map to " + dst);
        for (const auto& n : spec.indecs)
            if (!hits.count(n)) flag("suspension-not-bijective", "nothing maps to " + n);
    }

    // hom table: square, nonnegative, diagonal >= 1 (identity morphisms)
    const std::size_t n = spec.indecs.size();
    bool hom_ok = spec.hom.dims.size() == n;
    for (const auto& row : spec.hom.dims)
        if (row.size() != n) hom_ok = false;
    if (!hom_ok) {
        flag("hom-shape", "hom table is not " + std::to_string(n) + "x" + std::to_string(n));
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (spec.hom.dims[i][j] < 0)
                    flag("hom-negative", "dim Hom(" + spec.indecs[i] + ", " + spec.indecs[j] +
                                             ") = " + std::to_string(spec.hom.dims[i][j]));
            if (spec.hom.dims[i][i] < 1)
                flag("hom-diagonal", "dim Hom(" + spec.indecs[i] + ", " + spec.indecs[i] +
                                         ") = " + std::to_string(spec.hom.dims[i][i]));
        }
    }

    std::set<std::string> tset;
    for (const auto& t : spec.tilting) {
        if (!known(t)) flag("indec-unknown", "tilting entry " + t);
        if (!tset.insert(t).second) flag("tilting-duplicate", t);
    }
    const bool tilting_ok =
        tset.size() == spec.tilting.size() &&
        std::all_of(spec.tilting.begin(), spec.tilting.end(), known);

    // rigidity: Hom(t, Σᵈ t) = 0
    if (hom_ok && tilting_ok && susp_total && susp_values_ok) {
        for (const auto& t1 : spec.tilting)
            for (const auto& t2 : spec.tilting) {
                int dim = spec.hom_dim(t1, spec.suspend(t2));
                if (dim != 0)
                    flag("ot-rigidity", "dim Hom(" + t1 + ", susp " + t2 + ") = " +
                                            std::to_string(dim) + ", must be 0");
            }
    }

    // resolution angles: one per indecomposable, first d+1 terms in add(t)
    for (const auto& nm : spec.indecs)
        if (!spec.resolutions.count(nm)) flag("resolution-missing", nm);
    for (const auto& [nm, res] : spec.resolutions) {
        if (!known(nm)) flag("indec-unknown", "resolution key " + nm);
        const std::string where = "resolution of " + nm;
        if (static_cast<int>(res.terms.size()) != arity) {
            flag("resolution-arity", where + " has " + std::to_string(res.terms.size()) +
                                         " terms, need d+2 = " + std::to_string(arity));
            continue;
        }
        for (int j = 0; j <= spec.d; ++j) {
            check_object(res.terms[j], where + " term " + std::to_string(j));
            for (const auto& [tn, k] : res.terms[j].mult) {
                (void)k;
                if (known(tn) && !tset.count(tn))
                    flag("resolution-support", where + " term " + std::to_string(j) +
                                                   " uses non-tilting " + tn);
            }
        }
        if (!res.terms.back().is_single(nm))
            flag("resolution-target",
                 where + " ends in " + res.terms.back().str() + ", need " + nm);
    }

    // angles and their image classes
    std::optional<Basis> sb;
    if (tilting_ok) sb = spec.simple_basis();
    for (std::size_t i = 0; i < spec.angles.size(); ++i) {
        const Angle& a = spec.angles[i];
        const std::string where = "angle " + std::to_string(i);
        if (static_cast<int>(a.terms.size()) != arity)
            flag("angle-arity", where + " has " + std::to_string(a.terms.size()) +
                                    " terms, need d+2 = " + std::to_string(arity));
        for (std::size_t j = 0; j < a.terms.size(); ++j)
            check_object(a.terms[j], where + " term " + std::to_string(j));
        if (a.image_class) {
            if (sb && a.image_class->basis() != *sb) {
                flag("image-class-basis", where + " image class is not over the simple basis");
            } else {
                for (std::size_t j = 0; j < a.image_class->coeffs().size(); ++j)
                    if (a.image_class->coeffs()[j] < 0)
                        flag("image-class-negative",
                             where + " has coefficient " +
                                 std::to_string(a.image_class->coeffs()[j]) + " at " +
                                 a.image_class->basis().label(j));
            }
        }
    }

    // declared exchange pairs
    for (std::size_t p = 0; p < spec.exchange_pairs.size(); ++p) {
        const ExchangePairDecl& pr = spec.exchange_pairs[p];
        const std::string where = "exchange pair " + std::to_string(p) + " (" + pr.s0 + ", " +
                                  pr.s_top + ")";
        if (!known(pr.s0)) flag("indec-unknown", where + " s0");
        if (!known(pr.s_top)) flag("indec-unknown", where + " s_top");
        auto in_range = [&](int r) {
            return r >= 0 && r < static_cast<int>(spec.angles.size());
        };
        if (!in_range(pr.angle01) || !in_range(pr.angle02)) {
            flag("pair-angle-ref", where + " references angle " +
                                       std::to_string(!in_range(pr.angle01) ? pr.angle01
                                                                            : pr.angle02));
        } else {
            const Angle& a01 = spec.angles[pr.angle01];
            const Angle& a02 = spec.angles[pr.angle02];
            if (!a01.gamma_nonzero) flag("pair-gamma-zero", where + " angle01");
            if (!a02.gamma_nonzero) flag("pair-gamma-zero", where + " angle02");
            if (a01.terms.size() >= 2 &&
                !(a01.terms.front().is_single(pr.s_top) && a01.terms.back().is_single(pr.s0)))
                flag("pair-endpoints", where + " angle01 runs " + a01.terms.front().str() +
                                           " .. " + a01.terms.back().str() + ", need " +
                                           pr.s_top + " .. " + pr.s0);
            if (a02.terms.size() >= 2 &&
                !(a02.terms.front().is_single(pr.s0) && a02.terms.back().is_single(pr.s_top)))
                flag("pair-endpoints", where + " angle02 runs " + a02.terms.front().str() +
                                           " .. " + a02.terms.back().str() + ", need " + pr.s0 +
                                           " .. " + pr.s_top);
        }
        if (hom_ok && known(pr.s0) && known(pr.s_top) && spec.suspension.count(pr.s0) &&
            spec.suspension.count(pr.s_top) && known(spec.suspension.at(pr.s0)) &&
            known(spec.suspension.at(pr.s_top))) {
            int d1 = spec.hom_dim(pr.s0, spec.suspend(pr.s_top));
            int d2 = spec.hom_dim(pr.s_top, spec.suspend(pr.s0));
            if (d1 != 1 || d2 != 1)
                flag("pair-hom-dim", where + " has dims (" + std::to_string(d1) + ", " +
                                         std::to_string(d2) + "), need (1, 1)");
        }
    }

    return out;
}

// ---------------------------------------------------------------------------
// JSON document handling

namespace {

const json& require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SpecError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string require_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw SpecError(where + " must be a string");
    return j.get<std::string>();
}

ObjectExpr object_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw SpecError(where + " must be a list of indecomposable names");
    ObjectExpr o;
    for (const auto& e : j) o.add(require_string(e, where + " entry"), 1);
    return o;
}

json object_to_json(const ObjectExpr& o) {
    json arr = json::array();
    for (const auto& [name, k] : o.mult)
        for (int i = 0; i < k; ++i) arr.push_back(name);
    return arr;
}

std::vector<ObjectExpr> terms_from_json(const json& j, int arity, const std::string& where) {
    if (!j.is_array()) throw SpecError(where + ": \"terms\" must be a list");
    if (static_cast<int>(j.size()) != arity)
        throw SpecError(where + " has " + std::to_string(j.size()) + " terms, need d+2 = " +
                        std::to_string(arity));
    std::vector<ObjectExpr> terms;
    terms.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        terms.push_back(object_from_json(j.at(i), where + " term " + std::to_string(i)));
    return terms;
}

FreeAbelianElement image_from_json(const json& j, const CategorySpec& spec,
                                   const std::string& where) {
    if (!j.is_object()) throw SpecError(where + ": image_class must be an object or null");
    FreeAbelianElement e(spec.simple_basis());
    std::vector<Coeff> coeffs(spec.tilting.size(), 0);
    for (const auto& [key, val] : j.items()) {
        auto it = std::find(spec.tilting.begin(), spec.tilting.end(), key);
        if (it == spec.tilting.end())
            throw SpecError(where + ": image_class key \"" + key +
                            "\" is not a tilting indecomposable");
        if (!val.is_number_integer() || val.get<Coeff>() < 0)
            throw SpecError(where + ": image_class value for \"" + key +
                            "\" must be a nonnegative integer");
        coeffs[static_cast<std::size_t>(it - spec.tilting.begin())] = val.get<Coeff>();
    }
    return FreeAbelianElement(spec.simple_basis(), std::move(coeffs));
}

json image_to_json(const CategorySpec& spec, const FreeAbelianElement& e) {
    json obj = json::object();
    for (std::size_t i = 0; i < spec.tilting.size(); ++i)
        if (e.coeffs()[i] != 0) obj[spec.tilting[i]] = e.coeffs()[i];
    return obj;
}

Angle trivial_resolution(const std::string& name, int arity) {
    Angle res;
    res.terms.assign(arity, ObjectExpr::zero());
    res.terms[arity - 2] = ObjectExpr::single(name);
    res.terms[arity - 1] = ObjectExpr::single(name);
    return res;
}

}  // namespace

CategorySpec load_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("spec document must be a JSON object");

    CategorySpec spec;

    const json& jd = require_field(doc, "d");
    if (!jd.is_number_integer() || jd.get<int>() < 1)
        throw SpecError("field \"d\" must be a positive integer");
    spec.d = jd.get<int>();
    const int arity = spec.d + 2;

    const json& jind = require_field(doc, "indecomposables");
    if (!jind.is_array()) throw SpecError("field \"indecomposables\" must be a list");
    for (const auto& e : jind) spec.indecs.push_back(require_string(e, "indecomposable name"));

    const json& jsusp = require_field(doc, "suspension");
    if (!jsusp.is_object()) throw SpecError("field \"suspension\" must be an object");
    for (const auto& [k, v] : jsusp.items())
        spec.suspension[k] = require_string(v, "suspension image of " + k);

    const json& jhom = require_field(doc, "hom_dim");
    if (!jhom.is_array()) throw SpecError("field \"hom_dim\" must be a list of [src, dst, dim]");
    const std::size_t n = spec.indecs.size();
    spec.hom.dims.assign(n, std::vector<int>(n, 0));
    std::set<std::pair<std::string, std::string>> hom_seen;
    for (const auto& entry : jhom) {
        if (!entry.is_array() || entry.size() != 3)
            throw SpecError("hom_dim entries must be [src, dst, dim] triples");
        std::string src = require_string(entry.at(0), "hom_dim src");
        std::string dst = require_string(entry.at(1), "hom_dim dst");
        if (!entry.at(2).is_number_integer() || entry.at(2).get<int>() < 0)
            throw SpecError("hom_dim dimension for (" + src + ", " + dst +
                            ") must be a nonnegative integer");
        auto i = spec.position(src);
        auto j = spec.position(dst);
        if (!i) throw SpecError("hom_dim references unknown indecomposable \"" + src + "\"");
        if (!j) throw SpecError("hom_dim references unknown indecomposable \"" + dst + "\"");
        if (!hom_seen.insert({src, dst}).second)
            throw SpecError("duplicate hom_dim entry for (" + src + ", " + dst + ")");
        spec.hom.dims[*i][*j] = entry.at(2).get<int>();
    }

    const json& jtilt = require_field(doc, "tilting");
    if (!jtilt.is_array()) throw SpecError("field \"tilting\" must be a list");
    std::set<std::string> tseen;
    for (const auto& e : jtilt) {
        std::string t = require_string(e, "tilting entry");
        if (!tseen.insert(t).second) throw SpecError("duplicate tilting entry \"" + t + "\"");
        spec.tilting.push_back(std::move(t));
    }

    const json& jres = require_field(doc, "resolutions");
    if (!jres.is_object()) throw SpecError("field \"resolutions\" must be an object");
    for (const auto& [name, body] : jres.items()) {
        Angle res;
        res.terms = terms_from_json(require_field(body, "terms"), arity, "resolution of " + name);
        spec.resolutions[name] = std::move(res);
    }
    for (const auto& t : spec.tilting)
        if (!spec.resolutions.count(t)) spec.resolutions[t] = trivial_resolution(t, arity);

    const json& jang = require_field(doc, "angles");
    if (!jang.is_array()) throw SpecError("field \"angles\" must be a list");
    for (std::size_t i = 0; i < jang.size(); ++i) {
        const json& body = jang.at(i);
        const std::string where = "angle " + std::to_string(i);
        Angle a;
        a.terms = terms_from_json(require_field(body, "terms"), arity, where);
        const json& g = require_field(body, "gamma_nonzero");
        if (!g.is_boolean()) throw SpecError(where + ": \"gamma_nonzero\" must be a boolean");
        a.gamma_nonzero = g.get<bool>();
        const json& img = require_field(body, "image_class");
        if (!img.is_null()) a.image_class = image_from_json(img, spec, where);
        spec.angles.push_back(std::move(a));
    }

    const json& jpairs = require_field(doc, "exchange_pairs");
    if (!jpairs.is_array()) throw SpecError("field \"exchange_pairs\" must be a list");
    for (const auto& body : jpairs) {
        ExchangePairDecl pr;
        pr.s0 = require_string(require_field(body, "s0"), "exchange pair s0");
        pr.s_top = require_string(require_field(body, "s_top"), "exchange pair s_top");
        const json& a1 = require_field(body, "angle01");
        const json& a2 = require_field(body, "angle02");
        if (!a1.is_number_integer() || !a2.is_number_integer())
            throw SpecError("exchange pair angle references must be integers");
        pr.angle01 = a1.get<int>();
        pr.angle02 = a2.get<int>();
        spec.exchange_pairs.push_back(std::move(pr));
    }

    const json& jcy = require_field(doc, "calabi_yau_2d");
    if (!jcy.is_boolean()) throw SpecError("field \"calabi_yau_2d\" must be a boolean");
    spec.calabi_yau_2d = jcy.get<bool>();

    return spec;
}

std::string emit_spec(const CategorySpec& spec) {
    json doc;
    doc["d"] = spec.d;
    doc["indecomposables"] = spec.indecs;

    json susp = json::object();
    for (const auto& n : spec.indecs) {
        auto it = spec.suspension.find(n);
        if (it != spec.suspension.end()) susp[n] = it->second;
    }
    for (const auto& [k, v] : spec.suspension)
        if (!susp.contains(k)) susp[k] = v;
    doc["suspension"] = std::move(susp);

    json hom = json::array();
    for (std::size_t i = 0; i < spec.hom.dims.size(); ++i)
        for (std::size_t j = 0; j < spec.hom.dims[i].size(); ++j)
            if (spec.hom.dims[i][j] != 0 && i < spec.indecs.size() && j < spec.indecs.size())
                hom.push_back(json::array({spec.indecs[i], spec.indecs[j], spec.hom.dims[i][j]}));
    doc["hom_dim"] = std::move(hom);

    doc["tilting"] = spec.tilting;

    json res = json::object();
    for (const auto& n : spec.indecs) {
        auto it = spec.resolutions.find(n);
        if (it == spec.resolutions.end()) continue;
        json terms = json::array();
        for (const auto& t : it->second.terms) terms.push_back(object_to_json(t));
        res[n] = json{{"terms", std::move(terms)}};
    }
    for (const auto& [n, r] : spec.resolutions) {
        if (res.contains(n)) continue;
        json terms = json::array();
        for (const auto& t : r.terms) terms.push_back(object_to_json(t));
        res[n] = json{{"terms", std::move(terms)}};
    }
    doc["resolutions"] = std::move(res);

    json angles = json::array();
    for (const auto& a : spec.angles) {
        json body;
        json terms = json::array();
        for (const auto& t : a.terms) terms.push_back(object_to_json(t));
        body["terms"] = std::move(terms);
        body["gamma_nonzero"] = a.gamma_nonzero;
        body["image_class"] = a.image_class ? image_to_json(spec, *a.image_class) : json(nullptr);
        angles.push_back(std::move(body));
    }
    doc["angles"] = std::move(angles);

    json pairs = json::array();
    for (const auto& pr : spec.exchange_pairs)
        pairs.push_back(json{{"s0", pr.s0},
                             {"s_top", pr.s_top},
                             {"angle01", pr.angle01},
                             {"angle02", pr.angle02}});
    doc["exchange_pairs"] = std::move(pairs);

    doc["calabi_yau_2d"] = spec.calabi_yau_2d;

    return doc.dump(2) + "\n";
}

}  // namespace tropfrieze
