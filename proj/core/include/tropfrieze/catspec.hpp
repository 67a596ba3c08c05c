#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropfrieze/abelian.hpp"

namespace tropfrieze {

/*
 * A finite object of the additive category, up to isomorphism: a multiset
 * of indecomposables. The empty multiset is the zero object.
 */
struct ObjectExpr {
    std::map<std::string, int> mult;  // name -> multiplicity >= 1

    static ObjectExpr zero() { return {}; }
    static ObjectExpr single(std::string name);

    void add(std::string_view name, int k = 1);
    bool is_zero() const { return mult.empty(); }
    bool is_single(std::string_view name) const;
    std::string str() const;  // "P(1)+2*P(3)"; zero prints as "0"

    bool operator==(const ObjectExpr&) const = default;
};

/* dim Hom(src, dst), dense and indexed by the spec's indecomposable order */
struct HomTable {
    std::vector<std::vector<int>> dims;

    bool operator==(const HomTable&) const = default;
};

/*
 * A (d+2)-angle a_{d+1} -> a_d -> ... -> a_1 -> a_0 -> Σᵈ a_{d+1}, stored
 * front to back as [a_{d+1}, ..., a_1, a_0]. The back term is the source
 * of the connecting morphism γ. image_class, when known, is the class of
 * Im Fγ over the simple-module basis, with nonnegative coefficients.
 */
struct Angle {
    std::vector<ObjectExpr> terms;
    bool gamma_nonzero = false;
    std::optional<FreeAbelianElement> image_class;

    bool operator==(const Angle&) const = default;
};

/*
 * A declared exchange pair (s0, s_top) together with its two angles:
 * angle01 runs s_top -> ... -> s0, angle02 runs s0 -> ... -> s_top.
 */
struct ExchangePairDecl {
    std::string s0;
    std::string s_top;
    int angle01 = -1;  // index into CategorySpec::angles
    int angle02 = -1;

    bool operator==(const ExchangePairDecl&) const = default;
};

struct Violation {
    std::string rule;
    std::string detail;
};

/* label of the simple module attached to a tilting indecomposable */
std::string simple_label(std::string_view tilting_name);

/*
 * Combinatorial presentation of a finite (d+2)-angulated category with a
 * chosen cluster tilting object. Immutable after load/validate; all
 * operations on it are pure.
 */
struct CategorySpec {
    int d = 1;
    std::vector<std::string> indecs;                // fixes all basis orders
    std::map<std::string, std::string> suspension;  // action of Σᵈ on indecomposables
    HomTable hom;
    std::vector<std::string> tilting;               // indecomposable summands of t
    std::map<std::string, Angle> resolutions;       // terms [t_d, ..., t_0, s]
    std::vector<Angle> angles;
    std::vector<ExchangePairDecl> exchange_pairs;
    bool calabi_yau_2d = false;

    std::optional<std::size_t> position(std::string_view name) const;
    int hom_dim(std::string_view src, std::string_view dst) const;  // throws Error on unknown names
    const std::string& suspend(std::string_view name) const;

    Basis tilting_basis() const;  // basis of K0^sp(add t)
    Basis simple_basis() const;   // basis of K0(mod Γ), labels S(t')

    bool operator==(const CategorySpec&) const = default;
};

/* checks every documented invariant; an empty report means valid */
std::vector<Violation> validate(const CategorySpec& spec);

/* applies the suspension permutation termwise, preserving multiplicities */
ObjectExpr suspend_object(const CategorySpec& spec, const ObjectExpr& o);

/*
 * All ordered pairs (s0, s_top) with dim Hom(s0, Σᵈ s_top) = 1, in scan
 * order. Informational: the declared pair list is authoritative.
 */
std::vector<std::pair<std::string, std::string>> candidate_exchange_pairs(const CategorySpec& spec);

/*
 * JSON spec documents. load installs the trivial resolution
 * [0, ..., 0, {t'}, {t'}] for any tilting indecomposable without one.
 * Throws SpecError with the offending field named.
 */
CategorySpec load_spec(std::string_view text);
std::string emit_spec(const CategorySpec& spec);

}  // namespace tropfrieze
