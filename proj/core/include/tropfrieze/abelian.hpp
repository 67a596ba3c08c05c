#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropfrieze/errors.hpp"

namespace tropfrieze {

using Coeff = std::int64_t;

/*
 * An ordered list of distinct labels. A basis fixes the coordinates of
 * elements and of homomorphism matrices; two bases agree exactly when
 * their label sequences agree, so elements over bases with the same
 * labels in a different order are deliberately incomparable.
 */
class Basis {
public:
    Basis() = default;
    explicit Basis(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws Error if absent

    bool operator==(const Basis& rhs) const { return labels_ == rhs.labels_; }
    bool operator!=(const Basis& rhs) const { return !(*this == rhs); }

private:
    std::vector<std::string> labels_;
};

/*
 * An element of the free abelian group on a basis: one 64-bit integer
 * coefficient per label, stored positionally. All arithmetic is exact.
 * Immutable in practice; every operation returns a fresh value.
 */
class FreeAbelianElement {
public:
    explicit FreeAbelianElement(Basis basis);  // the zero element
    FreeAbelianElement(Basis basis, std::vector<Coeff> coeffs);

    static FreeAbelianElement zero(Basis basis) { return FreeAbelianElement(std::move(basis)); }
    static FreeAbelianElement unit(Basis basis, std::string_view label);

    const Basis& basis() const { return basis_; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    Coeff coeff(std::string_view label) const;
    bool is_zero() const;

    FreeAbelianElement& operator+=(const FreeAbelianElement& rhs);
    FreeAbelianElement operator+(const FreeAbelianElement& rhs) const;
    FreeAbelianElement operator-() const;
    FreeAbelianElement operator-(const FreeAbelianElement& rhs) const;

    // comparing across bases is an error, not "false"
    bool operator==(const FreeAbelianElement& rhs) const;
    bool operator!=(const FreeAbelianElement& rhs) const { return !(*this == rhs); }

    /* label -> nonzero coefficient, in basis order */
    std::vector<std::pair<std::string, Coeff>> sparse() const;

    /* "P(1)-2*P(3)"; the zero element prints as "0" */
    std::string str() const;

private:
    void require_same_basis(const FreeAbelianElement& rhs, const char* op) const;

    Basis basis_;
    std::vector<Coeff> coeffs_;
};

FreeAbelianElement operator*(Coeff k, const FreeAbelianElement& a);

/*
 * A homomorphism of free abelian groups as an integer matrix: one column
 * per domain label, one row per codomain label.
 */
class GroupHomomorphism {
public:
    GroupHomomorphism(Basis domain, Basis codomain, std::vector<std::vector<Coeff>> matrix);

    static GroupHomomorphism identity(const Basis& basis);
    static GroupHomomorphism zero(Basis domain, Basis codomain);
    static GroupHomomorphism from_columns(Basis domain, Basis codomain,
                                          const std::vector<FreeAbelianElement>& columns);

    const Basis& domain() const { return domain_; }
    const Basis& codomain() const { return codomain_; }
    const std::vector<std::vector<Coeff>>& matrix() const { return matrix_; }

    FreeAbelianElement column(std::size_t j) const;
    FreeAbelianElement apply(const FreeAbelianElement& a) const;

    /* (*this) ∘ inner; requires inner's codomain = this domain */
    GroupHomomorphism compose(const GroupHomomorphism& inner) const;

    bool operator==(const GroupHomomorphism& rhs) const;
    bool operator!=(const GroupHomomorphism& rhs) const { return !(*this == rhs); }

private:
    Basis domain_;
    Basis codomain_;
    std::vector<std::vector<Coeff>> matrix_;  // codomain.size() x domain.size()
};

}  // namespace tropfrieze
