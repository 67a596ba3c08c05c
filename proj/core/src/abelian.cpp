#include "tropfrieze/abelian.hpp"

#include <algorithm>
#include <unordered_set>

namespace tropfrieze {

Basis::Basis(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw Error("duplicate basis label: " + l);
}

std::optional<std::size_t> Basis::find(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return i;
    return std::nullopt;
}

std::size_t Basis::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error("label not in basis: " + std::string(name));
}

FreeAbelianElement::FreeAbelianElement(Basis basis)
    : basis_(std::move(basis)), coeffs_(basis_.size(), 0) {}

FreeAbelianElement::FreeAbelianElement(Basis basis, std::vector<Coeff> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.size())
        throw Error("coefficient count does not match basis size");
}

FreeAbelianElement FreeAbelianElement::unit(Basis basis, std::string_view label) {
    FreeAbelianElement e(std::move(basis));
    e.coeffs_[e.basis_.index_of(label)] = 1;
    return e;
}

Coeff FreeAbelianElement::coeff(std::string_view label) const {
    return coeffs_[basis_.index_of(label)];
}

bool FreeAbelianElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

void FreeAbelianElement::require_same_basis(const FreeAbelianElement& rhs, const char* op) const {
    if (basis_ != rhs.basis_)
        throw BasisMismatch(std::string("basis mismatch in ") + op);
}

FreeAbelianElement& FreeAbelianElement::operator+=(const FreeAbelianElement& rhs) {
    require_same_basis(rhs, "addition");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FreeAbelianElement FreeAbelianElement::operator+(const FreeAbelianElement& rhs) const {
    FreeAbelianElement out(*this);
    out += rhs;
    return out;
}

FreeAbelianElement FreeAbelianElement::operator-() const {
    FreeAbelianElement out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

FreeAbelianElement FreeAbelianElement::operator-(const FreeAbelianElement& rhs) const {
    return *this + (-rhs);
}

bool FreeAbelianElement::operator==(const FreeAbelianElement& rhs) const {
    require_same_basis(rhs, "equality");
    return coeffs_ == rhs.coeffs_;
}

std::vector<std::pair<std::string, Coeff>> FreeAbelianElement::sparse() const {
    std::vector<std::pair<std::string, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(basis_.label(i), coeffs_[i]);
    return out;
}

std::string FreeAbelianElement::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Coeff c = coeffs_[i];
        if (c == 0) continue;
        if (c > 0 && !out.empty()) out += '+';
        if (c < 0) out += '-';
        Coeff m = c < 0 ? -c : c;
        if (m != 1) out += std::to_string(m) + "*";
        out += basis_.label(i);
    }
    return out.empty() ? "0" : out;
}

FreeAbelianElement operator*(Coeff k, const FreeAbelianElement& a) {
    std::vector<Coeff> coeffs(a.coeffs());
    for (auto& c : coeffs) c *= k;
    return FreeAbelianElement(a.basis(), std::move(coeffs));
}

GroupHomomorphism::GroupHomomorphism(Basis domain, Basis codomain,
                                     std::vector<std::vector<Coeff>> matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.size() != codomain_.size())
        throw Error("homomorphism matrix row count does not match codomain size");
    for (const auto& row : matrix_)
        if (row.size() != domain_.size())
            throw Error("homomorphism matrix column count does not match domain size");
}

GroupHomomorphism GroupHomomorphism::identity(const Basis& basis) {
    std::vector<std::vector<Coeff>> m(basis.size(), std::vector<Coeff>(basis.size(), 0));
    for (std::size_t i = 0; i < basis.size(); ++i) m[i][i] = 1;
    return GroupHomomorphism(basis, basis, std::move(m));
}

GroupHomomorphism GroupHomomorphism::zero(Basis domain, Basis codomain) {
    std::vector<std::vector<Coeff>> m(codomain.size(), std::vector<Coeff>(domain.size(), 0));
    return GroupHomomorphism(std::move(domain), std::move(codomain), std::move(m));
}

GroupHomomorphism GroupHomomorphism::from_columns(Basis domain, Basis codomain,
                                                  const std::vector<FreeAbelianElement>& columns) {
    if (columns.size() != domain.size())
        throw Error("column count does not match domain size");
    std::vector<std::vector<Coeff>> m(codomain.size(), std::vector<Coeff>(domain.size(), 0));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].basis() != codomain)
            throw BasisMismatch("column " + std::to_string(j) + " not over the codomain basis");
        for (std::size_t i = 0; i < codomain.size(); ++i) m[i][j] = columns[j].coeffs()[i];
    }
    return GroupHomomorphism(std::move(domain), std::move(codomain), std::move(m));
}

FreeAbelianElement GroupHomomorphism::column(std::size_t j) const {
    std::vector<Coeff> coeffs(codomain_.size());
    for (std::size_t i = 0; i < codomain_.size(); ++i) coeffs[i] = matrix_[i].at(j);
    return FreeAbelianElement(codomain_, std::move(coeffs));
}

FreeAbelianElement GroupHomomorphism::apply(const FreeAbelianElement& a) const {
    if (a.basis() != domain_)
        throw BasisMismatch("element basis does not match homomorphism domain");
    std::vector<Coeff> out(codomain_.size(), 0);
    for (std::size_t i = 0; i < codomain_.size(); ++i)
        for (std::size_t j = 0; j < domain_.size(); ++j)
            out[i] += matrix_[i][j] * a.coeffs()[j];
    return FreeAbelianElement(codomain_, std::move(out));
}

GroupHomomorphism GroupHomomorphism::compose(const GroupHomomorphism& inner) const {
    if (inner.codomain_ != domain_)
        throw BasisMismatch("inner codomain does not match outer domain in composition");
    std::vector<std::vector<Coeff>> m(codomain_.size(),
                                      std::vector<Coeff>(inner.domain_.size(), 0));
    for (std::size_t i = 0; i < codomain_.size(); ++i)
        for (std::size_t k = 0; k < domain_.size(); ++k)
            for (std::size_t j = 0; j < inner.domain_.size(); ++j)
                m[i][j] += matrix_[i][k] * inner.matrix_[k][j];
    return GroupHomomorphism(inner.domain_, codomain_, std::move(m));
}

bool GroupHomomorphism::operator==(const GroupHomomorphism& rhs) const {
    return domain_ == rhs.domain_ && codomain_ == rhs.codomain_ && matrix_ == rhs.matrix_;
}

}  // namespace tropfrieze
