#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gbl/cyclotomic.hpp"

namespace gbl {

// Dense matrix over the exact cyclotomic field. Everything in scope is tiny
// (dim <= 27), so simplicity beats cleverness throughout.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(int rows, int cols, int order)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
             Cyclotomic::zero(order)) {}

    static CycMatrix identity(int n, int order);
    static CycMatrix diagonal(const std::vector<Cyclotomic>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cyclotomic& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<Cyclotomic>& entries() const { return a_; }

    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix operator+(const CycMatrix& rhs) const;
    CycMatrix operator-(const CycMatrix& rhs) const;
    CycMatrix scaled(const Cyclotomic& s) const;
    CycMatrix dagger() const;
    CycMatrix tensor(const CycMatrix& rhs) const;
    CycMatrix pow(int e) const;

    bool operator==(const CycMatrix& rhs) const;
    bool operator!=(const CycMatrix& rhs) const { return !(*this == rhs); }

    bool is_square() const { return rows_ == cols_; }
    bool is_identity() const;
    bool is_zero() const;
    bool is_unitary() const;      // exact U U^dag == I
    bool is_hermitian() const;    // exact A == A^dag
    bool is_diagonal() const;
    bool is_permutation() const;  // exact 0/1 with one 1 per row/col

    // rhs = s * this for some scalar s? (exact; writes s if requested)
    bool proportional_to(const CycMatrix& rhs, Cyclotomic* scale = nullptr) const;

    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;

    // Monic characteristic polynomial det(x I - A), ascending coefficients.
    // Faddeev-LeVerrier; exact.
    std::vector<Cyclotomic> char_poly() const;
    // Algebraic multiplicity of lambda as a root of the characteristic
    // polynomial, decided exactly via repeated derivatives.
    int eigen_multiplicity(const Cyclotomic& lambda) const;

    std::vector<std::vector<std::complex<double>>> to_complex() const;
    // Eigenvalues of a Hermitian matrix, ascending (float path).
    std::vector<double> hermitian_eigenvalues() const;

    std::string pretty(const std::string& indent = "") const;
    std::string canonical_key() const;  // for hashing / dedup

private:
    int rows_, cols_;
    std::vector<Cyclotomic> a_;
};

Cyclotomic inner_product(const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y);
Cyclotomic norm_squared(const std::vector<Cyclotomic>& x);

// Exact polynomial helpers over the cyclotomic field (ascending coefficients).
Cyclotomic poly_eval(const std::vector<Cyclotomic>& p, const Cyclotomic& x);
std::vector<Cyclotomic> poly_derivative(const std::vector<Cyclotomic>& p);

}  // namespace gbl
