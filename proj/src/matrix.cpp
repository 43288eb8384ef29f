#include "gbl/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gbl/error.hpp"

namespace gbl {

namespace {
int common_order(const CycMatrix& m) {
    int order = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            order = std::lcm(order, m.at(i, j).order());
    return order;
}
}  // namespace

CycMatrix CycMatrix::identity(int n, int order) {
    CycMatrix m(n, n, order);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
    return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<Cyclotomic>& d) {
    int n = static_cast<int>(d.size());
    int order = 1;
    for (const auto& x : d) order = std::lcm(order, x.order());
    CycMatrix m(n, n, order);
    for (int i = 0; i < n; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    require(cols_ == rhs.rows_, "invalid-input", "matrix shape mismatch in product");
    int order = std::lcm(common_order(*this), common_order(rhs));
    CycMatrix out(rows_, rhs.cols_, order);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Cyclotomic& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Cyclotomic& bkj = rhs.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "invalid-input", "matrix shape mismatch in sum");
    CycMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) += rhs.at(i, j);
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "invalid-input", "matrix shape mismatch in difference");
    CycMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) -= rhs.at(i, j);
    return out;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& s) const {
    CycMatrix out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

CycMatrix CycMatrix::dagger() const {
    CycMatrix out(cols_, rows_, 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

CycMatrix CycMatrix::tensor(const CycMatrix& rhs) const {
    CycMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            for (int k = 0; k < rhs.rows_; ++k)
                for (int l = 0; l < rhs.cols_; ++l)
                    out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = at(i, j) * rhs.at(k, l);
    return out;
}

CycMatrix CycMatrix::pow(int e) const {
    require(is_square(), "invalid-input", "matrix power of non-square matrix");
    require(e >= 0, "invalid-input", "negative matrix power");
    CycMatrix acc = identity(rows_, common_order(*this));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != rhs.a_[i]) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Cyclotomic& x) { return x.is_zero(); });
}

bool CycMatrix::is_unitary() const {
    if (!is_square()) return false;
    return (*this * dagger()).is_identity();
}

bool CycMatrix::is_hermitian() const {
    return is_square() && *this == dagger();
}

bool CycMatrix::is_diagonal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool CycMatrix::is_permutation() const {
    if (!is_square()) return false;
    std::vector<int> row_count(static_cast<std::size_t>(rows_), 0);
    std::vector<int> col_count(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Cyclotomic& x = at(i, j);
            if (x.is_zero()) continue;
            if (!x.is_one()) return false;
            ++row_count[static_cast<std::size_t>(i)];
            ++col_count[static_cast<std::size_t>(j)];
        }
    for (int i = 0; i < rows_; ++i)
        if (row_count[static_cast<std::size_t>(i)] != 1 || col_count[static_cast<std::size_t>(i)] != 1)
            return false;
    return true;
}

bool CycMatrix::proportional_to(const CycMatrix& rhs, Cyclotomic* scale) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    // find first nonzero entry of this; rhs = s * this
    int pi = -1, pj = -1;
    for (int i = 0; i < rows_ && pi < 0; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) { pi = i; pj = j; break; }
    if (pi < 0) {
        if (!rhs.is_zero()) return false;
        if (scale) *scale = Cyclotomic::one(1);
        return true;
    }
    Cyclotomic s = rhs.at(pi, pj) / at(pi, pj);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (rhs.at(i, j) != at(i, j) * s) return false;
    if (scale) *scale = s;
    return true;
}

std::vector<Cyclotomic> CycMatrix::apply(const std::vector<Cyclotomic>& v) const {
    require(static_cast<int>(v.size()) == cols_, "invalid-input", "vector length mismatch");
    std::vector<Cyclotomic> out(static_cast<std::size_t>(rows_), Cyclotomic::zero(1));
    for (int i = 0; i < rows_; ++i) {
        Cyclotomic acc = Cyclotomic::zero(1);
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += at(i, j) * v[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<Cyclotomic> CycMatrix::char_poly() const {
    require(is_square(), "invalid-input", "characteristic polynomial of non-square matrix");
    int n = rows_;
    int order = common_order(*this);
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
    std::vector<Cyclotomic> coeffs(static_cast<std::size_t>(n + 1), Cyclotomic::zero(order));
    coeffs[static_cast<std::size_t>(n)] = Cyclotomic::one(order);
    CycMatrix m = *this;
    for (int k = 1; k <= n; ++k) {
        Cyclotomic tr = Cyclotomic::zero(order);
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        Cyclotomic ck = -(tr / Cyclotomic::from_rational(Rational(k), order));
        coeffs[static_cast<std::size_t>(n - k)] = ck;
        if (k == n) break;
        CycMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
        m = *this * shifted;
    }
    return coeffs;
}

int CycMatrix::eigen_multiplicity(const Cyclotomic& lambda) const {
    std::vector<Cyclotomic> p = char_poly();
    int mult = 0;
    while (static_cast<int>(p.size()) > 1) {
        if (!poly_eval(p, lambda).is_zero()) break;
        ++mult;
        p = poly_derivative(p);
    }
    return mult;
}

std::vector<std::vector<std::complex<double>>> CycMatrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j).to_complex();
    }
    return out;
}

std::vector<double> CycMatrix::hermitian_eigenvalues() const {
    require(is_square(), "invalid-input", "eigenvalues of non-square matrix");
    Eigen::MatrixXcd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).to_complex();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    require(solver.info() == Eigen::Success, "invalid-input", "eigensolver failed");
    std::vector<double> evs(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) evs[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return evs;
}

std::string CycMatrix::pretty(const std::string& indent) const {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows_));
    std::vector<std::size_t> width(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i) {
        cells[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) {
            std::string s = at(i, j).pretty();
            width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], s.size());
            cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(s);
        }
    }
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << indent << "[";
        for (int j = 0; j < cols_; ++j) {
            const std::string& s = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            os << std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ') << s;
            if (j + 1 < cols_) os << "  ";
        }
        os << "]\n";
    }
    return os.str();
}

std::string CycMatrix::canonical_key() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << ":";
    for (const auto& x : a_) os << x.str() << ";";
    return os.str();
}

Cyclotomic inner_product(const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
    require(x.size() == y.size(), "invalid-input", "vector length mismatch");
    Cyclotomic acc = Cyclotomic::zero(1);
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i].conj() * y[i];
    return acc;
}

Cyclotomic norm_squared(const std::vector<Cyclotomic>& x) {
    return inner_product(x, x);
}

Cyclotomic poly_eval(const std::vector<Cyclotomic>& p, const Cyclotomic& x) {
    Cyclotomic acc = Cyclotomic::zero(x.order());
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Cyclotomic> poly_derivative(const std::vector<Cyclotomic>& p) {
    if (p.size() <= 1) return {Cyclotomic::zero(1)};
    std::vector<Cyclotomic> out(p.size() - 1, Cyclotomic::zero(1));
    for (std::size_t j = 1; j < p.size(); ++j)
        out[j - 1] = p[j] * Cyclotomic::from_rational(Rational(static_cast<long>(j)), p[j].order());
    return out;
}

}  // namespace gbl
