#pragma once

// Small dense linear algebra: a cyclic Jacobi eigensolver for real symmetric
// matrices, exact characteristic polynomials of integer matrices, Kronecker
// products and tolerance-based multiset comparison.

#include <zn/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace zn {

using BigInt = boost::multiprecision::cpp_int;

/// Dense real symmetric matrix, row-major. The upper triangle is
/// authoritative: construction mirrors it into the lower triangle.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    SymMatrix(std::initializer_list<std::initializer_list<double>> rows) : SymMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != order_) throw DomainError("SymMatrix: ragged initializer");
            std::size_t j = 0;
            for (double v : row) {
                if (j >= i) set(i, j, v);
                ++j;
            }
            ++i;
        }
    }

    /// From a full row-major buffer; rejects asymmetry beyond `tol` and non-finite entries.
    static SymMatrix from_dense(std::size_t order, std::span<const double> values, double tol = 1e-12) {
        if (values.size() != order * order) throw DomainError("SymMatrix: buffer size mismatch");
        SymMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) {
            for (std::size_t j = i; j < order; ++j) {
                const double u = values[i * order + j];
                const double l = values[j * order + i];
                const double scale = std::max({1.0, std::abs(u), std::abs(l)});
                if (std::abs(u - l) > tol * scale) {
                    throw DomainError("SymMatrix: entry (" + std::to_string(i) + "," + std::to_string(j) + ") not symmetric");
                }
                m.set(i, j, u);
            }
        }
        return m;
    }

    std::size_t order() const { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    void set(std::size_t i, std::size_t j, double v) {
        if (!std::isfinite(v)) throw DomainError("SymMatrix: non-finite entry");
        data_[i * order_ + j] = v;
        data_[j * order_ + i] = v;
    }

    double trace() const {
        double t = 0;
        for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius() const {
        double s = 0;
        for (double v : data_) s += v * v;
        return std::sqrt(s);
    }

    std::span<const double> data() const { return data_; }

private:
    friend struct JacobiAccess;
    std::size_t order_ = 0;
    std::vector<double> data_;
};

struct EigenResult {
    std::vector<double> values;  // non-increasing
    unsigned sweeps = 0;
    double off_diag_norm = 0.0;
};

struct JacobiOptions {
    double tol = 1e-12;        // relative to ||m||_F
    unsigned max_sweeps = 100;
};

struct JacobiAccess {
    static std::vector<double>& data(SymMatrix& m) { return m.data_; }
};

/// Cyclic Jacobi. Rotations are applied in a fixed (p, q) order, so the result
/// is deterministic for a given input.
inline EigenResult sym_eigenvalues(SymMatrix m, JacobiOptions opt = {}) {
    if (!(opt.tol > 0)) throw DomainError("sym_eigenvalues: tol must be > 0");
    const std::size_t n = m.order();
    auto& a = JacobiAccess::data(m);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    const double norm = m.frobenius();
    const double target = opt.tol * norm;
    auto off = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    EigenResult res;
    double residual = off();
    while (residual > target) {
        if (res.sweeps == opt.max_sweeps) {
            throw ConvergenceError("sym_eigenvalues: no convergence after " + std::to_string(opt.max_sweeps) +
                                       " sweeps, off-diagonal norm " + std::to_string(residual),
                                   residual);
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                // Below this the rotation cannot move the residual measurably.
                if (std::abs(apq) <= 1e-3 * target / static_cast<double>(n)) {
                    at(p, q) = at(q, p) = 0.0;
                    continue;
                }
                const double app = at(p, p), aqq = at(q, q);
                const double theta = (aqq - app) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = at(q, p) = 0.0;
            }
        }
        ++res.sweeps;
        residual = off();
    }
    res.off_diag_norm = residual;
    res.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.values[i] = at(i, i);
    std::sort(res.values.begin(), res.values.end(), std::greater<>());
    return res;
}

/// Kronecker product, a11 * b in the top-left block.
inline SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
    const std::size_t na = a.order(), nb = b.order();
    SymMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = i; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    const std::size_t r = i * nb + k, c = j * nb + l;
                    if (r <= c) out.set(r, c, a(i, j) * b(k, l));
                    else out.set(c, r, a(i, j) * b(k, l));
                }
    return out;
}

/// Sort both sides and compare pairwise within an absolute tolerance.
inline bool multiset_close(std::vector<double> xs, std::vector<double> ys, double tol) {
    if (xs.size() != ys.size()) {
        throw DomainError("multiset_close: length mismatch " + std::to_string(xs.size()) + " vs " + std::to_string(ys.size()));
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(std::abs(xs[i] - ys[i]) <= tol)) return false;
    }
    return true;
}

/// Largest pairwise deviation between two sorted multisets of equal length.
inline double multiset_distance(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size()) throw DomainError("multiset_distance: length mismatch");
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    double worst = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(xs[i] - ys[i]));
    return worst;
}

/// Dense square integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t order) : order_(order), data_(order * order, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : IntMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != order_) throw DomainError("IntMatrix: ragged initializer");
            std::size_t j = 0;
            for (auto v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    std::size_t order() const { return order_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    std::int64_t row_sum(std::size_t i) const {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < order_; ++j) s += (*this)(i, j);
        return s;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<std::int64_t> data_;
};

/// Integer polynomial, coefficients in ascending powers of x.
struct Polynomial {
    std::vector<BigInt> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

    /// From coefficients in descending powers, the way they are usually written.
    static Polynomial from_descending(std::initializer_list<long long> c) {
        std::vector<BigInt> v;
        for (auto it = std::rbegin(c); it != std::rend(c); ++it) v.emplace_back(*it);
        return Polynomial(std::move(v));
    }

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    void trim() {
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs.empty() || b.coeffs.empty()) return Polynomial{};
        std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
        return Polynomial(std::move(out));
    }

    /// (x - root)^power
    static Polynomial linear_power(long long root, std::size_t power) {
        Polynomial p(std::vector<BigInt>{1});
        const Polynomial f(std::vector<BigInt>{BigInt(-root), BigInt(1)});
        for (std::size_t i = 0; i < power; ++i) p = p * f;
        return p;
    }

    double eval(double x) const {
        double acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->convert_to<double>();
        return acc;
    }

    /// sum |c_k| |x|^k, the natural scale for judging |p(x)|
    double eval_abs(double x) const {
        double acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * std::abs(x) + abs(*it).convert_to<double>();
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            const BigInt& c = coeffs[k];
            if (c == 0 && coeffs.size() > 1) continue;
            const BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || k == 0) os << mag;
            if (k >= 1) os << "x";
            if (k >= 2) os << "^" << k;
            first = false;
        }
        return os.str();
    }
};

/// |p(x)| relative to sum |c_k| max(1, |x|)^k; zero at an exact root.
inline double root_residual(const Polynomial& p, double x) {
    const double scale = p.eval_abs(std::max(1.0, std::abs(x)));
    return scale == 0 ? 0 : std::abs(p.eval(x)) / scale;
}

/// Exact monic characteristic polynomial det(xI - m) by Faddeev–LeVerrier:
///   N_1 = I, c_{n-1} = -tr(m)
///   N_k = m N_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(m N_k) / k
/// Every division is exact over the integers.
inline Polynomial char_poly_exact(const IntMatrix& m) {
    const std::size_t n = m.order();
    if (n > 64) throw LimitError("char_poly_exact: order " + std::to_string(n) + " exceeds 64");
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return Polynomial(std::move(c));

    std::vector<BigInt> a(n * n), nk(n * n, 0), prod(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m(i / n, i % n);
    for (std::size_t i = 0; i < n; ++i) nk[i * n + i] = 1;

    for (std::size_t k = 1; k <= n; ++k) {
        // prod = m * N_k
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    if (a[i * n + l] != 0 && nk[l * n + j] != 0) s += a[i * n + l] * nk[l * n + j];
                }
                prod[i * n + j] = std::move(s);
            }
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += prod[i * n + i];
        BigInt q, r;
        divide_qr(BigInt(-tr), BigInt(k), q, r);
        if (r != 0) throw std::logic_error("char_poly_exact: inexact division");
        c[n - k] = q;
        // N_{k+1} = prod + c_{n-k} I
        nk = prod;
        for (std::size_t i = 0; i < n; ++i) nk[i * n + i] += c[n - k];
    }
    return Polynomial(std::move(c));
}

}  // namespace zn
