#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <cctype>

namespace toric {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits) || !all_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational out(p, q);
    out.canonicalize();
    return out;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    const std::size_t rows = h.rows();
    const std::size_t cols = h.cols();

    auto add_multiple = [&](std::size_t dst, std::size_t src, const Integer& factor) {
        for (std::size_t c = 0; c < cols; ++c) h(dst, c) -= factor * h(src, c);
        for (std::size_t c = 0; c < rows; ++c) u(dst, c) -= factor * u(src, c);
    };
    auto negate = [&](std::size_t r) {
        for (std::size_t c = 0; c < cols; ++c) h(r, c) = -h(r, c);
        for (std::size_t c = 0; c < rows; ++c) u(r, c) = -u(r, c);
    };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclid on the column until a single nonzero entry remains below pivot_row.
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = pivot_row; r < rows; ++r) {
                if (h(r, col) == 0) continue;
                if (best == rows || abs(h(r, col)) < abs(h(best, col))) best = r;
            }
            if (best == rows) break;
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < rows; ++r) {
                if (h(r, col) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
                add_multiple(r, pivot_row, q);
                if (h(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(pivot_row, col) == 0) continue;
        if (h(pivot_row, col) < 0) negate(pivot_row);
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
            if (q != 0) add_multiple(r, pivot_row, q);
        }
        ++pivot_row;
    }
    return {std::move(h), std::move(u)};
}

IntMatrix kernel_lattice(const IntMatrix& m) {
    // Rows of U paired with zero rows of HNF(M^T) span the left kernel of M^T;
    // U unimodular makes that basis saturated.
    auto [h, u] = hermite_normal_form(m.transpose());
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h(r, c) != 0) { zero = false; break; }
        if (!zero) nonzero = r + 1;
    }
    const std::size_t k = m.cols() - nonzero;
    IntMatrix basis(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = u(nonzero + i, c);
    return hermite_normal_form(basis).H.transpose();
}

bool is_saturated(const IntMatrix& columns) {
    auto h = hermite_normal_form(columns).H;
    std::size_t col = 0;
    for (std::size_t r = 0; r < h.rows() && col < h.cols(); ++r) {
        while (col < h.cols() && h(r, col) == 0) ++col;
        if (col == h.cols()) break;
        if (h(r, col) != 1) return false;
        ++col;
    }
    return true;
}

bool is_primitive(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitivity undefined for the zero vector");
    return g == 1;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return rref(work).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            a.swap_rows(p, col);
            result = -result;
        }
        result *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const Rational f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return result;
}

RatMatrix null_space(const RatMatrix& m) {
    RatMatrix r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return RatMatrix::from_columns(m.cols(), basis);
}

bool solve(const RatMatrix& m, const RatVector& b, RatVector& x, bool* unique) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return false;
    x.assign(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    if (unique) *unique = pivots.size() == m.cols();
    return true;
}

}  // namespace toric
