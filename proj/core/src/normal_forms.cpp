#include "quiverhom/normal_forms.hpp"

#include <algorithm>

namespace quiverhom {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division, so that a - fdiv(a,b)*b lies in [0, b) for b > 0
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

RowHnf row_hnf(const IntMatrix& a) {
    RowHnf out;
    out.h = a;
    out.u = IntMatrix::identity(a.rows());
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        bool any = false;
        for (std::size_t j = r; j < m; ++j)
            if (h(j, c) != 0) {
                any = true;
                break;
            }
        if (!any)
            continue;

        // Euclidean sweep: shrink the column below row r until one entry is left.
        for (;;) {
            std::size_t jmin = r;
            Int best = 0;
            for (std::size_t j = r; j < m; ++j) {
                if (h(j, c) == 0)
                    continue;
                Int v = abs_int(h(j, c));
                if (best == 0 || v < best) {
                    best = v;
                    jmin = j;
                }
            }
            if (jmin != r) {
                h.swap_rows(r, jmin);
                u.swap_rows(r, jmin);
            }
            bool done = true;
            for (std::size_t j = r + 1; j < m; ++j) {
                if (h(j, c) == 0)
                    continue;
                Int q = h(j, c) / h(r, c);
                h.add_row_multiple(j, r, q);
                u.add_row_multiple(j, r, q);
                if (h(j, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }

        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t j = 0; j < r; ++j) {
            Int q = fdiv(h(j, c), h(r, c));
            if (q != 0) {
                h.add_row_multiple(j, r, q);
                u.add_row_multiple(j, r, q);
            }
        }
        out.pivots.emplace_back(r, c);
        ++r;
    }
    return out;
}

ColumnHnf column_hnf(const IntMatrix& a) {
    RowHnf rh = row_hnf(a.transposed());
    const std::size_t rank = rh.pivots.size();
    ColumnHnf out;
    out.basis = IntMatrix(a.rows(), rank);
    out.pivot_rows.resize(rank);
    for (std::size_t k = 0; k < rank; ++k) {
        out.pivot_rows[k] = rh.pivots[k].second;
        for (std::size_t i = 0; i < a.rows(); ++i)
            out.basis(i, k) = rh.h(k, i);
    }
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    RowHnf rh = row_hnf(a.transposed());
    const std::size_t n = a.cols();
    const std::size_t rank = rh.pivots.size();
    // rows of u past the rank kill a^T from the left, i.e. span ker(a)
    IntMatrix raw(n, n - rank);
    for (std::size_t k = rank; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            raw(j, k - rank) = rh.u(k, j);
    return column_hnf(raw).basis;
}

namespace {

std::optional<IntMatrix> solve_pivoted(const IntMatrix& basis,
                                       const std::vector<std::size_t>& pivot_rows,
                                       const IntMatrix& rhs) {
    if (basis.rows() != rhs.rows())
        internal_error("solve_against_basis shape mismatch");
    const std::size_t k = basis.cols();
    IntMatrix x(k, rhs.cols());
    for (std::size_t t = 0; t < rhs.cols(); ++t) {
        std::vector<Int> v = rhs.col(t);
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t p = pivot_rows[j];
            const Int& piv = basis(p, j);
            if (v[p] % piv != 0)
                return std::nullopt;
            Int c = v[p] / piv;
            x(j, t) = c;
            if (c != 0)
                for (std::size_t i = 0; i < basis.rows(); ++i)
                    v[i] -= c * basis(i, j);
        }
        for (const Int& e : v)
            if (e != 0)
                return std::nullopt;
    }
    return x;
}

std::vector<std::size_t> find_pivot_rows(const IntMatrix& echelon) {
    std::vector<std::size_t> pivots(echelon.cols());
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t j = 0; j < echelon.cols(); ++j) {
        std::size_t i = 0;
        while (i < echelon.rows() && echelon(i, j) == 0)
            ++i;
        if (i == echelon.rows())
            internal_error("zero column in echelon basis");
        if (!first && i <= prev)
            internal_error("matrix is not in column echelon form");
        pivots[j] = i;
        prev = i;
        first = false;
    }
    return pivots;
}

}  // namespace

std::optional<IntMatrix> solve_against_basis(const ColumnHnf& basis, const IntMatrix& rhs) {
    return solve_pivoted(basis.basis, basis.pivot_rows, rhs);
}

std::optional<IntMatrix> solve_against_basis(const IntMatrix& echelon_basis, const IntMatrix& rhs) {
    return solve_pivoted(echelon_basis, find_pivot_rows(echelon_basis), rhs);
}

IntMatrix solve_exact(const IntMatrix& echelon_basis, const IntMatrix& rhs) {
    auto x = solve_against_basis(echelon_basis, rhs);
    if (!x)
        internal_error("system guaranteed solvable had no integer solution");
    return *x;
}

bool lattice_contains(const ColumnHnf& lattice, const IntMatrix& vectors) {
    return solve_against_basis(lattice, vectors).has_value();
}

bool lattices_equal(const IntMatrix& gens_a, const IntMatrix& gens_b) {
    ColumnHnf a = column_hnf(gens_a);
    ColumnHnf b = column_hnf(gens_b);
    return a.basis == b.basis && a.pivot_rows == b.pivot_rows;
}

IntMatrix lattice_sum(const IntMatrix& gens_a, const IntMatrix& gens_b) {
    return column_hnf(hstack(gens_a, gens_b)).basis;
}

IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& target_gens) {
    if (m.rows() != target_gens.rows())
        internal_error("preimage_lattice shape mismatch");
    IntMatrix ker = kernel_basis(hstack(m, target_gens));
    IntMatrix x_part = ker.submatrix(0, 0, m.cols(), ker.cols());
    return column_hnf(x_part).basis;
}

std::vector<Int> Snf::diagonal() const {
    std::vector<Int> out(std::min(d.rows(), d.cols()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = d(i, i);
    return out;
}

Snf smith_normal_form(const IntMatrix& a) {
    Snf s;
    s.d = a;
    s.u = IntMatrix::identity(a.rows());
    s.u_inv = IntMatrix::identity(a.rows());
    s.v = IntMatrix::identity(a.cols());
    IntMatrix& d = s.d;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
        // row_i -= q row_j on d and u; inverse op on u_inv is col_j += q col_i
        d.add_row_multiple(i, j, q);
        s.u.add_row_multiple(i, j, q);
        s.u_inv.add_col_multiple(j, i, -q);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        s.u.swap_rows(i, j);
        s.u_inv.swap_cols(i, j);
    };
    auto row_negate = [&](std::size_t i) {
        d.negate_row(i);
        s.u.negate_row(i);
        s.u_inv.negate_col(i);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
        d.add_col_multiple(i, j, q);
        s.v.add_col_multiple(i, j, q);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        s.v.swap_cols(i, j);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // locate a minimal nonzero entry in the trailing block
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d(i, j) == 0)
                    continue;
                Int v = abs_int(d(i, j));
                if (best == 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Int q = d(i, t) / d(t, t);
                row_op(i, t, q);
                if (d(i, t) != 0) {
                    row_swap(t, i);  // strictly smaller remainder becomes pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Int q = d(t, j) / d(t, t);
                col_op(j, t, q);
                if (d(t, j) != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;

            // pivot must divide the remaining block for the invariant-factor chain
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_op(t, i, Int(-1));  // pull the offending row into row t
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (d(t, t) < 0)
            row_negate(t);
    }

    if (!(s.u * a * s.v == d))
        internal_error("smith normal form transform identity failed");
    if (!(s.u * s.u_inv).is_identity())
        internal_error("smith normal form inverse tracking failed");
    return s;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        internal_error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Int prev = 1;
    Int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace quiverhom
