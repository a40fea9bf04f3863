#pragma once

#include "quiverhom/intmatrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quiverhom {

/// Row Hermite form h = u * a with u unimodular.  Pivots are positive, the
/// entries above each pivot are reduced into [0, pivot), rows below the
/// last pivot are zero.
struct RowHnf {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

RowHnf row_hnf(const IntMatrix& a);

/// Canonical basis of the column lattice of a matrix.  Zero columns are
/// dropped; `pivot_rows` is strictly increasing and `basis` is in column
/// Hermite form, so two matrices span the same lattice iff their ColumnHnf
/// bases are equal.
struct ColumnHnf {
    IntMatrix basis;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return basis.cols(); }
};

ColumnHnf column_hnf(const IntMatrix& a);

/// Z-basis of ker(a : Z^cols -> Z^rows), columns in canonical column
/// Hermite form (unique for the kernel lattice).
IntMatrix kernel_basis(const IntMatrix& a);

/// Solve basis * x = rhs column-by-column against a column-echelon basis
/// (e.g. a ColumnHnf basis or a kernel_basis output).  Returns the unique
/// coefficient matrix, or nullopt when some column is not in the lattice.
std::optional<IntMatrix> solve_against_basis(const ColumnHnf& basis, const IntMatrix& rhs);
std::optional<IntMatrix> solve_against_basis(const IntMatrix& echelon_basis, const IntMatrix& rhs);

/// Like solve_against_basis but failure is a hard internal error; use when
/// solvability is guaranteed by construction.
IntMatrix solve_exact(const IntMatrix& echelon_basis, const IntMatrix& rhs);

bool lattice_contains(const ColumnHnf& lattice, const IntMatrix& vectors);
bool lattices_equal(const IntMatrix& gens_a, const IntMatrix& gens_b);
IntMatrix lattice_sum(const IntMatrix& gens_a, const IntMatrix& gens_b);

/// Canonical basis of { x : m * x is in the column lattice of target_gens }.
IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& target_gens);

/**
 * Smith normal form u * a * v = d with u, v unimodular and d diagonal,
 * d(i,i) >= 0 and d(i,i) | d(i+1,i+1).  u_inv is maintained alongside u so
 * canonical generators of cokernels come out for free.  The identity
 * u*a*v = d is re-verified before returning.
 */
struct Snf {
    IntMatrix u, d, v, u_inv;

    std::vector<Int> diagonal() const;
};

Snf smith_normal_form(const IntMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& a);

}  // namespace quiverhom
