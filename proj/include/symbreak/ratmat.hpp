#ifndef SYMBREAK_RATMAT_HPP
#define SYMBREAK_RATMAT_HPP

#include <optional>
#include <vector>

#include "symbreak/rational.hpp"

namespace symbreak {

/// Dense matrix over the exact rationals. Row-major storage. All elimination
/// uses deterministic pivoting (first nonzero entry, columns left to right) so
/// outputs are reproducible and usable as test fixtures.
struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static RatMat identity(int n);
    static RatMat from_rows(const std::vector<std::vector<Rat>>& rows);
    std::vector<std::vector<Rat>> to_rows() const;

    RatMat transpose() const;
    RatMat operator*(const RatMat& o) const;
    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    std::vector<Rat> apply(const std::vector<Rat>& x) const;
    bool is_identity() const;
    bool is_zero() const;
};

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

/// Canonical nullspace basis (one vector per free column, RREF back-substitution).
std::vector<std::vector<Rat>> nullspace(const RatMat& m);

/// Solve A x = b exactly. Free variables are set to zero with columns taken in
/// their given order (pivots prefer earlier columns). Empty optional when
/// inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& A, const std::vector<Rat>& b);

std::optional<RatMat> inverse(const RatMat& m);

}  // namespace symbreak

#endif
