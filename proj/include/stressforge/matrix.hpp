#pragma once

#include <cstdint>
#include <vector>

#include "stressforge/rational.hpp"

namespace stressforge {

/// Dense exact rational matrix. Everything in scope is at most ~24x21
/// (d*n x m for n <= 8), so no sparsity machinery.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    RationalVec multiply(const RationalVec& v) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact basis of the null space. Basis vectors are canonical: integer
/// entries with content 1 and positive first nonzero entry, ordered by the
/// free column they correspond to.
struct KernelBasis {
    int ambient_dim = 0;
    std::vector<RationalVec> vectors;

    int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Null space via fraction-free (Bareiss) elimination with deterministic
/// pivoting (first nonzero in column order).
KernelBasis kernel_basis(const RationalMatrix& a);

int exact_rank(const RationalMatrix& a);

/// Rank of the matrix reduced mod a machine-word prime. Guaranteed <= the
/// exact rank; a prefilter, never a final answer. Throws BadPrime when some
/// entry denominator vanishes mod p.
int rank_mod_p(const RationalMatrix& a, std::uint64_t prime);

/// Scales a rational vector to integer entries with content 1 and positive
/// first nonzero entry. The zero vector is returned unchanged.
RationalVec canonical_integer_vector(const RationalVec& v);

namespace primes {

bool is_prime(std::uint64_t n);

/// Deterministic 62-bit prime stream: the k-th prime produced from a seed.
std::uint64_t random_prime_62(std::uint64_t seed, int index);

} // namespace primes

} // namespace stressforge
