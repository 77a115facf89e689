#ifndef FGLKIT_FP_LINALG_HPP
#define FGLKIT_FP_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fglkit {

using Residue = std::uint32_t;

/// True iff n is prime. Trial division; the moduli used here are small.
bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

/// An element of the prime field F_p.
class FpScalar {
public:
    /// Reduces any integer into [0, p).
    FpScalar(std::int64_t value, Residue modulus);

    Residue value() const noexcept { return value_; }
    Residue modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FpScalar operator+(const FpScalar& rhs) const;
    FpScalar operator-(const FpScalar& rhs) const;
    FpScalar operator*(const FpScalar& rhs) const;
    FpScalar operator-() const;
    /// Throws std::domain_error on zero.
    FpScalar inverse() const;

    friend bool operator==(const FpScalar&, const FpScalar&) = default;

private:
    Residue value_;
    Residue modulus_;
};

// Raw residue helpers shared by the polynomial code.
inline Residue add_mod(Residue a, Residue b, Residue p) noexcept
{
    const Residue s = a + b;
    return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue p) noexcept
{
    return a >= b ? a - b : a + p - b;
}
inline Residue mul_mod(Residue a, Residue b, Residue p) noexcept
{
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
}
inline Residue neg_mod(Residue a, Residue p) noexcept { return a == 0 ? 0 : p - a; }
Residue inv_mod(Residue a, Residue p);
Residue reduce_mod(std::int64_t value, Residue p) noexcept;

/// Dense row-major matrix over F_p. Immutable once built.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, Residue modulus);
    /// Builds from rows of scalars; all entries must share one modulus and
    /// all rows must have the same length.
    explicit FpMatrix(const std::vector<std::vector<FpScalar>>& rows);
    /// Builds from integer rows, reducing each entry mod p.
    static FpMatrix from_integers(const std::vector<std::vector<std::int64_t>>& rows, Residue modulus);
    static FpMatrix identity(std::size_t n, Residue modulus);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Residue modulus() const noexcept { return modulus_; }

    Residue at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue v);
    std::span<const Residue> row(std::size_t r) const
    {
        return {entries_.data() + r * cols_, cols_};
    }

    FpMatrix transpose() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    Residue modulus_;
    std::vector<Residue> entries_;
};

/// Reduced row-echelon form: pivots equal 1, pivot columns strictly
/// increasing, zero rows at the bottom. Same shape as the input.
FpMatrix rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Incrementally maintained row space. Rows are kept fully reduced against
/// each other, so basis() is always in reduced echelon form up to row order.
class EchelonBasis {
public:
    EchelonBasis(std::size_t cols, Residue modulus);

    /// Reduces the row against the basis; keeps it if it is independent.
    /// Returns true iff the rank grew.
    bool insert(std::vector<Residue> row);

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool full() const noexcept { return rows_.size() == cols_; }

    /// Basis rows sorted by pivot column.
    std::vector<std::vector<Residue>> basis() const;

private:
    std::size_t cols_;
    Residue modulus_;
    std::vector<std::vector<Residue>> rows_;
    std::vector<std::size_t> pivots_;
    // pivot column -> index into rows_, or npos
    std::vector<std::size_t> pivot_row_;
};

} // namespace fglkit

#endif
