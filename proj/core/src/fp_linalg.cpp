#include "fglkit/fp_linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace fglkit {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

void require_odd_prime(std::uint64_t p)
{
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
    if (p > (1u << 15))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is too large (limit 32768)");
}

Residue reduce_mod(std::int64_t value, Residue p) noexcept
{
    const auto m = static_cast<std::int64_t>(p);
    auto r = value % m;
    if (r < 0)
        r += m;
    return static_cast<Residue>(r);
}

Residue inv_mod(Residue a, Residue p)
{
    if (a % p == 0)
        throw std::domain_error("zero has no inverse in F_p");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        const auto q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce_mod(t, p);
}

FpScalar::FpScalar(std::int64_t value, Residue modulus)
    : value_(0), modulus_(modulus)
{
    require_odd_prime(modulus);
    value_ = reduce_mod(value, modulus);
}

namespace {

void require_same_field(const FpScalar& a, const FpScalar& b)
{
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("F_p scalars with different moduli");
}

} // namespace

FpScalar FpScalar::operator+(const FpScalar& rhs) const
{
    require_same_field(*this, rhs);
    return {add_mod(value_, rhs.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator-(const FpScalar& rhs) const
{
    require_same_field(*this, rhs);
    return {sub_mod(value_, rhs.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator*(const FpScalar& rhs) const
{
    require_same_field(*this, rhs);
    return {mul_mod(value_, rhs.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator-() const { return {neg_mod(value_, modulus_), modulus_}; }

FpScalar FpScalar::inverse() const { return {inv_mod(value_, modulus_), modulus_}; }

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Residue modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, 0)
{
    require_odd_prime(modulus);
}

FpMatrix::FpMatrix(const std::vector<std::vector<FpScalar>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), modulus_(0)
{
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged rows in FpMatrix");
        for (const auto& x : r) {
            if (modulus_ == 0)
                modulus_ = x.modulus();
            else if (x.modulus() != modulus_)
                throw std::invalid_argument("FpMatrix entries have mismatched moduli");
        }
    }
    if (modulus_ == 0)
        throw std::invalid_argument("FpMatrix built from scalars needs at least one entry to fix p");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows)
        for (const auto& x : r)
            entries_.push_back(x.value());
}

FpMatrix FpMatrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows, Residue modulus)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(rows.size(), cols, modulus);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ragged rows in FpMatrix");
        for (std::size_t j = 0; j < cols; ++j)
            m.entries_[i * cols + j] = reduce_mod(rows[i][j], modulus);
    }
    return m;
}

FpMatrix FpMatrix::identity(std::size_t n, Residue modulus)
{
    FpMatrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i)
        m.entries_[i * n + i] = 1;
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, Residue v)
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("FpMatrix index out of range");
    entries_[r * cols_ + c] = v % modulus_;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(cols_, rows_, modulus_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
    return t;
}

FpMatrix rref(const FpMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    const Residue p = m.modulus();
    std::vector<std::vector<Residue>> a(rows);
    for (std::size_t i = 0; i < rows; ++i)
        a[i].assign(m.row(i).begin(), m.row(i).end());

    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[lead]);
        auto& prow = a[lead];
        const Residue inv = inv_mod(prow[c], p);
        for (std::size_t j = c; j < cols; ++j)
            prow[j] = mul_mod(prow[j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || a[i][c] == 0)
                continue;
            const Residue f = a[i][c];
            auto& r = a[i];
            for (std::size_t j = c; j < cols; ++j)
                if (prow[j] != 0)
                    r[j] = sub_mod(r[j], mul_mod(f, prow[j], p), p);
        }
        ++lead;
    }

    FpMatrix out(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0)
                out.set(i, j, a[i][j]);
    return out;
}

std::size_t rank(const FpMatrix& m)
{
    EchelonBasis basis(m.cols(), m.modulus());
    for (std::size_t i = 0; i < m.rows() && !basis.full(); ++i)
        basis.insert({m.row(i).begin(), m.row(i).end()});
    return basis.rank();
}

EchelonBasis::EchelonBasis(std::size_t cols, Residue modulus)
    : cols_(cols), modulus_(modulus), pivot_row_(cols, std::numeric_limits<std::size_t>::max())
{
    require_odd_prime(modulus);
}

bool EchelonBasis::insert(std::vector<Residue> row)
{
    if (row.size() != cols_)
        throw std::invalid_argument("row length does not match EchelonBasis width");
    const Residue p = modulus_;
    constexpr auto none = std::numeric_limits<std::size_t>::max();

    std::size_t lead = none;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] == 0)
            continue;
        const auto idx = pivot_row_[c];
        if (idx == none) {
            if (lead == none)
                lead = c;
            continue;
        }
        const Residue f = row[c];
        const auto& prow = rows_[idx];
        for (std::size_t j = c; j < cols_; ++j)
            if (prow[j] != 0)
                row[j] = sub_mod(row[j], mul_mod(f, prow[j], p), p);
    }
    if (lead == none)
        return false;

    const Residue inv = inv_mod(row[lead], p);
    for (std::size_t j = lead; j < cols_; ++j)
        row[j] = mul_mod(row[j], inv, p);

    for (auto& other : rows_) {
        const Residue f = other[lead];
        if (f == 0)
            continue;
        for (std::size_t j = lead; j < cols_; ++j)
            if (row[j] != 0)
                other[j] = sub_mod(other[j], mul_mod(f, row[j], p), p);
    }
    pivot_row_[lead] = rows_.size();
    pivots_.push_back(lead);
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::vector<Residue>> EchelonBasis::basis() const
{
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    std::vector<std::vector<Residue>> out;
    out.reserve(order.size());
    for (auto i : order)
        out.push_back(rows_[i]);
    return out;
}

} // namespace fglkit
