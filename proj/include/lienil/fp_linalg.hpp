#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lienil {

bool is_prime(std::uint64_t n);

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense matrix over GF(p), entries stored as least non-negative residues.
class FpMatrix {
public:
    FpMatrix(int p, std::size_t rows, std::size_t cols);
    FpMatrix(int p, const std::vector<std::vector<int>>& rows);

    int p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v);
    std::span<const std::uint8_t> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<std::uint8_t> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    bool operator==(const FpMatrix&) const = default;

private:
    int p_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;
};

struct RrefResult {
    FpMatrix form;
    std::size_t rank;
};

// Reduced row-echelon form; zero rows are moved to the bottom.
RrefResult rref(const FpMatrix& m);

using FpVector = std::vector<std::uint8_t>;

// Canonical subspace of GF(p)^n: basis rows in reduced row-echelon form with
// leading coefficient 1. Equality of subspaces is equality of bases.
class FpSubspace {
public:
    FpSubspace(int p, std::size_t ambient_dim);

    static FpSubspace zero(int p, std::size_t n) { return FpSubspace(p, n); }
    static FpSubspace full(int p, std::size_t n);
    static FpSubspace span(int p, std::size_t n, const std::vector<FpVector>& vectors);

    int p() const { return p_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::span<const std::uint8_t> basis_row(std::size_t i) const { return {rows_.data() + i * n_, n_}; }
    std::vector<FpVector> basis() const;

    bool contains(std::span<const std::uint8_t> v) const;
    bool contains(const FpSubspace& other) const;

    bool operator==(const FpSubspace&) const = default;

private:
    friend class EchelonBuilder;
    int p_;
    std::size_t n_;
    std::vector<std::size_t> pivots_;
    std::vector<std::uint8_t> rows_;
};

// Incremental echelon basis. Rows are kept normalised (pivot entry 1) but
// not fully reduced; to_subspace() produces the canonical form.
class EchelonBuilder {
public:
    EchelonBuilder(int p, std::size_t ambient_dim);
    explicit EchelonBuilder(const FpSubspace& s);

    int p() const { return p_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return count_; }

    // Reduces v in place against the current rows. Returns true if the
    // residue is nonzero.
    bool reduce(std::span<std::uint8_t> v) const;
    // Inserts v if independent. On success, the reduced and normalised
    // vector is written back into v.
    bool insert(std::span<std::uint8_t> v);
    bool contains(std::span<const std::uint8_t> v) const;

    FpSubspace to_subspace() const;

private:
    int p_;
    std::size_t n_;
    std::size_t count_ = 0;
    std::vector<int> pivot_row_;
    std::vector<std::size_t> row_pivot_;
    std::vector<std::uint8_t> rows_;
    mutable std::vector<std::uint32_t> work_;
};

using LinearMap = std::function<void(std::span<const std::uint8_t> in, std::span<std::uint8_t> out)>;

FpSubspace subspace_join(const FpSubspace& a, const FpSubspace& b);
FpSubspace subspace_meet(const FpSubspace& a, const FpSubspace& b);
bool subspace_contains(const FpSubspace& s, std::span<const std::uint8_t> v);
FpSubspace close_under(const FpSubspace& seed, const std::vector<LinearMap>& operators);

}  // namespace lienil
