#include "lienil/fp_linalg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace lienil {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

void check_field(int p) {
    if (p < 2 || p > 251 || !is_prime(static_cast<std::uint64_t>(p)))
        throw FieldError("modulus must be a prime below 256, got " + std::to_string(p));
}

int inverse_mod(int x, int p) {
    int r = 1, b = x % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

FpMatrix::FpMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    check_field(p);
}

FpMatrix::FpMatrix(int p, const std::vector<std::vector<int>>& rows)
    : FpMatrix(p, rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
    }
}

void FpMatrix::set(std::size_t r, std::size_t c, long long v) {
    long long m = v % p_;
    if (m < 0) m += p_;
    a_[r * cols_ + c] = static_cast<std::uint8_t>(m);
}

RrefResult rref(const FpMatrix& m) {
    FpMatrix a = m;
    const int p = a.p();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                auto t = a.at(piv, k);
                a.set(piv, k, a.at(lead, k));
                a.set(lead, k, t);
            }
        int inv = inverse_mod(a.at(lead, c), p);
        for (std::size_t k = 0; k < a.cols(); ++k) a.set(lead, k, a.at(lead, k) * inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, c) == 0) continue;
            int f = a.at(r, c);
            for (std::size_t k = 0; k < a.cols(); ++k)
                a.set(r, k, static_cast<long long>(a.at(r, k)) - f * a.at(lead, k));
        }
        ++lead;
    }
    return {std::move(a), lead};
}

FpSubspace::FpSubspace(int p, std::size_t ambient_dim) : p_(p), n_(ambient_dim) { check_field(p); }

FpSubspace FpSubspace::full(int p, std::size_t n) {
    FpSubspace s(p, n);
    s.rows_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        s.rows_[i * n + i] = 1;
        s.pivots_.push_back(i);
    }
    return s;
}

FpSubspace FpSubspace::span(int p, std::size_t n, const std::vector<FpVector>& vectors) {
    EchelonBuilder b(p, n);
    for (auto v : vectors) {
        if (v.size() != n) throw std::invalid_argument("vector length does not match ambient dimension");
        b.insert(v);
    }
    return b.to_subspace();
}

std::vector<FpVector> FpSubspace::basis() const {
    std::vector<FpVector> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        auto r = basis_row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

bool FpSubspace::contains(std::span<const std::uint8_t> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match ambient dimension");
    std::vector<int> w(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        int x = w[pivots_[i]] % p_;
        if (x == 0) continue;
        auto r = basis_row(i);
        for (std::size_t k = pivots_[i]; k < n_; ++k) w[k] = (w[k] + (p_ - x) * r[k]) % p_;
    }
    return std::all_of(w.begin(), w.end(), [&](int x) { return x % p_ == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
    if (other.p_ != p_ || other.n_ != n_) throw std::invalid_argument("field or dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

EchelonBuilder::EchelonBuilder(int p, std::size_t ambient_dim)
    : p_(p), n_(ambient_dim), pivot_row_(ambient_dim, -1), work_(ambient_dim) {
    check_field(p);
}

EchelonBuilder::EchelonBuilder(const FpSubspace& s) : EchelonBuilder(s.p(), s.ambient_dim()) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        FpVector v(s.basis_row(i).begin(), s.basis_row(i).end());
        insert(v);
    }
}

bool EchelonBuilder::reduce(std::span<std::uint8_t> v) const {
    const std::uint32_t p = static_cast<std::uint32_t>(p_);
    std::uint32_t* w = work_.data();
    for (std::size_t k = 0; k < n_; ++k) w[k] = v[k];
    bool nonzero = false;
    for (std::size_t c = 0; c < n_; ++c) {
        std::uint32_t x = w[c] % p;
        w[c] = x;
        if (x == 0) continue;
        int r = pivot_row_[c];
        if (r < 0) {
            nonzero = true;
            continue;
        }
        const std::uint32_t f = p - x;
        const std::uint8_t* row = rows_.data() + static_cast<std::size_t>(r) * n_;
        for (std::size_t k = c + 1; k < n_; ++k) w[k] += f * row[k];
        w[c] = 0;
    }
    for (std::size_t k = 0; k < n_; ++k) v[k] = static_cast<std::uint8_t>(w[k]);
    return nonzero;
}

bool EchelonBuilder::insert(std::span<std::uint8_t> v) {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match ambient dimension");
    if (!reduce(v)) return false;
    std::size_t c0 = 0;
    while (v[c0] == 0) ++c0;
    const int inv = inverse_mod(v[c0], p_);
    for (std::size_t k = c0; k < n_; ++k) v[k] = static_cast<std::uint8_t>(v[k] * inv % p_);
    rows_.insert(rows_.end(), v.begin(), v.end());
    pivot_row_[c0] = static_cast<int>(count_);
    row_pivot_.push_back(c0);
    ++count_;
    return true;
}

bool EchelonBuilder::contains(std::span<const std::uint8_t> v) const {
    FpVector tmp(v.begin(), v.end());
    return !reduce(tmp);
}

FpSubspace EchelonBuilder::to_subspace() const {
    FpSubspace s(p_, n_);
    std::vector<std::size_t> order(count_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return row_pivot_[a] < row_pivot_[b]; });
    s.rows_.resize(count_ * n_);
    for (std::size_t i = 0; i < count_; ++i) {
        std::copy_n(rows_.begin() + static_cast<std::ptrdiff_t>(order[i] * n_), n_,
                    s.rows_.begin() + static_cast<std::ptrdiff_t>(i * n_));
        s.pivots_.push_back(row_pivot_[order[i]]);
    }
    for (std::size_t i = count_; i-- > 0;) {
        const std::size_t c = s.pivots_[i];
        const std::uint8_t* ri = s.rows_.data() + i * n_;
        for (std::size_t j = 0; j < i; ++j) {
            std::uint8_t* rj = s.rows_.data() + j * n_;
            const int x = rj[c];
            if (x == 0) continue;
            const int f = p_ - x;
            for (std::size_t k = c; k < n_; ++k) rj[k] = static_cast<std::uint8_t>((rj[k] + f * ri[k]) % p_);
        }
    }
    return s;
}

namespace {

void check_compatible(const FpSubspace& a, const FpSubspace& b) {
    if (a.p() != b.p()) throw FieldError("subspaces over different fields");
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspaces of different ambient dimension");
}

}  // namespace

FpSubspace subspace_join(const FpSubspace& a, const FpSubspace& b) {
    check_compatible(a, b);
    EchelonBuilder builder(a);
    for (std::size_t i = 0; i < b.dim(); ++i) {
        FpVector v(b.basis_row(i).begin(), b.basis_row(i).end());
        builder.insert(v);
    }
    return builder.to_subspace();
}

// Zassenhaus: echelonise [a|a] over [b|0]; rows with vanishing left half
// carry a basis of the intersection in their right half.
FpSubspace subspace_meet(const FpSubspace& a, const FpSubspace& b) {
    check_compatible(a, b);
    const std::size_t n = a.ambient_dim();
    EchelonBuilder builder(a.p(), 2 * n);
    FpVector v(2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto r = a.basis_row(i);
        std::copy(r.begin(), r.end(), v.begin());
        std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
        builder.insert(v);
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        auto r = b.basis_row(i);
        std::fill(v.begin(), v.end(), 0);
        std::copy(r.begin(), r.end(), v.begin());
        builder.insert(v);
    }
    FpSubspace all = builder.to_subspace();
    std::vector<FpVector> meet;
    for (std::size_t i = 0; i < all.dim(); ++i) {
        if (all.pivots()[i] < n) continue;
        auto r = all.basis_row(i);
        meet.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
    }
    return FpSubspace::span(a.p(), n, meet);
}

bool subspace_contains(const FpSubspace& s, std::span<const std::uint8_t> v) { return s.contains(v); }

FpSubspace close_under(const FpSubspace& seed, const std::vector<LinearMap>& operators) {
    const std::size_t n = seed.ambient_dim();
    EchelonBuilder builder(seed.p(), n);
    std::deque<FpVector> queue;
    for (std::size_t i = 0; i < seed.dim(); ++i) {
        FpVector v(seed.basis_row(i).begin(), seed.basis_row(i).end());
        if (builder.insert(v)) queue.push_back(std::move(v));
    }
    FpVector out(n);
    while (!queue.empty() && builder.dim() < n) {
        FpVector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& op : operators) {
            std::fill(out.begin(), out.end(), 0);
            op(v, out);
            if (builder.insert(out)) queue.push_back(out);
        }
    }
    return builder.to_subspace();
}

}  // namespace lienil
