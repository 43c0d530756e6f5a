#pragma once

// Pfaffian algebra of alternating matrices over Q[x...].
//
// Sign conventions (0-based indices throughout the API):
//   * submaximal pfaffians: p_i = (-1)^i pf(M with row/col i deleted), so M·p = 0;
//   * pfaffian adjoint:     adj(i,j) = (-1)^<j+1,i+1> pf(M_{ij}), so adj·M = M·adj = pf(M)·I.
// The adjoint is the transpose of the signed cofactor matrix read off the
// row-expansion formula; with that orientation both identities hold exactly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bettiforge/exact.hpp"

namespace bettiforge {

class AlternatingMatrix {
public:
    AlternatingMatrix() = default;

    explicit AlternatingMatrix(PolyMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw dimension_error("alternating matrix must be square, got " + m_.shape());
        for (std::size_t i = 0; i < m_.rows(); ++i) {
            if (!m_(i, i).is_zero()) throw std::invalid_argument("alternating matrix has nonzero diagonal");
            for (std::size_t j = i + 1; j < m_.cols(); ++j)
                if (!(m_(j, i) == -m_(i, j)))
                    throw std::invalid_argument("matrix is not skew-symmetric at (" + std::to_string(i + 1) +
                                                "," + std::to_string(j + 1) + ")");
        }
    }

    // Builds an alternating matrix from its strict upper triangle: entry(i, j) for i < j.
    template <class F>
    static AlternatingMatrix from_upper(std::size_t n, F&& entry) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = entry(i, j);
                m(j, i) = -m(i, j);
            }
        AlternatingMatrix a;
        a.m_ = std::move(m);
        return a;
    }

    std::size_t size() const noexcept { return m_.rows(); }
    const Poly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const PolyMatrix& matrix() const noexcept { return m_; }

    friend bool operator==(const AlternatingMatrix& a, const AlternatingMatrix& b) { return a.m_ == b.m_; }

private:
    PolyMatrix m_;
};

// <i,j> for 1-based i != j.
constexpr int sign_bracket(int i, int j) { return i < j ? i + j + 1 : i + j; }

namespace detail {

inline int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

// Pfaffian of the principal submatrix on `mask`, expanding along the row with
// the fewest nonzero entries inside the subset; results cached by subset.
class PfaffianExpander {
public:
    explicit PfaffianExpander(const AlternatingMatrix& m) : m_(m) {
        if (m.size() > 64) throw dimension_error("pfaffian expansion supports size <= 64");
    }

    Poly operator()(std::uint64_t mask) {
        if (mask == 0) return Poly(1);
        if (std::popcount(mask) % 2 != 0) return Poly();
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < m_.size(); ++k)
            if (mask & (std::uint64_t{1} << k)) idx.push_back(k);

        std::size_t pivot = 0, best = idx.size() + 1;
        for (std::size_t p = 0; p < idx.size(); ++p) {
            std::size_t nz = 0;
            for (std::size_t q = 0; q < idx.size(); ++q)
                if (!m_(idx[p], idx[q]).is_zero()) ++nz;
            if (nz < best) {
                best = nz;
                pivot = p;
            }
        }

        Poly acc;
        if (best > 0) {
            for (std::size_t q = 0; q < idx.size(); ++q) {
                if (q == pivot) continue;
                const Poly& a = m_(idx[pivot], idx[q]);
                if (a.is_zero()) continue;
                Poly minor = (*this)(mask & ~(std::uint64_t{1} << idx[pivot]) & ~(std::uint64_t{1} << idx[q]));
                if (minor.is_zero()) continue;
                int s = parity_sign(sign_bracket(static_cast<int>(pivot) + 1, static_cast<int>(q) + 1));
                if (s > 0) acc += a * minor;
                else acc -= a * minor;
            }
        }
        memo_.emplace(mask, acc);
        return acc;
    }

    static std::uint64_t full(std::size_t n) {
        return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }

private:
    const AlternatingMatrix& m_;
    std::unordered_map<std::uint64_t, Poly> memo_;
};

inline std::uint64_t without(std::uint64_t mask, std::size_t i) { return mask & ~(std::uint64_t{1} << i); }

}  // namespace detail

inline Poly pfaffian(const AlternatingMatrix& m) {
    if (m.size() % 2 != 0) throw std::domain_error("odd-size pfaffian undefined");
    detail::PfaffianExpander pf(m);
    return pf(detail::PfaffianExpander::full(m.size()));
}

// Deletes the given rows and the same columns (0-based, distinct).
inline AlternatingMatrix delete_rows_cols(const AlternatingMatrix& m, const std::vector<std::size_t>& idx) {
    std::vector<bool> drop(m.size(), false);
    for (std::size_t i : idx) {
        if (i >= m.size()) throw std::out_of_range("index " + std::to_string(i + 1) + " out of range");
        if (drop[i]) throw std::invalid_argument("repeated index " + std::to_string(i + 1));
        drop[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!drop[i]) keep.push_back(i);
    return AlternatingMatrix(m.matrix().submatrix(keep, keep));
}

inline std::vector<Poly> submaximal_pfaffians(const AlternatingMatrix& m) {
    if (m.size() % 2 == 0) throw std::domain_error("submaximal pfaffians need odd size");
    detail::PfaffianExpander pf(m);
    const auto all = detail::PfaffianExpander::full(m.size());
    std::vector<Poly> out;
    out.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Poly v = pf(detail::without(all, i));
        out.push_back(i % 2 == 0 ? v : -v);
    }
    return out;
}

inline AlternatingMatrix pfaffian_adjoint(const AlternatingMatrix& m) {
    if (m.size() % 2 != 0) throw std::domain_error("pfaffian adjoint needs even size");
    detail::PfaffianExpander pf(m);
    const auto all = detail::PfaffianExpander::full(m.size());
    return AlternatingMatrix::from_upper(m.size(), [&](std::size_t i, std::size_t j) {
        Poly minor = pf(detail::without(detail::without(all, i), j));
        int s = detail::parity_sign(sign_bracket(static_cast<int>(j) + 1, static_cast<int>(i) + 1));
        return s > 0 ? minor : -minor;
    });
}

// Assembles [[0, a | B], [-a, 0 |  ], [-Bᵗ | C]] where B is 2×(m-2).
inline AlternatingMatrix assemble_block(const Poly& a, const PolyMatrix& b, const AlternatingMatrix& c) {
    if (b.rows() != 2 || b.cols() != c.size())
        throw dimension_error("block shape mismatch: B is " + b.shape() + ", C has size " + std::to_string(c.size()));
    const std::size_t n = c.size() + 2;
    return AlternatingMatrix::from_upper(n, [&](std::size_t i, std::size_t j) -> Poly {
        if (i == 0 && j == 1) return a;
        if (i < 2) return b(i, j - 2);
        return c(i - 2, j - 2);
    });
}

// a·pf(C) + pf(B·adj(C)·Bᵗ) for the block shape above.
inline Poly block_pfaffian(const Poly& a, const PolyMatrix& b, const AlternatingMatrix& c) {
    if (b.rows() != 2 || b.cols() != c.size() || c.size() % 2 != 0)
        throw dimension_error("block shape mismatch: B is " + b.shape() + ", C has size " + std::to_string(c.size()));
    PolyMatrix inner = b * pfaffian_adjoint(c).matrix() * b.transpose();
    return a * pfaffian(c) + inner(0, 1);
}

// Borders an odd alternating M with two rows/columns so that the submaximal
// pfaffians of the result are -(p_1, ..., p_m, Σ a_i p_i, 0).
inline AlternatingMatrix augment(const AlternatingMatrix& m, const std::vector<Poly>& a) {
    if (m.size() % 2 == 0) throw std::domain_error("augment needs odd size");
    if (a.size() != m.size())
        throw dimension_error("coefficient vector length " + std::to_string(a.size()) + " != " +
                              std::to_string(m.size()));
    const std::size_t n = m.size();
    return AlternatingMatrix::from_upper(n + 2, [&](std::size_t i, std::size_t j) -> Poly {
        if (j < n) return m(i, j);
        if (j == n) return Poly();              // column of zeros above the bordered block
        if (i < n) return a[i];                 // j == n + 1
        return Poly(-1);                        // (n, n+1)
    });
}

// A·M·Aᵗ.
inline AlternatingMatrix congruence(const PolyMatrix& a, const AlternatingMatrix& m) {
    if (a.rows() != a.cols() || a.rows() != m.size())
        throw dimension_error("congruence needs square A matching M, got " + a.shape() + " and size " +
                              std::to_string(m.size()));
    PolyMatrix r = a * m.matrix() * a.transpose();
    return AlternatingMatrix(std::move(r));
}

struct Embedding {
    AlternatingMatrix matrix;
    // Positions (0-based) of p1, p2, p3 in the submaximal pfaffian vector.
    std::vector<std::size_t> slots;
    // The submaximal pfaffian vector equals sign·(basis, p1, 0, p2, 0, p3, 0).
    int sign = 1;
};

// Applies `augment` three times so that three prescribed elements of the
// pfaffian ideal show up among the submaximal pfaffians. Each coefficient
// vector expresses p_k against submaximal_pfaffians(psi).
inline Embedding three_generator_embedding(const AlternatingMatrix& psi,
                                           const std::vector<std::vector<Poly>>& coeffs) {
    if (coeffs.size() != 3) throw dimension_error("expected three coefficient vectors");
    Embedding e{psi, {}, 1};
    for (const auto& c : coeffs) {
        if (c.size() != psi.size())
            throw dimension_error("coefficient vector length " + std::to_string(c.size()) + " != " +
                                  std::to_string(psi.size()));
        std::vector<Poly> a(e.matrix.size());
        // the running vector is sign·(basis, ...), so Σ c_i·v_i already carries the sign
        std::copy(c.begin(), c.end(), a.begin());
        e.slots.push_back(e.matrix.size());
        e.matrix = augment(e.matrix, a);
        e.sign = -e.sign;
    }
    return e;
}

}  // namespace bettiforge
