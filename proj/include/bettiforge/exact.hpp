#pragma once

// Multivariate polynomials over Q and dense matrices of them.
//
// A Poly carries its own ordered variable list. Binary operations on
// polynomials with different lists first lift both operands to the union of
// the lists (sorted in natural order, so x2 < x10). Terms are kept in a map
// ordered by descending graded-lex order with no zero coefficients stored.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bettiforge/multiset.hpp"

namespace bettiforge {

using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;
using VarList = std::vector<std::string>;

class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// "x10" after "x2": compare alphabetic prefix, then the numeric suffix.
inline bool natural_less(std::string_view a, std::string_view b) {
    auto split = [](std::string_view s) {
        std::size_t k = s.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
        return std::pair{s.substr(0, k), s.substr(k)};
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na.size() != nb.size()) return na.size() < nb.size();
    return na < nb;
}

struct GrLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

}  // namespace detail

class Poly {
public:
    using Terms = std::map<Exponents, Rational, detail::GrLexGreater>;

    Poly() : vars_(empty_vars()) {}
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c) : vars_(empty_vars()) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(Exponents{}, c);
    }

    static Poly variable(const std::string& name) {
        Poly p;
        p.vars_ = std::make_shared<const VarList>(VarList{name});
        p.terms_.emplace(Exponents{1}, Rational(1));
        return p;
    }

    // Monomial c·x^e over an explicit variable list.
    static Poly monomial(std::shared_ptr<const VarList> vars, Exponents e, const Rational& c) {
        if (e.size() != vars->size()) throw dimension_error("exponent length mismatch");
        Poly p;
        p.vars_ = std::move(vars);
        if (c != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const VarList& vars() const noexcept { return *vars_; }
    const std::shared_ptr<const VarList>& vars_ptr() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() ||
               (terms_.size() == 1 && total(terms_.begin()->first) == 0);
    }
    Rational constant_term() const {
        for (const auto& [e, c] : terms_)
            if (total(e) == 0) return c;
        return Rational(0);
    }
    std::size_t size() const noexcept { return terms_.size(); }

    // Highest total degree; -1 for the zero polynomial.
    Degree total_degree() const {
        return terms_.empty() ? -1 : static_cast<Degree>(total(terms_.begin()->first));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) { return accumulate(o, 1); }
    Poly& operator-=(const Poly& o) { return accumulate(o, -1); }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.is_constant()) return b.scaled(a.terms_.begin()->second);
        if (b.is_constant()) return a.scaled(b.terms_.begin()->second);
        auto [x, y] = lift(a, b);
        Poly r;
        r.vars_ = x.vars_;
        const std::size_t n = x.vars_->size();
        Exponents e(n);
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
                auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
                if (!inserted) {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    Poly scaled(const Rational& c) const {
        if (c == 0) return Poly();
        Poly r = *this;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.terms_ == b.terms_;
        auto [x, y] = lift(a, b);
        return x.terms_ == y.terms_;
    }

    // Raises to a nonnegative power.
    Poly pow(unsigned k) const {
        Poly r(1), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    // Re-expresses this polynomial over `target`, which must contain every
    // variable that occurs with nonzero exponent.
    Poly over(const std::shared_ptr<const VarList>& target) const {
        if (vars_ == target || *vars_ == *target) {
            Poly r = *this;
            r.vars_ = target;
            return r;
        }
        std::vector<std::size_t> where(vars_->size());
        for (std::size_t k = 0; k < vars_->size(); ++k) {
            auto it = std::find(target->begin(), target->end(), (*vars_)[k]);
            where[k] = it == target->end() ? target->size()
                                           : static_cast<std::size_t>(it - target->begin());
        }
        Poly r;
        r.vars_ = target;
        for (const auto& [e, c] : terms_) {
            Exponents f(target->size(), 0);
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (where[k] == target->size())
                    throw std::invalid_argument("variable " + (*vars_)[k] + " missing from target ring");
                f[where[k]] = e[k];
            }
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    std::shared_ptr<const VarList> vars_;
    Terms terms_;

    static std::uint64_t total(const Exponents& e) {
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }

    static const std::shared_ptr<const VarList>& empty_vars() {
        static const auto empty = std::make_shared<const VarList>();
        return empty;
    }

    static std::pair<Poly, Poly> lift(const Poly& a, const Poly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        if (*a.vars_ == *b.vars_) {
            Poly bb = b;
            bb.vars_ = a.vars_;
            return {a, std::move(bb)};
        }
        if (a.is_constant() && a.vars_->empty()) return {a.over(b.vars_), b};
        if (b.is_constant() && b.vars_->empty()) return {a, b.over(a.vars_)};
        VarList u = *a.vars_;
        for (const auto& v : *b.vars_)
            if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
        std::sort(u.begin(), u.end(),
                  [](const std::string& x, const std::string& y) { return detail::natural_less(x, y); });
        auto target = std::make_shared<const VarList>(std::move(u));
        return {a.over(target), b.over(target)};
    }

    Poly& accumulate(const Poly& o, int sign) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = sign > 0 ? o : -o;
            return *this;
        }
        if (vars_ != o.vars_ && *vars_ != *o.vars_) {
            auto [x, y] = lift(*this, o);
            *this = std::move(x);
            return accumulate(y, sign);
        }
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(e, sign > 0 ? c : Rational(-c));
            if (!inserted) {
                if (sign > 0) it->second += c;
                else it->second -= c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
};

inline std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool has_vars = total(e) > 0;
        bool wrote = false;
        if (!has_vars || mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (wrote) os << '*';
            os << (*vars_)[k];
            if (e[k] > 1) os << '^' << e[k];
            wrote = true;
        }
    }
    return os.str();
}

struct Homogeneity {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    Degree degree = 0;  // meaningful only for Kind::homogeneous

    bool is_homogeneous() const { return kind != Kind::mixed; }
    // True when the polynomial can sit in degree d: zero, or homogeneous of degree d.
    bool admits(Degree d) const {
        return kind == Kind::zero || (kind == Kind::homogeneous && degree == d);
    }
};

inline Homogeneity is_homogeneous(const Poly& p) {
    if (p.is_zero()) return {};
    Degree d = -1;
    for (const auto& [e, c] : p.terms()) {
        Degree t = 0;
        for (auto x : e) t += x;
        if (d < 0) d = t;
        else if (t != d) return {Homogeneity::Kind::mixed, 0};
    }
    return {Homogeneity::Kind::homogeneous, d};
}

// ---------------------------------------------------------------------------
// Parsing of the infix text format: 3*x1^2*x2 - x3, (a+b)*(a-b), 3/4*y.

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("polynomial parse error at " + std::to_string(pos_) + ": " + what +
                          " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc;
        bool first = true;
        for (;;) {
            int sign = 1;
            skip();
            if (eat('-')) sign = -1;
            else if (!first && !eat('+')) break;
            else if (first) eat('+');
            Poly t = term();
            acc += sign > 0 ? t : -t;
            first = false;
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = power();
        for (;;) {
            if (eat('*')) {
                acc *= power();
            } else if (eat('/')) {
                Poly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc = acc.scaled(Rational(1) / d.constant_term());
            } else {
                break;
            }
        }
        return acc;
    }

    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Rational r(std::string(s_.substr(start, pos_ - start)), 10);
            return Poly(r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return Poly::variable(std::string(s_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace detail

inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// ---------------------------------------------------------------------------

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    PolyMatrix(std::initializer_list<std::initializer_list<Poly>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw dimension_error("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
    }

    PolyMatrix transpose() const {
        PolyMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    PolyMatrix operator-() const {
        PolyMatrix r = *this;
        for (auto& p : r.data_) p = -p;
        return r;
    }

    PolyMatrix scaled(const Poly& c) const {
        PolyMatrix r = *this;
        for (auto& p : r.data_) p = p * c;
        return r;
    }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        a.require_same_shape(b);
        PolyMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        a.require_same_shape(b);
        PolyMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_error("matrix product " + a.shape() + " * " + b.shape());
        PolyMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Poly& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Poly& y = b(k, j);
                    if (!y.is_zero()) r(i, j) += x * y;
                }
            }
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Rows and columns picked by index, in the order given.
    PolyMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        PolyMatrix r(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (rs[i] >= rows_ || cs[j] >= cols_) throw dimension_error("submatrix index out of range");
                r(i, j) = (*this)(rs[i], cs[j]);
            }
        return r;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;

    void require_same_shape(const PolyMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw dimension_error("shape mismatch " + shape() + " vs " + b.shape());
    }
};

inline PolyMatrix transpose(const PolyMatrix& m) { return m.transpose(); }

// Laplace expansion along successive rows, memoized on the set of columns still
// available. O(n·2^n) polynomial products; fine for the n ≤ 16 used here.
inline Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square " + m.shape());
    const std::size_t n = m.rows();
    if (n > 24) throw dimension_error("determinant size too large for subset expansion");
    std::unordered_map<std::uint32_t, Poly> memo;
    auto rec = [&](auto&& self, std::uint32_t cols) -> Poly {
        if (cols == 0) return Poly(1);
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
        Poly acc;
        int position = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            const Poly& a = m(row, j);
            if (!a.is_zero()) {
                Poly minor = self(self, cols & ~(1u << j));
                if (position % 2 == 0) acc += a * minor;
                else acc -= a * minor;
            }
            ++position;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, n == 32 ? 0xffffffffu : ((1u << n) - 1u));
}

}  // namespace bettiforge
