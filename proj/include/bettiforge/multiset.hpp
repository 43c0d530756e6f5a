#pragma once

// Finite multisets of integers in canonical run-length form.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bettiforge {

using Degree = std::int64_t;

enum class Sign : int { plus = 1, minus = -1 };

class IntMultiset {
public:
    struct Entry {
        Degree value;
        Degree count;
        friend bool operator==(const Entry&, const Entry&) = default;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };
    using Storage = boost::container::small_vector<Entry, 8>;

    IntMultiset() = default;
    IntMultiset(std::initializer_list<Degree> values)
        : IntMultiset(std::span<const Degree>(values.begin(), values.size())) {}
    explicit IntMultiset(std::span<const Degree> values) {
        std::vector<Degree> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        for (Degree v : sorted) push_back_sorted(v, 1);
    }
    explicit IntMultiset(const std::vector<Degree>& values)
        : IntMultiset(std::span<const Degree>(values)) {}

    // Builds from (value, count) pairs in any order; zero counts are dropped.
    static IntMultiset from_counts(std::vector<Entry> runs) {
        std::sort(runs.begin(), runs.end(),
                  [](const Entry& a, const Entry& b) { return a.value < b.value; });
        IntMultiset out;
        for (const Entry& e : runs) {
            if (e.count < 0) throw std::invalid_argument("negative multiplicity");
            if (e.count > 0) out.push_back_sorted(e.value, e.count);
        }
        return out;
    }

    std::span<const Entry> entries() const noexcept { return {runs_.data(), runs_.size()}; }
    bool empty() const noexcept { return runs_.empty(); }

    Degree multiplicity(Degree v) const noexcept {
        auto it = std::lower_bound(runs_.begin(), runs_.end(), v,
                                   [](const Entry& e, Degree x) { return e.value < x; });
        return (it != runs_.end() && it->value == v) ? it->count : 0;
    }
    bool contains(Degree v) const noexcept { return multiplicity(v) > 0; }

    // |M|
    Degree card() const noexcept {
        Degree n = 0;
        for (const Entry& e : runs_) n += e.count;
        return n;
    }
    // ‖M‖
    Degree norm() const noexcept {
        Degree s = 0;
        for (const Entry& e : runs_) s += e.count * e.value;
        return s;
    }

    Degree min() const {
        if (runs_.empty()) throw std::domain_error("min of empty multiset");
        return runs_.front().value;
    }
    Degree max() const {
        if (runs_.empty()) throw std::domain_error("max of empty multiset");
        return runs_.back().value;
    }

    // Sorted values with repetitions.
    std::vector<Degree> values() const {
        std::vector<Degree> out;
        out.reserve(static_cast<std::size_t>(card()));
        for (const Entry& e : runs_)
            for (Degree k = 0; k < e.count; ++k) out.push_back(e.value);
        return out;
    }

    std::vector<Degree> support() const {
        std::vector<Degree> out;
        out.reserve(runs_.size());
        for (const Entry& e : runs_) out.push_back(e.value);
        return out;
    }

    // Appends a run whose value exceeds every stored value (or equals the last one).
    void push_back_sorted(Degree value, Degree count) {
        if (count <= 0) return;
        if (!runs_.empty() && runs_.back().value == value) {
            runs_.back().count += count;
            return;
        }
        if (!runs_.empty() && runs_.back().value > value)
            throw std::logic_error("push_back_sorted out of order");
        runs_.push_back({value, count});
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "{{";
        bool first = true;
        for (const Entry& e : runs_)
            for (Degree k = 0; k < e.count; ++k) {
                if (!first) os << ',';
                os << e.value;
                first = false;
            }
        os << "}}";
        return os.str();
    }

    friend bool operator==(const IntMultiset& a, const IntMultiset& b) {
        return std::equal(a.runs_.begin(), a.runs_.end(), b.runs_.begin(), b.runs_.end());
    }
    // Lexicographic order on the sorted value lists.
    friend bool operator<(const IntMultiset& a, const IntMultiset& b) {
        auto ia = a.runs_.begin(), ib = b.runs_.begin();
        Degree ka = 0, kb = 0;
        while (ia != a.runs_.end() && ib != b.runs_.end()) {
            if (ia->value != ib->value) return ia->value < ib->value;
            if (++ka == ia->count) { ++ia; ka = 0; }
            if (++kb == ib->count) { ++ib; kb = 0; }
        }
        return ia == a.runs_.end() && ib != b.runs_.end();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMultiset& m) {
        return os << m.to_string();
    }

private:
    Storage runs_;

    template <class Combine>
    friend IntMultiset merge_runs(const IntMultiset& a, const IntMultiset& b, Combine combine);
};

// Walks both run lists in value order and keeps combine(μ_a, μ_b) when positive.
template <class Combine>
IntMultiset merge_runs(const IntMultiset& a, const IntMultiset& b, Combine combine) {
    IntMultiset out;
    auto ia = a.runs_.begin(), ea = a.runs_.end();
    auto ib = b.runs_.begin(), eb = b.runs_.end();
    while (ia != ea || ib != eb) {
        Degree v, ma = 0, mb = 0;
        if (ib == eb || (ia != ea && ia->value < ib->value)) {
            v = ia->value;
            ma = (ia++)->count;
        } else if (ia == ea || ib->value < ia->value) {
            v = ib->value;
            mb = (ib++)->count;
        } else {
            v = ia->value;
            ma = (ia++)->count;
            mb = (ib++)->count;
        }
        Degree m = combine(ma, mb);
        if (m > 0) out.runs_.push_back({v, m});
    }
    return out;
}

// M ∩ N: pointwise minimum.
inline IntMultiset intersect(const IntMultiset& a, const IntMultiset& b) {
    return merge_runs(a, b, [](Degree x, Degree y) { return std::min(x, y); });
}

// M ∪ N: pointwise maximum.
inline IntMultiset unite(const IntMultiset& a, const IntMultiset& b) {
    return merge_runs(a, b, [](Degree x, Degree y) { return std::max(x, y); });
}

// M ⊔ N: multiplicities add.
inline IntMultiset sum(const IntMultiset& a, const IntMultiset& b) {
    return merge_runs(a, b, [](Degree x, Degree y) { return x + y; });
}

// M \ N: truncated subtraction.
inline IntMultiset diff(const IntMultiset& a, const IntMultiset& b) {
    return merge_runs(a, b, [](Degree x, Degree y) { return x - y; });
}

inline bool is_submultiset(const IntMultiset& a, const IntMultiset& b) {
    auto eb = b.entries();
    std::size_t j = 0;
    for (const auto& e : a.entries()) {
        while (j < eb.size() && eb[j].value < e.value) ++j;
        if (j == eb.size() || eb[j].value != e.value || eb[j].count < e.count) return false;
    }
    return true;
}

// n ± M: every value y becomes n + sign·y.
inline IntMultiset affine(Degree n, Sign sign, const IntMultiset& m) {
    if (sign == Sign::plus) {
        IntMultiset out;
        for (const auto& e : m.entries()) out.push_back_sorted(n + e.value, e.count);
        return out;
    }
    IntMultiset out;
    auto es = m.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it) out.push_back_sorted(n - it->value, it->count);
    return out;
}

inline Degree norm(const IntMultiset& m) { return m.norm(); }
inline Degree card(const IntMultiset& m) { return m.card(); }

}  // namespace bettiforge
