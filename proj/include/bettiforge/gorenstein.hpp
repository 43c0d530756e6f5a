#pragma once

// Numerical theory of codimension-3 Artinian Gorenstein graded algebras.
//
// A Betti sequence is determined by its generator degrees d_1 <= ... <= d_{2n+1}:
//
//     0 -> R(-θ) -> ⊕ R(-(θ - d_i)) -> ⊕ R(-d_i) -> R,    θ = 2‖gens‖ / (|gens| - 1).
//
// All index sets (B, C, B̄) are 1-based positions in the sorted generator list.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bettiforge/multiset.hpp"

namespace bettiforge {

struct GorensteinVerdict {
    enum class Clause { none, cardinality, integrality, gaeta_diesel };

    bool admissible = false;
    Clause failed = Clause::none;
    std::optional<Degree> theta;  // set whenever 2‖gens‖/(|gens|-1) is an integer
    std::string reason;
};

// Gaeta–Diesel admissibility of a generator-degree multiset.
inline GorensteinVerdict check_gorenstein_betti(const IntMultiset& gens) {
    GorensteinVerdict v;
    const Degree count = gens.card();
    if (count < 3 || count % 2 == 0) {
        v.failed = GorensteinVerdict::Clause::cardinality;
        v.reason = "number of generators " + std::to_string(count) + " is not odd and >= 3";
        return v;
    }
    const Degree num = 2 * gens.norm(), den = count - 1;
    if (num % den != 0) {
        v.failed = GorensteinVerdict::Clause::integrality;
        v.reason = "theta = " + std::to_string(num) + "/" + std::to_string(den) + " is not an integer";
        return v;
    }
    const Degree theta = num / den;
    v.theta = theta;
    const auto h = gens.values();
    const std::size_t m = static_cast<std::size_t>(count - 1) / 2;
    // θ > h_{i+1} + h_{2m+2-i}, i = 1..m (1-based)
    for (std::size_t i = 1; i <= m; ++i) {
        const Degree lhs = h[i] + h[2 * m + 1 - i];
        if (!(theta > lhs)) {
            v.failed = GorensteinVerdict::Clause::gaeta_diesel;
            v.reason = "theta = " + std::to_string(theta) + " is not > h_" + std::to_string(i + 1) + " + h_" +
                       std::to_string(2 * m + 2 - i) + " = " + std::to_string(lhs);
            return v;
        }
    }
    v.admissible = true;
    return v;
}

class inadmissible_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An admissible Gorenstein Betti sequence (G0, θ - G0, {θ}).
class GorensteinBetti {
public:
    explicit GorensteinBetti(IntMultiset gens) : gens_(std::move(gens)) {
        auto v = check_gorenstein_betti(gens_);
        if (!v.admissible) throw inadmissible_error("not a Gorenstein Betti sequence: " + v.reason);
        theta_ = *v.theta;
    }
    GorensteinBetti(IntMultiset gens, Degree theta) : GorensteinBetti(std::move(gens)) {
        if (theta != theta_)
            throw inadmissible_error("theta " + std::to_string(theta) + " does not match 2|G|/(#G-1) = " +
                                     std::to_string(theta_));
    }

    const IntMultiset& gens() const noexcept { return gens_; }
    Degree theta() const noexcept { return theta_; }
    IntMultiset syzygies() const { return affine(theta_, Sign::minus, gens_); }
    // n with |gens| = 2n + 1.
    std::size_t n() const noexcept { return static_cast<std::size_t>(gens_.card() - 1) / 2; }

    friend bool operator==(const GorensteinBetti&, const GorensteinBetti&) = default;

private:
    IntMultiset gens_;
    Degree theta_ = 0;
};

struct MciTriple {
    Degree e1 = 0, e2 = 0, e3 = 0;

    Degree operator[](std::size_t i) const { return i == 0 ? e1 : (i == 1 ? e2 : e3); }
    friend bool operator==(const MciTriple&, const MciTriple&) = default;
    std::string to_string() const {
        return "(" + std::to_string(e1) + "," + std::to_string(e2) + "," + std::to_string(e3) + ")";
    }
};

struct BcSets {
    std::vector<std::size_t> b, c, bbar;
};

inline BcSets bc_sets(const GorensteinBetti& beta) {
    const auto d = beta.gens().values();
    const std::size_t n = beta.n();
    const Degree theta = beta.theta();
    auto at = [&](std::size_t i) { return d[i - 1]; };
    BcSets s;
    for (std::size_t i = 3; i <= n + 1; ++i)
        if (theta <= at(i) + at(2 * n + 4 - i)) s.b.push_back(i);
    for (std::size_t i = 4; i <= n + 2; ++i)
        if (theta <= at(i) + at(2 * n + 5 - i)) s.c.push_back(i);
    for (std::size_t i = 3; i <= 2 * n + 1; ++i)
        if (theta <= at(i) + at(2 * n + 4 - i)) s.bbar.push_back(i);
    return s;
}

// Componentwise-minimal type of a regular sequence inside an ideal with Betti sequence β.
inline MciTriple mci(const GorensteinBetti& beta) {
    const auto d = beta.gens().values();
    const std::size_t n = beta.n();
    auto at = [&](std::size_t i) { return d[i - 1]; };
    const BcSets s = bc_sets(beta);
    if (!s.b.empty()) return {at(1), at(s.b.back()), at(2 * n + 4 - s.b.front())};
    if (!s.c.empty()) return {at(1), at(2), at(s.c.back())};
    return {at(1), at(2), at(3)};
}

struct HilbertFn {
    std::vector<Degree> values;  // H(0), H(1), ... up to the last nonzero value
    int nvars = 3;

    Degree operator()(Degree t) const {
        if (t < 0 || t >= static_cast<Degree>(values.size())) return 0;
        return values[static_cast<std::size_t>(t)];
    }
    Degree length() const {
        Degree s = 0;
        for (Degree v : values) s += v;
        return s;
    }
    // Smallest t with H(t) below the full polynomial ring's dimension.
    std::optional<Degree> initial_degree() const;

    friend bool operator==(const HilbertFn&, const HilbertFn&) = default;
};

namespace detail {

// C(a + k, k) for the dimension of degree-a forms in k+1 variables; 0 when a < 0.
inline Degree forms_dim(Degree a, int nvars) {
    if (a < 0) return 0;
    Degree r = 1;
    for (int j = 1; j < nvars; ++j) r = r * (a + j) / j;
    return r;
}

}  // namespace detail

inline std::optional<Degree> HilbertFn::initial_degree() const {
    for (Degree t = 0; t < static_cast<Degree>(values.size()) + 1; ++t)
        if ((*this)(t) < detail::forms_dim(t, nvars)) return t;
    return std::nullopt;
}

// H(t) = Σ_i (-1)^i Σ_{h ∈ M_i} dim R_{t-h}, with M_0 = {0} implied.
inline HilbertFn hilbert_from_resolution(const std::vector<IntMultiset>& modules, int nvars = 3) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    Degree top = 0;
    for (const auto& m : modules)
        if (!m.empty()) top = std::max(top, m.max());
    HilbertFn h;
    h.nvars = nvars;
    for (Degree t = 0; t <= top; ++t) {
        Degree v = detail::forms_dim(t, nvars);
        int sign = -1;
        for (const auto& m : modules) {
            for (const auto& e : m.entries()) v += sign * e.count * detail::forms_dim(t - e.value, nvars);
            sign = -sign;
        }
        h.values.push_back(v);
    }
    while (!h.values.empty() && h.values.back() == 0) h.values.pop_back();
    return h;
}

inline HilbertFn hilbert_function(const GorensteinBetti& beta) {
    return hilbert_from_resolution({beta.gens(), beta.syzygies(), IntMultiset{beta.theta()}}, 3);
}

// -Δ²H(d), the largest number of degree-d minimal generators compatible with H.
// Raw value; may be negative.
inline Degree mng(const HilbertFn& h, Degree d) {
    auto init = h.initial_degree();
    if (!init || d <= *init) throw std::domain_error("mng undefined at initial degree");
    return -(h(d) - 2 * h(d - 1) + h(d - 2));
}

// Cancels asymmetric excess repetitions between generators and first syzygies
// of a (possibly non-minimal) Gorenstein resolution with last syzygy degree θ:
// while μ_{A∩B}(s) > μ_{A∩B}(θ-s), the excess copies of s leave both A and B.
inline std::pair<IntMultiset, IntMultiset> cancel_duals(IntMultiset m0, IntMultiset m1, Degree theta) {
    if (m0.card() != m1.card())
        throw std::invalid_argument("generator and syzygy counts differ (" + std::to_string(m0.card()) + " vs " +
                                    std::to_string(m1.card()) + ")");
    for (;;) {
        const IntMultiset common = intersect(m0, m1);
        std::vector<IntMultiset::Entry> excess;
        for (const auto& e : common.entries()) {
            const Degree extra = e.count - common.multiplicity(theta - e.value);
            if (extra > 0) excess.push_back({e.value, extra});
        }
        if (excess.empty()) break;
        const IntMultiset drop = IntMultiset::from_counts(std::move(excess));
        m0 = diff(m0, drop);
        m1 = diff(m1, drop);
    }
    return {std::move(m0), std::move(m1)};
}

// Clause-by-clause evaluation of the B̄/C multiplicity statements against the
// Hilbert function of β. Returns human-readable violations (empty when all hold).
inline std::vector<std::string> bc_diagnostics(const GorensteinBetti& beta) {
    std::vector<std::string> out;
    const auto d = beta.gens().values();
    const std::size_t n = beta.n();
    const BcSets s = bc_sets(beta);
    const HilbertFn h = hilbert_function(beta);
    auto at = [&](std::size_t i) { return d[i - 1]; };
    auto in = [](const std::vector<std::size_t>& v, std::size_t i) {
        return std::find(v.begin(), v.end(), i) != v.end();
    };
    auto mu = [&](std::size_t i) { return beta.gens().multiplicity(at(i)); };
    auto neg_d2 = [&](std::size_t i) {
        Degree t = at(i);
        return -(h(t) - 2 * h(t - 1) + h(t - 2));
    };
    auto first_index = [&](std::size_t i) {
        std::size_t k = i;
        while (k > 1 && at(k - 1) == at(i)) --k;
        return k;
    };
    const std::string tag = " for " + beta.gens().to_string();

    for (std::size_t i : s.bbar)
        if (mu(i) != neg_d2(i)) out.push_back("(a) fails at i=" + std::to_string(i) + tag);
    for (std::size_t i : s.c)
        if (!in(s.bbar, i) && !in(s.bbar, i - 1) && mu(i) != neg_d2(i) - 1)
            out.push_back("(b) fails at i=" + std::to_string(i) + tag);
    for (std::size_t a = 0; a < s.bbar.size(); ++a)
        for (std::size_t b = a + 1; b < s.bbar.size(); ++b)
            if (at(s.bbar[a]) == at(s.bbar[b]))
                out.push_back("(c) fails at i=" + std::to_string(s.bbar[a]) + ", j=" + std::to_string(s.bbar[b]) + tag);
    for (std::size_t i = 1; i <= 2 * n + 1; ++i) {
        if (at(i) <= at(1)) continue;
        const std::size_t k = first_index(i);
        // k = 2 (resp. 3) would need the partner d_{2n+4-k} (resp. d_{2n+5-k}), which lies past
        // the end of D; the clause is only checked where B̄ and C are defined
        if (k >= 3 && mu(i) == neg_d2(i) && !in(s.bbar, k)) out.push_back("(d) fails at i=" + std::to_string(i) + tag);
        if (k >= 4 && mu(i) == neg_d2(i) - 1 && k <= n + 2 && !in(s.c, k))
            out.push_back("(e) fails at i=" + std::to_string(i) + tag);
    }
    if (s.b.empty())
        for (std::size_t i : s.bbar)
            if (i != n + 2) out.push_back("B empty but " + std::to_string(i) + " in Bbar" + tag);
    return out;
}

}  // namespace bettiforge
