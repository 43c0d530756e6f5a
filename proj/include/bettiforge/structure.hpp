#pragma once

// Polynomial-level resolution of an almost complete intersection built from an
// odd alternating matrix with a chosen 3-row block G:
//
//     0 -> F^∨ --d3--> G ⊕ F --d2--> G ⊕ R --d1--> R
//
// After reordering so the G rows come first, φ = [[α, -λᵗ], [λ, β]] and
//   d3 = [[λᵗ], [-β]],   d2 = [[p·I, λᵗ·β̄], [-pfψᵗ, -σᵗ]],   d1 = [pfψ | p]
// where p = pf β, β̄ its pfaffian adjoint, and (pfψ, σ) the submaximal pfaffian
// vector of φ split along G/F. Exactness is not checked here.

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bettiforge/aci.hpp"
#include "bettiforge/exact.hpp"
#include "bettiforge/multiset.hpp"
#include "bettiforge/pfaffian.hpp"

namespace bettiforge {

struct GradedFreeModule {
    std::vector<Degree> twists;  // basis order matters for the maps

    std::size_t rank() const noexcept { return twists.size(); }
    IntMultiset degrees() const { return IntMultiset(twists); }
};

// modules[0] is the target of maps[0]; maps[i] : modules[i+1] -> modules[i]
// has rank(modules[i]) rows and rank(modules[i+1]) columns.
struct GradedComplex {
    std::vector<GradedFreeModule> modules;
    std::vector<PolyMatrix> maps;
};

class grading_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An odd alternating matrix with generator degrees h_i (the degrees of its
// submaximal pfaffians) and a 3-element G block (0-based rows).
struct AlternatingPresentation {
    AlternatingMatrix matrix;
    std::array<std::size_t, 3> g_indices{0, 1, 2};
    std::vector<Degree> degrees;

    // θ = 2Σh / (m - 1); entry (i, j) must sit in degree θ - h_i - h_j.
    Degree theta() const {
        const auto m = static_cast<Degree>(matrix.size());
        Degree s = 0;
        for (Degree h : degrees) s += h;
        if (m < 3 || (2 * s) % (m - 1) != 0)
            throw grading_error("degrees do not determine an integral theta");
        return 2 * s / (m - 1);
    }

    // G rows followed by the remaining rows in increasing order.
    std::vector<std::size_t> order() const {
        std::vector<std::size_t> out(g_indices.begin(), g_indices.end());
        for (std::size_t i = 0; i < matrix.size(); ++i)
            if (std::find(g_indices.begin(), g_indices.end(), i) == g_indices.end()) out.push_back(i);
        return out;
    }

    // Throws grading_error naming the first entry of the wrong degree.
    void validate() const {
        const std::size_t m = matrix.size();
        if (m < 5 || m % 2 == 0) throw dimension_error("presentation needs odd size >= 5, got " + std::to_string(m));
        if (degrees.size() != m)
            throw grading_error("expected " + std::to_string(m) + " degrees, got " + std::to_string(degrees.size()));
        for (std::size_t k = 0; k < 3; ++k) {
            if (g_indices[k] >= m) throw std::out_of_range("G row " + std::to_string(g_indices[k] + 1) + " out of range");
            for (std::size_t l = 0; l < k; ++l)
                if (g_indices[k] == g_indices[l]) throw std::invalid_argument("G rows must be distinct");
        }
        const Degree t = theta();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const Degree want = t - degrees[i] - degrees[j];
                const Poly& e = matrix(i, j);
                if (want < 0 ? !e.is_zero() : !is_homogeneous(e).admits(want))
                    throw grading_error("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") = " + e.to_string() + " is not of degree " + std::to_string(want));
            }
    }
};

// The blocks of the reordered matrix, shared by the complex and the lifting check.
struct PresentationBlocks {
    AlternatingMatrix phi;    // reordered
    AlternatingMatrix alpha;  // 3×3
    PolyMatrix lambda;        // (m-3)×3
    AlternatingMatrix beta;   // (m-3)×(m-3)
    std::vector<Poly> pf_psi, sigma;
    Poly p;
    AlternatingMatrix beta_bar;
    std::vector<Degree> h_g, h_f;
    Degree theta = 0;
};

inline PresentationBlocks split_presentation(const AlternatingPresentation& pres) {
    pres.validate();
    const auto ord = pres.order();
    const std::size_t m = ord.size();
    PresentationBlocks b;
    b.theta = pres.theta();
    b.phi = AlternatingMatrix(pres.matrix.matrix().submatrix(ord, ord));
    std::vector<std::size_t> g{0, 1, 2}, f;
    for (std::size_t i = 3; i < m; ++i) f.push_back(i);
    b.alpha = AlternatingMatrix(b.phi.matrix().submatrix(g, g));
    b.lambda = b.phi.matrix().submatrix(f, g);
    b.beta = AlternatingMatrix(b.phi.matrix().submatrix(f, f));
    const auto pv = submaximal_pfaffians(b.phi);
    b.pf_psi.assign(pv.begin(), pv.begin() + 3);
    b.sigma.assign(pv.begin() + 3, pv.end());
    b.p = pfaffian(b.beta);
    b.beta_bar = pfaffian_adjoint(b.beta);
    for (std::size_t k = 0; k < m; ++k) (k < 3 ? b.h_g : b.h_f).push_back(pres.degrees[ord[k]]);
    return b;
}

inline GradedComplex build_aci_complex(const AlternatingPresentation& pres) {
    const PresentationBlocks b = split_presentation(pres);
    const std::size_t m = pres.matrix.size(), nf = m - 3;
    Degree theta_z = 0;
    for (Degree h : b.h_g) theta_z += h;
    const Degree d0 = theta_z - b.theta;

    GradedComplex c;
    c.modules.resize(4);
    c.modules[0].twists = {0};
    c.modules[1].twists = {b.h_g[0], b.h_g[1], b.h_g[2], d0};
    for (Degree h : b.h_g) c.modules[2].twists.push_back(h + d0);
    for (Degree h : b.h_f) c.modules[2].twists.push_back(h + d0);
    for (Degree h : b.h_f) c.modules[3].twists.push_back(theta_z - h);

    PolyMatrix d1(1, 4);
    for (std::size_t j = 0; j < 3; ++j) d1(0, j) = b.pf_psi[j];
    d1(0, 3) = b.p;

    const PolyMatrix lt = b.lambda.transpose();
    const PolyMatrix lt_bbar = lt * b.beta_bar.matrix();
    PolyMatrix d2(4, m);
    for (std::size_t i = 0; i < 3; ++i) {
        d2(i, i) = b.p;
        for (std::size_t k = 0; k < nf; ++k) d2(i, 3 + k) = lt_bbar(i, k);
        d2(3, i) = -b.pf_psi[i];
    }
    for (std::size_t k = 0; k < nf; ++k) d2(3, 3 + k) = -b.sigma[k];

    PolyMatrix d3(m, nf);
    for (std::size_t k = 0; k < nf; ++k) {
        for (std::size_t i = 0; i < 3; ++i) d3(i, k) = lt(i, k);
        for (std::size_t l = 0; l < nf; ++l) d3(3 + l, k) = -b.beta(l, k);
    }
    c.maps = {std::move(d1), std::move(d2), std::move(d3)};
    return c;
}

// α·p + λᵗ·β̄·λ - ψ, where ψ is the 3×3 alternating matrix with submaximal
// pfaffians pfψ. Zero for every presentation.
inline PolyMatrix lifting_residual(const AlternatingPresentation& pres) {
    const PresentationBlocks b = split_presentation(pres);
    const auto& q = b.pf_psi;
    const PolyMatrix psi{{Poly(), q[2], -q[1]}, {-q[2], Poly(), q[0]}, {q[1], -q[0], Poly()}};
    const PolyMatrix lt = b.lambda.transpose();
    return b.alpha.matrix().scaled(b.p) + lt * b.beta_bar.matrix() * b.lambda - psi;
}

struct EntryWitness {
    std::size_t map = 0;  // index into GradedComplex::maps
    std::size_t row = 0, col = 0;
    std::string detail;
};

struct ComplexReport {
    struct PairCheck {
        std::size_t first = 0;  // maps[first] ∘ maps[first + 1]
        bool zero = true;
        std::optional<EntryWitness> witness;
    };
    struct MapCheck {
        std::size_t map = 0;
        bool homogeneous = true;
        std::optional<EntryWitness> witness;
    };

    std::vector<PairCheck> compositions;
    std::vector<MapCheck> homogeneity;
    bool shapes_ok = true;
    std::string shape_error;
    Degree rank_alternating_sum = 0;  // Σ (-1)^i rank, expected 0

    bool ok() const {
        if (!shapes_ok || rank_alternating_sum != 0) return false;
        for (const auto& c : compositions)
            if (!c.zero) return false;
        for (const auto& h : homogeneity)
            if (!h.homogeneous) return false;
        return true;
    }
};

inline ComplexReport verify_complex(const GradedComplex& c) {
    ComplexReport r;
    Degree sign = 1;
    for (const auto& mod : c.modules) {
        r.rank_alternating_sum += sign * static_cast<Degree>(mod.rank());
        sign = -sign;
    }
    if (c.maps.size() + 1 != c.modules.size()) {
        r.shapes_ok = false;
        r.shape_error = "expected " + std::to_string(c.modules.size() - 1) + " maps, got " + std::to_string(c.maps.size());
        return r;
    }
    for (std::size_t k = 0; k < c.maps.size(); ++k)
        if (c.maps[k].rows() != c.modules[k].rank() || c.maps[k].cols() != c.modules[k + 1].rank()) {
            r.shapes_ok = false;
            r.shape_error = "map " + std::to_string(k + 1) + " has shape " + c.maps[k].shape() + ", expected " +
                            std::to_string(c.modules[k].rank()) + "x" + std::to_string(c.modules[k + 1].rank());
            return r;
        }

    for (std::size_t k = 0; k + 1 < c.maps.size(); ++k) {
        ComplexReport::PairCheck pc{k, true, std::nullopt};
        const PolyMatrix prod = c.maps[k] * c.maps[k + 1];
        for (std::size_t i = 0; i < prod.rows() && pc.zero; ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                if (!prod(i, j).is_zero()) {
                    pc.zero = false;
                    pc.witness = EntryWitness{k, i, j, "composition entry is " + prod(i, j).to_string()};
                    break;
                }
        r.compositions.push_back(std::move(pc));
    }

    for (std::size_t k = 0; k < c.maps.size(); ++k) {
        ComplexReport::MapCheck mc{k, true, std::nullopt};
        const PolyMatrix& a = c.maps[k];
        for (std::size_t i = 0; i < a.rows() && mc.homogeneous; ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const Degree want = c.modules[k + 1].twists[j] - c.modules[k].twists[i];
                const Poly& e = a(i, j);
                const bool good = want < 0 ? e.is_zero() : is_homogeneous(e).admits(want);
                if (!good) {
                    mc.homogeneous = false;
                    mc.witness = EntryWitness{k, i, j, e.to_string() + " is not of degree " + std::to_string(want)};
                    break;
                }
            }
        r.homogeneity.push_back(std::move(mc));
    }
    return r;
}

// (p_a, p_b, p_c, p_abc) with p_abc the pfaffian of M minus rows/cols a, b, c (0-based).
inline std::array<Poly, 4> corollary_gen_generators(const AlternatingMatrix& m, const std::array<std::size_t, 3>& abc) {
    if (m.size() < 5 || m.size() % 2 == 0) throw dimension_error("need odd size >= 5");
    for (std::size_t k = 0; k < 3; ++k) {
        if (abc[k] >= m.size()) throw std::out_of_range("index " + std::to_string(abc[k] + 1) + " out of range");
        for (std::size_t l = 0; l < k; ++l)
            if (abc[k] == abc[l]) throw std::invalid_argument("indices must be distinct");
    }
    const auto p = submaximal_pfaffians(m);
    return {p[abc[0]], p[abc[1]], p[abc[2]], pfaffian(delete_rows_cols(m, {abc[0], abc[1], abc[2]}))};
}

// ---------------------------------------------------------------------------
// Seeded generic forms.

inline std::shared_ptr<const VarList> default_vars(std::size_t n = 3) {
    auto v = std::make_shared<VarList>();
    for (std::size_t i = 1; i <= n; ++i) v->push_back("x" + std::to_string(i));
    return v;
}

namespace detail {

inline void monomials_of_degree(std::size_t nvars, Degree deg, std::vector<Exponents>& out) {
    Exponents e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t k, Degree left) -> void {
        if (k + 1 == nvars) {
            e[k] = static_cast<std::uint32_t>(left);
            out.push_back(e);
            return;
        }
        for (Degree a = left; a >= 0; --a) {
            e[k] = static_cast<std::uint32_t>(a);
            self(self, k + 1, left - a);
        }
    };
    if (nvars > 0 && deg >= 0) rec(rec, 0, deg);
}

}  // namespace detail

// A homogeneous form of degree `deg` with integer coefficients in [-3, 3];
// up to `max_terms` monomials (0 = all).
inline Poly random_form(std::mt19937_64& rng, const std::shared_ptr<const VarList>& vars, Degree deg,
                        std::size_t max_terms = 0) {
    if (deg < 0) return Poly();
    std::vector<Exponents> mons;
    detail::monomials_of_degree(vars->size(), deg, mons);
    std::shuffle(mons.begin(), mons.end(), rng);
    if (max_terms && mons.size() > max_terms) mons.resize(max_terms);
    std::uniform_int_distribution<int> coef(-3, 3);
    Poly out = Poly::monomial(vars, Exponents(vars->size(), 0), Rational(0));
    for (auto& e : mons) {
        int c = coef(rng);
        if (c == 0) c = 1;
        out += Poly::monomial(vars, std::move(e), Rational(c));
    }
    return out;
}

// Alternating matrix whose (i, j) entry is a random form of degree θ - h_i - h_j
// (zero where that is negative), with θ = 2Σh/(m-1).
inline AlternatingPresentation generic_presentation(const std::vector<Degree>& degrees, std::uint64_t seed,
                                                    std::size_t nvars = 3, std::size_t max_terms = 0) {
    AlternatingPresentation pres;
    pres.degrees = degrees;
    pres.matrix = AlternatingMatrix::from_upper(degrees.size(), [](std::size_t, std::size_t) { return Poly(); });
    const Degree theta = pres.theta();
    std::mt19937_64 rng(seed);
    const auto vars = default_vars(nvars);
    pres.matrix = AlternatingMatrix::from_upper(degrees.size(), [&](std::size_t i, std::size_t j) {
        return random_form(rng, vars, theta - degrees[i] - degrees[j], max_terms);
    });
    return pres;
}

// Degree bookkeeping of a presentation in the form link_betti expects:
// generator degrees, socle degree, and the G degrees as the regular-sequence type.
inline LinkResult link_betti_for(const AlternatingPresentation& pres, const IntMultiset& extra = {}) {
    const IntMultiset all(pres.degrees);
    const IntMultiset partners = affine(pres.theta(), Sign::minus, extra);
    const IntMultiset gens = diff(diff(all, extra), partners);
    return link_betti(gens, pres.theta(),
                      {pres.degrees[pres.g_indices[0]], pres.degrees[pres.g_indices[1]], pres.degrees[pres.g_indices[2]]},
                      extra);
}

// ---------------------------------------------------------------------------
// Five general points linked in a complete intersection of type (2,2,8).

struct Example228Report {
    LinkResult link;
    bool resolution_matches = false;
    bool minimal_drops_single_15 = false;
    bool invariants_match = false;  // d0 = 7, d = 19
    bool minimal_admissible = false;
    // Polynomial level: the 5×5 linear matrix bordered by degree-6 forms.
    std::optional<ComplexReport> complex_report;
    bool complex_degrees_match = false;

    bool ok() const {
        return resolution_matches && minimal_drops_single_15 && invariants_match && minimal_admissible &&
               (!complex_report || (complex_report->ok() && complex_degrees_match));
    }
};

inline Example228Report reproduce_example_228(std::optional<std::uint64_t> polynomial_seed = std::nullopt) {
    Example228Report r;
    r.link = link_betti(IntMultiset{2, 2, 2, 2, 2}, 5, {2, 2, 8}, IntMultiset{8});
    r.resolution_matches = r.link.resolution[0] == IntMultiset{2, 2, 7, 8} &&
                           r.link.resolution[1] == IntMultiset{4, 9, 9, 9, 9, 9, 15} &&
                           r.link.resolution[2] == IntMultiset{10, 10, 10, 15};
    r.minimal_drops_single_15 = r.link.ghosts == IntMultiset{15} && r.link.minimal.E == IntMultiset{4, 9, 9, 9, 9, 9} &&
                                r.link.minimal.F == IntMultiset{10, 10, 10};
    r.invariants_match = r.link.d0 == 7 && r.link.d == 19;
    r.minimal_admissible = check_betti(r.link.minimal).admissible;

    if (polynomial_seed) {
        AlternatingPresentation base = generic_presentation({2, 2, 2, 2, 2}, *polynomial_seed);
        std::mt19937_64 rng(*polynomial_seed ^ 0x9e3779b97f4a7c15ULL);
        const auto vars = default_vars();
        std::vector<Poly> a;
        for (int i = 0; i < 5; ++i) a.push_back(random_form(rng, vars, 6, 4));
        AlternatingPresentation pres;
        pres.matrix = augment(base.matrix, a);
        pres.degrees = {2, 2, 2, 2, 2, 8, -3};
        pres.g_indices = {0, 1, 5};
        const GradedComplex c = build_aci_complex(pres);
        r.complex_report = verify_complex(c);
        r.complex_degrees_match = c.modules[1].degrees() == r.link.resolution[0] &&
                                  c.modules[2].degrees() == r.link.resolution[1] &&
                                  c.modules[3].degrees() == r.link.resolution[2];
    }
    return r;
}

}  // namespace bettiforge
