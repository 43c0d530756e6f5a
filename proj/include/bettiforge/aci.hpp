#pragma once

// Graded Betti sequences (D, E, F) of Artinian codimension-3 almost complete
// intersections: the aci-type decomposition, the admissibility decision
// procedure, linkage bookkeeping at the multiset level, and an exhaustive
// enumerator within degree bounds.

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bettiforge/gorenstein.hpp"
#include "bettiforge/multiset.hpp"

namespace bettiforge {

// Malformed (D, E, F): wrong cardinalities or non-positive degrees.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct AciBetti {
    IntMultiset D, E, F;

    // Throws input_error unless |D| = 4, |E| = |F| + 3, |F| >= 2 and all degrees are positive.
    void validate() const {
        if (D.card() != 4) throw input_error("|D| must be 4, got " + std::to_string(D.card()));
        if (F.card() < 2) throw input_error("|F| must be at least 2, got " + std::to_string(F.card()));
        if (E.card() != F.card() + 3)
            throw input_error("|E| must equal |F| + 3, got |E| = " + std::to_string(E.card()) +
                              ", |F| = " + std::to_string(F.card()));
        for (const IntMultiset* m : {&D, &E, &F})
            if (!m->empty() && m->min() < 1) throw input_error("degrees must be positive");
    }

    std::string to_string() const {
        return "D=" + D.to_string() + " E=" + E.to_string() + " F=" + F.to_string();
    }

    friend bool operator==(const AciBetti&, const AciBetti&) = default;
    // Canonical order: (‖D‖, D, F, E).
    friend bool operator<(const AciBetti& a, const AciBetti& b) {
        if (a.D.norm() != b.D.norm()) return a.D.norm() < b.D.norm();
        if (!(a.D == b.D)) return a.D < b.D;
        if (!(a.F == b.F)) return a.F < b.F;
        return a.E < b.E;
    }
};

struct AciDecomposition {
    Degree d = 0;        // ‖D‖
    Degree d0 = 0;       // min D
    IntMultiset dstar;   // D \ {d0}
    Degree theta_z = 0;  // ‖D*‖
    Degree theta_g = 0;  // θ_Z - d0
    IntMultiset ehat;    // E \ (d - F)
    IntMultiset s;       // D* ∩ (θ_Z - Ê)
    IntMultiset dbar;    // D* \ S
    IntMultiset t;       // {θ_G/2} or empty
};

struct DecomposeResult {
    std::optional<AciDecomposition> decomposition;
    int failed_clause = 0;  // 2: d - F ⊄ E, 3: Ê mismatch
    std::string reason;

    explicit operator bool() const { return decomposition.has_value(); }
};

inline DecomposeResult decompose(const AciBetti& b) {
    b.validate();
    DecomposeResult r;
    AciDecomposition x;
    x.d = b.D.norm();
    const IntMultiset dual_f = affine(x.d, Sign::minus, b.F);
    if (!is_submultiset(dual_f, b.E)) {
        r.failed_clause = 2;
        r.reason = "d - F = " + dual_f.to_string() + " is not contained in E (d = " + std::to_string(x.d) + ")";
        return r;
    }
    x.ehat = diff(b.E, dual_f);
    x.d0 = b.D.min();
    x.dstar = diff(b.D, IntMultiset{x.d0});
    x.theta_z = x.dstar.norm();
    x.theta_g = x.theta_z - x.d0;
    x.s = intersect(x.dstar, affine(x.theta_z, Sign::minus, x.ehat));
    x.dbar = diff(x.dstar, x.s);
    const IntMultiset expected =
        sum(affine(x.d0, Sign::plus, x.dbar), affine(x.theta_z, Sign::minus, x.s));
    if (!(x.ehat == expected)) {
        r.failed_clause = 3;
        r.reason = "E-hat = " + x.ehat.to_string() + " differs from (d0 + Dbar) + (thetaZ - S) = " +
                   expected.to_string();
        return r;
    }
    if (x.theta_g % 2 == 0 && x.s.contains(x.theta_g / 2) && (b.F.card() + x.dbar.card()) % 2 == 0)
        x.t = IntMultiset{x.theta_g / 2};
    r.decomposition = std::move(x);
    return r;
}

struct InducedGorenstein {
    enum class Failure { none, parity, theta_mismatch, gaeta_diesel };

    IntMultiset g0;  // (θ_Z - F) ⊔ D̄ ⊔ T
    IntMultiset g1;  // (F - d0) ⊔ (θ_G - D̄) ⊔ T
    Degree theta_g = 0;
    std::optional<GorensteinBetti> beta;
    Failure failure = Failure::none;
    std::string reason;
};

inline InducedGorenstein induced_gorenstein(const AciDecomposition& dec, const IntMultiset& f) {
    InducedGorenstein g;
    g.theta_g = dec.theta_g;
    g.g0 = sum(sum(affine(dec.theta_z, Sign::minus, f), dec.dbar), dec.t);
    g.g1 = sum(sum(affine(-dec.d0, Sign::plus, f), affine(dec.theta_g, Sign::minus, dec.dbar)), dec.t);
    if (g.g0.card() % 2 == 0) {
        g.failure = InducedGorenstein::Failure::parity;
        g.reason = "G0 = " + g.g0.to_string() + " has an even number of generators";
        return g;
    }
    GorensteinVerdict v = check_gorenstein_betti(g.g0);
    if (v.theta && *v.theta != dec.theta_g) {
        g.failure = InducedGorenstein::Failure::theta_mismatch;
        g.reason = "G0 = " + g.g0.to_string() + " has socle degree " + std::to_string(*v.theta) +
                   ", expected thetaG = " + std::to_string(dec.theta_g);
        return g;
    }
    if (!v.admissible) {
        g.failure = InducedGorenstein::Failure::gaeta_diesel;
        g.reason = "G0 = " + g.g0.to_string() + " is not a Gorenstein Betti sequence: " + v.reason;
        return g;
    }
    g.beta.emplace(g.g0, dec.theta_g);
    return g;
}

struct AciVerdict {
    bool admissible = false;
    std::optional<int> stage;  // 1, 2 or 3 when rejected
    std::optional<AciDecomposition> decomposition;
    std::optional<InducedGorenstein> gorenstein;
    std::optional<MciTriple> mci;
    std::string witness;
};

namespace detail {

inline std::string triple_string(const std::vector<Degree>& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

}  // namespace detail

// Decides whether (D, E, F) is the Betti sequence of an Artinian codimension-3
// almost complete intersection. Conditions are checked in order; the verdict
// records the first failing stage and a witness. Throws input_error on
// malformed input.
inline AciVerdict check_betti(const AciBetti& b) {
    AciVerdict v;
    DecomposeResult dr = decompose(b);
    if (!dr) {
        v.stage = 1;
        v.witness = dr.reason;
        return v;
    }
    const AciDecomposition& dec = *dr.decomposition;
    v.decomposition = dec;

    InducedGorenstein ig = induced_gorenstein(dec, b.F);
    v.gorenstein = ig;
    if (!ig.beta) {
        v.stage = 2;
        v.witness = ig.reason;
        return v;
    }

    const MciTriple e = mci(*ig.beta);
    v.mci = e;
    const std::vector<Degree> d = dec.dstar.values();
    for (std::size_t i = 0; i < 3; ++i)
        if (d[i] < e[i]) {
            v.stage = 3;
            v.witness = detail::triple_string(d) + " ≱ " + e.to_string();
            return v;
        }
    const IntMultiset strict = diff(dec.s, dec.t);
    for (const auto& run : strict.entries()) {
        const auto first = static_cast<std::size_t>(std::find(d.begin(), d.end(), run.value) - d.begin()) + 1;
        const std::size_t i = first + static_cast<std::size_t>(run.count) - 1;
        // i <= 3 always: S \ T ⊆ D*
        if (!(d[i - 1] > e[i - 1])) {
            v.stage = 3;
            const std::string is = std::to_string(i);
            v.witness = "s=" + std::to_string(run.value) + ", i=" + is + ", d_" + is + "=" + std::to_string(d[i - 1]) +
                        " not > e_" + is + "=" + std::to_string(e[i - 1]);
            return v;
        }
    }
    v.admissible = true;
    return v;
}

// ---------------------------------------------------------------------------
// Linkage bookkeeping.

struct LinkResult {
    Degree d0 = 0, d = 0, theta_z = 0;
    IntMultiset presentation;  // gens ⊔ extra ⊔ (θ - extra)
    IntMultiset g_slots;       // the chosen regular-sequence degrees
    IntMultiset f_slots;       // presentation slots not used by G
    IntMultiset k;             // f_slots + d0
    // Levels 1..3 of the mapping-cone resolution: G ⊔ {d0}, G(-d0) ⊔ K, d - K.
    std::array<IntMultiset, 3> resolution;
    // Twists cancelled between levels 2 and 3 (unit entries of the added pfaffian pairs).
    IntMultiset ghosts;
    AciBetti minimal;
};

class linkage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Degree bookkeeping for linking a Gorenstein ideal (generator degrees
// `gor_gens`, socle degree θ) through a complete intersection of type
// `ci_type`. `extra_gens` lists the non-minimal generators added to the
// pfaffian presentation, each with its null partner slot θ - e. Regular-sequence
// degrees are matched against the added slots first.
inline LinkResult link_betti(const IntMultiset& gor_gens, Degree gor_theta, const std::array<Degree, 3>& ci_type,
                             const IntMultiset& extra_gens) {
    if (gor_gens.card() % 2 == 0 || 2 * gor_gens.norm() != gor_theta * (gor_gens.card() - 1))
        throw linkage_error("generator degrees " + gor_gens.to_string() + " do not have socle degree " +
                            std::to_string(gor_theta));
    LinkResult r;
    const IntMultiset partners = affine(gor_theta, Sign::minus, extra_gens);
    r.presentation = sum(sum(gor_gens, extra_gens), partners);
    r.g_slots = IntMultiset{ci_type[0], ci_type[1], ci_type[2]};
    const IntMultiset from_extra = intersect(r.g_slots, extra_gens);
    const IntMultiset from_gens = diff(r.g_slots, from_extra);
    if (!is_submultiset(from_gens, gor_gens))
        throw linkage_error("complete intersection type " + r.g_slots.to_string() +
                            " does not fit the available generator slots");
    const IntMultiset unused_extra = diff(extra_gens, from_extra);
    r.f_slots = sum(sum(diff(gor_gens, from_gens), unused_extra), partners);

    r.theta_z = r.g_slots.norm();
    r.d0 = r.theta_z - gor_theta;
    if (r.d0 <= 0)
        throw linkage_error("degenerate linkage: d0 = thetaZ - thetaG = " + std::to_string(r.d0) + " <= 0");
    r.d = r.d0 + r.theta_z;
    r.k = affine(r.d0, Sign::plus, r.f_slots);

    r.resolution[0] = sum(r.g_slots, IntMultiset{r.d0});
    r.resolution[1] = sum(affine(r.d0, Sign::plus, r.g_slots), r.k);
    r.resolution[2] = affine(r.d, Sign::minus, r.k);

    // An added pair (e, θ-e) carries a unit entry. With e in G it cancels d0+e
    // once; with both slots in F it cancels d0+e and θ_Z-e.
    r.ghosts = sum(sum(affine(r.d0, Sign::plus, from_extra), affine(r.d0, Sign::plus, unused_extra)),
                   affine(r.theta_z, Sign::minus, unused_extra));
    r.minimal.D = r.resolution[0];
    r.minimal.E = diff(r.resolution[1], r.ghosts);
    r.minimal.F = diff(r.resolution[2], r.ghosts);
    return r;
}

// ---------------------------------------------------------------------------

// Cardinalities of S̄ ⊆ S compatible with duality about θ_G: 0 always; 1 when
// θ_G/2 ∈ S; 2 when some {α, θ_G-α} ⊆ S; 3 when both fit simultaneously.
inline std::vector<int> sbar_cases(const IntMultiset& s, Degree theta_g) {
    std::vector<int> out{0};
    const bool half = theta_g % 2 == 0 && s.contains(theta_g / 2);
    auto has_pair = [&](const IntMultiset& pool) {
        for (const auto& e : pool.entries()) {
            const Degree partner = theta_g - e.value;
            if (partner == e.value ? e.count >= 2 : pool.contains(partner)) return true;
        }
        return false;
    };
    if (half) out.push_back(1);
    if (has_pair(s)) out.push_back(2);
    if (half && has_pair(diff(s, IntMultiset{theta_g / 2}))) out.push_back(3);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration.

struct EnumerationBounds {
    Degree max_degree = 1;
    Degree max_f = 2;
};

namespace detail {

// All multisets of `size` values drawn from [lo, hi], in lexicographic order.
inline void for_each_multiset(Degree lo, Degree hi, std::size_t size,
                              const std::function<void(const std::vector<Degree>&)>& fn) {
    std::vector<Degree> cur;
    auto rec = [&](auto&& self, Degree from) -> void {
        if (cur.size() == size) {
            fn(cur);
            return;
        }
        for (Degree v = from; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    if (lo <= hi || size == 0) rec(rec, lo);
}

// Distinct submultisets of m.
inline std::vector<IntMultiset> submultisets(const IntMultiset& m) {
    std::vector<IntMultiset> out{IntMultiset{}};
    for (const auto& e : m.entries()) {
        std::vector<IntMultiset> next;
        for (const auto& base : out)
            for (Degree k = 0; k <= e.count; ++k) next.push_back(sum(base, IntMultiset::from_counts({{e.value, k}})));
        out = std::move(next);
    }
    return out;
}

// Admissible sequences with a fixed D, sorted by (F, E).
inline std::vector<AciBetti> enumerate_for_d(const IntMultiset& dset, const EnumerationBounds& bounds) {
    std::set<AciBetti> found;
    const Degree d = dset.norm();
    const Degree d0 = dset.min();
    const IntMultiset dstar = diff(dset, IntMultiset{d0});
    const Degree theta_z = dstar.norm();
    const auto choices = submultisets(dstar);
    for (Degree p = 2; p <= bounds.max_f; ++p)
        for_each_multiset(std::max<Degree>(1, d - bounds.max_degree), std::min(bounds.max_degree, d - 1),
                          static_cast<std::size_t>(p), [&](const std::vector<Degree>& fv) {
                              const IntMultiset f(fv);
                              const IntMultiset base = affine(d, Sign::minus, f);
                              for (const auto& s : choices) {
                                  IntMultiset e = sum(sum(base, affine(d0, Sign::plus, diff(dstar, s))),
                                                      affine(theta_z, Sign::minus, s));
                                  if (e.min() < 1 || e.max() > bounds.max_degree) continue;
                                  AciBetti cand{dset, std::move(e), f};
                                  if (check_betti(cand).admissible) found.insert(std::move(cand));
                              }
                          });
    return {found.begin(), found.end()};
}

}  // namespace detail

// Streams every admissible (D, E, F) with all degrees in [1, max_degree] and
// 2 <= |F| <= max_f, in canonical order (‖D‖, D, F, E). With jobs > 1 the
// per-D searches run concurrently; output order is unchanged.
inline void enumerate(const EnumerationBounds& bounds, const std::function<void(const AciBetti&)>& sink,
                      unsigned jobs = 1) {
    if (bounds.max_degree < 1 || bounds.max_f < 2) return;
    std::vector<IntMultiset> ds;
    detail::for_each_multiset(1, bounds.max_degree, 4, [&](const std::vector<Degree>& v) { ds.emplace_back(v); });
    std::stable_sort(ds.begin(), ds.end(), [](const IntMultiset& a, const IntMultiset& b) {
        return a.norm() != b.norm() ? a.norm() < b.norm() : a < b;
    });
    jobs = std::max(1u, jobs);
    const std::size_t batch = jobs * 4;
    for (std::size_t start = 0; start < ds.size(); start += batch) {
        const std::size_t stop = std::min(ds.size(), start + batch);
        std::vector<std::vector<AciBetti>> results(stop - start);
        if (jobs == 1) {
            for (std::size_t k = start; k < stop; ++k) results[k - start] = detail::enumerate_for_d(ds[k], bounds);
        } else {
            std::vector<std::future<std::vector<AciBetti>>> tasks;
            for (std::size_t k = start; k < stop; ++k)
                tasks.push_back(std::async(std::launch::async, detail::enumerate_for_d, std::cref(ds[k]),
                                           std::cref(bounds)));
            for (std::size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k].get();
        }
        for (const auto& group : results)
            for (const auto& b : group) sink(b);
    }
}

inline std::vector<AciBetti> enumerate(const EnumerationBounds& bounds, unsigned jobs = 1) {
    std::vector<AciBetti> out;
    enumerate(bounds, [&](const AciBetti& b) { out.push_back(b); }, jobs);
    return out;
}

}  // namespace bettiforge
