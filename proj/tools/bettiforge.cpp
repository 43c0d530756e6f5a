// bettiforge command-line front end.
//
// Exit codes: 0 success / admissible, 1 rejected / check failed, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bettiforge/bettiforge.hpp"

namespace bf = bettiforge;
using bf::Json;

namespace {

constexpr int kOk = 0, kRejected = 1, kBadInput = 2;

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw bf::input_error("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw bf::input_error(std::string("malformed JSON: ") + e.what());
    }
}

bf::IntMultiset to_multiset(const std::vector<bf::Degree>& v) { return bf::IntMultiset(v); }

std::uint64_t resolve_seed(std::uint64_t flag) {
    if (const char* env = std::getenv("BETTIFORGE_SEED"); env && *env) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw bf::input_error(std::string("BETTIFORGE_SEED is not an unsigned integer: ") + env);
        }
    }
    return flag;
}

void explain(const bf::AciBetti& b, const bf::AciVerdict& v, std::ostream& os) {
    os << "D = " << b.D << ", E = " << b.E << ", F = " << b.F << '\n';
    if (v.decomposition) {
        const auto& x = *v.decomposition;
        os << "d = " << x.d << ", d0 = " << x.d0 << ", D* = " << x.dstar << ", thetaZ = " << x.theta_z
           << ", thetaG = " << x.theta_g << '\n';
        os << "Ehat = " << x.ehat << ", S = " << x.s << ", Dbar = " << x.dbar << ", T = " << x.t << '\n';
    }
    if (v.gorenstein) os << "G0 = " << v.gorenstein->g0 << ", G1 = " << v.gorenstein->g1 << '\n';
    if (v.mci) os << "mci = " << v.mci->to_string() << '\n';
    if (v.admissible) os << "admissible\n";
    else os << "rejected at stage " << *v.stage << ": " << v.witness << '\n';
}

std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& one_based, std::size_t limit) {
    std::vector<std::size_t> out;
    for (std::size_t i : one_based) {
        if (i < 1 || i > limit) throw bf::input_error("row index " + std::to_string(i) + " out of range 1.." +
                                                      std::to_string(limit));
        out.push_back(i - 1);
    }
    return out;
}

// Generator degrees read off the submaximal pfaffians; fails on zero or mixed entries.
std::vector<bf::Degree> infer_degrees(const bf::AlternatingMatrix& m) {
    std::vector<bf::Degree> out;
    const auto p = bf::submaximal_pfaffians(m);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto h = bf::is_homogeneous(p[i]);
        if (h.kind != bf::Homogeneity::Kind::homogeneous)
            throw bf::input_error("cannot infer degree of pfaffian " + std::to_string(i + 1) + "; pass --degrees");
        out.push_back(h.degree);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti sequences of codimension-3 almost complete intersections"};
    app.require_subcommand(1);
    std::uint64_t seed_flag = 0;
    app.add_option("--seed", seed_flag, "random seed (BETTIFORGE_SEED overrides)");

    std::string input = "-";
    bool explain_flag = false;
    auto* check = app.add_subcommand("check", "decide admissibility of an ACI Betti sequence {D,E,F}");
    check->add_option("input", input, "JSON file, - for stdin");
    check->add_flag("--explain", explain_flag, "print the derivation to stderr");

    std::vector<bf::Degree> gens;
    std::optional<bf::Degree> theta;
    auto* mci = app.add_subcommand("mci", "minimal complete-intersection type of a Gorenstein sequence");
    mci->add_option("--gens", gens, "generator degrees")->delimiter(',')->required();
    mci->add_option("--theta", theta, "socle degree (checked)");

    auto* gcheck = app.add_subcommand("gorenstein-check", "Gaeta-Diesel admissibility of generator degrees");
    gcheck->add_option("--gens", gens, "generator degrees")->delimiter(',')->required();

    std::string resolution_path;
    int nvars = 3;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function from a resolution");
    auto* hg = hilbert->add_option("--gens", gens, "Gorenstein generator degrees")->delimiter(',');
    hilbert->add_option("--resolution", resolution_path, "JSON list of twist multisets (levels 1..)")
        ->excludes(hg);
    hilbert->add_option("--nvars", nvars, "number of variables");

    bool submaximal = false, adjoint = false;
    auto* pf = app.add_subcommand("pfaffian", "pfaffian of an alternating matrix (JSON)");
    pf->add_option("input", input, "JSON file, - for stdin");
    auto* sub_flag = pf->add_flag("--submaximal", submaximal, "print the submaximal pfaffian vector");
    pf->add_flag("--adjoint", adjoint, "print the pfaffian adjoint")->excludes(sub_flag);

    std::vector<bf::Degree> ci, extra;
    bf::Degree link_theta = 0;
    auto* link = app.add_subcommand("link", "Betti bookkeeping of a Gorenstein link");
    link->add_option("--gens", gens, "Gorenstein generator degrees")->delimiter(',')->required();
    link->add_option("--theta", link_theta, "socle degree")->required();
    link->add_option("--ci", ci, "regular sequence degrees")->delimiter(',')->required()->expected(3);
    link->add_option("--extra", extra, "degrees of added pfaffian pairs")->delimiter(',');

    bf::EnumerationBounds bounds;
    unsigned jobs = 1;
    auto* en = app.add_subcommand("enumerate", "stream admissible sequences as NDJSON");
    en->add_option("--max-degree", bounds.max_degree, "largest degree")->required();
    en->add_option("--max-f", bounds.max_f, "largest |F|")->required();
    en->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string matrix_path;
    std::vector<std::size_t> g_rows{1, 2, 3};
    std::vector<bf::Degree> degrees;
    std::size_t generic = 0;
    bool print_complex = false;
    auto* vs = app.add_subcommand("verify-structure", "build and check the ACI complex of a presentation");
    auto* mopt = vs->add_option("--matrix", matrix_path, "alternating matrix JSON");
    auto* gopt = vs->add_option("--generic", generic, "random linear presentation of this odd size")->excludes(mopt);
    vs->add_option("--g-rows", g_rows, "the three G rows (1-based)")->delimiter(',')->expected(3);
    vs->add_option("--degrees", degrees, "generator degree of each row")->delimiter(',');
    vs->add_flag("--print-complex", print_complex, "include the maps in the report");
    vs->callback([&] {
        if (!mopt->count() && !gopt->count()) throw CLI::RequiredError("--matrix or --generic");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        const std::uint64_t seed = resolve_seed(seed_flag);

        if (*check) {
            const bf::AciBetti b = bf::aci_betti_from_json(read_json(input));
            const bf::AciVerdict v = bf::check_betti(b);
            std::cout << bf::to_json(v).dump() << '\n';
            if (explain_flag) explain(b, v, std::cerr);
            return v.admissible ? kOk : kRejected;
        }

        if (*mci) {
            const bf::GorensteinBetti beta =
                theta ? bf::GorensteinBetti(to_multiset(gens), *theta) : bf::GorensteinBetti(to_multiset(gens));
            std::cout << bf::to_json(bf::mci(beta)).dump() << '\n';
            return kOk;
        }

        if (*gcheck) {
            const auto v = bf::check_gorenstein_betti(to_multiset(gens));
            Json j{{"admissible", v.admissible}, {"theta", nullptr}, {"reason", v.reason}};
            if (v.theta) j["theta"] = *v.theta;
            std::cout << j.dump() << '\n';
            return v.admissible ? kOk : kRejected;
        }

        if (*hilbert) {
            bf::HilbertFn h;
            if (!resolution_path.empty()) {
                const Json j = read_json(resolution_path);
                if (!j.is_array()) throw bf::input_error("resolution must be a list of twist lists");
                std::vector<bf::IntMultiset> mods;
                for (const auto& level : j) mods.push_back(bf::multiset_from_json(level));
                h = bf::hilbert_from_resolution(mods, nvars);
            } else if (!gens.empty()) {
                h = bf::hilbert_function(bf::GorensteinBetti(to_multiset(gens)));
            } else {
                throw bf::input_error("hilbert needs --gens or --resolution");
            }
            std::cout << Json(h.values).dump() << '\n';
            return kOk;
        }

        if (*pf) {
            const bf::AlternatingMatrix m(bf::matrix_from_json(read_json(input)));
            if (submaximal) {
                Json out = Json::array();
                for (const auto& p : bf::submaximal_pfaffians(m)) out.push_back(p.to_string());
                std::cout << out.dump() << '\n';
            } else if (adjoint) {
                std::cout << bf::to_json(bf::pfaffian_adjoint(m).matrix()).dump() << '\n';
            } else {
                std::cout << Json(bf::pfaffian(m).to_string()).dump() << '\n';
            }
            return kOk;
        }

        if (*link) {
            const auto r = bf::link_betti(to_multiset(gens), link_theta, {ci[0], ci[1], ci[2]}, to_multiset(extra));
            std::cout << bf::to_json(r).dump() << '\n';
            return kOk;
        }

        if (*en) {
            bf::enumerate(
                bounds, [](const bf::AciBetti& b) { std::cout << bf::to_json(b).dump() << '\n' << std::flush; },
                jobs);
            return kOk;
        }

        if (*vs) {
            bf::AlternatingPresentation pres;
            if (generic) {
                if (generic < 5 || generic % 2 == 0) throw bf::input_error("--generic needs an odd size >= 5");
                if (degrees.empty()) degrees.assign(generic, static_cast<bf::Degree>((generic - 1) / 2));
                pres = bf::generic_presentation(degrees, seed);
            } else {
                pres.matrix = bf::AlternatingMatrix(bf::matrix_from_json(read_json(matrix_path)));
                pres.degrees = degrees.empty() ? infer_degrees(pres.matrix) : degrees;
            }
            const auto g = to_zero_based(g_rows, pres.matrix.size());
            pres.g_indices = {g[0], g[1], g[2]};
            const bf::GradedComplex c = bf::build_aci_complex(pres);
            const bf::ComplexReport report = bf::verify_complex(c);
            Json j = bf::to_json(report);
            j["twists"] = bf::to_json(c)["twists"];
            if (print_complex) j["maps"] = bf::to_json(c)["maps"];
            std::cout << j.dump() << '\n';
            return report.ok() ? kOk : kRejected;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
