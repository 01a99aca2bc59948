// fingeo: construct, verify, code, catalog.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fingeo/codes_hamming.hpp"
#include "fingeo/codes_rank.hpp"
#include "fingeo/constructions.hpp"
#include "fingeo/parallel.hpp"
#include "fingeo/serialize.hpp"
#include "fingeo/suites.hpp"

using namespace fingeo;

namespace {

constexpr unsigned kMaxWorkers = 256;
constexpr unsigned kMaxTrials = 100000;

struct Options {
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string out = "fingeo-out";

    std::string object;
    std::uint64_t q = 0;
    unsigned n = 0, r = 0, d = 0, h = 0, k = 0;
    std::uint64_t t = 0;
    unsigned trials = 100;
    std::string from_set;
    bool hypercylinder = false, cone_flag = false, construction1 = false;
    std::string grid;
};

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The full run configuration, embedded in every output file.
Json run_config(const std::string& command, const Options& o, std::initializer_list<const char*> used) {
    Json c;
    c["command"] = command;
    if (!o.object.empty()) c["object"] = o.object;
    Json p = Json::object();
    for (const char* name : used) {
        const std::string s = name;
        if (s == "q") p["q"] = o.q;
        else if (s == "n") p["n"] = o.n;
        else if (s == "r") p["r"] = o.r;
        else if (s == "d") p["d"] = o.d;
        else if (s == "h") p["h"] = o.h;
        else if (s == "k") p["k"] = o.k;
        else if (s == "t") p["t"] = o.t;
        else if (s == "trials") p["trials"] = o.trials;
        else if (s == "from-set") p["from_set"] = o.from_set;
        else if (s == "grid") p["grid"] = o.grid;
    }
    c["params"] = p;
    c["seed"] = o.seed;
    c["workers"] = o.workers;
    c["out"] = o.out;
    return c;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw CliError(msg);
}

void need(const Options& o, std::initializer_list<const char*> names) {
    for (const char* name : names) {
        const std::string s = name;
        const bool set = (s == "q" && o.q) || (s == "n" && o.n) || (s == "r" && o.r) || (s == "d" && o.d) ||
                         (s == "h" && o.h) || (s == "k" && o.k);
        require(set, "--" + s + " is required and must be positive");
    }
    if (o.q) prime_power(o.q); // throws for non prime powers
}

std::filesystem::path out_file(const Options& o, const std::string& name) {
    std::filesystem::create_directories(o.out);
    return std::filesystem::path(o.out) / name;
}

void write_json(const Options& o, const std::string& name, const Json& j) {
    const auto path = out_file(o, name);
    std::ofstream f(path);
    f << j.dump(2) << '\n';
    if (!f) throw std::runtime_error("cannot write " + path.string());
    std::cout << "wrote " << path.string() << '\n';
}

void write_csv(const Options& o, const std::string& name, const Json& config, const std::string& body) {
    const auto path = out_file(o, name);
    std::ofstream f(path);
    f << "# config: " << config.dump() << '\n' << body;
    if (!f) throw std::runtime_error("cannot write " + path.string());
    std::cout << "wrote " << path.string() << '\n';
}

Json predicted_vs(const mpz_class& predicted, std::uint64_t computed) {
    return Json{{"predicted", predicted.get_str()}, {"computed", computed}};
}

PointSet read_set(const std::string& path) {
    std::ifstream f(path);
    require(static_cast<bool>(f), "cannot read " + path);
    const Json j = Json::parse(f);
    // a bare point set, or a construct output carrying one under "points"
    if (!j.contains("ambient") && j.contains("points") && j["points"].is_object()) return point_set_from_json(j["points"]);
    return point_set_from_json(j);
}

std::string bracket(std::size_t n, std::size_t k, std::size_t d, const std::string& field) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" + field;
}

int cmd_construct(const Options& o) {
    Json j;
    Json summary;
    std::string name = "construct-" + o.object + ".json";
    if (o.object == "moore") {
        need(o, {"q", "n", "r", "h"});
        j["config"] = run_config("construct", o, {"q", "n", "r", "h"});
        const LinearSet L = moore_h_scattered(o.q, o.n, o.r, o.h);
        summary["rank"] = predicted_vs(mpz_class(o.r * o.n / (o.h + 1)), L.rank());
        summary["size"] = L.size();
        summary["weight_spectrum"] = weight_spectrum(L);
        j["linear_set"] = to_json(L);
    } else if (o.object == "cone") {
        need(o, {"q", "n", "r", "d", "h"});
        j["config"] = run_config("construct", o, {"q", "n", "r", "d", "h"});
        const ConeSpec c = cone(moore_h_scattered(o.q, o.n, o.d, o.h), o.r, o.h);
        summary["rank"] = predicted_vs(mpz_class(c.D() + o.n * (o.r - o.d)), c.cone.rank());
        summary["size"] = predicted_vs(cone_size(c), c.cone.size());
        std::vector<std::uint64_t> codes;
        for (const auto& p : c.cone.points()) codes.push_back(p.code);
        j["cone"] = to_json(c);
        j["points"] = to_json(PointSet(c.cone.ambient(), std::move(codes)));
    } else if (o.object == "construction1" || o.object == "construction2") {
        need(o, {"q", "n", "r", "d", "h"});
        j["config"] = run_config("construct", o, {"q", "n", "r", "d", "h"});
        const ConeSpec c = cone(moore_h_scattered(o.q, o.n, o.d, o.h), o.r, o.h);
        const bool one = o.object == "construction1";
        const AffineExtension e = one ? construction_one(c) : construction_two(c);
        summary["size"] = predicted_vs(one ? construction_one_size(c) : construction_two_size(c), e.points.size());
        summary["hyperoval"] = e.points.space().dim() == 2 && is_hyperoval(e.points);
        j["extension"] = to_json(e);
    } else if (o.object == "hyperoval") {
        need(o, {"q"});
        j["config"] = run_config("construct", o, {"q"});
        require(o.q % 2 == 0, "hyperovals need q even");
        const PointSet H = hyperoval_conic_nucleus(o.q);
        summary["size"] = predicted_vs(mpz_class(static_cast<unsigned long>(o.q + 2)), H.size());
        summary["hyperoval"] = is_hyperoval(H);
        j["points"] = to_json(H);
    } else if (o.object == "hypercylinder") {
        need(o, {"q", "r"});
        j["config"] = run_config("construct", o, {"q", "r"});
        require(o.q % 2 == 0, "hypercylinders need q even");
        const PointSet S = hypercylinder(o.q, o.r);
        summary["size"] = predicted_vs(mpz_pow(o.q, o.r - 1) + 2 * mpz_pow(o.q, o.r - 2), S.size());
        j["points"] = to_json(S);
    } else {
        throw CliError("unknown object " + o.object);
    }
    j["summary"] = summary;
    std::cout << summary.dump() << '\n';
    write_json(o, name, j);
    return 0;
}

int cmd_verify(const Options& o) {
    Report rep;
    Json config;
    const std::string& tg = o.object;
    if (tg == "ti-formula") {
        need(o, {"q", "n", "r", "h"});
        config = run_config("verify", o, {"q", "n", "r", "h"});
        rep = verify_ti_formula(o.q, o.n, o.r, o.h);
    } else if (tg == "cone-profile") {
        need(o, {"q", "n", "r", "d", "h"});
        config = run_config("verify", o, {"q", "n", "r", "d", "h"});
        rep = verify_cone_profile(o.q, o.n, o.r, o.d, o.h);
    } else if (tg == "construction1-type" || tg == "construction2-type") {
        need(o, {"q", "n", "r", "d", "h"});
        config = run_config("verify", o, {"q", "n", "r", "d", "h"});
        rep = verify_extension_type(tg == "construction1-type" ? ExtensionKind::One : ExtensionKind::Two, o.q, o.n,
                                    o.r, o.d, o.h);
    } else if (tg == "km-plane" || tg == "km-space") {
        const bool plane = tg == "km-plane";
        if (!o.from_set.empty()) {
            require(o.t > 0, "--t is required with --from-set");
            config = run_config("verify", o, {"from-set", "t"});
            const PointSet S = read_set(o.from_set);
            rep = plane ? verify_plane_km_theorem(S, o.t) : verify_space_theorem(S, o.t);
        } else {
            need(o, plane ? std::initializer_list<const char*>{"q"} : std::initializer_list<const char*>{"q", "r"});
            config = run_config("verify", o, plane ? std::initializer_list<const char*>{"q"}
                                                   : std::initializer_list<const char*>{"q", "r"});
            const unsigned r = plane ? 3 : o.r;
            rep = plane ? verify_plane_km_theorem(hypercylinder(o.q, 3), o.q)
                        : verify_space_theorem(hypercylinder(o.q, r), ipow(o.q, r - 2));
        }
    } else if (tg == "stability") {
        need(o, {"q", "r"});
        config = run_config("verify", o, {"q", "r", "trials"});
        rep = verify_stability(o.q, o.r, o.trials, o.seed);
    } else if (tg == "rank-duality") {
        need(o, {"q", "n", "k"});
        config = run_config("verify", o, {"q", "n", "k"});
        rep = verify_rank_duality(o.q, o.n, o.k, o.seed);
    } else {
        throw CliError("unknown target " + tg);
    }
    const int status = report_status(rep);
    for (const auto& it : rep.items)
        std::cout << (it.skipped ? "SKIP " : it.pass ? "PASS " : "FAIL ") << it.name
                  << (it.detail.empty() ? "" : "  (" + it.detail + ")") << '\n';
    std::cout << rep.theorem << ": " << (status == 0 ? "pass" : status == 1 ? "fail" : "skipped") << '\n';
    write_json(o, "verify-" + tg + ".json", Json{{"config", config}, {"report", to_json(rep)}});
    return status;
}

int cmd_code(const Options& o) {
    if (o.object == "hamming") {
        std::optional<HammingCode> C;
        Json config;
        if (!o.from_set.empty()) {
            config = run_config("code", o, {"from-set"});
            C = code_from_system(ProjectiveSystem::from_set(read_set(o.from_set)));
        } else {
            require(o.hypercylinder, "code hamming needs --hypercylinder or --from-set");
            need(o, {"q", "r"});
            require(o.q % 2 == 0, "hypercylinders need q even");
            config = run_config("code", o, {"q", "r"});
            C = hypercylinder_code(o.q, o.r);
        }
        const auto dist = weight_distribution(*C);
        std::cout << bracket(C->length(), C->dimension(), minimum_distance(dist), std::to_string(C->field().order()))
                  << '\n';
        write_json(o, "code-hamming.json", Json{{"config", config}, {"code", to_json(*C)}});
        write_csv(o, "code-hamming-distribution.csv", config, distribution_csv(dist, "weight"));
        return 0;
    }
    if (o.object == "rank") {
        require(o.cone_flag != o.construction1, "code rank needs exactly one of --cone, --construction1");
        need(o, {"q", "n", "r", "d", "h"});
        const Json config = run_config("code", o, {"q", "n", "r", "d", "h"});
        const RankCode C = o.cone_flag ? cone_rank_code(o.q, o.n, o.r, o.d, o.h)
                                       : construction_one_rank_code(o.q, o.n, o.r, o.d, o.h);
        const auto dist = rank_weight_distribution(C);
        std::size_t dmin = 0;
        for (std::size_t w = 1; w < dist.size() && !dmin; ++w)
            if (dist[w]) dmin = w;
        std::cout << bracket(C.length(), C.dimension(), dmin,
                             "{" + std::to_string(C.tower().ext().order()) + "/" + std::to_string(o.q) + "}")
                  << '\n';
        write_json(o, "code-rank.json", Json{{"config", config}, {"code", to_json(C)}});
        write_csv(o, "code-rank-distribution.csv", config, distribution_csv(dist, "rank_weight"));
        return 0;
    }
    throw CliError("unknown code family " + o.object);
}

std::string weights_field(const std::vector<std::uint64_t>& dist) {
    std::string s;
    for (std::size_t w = 1; w < dist.size(); ++w) {
        if (!dist[w]) continue;
        if (!s.empty()) s += ';';
        s += std::to_string(w) + ":" + std::to_string(dist[w]);
    }
    return s;
}

int cmd_catalog(const Options& o) {
    require(o.grid == "small", "only --grid small is defined");
    const Json config = run_config("catalog", o, {"grid"});
    std::ostringstream os;
    os << "metric,family,params,length,dimension,min_distance,weights\n";
    const std::pair<std::uint64_t, unsigned> hc[] = {{2, 3}, {4, 3}, {8, 3}, {2, 4}, {4, 4}};
    for (const auto& [q, r] : hc) {
        const HammingCode C = hypercylinder_code(q, r);
        const auto dist = weight_distribution(C);
        os << "hamming,hypercylinder,q=" << q << " r=" << r << ',' << C.length() << ',' << C.dimension() << ','
           << minimum_distance(dist) << ',' << weights_field(dist) << '\n';
    }
    const std::pair<std::uint64_t, unsigned> towers[] = {{2, 2}, {2, 3}, {3, 2}};
    for (const auto& [q, n] : towers)
        for (unsigned k : {2u, 3u})
            for (const auto& lc : rank_code_suite(q, n, k)) {
                const auto dist = rank_weight_distribution(lc.code);
                std::size_t dmin = 0;
                for (std::size_t w = 1; w < dist.size() && !dmin; ++w)
                    if (dist[w]) dmin = w;
                const auto open = lc.label.find('(');
                std::string params = lc.label.substr(open + 1, lc.label.size() - open - 2);
                for (auto& ch : params)
                    if (ch == ',') ch = ' ';
                os << "rank," << lc.label.substr(0, open) << ',' << params << ',' << lc.code.length() << ','
                   << lc.code.dimension() << ',' << dmin << ',' << weights_field(dist) << '\n';
            }
    std::cout << os.str();
    write_csv(o, "catalog-small.csv", config, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear sets, hypercylinders and their codes over finite fields"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--workers", o.workers, "Worker threads (0: all cores)")
        ->check(CLI::Range(0u, kMaxWorkers))
        ->capture_default_str();
    app.add_option("--out", o.out, "Output directory")->capture_default_str();

    auto params = [&](CLI::App* sub) {
        sub->add_option("--q", o.q, "Base field order");
        sub->add_option("--n", o.n, "Extension degree")->check(CLI::Range(1u, 16u));
        sub->add_option("--r", o.r, "Ambient rank")->check(CLI::Range(1u, 16u));
        sub->add_option("--d", o.d, "Base rank of the cone")->check(CLI::Range(1u, 16u));
        sub->add_option("--h", o.h, "Scatteredness parameter")->check(CLI::Range(1u, 15u));
    };

    auto* construct = app.add_subcommand("construct", "Build an object and write it as JSON");
    construct->add_option("object", o.object, "moore | cone | construction1 | construction2 | hyperoval | hypercylinder")
        ->required()
        ->check(CLI::IsMember({"moore", "cone", "construction1", "construction2", "hyperoval", "hypercylinder"}));
    params(construct);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify
        ->add_option("target", o.object,
                     "ti-formula | cone-profile | construction1-type | construction2-type | km-plane | km-space | "
                     "stability | rank-duality")
        ->required()
        ->check(CLI::IsMember({"ti-formula", "cone-profile", "construction1-type", "construction2-type", "km-plane",
                               "km-space", "stability", "rank-duality"}));
    params(verify);
    verify->add_option("--k", o.k, "Code dimension")->check(CLI::Range(1u, 8u));
    verify->add_option("--t", o.t, "Parameter t of the set");
    verify->add_option("--trials", o.trials, "Perturbation trials")->check(CLI::Range(0u, kMaxTrials));
    verify->add_option("--from-set", o.from_set, "Point-set JSON")->check(CLI::ExistingFile);

    auto* code = app.add_subcommand("code", "Extract a code and its weight distribution");
    code->add_option("family", o.object, "hamming | rank")->required()->check(CLI::IsMember({"hamming", "rank"}));
    params(code);
    code->add_flag("--hypercylinder", o.hypercylinder, "Hypercylinder code");
    code->add_flag("--cone", o.cone_flag, "Cone rank code");
    code->add_flag("--construction1", o.construction1, "Construction-one rank code");
    code->add_option("--from-set", o.from_set, "Point-set JSON")->check(CLI::ExistingFile);

    auto* catalog = app.add_subcommand("catalog", "Tabulate the codes of a parameter grid");
    catalog->add_option("--grid", o.grid, "Grid name")->required()->check(CLI::IsMember({"small"}));

    CLI11_PARSE(app, argc, argv);
    set_worker_count(o.workers);
    try {
        if (construct->parsed()) return cmd_construct(o);
        if (verify->parsed()) return cmd_verify(o);
        if (code->parsed()) return cmd_code(o);
        return cmd_catalog(o);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const GuardExceeded& e) {
        std::cerr << "skipped: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }
}
