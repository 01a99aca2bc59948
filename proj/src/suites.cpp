#include "fingeo/suites.hpp"

#include <random>
#include <string>

#include "fingeo/codes_hamming.hpp"
#include "fingeo/codes_rank.hpp"

namespace fingeo {

namespace {

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

template <class Set>
std::string join(const Set& s) {
    std::string out;
    for (const auto& v : s) {
        if (!out.empty()) out += ' ';
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, mpz_class>) {
            out += v.get_str();
        } else {
            out += std::to_string(v);
        }
    }
    return out;
}

void add_params(Report& rep, std::initializer_list<std::pair<const char*, std::uint64_t>> ps) {
    for (const auto& [k, v] : ps) rep.params.emplace_back(k, std::to_string(v));
}

} // namespace

int report_status(const Report& r) {
    if (r.any_fail()) return 1;
    if (r.any_skipped()) return 2;
    return 0;
}

Report verify_ti_formula(std::uint64_t q, unsigned n, unsigned r, unsigned h) {
    Report rep;
    rep.theorem = "ti-formula";
    add_params(rep, {{"q", q}, {"n", n}, {"r", r}, {"h", h}});
    const LinearSet L = moore_h_scattered(q, n, r, h);
    const auto predicted = predicted_t(q, n, r, h);
    const auto realized = hyperplane_profile(L).by_weight();
    const unsigned base = L.rank() - n;
    std::uint64_t covered = 0;
    for (unsigned i = 0; i <= h; ++i) {
        const auto it = realized.find(base + i);
        const std::uint64_t got = it == realized.end() ? 0 : it->second;
        covered += got;
        rep.add("t_" + std::to_string(i), mpz_class(static_cast<unsigned long>(got)) == predicted[i],
                "weight " + std::to_string(base + i) + ": enumerated " + str(got) + ", predicted " + str(predicted[i]));
    }
    std::uint64_t total = 0;
    for (const auto& [w, c] : realized) total += c;
    rep.add("no other weights", covered == total, str(total - covered) + " hyperplanes of other weights");
    return rep;
}

Report verify_cone_profile(std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h) {
    Report rep;
    rep.theorem = "cone-profile";
    add_params(rep, {{"q", q}, {"n", n}, {"r", r}, {"d", d}, {"h", h}});
    const ConeSpec c = cone(moore_h_scattered(q, n, d, h), r, h);
    const ConeProfileCheck chk = check_cone_profile(c);
    const auto Qn = static_cast<std::uint64_t>(c.base.tower().ext().order());
    const auto t = predicted_t(q, n, d, h);

    std::uint64_t through = 0, through_bad = 0;
    bool counts = true;
    std::string detail;
    for (unsigned i = 0; i <= h; ++i) {
        const auto it = chk.through_vertex.find(i);
        const std::uint64_t got = it == chk.through_vertex.end() ? 0 : it->second.hyperplanes;
        if (it != chk.through_vertex.end()) through_bad += it->second.mismatches;
        through += got;
        counts = counts && mpz_class(static_cast<unsigned long>(got)) == t[i];
        detail += "i=" + std::to_string(i) + ": " + str(got) + "/" + str(t[i]) + " ";
    }
    rep.add("through vertex: weights and sizes", through_bad == 0,
            str(through_bad) + " hyperplanes off the formula");
    rep.add("through vertex: counts per i", counts, detail);
    rep.add("through vertex: total", mpz_class(static_cast<unsigned long>(through)) == space_size(d, Qn),
            str(through) + " vs [d]_{q^n} = " + str(space_size(d, Qn)));
    const mpz_class off = space_size(r, Qn) - space_size(d, Qn);
    rep.add("off vertex: weight and size", chk.off_vertex.mismatches == 0,
            str(chk.off_vertex.mismatches) + " hyperplanes off the formula");
    rep.add("off vertex: total", mpz_class(static_cast<unsigned long>(chk.off_vertex.hyperplanes)) == off,
            str(chk.off_vertex.hyperplanes) + " vs " + str(off));
    rep.add("no unexpected hyperplanes", chk.unexpected == 0, str(chk.unexpected));
    return rep;
}

Report verify_extension_type(ExtensionKind kind, std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h) {
    Report rep;
    rep.theorem = kind == ExtensionKind::One ? "construction1-type" : "construction2-type";
    add_params(rep, {{"q", q}, {"n", n}, {"r", r}, {"d", d}, {"h", h}});
    const ConeSpec c = cone(moore_h_scattered(q, n, d, h), r, h);
    const AffineExtension ext = kind == ExtensionKind::One ? construction_one(c) : construction_two(c);
    const mpz_class size = kind == ExtensionKind::One ? construction_one_size(c) : construction_two_size(c);
    rep.add("size", mpz_class(static_cast<unsigned long>(ext.points.size())) == size,
            str(ext.points.size()) + " vs " + str(size));
    const ExtensionAnalysis a = analyze_extension(ext);
    std::string fams;
    for (const auto& [key, st] : a.realized) fams += family_name(key) + ":" + str(st.hyperplanes) + " ";
    rep.add("family sizes", a.sizes_match(), fams);
    rep.add("family weights", a.weights_match());
    rep.add("listed families realized", a.listed_realized());
    rep.add("excluded families absent", a.excluded_absent());
    std::set<mpz_class> sizes;
    for (const auto& [s, cnt] : a.size_histogram) sizes.insert(mpz_class(static_cast<unsigned long>(s)));
    rep.add("type set", sizes == a.predicted_type(),
            "realized {" + join(sizes) + "}, predicted {" + join(a.predicted_type()) + "}");
    return rep;
}

Report verify_hypercylinder_roundtrip(std::uint64_t q, unsigned r, unsigned trials, std::uint64_t seed) {
    Report rep;
    rep.theorem = "hypercylinder-roundtrip";
    add_params(rep, {{"q", q}, {"r", r}, {"trials", trials}, {"seed", seed}});
    const PointSet S = hypercylinder(q, r);
    const auto m = recognize_hypercylinder(S);
    rep.add("recognized", m.has_value());
    if (m && q >= 4) {
        rep.add("vertex", m->vertex == hypercylinder_vertex(S.space().field_ptr(), r));
    }
    std::mt19937_64 rng(seed);
    unsigned rejected = 0;
    for (unsigned i = 0; i < trials; ++i) {
        const PointSet P = perturb_one_point(S, rng());
        if (!recognize_hypercylinder(P)) ++rejected;
    }
    rep.add("perturbations rejected", rejected == trials, std::to_string(rejected) + "/" + std::to_string(trials));
    return rep;
}

Report verify_stability(std::uint64_t q, unsigned r, unsigned trials, std::uint64_t seed) {
    Report rep;
    rep.theorem = "stability";
    add_params(rep, {{"q", q}, {"r", r}, {"trials", trials}, {"seed", seed}});
    const PointSet S = hypercylinder(q, r);
    const HammingCode C = code_from_system(ProjectiveSystem::from_set(S));
    const std::uint64_t t = ipow(q, r - 2);
    const StabilityVerdict v = stability_decide(C, q, r, t);
    rep.add("hypercylinder verdict", v.hypercylinder);
    rep.add("t resolved to q^{r-2}", v.t_is_resolved, "t = " + str(t) + "; " + v.note);
    rep.add("geometry", v.geometry.all_pass(), v.geometry.theorem);
    std::mt19937_64 rng(seed);
    unsigned rejected = 0;
    for (unsigned i = 0; i < trials; ++i) {
        const PointSet P = perturb_one_point(S, rng());
        try {
            const HammingCode D = code_from_system(ProjectiveSystem::from_set(P));
            if (!stability_decide(D, q, r, t).hypercylinder) ++rejected;
        } catch (const std::invalid_argument&) {
            ++rejected; // hypothesis violation or a non-spanning set
        }
    }
    rep.add("perturbations rejected", rejected == trials, std::to_string(rejected) + "/" + std::to_string(trials));
    return rep;
}

Report verify_rank_duality(std::uint64_t q, unsigned n, unsigned k, std::uint64_t seed) {
    Report rep;
    rep.theorem = "rank-duality";
    add_params(rep, {{"q", q}, {"n", n}, {"k", k}, {"seed", seed}});
    const auto suite = rank_code_suite(q, n, k);
    if (suite.empty()) rep.skip("codes", "no cone or construction-one code with these parameters");
    for (const auto& lc : suite) {
        const DualityCheck dc = check_rank_duality(lc.code, seed);
        rep.add(lc.label + " identity", dc.ok(),
                std::to_string(dc.tested) + (dc.exhaustive ? " codewords (all)" : " sampled codewords") + ", " +
                    std::to_string(dc.failures) + " failures");
        const auto dist = rank_weight_distribution(lc.code);
        std::set<unsigned> weights;
        for (unsigned w = 1; w < dist.size(); ++w)
            if (dist[w] > 0) weights.insert(w);
        const unsigned dmin = weights.empty() ? 0 : *weights.begin();
        bool within = true;
        for (unsigned w : weights) within = within && (lc.construction_one ? (w == 1 || w + lc.h >= n) : w + lc.h >= n);
        const unsigned expected_d = lc.construction_one ? 1 : n - lc.h;
        const std::string shown = "weights {" + join(weights) + "}";
        rep.add(lc.label + " weights", within, shown);
        rep.add(lc.label + " minimum distance", dmin == expected_d && rank_distance_by_hyperplanes(lc.code) == dmin,
                std::to_string(dmin) + " vs " + std::to_string(expected_d));
    }
    return rep;
}

} // namespace fingeo
