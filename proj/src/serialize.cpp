#include "fingeo/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace fingeo {

namespace {

Json rows_of(const std::vector<std::vector<Elem>>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(r);
    return out;
}

std::vector<std::vector<Elem>> rows_from(const Json& j, std::size_t width, Elem bound) {
    std::vector<std::vector<Elem>> out;
    for (const auto& row : j) {
        auto v = row.get<std::vector<Elem>>();
        if (v.size() != width) throw std::invalid_argument("row has the wrong length");
        for (Elem e : v)
            if (e >= bound) throw std::invalid_argument("entry outside the field");
        out.push_back(std::move(v));
    }
    return out;
}

Json field_pm(const Field& F) { return Json::array({F.characteristic(), F.degree()}); }

FieldPtr field_from(const Json& j) { return Field::make(j.at(0).get<unsigned>(), j.at(1).get<unsigned>()); }

Json tower_pen(const Tower& T) {
    return Json::array({T.base().characteristic(), T.base().degree(), T.n()});
}

TowerPtr tower_from(const Json& j) {
    return Tower::make(Field::make(j.at(0).get<unsigned>(), j.at(1).get<unsigned>()), j.at(2).get<unsigned>());
}

} // namespace

Json to_json(const FieldSpec& spec) { return Json::array({spec.p, spec.m, spec.modulus}); }

Json to_json(const Matrix& m) { return rows_of(m.to_rows()); }

Json to_json(const PointSet& S) {
    const auto& P = S.space();
    Json j;
    j["ambient"] = {{"N", P.dim()}, {"Q", field_pm(P.field())}};
    j["points"] = rows_of(S.points());
    return j;
}

PointSet point_set_from_json(const Json& j) {
    const ProjectiveSpace P(field_from(j.at("ambient").at("Q")), j.at("ambient").at("N").get<unsigned>());
    return PointSet::from_vectors(P, rows_from(j.at("points"), P.coords(), P.field().order()));
}

Json to_json(const LinearSet& L) {
    Json j;
    j["tower"] = tower_pen(L.tower());
    j["r"] = L.r();
    j["basis"] = rows_of(L.basis());
    return j;
}

LinearSet linear_set_from_json(const Json& j) {
    const TowerPtr T = tower_from(j.at("tower"));
    const auto r = j.at("r").get<unsigned>();
    return LinearSet(T, r, rows_from(j.at("basis"), r, T->ext().order()));
}

Json to_json(const ConeSpec& c) {
    Json j;
    j["q"] = c.q();
    j["n"] = c.n();
    j["r"] = c.r;
    j["d"] = c.d;
    j["h"] = c.h;
    j["base"] = to_json(c.base);
    j["cone"] = to_json(c.cone);
    j["vertex"] = to_json(c.vertex.basis());
    return j;
}

Json to_json(const AffineExtension& e) {
    Json j;
    j["kind"] = e.kind == ExtensionKind::One ? "construction1" : "construction2";
    j["cone"] = to_json(e.cone);
    j["extended"] = to_json(e.extended);
    j["y"] = e.y;
    j["points"] = to_json(e.points);
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["theorem"] = r.theorem;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    Json items = Json::array();
    for (const auto& it : r.items) {
        Json item;
        item["name"] = it.name;
        item["pass"] = it.pass;
        if (it.skipped) item["skipped"] = true;
        if (!it.detail.empty()) item["detail"] = it.detail;
        if (it.witness) item["witness"] = to_json(*it.witness);
        items.push_back(item);
    }
    j["items"] = items;
    return j;
}

Json to_json(const HammingCode& C) {
    Json j;
    j["Q"] = field_pm(C.field());
    j["k"] = C.dimension();
    j["n"] = C.length();
    j["rows"] = to_json(C.generator());
    return j;
}

HammingCode hamming_code_from_json(const Json& j) {
    const FieldPtr F = field_from(j.at("Q"));
    const auto n = j.at("n").get<std::size_t>();
    const auto rows = rows_from(j.at("rows"), n, F->order());
    if (rows.size() != j.at("k").get<std::size_t>()) throw std::invalid_argument("k differs from the number of rows");
    return HammingCode(F, Matrix::from_rows(rows, n));
}

Json to_json(const RankCode& C) {
    Json j;
    j["tower"] = tower_pen(C.tower());
    j["k"] = C.dimension();
    j["n"] = C.length();
    j["rows"] = to_json(C.generator());
    return j;
}

RankCode rank_code_from_json(const Json& j) {
    const TowerPtr T = tower_from(j.at("tower"));
    const auto n = j.at("n").get<std::size_t>();
    const auto rows = rows_from(j.at("rows"), n, T->ext().order());
    if (rows.size() != j.at("k").get<std::size_t>()) throw std::invalid_argument("k differs from the number of rows");
    return RankCode(T, Matrix::from_rows(rows, n));
}

std::string distribution_csv(const std::vector<std::uint64_t>& dist, const std::string& header) {
    std::ostringstream os;
    os << header << ",count\n";
    for (std::size_t w = 0; w < dist.size(); ++w)
        if (dist[w] > 0) os << w << ',' << dist[w] << '\n';
    return os.str();
}

std::string profile_csv(const HyperplaneProfile& p) {
    std::ostringstream os;
    os << "weight,size,count\n";
    for (const auto& [key, count] : p.joint) os << key.first << ',' << key.second << ',' << count << '\n';
    return os.str();
}

} // namespace fingeo
