#include "curvesim/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace curvesim {

using nlohmann::json;

namespace {

UniPoly<Rational> poly_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<Rational> c;
    for (const auto& v : arr) {
        if (!v.is_string())
            throw ParseError(std::string(what) + ": coefficients must be strings like \"p/q\"");
        try {
            c.push_back(parse_rational(v.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(what) + ": " + e.what());
        }
    }
    return UniPoly<Rational>(std::move(c));
}

json poly_to_json(const UniPoly<Rational>& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_string(p.coeff(i)));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

json scalar_to_json(const ScalarRepr& s) {
    json j;
    j["kind"] = s.kind;
    j["value"] = s.value;
    if (!s.poly.empty()) {
        j["poly"] = s.poly;
        j["interval"] = {s.lo, s.hi};
    }
    if (!s.approx.empty()) j["approx"] = s.approx;
    return j;
}

} // namespace

RationalCurve3 parse_curve_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("curve file: ") + e.what());
    }
    if (!j.contains("components") || !j["components"].is_array() || j["components"].size() != 3)
        throw ParseError("curve file: expected exactly three components");
    std::array<std::pair<UniPoly<Rational>, UniPoly<Rational>>, 3> comps;
    for (int i = 0; i < 3; ++i) {
        const auto& c = j["components"][i];
        if (!c.contains("num"))
            throw ParseError("curve file: component missing \"num\"");
        UniPoly<Rational> num = poly_from_json(c["num"], "num");
        UniPoly<Rational> den = c.contains("den")
                                    ? poly_from_json(c["den"], "den")
                                    : UniPoly<Rational>::constant(1);
        if (den.is_zero()) throw ParseError("curve file: zero denominator");
        comps[i] = {num, den};
    }
    return make_curve(comps);
}

RationalCurve3 parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve_string(ss.str());
}

std::string curve_to_string(const RationalCurve3& c, const std::string& name) {
    json j;
    j["vars"] = "t";
    if (!name.empty()) j["name"] = name;
    json comps = json::array();
    for (int i = 0; i < 3; ++i) {
        json comp;
        comp["num"] = poly_to_json(c[i].num);
        comp["den"] = poly_to_json(c[i].den);
        comps.push_back(comp);
    }
    j["components"] = comps;
    return j.dump(2) + "\n";
}

void write_curve_file(const std::string& path, const RationalCurve3& c, const std::string& name) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << curve_to_string(c, name);
}

ControlPolygon parse_polygon_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("polygon file: ") + e.what());
    }
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("polygon file: expected a \"points\" array");
    ControlPolygon P;
    for (const auto& pt : j["points"]) {
        if (!pt.is_array() || pt.size() != 3)
            throw ParseError("polygon file: each point is [\"x\",\"y\",\"z\"]");
        Vec3<Rational> v;
        for (int i = 0; i < 3; ++i) {
            try {
                v[i] = parse_rational(pt[i].get<std::string>());
            } catch (const std::exception& e) {
                throw ParseError(std::string("polygon file: ") + e.what());
            }
        }
        P.points.push_back(v);
    }
    return P;
}

ControlPolygon parse_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_polygon_string(ss.str());
}

std::string report_to_json_string(const SimilarityReport& rep) {
    json j;
    j["schema"] = "curvesim-report/1";
    j["similar"] = rep.similar;
    j["inconclusive"] = rep.inconclusive;
    j["classification"] = {rep.class1, rep.class2};
    j["helical_route"] = rep.helical_route;
    if (rep.helical_route) j["helical_t0"] = to_string(rep.helical_t0);
    if (!rep.lambda_poly.empty()) j["lambda_poly"] = rep.lambda_poly;
    if (!rep.lambda_poly_raw.empty()) j["lambda_poly_raw"] = rep.lambda_poly_raw;
    j["nontrivial_matches"] = rep.nontrivial_matches;
    json ms = json::array();
    for (const auto& m : rep.matches) {
        json mj;
        mj["lambda"] = scalar_to_json(m.lambda);
        mj["phi"] = {scalar_to_json(m.phi.coeff[0]), scalar_to_json(m.phi.coeff[1]),
                     scalar_to_json(m.phi.coeff[2]), scalar_to_json(m.phi.coeff[3])};
        json q = json::array();
        for (int r = 0; r < 3; ++r) {
            json row = json::array();
            for (int c = 0; c < 3; ++c) row.push_back(scalar_to_json(m.Q[r][c]));
            q.push_back(row);
        }
        mj["Q"] = q;
        mj["b"] = {scalar_to_json(m.b[0]), scalar_to_json(m.b[1]), scalar_to_json(m.b[2])};
        mj["field"] = m.field;
        mj["trivial"] = m.trivial;
        if (!m.note.empty()) mj["note"] = m.note;
        ms.push_back(mj);
    }
    j["matches"] = ms;
    json cs = json::array();
    for (const auto& c : rep.candidates) {
        json cj;
        cj["lambda"] = scalar_to_json(c.lambda);
        cj["source"] = c.source;
        cj["status"] = c.status;
        if (!c.reason.empty()) cj["reason"] = c.reason;
        cs.push_back(cj);
    }
    j["candidates"] = cs;
    j["notes"] = rep.notes;
    return j.dump(2) + "\n";
}

namespace {
std::string scalar_text(const ScalarRepr& s) {
    if (s.kind == "rational") return s.value;
    std::string out = s.value;
    if (!s.approx.empty()) out += " ~ " + s.approx;
    return out;
}
} // namespace

std::string report_to_text(const SimilarityReport& rep) {
    std::ostringstream o;
    o << "classification: " << rep.class1 << " / " << rep.class2 << "\n";
    if (rep.helical_route) o << "helical route, t0 = " << to_string(rep.helical_t0) << "\n";
    if (!rep.lambda_poly.empty()) o << "Lambda (squarefree): " << rep.lambda_poly << "\n";
    if (!rep.lambda_poly_raw.empty()) o << "Lambda (raw): " << rep.lambda_poly_raw << "\n";
    for (const auto& c : rep.candidates) {
        o << "candidate lambda [" << c.source << "] " << scalar_text(c.lambda) << ": " << c.status;
        if (!c.reason.empty()) o << " (" << c.reason << ")";
        o << "\n";
    }
    o << (rep.similar ? "SIMILAR" : "NOT SIMILAR") << "\n";
    int idx = 0;
    for (const auto& m : rep.matches) {
        o << "match " << ++idx << (m.trivial ? " (trivial)" : "") << " over " << m.field << "\n";
        o << "  lambda = " << scalar_text(m.lambda) << "\n";
        o << "  phi(t) = ((" << scalar_text(m.phi.coeff[0]) << ")t + (" << scalar_text(m.phi.coeff[1])
          << ")) / ((" << scalar_text(m.phi.coeff[2]) << ")t + (" << scalar_text(m.phi.coeff[3])
          << "))\n";
        o << "  Q rows:";
        for (int r = 0; r < 3; ++r) {
            o << " [";
            for (int c = 0; c < 3; ++c)
                o << scalar_text(m.Q[r][c]) << (c < 2 ? ", " : "");
            o << "]";
        }
        o << "\n  b = (" << scalar_text(m.b[0]) << ", " << scalar_text(m.b[1]) << ", "
          << scalar_text(m.b[2]) << ")\n";
        if (!m.note.empty()) o << "  note: " << m.note << "\n";
    }
    for (const auto& n : rep.notes) o << "note: " << n << "\n";
    if (rep.inconclusive) o << "INCONCLUSIVE: see notes\n";
    return o.str();
}

} // namespace curvesim
