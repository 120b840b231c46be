#include "covrad/json_io.hpp"

#include "covrad/errors.hpp"

#include <nlohmann/json.hpp>

#include <istream>

namespace covrad {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational json_to_rational(const json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(static_cast<long>(j.get<long long>())));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw UsageError("expected an integer or a \"p/q\" string, got: " + j.dump());
}

Integer json_to_integer(const json& j)
{
    const Rational r = json_to_rational(j);
    if (r.get_den() != 1)
        throw UsageError("expected an integer, got: " + j.dump());
    return r.get_num();
}

ordered_json integer_to_ojson(const Integer& x)
{
    if (x.fits_slong_p())
        return ordered_json(x.get_si());
    return ordered_json(to_string(x));
}

ordered_json polytope_to_ojson(const HPolytope& P)
{
    ordered_json jA = ordered_json::array();
    for (int i = 0; i < P.facets(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < P.dim(); ++j)
            row.push_back(integer_to_ojson(P.A.at(i, j)));
        jA.push_back(std::move(row));
    }
    ordered_json jb = ordered_json::array();
    for (const Integer& x : P.b)
        jb.push_back(integer_to_ojson(x));
    return ordered_json{{"A", std::move(jA)}, {"b", std::move(jb)}};
}

ordered_json ratvec_to_ojson(const RatVec& v)
{
    ordered_json out = ordered_json::array();
    for (const Rational& x : v)
        out.push_back(to_string(x));
    return out;
}

json parse_stream(std::istream& in, const char* what)
{
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed ") + what + " JSON: " + e.what());
    }
    return j;
}

ordered_json generators_to_ojson(const IntMat& G)
{
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < G.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < G.cols(); ++j)
            row.push_back(integer_to_ojson(G.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string generators_to_compact_string(const IntMat& G)
{
    std::string out = "[";
    for (int i = 0; i < G.rows(); ++i) {
        if (i > 0)
            out += ",";
        out += "[";
        for (int j = 0; j < G.cols(); ++j) {
            if (j > 0)
                out += ",";
            out += to_string(G.at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

} // namespace

PolytopeInput read_polytope_json(std::istream& in)
{
    const json j = parse_stream(in, "polytope");
    if (!j.is_object() || !j.contains("A") || !j.contains("b"))
        throw UsageError("polytope JSON must be an object with \"A\" and \"b\"");
    const json& jA = j["A"];
    const json& jb = j["b"];
    if (!jA.is_array() || jA.empty() || !jb.is_array() || jA.size() != jb.size())
        throw UsageError("polytope JSON: \"A\" and \"b\" must be arrays of equal positive length");

    const std::size_t m = jA.size();
    const std::size_t n = jA[0].is_array() ? jA[0].size() : 0;
    if (n == 0)
        throw UsageError("polytope JSON: rows of \"A\" must be non-empty arrays");

    PolytopeInput out;
    out.A = RatMat(static_cast<int>(m), static_cast<int>(n));
    out.b.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!jA[i].is_array() || jA[i].size() != n)
            throw UsageError("polytope JSON: ragged matrix \"A\"");
        for (std::size_t c = 0; c < n; ++c)
            out.A.at(static_cast<int>(i), static_cast<int>(c)) = json_to_rational(jA[i][c]);
        out.b[i] = json_to_rational(jb[i]);
    }
    return out;
}

std::string polytope_to_json(const HPolytope& P)
{
    return polytope_to_ojson(P).dump(2);
}

std::string certificate_to_json(const Certificate& cert, const HPolytope& P,
                                const RatVec& translation)
{
    ordered_json jpairs = ordered_json::array();
    for (const CertificatePair& pr : cert.pairs) {
        ordered_json z = ordered_json::array();
        for (const Integer& x : pr.z)
            z.push_back(integer_to_ojson(x));
        jpairs.push_back(ordered_json{{"facet", pr.facet}, {"z", std::move(z)}});
    }
    ordered_json j{
        {"mu", to_string(cert.mu)},
        {"point", ratvec_to_ojson(cert.last_covered)},
        {"pairs", std::move(jpairs)},
        {"lbar_size", integer_to_ojson(cert.lbar_size)},
        {"bounds",
         ordered_json{{"mu0", to_string(cert.bounds_used.mu0)},
                      {"beta0", to_string(cert.bounds_used.beta0)},
                      {"beta", to_string(cert.bounds_used.beta)},
                      {"alpha", to_string(cert.bounds_used.alpha)},
                      {"inf_norm", integer_to_ojson(cert.bounds_used.inf_norm)}}},
        {"polytope", polytope_to_ojson(P)},
        {"translation", ratvec_to_ojson(translation)},
    };
    return j.dump(2);
}

Certificate certificate_from_json(std::istream& in)
{
    const json j = parse_stream(in, "certificate");
    if (!j.is_object())
        throw UsageError("certificate JSON must be an object");
    for (const char* key : {"mu", "point", "pairs", "lbar_size", "bounds"})
        if (!j.contains(key))
            throw UsageError(std::string("certificate JSON missing \"") + key + "\"");

    Certificate cert;
    cert.mu = json_to_rational(j["mu"]);
    for (const json& x : j["point"])
        cert.last_covered.push_back(json_to_rational(x));
    for (const json& p : j["pairs"]) {
        if (!p.is_object() || !p.contains("facet") || !p.contains("z") ||
            !p["facet"].is_number_integer())
            throw UsageError("certificate JSON: each pair needs an integer \"facet\" and \"z\"");
        CertificatePair pr;
        pr.facet = p["facet"].get<int>();
        for (const json& x : p["z"])
            pr.z.push_back(json_to_integer(x));
        cert.pairs.push_back(std::move(pr));
    }
    cert.lbar_size = json_to_integer(j["lbar_size"]);
    const json& b = j["bounds"];
    for (const char* key : {"mu0", "beta0", "beta", "alpha", "inf_norm"})
        if (!b.contains(key))
            throw UsageError(std::string("certificate JSON: bounds missing \"") + key + "\"");
    cert.bounds_used.mu0 = json_to_rational(b["mu0"]);
    cert.bounds_used.beta0 = json_to_rational(b["beta0"]);
    cert.bounds_used.beta = json_to_rational(b["beta"]);
    cert.bounds_used.alpha = json_to_rational(b["alpha"]);
    cert.bounds_used.inf_norm = json_to_integer(b["inf_norm"]);
    return cert;
}

std::string scan_records_csv(const std::vector<ScanRecord>& records)
{
    std::string out = "v1,v2,v3,generators,mu,width,verdict,spectrum\n";
    for (const ScanRecord& r : records) {
        out += to_string(r.v.v[0]) + "," + to_string(r.v.v[1]) + "," + to_string(r.v.v[2]);
        out += ",\"" + generators_to_compact_string(r.generators) + "\"";
        out += "," + to_string(r.mu);
        out += "," + to_string(r.width);
        out += "," + verdict_str(r.verdict);
        out += ",\"" + r.spectrum.str() + "\"\n";
    }
    return out;
}

std::string scan_result_json(const ScanResult& result)
{
    ordered_json jrecords = ordered_json::array();
    for (const ScanRecord& r : result.records) {
        ordered_json v = ordered_json::array();
        for (const Integer& x : r.v.v)
            v.push_back(integer_to_ojson(x));
        jrecords.push_back(ordered_json{
            {"v", std::move(v)},
            {"generators", generators_to_ojson(r.generators)},
            {"mu", to_string(r.mu)},
            {"width", integer_to_ojson(r.width)},
            {"verdict", verdict_str(r.verdict)},
            {"spectrum",
             ordered_json{{"label", r.spectrum.str()},
                          {"m", r.spectrum.m},
                          {"j", r.spectrum.j},
                          {"exception", r.spectrum.exception}}},
        });
    }
    ordered_json jreduction = ordered_json::array();
    for (const ReductionEntry& e : result.reduction) {
        ordered_json v = ordered_json::array();
        for (const Integer& x : e.v.v)
            v.push_back(integer_to_ojson(x));
        ordered_json entry{{"v", std::move(v)}};
        switch (e.status) {
        case ReductionStatus::dismissed_coprime:
            entry["status"] = "dismissed_coprime";
            entry["pair"] = ordered_json::array(
                {integer_to_ojson(e.v.v[e.pair_i]), integer_to_ojson(e.v.v[e.pair_j])});
            entry["ell"] = integer_to_ojson(e.ell);
            break;
        case ReductionStatus::settled_by_volume:
            entry["status"] = "settled_by_volume";
            break;
        case ReductionStatus::survivor:
            entry["status"] = "survivor";
            break;
        }
        jreduction.push_back(std::move(entry));
    }
    return ordered_json{{"records", std::move(jrecords)}, {"reduction", std::move(jreduction)}}
        .dump(2);
}

} // namespace covrad
