#include "pspan/serialize.hpp"

#include <algorithm>

#include <json.hpp>

namespace pspan {

using nlohmann::json;

namespace {

json leading_to_json(const LeadingClass& lead) {
    json support = json::array();
    for (const auto& t : lead.support)
        support.push_back({t.i, t.j, t.k});
    return {{"filtration", lead.filtration}, {"support", support}};
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    json j = {{"M", cert.M},
              {"N", cert.N},
              {"sPrime", cert.sPrime},
              {"bound", cert.bound},
              {"filtration", cert.leading.filtration},
              {"support", leading_to_json(cert.leading)["support"]}};
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text); // throws json::parse_error on bad syntax
    if (!j.is_object())
        throw std::runtime_error("certificate: not a JSON object");
    for (const char* key : {"M", "N", "sPrime", "bound", "filtration", "support"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("certificate: missing field ") + key);

    Certificate cert;
    cert.M = j.at("M").get<std::uint64_t>();
    cert.N = j.at("N").get<std::uint64_t>();
    cert.sPrime = j.at("sPrime").get<std::uint64_t>();
    cert.bound = j.at("bound").get<std::int64_t>();
    cert.leading.filtration = j.at("filtration").get<std::uint64_t>();
    const json& support = j.at("support");
    if (!support.is_array())
        throw std::runtime_error("certificate: support must be an array");
    for (const auto& item : support) {
        if (!item.is_array() || item.size() != 3)
            throw std::runtime_error("certificate: support entries must be triples");
        BasisTriple t{item[0].get<std::int64_t>(), item[1].get<std::int64_t>(),
                      item[2].get<std::int64_t>()};
        if (!t.valid())
            throw std::runtime_error("certificate: support triple has entry < 1");
        cert.leading.support.push_back(t);
    }
    std::sort(cert.leading.support.begin(), cert.leading.support.end());
    if (std::adjacent_find(cert.leading.support.begin(),
                           cert.leading.support.end()) != cert.leading.support.end())
        throw std::runtime_error("certificate: duplicate support triple");
    if (cert.leading.support.empty())
        throw std::runtime_error("certificate: empty support");
    return cert;
}

std::string report_to_json(const BoundReport& rep) {
    json j = {{"m", rep.m},
              {"n", rep.n},
              {"lower", rep.lower},
              {"swUpper", rep.swUpper},
              {"restrictionUpper", rep.restrictionUpper},
              {"bestUpper", rep.bestUpper}};
    if (rep.exact)
        j["exact"] = *rep.exact;
    if (rep.bpUpper) {
        j["bpUpper"] = rep.bpUpper->first;
        j["certificate"] = json::parse(certificate_to_json(rep.bpUpper->second));
    }
    return j.dump(2);
}

BoundReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object())
        throw std::runtime_error("report: not a JSON object");
    for (const char* key : {"m", "n", "lower", "swUpper", "restrictionUpper", "bestUpper"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("report: missing field ") + key);
    BoundReport rep;
    rep.m = j.at("m").get<std::uint64_t>();
    rep.n = j.at("n").get<std::uint64_t>();
    rep.lower = j.at("lower").get<std::int64_t>();
    rep.swUpper = j.at("swUpper").get<std::int64_t>();
    rep.restrictionUpper = j.at("restrictionUpper").get<std::int64_t>();
    rep.bestUpper = j.at("bestUpper").get<std::int64_t>();
    if (j.contains("exact"))
        rep.exact = j.at("exact").get<std::int64_t>();
    if (j.contains("bpUpper")) {
        if (!j.contains("certificate"))
            throw std::runtime_error("report: bpUpper without certificate");
        rep.bpUpper = {j.at("bpUpper").get<std::int64_t>(),
                       certificate_from_json(j.at("certificate").dump())};
    }
    return rep;
}

} // namespace pspan
