#include "gwzeta/json_io.hpp"

#include <fstream>
#include <iostream>

namespace gwzeta {

Json encode_integer(const Integer& x) {
    if (fits_json_number(x)) return Json(x.get_si());
    return Json(x.get_str());
}

Integer decode_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        Integer v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &j.get_ref<const std::uint64_t&>());
        return v;
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw InconsistentData("not a decimal integer string: " + j.dump());
        }
    }
    throw InconsistentData("expected an exact integer (number or decimal string), got " + j.dump());
}

Json gw_to_json(const GwFq& x) {
    Json j;
    j["rank"] = encode_integer(x.rank());
    j["disc"] = x.disc();
    return j;
}

Json factors_to_json(const FactorList<GwFq>& factors) {
    Json arr = Json::array();
    for (const auto& f : factors) {
        Json j;
        j["weight"] = gw_to_json(f.weight);
        j["pole"] = gw_to_json(f.pole);
        j["mult"] = encode_integer(f.mult);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json report_to_json(const std::string& variety, const FqTag& f, int order, const ZetaReport& report,
                    const std::vector<std::pair<std::string, bool>>& checks) {
    Json j;
    j["schema"] = "enriched-zeta/1";
    j["q"] = f.q;
    j["variety"] = variety;
    j["order"] = order;
    Json coeffs = Json::array();
    for (int i = 0; i < order; ++i) coeffs.push_back(gw_to_json(report.enriched[i]));
    j["coefficients"] = std::move(coeffs);
    if (report.closed_form) j["closed_form"] = factors_to_json(*report.closed_form);
    if (!checks.empty()) {
        Json c;
        for (const auto& [name, ok] : checks) c[name] = ok;
        j["checks"] = std::move(c);
    }
    return j;
}

Variety variety_from_json(const Json& doc, const std::string& label) {
    if (!doc.is_object() || !doc.contains("q"))
        throw InconsistentData("variety document needs a \"q\" field");
    FqTag f = FqTag::make(to_long(decode_integer(doc.at("q")), "q"));
    if (doc.contains("counts")) {
        std::vector<Integer> table;
        for (const auto& entry : doc.at("counts")) table.push_back(decode_integer(entry));
        bool proper = doc.value("proper", true);
        return from_table(f, std::move(table), proper, label);
    }
    if (doc.contains("weil")) {
        WeilData w{f, {}};
        for (const auto& row : doc.at("weil")) {
            std::vector<Integer> coeffs;
            for (const auto& entry : row) coeffs.push_back(decode_integer(entry));
            w.q.emplace_back(std::move(coeffs));
        }
        for (const std::string& warning : weil_data_warnings(w))
            std::cerr << "warning: " << label << ": " << warning << "\n";
        return from_weil_data(w);
    }
    throw InconsistentData("variety document needs either \"counts\" or \"weil\"");
}

Variety load_variety_file(const std::string& path, long expected_q) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("JSON parse error in " + path + ": " + e.what());
    }
    Variety v = variety_from_json(doc, path);
    if (expected_q > 0 && v.field().q != expected_q)
        throw InconsistentData("file " + path + " is over F_" + std::to_string(v.field().q) +
                               " but --q " + std::to_string(expected_q) + " was given");
    return v;
}

}  // namespace gwzeta
