#include "cobcalc/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cobcalc {

namespace {

using nlohmann::json;

json partition_array(const Partition& p) { return json(p.parts()); }

json coeff_object(const std::map<Partition, Rational, PartitionOrder>& coeffs) {
    json obj = json::object();
    for (const auto& [p, c] : coeffs) obj[p.str()] = fraction_str(c);
    return obj;
}

json parse_or_usage(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

std::map<Partition, Rational, PartitionOrder> coeffs_from(const json& obj) {
    if (!obj.is_object()) throw std::invalid_argument("\"coeffs\" must be an object");
    std::map<Partition, Rational, PartitionOrder> out;
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_string())
            throw std::invalid_argument("coefficients must be \"p/q\" strings");
        out.emplace(parse_partition(key), parse_rational(value.get<std::string>()));
    }
    return out;
}

int dim_from(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("missing integer \"dim\"");
    int dim = j["dim"].get<int>();
    if (dim < 0) throw std::invalid_argument("negative \"dim\"");
    return dim;
}

}  // namespace

std::string to_json_string(const CobordismClass& a) {
    json j;
    j["dim"] = a.dim();
    j["coeffs"] = coeff_object(a.chern_numbers());
    if (!a.label().empty()) j["label"] = a.label();
    return j.dump();
}

std::string to_json_string(const Functional& f) {
    json j;
    j["dim"] = f.dim();
    j["coeffs"] = coeff_object(f.coeffs());
    if (!f.label().empty()) j["label"] = f.label();
    return j.dump();
}

std::string to_json_string(const ParametricFunctional& f) {
    json coeffs = json::object();
    for (const auto& [p, poly] : f.coeffs()) {
        json arr = json::array();
        for (const Rational& c : poly.coeffs()) arr.push_back(fraction_str(c));
        coeffs[p.str()] = arr;
    }
    json j;
    j["dim"] = f.dim();
    j["coeffs"] = coeffs;
    if (!f.label().empty()) j["label"] = f.label();
    return j.dump();
}

std::string to_json_string(const SurfaceModel& s) {
    json j;
    j["c1sq"] = fraction_str(s.c1sq);
    j["c2"] = fraction_str(s.c2);
    if (!s.label.empty()) j["label"] = s.label;
    return j.dump();
}

std::string to_json_string(const BundleModel& e) {
    json j;
    j["rank"] = e.rank;
    j["c2"] = fraction_str(e.c2);
    return j.dump();
}

std::string to_json_string(const VerifyReport& r) {
    json j;
    j["kind"] = ideal_kind_name(r.kind);
    j["dim"] = r.dim;
    json in_ideal = json::array();
    for (const Partition& p : r.in_ideal) in_ideal.push_back(partition_array(p));
    j["in_ideal"] = in_ideal;
    j["annihilator_dim"] = r.annihilator_dim;
    j["expected_dim"] = r.expected_dim;
    j["equal"] = r.equal;
    if (r.kind == IdealKind::chi_kernel) j["chi_y_vanishes"] = r.chi_y_vanishes;
    if (r.witness) j["witness"] = json::parse(to_json_string(*r.witness));
    if (!r.message.empty()) j["message"] = r.message;
    return j.dump();
}

std::string to_json_string(const UnboundedReport& r) {
    json j;
    if (!r.functional_label.empty()) j["functional"] = r.functional_label;
    j["rejected"] = r.rejected;
    if (r.rejected) {
        json cert = json::array();
        for (const Rational& c : r.certificate) cert.push_back(fraction_str(c));
        j["chi_certificate"] = cert;
        return j.dump();
    }
    j["witness"] = partition_array(r.witness);
    j["base_value"] = fraction_str(r.base_value);
    json values = json::array();
    for (const auto& [d, v] : r.values) {
        json entry;
        entry["degree"] = d;
        entry["value"] = fraction_str(v);
        values.push_back(entry);
    }
    j["values"] = values;
    return j.dump();
}

CobordismClass class_from_json_string(std::string_view text) {
    json j = parse_or_usage(text);
    int dim = dim_from(j);
    auto coeffs = coeffs_from(j.value("coeffs", json::object()));
    std::string label = j.value("label", "");
    return CobordismClass(dim, std::move(coeffs), std::move(label));
}

Functional functional_from_json_string(std::string_view text) {
    json j = parse_or_usage(text);
    int dim = dim_from(j);
    auto coeffs = coeffs_from(j.value("coeffs", json::object()));
    std::string label = j.value("label", "");
    return Functional(dim, std::move(coeffs), std::move(label));
}

SurfaceModel surface_from_json_string(std::string_view text) {
    json j = parse_or_usage(text);
    if (!j.contains("c1sq") || !j["c1sq"].is_string() || !j.contains("c2") ||
        !j["c2"].is_string())
        throw std::invalid_argument("surface JSON needs \"c1sq\" and \"c2\" strings");
    SurfaceModel s;
    s.c1sq = parse_rational(j["c1sq"].get<std::string>());
    s.c2 = parse_rational(j["c2"].get<std::string>());
    s.label = j.value("label", "");
    return s;
}

BundleModel bundle_from_json_string(std::string_view text) {
    json j = parse_or_usage(text);
    if (!j.contains("rank") || !j["rank"].is_number_integer() || !j.contains("c2") ||
        !j["c2"].is_string())
        throw std::invalid_argument("bundle JSON needs integer \"rank\" and \"c2\" string");
    BundleModel e;
    e.rank = j["rank"].get<int>();
    if (e.rank < 2) throw std::invalid_argument("bundle rank must be >= 2");
    e.c2 = parse_rational(j["c2"].get<std::string>());
    return e;
}

}  // namespace cobcalc
