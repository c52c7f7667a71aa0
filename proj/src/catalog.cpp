#include "subdiv/catalog.hpp"

#include "subdiv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace subdiv {

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<SchemeRecord> standard_records() {
    // (a) is dual-symmetric, a_i = a_{1-i}, so a_3 = a_{-2} = -1/10.
    return {
        {"a", Mask(-2, {q(-1, 10), q(3, 10), q(4, 5), q(4, 5), q(3, 10), q(-1, 10)}), 0},
        {"b", Mask(-3, {q(-1, 20), q(1, 10), q(11, 20), q(4, 5), q(11, 20), q(1, 10), q(-1, 20)}), 1},
        {"c", Mask(-1, {q(1, 2), q(1), q(1, 2)}), 0},
        {"d", Mask(-2, {q(1, 8), q(4, 8), q(6, 8), q(4, 8), q(1, 8)}), 2},
    };
}

int line_of_offset(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

}  // namespace

Catalog::Catalog(std::vector<SchemeRecord> records) : records_(std::move(records)) {
    for (std::size_t i = 0; i < records_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (records_[i].name == records_[j].name) {
                throw DomainError("duplicate scheme name '" + records_[i].name + "' in catalog");
            }
        }
    }
}

const Catalog& Catalog::standard() {
    static const Catalog catalog(standard_records());
    return catalog;
}

Catalog Catalog::with(std::vector<SchemeRecord> extra) const {
    std::vector<SchemeRecord> all = records_;
    all.insert(all.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
    return Catalog(std::move(all));
}

bool Catalog::contains(const std::string& name) const {
    return std::any_of(records_.begin(), records_.end(),
                       [&](const SchemeRecord& r) { return r.name == name; });
}

const SchemeRecord& Catalog::get(const std::string& name) const {
    for (const auto& r : records_) {
        if (r.name == name) return r;
    }
    throw NotFoundError("unknown catalog scheme '" + name + "'");
}

const SchemeRecord& catalog_get(const std::string& name) { return Catalog::standard().get(name); }

std::string scheme_to_json(const SchemeRecord& record) {
    nlohmann::ordered_json j;
    j["name"] = record.name;
    j["support_min"] = record.mask.support_min();
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : record.mask.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    if (record.documented_smoothness) {
        j["smoothness"] = *record.documented_smoothness;
    } else {
        j["smoothness"] = nullptr;
    }
    return j.dump(2) + "\n";
}

SchemeRecord scheme_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const int line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("scheme file: JSON syntax error at line " + std::to_string(line) + ": " + e.what(),
                         "", line);
    }
    if (!j.is_object()) throw ParseError("scheme file: top level must be an object");

    auto require = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field)) {
            throw ParseError(std::string("scheme file: missing field '") + field + "'", field);
        }
        return j.at(field);
    };

    SchemeRecord rec;
    const auto& name = require("name");
    if (!name.is_string()) throw ParseError("scheme file: field 'name' must be a string", "name");
    rec.name = name.get<std::string>();

    const auto& smin = require("support_min");
    if (!smin.is_number_integer()) {
        throw ParseError("scheme file: field 'support_min' must be an integer", "support_min");
    }
    const int support_min = smin.get<int>();

    const auto& coeffs = require("coeffs");
    if (!coeffs.is_array() || coeffs.empty()) {
        throw ParseError("scheme file: field 'coeffs' must be a non-empty array", "coeffs");
    }
    RationalVector values(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const std::string field = "coeffs[" + std::to_string(k) + "]";
        if (!coeffs[k].is_string()) {
            throw ParseError("scheme file: " + field + " must be a rational string \"p/q\"", field);
        }
        try {
            values[static_cast<Eigen::Index>(k)] = parse_rational(coeffs[k].get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("scheme file: " + field + ": " + e.what(), field);
        }
    }
    rec.mask = Mask(support_min, std::move(values));

    if (j.contains("smoothness") && !j.at("smoothness").is_null()) {
        if (!j.at("smoothness").is_number_integer()) {
            throw ParseError("scheme file: field 'smoothness' must be an integer or null", "smoothness");
        }
        rec.documented_smoothness = j.at("smoothness").get<int>();
    }
    return rec;
}

SchemeRecord load_scheme(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scheme file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return scheme_from_json(buf.str());
}

void save_scheme(const SchemeRecord& record, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write scheme file '" + path.string() + "'");
    out << scheme_to_json(record);
    if (!out) throw IoError("write failed for scheme file '" + path.string() + "'");
}

SchemeRecord resolve_scheme(const std::string& source) {
    constexpr std::string_view prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) return catalog_get(source.substr(prefix.size()));
    return load_scheme(source);
}

}  // namespace subdiv
