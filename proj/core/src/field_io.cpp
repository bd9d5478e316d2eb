#include "octostokes/field_io.hpp"

#include "octostokes/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace octostokes {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_field(const std::string& origin, std::size_t line, const std::string& what) {
    throw FieldIoError(origin + ":" + std::to_string(line) + ": " + what);
}

json parse_line(const std::string& text, const std::string& origin, std::size_t line) {
    json record = json::parse(text, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
        bad_field(origin, line, "record is not a JSON object");
    }
    return record;
}

MultiIndex parse_index(const json& record, const std::string& origin, std::size_t line) {
    const auto it = record.find("m");
    if (it == record.end() || !it->is_array() || it->size() != 8) {
        bad_field(origin, line, "\"m\" must be an array of 8 integers");
    }
    MultiIndex m;
    for (std::size_t a = 0; a < 8; ++a) {
        const json& v = (*it)[a];
        if (!v.is_number_integer()) bad_field(origin, line, "\"m\" must hold integers");
        m.m[a] = v.get<std::int32_t>();
    }
    return m;
}

template <ScalarRing S>
S parse_coefficient(const json& v, const std::string& origin, std::size_t line);

template <>
ExactInt parse_coefficient<ExactInt>(const json& v, const std::string& origin,
                                     std::size_t line) {
    if (v.is_string()) {
        try {
            return ExactInt(v.get<std::string>());
        } catch (const std::exception&) {
            bad_field(origin, line, "coefficient string is not a decimal integer");
        }
    }
    if (v.is_number_integer()) return ExactInt(v.get<std::int64_t>());
    bad_field(origin, line, "exact coefficients must be integers or decimal strings");
}

template <>
double parse_coefficient<double>(const json& v, const std::string& origin, std::size_t line) {
    if (v.is_number()) return v.get<double>();
    bad_field(origin, line, "float coefficients must be JSON numbers");
}

template <ScalarRing S>
AnyField read_records(std::istream& in, S h, const std::string& origin, std::size_t line) {
    typename Field<S>::EntryMap entries;
    std::string text;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty()) continue;
        const json record = parse_line(text, origin, line);
        const MultiIndex m = parse_index(record, origin, line);
        const auto cit = record.find("c");
        if (cit == record.end() || !cit->is_array() || cit->size() != 8) {
            bad_field(origin, line, "\"c\" must be an array of 8 coefficients");
        }
        Octonion<S> v;
        for (std::size_t k = 0; k < 8; ++k) {
            v[k] = parse_coefficient<S>((*cit)[k], origin, line);
        }
        if (!entries.emplace(m, std::move(v)).second) {
            bad_field(origin, line, "duplicate lattice index " + m.str());
        }
    }
    try {
        return AnyField{Field<S>(std::move(h), std::move(entries))};
    } catch (const std::invalid_argument& e) {
        throw FieldIoError(origin + ": " + e.what());
    }
}

} // namespace

AnyField read_field(std::istream& in, const std::string& origin) {
    std::string text;
    std::size_t line = 0;
    do {
        if (!std::getline(in, text)) {
            throw FieldIoError(origin + ": missing header record");
        }
        ++line;
    } while (text.empty());

    const json header = parse_line(text, origin, line);
    const auto hit = header.find("h");
    const auto mit = header.find("mode");
    if (hit == header.end() || !hit->is_number() || mit == header.end() || !mit->is_string()) {
        bad_field(origin, line, "header must carry numeric \"h\" and string \"mode\"");
    }
    const std::string mode = mit->get<std::string>();
    if (mode == "exact") {
        if (hit->get<double>() != 1.0) {
            bad_field(origin, line, "exact mode requires h = 1");
        }
        return read_records<ExactInt>(in, ExactInt(1), origin, line);
    }
    if (mode == "float") {
        return read_records<double>(in, hit->get<double>(), origin, line);
    }
    bad_field(origin, line, "mode must be \"exact\" or \"float\"");
}

AnyField load_field(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FieldIoError("cannot open field file " + path.string());
    }
    return read_field(in, path.string());
}

namespace {

template <ScalarRing S>
void write_records(std::ostream& out, const Field<S>& field) {
    json header;
    if constexpr (is_exact_scalar_v<S>) {
        header["h"] = 1;
        header["mode"] = "exact";
    } else {
        header["h"] = field.lattice_constant();
        header["mode"] = "float";
    }
    out << header.dump() << '\n';
    for (const auto& [m, v] : field.entries()) {
        json record;
        record["m"] = m.m;
        json coeffs = json::array();
        for (std::size_t k = 0; k < 8; ++k) {
            if constexpr (is_exact_scalar_v<S>) {
                coeffs.push_back(v[k].str());
            } else {
                coeffs.push_back(v[k]);
            }
        }
        record["c"] = std::move(coeffs);
        out << record.dump() << '\n';
    }
}

} // namespace

void write_field(std::ostream& out, const Field<ExactInt>& field) { write_records(out, field); }
void write_field(std::ostream& out, const Field<double>& field) { write_records(out, field); }

namespace {

template <ScalarRing S>
void save_to(const std::filesystem::path& path, const Field<S>& field) {
    std::ofstream out(path);
    if (!out) {
        throw FieldIoError("cannot write field file " + path.string());
    }
    write_records(out, field);
    if (!out.good()) {
        throw FieldIoError("write failed for field file " + path.string());
    }
}

} // namespace

void save_field(const std::filesystem::path& path, const Field<ExactInt>& field) {
    save_to(path, field);
}
void save_field(const std::filesystem::path& path, const Field<double>& field) {
    save_to(path, field);
}

} // namespace octostokes
