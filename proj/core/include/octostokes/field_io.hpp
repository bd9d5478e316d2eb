#pragma once

#include "octostokes/field.hpp"

#include <filesystem>
#include <iosfwd>
#include <variant>

namespace octostokes {

/// A field whose scalar mode is only known at runtime (e.g. loaded from a
/// file). Pairing two AnyFields of different modes is a ModeMismatchError.
struct AnyField {
    std::variant<Field<ExactInt>, Field<double>> value;

    ScalarMode mode() const {
        return std::holds_alternative<Field<ExactInt>>(value) ? ScalarMode::exact
                                                              : ScalarMode::floating;
    }
};

/// Line-delimited JSON field format. The first record is the header
/// {"h": <number>, "mode": "exact"|"float"}; every following record is one
/// support point {"m": [8 ints], "c": [8 coefficients]}. Exact coefficients
/// are written as decimal strings; both strings and integral numbers are
/// accepted on input. Records are written in lexicographic index order.
AnyField load_field(const std::filesystem::path& path);
AnyField read_field(std::istream& in, const std::string& origin);

void save_field(const std::filesystem::path& path, const Field<ExactInt>& field);
void save_field(const std::filesystem::path& path, const Field<double>& field);
void write_field(std::ostream& out, const Field<ExactInt>& field);
void write_field(std::ostream& out, const Field<double>& field);

} // namespace octostokes
