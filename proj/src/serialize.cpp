#include "gravent/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <variant>

#include <json.hpp>

#include "gravent/errors.hpp"

namespace gravent {
namespace {

using Value = std::variant<std::size_t, double, bool, std::string>;
constexpr std::size_t kColumns = kRowColumns.size();

std::array<Value, kColumns> fields(const SweepRow& r) {
    const auto& p = r.params;
    return {r.index, p.m1, p.m2, p.r1, p.r2, p.omega1, p.omega2, p.d, p.tau,
            r.ratio_x, r.in_regime, r.threshold,
            r.delta_phi, r.purity_full, r.purity_reduced, r.epsilon,
            r.entropy_nats, r.entropy_bits,
            r.separable_by_measures, r.paper_condition_violated, r.condition_discrepancy,
            r.force_as_printed, r.force_gradient, r.status};
}

// Pointers into a row, in column order.
struct Slots {
    std::array<double*, kColumns> number{};
    std::array<bool*, kColumns> flag{};
};

Slots slots(SweepRow& r) {
    auto& p = r.params;
    Slots s;
    s.number = {nullptr, &p.m1, &p.m2, &p.r1, &p.r2, &p.omega1, &p.omega2, &p.d, &p.tau,
                &r.ratio_x, nullptr, &r.threshold,
                &r.delta_phi, &r.purity_full, &r.purity_reduced, &r.epsilon,
                &r.entropy_nats, &r.entropy_bits,
                nullptr, nullptr, nullptr,
                &r.force_as_printed, &r.force_gradient, nullptr};
    s.flag[10] = &r.in_regime;
    s.flag[18] = &r.separable_by_measures;
    s.flag[19] = &r.paper_condition_violated;
    s.flag[20] = &r.condition_discrepancy;
    return s;
}

constexpr std::size_t kIndexColumn = 0;
constexpr std::size_t kStatusColumn = kColumns - 1;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

double parse_double(std::string_view text, std::string_view column) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("expected a number, got '" + std::string(text) + "'", std::string(column));
    return v;
}

bool parse_bool(std::string_view text, std::string_view column) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw ConfigError("expected true or false, got '" + std::string(text) + "'", std::string(column));
}

std::size_t parse_index(std::string_view text) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("expected an integer, got '" + std::string(text) + "'", "index");
    return v;
}

// Splits one CSV record; handles quoted fields with doubled quotes.
std::vector<std::string> split_record(std::string_view line, int line_no) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted) throw ConfigError("unterminated quoted field", {}, line_no);
    out.push_back(std::move(field));
    return out;
}

}  // namespace

std::string format_number(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", precision - 1, value);
    return buf;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows, int precision) {
    for (std::size_t c = 0; c < kColumns; ++c) out << (c ? "," : "") << kRowColumns[c];
    out << '\n';
    for (const SweepRow& row : rows) {
        const auto values = fields(row);
        for (std::size_t c = 0; c < kColumns; ++c) {
            if (c) out << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) out << format_number(v, precision);
                    else if constexpr (std::is_same_v<T, bool>) out << (v ? "true" : "false");
                    else if constexpr (std::is_same_v<T, std::string>) out << csv_escape(v);
                    else out << v;
                },
                values[c]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, std::span<const SweepRow> rows, int precision) {
    out << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << (r ? ",\n  {" : "\n  {");
        const auto values = fields(rows[r]);
        for (std::size_t c = 0; c < kColumns; ++c) {
            out << (c ? ", " : "") << '"' << kRowColumns[c] << "\": ";
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        out << (std::isfinite(v) ? format_number(v, precision) : "null");
                    else if constexpr (std::is_same_v<T, bool>) out << (v ? "true" : "false");
                    else if constexpr (std::is_same_v<T, std::string>) out << nlohmann::json(v).dump();
                    else out << v;
                },
                values[c]);
        }
        out << "}";
    }
    out << (rows.empty() ? "]\n" : "\n]\n");
}

std::vector<SweepRow> read_csv(std::string_view text) {
    std::vector<SweepRow> rows;
    int line_no = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        const auto cells = split_record(line, line_no);
        if (cells.size() != kColumns)
            throw ConfigError("expected " + std::to_string(kColumns) + " columns, got " +
                                  std::to_string(cells.size()), {}, line_no);
        if (!header_seen) {
            for (std::size_t c = 0; c < kColumns; ++c)
                if (cells[c] != kRowColumns[c])
                    throw ConfigError("unexpected header column '" + cells[c] + "'", {}, line_no);
            header_seen = true;
            continue;
        }
        SweepRow row;
        const Slots s = slots(row);
        for (std::size_t c = 0; c < kColumns; ++c) {
            if (c == kIndexColumn) row.index = parse_index(cells[c]);
            else if (c == kStatusColumn) row.status = cells[c];
            else if (s.flag[c]) *s.flag[c] = parse_bool(cells[c], kRowColumns[c]);
            else *s.number[c] = parse_double(cells[c], kRowColumns[c]);
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ConfigError("missing CSV header");
    return rows;
}

std::vector<SweepRow> read_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("expected a JSON array of rows");

    std::vector<SweepRow> rows;
    for (const auto& obj : doc) {
        if (!obj.is_object()) throw ConfigError("expected a JSON object per row");
        if (obj.size() != kColumns) throw ConfigError("row has " + std::to_string(obj.size()) + " fields");
        SweepRow row;
        const Slots s = slots(row);
        for (std::size_t c = 0; c < kColumns; ++c) {
            const std::string name(kRowColumns[c]);
            if (!obj.contains(name)) throw ConfigError("missing field", name);
            const auto& v = obj.at(name);
            try {
                if (c == kIndexColumn) row.index = v.get<std::size_t>();
                else if (c == kStatusColumn) row.status = v.get<std::string>();
                else if (s.flag[c]) *s.flag[c] = v.get<bool>();
                else *s.number[c] = v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
            } catch (const nlohmann::json::exception&) {
                throw ConfigError("field has the wrong type", name);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gravent
