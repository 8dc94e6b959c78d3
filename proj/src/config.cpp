#include "gravent/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "gravent/errors.hpp"

namespace gravent {
namespace {

struct Entry {
    std::string section;
    std::string key;
    std::string value;
    bool quoted = false;
    int line = 0;

    std::string qualified() const { return section.empty() ? key : section + "." + key; }
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Removes a trailing '#' or ';' comment that is not inside double quotes.
std::string_view strip_comment(std::string_view s) {
    bool in_quotes = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_quotes = !in_quotes;
        if (!in_quotes && (s[i] == '#' || s[i] == ';')) return s.substr(0, i);
    }
    return s;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
    return true;
}

struct Section {
    std::string name;
    int line = 0;
};

std::vector<Entry> tokenize(std::string_view text, std::vector<Section>* sections = nullptr) {
    std::vector<Entry> entries;
    std::set<std::string> seen;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const auto line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("unterminated section header", {}, line_no);
            const auto name = trim(line.substr(1, line.size() - 2));
            if (!is_identifier(name)) throw ConfigError("invalid section name", std::string(name), line_no);
            section = std::string(name);
            if (!seen.insert("[" + section + "]").second)
                throw ConfigError("duplicate section", section, line_no);
            if (sections) sections->push_back({section, line_no});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", {}, line_no);
        const auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (!is_identifier(key)) throw ConfigError("invalid key", std::string(key), line_no);

        Entry e{section, std::string(key), {}, false, line_no};
        if (!value.empty() && value.front() == '"') {
            if (value.size() < 2 || value.back() != '"')
                throw ConfigError("unterminated string", e.qualified(), line_no);
            e.value = std::string(value.substr(1, value.size() - 2));
            e.quoted = true;
        } else {
            if (value.empty()) throw ConfigError("missing value", e.qualified(), line_no);
            e.value = std::string(value);
        }
        if (!seen.insert(e.qualified()).second) throw ConfigError("duplicate key", e.qualified(), line_no);
        entries.push_back(std::move(e));
    }
    return entries;
}

double as_number(const Entry& e) {
    std::string_view v = e.value;
    if (!v.empty() && v.front() == '+') v.remove_prefix(1);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (e.quoted || ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out))
        throw ConfigError("expected a finite number, got '" + e.value + "'", e.key, e.line);
    return out;
}

std::size_t as_count(const Entry& e) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), out);
    if (e.quoted || ec != std::errc{} || ptr != e.value.data() + e.value.size())
        throw ConfigError("expected a non-negative integer, got '" + e.value + "'", e.key, e.line);
    return out;
}

bool as_bool(const Entry& e) {
    if (!e.quoted && e.value == "true") return true;
    if (!e.quoted && e.value == "false") return false;
    throw ConfigError("expected true or false, got '" + e.value + "'", e.key, e.line);
}

void require_positive(const Entry& e, double v) {
    if (!(v > 0.0)) throw ConfigError("must be positive", e.key, e.line);
}

void require_non_negative(const Entry& e, double v) {
    if (v < 0.0) throw ConfigError("must be non-negative", e.key, e.line);
}

struct Parsed {
    std::optional<Mode> mode;
    RunConfig config;
    std::array<bool, kParameterCount> system_set{};
};

void apply_constants(const Entry& e, PhysicalConstants& c) {
    const double v = as_number(e);
    if (e.key == "G") {
        require_positive(e, v);
        c.G = v;
    } else if (e.key == "hbar") {
        require_non_negative(e, v);
        c.hbar = v;
    } else {
        throw ConfigError("unknown key", e.key, e.line);
    }
}

void apply_system(const Entry& e, Parsed& p) {
    SystemParams& s = p.config.system;
    const double v = as_number(e);
    if (e.key == "r1" || e.key == "r2") {
        require_non_negative(e, v);
        (e.key == "r1" ? s.r1 : s.r2) = v;
        return;
    }
    const auto param = parameter_from_string(e.key);
    if (!param) throw ConfigError("unknown key", e.key, e.line);
    if (*param == Parameter::kTau)
        require_non_negative(e, v);
    else
        require_positive(e, v);
    s.set(*param, v);
    p.system_set[static_cast<std::size_t>(*param)] = true;
}

void apply_model(const Entry& e, RunConfig& c) {
    if (e.key == "regime_threshold") {
        const double v = as_number(e);
        require_positive(e, v);
        c.model.regime_threshold = v;
    } else if (e.key == "symmetrize_force") {
        c.model.symmetrize_force = as_bool(e);
    } else if (e.key == "max_points") {
        c.max_points = as_count(e);
        if (c.max_points == 0) throw ConfigError("must be at least 1", e.key, e.line);
    } else if (e.key == "threads") {
        c.threads = static_cast<int>(as_count(e));
    } else {
        throw ConfigError("unknown key", e.key, e.line);
    }
}

void apply_output(const Entry& e, OutputSpec& o) {
    if (e.key == "path") {
        o.path = e.value;
    } else if (e.key == "format") {
        const auto f = format_from_string(e.value);
        if (!f) throw ConfigError("expected csv or json, got '" + e.value + "'", e.key, e.line);
        o.format = *f;
    } else if (e.key == "precision") {
        const auto v = as_count(e);
        if (v < 1 || v > 17) throw ConfigError("must be between 1 and 17", e.key, e.line);
        o.precision = static_cast<int>(v);
    } else {
        throw ConfigError("unknown key", e.key, e.line);
    }
}

void apply_axis(const Entry& e, Parameter param, Axis& axis, std::array<bool, 2>& ends) {
    if (e.key == "start" || e.key == "stop") {
        const double v = as_number(e);
        if (param == Parameter::kTau)
            require_non_negative(e, v);
        else
            require_positive(e, v);
        (e.key == "start" ? axis.start : axis.stop) = v;
        ends[e.key == "start" ? 0 : 1] = true;
    } else if (e.key == "count") {
        axis.count = as_count(e);
        if (axis.count < 1) throw ConfigError("must be at least 1", e.key, e.line);
    } else if (e.key == "spacing") {
        if (e.value == "linear")
            axis.spacing = Spacing::kLinear;
        else if (e.value == "log")
            axis.spacing = Spacing::kLog;
        else
            throw ConfigError("expected linear or log, got '" + e.value + "'", e.key, e.line);
    } else {
        throw ConfigError("unknown key", e.key, e.line);
    }
}

Parsed parse(std::string_view text) {
    Parsed p;
    std::array<std::array<bool, 2>, kParameterCount> axis_ends{};
    std::array<int, kParameterCount> axis_line{};
    std::vector<Section> sections;
    const auto entries = tokenize(text, &sections);
    for (const Section& sec : sections) {
        static constexpr std::string_view kKnown[] = {"system", "constants", "model", "output"};
        const bool known = std::find(std::begin(kKnown), std::end(kKnown), sec.name) != std::end(kKnown);
        const bool sweep = sec.name.starts_with("sweep.") &&
                           parameter_from_string(std::string_view(sec.name).substr(6)).has_value();
        if (!known && !sweep)
            throw ConfigError(sec.name.starts_with("sweep.") ? "unknown sweep parameter" : "unknown section",
                              sec.name, sec.line);
        if (sweep) {
            const auto idx = static_cast<std::size_t>(*parameter_from_string(std::string_view(sec.name).substr(6)));
            p.config.sweep[idx].emplace();
            axis_line[idx] = sec.line;
        }
    }
    for (const Entry& e : entries) {
        if (e.section.empty()) {
            if (e.key != "mode") throw ConfigError("unknown key", e.key, e.line);
            p.mode = mode_from_string(e.value);
            if (!p.mode)
                throw ConfigError("expected report, sweep or tau-star, got '" + e.value + "'", e.key, e.line);
        } else if (e.section == "system") {
            apply_system(e, p);
        } else if (e.section == "constants") {
            apply_constants(e, p.config.constants);
        } else if (e.section == "model") {
            apply_model(e, p.config);
        } else if (e.section == "output") {
            apply_output(e, p.config.output);
        } else if (e.section.starts_with("sweep.")) {
            const auto param = parameter_from_string(std::string_view(e.section).substr(6));
            const auto idx = static_cast<std::size_t>(*param);
            apply_axis(e, *param, *p.config.sweep[idx], axis_ends[idx]);
        } else {
            throw ConfigError("unknown section", e.section, e.line);
        }
    }
    for (std::size_t i = 0; i < kParameterCount; ++i) {
        if (!p.config.sweep[i]) continue;
        const std::string name = "sweep." + std::string(to_string(static_cast<Parameter>(i)));
        if (!axis_ends[i][0]) throw ConfigError("missing start", name, axis_line[i]);
        if (!axis_ends[i][1]) throw ConfigError("missing stop", name, axis_line[i]);
        if (p.system_set[i])
            throw ConfigError("parameter is both fixed in [system] and swept", name, axis_line[i]);
    }
    return p;
}

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::kReport: return "report";
        case Mode::kSweep: return "sweep";
        case Mode::kTauStar: return "tau-star";
    }
    return "unknown";
}

std::string_view to_string(OutputFormat format) {
    return format == OutputFormat::kCsv ? "csv" : "json";
}

std::optional<Mode> mode_from_string(std::string_view text) {
    if (text == "report") return Mode::kReport;
    if (text == "sweep") return Mode::kSweep;
    if (text == "tau-star") return Mode::kTauStar;
    return std::nullopt;
}

std::optional<OutputFormat> format_from_string(std::string_view text) {
    if (text == "csv") return OutputFormat::kCsv;
    if (text == "json") return OutputFormat::kJson;
    return std::nullopt;
}

SweepSpec RunConfig::sweep_spec() const {
    SweepSpec spec;
    spec.base = system;
    spec.axes = sweep;
    spec.constants = constants;
    spec.options = model;
    spec.max_points = max_points;
    return spec;
}

RunConfig parse_config(std::string_view text, std::optional<Mode> mode_override) {
    Parsed p = parse(text);
    if (mode_override) p.mode = mode_override;
    if (!p.mode) throw ConfigError("missing required key", "mode");
    p.config.mode = *p.mode;

    // Required system values: tau is not needed for tau-star; swept values
    // need not be fixed.
    for (std::size_t i = 0; i < kParameterCount; ++i) {
        const auto param = static_cast<Parameter>(i);
        if (p.system_set[i]) continue;
        if (param == Parameter::kTau && p.config.mode == Mode::kTauStar) continue;
        if (p.config.mode == Mode::kSweep && p.config.sweep[i]) continue;
        throw ConfigError("missing required key", std::string(to_string(param)));
    }
    validate(p.config);
    return p.config;
}

void apply_constants_document(RunConfig& config, std::string_view text) {
    for (const Entry& e : tokenize(text)) {
        if (!e.section.empty() && e.section != "constants")
            throw ConfigError("only [constants] is allowed in a constants document", e.section, e.line);
        apply_constants(e, config.constants);
    }
}

void validate(const RunConfig& config) {
    try {
        validate(config.constants);
        if (config.mode == Mode::kSweep) {
            const SweepSpec spec = config.sweep_spec();
            spec.validate();
        }
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (config.output.precision < 1 || config.output.precision > 17)
        throw ConfigError("must be between 1 and 17", "precision");
    if (!(config.model.regime_threshold > 0.0)) throw ConfigError("must be positive", "regime_threshold");
}

}  // namespace gravent
