#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mrpot::report {

inline constexpr std::string_view schema_name = "mrpot-report";
inline constexpr int schema_version = 1;

/// Decimal places: 7 for atomic units, 8 for eV.
inline int decimals_for(std::string_view units) { return units == "eV" ? 8 : 7; }

inline std::string fixed(double v, int decimals)
{
    if (!std::isfinite(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    // avoid "-0.0000000"
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

inline std::string sci(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

/// RFC 4180 quoting: fields with a comma, quote or line break are quoted.
inline std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv_line(std::ostream& out, std::vector<std::string> const& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << '\n';
}

/// One analytic (and optionally numerical) energy for a state.
struct report_row
{
    std::string state_label;
    int n = 0;
    int l = 0;
    double inv_b = 0.0;
    double alpha = 0.0;
    std::string scheme;
    double energy_analytic = 0.0;
    std::optional<double> energy_numeric;
    std::optional<double> delta; ///< energy_analytic - energy_numeric
    std::string units;
    std::string error; ///< non-empty when the numerical solve failed
};

inline report_row with_numeric(report_row row, double numeric)
{
    row.energy_numeric = numeric;
    row.delta = row.energy_analytic - numeric;
    return row;
}

inline std::vector<std::string> const& report_columns()
{
    static std::vector<std::string> const cols{"state",  "n",              "l",      "inv_b", "alpha", "scheme",
                                               "energy_analytic", "energy_numeric", "delta", "units", "error"};
    return cols;
}

inline std::vector<std::string> to_fields(report_row const& r)
{
    int const d = decimals_for(r.units);
    return {r.state_label,
            std::to_string(r.n),
            std::to_string(r.l),
            fixed(r.inv_b, 4),
            fixed(r.alpha, 4),
            r.scheme,
            fixed(r.energy_analytic, d),
            r.energy_numeric ? fixed(*r.energy_numeric, d) : "",
            r.delta ? sci(*r.delta) : "",
            r.units,
            r.error};
}

inline nlohmann::ordered_json to_json(report_row const& r)
{
    nlohmann::ordered_json j;
    j["state"] = r.state_label;
    j["n"] = r.n;
    j["l"] = r.l;
    j["inv_b"] = r.inv_b;
    j["alpha"] = r.alpha;
    j["scheme"] = r.scheme;
    j["energy_analytic"] = r.energy_analytic;
    j["energy_numeric"] = r.energy_numeric ? nlohmann::ordered_json(*r.energy_numeric) : nullptr;
    j["delta"] = r.delta ? nlohmann::ordered_json(*r.delta) : nullptr;
    j["units"] = r.units;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

/// One cell of a reproduced published table, binding energy -E.
struct table_cell
{
    int table = 1;
    std::string molecule; ///< empty for the atomic-unit table
    std::string state_label;
    int n = 0;
    int l = 0;
    double inv_b = 0.0;
    double alpha = 0.0;
    std::string column;   ///< present | previous | numerov | <molecule>
    std::string method;   ///< how the value was computed
    double value = 0.0;
    std::string units;
    std::optional<double> published;
    std::string provenance; ///< "published" when a printed value exists, else "repo-generated"
};

inline std::vector<std::string> const& table_columns()
{
    static std::vector<std::string> const cols{"table",  "molecule", "state", "n",         "l",
                                               "inv_b",  "alpha",    "column", "method",   "binding_energy",
                                               "units",  "published", "delta_published", "provenance"};
    return cols;
}

inline std::vector<std::string> to_fields(table_cell const& c)
{
    int const d = decimals_for(c.units);
    return {std::to_string(c.table),
            c.molecule,
            c.state_label,
            std::to_string(c.n),
            std::to_string(c.l),
            fixed(c.inv_b, 3),
            fixed(c.alpha, 2),
            c.column,
            c.method,
            fixed(c.value, d),
            c.units,
            c.published ? fixed(*c.published, d) : "",
            c.published ? sci(c.value - *c.published) : "",
            c.provenance};
}

inline nlohmann::ordered_json to_json(table_cell const& c)
{
    nlohmann::ordered_json j;
    j["table"] = c.table;
    j["molecule"] = c.molecule.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.molecule);
    j["state"] = c.state_label;
    j["n"] = c.n;
    j["l"] = c.l;
    j["inv_b"] = c.inv_b;
    j["alpha"] = c.alpha;
    j["column"] = c.column;
    j["method"] = c.method;
    j["binding_energy"] = c.value;
    j["units"] = c.units;
    j["published"] = c.published ? nlohmann::ordered_json(*c.published) : nullptr;
    j["delta_published"] = c.published ? nlohmann::ordered_json(c.value - *c.published) : nullptr;
    j["provenance"] = c.provenance;
    return j;
}

/// Wraps rows in the versioned document envelope.
template <typename Row>
nlohmann::ordered_json document(std::string_view command, std::vector<Row> const& rows,
                                nlohmann::ordered_json summary = nlohmann::ordered_json::object())
{
    nlohmann::ordered_json doc;
    doc["schema"] = schema_name;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    auto& arr = doc["rows"] = nlohmann::ordered_json::array();
    for (auto const& r : rows) arr.push_back(to_json(r));
    doc["summary"] = std::move(summary);
    return doc;
}

template <typename Row>
void write_csv(std::ostream& out, std::vector<std::string> const& header, std::vector<Row> const& rows)
{
    write_csv_line(out, header);
    for (auto const& r : rows) write_csv_line(out, to_fields(r));
}

} // namespace mrpot::report
