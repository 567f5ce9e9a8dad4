#pragma once

#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ozeta/dirichlet.hpp"
#include "ozeta/series.hpp"
#include "ozeta/weil.hpp"

namespace ozeta::io {

/// Uniform tabular result: one row per degree (or index), one or more exact
/// values per row rendered as decimal strings (rationals as "a/b"). All
/// numeric payloads are strings so arbitrarily large coefficients survive any
/// JSON reader.
struct ResultTable {
    std::string command;
    std::map<std::string, std::string> params;
    std::string row_label = "degree";
    std::vector<std::string> columns;
    std::vector<std::pair<unsigned, std::vector<std::string>>> rows;
};

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::vector<std::string> zpoly_strings(const Polynomial& p, int pad_degree) {
    std::vector<std::string> out;
    int top = std::max(p.degree(), pad_degree);
    for (int i = 0; i <= top; ++i) out.push_back(rat_str(p.coeff(static_cast<std::size_t>(i))));
    return out;
}

inline ResultTable table_of_series(const std::string& command, const QSeries& s,
                                   const std::string& column = "coefficient") {
    ResultTable t;
    t.command = command;
    t.columns = {column};
    for (unsigned k = 0; k <= s.order(); ++k) t.rows.push_back({k, {rat_str(s.coeff(k))}});
    return t;
}

inline ResultTable table_of_zseries(const std::string& command, const ZPolySeries& s) {
    ResultTable t;
    t.command = command;
    int top = 0;
    for (unsigned k = 0; k <= s.order(); ++k) top = std::max(top, s.coeff(k).degree());
    for (int i = 0; i <= top; ++i) t.columns.push_back("z^" + std::to_string(i));
    for (unsigned k = 0; k <= s.order(); ++k)
        t.rows.push_back({k, zpoly_strings(s.coeff(k), top)});
    return t;
}

inline ResultTable table_of_dirichlet(const std::string& command, const DirichletSeries& d) {
    ResultTable t;
    t.command = command;
    t.row_label = "n";
    t.columns = {"a_n"};
    for (unsigned n = 1; n <= d.bound(); ++n) t.rows.push_back({n, {rat_str(d.a(n))}});
    return t;
}

inline nlohmann::json to_json(const ResultTable& t) {
    nlohmann::json j;
    j["command"] = t.command;
    j["params"] = t.params;
    j["row_label"] = t.row_label;
    j["columns"] = t.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [deg, vals] : t.rows) {
        nlohmann::json row;
        row[t.row_label] = std::to_string(deg);
        nlohmann::json v = nlohmann::json::array();
        for (const auto& s : vals) v.push_back(s);
        row["values"] = v;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

inline ResultTable table_from_json(const nlohmann::json& j) {
    ResultTable t;
    t.command = j.at("command").get<std::string>();
    if (j.contains("params"))
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            t.params[it.key()] = it.value().get<std::string>();
    t.row_label = j.value("row_label", std::string("degree"));
    for (const auto& c : j.at("columns")) t.columns.push_back(c.get<std::string>());
    for (const auto& row : j.at("rows")) {
        unsigned deg = static_cast<unsigned>(std::stoul(row.at(t.row_label).get<std::string>()));
        std::vector<std::string> vals;
        for (const auto& v : row.at("values")) vals.push_back(v.get<std::string>());
        t.rows.push_back({deg, vals});
    }
    return t;
}

inline void render_text(const ResultTable& t, std::ostream& os) {
    os << "# " << t.command;
    for (const auto& [k, v] : t.params) os << " " << k << "=" << v;
    os << "\n";
    std::size_t label_w = std::max<std::size_t>(t.row_label.size(), 6);
    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        std::size_t w = t.columns[c].size();
        for (const auto& [deg, vals] : t.rows)
            if (c < vals.size()) w = std::max(w, vals[c].size());
        widths.push_back(w);
    }
    os << std::setw(static_cast<int>(label_w)) << t.row_label;
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << "  " << std::setw(static_cast<int>(widths[c])) << t.columns[c];
    os << "\n";
    for (const auto& [deg, vals] : t.rows) {
        os << std::setw(static_cast<int>(label_w)) << deg;
        for (std::size_t c = 0; c < vals.size(); ++c)
            os << "  " << std::setw(static_cast<int>(widths[c])) << vals[c];
        os << "\n";
    }
}

inline void render_csv(const ResultTable& t, std::ostream& os) {
    os << t.row_label;
    for (const auto& c : t.columns) os << "," << c;
    os << "\n";
    for (const auto& [deg, vals] : t.rows) {
        os << deg;
        for (const auto& v : vals) os << "," << v;
        os << "\n";
    }
}

inline void render(const ResultTable& t, const std::string& format, std::ostream& os) {
    if (format == "text")
        render_text(t, os);
    else if (format == "json")
        os << to_json(t).dump(2) << "\n";
    else if (format == "csv")
        render_csv(t, os);
    else
        throw std::invalid_argument("unknown output format '" + format + "'");
}

/// First differing cell between two tables, if any: (row index, column,
/// got, want).
struct TableDiff {
    bool differs = false;
    unsigned degree = 0;
    std::string column, got, want;
};

inline TableDiff compare_tables(const ResultTable& got, const ResultTable& want) {
    TableDiff d;
    std::map<unsigned, std::vector<std::string>> wrows;
    for (const auto& [deg, vals] : want.rows) wrows[deg] = vals;
    for (const auto& [deg, vals] : got.rows) {
        auto it = wrows.find(deg);
        if (it == wrows.end()) continue;
        for (std::size_t c = 0; c < vals.size() && c < it->second.size(); ++c) {
            if (vals[c] != it->second[c]) {
                d.differs = true;
                d.degree = deg;
                d.column = c < got.columns.size() ? got.columns[c] : std::to_string(c);
                d.got = vals[c];
                d.want = it->second[c];
                return d;
            }
        }
    }
    return d;
}

}  // namespace ozeta::io
