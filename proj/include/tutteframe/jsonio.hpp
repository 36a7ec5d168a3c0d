#pragma once

#include <json.hpp>

#include "tutteframe/flatexpand.hpp"

namespace tutteframe {

using json = nlohmann::ordered_json;

// {"n":…, "r":…, "terms":[{"i":…, "j":…, "c":"<int or p/q>"}]}, (i, j) sorted.
inline json polynomial_to_json(const Bivariate& p, int n, int r) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({{"i", key.first}, {"j", key.second}, {"c", c.to_string()}});
    return json{{"n", n}, {"r", r}, {"terms", std::move(terms)}};
}

inline Bivariate polynomial_from_json(const json& j, int* n_out = nullptr, int* r_out = nullptr) {
    if (n_out) *n_out = j.at("n").get<int>();
    if (r_out) *r_out = j.at("r").get<int>();
    Bivariate p;
    for (const auto& term : j.at("terms"))
        p.add_term(term.at("i").get<int>(), term.at("j").get<int>(),
                   Rational::from_string(term.at("c").get<std::string>()));
    return p;
}

inline json big_to_json(const BigInt& v) {
    if (v.fits_int64()) return json(v.to_int64());
    return json(v.to_string());
}

inline json catenary_to_json(const CatenaryData& data) {
    json list = json::array();
    for (const auto& [a, count] : data.nu)
        list.push_back({{"composition", a.parts}, {"nu", big_to_json(count)}});
    return list;
}

inline json tensor_to_json(const FlatTensor& tensor, bool unsigned_values = false) {
    json entries = json::array();
    for (const auto& [key, value] : tensor.entries) {
        auto [k, m, t] = key;
        entries.push_back({{"k", k}, {"m", m}, {"t", t},
                           {"f", big_to_json(unsigned_values ? value.abs() : value)}});
    }
    return json{{"n", tensor.n}, {"r", tensor.r}, {"entries", std::move(entries)}};
}

inline json f_tableau_to_json(const FTableau& f, bool unsigned_values = false) {
    json entries = json::array();
    for (const auto& [key, value] : f.entries)
        entries.push_back({{"i", key.first}, {"j", key.second},
                           {"F", big_to_json(unsigned_values ? value.abs() : value)}});
    return json{{"n", f.n}, {"r", f.r}, {"entries", std::move(entries)}};
}

// Frame-element decomposition: T(U) coefficient plus per-(k, h) tau terms.
inline json frame_decomposition_to_json(const Composition& a) {
    int loops = a.a(0);
    std::vector<int> parts = a.parts;
    parts[0] = 0;
    Composition az(parts);
    FrameCoefficients fc = frame_coefficients(az);
    int r = az.r();
    std::vector<int> xi = partial_sums(az);
    json terms = json::array();
    for (int k = 1; k <= r - 1; ++k)
        for (int h = 0; h <= k - 1; ++h) {
            int alpha = xi[k - h] - k - 1;
            if (alpha < 0) continue;
            Rational c = fc.interior(k, h);
            if (h % 2) c = -c;
            terms.push_back({{"k", k}, {"h", h},
                             {"coefficient", c.to_string()},
                             {"x_exponent", r - k - 1},
                             {"tau_d", k + 1}, {"tau_alpha", alpha}});
        }
    return json{{"loops", loops},
                {"tutte_uniform_r", r},
                {"tutte_uniform_n", az.n()},
                {"tutte_uniform_coefficient", (r >= 1 ? fc.f[r] : Rational(1)).to_string()},
                {"terms", std::move(terms)}};
}

// Text rendering of a flat tensor: the diagonal tableau (rows r-k-t, columns
// m-k-t, several entries may share a cell) followed by a legend.
inline std::string render_tensor_text(const FlatTensor& tensor, bool unsigned_values = false) {
    std::map<std::pair<int, int>, std::string> cells;
    int max_row = 0, max_col = 0;
    for (const auto& [key, value] : tensor.entries) {
        auto [k, m, t] = key;
        if (m == k) continue;
        int row = tensor.r - k - t, col = m - k - t;
        std::string text = (unsigned_values ? value.abs() : value).to_string();
        auto& cell = cells[{row, col}];
        cell = cell.empty() ? text : cell + "|" + text;
        max_row = std::max(max_row, row);
        max_col = std::max(max_col, col);
    }
    std::vector<std::size_t> width(max_col + 1, 1);
    for (const auto& [pos, text] : cells) width[pos.second] = std::max(width[pos.second], text.size());
    std::ostringstream os;
    for (int row = 0; row <= max_row; ++row) {
        std::string line;
        for (int col = 0; col <= max_col; ++col) {
            if (col) line += ' ';
            auto it = cells.find({row, col});
            std::string text = it == cells.end() ? "." : it->second;
            line += std::string(width[col] - text.size(), ' ') + text;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    os << "legend (k, m, t -> f):\n";
    for (const auto& [key, value] : tensor.entries) {
        auto [k, m, t] = key;
        os << "  f[" << k << "," << m << "," << t << "] = "
           << (unsigned_values ? value.abs() : value).to_string();
        if (m == k) os << "  (auxiliary)";
        os << "\n";
    }
    return os.str();
}

inline std::string render_polynomial(const Bivariate& p, int n, int r, const std::string& format) {
    if (format == "tableau" || format == "text") return render_tableau_text(p, r);
    if (format == "json") return polynomial_to_json(p, n, r).dump(2) + "\n";
    if (format == "poly") return p.to_poly_string() + "\n";
    throw parse_error("unknown format '" + format + "' (expected tableau, json or poly)");
}

// Spec-facing alias: tableau rendering of a polynomial with rows 0..r.
inline std::string render_tableau(const Bivariate& p, int n, int r, const std::string& format = "text") {
    if (p.x_degree() > r) throw invalid_error("render_tableau: x-degree exceeds r");
    return render_polynomial(p, n, r, format == "text" ? "tableau" : format);
}

}  // namespace tutteframe
