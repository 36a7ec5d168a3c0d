#pragma once

#include "tutteframe/jsonio.hpp"

namespace tutteframe {

// A registered matroid with its pinned expectations. Provenance of every
// fixture is either "tabulated" (externally published value) or "oracle:<route>"
// (computed here by an independent route).
struct ZooEntry {
    std::string name;
    std::string spec;
    std::string note;

    struct TableauRow {
        int x_degree;
        int first_column;
        std::vector<long long> values;
    };
    std::vector<TableauRow> tableau_rows;  // complete rows when non-empty
    bool tableau_is_complete = false;      // rows cover every nonzero cell
    std::string tableau_provenance;

    std::vector<std::pair<std::vector<int>, long long>> catenary;  // composition -> nu
    bool catenary_is_complete = false;
    std::string catenary_provenance;

    struct TensorEntry {
        int k, m, t;
        long long value;
        bool compare_abs = false;  // printed unsigned in the source table
    };
    std::vector<TensorEntry> tensor;
    std::string tensor_provenance;

    long long mobius = -1;  // checked when >= 0
    std::string mobius_provenance;

    std::vector<std::string> routes;  // all pairwise-equal Tutte routes to run
};

// Route dispatch shared by the CLI and the zoo harness. "auto" picks the
// cheapest feasible route for the instance size.
inline Bivariate tutte_by_route(const Matroid& m, const std::string& route, int threads = 0,
                                int direct_cap = default_direct_cap(),
                                int filter_cap = default_filter_cap()) {
    if (route == "direct") return tutte_direct(m, threads, direct_cap);
    if (route == "delcon") {
        if (m.n() > 24) throw infeasible_error("delcon: n > 24; use the frame or ftensor route");
        return tutte_deletion_contraction(m);
    }
    if (route == "ginv") return tutte_via_sp(m, filter_cap);
    if (route == "frame") return tutte_via_frame(m);
    if (route == "ftensor") {
        int loops = m.count_loops();
        if (loops == 0) return tutte_from_tensor(flat_tensor(m));
        uint64_t keep = 0;
        for (int e = 1; e <= m.n(); ++e)
            if (m.rank(1ull << (e - 1)) == 1) keep |= 1ull << (e - 1);
        Bivariate t = tutte_from_tensor(flat_tensor(restrict_to(m, keep)));
        return t * Bivariate::monomial(0, loops);
    }
    if (route == "auto") {
        if (m.n() <= 16 && m.n() <= direct_cap) return tutte_direct(m, threads, direct_cap);
        return tutte_via_frame(m);
    }
    throw parse_error("unknown method '" + route + "' (direct, delcon, ginv, frame, ftensor, auto)");
}

inline std::vector<std::string> feasible_routes(const Matroid& m, int direct_cap = default_direct_cap(),
                                                int filter_cap = default_filter_cap()) {
    std::vector<std::string> out;
    if (m.n() <= direct_cap) out.push_back("direct");
    if (m.n() <= 24) out.push_back("delcon");
    if (m.n() <= filter_cap) out.push_back("ginv");
    out.push_back("frame");
    out.push_back("ftensor");
    return out;
}

inline const std::vector<ZooEntry>& zoo_entries() {
    static const std::vector<ZooEntry> entries = [] {
        std::vector<ZooEntry> z;

        {
            ZooEntry e;
            e.name = "u12";
            e.spec = "uniform:1,2";
            e.note = "smallest connected uniform matroid";
            e.tableau_rows = {{0, 1, {1}}, {1, 0, {1}}};
            e.tableau_is_complete = true;
            e.tableau_provenance = "oracle: corank-nullity enumeration";
            e.catenary = {{{0, 2}, 1}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "oracle: flag count";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "u313";
            e.spec = "uniform:3,13";
            e.note = "corner coefficients; t10 = t01 = 55 (tabulated 56 is a misprint)";
            e.tableau_rows = {{1, 0, {55}}, {2, 0, {10}}, {3, 0, {1}}};
            e.tableau_provenance = "oracle: corank-nullity enumeration";
            e.mobius = 66;
            e.mobius_provenance = "tabulated";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "u440";
            e.spec = "uniform:4,40";
            e.note = "large uniform backbone of the rank-4 projective computation";
            e.tableau_rows = {{0, 1, {8436, 7770, 7140, 6545, 5984, 5456, 4960, 4495, 4060, 3654,
                                      3276, 2925, 2600, 2300, 2024}},
                              {0, 32, {35, 20, 10, 4, 1}},
                              {1, 0, {8436}},
                              {2, 0, {666}},
                              {3, 0, {36}},
                              {4, 0, {1}}};
            e.tableau_provenance = "tabulated";
            e.routes = {"frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "fano";
            e.spec = "pg:2,2";
            e.note = "7 points, 7 lines";
            e.mobius = 8;
            e.mobius_provenance = "oracle: direct enumeration at (1,0)";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "pg23";
            e.spec = "pg:2,3";
            e.note = "ternary projective plane";
            e.tableau_rows = {{0, 1, {16, 32, 36, 28, 21, 15, 10, 6, 3, 1}},
                              {1, 0, {16, 26, 13}},
                              {2, 0, {10}},
                              {3, 0, {1}}};
            e.tableau_is_complete = true;
            e.tableau_provenance = "tabulated";
            e.catenary = {{{0, 1, 3, 9}, 52}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "oracle: point-line flag count";
            e.tensor = {{2, 4, 0, 13, false}, {1, 1, 0, 13, false}, {1, 1, 1, -39, false}};
            e.tensor_provenance = "tabulated (off-diagonal); oracle: catenary aggregation (auxiliary)";
            e.mobius = 27;
            e.mobius_provenance = "tabulated";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "pg33";
            e.spec = "pg:3,3";
            e.note = "ternary projective space; t02 = 1300 forced by the addend tableaux "
                     "(tabulated 1230 is a misprint)";
            e.tableau_rows = {{0, 1, {416, 1300, 2340, 3185, 3744, 4056, 4160, 4095, 3900, 3614}},
                              {1, 0, {416, 1160, 1540, 1440, 1120, 840, 600, 400, 240, 120, 40}},
                              {2, 0, {276, 260, 130}},
                              {3, 0, {36}},
                              {4, 0, {1}}};
            e.tableau_provenance = "tabulated, x^0 y^2 entry corrected";
            e.catenary = {{{0, 1, 3, 9, 27}, 2080}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "oracle: point-line-plane flag count 40*13*4";
            e.tensor = {{3, 13, 0, 40, false}, {2, 4, 0, 130, false}, {2, 4, 1, -390, false}};
            e.tensor_provenance = "tabulated; sign of the t = 1 entry from the worked arithmetic";
            e.mobius = 729;
            e.mobius_provenance = "tabulated";
            e.routes = {"frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "k7";
            e.spec = "complete:7";
            e.note = "cycle matroid of the complete graph on 7 vertices";
            e.tableau_rows = {
                {0, 1, {120, 490, 945, 1225, 1260, 1120, 895, 645, 420, 245, 126, 56, 21, 6, 1}},
                {1, 0, {120, 644, 1225, 1330, 1085, 756, 469, 245, 105, 35, 7}},
                {2, 0, {274, 721, 700, 420, 210, 84, 21}},
                {3, 0, {225, 280, 105, 35}},
                {4, 0, {85, 35}},
                {5, 0, {15}},
                {6, 0, {1}}};
            e.tableau_is_complete = true;
            e.tableau_provenance = "tabulated";
            e.tensor = {{4, 10, 0, 21, false},  {4, 10, 1, -42, false}, {3, 6, 0, 35, false},
                        {3, 6, 1, -175, false}, {3, 6, 2, 210, false},  {4, 7, 0, 105, false},
                        {4, 7, 1, -210, false}, {4, 6, 0, 70, false},   {4, 6, 1, -140, false},
                        {5, 9, 0, 35, false},   {5, 11, 0, 21, false},  {5, 15, 0, 7, false},
                        {2, 3, 0, 35, false},   {3, 4, 0, 210, false}};
            e.tensor_provenance = "tabulated (marker-paired entries); row-3 cell value 210 from "
                                  "oracle: partition count (tabulated 240 is a misprint)";
            e.mobius = 720;
            e.mobius_provenance = "oracle: direct enumeration at (1,0)";
            e.routes = {"direct", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "k5";
            e.spec = "complete:5";
            e.note = "desk-scale graphic matroid";
            e.mobius = 24;
            e.mobius_provenance = "oracle: direct enumeration at (1,0)";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "k4";
            e.spec = "complete:4";
            e.note = "smallest 3-connected graphic matroid";
            e.mobius = 6;
            e.mobius_provenance = "oracle: direct enumeration at (1,0)";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "h33";
            e.spec = "sum(multipoint:0;3|line:3,1,1)";
            e.note = "triple point plus a 5-point line with a triple point";
            e.tableau_rows = {{0, 2, {1, 2, 2, 1}},
                              {1, 1, {2, 3, 3, 1}},
                              {2, 0, {1, 2, 2}},
                              {3, 0, {1}}};
            e.tableau_is_complete = true;
            e.tableau_provenance = "tabulated";
            e.catenary = {{{0, 3, 3, 2}, 2},
                          {{0, 3, 2, 3}, 1},
                          {{0, 3, 1, 4}, 2},
                          {{0, 1, 3, 4}, 2},
                          {{0, 1, 4, 3}, 2}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "tabulated";
            e.tensor = {{2, 5, 0, 1, false}, {2, 4, 0, 2, false}, {2, 6, 0, 1, false},
                        {1, 3, 0, 2, false}, {1, 3, 1, 3, true}};
            e.tensor_provenance = "tabulated; size indices of the rank-1 entries and the "
                                  "rank-2 size-6 flat from oracle: catenary aggregation";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "h35";
            e.spec = "sum(multipoint:0;5|line:3,1,1)";
            e.note = "quintuple point plus a 5-point line with a triple point";
            e.tableau_rows = {{0, 2, {1, 2, 3, 3, 2, 1}},
                              {1, 1, {2, 3, 4, 3, 2, 1}},
                              {2, 0, {1, 2, 2, 1, 1}},
                              {3, 0, {1}}};
            e.tableau_is_complete = true;
            e.tableau_provenance = "tabulated";
            e.catenary = {{{0, 5, 3, 2}, 1}, {{0, 3, 5, 2}, 1}, {{0, 5, 1, 4}, 2},
                          {{0, 3, 2, 5}, 1}, {{0, 1, 5, 4}, 2}, {{0, 1, 4, 5}, 2}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "tabulated";
            e.tensor = {{2, 8, 0, 1, false}, {2, 6, 0, 2, false}, {2, 5, 0, 1, false},
                        {1, 5, 0, 1, false}, {1, 5, 1, 2, true}, {1, 3, 0, 1, false},
                        {1, 3, 1, 1, true}};
            e.tensor_provenance = "tabulated";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "f1";
            e.spec = "echelon:1000110000";
            e.note = "row-echelon matroid, four mutually parallel elements";
            e.tableau_rows = {{0, 1, {10, 10, 10, 10, 6, 3, 1}},
                              {1, 0, {10, 4, 4, 4}},
                              {2, 0, {4, 1, 1, 1}},
                              {3, 0, {1}}};
            e.tableau_is_complete = true;
            e.tableau_provenance = "tabulated";
            e.catenary = {{{0, 4, 1, 5}, 6}, {{0, 1, 4, 5}, 6}, {{0, 1, 1, 8}, 30}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "tabulated";
            e.tensor = {{2, 5, 0, 6, false}, {1, 4, 0, 1, false}, {1, 4, 1, 5, true}};
            e.tensor_provenance = "tabulated";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "f2";
            e.spec = "echelon:1000101000";
            e.note = "row-echelon matroid with two nontrivial lines";
            e.tableau_rows = {{0, 1, {9, 9, 9, 9, 6, 3, 1}},
                              {1, 0, {9, 4, 4, 4, 1}},
                              {2, 0, {4, 1, 1, 1}},
                              {3, 0, {1}}};
            e.tableau_is_complete = true;
            e.tableau_provenance = "tabulated";
            e.catenary = {{{0, 4, 2, 4}, 1},
                          {{0, 4, 1, 5}, 4},
                          {{0, 1, 5, 4}, 2},
                          {{0, 1, 4, 5}, 4},
                          {{0, 1, 1, 8}, 28}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "tabulated";
            e.tensor = {{2, 6, 0, 1, false}, {2, 5, 0, 4, false}, {1, 4, 0, 1, false},
                        {1, 4, 1, 4, true}};
            e.tensor_provenance = "tabulated";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "mp8";
            e.spec = "multipoint:0;2,2,2,2,2,2,2,2";
            e.note = "eight doubled points; the alternating-sign tensor diagonal";
            e.tensor = {{4, 8, 0, 70, false},  {4, 8, 1, -210, false}, {4, 8, 2, 210, false},
                        {4, 8, 3, -70, false}, {3, 6, 1, -224, false}, {3, 6, 2, 336, false},
                        {5, 10, 0, 56, false}, {5, 10, 1, -112, false}, {2, 4, 1, -140, false},
                        {1, 2, 0, 8, false},   {7, 14, 0, 8, false}};
            e.tensor_provenance = "tabulated";
            e.routes = {"direct", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "b235";
            e.spec = "multipoint:0;2,3,5";
            e.note = "multiple points of sizes 2, 3, 5; six-composition frame expansion";
            e.catenary = {{{0, 2, 3, 5}, 1}, {{0, 3, 2, 5}, 1}, {{0, 2, 5, 3}, 1},
                          {{0, 5, 2, 3}, 1}, {{0, 3, 5, 2}, 1}, {{0, 5, 3, 2}, 1}};
            e.catenary_is_complete = true;
            e.catenary_provenance = "oracle: one flag per class ordering";
            e.tensor = {{1, 2, 0, 1, false}, {1, 3, 0, 1, false}, {1, 5, 0, 1, false},
                        {1, 2, 1, -1, false}, {1, 3, 1, -1, false}, {1, 5, 1, -1, false},
                        {2, 5, 0, 1, false}, {2, 7, 0, 1, false}, {2, 8, 0, 1, false}};
            e.tensor_provenance = "oracle: catenary aggregation";
            e.routes = {"direct", "delcon", "ginv", "frame", "ftensor"};
            z.push_back(e);
        }
        {
            ZooEntry e;
            e.name = "loopy";
            e.spec = "multipoint:2;2,3";
            e.note = "two loops in front of doubled and tripled points";
            e.mobius = 0;
            e.mobius_provenance = "oracle: loops kill the Mobius invariant";
            e.routes = {"direct", "delcon", "ginv", "frame"};
            z.push_back(e);
        }
        return z;
    }();
    return entries;
}

inline const ZooEntry* zoo_find(const std::string& name) {
    for (const ZooEntry& e : zoo_entries())
        if (e.name == name) return &e;
    return nullptr;
}

// Runs one registered entry; returns human-readable failure lines (empty = pass).
inline std::vector<std::string> run_zoo_entry(const ZooEntry& e, int threads = 0) {
    std::vector<std::string> failures;
    Matroid m = matroid_from_spec(e.spec);

    Bivariate reference;
    bool have_reference = false;
    for (const std::string& route : e.routes) {
        Bivariate t = tutte_by_route(m, route, threads);
        if (!have_reference) {
            reference = t;
            have_reference = true;
        } else if (!(t == reference)) {
            failures.push_back("route " + route + " disagrees with " + e.routes.front());
        }
    }
    if (!have_reference) return {"no feasible route"};

    if (!e.tableau_rows.empty()) {
        Bivariate expected;
        for (const auto& row : e.tableau_rows)
            for (std::size_t c = 0; c < row.values.size(); ++c)
                expected.add_term(row.x_degree, row.first_column + static_cast<int>(c),
                                  Rational(row.values[c]));
        if (e.tableau_is_complete) {
            if (!(expected == reference)) failures.push_back("tableau mismatch (" + e.tableau_provenance + ")");
        } else {
            for (const auto& [key, c] : expected.terms())
                if (!(reference.coeff(key.first, key.second) == c))
                    failures.push_back("tableau cell (" + std::to_string(key.first) + "," +
                                       std::to_string(key.second) + ") mismatch");
        }
    }

    if (!e.catenary.empty()) {
        CatenaryData data = catenary_data(m);
        for (const auto& [parts, count] : e.catenary) {
            auto it = data.nu.find(Composition(parts));
            if (it == data.nu.end() || !(it->second == BigInt(count)))
                failures.push_back("catenary value mismatch at (" + Composition(parts).to_string() + ")");
        }
        if (e.catenary_is_complete && data.nu.size() != e.catenary.size())
            failures.push_back("catenary table has unexpected extra compositions");
    }

    if (!e.tensor.empty()) {
        FlatTensor tensor = flat_tensor(m);
        for (const auto& te : e.tensor) {
            BigInt actual = tensor.get(te.k, te.m, te.t);
            BigInt expected(te.value);
            if (te.compare_abs) actual = actual.abs();
            if (!(actual == expected))
                failures.push_back("tensor entry (" + std::to_string(te.k) + "," + std::to_string(te.m) +
                                   "," + std::to_string(te.t) + ") = " + actual.to_string() +
                                   ", expected " + expected.to_string());
        }
    }

    if (e.mobius >= 0) {
        Rational mu = reference.eval(Rational(1), Rational(0));
        if (!(mu == Rational(e.mobius)))
            failures.push_back("Mobius invariant mismatch: " + mu.to_string());
    }

    if (!reference.all_nonnegative_integer()) failures.push_back("polynomial has a bad coefficient");
    return failures;
}

}  // namespace tutteframe
