#pragma once

// Table evaluation against the built-in catalog, and the stable JSON/CSV/text
// serializations used by the CLI and the golden-file tests. Requires the
// vendored nlohmann/json header.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitkit/catalog.hpp"
#include "orbitkit/enumerate.hpp"
#include "orbitkit/form.hpp"

namespace orbitkit {

using ordered_json = nlohmann::ordered_json;

struct TableRowResult {
    int row_no = 0;
    std::vector<Root> d;
    std::vector<Root> m;
    int m_size = 0;
    int bound_expected = 0;   // the F column
    int dim_computed = -1;
    int bound_computed = -1;
    bool m_ok = false;

    bool mismatch() const {
        return dim_computed != 2 * m_size || bound_computed != bound_expected || !m_ok;
    }
};

// Evaluates every catalog row with the rank engine at the given prime and
// the all-ones scalars.
inline std::vector<TableRowResult> evaluate_catalog(const RootSystem& rs,
                                                    const ChevalleyTable& tbl,
                                                    const std::vector<CatalogRow>& rows,
                                                    const PrimeField& field) {
    std::vector<TableRowResult> out;
    for (const CatalogRow& row : rows) {
        TableRowResult res;
        res.row_no = row.row_no;
        res.d = catalog_roots(rs, row.d);
        res.m = catalog_roots(rs, row.m);
        res.m_size = row.m_size;
        res.bound_expected = row.bound;
        const OrthoSubset sub = OrthoSubset::all_ones(rs, res.d, field);
        res.dim_computed = orbit_dimension(sub, tbl);
        res.bound_computed = involution_stats(rs, res.d).bound;
        res.m_ok = rs.id() == RootSystemId{Family::F, 4}
                       ? verify_m_conditions(rs, res.d, res.m)
                       : static_cast<int>(res.m.size()) == row.m_size;
        out.push_back(std::move(res));
    }
    return out;
}

inline std::string roots_cell(const RootSystem& rs, const std::vector<Root>& roots) {
    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) out += " ";
        out += format_root(rs, roots[i]);
    }
    return out;
}

// CSV mirror of the catalog layout: row, D, M, |M|, F, dim_computed.
inline std::string table_to_csv(const RootSystem& rs, const std::vector<TableRowResult>& rows) {
    std::string out = "row,D,M,M_size,F,dim_computed\n";
    for (const TableRowResult& r : rows) {
        out += std::to_string(r.row_no) + "," + roots_cell(rs, r.d) + "," + roots_cell(rs, r.m) +
               "," + std::to_string(r.m_size) + "," + std::to_string(r.bound_expected) + "," +
               std::to_string(r.dim_computed) + "\n";
    }
    return out;
}

inline ordered_json table_row_to_json(const RootSystem& rs, const TableRowResult& r) {
    ordered_json j;
    j["row"] = r.row_no;
    ordered_json d = ordered_json::array(), m = ordered_json::array();
    for (const Root& x : r.d) d.push_back(format_root(rs, x));
    for (const Root& x : r.m) m.push_back(format_root(rs, x));
    j["D"] = d;
    j["M"] = m;
    j["M_size"] = r.m_size;
    j["F"] = r.bound_expected;
    j["dim_computed"] = r.dim_computed;
    j["bound_computed"] = r.bound_computed;
    j["ok"] = !r.mismatch();
    return j;
}

inline std::string table_to_text(const RootSystem& rs, const std::vector<TableRowResult>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "row" << std::setw(44) << "D" << std::setw(6) << "|M|"
       << std::setw(4) << "F" << std::setw(5) << "dim" << "status\n";
    for (const TableRowResult& r : rows) {
        os << std::left << std::setw(4) << r.row_no << std::setw(44) << roots_cell(rs, r.d)
           << std::setw(6) << r.m_size << std::setw(4) << r.bound_expected << std::setw(5)
           << r.dim_computed << (r.mismatch() ? "MISMATCH" : "ok") << "\n";
    }
    return os.str();
}

inline ordered_json verify_report_to_json(const VerifyReport& rep) {
    ordered_json j;
    j["system"] = rep.system.name();
    j["D"] = rep.d_indices;
    j["dim"] = rep.dim;
    j["bound"] = rep.bound;
    j["l"] = rep.l;
    j["s"] = rep.s;
    ordered_json flags;
    flags["xi_independent"] = rep.xi_independent;
    flags["bound_ok"] = rep.bound_ok;
    flags["even_ok"] = rep.even_ok;
    flags["reduced_applied"] = rep.reduced_applied;
    j["flags"] = flags;
    j["primes"] = rep.primes;
    j["xi_samples"] = rep.xi_samples;
    j["seed"] = rep.seed;
    return j;
}

struct DimResult {
    RootSystemId system{Family::A, 1};
    std::vector<int> d_indices;
    int dim = 0;
    int bound = 0;
    int l = 0;
    int s = 0;
    bool bound_ok = false;
    bool even_ok = false;
    bool reduced_applied = false;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
};

inline ordered_json dim_result_to_json(const DimResult& r) {
    ordered_json j;
    j["system"] = r.system.name();
    j["D"] = r.d_indices;
    j["dim"] = r.dim;
    j["bound"] = r.bound;
    j["l"] = r.l;
    j["s"] = r.s;
    ordered_json flags;
    flags["bound_ok"] = r.bound_ok;
    flags["even_ok"] = r.even_ok;
    flags["reduced_applied"] = r.reduced_applied;
    j["flags"] = flags;
    j["prime"] = r.prime;
    j["seed"] = r.seed;
    return j;
}

// Chevalley table dump: one line per ordered pair of positive roots with a
// root sum.
inline std::string constants_to_csv(const RootSystem& rs, const ChevalleyTable& tbl) {
    std::string out = "alpha,gamma,sum,n\n";
    for (int i = 0; i < rs.num_positive(); ++i)
        for (int j = 0; j < rs.num_positive(); ++j) {
            const int s = tbl.sum_index(i, j);
            if (s < 0) continue;
            out += format_root(rs, rs.positive(i)) + "," + format_root(rs, rs.positive(j)) + "," +
                   format_root(rs, rs.positive(s)) + "," + std::to_string(tbl.n_pos(i, j)) + "\n";
        }
    return out;
}

} // namespace orbitkit
