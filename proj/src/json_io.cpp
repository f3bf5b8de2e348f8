#include "ihara/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ihara {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void dump_rec(const ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in;
                out += ordered_json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump_rec(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            return;
        }
        case ordered_json::value_t::number_float: {
            double v = j.get<double>();
            if (std::isfinite(v)) out += format_double(v);
            else out += ordered_json(v).dump();  // null for nan/inf
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const ordered_json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

ordered_json to_json(const ValidationReport& r) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"hypothesis", c.hypothesis}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return {{"pass", r.pass}, {"checks", checks}};
}

ordered_json to_json(const DegreeStats& s) { return {{"d", s.d}, {"D", s.D}}; }

ordered_json to_json(const Graph& g) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges)
        edges.push_back({g.vertex_labels[u], g.vertex_labels[v]});
    return {{"n", g.n()}, {"m", g.m()}, {"vertices", g.vertex_labels}, {"edges", edges}};
}

ordered_json to_json(const OrientedEdgeAlphabet& a) {
    ordered_json symbols = ordered_json::array();
    for (int e = 0; e < a.size(); ++e) {
        symbols.push_back({{"symbol", e},
                           {"initial", a.initial[e]},
                           {"terminal", a.terminal[e]},
                           {"inverse", a.inverse(e)}});
    }
    return {{"size", a.size()}, {"symbols", symbols}};
}

ordered_json to_json(const HashimotoMatrix& t) {
    ordered_json rows = ordered_json::array();
    for (int e = 0; e < t.size; ++e) {
        ordered_json row = ordered_json::array();
        for (int f = 0; f < t.size; ++f) row.push_back(static_cast<int>(t.at(e, f)));
        rows.push_back(std::move(row));
    }
    return {{"size", t.size}, {"rows", rows}};
}

ordered_json to_json(const TruncatedSeries& s) {
    ordered_json coeffs = ordered_json::array();
    for (int k = 0; k <= s.order(); ++k) {
        coeffs.push_back({to_string(s[k].get_num()), to_string(s[k].get_den())});
    }
    return {{"order", s.order()}, {"coefficients", coeffs}};
}

ordered_json to_json(const IntPoly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : p.coefficients()) coeffs.push_back(to_string(c));
    return {{"degree", p.degree()}, {"coefficients", coeffs}};
}

ordered_json to_json(const SpectralData& s) {
    return {{"lambda", s.lambda},
            {"lambda_power_iteration", s.lambda_power},
            {"lower_bound", s.lower_bound},
            {"upper_bound", s.upper_bound},
            {"radius", s.radius}};
}

ordered_json to_json(const ParamWindow& w) {
    return {{"lambda", w.lambda},
            {"x0", w.x0},
            {"x1", w.x1},
            {"l_sigma", w.l_sigma},
            {"a", w.a},
            {"sigma", w.sigma},
            {"mode", to_string(w.mode)},
            {"strict_window_nonempty", w.strict_window_nonempty},
            {"chain_holds", w.chain_holds}};
}

ordered_json to_json(const AuditReport& r) {
    ordered_json claims = ordered_json::array();
    for (const auto& c : r.claims) {
        claims.push_back({{"claim_id", c.claim_id},
                          {"paper_location", c.paper_location},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"holds", c.holds},
                          {"note", c.note}});
    }
    return {{"claims", claims}};
}

ordered_json to_json(const std::vector<PrimeCycle>& primes) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : primes) arr.push_back(p.symbols);
    return arr;
}

}  // namespace ihara
