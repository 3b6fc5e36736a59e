#include "parityfactor/jsonio.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pf {

using nlohmann::json;

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::exists: return "exists";
        case Verdict::not_exists: return "not-exists";
        default: return "unknown";
    }
}

const char* verdict_name(BranchVerdict v) {
    switch (v) {
        case BranchVerdict::guaranteed: return "guaranteed";
        case BranchVerdict::boundary: return "boundary";
        default: return "not-guaranteed";
    }
}

const char* test_name(BranchTest t) {
    switch (t) {
        case BranchTest::connectivity: return "i";
        case BranchTest::eigenvalue: return "ii";
        default: return "none";
    }
}

json ids_json(const VertexSet& s) { return json(s.ids()); }

}  // namespace

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json spectrum_json(const SpectrumResult& spec) {
    return json{{"eigenvalues", spec.eigenvalues},
                {"iterations", spec.iterations},
                {"residual", spec.residual}};
}

json certificate_json(const FactorCertificate& cert) {
    json out{{"verdict", verdict_name(cert.verdict)}};
    if (cert.factor) {
        json edges = json::array();
        for (const auto& [key, mult] : *cert.factor)
            for (int i = 0; i < mult; ++i) edges.push_back({key.first, key.second});
        out["factor"] = std::move(edges);
    }
    if (cert.violation) {
        out["violation"] = json{{"S", ids_json(cert.violation->S)},
                                {"T", ids_json(cert.violation->T)},
                                {"deficiency", cert.violation->deficiency}};
    }
    return out;
}

json report_json(const TheoremReport& rep) {
    json branches = json::array();
    for (const BranchRecord& r : rep.branches) {
        json b{{"branch", std::string(1, r.branch)},
               {"applicable", r.applicable},
               {"test", test_name(r.test)},
               {"verdict", verdict_name(r.verdict)},
               {"note", r.note}};
        if (r.eigen_index) b["eigen_index"] = *r.eigen_index;
        if (r.threshold) b["threshold"] = *r.threshold;
        if (r.measured) b["measured"] = *r.measured;
        branches.push_back(std::move(b));
    }
    return json{{"n", rep.n},
                {"min_degree", rep.min_degree},
                {"h", rep.h},
                {"h_even", rep.h_even},
                {"h_odd", rep.h_odd},
                {"theta", rep.theta},
                {"theta_star", rep.theta_star},
                {"sum_f_even", rep.sum_f_even},
                {"branches", std::move(branches)},
                {"verdict", verdict_name(rep.overall)}};
}

json tightness_json(const TightnessReport& rep) {
    json checks = json::array();
    for (const TightnessCheck& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"r", rep.r},
                {"h", rep.h},
                {"l", rep.l},
                {"b", rep.b},
                {"vertices", rep.family.graph.vertex_count()},
                {"edges", rep.family.graph.edge_total()},
                {"certificate_deficiency", rep.certificate_deficiency},
                {"checks", std::move(checks)},
                {"all_pass", rep.all_pass},
                {"note", rep.note}};
}

json family_json(const FamilyInstance& fam) {
    json copies = json::array();
    for (const VertexSet& c : fam.copies) copies.push_back(c.ids());
    return json{{"U", fam.U.ids()},
                {"copies", std::move(copies)},
                {"params", json{{"r", fam.r}, {"h", fam.h}, {"l", fam.l}}}};
}

DegreeConstraint parse_constraints(const std::string& text, int n) {
    if (n < 0) throw std::invalid_argument("parse_constraints: negative vertex count");
    DegreeConstraint c;
    c.g.assign(n, 0);
    c.f.assign(n, 0);
    std::vector<char> assigned(n, 0);

    // JSON form?
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(1, std::string("constraints: ") + e.what());
        }
        if (!doc.contains("g") || !doc.contains("f"))
            throw ParseError(1, "constraints: JSON object needs \"g\" and \"f\" arrays");
        const auto& ga = doc["g"];
        const auto& fa = doc["f"];
        if (!ga.is_array() || !fa.is_array() || ga.size() != static_cast<size_t>(n) ||
            fa.size() != static_cast<size_t>(n))
            throw ParseError(1, "constraints: \"g\" and \"f\" must be arrays of length " +
                                    std::to_string(n));
        for (int v = 0; v < n; ++v) {
            if (!ga[v].is_number_integer() || !fa[v].is_number_integer())
                throw ParseError(1, "constraints: entries must be integers");
            c.g[v] = ga[v].get<int>();
            c.f[v] = fa[v].get<int>();
        }
        return c;
    }

    // Text form.
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(lineno, msg); };
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "all") {
            int gv, fv;
            if (!(ls >> gv >> fv)) throw fail("expected: all <g> <f>");
            std::string extra;
            if (ls >> extra) throw fail("unexpected token '" + extra + "'");
            for (int v = 0; v < n; ++v) {
                c.g[v] = gv;
                c.f[v] = fv;
                assigned[v] = 1;
            }
        } else if (kind == "v") {
            int id, gv, fv;
            if (!(ls >> id >> gv >> fv)) throw fail("expected: v <id> <g> <f>");
            std::string extra;
            if (ls >> extra) throw fail("unexpected token '" + extra + "'");
            if (id < 0 || id >= n)
                throw fail("vertex id " + std::to_string(id) + " out of range [0, " +
                           std::to_string(n) + ")");
            c.g[id] = gv;
            c.f[id] = fv;
            assigned[id] = 1;
        } else {
            throw fail("unknown directive '" + kind + "'");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!assigned[v]) throw ParseError(lineno, "no constraint given for vertex " + std::to_string(v));
    return c;
}

}  // namespace pf
