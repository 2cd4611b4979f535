#ifndef CYBRA_JSON_IO_HPP
#define CYBRA_JSON_IO_HPP

#include <json.hpp>

#include "cybra/algebra.hpp"
#include "cybra/delta_poly.hpp"
#include "cybra/diagram.hpp"
#include "cybra/group.hpp"
#include "cybra/schur_weyl.hpp"

namespace cybra {

using nlohmann::json;

// Polynomial: list of {coeff_re, coeff_im, exponents}, coefficients as
// rational strings in lowest terms.
inline json poly_to_json(const DeltaPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["coeff_re"] = rat_to_string(c.re());
        t["coeff_im"] = rat_to_string(c.im());
        t["exponents"] = e;
        terms.push_back(t);
    }
    return terms;
}

inline DeltaPoly poly_from_json(const json& j, int m) {
    DeltaPoly p = DeltaPoly::zero(m);
    for (const auto& t : j) {
        GaussRat c(rat_from_string(t.at("coeff_re").get<std::string>()),
                   rat_from_string(t.at("coeff_im").get<std::string>()));
        std::vector<unsigned> e = t.at("exponents").get<std::vector<unsigned>>();
        if (e.size() != static_cast<size_t>(m / 2 + 1)) throw parse_error("exponent vector length mismatch");
        DeltaPoly mono = DeltaPoly::constant(m, c);
        for (size_t v = 0; v < e.size(); ++v)
            for (unsigned rep = 0; rep < e[v]; ++rep) mono *= DeltaPoly::variable(m, static_cast<int>(v));
        p += mono;
    }
    return p;
}

inline json element_to_json(const AlgebraElement& x) {
    json j;
    j["k"] = x.k();
    j["m"] = x.m();
    json terms = json::array();
    for (const auto& [d, c] : x.terms()) {
        json t;
        t["diagram"] = diagram_to_text(d);
        t["coeff"] = poly_to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline AlgebraElement element_from_json(const json& j) {
    int k = j.at("k").get<int>();
    int m = j.at("m").get<int>();
    AlgebraElement x(k, m);
    for (const auto& t : j.at("terms"))
        x.add_term(diagram_from_text(t.at("diagram").get<std::string>(), k, m),
                   poly_from_json(t.at("coeff"), m));
    return x;
}

// Matrix: {rows, cols, entries: [[r, c, "re", "im"], ...]}.
inline json matrix_to_json(const GaussMat& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            entries.push_back(json::array({r, c, rat_to_string(v.re()), rat_to_string(v.im())}));
    j["entries"] = entries;
    return j;
}

inline GaussMat matrix_from_json(const json& j) {
    GaussMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries"))
        m.set(e.at(0).get<int>(), e.at(1).get<int>(),
              GaussRat(rat_from_string(e.at(2).get<std::string>()),
                       rat_from_string(e.at(3).get<std::string>())));
    return m;
}

inline json gaussrat_to_json(const GaussRat& v) {
    return json{{"re", rat_to_string(v.re())}, {"im", rat_to_string(v.im())}};
}

inline json context_to_json(const GroupContext& ctx) {
    json j;
    j["group"] = ctx.spec.name();
    j["dim_v"] = ctx.dimV;
    j["rank"] = ctx.spec.rank();
    j["split_rank"] = ctx.spec.split_rank();
    j["form"] = matrix_to_json(ctx.form);
    j["xi"] = matrix_to_json(ctx.xi);
    json lie = json::array();
    for (const auto& x : ctx.lie_basis) lie.push_back(matrix_to_json(x));
    j["lie_basis"] = lie;
    j["basis_change"] = matrix_to_json(ctx.basis_change);
    json v1 = json::array();
    for (const auto& [i, v] : ctx.v1)
        v1.push_back(json::array({i, rat_to_string(v.re()), rat_to_string(v.im())}));
    j["v1"] = v1;
    return j;
}

inline json deltas_to_json(const DeltaReport& r) {
    json j;
    j["measured"] = {{"delta0", gaussrat_to_json(r.delta0)}, {"delta1", gaussrat_to_json(r.delta1)}};
    j["paper"] = {{"delta0", rat_to_string(r.paper_delta0)}, {"delta1", rat_to_string(r.paper_delta1)}};
    j["xi_pair_sign"] = gaussrat_to_json(r.xi_pair_sign);
    j["delta0_matches_paper"] = r.delta0 == GaussRat(r.paper_delta0);
    j["delta1_matches_paper"] = r.delta1 == GaussRat(r.paper_delta1);
    return j;
}

inline json relation_reports_to_json(const std::vector<RelationReport>& reports) {
    json rows = json::array();
    for (const auto& r : reports) {
        json row;
        row["relation"] = r.relation_id;
        row["instances"] = r.instances_checked;
        row["pass"] = r.passed();
        if (!r.passed()) {
            json fails = json::array();
            for (const auto& [params, diff] : r.failures)
                fails.push_back(json{{"instance", params}, {"difference", diff}});
            row["failures"] = fails;
        }
        rows.push_back(row);
    }
    return rows;
}

inline json phi_rank_to_json(const PhiRankReport& r) {
    return json{{"rank", r.rank}, {"expected", r.expected}, {"injective", r.injective}};
}

inline json commutant_to_json(const CommutantReport& r) {
    return json{{"commutant_dim", r.commutant_dim}, {"image_dim", r.image_dim}, {"equal", r.equal}};
}

inline json sectors_to_json(const SectorReport& r) {
    json j;
    j["k"] = r.k;
    json rows = json::array();
    for (const auto& s : r.sectors)
        rows.push_back(json{{"s", s.s},
                            {"multiplicity", s.multiplicity},
                            {"block_dim", s.block_dim},
                            {"expected", s.expected}});
    j["sectors"] = rows;
    j["off_block_zero"] = r.off_block_zero;
    j["total_dim"] = r.total_dim;
    return j;
}

inline json walled_centralizer_to_json(const WalledCentralizerReport& r) {
    return json{{"commutant_dim", r.commutant_dim}, {"expected", r.expected}, {"equal", r.equal}};
}

inline json dimension_identity_to_json(const DimensionIdentity& r) {
    return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal}};
}

} // namespace cybra

#endif
