#include "brq/json_io.hpp"

#include <stdexcept>

namespace brq {

Json to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const Json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

Json to_json(const FgAbGroup& g) {
    Json out;
    out["rank"] = g.rank;
    Json factors = Json::array();
    for (const auto& d : g.invariant_factors) factors.push_back(to_json(d));
    out["invariant_factors"] = std::move(factors);
    out["pretty"] = g.to_string();
    return out;
}

FgAbGroup group_from_json(const Json& j) {
    FgAbGroup g;
    if (j.is_null()) return g;
    g.rank = j.value("rank", 0);
    if (j.contains("invariant_factors"))
        for (const auto& d : j["invariant_factors"]) g.invariant_factors.push_back(int_from_json(d));
    // recanonicalize: tolerate unsorted or non-chained factor lists
    FgAbGroup torsion = direct_sum(FgAbGroup{0, g.invariant_factors}, FgAbGroup::trivial());
    torsion.rank = g.rank;
    return torsion;
}

Json to_json(const TraceStep& step) {
    Json out;
    out["rule"] = step.rule;
    out["anchor"] = step.anchor;
    out["detail"] = step.detail;
    out["decisive"] = step.decisive;
    return out;
}

Json to_json(const Verdict& v) {
    Json out;
    out["conclusion"] = to_string(v.conclusion);
    if (v.br_prime_model) out["br_prime_model"] = to_json(*v.br_prime_model);
    Json steps = Json::array();
    for (const auto& s : v.trace) steps.push_back(to_json(s));
    out["trace"] = std::move(steps);
    if (!v.unknown_reason.empty()) out["unknown_reason"] = v.unknown_reason;
    return out;
}

EllipticCurveSpec curve_from_json(const Json& j) {
    EllipticCurveSpec c;
    std::string field = j.at("field").is_string() ? j.at("field").get<std::string>()
                                                  : j.at("field").dump();
    if (field == "Q" || field == "q") {
        c.rational = true;
    } else {
        c.rational = false;
        c.p = Int(field);
    }
    c.a = int_from_json(j.at("a"));
    c.b = int_from_json(j.at("b"));
    return c;
}

Json to_json(const EllipticCurveSpec& c) {
    Json out;
    out["field"] = c.rational ? "Q" : c.p.get_str();
    out["a"] = to_json(c.a);
    out["b"] = to_json(c.b);
    return out;
}

SchemeInvariants invariants_from_json(const Json& j) {
    SchemeInvariants s;
    s.pic = group_from_json(j.value("pic", Json()));
    if (j.contains("pic_torsion"))
        s.pic_torsion = group_from_json(j["pic_torsion"]);
    else
        s.pic_torsion = s.pic.torsion_part();
    s.br_prime = group_from_json(j.value("br_prime", Json()));
    s.units_torsion = group_from_json(j.value("units_torsion", Json()));
    Json flags = j.value("flags", Json::object());
    s.noetherian_normal = flags.value("noetherian_normal", false);
    s.integral = flags.value("integral", false);
    s.regular_codim1 = flags.value("regular_codim1", false);
    s.henselian_local_gms = flags.value("henselian_local_gms", false);
    s.br_equals_br_prime = tristate_from_string(flags.value("br_equals_br_prime", "unknown"));
    s.validate();
    return s;
}

StackDescriptor descriptor_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "BDiscrete")
        return StackDescriptor::discrete(group_from_json(j.value("finite_part", Json())),
                                         j.value("free_rank", 0));
    if (kind == "BDiagonalizable")
        return StackDescriptor::diagonalizable(group_from_json(j.value("characters", Json())));
    if (kind == "BGLn") return StackDescriptor::gl(j.at("n").get<std::size_t>());
    if (kind == "BAbelianVariety")
        return StackDescriptor::abelian_variety(curve_from_json(j.at("curve")));
    if (kind == "QuotientGoodModuli") return StackDescriptor::quotient_good_moduli();
    throw std::invalid_argument("descriptor: unknown kind '" + kind + "'");
}

Json to_json(const FpPoint& p) {
    if (p.infinity) return "infinity";
    Json out;
    out["x"] = to_json(p.x);
    out["y"] = to_json(p.y);
    return out;
}

Json to_json(const QPoint& p) {
    if (p.infinity) return "infinity";
    Json out;
    out["x"] = p.x.get_str();
    out["y"] = p.y.get_str();
    return out;
}

Json bottom_row_to_json(const BottomRowReport& rep, bool audit) {
    Json out;
    Json degrees = Json::array();
    for (const auto& deg : rep.degrees) {
        Json d;
        d["degree"] = deg.degree;
        d["term"] = deg.term;
        d["generators"] = deg.term_generators;
        if (deg.cohomology) d["e2"] = to_json(*deg.cohomology);
        if (audit && deg.differential) d["differential"] = to_json(*deg.differential);
        degrees.push_back(std::move(d));
    }
    out["degrees"] = std::move(degrees);
    Json notes;
    notes["differential_convention"] = rep.convention_note;
    notes["degree_one"] = rep.degree_one_note;
    out["notes"] = std::move(notes);
    Json checked = Json::array();
    for (auto p : rep.closed_form_checked) checked.push_back(p);
    out["closed_form_even_degrees_checked"] = std::move(checked);
    out["closed_form_contained"] = rep.closed_form_contained;
    if (rep.gln_n) {
        out["n"] = *rep.gln_n;
        Json labels = Json::array();
        for (const auto& per_degree : rep.generator_labels) {
            Json l = Json::array();
            for (const auto& name : per_degree) l.push_back(name);
            labels.push_back(std::move(l));
        }
        out["generator_labels"] = std::move(labels);
    }
    return out;
}

}  // namespace brq
