#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "brq/azumaya.hpp"
#include "brq/det_ring.hpp"
#include "brq/json_io.hpp"
#include "brq/koszul.hpp"

using namespace brq;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kParseError = 2;
constexpr int kUnknown = 3;

Json read_json_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return Json::parse(buffer.str());
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& report, const std::string& output_path) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
        out << text;
    }
}

std::vector<Int> parse_torsion_list(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(Int(item));
    }
    return out;
}

int run_snf(const std::string& input, const std::string& output) {
    Json j = read_json_input(input);
    IntMatrix m = matrix_from_json(j.at("matrix"));
    SmithForm f = smith_normal_form(m);
    Json report;
    report["schema"] = "brq.snf.v1";
    report["anchors"] = Json::array();
    report["matrix"] = to_json(m);
    report["U"] = to_json(f.U);
    report["S"] = to_json(f.S);
    report["V"] = to_json(f.V);
    report["rank"] = f.rank();
    Json factors = Json::array();
    for (const auto& d : f.invariant_factors()) factors.push_back(to_json(d));
    report["invariant_factors"] = std::move(factors);
    report["group"] = to_json(group_invariants(m.cols(), m));
    emit(report, output);
    return kOk;
}

int run_group_cohomology(const std::string& input, const std::string& output) {
    Json j = read_json_input(input);
    std::size_t generators = j.at("generators").get<std::size_t>();
    IntMatrix relations = j.contains("relations") ? matrix_from_json(j["relations"])
                                                  : IntMatrix(0, generators);
    if (relations.rows() == 0) relations = IntMatrix(0, generators);
    std::vector<IntMatrix> actions;
    for (const auto& a : j.at("actions")) actions.push_back(matrix_from_json(a));
    ZrModule mod(GroupPresentation(generators, relations), actions);
    CochainComplex cx = koszul_cochain_complex(mod);
    auto h = cx.all_cohomology();
    Json report;
    report["schema"] = "brq.group-cohomology.v1";
    report["anchors"] = Json::array({"lemma-20150528-09"});
    report["rank"] = mod.rank();
    Json cohomology = Json::array();
    for (std::size_t p = 0; p < h.size(); ++p) {
        Json entry;
        entry["degree"] = p;
        entry["group"] = to_json(h[p]);
        entry["term_generators"] = cx.terms[p].generators;
        cohomology.push_back(std::move(entry));
    }
    report["cohomology"] = std::move(cohomology);
    emit(report, output);
    return kOk;
}

int run_torus_complex(std::size_t rank, std::size_t max_degree, std::size_t units_rank,
                      const std::string& units_torsion, bool audit, const std::string& output) {
    FgAbGroup units{units_rank, parse_torsion_list(units_torsion)};
    FgAbGroup torsion_norm = direct_sum(FgAbGroup{0, units.invariant_factors}, FgAbGroup::trivial());
    units.invariant_factors = torsion_norm.invariant_factors;
    UnitsComplexSpec spec(units, FgAbGroup::free(rank), max_degree);
    BottomRowReport rep = bottom_row_cohomology(spec);
    Json report = bottom_row_to_json(rep, audit);
    report["schema"] = "brq.torus-complex.v1";
    report["anchors"] = Json::array({"lemma-20170920-07", "lemma-20151026-05"});
    report["character_rank"] = rank;
    report["units"] = to_json(units);
    emit(report, output);
    return kOk;
}

int run_gln_bottom_row(std::size_t n, std::size_t max_degree, bool audit,
                       const std::string& output) {
    BottomRowReport rep = gln_bottom_row(n, max_degree);
    Json report = bottom_row_to_json(rep, audit);
    report["schema"] = "brq.gln-bottom-row.v1";
    report["anchors"] =
        Json::array({"proposition-20170920-06", "lemma-20171109-08", "lemma-20170920-07"});
    emit(report, output);
    return kOk;
}

int run_azumaya(std::size_t n, std::size_t charts, bool no_torsion, const std::string& output) {
    GluingData data = build_gluing(n, charts, !no_torsion);
    auto names = data.group.symbol_names();
    GluingCheck chk = verify_gluing_identity(data);
    TorsionCertificate cert = determinant_torsion_bound(data);
    bool triples_ok = charts >= 3 ? triple_overlap_consistent(data) : true;

    Json report;
    report["schema"] = "brq.azumaya.v1";
    report["anchors"] = Json::array({"lemma-20171113-15"});
    report["n"] = n;
    report["charts"] = charts;
    Json basis = Json::array();
    for (const auto& b : data.basis) basis.push_back(b);
    report["basis"] = std::move(basis);

    Json matrices;
    for (std::size_t i = 1; i <= charts; ++i) {
        Json rows = Json::array();
        const GroupRingMatrix& m = data.m(i);
        for (std::size_t r = 0; r < m.size(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string(names));
            rows.push_back(std::move(row));
        }
        matrices["M_" + std::to_string(i)] = std::move(rows);
    }
    for (auto [i, j] : data.group.overlaps()) {
        Json rows = Json::array();
        const GroupRingMatrix& m = data.d(i, j);
        for (std::size_t r = 0; r < m.size(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string(names));
            rows.push_back(std::move(row));
        }
        matrices["D_" + std::to_string(i) + "_" + std::to_string(j)] = std::move(rows);
    }
    report["matrices"] = std::move(matrices);

    report["identity_holds"] = chk.holds;
    if (chk.holds) report["orientation"] = to_string(*chk.orientation);
    Json overlaps = Json::array();
    for (const auto& o : chk.overlaps) {
        Json entry;
        entry["overlap"] = {o.i, o.j};
        entry["printed_orientation_holds"] = o.printed_holds;
        entry["reversed_orientation_holds"] = o.reversed_holds;
        if (o.discrepancy) {
            Json rows = Json::array();
            for (std::size_t r = 0; r < o.discrepancy->size(); ++r) {
                Json row = Json::array();
                for (std::size_t c = 0; c < o.discrepancy->size(); ++c)
                    row.push_back((*o.discrepancy)(r, c).to_string(names));
                rows.push_back(std::move(row));
            }
            entry["discrepancy"] = std::move(rows);
        }
        overlaps.push_back(std::move(entry));
    }
    report["overlaps"] = std::move(overlaps);

    Json torsion = Json::array();
    for (const auto& po : cert.overlaps) {
        Json entry;
        entry["overlap"] = {po.i, po.j};
        entry["n_torsion_certified"] = po.ok;
        if (po.beta_multiple) entry["beta_coboundary_multiple"] = to_json(*po.beta_multiple);
        torsion.push_back(std::move(entry));
    }
    report["torsion_certificates"] = std::move(torsion);
    report["torsion_certified"] = cert.certified;
    report["triple_overlap_consistent"] = triples_ok;

    if (chk.holds) {
        Json classes = Json::array();
        for (const auto& c : coboundary_class(data)) {
            Json entry;
            entry["overlap"] = {c.i, c.j};
            entry["class"] = "xi_" + std::to_string(c.i) + "_" + std::to_string(c.j);
            entry["n_torsion"] = c.n_torsion;
            classes.push_back(std::move(entry));
        }
        report["coboundary_classes"] = std::move(classes);
    }

    emit(report, output);
    return (chk.holds && cert.certified && triples_ok) ? kOk : kViolated;
}

int run_gln_units(const std::string& base_txt, std::size_t n, const std::string& element,
                  const std::string& inverse, std::size_t probe_samples,
                  const std::string& output) {
    BaseRing base = BaseRing::parse(base_txt);
    DetRing ring(base, n);
    if (element.empty() && probe_samples == 0)
        throw std::invalid_argument("gln-units: pass --element/--inverse or --probe-samples");
    Json report;
    report["schema"] = "brq.gln-units.v1";
    report["anchors"] = Json::array({"lemma-20171109-02", "lemma-20171109-07", "setup-20171109-21"});
    report["base"] = base.to_string();
    report["n"] = n;

    int code = kOk;
    if (!element.empty()) {
        DetRingElement w = parse_det_ring_element(ring, element);
        report["element"] = w.to_string();
        if (inverse.empty())
            throw std::invalid_argument("gln-units: --inverse witness is required with --element");
        DetRingElement winv = parse_det_ring_element(ring, inverse);
        report["inverse"] = winv.to_string();
        try {
            PhiRecognition rec = recognize_phi_image(w, winv);
            report["is_image"] = rec.is_image;
            if (rec.is_image) {
                report["a"] = rec.image->a.to_string();
                report["m"] = rec.image->m;
            } else {
                report["witness"] = rec.witness;
            }
        } catch (const std::domain_error& e) {
            report["error"] = e.what();
            code = kViolated;
        }
    }
    if (probe_samples > 0) {
        NonzerodivisorReport probe = det_nonzerodivisor_probe(ring, probe_samples);
        Json p;
        p["anchors"] = Json::array({"lemma-20171109-06"});
        p["samples"] = probe.samples;
        Json viols = Json::array();
        for (const auto& v : probe.violations) viols.push_back(v);
        p["violations"] = std::move(viols);
        report["nonzerodivisor_probe"] = std::move(p);
        if (!probe.ok()) code = kViolated;
    }
    emit(report, output);
    return code;
}

int run_elliptic(const std::string& field, const std::string& a, const std::string& b,
                 const std::string& output) {
    EllipticCurveSpec spec;
    if (field == "Q" || field == "q") {
        spec.rational = true;
    } else {
        spec.rational = false;
        spec.p = Int(field);
    }
    spec.a = Int(a);
    spec.b = Int(b);

    BaVerdict v = verdict_ba(spec);
    Json report;
    report["schema"] = "brq.elliptic.v1";
    report["anchors"] =
        Json::array({"theorem-20170215-16", "lemma-20170215-14", "lemma-20170215-15"});
    report["curve"] = to_json(spec);
    report["verdict"] = v.br_equals_br_prime ? "BrEqualsBrPrime" : "BrNotEqual";
    report["torsion"] = to_json(v.torsion);
    Json trace = Json::array();
    for (const auto& line : v.trace) trace.push_back(line);
    report["trace"] = std::move(trace);
    if (v.finite_certificate) {
        const auto& cert = *v.finite_certificate;
        Json c;
        c["order"] = to_json(cert.order);
        c["d1"] = to_json(cert.d1);
        c["d2"] = to_json(cert.d2);
        c["structure"] = to_json(cert.structure);
        c["generator_big"] = to_json(cert.generator_big);
        c["generator_small"] = to_json(cert.generator_small);
        report["group"] = std::move(c);
    } else {
        RationalCurve curve(spec.a, spec.b);
        auto rep = rational_torsion(curve);
        Json pts = Json::array();
        for (std::size_t i = 0; i < rep.points.size(); ++i) {
            Json p;
            p["point"] = to_json(rep.points[i]);
            p["order"] = to_json(rep.orders[i]);
            pts.push_back(std::move(p));
        }
        report["torsion_points"] = std::move(pts);
    }
    emit(report, output);
    return kOk;
}

int run_verdict(const std::string& input, const std::string& output) {
    Json j = read_json_input(input);
    StackDescriptor d = descriptor_from_json(j.at("descriptor"));
    SchemeInvariants s = invariants_from_json(j.value("invariants", Json::object()));
    Verdict v = evaluate(d, s);
    Json report = to_json(v);
    report["schema"] = "brq.verdict.v1";
    Json anchors = Json::array();
    for (const auto& step : v.trace) anchors.push_back(step.anchor);
    report["anchors"] = std::move(anchors);
    report["replay_consistent"] = replay_trace(v, d, s);
    emit(report, output);
    return v.conclusion == Conclusion::Unknown ? kUnknown : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Brauer-group bookkeeping for classifying stacks"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::size_t rank = 1, max_degree = 8, units_rank = 1, n = 2, charts = 2;
    std::string units_torsion;
    bool audit = false, no_torsion = false;
    std::string base_txt = "Z", element, inverse;
    std::size_t probe_samples = 0;
    std::string field = "Q", coeff_a = "0", coeff_b = "0";

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix (JSON in)");
    snf->add_option("--input,-i", input, "input file or - for stdin");
    snf->add_option("--output,-o", output, "output file (default stdout)");

    auto* gc = app.add_subcommand("group-cohomology",
                                  "cohomology of Z^r with coefficients in a presented module");
    gc->add_option("--input,-i", input, "input file or - for stdin");
    gc->add_option("--output,-o", output, "output file");

    auto* tc = app.add_subcommand("torus-complex",
                                  "bottom row of the unit/character complex of a split torus");
    tc->add_option("--rank", rank, "character lattice rank")->required();
    tc->add_option("--max-degree", max_degree, "top degree of the complex");
    tc->add_option("--units-rank", units_rank, "free rank of the unit-group model");
    tc->add_option("--units-torsion", units_torsion, "comma-separated torsion orders");
    tc->add_flag("--audit", audit, "include full differential matrices");
    tc->add_option("--output,-o", output, "output file");

    auto* gl = app.add_subcommand("gln-bottom-row",
                                  "the same bottom row for GL_n, labeled by factor determinants");
    gl->add_option("--n", n, "matrix size")->required();
    gl->add_option("--max-degree", max_degree, "top degree of the complex");
    gl->add_flag("--audit", audit, "include full differential matrices");
    gl->add_option("--output,-o", output, "output file");

    auto* az = app.add_subcommand("azumaya",
                                  "companion/transition gluing data and its identity check");
    az->add_option("--n", n, "torsion order / matrix size")->required();
    az->add_option("--charts", charts, "number of charts (>= 2)");
    az->add_flag("--no-torsion-relation", no_torsion,
                 "omit the trivializing relation (negative control)");
    az->add_option("--output,-o", output, "output file");

    auto* gu = app.add_subcommand("gln-units", "unit recognition in the determinant ring");
    gu->add_option("--base", base_txt, "base ring, e.g. Z, Z/6, F5, Z[a]/(a^2)");
    gu->add_option("--n", n, "matrix size (<= 5)")->required();
    gu->add_option("--element", element, "element expression, e.g. 'det + a'");
    gu->add_option("--inverse", inverse, "inverse witness expression");
    gu->add_option("--probe-samples", probe_samples, "run the nonzerodivisor probe");
    gu->add_option("--output,-o", output, "output file");

    auto* el = app.add_subcommand("elliptic", "point-group torsion and the Br = Br' verdict");
    el->add_option("--field", field, "prime p (>= 5) or Q")->required();
    el->add_option("--a", coeff_a, "coefficient a of y^2 = x^3 + ax + b")->required();
    el->add_option("--b", coeff_b, "coefficient b")->required();
    el->add_option("--output,-o", output, "output file");

    auto* vd = app.add_subcommand("verdict", "rules-engine verdict for a stack descriptor (JSON in)");
    vd->add_option("--input,-i", input, "input file or - for stdin");
    vd->add_option("--output,-o", output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    try {
        if (snf->parsed()) return run_snf(input, output);
        if (gc->parsed()) return run_group_cohomology(input, output);
        if (tc->parsed()) return run_torus_complex(rank, max_degree, units_rank, units_torsion,
                                                   audit, output);
        if (gl->parsed()) return run_gln_bottom_row(n, max_degree, audit, output);
        if (az->parsed()) return run_azumaya(n, charts, no_torsion, output);
        if (gu->parsed())
            return run_gln_units(base_txt, n, element, inverse, probe_samples, output);
        if (el->parsed()) return run_elliptic(field, coeff_a, coeff_b, output);
        if (vd->parsed()) return run_verdict(input, output);
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolated;
    }
    return kParseError;
}
