#include "compacta/report.hpp"

#include <iomanip>
#include <sstream>

namespace compacta {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(std::string_view bytes) {
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
    return os.str();
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json Report::to_json() const {
    json j;
    j["schema"] = "compacta-report/1";
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["resolution"] = resolution;
    j["tolerances"] = tolerances;
    j["results"] = results;
    j["falsification_events"] = falsification_events;
    if (!timings.is_null()) j["timings"] = timings;
    return j;
}

std::string Report::to_string() const { return to_json().dump(2) + "\n"; }

json labeling_json(const GridCompactum& K, const RegionLabeling& L) {
    json holes = json::array();
    for (int i = 0; i < L.hole_count(); ++i) {
        json h;
        h["index"] = i;
        h["cells"] = L.holes[i].cells;
        h["representative"] = complex_json(L.holes[i].representative);
        holes.push_back(h);
    }
    json j;
    j["set_cells"] = K.cell_count();
    j["hole_count"] = L.hole_count();
    j["holes"] = holes;
    return j;
}

json polyfit_json(const PolyFit& fit) {
    json j;
    j["degree"] = fit.degree;
    j["residual"] = fit.residual;
    j["conditioning"] = fit.conditioning;
    j["center"] = complex_json(fit.center);
    j["scale"] = fit.scale;
    json sweep = json::array();
    for (const auto& p : fit.sweep)
        sweep.push_back({{"degree", p.degree}, {"residual", p.residual}});
    j["sweep"] = sweep;
    if (fit.degree <= 24) {
        json coef = json::array();
        for (const auto& c : fit.coefficients_in_z()) coef.push_back(complex_json(c));
        j["coefficients"] = coef;
    }
    return j;
}

json injectivity_json(const InjectivityResult& r) {
    json j;
    j["injective"] = r.injective;
    j["delta"] = r.delta;
    j["epsilon"] = r.epsilon;
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        ws.push_back({{"z1", complex_json(w.z1)},
                      {"z2", complex_json(w.z2)},
                      {"w1", complex_json(w.w1)},
                      {"w2", complex_json(w.w2)},
                      {"domain_gap", w.domain_gap},
                      {"image_gap", w.image_gap}});
    }
    j["witnesses"] = ws;
    return j;
}

json criterion_json(const CriterionResult& r) {
    return {{"holds", r.holds}, {"gap", r.gap}, {"h_image", r.h_image}, {"tolerance", r.tolerance}};
}

json extension_report_json(const ExtensionReport& r) {
    json j;
    j["injective_on_K"] = injectivity_json(r.injective_on_K);
    j["fit"] = polyfit_json(r.fit);
    j["criterion"] = criterion_json(r.criterion);
    j["injective_on_hull"] = injectivity_json(r.injective_on_hull);
    j["hull_image_gap"] = r.hull_image_gap;
    j["h_image"] = r.h_image;
    if (r.hole_mapping_present) {
        json pairs = json::array();
        for (auto [a, b] : r.holes.pairs) pairs.push_back({{"from", a}, {"to", b}});
        j["hole_mapping"] = {{"pairs", pairs},
                             {"image_holes", r.holes.image_holes},
                             {"bijective", r.holes.bijective}};
    } else {
        j["hole_mapping"] = "ABSENT";
    }
    j["falsification_events"] = r.falsification_events;
    return j;
}

json factorization_json(const Factorization& f) {
    json j;
    json bases = json::array();
    for (const auto& b : f.base_points) bases.push_back(complex_json(b));
    j["base_points"] = bases;
    j["exponents"] = f.exponents;
    j["residual"] = f.residual;
    j["cycles"] = f.cycles.size();
    return j;
}

json rouche_verdict_json(const RoucheVerdict& v) {
    json j;
    j["boundary_admissible"] = v.boundary_admissible;
    j["classes_equal"] = v.classes_equal;
    j["hypothesis_holds"] = v.hypothesis_holds;
    j["count_f"] = v.count_f;
    j["count_g"] = v.count_g;
    j["counts_equal"] = v.counts_equal;
    j["argument_vs_oracle_consistent"] = v.argument_vs_oracle_consistent;
    j["falsification"] = v.falsification;
    j["class_f"] = v.class_f;
    j["class_g"] = v.class_g;
    return j;
}

json pmembership_json(const PMembership& m) {
    json j;
    j["member"] = m.member;
    j["confidence"] = m.confidence == Confidence::High ? "HIGH" : "LOW";
    j["exact"] = m.exact;
    j["final_residual"] = m.final_residual;
    j["noise_floor"] = m.noise_floor;
    json curve = json::array();
    for (const auto& p : m.curve)
        curve.push_back({{"degree", p.degree}, {"residual", p.residual}});
    j["residual_curve"] = curve;
    return j;
}

json generator_verdict_json(const GeneratorVerdict& v) {
    json j;
    switch (v.algebra) {
        case Algebra::C: j["algebra"] = "C"; break;
        case Algebra::A: j["algebra"] = "A"; break;
        case Algebra::R: j["algebra"] = "R"; break;
        case Algebra::P: j["algebra"] = "P"; break;
    }
    j["is_homeo"] = v.is_homeo;
    j["interior_empty"] = v.interior_empty;
    j["interior_empty_exact"] = v.interior_empty_exact;
    j["complement_connected"] = v.complement_connected;
    j["generates"] = v.generates;
    j["confidence"] = v.confidence == Confidence::High ? "HIGH" : "LOW";
    if (v.inverse_in_p) j["inverse_in_p"] = pmembership_json(*v.inverse_in_p);
    return j;
}

}  // namespace compacta
