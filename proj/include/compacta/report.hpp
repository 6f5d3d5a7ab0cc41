#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "compacta/eilenberg.hpp"
#include "compacta/extension.hpp"
#include "compacta/generators.hpp"
#include "compacta/grid.hpp"
#include "compacta/rouche.hpp"

namespace compacta {

// Reports are deterministic for identical inputs and flags; timings are
// opt-in because wall-clock values break byte-for-byte reproducibility.
struct Report {
    std::string command;
    std::string input_digest;
    double resolution = 0;
    nlohmann::json tolerances = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> falsification_events;
    nlohmann::json timings;  // null unless enabled

    nlohmann::json to_json() const;
    std::string to_string() const;  // pretty, stable key order
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

nlohmann::json complex_json(Complex z);
nlohmann::json labeling_json(const GridCompactum& K, const RegionLabeling& L);
nlohmann::json polyfit_json(const PolyFit& fit);
nlohmann::json injectivity_json(const InjectivityResult& r);
nlohmann::json criterion_json(const CriterionResult& r);
nlohmann::json extension_report_json(const ExtensionReport& r);
nlohmann::json factorization_json(const Factorization& f);
nlohmann::json rouche_verdict_json(const RoucheVerdict& v);
nlohmann::json generator_verdict_json(const GeneratorVerdict& v);
nlohmann::json pmembership_json(const PMembership& m);

}  // namespace compacta
