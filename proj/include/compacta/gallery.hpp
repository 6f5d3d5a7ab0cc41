#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace compacta {

struct GalleryAssertion {
    std::string name;
    bool passed = false;
    std::string details;
};

struct GalleryCaseResult {
    std::string id;
    std::string title;
    std::vector<GalleryAssertion> assertions;
    nlohmann::json payload = nlohmann::json::object();

    bool passed() const;
    nlohmann::json to_json() const;
};

// G1: tangent circles, no injective extension.
// G2: disk plus circle, regular and non-regular extension behavior.
// G3: annulus, boundary-injective but not injective.
// G4: clustering spiral, unbounded argument.
// G5: accessible spiral, continuous logarithm in closed form.
// G6: Darboux-Picard instance on the circle.
// G7: generator verdict table.
std::vector<std::string> gallery_case_ids();

GalleryCaseResult run_gallery_case(const std::string& id);

}  // namespace compacta
