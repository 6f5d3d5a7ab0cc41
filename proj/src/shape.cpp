#include "compacta/shape.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "compacta/error.hpp"

namespace compacta {

using nlohmann::json;

ShapeSpec ShapeSpec::disk(Complex c, double r) {
    ShapeSpec s;
    s.kind = Kind::Disk;
    s.center = c;
    s.radius = r;
    return s;
}

ShapeSpec ShapeSpec::circle(Complex c, double r, double band) {
    ShapeSpec s;
    s.kind = Kind::Circle;
    s.center = c;
    s.radius = r;
    s.band = band;
    return s;
}

ShapeSpec ShapeSpec::annulus(Complex c, double r_in, double r_out) {
    ShapeSpec s;
    s.kind = Kind::Annulus;
    s.center = c;
    s.r_in = r_in;
    s.r_out = r_out;
    return s;
}

ShapeSpec ShapeSpec::segment(Complex a, Complex b, double band) {
    ShapeSpec s;
    s.kind = Kind::Segment;
    s.a = a;
    s.b = b;
    s.band = band;
    return s;
}

ShapeSpec ShapeSpec::spiral(SpiralKind k, double t_max, double band) {
    ShapeSpec s;
    s.kind = Kind::Spiral;
    s.spiral_kind = k;
    s.t_max = t_max;
    s.band = band;
    return s;
}

ShapeSpec ShapeSpec::union_of(std::vector<ShapeSpec> parts) {
    ShapeSpec s;
    s.kind = Kind::Union;
    s.children = std::move(parts);
    return s;
}

ShapeSpec ShapeSpec::translated(Complex offset, ShapeSpec child) {
    ShapeSpec s;
    s.kind = Kind::Translate;
    s.offset = offset;
    s.children.push_back(std::move(child));
    return s;
}

ShapeSpec ShapeSpec::scaled(double factor, ShapeSpec child) {
    ShapeSpec s;
    s.kind = Kind::Scale;
    s.factor = factor;
    s.children.push_back(std::move(child));
    return s;
}

Complex spiral_point(ShapeSpec::SpiralKind k, double t) {
    if (k == ShapeSpec::SpiralKind::Clustering)
        return -1.0 + (1.0 + 1.0 / (1.0 + t)) * std::polar(1.0, t);
    return std::polar(1.0 / (1.0 + t), t);
}

double spiral_speed_bound(ShapeSpec::SpiralKind k, double t) {
    double q = 1.0 / (1.0 + t);
    if (k == ShapeSpec::SpiralKind::Clustering) return (1.0 + q) + q * q;
    return q + q * q;
}

void ShapeSpec::validate() const {
    switch (kind) {
        case Kind::Disk:
            if (!(radius > 0)) fail("EmptySpec", "disk radius must be positive");
            break;
        case Kind::Circle:
            if (!(radius > 0)) fail("EmptySpec", "circle radius must be positive");
            if (!(band > 0)) fail("EmptySpec", "circle band must be positive");
            break;
        case Kind::Annulus:
            if (!(r_in > 0) || !(r_out > r_in))
                fail("EmptySpec", "annulus requires 0 < r_in < r_out");
            break;
        case Kind::Segment:
            if (!(band > 0)) fail("EmptySpec", "segment band must be positive");
            if (a == b) fail("EmptySpec", "segment endpoints coincide");
            break;
        case Kind::Spiral:
            if (!(t_max > 0)) fail("EmptySpec", "spiral t_max must be positive");
            if (!(band > 0)) fail("EmptySpec", "spiral band must be positive");
            break;
        case Kind::Union:
            if (children.empty()) fail("EmptySpec", "empty union");
            for (const auto& c : children) c.validate();
            break;
        case Kind::Translate:
            if (children.size() != 1) fail("EmptySpec", "translate requires one child");
            children[0].validate();
            break;
        case Kind::Scale:
            if (!(factor > 0)) fail("EmptySpec", "scale factor must be positive");
            if (children.size() != 1) fail("EmptySpec", "scale requires one child");
            children[0].validate();
            break;
    }
    if (leaf_count() == 0) fail("EmptySpec", "spec has no primitives");
}

int ShapeSpec::leaf_count() const {
    switch (kind) {
        case Kind::Union:
        case Kind::Translate:
        case Kind::Scale: {
            int n = 0;
            for (const auto& c : children) n += c.leaf_count();
            return n;
        }
        default:
            return 1;
    }
}

bool ShapeSpec::all_leaves_thin() const {
    switch (kind) {
        case Kind::Disk:
        case Kind::Annulus:
            return false;
        case Kind::Circle:
        case Kind::Segment:
        case Kind::Spiral:
            return true;
        default:
            for (const auto& c : children)
                if (!c.all_leaves_thin()) return false;
            return !children.empty();
    }
}

namespace {

double min_feature_scaled(const ShapeSpec& s, double scale) {
    switch (s.kind) {
        case ShapeSpec::Kind::Disk:
            return scale * s.radius;
        case ShapeSpec::Kind::Circle:
            return scale * std::min(s.band, s.radius);
        case ShapeSpec::Kind::Annulus:
            return scale * std::min(s.r_out - s.r_in, s.r_in);
        case ShapeSpec::Kind::Segment:
            return scale * s.band;
        case ShapeSpec::Kind::Spiral:
            return scale * s.band;
        case ShapeSpec::Kind::Scale:
            return min_feature_scaled(s.children[0], scale * s.factor);
        case ShapeSpec::Kind::Translate:
            return min_feature_scaled(s.children[0], scale);
        case ShapeSpec::Kind::Union: {
            double m = std::numeric_limits<double>::infinity();
            for (const auto& c : s.children) m = std::min(m, min_feature_scaled(c, scale));
            return m;
        }
    }
    return 0;
}

Box bounds_world(const ShapeSpec& s, double scale, Complex shift) {
    auto pt = [&](Complex z) { return scale * z + shift; };
    Box b{1e300, -1e300, 1e300, -1e300};
    switch (s.kind) {
        case ShapeSpec::Kind::Disk: {
            Complex c = pt(s.center);
            double r = scale * s.radius;
            b = {c.real() - r, c.real() + r, c.imag() - r, c.imag() + r};
            break;
        }
        case ShapeSpec::Kind::Circle: {
            Complex c = pt(s.center);
            double r = scale * (s.radius + s.band / 2);
            b = {c.real() - r, c.real() + r, c.imag() - r, c.imag() + r};
            break;
        }
        case ShapeSpec::Kind::Annulus: {
            Complex c = pt(s.center);
            double r = scale * s.r_out;
            b = {c.real() - r, c.real() + r, c.imag() - r, c.imag() + r};
            break;
        }
        case ShapeSpec::Kind::Segment: {
            Complex a = pt(s.a), q = pt(s.b);
            b = {std::min(a.real(), q.real()), std::max(a.real(), q.real()),
                 std::min(a.imag(), q.imag()), std::max(a.imag(), q.imag())};
            b.inflate(scale * s.band / 2);
            break;
        }
        case ShapeSpec::Kind::Spiral: {
            // Coarse parameter sweep; exact enough for grid sizing.
            double t = 0;
            b = Box{1e300, -1e300, 1e300, -1e300};
            while (t <= s.t_max) {
                b.expand(pt(spiral_point(s.spiral_kind, t)));
                t += 0.01;
            }
            b.expand(pt(spiral_point(s.spiral_kind, s.t_max)));
            b.inflate(scale * s.band / 2);
            break;
        }
        case ShapeSpec::Kind::Union:
            for (const auto& c : s.children) b.merge(bounds_world(c, scale, shift));
            break;
        case ShapeSpec::Kind::Translate:
            b = bounds_world(s.children[0], scale, shift + scale * s.offset);
            break;
        case ShapeSpec::Kind::Scale:
            b = bounds_world(s.children[0], scale * s.factor, shift);
            break;
    }
    return b;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail("ParseError", std::string(what) + ": expected number or [re, im]");
}

json shape_to_json(const ShapeSpec& s) {
    json j;
    switch (s.kind) {
        case ShapeSpec::Kind::Disk:
            j["type"] = "disk";
            j["center"] = complex_to_json(s.center);
            j["r"] = s.radius;
            break;
        case ShapeSpec::Kind::Circle:
            j["type"] = "circle";
            j["center"] = complex_to_json(s.center);
            j["r"] = s.radius;
            j["band"] = s.band;
            break;
        case ShapeSpec::Kind::Annulus:
            j["type"] = "annulus";
            j["center"] = complex_to_json(s.center);
            j["r_in"] = s.r_in;
            j["r_out"] = s.r_out;
            break;
        case ShapeSpec::Kind::Segment:
            j["type"] = "segment";
            j["a"] = complex_to_json(s.a);
            j["b"] = complex_to_json(s.b);
            j["band"] = s.band;
            break;
        case ShapeSpec::Kind::Spiral:
            j["type"] = "spiral";
            j["kind"] = s.spiral_kind == ShapeSpec::SpiralKind::Clustering ? "clustering"
                                                                           : "accessible";
            j["t_max"] = s.t_max;
            j["band"] = s.band;
            break;
        case ShapeSpec::Kind::Union: {
            j["type"] = "union";
            json kids = json::array();
            for (const auto& c : s.children) kids.push_back(shape_to_json(c));
            j["children"] = kids;
            break;
        }
        case ShapeSpec::Kind::Translate:
            j["type"] = "translate";
            j["offset"] = complex_to_json(s.offset);
            j["child"] = shape_to_json(s.children[0]);
            break;
        case ShapeSpec::Kind::Scale:
            j["type"] = "scale";
            j["factor"] = s.factor;
            j["child"] = shape_to_json(s.children[0]);
            break;
    }
    return j;
}

double num_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        fail("ParseError", std::string("missing numeric field '") + key + "'");
    return j[key].get<double>();
}

ShapeSpec shape_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        fail("ParseError", "shape node must be an object with a 'type' string");
    const std::string type = j["type"].get<std::string>();
    if (type == "disk")
        return ShapeSpec::disk(complex_from_json(j.at("center"), "center"), num_field(j, "r"));
    if (type == "circle")
        return ShapeSpec::circle(complex_from_json(j.at("center"), "center"), num_field(j, "r"),
                                 num_field(j, "band"));
    if (type == "annulus")
        return ShapeSpec::annulus(complex_from_json(j.at("center"), "center"),
                                  num_field(j, "r_in"), num_field(j, "r_out"));
    if (type == "segment")
        return ShapeSpec::segment(complex_from_json(j.at("a"), "a"),
                                  complex_from_json(j.at("b"), "b"), num_field(j, "band"));
    if (type == "spiral") {
        if (!j.contains("kind") || !j["kind"].is_string())
            fail("ParseError", "spiral requires kind: clustering|accessible");
        const std::string k = j["kind"].get<std::string>();
        if (k != "clustering" && k != "accessible")
            fail("ParseError", "spiral kind must be clustering or accessible");
        return ShapeSpec::spiral(k == "clustering" ? ShapeSpec::SpiralKind::Clustering
                                                   : ShapeSpec::SpiralKind::Accessible,
                                 num_field(j, "t_max"), num_field(j, "band"));
    }
    if (type == "union") {
        if (!j.contains("children") || !j["children"].is_array())
            fail("ParseError", "union requires a children array");
        std::vector<ShapeSpec> kids;
        for (const auto& c : j["children"]) kids.push_back(shape_from_json(c));
        return ShapeSpec::union_of(std::move(kids));
    }
    if (type == "translate")
        return ShapeSpec::translated(complex_from_json(j.at("offset"), "offset"),
                                     shape_from_json(j.at("child")));
    if (type == "scale")
        return ShapeSpec::scaled(num_field(j, "factor"), shape_from_json(j.at("child")));
    fail("ParseError", "unknown shape type '" + type + "'");
}

}  // namespace

double ShapeSpec::min_feature() const { return min_feature_scaled(*this, 1.0); }

Box ShapeSpec::bounds() const { return bounds_world(*this, 1.0, Complex{}); }

std::string ShapeSpec::to_json() const { return shape_to_json(*this).dump(2); }

ShapeSpec ShapeSpec::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("ParseError", "invalid JSON in shape spec");
    ShapeSpec s = shape_from_json(j);
    s.validate();
    return s;
}

double Box::diagonal() const { return std::hypot(width(), height()); }

Box Box::of(const std::vector<Complex>& pts) {
    Box b{1e300, -1e300, 1e300, -1e300};
    for (auto z : pts) b.expand(z);
    return b;
}

}  // namespace compacta
