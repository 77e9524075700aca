#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "srho/criteria.hpp"
#include "srho/radii.hpp"
#include "srho/region.hpp"
#include "srho/series.hpp"
#include "srho/verify.hpp"

namespace srho {

/// All numeric output is printed with 17 significant digits so runs are
/// byte-reproducible and round-trip exactly.
inline std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

/// Minimal deterministic JSON object/array builders (insertion order kept).
class JsonObject {
  public:
    JsonObject& field(const std::string& key, double v) { return raw(key, fmt17(v)); }
    JsonObject& field(const std::string& key, int v) { return raw(key, std::to_string(v)); }
    JsonObject& field(const std::string& key, bool v) { return raw(key, v ? "true" : "false"); }
    JsonObject& field(const std::string& key, const std::string& v) {
        return raw(key, "\"" + json_escape(v) + "\"");
    }
    JsonObject& field(const std::string& key, const char* v) {
        return field(key, std::string(v));
    }
    JsonObject& raw(const std::string& key, const std::string& json) {
        if (!first_) body_ += ",";
        first_ = false;
        body_ += "\"" + json_escape(key) + "\":" + json;
        return *this;
    }
    std::string str() const { return "{" + body_ + "}"; }

  private:
    std::string body_;
    bool first_ = true;
};

class JsonArray {
  public:
    JsonArray& add(double v) { return raw(fmt17(v)); }
    JsonArray& raw(const std::string& json) {
        if (!first_) body_ += ",";
        first_ = false;
        body_ += json;
        return *this;
    }
    std::string str() const { return "[" + body_ + "]"; }

  private:
    std::string body_;
    bool first_ = true;
};

inline std::string complex_json(Complex z) {
    return JsonArray{}.add(z.real()).add(z.imag()).str();
}

/// Coefficient dump: JSON array of [re, im] pairs, index = power.
inline std::string to_json(const TaylorSeries& s) {
    JsonArray arr;
    for (int k = 0; k <= s.order(); ++k) arr.raw(complex_json(s.at(k)));
    return arr.str();
}

inline std::string to_json(const VerificationReport& r) {
    JsonObject o;
    o.field("pass", r.pass);
    if (r.inconclusive) o.field("inconclusive", true);
    o.field("worst_margin", r.worst_margin);
    o.raw("witness", complex_json(r.witness));
    o.field("samples", static_cast<int>(r.samples_checked));
    return o.str();
}

inline std::string to_json(const RadiusReport& r) {
    JsonObject params;
    for (const auto& [k, v] : r.params) params.field(k, v);
    JsonObject o;
    o.field("class", r.class_name);
    o.raw("params", params.str());
    o.field("radius", r.radius);
    o.field("case", r.case_label);
    o.field("residual", r.residual);
    o.field("extremal", family_label(r.extremal));
    return o.str();
}

inline std::string to_json(const ThresholdRecord& t) {
    JsonObject o;
    o.field("zeta", t.zeta);
    o.field("beta", t.beta);
    o.field("kappa_max", t.kappa_max);
    o.field("k_min", t.k_min);
    if (t.s_hpl_min)
        o.field("s_hpl_min", *t.s_hpl_min);
    else
        o.raw("s_hpl_min", "null");
    o.field("s_l_min", t.s_l_min);
    return o.str();
}

}  // namespace srho
