#include "qam/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qam {

namespace {

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return format_double(v);
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string json_params(const std::map<std::string, double>& params) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out += ",";
        first = false;
        out += json_string(k) + ":" + json_number(v);
    }
    out += "}";
    return out;
}

std::string rho_json_body(const RhoEstimate& r) {
    std::string out = "{";
    out += "\"value\":" + json_number(r.value);
    out += ",\"arg\":{\"x\":" + json_number(r.x) + ",\"z\":" + json_number(r.z) +
           ",\"theta\":" + json_number(r.theta) + "}";
    out += ",\"gap\":" + json_number(r.refinement_gap);
    out += ",\"evaluations\":" + std::to_string(r.evaluations);
    out += ",\"boundary_argmax\":" + std::string(r.boundary_argmax ? "true" : "false");
    out += "}";
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const BoundReport& rep) {
    std::string out = "{";
    out += "\"pair\":[" + json_string(rep.label_f) + "," + json_string(rep.label_g) + "]";
    out += ",\"interval\":[" + json_number(rep.U.lo) + "," + json_number(rep.U.hi) + "]";
    out += ",\"K\":" + json_number(rep.K);
    out += ",\"epsilon\":" + json_number(rep.epsilon);
    out += ",\"rho\":" + rho_json_body(rep.rho);
    out += ",\"bounds\":[";
    bool first = true;
    for (const BoundEntry& e : rep.bounds) {
        if (!first) out += ",";
        first = false;
        out += "{\"name\":" + json_string(e.name);
        out += ",\"value\":" + json_number(e.value);
        out += ",\"lower\":" + std::string(e.lower ? "true" : "false");
        out += ",\"applicable\":" + std::string(e.applicable ? "true" : "false");
        if (!e.applicable) out += ",\"reason\":" + json_string(e.reason);
        out += ",\"params\":" + json_params(e.params) + "}";
    }
    out += "]";
    out += ",\"sandwich\":{\"ok\":" + std::string(rep.sandwich_ok ? "true" : "false");
    out += ",\"lower_max\":" + json_number(rep.lower_max);
    out += ",\"upper_min\":" + json_number(rep.upper_min) + "}";
    out += "}";
    return out;
}

std::string to_csv(const BoundReport& rep) {
    std::string out = "name,value,applicable\n";
    out += "rho_measured," + format_double(rep.rho.value) + ",true\n";
    for (const BoundEntry& e : rep.bounds) {
        out += e.name + "," + format_double(e.value) + "," +
               (e.applicable ? "true" : "false") + "\n";
    }
    return out;
}

std::string to_text(const BoundReport& rep) {
    std::ostringstream os;
    os << "pair      " << rep.label_f << "  vs  " << rep.label_g << "\n";
    os << "interval  [" << format_double(rep.U.lo) << ", "
       << format_double(rep.U.hi) << "]\n";
    os << "K         " << format_double(rep.K) << "\n";
    os << "epsilon   " << format_double(rep.epsilon) << "\n";
    os << "rho       " << format_double(rep.rho.value) << "   at (x="
       << format_double(rep.rho.x) << ", z=" << format_double(rep.rho.z)
       << ", theta=" << format_double(rep.rho.theta) << ")\n\n";
    os << "  side   name                    value\n";
    for (const BoundEntry& e : rep.bounds) {
        char line[160];
        if (e.applicable) {
            std::snprintf(line, sizeof(line), "  %-6s %-22s %s\n",
                          e.lower ? "lower" : "upper", e.name.c_str(),
                          format_double(e.value).c_str());
        } else {
            std::snprintf(line, sizeof(line), "  %-6s %-22s n/a (%s)\n",
                          e.lower ? "lower" : "upper", e.name.c_str(),
                          e.reason.c_str());
        }
        os << line;
    }
    os << "\nsandwich  " << (rep.sandwich_ok ? "ok" : "VIOLATED")
       << "  (max lower " << format_double(rep.lower_max) << ", min upper "
       << format_double(rep.upper_min) << ")\n";
    return os.str();
}

std::string to_json(const RhoEstimate& rho) { return rho_json_body(rho); }

std::string to_text(const RhoEstimate& rho) {
    std::ostringstream os;
    os << "rho        " << format_double(rho.value) << "\n"
       << "arg        x=" << format_double(rho.x) << " z=" << format_double(rho.z)
       << " theta=" << format_double(rho.theta) << "\n"
       << "gap        " << format_double(rho.refinement_gap) << "\n"
       << "evals      " << rho.evaluations << "\n"
       << "boundary   " << (rho.boundary_argmax ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace qam
