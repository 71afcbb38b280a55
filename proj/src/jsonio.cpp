#include "gcl/jsonio.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace gcl {

using Json = nlohmann::ordered_json;

namespace {

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else
            ++col;
    }
    return {line, col};
}

}  // namespace

JobConfig parse_config_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = line_col(text, e.byte);
        throw ConfigError("ParseError at line " + std::to_string(l) + " column " +
                          std::to_string(c) + ": " + e.what());
    }
    JobConfig cfg;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ConfigError("ValidationError: n (integer) is required");
    cfg.n = j["n"].get<int>();
    if (cfg.n < 2) throw ConfigError("ValidationError: n must be >= 2");
    if (j.contains("gamma")) {
        if (!j["gamma"].is_object()) throw ConfigError("ValidationError: gamma must be an object");
        for (auto& [k, v] : j["gamma"].items()) {
            try {
                cfg.gamma[std::stoi(k)] = v.get<int>();
            } catch (const nlohmann::json::exception&) {
                throw ConfigError("ValidationError: gamma values must be integers");
            } catch (const std::exception&) {
                throw ConfigError("ValidationError: gamma keys must be integers");
            }
        }
    }
    if (j.contains("convention")) {
        std::string c = j["convention"].get<std::string>();
        if (c == "h")
            cfg.convention = Convention::H;
        else if (c == "g")
            cfg.convention = Convention::G;
        else
            throw ConfigError("ValidationError: convention must be h or g");
    }
    if (j.contains("group")) {
        std::string g = j["group"].get<std::string>();
        if (g == "gl")
            cfg.group = Group::GL;
        else if (g == "sl")
            cfg.group = Group::SL;
        else
            throw ConfigError("ValidationError: group must be gl or sl");
    }
    if (j.contains("r0_mode")) {
        std::string m = j["r0_mode"].get<std::string>();
        if (m == "generic")
            cfg.r0_mode = R0Mode::Generic;
        else if (m == "ringed")
            cfg.r0_mode = R0Mode::Ringed;
        else
            throw ConfigError("ValidationError: r0_mode must be generic or ringed");
    }
    if (j.contains("points")) cfg.points = j["points"].get<int>();
    if (cfg.points < 3) throw ConfigError("ValidationError: points must be >= 3");
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("symbolic_cap")) cfg.symbolic_cap = j["symbolic_cap"].get<int>();
    // Triple axioms validated eagerly so the error names the axiom.
    try {
        (void)cfg.triple();
    } catch (const BDValidationError& e) {
        throw ConfigError("ValidationError: " + e.axiom);
    }
    return cfg;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("ParseError: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string dump_config(const JobConfig& cfg) {
    Json j;
    j["n"] = cfg.n;
    Json g = Json::object();
    for (auto [a, b] : cfg.gamma) g[std::to_string(a)] = b;
    j["gamma"] = g;
    j["convention"] = cfg.convention == Convention::H ? "h" : "g";
    j["group"] = cfg.group == Group::GL ? "gl" : "sl";
    j["r0_mode"] = cfg.r0_mode == R0Mode::Generic ? "generic" : "ringed";
    j["points"] = cfg.points;
    j["seed"] = cfg.seed;
    j["symbolic_cap"] = cfg.symbolic_cap;
    return j.dump();
}

std::string triple_json(const BDTriple& t) {
    Json j;
    j["n"] = t.n();
    Json g = Json::object();
    for (auto [a, b] : t.gamma()) g[std::to_string(a)] = b;
    j["gamma"] = g;
    return j.dump();
}

std::string seed_json(const InitialSeed& init, const Seed& s) {
    Json j;
    j["triple"] = Json::parse(triple_json(init.triple));
    j["convention"] = init.conv == Convention::H ? "h" : "g";
    j["group"] = init.group == Group::GL ? "gl" : "sl";
    Json vars = Json::array();
    for (size_t k = 0; k < init.vars.size(); ++k) {
        const auto& f = init.vars[k];
        Json v;
        v["name"] = f.name.str();
        v["frozen"] = f.frozen;
        v["multiplicity"] = f.mult;
        v["degree"] = f.degree;
        if (!f.frozen) {
            Json str = Json::array();
            for (const auto& mono : f.pstring) {
                Json m = Json::object();
                for (auto& [nm, e] : mono.exp) m[nm] = e;
                str.push_back(m);
            }
            v["string"] = str;
        }
        v["value"] = f.value.to_string((unsigned)init.n);
        vars.push_back(v);
    }
    j["variables"] = vars;
    Json b = Json::array();
    for (int i = 0; i < s.B.N; ++i) {
        Json row = Json::array();
        for (int c = 0; c < s.total(); ++c) row.push_back(s.B.at(i, c));
        b.push_back(row);
    }
    j["exchange_matrix"] = b;
    return j.dump(2);
}

std::string report_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    Json params = Json::object();
    for (auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["seed"] = r.seed;
    j["pass"] = r.pass();
    Json checks = Json::array();
    for (auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j.dump(2);
}

std::string reexport_quiver_json(const std::string& text) {
    Json j = Json::parse(text);
    std::ostringstream os;
    os << "{\"mult\":[";
    for (size_t i = 0; i < j["mult"].size(); ++i) os << (i ? "," : "") << j["mult"][i].get<long long>();
    os << "],\"names\":[";
    for (size_t i = 0; i < j["names"].size(); ++i)
        os << (i ? "," : "") << '"' << j["names"][i].get<std::string>() << '"';
    os << "],\"frozen\":[";
    for (size_t i = 0; i < j["frozen"].size(); ++i)
        os << (i ? "," : "") << (j["frozen"][i].get<bool>() ? "true" : "false");
    os << "],\"b\":[";
    for (size_t i = 0; i < j["b"].size(); ++i) {
        os << (i ? "," : "") << "[";
        for (size_t c = 0; c < j["b"][i].size(); ++c)
            os << (c ? "," : "") << j["b"][i][c].get<long long>();
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace gcl
