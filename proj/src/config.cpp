#include "saprlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace saprlab {

namespace {

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
    const std::size_t p = s.find_first_of("#;");
    return (p == std::string::npos) ? s : s.substr(0, p);
}

}  // namespace

ConfigMap ConfigMap::from_string(const std::string& text) {
    ConfigMap map;
    std::istringstream in(text);
    std::string line, section;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') throw ParseError("unterminated section header", lineno);
            section = trim(body.substr(1, body.size() - 2));
            if (section.empty()) throw ParseError("empty section name", lineno);
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", lineno);
        if (section.empty()) throw ParseError("key outside any [section]", lineno);
        map.entries_[section + "." + key] = value;
    }
    return map;
}

ConfigMap ConfigMap::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

void ConfigMap::set(const std::string& dotted_key, const std::string& value) {
    if (dotted_key.find('.') == std::string::npos)
        throw ParameterError("config key must look like section.key: " + dotted_key);
    entries_[dotted_key] = value;
}

void ConfigMap::set_assignment(const std::string& assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ParameterError("override must look like section.key=value: " + assignment);
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

std::string ConfigMap::get_str(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return (it == entries_.end()) ? fallback : it->second;
}

long long ConfigMap::get_int(const std::string& key, long long fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    char* end = nullptr;
    const long long v = std::strtoll(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0')
        throw ParameterError("config key " + key + " is not an integer: " + it->second);
    return v;
}

double ConfigMap::get_double(const std::string& key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0')
        throw ParameterError("config key " + key + " is not a number: " + it->second);
    return v;
}

std::uint64_t ConfigMap::get_seed(const std::string& key, std::uint64_t fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0')
        throw ParameterError("config key " + key + " is not a seed: " + it->second);
    return v;
}

bool ConfigMap::get_bool(const std::string& key, bool fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    std::string v = it->second;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw ParameterError("config key " + key + " is not a boolean: " + it->second);
}

ExperimentConfig ExperimentConfig::from_map(const ConfigMap& map) {
    ExperimentConfig cfg;
    cfg.network.type = map.get_str("network.type", cfg.network.type);
    cfg.network.n = static_cast<int>(map.get_int("network.n", cfg.network.n));
    cfg.network.m0 = static_cast<int>(map.get_int("network.m0", cfg.network.m0));
    cfg.network.m = static_cast<int>(map.get_int("network.m", cfg.network.m));
    cfg.network.seed = map.get_seed("network.seed", cfg.network.seed);
    cfg.network.path = map.get_str("network.path", cfg.network.path);
    cfg.network.keep_lcc = map.get_bool("network.keep_lcc", cfg.network.keep_lcc);

    cfg.routing.protocol = map.get_str("routing.protocol", cfg.routing.protocol);
    cfg.routing.alpha = map.get_double("routing.alpha", cfg.routing.alpha);
    cfg.routing.beta = map.get_double("routing.beta", cfg.routing.beta);
    cfg.routing.k_c = map.get_double("routing.k_c", cfg.routing.k_c);
    cfg.routing.eps = map.get_double("routing.eps", cfg.routing.eps);
    cfg.routing.iterations = static_cast<int>(map.get_int("routing.iterations", cfg.routing.iterations));
    cfg.routing.tolerance = map.get_double("routing.tolerance", cfg.routing.tolerance);
    cfg.routing.seed = map.get_seed("routing.seed", cfg.routing.seed);
    cfg.routing.or_iterations = static_cast<int>(map.get_int("routing.or_iterations", cfg.routing.or_iterations));
    cfg.routing.or_step = map.get_double("routing.or_step", cfg.routing.or_step);
    cfg.routing.or_multiplicative = map.get_bool("routing.or_multiplicative", cfg.routing.or_multiplicative);
    cfg.routing.mode = map.get_str("routing.mode", cfg.routing.mode);

    cfg.traffic.r = static_cast<int>(map.get_int("traffic.r", cfg.traffic.r));
    cfg.traffic.r_min = static_cast<int>(map.get_int("traffic.r_min", cfg.traffic.r_min));
    cfg.traffic.r_max = static_cast<int>(map.get_int("traffic.r_max", cfg.traffic.r_max));
    cfg.traffic.capacity = static_cast<int>(map.get_int("traffic.capacity", cfg.traffic.capacity));
    cfg.traffic.steps = static_cast<int>(map.get_int("traffic.steps", cfg.traffic.steps));
    cfg.traffic.warmup = static_cast<int>(map.get_int("traffic.warmup", cfg.traffic.warmup));
    cfg.traffic.window = static_cast<int>(map.get_int("traffic.window", cfg.traffic.window));
    cfg.traffic.seeds = static_cast<int>(map.get_int("traffic.seeds", cfg.traffic.seeds));
    cfg.traffic.eta_threshold = map.get_double("traffic.eta_threshold", cfg.traffic.eta_threshold);
    cfg.traffic.seed = map.get_seed("traffic.seed", cfg.traffic.seed);

    cfg.out_dir = map.get_str("output.dir", cfg.out_dir);
    cfg.jobs = static_cast<int>(map.get_int("run.jobs", cfg.jobs));

    cfg.validate();
    return cfg;
}

void ExperimentConfig::validate() const {
    if (network.type != "ba" && network.type != "edgelist")
        throw ParameterError("network.type must be 'ba' or 'edgelist'");
    if (network.type == "edgelist" && network.path.empty())
        throw ParameterError("network.type=edgelist needs network.path");
    if (routing.protocol != "spr" && routing.protocol != "epr" && routing.protocol != "epr2" &&
        routing.protocol != "sapr" && routing.protocol != "or")
        throw ParameterError("routing.protocol must be one of spr, epr, epr2, sapr, or");
    if (routing.mode != "source" && routing.mode != "next-hop")
        throw ParameterError("routing.mode must be 'source' or 'next-hop'");
    if (routing.alpha < 0.0) throw ParameterError("routing.alpha must be >= 0");
    if (jobs < 1) throw ParameterError("run.jobs must be >= 1");
    if (traffic.seeds < 1) throw ParameterError("traffic.seeds must be >= 1");
}

}  // namespace saprlab
