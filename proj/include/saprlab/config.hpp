#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "saprlab/errors.hpp"

namespace saprlab {

// Flat view of an INI-style config: "[section]" headers plus "key = value"
// lines become dotted "section.key" entries. '#' and ';' start comments;
// inline comments after a value are allowed. Later entries win, which is how
// command-line --set overrides slot in.
class ConfigMap {
public:
    static ConfigMap from_string(const std::string& text);
    static ConfigMap from_file(const std::string& path);

    // dotted == "section.key=value" or "section.key", value separately.
    void set(const std::string& dotted_key, const std::string& value);
    void set_assignment(const std::string& assignment);  // "section.key=value"

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string get_str(const std::string& key, const std::string& fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

struct NetworkSpec {
    std::string type = "ba";  // "ba" or "edgelist"
    int n = 1000;
    int m0 = 3;
    int m = 2;
    std::uint64_t seed = 1;
    std::string path;        // edgelist source file
    bool keep_lcc = true;    // edgelist: reduce to the largest component
};

struct RoutingSpec {
    std::string protocol = "sapr";  // spr | epr | epr2 | sapr | or
    double alpha = 1.0;
    double beta = 1.0;
    double k_c = 15.0;
    double eps = 0.3;
    int iterations = 50;
    double tolerance = 1e-3;
    std::uint64_t seed = 1;
    int or_iterations = 2000;
    double or_step = 1.0;
    bool or_multiplicative = false;
    std::string mode = "source";  // source | next-hop
};

struct TrafficSpec {
    int r = 1;
    int r_min = 1;
    int r_max = 200;
    int capacity = 1;
    int steps = 10000;
    int warmup = 2000;
    int window = 100;
    int seeds = 3;  // averaging seeds per sampled rate
    double eta_threshold = 0.01;
    std::uint64_t seed = 1;
};

struct ExperimentConfig {
    NetworkSpec network;
    RoutingSpec routing;
    TrafficSpec traffic;
    std::string out_dir = "out";
    int jobs = 1;

    static ExperimentConfig from_map(const ConfigMap& map);
    void validate() const;
};

}  // namespace saprlab
