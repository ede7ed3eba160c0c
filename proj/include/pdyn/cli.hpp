#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdyn/classify.hpp"
#include "pdyn/endo2.hpp"
#include "pdyn/rat1.hpp"

namespace pdyn {

struct Session {
    int cyclotomic_order = 1;
    long degree_cap = kDisjointCap;
    int iterate_cap = 6;
    unsigned long seed = 0;
    bool timing = false;  // include wall time in the report
};
Session make_session(int cyclotomic_order, long degree_cap, int iterate_cap);

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // canonical strings
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    std::string verdict;
    std::string error;
    double wall_time = 0;
    std::string to_json(bool timing = false) const;
};

struct RunResult {
    Report report;
    int exit_code = 0;  // 0 yes/ok, 1 no, 2 bad input, 3 budget
};

using Args = std::map<std::string, std::string>;

// Named option lists per command; "?" marks optional.
const std::map<std::string, std::vector<std::string>>& command_table();

RunResult run(const std::string& command, const Args& args, const Session& session);

// "(p, q)", cheb:d, tcheb:d, lattes:a,b,n (homogeneous lift), ex4:h
PlaneEndo parse_plane_map(const std::string& text, const Session& s);
// polynomial in x, "[F : G]" forms in s t, cheb:d, tcheb:d, lattes:a,b,n
RatMap1 parse_line_map(const std::string& text, const Session& s);
// "inf:inf,2:2,-2:2"
Orbifold1 parse_orbifold(const std::string& text, const Session& s);
PPoint parse_point(const std::string& text, const Session& s);

}  // namespace pdyn
