#pragma once
// Line-delimited JSON logs: observation records and position frames.
//
// Observation line: {"t": 3, "elements": {"id": {"TYPE": 0.9}},
//                    "assertions": [["subj", "obj", "role", 0.75]]}
// Position line:    {"t": 3, "objects": [["id", {"TYPE": 1.0}, 0.5, 1.0]]}

#include <iosfwd>
#include <string>
#include <vector>

#include "scenemem/ingest.hpp"
#include "scenemem/signature.hpp"

namespace scenemem {

std::vector<Observation> read_observation_log(std::istream& in);
std::vector<Observation> read_observation_log_file(const std::string& path);

std::vector<PositionFrame> read_position_log(std::istream& in);
std::vector<PositionFrame> read_position_log_file(const std::string& path);

std::string observation_to_json_line(const Observation& obs);

}  // namespace scenemem
