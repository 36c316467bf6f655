#pragma once

#include <string>
#include <vector>

#include "seqknap/inequalities.hpp"

namespace seqknap {

// All JSON text speaks the user's numbering: items, knapsacks, parts, block
// types and classes are 1-based on the wire, 0-based in memory.

Instance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst, bool pretty = false);
std::string serialize_partition(const CapacityPartition& part, bool pretty = false);
std::string serialize_assignment_x(const AssignmentX& x, const Instance& inst, bool pretty = false);
std::string serialize_msp(const MspInstance& msp, const Instance& inst, bool pretty = false);
std::string serialize_assignment_y(const AssignmentY& y, const MspInstance& msp, bool pretty = false);
std::string serialize_assignments_y(const std::vector<AssignmentY>& ys, const MspInstance& msp,
                                    bool pretty = false);
std::string serialize_y_inequalities(const std::vector<YInequality>& rows, bool pretty = false);
std::string serialize_x_inequalities(const std::vector<LinearInequalityX>& rows, bool pretty = false);

} // namespace seqknap
