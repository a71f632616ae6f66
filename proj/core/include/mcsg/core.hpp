#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "mcsg/types.hpp"

namespace mcsg {

double dist(const Point& p, const Point& q);
double edge_length(const Instance& inst, const Edge& e);

ColorSet edge_color(const Instance& inst, const Edge& e);
bool is_csg(const Instance& inst, const EdgeSet& edges);
double solution_cost(const Instance& inst, const EdgeSet& edges);

// Sorts and removes duplicate edges.
EdgeSet canonical(EdgeSet edges);
// Canonical edges with recomputed cost.
Solution make_solution(const Instance& inst, std::string algorithm, EdgeSet edges,
                       std::optional<double> ratio_bound = std::nullopt);
// Throws InvariantViolation when the edges are out of range, duplicated,
// the cost disagrees with the edge lengths, or the graph is not a CSG.
void check_solution(const Instance& inst, const Solution& sol);

// Throws InputError on k out of range, bad colors, non-finite or coincident points.
void validate_instance(const Instance& inst);

Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);
void save_instance(std::ostream& out, const Instance& inst);
std::string instance_to_json(const Instance& inst);

std::string solution_to_json(const Solution& sol);
Solution load_solution(std::istream& in);
Solution load_solution_file(const std::string& path);

// n points uniform in the unit square.
Instance generate_random(int n, int k, double multichromatic_fraction, std::uint64_t seed);
// n points with distinct random x in [0,1] on the line y = 0, sorted by x.
Instance generate_collinear(int n, int k, double multichromatic_fraction, std::uint64_t seed);

// Points ordered along their common line; empty if not collinear within 1e-9.
std::vector<int> collinear_order(const Instance& inst);

}  // namespace mcsg
