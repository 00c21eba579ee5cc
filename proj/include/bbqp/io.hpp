#ifndef BBQP_IO_HPP
#define BBQP_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbqp/instance.hpp"

namespace bbqp {

/// Parse failure; the message carries the 1-based line (and column where it
/// makes sense) of the offending input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Instance text format ('#' lines are comments, blank lines are skipped):
//   BBQP 1
//   m n
//   c_1 ... c_m
//   d_1 ... d_n
//   m rows of n integers (Q)
// serialize_instance emits the canonical form: single spaces, '\n' endings,
// no comments, trailing newline. parse(serialize(i)) == i for every instance.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance_text(const Instance& inst);

// Solution text format: "m n" on the first line, then x as one contiguous
// 0/1 string, then y.
Solution parse_solution(std::istream& in);
Solution parse_solution_text(const std::string& text);
void serialize_solution(const Solution& sol, std::ostream& out);
std::string serialize_solution_text(const Solution& sol);

/// Input to reduce_bqp, read from the analogous text format:
///   BQP 1
///   n
///   c'_1 ... c'_n
///   n rows of n integers (Q')
struct BqpProblem {
  std::vector<Value> q;  // row-major n*n
  std::vector<Value> c;  // length n
};
BqpProblem parse_bqp(std::istream& in);
BqpProblem parse_bqp_text(const std::string& text);

}  // namespace bbqp

#endif
