#ifndef TASSP_IO_HPP_
#define TASSP_IO_HPP_

#include <stdexcept>
#include <string>

#include "tassp/instance.hpp"

namespace tassp {

// Malformed file: JSON syntax errors, missing or mistyped fields, or an
// instance that fails validation on load. The message names the offending
// field or invariant.
class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance file schema (JSON):
//   { "name": str, "k": int, "m": int,
//     "depot": [x, y] | null,
//     "targets": [ { "id": str, "pos": [x, y] | null, "p": num }, ... ],
//     "matrix": null | row-major list of lists indexed [depot, targets...] }
// Exactly one of (all positions present) or (matrix present) is required.
Instance read_instance(const std::string& path);
void write_instance(const Instance& instance, const std::string& path);

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text, const std::string& origin = "<string>");

}  // namespace tassp

#endif  // TASSP_IO_HPP_
