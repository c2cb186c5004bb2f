#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwdarc/digraph.hpp"

namespace fwdarc::harness {

// Text form ("# comment", header "n m", m lines "u v", optional
// "part v1 v2 ..." lines) or the JSON mirror
// {"n": .., "arcs": [[u, v], ..], "parts": [[..], ..]}.
enum class InstanceFormat { Auto, Text, Json };

struct Instance {
  Digraph graph;
  std::optional<std::vector<VertexSeq>> parts;
  std::vector<std::string> warnings;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::string_view text, InstanceFormat format = InstanceFormat::Auto);
std::string serialize_instance(const Instance& inst, InstanceFormat format = InstanceFormat::Text);

InstanceFormat parse_format_name(std::string_view name);

}  // namespace fwdarc::harness
