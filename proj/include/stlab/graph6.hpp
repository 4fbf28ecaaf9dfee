#pragma once

#include <stdexcept>
#include <string>

#include "stlab/graph.hpp"

namespace stlab {

/// Malformed graph6 input; offset is the byte position of the defect.
class Graph6Error : public std::runtime_error {
  public:
    Graph6Error(size_t offset, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    size_t offset() const { return offset_; }

  private:
    size_t offset_;
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace stlab
