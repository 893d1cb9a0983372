#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgraph {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
// Global index of one (edge, label) appearance inside a TemporalGraph.
using Slot = std::uint32_t;

/// Closed time interval [start, end].
struct Window {
  double start = 0.0;
  double end = 1.0;

  bool contains(double t) const { return start <= t && t <= end; }
  bool contains(const Window& w) const {
    return start <= w.start && w.end <= end;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

/// One labelled appearance of the undirected edge {u, v} at time t.
struct Appearance {
  Vertex u = 0;
  Vertex v = 0;
  double t = 0.0;

  friend bool operator==(const Appearance&, const Appearance&) = default;
};

// Error hierarchy. The C API maps each class onto one status code.

/// A precondition of an operation was violated by the caller.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured resource cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A foremost tree was requested from a vertex that is not a temporal source.
class NotSourceError : public std::runtime_error {
 public:
  NotSourceError(std::string what, std::size_t step)
      : std::runtime_error(std::move(what)), step_(step) {}
  /// 1-based step of the tree loop that found no eligible cut edge.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tgraph
