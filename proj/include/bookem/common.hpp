#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bookem {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;
using Dart = std::int32_t;

constexpr VertexId kNoVertex = -1;
constexpr EdgeId kNoEdge = -1;
constexpr FaceId kNoFace = -1;

// Malformed input: bad documents, inconsistent rotations, unusable parameters.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

// A broken internal invariant. Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string &what) : std::logic_error(what) {}
};

inline int ceil_div2(int x) { return (x + 1) / 2; }

} // namespace bookem
