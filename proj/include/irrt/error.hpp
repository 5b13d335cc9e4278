#pragma once

#include <stdexcept>
#include <string>

namespace irrt {

/// Raised when a request exceeds the sizes an operation supports
/// (canonical labelling, exhaustive enumeration, graph6 headers).
class LimitError : public std::out_of_range {
public:
    explicit LimitError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace irrt
