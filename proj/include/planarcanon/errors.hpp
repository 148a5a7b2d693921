#ifndef PLANARCANON_ERRORS_HPP
#define PLANARCANON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace planarcanon {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPlanar : Error {
    explicit NonPlanar(const std::string& msg = "graph is not planar") : Error(msg) {}
};

struct NotBiconnected : Error {
    explicit NotBiconnected(const std::string& msg = "graph is not biconnected") : Error(msg) {}
};

struct Disconnected : Error {
    explicit Disconnected(const std::string& msg = "graph is not connected") : Error(msg) {}
};

struct TooSmall : Error {
    explicit TooSmall(const std::string& msg = "graph too small to decompose") : Error(msg) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg = "input exceeds the brute-force bound") : Error(msg) {}
};

struct MultipleCenter : Error {
    explicit MultipleCenter(const std::string& msg = "tree has no unique center") : Error(msg) {}
};

struct EdgeNotInComponent : Error {
    explicit EdgeNotInComponent(const std::string& msg = "start edge not in component") : Error(msg) {}
};

struct Not3Connected : Error {
    explicit Not3Connected(const std::string& msg = "component is not 3-connected") : Error(msg) {}
};

struct UnbalancedList : Error {
    explicit UnbalancedList(const std::string& msg = "canonical list brackets do not balance") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace planarcanon

#endif
