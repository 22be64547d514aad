#include "kacpp/point_process.hpp"

#include <stdexcept>

namespace kacpp {

SignConvention parse_sign_convention(const std::string& s) {
    if (s == "abs-minus-one") return SignConvention::AbsMinusOne;
    if (s == "one-minus-abs") return SignConvention::OneMinusAbs;
    throw std::invalid_argument("sign convention must be abs-minus-one or one-minus-abs");
}

std::string to_string(SignConvention s) {
    return s == SignConvention::AbsMinusOne ? "abs-minus-one" : "one-minus-abs";
}

} // namespace kacpp
