#include "graphlab/format.hpp"

#include <charconv>
#include <system_error>

namespace graphlab {

namespace {
std::string to_chars_str(double value, int precision) {
    char buf[64];
    std::to_chars_result res =
        precision < 0
            ? std::to_chars(buf, buf + sizeof buf, value)
            : std::to_chars(buf, buf + sizeof buf, value,
                            std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}
}  // namespace

std::string format_full(double value) { return to_chars_str(value, -1); }

std::string format_sig6(double value) { return to_chars_str(value, 6); }

}  // namespace graphlab
