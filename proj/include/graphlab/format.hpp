#ifndef GRAPHLAB_FORMAT_HPP
#define GRAPHLAB_FORMAT_HPP

#include <string>

namespace graphlab {

// Locale-independent number rendering (std::to_chars): shortest
// round-trippable form for CSV cells, 6 significant digits for summaries.
std::string format_full(double value);
std::string format_sig6(double value);

}  // namespace graphlab

#endif
