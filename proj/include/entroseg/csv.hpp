#pragma once

#include "entroseg/types.hpp"

#include <iosfwd>
#include <string>

namespace entroseg {

// Two columns x,y; optional single header line; '.' decimal point.
Signal read_signal_csv(std::istream& in);
Signal read_signal_csv_file(const std::string& path);

void write_signal_csv(std::ostream& out, const Signal& s,
                      const std::string& xname = "x",
                      const std::string& yname = "y");

} // namespace entroseg
