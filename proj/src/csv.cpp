#include "entroseg/csv.hpp"

#include "entroseg/signal.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace entroseg {

namespace {

bool parse_row(const std::string& line, double& a, double& b) {
    std::size_t comma = line.find(',');
    if (comma == std::string::npos)
        return false;
    try {
        std::size_t used = 0;
        a = std::stod(line.substr(0, comma), &used);
        b = std::stod(line.substr(comma + 1), &used);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace

Signal read_signal_csv(std::istream& in) {
    std::vector<double> x, y;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        double a, b;
        if (!parse_row(line, a, b)) {
            if (first) { // header line allowed once
                first = false;
                continue;
            }
            throw NonFiniteValueError("unparseable csv row: " + line);
        }
        first = false;
        x.push_back(a);
        y.push_back(b);
    }
    return make_signal(std::move(x), std::move(y));
}

Signal read_signal_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open " + path);
    return read_signal_csv(f);
}

void write_signal_csv(std::ostream& out, const Signal& s,
                      const std::string& xname, const std::string& yname) {
    out << xname << ',' << yname << '\n';
    out.precision(17);
    for (std::size_t i = 0; i < s.size(); ++i)
        out << s.x[i] << ',' << s.y[i] << '\n';
}

} // namespace entroseg
