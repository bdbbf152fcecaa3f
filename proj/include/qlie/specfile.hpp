#ifndef QLIE_SPECFILE_HPP
#define QLIE_SPECFILE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "qlie/liebialg.hpp"

namespace qlie {

/// Bialgebra file:
///
///   [bialgebra]        dim_h = 1 / dim_v = 1
///   [C] [A] [gamma] [alpha]   lines "i j k = p/q"
///   [r] [P] [Q]        optional, lines "i j = p/q"
///
/// '#' starts a comment. Omitted entries are zero; repeated indices are an error.
struct SpecFile {
    LieBialgebraSpec spec;
    std::optional<ClassicalRMatrix> r;

    bool operator==(const SpecFile &) const = default;
};

class SpecParseError : public std::runtime_error {
public:
    SpecParseError(int line, const std::string &msg);
    int line() const { return line_; }

private:
    int line_;
};

SpecFile parse_spec_text(const std::string &text);
SpecFile parse_spec_file(const std::string &path);

std::string print_spec(const SpecFile &f);
void write_spec_file(const std::string &path, const SpecFile &f);

} // namespace qlie

#endif
