#ifndef SYLV_REPORT_HPP
#define SYLV_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "sylv/rational.hpp"

namespace sylv {

/// Outcome of one identity check. Both sides are reported after
/// cross-multiplication, so no check ever divides and `holds` is a
/// plain exact comparison of lhs and rhs.
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;  // insertion order kept for output
    Rat lhs;
    Rat rhs;
    bool holds = false;
    std::string notes;

    /// One JSON object: {"identity","params","lhs","rhs","holds","notes"};
    /// scalars rendered as "p/q" strings, key order fixed.
    std::string to_json() const;
};

/// `holds` is derived from the sides, never set independently.
IdentityReport make_report(std::string identity, std::vector<std::pair<std::string, std::string>> params,
                           const Rat& lhs, const Rat& rhs, std::string notes = "");

}  // namespace sylv

#endif
