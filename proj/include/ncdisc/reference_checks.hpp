#ifndef NCDISC_REFERENCE_CHECKS_HPP
#define NCDISC_REFERENCE_CHECKS_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ncdisc {

// Deterministic checks against independently known values: small trace
// matrices and discriminants worked out by hand, closed-form trace tables,
// automorphism group shapes, and structural identities. The CLI exposes the
// whole list as the verification suite; the acceptance harness reuses
// individual entries by id.
struct ReferenceCheck {
    std::string id;
    std::string description;
    std::function<bool(std::ostream&)> run;
};

const std::vector<ReferenceCheck>& reference_checks();

// Throws IndexError for an unknown id.
const ReferenceCheck& reference_check(const std::string& id);

} // namespace ncdisc

#endif
