#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pglab
{

enum class Errc {
    not_simple,
    disconnected,
    euler_violation,
    bad_outer_edge,
    not_a_cycle,
    not_independent,
    overlap,
    partial_assignment,
    uncolored,
    invalid_pin,
    bad_cycle_length,
    too_large,
    c0_not_outer,
    unclassifiable_situation,
    not_constructive_lemma,
    hypothesis_violated,
    bad_header,
    truncated_record,
    invalid_rotation,
    syntax_error,
    io_error,
};

inline auto errc_name(Errc code) -> std::string_view
{
    switch (code) {
    case Errc::not_simple: return "NotSimple";
    case Errc::disconnected: return "Disconnected";
    case Errc::euler_violation: return "EulerViolation";
    case Errc::bad_outer_edge: return "BadOuterEdge";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::not_independent: return "NotIndependent";
    case Errc::overlap: return "Overlap";
    case Errc::partial_assignment: return "PartialAssignment";
    case Errc::uncolored: return "Uncolored";
    case Errc::invalid_pin: return "InvalidPin";
    case Errc::bad_cycle_length: return "BadCycleLength";
    case Errc::too_large: return "TooLarge";
    case Errc::c0_not_outer: return "C0NotOuter";
    case Errc::unclassifiable_situation: return "UnclassifiableSituation";
    case Errc::not_constructive_lemma: return "NotConstructiveLemma";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::bad_header: return "BadHeader";
    case Errc::truncated_record: return "TruncatedRecord";
    case Errc::invalid_rotation: return "InvalidRotation";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::io_error: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes so that
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what)
        , code_(code)
    {
    }

    auto code() const noexcept -> Errc { return code_; }

private:
    Errc code_;
};

} // namespace pglab
