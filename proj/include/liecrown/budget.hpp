// Search budgets and three-valued verdicts for budget-guarded searches.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace liecrown {

// One scalar knob multiplies all internal defaults (see cli --budget).
struct Budget {
    std::uint64_t scale = 1;

    std::uint64_t subspaces() const { return scale * (std::uint64_t(1) << 23); }
    std::uint64_t vectors() const { return scale * (std::uint64_t(1) << 16); }
    std::uint64_t cocycles() const { return scale * (std::uint64_t(1) << 24); }
    std::uint64_t series() const { return scale * 10000; }
};

// Thrown when an enumeration would exceed its budget; carries the estimate.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string what, std::uint64_t estimate, std::uint64_t limit)
        : std::runtime_error(std::move(what)), estimate(estimate), limit(limit) {}
    std::uint64_t estimate;
    std::uint64_t limit;
};

enum class Truth : std::uint8_t { No = 0, Yes = 1, Unknown = 2 };
enum class SearchMode : std::uint8_t { Exhaustive, Witness, BudgetLimited };

// Three-valued answer. Invariants: No only in exhaustive mode; Yes always has
// a witness (held by the caller-specific payload, see VerdictWith<T>).
struct Verdict {
    Truth value = Truth::Unknown;
    SearchMode mode = SearchMode::BudgetLimited;
    std::string note;  // optional human-readable justification

    static Verdict yes_exhaustive(std::string note = {}) {
        return {Truth::Yes, SearchMode::Exhaustive, std::move(note)};
    }
    static Verdict yes_witness(std::string note = {}) {
        return {Truth::Yes, SearchMode::Witness, std::move(note)};
    }
    static Verdict no_exhaustive(std::string note = {}) {
        return {Truth::No, SearchMode::Exhaustive, std::move(note)};
    }
    static Verdict unknown(std::string note = {}) {
        return {Truth::Unknown, SearchMode::BudgetLimited, std::move(note)};
    }

    bool yes() const { return value == Truth::Yes; }
    bool no() const { return value == Truth::No; }
    bool unknown_v() const { return value == Truth::Unknown; }
    bool exhaustive() const { return mode == SearchMode::Exhaustive; }

    bool valid() const { return !(value == Truth::No && mode != SearchMode::Exhaustive); }

    bool operator==(const Verdict&) const = default;
};

template <class W>
struct VerdictWith {
    Verdict verdict;
    std::optional<W> witness;  // present whenever verdict is Yes

    bool yes() const { return verdict.yes(); }
    bool no() const { return verdict.no(); }
    bool valid() const {
        return verdict.valid() && (!verdict.yes() || witness.has_value());
    }
};

inline const char* to_string(Truth t) {
    switch (t) {
        case Truth::No: return "no";
        case Truth::Yes: return "yes";
        default: return "unknown";
    }
}

inline const char* to_string(SearchMode m) {
    switch (m) {
        case SearchMode::Exhaustive: return "exhaustive";
        case SearchMode::Witness: return "witness";
        default: return "budget";
    }
}

}  // namespace liecrown
