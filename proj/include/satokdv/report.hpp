#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace satokdv {

/// Outcome of one verification suite.
///
/// `depth` is the depth (order, bi-degree, weight, ... depending on the suite)
/// that was actually checked; it never exceeds the reliability bound of the
/// data the verifier was given.
struct VerificationReport {
    VerificationReport() = default;
    VerificationReport(std::string suite_name, int checked_depth) : suite(std::move(suite_name)), depth(checked_depth) {}

    std::string suite;
    int depth = 0;
    bool passed = true;
    bool skipped = false;
    std::size_t checks = 0;
    std::string failing_index;
    std::string expected;
    std::string actual;
    std::string note;

    /// Records one comparison; only the first failure is kept.
    template <class T>
    bool check(const std::string& index, const T& lhs, const T& rhs)
    {
        ++checks;
        if (lhs == rhs)
            return true;
        fail(index, lhs.str(), rhs.str());
        return false;
    }

    void fail(const std::string& index, std::string lhs, std::string rhs);
    void skip(std::string reason);
    /// Folds another report in: conjunction of outcomes, sum of checks, min depth.
    void merge(const VerificationReport& other);

    bool ok() const { return passed && !skipped; }

    /// One-line human summary.
    std::string summary() const;
};

} // namespace satokdv
