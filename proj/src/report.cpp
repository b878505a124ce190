#include "satokdv/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace satokdv {

void VerificationReport::fail(const std::string& index, std::string lhs, std::string rhs)
{
    if (!passed)
        return;
    passed = false;
    failing_index = index;
    expected = std::move(lhs);
    actual = std::move(rhs);
}

void VerificationReport::skip(std::string reason)
{
    skipped = true;
    note = std::move(reason);
}

void VerificationReport::merge(const VerificationReport& other)
{
    if (!other.passed && passed) {
        passed = false;
        failing_index = other.suite.empty() ? other.failing_index : other.suite + ":" + other.failing_index;
        expected = other.expected;
        actual = other.actual;
    }
    skipped = skipped || other.skipped;
    checks += other.checks;
    depth = std::min(depth, other.depth);
    if (!other.note.empty() && note.find(other.note) == std::string::npos)
        note = note.empty() ? other.note : note + "; " + other.note;
}

std::string VerificationReport::summary() const
{
    std::string status = skipped ? "SKIP" : passed ? "PASS" : "FAIL";
    std::string line = fmt::format("{} {} depth={} checks={}", status, suite, depth, checks);
    if (!passed)
        line += fmt::format(" first-failure={} lhs={} rhs={}", failing_index, expected, actual);
    if (!note.empty())
        line += fmt::format(" ({})", note);
    return line;
}

} // namespace satokdv
