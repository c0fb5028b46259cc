#include <flocks/report.hh>

#include <algorithm>
#include <sstream>

namespace flocks {

bool SuiteReport::pass() const
{
    return std::all_of(assertions_.begin(), assertions_.end(), [](const Assertion & a) { return a.pass; });
}

bool SuiteReport::check(std::string description, const nlohmann::json & expected, const nlohmann::json & actual)
{
    const bool ok = expected == actual;
    assertions_.push_back({std::move(description), expected, actual, ok});
    return ok;
}

bool SuiteReport::require(std::string description, bool ok, const nlohmann::json & detail)
{
    assertions_.push_back({std::move(description), true, detail.is_null() ? nlohmann::json(ok) : detail, ok});
    return ok;
}

void SuiteReport::merge(const SuiteReport & other)
{
    for (const auto & a : other.assertions_) {
        auto copy = a;
        copy.description = other.name_ + ": " + a.description;
        assertions_.push_back(std::move(copy));
    }
    seconds += other.seconds;
}

nlohmann::json SuiteReport::to_json(bool with_timing) const
{
    nlohmann::json j;
    j["suite"] = name_;
    j["pass"] = pass();
    auto & list = j["assertions"] = nlohmann::json::array();
    for (const auto & a : assertions_)
        list.push_back({{"description", a.description}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
    if (with_timing)
        j["seconds"] = seconds;
    return j;
}

std::string SuiteReport::to_text() const
{
    std::ostringstream os;
    os << name_ << ": " << (pass() ? "PASS" : "FAIL") << " (" << assertions_.size() << " assertions)\n";
    for (const auto & a : assertions_) {
        os << "  [" << (a.pass ? "ok" : "FAILED") << "] " << a.description;
        if (! a.pass)
            os << " (expected " << a.expected.dump() << ", got " << a.actual.dump() << ")";
        os << '\n';
    }
    return os.str();
}

} // namespace flocks
