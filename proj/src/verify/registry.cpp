#include "periods/verify/registry.hpp"

#include "checks.hpp"
#include "periods/numkernel/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace periods::verify {

BigFloat CheckSpec::tolerance(int prec) const
{
    const int p = effective_prec(prec);
    return BigFloat::pow10(tolerance_exp - p, bits_for_digits(p));
}

int CheckSpec::effective_prec(int prec) const { return max_prec > 0 ? std::min(prec, max_prec) : prec; }

const std::vector<CheckSpec>& registry()
{
    static const std::vector<CheckSpec> checks = [] {
        std::vector<CheckSpec> v;
        detail::add_classical_checks(v);
        detail::add_elliptic_checks(v);
        detail::add_matrix_checks(v);
        std::sort(v.begin(), v.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.name < b.name; });
        return v;
    }();
    return checks;
}

const CheckSpec& find_check(const std::string& name)
{
    const auto& r = registry();
    auto it = std::lower_bound(r.begin(), r.end(), name, [](const CheckSpec& c, const std::string& n) { return c.name < n; });
    if (it == r.end() || it->name != name) throw UnknownCheckError("unknown check: " + name);
    return *it;
}

bool glob_match(const std::string& pattern, const std::string& name)
{
    // iterative matcher with single-star backtracking
    std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = n;
        } else if (star != std::string::npos) {
            p = star + 1;
            n = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

namespace {

CheckResult execute(const CheckSpec& spec, int prec)
{
    if (prec < kMinPrec || prec > kMaxPrec) throw DomainError("prec must lie in [10, 100]");
    CheckResult r;
    r.name = spec.name;
    r.prec = spec.effective_prec(prec);
    r.tolerance = spec.tolerance(prec);
    const auto start = std::chrono::steady_clock::now();
    try {
        r.defect = spec.body(r.prec, r.detail);
        r.status = r.defect.is_finite() && r.defect <= r.tolerance ? Status::pass : Status::fail;
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.defect = BigFloat(bits_for_digits(r.prec)); // NaN
        r.detail = e.what();
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

CheckResult run_check(const std::string& name, std::optional<int> prec)
{
    const CheckSpec& spec = find_check(name);
    return execute(spec, prec.value_or(spec.prec_default));
}

int worker_count()
{
    if (const char* env = std::getenv("PERIODS_LAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<CheckResult> run_all(int prec, const std::string& filter)
{
    if (prec < kMinPrec || prec > kMaxPrec) throw DomainError("prec must lie in [10, 100]");
    std::vector<const CheckSpec*> selected;
    for (const auto& c : registry())
        if (filter.empty() || glob_match(filter, c.name)) selected.push_back(&c);

    std::vector<CheckResult> results(selected.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) results[i] = execute(*selected[i], prec);
        mpfr_free_cache();
    };
    const int n = std::min<int>(worker_count(), static_cast<int>(selected.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return results; // registry order is name order
}

} // namespace periods::verify
