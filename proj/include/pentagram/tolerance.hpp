#pragma once

namespace pentagram {

// Single global relative tolerance used by all projective comparisons.
// Default 1e-9, overridable (e.g. by the CLI --tol flag).
double tolerance();
void set_tolerance(double tol);

// RAII override, mainly for tests.
class ToleranceGuard {
public:
    explicit ToleranceGuard(double tol) : saved_(tolerance()) { set_tolerance(tol); }
    ~ToleranceGuard() { set_tolerance(saved_); }
    ToleranceGuard(const ToleranceGuard&) = delete;
    ToleranceGuard& operator=(const ToleranceGuard&) = delete;

private:
    double saved_;
};

} // namespace pentagram
