// Runs the window axiom suite for one ideal over a sliding family of small
// windows and prints a one-line verdict per window.

#include <iostream>

#include "trop/catalog.hpp"
#include "trop/verify.hpp"

int main() {
    using namespace trop;

    TropicalIdeal I = m_s_ideal(2, {0, 1, 2, 3, 4, 5});
    for (long long a = -10; a <= 4; a += 2) {
        Window W = Window::box1(a, a + 9);
        WindowSuiteReport rep = verify_window_suite(I, W);
        std::cout << "[" << a << "," << a + 9 << "] ";
        for (const auto& c : rep.checks)
            std::cout << c.name << "=" << (!c.applicable ? "n/a" : c.passed ? "ok" : "FAIL")
                      << " ";
        std::cout << "\n";
    }
    return 0;
}
