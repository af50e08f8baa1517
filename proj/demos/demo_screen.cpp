// Runs the screening pipeline on a few small cases and prints the tables.
#include <stscreen/report.hpp>

#include <iostream>

using namespace stscreen;

int main() {
    for (auto [s, n, p] : std::vector<std::tuple<char, int, int>>{{'B', 3, 7}, {'C', 3, 3}, {'A', 5, 2}, {'A', 4, 3}}) {
        ScreeningReport r = screen(PrimeContext(root_system(s, n), p));
        std::cout << emit_table(r, ReportFormat::Text) << "\n";
    }
    return 0;
}
