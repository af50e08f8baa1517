#include <stscreen/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stscreen::cli::parse_and_dispatch(std::move(args), std::cout, std::cerr);
}
