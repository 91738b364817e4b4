#include "cli_app.hpp"

int main(int argc, char** argv) {
    return henonseq::cli::run(std::vector<std::string>(argv, argv + argc));
}
