#include "sigscope/cli.hpp"

int main(int argc, char** argv) {
    return sigscope::cli_main(argc, argv);
}
