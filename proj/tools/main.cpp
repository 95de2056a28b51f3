#include "itea/cli.hpp"

int main(int argc, char** argv) {
    return itea::run_cli(argc, argv);
}
