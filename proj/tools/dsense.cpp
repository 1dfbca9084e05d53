#include "distilled/cli.hpp"

int main(int argc, char** argv)
{
    return distilled::run_cli(argc, argv);
}
