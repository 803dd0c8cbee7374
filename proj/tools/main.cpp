#include "signedpat/cli.hpp"

int main(int argc, char** argv)
{
    return signedpat::cli::main(argc, argv);
}
