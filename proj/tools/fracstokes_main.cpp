// fracstokes command-line driver.  Subcommands are wired up as the library
// grows; until then this prints usage and exits with the usage error code.
#include <iostream>
#include <string>

namespace {

int usage(std::ostream& os) {
    os << "usage: fracstokes <subcommand> [--config file] [key=value ...]\n"
          "subcommands: ml fracint fracdiff solve-ode solve-stokes\n"
          "             verify-embeddings verify-energy shift-scaling convergence selftest\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage(std::cerr);
    std::string cmd = argv[1];
    std::cerr << "fracstokes: subcommand '" << cmd << "' not wired up yet\n";
    return 2;
}
